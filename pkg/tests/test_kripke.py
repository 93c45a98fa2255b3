import itertools
import json

import pytest
from hypothesis import given, strategies as st

from psfprover import prop
from psfprover.kripke import (Counterexample, KripkeModel, NoCounterexample, UnboundVariable,
                              check_int_model, enumerate_models, forces_prop, forces_psf, holds,
                              semantic_decide, truth_set, validates)
from psfprover.psf import BOTTOM, PredAtom, RelAtom, Sequent, ShieldedAll, translate

from conftest import prop_formulas

P = prop.Atom("p")
LEM = prop.Or(P, prop.Not(P))
PEIRCE = prop.parse_prop_formula("((p -> q) -> p) -> p")

CHAIN = KripkeModel(("w0", "w1"), {("w0", "w0"), ("w1", "w1"), ("w0", "w1")}, {"p": {"w1"}})
SINGLE = KripkeModel(("w",), {("w", "w")}, {"p": {"w"}})
MODELS_2 = list(enumerate_models(2, ("p", "q")))


def brute_force_models(n_max, atoms):
    """Independent count: every relation and valuation, filtered by the frame conditions."""
    count = 0
    for n in range(1, n_max + 1):
        ws = range(n)
        pairs = [(u, v) for u in ws for v in ws]
        for bits in itertools.product((0, 1), repeat=len(pairs)):
            rel = {pr for pr, b in zip(pairs, bits) if b}
            if any((w, w) not in rel for w in ws):
                continue
            if any((u, w) not in rel for (u, v) in rel for (v2, w) in rel if v == v2):
                continue
            for vals in itertools.product(range(1 << n), repeat=len(atoms)):
                if all(not (mask >> u & 1) or (mask >> v & 1)
                       for mask in vals for (u, v) in rel):
                    count += 1
    return count


def test_forces_psf_examples():
    assert forces_psf(SINGLE, {"x": "w"}, PredAtom("p", "x"))
    assert not forces_psf(SINGLE, {"x": "w"}, BOTTOM)
    assert not forces_psf(CHAIN, {"x": "w0"}, translate(LEM, "x"))
    assert forces_psf(CHAIN, {"x": "w0", "y": "w1"}, RelAtom("x", "y"))
    assert not forces_psf(CHAIN, {"x": "w1", "y": "w0"}, RelAtom("x", "y"))


def test_bottom_never_forced():
    for m in MODELS_2:
        for w in m.worlds:
            assert not forces_psf(m, {"x": w}, BOTTOM)
            assert not forces_prop(m, w, prop.BOTTOM)


def test_forces_prop_examples():
    for m in MODELS_2:
        for w in m.worlds:
            assert forces_prop(m, w, prop.Imp(P, P))
    assert not forces_prop(CHAIN, "w0", LEM)
    assert forces_prop(CHAIN, "w1", LEM)
    with pytest.raises(ValueError):
        forces_prop(CHAIN, "w9", P)


def test_unbound_variable():
    with pytest.raises(UnboundVariable):
        forces_psf(SINGLE, {}, PredAtom("p", "x"))


def test_validates_examples():
    px = PredAtom("p", "x")
    for m in MODELS_2:
        for w in m.worlds:
            assert not validates(m, Sequent((), ()), {"x": w})
            assert validates(m, Sequent((px,), (px,)), {"x": w})
    assert not validates(CHAIN, Sequent((), (translate(LEM, "x"),)), {"x": "w0"})


def test_check_int_model_examples():
    assert check_int_model(KripkeModel(("w",), {("w", "w")}, {}))
    assert check_int_model(SINGLE)
    assert not check_int_model(KripkeModel(("w0", "w1"),
                                           {("w0", "w0"), ("w1", "w1"), ("w0", "w1")},
                                           {"p": {"w0"}}))
    chain3 = {("w0", "w0"), ("w1", "w1"), ("w2", "w2"), ("w0", "w1"), ("w1", "w2")}
    assert not check_int_model(KripkeModel(("w0", "w1", "w2"), chain3, {}))
    assert check_int_model(KripkeModel(("w0", "w1", "w2"), chain3 | {("w0", "w2")}, {}))
    assert not check_int_model(KripkeModel(("w0", "w1"), {("w0", "w0")}, {}))


@pytest.mark.parametrize("n, atoms, expected", [(1, ("p",), 2), (1, (), 1)])
def test_enumerate_small_counts(n, atoms, expected):
    assert len(list(enumerate_models(n, atoms))) == expected


@pytest.mark.parametrize("n, atoms", [(2, ("p",)), (2, ("p", "q")), (3, ("p",)), (3, ("p", "q"))])
def test_enumerate_matches_brute_force(n, atoms):
    models = list(enumerate_models(n, atoms))
    assert len(models) == brute_force_models(n, atoms)
    assert len(set(models)) == len(models)
    assert all(check_int_model(m) for m in models)


def test_semantic_decide_examples():
    assert semantic_decide(prop.parse_sequent("=> p -> p"), 3) == NoCounterexample(3)
    res = semantic_decide(prop.PropSequent((), (LEM,)), 2)
    assert isinstance(res, Counterexample) and not forces_prop(res.model, res.world, LEM)
    assert isinstance(semantic_decide(prop.PropSequent((), (LEM,)), 1), NoCounterexample)
    res = semantic_decide(prop.PropSequent((), (PEIRCE,)), 3)
    assert isinstance(res, Counterexample)
    assert not forces_prop(res.model, res.world, PEIRCE)


@given(prop_formulas(atoms=("p", "q")))
def test_heredity(f):
    for m in MODELS_2:
        for u, v in m.rel:
            if forces_prop(m, u, f):
                assert forces_prop(m, v, f)


@given(prop_formulas(atoms=("p", "q")))
def test_truth_set_matches_direct_forcing(f):
    for m in MODELS_2:
        assert truth_set(m, f, {}) == {w for w in m.worlds if forces_prop(m, w, f)}


@given(prop_formulas(atoms=("p", "q")), st.sampled_from(["x", "u"]))
def test_translation_adequacy(f, var):
    t = translate(f, var)
    for m in MODELS_2:
        for w in m.worlds:
            assert forces_prop(m, w, f) == forces_psf(m, {var: w}, t)


def test_json_round_trip():
    for m in MODELS_2[::7]:
        data = json.loads(json.dumps(m.to_json()))
        assert KripkeModel.from_json(data) == m
    out = CHAIN.to_json(falsified="=> p(x)", assignment={"x": "w0"})
    assert list(out) == ["worlds", "rel", "val", "assignment", "falsified"]
    assert out["rel"] == [["w0", "w0"], ["w0", "w1"], ["w1", "w1"]]


def test_holds_modes():
    px = PredAtom("p", "x")
    assert not holds(CHAIN, px, "universal")
    assert holds(CHAIN, px, "existential")
    assert holds(CHAIN, translate(prop.Imp(P, P), "x"))
    assert not holds(CHAIN, BOTTOM, "existential")
    with pytest.raises(ValueError):
        holds(CHAIN, px, "sometimes")
