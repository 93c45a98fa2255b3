import pytest
from hypothesis import given, settings

from psfprover import prop
from psfprover.kripke import Counterexample, NoCounterexample, semantic_decide
from psfprover.oracle import (EquivalenceReport, MG3ipRule, Provable, Unprovable, compare_one,
                              equivalence_check, mg3ip_prove, validate_mg3ip)
from psfprover.prover import SearchConfig

from conftest import prop_sequents


def seq(text):
    return prop.parse_sequent(text)


@pytest.mark.parametrize("text, provable", [
    ("=> p -> p", True),
    ("=> p | ~p", False),
    ("p & q => q & p", True),
    ("=> ~~(p | ~p)", True),
    ("=> ((p -> q) -> p) -> p", False),
    ("=> (p -> q) | (q -> p)", False),
    ("=> ~p | ~~p", False),
    ("~~~p => ~p", True),
    ("=> p, ~p", False),
    ("p -> q | r => (p -> q) | (p -> r)", False),
    ("=>", False),
])
def test_mg3ip_examples(text, provable):
    res = mg3ip_prove(seq(text))
    assert isinstance(res, Provable) is provable
    if provable:
        assert res.derivation.conclusion == seq(text)
        assert validate_mg3ip(res.derivation) == []


def test_rimp_discards_context():
    d = mg3ip_prove(seq("=> q, p -> p")).derivation
    rimp = [n for n in d.nodes() if n.rule == MG3ipRule.RImp]
    assert rimp
    for n in rimp:
        (prem,) = n.premises
        assert set(prem.conclusion.succedent) == {n.principal[0].right}


def test_validator_rejects_bad_node():
    d = mg3ip_prove(seq("=> p -> p")).derivation
    bad = type(d)(MG3ipRule.LAnd, d.conclusion, d.principal, d.premises)
    assert validate_mg3ip(bad)


@settings(max_examples=200)
@given(prop_sequents(atoms=("p", "q")))
def test_oracle_matches_semantics(s):
    res = mg3ip_prove(s)
    if isinstance(res, Provable):
        assert validate_mg3ip(res.derivation) == []
        for f in res.derivation.nodes():
            if f.rule == MG3ipRule.RImp:
                assert len(set(f.premises[0].conclusion.succedent)) == 1
        assert isinstance(semantic_decide(s, 3), NoCounterexample)
    else:
        assert isinstance(semantic_decide(s, 3), Counterexample)


def test_oracle_provable_has_no_four_world_counterexample():
    for text in ["=> ~~(p | ~p)", "=> (p -> q -> r) -> (p -> q) -> p -> r", "~~~p => ~p"]:
        assert isinstance(semantic_decide(seq(text), 4), NoCounterexample)


def test_equivalence_examples():
    rep = equivalence_check([seq("=> p -> p")])
    assert (rep.total, rep.agreements, rep.provable) == (1, 1, 1) and rep.ok
    rep = equivalence_check([seq("=> p | ~p")])
    assert (rep.total, rep.agreements, rep.provable) == (1, 1, 0) and rep.ok
    assert "1/1 agree" in rep.summary()


def test_disagreement_reported_with_artifacts():
    cfg = SearchConfig(enable_mono=False, enable_tran=False)
    rep = equivalence_check([seq("p => ~~p")], cfg)
    assert not rep.ok
    (row,) = rep.disagreements
    assert row["mg3ip"] == "provable" and row["psf"] == "refuted"
    assert "mg3ip_derivation" in row and "countermodel" in row


def test_compare_one_fields():
    row = compare_one(seq("p & q => q & p"))
    assert row["agree"] and row["mg3ip"] == row["psf"] == "provable"
