"""Finite Kripke models, forcing for propositional and PSF formulas, and a
bounded model enumerator used as a semantic oracle."""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Optional, Union

from . import prop, psf

Assignment = Mapping[str, str]


class UnboundVariable(KeyError):
    pass


@dataclass(frozen=True)
class KripkeModel:
    worlds: tuple[str, ...]
    rel: frozenset[tuple[str, str]]
    val: Mapping[str, frozenset[str]] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "worlds", tuple(self.worlds))
        object.__setattr__(self, "rel", frozenset(tuple(p) for p in self.rel))
        object.__setattr__(self, "val", {k: frozenset(v) for k, v in sorted(self.val.items())})
        succ = {u: tuple(v for v in self.worlds if (u, v) in self.rel) for u in self.worlds}
        object.__setattr__(self, "_succ", succ)

    def __hash__(self) -> int:
        return hash((self.worlds, self.rel, frozenset(self.val.items())))

    def successors(self, w: str) -> tuple[str, ...]:
        return self._succ[w]

    def true_at(self, atom: str, w: str) -> bool:
        return w in self.val.get(atom, ())

    def to_json(self, falsified: Optional[str] = None,
                assignment: Optional[Assignment] = None) -> dict:
        order = {w: i for i, w in enumerate(self.worlds)}
        out: dict = {
            "worlds": list(self.worlds),
            "rel": [list(p) for p in sorted(self.rel, key=lambda p: (order[p[0]], order[p[1]]))],
            "val": {k: sorted(v, key=order.__getitem__) for k, v in self.val.items()},
        }
        if assignment is not None:
            out["assignment"] = dict(sorted(assignment.items()))
        if falsified is not None:
            out["falsified"] = falsified
        return out

    @classmethod
    def from_json(cls, data: Union[str, dict]) -> "KripkeModel":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(tuple(data["worlds"]), frozenset(tuple(p) for p in data["rel"]),
                   {k: frozenset(v) for k, v in data.get("val", {}).items()})


def check_int_model(m: KripkeModel) -> bool:
    """Reflexive, transitive, and valuation monotone along ``rel``."""
    ws = set(m.worlds)
    if any(u not in ws or v not in ws for u, v in m.rel):
        return False
    if any((w, w) not in m.rel for w in m.worlds):
        return False
    for u, v in m.rel:
        for w in m.successors(v):
            if (u, w) not in m.rel:
                return False
    for worlds in m.val.values():
        if not worlds <= ws:
            return False
        for u, v in m.rel:
            if u in worlds and v not in worlds:
                return False
    return True


# ---------------------------------------------------------------- forcing


def forces_prop(m: KripkeModel, w: str, f: prop.PropFormula) -> bool:
    if w not in m._succ:
        raise ValueError(f"world {w!r} not in model")
    return _forces_prop(m, w, f)


def _forces_prop(m: KripkeModel, w: str, f: prop.PropFormula) -> bool:
    if isinstance(f, prop.Bottom):
        return False
    if isinstance(f, prop.Atom):
        return m.true_at(f.name, w)
    if isinstance(f, prop.And):
        return _forces_prop(m, w, f.left) and _forces_prop(m, w, f.right)
    if isinstance(f, prop.Or):
        return _forces_prop(m, w, f.left) or _forces_prop(m, w, f.right)
    return all(not _forces_prop(m, v, f.left) or _forces_prop(m, v, f.right)
               for v in m.successors(w))


def truth_set(m: KripkeModel, f: prop.PropFormula,
              memo: Optional[dict] = None) -> frozenset[str]:
    """Worlds forcing ``f``, computed bottom-up (``memo`` shares subformulas)."""
    if memo is None:
        memo = {}
    hit = memo.get(f)
    if hit is not None:
        return hit
    if isinstance(f, prop.Bottom):
        out = frozenset()
    elif isinstance(f, prop.Atom):
        out = m.val.get(f.name, frozenset())
    else:
        a, b = truth_set(m, f.left, memo), truth_set(m, f.right, memo)
        if isinstance(f, prop.And):
            out = a & b
        elif isinstance(f, prop.Or):
            out = a | b
        else:
            out = frozenset(w for w in m.worlds
                            if all(v not in a or v in b for v in m.successors(w)))
    memo[f] = out
    return out


def forces_psf(m: KripkeModel, a: Assignment, f: psf.PsfFormula) -> bool:
    """Forcing of a PSF formula under the variable assignment ``a``."""
    if isinstance(f, psf.Bottom):
        return False
    if isinstance(f, psf.PredAtom):
        return m.true_at(f.name, _lookup(a, f.var))
    if isinstance(f, psf.RelAtom):
        return (_lookup(a, f.x), _lookup(a, f.y)) in m.rel
    if isinstance(f, psf.And):
        return forces_psf(m, a, f.left) and forces_psf(m, a, f.right)
    if isinstance(f, psf.Or):
        return forces_psf(m, a, f.left) or forces_psf(m, a, f.right)
    if isinstance(f, psf.ShieldedAll):
        for v in m.successors(_lookup(a, f.x)):
            inner = {**a, f.bound: v}
            if forces_psf(m, inner, f.hyp) and not forces_psf(m, inner, f.con):
                return False
        return True
    raise TypeError(f"not a PSF formula: {f!r}")


def _lookup(a: Assignment, var: str) -> str:
    try:
        return a[var]
    except KeyError:
        raise UnboundVariable(var) from None


def holds(m: KripkeModel, f: psf.PsfFormula, mode: str = "universal") -> bool:
    """Model-level truth of an open PSF formula.

    ``mode="universal"`` requires every assignment of the free variables to
    force ``f``; ``mode="existential"`` requires some assignment to.
    """
    fv = sorted(psf.free_vars(f))
    results = (forces_psf(m, dict(zip(fv, ws)), f)
               for ws in itertools.product(m.worlds, repeat=len(fv)))
    if mode == "universal":
        return all(results)
    if mode == "existential":
        return any(results)
    raise ValueError(f"unknown mode {mode!r}")


def validates(m: KripkeModel, s: psf.Sequent, a: Assignment) -> bool:
    """False iff all of the antecedent and none of the succedent is forced."""
    if not all(forces_psf(m, a, f) for f in s.antecedent):
        return True
    return any(forces_psf(m, a, f) for f in s.succedent)


def validates_prop(m: KripkeModel, s: prop.PropSequent, w: str) -> bool:
    if not all(forces_prop(m, w, f) for f in s.antecedent):
        return True
    return any(forces_prop(m, w, f) for f in s.succedent)


# ------------------------------------------------------------- enumeration


def world_names(n: int) -> tuple[str, ...]:
    return tuple(f"w{i}" for i in range(n))


def preorders(n: int) -> Iterator[frozenset[tuple[str, str]]]:
    """Reflexive transitive relations on ``w0..w{n-1}``, off-diagonal bitset order."""
    ws = world_names(n)
    off = [(u, v) for u in ws for v in ws if u != v]
    diag = frozenset((w, w) for w in ws)
    for mask in range(1 << len(off)):
        rel = diag | {off[i] for i in range(len(off)) if mask >> i & 1}
        if all((u, w) in rel for (u, v) in rel for (v2, w) in rel if v2 == v):
            yield frozenset(rel)


def up_sets(worlds: tuple[str, ...], rel: frozenset) -> list[frozenset[str]]:
    out = []
    for mask in range(1 << len(worlds)):
        s = frozenset(w for i, w in enumerate(worlds) if mask >> i & 1)
        if all(v in s for (u, v) in rel if u in s):
            out.append(s)
    return out


def enumerate_models(max_worlds: int, atoms: Iterable[str]) -> Iterator[KripkeModel]:
    """Every Int model on ``w0..w{n-1}`` for ``n <= max_worlds``, each once."""
    atoms = sorted(set(atoms))
    for n in range(1, max_worlds + 1):
        ws = world_names(n)
        for rel in preorders(n):
            ups = up_sets(ws, rel)
            for choice in itertools.product(ups, repeat=len(atoms)):
                yield KripkeModel(ws, rel, dict(zip(atoms, choice)))


@dataclass(frozen=True)
class NoCounterexample:
    max_worlds: int


@dataclass(frozen=True)
class Counterexample:
    model: KripkeModel
    world: str


def semantic_decide(s: prop.PropSequent, max_worlds: int) -> Union[NoCounterexample, Counterexample]:
    """Search Int models up to ``max_worlds`` worlds for a world refuting ``s``."""
    for m in enumerate_models(max_worlds, s.atoms()):
        memo: dict = {}
        bad = frozenset(m.worlds)
        for f in s.antecedent:
            bad &= truth_set(m, f, memo)
        for f in s.succedent:
            bad -= truth_set(m, f, memo)
        for w in m.worlds:
            if w in bad:
                return Counterexample(m, w)
    return NoCounterexample(max_worlds)
