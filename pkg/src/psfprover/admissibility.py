"""Executable checks of admissible rules: weakening, contraction, cut, and the
left/right monotonicity lemmas, run through the prover on generated samples."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Optional, Union

from . import prop, psf
from .prover import Proof, SearchConfig, prove
from .psf import PsfFormula, RelAtom, Sequent


@dataclass(frozen=True)
class Weakening:
    base: Sequent   # Gamma => Delta
    extra: Sequent  # Gamma' => Delta'

    def premises(self) -> list[Sequent]:
        return [self.base]

    def conclusion(self) -> Sequent:
        return _join(self.base, self.extra)


@dataclass(frozen=True)
class Contraction:
    base: Sequent
    extra: Sequent

    def premises(self) -> list[Sequent]:
        return [_join(_join(self.base, self.extra), self.extra)]

    def conclusion(self) -> Sequent:
        return _join(self.base, self.extra)


@dataclass(frozen=True)
class Cut:
    left: Sequent    # Gamma => Delta   (A is added on the right)
    right: Sequent   # Gamma' => Delta' (A is added on the left)
    formula: PsfFormula

    def premises(self) -> list[Sequent]:
        return [Sequent(self.left.antecedent, self.left.succedent + (self.formula,)),
                Sequent((self.formula,) + self.right.antecedent, self.right.succedent)]

    def conclusion(self) -> Sequent:
        return _join(self.left, self.right)


@dataclass(frozen=True)
class LeftMonotonicity:
    """R(x,y), A{x}, A{y}, Gamma => Delta  gives  R(x,y), A{x}, Gamma => Delta."""

    rel: RelAtom
    at_x: PsfFormula
    at_y: PsfFormula
    context: Sequent

    def premises(self) -> list[Sequent]:
        c = self.context
        return [Sequent((self.rel, self.at_x, self.at_y) + c.antecedent, c.succedent)]

    def conclusion(self) -> Sequent:
        c = self.context
        return Sequent((self.rel, self.at_x) + c.antecedent, c.succedent)


@dataclass(frozen=True)
class RightMonotonicity:
    """R(x,y), Gamma => Delta, A{x}, A{y}  gives  R(x,y), Gamma => Delta, A{y}."""

    rel: RelAtom
    at_x: PsfFormula
    at_y: PsfFormula
    context: Sequent

    def premises(self) -> list[Sequent]:
        c = self.context
        return [Sequent((self.rel,) + c.antecedent, c.succedent + (self.at_x, self.at_y))]

    def conclusion(self) -> Sequent:
        c = self.context
        return Sequent((self.rel,) + c.antecedent, c.succedent + (self.at_y,))


Instance = Union[Weakening, Contraction, Cut, LeftMonotonicity, RightMonotonicity]


def _join(a: Sequent, b: Sequent) -> Sequent:
    return Sequent(a.antecedent + b.antecedent, b.succedent + a.succedent)


@dataclass
class AdmissibilityReport:
    checked: dict = field(default_factory=dict)
    skipped: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def summary(self) -> str:
        parts = ", ".join(f"{k}: {v}" for k, v in sorted(self.checked.items()))
        return f"{parts}; {self.skipped} skipped; {len(self.violations)} violations"


def _check(samples: Iterable[Instance], cfg: SearchConfig) -> AdmissibilityReport:
    report = AdmissibilityReport()
    for inst in samples:
        if not all(isinstance(prove(p, cfg), Proof) for p in inst.premises()):
            report.skipped += 1
            continue
        kind = type(inst).__name__
        report.checked[kind] = report.checked.get(kind, 0) + 1
        if not isinstance(prove(inst.conclusion(), cfg), Proof):
            report.violations.append((kind, str(inst.conclusion())))
    return report


def check_structural_admissibility(samples: Iterable[Instance],
                                   cfg: SearchConfig = SearchConfig()) -> AdmissibilityReport:
    """Whenever the premises of a W, C or Cut instance are provable, so is its conclusion.

    Instances whose premises are not provable are counted as skipped.
    """
    return _check(samples, cfg)


def check_monotonicity_lemmas(samples: Iterable[Instance],
                              cfg: SearchConfig = SearchConfig()) -> AdmissibilityReport:
    return _check(samples, cfg)


# ------------------------------------------------------------- generators


def random_formula(rng: random.Random, atoms: tuple[str, ...], max_size: int,
                   compound: bool = False) -> prop.PropFormula:
    """A random formula with at most ``max_size`` nodes (odd sizes only)."""
    n = rng.choice([k for k in range(3 if compound else 1, max_size + 1, 2)])
    return _random_of_size(rng, atoms, n)


def _random_of_size(rng: random.Random, atoms: tuple[str, ...], n: int) -> prop.PropFormula:
    if n == 1:
        r = rng.random()
        return prop.BOTTOM if r < 0.15 else prop.Atom(rng.choice(atoms))
    k = rng.choice(range(1, n - 1, 2))
    ctor = rng.choice((prop.And, prop.Or, prop.Imp, prop.Imp))
    return ctor(_random_of_size(rng, atoms, k), _random_of_size(rng, atoms, n - 1 - k))


class _Translator:
    """Translates many formulas into one sequent with distinct bound names."""

    def __init__(self, avoid=("x", "y")):
        self.supply = psf.fresh_names("y", avoid=avoid)

    def __call__(self, f: prop.PropFormula, var: str) -> PsfFormula:
        return psf.translate(f, var, self.supply)


def _random_sequent(rng, atoms, max_size, tr: _Translator, variables=("x",),
                    max_left=2, max_right=2) -> Sequent:
    ant = tuple(tr(random_formula(rng, atoms, max_size), rng.choice(variables))
                for _ in range(rng.randint(0, max_left)))
    suc = tuple(tr(random_formula(rng, atoms, max_size), rng.choice(variables))
                for _ in range(rng.randint(0, max_right)))
    return Sequent(ant, suc)


def _provable(s: Sequent, cfg: SearchConfig) -> bool:
    return isinstance(prove(s, cfg), Proof)


def structural_samples(n: int = 200, seed: int = 20100, atoms=("p", "q", "r"),
                       max_size: int = 7, cfg: SearchConfig = SearchConfig()) -> list[Instance]:
    """``n`` provable base sequents, each yielding one W, one C and one Cut instance."""
    rng = random.Random(seed)
    out: list[Instance] = []
    bases = 0
    while bases < n:
        tr = _Translator()
        base = _random_sequent(rng, atoms, max_size, tr, max_left=2, max_right=2)
        if not base.succedent or not _provable(base, cfg):
            continue
        bases += 1
        out.append(Weakening(base, _random_sequent(rng, atoms, max_size, tr, max_left=2, max_right=2)))
        out.append(Contraction(base, _random_sequent(rng, atoms, max_size, tr, max_left=2, max_right=2)))
        # cut on the last succedent formula of the base
        cut_formula = base.succedent[-1]
        left = Sequent(base.antecedent, base.succedent[:-1])
        right = _right_cut_premise(rng, atoms, max_size, tr, cut_formula, cfg)
        out.append(Cut(left, right, cut_formula))
    return out


def _right_cut_premise(rng, atoms, max_size, tr, a: PsfFormula, cfg, tries: int = 40) -> Sequent:
    fallback: Optional[Sequent] = None
    for _ in range(tries):
        cand = _random_sequent(rng, atoms, max_size, tr, max_left=1, max_right=2)
        if not _provable(Sequent((a,) + cand.antecedent, cand.succedent), cfg):
            continue
        if not _provable(cand, cfg):
            return cand          # the cut formula is actually needed
        fallback = fallback or cand
    return fallback or Sequent((), (a,))


def monotonicity_samples(n: int = 100, seed: int = 20101, atoms=("p", "q"),
                         max_size: int = 5, cfg: SearchConfig = SearchConfig()) -> list[Instance]:
    """``n`` instances of each monotonicity lemma with compound A and provable premise."""
    rng = random.Random(seed)
    rel = RelAtom("x", "y")
    out: list[Instance] = []
    for cls in (LeftMonotonicity, RightMonotonicity):
        count = 0
        while count < n:
            tr = _Translator()
            a = random_formula(rng, atoms, max_size, compound=True)
            ctx = _random_sequent(rng, atoms, max_size, tr, variables=("x", "y"),
                                  max_left=2, max_right=1)
            inst = cls(rel, tr(a, "x"), tr(a, "y"), ctx)
            if all(_provable(p, cfg) for p in inst.premises()):
                out.append(inst)
                count += 1
    return out
