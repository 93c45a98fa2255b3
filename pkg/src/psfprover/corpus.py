"""Sequent corpora and bulk runs of both provers against the semantic oracle."""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator, Optional

from . import prop
from .kripke import KripkeModel, check_int_model, enumerate_models, truth_set, validates
from .oracle import Provable, mg3ip_prove
from .prop import PropSequent
from .prover import DepthExceeded, Proof, Refuted, SearchConfig, prove
from .psf import translate_sequent


def exhaustive_corpus(atoms: tuple[str, ...] = ("p", "q"), max_size: int = 5) -> Iterator[PropSequent]:
    """One formula (or nothing) on each side, every formula of size <= ``max_size``."""
    side = [()] + [(f,) for f in prop.formulas_up_to(max_size, atoms)]
    for a in side:
        for b in side:
            yield PropSequent(a, b)


def read_corpus(path: str | Path) -> list[tuple[int, PropSequent]]:
    """Parse a corpus file: one sequent per line, ``#`` starts a comment."""
    out = []
    for lineno, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if line:
            out.append((lineno, prop.parse_sequent(line)))
    return out


class SemanticIndex:
    """Truth of formulas over every (model, world) pair up to a world bound.

    Each formula maps to an integer bitmask over the enumerated pairs, so a
    sequent has a counterexample iff ``mask(ant) & ~mask(suc)`` is non-zero.
    """

    def __init__(self, max_worlds: int, atoms: Iterable[str] = ("p", "q")):
        self.max_worlds = max_worlds
        self.models = list(enumerate_models(max_worlds, atoms))
        self.points: list[tuple[int, str]] = [
            (i, w) for i, m in enumerate(self.models) for w in m.worlds]
        self.all = (1 << len(self.points)) - 1
        self._memos = [dict() for _ in self.models]
        self._cache: dict = {}

    def mask(self, f: prop.PropFormula) -> int:
        hit = self._cache.get(f)
        if hit is None:
            hit = 0
            for bit, (i, w) in enumerate(self.points):
                if w in truth_set(self.models[i], f, self._memos[i]):
                    hit |= 1 << bit
            self._cache[f] = hit
        return hit

    def counterexample(self, s: PropSequent) -> Optional[tuple[KripkeModel, str]]:
        bad = self.all
        for f in s.antecedent:
            bad &= self.mask(f)
        for f in s.succedent:
            bad &= ~self.mask(f)
        if not bad:
            return None
        i, w = self.points[(bad & -bad).bit_length() - 1]
        return self.models[i], w


@dataclass
class CorpusReport:
    total: int = 0
    provable: int = 0
    refuted: int = 0
    depth_exceeded: int = 0
    disagreements: list = field(default_factory=list)       # prover vs m-G3ip
    soundness_violations: list = field(default_factory=list)  # proved, yet a model refutes
    bad_countermodels: list = field(default_factory=list)     # refuted, model does not refute
    oracle_inconsistencies: list = field(default_factory=list)  # m-G3ip proves, a model refutes
    unresolved: list = field(default_factory=list)  # m-G3ip fails, no model within the bound
    provable_instances: list = field(default_factory=list)
    seconds: float = 0.0

    def summary(self) -> str:
        return (f"{self.total} sequents: {self.provable} provable, {self.refuted} refuted, "
                f"{self.depth_exceeded} depth-exceeded; {len(self.disagreements)} disagreements, "
                f"{len(self.soundness_violations)} soundness violations, "
                f"{len(self.bad_countermodels)} bad countermodels, "
                f"{len(self.oracle_inconsistencies)} oracle/semantics mismatches, "
                f"{len(self.unresolved)} unrefuted within the world bound "
                f"[{self.seconds:.1f}s]")


def run_corpus(corpus: Iterable[PropSequent], cfg: SearchConfig = SearchConfig(),
               semantics: Optional[SemanticIndex] = None, x: str = "x",
               keep_provable: bool = False) -> CorpusReport:
    """Run the PSF prover and the m-G3ip oracle over ``corpus``.

    With ``semantics`` given, every proved instance is checked for a bounded
    counterexample, and oracle verdicts are compared with the bounded search.
    """
    report = CorpusReport()
    start = time.perf_counter()
    for s in corpus:
        report.total += 1
        result = prove(translate_sequent(s, x), cfg)
        oracle_ok = isinstance(mg3ip_prove(s), Provable)
        if isinstance(result, Proof):
            report.provable += 1
            if keep_provable:
                report.provable_instances.append(s)
        elif isinstance(result, Refuted):
            report.refuted += 1
            seq = translate_sequent(s, x)
            if not (result.verified and check_int_model(result.model)
                    and not validates(result.model, seq, result.assignment)):
                report.bad_countermodels.append(str(s))
        else:
            report.depth_exceeded += 1
        if isinstance(result, DepthExceeded) or isinstance(result, Proof) != oracle_ok:
            report.disagreements.append(str(s))
        if semantics is not None:
            cex = semantics.counterexample(s)
            if isinstance(result, Proof) and cex is not None:
                report.soundness_violations.append(str(s))
            if oracle_ok and cex is not None:
                report.oracle_inconsistencies.append(str(s))
            elif not oracle_ok and cex is None:
                report.unresolved.append(str(s))
    report.seconds = time.perf_counter() - start
    return report
