"""Multisuccedent intuitionistic sequent calculus m-G3ip, used as an
independent oracle, and the prover-vs-oracle equivalence harness."""
from __future__ import annotations

import dataclasses
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Optional, Union

from . import prop
from .derivation import Derivation
from .prop import And, Atom, Imp, Or, PropSequent
from .prover import DepthExceeded, Proof, Refuted, SearchConfig, prove
from .psf import translate_sequent


class MG3ipRule(str, Enum):
    Ax = "Ax"
    LBot = "LBot"
    LAnd = "LAnd"
    RAnd = "RAnd"
    LOr = "LOr"
    ROr = "ROr"
    LImp = "LImp"
    RImp = "RImp"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Provable:
    derivation: Derivation


@dataclass(frozen=True)
class Unprovable:
    pass


OracleResult = Union[Provable, Unprovable]


def _seq(ant: dict, suc: dict) -> PropSequent:
    return PropSequent(tuple(ant), tuple(suc))


def _key(ant: dict, suc: dict) -> tuple:
    return frozenset(ant), frozenset(suc)


def _without(d: dict, f) -> dict:
    out = dict(d)
    del out[f]
    return out


def _with(d: dict, *fs) -> dict:
    out = dict(d)
    for f in fs:
        out.setdefault(f, None)
    return out


def _search(ant: dict, suc: dict, history: frozenset,
            used: frozenset = frozenset()) -> Optional[Derivation]:
    """``used`` holds the implications already unfolded by L-> since the last R->."""
    concl = _seq(ant, suc)
    if prop.BOTTOM in ant:
        return Derivation(MG3ipRule.LBot, concl, (prop.BOTTOM,))
    for f in suc:
        if isinstance(f, Atom) and f in ant:
            return Derivation(MG3ipRule.Ax, concl, (f,))

    # invertible rules, committed
    for f in ant:
        if isinstance(f, And):
            sub = _search(_with(_without(ant, f), f.left, f.right), suc, history, used)
            return sub and Derivation(MG3ipRule.LAnd, concl, (f,), (sub,))
    for f in suc:
        if isinstance(f, Or):
            sub = _search(ant, _with(_without(suc, f), f.left, f.right), history, used)
            return sub and Derivation(MG3ipRule.ROr, concl, (f,), (sub,))
    for f in ant:
        if isinstance(f, Or):
            rest = _without(ant, f)
            return _binary(MG3ipRule.LOr, concl, f, history,
                           (_with(rest, f.left), suc, used), (_with(rest, f.right), suc, used))
    for f in suc:
        if isinstance(f, And):
            rest = _without(suc, f)
            return _binary(MG3ipRule.RAnd, concl, f, history,
                           (ant, _with(rest, f.left), used), (ant, _with(rest, f.right), used))
    # L-> keeps its principal formula on the left premise; it is invertible,
    # and useless once A is already on the right, B on the left, or the
    # implication was unfolded earlier in this R->-free stretch.
    for f in ant:
        if (isinstance(f, Imp) and f not in used
                and f.left not in suc and f.right not in ant):
            return _binary(MG3ipRule.LImp, concl, f, history,
                           (ant, _with(suc, f.left), used | {f}),
                           (_with(_without(ant, f), f.right), suc, used))
    # R-> drops the rest of the succedent, so every choice is tried; a
    # sequent already met at this stage on the branch fails.
    key = _key(ant, suc)
    if key in history:
        return None
    history = history | {key}
    for f in suc:
        if isinstance(f, Imp):
            sub = _search(_with(ant, f.left), {f.right: None}, history)
            if sub is not None:
                return Derivation(MG3ipRule.RImp, concl, (f,), (sub,))
    return None


def _binary(rule, concl, f, history, left, right) -> Optional[Derivation]:
    a = _search(left[0], left[1], history, left[2])
    if a is None:
        return None
    b = _search(right[0], right[1], history, right[2])
    if b is None:
        return None
    return Derivation(rule, concl, (f,), (a, b))


def mg3ip_prove(s: PropSequent) -> OracleResult:
    d = _search(dict.fromkeys(s.antecedent), dict.fromkeys(s.succedent), frozenset())
    if d is None:
        return Unprovable()
    return Provable(dataclasses.replace(d, conclusion=s))


def validate_mg3ip(d: Derivation) -> list[str]:
    """Check every node against the m-G3ip rule schemata (modulo contraction).

    Returns a list of problems; empty means the derivation is correct.
    """
    problems = []
    for node in d.nodes():
        g, dl = set(node.conclusion.antecedent), set(node.conclusion.succedent)
        prem = [(set(p.conclusion.antecedent), set(p.conclusion.succedent)) for p in node.premises]
        if not _mg3ip_node_ok(node.rule, g, dl, prem):
            problems.append(f"{node.rule} does not match at {node.conclusion}")
    return problems


def _mg3ip_node_ok(rule, g: set, dl: set, prem: list) -> bool:
    rule = MG3ipRule(rule)
    if rule is MG3ipRule.Ax:
        return not prem and any(isinstance(f, Atom) and f in dl for f in g)
    if rule is MG3ipRule.LBot:
        return not prem and prop.BOTTOM in g
    if rule is MG3ipRule.LAnd:
        return len(prem) == 1 and any(
            isinstance(f, And) and prem[0] == ((g - {f}) | {f.left, f.right}, dl) for f in g)
    if rule is MG3ipRule.ROr:
        return len(prem) == 1 and any(
            isinstance(f, Or) and prem[0] == (g, (dl - {f}) | {f.left, f.right}) for f in dl)
    if rule is MG3ipRule.LOr:
        return len(prem) == 2 and any(
            isinstance(f, Or) and prem == [((g - {f}) | {f.left}, dl), ((g - {f}) | {f.right}, dl)]
            for f in g)
    if rule is MG3ipRule.RAnd:
        return len(prem) == 2 and any(
            isinstance(f, And) and prem == [(g, (dl - {f}) | {f.left}), (g, (dl - {f}) | {f.right})]
            for f in dl)
    if rule is MG3ipRule.LImp:
        return len(prem) == 2 and any(
            isinstance(f, Imp) and prem == [(g, dl | {f.left}), ((g - {f}) | {f.right}, dl)]
            for f in g)
    if rule is MG3ipRule.RImp:
        return len(prem) == 1 and any(
            isinstance(f, Imp) and prem[0] == (g | {f.left}, {f.right}) for f in dl)
    return False


# ------------------------------------------------------------ equivalence


@dataclass
class EquivalenceReport:
    total: int = 0
    agreements: int = 0
    provable: int = 0
    disagreements: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.disagreements

    def summary(self) -> str:
        return (f"{self.agreements}/{self.total} agree, {self.provable} provable, "
                f"{len(self.disagreements)} disagreements")


def compare_one(s: PropSequent, cfg=None, x: str = "x") -> dict:
    """Run both provers on ``s`` and collect their verdicts and artifacts."""
    cfg = cfg or SearchConfig()
    oracle = mg3ip_prove(s)
    psf_result = prove(translate_sequent(s, x), cfg)
    oracle_ok = isinstance(oracle, Provable)
    out = {
        "sequent": str(s),
        "mg3ip": "provable" if oracle_ok else "unprovable",
        "psf": ("provable" if isinstance(psf_result, Proof)
                else "depth-exceeded" if isinstance(psf_result, DepthExceeded) else "refuted"),
        "oracle_result": oracle,
        "psf_result": psf_result,
    }
    out["agree"] = (out["psf"] == "provable") == oracle_ok and out["psf"] != "depth-exceeded"
    return out


def artifacts(row: dict) -> dict:
    """JSON-ready view of one comparison, including derivation or countermodel."""
    out = {k: row[k] for k in ("sequent", "mg3ip", "psf", "agree")}
    o, r = row["oracle_result"], row["psf_result"]
    if isinstance(o, Provable):
        out["mg3ip_derivation"] = o.derivation.to_dict()
    if isinstance(r, Proof):
        out["psf_derivation"] = r.derivation.to_dict()
    elif isinstance(r, Refuted):
        out["countermodel"] = r.model.to_json(assignment=r.assignment)
    return out


def equivalence_check(corpus: Iterable[PropSequent], cfg=None) -> EquivalenceReport:
    report = EquivalenceReport()
    for s in corpus:
        row = compare_one(s, cfg)
        report.total += 1
        report.provable += row["mg3ip"] == "provable"
        if row["agree"]:
            report.agreements += 1
        else:
            report.disagreements.append(artifacts(row))
    return report
