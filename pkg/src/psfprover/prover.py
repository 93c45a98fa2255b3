"""Backward proof search in G3c/PSF plus the geometric rules refl, tran, mono.

Search works on set-based sequents.  Each expansion step saturates the
antecedent under the geometric rules, tries to close the branch, and then
applies one logical rule in the fixed order

    LAnd, ROr, LOr, RAnd, RAllImp, LAllImp.

A quantifier instance ``(U, z)`` of LAllImp is used at most once per branch,
and is skipped when the branch already records ``A{z}`` on the right or
``B{z}`` on the left.  A fresh label ``z`` is *blocked* when its labelled
formulas (with universals inherited along R) are included, side by side, in
those of an earlier unblocked fresh label; blocked labels are not expanded
by RAllImp, and countermodel extraction maps them onto their blocker.
"""
from __future__ import annotations

import dataclasses
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Union

from . import psf
from .derivation import Derivation
from .kripke import KripkeModel, check_int_model, validates
from .psf import And, Bottom, Or, PredAtom, RelAtom, Sequent, ShieldedAll

log = logging.getLogger(__name__)


class RuleName(str, Enum):
    Ax = "Ax"
    LBot = "LBot"
    LAnd = "LAnd"
    RAnd = "RAnd"
    LOr = "LOr"
    ROr = "ROr"
    LAllImp = "LAllImp"
    RAllImp = "RAllImp"
    Refl = "Refl"
    Tran = "Tran"
    Mono = "Mono"

    def __str__(self) -> str:
        return self.value


GEOMETRIC = (RuleName.Refl, RuleName.Tran, RuleName.Mono)


@dataclass(frozen=True)
class SearchConfig:
    enable_refl: bool = True
    enable_tran: bool = True
    enable_mono: bool = True
    depth_bound: Optional[int] = None
    trace: bool = False

    def __post_init__(self):
        if self.depth_bound is not None and self.depth_bound < 1:
            raise ValueError("depth_bound must be a positive integer")

    @property
    def full_geometry(self) -> bool:
        return self.enable_refl and self.enable_tran and self.enable_mono


@dataclass(frozen=True)
class Proof:
    derivation: Derivation


@dataclass(frozen=True)
class Refuted:
    model: KripkeModel
    assignment: dict
    # False only when geometric rules are disabled and the read-off model
    # does not actually refute the sequent.
    verified: bool = True


@dataclass(frozen=True)
class DepthExceeded:
    depth_bound: int


SearchResult = Union[Proof, Refuted, DepthExceeded]


class CountermodelError(RuntimeError):
    """The model read off an open branch validates the root sequent."""


# ------------------------------------------------------------ branch state


class Branch:
    """Mutable state of one search branch.

    ``ant`` and ``suc`` are insertion-ordered sets (dicts with None values),
    which keeps the search deterministic.
    """

    def __init__(self):
        self.ant: dict = {}
        self.suc: dict = {}
        self.labels: dict[str, None] = {}
        self.fresh: dict[str, str] = {}          # fresh label -> parent label
        self.succ: dict[str, dict[str, None]] = {}
        self.pred: dict[str, dict[str, None]] = {}
        self.atoms_at: dict[str, dict[str, None]] = {}
        self.universals: dict[ShieldedAll, None] = {}
        self.hist_t: dict[str, set] = {}
        self.hist_f: dict[str, set] = {}
        self.ever_ant: set = set()
        self.ever_suc: set = set()
        self.done: set = set()
        self.pending: list = []
        self.depth = 0

    def copy(self) -> "Branch":
        b = Branch.__new__(Branch)
        b.ant = dict(self.ant)
        b.suc = dict(self.suc)
        b.labels = dict(self.labels)
        b.fresh = dict(self.fresh)
        b.succ = {k: dict(v) for k, v in self.succ.items()}
        b.pred = {k: dict(v) for k, v in self.pred.items()}
        b.atoms_at = {k: dict(v) for k, v in self.atoms_at.items()}
        b.universals = dict(self.universals)
        b.hist_t = {k: set(v) for k, v in self.hist_t.items()}
        b.hist_f = {k: set(v) for k, v in self.hist_f.items()}
        b.ever_ant = set(self.ever_ant)
        b.ever_suc = set(self.ever_suc)
        b.done = set(self.done)
        b.pending = list(self.pending)
        b.depth = self.depth
        return b

    def sequent(self) -> Sequent:
        return Sequent(tuple(self.ant), tuple(self.suc))

    def _label(self, v: str) -> None:
        if v not in self.labels:
            self.labels[v] = None
            self.succ[v] = {}
            self.pred[v] = {}
            self.atoms_at[v] = {}
            self.hist_t[v] = set()
            self.hist_f[v] = set()
            self.pending.append(("label", v))

    def add_ant(self, f) -> None:
        if f in self.ant:
            return
        self.ant[f] = None
        self.ever_ant.add(f)
        fv = psf.free_vars(f)
        for v in sorted(fv):
            self._label(v)
        if isinstance(f, RelAtom):
            self.succ[f.x][f.y] = None
            self.pred[f.y][f.x] = None
            self.pending.append(f)
        elif isinstance(f, PredAtom):
            self.atoms_at[f.var][f.name] = None
            self.pending.append(f)
        if isinstance(f, ShieldedAll):
            self.universals[f] = None
        if len(fv) == 1:
            (v,) = fv
            self.hist_t[v].add(psf.shape_key(f, v))

    def add_suc(self, f) -> None:
        if f in self.suc:
            return
        self.suc[f] = None
        self.ever_suc.add(f)
        fv = psf.free_vars(f)
        for v in sorted(fv):
            self._label(v)
        if len(fv) == 1 and not isinstance(f, RelAtom):
            (v,) = fv
            self.hist_f[v].add(psf.shape_key(f, v))

    # ---------------------------------------------------------- blocking

    def label_sets(self, v: str) -> tuple[set, set]:
        t = set(self.hist_t[v])
        for u in self.universals:
            if v in self.succ.get(u.x, ()):
                t.add(psf.shape_key(u, u.x))
        return t, self.hist_f[v]

    def blocking(self) -> dict[str, str]:
        """Map each blocked fresh label to its (unblocked) blocker."""
        blocked: dict[str, str] = {}
        open_fresh: list[tuple[str, set, set]] = []
        for v in self.labels:
            if v not in self.fresh:
                continue
            t, f = self.label_sets(v)
            for w, wt, wf in open_fresh:
                if t <= wt and f <= wf:
                    blocked[v] = w
                    break
            else:
                open_fresh.append((v, t, f))
        return blocked


# ---------------------------------------------------------- saturation


def _saturation_steps(b: Branch, cfg: SearchConfig):
    """Drain ``b.pending``, yielding (rule, principals, new atom) before each addition."""
    while b.pending:
        item = b.pending.pop(0)
        if isinstance(item, tuple):
            v = item[1]
            if cfg.enable_refl and v not in b.succ[v]:
                yield RuleName.Refl, (), RelAtom(v, v)
        elif isinstance(item, RelAtom):
            a, c = item.x, item.y
            if cfg.enable_tran:
                for p in list(b.pred[a]):
                    if c not in b.succ[p]:
                        yield RuleName.Tran, (RelAtom(p, a), item), RelAtom(p, c)
                for d in list(b.succ[c]):
                    if d not in b.succ[a]:
                        yield RuleName.Tran, (item, RelAtom(c, d)), RelAtom(a, d)
            if cfg.enable_mono:
                for name in list(b.atoms_at[a]):
                    atom = PredAtom(name, c)
                    if atom not in b.ant:
                        yield RuleName.Mono, (item, PredAtom(name, a)), atom
        else:
            a = item.var
            if cfg.enable_mono:
                for c in list(b.succ[a]):
                    atom = PredAtom(item.name, c)
                    if atom not in b.ant:
                        yield RuleName.Mono, (RelAtom(a, c), item), atom


def geometric_saturate(s: Sequent, cfg: SearchConfig = SearchConfig()) -> Sequent:
    """Close the antecedent of ``s`` under the enabled geometric rules."""
    b = Branch()
    for f in s.antecedent:
        b.add_ant(f)
    for f in s.succedent:
        b.add_suc(f)
    added = []
    for _rule, _principal, atom in _saturation_steps(b, cfg):
        b.add_ant(atom)
        added.append(atom)
    return Sequent(s.antecedent + tuple(added), s.succedent)


# ---------------------------------------------------------------- search


@dataclass
class _Open:
    branch: Branch


@dataclass
class _Cut:
    pass


class _Search:
    def __init__(self, root: Sequent, cfg: SearchConfig):
        self.root = root
        self.cfg = cfg
        used = set()
        for f in root.antecedent + root.succedent:
            used |= psf.all_vars(f)
        self.names = psf.fresh_names("z", avoid=used)

    def run(self, b: Branch):
        steps: list[tuple] = []
        cfg = self.cfg
        while True:
            for rule, principal, atom in _saturation_steps(b, cfg):
                steps.append((rule, b.sequent(), principal, None))
                b.add_ant(atom)

            if psf.BOTTOM in b.ant:
                return self._finish(steps, Derivation(RuleName.LBot, b.sequent(), (psf.BOTTOM,)))
            for f in b.suc:
                if isinstance(f, (PredAtom, RelAtom)) and f in b.ant:
                    return self._finish(steps, Derivation(RuleName.Ax, b.sequent(), (f,)))

            move = self._choose(b)
            if move is None:
                return _Open(b)
            if cfg.depth_bound is not None and b.depth >= cfg.depth_bound:
                return _Cut()
            b.depth += 1
            rule, f, z = move
            if cfg.trace:
                log.debug("depth %d: %s on %s%s", b.depth, rule, f, f" @ {z}" if z else "")
            concl = b.sequent()

            if rule is RuleName.LAnd:
                del b.ant[f]
                b.add_ant(f.left)
                b.add_ant(f.right)
                steps.append((rule, concl, (f,), None))
            elif rule is RuleName.ROr:
                del b.suc[f]
                b.add_suc(f.left)
                b.add_suc(f.right)
                steps.append((rule, concl, (f,), None))
            elif rule is RuleName.RAllImp:
                hyp, con = f.instance(z)
                del b.suc[f]
                b.fresh[z] = f.x
                b.add_ant(RelAtom(f.x, z))
                b.add_ant(hyp)
                b.add_suc(con)
                steps.append((rule, concl, (f,), z))
            else:
                return self._branch(steps, b, rule, f, z, concl)

    def _choose(self, b: Branch):
        for f in b.ant:
            if isinstance(f, And):
                return RuleName.LAnd, f, None
        for f in b.suc:
            if isinstance(f, Or):
                return RuleName.ROr, f, None
        for f in b.ant:
            if isinstance(f, Or):
                return RuleName.LOr, f, None
        for f in b.suc:
            if isinstance(f, And):
                return RuleName.RAnd, f, None
        blocked = None
        for f in b.suc:
            if isinstance(f, ShieldedAll):
                if f.x in b.fresh:
                    if blocked is None:
                        blocked = b.blocking()
                    if f.x in blocked:
                        continue
                return RuleName.RAllImp, f, next(self.names)
        for u in b.universals:
            for z in b.succ[u.x]:
                if (u, z) in b.done:
                    continue
                b.done.add((u, z))
                hyp, con = u.instance(z)
                if hyp in b.ever_suc or con in b.ever_ant:
                    continue
                return RuleName.LAllImp, u, z
        return None

    def _branch(self, steps, b: Branch, rule, f, z, concl):
        left, right = b, b.copy()
        if rule is RuleName.LOr:
            del left.ant[f]
            del right.ant[f]
            left.add_ant(f.left)
            right.add_ant(f.right)
            principal = (f,)
        elif rule is RuleName.RAnd:
            del left.suc[f]
            del right.suc[f]
            left.add_suc(f.left)
            right.add_suc(f.right)
            principal = (f,)
        else:
            hyp, con = f.instance(z)
            left.add_suc(hyp)
            right.add_ant(con)
            principal = (f, RelAtom(f.x, z))
        results = []
        for side in (left, right):
            res = self.run(side)
            if not isinstance(res, Derivation):
                return res
            results.append(res)
        node = Derivation(rule, concl, principal, tuple(results), z)
        return self._finish(steps, node)

    @staticmethod
    def _finish(steps, node: Derivation) -> Derivation:
        for rule, concl, principal, var in reversed(steps):
            node = Derivation(rule, concl, principal, (node,), var)
        return node


def prove(s: Sequent, cfg: SearchConfig = SearchConfig()) -> SearchResult:
    """Decide ``s`` by backward search; return a derivation or a countermodel."""
    for f in s.antecedent + s.succedent:
        if not psf.is_psf(f):
            raise ValueError(f"not a PSF formula: {f}")
    b = Branch()
    for f in s.antecedent:
        b.add_ant(f)
    for f in s.succedent:
        b.add_suc(f)
    search = _Search(s, cfg)
    res = search.run(b)
    if isinstance(res, Derivation):
        # the search works on sets; the root keeps the input multiset
        return Proof(dataclasses.replace(res, conclusion=s))
    if isinstance(res, _Cut):
        return DepthExceeded(cfg.depth_bound)
    model, assignment = extract_countermodel(res.branch, s, check=cfg.full_geometry)
    verified = check_int_model(model) and not validates(model, s, assignment)
    return Refuted(model, assignment, verified)


# ------------------------------------------------------ countermodel read-off


def extract_countermodel(branch: Branch, root: Sequent,
                         check: bool = True) -> tuple[KripkeModel, dict]:
    """Read a Kripke model off a saturated open branch.

    Worlds are the unblocked labels; a blocked label is identified with its
    blocker.  With ``check`` set, a model that fails to refute ``root`` raises
    :class:`CountermodelError`.
    """
    blocked = branch.blocking()
    labels = [v for v in branch.labels if v not in blocked]
    if not labels:
        labels = ["x"]
    names = {v: f"w{i}" for i, v in enumerate(labels)}
    world = {v: names[blocked.get(v, v)] for v in branch.labels}
    worlds = tuple(names.values())

    edges = {(w, w) for w in worlds}
    for a, cs in branch.succ.items():
        if a in blocked:
            continue
        for c in cs:
            edges.add((world[a], world[c]))
    rel = _transitive_closure(edges)

    val: dict[str, set] = {}
    for f in list(root.antecedent) + list(root.succedent) + list(branch.ever_ant) + list(branch.ever_suc):
        for name in _pred_names(f):
            val.setdefault(name, set())
    for v in labels:
        for name in branch.atoms_at.get(v, ()):
            val[name].add(names[v])
    for name, ws in val.items():
        ws |= {w for (u, w) in rel if u in ws}

    model = KripkeModel(worlds, rel, val)
    assignment = {v: world[v] for v in sorted(root.free_vars())}
    if check and (not check_int_model(model) or validates(model, root, assignment)):
        raise CountermodelError(f"extracted model does not refute {root}")
    return model, assignment


def _transitive_closure(edges: set) -> frozenset:
    rel = set(edges)
    while True:
        extra = {(a, d) for (a, b) in rel for (c, d) in rel if b == c} - rel
        if not extra:
            return frozenset(rel)
        rel |= extra


def _pred_names(f) -> set[str]:
    if isinstance(f, PredAtom):
        return {f.name}
    if isinstance(f, (And, Or)):
        return _pred_names(f.left) | _pred_names(f.right)
    if isinstance(f, ShieldedAll):
        return _pred_names(f.hyp) | _pred_names(f.con)
    return set()
