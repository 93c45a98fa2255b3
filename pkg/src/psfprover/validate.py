"""Node-by-node checker for G3c/PSF* derivations.

Independent of the search: every node is matched against the rule schemata
from scratch, comparing sequents as sets (contraction is admissible, and the
search works on sets).
"""
from __future__ import annotations

from .derivation import Derivation
from .psf import And, Bottom, Or, PredAtom, RelAtom, ShieldedAll, free_vars, subst


def _sets(seq) -> tuple[frozenset, frozenset]:
    return frozenset(seq.antecedent), frozenset(seq.succedent)


def _fv(g, d) -> set[str]:
    out: set[str] = set()
    for f in g | d:
        out |= free_vars(f)
    return out


def check_node(node: Derivation) -> bool:
    g, d = _sets(node.conclusion)
    prem = [_sets(p.conclusion) for p in node.premises]
    rule = str(node.rule)
    n = len(prem)

    if rule == "Ax":
        return n == 0 and any(isinstance(f, (PredAtom, RelAtom)) and f in d for f in g)
    if rule == "LBot":
        return n == 0 and Bottom() in g
    if rule == "LAnd":
        return n == 1 and any(isinstance(f, And) and prem[0] == ((g - {f}) | {f.left, f.right}, d)
                              for f in g)
    if rule == "ROr":
        return n == 1 and any(isinstance(f, Or) and prem[0] == (g, (d - {f}) | {f.left, f.right})
                              for f in d)
    if rule == "LOr":
        return n == 2 and any(isinstance(f, Or) and prem == [((g - {f}) | {f.left}, d),
                                                             ((g - {f}) | {f.right}, d)]
                              for f in g)
    if rule == "RAnd":
        return n == 2 and any(isinstance(f, And) and prem == [(g, (d - {f}) | {f.left}),
                                                              (g, (d - {f}) | {f.right})]
                              for f in d)
    if rule == "RAllImp":
        if n != 1:
            return False
        new = _fv(*prem[0]) - _fv(g, d)
        if len(new) != 1:
            return False
        (z,) = new
        return any(
            isinstance(f, ShieldedAll)
            and prem[0] == (g | {RelAtom(f.x, z), subst(f.hyp, f.bound, z)},
                            (d - {f}) | {subst(f.con, f.bound, z)})
            for f in d)
    if rule == "LAllImp":
        if n != 2:
            return False
        for f in g:
            if not isinstance(f, ShieldedAll):
                continue
            for r in g:
                if isinstance(r, RelAtom) and r.x == f.x:
                    hyp, con = subst(f.hyp, f.bound, r.y), subst(f.con, f.bound, r.y)
                    if prem == [(g, d | {hyp}), (g | {con}, d)]:
                        return True
        return False
    if n != 1 or prem[0][1] != d:
        return False
    added = prem[0][0] - g
    if not prem[0][0] >= g or len(added) != 1:
        return False
    (a,) = added
    if rule == "Refl":
        return isinstance(a, RelAtom) and a.x == a.y
    if rule == "Tran":
        return isinstance(a, RelAtom) and any(
            isinstance(r, RelAtom) and r.x == a.x and RelAtom(r.y, a.y) in g for r in g)
    if rule == "Mono":
        return isinstance(a, PredAtom) and any(
            isinstance(r, RelAtom) and r.y == a.var and PredAtom(a.name, r.x) in g for r in g)
    return False


def validate_derivation(d: Derivation) -> list[str]:
    """Return one message per node that does not match its rule; [] if valid."""
    return [f"{node.rule} does not match at {node.conclusion}"
            for node in d.nodes() if not check_node(node)]
