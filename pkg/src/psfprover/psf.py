"""First-order formulas of the partially-shielded fragment (PSF).

Constructors are liberal: any tree over ``Bottom, PredAtom, And, Or, RelAtom,
ShieldedAll`` can be built, and :func:`is_psf` decides whether it actually
lies in the fragment.  ``ShieldedAll(y, x, A, B)`` stands for
``forall y. (R(x,y) & A) -> B``.
"""
from __future__ import annotations

import itertools
import re
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Optional, Union

from . import prop

_IDENT = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


@dataclass(frozen=True)
class Bottom:
    def __str__(self) -> str:
        return "false"


@dataclass(frozen=True)
class PredAtom:
    name: str
    var: str

    def __str__(self) -> str:
        return f"{self.name}({self.var})"


@dataclass(frozen=True)
class RelAtom:
    x: str
    y: str

    def __str__(self) -> str:
        return f"R({self.x},{self.y})"


@dataclass(frozen=True)
class And:
    left: "PsfFormula"
    right: "PsfFormula"

    def __str__(self) -> str:
        return to_text(self)


@dataclass(frozen=True)
class Or:
    left: "PsfFormula"
    right: "PsfFormula"

    def __str__(self) -> str:
        return to_text(self)


@dataclass(frozen=True)
class ShieldedAll:
    bound: str
    x: str
    hyp: "PsfFormula"
    con: "PsfFormula"

    def __str__(self) -> str:
        return to_text(self)

    def instance(self, z: str) -> tuple["PsfFormula", "PsfFormula"]:
        """Hypothesis and conclusion of the body instantiated at ``z``."""
        return subst(self.hyp, self.bound, z), subst(self.con, self.bound, z)


PsfFormula = Union[Bottom, PredAtom, RelAtom, And, Or, ShieldedAll]
ATOMIC = (PredAtom, RelAtom)

BOTTOM = Bottom()


# ---------------------------------------------------------------- printing


def to_text(f: PsfFormula) -> str:
    if isinstance(f, (Bottom, PredAtom, RelAtom)):
        return str(f)
    if isinstance(f, ShieldedAll):
        hyp = to_text(f.hyp)
        if not isinstance(f.hyp, (Bottom, PredAtom, RelAtom)):
            hyp = f"({hyp})"
        return f"forall {f.bound}. (R({f.x},{f.bound}) & {hyp}) -> {to_text(f.con)}"
    op = " & " if isinstance(f, And) else " | "
    return _child(f.left, type(f)) + op + _child(f.right, type(f))


def _child(f: PsfFormula, parent: type) -> str:
    s = to_text(f)
    if isinstance(f, (Bottom, PredAtom, RelAtom)) or type(f) is parent:
        return s
    return f"({s})"


@dataclass(frozen=True)
class Sequent:
    """Gamma => Delta over PSF formulas, with multiset equality."""

    antecedent: tuple[PsfFormula, ...] = ()
    succedent: tuple[PsfFormula, ...] = ()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Sequent):
            return NotImplemented
        return (Counter(self.antecedent) == Counter(other.antecedent)
                and Counter(self.succedent) == Counter(other.succedent))

    def __hash__(self) -> int:
        return hash((frozenset(Counter(self.antecedent).items()),
                     frozenset(Counter(self.succedent).items())))

    def free_vars(self) -> set[str]:
        out: set[str] = set()
        for f in self.antecedent + self.succedent:
            out |= free_vars(f)
        return out

    def __str__(self) -> str:
        return sequent_to_text(self)


def sequent_to_text(s: Sequent) -> str:
    left = ", ".join(to_text(f) for f in s.antecedent)
    right = ", ".join(to_text(f) for f in s.succedent)
    return " ".join(part for part in (left, "=>", right) if part)


# -------------------------------------------------------------- variables


@lru_cache(maxsize=None)
def free_vars(f: PsfFormula) -> frozenset[str]:
    if isinstance(f, Bottom):
        return frozenset()
    if isinstance(f, PredAtom):
        return frozenset((f.var,))
    if isinstance(f, RelAtom):
        return frozenset((f.x, f.y))
    if isinstance(f, ShieldedAll):
        return ((free_vars(f.hyp) | free_vars(f.con)) - {f.bound}) | {f.x}
    return free_vars(f.left) | free_vars(f.right)


def all_vars(f: PsfFormula) -> set[str]:
    """Every variable name occurring in ``f``, bound or free."""
    if isinstance(f, Bottom):
        return set()
    if isinstance(f, PredAtom):
        return {f.var}
    if isinstance(f, RelAtom):
        return {f.x, f.y}
    if isinstance(f, ShieldedAll):
        return {f.bound, f.x} | all_vars(f.hyp) | all_vars(f.con)
    return all_vars(f.left) | all_vars(f.right)


@lru_cache(maxsize=None)
def subst(f: PsfFormula, old: str, new: str) -> PsfFormula:
    """Replace free occurrences of ``old`` by ``new``.

    ``new`` must not be bound anywhere in ``f`` (fresh names never are).
    """
    if isinstance(f, Bottom):
        return f
    if isinstance(f, PredAtom):
        return PredAtom(f.name, new) if f.var == old else f
    if isinstance(f, RelAtom):
        return RelAtom(new if f.x == old else f.x, new if f.y == old else f.y)
    if isinstance(f, ShieldedAll):
        x = new if f.x == old else f.x
        if f.bound == old:
            return ShieldedAll(f.bound, x, f.hyp, f.con)
        return ShieldedAll(f.bound, x, subst(f.hyp, old, new), subst(f.con, old, new))
    return type(f)(subst(f.left, old, new), subst(f.right, old, new))


@lru_cache(maxsize=None)
def shape_key(f: PsfFormula, label: Optional[str] = None) -> tuple:
    """Label-independent, alpha-invariant key for ``f``.

    Free occurrences of ``label`` become ``"*"`` and bound variables are
    numbered by binding depth, so two formulas get the same key iff they are
    alpha-equivalent after renaming ``label``.
    """
    return _key(f, {} if label is None else {label: "*"}, 0)


def _key(f: PsfFormula, env: dict[str, str], depth: int) -> tuple:
    if isinstance(f, Bottom):
        return ("F",)
    if isinstance(f, PredAtom):
        return ("P", f.name, env.get(f.var, f.var))
    if isinstance(f, RelAtom):
        return ("R", env.get(f.x, f.x), env.get(f.y, f.y))
    if isinstance(f, ShieldedAll):
        inner = dict(env)
        inner[f.bound] = f"#{depth}"
        return ("A", env.get(f.x, f.x), _key(f.hyp, inner, depth + 1),
                _key(f.con, inner, depth + 1))
    tag = "&" if isinstance(f, And) else "|"
    return (tag, _key(f.left, env, depth), _key(f.right, env, depth))


def alpha_equivalent(f: PsfFormula, g: PsfFormula) -> bool:
    return shape_key(f) == shape_key(g)


# ---------------------------------------------------------- fragment check


def is_psf(f: object) -> bool:
    """Membership in the partially-shielded fragment.

    Relation atoms are allowed only as whole formulas; below a connective
    every subformula must have at most one free variable, shared by both
    sides of a conjunction or disjunction, and the body of a shielded
    quantifier may only mention its bound variable.
    """
    if isinstance(f, RelAtom):
        return _valid_var(f.x) and _valid_var(f.y)
    return _shielded_vars(f) is not None


def _valid_var(v: object) -> bool:
    return isinstance(v, str) and bool(_IDENT.match(v))


def _shielded_vars(f: object) -> Optional[frozenset[str]]:
    """Free variables of a one-variable PSF formula, or None if not one."""
    if isinstance(f, Bottom):
        return frozenset()
    if isinstance(f, PredAtom):
        if not (_valid_var(f.var) and isinstance(f.name, str) and _IDENT.match(f.name)):
            return None
        return frozenset((f.var,))
    if isinstance(f, (And, Or)):
        left, right = _shielded_vars(f.left), _shielded_vars(f.right)
        if left is None or right is None or len(left | right) > 1:
            return None
        return left | right
    if isinstance(f, ShieldedAll):
        if not (_valid_var(f.bound) and _valid_var(f.x)) or f.bound == f.x:
            return None
        for body in (f.hyp, f.con):
            fv = _shielded_vars(body)
            if fv is None or not fv <= {f.bound}:
                return None
        return frozenset((f.x,))
    return None


# ------------------------------------------------------------- translation


def fresh_names(prefix: str, avoid: Iterable[str] = ()) -> Iterator[str]:
    avoid = set(avoid)
    for i in itertools.count():
        name = f"{prefix}{i}"
        if name not in avoid:
            yield name


def translate(f: prop.PropFormula, x: str = "x",
              supply: Optional[Iterator[str]] = None) -> PsfFormula:
    """The standard translation of a propositional formula at world variable ``x``.

    Implications become shielded universals whose bodies are translated at
    the bound variable.  Bound names come from ``supply`` (``y0, y1, ...``
    by default, skipping ``x``).
    """
    if supply is None:
        supply = fresh_names("y", avoid=(x,))
    return _translate(f, x, supply)


def _translate(f: prop.PropFormula, x: str, supply: Iterator[str]) -> PsfFormula:
    if isinstance(f, prop.Bottom):
        return BOTTOM
    if isinstance(f, prop.Atom):
        return PredAtom(f.name, x)
    if isinstance(f, prop.And):
        return And(_translate(f.left, x, supply), _translate(f.right, x, supply))
    if isinstance(f, prop.Or):
        return Or(_translate(f.left, x, supply), _translate(f.right, x, supply))
    y = next(supply)
    return ShieldedAll(y, x, _translate(f.left, y, supply), _translate(f.right, y, supply))


def translate_sequent(s: prop.PropSequent, x: str = "x") -> Sequent:
    supply = fresh_names("y", avoid=(x,))
    return Sequent(tuple(_translate(f, x, supply) for f in s.antecedent),
                   tuple(_translate(f, x, supply) for f in s.succedent))
