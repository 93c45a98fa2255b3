"""Propositional formulas and sequents: constructors, parser and printer.

Concrete syntax (ASCII, with Unicode aliases ``⊥ ∧ ∨ → ¬``)::

    formula := disj ("->" formula)?
    disj    := conj ("|" conj)*
    conj    := neg ("&" neg)*
    neg     := "~" neg | atom
    atom    := "false" | IDENT | "(" formula ")"
    sequent := formulalist? "=>" formulalist?

``~A`` is sugar for ``A -> false``.
"""
from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Union


@dataclass(frozen=True)
class Bottom:
    def __str__(self) -> str:
        return to_text(self)


@dataclass(frozen=True)
class Atom:
    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class And:
    left: "PropFormula"
    right: "PropFormula"

    def __str__(self) -> str:
        return to_text(self)


@dataclass(frozen=True)
class Or:
    left: "PropFormula"
    right: "PropFormula"

    def __str__(self) -> str:
        return to_text(self)


@dataclass(frozen=True)
class Imp:
    left: "PropFormula"
    right: "PropFormula"

    def __str__(self) -> str:
        return to_text(self)


PropFormula = Union[Bottom, Atom, And, Or, Imp]

BOTTOM = Bottom()


def Not(f: PropFormula) -> Imp:
    return Imp(f, BOTTOM)


def size(f: PropFormula) -> int:
    """Number of nodes in the formula tree."""
    if isinstance(f, (Bottom, Atom)):
        return 1
    return 1 + size(f.left) + size(f.right)


def atoms(f: PropFormula) -> set[str]:
    if isinstance(f, Atom):
        return {f.name}
    if isinstance(f, Bottom):
        return set()
    return atoms(f.left) | atoms(f.right)


@dataclass(frozen=True)
class PropSequent:
    """A pair of multisets of propositional formulas.

    Stored as tuples; equality ignores order but respects multiplicity.
    """

    antecedent: tuple[PropFormula, ...] = ()
    succedent: tuple[PropFormula, ...] = ()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PropSequent):
            return NotImplemented
        return (Counter(self.antecedent) == Counter(other.antecedent)
                and Counter(self.succedent) == Counter(other.succedent))

    def __hash__(self) -> int:
        return hash((frozenset(Counter(self.antecedent).items()),
                     frozenset(Counter(self.succedent).items())))

    def atoms(self) -> set[str]:
        out: set[str] = set()
        for f in self.antecedent + self.succedent:
            out |= atoms(f)
        return out

    def __str__(self) -> str:
        return sequent_to_text(self)


# ---------------------------------------------------------------- printing

_PREC = {Imp: 1, Or: 2, And: 3}


def to_text(f: PropFormula) -> str:
    """Precedence-correct text that parses back to ``f``."""
    if isinstance(f, Bottom):
        return "false"
    if isinstance(f, Atom):
        return f.name
    if isinstance(f, Imp) and isinstance(f.right, Bottom):
        return "~" + _wrap(f.left, 4)
    if isinstance(f, Imp):
        # right-associative: only the left operand needs parentheses at equal level
        return f"{_wrap(f.left, 2)} -> {_wrap(f.right, 1)}"
    op = " & " if isinstance(f, And) else " | "
    p = _PREC[type(f)]
    # left-associative
    return _wrap(f.left, p) + op + _wrap(f.right, p + 1)


def _prec(f: PropFormula) -> int:
    if isinstance(f, (Bottom, Atom)):
        return 5
    if isinstance(f, Imp) and isinstance(f.right, Bottom):
        return 4
    return _PREC[type(f)]


def _wrap(f: PropFormula, need: int) -> str:
    s = to_text(f)
    return s if _prec(f) >= need else f"({s})"


def sequent_to_text(s: PropSequent) -> str:
    left = ", ".join(to_text(f) for f in s.antecedent)
    right = ", ".join(to_text(f) for f in s.succedent)
    return " ".join(part for part in (left, "=>", right) if part)


# ----------------------------------------------------------------- parsing


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.message = message
        self.position = position


_TOKEN_RE = re.compile(
    r"\s*(?:(?P<arrow>->|→)|(?P<turnstile>=>|⇒)|(?P<ident>[A-Za-z][A-Za-z0-9_]*)"
    r"|(?P<sym>[&∧|∨~¬(),⊥]))"
)
_ALIASES = {"∧": "&", "∨": "|", "¬": "~", "⊥": "false", "→": "->", "⇒": "=>"}


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        value = m.group(kind)
        value = _ALIASES.get(value, value)
        start = m.start(kind)
        if kind == "ident" and value == "false":
            kind = "sym"
        tokens.append((kind if kind == "ident" else "sym", value, start))
        pos = m.end()
    tokens.append(("eof", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.i]

    def accept(self, value: str) -> bool:
        if self.tokens[self.i][1] == value and self.tokens[self.i][0] != "ident":
            self.i += 1
            return True
        return False

    def expect(self, value: str) -> None:
        if not self.accept(value):
            _, got, pos = self.peek()
            raise ParseError(f"expected {value!r}, got {got or 'end of input'!r}", pos)

    def formula(self) -> PropFormula:
        left = self.disj()
        if self.accept("->"):
            return Imp(left, self.formula())
        return left

    def disj(self) -> PropFormula:
        f = self.conj()
        while self.accept("|"):
            f = Or(f, self.conj())
        return f

    def conj(self) -> PropFormula:
        f = self.neg()
        while self.accept("&"):
            f = And(f, self.neg())
        return f

    def neg(self) -> PropFormula:
        if self.accept("~"):
            return Not(self.neg())
        return self.atom()

    def atom(self) -> PropFormula:
        kind, value, pos = self.peek()
        if kind == "ident":
            self.i += 1
            return Atom(value)
        if self.accept("false"):
            return BOTTOM
        if self.accept("("):
            f = self.formula()
            self.expect(")")
            return f
        raise ParseError(f"expected a formula, got {value or 'end of input'!r}", pos)

    def formula_list(self, stop: tuple[str, ...]) -> list[PropFormula]:
        kind, value, _ = self.peek()
        if kind == "eof" or (kind == "sym" and value in stop):
            return []
        out = [self.formula()]
        while self.accept(","):
            out.append(self.formula())
        return out

    def at_end(self) -> None:
        kind, value, pos = self.peek()
        if kind != "eof":
            raise ParseError(f"unexpected {value!r}", pos)


def parse_prop_formula(text: str) -> PropFormula:
    if not text.strip():
        raise ParseError("empty input", 0)
    p = _Parser(text)
    f = p.formula()
    p.at_end()
    return f


def parse_sequent(text: str) -> PropSequent:
    p = _Parser(text)
    ant = p.formula_list(stop=("=>",))
    kind, value, pos = p.peek()
    if value != "=>" or kind == "ident":
        raise ParseError("missing '=>'", pos)
    p.i += 1
    suc = p.formula_list(stop=())
    p.at_end()
    return PropSequent(tuple(ant), tuple(suc))


# ------------------------------------------------------------- enumeration


def formulas_of_size(n: int, atom_names: tuple[str, ...] = ("p", "q"),
                     with_bottom: bool = True) -> Iterator[PropFormula]:
    """All formulas with exactly ``n`` nodes, in a fixed order."""
    if n == 1:
        if with_bottom:
            yield BOTTOM
        for a in atom_names:
            yield Atom(a)
        return
    for k in range(1, n - 1):
        lefts = list(formulas_of_size(k, atom_names, with_bottom))
        rights = list(formulas_of_size(n - 1 - k, atom_names, with_bottom))
        for ctor in (And, Or, Imp):
            for a in lefts:
                for b in rights:
                    yield ctor(a, b)


def formulas_up_to(n: int, atom_names: tuple[str, ...] = ("p", "q"),
                   with_bottom: bool = True) -> list[PropFormula]:
    return [f for k in range(1, n + 1) for f in formulas_of_size(k, atom_names, with_bottom)]
