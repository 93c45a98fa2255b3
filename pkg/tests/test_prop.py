import pytest
from hypothesis import given

from psfprover.prop import (BOTTOM, And, Atom, Imp, Or, ParseError, PropSequent,
                            formulas_of_size, formulas_up_to, parse_prop_formula,
                            parse_sequent, size, to_text)

from conftest import prop_formulas

p, q, r = Atom("p"), Atom("q"), Atom("r")


@pytest.mark.parametrize("text, expected", [
    ("p -> p", Imp(p, p)),
    ("~p", Imp(p, BOTTOM)),
    ("p -> q -> r", Imp(p, Imp(q, r))),
    ("p & q | r", Or(And(p, q), r)),
    ("p | q & r", Or(p, And(q, r))),
    ("~p & q", And(Imp(p, BOTTOM), q)),
    ("~~p", Imp(Imp(p, BOTTOM), BOTTOM)),
    ("(p -> q) -> r", Imp(Imp(p, q), r)),
    ("p & q & r", And(And(p, q), r)),
    ("false", BOTTOM),
    ("p ∧ q → ¬r ∨ ⊥", Imp(And(p, q), Or(Imp(r, BOTTOM), BOTTOM))),
    ("foo_1 | Bar", Or(Atom("foo_1"), Atom("Bar"))),
])
def test_parse_formula(text, expected):
    assert parse_prop_formula(text) == expected


@pytest.mark.parametrize("text, position", [
    ("", 0),
    ("   ", 0),
    ("p &", 3),
    ("(p | q", 6),
    ("p q", 2),
    ("p -> $", 5),
    (")", 0),
])
def test_parse_errors_carry_position(text, position):
    with pytest.raises(ParseError) as err:
        parse_prop_formula(text)
    assert err.value.position == position


def test_parse_sequent_examples():
    assert parse_sequent("p, q => p & q") == PropSequent((p, q), (And(p, q),))
    assert parse_sequent("=> p | ~p") == PropSequent((), (Or(p, Imp(p, BOTTOM)),))
    s = parse_sequent("p, p => q")
    assert s.antecedent == (p, p)
    assert s != PropSequent((p,), (q,))
    assert parse_sequent("=>") == PropSequent((), ())
    assert parse_sequent("p =>") == PropSequent((p,), ())


def test_sequent_multiset_equality():
    assert PropSequent((p, q), ()) == PropSequent((q, p), ())
    assert hash(PropSequent((p, q), ())) == hash(PropSequent((q, p), ()))
    assert PropSequent((p, p), ()) != PropSequent((p,), ())


@pytest.mark.parametrize("text", ["p, q", "p => q => r", "p, => q", "=> p,"])
def test_parse_sequent_errors(text):
    with pytest.raises(ParseError):
        parse_sequent(text)


@given(prop_formulas())
def test_print_parse_round_trip(f):
    assert parse_prop_formula(to_text(f)) == f


def test_enumeration_counts():
    # 3 leaves; binary nodes over 3 connectives
    assert len(list(formulas_of_size(1))) == 3
    assert len(list(formulas_of_size(3))) == 27
    assert len(list(formulas_of_size(5))) == 3 * (3 * 27 + 27 * 3)
    fs = formulas_up_to(5)
    assert len(fs) == len(set(fs)) == 516
    assert all(size(f) in (1, 3, 5) for f in fs)
