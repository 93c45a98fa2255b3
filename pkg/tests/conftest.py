import hypothesis
import pytest
from hypothesis import strategies as st

from psfprover import prop

hypothesis.settings.register_profile("default", max_examples=100, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=20, deadline=None)
hypothesis.settings.load_profile("default")

ACCEPTANCE_LINES: list[str] = []


def prop_formulas(atoms=("p", "q", "r"), max_leaves=8):
    leaves = st.sampled_from([prop.BOTTOM] + [prop.Atom(a) for a in atoms])
    return st.recursive(
        leaves,
        lambda sub: st.builds(lambda c, a, b: c(a, b),
                              st.sampled_from([prop.And, prop.Or, prop.Imp]), sub, sub),
        max_leaves=max_leaves,
    )


def prop_sequents(atoms=("p", "q", "r"), max_leaves=5, max_side=2):
    side = st.lists(prop_formulas(atoms, max_leaves), max_size=max_side).map(tuple)
    return st.builds(prop.PropSequent, side, side)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
