from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from poisson_bargmann.algebra import Poly
from poisson_bargmann.params import STANDARD_PARAMS

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")

rationals = st.fractions(min_value=-6, max_value=6, max_denominator=7)
positive_rationals = st.fractions(min_value=Fraction(1, 8), max_value=4, max_denominator=8).filter(
    lambda x: x > 0
)


def polys(max_degree=8):
    return st.lists(rationals, max_size=max_degree + 1).map(Poly)


@pytest.fixture(params=STANDARD_PARAMS, ids=lambda p: f"a={p.alpha},s={p.sigma}")
def params(request):
    return request.param


# one summary line per acceptance criterion, printed after the run
_ACCEPTANCE = []


@pytest.fixture
def acceptance():
    def record(label, passed, detail=""):
        _ACCEPTANCE.append((label, bool(passed), detail))
        return passed

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label, passed, detail in _ACCEPTANCE:
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"{status}  {label}" + (f"  ({detail})" if detail else ""))
