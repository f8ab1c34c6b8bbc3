import pytest
from hypothesis import strategies as st

from shiftcsl.gaussian import GaussianInt, GaussianRational, UNITS


def Q(re, im=0) -> GaussianRational:
    return GaussianRational.from_parts(re, im)


# Shifts used across the oracle and property suites.
STANDARD_SHIFTS = [
    Q(0),
    Q("1/2"),
    Q("1/2", "1/2"),
    Q("1/3"),
    Q("1/3", "1/3"),
    Q("1/5"),
    Q("2/5"),
    Q("1/5", "1/5"),
    Q("2/5", "2/5"),
    Q("2/5", "1/5"),
]


def gaussian_ints(bound=1000):
    c = st.integers(-bound, bound)
    return st.builds(GaussianInt, c, c)


def nonzero_gaussian_ints(bound=1000):
    return gaussian_ints(bound).filter(bool)


units = st.sampled_from(UNITS)


@st.composite
def gaussian_rationals(draw, bound=30):
    num = draw(gaussian_ints(bound))
    den = draw(nonzero_gaussian_ints(bound))
    return GaussianRational(num, den)


# -- one summary line per acceptance criterion --------------------------------

_acceptance: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    if report.when == "call" or report.outcome != "passed":
        name = report.nodeid.split("::")[-1]
        prev = _acceptance.get(name)
        if prev != "FAIL":
            _acceptance[name] = "PASS" if report.outcome == "passed" else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, verdict in _acceptance.items():
        terminalreporter.write_line(f"{verdict}  {name}")


@pytest.fixture
def window_for():
    from shiftcsl.oracle import Window

    return Window.for_sigma
