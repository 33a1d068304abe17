from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from divweyl.numberfield import custom_field, cyclotomic_field, quadratic_field

settings.register_profile("default", deadline=None, max_examples=40,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def rationals(num=12, den=6, nonzero=False):
    s = st.builds(Fraction, st.integers(-num, num), st.integers(1, den))
    return s.filter(bool) if nonzero else s


@pytest.fixture(scope="session")
def gauss():
    return quadratic_field(-1)


@pytest.fixture(scope="session")
def cubic():
    return custom_field([-1, -2, 1, 1], [-2, 0, 1], name="Q(zeta_7)^+")


@pytest.fixture(scope="session")
def cyclo5():
    return cyclotomic_field(5)


FIELD_BUILDERS = {
    "quadratic-1": lambda: quadratic_field(-1),
    "quadratic2": lambda: quadratic_field(2),
    "quadratic-5": lambda: quadratic_field(-5),
    "cubic": lambda: custom_field([-1, -2, 1, 1], [-2, 0, 1]),
    "cyclo5": lambda: cyclotomic_field(5),
    "cyclo7": lambda: cyclotomic_field(7),
}


@pytest.fixture(scope="session", params=sorted(FIELD_BUILDERS))
def field(request):
    return FIELD_BUILDERS[request.param]()


# one line per acceptance criterion, printed at the end of the run
ACCEPTANCE_LOG: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LOG:
        terminalreporter.section("acceptance criteria")
        for n in sorted(ACCEPTANCE_LOG):
            terminalreporter.write_line(ACCEPTANCE_LOG[n])
