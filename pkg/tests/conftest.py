from fractions import Fraction

from hypothesis import HealthCheck, settings, strategies as st

from pellfrac.qfield import QuadElem

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

FIELDS = (1, 2, 3, -1, 5, -7, 17, 33)

rationals = st.fractions(max_denominator=30).filter(lambda q: abs(q.numerator) < 10**6)


@st.composite
def elements(draw, d=None, nonzero=False):
    d = draw(st.sampled_from(FIELDS)) if d is None else d
    a = draw(rationals)
    b = draw(rationals) if d != 1 else Fraction(0)
    z = QuadElem(a, b, d)
    if nonzero and not z:
        z = z + 1
    return z


@st.composite
def element_pairs(draw, nonzero_second=False):
    d = draw(st.sampled_from(FIELDS))
    return draw(elements(d)), draw(elements(d, nonzero=nonzero_second))


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
