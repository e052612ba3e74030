from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from riordankit.series import PowerSeries

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

small_rationals = st.builds(Fraction, st.integers(-3, 3), st.sampled_from([1, 1, 1, 2, 3]))


@st.composite
def series(draw, order=None, min_order=1, max_order=10, const=None):
    n = draw(st.integers(min_order, max_order)) if order is None else order
    cs = draw(st.lists(small_rationals, min_size=n + 1, max_size=n + 1))
    if const is not None:
        cs[0] = Fraction(const)
    return PowerSeries(cs)


@st.composite
def unit_series(draw, **kw):
    s = draw(series(**kw))
    c0 = draw(small_rationals.filter(bool))
    return PowerSeries((c0,) + s.coeffs[1:])


@st.composite
def admissible_f(draw, **kw):
    """f(0) = 0, f'(0) != 0."""
    s = draw(series(**{"min_order": 2, **kw}))
    f1 = draw(small_rationals.filter(bool))
    return PowerSeries((0, f1) + s.coeffs[2:])


# -- acceptance reporting ---------------------------------------------------------

_criteria: dict = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(num, title): acceptance criterion")


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("criterion")
        if m:
            num, title = m.args
            _criteria.setdefault(num, {"title": title, "ok": True, "ran": False})


def pytest_runtest_makereport(item, call):
    m = item.get_closest_marker("criterion")
    if m is None:
        return
    rec = _criteria[m.args[0]]
    if call.when == "call":
        rec["ran"] = True
    if call.excinfo is not None:
        rec["ok"] = False


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_criteria):
        rec = _criteria[num]
        verdict = "PASS" if rec["ok"] and rec["ran"] else ("FAIL" if rec["ran"] else "NOT RUN")
        terminalreporter.write_line(f"criterion {num}: {verdict}  {rec['title']}")
