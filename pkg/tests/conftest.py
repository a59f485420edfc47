import pytest
from hypothesis import assume, settings
from hypothesis import strategies as st

from necgroups.errors import InvalidSignature
from necgroups.signature import Signature, validate

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

orders = st.integers(2, 12)


@st.composite
def signatures(draw, sign=None, fuchsian=False, max_genus=3):
    sign = sign or draw(st.sampled_from("+-"))
    if fuchsian:
        sign = "+"
    genus = draw(st.integers(1 if sign == "-" else 0, max_genus))
    cusps = draw(st.integers(0, 2))
    periods = draw(st.lists(orders, max_size=4))
    cycles = [] if fuchsian else draw(
        st.lists(st.lists(orders, max_size=4).map(tuple), max_size=3))
    sig = Signature(sign, genus, cusps, tuple(periods), tuple(cycles))
    try:
        validate(sig)
    except InvalidSignature:
        assume(False)
    return sig


_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, text): acceptance criterion number")


def pytest_runtest_makereport(item, call):
    mark = item.get_closest_marker("criterion")
    if mark is None or call.when != "call":
        return
    n, text = mark.args
    ok = call.excinfo is None
    prev = _criteria.get(n, (text, True))
    _criteria[n] = (text, prev[1] and ok)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        text, ok = _criteria[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'} - {text}")
