import pytest
from hypothesis import strategies as st

from kochcodes import catalog
from kochcodes.gf2core import make_code
from kochcodes.tetrad import KOCH_SIGNATURES


@pytest.fixture(scope="session")
def e7():
    return catalog.build("e7")


@pytest.fixture(scope="session")
def e8():
    return catalog.build("e8")


@pytest.fixture(scope="session")
def g24():
    return catalog.build("g24")


@pytest.fixture(scope="session")
def nine_codes():
    """The nine Type II codes of length 24, keyed by signature string."""
    return {str(s): catalog.build_type2(s, 24) for s in KOCH_SIGNATURES}


@pytest.fixture(scope="session")
def length16_codes():
    return [catalog.build("t16(2e8)"), catalog.build("t16(d16)")]


@pytest.fixture(scope="session")
def type2_catalog(e8, length16_codes, nine_codes):
    return [e8, *length16_codes, *nine_codes.values()]


@st.composite
def codes(draw, min_n=1, max_n=12, max_rows=8):
    n = draw(st.integers(min_n, max_n))
    rows = draw(st.lists(st.integers(0, (1 << n) - 1), max_size=max_rows))
    return make_code(rows, n)


ACCEPTANCE_RESULTS: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE_RESULTS):
        ok, detail = ACCEPTANCE_RESULTS[num]
        terminalreporter.write_line(f"criterion {num:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
