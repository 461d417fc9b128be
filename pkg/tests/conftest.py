from hypothesis import strategies as st

from klspecht.laurent import LaurentPoly

laurent_polys = st.dictionaries(
    st.integers(min_value=-6, max_value=6), st.integers(min_value=-50, max_value=50), max_size=6
).map(LaurentPoly)


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(module.RESULTS):
        terminalreporter.write_line(module.RESULTS[n])
