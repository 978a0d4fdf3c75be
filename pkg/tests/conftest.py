from helpers import CRITERIA


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(CRITERIA):
        status, title = CRITERIA[n]
        terminalreporter.write_line(f"criterion {n:>2}: {status}  {title}")
