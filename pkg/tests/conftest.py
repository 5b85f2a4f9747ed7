"""Shared test plumbing: the acceptance suite records one line per criterion
here, and the terminal summary prints them after the run (pytest's capture
would otherwise swallow plain prints)."""

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
