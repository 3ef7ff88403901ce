"""Shared test plumbing: the acceptance suite records one line per
criterion and this hook echoes them in the terminal summary."""

summary_lines: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if summary_lines:
        terminalreporter.section("acceptance criteria")
        for line in summary_lines:
            terminalreporter.write_line(line)
