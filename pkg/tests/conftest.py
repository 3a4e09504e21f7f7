summary_lines = []


def pytest_terminal_summary(terminalreporter):
    if summary_lines:
        terminalreporter.section("acceptance criteria")
        for line in summary_lines:
            terminalreporter.write_line(line)
