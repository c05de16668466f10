"""Collects the one-line verdicts recorded by the acceptance tests and prints them at the end."""

CRITERIA: dict[int, str] = {}


def record(number: int, description: str, ok: bool) -> None:
    line = f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {description}"
    CRITERIA[number] = line
    print(line)


def pytest_terminal_summary(terminalreporter):
    if CRITERIA:
        terminalreporter.section("acceptance criteria")
        for number in sorted(CRITERIA):
            terminalreporter.write_line(CRITERIA[number])
