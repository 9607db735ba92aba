"""Shared pytest wiring: surfaces the acceptance criterion lines.

``tests/test_acceptance.py`` registers one ``A<k>: PASS/FAIL`` line per
criterion in ``ACCEPTANCE_LINES``; printing them from the terminal-summary
hook keeps them visible in any pytest run regardless of capture mode.
"""

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.line(line)
