"""Shared pytest plumbing: collects acceptance verdicts and prints them as a
one-line-per-criterion checklist after the run, pass or fail."""

_CHECKLIST = []


def record_verdict(criterion, label, passed, detail):
    _CHECKLIST.append((criterion, label, passed, detail))


def pytest_terminal_summary(terminalreporter):
    if not _CHECKLIST:
        return
    terminalreporter.section("acceptance checklist")
    for criterion, label, passed, detail in sorted(_CHECKLIST):
        word = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"[{word}] criterion {criterion} — {label}: {detail}")
