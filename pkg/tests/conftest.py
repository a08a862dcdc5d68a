import pytest

_VERDICTS: dict[str, tuple[str, str]] = {}


@pytest.fixture
def verdict(request):
    """Record a one-line PASS/FAIL result for an acceptance criterion.

    Usage: ``verdict("3", "recursion vs closed form", ok, detail)``.  The
    line is printed at once and again in the terminal summary.
    """

    def record(key: str, title: str, ok: bool, detail: str = "") -> bool:
        line = f"criterion {key:>2}: {'PASS' if ok else 'FAIL'}  {title}"
        if detail:
            line += f"  [{detail}]"
        _VERDICTS[key] = (request.node.nodeid, line)
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if not _VERDICTS:
        return
    terminalreporter.section("acceptance criteria")

    def order(k):
        num = "".join(c for c in k if c.isdigit())
        return (int(num or 0), k)

    for key in sorted(_VERDICTS, key=order):
        terminalreporter.write_line(_VERDICTS[key][1])
