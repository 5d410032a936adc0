import pytest

from softgt import generate_sgt
from spaces import soft


@pytest.fixture
def three_point():
    """The three-point, three-parameter space with five open sets."""
    sets = {
        "S_A": soft(r1="abc", r2="bc"),
        "S_A1": soft(r1="b", r2="bc"),
        "S_A2": soft(r1="ac", r2="c"),
        "S_A3": soft(r1="ab", r2="bc"),
    }
    g = generate_sgt(sets["S_A"], [sets["S_A1"], sets["S_A2"], sets["S_A3"], sets["S_A"]])
    return g, sets


ACCEPTANCE = pytest.StashKey[dict]()


@pytest.fixture
def criterion(request):
    """Record a PASS/FAIL line for an acceptance criterion."""
    lines = request.config.stash.setdefault(ACCEPTANCE, {})

    def record(number: int, title: str, ok: bool, detail: str = "") -> bool:
        lines[number] = f"criterion {number} {'PASS' if ok else 'FAIL'}: {title}" + (f" ({detail})" if detail else "")
        return ok

    return record


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(ACCEPTANCE, {})
    if lines:
        terminalreporter.section("acceptance criteria")
        for number in sorted(lines):
            terminalreporter.write_line(lines[number])
