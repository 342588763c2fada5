import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from acqnet import named  # noqa: E402


@pytest.fixture
def petersen():
    return named.petersen_graph()


@pytest.fixture
def c5():
    return named.cycle_graph(5)


@pytest.fixture
def k23():
    return named.complete_bipartite_graph(2, 3)


@pytest.fixture
def s6():
    return named.star_graph(6)


@pytest.fixture
def p5():
    return named.path_graph(5)


@pytest.fixture
def h6():
    return named.h6_graph()


@pytest.fixture
def k6e():
    return named.k6_minus_edge()


@pytest.fixture(scope="session")
def connected_corpus():
    """One graph per isomorphism class of connected graphs on 1..8 vertices."""
    from acqnet import corpus

    return [g for n in range(1, 9) for g in corpus.connected_graphs(n)]


@pytest.fixture(scope="session")
def diameter_two_corpus(connected_corpus):
    from acqnet.span import is_diameter_two

    return [g for g in connected_corpus if is_diameter_two(g)]


@pytest.fixture(scope="session")
def classified_corpus(diameter_two_corpus):
    from acqnet import classify

    return [classify(g) for g in diameter_two_corpus]


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def criterion(capsys):
    """Record and print one pass/fail line for an acceptance criterion."""

    def record(number: int, title: str, passed: bool, detail: str = "") -> None:
        line = f"criterion {number:2d} {'PASS' if passed else 'FAIL'}: {title}"
        if detail:
            line += f" ({detail})"
        ACCEPTANCE_LINES.append(line)
        with capsys.disabled():
            print("\n" + line)
        assert passed, line

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
