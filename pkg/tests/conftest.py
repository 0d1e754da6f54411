import sys
from pathlib import Path

import pytest

from wheelerlang import Alphabet, Automaton

sys.path.insert(0, str(Path(__file__).parent))

DATA = Path(__file__).parent / "data"


@pytest.fixture
def aa_star_dfa() -> Automaton:
    """Minimum DFA of (aa)*: two states swapping on a, source final."""
    return Automaton(2, frozenset({(0, "a", 1), (1, "a", 0)}), 0, frozenset({0}), Alphabet(("a",)))


@pytest.fixture
def a_star_dfa() -> Automaton:
    return Automaton(1, frozenset({(0, "a", 0)}), 0, frozenset({0}), Alphabet(("a",)))


@pytest.fixture
def ab_star_dfa() -> Automaton:
    """Minimum DFA of ab*: source steps on a, then loops on b."""
    return Automaton(
        2, frozenset({(0, "a", 1), (1, "b", 1)}), 0, frozenset({1}), Alphabet(("a", "b"))
    )


@pytest.fixture
def corpus_files() -> list[Path]:
    return sorted(DATA.glob("*.txt"))
