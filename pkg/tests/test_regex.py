import random

import pytest

from wheelerlang import Alphabet, StateLimitExceeded, compile_regex, minimize, parse_regex, trim
from wheelerlang.regex import Concat, Epsilon, Literal, Optional, Plus, Star, Union
from util import all_strings, brute_lang, random_pattern


def test_parse_shapes():
    assert parse_regex("a*") == Star(Literal("a"))
    assert parse_regex("(aa)*") == Star(Concat((Literal("a"), Literal("a"))))
    assert parse_regex("ab*|c") == Union(
        (Concat((Literal("a"), Star(Literal("b")))), Literal("c"))
    )
    assert parse_regex("a+b?") == Concat((Plus(Literal("a")), Optional(Literal("b"))))
    assert parse_regex("(a|)") == Union((Literal("a"), Epsilon()))
    assert parse_regex("\\*") == Literal("*")


@pytest.mark.parametrize("bad", ["", "(", "a)", "(a", "*a", "|*", "a\\", "a**b)("])
def test_parse_errors(bad):
    with pytest.raises(ValueError):
        parse_regex(bad)


def test_ab_star_or_c_membership_sampling():
    ast = parse_regex("ab*|c")
    dfa = compile_regex(ast)
    lang = brute_lang(ast, 6)
    for w in all_strings(("a", "b", "c"), 6):
        assert dfa.accepts(w) == (w in lang), w


def test_compile_a_star_is_one_state():
    dfa = compile_regex(parse_regex("a*"))
    assert dfa.n == 1
    assert dfa.transitions == {(0, "a", 0)}
    assert dfa.source == 0 and dfa.finals == {0}


def test_compile_aa_star_two_states_after_minimization():
    dfa = compile_regex(parse_regex("(aa)*"))
    minimal, _ = minimize(dfa)
    assert minimal.n == 2 and minimal.m == 2


def test_membership_agreement_200_random_patterns():
    rng = random.Random(2024)
    strings = list(all_strings(("a", "b"), 8))
    for _ in range(200):
        pattern = random_pattern(rng)
        ast = parse_regex(pattern)
        dfa = compile_regex(ast, alphabet=Alphabet(("a", "b")))
        lang = brute_lang(ast, 8)
        for w in strings:
            assert dfa.accepts(w) == (w in lang), f"{pattern!r} on {w!r}"


def test_compiled_is_deterministic_and_trim_fixed():
    rng = random.Random(5)
    for _ in range(40):
        dfa = compile_regex(parse_regex(random_pattern(rng)), alphabet=Alphabet(("a", "b")))
        assert dfa.deterministic
        trimmed, _ = trim(dfa)
        assert trimmed == dfa


def test_alphabet_defaults_to_sorted_literals():
    dfa = compile_regex(parse_regex("ba|c"))
    assert dfa.alphabet.symbols == ("a", "b", "c")


def test_alphabet_override_must_cover_literals():
    ast = parse_regex("ab")
    with pytest.raises(ValueError, match="not in the supplied alphabet"):
        compile_regex(ast, alphabet=Alphabet(("a",)))


def test_state_cap_is_enforced():
    with pytest.raises(StateLimitExceeded):
        compile_regex(parse_regex("ab"), state_cap=1)
