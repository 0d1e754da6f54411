"""Shared test helpers: random inputs and independent oracles."""

from __future__ import annotations

import itertools
import random

from wheelerlang import Alphabet, Automaton, minimize, random_dfa
from wheelerlang.regex import (
    Concat,
    Epsilon,
    Literal,
    Optional,
    Plus,
    RegexAst,
    Star,
    Union,
)

SIGMA_POOL = ("a", "b", "c")


def random_automaton(rng: random.Random, n_max: int = 12, sigma_max: int = 3) -> Automaton:
    n = rng.randint(1, n_max)
    k = rng.randint(1, sigma_max)
    sigma = Alphabet(SIGMA_POOL[:k])
    m = rng.randint(n - 1, n * k)
    return random_dfa(n, m, sigma, rng.randrange(2**62))


def random_minimal(rng: random.Random, n_max: int = 12, sigma_max: int = 3) -> Automaton:
    """A nonempty minimum DFA drawn via the random generator."""
    while True:
        a_min, _ = minimize(random_automaton(rng, n_max, sigma_max))
        if a_min.n:
            return a_min


def all_strings(symbols, max_len: int):
    for length in range(max_len + 1):
        for tup in itertools.product(symbols, repeat=length):
            yield "".join(tup)


def dfs_has_cycle(vertices, edges) -> bool:
    """Back-edge detection by iterative three-color DFS; independent of Kahn."""
    out: dict = {v: [] for v in vertices}
    for src, dst in edges:
        out[src].append(dst)
    color = {v: 0 for v in vertices}  # 0 white, 1 on stack, 2 done
    for root in vertices:
        if color[root]:
            continue
        stack = [(root, iter(out[root]))]
        color[root] = 1
        while stack:
            v, it = stack[-1]
            advanced = False
            for w in it:
                if color[w] == 1:
                    return True
                if color[w] == 0:
                    color[w] = 1
                    stack.append((w, iter(out[w])))
                    advanced = True
                    break
            if not advanced:
                color[v] = 2
                stack.pop()
    return False


def brute_lang(ast: RegexAst, max_len: int) -> set[str]:
    """All strings of length <= max_len matched by the AST, by set algebra."""
    if isinstance(ast, Epsilon):
        return {""}
    if isinstance(ast, Literal):
        return {ast.symbol} if max_len >= 1 else set()
    if isinstance(ast, Union):
        out: set[str] = set()
        for p in ast.parts:
            out |= brute_lang(p, max_len)
        return out
    if isinstance(ast, Concat):
        acc = {""}
        for p in ast.parts:
            part = brute_lang(p, max_len)
            acc = {x + y for x in acc for y in part if len(x) + len(y) <= max_len}
        return acc
    if isinstance(ast, Star):
        base = brute_lang(ast.inner, max_len)
        acc = {""}
        while True:
            grown = acc | {x + y for x in acc for y in base if len(x) + len(y) <= max_len}
            if grown == acc:
                return acc
            acc = grown
    if isinstance(ast, Plus):
        return brute_lang(Concat((ast.inner, Star(ast.inner))), max_len)
    if isinstance(ast, Optional):
        return {""} | brute_lang(ast.inner, max_len)
    raise TypeError(ast)


def random_pattern(rng: random.Random, depth: int = 3, symbols: str = "ab") -> str:
    """Random well-formed pattern text over the given literal symbols."""

    def build(d: int) -> str:
        if d == 0 or rng.random() < 0.35:
            return rng.choice(symbols)
        kind = rng.randrange(6)
        if kind == 0:
            branches = [build(d - 1) for _ in range(rng.randint(2, 3))]
            if rng.random() < 0.2:
                branches.append("")  # empty alternative: epsilon branch
            return "(" + "|".join(branches) + ")"
        if kind == 1:
            return "".join(build(d - 1) for _ in range(rng.randint(2, 3)))
        inner = "(" + build(d - 1) + ")"
        return inner + {2: "*", 3: "+", 4: "?", 5: "*"}[kind]

    return build(depth)
