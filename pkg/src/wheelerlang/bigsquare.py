"""Array-backed square pipeline for large minimum automata.

Semantically identical to square.build_pruned_square + is_acyclic +
extract_witness, but pairs are kept as sorted int32 codes u*n+v and pair
transitions are never materialized: Kahn peeling recomputes, per round,
which alive pairs are hit by an alive predecessor, and the pair set is
recompacted as it shrinks.  This keeps the paper-scale benchmark grid
(hundreds of millions of pair transitions) inside a few gigabytes.

Pair enumeration is the same sorted-by-infimum adjacent-run scan as the
set-based builder, expressed with searchsorted/repeat instead of a
two-pointer loop; the outputs are identical.
"""

from __future__ import annotations

import numpy as np

from .automata import Automaton
from .intervals import RankTable
from .square import Witness

CHUNK = 1 << 22


def _delta_arrays(a_min: Automaton) -> dict[str, np.ndarray]:
    delta = {c: np.full(a_min.n, -1, dtype=np.int32) for c in a_min.alphabet.symbols}
    for u, c, v in a_min.transitions:
        delta[c][u] = v
    return delta


def pair_codes(a_min: Automaton, t: RankTable) -> np.ndarray:
    """Sorted codes u*n+v of all intersecting ordered pairs, u != v."""
    n = a_min.n
    inf = np.asarray(t.inf_rank, dtype=np.int32)
    sup = np.asarray(t.sup_rank, dtype=np.int32)
    ns = np.nonzero(inf < sup)[0].astype(np.int32)
    if len(ns) == 0:
        return np.empty(0, dtype=np.int32)
    order = ns[np.lexsort((ns, inf[ns]))]
    infs = inf[order]
    sups = sup[order]
    run_end = np.searchsorted(infs, sups, side="left")
    idx = np.arange(len(order), dtype=np.int64)
    counts = np.maximum(run_end - idx - 1, 0)
    total = int(counts.sum())
    if total == 0:
        return np.empty(0, dtype=np.int32)
    i = np.repeat(np.arange(len(order), dtype=np.int32), counts)
    starts = (np.cumsum(counts) - counts).astype(np.int64)
    j = (np.arange(total, dtype=np.int64) - starts[i] + i + 1).astype(np.int32)
    u = order[i]
    v = order[j]
    codes = np.concatenate([u.astype(np.int32) * n + v, v.astype(np.int32) * n + u])
    codes.sort()
    return codes


def count_pair_transitions(
    a_min: Automaton, codes: np.ndarray, delta: dict[str, np.ndarray] | None = None
) -> int:
    """Number of synchronized transitions between pair codes; nothing stored."""
    n = a_min.n
    if delta is None:
        delta = _delta_arrays(a_min)
    total = 0
    for dc in delta.values():
        for lo in range(0, len(codes), CHUNK):
            part = codes[lo : lo + CHUNK]
            tu = dc[part // n]
            tv = dc[part % n]
            ok = (tu >= 0) & (tv >= 0)
            tcode = tu[ok] * n + tv[ok]
            pos = np.searchsorted(codes, tcode)
            pos[pos == len(codes)] = 0
            total += int((codes[pos] == tcode).sum()) if len(codes) else 0
    return total


def _kahn_residue_codes(n: int, codes: np.ndarray, delta: dict[str, np.ndarray]) -> np.ndarray:
    """Codes surviving batch Kahn peeling (remove all unhit pairs, repeat)."""
    while len(codes):
        hit = np.zeros(len(codes), dtype=bool)
        for dc in delta.values():
            for lo in range(0, len(codes), CHUNK):
                part = codes[lo : lo + CHUNK]
                tu = dc[part // n]
                tv = dc[part % n]
                ok = (tu >= 0) & (tv >= 0)
                tcode = tu[ok] * n + tv[ok]
                pos = np.searchsorted(codes, tcode)
                pos[pos == len(codes)] = 0
                hit[pos[codes[pos] == tcode]] = True
        if hit.all():
            break
        codes = codes[hit]
    return codes


def _witness_from_residue(
    a_min: Automaton, residue: np.ndarray, delta: dict[str, np.ndarray]
) -> Witness:
    n = a_min.n
    preds: dict[str, list[list[int]]] = {
        c: [[] for _ in range(n)] for c in a_min.alphabet.symbols
    }
    for u, c, v in a_min.transitions:
        preds[c][v].append(u)

    def predecessor(code: int) -> tuple[int, str]:
        a, b = divmod(code, n)
        for c in a_min.alphabet.symbols:
            for pu in preds[c][a]:
                for pv in preds[c][b]:
                    if pu == pv:
                        continue
                    pcode = pu * n + pv
                    pos = int(np.searchsorted(residue, pcode))
                    if pos < len(residue) and residue[pos] == pcode:
                        return pcode, c
        raise AssertionError("residue vertex with no residue predecessor")

    start = int(residue[0])
    path = [start]
    labels: list[str] = []
    index = {start: 0}
    while True:
        q, c = predecessor(path[-1])
        labels.append(c)
        if q in index:
            s = index[q]
            cycle = tuple(divmod(code, n) for code in reversed(path[s:]))
            cycle_labels = "".join(reversed(labels[s:-1])) + labels[-1]
            return Witness(cycle, cycle_labels)
        index[q] = len(path)
        path.append(q)


def square_verdict(a_min: Automaton, t: RankTable) -> tuple[int, int, bool, Witness | None]:
    """(pair count, transition count, acyclic, witness) without set materialization."""
    delta = _delta_arrays(a_min)
    codes = pair_codes(a_min, t)
    n2 = len(codes)
    m2 = count_pair_transitions(a_min, codes, delta)
    residue = _kahn_residue_codes(a_min.n, codes, delta)
    if len(residue) == 0:
        return n2, m2, True, None
    return n2, m2, False, _witness_from_residue(a_min, residue, delta)
