"""End-to-end pipeline: trim, minimize, rank, square, acyclicity, witness."""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .automata import Automaton, trim
from .bigsquare import (
    _delta_arrays,
    _kahn_residue_codes,
    _witness_from_residue,
    count_pair_transitions,
    pair_codes,
)
from .intervals import compute_rank_table, width_estimate
from .minimize import minimize
from .square import Witness, build_pruned_square, extract_witness, is_acyclic

# beyond this many minimum-automaton states the pruned square easily holds
# millions of pairs, so the pipeline switches to the array representation
ARRAY_ENGINE_THRESHOLD = 256


@dataclass(frozen=True)
class Report:
    """Everything the pipeline learned about one input."""

    wheeler: bool
    n: int
    m: int
    n_min: int
    m_min: int
    width_estimate: int
    square_states: int
    square_transitions: int
    witness: Witness | None
    timings_ms: dict[str, float] = field(compare=False)
    input_mode: str = "dfa"

    def to_json_dict(self) -> dict:
        """Stable JSON field layout; timings are informational only."""
        return {
            "wheeler": self.wheeler,
            "n": self.n,
            "m": self.m,
            "n_min": self.n_min,
            "m_min": self.m_min,
            "width_estimate": self.width_estimate,
            "square_states": self.square_states,
            "square_transitions": self.square_transitions,
            "witness": None
            if self.witness is None
            else {
                "cycle": [list(p) for p in self.witness.cycle],
                "labels": self.witness.labels,
            },
            "timings_ms": dict(self.timings_ms),
            "input_mode": self.input_mode,
        }


def recognize(a: Automaton, input_mode: str = "dfa", engine: str = "auto") -> Report:
    """Decide whether L(a) is Wheeler; non-Wheeler inputs get a witness cycle.

    `engine` picks the square representation: 'sets' is the plain
    hash-set pipeline, 'arrays' the equivalent array-coded one for large
    instances, 'auto' switches on the minimum automaton's size.
    """
    if not a.deterministic:
        raise ValueError("recognizer requires a deterministic automaton")
    if engine not in ("auto", "sets", "arrays"):
        raise ValueError(f"unknown engine {engine!r}")

    timings: dict[str, float] = {}

    def clock(name: str, fn, *args):
        t0 = time.perf_counter()
        out = fn(*args)
        timings[name] = (time.perf_counter() - t0) * 1000.0
        return out

    trimmed, _ = clock("trim", trim, a)
    a_min, _ = clock("minimize", minimize, trimmed)
    if a_min.n == 0:
        # empty language: nothing to sort, trivially Wheeler
        for stage in ("rank_table", "square", "acyclicity"):
            timings[stage] = 0.0
        timings["total"] = sum(timings.values())
        return Report(True, a.n, a.m, 0, 0, 1, 0, 0, None, timings, input_mode)

    table = clock("rank_table", compute_rank_table, a_min)
    if engine == "arrays" or (engine == "auto" and a_min.n >= ARRAY_ENGINE_THRESHOLD):
        delta = _delta_arrays(a_min)

        def build_codes():
            codes = pair_codes(a_min, table)
            return codes, count_pair_transitions(a_min, codes, delta)

        codes, m2 = clock("square", build_codes)
        n2 = len(codes)
        residue = clock("acyclicity", _kahn_residue_codes, a_min.n, codes, delta)
        acyclic = len(residue) == 0
        witness = None if acyclic else _witness_from_residue(a_min, residue, delta)
    else:
        square = clock("square", build_pruned_square, a_min, table)
        n2, m2 = square.n2, square.m2
        acyclic = clock("acyclicity", is_acyclic, square)
        witness = None if acyclic else extract_witness(square)
    timings["total"] = sum(timings.values())
    return Report(
        wheeler=acyclic,
        n=a.n,
        m=a.m,
        n_min=a_min.n,
        m_min=a_min.m,
        width_estimate=width_estimate(table),
        square_states=n2,
        square_transitions=m2,
        witness=witness,
        timings_ms=timings,
        input_mode=input_mode,
    )
