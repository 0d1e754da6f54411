"""Co-lex ranks of the infimum and supremum strings of every state.

For a state u, the set of strings reaching u from the source has a
greatest lower bound and a least upper bound in the co-lex order over
finite and left-infinite strings; both are eventually periodic.  This
module computes dense co-lex ranks of all 2n bounds by an iterated
truncated-rank refinement:

  round-k keys order the length-k suffixes of the true bound strings,
  because taking the last k characters commutes with glb/lub.  Each
  element's round-k candidate set is { epsilon (source only) } union
  { round-(k-1) key of the predecessor, extended by the edge symbol },
  taken over the label-pruned incoming edges.  Infimum elements take the
  minimum candidate, supremum elements the maximum; candidates compare
  by last symbol first, then by the predecessor's previous-round rank.
  All 2n elements are jointly dense-ranked each round, and the dense-rank
  partition provably refines round over round, so the first repeated rank
  vector is a fixpoint of a deterministic map and equals the true order.

Sentinel states and symbols are never materialized: the empty-string
candidate at the source together with the end-of-string key sentinel
(smaller than every symbol) gives finite strings their correct place
below every infinite extension.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .automata import Alphabet, Automaton, trim

Which = Literal["inf", "sup"]

INF: Which = "inf"
SUP: Which = "sup"


@dataclass(frozen=True)
class EventuallyPeriodicString:
    """A finite or left-infinite string ...period period preperiod.

    An empty period means the string is just the finite preperiod.  Both
    components are written left to right; the co-lex walk reads them right
    to left.
    """

    preperiod: str
    period: str

    def canonical(self) -> "EventuallyPeriodicString":
        """Primitive period, shortest preperiod; identity on finite strings."""
        if not self.period:
            return self
        rpre, rper = self.preperiod[::-1], self.period[::-1]
        for p in range(1, len(rper) + 1):
            if len(rper) % p == 0 and rper[:p] * (len(rper) // p) == rper:
                rper = rper[:p]
                break
        while rpre and rpre[-1] == rper[-1]:
            rpre = rpre[:-1]
            rper = rper[-1] + rper[:-1]
        return EventuallyPeriodicString(rpre[::-1], rper[::-1])

    def chars_right_to_left(self):
        """Yield characters from the end; infinite iterator when periodic."""
        yield from reversed(self.preperiod)
        if self.period:
            rper = self.period[::-1]
            while True:
                yield from rper


def compare_eps(
    x: EventuallyPeriodicString,
    y: EventuallyPeriodicString,
    order: Alphabet | None = None,
) -> int:
    """Exact co-lex comparison: -1, 0 or 1.

    Characters compare in the given alphabet order (character codes when
    omitted); a string that ends while the other continues is smaller.
    Two infinite strings that agree to the combined preperiod-plus-period
    depth are equal.
    """
    key = order.pos if order is not None else ord
    bound = (
        len(x.preperiod)
        + len(y.preperiod)
        + len(x.period)
        + len(y.period)
        + max(len(x.period), len(y.period))
    )
    gx, gy = x.chars_right_to_left(), y.chars_right_to_left()
    for _ in range(bound):
        cx = next(gx, None)
        cy = next(gy, None)
        if cx is None and cy is None:
            return 0
        if cx is None:
            return -1
        if cy is None:
            return 1
        if key(cx) != key(cy):
            return -1 if key(cx) < key(cy) else 1
    return 0


def _prune(a: Automaton, keep_max: bool) -> Automaton:
    if not a.deterministic:
        raise ValueError("pruning requires a deterministic automaton")
    kept: set[tuple[int, str, int]] = set()
    for u in range(a.n):
        incoming = a.in_edges[u]
        if not incoming or u == a.source:
            kept.update((v, c, u) for c, v in incoming)
            continue
        positions = [a.alphabet.pos(c) for c, _ in incoming]
        target = max(positions) if keep_max else min(positions)
        kept.update((v, c, u) for c, v in incoming if a.alphabet.pos(c) == target)
    return Automaton(a.n, frozenset(kept), a.source, a.finals, a.alphabet)


def prune_min_edges(a: Automaton) -> Automaton:
    """Keep, per non-source state, only incoming edges with its minimum label.

    The language is not preserved; this is an infimum-computation artifact.
    """
    return _prune(a, keep_max=False)


def prune_max_edges(a: Automaton) -> Automaton:
    """Symmetric to prune_min_edges: keep only maximum-label incoming edges."""
    return _prune(a, keep_max=True)


@dataclass(frozen=True)
class RankTable:
    """Dense co-lex ranks (1-based) of every state's infimum and supremum.

    Equal ranks mean equal underlying strings.  `inf_pred` / `sup_pred`
    record, per state, the incoming (origin, symbol) chosen at the
    fixpoint, or None where the empty-string candidate won (source only);
    they drive string extraction.
    """

    n: int
    inf_rank: tuple[int, ...]
    sup_rank: tuple[int, ...]
    fixpoint_depth: int
    inf_pred: tuple[tuple[int, str] | None, ...]
    sup_pred: tuple[tuple[int, str] | None, ...]

    def singleton(self, u: int) -> bool:
        """True iff exactly one string reaches u (equal infimum and supremum)."""
        return self.inf_rank[u] == self.sup_rank[u]


def compute_rank_table(a_min: Automaton, prune: bool = True) -> RankTable:
    """Rank table of a trimmed deterministic automaton.

    `prune` selects the label-pruned candidate edge sets; disabling it
    feeds all incoming edges to the fixpoint and must give the same table
    (kept as a test hook).
    """
    n = a_min.n
    if n == 0:
        return RankTable(0, (), (), 0, (), ())
    _, report = trim(a_min)
    if report.kept != n:
        raise ValueError("rank table requires a trimmed automaton")

    inf_in = (prune_min_edges(a_min) if prune else a_min).in_edges
    sup_in = (prune_max_edges(a_min) if prune else a_min).in_edges
    pos = a_min.alphabet.pos
    source = a_min.source

    # element ids: state u's infimum is u, its supremum is n + u
    rank = [1] * (2 * n)
    chosen: list[tuple[int, str] | None] = [None] * (2 * n)
    cap = 8 * n + 8
    depth = 0
    while True:
        depth += 1
        if depth > cap:
            raise RuntimeError("rank fixpoint failed to stabilize within the safety cap")
        keys: list[tuple[int, ...]] = [()] * (2 * n)
        for u in range(n):
            best = None  # (symbol pos, previous rank, origin)
            for c, v in inf_in[u]:
                cand = (pos(c), rank[v], v)
                if best is None or cand < best:
                    best = cand
                    chosen[u] = (v, c)
            if u == source or best is None:
                # the empty string is a candidate at the source and wins the min
                keys[u] = ()
                chosen[u] = None
            else:
                keys[u] = best[:2]
        for u in range(n):
            best = None
            for c, v in sup_in[u]:
                cand = (pos(c), rank[n + v], -v)
                if best is None or cand > best:
                    best = cand
                    chosen[n + u] = (v, c)
            if best is None:
                # no incoming edges: the supremum is the empty string too
                keys[n + u] = ()
                chosen[n + u] = None
            else:
                keys[n + u] = best[:2]

        by_key = sorted(range(2 * n), key=lambda e: keys[e])
        new_rank = [0] * (2 * n)
        r = 0
        prev_key = None
        prev_old = None
        for e in by_key:
            if keys[e] != prev_key:
                r += 1
                prev_key = keys[e]
                assert prev_old is None or rank[e] >= prev_old, "rank order regressed"
            else:
                assert rank[e] == prev_old, "rank partition coarsened"
            prev_old = rank[e]
            new_rank[e] = r
        if new_rank == rank:
            break
        rank = new_rank

    return RankTable(
        n,
        tuple(rank[:n]),
        tuple(rank[n:]),
        depth,
        tuple(chosen[:n]),
        tuple(chosen[n:]),
    )


def extract_infsup_string(t: RankTable, u: int, which: Which) -> EventuallyPeriodicString:
    """Bound string of u, rebuilt by walking the fixpoint-chosen predecessors.

    The walk collects edge labels backwards until it reaches the source's
    empty-string candidate (finite bound) or repeats a state (periodic
    bound); the result is canonical.
    """
    pred = t.inf_pred if which == INF else t.sup_pred
    seen = {u: 0}
    states = [u]
    chars: list[str] = []  # last character first
    cur = u
    while True:
        step = pred[cur]
        if step is None:
            return EventuallyPeriodicString("".join(reversed(chars)), "")
        v, c = step
        chars.append(c)
        if v in seen:
            cut = seen[v]
            pre = "".join(reversed(chars[:cut]))
            per = "".join(reversed(chars[cut:]))
            return EventuallyPeriodicString(pre, per).canonical()
        seen[v] = len(states)
        states.append(v)
        cur = v


def intervals_intersect(t: RankTable, u: int, v: int) -> bool:
    """Whether the open co-lex intervals of u and v share a string.

    Singleton states have empty intervals; otherwise the rank encodings
    intersect exactly when each infimum sits strictly below the other's
    supremum.
    """
    if t.singleton(u) or t.singleton(v):
        return False
    return t.inf_rank[v] < t.sup_rank[u] and t.inf_rank[u] < t.sup_rank[v]


def width_estimate(t: RankTable) -> int:
    """Clique number of the open-interval graph, by an endpoint sweep.

    Sweeps the gaps between consecutive rank values and counts the
    non-singleton intervals strictly containing each gap; 1 when no two
    intervals intersect.
    """
    if t.n < 1:
        raise ValueError("width estimate needs at least one state")
    size = 2 * t.n + 2
    diff = [0] * size
    for u in range(t.n):
        lo, hi = t.inf_rank[u], t.sup_rank[u]
        if lo < hi:
            diff[lo] += 1
            diff[hi] -= 1
    best = 0
    running = 0
    for g in range(size):
        running += diff[g]
        best = max(best, running)
    return max(1, best)
