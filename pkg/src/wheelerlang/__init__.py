"""Wheeler language recognition for DFAs and regular expressions."""

from .automata import (
    Alphabet,
    Automaton,
    FormatError,
    TrimReport,
    parse_automaton,
    random_dfa,
    reverse,
    serialize_automaton,
    trim,
)
from .bench import BenchRow, run_bench
from .intervals import (
    INF,
    SUP,
    EventuallyPeriodicString,
    RankTable,
    compare_eps,
    compute_rank_table,
    extract_infsup_string,
    intervals_intersect,
    prune_max_edges,
    prune_min_edges,
    width_estimate,
)
from .minimize import equivalent, minimize
from .ovgen import (
    OvDfaLayout,
    OvInstance,
    build_ov_dfa,
    decode_witness,
    ov_bruteforce,
    parse_ov_instance,
    random_ov_instance,
    serialize_ov_instance,
    to_binary_alphabet,
)
from .recognize import Report, recognize
from .regex import StateLimitExceeded, compile_regex, parse_regex
from .square import (
    PrunedSquare,
    Witness,
    build_full_square,
    build_pruned_square,
    extract_witness,
    is_acyclic,
    verify_witness,
)

__all__ = [
    "Alphabet",
    "Automaton",
    "BenchRow",
    "EventuallyPeriodicString",
    "FormatError",
    "INF",
    "OvDfaLayout",
    "OvInstance",
    "PrunedSquare",
    "RankTable",
    "Report",
    "StateLimitExceeded",
    "SUP",
    "TrimReport",
    "Witness",
    "build_full_square",
    "build_ov_dfa",
    "build_pruned_square",
    "compare_eps",
    "compile_regex",
    "compute_rank_table",
    "decode_witness",
    "equivalent",
    "extract_infsup_string",
    "extract_witness",
    "intervals_intersect",
    "is_acyclic",
    "minimize",
    "ov_bruteforce",
    "parse_automaton",
    "parse_ov_instance",
    "parse_regex",
    "prune_max_edges",
    "prune_min_edges",
    "random_dfa",
    "random_ov_instance",
    "recognize",
    "reverse",
    "run_bench",
    "serialize_automaton",
    "serialize_ov_instance",
    "to_binary_alphabet",
    "trim",
    "verify_witness",
    "width_estimate",
]
