import random

import pytest

from wheelerlang import (
    Alphabet,
    Automaton,
    OvInstance,
    Witness,
    build_ov_dfa,
    compute_rank_table,
    decode_witness,
    minimize,
    ov_bruteforce,
    parse_ov_instance,
    random_ov_instance,
    recognize,
    reverse,
    serialize_ov_instance,
    to_binary_alphabet,
)

FIG2 = OvInstance(
    4,
    3,
    ((1, 1, 0), (1, 0, 0), (1, 1, 1), (0, 1, 1)),
    ((1, 0, 1), (1, 0, 1), (0, 1, 0), (1, 1, 1)),
)

# same A side, B tweaked so no pair is orthogonal
FIG2_NO = OvInstance(
    4,
    3,
    ((1, 1, 0), (1, 0, 0), (1, 1, 1), (0, 1, 1)),
    ((1, 0, 1), (1, 0, 1), (1, 1, 0), (1, 1, 1)),
)


def total_zero_bits(inst: OvInstance) -> int:
    return sum(v.count(0) for v in inst.b_vectors)


def expected_sizes(inst: OvInstance) -> tuple[int, int]:
    n_vec, d, ell = inst.size, inst.dim, inst.ell
    states = 2 * (4 * n_vec - 1) + 5 * n_vec + 2 * n_vec * (d + ell + 1)
    edges = 20 * n_vec - 4 + 2 * n_vec * d + 3 * n_vec * ell + total_zero_bits(inst)
    return states, edges


def test_instance_validation():
    with pytest.raises(ValueError, match="power of two"):
        OvInstance(3, 2, ((0, 1), (1, 0), (1, 1)), ((0, 1), (1, 0), (1, 1)))
    with pytest.raises(ValueError, match="distinct"):
        OvInstance(2, 2, ((0, 1), (0, 1)), ((0, 1), (1, 0)))
    with pytest.raises(ValueError, match="bad vector"):
        OvInstance(2, 2, ((0, 2), (0, 1)), ((0, 1), (1, 0)))


def test_bruteforce_figure2():
    assert ov_bruteforce(FIG2) == (True, (2, 3))
    assert ov_bruteforce(FIG2_NO) == (False, None)


def test_bruteforce_trivia():
    # an all-ones B side can never be orthogonal to nonzero vectors
    all_ones = OvInstance(2, 3, ((1, 1, 1), (1, 1, 0)), ((1, 1, 1), (1, 1, 1)))
    assert ov_bruteforce(all_ones) == (False, None)
    # a zero vector in B is orthogonal to everything
    zero = OvInstance(2, 3, ((1, 1, 1), (1, 1, 0)), ((0, 0, 0), (1, 1, 1)))
    assert ov_bruteforce(zero) == (True, (1, 1))


def test_figure2_dfa_layout_and_sizes():
    a, layout = build_ov_dfa(FIG2)
    assert a.n == 98  # 2*15 + 20 + 8*6
    states, edges = expected_sizes(FIG2)
    assert (a.n, a.m) == (states, edges)
    assert a.alphabet.symbols == ("0", "1", "#")
    assert len(layout.a_cycles) == len(layout.b_cycles) == 4
    assert all(len(c) == FIG2.dim + FIG2.ell + 1 for c in layout.a_cycles + layout.b_cycles)
    # the intermediate region holds 5N nodes
    region_i = (
        len(layout.x_prime)
        + len(layout.x_dprime)
        + len(layout.a_hat_prime)
        + len(layout.y_prime)
        + len(layout.b_hat_prime)
    )
    assert region_i == 5 * FIG2.size
    assert layout.rho(1) == "00" and layout.rho(3) == "10"


def test_figure2_end_to_end():
    a, layout = build_ov_dfa(FIG2)
    assert a.deterministic and reverse(a).deterministic
    a_min, _ = minimize(a)
    assert (a_min.n, a_min.m) == (a.n, a.m)
    report = recognize(a)
    assert not report.wheeler
    assert decode_witness(layout, report.witness) == (2, 3)
    assert not recognize(to_binary_alphabet(a)).wheeler


def test_figure2_no_variant_is_wheeler():
    a, _ = build_ov_dfa(FIG2_NO)
    assert recognize(a).wheeler
    assert recognize(to_binary_alphabet(a)).wheeler


# uniform draws rarely miss an orthogonal pair once N grows, so forced-NO
# sampling is only viable on these combinations
NO_FEASIBLE = {(2, 3), (2, 4), (2, 5), (2, 6), (2, 7), (2, 8), (4, 4), (4, 5), (4, 6), (8, 8)}


def test_random_instances_end_to_end():
    rng = random.Random(101)
    combos = [(2, 3), (2, 5), (4, 4), (4, 6), (8, 4), (8, 8)]
    for trial in range(30):
        n_vec, d = combos[trial % len(combos)]
        force = ("yes", "no", "any")[trial % 3]
        if force == "no" and (n_vec, d) not in NO_FEASIBLE:
            force = "any"
        inst = random_ov_instance(n_vec, d, rng.randrange(10**6), force=force)
        found, _ = ov_bruteforce(inst)
        if force == "yes":
            assert found
        if force == "no":
            assert not found
        a, layout = build_ov_dfa(inst)
        assert (a.n, a.m) == expected_sizes(inst)
        assert a.deterministic and reverse(a).deterministic
        a_min, _ = minimize(a)
        assert (a_min.n, a_min.m) == (a.n, a.m)
        report = recognize(a)
        assert report.wheeler == (not found)
        if report.witness is not None:
            r, s = decode_witness(layout, report.witness)
            assert all(
                x * y == 0 for x, y in zip(inst.a_vectors[r - 1], inst.b_vectors[s - 1])
            )
        assert recognize(to_binary_alphabet(a)).wheeler == (not found)


def test_binary_transform_shapes():
    sigma = Alphabet(("0", "1", "#"))
    one_hash = Automaton(2, frozenset({(0, "#", 1)}), 0, frozenset({1}), sigma)
    b = to_binary_alphabet(one_hash)
    assert b.n == 4 and b.m == 3
    assert b.accepts("101") and not b.accepts("#") and not b.accepts("10")
    assert b.alphabet.symbols == ("0", "1")

    a, _ = build_ov_dfa(FIG2)
    b = to_binary_alphabet(a)
    zeros = sum(1 for _, c, _ in a.transitions if c == "0")
    ones = sum(1 for _, c, _ in a.transitions if c == "1")
    hashes = sum(1 for _, c, _ in a.transitions if c == "#")
    assert b.m == 2 * zeros + 2 * ones + 3 * hashes
    assert b.n == a.n + zeros + ones + 2 * hashes


def test_binary_transform_rejects_foreign_symbols():
    with pytest.raises(ValueError):
        to_binary_alphabet(
            Automaton(1, frozenset({(0, "a", 0)}), 0, frozenset({0}), Alphabet(("a",)))
        )


def test_random_instance_reproducible_and_validated():
    a = random_ov_instance(4, 5, 7, force="yes")
    b = random_ov_instance(4, 5, 7, force="yes")
    assert a == b
    with pytest.raises(ValueError):
        random_ov_instance(3, 5, 7)
    with pytest.raises(ValueError, match="distinct"):
        random_ov_instance(8, 2, 7)
    with pytest.raises(ValueError, match="force"):
        random_ov_instance(4, 5, 7, force="maybe")


def test_force_no_gives_up_when_impossible():
    # with d=1 and N=2, A = {0, 1} contains the zero vector: always a YES
    with pytest.raises(ValueError, match="NO instance"):
        random_ov_instance(2, 1, 5, force="no")


def test_ov_file_roundtrip():
    text = serialize_ov_instance(FIG2)
    assert parse_ov_instance(text) == FIG2
    assert text.splitlines()[0] == "4 3"
    with pytest.raises(ValueError):
        parse_ov_instance("4 3\n110\n")
    with pytest.raises(ValueError):
        parse_ov_instance("x y\n")
    with pytest.raises(ValueError, match="bad vector"):
        parse_ov_instance("1 2\n1x\n01\n")


def test_decode_rejects_unconfined_witness():
    _, layout = build_ov_dfa(FIG2)
    # a fake witness jumping between two A-side cycles
    fake = Witness(
        ((layout.a_cycles[0][0], layout.a_cycles[1][0]),
         (layout.a_cycles[1][1], layout.a_cycles[2][1])),
        "00",
    )
    with pytest.raises(ValueError):
        decode_witness(layout, fake)
    two_a_sides = Witness(
        ((layout.a_cycles[0][0], layout.a_cycles[1][0]),
         (layout.a_cycles[0][1], layout.a_cycles[1][1])),
        "00",
    )
    with pytest.raises(ValueError, match="A-side"):
        decode_witness(layout, two_a_sides)
