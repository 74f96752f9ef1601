"""Acceptance criteria, one test each.

Run alone with ``python3 tests/test_acceptance.py``; the pytest summary ends
with one PASS/FAIL line per criterion.
"""
from __future__ import annotations

import random
import time
from collections import Counter
from fractions import Fraction
from math import gcd

from duval.ade import AdeType, classify, expected_fundamental_cycle
from duval.cycle import (
    arithmetic_genus,
    fundamental_cycle,
    fundamental_cycle_oracle,
    genus_by_additivity,
    is_rational,
    multiplicity,
)
from duval.graph import cross_graph, loop_graph, parse_graph, standard_diagram, t_tree
from duval.lattice import DefinitenessKind, definiteness, determinant, intersection_matrix, pairing
from duval.quotient import FiniteSubgroup, chain_graph, hj_evaluate, hj_expand, mckay_type, plumb
from duval.roots import angle_census, cartan_matrix, generate_roots, highest_root

from conftest import all_ade_types
from make_golden import GOLDEN, cases, run
from oracles import brute_force_cycle, count_vectors_of_norm, random_connected_graph

# Z_num multiplicities read off the numbered diagrams, chain first, branch vertex last.
MCKAY_TABLE = {
    **{f"C{n}": (1,) * (n - 1) for n in range(2, 10)},
    **{f"D~{n}": (1,) + (2,) * (n - 1) + (1, 1) for n in range(2, 7)},
    "T~": (1, 2, 3, 2, 1, 2),
    "O~": (2, 3, 4, 3, 2, 1, 2),
    "I~": (2, 4, 6, 5, 4, 3, 2, 3),
}


def test_01_mckay_table_golden_suite():
    start = time.perf_counter()
    for token, table in MCKAY_TABLE.items():
        t = mckay_type(FiniteSubgroup.parse(token))
        g = standard_diagram(t)
        m = intersection_matrix(g)
        assert definiteness(m).is_negative_definite, token
        assert classify(g) == t, token
        z = fundamental_cycle(g)
        assert z == table, token
        assert arithmetic_genus(z, g) == 0, token
        assert -pairing(z, z, m) == 2, token
    assert time.perf_counter() - start < 1.0


def test_02_icosahedral_assembly():
    start = time.perf_counter()
    g = plumb(-2, [hj_expand((5, 4)), hj_expand((3, 2)), hj_expand((2, 1))])
    assert classify(g) == AdeType("E", 8)
    assert Counter(fundamental_cycle(g)) == Counter([2, 4, 6, 3, 5, 4, 3, 2])
    assert time.perf_counter() - start < 0.1


def test_03_loop_and_cross_witnesses():
    for n in range(2, 13):
        m = intersection_matrix(loop_graph(n))
        d = definiteness(m)
        assert d.kind is DefinitenessKind.DEGENERATE
        ones = (1,) * n
        assert d.witness == ones and pairing(ones, ones, m) == 0
    for n in range(1, 9):
        m = intersection_matrix(cross_graph(n))
        d = definiteness(m)
        assert d.kind is DefinitenessKind.DEGENERATE
        w = (2,) * n + (1, 1, 1, 1)
        assert d.witness == w and pairing(w, w, m) == 0


def test_04_t_tree_boundary():
    start = time.perf_counter()
    checked = 0
    for p in range(1, 8):
        for q in range(p, 8):
            for r in range(q, 8):
                nd = definiteness(intersection_matrix(t_tree(p, q, r))).is_negative_definite
                assert nd == (Fraction(1, p) + Fraction(1, q) + Fraction(1, r) > 1), (p, q, r)
                checked += 1
    assert checked == 84
    assert time.perf_counter() - start < 1.0


def test_05_oracle_equivalence():
    for t in all_ade_types():
        g = standard_diagram(t)
        assert fundamental_cycle(g) == fundamental_cycle_oracle(g, 6), t
    rng = random.Random(20240501)
    found = 0
    while found < 200:
        g = random_connected_graph(rng, rng.randint(1, 5), weights=(-5, -2))
        if not definiteness(intersection_matrix(g)).is_negative_definite:
            continue
        assert fundamental_cycle(g) == brute_force_cycle(g)
        found += 1


def test_06_genus_agreement():
    rng = random.Random(6)
    for _ in range(1000):
        n = rng.randint(1, 6)
        g = random_connected_graph(rng, n, weights=(-6, 1), genera=(0, 0, 1, 2), extra_edge_prob=0.3)
        z = [rng.randint(0, 5) for _ in range(n)]
        if not any(z):
            z[rng.randrange(n)] = rng.randint(1, 5)
        # arithmetic_genus raises ArithmeticError if Z.Z + Z.K is odd
        assert arithmetic_genus(z, g) == genus_by_additivity(z, g)


def test_07_hj_round_trips():
    start = time.perf_counter()
    for n in range(2, 201):
        for q in range(1, n):
            if gcd(n, q) == 1:
                assert hj_evaluate(hj_expand((n, q))) == Fraction(n, q)
    for n in range(2, 31):
        chain = hj_expand((n, n - 1))
        assert chain == (2,) * (n - 1)
        assert classify(chain_graph(chain)) == AdeType("A", n - 1)
    assert time.perf_counter() - start < 1.0


def _expected_root_count(t: AdeType) -> int:
    n = t.rank
    return {"A": n * (n + 1), "D": 2 * n * (n - 1)}.get(t.family) or {6: 72, 7: 126, 8: 240}[n]


def test_08_root_systems():
    dets = {"A": lambda n: n + 1, "D": lambda n: 4, "E": lambda n: {6: 3, 7: 2, 8: 1}[n]}
    for t in all_ade_types():
        c = cartan_matrix(t)
        rs = generate_roots(c)
        assert len(rs) == _expected_root_count(t) == count_vectors_of_norm(c.tolist(), 2), t
        assert highest_root(rs) == expected_fundamental_cycle(t), t
        assert determinant(c) == dets[t.family](t.rank), t
        assert set(angle_census(rs, c)) <= {0, 1, 2, 3, 4}, t
    start = time.perf_counter()
    assert len(generate_roots(cartan_matrix(AdeType("E", 8)))) == 240
    assert time.perf_counter() - start < 2.0


def test_09_a1_conical_double_point():
    g = parse_graph("v E -2\n")
    assert fundamental_cycle(g) == (1,)
    assert arithmetic_genus((1,), g) == 0
    assert is_rational(g)
    assert multiplicity(g) == 2


def test_10_cli_golden_files():
    checked = 0
    for name, argv, stdin in cases():
        code, out = run(argv, stdin)
        assert code == 0, argv
        assert out == (GOLDEN / name).read_text(encoding="utf-8"), name
        checked += 1
    assert {argv[0] for _, argv, _ in cases()} == {"gen", "check", "hj", "mckay", "roots"}
    assert checked == len(list(GOLDEN.glob("*.json")))


if __name__ == "__main__":
    import sys

    import pytest

    sys.exit(pytest.main([__file__, "-q"]))
