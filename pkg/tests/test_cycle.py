from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from duval.ade import AdeType, expected_fundamental_cycle
from duval.cycle import (
    NotApplicable,
    arithmetic_genus,
    canonical_pairings,
    fundamental_cycle,
    fundamental_cycle_oracle,
    genus_by_additivity,
    is_rational,
    max_genus_oracle,
    multiplicity,
    numerical_condition,
)
from duval.graph import DualGraph, loop_graph, parse_graph, standard_diagram, t_tree
from duval.lattice import definiteness, intersection_matrix, pairing
from duval.quotient import chain_graph

from conftest import all_ade_types
from oracles import brute_force_cycle, random_connected_graph

A1 = parse_graph("v e -2\n")


def _chain(*weights: int) -> DualGraph:
    return chain_graph([-w for w in weights])


def _random_negative_definite(rng: random.Random, max_n: int, weights=(-5, -2)) -> DualGraph:
    while True:
        g = random_connected_graph(rng, rng.randint(1, max_n), weights=weights)
        if definiteness(intersection_matrix(g)).is_negative_definite:
            return g


# ---------------------------------------------------------------- canonical pairings


def test_canonical_minus_two():
    assert canonical_pairings(A1) == (0,)


def test_canonical_minus_one():
    assert canonical_pairings(parse_graph("v e -1\n")) == (-1,)


def test_canonical_genus_one():
    assert canonical_pairings(parse_graph("v e -2 1\n")) == (2,)


# ---------------------------------------------------------------- genus


def test_genus_reduced_curve():
    assert arithmetic_genus((1,), A1) == 0


def test_genus_double_curve():
    assert arithmetic_genus((2,), A1) == -3
    assert genus_by_additivity((2,), A1) == -3


def test_genus_e8_fundamental_cycle():
    g = standard_diagram(AdeType("E", 8))
    assert arithmetic_genus((2, 4, 6, 5, 4, 3, 2, 3), g) == 0


def test_genus_additivity_base_case():
    g = parse_graph("v a -3 2\nv b -2\ne a b\n")
    assert genus_by_additivity((1, 0), g) == 2
    assert genus_by_additivity((0, 1), g) == 0


def test_genus_additivity_adjacent_pair():
    g = standard_diagram(AdeType("A", 2))
    assert genus_by_additivity((1, 1), g) == 0


def test_genus_rejects_zero_and_negative():
    g = standard_diagram(AdeType("A", 2))
    for bad in [(0, 0), (1, -1), (1,)]:
        with pytest.raises(ValueError):
            arithmetic_genus(bad, g)
        with pytest.raises(ValueError):
            genus_by_additivity(bad, g)


@settings(max_examples=300, deadline=None)
@given(st.integers(0, 2**32 - 1), st.integers(1, 6))
def test_genus_formulas_agree(seed, n):
    rng = random.Random(seed)
    g = random_connected_graph(rng, n, weights=(-5, -1), genera=(0, 1))
    z = [rng.randint(0, 4) for _ in range(n)]
    if not any(z):
        z[0] = 1
    assert arithmetic_genus(z, g) == genus_by_additivity(z, g)


@settings(max_examples=300, deadline=None)
@given(st.integers(0, 2**32 - 1), st.integers(1, 6))
def test_parity_of_twice_genus_minus_two(seed, n):
    rng = random.Random(seed)
    g = random_connected_graph(rng, n, weights=(-7, 4), genera=(0, 1, 3), extra_edge_prob=0.5)
    z = [rng.randint(-3, 5) for _ in range(n)]
    m = intersection_matrix(g)
    assert (pairing(z, z, m) + sum(a * b for a, b in zip(z, canonical_pairings(g)))) % 2 == 0


# ---------------------------------------------------------------- numerical condition


def test_numcond_a3_all_ones():
    nc = numerical_condition((1, 1, 1), standard_diagram(AdeType("A", 3)))
    assert nc.holds and nc.pairings == (-1, 0, -1)


def test_numcond_a2_single_curve_fails():
    nc = numerical_condition((1, 0), standard_diagram(AdeType("A", 2)))
    assert not nc.holds and nc.pairings[1] == 1


def test_numcond_d4():
    # e2 is the centre of D4
    nc = numerical_condition((1, 2, 1, 1), standard_diagram(AdeType("D", 4)))
    assert nc.holds and nc.pairings == (0, -1, 0, 0)


# ---------------------------------------------------------------- fundamental cycle


@pytest.mark.parametrize("n", range(1, 12))
def test_fundamental_cycle_a(n):
    assert fundamental_cycle(standard_diagram(AdeType("A", n))) == (1,) * n


def test_fundamental_cycle_e6():
    assert fundamental_cycle(standard_diagram(AdeType("E", 6))) == (1, 2, 3, 2, 1, 2)


def test_fundamental_cycle_e8():
    assert fundamental_cycle(standard_diagram(AdeType("E", 8))) == (2, 4, 6, 5, 4, 3, 2, 3)


@pytest.mark.parametrize("t", all_ade_types(30, 30), ids=str)
def test_fundamental_cycle_matches_table(t):
    g = standard_diagram(t)
    z = fundamental_cycle(g)
    assert z == expected_fundamental_cycle(t)
    assert z == fundamental_cycle(g, reverse=True)


def test_fundamental_cycle_refusals():
    with pytest.raises(NotApplicable, match="not connected"):
        fundamental_cycle(parse_graph("v a -2\nv b -2\n"))
    with pytest.raises(NotApplicable, match="negative definite"):
        fundamental_cycle(loop_graph(4))
    with pytest.raises(NotApplicable, match="negative definite"):
        fundamental_cycle(t_tree(2, 3, 6))


def test_oracle_a1():
    assert fundamental_cycle_oracle(A1, 3) == (1,)


def test_oracle_a2():
    assert fundamental_cycle_oracle(standard_diagram(AdeType("A", 2)), 2) == (1, 1)


def test_oracle_d4():
    assert fundamental_cycle_oracle(standard_diagram(AdeType("D", 4)), 3) == (1, 2, 1, 1)


def test_oracle_reports_insufficient_bound():
    with pytest.raises(LookupError):
        fundamental_cycle_oracle(standard_diagram(AdeType("E", 8)), 5)


@pytest.mark.parametrize("t", all_ade_types(6, 7), ids=str)
def test_oracle_matches_on_small_ade(t):
    g = standard_diagram(t)
    assert fundamental_cycle_oracle(g, max(expected_fundamental_cycle(t))) == fundamental_cycle(g)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_fundamental_cycle_properties_random(seed):
    g = _random_negative_definite(random.Random(seed), 5)
    z = fundamental_cycle(g)
    assert numerical_condition(z, g).holds
    assert all(r >= 1 for r in z)
    assert z == fundamental_cycle(g, reverse=True)
    assert z == brute_force_cycle(g)


# ---------------------------------------------------------------- rationality and multiplicity


@pytest.mark.parametrize("t", all_ade_types(), ids=str)
def test_ade_rational_double_points(t):
    g = standard_diagram(t)
    assert is_rational(g)
    assert multiplicity(g) == 2


def test_genus_one_vertex_not_rational():
    g = parse_graph("v e -2 1\n")
    assert fundamental_cycle(g) == (1,)
    assert arithmetic_genus((1,), g) == 1
    assert not is_rational(g)
    with pytest.raises(NotApplicable, match="not rational"):
        multiplicity(g)


def test_chain_323_rational():
    g = _chain(-3, -2, -3)
    assert fundamental_cycle_oracle(g, 3) == (1, 1, 1)
    assert is_rational(g)


def test_multiplicity_single_minus_three():
    assert multiplicity(_chain(-3)) == 3


def test_multiplicity_chain_2_3():
    g = _chain(-2, -3)
    assert fundamental_cycle_oracle(g, 4) == (1, 1)
    assert multiplicity(g) == 3


def test_elliptic_curve_not_rational():
    g = parse_graph("v e -3 1\n")
    assert not is_rational(g)


def test_max_genus_oracle_agrees_with_artin_test():
    rng = random.Random(7)
    for _ in range(40):
        g = _random_negative_definite(rng, 4, weights=(-4, -1))
        try:
            rational = is_rational(g)
        except NotApplicable:
            continue
        assert rational == (max_genus_oracle(g, 4) <= 0)
