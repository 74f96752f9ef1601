"""Positive cycles on a resolution graph.

A cycle ``Z = sum r_i E_i`` is a tuple of integer coefficients in vertex
order.  The canonical class enters only through its pairings
``K . E_i = -E_i^2 - 2 + 2 p_a(E_i)`` (adjunction).
"""
from __future__ import annotations

from typing import NamedTuple, Sequence

import numpy as np

from .graph import DualGraph
from .lattice import definiteness, intersection_matrix, pairing

__all__ = [
    "NotApplicable",
    "NumericalCondition",
    "arithmetic_genus",
    "canonical_pairings",
    "fundamental_cycle",
    "fundamental_cycle_oracle",
    "genus_by_additivity",
    "is_rational",
    "max_genus_oracle",
    "multiplicity",
    "numerical_condition",
]

Cycle = tuple[int, ...]


class NotApplicable(ValueError):
    """The graph does not satisfy the hypotheses of the requested invariant."""


def _check_positive(z: Sequence[int], g: DualGraph) -> None:
    if len(z) != len(g):
        raise ValueError(f"cycle has {len(z)} coefficients, graph has {len(g)} vertices")
    if any(r < 0 for r in z):
        raise ValueError("cycle has a negative coefficient")
    if not any(z):
        raise ValueError("the zero cycle is not a positive cycle")


def canonical_pairings(g: DualGraph) -> tuple[int, ...]:
    return tuple(-v.weight - 2 + 2 * v.genus for v in g.vertices)


def _twice_genus_minus_two(z: Sequence[int], g: DualGraph) -> int:
    m = intersection_matrix(g)
    k = canonical_pairings(g)
    value = pairing(z, z, m) + sum(r * ki for r, ki in zip(z, k))
    if value % 2:
        raise ArithmeticError(f"Z.Z + Z.K = {value} is odd")
    return value


def arithmetic_genus(z: Sequence[int], g: DualGraph) -> int:
    """``p_a(Z) = 1 + (Z.Z + Z.K) / 2``."""
    _check_positive(z, g)
    return 1 + _twice_genus_minus_two(z, g) // 2


def genus_by_additivity(z: Sequence[int], g: DualGraph) -> int:
    """Peel off one curve at a time using
    ``p_a(Z1 + Z2) = p_a(Z1) + p_a(Z2) + Z1.Z2 - 1``.
    """
    _check_positive(z, g)
    m = intersection_matrix(g)
    rest = list(z)
    genus = 0
    while True:
        i = next(i for i, r in enumerate(rest) if r)
        rest[i] -= 1
        if not any(rest):
            return genus + g.vertices[i].genus
        genus += g.vertices[i].genus + sum(r * m[j, i] for j, r in enumerate(rest)) - 1


class NumericalCondition(NamedTuple):
    holds: bool
    pairings: tuple[int, ...]


def numerical_condition(z: Sequence[int], g: DualGraph) -> NumericalCondition:
    """Check ``Z . E_i <= 0`` for every curve."""
    m = intersection_matrix(g)
    n = len(g)
    values = tuple(sum(z[j] * m[j, i] for j in range(n)) for i in range(n))
    return NumericalCondition(all(v <= 0 for v in values), values)


def _require_negative_definite(g: DualGraph) -> None:
    if len(g) == 0 or not g.is_connected():
        raise NotApplicable("graph is not connected")
    if not definiteness(intersection_matrix(g)).is_negative_definite:
        raise NotApplicable("intersection form is not negative definite")


def fundamental_cycle(g: DualGraph, *, reverse: bool = False) -> Cycle:
    """Minimal positive cycle with ``Z . E_i <= 0`` for all ``i``.

    Starts from the reduced exceptional divisor and raises the coefficient
    of a violating curve until none is left.  ``reverse`` picks the highest
    rather than the lowest violating index; the result does not depend on
    it.
    """
    _require_negative_definite(g)
    m = intersection_matrix(g).entries
    n = len(g)
    z = [1] * n
    dots = [sum(m[i]) for i in range(n)]
    order = range(n - 1, -1, -1) if reverse else range(n)
    while True:
        i = next((i for i in order if dots[i] > 0), None)
        if i is None:
            return tuple(z)
        z[i] += 1
        for j in range(n):
            dots[j] += m[i][j]


def _grid(bound: int, dim: int) -> np.ndarray:
    """All vectors in ``[0, bound]^dim`` as rows, lexicographic."""
    if dim == 0:
        return np.zeros((1, 0), dtype=np.int64)
    return np.indices((bound + 1,) * dim, dtype=np.int64).reshape(dim, -1).T


def fundamental_cycle_oracle(g: DualGraph, bound: int) -> Cycle:
    """Brute force: the coefficient-wise minimum over all positive cycles
    with entries in ``[0, bound]`` that satisfy the numerical condition.

    Raises ``LookupError`` if no such cycle exists within the bound.
    """
    if not definiteness(intersection_matrix(g)).is_negative_definite:
        raise NotApplicable("intersection form is not negative definite")
    n = len(g)
    m = np.array(intersection_matrix(g).entries, dtype=np.int64)
    best = None
    # chunk on the leading coordinate to keep memory flat
    tail = _grid(bound, n - 1)
    for lead in range(bound + 1):
        cand = np.hstack([np.full((len(tail), 1), lead, dtype=np.int64), tail])
        cand = cand[cand.any(axis=1)]
        ok = cand[(cand @ m <= 0).all(axis=1)]
        if len(ok):
            low = ok.min(axis=0)
            best = low if best is None else np.minimum(best, low)
    if best is None:
        raise LookupError(f"no cycle with coefficients <= {bound} satisfies the numerical condition")
    result = tuple(int(x) for x in best)
    if not numerical_condition(result, g).holds:
        raise AssertionError("minimum of solutions is not a solution")
    return result


def max_genus_oracle(g: DualGraph, bound: int) -> int:
    """Largest ``p_a(Y)`` over positive cycles with coefficients ``<= bound``.

    A graph is rational exactly when this is ``<= 0`` for every bound.
    """
    n = len(g)
    m = np.array(intersection_matrix(g).entries, dtype=np.int64)
    k = np.array(canonical_pairings(g), dtype=np.int64)
    cand = _grid(bound, n)[1:]
    twice = np.einsum("ij,jk,ik->i", cand, m, cand) + cand @ k
    return int(1 + twice.max() // 2)


def is_rational(g: DualGraph) -> bool:
    """Artin's test: ``p_a(Z_num) == 0``."""
    return arithmetic_genus(fundamental_cycle(g), g) == 0


def multiplicity(g: DualGraph) -> int:
    """``-Z_num^2``, defined for rational graphs only."""
    z = fundamental_cycle(g)
    genus = arithmetic_genus(z, g)
    if genus != 0:
        raise NotApplicable(f"graph is not rational (p_a(Z_num) = {genus})")
    return -pairing(z, z, intersection_matrix(g))
