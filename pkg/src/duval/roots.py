"""Simply-laced root systems in simple-root coordinates.

A root is an integer vector ``beta`` with respect to the simple roots; the
Killing form is ``<u, v> = u^T C v`` for the Cartan matrix ``C``, and the
simple reflection ``s_i`` sends ``beta`` to ``beta - (C beta)_i e_i``.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .ade import AdeType
from .graph import standard_diagram
from .lattice import IntersectionForm, definiteness, intersection_matrix, pairing

__all__ = [
    "RootSystem",
    "angle_census",
    "canonical_direction",
    "cartan_matrix",
    "generate_roots",
    "highest_root",
    "positive_and_simple",
]

# E8 has 240 roots; anything beyond twice that means the input was not ADE.
MAX_ROOTS = 480

Root = tuple[int, ...]


def cartan_matrix(t: AdeType) -> IntersectionForm:
    return -intersection_matrix(standard_diagram(t))


@dataclass(frozen=True)
class RootSystem:
    cartan: IntersectionForm
    roots: tuple[Root, ...]

    @property
    def rank(self) -> int:
        return self.cartan.n

    @property
    def simple_basis(self) -> tuple[Root, ...]:
        n = self.rank
        return tuple(tuple(int(i == j) for i in range(n)) for j in range(n))

    def __len__(self) -> int:
        return len(self.roots)

    def __contains__(self, beta: object) -> bool:
        return beta in self._set  # type: ignore[attr-defined]

    def __post_init__(self) -> None:
        object.__setattr__(self, "_set", frozenset(self.roots))


def _validate_cartan(c: IntersectionForm) -> None:
    n = c.n
    for i in range(n):
        if c[i, i] != 2:
            raise ValueError("Cartan matrix must have 2 on the diagonal")
        for j in range(n):
            if i != j and c[i, j] not in (0, -1):
                raise ValueError("simply-laced Cartan matrix needs off-diagonal entries in {0, -1}")
    if not definiteness(-c).is_negative_definite:
        raise ValueError("Cartan matrix is not positive definite; the root system would be infinite")


def reflect(beta: Sequence[int], i: int, c: IntersectionForm) -> Root:
    coeff = sum(c[i, j] * b for j, b in enumerate(beta))
    out = list(beta)
    out[i] -= coeff
    return tuple(out)


def generate_roots(c: IntersectionForm | Sequence[Sequence[int]]) -> RootSystem:
    """Close the simple roots under all simple reflections."""
    if not isinstance(c, IntersectionForm):
        c = IntersectionForm(tuple(map(tuple, c)))
    _validate_cartan(c)
    n = c.n
    simple = [tuple(int(i == j) for i in range(n)) for j in range(n)]
    seen = set(simple)
    work = list(simple)
    while work:
        beta = work.pop()
        for i in range(n):
            image = reflect(beta, i, c)
            if image not in seen:
                if len(seen) >= MAX_ROOTS:
                    raise RuntimeError(f"root closure exceeded {MAX_ROOTS} roots")
                seen.add(image)
                work.append(image)
    return RootSystem(c, tuple(sorted(seen, reverse=True)))


def _is_positive(beta: Root) -> bool:
    return all(b >= 0 for b in beta) and any(beta)


def highest_root(rs: RootSystem) -> Root:
    positives = [b for b in rs.roots if _is_positive(b)]
    maximal = [
        b for b in positives
        if not any(o != b and all(x >= y for x, y in zip(o, b)) for o in positives)
    ]
    if len(maximal) != 1:
        raise ValueError(f"expected a unique maximal root, found {len(maximal)}")
    return maximal[0]


def angle_census(rs: RootSystem, c: IntersectionForm | None = None) -> Counter:
    """Histogram of ``4 cos^2`` of the angle over unordered pairs of distinct roots."""
    c = rs.cartan if c is None else c
    norms = {b: pairing(b, b, c) for b in rs.roots}
    census: Counter = Counter()
    roots = rs.roots
    for i, a in enumerate(roots):
        for b in roots[i + 1:]:
            ab = pairing(a, b, c)
            value = Fraction(4 * ab * ab, norms[a] * norms[b])
            if value.denominator != 1 or not 0 <= value <= 4:
                raise ArithmeticError(f"4cos^2 angle {value} between {a} and {b} is not in 0..4")
            census[int(value)] += 1
    return census


def canonical_direction(n: int) -> tuple[int, ...]:
    return tuple(range(n, 0, -1))


def positive_and_simple(
    rs: RootSystem, direction: Sequence[int] | None = None
) -> tuple[tuple[Root, ...], tuple[Root, ...]]:
    """Split off the roots positive on ``direction`` and their indecomposables."""
    if direction is None:
        direction = canonical_direction(rs.rank)
    if len(direction) != rs.rank:
        raise ValueError("direction has the wrong dimension")
    positives = []
    for b in rs.roots:
        value = sum(x * y for x, y in zip(b, direction))
        if value == 0:
            raise ValueError(f"direction {tuple(direction)} is orthogonal to root {b}")
        if value > 0:
            positives.append(b)
    pos_set = set(positives)
    simples = [
        b for b in positives
        if not any(
            tuple(x - y for x, y in zip(b, a)) in pos_set for a in positives if a != b
        )
    ]
    return tuple(positives), tuple(simples)
