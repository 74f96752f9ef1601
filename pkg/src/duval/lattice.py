"""Exact intersection forms: construction, definiteness and congruence.

Everything here is integer or rational arithmetic.  The workhorse is a
fraction-free (Bareiss) symmetric elimination that also carries the
change-of-basis vectors, so that every verdict comes with an integer
witness that can be checked by a single pairing.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence, Union

from .graph import DualGraph

__all__ = [
    "Definiteness",
    "DefinitenessKind",
    "IntersectionForm",
    "congruence_diagonal",
    "definiteness",
    "determinant",
    "intersection_matrix",
    "pairing",
]


@dataclass(frozen=True)
class IntersectionForm:
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        entries = tuple(tuple(int(x) for x in row) for row in self.entries)
        n = len(entries)
        if any(len(row) != n for row in entries):
            raise ValueError("intersection form must be square")
        for i in range(n):
            for j in range(i):
                if entries[i][j] != entries[j][i]:
                    raise ValueError(f"form not symmetric at ({i}, {j})")
        object.__setattr__(self, "entries", entries)

    @property
    def n(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i][j]

    def __neg__(self) -> IntersectionForm:
        return IntersectionForm(tuple(tuple(-x for x in row) for row in self.entries))

    def tolist(self) -> list[list[int]]:
        return [list(row) for row in self.entries]


FormLike = Union[IntersectionForm, Sequence[Sequence[int]]]


def _form(m: FormLike) -> IntersectionForm:
    return m if isinstance(m, IntersectionForm) else IntersectionForm(tuple(map(tuple, m)))


def intersection_matrix(g: DualGraph) -> IntersectionForm:
    """Weights on the diagonal, edge multiplicities off it."""
    n = len(g)
    rows = [[0] * n for _ in range(n)]
    for i, w in enumerate(g.weights):
        rows[i][i] = w
    for e in g.edges:
        i, j = g.index(e.u), g.index(e.v)
        rows[i][j] = rows[j][i] = e.mult
    return IntersectionForm(tuple(map(tuple, rows)))


def pairing(a: Sequence[int], b: Sequence[int], m: FormLike) -> int:
    """``a^T M b``."""
    m = _form(m)
    if len(a) != m.n or len(b) != m.n:
        raise ValueError(f"vector dimension mismatch: {len(a)}, {len(b)} vs form of rank {m.n}")
    total = 0
    for i, ai in enumerate(a):
        if ai:
            row = m.entries[i]
            total += ai * sum(row[j] * bj for j, bj in enumerate(b) if bj)
    return total


class DefinitenessKind(enum.Enum):
    NEGATIVE_DEFINITE = "negative_definite"
    DEGENERATE = "negative_semidefinite_degenerate"
    INDEFINITE = "indefinite"


@dataclass(frozen=True)
class Definiteness:
    """Classification of a form together with a checkable witness.

    ``witness`` is ``None`` for negative definite forms, a nonzero null
    vector of the radical for degenerate ones and a vector of positive norm
    for indefinite ones.
    """

    kind: DefinitenessKind
    witness: tuple[int, ...] | None = None

    @property
    def is_negative_definite(self) -> bool:
        return self.kind is DefinitenessKind.NEGATIVE_DEFINITE

    def describe(self) -> str:
        return {
            DefinitenessKind.NEGATIVE_DEFINITE: "negative definite",
            DefinitenessKind.DEGENERATE: "negative semidefinite (degenerate)",
            DefinitenessKind.INDEFINITE: "indefinite",
        }[self.kind]


@dataclass
class _Elimination:
    diagonal: list[Fraction]
    pivot_vectors: list[tuple[int, ...] | None]
    radical: list[tuple[int, ...]]
    det: int


def _exact_div(a: int, b: int) -> int:
    q, r = divmod(a, b)
    if r:
        raise ArithmeticError("Bareiss step was not exact")
    return q


def _eliminate(m: IntersectionForm) -> _Elimination:
    # a[i][j] for active i, j holds det_K * S_ij where S is the Schur complement
    # of the eliminated block K and det_K is `prev`.  basis[j] is the integer
    # vector det_K * (e_j projected off span K), so basis[j]^T M basis[j] equals
    # det_K**2 * S_jj.
    n = m.n
    a = [list(row) for row in m.entries]
    basis = [[int(i == j) for i in range(n)] for j in range(n)]
    prev = 1
    diagonal: list[Fraction] = [Fraction(0)] * n
    pivot_vectors: list[tuple[int, ...] | None] = [None] * n
    radical: list[tuple[int, ...]] = []

    for k in range(n):
        if a[k][k] == 0:
            j = next((j for j in range(k + 1, n) if a[k][j] != 0), None)
            if j is None:
                radical.append(tuple(basis[k]))
                continue
            # e_k -> e_k + t e_j is unimodular and makes the pivot nonzero.
            t = 1 if 2 * a[k][j] + a[j][j] != 0 else -1
            for i in range(k, n):
                a[k][i] += t * a[j][i]
            for i in range(k, n):
                a[i][k] += t * a[i][j]
            for i in range(k + 1, n):
                a[k][i] = a[i][k]
            basis[k] = [x + t * y for x, y in zip(basis[k], basis[j])]

        p = a[k][k]
        diagonal[k] = Fraction(p, prev)
        pivot_vectors[k] = tuple(basis[k])
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = _exact_div(p * a[i][j] - a[i][k] * a[k][j], prev)
        for j in range(k + 1, n):
            basis[j] = [_exact_div(p * x - a[k][j] * y, prev) for x, y in zip(basis[j], basis[k])]
        prev = p

    return _Elimination(diagonal, pivot_vectors, radical, 0 if radical else prev)


def _primitive(v: Sequence[int]) -> tuple[int, ...]:
    g = 0
    for x in v:
        g = gcd(g, x)
    v = [x // g for x in v] if g > 1 else list(v)
    first = next(x for x in v if x)
    return tuple(-x for x in v) if first < 0 else tuple(v)


def definiteness(m: FormLike) -> Definiteness:
    """Decide negative definiteness exactly.

    Positive semidefinite and mixed-signature forms are both reported as
    indefinite; a form is degenerate only when it is negative semidefinite
    with nontrivial radical.
    """
    m = _form(m)
    elim = _eliminate(m)
    for d, v in zip(elim.diagonal, elim.pivot_vectors):
        if d > 0:
            assert v is not None
            return Definiteness(DefinitenessKind.INDEFINITE, _primitive(v))
    if elim.radical:
        return Definiteness(DefinitenessKind.DEGENERATE, _primitive(elim.radical[0]))
    return Definiteness(DefinitenessKind.NEGATIVE_DEFINITE)


def congruence_diagonal(m: FormLike) -> tuple[Fraction, ...]:
    """Diagonal of a matrix congruent to ``m`` over the rationals.

    Entries appear in elimination order, which is vertex order; radical
    directions show up as zeros.
    """
    return tuple(_eliminate(_form(m)).diagonal)


def determinant(m: FormLike) -> int:
    return _eliminate(_form(m)).det
