"""Cyclic quotient resolutions and the finite subgroups of SL(2, C).

Hirzebruch-Jung chains are computed with the ceiling version of the
Euclidean algorithm, ``n/q = b1 - 1/(b2 - 1/(...))`` with every ``b_i >= 2``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import NamedTuple, Sequence

from .ade import AdeType
from .graph import DualGraph, Edge, Vertex

__all__ = [
    "CyclicType",
    "FiniteSubgroup",
    "Monomial",
    "chain_graph",
    "group_order",
    "hj_evaluate",
    "hj_expand",
    "invariant_equation",
    "mckay_type",
    "plumb",
    "render_equation",
]


@dataclass(frozen=True)
class CyclicType:
    """Type ``(n, q)``: the quotient of C^2 by ``diag(xi, xi^q)``, ``xi^n = 1``."""

    n: int
    q: int

    def __post_init__(self) -> None:
        if self.n < 2 or not 1 <= self.q < self.n:
            raise ValueError(f"cyclic type needs n >= 2 and 1 <= q < n, got ({self.n}, {self.q})")
        if gcd(self.n, self.q) != 1:
            raise ValueError(f"cyclic type ({self.n}, {self.q}) is not coprime")


def hj_expand(t: CyclicType | tuple[int, int]) -> tuple[int, ...]:
    if not isinstance(t, CyclicType):
        t = CyclicType(*t)
    n, q = t.n, t.q
    chain = []
    while q:
        b = -(-n // q)
        chain.append(b)
        n, q = q, b * q - n
    return tuple(chain)


def _check_chain(chain: Sequence[int]) -> None:
    if not chain or any(b < 2 for b in chain):
        raise ValueError(f"Hirzebruch-Jung chain needs entries >= 2, got {list(chain)}")


def hj_evaluate(chain: Sequence[int]) -> Fraction:
    _check_chain(chain)
    value = Fraction(chain[-1])
    for b in reversed(chain[:-1]):
        value = b - 1 / value
    return value


def chain_graph(chain: Sequence[int]) -> DualGraph:
    _check_chain(chain)
    ids = [f"e{i}" for i in range(1, len(chain) + 1)]
    vertices = tuple(Vertex(i, -b) for i, b in zip(ids, chain))
    edges = tuple(Edge(a, b) for a, b in zip(ids, ids[1:]))
    return DualGraph(vertices, edges, name="[" + ",".join(map(str, chain)) + "]")


def plumb(center_weight: int, arms: Sequence[Sequence[int]]) -> DualGraph:
    """Glue chains to a central curve by their first vertex.

    The centre is ``c``; vertex ``i`` of arm ``k`` is ``a{k}_{i}``, both
    counted from 1.
    """
    vertices = [Vertex("c", center_weight)]
    edges = []
    for k, arm in enumerate(arms, start=1):
        _check_chain(arm)
        ids = [f"a{k}_{i}" for i in range(1, len(arm) + 1)]
        vertices += [Vertex(i, -b) for i, b in zip(ids, arm)]
        edges.append(Edge("c", ids[0]))
        edges += [Edge(a, b) for a, b in zip(ids, ids[1:])]
    return DualGraph(tuple(vertices), tuple(edges), name="plumbing")


_GROUP_RE = re.compile(r"^(?:C(\d+)|D~(\d+)|([TOI])~)$")


@dataclass(frozen=True)
class FiniteSubgroup:
    """Conjugacy class of a finite subgroup of SL(2, C).

    ``kind`` is one of ``C`` (cyclic of order ``n``), ``D~`` (binary
    dihedral over the dihedral group of order ``2n``) and ``T~``, ``O~``,
    ``I~`` (binary polyhedral, ``n`` unused).
    """

    kind: str
    n: int = 0

    def __post_init__(self) -> None:
        if self.kind == "C":
            ok = self.n >= 1
        elif self.kind == "D~":
            ok = self.n >= 2
        elif self.kind in ("T~", "O~", "I~"):
            ok = self.n == 0
        else:
            raise ValueError(f"unknown subgroup kind {self.kind!r}")
        if not ok:
            raise ValueError(f"invalid subgroup {self.kind}{self.n}")

    def __str__(self) -> str:
        return f"{self.kind}{self.n}" if self.kind in ("C", "D~") else self.kind

    @classmethod
    def cyclic(cls, n: int) -> FiniteSubgroup:
        return cls("C", n)

    @classmethod
    def binary_dihedral(cls, n: int) -> FiniteSubgroup:
        return cls("D~", n)

    @classmethod
    def parse(cls, token: str) -> FiniteSubgroup:
        m = _GROUP_RE.match(token.strip())
        if not m:
            raise ValueError(f"not a subgroup token: {token!r} (use C<n>, D~<n>, T~, O~, I~)")
        if m.group(1):
            return cls("C", int(m.group(1)))
        if m.group(2):
            return cls("D~", int(m.group(2)))
        return cls(m.group(3) + "~")


FiniteSubgroup.BINARY_TETRAHEDRAL = FiniteSubgroup("T~")  # type: ignore[attr-defined]
FiniteSubgroup.BINARY_OCTAHEDRAL = FiniteSubgroup("O~")  # type: ignore[attr-defined]
FiniteSubgroup.BINARY_ICOSAHEDRAL = FiniteSubgroup("I~")  # type: ignore[attr-defined]


def _require_singular(g: FiniteSubgroup) -> None:
    if g.kind == "C" and g.n < 2:
        raise ValueError("the trivial group gives a smooth quotient")


def mckay_type(g: FiniteSubgroup) -> AdeType:
    _require_singular(g)
    if g.kind == "C":
        return AdeType("A", g.n - 1)
    if g.kind == "D~":
        return AdeType("D", g.n + 2)
    return AdeType("E", {"T~": 6, "O~": 7, "I~": 8}[g.kind])


def group_order(g: FiniteSubgroup) -> int:
    if g.kind == "C":
        return g.n
    if g.kind == "D~":
        return 4 * g.n
    return {"T~": 24, "O~": 48, "I~": 120}[g.kind]


class Monomial(NamedTuple):
    coefficient: int
    exponents: tuple[int, int, int]


def invariant_equation(g: FiniteSubgroup) -> tuple[Monomial, ...]:
    """The hypersurface ``f(x, y, z) = 0`` cut out by ``C^2 / G``."""
    _require_singular(g)
    if g.kind == "C":
        terms = [(g.n, 0, 0), (0, 2, 0), (0, 0, 2)]
    elif g.kind == "D~":
        terms = [(g.n + 1, 0, 0), (1, 2, 0), (0, 0, 2)]
    else:
        terms = {
            "T~": [(2, 0, 0), (0, 3, 0), (0, 0, 4)],
            "O~": [(2, 0, 0), (0, 3, 0), (0, 1, 3)],
            "I~": [(2, 0, 0), (0, 3, 0), (0, 0, 5)],
        }[g.kind]
    return tuple(Monomial(1, e) for e in terms)


def render_equation(monomials: Sequence[Monomial]) -> str:
    """``x^2+y^3+z^5`` style text; unit exponents and coefficients omitted."""
    parts = []
    for coeff, exps in monomials:
        body = "".join(
            var if e == 1 else f"{var}^{e}" for var, e in zip("xyz", exps) if e
        )
        if coeff != 1 or not body:
            body = f"{coeff}{body}"
        parts.append(body)
    return "+".join(parts)
