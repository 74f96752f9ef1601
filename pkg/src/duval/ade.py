"""ADE classification of (-2)-weighted dual graphs."""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING, Union

from .graph import DualGraph

if TYPE_CHECKING:
    from .quotient import FiniteSubgroup

__all__ = [
    "AdeType",
    "NotAde",
    "NotAdeReason",
    "classify",
    "expected_fundamental_cycle",
    "group_for_type",
]

_TOKEN_RE = re.compile(r"^([ADE])_?(\d+)$")


@dataclass(frozen=True, order=True)
class AdeType:
    family: str
    rank: int

    def __post_init__(self) -> None:
        bounds_ok = {
            "A": self.rank >= 1,
            "D": self.rank >= 4,
            "E": self.rank in (6, 7, 8),
        }.get(self.family)
        if bounds_ok is None:
            raise ValueError(f"unknown ADE family {self.family!r}")
        if not bounds_ok:
            raise ValueError(f"invalid ADE type {self.family}{self.rank}")

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"

    @classmethod
    def parse(cls, token: str) -> AdeType:
        m = _TOKEN_RE.match(token.strip())
        if not m:
            raise ValueError(f"not an ADE type token: {token!r}")
        return cls(m.group(1), int(m.group(2)))


def A(n: int) -> AdeType:
    return AdeType("A", n)


def D(n: int) -> AdeType:
    return AdeType("D", n)


E6 = AdeType("E", 6)
E7 = AdeType("E", 7)
E8 = AdeType("E", 8)


class NotAdeReason(enum.Enum):
    NOT_CONNECTED = "not_connected"
    WEIGHT_NOT_MINUS_TWO = "weight_not_minus_two"
    POSITIVE_GENUS_VERTEX = "positive_genus_vertex"
    MULTI_EDGE = "multi_edge"
    CONTAINS_LOOP = "contains_loop"
    VERTEX_DEGREE_EXCEEDED = "vertex_degree_exceeded"
    MULTIPLE_BRANCH_POINTS = "multiple_branch_points"
    ARM_CONDITION_FAILED = "arm_condition_failed"


@dataclass(frozen=True)
class NotAde:
    """Why a graph is not an ADE diagram.

    ``witness`` holds vertex ids for structural failures and the sorted
    T-tree parameters ``(p, q, r)`` for ``ARM_CONDITION_FAILED``.
    """

    reason: NotAdeReason
    witness: tuple = ()

    def __str__(self) -> str:
        text = self.reason.value.replace("_", " ")
        if self.witness:
            text += " (" + ", ".join(str(w) for w in self.witness) + ")"
        return text


def _find_cycle(g: DualGraph, adj: list[dict[int, int]]) -> list[int]:
    parent = {0: -1}
    stack = [0]
    while stack:
        i = stack.pop()
        for j in adj[i]:
            if j == parent[i]:
                continue
            if j in parent:
                # walk both ends up to their common ancestor
                path_i, path_j = [i], [j]
                while path_i[-1] != -1:
                    path_i.append(parent[path_i[-1]])
                while path_j[-1] != -1:
                    path_j.append(parent[path_j[-1]])
                common = next(x for x in path_i if x in set(path_j))
                left = path_i[: path_i.index(common) + 1]
                right = path_j[: path_j.index(common)]
                return left + right[::-1]
            parent[j] = i
            stack.append(j)
    raise AssertionError("no cycle found in a graph with |E| >= |V|")


def classify(g: DualGraph) -> Union[AdeType, NotAde]:
    """Structural ADE test; never consults the intersection form."""
    n = len(g)
    comps = g.components()
    if len(comps) != 1:
        stray = tuple(g.ids[i] for c in comps[1:] for i in c)
        return NotAde(NotAdeReason.NOT_CONNECTED, stray)
    bad = tuple(v.id for v in g.vertices if v.weight != -2)
    if bad:
        return NotAde(NotAdeReason.WEIGHT_NOT_MINUS_TWO, bad)
    bad = tuple(v.id for v in g.vertices if v.genus != 0)
    if bad:
        return NotAde(NotAdeReason.POSITIVE_GENUS_VERTEX, bad)
    for e in g.edges:
        if e.mult > 1:
            return NotAde(NotAdeReason.MULTI_EDGE, (e.u, e.v))

    adj = g.adjacency()
    if len(g.edges) >= n:
        return NotAde(NotAdeReason.CONTAINS_LOOP, tuple(g.ids[i] for i in _find_cycle(g, adj)))
    degree = [len(a) for a in adj]
    bad = tuple(g.ids[i] for i in range(n) if degree[i] > 3)
    if bad:
        return NotAde(NotAdeReason.VERTEX_DEGREE_EXCEEDED, bad)
    branches = [i for i in range(n) if degree[i] == 3]
    if len(branches) > 1:
        return NotAde(NotAdeReason.MULTIPLE_BRANCH_POINTS, tuple(g.ids[i] for i in branches))
    if not branches:
        return AdeType("A", n)

    center = branches[0]
    arms = []
    for start in adj[center]:
        length, prev, cur = 1, center, start
        while True:
            nxt = [j for j in adj[cur] if j != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    a, b, c = sorted(arms)
    if a == 1 and b == 1:
        return AdeType("D", c + 3)
    if a == 1 and b == 2 and c in (2, 3, 4):
        return AdeType("E", c + 4)
    p, q, r = a + 1, b + 1, c + 1
    assert Fraction(1, p) + Fraction(1, q) + Fraction(1, r) <= 1
    return NotAde(NotAdeReason.ARM_CONDITION_FAILED, (p, q, r))


def expected_fundamental_cycle(t: AdeType) -> tuple[int, ...]:
    """Table multiplicities of the fundamental cycle, in standard_diagram order."""
    n = t.rank
    if t.family == "A":
        return (1,) * n
    if t.family == "D":
        return (1,) + (2,) * (n - 3) + (1, 1)
    return {
        6: (1, 2, 3, 2, 1, 2),
        7: (2, 3, 4, 3, 2, 1, 2),
        8: (2, 4, 6, 5, 4, 3, 2, 3),
    }[n]


def group_for_type(t: AdeType) -> FiniteSubgroup:
    from .quotient import FiniteSubgroup

    if t.family == "A":
        return FiniteSubgroup.cyclic(t.rank + 1)
    if t.family == "D":
        return FiniteSubgroup.binary_dihedral(t.rank - 2)
    return {
        6: FiniteSubgroup.BINARY_TETRAHEDRAL,
        7: FiniteSubgroup.BINARY_OCTAHEDRAL,
        8: FiniteSubgroup.BINARY_ICOSAHEDRAL,
    }[t.rank]
