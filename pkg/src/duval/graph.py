"""Weighted dual graphs of exceptional curves.

A dual graph has one vertex per exceptional curve ``E_i`` carrying the
self-intersection ``E_i^2`` (its *weight*) and the arithmetic genus of the
curve.  Edges record the intersection numbers ``E_i . E_j`` for ``i != j``
as multiplicities.  Vertex order is significant: every vector and matrix
derived from a graph is indexed in this order.

Graph file format (one record per line)::

    # comment
    v <id> <weight> [<genus>]
    e <id1> <id2> [<mult>]
"""
from __future__ import annotations

import re
from collections import defaultdict
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Iterable, NamedTuple

if TYPE_CHECKING:
    from .ade import AdeType

__all__ = [
    "DualGraph",
    "Edge",
    "GraphError",
    "GraphParseError",
    "Vertex",
    "cross_graph",
    "loop_graph",
    "parse_graph",
    "render",
    "standard_diagram",
    "t_tree",
    "to_dot",
]

_ID_RE = re.compile(r"^[A-Za-z0-9_]+$")
_INT_RE = re.compile(r"^[+-]?\d+$")


class GraphError(ValueError):
    """A graph violates a structural invariant."""


class GraphParseError(GraphError):
    def __init__(self, line: int, message: str) -> None:
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.message = message


class Vertex(NamedTuple):
    id: str
    weight: int
    genus: int = 0


class Edge(NamedTuple):
    u: str
    v: str
    mult: int = 1


@dataclass(frozen=True)
class DualGraph:
    """Immutable weighted multigraph.

    Edges are canonicalised on construction: repeated pairs are merged by
    summing multiplicities, each pair is oriented by vertex order and the
    edge list is sorted by vertex order.  ``name`` is a display label and
    takes no part in equality.
    """

    vertices: tuple[Vertex, ...] = ()
    edges: tuple[Edge, ...] = ()
    name: str = field(default="G", compare=False)

    def __post_init__(self) -> None:
        vertices = tuple(Vertex(*v) for v in self.vertices)
        index: dict[str, int] = {}
        for i, v in enumerate(vertices):
            if not isinstance(v.id, str) or not _ID_RE.match(v.id):
                raise GraphError(f"invalid vertex id {v.id!r}")
            if v.id in index:
                raise GraphError(f"duplicate vertex id {v.id!r}")
            if v.genus < 0:
                raise GraphError(f"negative genus on vertex {v.id!r}")
            index[v.id] = i

        mult: dict[tuple[int, int], int] = defaultdict(int)
        for e in self.edges:
            e = Edge(*e)
            for end in (e.u, e.v):
                if end not in index:
                    raise GraphError(f"edge references unknown vertex {end!r}")
            if e.u == e.v:
                raise GraphError(f"self-loop on vertex {e.u!r}")
            if e.mult < 1:
                raise GraphError(f"edge {e.u}-{e.v} has non-positive multiplicity")
            i, j = sorted((index[e.u], index[e.v]))
            mult[i, j] += e.mult

        edges = tuple(
            Edge(vertices[i].id, vertices[j].id, m) for (i, j), m in sorted(mult.items())
        )
        if not self.name:
            raise GraphError("graph name must be nonempty")
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "_index", index)

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def ids(self) -> tuple[str, ...]:
        return tuple(v.id for v in self.vertices)

    @property
    def weights(self) -> tuple[int, ...]:
        return tuple(v.weight for v in self.vertices)

    @property
    def genera(self) -> tuple[int, ...]:
        return tuple(v.genus for v in self.vertices)

    def index(self, vertex_id: str) -> int:
        return self._index[vertex_id]  # type: ignore[attr-defined]

    def multiplicity(self, u: str, v: str) -> int:
        for e in self.edges:
            if {e.u, e.v} == {u, v} and u != v:
                return e.mult
        return 0

    def adjacency(self) -> list[dict[int, int]]:
        """Per-vertex map ``neighbour index -> edge multiplicity``."""
        adj: list[dict[int, int]] = [{} for _ in self.vertices]
        for e in self.edges:
            i, j = self.index(e.u), self.index(e.v)
            adj[i][j] = e.mult
            adj[j][i] = e.mult
        return adj

    def components(self) -> list[list[int]]:
        adj = self.adjacency()
        seen: set[int] = set()
        comps = []
        for start in range(len(self)):
            if start in seen:
                continue
            comp, stack = [], [start]
            seen.add(start)
            while stack:
                i = stack.pop()
                comp.append(i)
                for j in adj[i]:
                    if j not in seen:
                        seen.add(j)
                        stack.append(j)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) == 1

    def with_name(self, name: str) -> DualGraph:
        return DualGraph(self.vertices, self.edges, name=name)


def parse_graph(text: str, name: str = "G") -> DualGraph:
    """Parse graph-file content.  Errors carry the offending line number."""
    vertices: list[Vertex] = []
    seen: dict[str, int] = {}
    pending: list[tuple[int, str, str, int]] = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        kind, args = tokens[0], tokens[1:]
        if kind == "v":
            if len(args) not in (2, 3):
                raise GraphParseError(lineno, "expected 'v <id> <weight> [<genus>]'")
            vid = args[0]
            if not _ID_RE.match(vid):
                raise GraphParseError(lineno, f"invalid vertex id {vid!r}")
            if not all(_INT_RE.match(a) for a in args[1:]):
                raise GraphParseError(lineno, "weight and genus must be integers")
            genus = int(args[2]) if len(args) == 3 else 0
            if genus < 0:
                raise GraphParseError(lineno, "genus must be nonnegative")
            if vid in seen:
                raise GraphParseError(lineno, f"duplicate vertex id {vid!r} (first on line {seen[vid]})")
            seen[vid] = lineno
            vertices.append(Vertex(vid, int(args[1]), genus))
        elif kind == "e":
            if len(args) not in (2, 3):
                raise GraphParseError(lineno, "expected 'e <id1> <id2> [<mult>]'")
            if len(args) == 3 and not (_INT_RE.match(args[2]) and int(args[2]) >= 1):
                raise GraphParseError(lineno, "edge multiplicity must be a positive integer")
            u, v = args[0], args[1]
            if u == v:
                raise GraphParseError(lineno, f"self-loop on vertex {u!r}")
            pending.append((lineno, u, v, int(args[2]) if len(args) == 3 else 1))
        else:
            raise GraphParseError(lineno, f"unknown record type {kind!r}")

    for lineno, u, v, _ in pending:
        for end in (u, v):
            if end not in seen:
                raise GraphParseError(lineno, f"edge references unknown vertex {end!r}")

    return DualGraph(tuple(vertices), tuple(Edge(u, v, m) for _, u, v, m in pending), name=name)


def render(g: DualGraph) -> str:
    """Canonical graph-file text; ``parse_graph(render(g)) == g``."""
    lines = []
    for v in g.vertices:
        lines.append(f"v {v.id} {v.weight}" + (f" {v.genus}" if v.genus else ""))
    for e in g.edges:
        lines.append(f"e {e.u} {e.v}" + (f" {e.mult}" if e.mult != 1 else ""))
    return "".join(line + "\n" for line in lines)


def to_dot(g: DualGraph) -> str:
    if not g.vertices:
        return "graph G { }\n"
    out = ["graph G {"]
    for v in g.vertices:
        label = f"{v.id} ({v.weight})" if not v.genus else f"{v.id} ({v.weight}, g={v.genus})"
        out.append(f'  {v.id} [label="{label}"];')
    for e in g.edges:
        out.extend([f"  {e.u} -- {e.v};"] * e.mult)
    out.append("}")
    return "\n".join(out) + "\n"


def _path(ids: list[str], weight: int = -2) -> tuple[list[Vertex], list[Edge]]:
    vertices = [Vertex(i, weight) for i in ids]
    edges = [Edge(a, b) for a, b in zip(ids, ids[1:])]
    return vertices, edges


def standard_diagram(t: AdeType) -> DualGraph:
    """The ADE diagram of type ``t`` with all weights -2.

    Vertex ids are ``e1..en``.  The long chain comes first; D_n carries its
    fork on the second chain vertex, E_6/E_7/E_8 carry the branch on the
    third chain vertex, and the extra vertex is always listed last.
    """
    family, n = t.family, t.rank
    if family == "A":
        if n < 1:
            raise GraphError("A_n needs n >= 1")
        vertices, edges = _path([f"e{i}" for i in range(1, n + 1)])
        return DualGraph(tuple(vertices), tuple(edges), name=str(t))
    if family == "D":
        if n < 4:
            raise GraphError("D_n needs n >= 4")
        attach = "e2"
    elif family == "E":
        if n not in (6, 7, 8):
            raise GraphError("E_n needs n in {6, 7, 8}")
        attach = "e3"
    else:
        raise GraphError(f"unknown family {family!r}")
    vertices, edges = _path([f"e{i}" for i in range(1, n)])
    vertices.append(Vertex(f"e{n}", -2))
    edges.append(Edge(attach, f"e{n}"))
    return DualGraph(tuple(vertices), tuple(edges), name=str(t))


def t_tree(p: int, q: int, r: int) -> DualGraph:
    """The T-shaped tree with arms of ``p-1``, ``q-1`` and ``r-1`` vertices.

    Each arm is listed from its tip inwards and the centre ``x`` comes last,
    so symmetric elimination in vertex order reduces every arm before the
    centre.
    """
    if min(p, q, r) < 1:
        raise GraphError("T-tree arm parameters must be >= 1")
    vertices: list[Vertex] = []
    edges: list[Edge] = []
    for label, length in (("p", p), ("q", q), ("r", r)):
        ids = [f"{label}{i}" for i in range(length - 1, 0, -1)]
        arm_vertices, arm_edges = _path(ids)
        vertices += arm_vertices
        edges += arm_edges
        if ids:
            edges.append(Edge(ids[-1], "x"))
    vertices.append(Vertex("x", -2))
    return DualGraph(tuple(vertices), tuple(edges), name=f"T{p},{q},{r}")


def loop_graph(n: int) -> DualGraph:
    """A cycle of ``n`` (-2)-curves; ``n == 2`` is a doubled edge."""
    if n < 2:
        raise GraphError("loop needs n >= 2")
    ids = [f"e{i}" for i in range(1, n + 1)]
    vertices, edges = _path(ids)
    edges.append(Edge(ids[-1], ids[0]))
    return DualGraph(tuple(vertices), tuple(edges), name=f"loop{n}")


def cross_graph(n: int) -> DualGraph:
    """A chain ``e1..en`` with leaves ``f1, f2`` on ``e1`` and ``f3, f4`` on ``en``."""
    if n < 1:
        raise GraphError("cross needs n >= 1")
    ids = [f"e{i}" for i in range(1, n + 1)]
    vertices, edges = _path(ids)
    for k, hub in ((1, ids[0]), (2, ids[0]), (3, ids[-1]), (4, ids[-1])):
        vertices.append(Vertex(f"f{k}", -2))
        edges.append(Edge(hub, f"f{k}"))
    return DualGraph(tuple(vertices), tuple(edges), name=f"cross{n}")


def from_weights(weights: Iterable[int], edges: Iterable[tuple[int, int]] = (), name: str = "G") -> DualGraph:
    """Build a graph on ids ``e1..en`` from a weight list and index pairs."""
    weights = list(weights)
    vertices = tuple(Vertex(f"e{i + 1}", w) for i, w in enumerate(weights))
    return DualGraph(vertices, tuple(Edge(f"e{i + 1}", f"e{j + 1}") for i, j in edges), name=name)
