"""Seifert circles, the signed Seifert graph, O+, sl, and homogeneity.

Oriented smoothing at a crossing joins ``under_in`` to ``over_out`` and
``over_in`` to ``under_out``; Seifert circles are the orbits of arcs under
these joins.  Circles are numbered by their smallest contained arc id, with
one isolated vertex appended per free loop.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import DSU, Diagram, check_valid, counts
from .errors import InvariantError, LoopEdgeError


@dataclass(frozen=True)
class GraphEdge:
    u: int
    v: int
    sign: int
    crossing_id: int


@dataclass(frozen=True)
class SignedMultigraph:
    vertex_count: int
    edges: tuple[GraphEdge, ...]

    def __post_init__(self):
        for e in self.edges:
            if e.u == e.v:
                raise InvariantError(f"loop edge at vertex {e.u} (crossing {e.crossing_id})")
            if not (0 <= e.u < self.vertex_count and 0 <= e.v < self.vertex_count):
                raise InvariantError(f"edge endpoint out of range: {e}")

    def multiplicity(self) -> dict[tuple[int, int], int]:
        mult: dict[tuple[int, int], int] = {}
        for e in self.edges:
            key = (min(e.u, e.v), max(e.u, e.v))
            mult[key] = mult.get(key, 0) + 1
        return mult

    def sign_subgraph(self, sign: int) -> "SignedMultigraph":
        return SignedMultigraph(self.vertex_count, tuple(e for e in self.edges if e.sign == sign))

    def to_edge_list(self) -> str:
        lines = [f"vertices:{self.vertex_count}"]
        for e in self.edges:
            lines.append(f"{e.u} {e.v} {e.sign:+d} {e.crossing_id}")
        return "\n".join(lines) + "\n"


def graph_from_edge_list(text: str) -> SignedMultigraph:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.strip().startswith("#")]
    if not lines or not lines[0].startswith("vertices:"):
        raise InvariantError("edge list must start with 'vertices:<n>'")
    n = int(lines[0].split(":", 1)[1])
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 4:
            raise InvariantError(f"bad edge line: {ln!r}")
        u, v, sign, cid = int(parts[0]), int(parts[1]), int(parts[2]), int(parts[3])
        edges.append(GraphEdge(u, v, sign, cid))
    return SignedMultigraph(n, tuple(edges))


@dataclass(frozen=True)
class SeifertAnalysis:
    circle_count: int
    circle_of_arc: tuple[int, ...]
    graph: SignedMultigraph


@dataclass(frozen=True)
class Factor:
    vertices: frozenset[int]
    edge_ids: tuple[int, ...]
    sign: int  # +1, -1, or 0 for mixed


@dataclass(frozen=True)
class HomogeneityReport:
    is_homogeneous: bool
    factors: tuple[Factor, ...]
    is_reduced: bool
    is_special: bool
    is_positive_diagram: bool


def seifert_analysis(d: Diagram) -> SeifertAnalysis:
    check_valid(d)
    dsu = DSU(d.arc_count)
    for x in d.crossings:
        dsu.union(x.under_in, x.over_out)
        dsu.union(x.over_in, x.under_out)
    reps = sorted({dsu.find(a) for a in range(d.arc_count)})
    circle_id = {rep: i for i, rep in enumerate(reps)}
    circle_of_arc = tuple(circle_id[dsu.find(a)] for a in range(d.arc_count))
    n_arc_circles = len(reps)
    edges = []
    for ci, x in enumerate(d.crossings):
        u = circle_of_arc[x.under_in]
        v = circle_of_arc[x.over_in]
        if u == v:
            raise LoopEdgeError(
                f"crossing {ci} joins Seifert circle {u} to itself; not admissible"
            )
        edges.append(GraphEdge(u, v, x.sign, ci))
    graph = SignedMultigraph(n_arc_circles + d.free_loops, tuple(edges))
    return SeifertAnalysis(n_arc_circles + d.free_loops, circle_of_arc, graph)


def o_plus(d: Diagram) -> int:
    """Connected components after orientation-smoothing every negative crossing."""
    check_valid(d)
    dsu = DSU(d.arc_count)
    for x in d.crossings:
        if x.sign < 0:
            dsu.union(x.under_in, x.over_out)
            dsu.union(x.over_in, x.under_out)
        else:
            dsu.union(x.under_in, x.over_in)
            dsu.union(x.under_in, x.under_out)
            dsu.union(x.under_in, x.over_out)
    return len({dsu.find(a) for a in range(d.arc_count)}) + d.free_loops


def diagram_sl(d: Diagram) -> int:
    analysis = seifert_analysis(d)
    c = counts(d)
    return -analysis.circle_count + c.c_plus - c.c_minus


def blocks(g: SignedMultigraph) -> list[tuple[int, ...]]:
    """Biconnected blocks of a loop-free multigraph as tuples of edge indices.

    Parallel edges land in a common block; a bridge forms a block of its
    own.  Isolated vertices belong to no block.
    """
    adjacency: dict[int, list[tuple[int, int]]] = {v: [] for v in range(g.vertex_count)}
    for ei, e in enumerate(g.edges):
        adjacency[e.u].append((e.v, ei))
        adjacency[e.v].append((e.u, ei))

    visited = [False] * g.vertex_count
    depth = [0] * g.vertex_count
    low = [0] * g.vertex_count
    result: list[tuple[int, ...]] = []

    for root in range(g.vertex_count):
        if visited[root] or not adjacency[root]:
            continue
        edge_stack: list[int] = []
        # Iterative DFS: frames of (vertex, parent_edge, adjacency iterator).
        stack = [(root, -1, iter(adjacency[root]))]
        visited[root] = True
        depth[root] = low[root] = 0
        while stack:
            v, parent_edge, it = stack[-1]
            advanced = False
            for w, ei in it:
                if ei == parent_edge:
                    continue
                if not visited[w]:
                    edge_stack.append(ei)
                    visited[w] = True
                    depth[w] = low[w] = depth[v] + 1
                    stack.append((w, ei, iter(adjacency[w])))
                    advanced = True
                    break
                elif depth[w] < depth[v]:
                    edge_stack.append(ei)
                    low[v] = min(low[v], depth[w])
            if advanced:
                continue
            stack.pop()
            if stack:
                pv = stack[-1][0]
                low[pv] = min(low[pv], low[v])
                if low[v] >= depth[pv]:
                    block: list[int] = []
                    while edge_stack:
                        ei = edge_stack.pop()
                        block.append(ei)
                        if ei == parent_edge:
                            break
                    result.append(tuple(sorted(block)))
    return result


def homogeneity(d: Diagram) -> HomogeneityReport:
    analysis = seifert_analysis(d)
    g = analysis.graph
    c = counts(d)
    factors = []
    for block in blocks(g):
        signs = {g.edges[ei].sign for ei in block}
        sign = signs.pop() if len(signs) == 1 else 0
        vertices = frozenset()
        for ei in block:
            vertices |= {g.edges[ei].u, g.edges[ei].v}
        factors.append(Factor(vertices, block, sign))
    factors.sort(key=lambda f: f.edge_ids)

    is_homogeneous = all(f.sign != 0 for f in factors)
    is_reduced = True
    for f in factors:
        valence: dict[int, int] = {}
        for ei in f.edge_ids:
            e = g.edges[ei]
            valence[e.u] = valence.get(e.u, 0) + 1
            valence[e.v] = valence.get(e.v, 0) + 1
        if any(val == 1 for val in valence.values()):
            is_reduced = False
    edge_signs = {e.sign for e in g.edges}
    is_special = len(edge_signs) <= 1
    return HomogeneityReport(
        is_homogeneous=is_homogeneous,
        factors=tuple(factors),
        is_reduced=is_reduced,
        is_special=is_special,
        is_positive_diagram=(c.c_minus == 0),
    )
