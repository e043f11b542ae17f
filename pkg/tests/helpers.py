"""Shared corpus builders and independent oracles for the test suite.

The oracles here are deliberately naive: the index oracle enumerates raw
move sequences with no memoization or pruning, so it shares no code path
with the engine it checks.
"""

from __future__ import annotations

import itertools
import random

from linkdiag import BraidWord, Diagram, closure, parse_braid
from linkdiag.seifert import GraphEdge, SignedMultigraph

# --- fixture diagrams --------------------------------------------------

def fixture_words() -> dict[str, str]:
    return {
        "unknot": "braid n=1:",
        "kink_pos": "braid n=2: 1",
        "kink_neg": "braid n=2: -1",
        "trefoil": "braid n=2: 1 1 1",
        "trefoil_neg_kink": "braid n=3: 1 1 1 -2",
        "figure_eight": "braid n=3: 1 -2 1 -2",
        "hopf_plus": "braid n=2: 1 1",
        "torus_2_3": "braid n=2: 1 1 1",
        "torus_2_5": "braid n=2: 1 1 1 1 1",
        "torus_2_7": "braid n=2: 1 1 1 1 1 1 1",
        "torus_3_4": "braid n=3: 1 2 1 2 1 2 1 2",
        "torus_3_5": "braid n=3: 1 2 1 2 1 2 1 2 1 2",
        "granny_chain": "braid n=3: 1 1 1 2 2 2",
        "granny_chain_long": "braid n=4: 1 1 1 2 2 2 3 3 3",
    }


def fixture_diagrams() -> dict[str, Diagram]:
    return {name: closure(parse_braid(text)) for name, text in fixture_words().items()}


# --- braid corpora -----------------------------------------------------

def enumerate_words(strands: int, max_len: int):
    letters = [i for i in range(-(strands - 1), strands) if i != 0]
    for length in range(max_len + 1):
        for combo in itertools.product(letters, repeat=length):
            yield BraidWord(strands, combo)


def braid_corpus_full():
    """Stratified enumeration plus a seeded random tail, <= 8 letters, <= 4 strands."""
    words = []
    words.extend(enumerate_words(2, 8))
    words.extend(enumerate_words(3, 5))
    words.extend(enumerate_words(4, 4))
    rng = random.Random(20230817)
    for _ in range(300):
        n = rng.choice([3, 4])
        length = rng.randint(6, 8)
        words.append(random_word(rng, n, length))
    return words


def braid_corpus_small():
    words = []
    words.extend(enumerate_words(2, 6))
    words.extend(enumerate_words(3, 4))
    rng = random.Random(991)
    for _ in range(60):
        n = rng.choice([3, 4])
        words.append(random_word(rng, n, rng.randint(5, 7)))
    return words


def random_word(rng: random.Random, strands: int, length: int) -> BraidWord:
    letters = [i for i in range(-(strands - 1), strands) if i != 0]
    return BraidWord(strands, tuple(rng.choice(letters) for _ in range(length)))


def random_diagram(rng: random.Random, max_crossings: int = 8) -> Diagram:
    n = rng.randint(2, 4)
    length = rng.randint(1, max_crossings)
    return closure(random_word(rng, n, length))


# --- independent index oracle ------------------------------------------

def oracle_ind(mult: tuple[tuple[int, ...], ...]) -> int:
    """Maximum number of lone-edge contractions, by raw enumeration."""
    n = len(mult)
    best = 0
    for a in range(n):
        for b in range(a + 1, n):
            if mult[a][b] == 1:
                best = max(best, 1 + oracle_ind(oracle_contract(mult, a, b)))
    return best


def oracle_contract(mult, a, b):
    n = len(mult)
    keep = [v for v in range(n) if v != b]
    rows = []
    for v in keep:
        row = []
        for w in keep:
            if v == w:
                row.append(0)
            else:
                count = mult[v][w]
                if v == a:
                    count += mult[b][w]
                if w == a:
                    count += mult[v][b]
                row.append(count)
        rows.append(tuple(row))
    return tuple(rows)


def oracle_ind_signed(g: SignedMultigraph, mode: int) -> int:
    """Sign-restricted index by raw enumeration on (u, v, sign) edge lists."""
    edges = [(e.u, e.v, e.sign) for e in g.edges]
    return _oracle_signed_rec(edges, mode)


def _oracle_signed_rec(edges, mode) -> int:
    mult = {}
    for u, v, _s in edges:
        key = (min(u, v), max(u, v))
        mult[key] = mult.get(key, 0) + 1
    best = 0
    for u, v, s in edges:
        if mult[(min(u, v), max(u, v))] != 1:
            continue
        if mode != 0 and s != mode:
            continue
        keep, drop = min(u, v), max(u, v)
        rest = [
            (keep if a == drop else a, keep if b == drop else b, t)
            for a, b, t in edges
            if {a, b} != {u, v}
        ]
        best = max(best, 1 + _oracle_signed_rec(rest, mode))
    return best


def graph_matrix(g: SignedMultigraph) -> tuple[tuple[int, ...], ...]:
    m = [[0] * g.vertex_count for _ in range(g.vertex_count)]
    for e in g.edges:
        m[e.u][e.v] += 1
        m[e.v][e.u] += 1
    return tuple(tuple(row) for row in m)


def graph_from_matrix(mult, signs=None) -> SignedMultigraph:
    edges = []
    cid = 0
    n = len(mult)
    for a in range(n):
        for b in range(a + 1, n):
            for _k in range(mult[a][b]):
                sign = signs[cid] if signs is not None else +1
                edges.append(GraphEdge(a, b, sign, cid))
                cid += 1
    return SignedMultigraph(n, tuple(edges))


def enumerate_multigraphs(max_vertices: int, max_edges: int):
    """All loop-free multigraphs up to isomorphism, as multiplicity matrices."""
    seen = set()
    out = []
    for n in range(1, max_vertices + 1):
        pairs = list(itertools.combinations(range(n), 2))
        perms = list(itertools.permutations(range(n)))
        for vec in _compositions(len(pairs), max_edges):
            mult = [[0] * n for _ in range(n)]
            for (a, b), k in zip(pairs, vec):
                mult[a][b] = mult[b][a] = k
            canon = min(
                tuple(tuple(mult[p[a]][p[b]] for b in range(n)) for a in range(n))
                for p in perms
            )
            key = (n, canon)
            if key not in seen:
                seen.add(key)
                out.append(canon)
    return out


def _compositions(slots: int, max_total: int):
    """All nonnegative integer vectors of given length with sum <= max_total."""
    if slots == 0:
        yield ()
        return
    for head in range(max_total + 1):
        for tail in _compositions(slots - 1, max_total - head):
            yield (head,) + tail


def random_signed_graph(rng: random.Random, max_vertices: int = 6, max_edges: int = 8) -> SignedMultigraph:
    n = rng.randint(2, max_vertices)
    m = rng.randint(0, max_edges)
    edges = []
    for cid in range(m):
        a, b = rng.sample(range(n), 2)
        edges.append(GraphEdge(min(a, b), max(a, b), rng.choice([1, -1]), cid))
    return SignedMultigraph(n, tuple(edges))
