"""Transform a connected diagram into a closed braid on O(D) strands.

The crossing sign determines the counterclockwise rotation of the four
slots, so each diagram carries a combinatorial map whose faces can be
traced without any separate planar data.  Following Vogel's scheme, a
face is *defective* when it carries two edges of distinct Seifert circles
inducing the same orientation on the face boundary; an oriented
Reidemeister-II insertion across such a pair (one positive and one
negative crossing) removes the defect while preserving both the Seifert
circle count and the writhe.  When no defect remains, the Seifert graph
is a path of coherent circles and the braid word is read off by cutting
each circle compatibly and merging the resulting chains.

The braid word is not canonical; the contract is (strands, writhe,
link-invariant equality), and the result is verified against the input by
HOMFLY and component count whenever the crossing count is within the cap.
"""

from __future__ import annotations

import warnings

from .braids import BraidWord, closure
from .diagram import Crossing, Diagram, check_valid, counts
from .errors import IterationLimitError, SplitInputError
from .homfly import DEFAULT_CROSSING_CAP, homfly
from .seifert import seifert_analysis

# Slots in counterclockwise order around a crossing, by sign.
_CCW = {
    +1: ("ui", "oi", "uo", "oo"),
    -1: ("ui", "oo", "uo", "oi"),
}

_SLOT_ARC = {
    "ui": lambda x: x.under_in,
    "oi": lambda x: x.over_in,
    "uo": lambda x: x.under_out,
    "oo": lambda x: x.over_out,
}


def _faces(d: Diagram) -> list[list[tuple[int, bool]]]:
    """Faces as lists of (arc, forward) entries along the boundary.

    Traversal keeps the face interior on the left; ``forward`` records
    whether the arc's orientation agrees with the traversal.
    """
    # Darts: (crossing, slot). alpha pairs the two ends of each arc.
    out_dart: dict[int, tuple[int, str]] = {}
    in_dart: dict[int, tuple[int, str]] = {}
    for ci, x in enumerate(d.crossings):
        out_dart[x.under_out] = (ci, "uo")
        out_dart[x.over_out] = (ci, "oo")
        in_dart[x.under_in] = (ci, "ui")
        in_dart[x.over_in] = (ci, "oi")

    def dart_arc(dart: tuple[int, str]) -> int:
        ci, slot = dart
        return _SLOT_ARC[slot](d.crossings[ci])

    def alpha(dart: tuple[int, str]) -> tuple[int, str]:
        arc = dart_arc(dart)
        return in_dart[arc] if dart[1] in ("uo", "oo") else out_dart[arc]

    def sigma_inv(dart: tuple[int, str]) -> tuple[int, str]:
        ci, slot = dart
        order = _CCW[d.crossings[ci].sign]
        return (ci, order[(order.index(slot) - 1) % 4])

    all_darts = [(ci, s) for ci in range(len(d.crossings)) for s in ("ui", "oi", "uo", "oo")]
    seen: set[tuple[int, str]] = set()
    faces = []
    for start in all_darts:
        if start in seen:
            continue
        face = []
        dart = start
        while dart not in seen:
            seen.add(dart)
            face.append((dart_arc(dart), dart[1] in ("uo", "oo")))
            dart = sigma_inv(alpha(dart))
        faces.append(face)
    return faces


def _r2_insert(d: Diagram, alpha_arc: int, beta_arc: int, forward: bool) -> Diagram:
    """Push arc ``alpha`` across arc ``beta`` with an oriented R2 move.

    ``forward`` says whether the pair was traversed along its orientation
    on the (interior-left) face boundary; it fixes which of the two new
    crossings is positive.  Alpha passes over beta at both crossings.
    """
    n = d.arc_count
    a1, b1 = alpha_arc, beta_arc
    a2, a3, b2, b3 = n, n + 1, n + 2, n + 3

    def rewire_in(x: Crossing) -> Crossing:
        ui = a3 if x.under_in == a1 else (b3 if x.under_in == b1 else x.under_in)
        oi = a3 if x.over_in == a1 else (b3 if x.over_in == b1 else x.over_in)
        return Crossing(x.sign, ui, oi, x.under_out, x.over_out)

    crossings = [rewire_in(x) for x in d.crossings]
    s1, s2 = (-1, +1) if forward else (+1, -1)
    crossings.append(Crossing(s1, b2, a1, b3, a2))  # first crossing along alpha
    crossings.append(Crossing(s2, b1, a2, b2, a3))  # second crossing along alpha
    return check_valid(Diagram(n + 4, tuple(crossings), d.free_loops))


def _circle_walks(d: Diagram, analysis) -> dict[int, list[tuple[int, int]]]:
    """Per circle: (arc, crossing consuming it) pairs in cyclic order."""
    in_slot: dict[int, tuple[int, bool]] = {}
    for ci, x in enumerate(d.crossings):
        in_slot[x.under_in] = (ci, True)
        in_slot[x.over_in] = (ci, False)
    walks: dict[int, list[tuple[int, int]]] = {}
    seen: set[int] = set()
    for start in range(d.arc_count):
        if start in seen:
            continue
        circle = analysis.circle_of_arc[start]
        walk = []
        a = start
        while a not in seen:
            seen.add(a)
            ci, under = in_slot[a]
            walk.append((a, ci))
            x = d.crossings[ci]
            a = x.over_out if under else x.under_out
        walks[circle] = walk
    return walks


def _path_order(graph) -> list[int]:
    """Order the Seifert-graph vertices along their simple path."""
    neighbors: dict[int, set[int]] = {v: set() for v in range(graph.vertex_count)}
    for e in graph.edges:
        neighbors[e.u].add(e.v)
        neighbors[e.v].add(e.u)
    if graph.vertex_count == 1:
        return [0]
    ends = [v for v, ns in neighbors.items() if len(ns) == 1]
    if len(ends) != 2 or any(len(ns) > 2 for ns in neighbors.values()):
        raise IterationLimitError("coherent diagram's Seifert graph is not a path")
    order = [min(ends)]
    prev = None
    while len(order) < graph.vertex_count:
        nxt = [w for w in neighbors[order[-1]] if w != prev]
        if len(nxt) != 1:
            raise IterationLimitError("Seifert path traversal failed")
        prev = order[-1]
        order.append(nxt[0])
    return order


def _read_word(d: Diagram, verify_cap: int) -> BraidWord:
    analysis = seifert_analysis(d)
    n = analysis.circle_count
    if not d.crossings:
        return BraidWord(max(n, 1), ())
    graph = analysis.graph
    order = _path_order(graph)
    strand_of_circle = {c: i for i, c in enumerate(order)}
    gen_of_crossing = {}
    for e in graph.edges:
        i, j = strand_of_circle[e.u], strand_of_circle[e.v]
        if abs(i - j) != 1:
            raise IterationLimitError("crossing joins non-adjacent strands")
        gen_of_crossing[e.crossing_id] = min(i, j) + 1
    sign_of = {ci: x.sign for ci, x in enumerate(d.crossings)}

    walks = _circle_walks(d, analysis)
    circle_arcs = [
        {a for a, _c in walks[c]} if c in walks else set() for c in order
    ]
    face_sets = [{a for a, _fw in face} for face in _faces(d)]

    target = None
    if len(d.crossings) <= verify_cap:
        target = homfly(d, verify_cap)

    # Cut all circles along one transversal ray: pick one arc per circle so
    # that consecutive picks share a face; the cut of each circle starts its
    # crossing sequence right after its picked arc.
    for ray in _rays(circle_arcs, face_sets):
        chains = []
        for i, c in enumerate(order):
            if c not in walks:
                continue
            walk = walks[c]
            k = next(j for j, (a, _cr) in enumerate(walk) if a == ray[i])
            rotated = walk[k:] + walk[:k]
            chains.append([cr for _a, cr in rotated])
        linear = _merge_chains(chains)
        if linear is None:
            continue
        letters = tuple(
            gen_of_crossing[c] * (1 if sign_of[c] > 0 else -1) for c in linear
        )
        word = BraidWord(n, letters)
        if target is not None:
            cand = closure(word)
            if counts(cand).link_components != counts(d).link_components:
                continue
            if homfly(cand, verify_cap) != target:
                continue
        return word
    raise IterationLimitError("could not schedule crossings into a braid word")


def _rays(circle_arcs: list[set[int]], face_sets: list[set[int]]):
    """Yield tuples (one arc per circle) whose consecutive arcs share a face."""
    active = [i for i, arcs in enumerate(circle_arcs) if arcs]

    def extend(prefix: list[int], pos: int):
        if pos == len(active):
            full = [-1] * len(circle_arcs)
            for idx, i in enumerate(active):
                full[i] = prefix[idx]
            yield tuple(full)
            return
        i = active[pos]
        for a in sorted(circle_arcs[i]):
            if prefix:
                prev = prefix[-1]
                if not any(prev in f and a in f for f in face_sets):
                    continue
            yield from extend(prefix + [a], pos + 1)

    yield from extend([], 0)


def _merge_chains(chains: list[list[int]]) -> list[int] | None:
    """Topological merge of precedence chains; smallest-id-first, or None."""
    succ: dict[int, set[int]] = {}
    indeg: dict[int, int] = {}
    nodes: set[int] = set()
    for chain in chains:
        for c in chain:
            nodes.add(c)
            succ.setdefault(c, set())
            indeg.setdefault(c, 0)
        for a, b in zip(chain, chain[1:]):
            if b not in succ[a]:
                succ[a].add(b)
                indeg[b] += 1
    ready = sorted(c for c in nodes if indeg[c] == 0)
    out = []
    while ready:
        c = ready.pop(0)
        out.append(c)
        for b in sorted(succ[c]):
            indeg[b] -= 1
            if indeg[b] == 0:
                ready.append(b)
        ready.sort()
    return out if len(out) == len(nodes) else None


def vogel_braidize(d: Diagram, crossing_cap: int = DEFAULT_CROSSING_CAP) -> BraidWord:
    check_valid(d)
    c = counts(d)
    if c.split_parts > 1:
        raise SplitInputError(f"diagram has {c.split_parts} split parts")
    analysis = seifert_analysis(d)
    target_o = analysis.circle_count
    target_writhe = c.writhe

    current = d
    limit = 4 * (len(d.crossings) + target_o + 2) ** 2 + 16
    moves = 0
    while True:
        analysis = seifert_analysis(current)
        pair = _find_defect(current, analysis.circle_of_arc)
        if pair is None:
            break
        alpha_arc, beta_arc, fwd = pair
        current = _r2_insert(current, alpha_arc, beta_arc, fwd)
        moves += 1
        if seifert_analysis(current).circle_count != target_o:
            raise IterationLimitError("R2 insertion changed the Seifert circle count")
        if counts(current).writhe != target_writhe:
            raise IterationLimitError("R2 insertion changed the writhe")
        if moves > limit:
            raise IterationLimitError(f"no coherent form after {moves} moves")

    verify_cap = crossing_cap
    if len(current.crossings) > crossing_cap or len(d.crossings) > crossing_cap:
        warnings.warn("braidization result not verified: crossing cap exceeded")
        verify_cap = -1
    word = _read_word(current, verify_cap)
    if word.strands != target_o or word.exponent_sum != target_writhe:
        raise IterationLimitError("braid word does not match O(D) or writhe")
    if verify_cap >= 0 and len(d.crossings) <= verify_cap:
        if homfly(closure(word), max(verify_cap, len(word.letters))) != homfly(d, verify_cap):
            raise IterationLimitError("braid word failed HOMFLY verification")
    return word


def _find_defect(d: Diagram, circle_of_arc):
    """Pick a defect triple (alpha_arc, beta_arc, forward), deterministically.

    A defect is a pair of arcs on one face, traversed the same way along
    the boundary, lying on different Seifert circles.  Faces are ranked by
    their smallest incident arc id; within a face the lexicographically
    smallest qualifying (arc, arc, flag) triple wins.
    """
    best = None
    for face in sorted(_faces(d), key=lambda f: min(a for a, _fw in f)):
        entries = sorted(set(face))
        for i, (a, fa) in enumerate(entries):
            for b, fb in entries[i + 1:]:
                if fa != fb or circle_of_arc[a] == circle_of_arc[b]:
                    continue
                pair = (a, b, fa)
                if best is None or pair < best:
                    best = pair
        if best is not None:
            return best
    return None
