"""HOMFLY polynomial by skein recursion and the degree-based index bounds.

Convention (fixed, no runtime switches)::

    v^-1 P(L+) - v P(L-) = z P(L0),      P(unknot) = 1

so a k-component unlink evaluates to delta^(k-1) with
delta = (v^-1 - v)/z.

Termination uses the descending-diagram strategy: components are ordered
by smallest arc id and traversed from their smallest arc; the first
crossing whose first pass is on the under-strand is switched (branch 1)
and smoothed (branch 2).  Descending diagrams are unlinks.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import Crossing, Diagram, check_valid, counts
from .errors import SizeLimitError, ZeroPolynomialError
from .graph_index import IndexReport
from .poly import DELTA, LaurentPoly2
from .seifert import seifert_analysis

DEFAULT_CROSSING_CAP = 16

_V2 = LaurentPoly2.monomial(1, 2, 0)
_VZ = LaurentPoly2.monomial(1, 1, 1)
_VINV2 = LaurentPoly2.monomial(1, -2, 0)
_VINVZ = LaurentPoly2.monomial(1, -1, 1)


@dataclass(frozen=True)
class DegreeReport:
    min_deg_v: int
    max_deg_v: int
    v_span: int
    mfw_lower: int
    eq1_holds: bool
    eq2_holds: bool
    eq1_tight: bool
    eq2_tight: bool


def _first_discordant(d: Diagram) -> int | None:
    """Index of the first crossing whose first pass is on the under-strand.

    Passes are ordered by traversing components (ordered by smallest arc)
    from their smallest arc along orientation.
    """
    in_slot: dict[int, tuple[int, bool]] = {}
    for ci, x in enumerate(d.crossings):
        in_slot[x.under_in] = (ci, True)
        in_slot[x.over_in] = (ci, False)
    seen_arcs: set[int] = set()
    first_pass_under: dict[int, bool] = {}
    order: list[int] = []
    for start in range(d.arc_count):
        if start in seen_arcs:
            continue
        a = start
        while a not in seen_arcs:
            seen_arcs.add(a)
            ci, under = in_slot[a]
            if ci not in first_pass_under:
                first_pass_under[ci] = under
                order.append(ci)
            x = d.crossings[ci]
            a = x.under_out if under else x.over_out
    for ci in order:
        if first_pass_under[ci]:
            return ci
    return None


def _switch(d: Diagram, ci: int) -> Diagram:
    x = d.crossings[ci]
    swapped = Crossing(-x.sign, x.over_in, x.under_in, x.over_out, x.under_out)
    crossings = d.crossings[:ci] + (swapped,) + d.crossings[ci + 1:]
    return Diagram(d.arc_count, crossings, d.free_loops)


def _smooth(d: Diagram, ci: int) -> Diagram:
    """Oriented smoothing: remove crossing ci, joining u_in~o_out, o_in~u_out."""
    from .diagram import DSU

    x = d.crossings[ci]
    dsu = DSU(d.arc_count)
    dsu.union(x.under_in, x.over_out)
    dsu.union(x.over_in, x.under_out)
    reps = sorted({dsu.find(a) for a in range(d.arc_count)})
    used: set[int] = set()
    crossings = []
    for cj, y in enumerate(d.crossings):
        if cj == ci:
            continue
        arcs = [dsu.find(a) for a in (y.under_in, y.over_in, y.under_out, y.over_out)]
        used.update(arcs)
        crossings.append((y.sign, arcs))
    live = sorted(used)
    relabel = {rep: i for i, rep in enumerate(live)}
    new_crossings = tuple(
        Crossing(sign, relabel[a[0]], relabel[a[1]], relabel[a[2]], relabel[a[3]])
        for sign, a in crossings
    )
    orphan_loops = len(reps) - len(live)
    return Diagram(2 * len(new_crossings), new_crossings, d.free_loops + orphan_loops)


def _homfly_rec(d: Diagram) -> LaurentPoly2:
    ci = _first_discordant(d)
    if ci is None:
        comps = counts(d).link_components
        if comps == 0:
            raise ZeroPolynomialError("empty diagram has no HOMFLY normalization")
        return DELTA ** (comps - 1)
    switched = _switch(d, ci)
    smoothed = _smooth(d, ci)
    if d.crossings[ci].sign > 0:
        # P+ = v^2 P- + v z P0
        return _V2 * _homfly_rec(switched) + _VZ * _homfly_rec(smoothed)
    # P- = v^-2 P+ - v^-1 z P0
    return _VINV2 * _homfly_rec(switched) - _VINVZ * _homfly_rec(smoothed)


def homfly(d: Diagram, crossing_cap: int = DEFAULT_CROSSING_CAP) -> LaurentPoly2:
    check_valid(d)
    if len(d.crossings) > crossing_cap:
        raise SizeLimitError(
            f"{len(d.crossings)} crossings exceeds HOMFLY cap {crossing_cap}"
        )
    return _homfly_rec(d)


def degree_report(p: LaurentPoly2, d: Diagram, idx: IndexReport) -> DegreeReport:
    if p.is_zero():
        raise ZeroPolynomialError("degree report of zero polynomial")
    analysis = seifert_analysis(d)
    c = counts(d)
    sl = -analysis.circle_count + c.writhe
    min_v, max_v = p.min_deg_v(), p.max_deg_v()
    span = max_v - min_v
    if span % 2:
        raise ZeroPolynomialError(f"odd v-span {span}; not a link polynomial")
    lower1 = sl + 1 + 2 * (idx.ind_minus or 0)
    upper2 = analysis.circle_count + c.writhe - 1 - 2 * (idx.ind_plus or 0)
    return DegreeReport(
        min_deg_v=min_v,
        max_deg_v=max_v,
        v_span=span,
        mfw_lower=span // 2 + 1,
        eq1_holds=min_v >= lower1,
        eq2_holds=max_v <= upper2,
        eq1_tight=min_v == lower1,
        eq2_tight=max_v == upper2,
    )
