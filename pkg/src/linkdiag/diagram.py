"""Oriented link-diagram codes: parsing, validation, mirroring, counting.

A diagram is a list of signed crossings over numbered arcs.  Each crossing
records the four arc ids at its slots: the under-strand runs
``under_in -> under_out`` and the over-strand runs ``over_in -> over_out``.
Crossing-free circle components are tracked as a bare ``free_loops`` count.

The native text format is::

    arcs:6 loops:0
    X+ u_in:0 o_in:4 u_out:5 o_out:1
    ...

with one ``X`` line per crossing.  A JSON mirror of the same fields is
also supported (see :func:`diagram_to_json` / :func:`diagram_from_json`).
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass

from .errors import AmbiguousOrientation, DiagramSyntaxError, InvariantError


@dataclass(frozen=True)
class Crossing:
    sign: int
    under_in: int
    over_in: int
    under_out: int
    over_out: int

    def in_slots(self) -> tuple[int, int]:
        return (self.under_in, self.over_in)

    def out_slots(self) -> tuple[int, int]:
        return (self.under_out, self.over_out)


@dataclass(frozen=True)
class Diagram:
    arc_count: int
    crossings: tuple[Crossing, ...]
    free_loops: int = 0


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    issues: tuple[tuple[str, str, object], ...]


@dataclass(frozen=True)
class DiagramCounts:
    c_plus: int
    c_minus: int
    writhe: int
    link_components: int
    split_parts: int


class DSU:
    """Small union-find over 0..n-1."""

    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            if rb < ra:
                ra, rb = rb, ra
            self.parent[rb] = ra


def validate(d: Diagram) -> ValidationReport:
    """Check the slot invariants; every arc once in, once out."""
    issues = []
    if d.arc_count < 0 or d.free_loops < 0:
        issues.append(("negative-count", "arc_count and free_loops must be nonnegative", None))
    if d.arc_count != 2 * len(d.crossings):
        issues.append(
            ("arc-count", f"arc_count={d.arc_count} but diagram has {len(d.crossings)} crossings", None)
        )
    ins: dict[int, int] = {}
    outs: dict[int, int] = {}
    for ci, x in enumerate(d.crossings):
        if x.sign not in (+1, -1):
            issues.append(("bad-sign", f"crossing {ci} has sign {x.sign}", ci))
        for a in (x.under_in, x.over_in, x.under_out, x.over_out):
            if not (0 <= a < d.arc_count):
                issues.append(("arc-range", f"crossing {ci} references arc {a}", a))
        for a in x.in_slots():
            ins[a] = ins.get(a, 0) + 1
        for a in x.out_slots():
            outs[a] = outs.get(a, 0) + 1
    for a in range(d.arc_count):
        if ins.get(a, 0) != 1:
            issues.append(("in-slot", f"arc {a} occurs {ins.get(a, 0)} times as an in-slot", a))
        if outs.get(a, 0) != 1:
            issues.append(("out-slot", f"arc {a} occurs {outs.get(a, 0)} times as an out-slot", a))
    return ValidationReport(ok=not issues, issues=tuple(issues))


def check_valid(d: Diagram) -> Diagram:
    """Raise InvariantError unless d is valid; return d for chaining."""
    report = validate(d)
    if not report.ok:
        code, message, _loc = report.issues[0]
        raise InvariantError(f"{code}: {message}")
    return d


_HEADER_RE = re.compile(r"^arcs:(\d+)\s+loops:(\d+)$")
_CROSSING_RE = re.compile(
    r"^X([+-])\s+u_in:(\d+)\s+o_in:(\d+)\s+u_out:(\d+)\s+o_out:(\d+)$"
)


def parse_diagram(text: str) -> Diagram:
    """Parse the native text format (or its JSON mirror) into a Diagram."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return diagram_from_json(stripped)
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.strip().startswith("#")]
    if not lines:
        raise DiagramSyntaxError("empty diagram text")
    m = _HEADER_RE.match(lines[0])
    if not m:
        raise DiagramSyntaxError(f"bad header line: {lines[0]!r}")
    arc_count, free_loops = int(m.group(1)), int(m.group(2))
    crossings = []
    for ln in lines[1:]:
        cm = _CROSSING_RE.match(ln)
        if not cm:
            raise DiagramSyntaxError(f"bad crossing line: {ln!r}")
        sign = 1 if cm.group(1) == "+" else -1
        crossings.append(
            Crossing(sign, int(cm.group(2)), int(cm.group(3)), int(cm.group(4)), int(cm.group(5)))
        )
    return check_valid(Diagram(arc_count, tuple(crossings), free_loops))


def serialize_diagram(d: Diagram) -> str:
    lines = [f"arcs:{d.arc_count} loops:{d.free_loops}"]
    for x in d.crossings:
        s = "+" if x.sign > 0 else "-"
        lines.append(f"X{s} u_in:{x.under_in} o_in:{x.over_in} u_out:{x.under_out} o_out:{x.over_out}")
    return "\n".join(lines) + "\n"


def diagram_to_json(d: Diagram) -> str:
    obj = {
        "arcs": d.arc_count,
        "loops": d.free_loops,
        "crossings": [
            {"sign": x.sign, "u_in": x.under_in, "o_in": x.over_in, "u_out": x.under_out, "o_out": x.over_out}
            for x in d.crossings
        ],
    }
    return json.dumps(obj, sort_keys=True)


def diagram_from_json(text: str) -> Diagram:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DiagramSyntaxError(f"bad JSON diagram: {exc}") from exc
    try:
        crossings = tuple(
            Crossing(int(x["sign"]), int(x["u_in"]), int(x["o_in"]), int(x["u_out"]), int(x["o_out"]))
            for x in obj.get("crossings", [])
        )
        d = Diagram(int(obj["arcs"]), crossings, int(obj.get("loops", 0)))
    except (KeyError, TypeError, ValueError) as exc:
        raise DiagramSyntaxError(f"bad JSON diagram fields: {exc}") from exc
    return check_valid(d)


def mirror(d: Diagram) -> Diagram:
    """Negate every crossing sign and swap under/over roles."""
    flipped = tuple(
        Crossing(-x.sign, x.over_in, x.under_in, x.over_out, x.under_out) for x in d.crossings
    )
    return Diagram(d.arc_count, flipped, d.free_loops)


def counts(d: Diagram) -> DiagramCounts:
    c_plus = sum(1 for x in d.crossings if x.sign > 0)
    c_minus = len(d.crossings) - c_plus

    strands = DSU(d.arc_count)
    parts = DSU(d.arc_count)
    for x in d.crossings:
        strands.union(x.under_in, x.under_out)
        strands.union(x.over_in, x.over_out)
        parts.union(x.under_in, x.over_in)
        parts.union(x.under_in, x.under_out)
        parts.union(x.under_in, x.over_out)
    link_components = len({strands.find(a) for a in range(d.arc_count)}) + d.free_loops
    split_parts = len({parts.find(a) for a in range(d.arc_count)}) + d.free_loops
    return DiagramCounts(c_plus, c_minus, c_plus - c_minus, link_components, split_parts)


# --- classic PD import -------------------------------------------------

_PD_RE = re.compile(r"X\[\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\]")


def import_pd(text: str) -> Diagram:
    """Import a classic PD code ``X[a,b,c,d] ...``.

    Slot ``a`` is the incoming under-arc and the slots are listed
    counterclockwise, so ``c`` is the outgoing under-arc and ``b``, ``d``
    carry the over-strand.  Over-strand directions are recovered by
    propagating the rule that each arc label is incoming at exactly one of
    its two occurrences; chains this leaves undetermined fall back to the
    label-successor heuristic (``x -> x+1``, wraparound from the maximum
    label of the chain).  The crossing is positive when the over-strand
    runs ``b -> d``.
    """
    tuples = [tuple(int(g) for g in m.groups()) for m in _PD_RE.finditer(text)]
    if not tuples:
        stripped = text.strip()
        if stripped:
            raise DiagramSyntaxError(f"no PD crossings found in {stripped[:40]!r}")
        return Diagram(0, (), 0)

    occurrences: dict[int, list[tuple[int, int]]] = {}
    for ci, slots in enumerate(tuples):
        for si, label in enumerate(slots):
            occurrences.setdefault(label, []).append((ci, si))
    for label, occ in occurrences.items():
        if len(occ) != 2:
            raise DiagramSyntaxError(f"PD arc label {label} occurs {len(occ)} times (expected 2)")

    # role[(ci, si)] = "in" or "out"; under slots are fixed.
    role: dict[tuple[int, int], str] = {}
    for ci in range(len(tuples)):
        role[(ci, 0)] = "in"
        role[(ci, 2)] = "out"

    def other(label: int, here: tuple[int, int]) -> tuple[int, int]:
        occ = occurrences[label]
        return occ[1] if occ[0] == here else occ[0]

    # Constraint propagation: the two occurrences of a label take opposite
    # roles, and the two over-slots (1 and 3) of a crossing take opposite
    # roles.
    changed = True
    while changed:
        changed = False
        for ci, slots in enumerate(tuples):
            for si in (1, 3):
                here = (ci, si)
                if here in role:
                    continue
                partner = (ci, 4 - si)
                if partner in role:
                    role[here] = "in" if role[partner] == "out" else "out"
                    changed = True
                    continue
                twin = other(slots[si], here)
                if twin in role:
                    role[here] = "in" if role[twin] == "out" else "out"
                    changed = True

    # Successor heuristic for any remaining over-over chains.
    unresolved = [
        (ci, si) for ci, slots in enumerate(tuples) for si in (1, 3) if (ci, si) not in role
    ]
    if unresolved:
        labels = sorted({tuples[ci][si] for ci, si in unresolved})
        for ci, si in unresolved:
            if (ci, si) in role:
                continue
            b, dd = tuples[ci][1], tuples[ci][3]
            if dd == b + 1:
                direction = "b->d"
            elif b == dd + 1:
                direction = "d->b"
            elif dd == min(labels) and b == max(labels):
                direction = "b->d"
            elif b == min(labels) and dd == max(labels):
                direction = "d->b"
            else:
                raise AmbiguousOrientation(
                    f"cannot orient over-strand of X{list(tuples[ci])}"
                )
            role[(ci, 1)] = "in" if direction == "b->d" else "out"
            role[(ci, 3)] = "out" if direction == "b->d" else "in"

    # Consistency check.
    for label, occ in occurrences.items():
        roles = sorted(role[o] for o in occ)
        if roles != ["in", "out"]:
            raise AmbiguousOrientation(f"inconsistent orientation at PD arc label {label}")

    arc_id = {label: i for i, label in enumerate(sorted(occurrences))}
    crossings = []
    for ci, (a, b, c, dd) in enumerate(tuples):
        if role[(ci, 1)] == "in":
            over_in, over_out, sign = b, dd, +1
        else:
            over_in, over_out, sign = dd, b, -1
        crossings.append(Crossing(sign, arc_id[a], arc_id[over_in], arc_id[c], arc_id[over_out]))
    return check_valid(Diagram(2 * len(tuples), tuple(crossings), 0))
