import pytest
from hypothesis import given, settings, strategies as st

from linkdiag import (
    Crossing,
    Diagram,
    closure,
    counts,
    diagram_from_json,
    diagram_to_json,
    import_pd,
    mirror,
    parse_braid,
    parse_diagram,
    serialize_diagram,
    validate,
)
from linkdiag.errors import AmbiguousOrientation, DiagramSyntaxError, InvariantError

from helpers import fixture_diagrams, random_word

import random


def test_parse_unknot():
    d = parse_diagram("arcs:0 loops:1")
    assert d == Diagram(0, (), 1)


def test_parse_trefoil_closure_wiring():
    text = (
        "arcs:6 loops:0\n"
        "X+ u_in:1 o_in:0 u_out:2 o_out:3\n"
        "X+ u_in:3 o_in:2 u_out:4 o_out:5\n"
        "X+ u_in:5 o_in:4 u_out:0 o_out:1\n"
    )
    d = parse_diagram(text)
    assert counts(d).c_plus == 3
    assert serialize_diagram(d) == text


def test_duplicate_in_slot_rejected():
    text = (
        "arcs:4 loops:0\n"
        "X+ u_in:0 o_in:1 u_out:1 o_out:2\n"
        "X+ u_in:0 o_in:3 u_out:3 o_out:0\n"
    )
    with pytest.raises(InvariantError, match="arc 0"):
        parse_diagram(text)


def test_bad_header():
    with pytest.raises(DiagramSyntaxError):
        parse_diagram("arcs:x loops:0")


def test_json_round_trip():
    for d in fixture_diagrams().values():
        assert diagram_from_json(diagram_to_json(d)) == d


def test_text_round_trip_fixtures():
    for d in fixture_diagrams().values():
        assert parse_diagram(serialize_diagram(d)) == d


def test_mirror_involution_and_counts():
    for d in fixture_diagrams().values():
        m = mirror(d)
        assert mirror(m) == d
        assert counts(m).c_plus == counts(d).c_minus
        assert counts(m).c_minus == counts(d).c_plus
        assert counts(m).link_components == counts(d).link_components


def test_counts_examples():
    trefoil = counts(closure(parse_braid("braid n=2: 1 1 1")))
    assert (trefoil.c_plus, trefoil.c_minus, trefoil.writhe) == (3, 0, 3)
    assert (trefoil.link_components, trefoil.split_parts) == (1, 1)
    hopf = counts(closure(parse_braid("braid n=2: 1 1")))
    assert (hopf.c_plus, hopf.c_minus, hopf.writhe) == (2, 0, 2)
    assert (hopf.link_components, hopf.split_parts) == (2, 1)


def test_split_union_parts():
    a = closure(parse_braid("braid n=2: 1 1 1"))
    shifted = tuple(
        Crossing(x.sign, x.under_in + 6, x.over_in + 6, x.under_out + 6, x.over_out + 6)
        for x in a.crossings
    )
    both = Diagram(12, a.crossings + shifted, 0)
    assert validate(both).ok
    assert counts(both).split_parts == 2


def test_import_pd_trefoil():
    d = import_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]")
    c = counts(d)
    assert (c.c_plus, c.c_minus) == (3, 0)


def test_import_pd_figure_eight():
    d = import_pd("X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]")
    c = counts(d)
    assert (c.c_plus, c.c_minus) == (2, 2)


def test_import_pd_kink_tie_break():
    # Orientation propagation resolves the wraparound kink to a positive curl.
    d = import_pd("X[1,2,2,1]")
    assert counts(d).c_plus == 1


def test_import_pd_bad_label_multiplicity():
    with pytest.raises(DiagramSyntaxError):
        import_pd("X[1,2,3,4]")


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=0, max_value=2 ** 32 - 1))
def test_round_trip_random_closures(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 4)
    w = random_word(rng, n, rng.randint(0, 7)) if n > 1 else parse_braid("braid n=1:")
    d = closure(w)
    assert validate(d).ok
    assert parse_diagram(serialize_diagram(d)) == d
    assert diagram_from_json(diagram_to_json(d)) == d


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=0, max_value=2 ** 32 - 1))
def test_closure_letter_counts(seed):
    rng = random.Random(seed)
    w = random_word(rng, rng.randint(2, 4), rng.randint(1, 8))
    c = counts(closure(w))
    assert c.c_plus == sum(1 for x in w.letters if x > 0)
    assert c.c_minus == sum(1 for x in w.letters if x < 0)
