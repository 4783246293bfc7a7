import pytest
from hypothesis import given, settings, strategies as st

from conftest import TREFOIL_PD, knot_fixtures
from oracles import fox_colorings_bruteforce
from knotrep.diagram import (
    ArcDegree, Diagram, DiagramError, InconsistentOrientation, InvalidGenerator,
    MultiComponent, OddValue, OutOfRange, SourceFormat, NotRealizable, parse_braid, parse_dt,
    parse_pd, read_braid_text, read_dt_text, read_knot_text, read_pd_text, to_pd_text,
)


def _pd(d):
    return [x.edges for x in d.crossings]


# braids

def test_empty_braid_is_unknot():
    d = parse_braid([], 1)
    assert d.crossing_count == 0 and d.arc_count == 1


def test_trefoil_braid():
    d = parse_braid([1, 1, 1], 2)
    assert d.crossing_count == 3
    assert [x.sign for x in d.crossings] == [1, 1, 1]
    assert d.source_format is SourceFormat.BRAID


def test_negative_generators_flip_signs():
    d = parse_braid([-1, -1, -1], 2)
    assert [x.sign for x in d.crossings] == [-1, -1, -1]


@pytest.mark.parametrize("word, strands, err", [
    ([2], 2, OutOfRange),
    ([0], 2, InvalidGenerator),
    ([1, 1], 2, MultiComponent),
    ([], 2, MultiComponent),
    ([], 0, OutOfRange),
])
def test_braid_errors(word, strands, err):
    with pytest.raises(err):
        parse_braid(word, strands)


def test_braid_text():
    assert _pd(read_braid_text("strands=2\n1 1 1\n")) == _pd(parse_braid([1, 1, 1], 2))
    with pytest.raises(DiagramError):
        read_braid_text("1 1 1\n")


# DT

def test_empty_dt_is_unknot():
    assert parse_dt([]).crossing_count == 0


def test_dt_trefoil():
    d = parse_dt([4, 6, 2])
    assert d.crossing_count == 3
    assert abs(d.writhe()) == 3


def test_dt_figure_eight_is_alternating_with_zero_writhe():
    assert parse_dt([4, 6, 8, 2]).writhe() == 0


def test_dt_errors():
    with pytest.raises(OddValue):
        parse_dt([4, 6, 3])
    with pytest.raises(NotRealizable):
        parse_dt([2, 2, 6])


def test_dt_text():
    assert _pd(read_dt_text("4, 6, 2")) == _pd(parse_dt([4, 6, 2]))


# PD

def test_empty_pd_is_unknot():
    assert parse_pd([]).crossing_count == 0


def test_pd_trefoil_matches_bruteforce_colorings():
    d = parse_pd(TREFOIL_PD)
    assert d.crossing_count == 3
    assert fox_colorings_bruteforce(_pd(d), 3) == 9


def test_arc_appearing_once():
    with pytest.raises(ArcDegree):
        parse_pd([(1, 4, 2, 5), (3, 6, 4, 1), (7, 2, 6, 3)])


def test_wrong_arity():
    with pytest.raises(ArcDegree):
        parse_pd([(1, 2, 3)])


def test_explicit_sign_conflict():
    d = parse_pd(TREFOIL_PD)
    bad = [(x.edges, -x.sign) for x in d.crossings]
    with pytest.raises(InconsistentOrientation):
        parse_pd(bad)


def test_pd_text_formats():
    text = "X[1,4,2,5]\nX[3,6,4,1]\nX[5,2,6,3]\n"
    assert _pd(read_pd_text(text)) == _pd(parse_pd(TREFOIL_PD))
    one_line = "X[1,4,2,5], X[3,6,4,1]; X[5,2,6,3]"
    assert _pd(read_pd_text(one_line)) == _pd(parse_pd(TREFOIL_PD))
    with pytest.raises(DiagramError):
        read_pd_text("Y[1,2,3,4]")


@pytest.mark.parametrize("name", sorted(knot_fixtures()))
def test_pd_roundtrip(name):
    d = knot_fixtures()[name]
    again = read_pd_text(to_pd_text(d))
    assert again.crossings == d.crossings
    assert again.arc_count == d.arc_count


def test_read_knot_text_dispatch():
    assert read_knot_text("strands=2\n1 1 1", SourceFormat.BRAID).crossing_count == 3
    assert read_knot_text("4 6 2", SourceFormat.DT).crossing_count == 3


def test_diagram_rejects_bad_arcs():
    from knotrep.diagram import Crossing

    with pytest.raises(ArcDegree):
        Diagram((Crossing((0, 1, 2, 3), 1),), 4)
    with pytest.raises(ArcDegree):
        Diagram((), 2)


def test_cross_format_colorings(knots):
    from knotrep.homs import fox_colorings

    for n in (3, 5, 7):
        vals = {fox_colorings(knots[k], n) for k in ("trefoil_braid", "trefoil_dt", "trefoil_pd")}
        assert len(vals) == 1
        vals = {fox_colorings(knots[k], n) for k in ("figure8_braid", "figure8_dt")}
        assert len(vals) == 1


def _invariant_holds(d):
    counts = {}
    for x in d.crossings:
        for e in x.edges:
            counts[e] = counts.get(e, 0) + 1
    if not d.crossings:
        return d.arc_count == 1
    return sorted(counts) == list(range(d.arc_count)) and set(counts.values()) == {2}


@settings(max_examples=300, deadline=None)
@given(st.lists(st.tuples(*[st.integers(0, 7)] * 4), max_size=4))
def test_fuzz_pd_accepts_only_valid(tuples):
    try:
        d = parse_pd(tuples)
    except DiagramError:
        return
    assert _invariant_holds(d)


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 4), st.lists(st.integers(-3, 3), max_size=7))
def test_fuzz_braids(strands, word):
    try:
        d = parse_braid(word, strands)
    except DiagramError:
        return
    assert _invariant_holds(d)
    assert d.crossing_count == len(word)


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(-10, 10), max_size=5))
def test_fuzz_dt(code):
    try:
        d = parse_dt(code)
    except DiagramError:
        return
    assert _invariant_holds(d)
