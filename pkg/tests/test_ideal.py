import itertools

import pytest
import sympy

from knotrep.algebra.groebner import Budget, DegreeBudgetExceeded, groebner
from knotrep.algebra.ideal import (
    Ideal, IdealVerdict, dimension_report, eliminate, format_ideal, ideal_equal, is_unit,
    krull_dimension, parse_ideal, radical_member, real_radical_caveat, split_components,
    split_components_report,
)
from knotrep.algebra.poly import Polynomial, parse_polynomial


def ideal(*polys, names=("x", "y")):
    names = list(names)
    return Ideal([parse_polynomial(p, names) for p in polys], len(names), names=names)


def krull_oracle(ideal_):
    """Largest variable set with no leading monomial supported inside it."""
    gb = groebner(list(ideal_.gens), ideal_.nvars, ideal_.order)
    if gb and gb[0].is_constant():
        return -1
    lms = [g.leading_monomial(ideal_.order) for g in gb]
    n = ideal_.nvars
    for size in range(n, -1, -1):
        for S in itertools.combinations(range(n), size):
            if not any(all(e[i] == 0 or i in S for i in range(n)) for e in lms):
                return size
    return -1


# text format

def test_ideal_text_roundtrip():
    text = "vars: a b c\na^2 - b\n1/2*b*c + 3\n"
    I = parse_ideal(text)
    assert I.names == ["a", "b", "c"]
    again = parse_ideal(format_ideal(I))
    assert again.gens == I.gens


def test_ideal_text_requires_header():
    with pytest.raises(ValueError):
        parse_ideal("x^2\n")


# dimension

@pytest.mark.parametrize("n", range(0, 9))
def test_zero_ideal_dimension(n):
    assert krull_dimension(Ideal([], n)) == n


def test_hyperbola_dimension():
    assert krull_dimension(ideal("x*y - 1")) == 1


def test_sum_of_squares_dimension_and_caveat():
    I = ideal("x^2 + y^2")
    assert krull_dimension(I) == 1
    assert real_radical_caveat(I)
    rep = dimension_report(I)
    assert rep.dimension == 1 and rep.real_radical_caveat


def test_no_caveat_on_hyperbola():
    assert not real_radical_caveat(ideal("x*y - 1"))


def test_unit_ideal_dimension():
    assert krull_dimension(ideal("x", "x - 1")) == -1
    assert is_unit(ideal("x", "x - 1"))


MONO_CHAIN = [
    ("x*y*z - 1",),
    ("x*y*z - 1", "x - y"),
    ("x*y*z - 1", "x - y", "y - z"),
    ("x^2 + y^2 + z^2 - 1",),
    ("x^2 + y^2 + z^2 - 1", "x*y"),
    ("x^2 + y^2 + z^2 - 1", "x*y", "x - z"),
]


@pytest.mark.parametrize("gens", MONO_CHAIN)
def test_dimension_matches_independent_set_oracle(gens):
    I = ideal(*gens, names=("x", "y", "z"))
    assert krull_dimension(I) == krull_oracle(I)


@pytest.mark.parametrize("start", [0, 3])
def test_dimension_monotone_under_inclusion(start):
    dims = [krull_dimension(ideal(*MONO_CHAIN[i], names=("x", "y", "z")))
            for i in range(start, start + 3)]
    assert dims == sorted(dims, reverse=True)


# elimination

def test_eliminate_hyperbola_projection():
    E = eliminate(ideal("x*y - 1"), [1])
    assert E.nvars == 1 and E.gens == ()


def test_eliminate_twisted_cubic_against_resultant():
    names = ("t", "x", "y")
    I = ideal("x - t^2", "y - t^3", names=names)
    E = eliminate(I, [0])
    t, x, y = sympy.symbols("t x y")
    res = sympy.resultant(x - t**2, y - t**3, t)
    assert len(E.gens) == 1
    ours = E.gens[0]
    expected = parse_polynomial(str(sympy.expand(res)).replace("**", "^"), ["x", "y"])
    assert ours.monic() == expected.monic()


def test_eliminate_nothing_keeps_basis():
    I = ideal("x^2 + y^2 - 1", "x - y")
    E = eliminate(I, [])
    assert list(E.gens) == I.groebner()


def test_eliminated_generators_lie_in_ideal():
    I = ideal("x*y*z - 1", "x - y^2", names=("x", "y", "z"))
    E = eliminate(I, [0])
    for g in E.gens:
        assert I.contains(g.embed(3, [1, 2]))


# radical membership and comparison

def test_radical_member_examples():
    assert radical_member(parse_polynomial("x", ["x", "y"]), ideal("x^2"))
    assert not radical_member(Polynomial.constant(2, 1), ideal("x"))
    assert not radical_member(parse_polynomial("y", ["x", "y"]), ideal("x*y - 1"))


def test_radical_member_against_power_oracle():
    # x + y is nilpotent modulo (x^2, y^2): (x+y)^3 lies in the ideal
    I = ideal("x^2", "y^2")
    f = parse_polynomial("x + y", ["x", "y"])
    assert I.contains(f ** 3)
    assert radical_member(f, I)


@pytest.mark.parametrize("a, b, verdict", [
    (("x",), ("x^2",), IdealVerdict.EQUAL),
    (("x*y - 1",), ("x*y - 1", "x - 1"), IdealVerdict.FIRST_IN_SECOND),
    (("x",), ("y",), IdealVerdict.INCOMPARABLE),
    (("x*y - 1", "x - 1"), ("x*y - 1",), IdealVerdict.SECOND_IN_FIRST),
])
def test_ideal_equal(a, b, verdict):
    assert ideal_equal(ideal(*a), ideal(*b)) is verdict


def test_ideal_equal_consistent_with_membership_oracle():
    I, J = ideal("x*y - 1"), ideal("x*y - 1", "x - 1")
    x_minus_1 = parse_polynomial("x - 1", ["x", "y"])
    assert not radical_member(x_minus_1, I)
    assert all(J.contains(g) for g in I.gens)


# splitting

def _gens_set(I):
    return {g.to_str(I.names) for g in I.groebner()}


def test_split_monomial():
    comps = split_components(ideal("x*y"))
    assert sorted(map(_gens_set, comps), key=sorted) == [{"x"}, {"y"}]


def test_split_univariate():
    comps = split_components(ideal("x^2 - 1"))
    assert {frozenset(_gens_set(c)) for c in comps} == {frozenset({"x - 1"}),
                                                         frozenset({"x + 1"})}


def test_no_split_irreducible():
    rep = split_components_report(ideal("x^2 + y^2 - 1"))
    assert len(rep.components) == 1 and rep.complete


@pytest.mark.parametrize("gens", [("x*y",), ("x^2 - 1",)])
def test_split_product_lies_in_radical(gens):
    I = ideal(*gens)
    comps = split_components(I)
    for choice in itertools.product(*[c.gens for c in comps]):
        prod = Polynomial.constant(2, 1)
        for g in choice:
            prod = prod * g
        assert radical_member(prod, I)


def test_split_drops_embedded_branches():
    # x*(x*y) : branch x=0 contains nothing new beyond the x-axis/y-axis pair
    comps = split_components(ideal("x^2*y", "x*y^2"))
    assert sorted(map(_gens_set, comps), key=sorted) == [{"x"}, {"y"}]


def test_budget_propagates():
    with pytest.raises(DegreeBudgetExceeded):
        krull_dimension(ideal("x^9 - y", "y^9 - x"), Budget(max_degree=5))


def test_cached_basis_shared():
    I = ideal("x^2 - y")
    assert I.groebner() is not I.groebner()  # copies handed out
    assert I.groebner() == I.groebner()
