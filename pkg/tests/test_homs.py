import pytest

from conftest import knot_fixtures, trefoil_two_gen
from oracles import (
    all_perms, closure, eval_word, fox_colorings_bruteforce,
    hom_count_bruteforce, perm_mul,
)
from knotrep.groups import (
    FiniteGroup, alternating, cyclic, dihedral, format_cycles, group_by_name,
    group_from_text, parse_cycles, symmetric,
)
from knotrep.homs import (
    BudgetExceeded, NotFound, count_homs, enumerate_homs, find_separating_hom, fox_colorings,
)
from knotrep.presentation import Presentation, parse_word, tietze_simplify, wirtinger

FIXTURES = knot_fixtures()
FAMILY = ["C2", "C3", "S3", "S4", "A4", "D5"]


def simplified(name):
    return tietze_simplify(wirtinger(FIXTURES[name]))[0]


# groups

@pytest.mark.parametrize("name, order", [("C1", 1), ("C5", 5), ("D3", 6), ("D5", 10),
                                         ("S1", 1), ("S4", 24), ("A4", 12), ("A5", 60)])
def test_catalog_orders(name, order):
    G = group_by_name(name)
    assert G.order == order
    assert len(set(G.elements)) == order
    assert G.elements[G.identity] == tuple(range(G.degree))


@pytest.mark.parametrize("G", [symmetric(3), dihedral(4), alternating(4)])
def test_table_closed_and_consistent(G):
    assert set(G.elements) == set(closure(G.generators, G.degree))
    for i in range(G.order):
        assert G.mul(i, G.inverse[i]) == G.identity
        for j in range(G.order):
            assert G.elements[G.mul(i, j)] == perm_mul(G.elements[i], G.elements[j])


def test_conjugacy_classes_partition():
    G = symmetric(4)
    classes = G.conjugacy_classes()
    assert sorted(len(c) for c in classes) == [1, 3, 6, 6, 8]
    assert sorted(x for c in classes for x in c) == list(range(24))


def test_cycle_notation():
    p = parse_cycles("(1 2 3)(4 5)")
    assert p == (1, 2, 0, 4, 3)
    assert parse_cycles(format_cycles(p)) == p
    G = group_from_text("name: K4\ndegree: 4\n(1 2)(3 4)\n(1 3)(2 4)\n")
    assert G.order == 4 and G.name == "K4"


def test_bad_groups():
    with pytest.raises(ValueError):
        group_by_name("Q8")
    with pytest.raises(ValueError):
        FiniteGroup(3, [(0, 0, 1)])


def test_group_pickles():
    import pickle

    G = symmetric(3)
    H = pickle.loads(pickle.dumps(G))
    assert H.elements == G.elements and H.mul(1, 2) == G.mul(1, 2)


# hom counts

def test_unknot_counts():
    p = Presentation(1, ())
    assert count_homs(p, symmetric(3)) == 6


def test_trefoil_two_gen_counts(trefoil2):
    assert count_homs(trefoil2, cyclic(3)) == 3
    assert count_homs(trefoil2, symmetric(3)) == 12


def test_trefoil_s3_bruteforce_over_36_pairs(trefoil2):
    S3 = all_perms(3)
    ident = (0, 1, 2)
    pairs = [(x, y) for x in S3 for y in S3]
    assert len(pairs) == 36
    good = 0
    for x, y in pairs:
        xyx = perm_mul(perm_mul(x, y), x)
        yxy = perm_mul(perm_mul(y, x), y)
        good += xyx == yxy
    assert good == 12
    assert good == hom_count_bruteforce(2, trefoil2.relators, S3, 3)
    assert ident in S3


@pytest.mark.parametrize("name", ["unknot", "trefoil_braid", "figure8_dt", "cinquefoil"])
@pytest.mark.parametrize("group", ["C2", "C3", "S3", "S4"])
def test_counts_match_bruteforce(name, group):
    p = simplified(name)
    G = group_by_name(group)
    if G.order ** p.generator_count > 3 * 10 ** 5:
        pytest.skip("brute force too large")
    assert count_homs(p, G) == hom_count_bruteforce(
        p.generator_count, p.relators, list(G.elements), G.degree)


@pytest.mark.parametrize("group", FAMILY)
def test_cross_format_counts(group):
    G = group_by_name(group)
    tre = {count_homs(simplified(k), G) for k in ("trefoil_braid", "trefoil_dt", "trefoil_pd")}
    assert len(tre) == 1
    fig = {count_homs(simplified(k), G) for k in ("figure8_braid", "figure8_dt")}
    assert len(fig) == 1


@pytest.mark.parametrize("name", sorted(FIXTURES))
@pytest.mark.parametrize("group", ["C3", "S3", "D5"])
def test_abelian_floor(name, group):
    G = group_by_name(group)
    assert count_homs(simplified(name), G) >= G.order


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_pruned_equals_unpruned(name):
    p = simplified(name)
    for group in ("S3", "A4"):
        G = group_by_name(group)
        assert count_homs(p, G, prune=True) == count_homs(p, G, prune=False)


def test_parallel_equals_serial():
    p = simplified("figure8_dt")
    G = symmetric(4)
    assert count_homs(p, G, workers=3) == count_homs(p, G)


def test_enumeration_yields_valid_homs(trefoil2):
    G = symmetric(3)
    homs = list(enumerate_homs(trefoil2, G))
    assert len(homs) == 12 and homs == sorted(homs)
    for images in homs:
        assert all(G.evaluate(r, images) == G.identity for r in trefoil2.relators)


def test_up_to_conjugacy(trefoil2):
    # S3: trivial rep, the three abelian reps onto C2 form one class, two for C3
    # powers ... checked against explicit orbit counting
    G = symmetric(3)
    homs = list(enumerate_homs(trefoil2, G))
    orbits = {min(tuple(G.conjugate(x, g) for x in h) for g in range(G.order)) for h in homs}
    assert count_homs(trefoil2, G, up_to_conjugacy=True) == len(orbits)


def test_budget():
    p = wirtinger(FIXTURES["five_two"])
    with pytest.raises(BudgetExceeded) as exc:
        count_homs(p, symmetric(4), budget=1000)
    assert exc.value.size == 24 ** p.generator_count


# Fox colorings

@pytest.mark.parametrize("n", range(2, 10))
def test_unknot_colorings(n):
    assert fox_colorings(FIXTURES["unknot"], n) == n


@pytest.mark.parametrize("name, n, expected", [
    ("trefoil_braid", 3, 9), ("trefoil_pd", 3, 9), ("trefoil_dt", 3, 9),
    ("figure8_dt", 5, 25), ("figure8_braid", 5, 25), ("cinquefoil", 5, 25),
    ("five_two", 7, 49), ("trefoil_braid", 5, 5),
])
def test_colorings_known(name, n, expected):
    d = FIXTURES[name]
    assert fox_colorings_bruteforce([x.edges for x in d.crossings], n) == expected
    assert fox_colorings(d, n) == expected


@pytest.mark.parametrize("name", sorted(FIXTURES))
@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_colorings_match_bruteforce(name, n):
    d = FIXTURES[name]
    if n ** max(d.crossing_count, 1) > 10 ** 5:
        pytest.skip("brute force too large")
    assert fox_colorings(d, n) == fox_colorings_bruteforce([x.edges for x in d.crossings], n)


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_three_colorings_are_transposition_homs(name):
    p = wirtinger(FIXTURES[name])
    G = symmetric(3)
    if G.order ** p.generator_count > 10 ** 5:
        pytest.skip("enumeration too large")
    trans = [i for i in range(G.order) if G.is_transposition(i)]
    count = sum(1 for h in enumerate_homs(p, G) if all(x in trans for x in h))
    assert count == fox_colorings(FIXTURES[name], 3)


# separation

def test_separate_generator_in_c2():
    p = Presentation(1, ())
    hom = find_separating_hom(p, parse_word("g0"), [cyclic(2)])
    assert hom and hom.group == "C2"
    assert hom.permutations[0] != (0, 1)


def test_empty_word_never_separated():
    res = find_separating_hom(Presentation(1, ()), (), [cyclic(2)])
    assert isinstance(res, NotFound) and not res
    assert "TrivialWord" in res.notice


def test_trefoil_commutator_separated(trefoil2):
    c = parse_word("g0 g1 g0^-1 g1^-1")
    hom = find_separating_hom(trefoil2, c, [cyclic(2), cyclic(3), symmetric(3)])
    assert hom.group == "S3"
    x, y = hom.permutations
    img = eval_word(c, [x, y], 3)
    assert img != (0, 1, 2)
    # a 3-cycle: no fixed points, order 3
    assert all(img[i] != i for i in range(3))
    assert all(eval_word(r, [x, y], 3) == (0, 1, 2) for r in trefoil2.relators)


def test_abelian_targets_cannot_separate_commutator(trefoil2):
    c = parse_word("g0 g1 g0^-1 g1^-1")
    assert not find_separating_hom(trefoil2, c, [cyclic(2), cyclic(3)])


def test_word_outside_presentation(trefoil2):
    with pytest.raises(ValueError):
        find_separating_hom(trefoil2, parse_word("g5"), [cyclic(2)])
