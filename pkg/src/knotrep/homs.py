"""Homomorphisms from finitely presented groups to finite permutation groups.

Enumeration backtracks over generator images in element-table order.  A
relator is evaluated as soon as every generator it mentions has an image, so
partial assignments die early.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .intmat import smith_diagonal
from .presentation import free_reduce, wirtinger_arcs

__all__ = [
    "BudgetExceeded",
    "HomAssignment",
    "NotFound",
    "count_homs",
    "enumerate_homs",
    "fox_colorings",
    "find_separating_hom",
    "DEFAULT_SEARCH_BUDGET",
]

DEFAULT_SEARCH_BUDGET = 10 ** 8


class BudgetExceeded(RuntimeError):
    def __init__(self, size, budget):
        self.size = size
        self.budget = budget
        super().__init__(f"search space {size} exceeds budget {budget}")


@dataclass(frozen=True)
class HomAssignment:
    group: str
    images: tuple  # element indices, one per generator
    permutations: tuple
    satisfied: bool = True


@dataclass(frozen=True)
class NotFound:
    notice: str

    def __bool__(self):
        return False


def _check_budget(p, G, budget):
    size = G.order ** p.generator_count
    if size > budget:
        raise BudgetExceeded(size, budget)


def _relator_schedule(p):
    schedule = [[] for _ in range(p.generator_count)]
    for r in p.relators:
        if r:
            schedule[max(g for g, _ in r)].append(r)
    return schedule


def _search(p, G, first_images):
    """Yield every satisfying image tuple whose first entry lies in ``first_images``."""
    k = p.generator_count
    schedule = _relator_schedule(p)
    images = [0] * k
    ident = G.identity
    evaluate = G.evaluate
    options = [list(first_images)] + [range(G.order)] * (k - 1)
    stack = [iter(options[0])]
    while stack:
        level = len(stack) - 1
        for x in stack[-1]:
            images[level] = x
            if all(evaluate(r, images) == ident for r in schedule[level]):
                if level + 1 == k:
                    yield tuple(images)
                else:
                    stack.append(iter(options[level + 1]))
                    break
        else:
            stack.pop()


def _count_partition(args):
    p, G, firsts = args
    return sum(1 for _ in _search(p, G, firsts))


def enumerate_homs(p, G, budget=DEFAULT_SEARCH_BUDGET):
    """All homomorphisms as image tuples, in lexicographic element-table order."""
    _check_budget(p, G, budget)
    return _search(p, G, range(G.order))


def count_homs(p, G, budget=DEFAULT_SEARCH_BUDGET, prune=True, up_to_conjugacy=False,
               workers=1):
    """Number of homomorphisms from the presented group to ``G``.

    With ``prune`` the first generator only takes conjugacy-class
    representatives and each partial count is weighted by the class size.
    ``up_to_conjugacy`` counts orbits of the conjugation action instead.
    ``workers > 1`` splits the search by the first generator's image across
    processes.
    """
    _check_budget(p, G, budget)
    if up_to_conjugacy:
        seen = set()
        for images in _search(p, G, range(G.order)):
            seen.add(min(tuple(G.conjugate(x, g) for x in images) for g in range(G.order)))
        return len(seen)
    if prune:
        classes = G.conjugacy_classes()
        parts = [((cls[0],), len(cls)) for cls in classes]
    else:
        parts = [((x,), 1) for x in range(G.order)]
    jobs = [(p, G, firsts) for firsts, _ in parts]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            counts = list(pool.map(_count_partition, jobs))
    else:
        counts = [_count_partition(job) for job in jobs]
    return sum(c * w for c, (_, w) in zip(counts, parts))


def fox_colorings(diagram, n):
    """Number of Fox n-colorings of the diagram's arcs.

    Each crossing imposes ``2*over - under_in - under_out ≡ 0 (mod n)``; the
    solution count of that homogeneous system is read off the Smith normal
    form as a product of ``gcd(d_i, n)``.
    """
    if n < 2:
        raise ValueError("modulus must be at least 2")
    if not diagram.crossings:
        return n
    arc_of, count = wirtinger_arcs(diagram)
    rows = []
    for x in diagram.crossings:
        row = [0] * count
        row[arc_of[x.edges[1]]] += 2
        row[arc_of[x.under_in]] -= 1
        row[arc_of[x.under_out]] -= 1
        rows.append(row)
    diag = smith_diagonal(rows, count)
    diag += [0] * (count - len(diag))
    total = 1
    for d in diag:
        total *= _gcd(d, n)
    return total


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return abs(a)


def find_separating_hom(p, c, targets, budget=DEFAULT_SEARCH_BUDGET):
    """First homomorphism (target order, then assignment order) with ``c`` ↦ non-identity."""
    c = free_reduce(c)
    if not c:
        return NotFound("TrivialWord: the identity is never separated")
    for g, _ in c:
        if not 0 <= g < p.generator_count:
            raise ValueError(f"word uses generator {g} outside the presentation")
    for G in targets:
        for images in enumerate_homs(p, G, budget):
            if G.evaluate(c, images) != G.identity:
                hom = HomAssignment(G.name, images, tuple(G.elements[i] for i in images))
                if not _verify(p, c, G, images):
                    raise AssertionError("separating homomorphism failed re-verification")
                return hom
    return NotFound("no target group separates the word")


def _verify(p, c, G, images):
    return (all(G.evaluate(r, images) == G.identity for r in p.relators)
            and G.evaluate(c, images) != G.identity)
