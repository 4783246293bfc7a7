"""Polynomial ideals over Q: dimension, elimination, radical membership, splitting."""
from __future__ import annotations

import enum
import threading
from dataclasses import dataclass, field
from functools import lru_cache

from .groebner import DEFAULT_BUDGET, Budget, DegreeBudgetExceeded, groebner, normal_form
from .poly import GREVLEX, MonomialOrder, Polynomial, QQ, default_names, parse_polynomial

__all__ = [
    "Ideal",
    "IdealVerdict",
    "krull_dimension",
    "dimension_report",
    "real_radical_caveat",
    "eliminate",
    "radical_member",
    "ideal_equal",
    "split_components",
    "is_unit",
    "factor_polynomial",
    "parse_ideal",
    "format_ideal",
]


class Ideal:
    """Finitely generated ideal in Q[x_0..x_{n-1}] under a fixed monomial order.

    The reduced Groebner basis is computed on first request and cached; the
    cache is written once and never changed afterwards.
    """

    def __init__(self, gens, nvars=None, order=GREVLEX, names=None):
        gens = [g for g in gens if not g.is_zero()]
        if nvars is None:
            if not gens:
                raise ValueError("cannot infer the ring of an empty generator list")
            nvars = gens[0].nvars
        for g in gens:
            if g.nvars != nvars:
                raise ValueError("generator lives in a different ring")
        self.gens = tuple(gens)
        self.nvars = nvars
        self.order = order
        self.names = list(names) if names is not None else default_names(nvars)
        if len(self.names) != nvars:
            raise ValueError("need one name per variable")
        self._basis = None
        self._lock = threading.Lock()

    def __repr__(self):
        body = ", ".join(g.to_str(self.names, self.order) for g in self.gens)
        return f"Ideal({body or '0'} in {self.nvars} vars)"

    def groebner(self, budget=DEFAULT_BUDGET):
        if self._basis is None:
            basis = tuple(groebner(list(self.gens), self.nvars, self.order, budget))
            with self._lock:
                if self._basis is None:
                    self._basis = basis
        return list(self._basis)

    def with_gens(self, extra):
        return Ideal(list(self.gens) + list(extra), self.nvars, self.order, self.names)

    def with_order(self, order):
        return Ideal(self.gens, self.nvars, order, self.names)

    def reduce(self, f, budget=DEFAULT_BUDGET):
        return normal_form(f, self.groebner(budget), self.order)

    def contains(self, f, budget=DEFAULT_BUDGET):
        return self.reduce(f, budget).is_zero()

    def poly(self, text):
        return parse_polynomial(text, self.names)


def parse_ideal(text, order=GREVLEX):
    """Read the ``vars: x y z`` header format, one polynomial per line."""
    names = None
    polys = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("vars:"):
            names = line[len("vars:"):].split()
            continue
        if names is None:
            raise ValueError("ideal text must start with a 'vars:' header")
        polys.append(parse_polynomial(line, names))
    if names is None:
        raise ValueError("missing 'vars:' header")
    return Ideal(polys, len(names), order, names)


def format_ideal(ideal, polys=None):
    polys = ideal.gens if polys is None else polys
    lines = ["vars: " + " ".join(ideal.names)]
    lines += [p.to_str(ideal.names, ideal.order) for p in polys]
    return "\n".join(lines) + "\n"


def is_unit(ideal, budget=DEFAULT_BUDGET):
    gb = ideal.groebner(budget)
    return len(gb) == 1 and gb[0].is_constant()


# dimension


def _leading_supports(ideal, budget):
    masks = set()
    for g in ideal.groebner(budget):
        e = g.leading_monomial(ideal.order)
        m = 0
        for i, x in enumerate(e):
            if x:
                m |= 1 << i
        masks.add(m)
    return frozenset(masks)


@lru_cache(maxsize=4096)
def _min_hitting_set(masks, nvars):
    """Size of the smallest variable set meeting every support in ``masks``."""
    masks = [m for m in masks if not any(o != m and (o & m) == o for o in masks)]
    if not masks:
        return 0
    target = min(masks, key=lambda m: (bin(m).count("1"), m))
    best = nvars + 1
    for i in range(nvars):
        if target >> i & 1:
            rest = frozenset(m for m in masks if not (m >> i & 1))
            best = min(best, 1 + _min_hitting_set(rest, nvars))
    return best


def krull_dimension(ideal, budget=DEFAULT_BUDGET):
    """Krull dimension of Q[x]/I, or -1 when I is the unit ideal.

    A variable subset is independent when no leading monomial of the Groebner
    basis is supported inside it; the dimension is the size of the largest
    one, i.e. ``n`` minus the smallest set of variables meeting every
    leading-monomial support.
    """
    if is_unit(ideal, budget):
        return -1
    masks = _leading_supports(ideal, budget)
    return ideal.nvars - _min_hitting_set(masks, ideal.nvars)


def _is_positive_even_form(p):
    """Sum of even monomials with positive coefficients (and at least one variable)."""
    if p.is_constant():
        return False
    return all(c > 0 and all(x % 2 == 0 for x in e) for e, c in p.terms.items())


def real_radical_caveat(ideal, budget=DEFAULT_BUDGET):
    """Detect generators whose real zero set is visibly thinner than the complex one.

    Fires when some basis element has an irreducible factor that is a
    positive combination of even monomials, e.g. ``x^2 + y^2``.  This is a
    sufficient test only; silence does not certify the Krull bound is sharp.
    """
    for g in ideal.groebner(budget):
        for f, _ in factor_polynomial(g)[1]:
            if _is_positive_even_form(f) or _is_positive_even_form(-f):
                return True
    return False


@dataclass
class DimensionReport:
    dimension: int
    real_radical_caveat: bool
    nvars: int

    def as_dict(self):
        return {"dimension": self.dimension, "nvars": self.nvars,
                "real_radical_caveat": self.real_radical_caveat}


def dimension_report(ideal, budget=DEFAULT_BUDGET):
    return DimensionReport(krull_dimension(ideal, budget),
                           real_radical_caveat(ideal, budget), ideal.nvars)


# elimination and radicals


def eliminate(ideal, drop, budget=DEFAULT_BUDGET):
    """Elimination ideal ``I ∩ Q[kept variables]`` as an ideal in the kept variables."""
    drop = sorted(set(drop))
    if not drop:
        return Ideal(ideal.groebner(budget), ideal.nvars, ideal.order, ideal.names)
    keep = [i for i in range(ideal.nvars) if i not in drop]
    order = MonomialOrder("block", split=len(drop), perm=drop + keep)
    gb = groebner(list(ideal.gens), ideal.nvars, order, budget)
    dropped = set(drop)
    survivors = []
    for g in gb:
        if any(e[i] for e in g.terms for i in dropped):
            continue
        survivors.append(_restrict(g, keep))
    names = [ideal.names[i] for i in keep]
    return Ideal(survivors, len(keep), GREVLEX, names)


def _restrict(p, keep):
    return Polynomial(len(keep), {tuple(e[i] for i in keep): c for e, c in p.terms.items()})


def radical_member(f, ideal, budget=DEFAULT_BUDGET):
    """True iff ``f`` vanishes on the complex zero set of ``ideal`` (Rabinowitsch)."""
    if f.nvars != ideal.nvars:
        raise ValueError("polynomial and ideal live in different rings")
    if f.is_zero():
        return True
    n = ideal.nvars
    t = Polynomial.variable(n + 1, n)
    gens = [g.embed(n + 1) for g in ideal.gens]
    gens.append(1 - t * f.embed(n + 1))
    gb = groebner(gens, n + 1, GREVLEX, budget)
    return len(gb) == 1 and gb[0].is_constant()


def _radically_contained(I, J, budget):
    """Every generator of I lies in the radical of J."""
    return all(radical_member(g, J, budget) for g in I.gens)


class IdealVerdict(enum.Enum):
    EQUAL = "Equal"
    FIRST_IN_SECOND = "ProperSub(I⊂J)"
    SECOND_IN_FIRST = "ProperSub(J⊂I)"
    INCOMPARABLE = "Incomparable"


def ideal_equal(I, J, budget=DEFAULT_BUDGET):
    """Compare two ideals up to radical."""
    if I.nvars != J.nvars:
        raise ValueError("ideals live in different rings")
    i_in_j = _radically_contained(I, J, budget)
    j_in_i = _radically_contained(J, I, budget)
    if i_in_j and j_in_i:
        return IdealVerdict.EQUAL
    if i_in_j:
        return IdealVerdict.FIRST_IN_SECOND
    if j_in_i:
        return IdealVerdict.SECOND_IN_FIRST
    return IdealVerdict.INCOMPARABLE


# factoring and splitting


def factor_polynomial(p):
    """Factor over Q: ``(content, [(irreducible, multiplicity), ...])``.

    Factors are normalised to have leading coefficient 1 under grevlex and are
    returned in a deterministic order.
    """
    import sympy

    n = p.nvars
    if p.is_zero():
        return QQ(0), []
    if p.is_constant():
        return p.constant_term(), []
    syms = sympy.symbols(f"x0:{n}") if n > 1 else (sympy.Symbol("x0"),)
    data = {e: sympy.Rational(int(c.numerator), int(c.denominator)) for e, c in p.terms.items()}
    sp = sympy.Poly.from_dict(data, *syms, domain=sympy.QQ)
    content, factors = sp.factor_list()
    out = []
    scale = QQ(str(content))
    for fac, mult in factors:
        fdict = fac.as_dict()
        q = Polynomial(n, {tuple(e): QQ(str(c)) for e, c in fdict.items()})
        lc = q.leading_term(GREVLEX)[1]
        scale *= lc ** mult
        out.append((q.scale(1 / lc), mult))
    out.sort(key=lambda fm: (fm[0].degree(), fm[0].to_str()))
    return scale, out


@dataclass
class Splitting:
    components: list
    complete: bool = True
    notes: list = field(default_factory=list)


def split_components(ideal, budget=DEFAULT_BUDGET, max_depth=12):
    """Split ``V(ideal)`` along rational factorisations of Groebner basis elements.

    Returns ideals whose intersection has the same radical as ``ideal``.  This
    is a partial decomposition: branches are not certified prime.
    """
    return split_components_report(ideal, budget, max_depth).components


def split_components_report(ideal, budget=DEFAULT_BUDGET, max_depth=12):
    result = Splitting([])

    def visit(I, depth):
        gb = I.groebner(budget)
        if len(gb) == 1 and gb[0].is_constant():
            return []
        for g in gb:
            _, factors = factor_polynomial(g)
            if len(factors) > 1 or (factors and factors[0][1] > 1):
                if depth >= max_depth:
                    result.complete = False
                    result.notes.append("split depth limit reached")
                    return [I]
                branches = []
                base = [h for h in gb if h is not g]
                for f, _ in factors:
                    J = Ideal(base + [f], I.nvars, I.order, I.names)
                    branches.extend(visit(J, depth + 1))
                return branches
        return [I]

    found = visit(ideal, 0)
    result.components = _drop_redundant(found, budget)
    return result


def _drop_redundant(ideals, budget):
    """Remove branches whose zero set lies inside another branch's zero set."""
    keep = []
    for i, A in enumerate(ideals):
        redundant = False
        for j, B in enumerate(ideals):
            if i == j:
                continue
            if _radically_contained(B, A, budget):
                # V(A) ⊆ V(B); on equality keep the earliest
                if not _radically_contained(A, B, budget) or j < i:
                    redundant = True
                    break
        if not redundant:
            keep.append(A)
    return keep
