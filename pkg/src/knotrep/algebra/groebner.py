"""Buchberger's algorithm over Q with the Gebauer-Moeller pair criteria.

Polynomials are converted to an internal form: a list of ``(key, exp, coeff)``
triples sorted by descending monomial key, where ``key`` is the additive
integer encoding supplied by :class:`MonomialOrder`.  Reduction keeps the
working polynomial in a dict plus a max-heap of keys.
"""
from __future__ import annotations

import heapq
import time
from dataclasses import dataclass

from .poly import GREVLEX, KEY_BASE, Polynomial, QQ

__all__ = [
    "Budget",
    "DegreeBudgetExceeded",
    "groebner",
    "normal_form",
    "s_polynomial",
    "is_groebner",
]


class DegreeBudgetExceeded(RuntimeError):
    """An intermediate polynomial outgrew the configured degree/size/time budget."""

    def __init__(self, reason, value=None, limit=None):
        self.reason = reason
        self.value = value
        self.limit = limit
        msg = reason if value is None else f"{reason}: {value} > {limit}"
        super().__init__(msg)


@dataclass(frozen=True)
class Budget:
    max_degree: int = 40
    max_terms: int = 200_000
    time_limit: float | None = None  # seconds per Groebner run
    deadline: float | None = None  # absolute time.monotonic() value shared by many runs

    def started(self):
        """Copy whose ``time_limit`` counts from now across every later call."""
        if self.time_limit is None:
            return self
        return Budget(self.max_degree, self.max_terms, None, time.monotonic() + self.time_limit)

    def stop_time(self):
        ends = [t for t in (self.deadline,
                            None if self.time_limit is None
                            else time.monotonic() + self.time_limit) if t is not None]
        return min(ends) if ends else None


DEFAULT_BUDGET = Budget()


class _Ring:
    __slots__ = ("nvars", "order", "_keys")

    def __init__(self, nvars, order):
        self.nvars = nvars
        self.order = order
        self._keys = {}

    def key(self, exp):
        k = self._keys.get(exp)
        if k is None:
            k = self._keys[exp] = self.order.key(exp)
        return k

    def internal(self, poly):
        terms = [(self.key(e), e, c) for e, c in poly.terms.items()]
        terms.sort(key=lambda t: t[0], reverse=True)
        return terms

    def external(self, terms):
        return Polynomial(self.nvars, {e: c for _, e, c in terms})


class _GPoly:
    __slots__ = ("terms", "lk", "lm", "lc", "mask", "deg")

    def __init__(self, terms):
        self.terms = terms
        self.lk, self.lm, self.lc = terms[0]
        self.mask = _mask(self.lm)
        self.deg = max(sum(e) for _, e, _ in terms)


def _mask(exp):
    m = 0
    for i, x in enumerate(exp):
        if x:
            m |= 1 << i
    return m


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


def _coprime(a, b):
    return not any(x and y for x, y in zip(a, b))


def _monic(terms):
    lc = terms[0][2]
    if lc == 1:
        return terms
    inv = 1 / lc
    return [(k, e, c * inv) for k, e, c in terms]


def _find_divisor(exp, emask, basis):
    for g in basis:
        if g.mask & ~emask:
            continue
        if _divides(g.lm, exp):
            return g
    return None


def _reduce(terms, basis, ring, check=None):
    """Full normal form of ``terms`` modulo ``basis``; returns sorted terms."""
    acc = {}
    heap = []
    for k, e, c in terms:
        acc[k] = [e, c]
        heap.append(-k)
    heapq.heapify(heap)
    out = []
    steps = 0
    while heap:
        k = -heapq.heappop(heap)
        ent = acc.pop(k, None)
        if ent is None:
            continue
        e, c = ent
        g = _find_divisor(e, _mask(e), basis) if basis else None
        if g is None:
            out.append((k, e, c))
            continue
        q = c / g.lc
        km = k - g.lk
        m = tuple(x - y for x, y in zip(e, g.lm))
        for gk, ge, gc in g.terms[1:]:
            nk = gk + km
            ent2 = acc.get(nk)
            if ent2 is None:
                acc[nk] = [tuple(x + y for x, y in zip(ge, m)), -q * gc]
                heapq.heappush(heap, -nk)
            else:
                ent2[1] -= q * gc
                if not ent2[1]:
                    del acc[nk]
        steps += 1
        if check is not None and steps % 256 == 0:
            check(len(acc))
    return out


def _spoly(f, g, ring):
    lcm = _lcm(f.lm, g.lm)
    mf = tuple(x - y for x, y in zip(lcm, f.lm))
    mg = tuple(x - y for x, y in zip(lcm, g.lm))
    kf = ring.key(mf)
    kg = ring.key(mg)
    acc = {}
    for k, e, c in f.terms[1:]:
        nk = k + kf
        acc[nk] = [tuple(x + y for x, y in zip(e, mf)), c / f.lc]
    for k, e, c in g.terms[1:]:
        nk = k + kg
        v = c / g.lc
        ent = acc.get(nk)
        if ent is None:
            acc[nk] = [tuple(x + y for x, y in zip(e, mg)), -v]
        else:
            ent[1] -= v
            if not ent[1]:
                del acc[nk]
    terms = [(k, e, c) for k, (e, c) in acc.items()]
    terms.sort(key=lambda t: t[0], reverse=True)
    return terms


class _Guard:
    def __init__(self, budget):
        self.budget = budget
        self.deadline = budget.stop_time()

    def __call__(self, nterms=0):
        if nterms > self.budget.max_terms:
            raise DegreeBudgetExceeded("term count", nterms, self.budget.max_terms)
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise DegreeBudgetExceeded("time limit")

    def poly(self, gp):
        if gp.deg > self.budget.max_degree:
            raise DegreeBudgetExceeded("degree", gp.deg, self.budget.max_degree)
        self(len(gp.terms))


def _check_input(polys, nvars, budget):
    limit = min(budget.max_degree, KEY_BASE // 2 - 1)
    for p in polys:
        if p.nvars != nvars:
            raise ValueError("generators live in different rings")
        d = p.degree()
        if d > limit:
            raise DegreeBudgetExceeded("degree", d, limit)


def groebner(polys, nvars, order=GREVLEX, budget=DEFAULT_BUDGET):
    """Reduced Groebner basis of the ideal generated by ``polys``.

    Returns monic polynomials sorted by descending leading monomial.  The zero
    ideal yields ``[]`` and the unit ideal ``[1]``.
    """
    _check_input(polys, nvars, budget)
    ring = _Ring(nvars, order)
    guard = _Guard(budget)
    store = []
    active = []
    pairs = []

    def update(h):
        """Gebauer-Moeller update with the new element index ``h``."""
        nonlocal active, pairs
        H = store[h]
        cand = [(h, g, _lcm(H.lm, store[g].lm)) for g in active]
        kept = []
        for idx, (a, b, lcm) in enumerate(cand):
            if _coprime(H.lm, store[b].lm):
                kept.append((a, b, lcm))
                continue
            rest = [c for c in cand[idx + 1:]] + kept
            if any(_divides(other[2], lcm) for other in rest):
                continue
            kept.append((a, b, lcm))
        new_pairs = [(a, b, lcm) for a, b, lcm in kept
                     if not _coprime(H.lm, store[b].lm)]
        survivors = []
        for a, b, lcm in pairs:
            if (_divides(H.lm, lcm)
                    and _lcm(store[a].lm, H.lm) != lcm
                    and _lcm(store[b].lm, H.lm) != lcm):
                continue
            survivors.append((a, b, lcm))
        pairs = survivors + new_pairs
        active = [g for g in active if not _divides(H.lm, store[g].lm)] + [h]

    def add(terms):
        gp = _GPoly(_monic(terms))
        guard.poly(gp)
        store.append(gp)
        update(len(store) - 1)
        return gp

    for p in polys:
        if p.is_zero():
            continue
        terms = _reduce(ring.internal(p), [store[i] for i in active], ring, guard)
        if not terms:
            continue
        gp = add(terms)
        if not any(gp.lm):
            return [Polynomial.constant(nvars, 1)]

    while pairs:
        best = min(range(len(pairs)),
                   key=lambda i: (ring.key(pairs[i][2]), pairs[i][0], pairs[i][1]))
        a, b, _ = pairs.pop(best)
        guard()
        s = _spoly(store[a], store[b], ring)
        if not s:
            continue
        h = _reduce(s, [store[i] for i in active], ring, guard)
        if not h:
            continue
        gp = add(h)
        if not any(gp.lm):
            return [Polynomial.constant(nvars, 1)]

    return [ring.external(t) for t in _interreduce([store[i] for i in active], ring, guard)]


def _interreduce(basis, ring, guard):
    minimal = []
    for i, g in enumerate(basis):
        dominated = False
        for j, h in enumerate(basis):
            if i == j:
                continue
            if _divides(h.lm, g.lm) and (h.lm != g.lm or j < i):
                dominated = True
                break
        if not dominated:
            minimal.append(g)
    reduced = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        tail = _reduce(g.terms[1:], others, ring, guard)
        reduced.append(_monic([g.terms[0]] + tail))
    reduced.sort(key=lambda t: t[0][0], reverse=True)
    return reduced


def normal_form(f, basis, order=GREVLEX):
    """Remainder of ``f`` on division by ``basis`` (a Groebner basis for full use)."""
    ring = _Ring(f.nvars, order)
    gb = [_GPoly(ring.internal(g)) for g in basis if not g.is_zero()]
    return ring.external(_reduce(ring.internal(f), gb, ring))


def s_polynomial(f, g, order=GREVLEX):
    ring = _Ring(f.nvars, order)
    return ring.external(_spoly(_GPoly(ring.internal(f)), _GPoly(ring.internal(g)), ring))


def is_groebner(basis, order=GREVLEX):
    """Buchberger's criterion: every S-polynomial reduces to zero."""
    basis = [g for g in basis if not g.is_zero()]
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            if not normal_form(s_polynomial(basis[i], basis[j], order), basis, order).is_zero():
                return False
    return True
