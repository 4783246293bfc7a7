"""Defining ideals of SO(N) and SU(2) representation varieties of presented groups.

Coordinates are the matrix entries (SO(N)) or quaternion components (SU(2))
of the generator images.  Each relator ``w`` contributes the entries of
``eval(u) - eval(v^-1)`` where ``w = u v`` is split in half; modulo the group
equations this generates the same ideal as the entries of ``eval(w) - 1`` at
half the degree.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .algebra.groebner import DEFAULT_BUDGET, DegreeBudgetExceeded
from .algebra.ideal import (
    Ideal,
    krull_dimension,
    real_radical_caveat,
    split_components_report,
)
from .algebra.poly import GREVLEX, Polynomial
from .presentation import invert

__all__ = [
    "Target",
    "Gauge",
    "UnsupportedTarget",
    "RelatorSurvived",
    "RepVarietyModel",
    "DimInvariant",
    "build_rep_ideal",
    "group_ideal",
    "abelian_slice",
    "variety_dimension",
    "reduced_ideal",
    "evaluate_word",
]

MAX_SO_N = 4


class UnsupportedTarget(ValueError):
    pass


class RelatorSurvived(ValueError):
    """A relator does not vanish once all generators are identified."""


class Gauge(enum.Enum):
    NONE = "none"
    FIX_FIRST = "fix1"


@dataclass(frozen=True)
class Target:
    kind: str  # "SO" or "SU2"
    n: int = 2

    def __post_init__(self):
        if self.kind == "SO":
            if not 2 <= self.n <= MAX_SO_N:
                raise UnsupportedTarget(f"SO({self.n}) is outside the supported range 2..{MAX_SO_N}")
        elif self.kind == "SU2":
            object.__setattr__(self, "n", 2)
        else:
            raise UnsupportedTarget(f"unknown target {self.kind!r}")

    @classmethod
    def parse(cls, text):
        t = text.strip().lower()
        if t == "su2":
            return cls("SU2")
        if t.startswith("so") and t[2:].isdigit():
            return cls("SO", int(t[2:]))
        raise UnsupportedTarget(f"unknown model {text!r}; expected su2 or so2..so{MAX_SO_N}")

    @property
    def block_size(self):
        return 4 if self.kind == "SU2" else self.n * self.n

    @property
    def label(self):
        return "su2" if self.kind == "SU2" else f"so{self.n}"

    @property
    def group_dimension(self):
        return 3 if self.kind == "SU2" else self.n * (self.n - 1) // 2


@dataclass
class RepVarietyModel:
    presentation: object
    target: Target
    gauge: Gauge
    ideal: Ideal
    variable_scheme: dict
    group_equations: list
    relator_equations: list
    gauge_equations: list
    pins: dict = field(default_factory=dict)

    @property
    def nvars(self):
        return self.ideal.nvars

    @property
    def free_variables(self):
        return self.ideal.nvars - len(self.pins)

    def header(self):
        return {
            "target": self.target.label,
            "N": self.target.n,
            "gauge": self.gauge.value,
            "nvars": self.nvars,
            "free_variables": self.free_variables,
            "variable_scheme": {str(g): [self.ideal.names[i] for i in idx]
                                for g, idx in self.variable_scheme.items()},
            "equations": {"group": len(self.group_equations),
                          "relator": len(self.relator_equations),
                          "gauge": len(self.gauge_equations)},
        }

    def satisfied_by(self, point):
        """Exact check that a rational point lies on the variety."""
        return all(g.evaluate(point) == 0 for g in self.ideal.gens)


# matrix / quaternion algebra on polynomial entries


def _mat_mul(A, B):
    n = len(A)
    return [[sum((A[i][k] * B[k][j] for k in range(n)), Polynomial.zero(A[0][0].nvars))
             for j in range(n)] for i in range(n)]


def _transpose(A):
    return [list(row) for row in zip(*A)]


def _det(A):
    n = len(A)
    if n == 1:
        return A[0][0]
    if n == 2:
        return A[0][0] * A[1][1] - A[0][1] * A[1][0]
    total = Polynomial.zero(A[0][0].nvars)
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in A[1:]]
        term = A[0][j] * _det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def _quat_mul(p, q):
    a1, b1, c1, d1 = p
    a2, b2, c2, d2 = q
    return [
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    ]


def _quat_conj(q):
    return [q[0], -q[1], -q[2], -q[3]]


class _Algebra:
    """Generator images and products for one target in a fixed polynomial ring."""

    def __init__(self, target, blocks, nvars):
        self.target = target
        self.nvars = nvars
        self.images = []
        for idx in blocks:
            v = [Polynomial.variable(nvars, i) for i in idx]
            if target.kind == "SU2":
                self.images.append(v)
            else:
                n = target.n
                self.images.append([v[r * n:(r + 1) * n] for r in range(n)])

    def one(self):
        if self.target.kind == "SU2":
            return [Polynomial.constant(self.nvars, 1)] + [Polynomial.zero(self.nvars)] * 3
        n = self.target.n
        return [[Polynomial.constant(self.nvars, 1 if i == j else 0) for j in range(n)]
                for i in range(n)]

    def letter(self, g, e):
        x = self.images[g]
        if e == 1:
            return x
        return _quat_conj(x) if self.target.kind == "SU2" else _transpose(x)

    def mul(self, x, y):
        return _quat_mul(x, y) if self.target.kind == "SU2" else _mat_mul(x, y)

    def word(self, w):
        if not w:
            return self.one()
        acc = self.letter(*w[0])
        for g, e in w[1:]:
            acc = self.mul(acc, self.letter(g, e))
        return acc

    def flat(self, x):
        return list(x) if self.target.kind == "SU2" else [e for row in x for e in row]


def evaluate_word(model, word):
    """Components of a word's image as polynomials in the model's ring."""
    alg = _Algebra(model.target, [model.variable_scheme[g]
                                  for g in range(model.presentation.generator_count)],
                   model.nvars)
    return alg.flat(alg.word(word))


def _names(target, k):
    names = []
    for g in range(k):
        if target.kind == "SU2":
            names += [f"{s}{g}" for s in "abcd"]
        else:
            n = target.n
            names += [f"m{g}_{r + 1}{c + 1}" for r in range(n) for c in range(n)]
    return names


def _group_equations(alg, g):
    x = alg.images[g]
    nv = alg.nvars
    if alg.target.kind == "SU2":
        return [sum((c * c for c in x), Polynomial.zero(nv)) - 1]
    n = alg.target.n
    eqs = []
    for r in range(n):
        for c in range(r, n):
            s = sum((x[k][r] * x[k][c] for k in range(n)), Polynomial.zero(nv))
            eqs.append(s - (1 if r == c else 0))
    eqs.append(_det(x) - 1)
    return eqs


def _gauge_pins(target, idx, nvars):
    """Normal form for generator 0: a maximal-torus element."""
    var = [Polynomial.variable(nvars, i) for i in idx]
    if target.kind == "SU2":
        return {idx[2]: Polynomial.zero(nvars), idx[3]: Polynomial.zero(nvars)}
    n = target.n
    at = lambda r, c: r * n + c  # noqa: E731
    pins = {}
    for r in range(n):
        for c in range(n):
            if r // 2 != c // 2 or (n % 2 and (r == n - 1 or c == n - 1)):
                pins[idx[at(r, c)]] = Polynomial.zero(nvars)
    for j in range(n // 2):
        r = 2 * j
        pins[idx[at(r + 1, r + 1)]] = var[at(r, r)]
        pins[idx[at(r, r + 1)]] = -var[at(r + 1, r)]
    if n % 2:
        pins[idx[at(n - 1, n - 1)]] = Polynomial.constant(nvars, 1)
    return pins


def build_rep_ideal(p, target, gauge=Gauge.NONE):
    """Defining ideal of Hom(group, target) in generator-image coordinates."""
    if isinstance(target, str):
        target = Target.parse(target)
    gauge = Gauge(gauge)
    k = p.generator_count
    size = target.block_size
    nvars = k * size
    blocks = [list(range(g * size, (g + 1) * size)) for g in range(k)]
    alg = _Algebra(target, blocks, nvars)
    group_eqs = [e for g in range(k) for e in _group_equations(alg, g)]
    relator_eqs = []
    for w in p.relators:
        if not w:
            continue
        half = (len(w) + 1) // 2
        lhs = alg.flat(alg.word(w[:half]))
        rhs = alg.flat(alg.word(invert(w[half:])))
        relator_eqs += [a - b for a, b in zip(lhs, rhs)]
    pins = {}
    gauge_eqs = []
    if gauge is Gauge.FIX_FIRST:
        pins = _gauge_pins(target, blocks[0], nvars)
        gauge_eqs = [Polynomial.variable(nvars, i) - v for i, v in sorted(pins.items())]
    ideal = Ideal(group_eqs + relator_eqs + gauge_eqs, nvars, GREVLEX, _names(target, k))
    return RepVarietyModel(p, target, gauge, ideal, {g: blocks[g] for g in range(k)},
                           group_eqs, relator_eqs, gauge_eqs, pins)


def group_ideal(target):
    """Ideal of the target group itself in one block of coordinates."""
    from .presentation import Presentation

    return build_rep_ideal(Presentation(1, ()), target).ideal


def reduced_ideal(model):
    """The model's ideal with pinned coordinates substituted away."""
    if not model.pins:
        return model.ideal
    free = [i for i in range(model.nvars) if i not in model.pins]
    m = len(free)
    images = [Polynomial.zero(m)] * model.nvars
    for j, i in enumerate(free):
        images[i] = Polynomial.variable(m, j)
    # pinned values only involve free variables
    for i, v in model.pins.items():
        images[i] = v.compose(images)
    gens = []
    for g in model.group_equations + model.relator_equations:
        r = g.compose(images)
        if not r.is_zero():
            gens.append(r)
    names = [model.ideal.names[i] for i in free]
    return Ideal(gens, m, GREVLEX, names)


def abelian_slice(model, budget=DEFAULT_BUDGET):
    """Identify every generator block with the first one.

    The relator equations must vanish modulo the group equations; the result
    is then the group ideal in the first block's coordinates (plus any gauge
    equations on that block).
    """
    size = model.target.block_size
    first = model.variable_scheme[0]
    images = [None] * model.nvars
    for g, idx in model.variable_scheme.items():
        for j, i in enumerate(idx):
            images[i] = Polynomial.variable(size, j)
    names = [model.ideal.names[i] for i in first]

    def collapse(polys):
        out = []
        for f in polys:
            r = f.compose(images)
            if not r.is_zero() and r not in out:
                out.append(r)
        return out

    group = collapse(model.group_equations)
    gauge = collapse(model.gauge_equations)
    base = Ideal(group + gauge, size, GREVLEX, names)
    for eq in collapse(model.relator_equations):
        if not base.contains(eq, budget):
            raise RelatorSurvived(f"relator equation {eq.to_str(names)} survives identification")
    return base


@dataclass
class DimInvariant:
    target: str
    n: int
    gauge: str
    dimension_list: list
    certified: bool
    complete: bool
    caveats: list
    free_variables: int
    components: int = 0

    def as_dict(self):
        return {
            "target": self.target,
            "N": self.n,
            "gauge": self.gauge,
            "dimension_list": list(self.dimension_list),
            "certified": self.certified,
            "complete": self.complete,
            "caveats": list(self.caveats),
            "free_variables": self.free_variables,
            "components": self.components,
        }


def variety_dimension(model, budget=DEFAULT_BUDGET):
    """Dimension list of the variety: Krull dimension of each split branch, descending.

    Falls back to the top dimension alone (``certified=False``) when splitting
    runs out of budget, and to an incomplete, empty invariant when even that
    fails.  Dimensions are Krull dimensions over Q of defining ideals, which
    bound the real dimensions from above; the ``krull-over-Q`` caveat is
    always attached.
    """
    ideal = reduced_ideal(model)
    base = dict(target=model.target.label, n=model.target.n, gauge=model.gauge.value,
                free_variables=ideal.nvars)
    caveats = ["krull-over-Q"]
    try:
        split = split_components_report(ideal, budget)
        dims = sorted((krull_dimension(b, budget) for b in split.components), reverse=True)
        if any(real_radical_caveat(b, budget) for b in split.components):
            caveats.append("real-radical")
        if not split.complete:
            caveats.append("split-incomplete")
        return DimInvariant(dimension_list=dims, certified=split.complete, complete=True,
                            caveats=caveats, components=len(split.components), **base)
    except DegreeBudgetExceeded:
        pass
    try:
        top = krull_dimension(ideal, budget)
    except DegreeBudgetExceeded:
        return DimInvariant(dimension_list=[], certified=False, complete=False,
                            caveats=caveats + ["budget"], **base)
    return DimInvariant(dimension_list=[top] if top >= 0 else [], certified=False,
                        complete=True, caveats=caveats + ["split-incomplete", "budget"],
                        components=1, **base)
