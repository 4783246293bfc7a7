"""Executable checks for the two real-algebraic-geometry lemmas behind the order proof.

Both checks work with Krull dimensions of defining ideals over Q, which only
bound the dimension of the real zero set from above.  When a computation
disagrees with a lemma's conclusion the report blames a hypothesis
(irreducibility, real radical) and never the lemma itself.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .groebner import DEFAULT_BUDGET
from .ideal import (
    Ideal,
    IdealVerdict,
    eliminate,
    ideal_equal,
    krull_dimension,
    radical_member,
    real_radical_caveat,
    split_components,
)
from .poly import GREVLEX, Polynomial

__all__ = [
    "PolynomialMap",
    "NotNested",
    "LemmaReport",
    "check_dimension_lemma",
    "image_closure_demo",
]


class NotNested(ValueError):
    """The would-be subset ideal does not contain the ambient ideal."""


class PolynomialMap:
    """A polynomial map Q^source -> Q^target given by its coordinate polynomials."""

    def __init__(self, coords, source_nvars=None):
        coords = list(coords)
        if source_nvars is None:
            source_nvars = coords[0].nvars
        for c in coords:
            if c.nvars != source_nvars:
                raise ValueError("coordinate uses variables outside the source ring")
        self.source_nvars = source_nvars
        self.target_nvars = len(coords)
        self.coords = coords

    @classmethod
    def identity(cls, nvars):
        return cls(Polynomial.gens(nvars), nvars)

    def __call__(self, point):
        return [c.evaluate(point) for c in self.coords]


@dataclass
class LemmaReport:
    dim_x: int
    dim_y: int
    relation: str
    conclusion: str
    consistent: bool = True
    diagnostic: str | None = None
    caveats: list = field(default_factory=list)

    def as_dict(self):
        return {
            "dim_x": self.dim_x,
            "dim_y": self.dim_y,
            "relation": self.relation,
            "conclusion": self.conclusion,
            "consistent": self.consistent,
            "diagnostic": self.diagnostic,
            "caveats": list(self.caveats),
        }


def check_dimension_lemma(I_X, I_Y, X_irreducible=False, budget=DEFAULT_BUDGET):
    """Compare an algebraic set X with an algebraic subset Y via their ideals.

    ``I_Y`` must contain ``I_X`` (up to radical) so that V(I_Y) ⊆ V(I_X).
    Equal dimensions on an irreducible X force equality; a computation that
    says otherwise is reported as a failed hypothesis.
    """
    if not all(radical_member(g, I_Y, budget) for g in I_X.gens):
        raise NotNested("I_X is not contained in the radical of I_Y")
    dim_x = krull_dimension(I_X, budget)
    dim_y = krull_dimension(I_Y, budget)
    verdict = ideal_equal(I_X, I_Y, budget)
    caveats = []
    if real_radical_caveat(I_X, budget) or real_radical_caveat(I_Y, budget):
        caveats.append("real-radical")

    if verdict is IdealVerdict.EQUAL:
        return LemmaReport(dim_x, dim_y, verdict.value, "equal, dimensions agree",
                           caveats=caveats)
    if dim_y < dim_x:
        return LemmaReport(dim_x, dim_y, verdict.value,
                           "proper subset, dimensions differ", caveats=caveats)
    # proper subset of the same dimension
    if not X_irreducible:
        return LemmaReport(dim_x, dim_y, verdict.value,
                           "proper subset of equal dimension; X not asserted irreducible",
                           caveats=caveats)
    if len(split_components(I_X, budget)) > 1:
        diagnostic = "irreducibility assertion violated"
    else:
        diagnostic = "real-radical caveat: Krull dimension may exceed real dimension"
        if "real-radical" not in caveats:
            caveats.append("real-radical")
    return LemmaReport(dim_x, dim_y, verdict.value,
                       "proper subset of equal dimension", diagnostic=diagnostic,
                       caveats=caveats)


def image_closure_demo(phi, ideal, budget=DEFAULT_BUDGET):
    """Ideal of the Zariski closure of ``phi(V(ideal))`` via the graph of ``phi``.

    Works in Q[x, y] with the equations of ``ideal`` and ``y_j - phi_j(x)``,
    then eliminates the source variables.
    """
    if phi.source_nvars != ideal.nvars:
        raise ValueError("map and ideal live in different rings")
    n, m = ideal.nvars, phi.target_nvars
    total = n + m
    gens = [g.embed(total) for g in ideal.gens]
    for j, coord in enumerate(phi.coords):
        gens.append(Polynomial.variable(total, n + j) - coord.embed(total))
    names = list(ideal.names) + [f"y{j}" for j in range(m)]
    graph = Ideal(gens, total, GREVLEX, names)
    return eliminate(graph, range(n), budget)
