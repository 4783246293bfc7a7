"""Knot diagrams, knot groups and representation-variety dimension invariants."""
from .algebra.groebner import Budget, DegreeBudgetExceeded, groebner
from .algebra.ideal import Ideal, eliminate, ideal_equal, krull_dimension, split_components
from .algebra.poly import Polynomial, parse_polynomial
from .diagram import Diagram, parse_braid, parse_dt, parse_pd
from .groups import FiniteGroup, group_by_name
from .homs import count_homs, find_separating_hom, fox_colorings
from .obstruction import compare_knots, lex_compare
from .presentation import Presentation, abelianization, tietze_simplify, wirtinger
from .repvariety import Gauge, Target, build_rep_ideal, variety_dimension

__version__ = "0.1.0"

__all__ = [
    "Budget", "DegreeBudgetExceeded", "groebner",
    "Ideal", "eliminate", "ideal_equal", "krull_dimension", "split_components",
    "Polynomial", "parse_polynomial",
    "Diagram", "parse_braid", "parse_dt", "parse_pd",
    "FiniteGroup", "group_by_name",
    "count_homs", "find_separating_hom", "fox_colorings",
    "compare_knots", "lex_compare",
    "Presentation", "abelianization", "tietze_simplify", "wirtinger",
    "Gauge", "Target", "build_rep_ideal", "variety_dimension",
]
