"""Lexicographic dimension-list invariant and the ribbon-concordance obstruction report.

A ribbon concordance K_A >= K_B can only exist if, for every model, the
dimension list of K_A's representation variety is not lexicographically
smaller than K_B's.  One model therefore rules out at most one direction;
two models disagreeing in opposite directions rule out both.
"""
from __future__ import annotations

import enum
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .algebra.groebner import DEFAULT_BUDGET, DegreeBudgetExceeded
from .diagram import Diagram, to_pd_text
from .presentation import Presentation, format_presentation, tietze_simplify, wirtinger
from .repvariety import Gauge, Target, build_rep_ideal, variety_dimension

__all__ = [
    "Verdict",
    "Combined",
    "UnsortedInput",
    "ModelSpec",
    "Entry",
    "ComparisonReport",
    "lex_compare",
    "combine_verdicts",
    "compare_knots",
    "knot_presentation",
    "SCHEMA_VERSION",
]

SCHEMA_VERSION = 1


class UnsortedInput(ValueError):
    pass


class Verdict(enum.Enum):
    LESS = "Less"
    EQUAL = "Equal"
    GREATER = "Greater"
    INCOMPLETE = "Incomplete"


class Combined(enum.Enum):
    A_GE_B = "ConsistentWith(A≥B)"
    B_GE_A = "ConsistentWith(B≥A)"
    BOTH_OR_EQUAL = "ConsistentBothOrEqual"
    EXCLUDED = "ExcludedBothDirections"
    INCONCLUSIVE = "Inconclusive"


def lex_compare(a, b):
    """Compare descending dimension lists, padding the shorter one with -1."""
    for lst in (a, b):
        if any(x < y for x, y in zip(lst, lst[1:])):
            raise UnsortedInput(f"dimension list {list(lst)} is not sorted descending")
    n = max(len(a), len(b))
    pa = list(a) + [-1] * (n - len(a))
    pb = list(b) + [-1] * (n - len(b))
    if pa < pb:
        return Verdict.LESS
    if pa > pb:
        return Verdict.GREATER
    return Verdict.EQUAL


def combine_verdicts(verdicts):
    done = {v for v in verdicts if v is not Verdict.INCOMPLETE}
    if not done:
        return Combined.INCONCLUSIVE
    if Verdict.LESS in done and Verdict.GREATER in done:
        return Combined.EXCLUDED
    if Verdict.GREATER in done:
        return Combined.A_GE_B
    if Verdict.LESS in done:
        return Combined.B_GE_A
    return Combined.BOTH_OR_EQUAL


@dataclass(frozen=True)
class ModelSpec:
    target: Target
    gauge: Gauge = Gauge.NONE

    @classmethod
    def parse(cls, model, gauge="none"):
        return cls(Target.parse(model) if isinstance(model, str) else model, Gauge(gauge))

    def describe(self):
        return {"target": self.target.label, "N": self.target.n, "gauge": self.gauge.value}


@dataclass
class Entry:
    model: dict
    dims_a: list | None
    dims_b: list | None
    verdict: Verdict
    caveats: list = field(default_factory=list)
    certified: bool = False
    note: str | None = None

    def as_dict(self):
        return {
            "model": self.model,
            "dimension_list_a": self.dims_a,
            "dimension_list_b": self.dims_b,
            "verdict": self.verdict.value,
            "certified": self.certified,
            "caveats": list(self.caveats),
            "note": self.note,
        }


@dataclass
class ComparisonReport:
    knot_a: str
    knot_b: str
    entries: list
    combined: Combined
    heuristic: bool
    caveats: list

    @property
    def incomplete(self):
        return any(e.verdict is Verdict.INCOMPLETE for e in self.entries)

    def as_dict(self):
        return {
            "schema": SCHEMA_VERSION,
            "knot_a": self.knot_a,
            "knot_b": self.knot_b,
            "entries": [e.as_dict() for e in self.entries],
            "combined": self.combined.value,
            "heuristic": self.heuristic,
            "caveats": list(self.caveats),
            "convention": "dimension lists sorted descending, padded with -1; "
                          "Krull dimensions over Q of defining ideals",
        }

    def to_json(self):
        return json.dumps(self.as_dict(), sort_keys=True, indent=2, ensure_ascii=False)


def knot_presentation(knot, simplify=True):
    """Presentation and digest for a Diagram or Presentation input."""
    if isinstance(knot, Diagram):
        digest = "pd:" + knot.digest()
        p = wirtinger(knot)
    elif isinstance(knot, Presentation):
        import hashlib

        p = knot
        digest = "pres:" + hashlib.sha256(format_presentation(p).encode()).hexdigest()[:16]
    else:
        raise TypeError(f"cannot compare {type(knot).__name__}")
    if simplify:
        p, _ = tietze_simplify(p)
    return p, digest


def _dimension_job(args):
    p, spec, budget = args
    try:
        model = build_rep_ideal(p, spec.target, spec.gauge)
        return variety_dimension(model, budget)
    except DegreeBudgetExceeded:
        return None


def compare_knots(kA, kB, models, budget=DEFAULT_BUDGET, simplify=True, injected=None,
                  workers=1):
    """Run the dimension pipeline for both knots under every model and compare.

    ``injected`` optionally maps a model index to a pair of dimension lists,
    bypassing the computation for that entry (used to exercise the verdict
    logic directly).
    """
    if not models:
        raise ValueError("need at least one model")
    models = [m if isinstance(m, ModelSpec) else ModelSpec.parse(*m) for m in models]
    injected = injected or {}
    pa, da = knot_presentation(kA, simplify)
    pb, db = knot_presentation(kB, simplify)
    budget = budget.started()

    jobs = []
    for i, spec in enumerate(models):
        if i in injected:
            continue
        jobs.append((i, "a", (pa, spec, budget)))
        if db != da:
            jobs.append((i, "b", (pb, spec, budget)))
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_dimension_job, [j[2] for j in jobs]))
    else:
        results = [_dimension_job(j[2]) for j in jobs]
    dims = {(i, side): r for (i, side, _), r in zip(jobs, results)}

    entries = []
    all_caveats = set()
    heuristic = False
    for i, spec in enumerate(models):
        if i in injected:
            a, b = injected[i]
            entries.append(Entry(spec.describe(), list(a), list(b), lex_compare(a, b),
                                 ["injected"], True, "injected dimension lists"))
            continue
        ra = dims[(i, "a")]
        rb = dims[(i, "b")] if db != da else ra
        if ra is None or rb is None or not ra.complete or not rb.complete:
            entries.append(Entry(spec.describe(),
                                 ra.dimension_list if ra and ra.complete else None,
                                 rb.dimension_list if rb and rb.complete else None,
                                 Verdict.INCOMPLETE, ["budget"], False,
                                 "dimension computation exceeded its budget"))
            all_caveats.add("budget")
            continue
        caveats = sorted(set(ra.caveats) | set(rb.caveats))
        certified = ra.certified and rb.certified
        all_caveats.update(caveats)
        if not certified or "real-radical" in caveats:
            heuristic = True
        entries.append(Entry(spec.describe(), ra.dimension_list, rb.dimension_list,
                             lex_compare(ra.dimension_list, rb.dimension_list),
                             caveats, certified))
    combined = combine_verdicts([e.verdict for e in entries])
    return ComparisonReport(da, db, entries, combined, heuristic, sorted(all_caveats))
