"""Knot diagrams and the braid / DT / PD parsers that produce them.

A :class:`Diagram` is a planar-diagram (PD) code.  Each crossing lists four
edge labels starting with the incoming under-strand and continuing
counterclockwise, so the under-strand runs from slot 0 to slot 2 and the
over-strand joins slots 1 and 3.  Edge labels are ``0 .. arc_count-1`` and
each appears exactly twice.  The 0-crossing diagram is the unknot with a
single edge.
"""
from __future__ import annotations

import enum
import hashlib
import itertools
import re
from dataclasses import dataclass

__all__ = [
    "Crossing",
    "Diagram",
    "SourceFormat",
    "DiagramError",
    "OutOfRange",
    "MultiComponent",
    "InvalidGenerator",
    "OddValue",
    "NotRealizable",
    "ArcDegree",
    "InconsistentOrientation",
    "parse_braid",
    "parse_dt",
    "parse_pd",
    "read_braid_text",
    "read_dt_text",
    "read_pd_text",
    "read_knot_text",
    "to_pd_text",
    "unknot",
]


class DiagramError(ValueError):
    pass


class OutOfRange(DiagramError):
    pass


class MultiComponent(DiagramError):
    pass


class InvalidGenerator(DiagramError):
    pass


class OddValue(DiagramError):
    pass


class NotRealizable(DiagramError):
    pass


class ArcDegree(DiagramError):
    pass


class InconsistentOrientation(DiagramError):
    pass


class SourceFormat(enum.Enum):
    BRAID = "braid"
    DT = "dt"
    PD = "pd"


@dataclass(frozen=True)
class Crossing:
    edges: tuple  # (a, b, c, d)
    sign: int

    @property
    def under_in(self):
        return self.edges[0]

    @property
    def under_out(self):
        return self.edges[2]

    @property
    def over(self):
        """Over-strand edges as (incoming, outgoing)."""
        a, b, c, d = self.edges
        return (d, b) if self.sign > 0 else (b, d)


@dataclass(frozen=True)
class Diagram:
    crossings: tuple
    arc_count: int
    source_format: SourceFormat = SourceFormat.PD

    def __post_init__(self):
        if not self.crossings:
            if self.arc_count != 1:
                raise ArcDegree("a 0-crossing diagram must have exactly one arc")
            return
        counts = [0] * self.arc_count
        for x in self.crossings:
            if x.sign not in (1, -1):
                raise InconsistentOrientation(f"crossing sign {x.sign} is not ±1")
            for e in x.edges:
                if not 0 <= e < self.arc_count:
                    raise ArcDegree(f"arc {e} outside [0, {self.arc_count})")
                counts[e] += 1
        bad = [e for e, k in enumerate(counts) if k != 2]
        if bad:
            raise ArcDegree(f"arcs {bad} do not appear exactly twice")

    @property
    def crossing_count(self):
        return len(self.crossings)

    def writhe(self):
        return sum(x.sign for x in self.crossings)

    def digest(self):
        return hashlib.sha256(to_pd_text(self).encode()).hexdigest()[:16]


def unknot(source_format=SourceFormat.PD):
    return Diagram((), 1, source_format)


# PD


def parse_pd(tuples, source_format=SourceFormat.PD):
    """Validate PD tuples and infer crossing signs from the strand orientation.

    ``tuples`` holds 4-tuples of edge labels, optionally as ``(edges, sign)``
    pairs where the sign is +1/-1 or None.  Labels are renumbered to
    ``0..2n-1`` in sorted order of the originals.
    """
    raw = []
    for item in tuples:
        if len(item) == 2 and not isinstance(item[0], int):
            edges, sign = item
        else:
            edges, sign = item, None
        edges = tuple(edges)
        if len(edges) != 4:
            raise ArcDegree(f"crossing {edges} does not have four arcs")
        raw.append((edges, sign))
    if not raw:
        return unknot(source_format)

    counts = {}
    for edges, _ in raw:
        for e in edges:
            counts[e] = counts.get(e, 0) + 1
    bad = sorted(e for e, k in counts.items() if k != 2)
    if bad:
        raise ArcDegree(f"arcs {bad} do not appear exactly twice")
    relabel = {e: i for i, e in enumerate(sorted(counts))}
    crossings = [tuple(relabel[e] for e in edges) for edges, _ in raw]
    signs = _orient(crossings)
    for (edges, given), s in zip(raw, signs):
        if given is not None and given != s:
            raise InconsistentOrientation(
                f"crossing {edges} marked {given:+d} but orientation gives {s:+d}")
    result = tuple(Crossing(e, s) for e, s in zip(crossings, signs))
    return Diagram(result, len(relabel), source_format)


def _orient(crossings):
    """Walk the knot once along the under-strand directions; return crossing signs."""
    where = {}
    for ci, edges in enumerate(crossings):
        for slot, e in enumerate(edges):
            where.setdefault(e, []).append((ci, slot))
    nedges = len(where)
    entered = [None] * len(crossings)  # slot through which the over-strand enters
    start = dart = (0, 0)
    visited = 0
    while True:
        ci, slot = dart
        if slot == 2:
            raise InconsistentOrientation(
                f"crossing {crossings[ci]} is traversed against its under-strand")
        if slot in (1, 3):
            if entered[ci] is not None:
                raise InconsistentOrientation(f"over-strand of {crossings[ci]} used twice")
            entered[ci] = slot
        exit_end = (ci, (slot + 2) % 4)
        a, b = where[crossings[ci][exit_end[1]]]
        dart = b if a == exit_end else a
        visited += 1
        if dart == start:
            break
        if visited > nedges:
            raise InconsistentOrientation("traversal does not close up")
    if visited != nedges:
        raise MultiComponent("PD code describes more than one component")
    return [1 if s == 3 else -1 for s in entered]


_PD_LINE = re.compile(r"^X([pm]?)\[\s*([^\]]*)\]$")


def read_pd_text(text):
    tuples = []
    for raw in re.split(r"[\n;]", text):
        line = raw.split("#", 1)[0].strip().rstrip(",")
        if not line:
            continue
        for chunk in re.findall(r"X[pm]?\[[^\]]*\]", line) or [line]:
            m = _PD_LINE.match(chunk.strip())
            if not m:
                raise DiagramError(f"bad PD entry {chunk!r}")
            flag, body = m.groups()
            try:
                edges = tuple(int(t) for t in body.split(","))
            except ValueError:
                raise DiagramError(f"bad PD entry {chunk!r}") from None
            sign = {"p": 1, "m": -1, "": None}[flag]
            tuples.append((edges, sign))
    return parse_pd(tuples)


def to_pd_text(diagram):
    lines = []
    for x in diagram.crossings:
        tag = "Xp" if x.sign > 0 else "Xm"
        lines.append(f"{tag}[{','.join(str(e) for e in x.edges)}]")
    return "\n".join(lines) + ("\n" if lines else "")


# braids


def _braid_permutation(word, strands):
    perm = list(range(strands))
    for g in word:
        i = abs(g) - 1
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
    return perm


def _cycle_count(perm):
    seen = [False] * len(perm)
    cycles = 0
    for i in range(len(perm)):
        if not seen[i]:
            cycles += 1
            j = i
            while not seen[j]:
                seen[j] = True
                j = perm[j]
    return cycles


def parse_braid(word, strands):
    """Closure of a braid word; ``±i`` is the generator crossing strands i and i+1."""
    word = list(word)
    if strands < 1:
        raise OutOfRange("need at least one strand")
    for g in word:
        if g == 0:
            raise InvalidGenerator("braid generator 0 is not allowed")
        if abs(g) >= strands:
            raise OutOfRange(f"generator {g} needs more than {strands} strands")
    if _cycle_count(_braid_permutation(word, strands)) != 1:
        raise MultiComponent("braid closure has more than one component")
    if not word:
        return unknot(SourceFormat.BRAID)

    counter = itertools.count()
    bottom = [next(counter) for _ in range(strands)]
    current = list(bottom)
    raw = []
    for g in word:
        i = abs(g) - 1
        in_l, in_r = current[i], current[i + 1]
        out_l, out_r = next(counter), next(counter)
        if g > 0:
            raw.append([in_r, out_r, out_l, in_l])
        else:
            raw.append([in_l, in_r, out_r, out_l])
        current[i], current[i + 1] = out_l, out_r
    glue = dict(zip(current, bottom))
    tuples = [tuple(glue.get(e, e) for e in edges) for edges in raw]
    d = parse_pd(tuples, SourceFormat.BRAID)
    expected = [1 if g > 0 else -1 for g in word]
    if [x.sign for x in d.crossings] != expected:
        raise InconsistentOrientation("braid closure produced unexpected crossing signs")
    return d


def read_braid_text(text):
    strands = None
    entries = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = re.match(r"^strands\s*=\s*(\d+)$", line)
        if m:
            strands = int(m.group(1))
            continue
        try:
            entries.extend(int(t) for t in line.replace(",", " ").split())
        except ValueError:
            raise DiagramError(f"bad braid line {line!r}") from None
    if strands is None:
        raise DiagramError("braid text needs a 'strands=' header line")
    return parse_braid(entries, strands)


# DT codes


def parse_dt(code):
    """Realise a Dowker-Thistlethwaite code as a PD diagram.

    Crossing k is visited at odd time 2k+1 and at even time ``|code[k]|``; a
    negative even entry means the strand passes over at the even visit.  The
    planar embedding is found by searching crossing handednesses for one whose
    4-valent map has genus zero; the first hit (crossing 0 right-handed) is
    used, so mirror-image ambiguity is resolved by that fixed choice.
    """
    code = list(code)
    for v in code:
        if v % 2:
            raise OddValue(f"DT entry {v} is odd")
    n = len(code)
    if n == 0:
        return unknot(SourceFormat.DT)
    if sorted(abs(v) for v in code) != list(range(2, 2 * n + 1, 2)):
        raise NotRealizable("DT entries must be ±2, ±4, ..., ±2n in some order")

    m = 2 * n

    def edge_in(t):
        return (t - 2) % m

    def edge_out(t):
        return (t - 1) % m

    visits = []  # (under_time, over_time) per crossing
    for k, v in enumerate(code):
        odd, even = 2 * k + 1, abs(v)
        visits.append((odd, even) if v < 0 else (even, odd))

    for choice in itertools.product((1, -1), repeat=n - 1):
        signs = (1,) + choice
        tuples = []
        for (u, o), s in zip(visits, signs):
            if s > 0:
                tuples.append((edge_in(u), edge_out(o), edge_out(u), edge_in(o)))
            else:
                tuples.append((edge_in(u), edge_in(o), edge_out(u), edge_out(o)))
        if _face_count(tuples) == n + 2:
            return parse_pd(tuples, SourceFormat.DT)
    raise NotRealizable(f"DT code {code} has no planar realisation")


def _face_count(tuples):
    """Faces of the 4-valent map whose rotation at each vertex is the PD slot order."""
    ends = {}
    for ci, edges in enumerate(tuples):
        for slot, e in enumerate(edges):
            ends.setdefault(e, []).append((ci, slot))

    def across(ci, slot):
        e = tuples[ci][slot]
        a, b = ends[e]
        return b if a == (ci, slot) else a

    seen = set()
    faces = 0
    for ci in range(len(tuples)):
        for slot in range(4):
            if (ci, slot) in seen:
                continue
            faces += 1
            dart = (ci, slot)
            while dart not in seen:
                seen.add(dart)
                cj, sj = across(*dart)
                dart = (cj, (sj + 1) % 4)
    return faces


def read_dt_text(text):
    body = re.sub(r"#.*", "", text)
    body = body.replace("[", " ").replace("]", " ").replace(",", " ")
    try:
        return parse_dt(int(t) for t in body.split())
    except ValueError as exc:
        if isinstance(exc, DiagramError):
            raise
        raise DiagramError(f"bad DT text {text!r}") from None


def read_knot_text(text, fmt):
    fmt = SourceFormat(fmt) if not isinstance(fmt, SourceFormat) else fmt
    if fmt is SourceFormat.BRAID:
        return read_braid_text(text)
    if fmt is SourceFormat.DT:
        return read_dt_text(text)
    return read_pd_text(text)
