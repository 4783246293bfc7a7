"""Finite group presentations: Wirtinger construction, Tietze simplification, abelianization.

A word is a tuple of ``(generator, exponent)`` pairs with exponent ±1.  All
constructors free-reduce their relators, so no operation here ever emits a
word containing ``x x^-1``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field

from .intmat import smith_diagonal

__all__ = [
    "Presentation",
    "TietzeTrace",
    "CyclicReduce",
    "RemoveRelator",
    "EliminateGenerator",
    "free_reduce",
    "cyclic_reduce",
    "invert",
    "word_to_text",
    "parse_word",
    "wirtinger",
    "tietze_simplify",
    "abelianization",
    "parse_presentation",
    "format_presentation",
]


def free_reduce(word):
    out = []
    for g, e in word:
        if e not in (1, -1):
            raise ValueError(f"exponent {e} is not ±1")
        if out and out[-1][0] == g and out[-1][1] == -e:
            out.pop()
        else:
            out.append((g, e))
    return tuple(out)


def invert(word):
    return tuple((g, -e) for g, e in reversed(word))


def cyclic_reduce(word):
    w = free_reduce(word)
    i, j = 0, len(w)
    while j - i >= 2 and w[i][0] == w[j - 1][0] and w[i][1] == -w[j - 1][1]:
        i += 1
        j -= 1
    return w[i:j]


def _cyclic_key(word):
    """Canonical representative up to rotation and inversion."""
    if not word:
        return ()
    candidates = []
    for w in (word, invert(word)):
        for k in range(len(w)):
            candidates.append(w[k:] + w[:k])
    return min(candidates)


def word_to_text(word):
    return " ".join(f"g{g}" if e == 1 else f"g{g}^-1" for g, e in word)


_TOKEN = re.compile(r"^g(\d+)(?:\^(-?1))?$")


def parse_word(text):
    word = []
    for tok in text.split():
        m = _TOKEN.match(tok)
        if not m:
            raise ValueError(f"bad word token {tok!r}")
        word.append((int(m.group(1)), int(m.group(2) or 1)))
    return free_reduce(word)


@dataclass(frozen=True)
class Presentation:
    generator_count: int
    relators: tuple = ()
    labels: tuple | None = None

    def __post_init__(self):
        if self.generator_count < 1:
            raise ValueError("a presentation needs at least one generator")
        rels = tuple(free_reduce(r) for r in self.relators)
        for r in rels:
            for g, _ in r:
                if not 0 <= g < self.generator_count:
                    raise ValueError(f"generator {g} out of range")
        object.__setattr__(self, "relators", rels)
        if self.labels is not None and len(self.labels) != self.generator_count:
            raise ValueError("need one label per generator")

    @property
    def deficiency(self):
        return self.generator_count - len(self.relators)

    def total_length(self):
        return sum(len(r) for r in self.relators)

    def add_relator(self, word):
        return Presentation(self.generator_count, self.relators + (free_reduce(word),),
                            self.labels)


def parse_presentation(text):
    gens = None
    rels = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("gens:"):
            gens = int(line[5:].strip())
        elif line.startswith("rel:"):
            rels.append(parse_word(line[4:]))
        else:
            raise ValueError(f"unexpected line {line!r}")
    if gens is None:
        raise ValueError("missing 'gens:' line")
    return Presentation(gens, tuple(rels))


def format_presentation(p):
    lines = [f"gens: {p.generator_count}"]
    lines += [f"rel: {word_to_text(r)}".rstrip() for r in p.relators]
    return "\n".join(lines) + "\n"


# Wirtinger


def wirtinger_arcs(diagram):
    """Map each PD edge to its Wirtinger arc (over-strands continue through crossings)."""
    parent = list(range(diagram.arc_count))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for x in diagram.crossings:
        _, b, _, d = x.edges
        rb, rd = find(b), find(d)
        if rb != rd:
            parent[max(rb, rd)] = min(rb, rd)
    roots = sorted({find(e) for e in range(diagram.arc_count)})
    index = {r: i for i, r in enumerate(roots)}
    return [index[find(e)] for e in range(diagram.arc_count)], len(roots)


def wirtinger(diagram):
    """Wirtinger presentation: one generator per arc, one relator per crossing but the last.

    At a crossing of sign s with over-arc b, incoming under-arc a and outgoing
    under-arc c the relator is ``b^s a b^-s c^-1``.
    """
    if not diagram.crossings:
        return Presentation(1, ())
    arc_of, count = wirtinger_arcs(diagram)
    rels = []
    for x in diagram.crossings[:-1]:
        a, c = arc_of[x.under_in], arc_of[x.under_out]
        b = arc_of[x.edges[1]]
        s = x.sign
        rels.append(free_reduce(((b, s), (a, 1), (b, -s), (c, -1))))
    return Presentation(count, tuple(rels))


# Tietze moves


@dataclass(frozen=True)
class CyclicReduce:
    index: int
    word: tuple

    def apply(self, p):
        rels = list(p.relators)
        rels[self.index] = self.word
        return Presentation(p.generator_count, tuple(rels))


@dataclass(frozen=True)
class RemoveRelator:
    index: int
    reason: str
    duplicate_of: int | None = None

    def apply(self, p):
        rels = list(p.relators)
        del rels[self.index]
        return Presentation(p.generator_count, tuple(rels))


@dataclass(frozen=True)
class EliminateGenerator:
    generator: int
    relator_index: int
    expression: tuple  # word equal to the generator, free of it

    def apply(self, p):
        g = self.generator
        inv = invert(self.expression)

        def shift(h):
            return h - 1 if h > g else h

        rels = []
        for i, r in enumerate(p.relators):
            if i == self.relator_index:
                continue
            out = []
            for h, e in r:
                if h == g:
                    out.extend(self.expression if e == 1 else inv)
                else:
                    out.append((h, e))
            rels.append(tuple((shift(h), e) for h, e in free_reduce(out)))
        return Presentation(p.generator_count - 1, tuple(rels))


@dataclass
class TietzeTrace:
    moves: list = field(default_factory=list)
    exhausted: bool = False

    def replay(self, p):
        for move in self.moves:
            p = move.apply(p)
        return p

    def __len__(self):
        return len(self.moves)


def _solve_for(relator, position):
    """Express the generator at ``position`` (occurring once) via the rest of the relator."""
    g, e = relator[position]
    rest = relator[position + 1:] + relator[:position]  # g^e * rest = 1
    solved = invert(rest)  # g^e = rest^-1
    return free_reduce(solved if e == 1 else invert(solved))


def _next_move(p):
    for i, r in enumerate(p.relators):
        c = cyclic_reduce(r)
        if c != r:
            return CyclicReduce(i, c)
    for i, r in enumerate(p.relators):
        if not r:
            return RemoveRelator(i, "trivial")
    seen = {}
    for i, r in enumerate(p.relators):
        k = _cyclic_key(r)
        if k in seen:
            return RemoveRelator(i, "duplicate", seen[k])
        seen[k] = i
    if p.generator_count == 1:
        return None
    candidates = []
    for i, r in enumerate(p.relators):
        occurrences = {}
        for pos, (g, _) in enumerate(r):
            occurrences.setdefault(g, []).append(pos)
        for g, where in occurrences.items():
            if len(where) == 1:
                candidates.append((len(r), g, i, where[0]))
    candidates.sort()
    before = p.total_length()
    for _, g, i, pos in candidates:
        move = EliminateGenerator(g, i, _solve_for(p.relators[i], pos))
        if move.apply(p).total_length() <= before:
            return move
    return None


def tietze_simplify(p, budget=1000):
    """Greedy Tietze simplification; returns the new presentation and a replayable trace.

    Relators are cyclically reduced and trivial or duplicate relators dropped;
    then a generator occurring exactly once in a relator is eliminated,
    shortest relator first and lowest generator index on ties, provided the
    total relator length does not grow.  When ``budget`` moves are used up the
    best presentation so far is returned with ``trace.exhausted`` set.
    """
    trace = TietzeTrace()
    while True:
        move = _next_move(p)
        if move is None:
            return p, trace
        if len(trace.moves) >= budget:
            trace.exhausted = True
            return p, trace
        p = move.apply(p)
        trace.moves.append(move)


def abelianization(p):
    """(free rank, torsion coefficients > 1) of the abelianized group."""
    matrix = []
    for r in p.relators:
        row = [0] * p.generator_count
        for g, e in r:
            row[g] += e
        matrix.append(row)
    if not matrix:
        return p.generator_count, []
    diag = smith_diagonal(matrix, p.generator_count)
    nonzero = [d for d in diag if d]
    return p.generator_count - len(nonzero), [d for d in nonzero if d > 1]
