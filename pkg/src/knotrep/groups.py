"""Small permutation groups with fully enumerated element tables."""
from __future__ import annotations

import re
from collections import deque

__all__ = [
    "FiniteGroup",
    "GroupTooLarge",
    "cyclic",
    "dihedral",
    "symmetric",
    "alternating",
    "group_by_name",
    "parse_cycles",
    "group_from_text",
    "format_cycles",
]

MAX_ORDER = 10_000
_TABLE_LIMIT = 1_000


class GroupTooLarge(ValueError):
    pass


def _compose(p, q):
    """Apply p, then q."""
    return tuple(q[i] for i in p)


class FiniteGroup:
    """Permutation group on ``degree`` points with an element table.

    Elements are permutation tuples, listed identity first and then in
    breadth-first order over the generators; element indices refer to this
    list.  Multiplication ``mul(i, j)`` applies element i first.  The table is
    built once in the constructor and never mutated.
    """

    def __init__(self, degree, generators, name=None):
        self.degree = degree
        self.generators = tuple(tuple(g) for g in generators)
        for g in self.generators:
            if sorted(g) != list(range(degree)):
                raise ValueError(f"{g} is not a permutation of {degree} points")
        self.name = name or f"<{len(self.generators)} gens on {degree} pts>"
        ident = tuple(range(degree))
        elements = [ident]
        index = {ident: 0}
        queue = deque([ident])
        while queue:
            x = queue.popleft()
            for g in self.generators:
                y = _compose(x, g)
                if y not in index:
                    if len(elements) >= MAX_ORDER:
                        raise GroupTooLarge(f"{self.name} has order > {MAX_ORDER}")
                    index[y] = len(elements)
                    elements.append(y)
                    queue.append(y)
        self.elements = tuple(elements)
        self.index = index
        self.identity = 0
        self.inverse = tuple(index[_invert(x)] for x in elements)
        self._table = None
        if len(elements) <= _TABLE_LIMIT:
            self._table = tuple(
                tuple(index[_compose(x, y)] for y in elements) for x in elements)

    def __len__(self):
        return len(self.elements)

    @property
    def order(self):
        return len(self.elements)

    def __repr__(self):
        return f"FiniteGroup({self.name}, order={self.order})"

    def __getstate__(self):
        return {"degree": self.degree, "generators": self.generators, "name": self.name}

    def __setstate__(self, state):
        self.__init__(state["degree"], state["generators"], state["name"])

    def mul(self, i, j):
        if self._table is not None:
            return self._table[i][j]
        return self.index[_compose(self.elements[i], self.elements[j])]

    def power(self, i, e):
        return i if e == 1 else self.inverse[i]

    def evaluate(self, word, images):
        """Evaluate a word given generator images (element indices)."""
        acc = self.identity
        for g, e in word:
            x = images[g]
            acc = self.mul(acc, x if e == 1 else self.inverse[x])
        return acc

    def element_order(self, i):
        k, x = 1, i
        while x != self.identity:
            x = self.mul(x, i)
            k += 1
        return k

    def conjugate(self, x, g):
        """g^-1 x g."""
        return self.mul(self.mul(self.inverse[g], x), g)

    def conjugacy_classes(self):
        """Classes as sorted index lists, ordered by their smallest member."""
        seen = set()
        classes = []
        for x in range(self.order):
            if x in seen:
                continue
            cls = sorted({self.conjugate(x, g) for g in range(self.order)})
            seen.update(cls)
            classes.append(cls)
        return classes

    def is_transposition(self, i):
        moved = [p for p, q in enumerate(self.elements[i]) if p != q]
        return len(moved) == 2


def _invert(p):
    out = [0] * len(p)
    for i, q in enumerate(p):
        out[q] = i
    return tuple(out)


def _cycle_perm(degree, cycles):
    p = list(range(degree))
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            p[a] = b
    return tuple(p)


def cyclic(n):
    return FiniteGroup(n, [_cycle_perm(n, [list(range(n))])] if n > 1 else [(0,)], f"C{n}")


def dihedral(n):
    """Symmetries of the n-gon (order 2n)."""
    if n < 3:
        raise ValueError("dihedral groups here need n >= 3")
    rot = _cycle_perm(n, [list(range(n))])
    ref = tuple((-i) % n for i in range(n))
    return FiniteGroup(n, [rot, ref], f"D{n}")


def symmetric(n):
    if n == 1:
        return FiniteGroup(1, [(0,)], "S1")
    gens = [_cycle_perm(n, [[0, 1]])]
    if n > 2:
        gens.append(_cycle_perm(n, [list(range(n))]))
    return FiniteGroup(n, gens, f"S{n}")


def alternating(n):
    if n < 3:
        return FiniteGroup(max(n, 1), [tuple(range(max(n, 1)))], f"A{n}")
    gens = [_cycle_perm(n, [[0, 1, k]]) for k in range(2, n)]
    return FiniteGroup(n, gens, f"A{n}")


_NAME = re.compile(r"^([CDSA])(\d+)$")


def group_by_name(name):
    m = _NAME.match(name.strip())
    if not m:
        raise ValueError(f"unknown group {name!r}; expected Cn, Dn, Sn or An")
    kind, n = m.group(1), int(m.group(2))
    if n < 1:
        raise ValueError("group parameter must be positive")
    return {"C": cyclic, "D": dihedral, "S": symmetric, "A": alternating}[kind](n)


def parse_cycles(text, degree=None):
    """Parse one permutation in 1-based cycle notation, e.g. ``(1 2 3)(4 5)``."""
    cycles = []
    for body in re.findall(r"\(([^)]*)\)", text):
        pts = [int(t) - 1 for t in body.replace(",", " ").split()]
        if pts:
            cycles.append(pts)
    pts = [p for c in cycles for p in c]
    if any(p < 0 for p in pts) or len(pts) != len(set(pts)):
        raise ValueError(f"bad cycle notation {text!r}")
    deg = degree or (max(pts) + 1 if pts else 1)
    return _cycle_perm(deg, cycles)


def group_from_text(text, name="custom"):
    """One permutation per line in cycle notation; an optional ``degree: n`` line."""
    degree = None
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("degree:"):
            degree = int(line[7:])
        elif line.startswith("name:"):
            name = line[5:].strip()
        else:
            lines.append(line)
    if degree is None:
        pts = [int(t) for l in lines for t in re.findall(r"\d+", l)]
        degree = max(pts) if pts else 1
    gens = [parse_cycles(l, degree) for l in lines] or [tuple(range(degree))]
    return FiniteGroup(degree, gens, name)


def format_cycles(p):
    seen = set()
    parts = []
    for i in range(len(p)):
        if i in seen or p[i] == i:
            continue
        cyc = []
        j = i
        while j not in seen:
            seen.add(j)
            cyc.append(j + 1)
            j = p[j]
        parts.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(parts) or "()"
