"""Sparse multivariate polynomials with exact rational coefficients.

A polynomial lives in a fixed ambient ring Q[x_0, ..., x_{n-1}] and is stored
as a mapping from exponent tuples to nonzero rationals.  Instances are
immutable; arithmetic always returns new objects.
"""
from __future__ import annotations

import re
from fractions import Fraction

try:
    from gmpy2 import mpq as _mpq
except ImportError:  # pragma: no cover
    _mpq = Fraction

__all__ = [
    "QQ",
    "Polynomial",
    "MonomialOrder",
    "LEX",
    "GREVLEX",
    "parse_polynomial",
    "default_names",
]

# packing base for monomial keys; exponents and degrees must stay below it
KEY_BASE = 1 << 20


def QQ(value, denom=None):
    """Coerce ``value`` (int, str, Fraction, mpq) to the exact rational type."""
    if denom is not None:
        return _mpq(value, denom)
    if isinstance(value, Fraction):
        return _mpq(value.numerator, value.denominator)
    return _mpq(value)


def default_names(n):
    return [f"x{i}" for i in range(n)]


class MonomialOrder:
    """A multiplicative total order on monomials.

    ``kind`` is ``"lex"``, ``"grevlex"`` or ``"block"``.  A block order compares
    the first ``split`` variables by grevlex and breaks ties with grevlex on the
    rest, which makes it an elimination order for the first block.  ``perm``
    lists the variable indices in the order the comparison visits them.

    Every order is realised by an integer ``key`` that is additive in the
    exponent vector, so ``key(a + b) == key(a) + key(b)``.
    """

    __slots__ = ("kind", "split", "perm")

    def __init__(self, kind="grevlex", split=0, perm=None):
        if kind not in ("lex", "grevlex", "block"):
            raise ValueError(f"unknown monomial order {kind!r}")
        self.kind = kind
        self.split = split
        self.perm = tuple(perm) if perm is not None else None

    def __repr__(self):
        extra = f", split={self.split}" if self.kind == "block" else ""
        perm = f", perm={self.perm}" if self.perm is not None else ""
        return f"MonomialOrder({self.kind!r}{extra}{perm})"

    def __eq__(self, other):
        return (isinstance(other, MonomialOrder) and self.kind == other.kind
                and self.split == other.split and self.perm == other.perm)

    def __hash__(self):
        return hash((self.kind, self.split, self.perm))

    def describe(self):
        d = {"kind": self.kind}
        if self.kind == "block":
            d["split"] = self.split
        if self.perm is not None:
            d["perm"] = list(self.perm)
        return d

    def digits(self, exp):
        if self.perm is not None:
            exp = [exp[i] for i in self.perm]
        if self.kind == "lex":
            return list(exp)
        if self.kind == "grevlex":
            return _grevlex_digits(exp)
        k = self.split
        return _grevlex_digits(exp[:k]) + _grevlex_digits(exp[k:])

    def key(self, exp):
        v = 0
        for d in self.digits(exp):
            v = v * KEY_BASE + d
        return v


def _grevlex_digits(exp):
    return [sum(exp)] + [-e for e in reversed(exp)]


LEX = MonomialOrder("lex")
GREVLEX = MonomialOrder("grevlex")


def _add_exp(a, b):
    return tuple(x + y for x, y in zip(a, b))


class Polynomial:
    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        clean = {}
        if terms:
            for exp, c in terms.items():
                exp = tuple(exp)
                if len(exp) != nvars:
                    raise ValueError(f"exponent {exp} does not match {nvars} variables")
                if c:
                    clean[exp] = QQ(c)
        self.terms = clean
        self._hash = None

    # constructors

    @classmethod
    def zero(cls, nvars):
        return cls(nvars)

    @classmethod
    def constant(cls, nvars, c):
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, nvars, i):
        exp = [0] * nvars
        exp[i] = 1
        return cls(nvars, {tuple(exp): 1})

    @classmethod
    def gens(cls, nvars):
        return [cls.variable(nvars, i) for i in range(nvars)]

    # predicates and accessors

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(not any(e) for e in self.terms)

    def degree(self):
        return max((sum(e) for e in self.terms), default=-1)

    def support(self):
        """Indices of variables that actually occur."""
        used = set()
        for e in self.terms:
            used.update(i for i, x in enumerate(e) if x)
        return sorted(used)

    def constant_term(self):
        return self.terms.get((0,) * self.nvars, QQ(0))

    def sorted_terms(self, order=GREVLEX):
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def leading_term(self, order=GREVLEX):
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        exp = max(self.terms, key=order.key)
        return exp, self.terms[exp]

    def leading_monomial(self, order=GREVLEX):
        return self.leading_term(order)[0]

    def monic(self, order=GREVLEX):
        if not self.terms:
            return self
        _, lc = self.leading_term(order)
        return self.scale(1 / lc)

    # arithmetic

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.nvars != self.nvars:
                raise ValueError("polynomials live in different rings")
            return other
        return Polynomial.constant(self.nvars, QQ(other))

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return Polynomial(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, c):
        c = QQ(c)
        return Polynomial(self.nvars, {e: c * v for e, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        other = self._coerce(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = _add_exp(e1, e2)
                out[e] = out.get(e, 0) + c1 * c2
        return Polynomial(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power")
        result = Polynomial.constant(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction)) or type(other) is type(QQ(0)):
            return self == Polynomial.constant(self.nvars, other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    # ring changes

    def embed(self, nvars, positions=None):
        """Map into a ring with ``nvars`` variables; variable i goes to ``positions[i]``."""
        if positions is None:
            positions = range(self.nvars)
        positions = list(positions)
        out = {}
        for e, c in self.terms.items():
            new = [0] * nvars
            for i, x in enumerate(e):
                if x:
                    new[positions[i]] += x
            out[tuple(new)] = c
        return Polynomial(nvars, out)

    def compose(self, images):
        """Substitute ``images[i]`` (polynomials in a common ring) for variable i."""
        if len(images) != self.nvars:
            raise ValueError("need one image per variable")
        target = images[0].nvars if images else 0
        result = Polynomial.zero(target)
        powers = {}
        for e, c in self.terms.items():
            term = Polynomial.constant(target, c)
            for i, x in enumerate(e):
                if x:
                    p = powers.get((i, x))
                    if p is None:
                        p = powers[(i, x)] = images[i] ** x
                    term = term * p
            result = result + term
        return result

    def evaluate(self, point):
        total = QQ(0)
        for e, c in self.terms.items():
            v = c
            for x, k in zip(point, e):
                if k:
                    v *= QQ(x) ** k
            total += v
        return total

    # formatting

    def to_str(self, names=None, order=GREVLEX):
        names = names or default_names(self.nvars)
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms(order):
            mono = "*".join(
                names[i] if x == 1 else f"{names[i]}^{x}" for i, x in enumerate(e) if x
            )
            sign = "-" if c < 0 else "+"
            a = -c if c < 0 else c
            if not mono:
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"Polynomial({self.to_str()!s})"

    def __str__(self):
        return self.to_str()


_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[-+*^()/]))")


class PolynomialSyntaxError(ValueError):
    pass


def parse_polynomial(text, names):
    """Parse infix text such as ``x^2 - 1/2*y*z + 3`` over the variable ``names``."""
    names = list(names)
    index = {n: i for i, n in enumerate(names)}
    n = len(names)
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise PolynomialSyntaxError(f"unexpected input at {text[pos:]!r}")
        pos = m.end()
        num, ident, op = m.groups()
        if num is not None:
            tokens.append(("num", num))
        elif ident is not None:
            if ident not in index:
                raise PolynomialSyntaxError(f"unknown variable {ident!r}")
            tokens.append(("var", ident))
        elif op is not None:
            tokens.append(("op", "^" if op == "**" else op))
    tokens.append(("end", None))
    i = 0

    def peek():
        return tokens[i]

    def take():
        nonlocal i
        tok = tokens[i]
        i += 1
        return tok

    def expr():
        sign = 1
        if peek() == ("op", "-"):
            take()
            sign = -1
        elif peek() == ("op", "+"):
            take()
        acc = term().scale(sign)
        while peek()[0] == "op" and peek()[1] in "+-":
            op = take()[1]
            t = term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term():
        acc = power()
        while peek()[0] == "op" and peek()[1] in "*/(" or peek()[0] in ("var", "num"):
            if peek() == ("op", "/"):
                take()
                d = power()
                if not d.is_constant() or d.is_zero():
                    raise PolynomialSyntaxError("division only by nonzero constants")
                acc = acc.scale(1 / d.constant_term())
                continue
            if peek() == ("op", "*"):
                take()
            acc = acc * power()
        return acc

    def power():
        base = atom()
        if peek() == ("op", "^"):
            take()
            kind, val = take()
            if kind != "num" or "/" in val:
                raise PolynomialSyntaxError("exponent must be a non-negative integer")
            return base ** int(val)
        return base

    def atom():
        kind, val = take()
        if kind == "num":
            return Polynomial.constant(n, QQ(val))
        if kind == "var":
            return Polynomial.variable(n, index[val])
        if (kind, val) == ("op", "("):
            inner = expr()
            if take() != ("op", ")"):
                raise PolynomialSyntaxError("unbalanced parentheses")
            return inner
        if (kind, val) == ("op", "-"):
            return -power()
        raise PolynomialSyntaxError(f"unexpected token {val!r}")

    result = expr()
    if peek()[0] != "end":
        raise PolynomialSyntaxError(f"trailing input near {peek()[1]!r}")
    return result
