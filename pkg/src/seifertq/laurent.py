"""Exact arithmetic over the integer Laurent polynomial ring Z[t, t^-1].

Polynomials are immutable exponent -> coefficient maps with no zero
coefficient stored, so structural equality is ring equality.  The text
form lists terms by ascending exponent, e.g. ``-1*t^-1 + 2 + 3*t^2``:
the constant term is a bare integer, every other coefficient is printed
explicitly (including 1 and -1), and exponent one is written ``t``.
The parser accepts the same grammar with arbitrary whitespace.
"""

from __future__ import annotations

from .errors import DimensionError, ParseError


class LaurentPoly:
    """An element of Z[t, t^-1] with finite support."""

    __slots__ = ("_terms",)

    def __init__(self, terms=()):
        data = {}
        items = terms.items() if hasattr(terms, "items") else terms
        for exp, coeff in items:
            if not isinstance(exp, int) or not isinstance(coeff, int):
                raise TypeError("exponents and coefficients must be integers")
            c = data.get(exp, 0) + coeff
            if c:
                data[exp] = c
            elif exp in data:
                del data[exp]
        self._terms = data

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({0: 1})

    @classmethod
    def constant(cls, c):
        return cls({0: c})

    @classmethod
    def t(cls, power=1):
        return cls({power: 1})

    @classmethod
    def monomial(cls, coeff, power):
        return cls({power: coeff})

    def sorted_terms(self):
        """Pairs (exponent, coefficient) by ascending exponent."""
        return tuple(sorted(self._terms.items()))

    def coefficient(self, exp):
        return self._terms.get(exp, 0)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                del out[e]
        res = LaurentPoly.__new__(LaurentPoly)
        res._terms = out
        return res

    def __neg__(self):
        res = LaurentPoly.__new__(LaurentPoly)
        res._terms = {e: -c for e, c in self._terms.items()}
        return res

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly()
            res = LaurentPoly.__new__(LaurentPoly)
            res._terms = {e: c * other for e, c in self._terms.items()}
            return res
        a, b = self._terms, other._terms
        if not a or not b:
            return LaurentPoly()
        amin = min(a)
        bmin = min(b)
        out = [0] * (max(a) - amin + max(b) - bmin + 1)
        for ea, ca in a.items():
            ia = ea - amin
            for eb, cb in b.items():
                out[ia + eb - bmin] += ca * cb
        base = amin + bmin
        res = LaurentPoly.__new__(LaurentPoly)
        res._terms = {base + i: c for i, c in enumerate(out) if c}
        return res

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative powers are only defined for monomials; use t(-k)")
        out = LaurentPoly.one()
        for _ in range(n):
            out = out * self
        return out

    def bar(self):
        """The involution t -> t^-1."""
        res = LaurentPoly.__new__(LaurentPoly)
        res._terms = {-e: c for e, c in self._terms.items()}
        return res

    def eval_at_one(self):
        """Augmentation t -> 1: the integer coefficient sum."""
        return sum(self._terms.values())

    def shift(self, k):
        """Multiply by t^k."""
        res = LaurentPoly.__new__(LaurentPoly)
        res._terms = {e + k: c for e, c in self._terms.items()}
        return res

    def is_monomial(self):
        return len(self._terms) == 1

    def to_text(self):
        if not self._terms:
            return "0"
        parts = []
        for e in sorted(self._terms):
            c = self._terms[e]
            if e == 0:
                parts.append(str(c))
            elif e == 1:
                parts.append("%d*t" % c)
            else:
                parts.append("%d*t^%d" % (c, e))
        return " + ".join(parts)

    def __repr__(self):
        return "LaurentPoly(%s)" % self.to_text()

    @classmethod
    def parse(cls, text):
        return _parse_poly(text)


def _parse_poly(text):
    s = text
    n = len(s)

    def skip_ws(i):
        while i < n and s[i].isspace():
            i += 1
        return i

    def read_int(i, what):
        j = i
        if j < n and s[j] in "+-":
            j += 1
        start_digits = j
        while j < n and s[j].isdigit():
            j += 1
        if j == start_digits:
            raise ParseError("expected %s" % what, i)
        return int(s[i:j]), j

    terms = []
    i = skip_ws(0)
    if i == n:
        raise ParseError("empty polynomial", 0)
    first = True
    while i < n:
        sign = 1
        if not first:
            if s[i] not in "+-":
                raise ParseError("expected '+' or '-' between terms", i)
            if s[i] == "-":
                sign = -1
            i = skip_ws(i + 1)
        if i < n and s[i] in "+-":
            if s[i] == "-":
                sign = -sign
            i = skip_ws(i + 1)
        if i >= n:
            raise ParseError("dangling sign", i)
        if s[i].isdigit():
            coeff, i = read_int(i, "an integer coefficient")
            j = skip_ws(i)
            if j < n and s[j] == "*":
                i = skip_ws(j + 1)
                if i >= n or s[i] != "t":
                    raise ParseError("expected 't' after '*'", i)
                exp, i = _parse_t_part(s, i, skip_ws, read_int)
                terms.append((exp, sign * coeff))
            else:
                terms.append((0, sign * coeff))
                i = j
        elif s[i] == "t":
            exp, i = _parse_t_part(s, i, skip_ws, read_int)
            terms.append((exp, sign))
        else:
            raise ParseError("expected a coefficient or 't'", i)
        i = skip_ws(i)
        first = False
    return LaurentPoly(terms)


def _parse_t_part(s, i, skip_ws, read_int):
    # called with s[i] == 't'
    i = skip_ws(i + 1)
    if i < len(s) and s[i] == "^":
        i = skip_ws(i + 1)
        exp, i = read_int(i, "an integer exponent after '^'")
        return exp, i
    return 1, i


def poly_op(kind, a, b=None):
    """Dispatch entry point for the ring operations.

    ``add``/``sub``/``mul`` are binary, ``bar`` is unary, and
    ``eval_at_one`` is the augmentation returning an integer.
    """
    if kind in ("add", "sub", "mul"):
        if b is None:
            raise ValueError("operation %r needs two operands" % kind)
        if kind == "add":
            return a + b
        if kind == "sub":
            return a - b
        return a * b
    if b is not None:
        raise ValueError("operation %r is unary" % kind)
    if kind == "bar":
        return a.bar()
    if kind == "eval_at_one":
        return a.eval_at_one()
    raise ValueError("unknown operation kind %r" % kind)


def det_over_laurent(matrix):
    """Exact determinant of a square matrix of Laurent polynomials.

    Cofactor expansion up to size 4; fraction-free (Bareiss) elimination
    beyond that, with rows rescaled by monomials so all intermediate
    values stay in Z[t].  The 0x0 determinant is 1.
    """
    rows = [list(r) for r in matrix]
    n = len(rows)
    for r in rows:
        if len(r) != n:
            raise DimensionError("determinant requires a square matrix")
        for x in r:
            if not isinstance(x, LaurentPoly):
                raise TypeError("matrix entries must be LaurentPoly")
    if n == 0:
        return LaurentPoly.one()
    if n <= 4:
        return _det_cofactor(rows)
    return _det_bareiss(rows)


def _det_cofactor(rows):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = LaurentPoly()
    for j in range(n):
        a = rows[0][j]
        if not a:
            continue
        minor = [[rows[i][k] for k in range(n) if k != j] for i in range(1, n)]
        term = a * _det_cofactor(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def _det_bareiss(rows):
    n = len(rows)
    # factor t^(min exponent) out of each row: entries become plain
    # coefficient lists over Z[t] and the shift is restored at the end
    shift = 0
    grid = []
    for row in rows:
        mins = [min(p._terms) for p in row if p]
        if not mins:
            return LaurentPoly()
        m = min(mins)
        shift += m
        new_row = []
        for p in row:
            if not p:
                new_row.append([])
            else:
                span = max(p._terms) - m
                coeffs = [0] * (span + 1)
                for e, c in p._terms.items():
                    coeffs[e - m] = c
                new_row.append(coeffs)
        grid.append(new_row)

    sign = 1
    prev = [1]
    for k in range(n - 1):
        if not grid[k][k]:
            pivot = next((i for i in range(k + 1, n) if grid[i][k]), None)
            if pivot is None:
                return LaurentPoly()
            grid[k], grid[pivot] = grid[pivot], grid[k]
            sign = -sign
        pkk = grid[k][k]
        for i in range(k + 1, n):
            gik = grid[i][k]
            for j in range(k + 1, n):
                num = _plist_sub(_plist_mul(pkk, grid[i][j]), _plist_mul(gik, grid[k][j]))
                grid[i][j] = _plist_div_exact(num, prev)
            grid[i][k] = []
        prev = pkk
    final = grid[n - 1][n - 1]
    terms = {shift + i: (c if sign > 0 else -c) for i, c in enumerate(final) if c}
    res = LaurentPoly.__new__(LaurentPoly)
    res._terms = terms
    return res


def _plist_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _plist_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _plist_trim(out)


def _plist_sub(a, b):
    m = max(len(a), len(b))
    out = [0] * m
    for i, x in enumerate(a):
        out[i] = x
    for i, y in enumerate(b):
        out[i] -= y
    return _plist_trim(out)


def _plist_div_exact(num, den):
    # exact division in Z[t]; Bareiss guarantees divisibility
    if not num:
        return []
    dn = len(den) - 1
    lead = den[-1]
    qdeg = len(num) - len(den)
    if qdeg < 0:
        raise ArithmeticError("inexact polynomial division")
    work = list(num)
    q = [0] * (qdeg + 1)
    for k in range(qdeg, -1, -1):
        c = work[k + dn]
        if c == 0:
            continue
        if c % lead:
            raise ArithmeticError("inexact polynomial division")
        f = c // lead
        q[k] = f
        for j, d in enumerate(den):
            if d:
                work[k + j] -= f * d
    if any(work):
        raise ArithmeticError("inexact polynomial division")
    return _plist_trim(q)
