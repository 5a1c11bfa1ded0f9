"""The three-variable value group of the two-loop obstruction.

Monomials t1^a t2^b t3^c subject to t1*t2*t3 == 1 are stored as
exponent triples shifted so min(a, b, c) == 0; that makes the ambient
ring's equality structural.  The value group identifies each monomial
with its orbit under permuting the three variables and inverting all of
them simultaneously (12 images per monomial).  Orbit keys are the
lexicographically least shifted image, which always has the shape
(0, b, c) with 0 <= 2b <= c.

The group carries no multiplication: products are formed in the ambient
ring and then projected.
"""

from __future__ import annotations

import itertools

from . import intlinalg
from .errors import NotInKernelError, ParseError


def _shift(triple):
    m = min(triple)
    return (triple[0] - m, triple[1] - m, triple[2] - m)


_PERMUTATIONS = tuple(itertools.permutations(range(3)))


def orbit_images(triple):
    """The 12 shifted images of a monomial under Sym3 x Sym2."""
    triple = _shift(tuple(triple))
    out = []
    for base in (triple, tuple(-x for x in triple)):
        for perm in _PERMUTATIONS:
            out.append(_shift(tuple(base[p] for p in perm)))
    return out


def orbit_canonical(triple):
    """The lexicographically least shifted image of the orbit."""
    return min(orbit_images(triple))


class AmbientPoly:
    """An element of Z[t1^+-1, t2^+-1, t3^+-1] / (t1 t2 t3 - 1)."""

    __slots__ = ("_terms",)

    def __init__(self, terms=()):
        data = {}
        items = terms.items() if hasattr(terms, "items") else terms
        for triple, coeff in items:
            key = _shift((int(triple[0]), int(triple[1]), int(triple[2])))
            c = data.get(key, 0) + int(coeff)
            if c:
                data[key] = c
            elif key in data:
                del data[key]
        self._terms = data

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def constant(cls, c):
        return cls({(0, 0, 0): c})

    @classmethod
    def one(cls):
        return cls.constant(1)

    @classmethod
    def variable(cls, index, power=1):
        """t_index^power for index in (1, 2, 3)."""
        if index not in (1, 2, 3):
            raise ValueError("variable index must be 1, 2 or 3")
        e = [0, 0, 0]
        e[index - 1] = power
        return cls({tuple(e): 1})

    def sorted_terms(self):
        return tuple(sorted(self._terms.items()))

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, AmbientPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        out = dict(self._terms)
        for k, c in other._terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                del out[k]
        res = AmbientPoly.__new__(AmbientPoly)
        res._terms = out
        return res

    def __neg__(self):
        res = AmbientPoly.__new__(AmbientPoly)
        res._terms = {k: -c for k, c in self._terms.items()}
        return res

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            res = AmbientPoly.__new__(AmbientPoly)
            res._terms = {} if other == 0 else {k: c * other for k, c in self._terms.items()}
            return res
        out = {}
        for ka, ca in self._terms.items():
            for kb, cb in other._terms.items():
                key = _shift((ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2]))
                s = out.get(key, 0) + ca * cb
                if s:
                    out[key] = s
                elif key in out:
                    del out[key]
        res = AmbientPoly.__new__(AmbientPoly)
        res._terms = out
        return res

    __rmul__ = __mul__

    def eval_all_one(self):
        """Augmentation: every variable to 1."""
        return sum(self._terms.values())

    def to_text(self):
        if not self._terms:
            return "0"
        parts = []
        for key in sorted(self._terms):
            c = self._terms[key]
            factors = ["%d" % c]
            for i, e in enumerate(key):
                if e:
                    factors.append("t%d^%d" % (i + 1, e))
            parts.append("*".join(factors))
        return " + ".join(parts)

    def __repr__(self):
        return "AmbientPoly(%s)" % self.to_text()

    @classmethod
    def parse(cls, text):
        return _parse_ambient(text)


def _parse_ambient(text):
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
        start = j
        while j < n and s[j].isdigit():
            j += 1
        if j == start:
            raise ParseError("expected %s" % what, i)
        return int(s[i:j]), j

    def read_var(i):
        # at s[i] == 't'; returns (index, exponent, next position)
        if i + 1 >= n or s[i + 1] not in "123":
            raise ParseError("expected t1, t2 or t3", i)
        idx = int(s[i + 1])
        i = skip_ws(i + 2)
        if i < n and s[i] == "^":
            i = skip_ws(i + 1)
            e, i = read_int(i, "an integer exponent after '^'")
            return idx, e, i
        return idx, 1, i

    terms = []
    i = skip_ws(0)
    if i == n:
        raise ParseError("empty expression", 0)
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
        coeff = 1
        exps = [0, 0, 0]
        saw_factor = False
        if s[i].isdigit():
            coeff, i = read_int(i, "an integer coefficient")
            saw_factor = True
            i = skip_ws(i)
            while i < n and s[i] == "*":
                i = skip_ws(i + 1)
                if i >= n or s[i] != "t":
                    raise ParseError("expected a variable after '*'", i)
                idx, e, i = read_var(i)
                exps[idx - 1] += e
                i = skip_ws(i)
        elif s[i] == "t":
            while True:
                idx, e, i = read_var(i)
                exps[idx - 1] += e
                saw_factor = True
                i = skip_ws(i)
                if i < n and s[i] == "*":
                    j = skip_ws(i + 1)
                    if j < n and s[j] == "t":
                        i = j
                        continue
                    raise ParseError("expected a variable after '*'", j)
                break
        if not saw_factor:
            raise ParseError("expected a coefficient or a variable", i)
        terms.append((tuple(exps), sign * coeff))
        first = False
        i = skip_ws(i)
    return AmbientPoly(terms)


def ambient_op(kind, a=None, b=None, text=None):
    """Dispatch entry point for the ambient ring operations."""
    if kind == "add":
        return a + b
    if kind == "mul":
        return a * b
    if kind == "from_terms":
        return AmbientPoly.parse(text)
    raise ValueError("unknown operation kind %r" % kind)


class ThetaElement:
    """An element of the orbit quotient group, keyed by canonical triples."""

    __slots__ = ("_terms",)

    def __init__(self, terms=()):
        data = {}
        items = terms.items() if hasattr(terms, "items") else terms
        for triple, coeff in items:
            key = orbit_canonical(tuple(int(x) for x in triple))
            c = data.get(key, 0) + int(coeff)
            if c:
                data[key] = c
            elif key in data:
                del data[key]
        self._terms = data

    @classmethod
    def zero(cls):
        return cls()

    def sorted_terms(self):
        return tuple(sorted(self._terms.items()))

    def support(self):
        return set(self._terms)

    def coefficient(self, triple):
        return self._terms.get(orbit_canonical(triple), 0)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, ThetaElement):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        out = dict(self._terms)
        for k, c in other._terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                del out[k]
        res = ThetaElement.__new__(ThetaElement)
        res._terms = out
        return res

    def __neg__(self):
        res = ThetaElement.__new__(ThetaElement)
        res._terms = {k: -c for k, c in self._terms.items()}
        return res

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, int):
            return NotImplemented
        res = ThetaElement.__new__(ThetaElement)
        res._terms = {} if other == 0 else {k: c * other for k, c in self._terms.items()}
        return res

    __rmul__ = __mul__

    def augment(self):
        return sum(self._terms.values())

    def section(self):
        """An ambient representative: the canonical triples verbatim."""
        return AmbientPoly(self._terms)

    def to_text(self):
        if not self._terms:
            return "0"
        return " + ".join(
            "%d*[%d,%d,%d]" % (c, k[0], k[1], k[2])
            for k, c in sorted(self._terms.items())
        )

    def __repr__(self):
        return "ThetaElement(%s)" % self.to_text()

    def to_json_obj(self):
        return {
            "terms": [
                {"exp": list(k), "coef": c} for k, c in sorted(self._terms.items())
            ]
        }

    @classmethod
    def from_json_obj(cls, obj):
        return cls((tuple(t["exp"]), t["coef"]) for t in obj["terms"])


def project(p):
    """Group projection of an ambient polynomial onto orbit classes."""
    return ThetaElement(p._terms)


def augment(x):
    """Coefficient sum; the composite with project evaluates all
    variables at 1."""
    return x.augment()


def minimal_rank_generators():
    """The three generators of the minimal-Seifert-rank value subgroup:
    (t1-1), (t1-1)(t2^-1 - 1), (t1-1)(t2-1)(t3^-1 - 1), expanded in the
    ambient ring and projected."""
    t1 = AmbientPoly.variable(1)
    t2 = AmbientPoly.variable(2)
    t2i = AmbientPoly.variable(2, -1)
    t3i = AmbientPoly.variable(3, -1)
    one = AmbientPoly.one()
    g1 = project(t1 - one)
    g2 = project((t1 - one) * (t2i - one))
    g3 = project((t1 - one) * (t2 - one) * (t3i - one))
    return g1, g2, g3


def membership(x, gens):
    """Integer coefficients expressing x in the span of gens, or None.

    Solves the lattice membership problem in the free abelian group on
    canonical triples by unimodular column reduction (Hermite-style),
    so torsion is handled exactly.
    """
    support = set(x.support())
    for g in gens:
        support |= g.support()
    basis = sorted(support)
    index = {k: i for i, k in enumerate(basis)}
    a = [[0] * len(gens) for _ in basis]
    for j, g in enumerate(gens):
        for k, c in g.sorted_terms():
            a[index[k]][j] = c
    b = [0] * len(basis)
    for k, c in x.sorted_terms():
        b[index[k]] = c
    if not basis:
        return [0] * len(gens)
    return intlinalg.solve_int(a, b)


def realize_decompose(x):
    """Write a kernel element as sum of c * project((t1-1) t2^n t3^m).

    Greedy telescoping: the lexicographically largest canonical triple
    is stepped down in its largest coordinate, which is a single
    generator move; each step strictly decreases the triple in the
    well-order, so the walk terminates.  Returns (coefficient, n, m)
    entries sorted by (n, m); the zero element yields [].
    """
    if x.augment() != 0:
        raise NotInKernelError("element has augmentation %d, expected 0" % x.augment())
    remaining = dict(x.sorted_terms())
    collected = {}
    while True:
        keys = [k for k in remaining if k != (0, 0, 0)]
        if not keys:
            break
        tau = max(keys)
        coeff = remaining.pop(tau)
        _, b, c = tau
        # move the largest coordinate to the first slot: the generator
        # (t1-1) t2^n t3^m with the exponents below steps (c,0,b) down
        # to (c-1,0,b)
        n_exp = 1 - c
        m_exp = 1 + b - c
        collected[(n_exp, m_exp)] = collected.get((n_exp, m_exp), 0) + coeff
        lower = orbit_canonical((c - 1, 0, b))
        s = remaining.get(lower, 0) + coeff
        if s:
            remaining[lower] = s
        elif lower in remaining:
            del remaining[lower]
    leftover = remaining.get((0, 0, 0), 0)
    if leftover:
        raise AssertionError("nonzero residue %d survived decomposition" % leftover)
    return [(c, n, m) for (n, m), c in sorted(collected.items()) if c]


def generator_element(n, m):
    """project((t1 - 1) * t2^n * t3^m)."""
    t1 = AmbientPoly.variable(1)
    mono = AmbientPoly({(0, n, m): 1})
    return project((t1 - AmbientPoly.one()) * mono)


def recombine(decomposition):
    """Inverse of realize_decompose: sum the listed generator multiples."""
    total = ThetaElement.zero()
    for c, n, m in decomposition:
        total = total + c * generator_element(n, m)
    return total


def canonical_orbit_triples(width):
    """All canonical orbit triples with entries <= width, sorted."""
    return sorted(
        (0, b, c) for c in range(width + 1) for b in range(c // 2 + 1)
    )


def window_rank_gap(width, gens=None):
    """Free rank of (window kernel) / span(gens).

    The window group is free abelian on canonical triples with entries
    <= width; its augmentation kernel has rank (#triples - 1).  The gap
    subtracts the rational rank of the generator span, which must be
    supported inside the window (width >= 2 for the standard three).
    """
    if gens is None:
        gens = minimal_rank_generators()
    triples = canonical_orbit_triples(width)
    index = {k: i for i, k in enumerate(triples)}
    rows = []
    for g in gens:
        row = [0] * len(triples)
        for k, c in g.sorted_terms():
            if k not in index:
                raise ValueError(
                    "generator support %r lies outside window %d" % (k, width)
                )
            row[index[k]] = c
        rows.append(row)
    span_rank = intlinalg.rank_int(rows)
    return (len(triples) - 1) - span_rank
