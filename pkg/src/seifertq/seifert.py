"""Seifert matrices and their exact invariants.

A Seifert matrix stores the linking numbers lk(x, y+) of curves on a
spanning surface against pushoffs.  The basis convention everywhere is
short curves first: for genus g, indices 0..g-1 are the short curves
s_i and indices g..2g-1 the long curves l_i, and the reference
symplectic form is J = [[0, I], [-I, 0]] in g x g blocks.

Basis-form labels are nested: every minimal-rank form is a trivial
Alexander form, and every trivial Alexander form is geometric.
"""

from __future__ import annotations

from . import intlinalg
from .errors import BasisChangeError, DimensionError, PreconditionError
from .laurent import LaurentPoly, det_over_laurent

MINIMAL_SEIFERT = "minimal_seifert"
TRIVIAL_ALEXANDER = "trivial_alexander"
GEOMETRIC = "geometric"
OTHER = "other"


class SeifertMatrix:
    """A 2g x 2g integer matrix of surface linking numbers."""

    __slots__ = ("rows",)

    def __init__(self, rows=()):
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        n = len(rows)
        for r in rows:
            if len(r) != n:
                raise DimensionError("Seifert matrix must be square")
        if n % 2:
            raise DimensionError("Seifert matrix must have even size, got %d" % n)
        self.rows = rows

    @property
    def size(self):
        return len(self.rows)

    @property
    def genus(self):
        return len(self.rows) // 2

    def entry(self, i, j):
        return self.rows[i][j]

    def as_lists(self):
        return [list(r) for r in self.rows]

    def is_geometric(self):
        """Whether SM - SM^T is the reference symplectic form."""
        n = self.size
        j = symplectic_form(self.genus)
        return all(
            self.rows[a][b] - self.rows[b][a] == j[a][b]
            for a in range(n)
            for b in range(n)
        )

    def __eq__(self, other):
        if not isinstance(other, SeifertMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return "SeifertMatrix(%r)" % (self.rows,)

    def to_json_obj(self):
        return {"genus": self.genus, "matrix": self.as_lists()}

    @classmethod
    def from_json_obj(cls, obj):
        if not isinstance(obj, dict) or "matrix" not in obj:
            raise DimensionError("expected an object with a 'matrix' field")
        sm = cls(obj["matrix"])
        if "genus" in obj and obj["genus"] != sm.genus:
            raise DimensionError(
                "declared genus %r does not match a %dx%d matrix"
                % (obj["genus"], sm.size, sm.size)
            )
        return sm


def symplectic_form(g):
    """The block matrix [[0, I], [-I, 0]] of size 2g."""
    n = 2 * g
    j = [[0] * n for _ in range(n)]
    for i in range(g):
        j[i][g + i] = 1
        j[g + i][i] = -1
    return j


def alexander(sm):
    """The Alexander polynomial t^-g * det(t*SM - SM^T)."""
    n = sm.size
    entries = [
        [
            LaurentPoly({1: sm.rows[i][j], 0: -sm.rows[j][i]})
            for j in range(n)
        ]
        for i in range(n)
    ]
    return det_over_laurent(entries).shift(-sm.genus)


def add_tube(sm, rho):
    """Stabilize by one tube: append a short and a long curve.

    The new short curve links nothing except the new long pushoff (one
    linking number 1); the long curve links the old basis by the column
    rho, with no constraint since a tube can wind around the surface
    arbitrarily.
    """
    rho = [int(x) for x in rho]
    n = sm.size
    if len(rho) != n:
        raise DimensionError(
            "tube vector has length %d, expected %d" % (len(rho), n)
        )
    out = [list(r) + [0, rho[i]] for i, r in enumerate(sm.rows)]
    out.append([0] * n + [0, 1])
    out.append(rho + [0, 0])
    return SeifertMatrix(out)


def congruence(sm, p):
    """Base change P^T * SM * P for a unimodular integer matrix P."""
    p = [list(r) for r in p]
    n = sm.size
    if len(p) != n or any(len(r) != n for r in p):
        raise DimensionError("base-change matrix size does not match")
    if intlinalg.det_int(p) not in (1, -1):
        raise BasisChangeError("base-change matrix must have determinant +-1")
    pt = intlinalg.transpose(p)
    return SeifertMatrix(intlinalg.mat_mul(intlinalg.mat_mul(pt, sm.as_lists()), p))


def is_symplectic(p, g):
    """Whether P^T J P == J for the reference form of genus g."""
    j = symplectic_form(g)
    pt = intlinalg.transpose([list(r) for r in p])
    return intlinalg.mat_mul(intlinalg.mat_mul(pt, j), [list(r) for r in p]) == j


def seifert_rank(sm):
    """Rank of the Seifert form over the rationals."""
    return intlinalg.rank_int(sm.as_lists())


def classify_basis_form(sm):
    """The strongest matching basis-form label.

    minimal_seifert: SM == [[0, I], [0, 0]].
    trivial_alexander: SM == [[0, I+U], [U^T, V]] with U strictly upper
    triangular and V symmetric with zero diagonal.
    geometric: SM - SM^T == [[0, I], [-I, 0]].
    """
    g = sm.genus
    rows = sm.rows

    def block(i0, j0):
        return [[rows[i0 + i][j0 + j] for j in range(g)] for i in range(g)]

    z, w = block(0, 0), block(0, g)
    x, v = block(g, 0), block(g, g)

    z_zero = all(c == 0 for r in z for c in r)
    if z_zero:
        u = [[w[i][j] - (1 if i == j else 0) for j in range(g)] for i in range(g)]
        u_strict_upper = all(
            u[i][j] == 0 for i in range(g) for j in range(g) if j <= i
        )
        x_matches = all(x[i][j] == u[j][i] for i in range(g) for j in range(g))
        v_ok = all(v[i][i] == 0 for i in range(g)) and all(
            v[i][j] == v[j][i] for i in range(g) for j in range(g)
        )
        if u_strict_upper and x_matches and v_ok:
            u_zero = all(c == 0 for r in u for c in r)
            v_zero = all(c == 0 for r in v for c in r)
            if u_zero and v_zero:
                return MINIMAL_SEIFERT
            return TRIVIAL_ALEXANDER
    if sm.is_geometric():
        return GEOMETRIC
    return OTHER


def tube_history_to_matrix(history):
    """Build a Seifert matrix of the unknot from a tube history.

    Tubes are added to the empty form in order (the k-th vector must
    have length 2(k-1)) and the basis is then permuted to short-first
    order.  The result is always a trivial Alexander form with
    Alexander polynomial 1.
    """
    sm = SeifertMatrix()
    for k, rho in enumerate(history):
        if len(rho) != 2 * k:
            raise DimensionError(
                "tube %d has length %d, expected %d" % (k, len(rho), 2 * k)
            )
        sm = add_tube(sm, rho)
    g = sm.genus
    # interleaved order (s1, l1, s2, l2, ...) -> (s1..sg, l1..lg)
    old_of_new = [2 * i for i in range(g)] + [2 * i + 1 for i in range(g)]
    n = 2 * g
    p = [[0] * n for _ in range(n)]
    for new, old in enumerate(old_of_new):
        p[old][new] = 1
    return congruence(sm, p)


def symplectic_generators(g):
    """Elementary generators of Sp(2g, Z): transvections in each s/l
    pair, mixing transvections between pairs, and hyperbolic swaps,
    together with their inverses.  Sorted for deterministic search."""
    n = 2 * g
    j = symplectic_form(g)

    def transvection(v, c):
        jv = intlinalg.mat_vec(j, v)
        return [
            [
                (1 if a == b else 0) + c * v[a] * jv[b]
                for b in range(n)
            ]
            for a in range(n)
        ]

    vs = []
    for i in range(g):
        e_s = [1 if a == i else 0 for a in range(n)]
        e_l = [1 if a == g + i else 0 for a in range(n)]
        vs.extend([e_s, e_l])
    for i in range(g):
        for k in range(i + 1, g):
            for (p, q) in ((i, k), (i, g + k), (g + i, k), (g + i, g + k)):
                v = [0] * n
                v[p] += 1
                v[q] += 1
                vs.append(v)

    mats = set()
    for v in vs:
        for c in (1, -1):
            mats.add(tuple(tuple(r) for r in transvection(v, c)))
    for i in range(g):
        swap = identity_rows(n)
        for a in range(n):
            swap[a][i] = 0
            swap[a][g + i] = 0
        swap[g + i][i] = 1  # s_i -> l_i
        swap[i][g + i] = -1  # l_i -> -s_i
        inv = identity_rows(n)
        for a in range(n):
            inv[a][i] = 0
            inv[a][g + i] = 0
        inv[g + i][i] = -1
        inv[i][g + i] = 1
        mats.add(tuple(tuple(r) for r in swap))
        mats.add(tuple(tuple(r) for r in inv))
    return [
        [list(r) for r in m]
        for m in sorted(mats, key=lambda m: tuple(x for row in m for x in row))
    ]


def identity_rows(n):
    return intlinalg.identity(n)


def search_minimal_basis(sm, depth):
    """Breadth-first search for a symplectic base change to the minimal
    Seifert form.

    Explores products of at most ``depth`` elementary symplectic
    generators and returns the lexicographically least certificate among
    shallowest hits, or None.  A None result is not a proof that no
    minimal basis exists; the search is bounded.
    """
    if not sm.is_geometric():
        raise PreconditionError("search requires a geometric basis form")
    if depth < 0:
        raise PreconditionError("search depth must be nonnegative")
    n = sm.size
    ident = identity_rows(n)
    if classify_basis_form(sm) == MINIMAL_SEIFERT:
        return ident
    gens = symplectic_generators(sm.genus)
    seen = {_key(ident)}
    frontier = [ident]
    for _ in range(depth):
        nxt = []
        hits = []
        for p in frontier:
            for gmat in gens:
                q = intlinalg.mat_mul(p, gmat)
                key = _key(q)
                if key in seen:
                    continue
                seen.add(key)
                nxt.append(q)
                if classify_basis_form(congruence(sm, q)) == MINIMAL_SEIFERT:
                    hits.append(key)
        if hits:
            best = min(hits)
            return [list(r) for r in best]
        frontier = nxt
        if not frontier:
            break
    return None


def _key(mat):
    return tuple(tuple(r) for r in mat)


def intersection_matrix(sm):
    """The g x g unitriangular matrix D, D_ij = delta_ij + U_ij*(1-t).

    U is the strictly upper triangular block of a trivial Alexander
    form, read so that the pushoff convention makes D unitriangular
    (ones on the diagonal, zeros strictly below); the unitriangularity
    is asserted by construction.
    """
    label = classify_basis_form(sm)
    if label not in (TRIVIAL_ALEXANDER, MINIMAL_SEIFERT):
        raise PreconditionError(
            "intersection matrix needs a trivial Alexander form, got %r" % label
        )
    g = sm.genus
    one_minus_t = LaurentPoly({0: 1, 1: -1})
    out = []
    for i in range(g):
        row = []
        for j in range(g):
            u = sm.rows[i][g + j] - (1 if i == j else 0)
            d = LaurentPoly({0: 1} if i == j else {})
            if u:
                d = d + one_minus_t * u
            row.append(d)
        out.append(row)
    return out


def triangular_dualize(d):
    """Invert a unitriangular matrix over Z[t, t^-1] exactly.

    Rows of the result express the corrected dual classes in terms of
    the given ones by downward elimination, so B @ D == I holds on the
    nose and B is again unitriangular.
    """
    n = len(d)
    one = LaurentPoly.one()
    zero = LaurentPoly()
    for i, row in enumerate(d):
        if len(row) != n:
            raise PreconditionError("matrix must be square")
        if row[i] != one:
            raise PreconditionError("diagonal entries must all be 1")
        for j in range(i):
            if row[j] != zero:
                raise PreconditionError("entries below the diagonal must vanish")
    b = [[zero] * n for _ in range(n)]
    for i in range(n - 1, -1, -1):
        row = [zero] * n
        row[i] = one
        for j in range(i + 1, n):
            c = d[i][j]
            if c:
                for k in range(n):
                    if b[j][k]:
                        row[k] = row[k] - c * b[j][k]
        b[i] = row
    return b
