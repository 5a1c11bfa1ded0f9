"""Small exact integer linear algebra helpers.

Everything works on lists of lists of Python ints, so there is no
precision ceiling; sizes stay small throughout the package.
"""

from __future__ import annotations


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def transpose(a):
    return [list(col) for col in zip(*a)] if a else []


def mat_mul(a, b):
    if not a or not b:
        return []
    rows, inner, cols = len(a), len(b), len(b[0])
    out = [[0] * cols for _ in range(rows)]
    for i in range(rows):
        ai = a[i]
        for k in range(inner):
            x = ai[k]
            if x:
                bk = b[k]
                oi = out[i]
                for j in range(cols):
                    oi[j] += x * bk[j]
    return out


def mat_vec(a, v):
    return [sum(row[j] * v[j] for j in range(len(v))) for row in a]


def det_int(rows):
    """Determinant by fraction-free elimination."""
    n = len(rows)
    if n == 0:
        return 1
    a = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if a[i][k]), None)
            if pivot is None:
                return 0
            a[k], a[pivot] = a[pivot], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def rank_int(rows):
    """Rank over the rationals, computed without leaving the integers."""
    if not rows:
        return 0
    a = [list(r) for r in rows]
    m, n = len(a), len(a[0])
    rank = 0
    r = 0
    for col in range(n):
        pivot = next((i for i in range(r, m) if a[i][col]), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        p = a[r][col]
        for i in range(r + 1, m):
            c = a[i][col]
            if c:
                a[i] = [p * a[i][j] - c * a[r][j] for j in range(n)]
        rank += 1
        r += 1
        if r == m:
            break
    return rank


def xgcd(a, b):
    """(g, x, y) with x*a + y*b == g == gcd(a, b), g >= 0."""
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    if g < 0:
        x, y, g = -x, -y, -g
    return g, x, y


def solve_int(a, b):
    """An integer solution x of a @ x == b, or None if there is none.

    Works by unimodular column reduction to echelon form (a Hermite-style
    normal form restricted to what back-substitution needs), so membership
    in the integer column span is decided exactly, torsion included.
    """
    m = len(a)
    k = len(a[0]) if m else 0
    if len(b) != m:
        raise ValueError("dimension mismatch between matrix and target")
    h = [list(row) for row in a]
    u = identity(k)
    pivots = []
    c0 = 0
    for i in range(m):
        if c0 >= k:
            break
        piv = next((j for j in range(c0, k) if h[i][j]), None)
        if piv is None:
            continue
        if piv != c0:
            _col_swap(h, c0, piv)
            _col_swap(u, c0, piv)
        for j in range(c0 + 1, k):
            if h[i][j]:
                p, q = h[i][c0], h[i][j]
                g, x, y = xgcd(p, q)
                # unimodular 2x2 combination leaving gcd in column c0
                _col_combine(h, c0, j, x, y, -(q // g), p // g)
                _col_combine(u, c0, j, x, y, -(q // g), p // g)
        if h[i][c0] < 0:
            _col_negate(h, c0)
            _col_negate(u, c0)
        pivots.append((i, c0))
        c0 += 1

    y = [0] * k
    r = list(b)
    for (i, j) in pivots:
        if r[i] % h[i][j]:
            return None
        q = r[i] // h[i][j]
        y[j] = q
        if q:
            for ii in range(m):
                r[ii] -= q * h[ii][j]
    if any(r):
        return None
    return [sum(u[row][j] * y[j] for j in range(k)) for row in range(k)]


def _col_swap(mat, j1, j2):
    for row in mat:
        row[j1], row[j2] = row[j2], row[j1]


def _col_negate(mat, j):
    for row in mat:
        row[j] = -row[j]


def _col_combine(mat, j1, j2, a11, a21, a12, a22):
    # (col j1, col j2) <- (a11*col j1 + a21*col j2, a12*col j1 + a22*col j2)
    for row in mat:
        x, y = row[j1], row[j2]
        row[j1] = a11 * x + a21 * y
        row[j2] = a12 * x + a22 * y
