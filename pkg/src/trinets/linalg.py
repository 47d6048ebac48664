"""Exact linear algebra over F_p: elimination, rank, nullspace, inverse.

Matrices are lists of row lists of ints already reduced mod p. Everything
here is dense and small (at most 10 columns anywhere in the package), so
plain Gaussian elimination is the right tool.
"""

from __future__ import annotations


def rref(rows: list[list[int]], p: int) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form. Returns (rref rows, pivot column list)."""
    m = [row[:] for row in rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, nrows) if m[i][c] % p), None)
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        inv = pow(m[r][c], -1, p)
        m[r] = [(v * inv) % p for v in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] % p:
                f = m[i][c]
                m[i] = [(a - f * b) % p for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m, pivots


def rank(rows: list[list[int]], p: int) -> int:
    return len(rref(rows, p)[1])


def nullspace(rows: list[list[int]], p: int, ncols: int | None = None) -> list[list[int]]:
    """Basis of {v : rows @ v = 0}, one vector per free column."""
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    if not rows:
        return [[1 if i == j else 0 for i in range(ncols)] for j in range(ncols)]
    red, pivots = rref(rows, p)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * ncols
        v[fc] = 1
        for r, pc in enumerate(pivots):
            v[pc] = (-red[r][fc]) % p
        basis.append(v)
    return basis


def solve(rows: list[list[int]], rhs: list[int], p: int) -> list[int] | None:
    """One solution of rows @ x = rhs, or None if inconsistent."""
    ncols = len(rows[0]) if rows else 0
    aug = [row[:] + [b % p] for row, b in zip(rows, rhs)]
    red, pivots = rref(aug, p)
    if ncols in pivots:
        return None
    x = [0] * ncols
    for r, pc in enumerate(pivots):
        x[pc] = red[r][ncols]
    return x


def det3(m: list[list[int]] | tuple, p: int) -> int:
    a, b, c = m[0]
    d, e, f = m[1]
    g, h, i = m[2]
    return (a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)) % p


def inv3(m, p: int) -> list[list[int]]:
    """Inverse of a 3x3 matrix via the adjugate. Raises on det = 0."""
    d = det3(m, p)
    dinv = pow(d, -1, p)  # ValueError if d = 0
    a, b, c = m[0]
    e, f, g = m[1]
    h, i, j = m[2]
    adj = [
        [f * j - g * i, c * i - b * j, b * g - c * f],
        [g * h - e * j, a * j - c * h, c * e - a * g],
        [e * i - f * h, b * h - a * i, a * f - b * e],
    ]
    return [[(v * dinv) % p for v in row] for row in adj]


def mat_mul(a, b, p: int) -> list[list[int]]:
    return [
        [sum(a[i][k] * b[k][j] for k in range(3)) % p for j in range(3)]
        for i in range(3)
    ]


def mat_vec(m, v, p: int) -> tuple[int, int, int]:
    return tuple(sum(m[i][k] * v[k] for k in range(3)) % p for i in range(3))
