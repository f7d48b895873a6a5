"""Exact integer and rational linear algebra: Bareiss rank and Smith form.

Matrices are plain lists of lists.  The Smith normal form tracks the four
transformation matrices U, V, U^-1, V^-1 so that U*A*V = D and
A = Uinv*D*Vinv hold exactly over Z.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def identity(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a, b):
    rows, inner, cols = len(a), len(b), len(b[0]) if b else 0
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
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def integer_rank(matrix) -> int:
    """Rank via fraction-free Bareiss elimination."""
    m = [list(row) for row in matrix]
    rows, cols = len(m), len(m[0]) if m else 0
    rank = 0
    prev = 1
    for col in range(cols):
        pivot_row = None
        for r in range(rank, rows):
            if m[r][col]:
                if pivot_row is None or abs(m[r][col]) < abs(m[pivot_row][col]):
                    pivot_row = r
        if pivot_row is None:
            continue
        m[rank], m[pivot_row] = m[pivot_row], m[rank]
        pivot = m[rank][col]
        top = m[rank]
        for r in range(rank + 1, rows):
            factor = m[r][col]
            row = m[r]
            for j in range(col, cols):
                row[j] = (row[j] * pivot - factor * top[j]) // prev
        prev = pivot
        rank += 1
        if rank == min(rows, cols):
            break
    return rank


def rational_rank(matrix) -> int:
    """Rank of a matrix of Fractions, by clearing denominators per row."""
    cleared = []
    for row in matrix:
        denom_lcm = 1
        for x in row:
            q = Fraction(x)
            denom_lcm = denom_lcm * q.denominator // gcd(denom_lcm, q.denominator)
        cleared.append([int(Fraction(x) * denom_lcm) for x in row])
    return integer_rank(cleared)


def smith_normal_form(matrix):
    """Integer Smith normal form with full transform bookkeeping.

    Returns (D, U, V, Uinv, Vinv) with U*A*V = D, A = Uinv*D*Vinv, D diagonal
    with nonnegative entries forming a divisibility chain.
    """
    m = [list(row) for row in matrix]
    rows = len(m)
    cols = len(m[0]) if m else 0
    u, uinv = identity(rows), identity(rows)
    v, vinv = identity(cols), identity(cols)

    def row_add(dst, src, k):
        # row_dst += k * row_src
        for j in range(cols):
            m[dst][j] += k * m[src][j]
        for j in range(rows):
            u[dst][j] += k * u[src][j]
        for i in range(rows):
            uinv[i][src] -= k * uinv[i][dst]

    def row_swap(i, j):
        m[i], m[j] = m[j], m[i]
        u[i], u[j] = u[j], u[i]
        for r in range(rows):
            uinv[r][i], uinv[r][j] = uinv[r][j], uinv[r][i]

    def row_negate(i):
        for j in range(cols):
            m[i][j] = -m[i][j]
        for j in range(rows):
            u[i][j] = -u[i][j]
        for r in range(rows):
            uinv[r][i] = -uinv[r][i]

    def col_add(dst, src, k):
        # col_dst += k * col_src
        for i in range(rows):
            m[i][dst] += k * m[i][src]
        for i in range(cols):
            v[i][dst] += k * v[i][src]
        for j in range(cols):
            vinv[src][j] -= k * vinv[dst][j]

    def col_swap(i, j):
        for r in range(rows):
            m[r][i], m[r][j] = m[r][j], m[r][i]
        for r in range(cols):
            v[r][i], v[r][j] = v[r][j], v[r][i]
        vinv[i], vinv[j] = vinv[j], vinv[i]

    def find_pivot(s):
        best = None
        for i in range(s, rows):
            for j in range(s, cols):
                if m[i][j] and (best is None or abs(m[i][j]) < abs(m[best[0]][best[1]])):
                    best = (i, j)
        return best

    s = 0
    while s < min(rows, cols):
        pos = find_pivot(s)
        if pos is None:
            break
        if pos[0] != s:
            row_swap(s, pos[0])
        if pos[1] != s:
            col_swap(s, pos[1])
        if m[s][s] < 0:
            row_negate(s)
        # clear the edging below and to the right of the pivot
        dirty = True
        while dirty:
            dirty = False
            for i in range(s + 1, rows):
                if m[i][s]:
                    q = m[i][s] // m[s][s]
                    row_add(i, s, -q)
                    if m[i][s]:
                        row_swap(s, i)
                        if m[s][s] < 0:
                            row_negate(s)
                        dirty = True
            for j in range(s + 1, cols):
                if m[s][j]:
                    q = m[s][j] // m[s][s]
                    col_add(j, s, -q)
                    if m[s][j]:
                        col_swap(s, j)
                        dirty = True
        # force divisibility of the remaining block by the pivot
        fixed = False
        for i in range(s + 1, rows):
            for j in range(s + 1, cols):
                if m[i][j] % m[s][s]:
                    row_add(s, i, 1)
                    fixed = True
                    break
            if fixed:
                break
        if fixed:
            continue
        s += 1

    return m, u, v, uinv, vinv


def smith_diagonal(matrix) -> list[int]:
    d, *_ = smith_normal_form(matrix)
    return [d[i][i] for i in range(min(len(d), len(d[0]) if d else 0)) if d[i][i]]
