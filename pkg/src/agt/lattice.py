"""Exact integer lattice algorithms: Hermite and Smith normal forms.

Matrices are lists of rows of Python ints; a lattice is the row span.
"""

from __future__ import annotations

from typing import Sequence

Matrix = list[list[int]]


def _copy(matrix: Sequence[Sequence[int]]) -> Matrix:
    return [[int(x) for x in row] for row in matrix]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def hnf(matrix: Sequence[Sequence[int]]) -> Matrix:
    """Row-style Hermite normal form of the row lattice.

    The result is in echelon form with strictly increasing pivot columns,
    positive pivots, entries above each pivot reduced into ``[0, pivot)``,
    and zero rows dropped.  Two matrices span the same lattice iff their
    HNFs are equal.
    """
    rows = [r for r in _copy(matrix) if any(r)]
    if not rows:
        return []
    ncols = len(rows[0])
    pr = 0
    for col in range(ncols):
        if pr == len(rows):
            break
        while True:
            live = [i for i in range(pr, len(rows)) if rows[i][col] != 0]
            if not live:
                break
            best = min(live, key=lambda i: abs(rows[i][col]))
            rows[pr], rows[best] = rows[best], rows[pr]
            piv = rows[pr]
            clean = True
            for i in range(pr + 1, len(rows)):
                if rows[i][col]:
                    q = rows[i][col] // piv[col]
                    rows[i] = [a - q * b for a, b in zip(rows[i], piv)]
                    if rows[i][col]:
                        clean = False
            if clean:
                break
        if pr < len(rows) and rows[pr][col] != 0:
            if rows[pr][col] < 0:
                rows[pr] = [-a for a in rows[pr]]
            piv = rows[pr]
            for i in range(pr):
                q = rows[i][col] // piv[col]
                if q:
                    rows[i] = [a - q * b for a, b in zip(rows[i], piv)]
            pr += 1
            rows = rows[:pr] + [r for r in rows[pr:] if any(r)]
    return rows[:pr]


def pivots(echelon: Sequence[Sequence[int]]) -> list[int]:
    """Pivot column of each row of an echelon matrix."""
    out = []
    for row in echelon:
        out.append(next(j for j, a in enumerate(row) if a))
    return out


def solve_echelon(echelon: Sequence[Sequence[int]], vector: Sequence[int]) -> list[int] | None:
    """Integer coefficients ``c`` with ``c @ echelon == vector``, or None."""
    rest = [int(x) for x in vector]
    coeffs = []
    for row, j in zip(echelon, pivots(echelon)):
        if any(rest[:j]):
            return None
        q, r = divmod(rest[j], row[j])
        if r:
            return None
        coeffs.append(q)
        if q:
            rest = [a - q * b for a, b in zip(rest, row)]
    if any(rest):
        return None
    return coeffs


def in_lattice(echelon: Sequence[Sequence[int]], vector: Sequence[int]) -> bool:
    return solve_echelon(echelon, vector) is not None


def snf_decomposition(matrix: Sequence[Sequence[int]], track: bool = True):
    """Smith decomposition ``U @ A @ V == D`` over the integers.

    Returns ``(D, U, V, V_inv)`` with ``U`` and ``V`` unimodular and the
    diagonal of ``D`` non-negative with each entry dividing the next.  With
    ``track=False`` the transforms are skipped and returned as empty lists.
    """
    a = _copy(matrix)
    m = len(a)
    n = len(a[0]) if m else 0
    u = identity(m) if track else []
    v = identity(n) if track else []
    vinv = identity(n) if track else []

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        if track:
            u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        if track:
            for row in v:
                row[i], row[j] = row[j], row[i]
            vinv[i], vinv[j] = vinv[j], vinv[i]

    def add_row(dst, src, q):
        # row_dst -= q * row_src
        a[dst] = [x - q * y for x, y in zip(a[dst], a[src])]
        if track:
            u[dst] = [x - q * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, q):
        # col_dst -= q * col_src; inverse acts on rows of vinv
        for row in a:
            row[dst] -= q * row[src]
        if track:
            for row in v:
                row[dst] -= q * row[src]
            vinv[src] = [x + q * y for x, y in zip(vinv[src], vinv[dst])]

    for t in range(min(m, n)):
        while True:
            entries = [(abs(a[i][j]), i, j) for i in range(t, m) for j in range(t, n) if a[i][j]]
            if not entries:
                break
            _, i, j = min(entries)
            if i != t:
                swap_rows(t, i)
            if j != t:
                swap_cols(t, j)
            done = True
            for i in range(t + 1, m):
                if a[i][t]:
                    add_row(i, t, a[i][t] // a[t][t])
                    if a[i][t]:
                        done = False
            for j in range(t + 1, n):
                if a[t][j]:
                    add_col(j, t, a[t][j] // a[t][t])
                    if a[t][j]:
                        done = False
            if not done:
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if a[i][j] % a[t][t]),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, -1)
        if t < m and t < n and a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            if track:
                u[t] = [-x for x in u[t]]
    return a, u, v, vinv


def snf(matrix: Sequence[Sequence[int]]) -> tuple[Matrix, list[int]]:
    """Smith normal form and the list of its nonzero invariant factors."""
    if not matrix:
        return [], []
    d = snf_decomposition(matrix, track=False)[0]
    factors = [d[i][i] for i in range(min(len(d), len(d[0]))) if d[i][i]]
    return d, factors


def matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> Matrix:
    cols = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in cols] for row in a]


def det_echelon(echelon: Sequence[Sequence[int]]) -> int:
    """Determinant of a square echelon matrix (product of pivots)."""
    out = 1
    for i, row in enumerate(echelon):
        out *= row[i]
    return out
