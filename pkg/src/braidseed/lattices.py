"""Exact integer linear algebra for small systems.

Solves A x = c over the integers via a column-echelon (Hermite-style)
reduction with unimodular column operations, and selects a canonical
smallest solution from the affine solution lattice.  Sizes here are tiny
(tens of unknowns), so clarity wins over asymptotics.
"""
from __future__ import annotations

from math import gcd
from typing import Sequence

from .errors import NoIntegralSolution


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_r, old_s, old_t


def column_echelon(rows: Sequence[Sequence[int]]) -> tuple[list, list, list]:
    """Unimodular column reduction A U = H.

    Returns (H, U, pivots) where H is in column echelon form, U is
    unimodular, and pivots lists (row, column) positions with positive
    pivot entries.  Columns of H beyond the last pivot are zero.
    """
    m = len(rows)
    n = len(rows[0]) if m else 0
    H = [[int(v) for v in row] for row in rows]
    U = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    pivots = []
    r = 0
    for i in range(m):
        piv = next((j for j in range(r, n) if H[i][j] != 0), None)
        if piv is None:
            continue
        if piv != r:
            for row in H:
                row[r], row[piv] = row[piv], row[r]
            for row in U:
                row[r], row[piv] = row[piv], row[r]
        for j in range(r + 1, n):
            if H[i][j] == 0:
                continue
            a, b = H[i][r], H[i][j]
            g, s, t = _xgcd(a, b)
            ag, bg = a // g, b // g
            for row in (*H, *U):
                x, y = row[r], row[j]
                row[r] = s * x + t * y
                row[j] = -bg * x + ag * y
        if H[i][r] < 0:
            for row in (*H, *U):
                row[r] = -row[r]
        pivots.append((i, r))
        r += 1
    return H, U, pivots


def solve_integer_system(
    rows: Sequence[Sequence[int]], rhs: Sequence[int]
) -> tuple[list, list]:
    """One integer solution of A x = c plus a kernel lattice basis.

    Raises NoIntegralSolution when the system has no integer solution.
    """
    m = len(rows)
    n = len(rows[0]) if m else 0
    if len(rhs) != m:
        raise NoIntegralSolution(f"rhs length {len(rhs)} != row count {m}")
    H, U, pivots = column_echelon(rows)
    y = [0] * n
    for i, c in pivots:
        residual = rhs[i] - sum(H[i][j] * y[j] for j in range(c))
        if residual % H[i][c] != 0:
            raise NoIntegralSolution(
                f"row {i}: residual {residual} not divisible by pivot {H[i][c]}"
            )
        y[c] = residual // H[i][c]
    for i in range(m):
        if sum(H[i][j] * y[j] for j in range(n)) != rhs[i]:
            raise NoIntegralSolution(f"row {i} is inconsistent")
    x = [sum(U[i][j] * y[j] for j in range(n)) for i in range(n)]
    rank = len(pivots)
    kernel = [[U[i][j] for i in range(n)] for j in range(rank, n)]
    return x, kernel


def _echelon_kernel(kernel: list, n: int) -> tuple[list, list]:
    """Echelonize the kernel basis along coordinate rows for bounded search."""
    if not kernel:
        return [], []
    cols = [list(v) for v in kernel]
    transposed = [[cols[j][i] for j in range(len(cols))] for i in range(n)]
    H, _, pivots = column_echelon(transposed)
    basis = [[H[i][c] for i in range(n)] for _, c in pivots]
    pivot_rows = [i for i, _ in pivots]
    return basis, pivot_rows


def _size_reduce(x: list, basis: list, pivot_rows: list) -> list:
    out = list(x)
    for vec, p in zip(basis, pivot_rows):
        step = vec[p]
        if step:
            q = round(out[p] / step)
            if q:
                out = [a - q * b for a, b in zip(out, vec)]
    return out


def canonical_smallest_solution(
    rows: Sequence[Sequence[int]], rhs: Sequence[int]
) -> list:
    """The canonical solution of A x = c.

    Among integer solutions, minimizes the multiset of absolute entries
    from the largest down, then the absolute entries in position order,
    then prefers nonnegative entries.  Found by iterative deepening on
    the max-norm over the echelonized kernel lattice, which makes the
    coefficient ranges finite at each radius.
    """
    x0, kernel = solve_integer_system(rows, rhs)
    n = len(x0)
    if not kernel:
        return x0
    basis, pivot_rows = _echelon_kernel(kernel, n)
    x0 = _size_reduce(x0, basis, pivot_rows)
    ceiling = max(abs(v) for v in x0) if x0 else 0

    def search(radius: int) -> list:
        found = []

        def dfs(depth: int, current: list) -> None:
            if depth == len(basis):
                if all(abs(v) <= radius for v in current):
                    found.append(list(current))
                return
            vec = basis[depth]
            p = pivot_rows[depth]
            step = vec[p]
            base = current[p]
            # integer coeff with |base + step*coeff| <= radius; step > 0,
            # and Python floor division handles negative numerators
            lo = -((radius + base) // step)
            hi = (radius - base) // step
            for coeff in range(lo, hi + 1):
                nxt = [a + coeff * b for a, b in zip(current, vec)]
                dfs(depth + 1, nxt)

        dfs(0, x0)
        return found

    radius = 0
    while True:
        candidates = search(radius)
        if candidates:
            break
        radius += 1
        if radius > ceiling:
            candidates = [x0]
            break

    def key(x: list):
        return (
            sorted((abs(v) for v in x), reverse=True),
            [abs(v) for v in x],
            [0 if v >= 0 else 1 for v in x],
        )

    return min(candidates, key=key)
