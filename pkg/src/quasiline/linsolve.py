"""Exact linear solving over a cyclotomic field.

Two independent routes: a sparse elimination with a Markowitz-style pivot
choice (what convolution inverses use, since their systems are nearly
triangular) and a dense fraction-free Bareiss elimination used as a
cross-check on small systems.
"""

from __future__ import annotations

import heapq
from typing import Sequence

from .cyclotomic import CycNum, CyclotomicField


class SingularSystem(ArithmeticError):
    pass


def solve_sparse(rows: Sequence[dict], rhs: Sequence[CycNum], ncols: int, F: CyclotomicField) -> list[CycNum]:
    """Solve the square-or-overdetermined system rows * x = rhs for the unique x.

    rows[r] maps column -> nonzero coefficient.  Raises SingularSystem when the
    solution is not unique or the system is inconsistent.
    """
    rows = [dict(r) for r in rows]
    rhs = list(rhs)
    col_rows: dict[int, set] = {}
    for r, row in enumerate(rows):
        for c in row:
            col_rows.setdefault(c, set()).add(r)
    alive = set(range(len(rows)))
    heap = [(len(row), r) for r, row in enumerate(rows)]
    heapq.heapify(heap)
    pivots: list[tuple[int, int]] = []  # (row, col)
    zero = F.zero

    while heap:
        size, r = heapq.heappop(heap)
        if r not in alive or size != len(rows[r]):
            continue
        row = rows[r]
        alive.discard(r)
        if not row:
            if rhs[r]:
                raise SingularSystem("inconsistent system")
            continue
        col = min(row, key=lambda c: len(col_rows[c]))
        piv_inv = row[col].inv()
        for c in row:
            col_rows[c].discard(r)
        # normalize pivot row
        if not row[col].is_one():
            for c in row:
                row[c] = row[c] * piv_inv
            rhs[r] = rhs[r] * piv_inv
        pivots.append((r, col))
        for r2 in list(col_rows[col]):
            row2 = rows[r2]
            factor = row2.pop(col)
            col_rows[col].discard(r2)
            for c, v in row.items():
                if c == col:
                    continue
                nv = row2.get(c, zero) - factor * v
                if nv:
                    if c not in row2:
                        col_rows[c].add(r2)
                    row2[c] = nv
                elif c in row2:
                    del row2[c]
                    col_rows[c].discard(r2)
            if rhs[r]:
                rhs[r2] = rhs[r2] - factor * rhs[r]
            heapq.heappush(heap, (len(row2), r2))
        del col_rows[col]

    if len(pivots) < ncols:
        raise SingularSystem(f"rank {len(pivots)} < {ncols} unknowns")
    x = [zero] * ncols
    for r, col in reversed(pivots):
        acc = rhs[r]
        for c, v in rows[r].items():
            if c != col:
                acc = acc - v * x[c]
        x[col] = acc
    return x


def solve_dense_bareiss(A: Sequence[Sequence[CycNum]], b: Sequence[CycNum], F: CyclotomicField) -> list[CycNum]:
    """Fraction-free Gaussian elimination (Bareiss) on a square system."""
    n = len(A)
    M = [list(A[i]) + [b[i]] for i in range(n)]
    prev = F.one
    perm_ok = True
    for k in range(n):
        p = next((i for i in range(k, n) if M[i][k]), None)
        if p is None:
            perm_ok = False
            break
        if p != k:
            M[k], M[p] = M[p], M[k]
        pk = M[k][k]
        for i in range(k + 1, n):
            mik = M[i][k]
            for j in range(k + 1, n + 1):
                M[i][j] = (pk * M[i][j] - mik * M[k][j]) / prev
            M[i][k] = F.zero
        prev = pk
    if not perm_ok:
        raise SingularSystem("singular matrix")
    x = [F.zero] * n
    for i in range(n - 1, -1, -1):
        acc = M[i][n]
        for j in range(i + 1, n):
            if M[i][j]:
                acc = acc - M[i][j] * x[j]
        x[i] = acc / M[i][i]
    return x
