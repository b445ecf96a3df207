"""Exact sparse rank computation and small dense rational solves.

Ranks over the rationals are computed by integer-preserving elimination:
rows are scaled by the pivot value instead of divided (rank is invariant
under nonzero row scaling), each row is reduced by its gcd to contain
entry growth, and pivots prefer entries of magnitude 1 with low Markowitz
fill.  Boundary matrices of simplicial complexes are sparse with entries
in {-1, 0, 1}, which this is tuned for.

A prime-field variant does the same elimination modulo a fixed prime
p = 2^31 - 1; it is faster but only a lower-bound certificate for the
rational rank (equal except on torsion, which callers cross-check).
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from math import gcd
from typing import Optional, Sequence

from .search import Budget, BudgetClock, as_clock

__all__ = ["FIELD_PRIME", "rank_exact", "rank_mod_prime", "solve_exact"]

FIELD_PRIME = 2_147_483_647  # 2^31 - 1


class RankBudgetExceeded(RuntimeError):
    """Raised when a rank computation runs out of budget."""


def _rank_sparse(
    rows: list[dict[int, int]],
    clock: Optional[BudgetClock],
    prime: Optional[int],
) -> int:
    rows = [dict(r) for r in rows if r]
    if prime is not None:
        for r in rows:
            for c in list(r):
                v = r[c] % prime
                if v:
                    r[c] = v
                else:
                    del r[c]
        rows = [r for r in rows if r]

    col_rows: dict[int, set[int]] = {}
    for i, r in enumerate(rows):
        for c in r:
            col_rows.setdefault(c, set()).add(i)

    # Markowitz-flavoured pivoting on a lazy heap: pop the currently
    # shortest row, pick its entry in the thinnest column, preferring
    # magnitude-1 values (those keep the exact path division-free).
    heap = [(len(r), i) for i, r in enumerate(rows)]
    heapq.heapify(heap)
    active = set(range(len(rows)))
    rank = 0
    while heap:
        rlen, pi = heapq.heappop(heap)
        if pi not in active:
            continue
        prow = rows[pi]
        if not prow:
            active.discard(pi)
            continue
        if rlen != len(prow):
            heapq.heappush(heap, (len(prow), pi))
            continue
        if clock is not None and not clock.spend():
            raise RankBudgetExceeded(
                f"rank computation exhausted its budget after {rank} pivots"
            )
        pc = min(
            prow,
            key=lambda c: (0 if prow[c] in (1, -1) else 1, len(col_rows[c]), c),
        )
        pval = prow[pc]
        rank += 1
        active.discard(pi)
        for c in prow:
            col_rows[c].discard(pi)
        targets = [i for i in col_rows.get(pc, ()) if i in active]
        for i in targets:
            row = rows[i]
            factor = row[pc]
            if prime is not None:
                inv = pow(pval, prime - 2, prime)
                scale = factor * inv % prime
                _axpy_mod(row, prow, scale, prime, i, col_rows)
            elif pval == 1:
                _axpy(row, prow, -factor, i, col_rows)
            elif pval == -1:
                _axpy(row, prow, factor, i, col_rows)
            else:
                _scale(row, pval, i, col_rows)
                _axpy(row, prow, -factor, i, col_rows)
                _reduce_gcd(row)
            heapq.heappush(heap, (len(row), i))
    return rank


def _axpy(row: dict[int, int], src: dict[int, int], scale: int, i, col_rows) -> None:
    # row += scale * src, maintaining the column index.
    for c, v in src.items():
        new = row.get(c, 0) + scale * v
        if new:
            if c not in row:
                col_rows.setdefault(c, set()).add(i)
            row[c] = new
        elif c in row:
            del row[c]
            col_rows[c].discard(i)


def _axpy_mod(row, src, scale, prime, i, col_rows) -> None:
    for c, v in src.items():
        new = (row.get(c, 0) - scale * v) % prime
        if new:
            if c not in row:
                col_rows.setdefault(c, set()).add(i)
            row[c] = new
        elif c in row:
            del row[c]
            col_rows[c].discard(i)


def _scale(row: dict[int, int], factor: int, i, col_rows) -> None:
    for c in row:
        row[c] *= factor


def _reduce_gcd(row: dict[int, int]) -> None:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return
    if g > 1:
        for c in row:
            row[c] //= g


def rank_exact(
    rows: Sequence[dict[int, int]], budget: Budget = None
) -> int:
    """Rank over the rationals of a sparse integer matrix given as row dicts."""
    clock = as_clock(budget) if budget is not None else None
    return _rank_sparse(list(rows), clock, prime=None)


def rank_mod_prime(
    rows: Sequence[dict[int, int]],
    budget: Budget = None,
    prime: int = FIELD_PRIME,
) -> int:
    """Rank over the prime field GF(prime); fast, flagged non-exact upstream."""
    clock = as_clock(budget) if budget is not None else None
    return _rank_sparse(list(rows), clock, prime=prime)


def solve_exact(
    matrix: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]
) -> Optional[list[Fraction]]:
    """Solve a small dense square rational system; None when singular."""
    n = len(matrix)
    aug = [list(row) + [rhs[i]] for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            return None
        aug[col], aug[pivot] = aug[pivot], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [aug[i][n] for i in range(n)]
