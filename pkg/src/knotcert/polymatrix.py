"""Exact determinants of matrices with Laurent-polynomial entries.

Two independent algorithms are provided on purpose: Laplace (cofactor)
expansion as a small-size oracle, and fraction-free Bareiss elimination as
the production path.  They must agree bit-exactly wherever both run.
"""

from __future__ import annotations

import dataclasses
from typing import Sequence

from .errors import DimensionMismatch, DimensionTooLarge
from .laurent import LaurentPoly, Unit, divexact

COFACTOR_CAP = 8

IntMatrix = list[list[int]]


@dataclasses.dataclass(frozen=True)
class PolyMatrix:
    """Square matrix of LaurentPoly entries."""

    n: int
    entries: tuple[tuple[LaurentPoly, ...], ...]

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[LaurentPoly]]) -> "PolyMatrix":
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise DimensionMismatch("matrix is not square")
        return cls(n, tuple(tuple(r) for r in rows))

    @classmethod
    def from_int_rows(cls, rows: Sequence[Sequence[int]]) -> "PolyMatrix":
        return cls.from_rows(
            [[LaurentPoly.const(c) for c in row] for row in rows]
        )

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix(
            self.n,
            tuple(
                tuple(self.entries[j][i] for j in range(self.n))
                for i in range(self.n)
            ),
        )

    def map_entries(self, f) -> "PolyMatrix":
        return PolyMatrix(
            self.n, tuple(tuple(f(e) for e in row) for row in self.entries)
        )


def det_cofactor(m: PolyMatrix) -> LaurentPoly:
    """Laplace expansion along the first row.  Oracle only: n <= 8."""
    if m.n > COFACTOR_CAP:
        raise DimensionTooLarge(
            f"cofactor expansion capped at {COFACTOR_CAP}x{COFACTOR_CAP}, got {m.n}"
        )
    return _cofactor(m.entries)


def _cofactor(rows: tuple[tuple[LaurentPoly, ...], ...]) -> LaurentPoly:
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = LaurentPoly.zero()
    for j, head in enumerate(rows[0]):
        if head.is_zero():
            continue
        minor = tuple(
            tuple(row[k] for k in range(n) if k != j) for row in rows[1:]
        )
        term = head * _cofactor(minor)
        total = total + (term if j % 2 == 0 else -term)
    return total


def det_bareiss(m: PolyMatrix) -> LaurentPoly:
    """Fraction-free determinant; every intermediate division is exact.

    Laurent entries are shifted to ordinary polynomials by factoring the
    minimal power of t out of each row; the aggregate unit is reapplied at
    the end.  Pivoting takes the first nonzero entry in column order.
    """
    n = m.n
    shift_total = 0
    rows: list[list[LaurentPoly]] = []
    for row in m.entries:
        exps = [e.min_exp for e in row if not e.is_zero()]
        if not exps:
            return LaurentPoly.zero()
        s = min(exps)
        shift_total += s
        rows.append([Unit(1, -s).apply(e) for e in row])

    sign = 1
    prev = LaurentPoly.one()
    for k in range(n - 1):
        pivot_row = k
        while rows[pivot_row][k].is_zero():
            pivot_row += 1
            if pivot_row == n:
                return LaurentPoly.zero()
        if pivot_row != k:
            rows[k], rows[pivot_row] = rows[pivot_row], rows[k]
            sign = -sign
        pivot = rows[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = pivot * rows[i][j] - rows[i][k] * rows[k][j]
                rows[i][j] = divexact(num, prev)
            rows[i][k] = LaurentPoly.zero()
        prev = pivot
    result = Unit(sign, shift_total).apply(rows[n - 1][n - 1])
    return result


def alexander_matrix(s: Sequence[Sequence[int]]) -> PolyMatrix:
    """Entry (i, j) = t*S[i][j] - S[j][i], from a square integer matrix."""
    n = len(s)
    if any(len(row) != n for row in s):
        raise DimensionMismatch("Seifert matrix is not square")
    rows = [
        [
            LaurentPoly.from_terms({1: s[i][j], 0: -s[j][i]})
            for j in range(n)
        ]
        for i in range(n)
    ]
    return PolyMatrix.from_rows(rows)


def block_compose(
    topleft: IntMatrix,
    topright: IntMatrix,
    bottomleft: IntMatrix,
    bottomright: IntMatrix,
) -> IntMatrix:
    """Assemble [[TL, TR], [BL, BR]] from four n x n integer blocks."""
    n = len(topleft)
    for block in (topleft, topright, bottomleft, bottomright):
        if len(block) != n or any(len(row) != n for row in block):
            raise DimensionMismatch("all four blocks must be n x n")
    out: IntMatrix = []
    for i in range(n):
        out.append(list(topleft[i]) + list(topright[i]))
    for i in range(n):
        out.append(list(bottomleft[i]) + list(bottomright[i]))
    return out


def int_det(s: Sequence[Sequence[int]]) -> int:
    """Exact determinant of an integer matrix, via the Bareiss path."""
    d = det_bareiss(PolyMatrix.from_int_rows(s))
    return d.coefficient(0)
