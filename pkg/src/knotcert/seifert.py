"""Seifert-matrix families and the Alexander polynomial pipeline.

Builds the two doubly-indexed knot families (kind C and kind E) from their
linking rules, validates user-supplied Seifert matrices, and symmetrizes
det(tS - S^T).  The twist parameter m never enters the Seifert pairing, so
it does not appear here; the CLI carries it as a label only.
"""

from __future__ import annotations

import dataclasses
import json
from typing import Sequence

from .errors import (
    IndexOutOfRange,
    NotUnimodularIntersection,
    OddDimension,
    ParseError,
)
from .laurent import LaurentPoly, Unit
from .polymatrix import (
    alexander_matrix,
    block_compose,
    det_bareiss,
    int_det,
)

FAMILY_KINDS = ("C", "E")


@dataclasses.dataclass(frozen=True)
class FamilySpec:
    """Selects one knot family member: kind in {C, E}, covering degree n."""

    kind: str
    n: int

    def __post_init__(self) -> None:
        if self.kind not in FAMILY_KINDS:
            raise ValueError(f"kind must be one of {FAMILY_KINDS}")
        if self.n < 1:
            raise ValueError("n must be >= 1")


@dataclasses.dataclass(frozen=True)
class SeifertMatrix:
    """2g x 2g integer matrix with det(S - S^T) = +-1."""

    g: int
    entries: tuple[tuple[int, ...], ...]

    @classmethod
    def from_entries(cls, rows: Sequence[Sequence[int]]) -> "SeifertMatrix":
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise ParseError("Seifert matrix must be square and nonempty")
        if n % 2 != 0:
            raise OddDimension(f"Seifert matrix dimension {n} is odd")
        entries = tuple(tuple(int(c) for c in r) for r in rows)
        inter = [
            [entries[i][j] - entries[j][i] for j in range(n)] for i in range(n)
        ]
        d = int_det(inter)
        if d not in (1, -1):
            raise NotUnimodularIntersection(
                f"det(S - S^T) = {d}, expected +-1"
            )
        return cls(n // 2, entries)


@dataclasses.dataclass(frozen=True)
class AlexanderResult:
    """Raw and symmetrized Alexander polynomial of one Seifert matrix."""

    raw: LaurentPoly
    symmetric: LaurentPoly
    unit: Unit  # symmetric = unit * raw
    d: int  # top degree of symmetric
    genus_upper: int  # g of the input matrix

    def to_dict(self) -> dict:
        return {
            "raw": str(self.raw),
            "delta": str(self.symmetric),
            "unit": str(self.unit),
            "d": self.d,
            "genus_upper": self.genus_upper,
        }


def linking_value(row_class: str, i: int, col_class: str, j: int, n: int) -> int:
    """Linking number of the i-th pushed-off generator with the j-th one.

    Classes are 'lambda' and 'mu'; indices run 1..n.  lambda/lambda and
    mu/mu pairs do not link; the mixed pairs give 1 or 2 depending on the
    index order.
    """
    if not (1 <= i <= n and 1 <= j <= n):
        raise IndexOutOfRange(f"indices ({i}, {j}) outside 1..{n}")
    if row_class not in ("lambda", "mu") or col_class not in ("lambda", "mu"):
        raise ValueError("generator class must be 'lambda' or 'mu'")
    if row_class == col_class:
        return 0
    if row_class == "lambda":
        return 2 if i <= j else 1
    return 1 if i <= j else 2


def family_blocks(spec: FamilySpec) -> tuple[list[list[int]], list[list[int]]]:
    """The two nonzero n x n blocks (A, B) of the family Seifert matrix."""
    n = spec.n
    if spec.kind == "C":
        a = [[2 if j >= i else 1 for j in range(n)] for i in range(n)]
        b = [[1 if j >= i else 2 for j in range(n)] for i in range(n)]
    else:
        a = [[-2 if j >= i else -3 for j in range(n)] for i in range(n)]
        b = [[-3 if j >= i else -2 for j in range(n)] for i in range(n)]
    return a, b


def build_family(spec: FamilySpec) -> SeifertMatrix:
    """Seifert matrix [[O, A], [B, O]] for the requested family member."""
    n = spec.n
    a, b = family_blocks(spec)
    zero = [[0] * n for _ in range(n)]
    return SeifertMatrix.from_entries(block_compose(zero, a, b, zero))


def alexander(s: SeifertMatrix) -> AlexanderResult:
    """det(tS - S^T), symmetrized, with its top degree and genus bound."""
    raw = det_bareiss(alexander_matrix(s.entries))
    symmetric, unit = raw.symmetrize()
    return AlexanderResult(
        raw=raw,
        symmetric=symmetric,
        unit=unit,
        d=symmetric.top_degree(),
        genus_upper=s.g,
    )


# -- recursion cross-checks ---------------------------------------------

def beta(k: int) -> LaurentPoly:
    """2t^(k-1)(t-1), the minor appearing in the row-expansion recursion."""
    if k < 2:
        raise IndexOutOfRange("beta is defined for k >= 2")
    return LaurentPoly.from_terms({k: 2, k - 1: -2})


def alpha_closed(n: int) -> LaurentPoly:
    """2t^n - 1."""
    if n < 1:
        raise IndexOutOfRange("alpha requires n >= 1")
    return LaurentPoly.from_terms({n: 2, 0: -1})


def alpha_recursive(n: int) -> LaurentPoly:
    """det(tA_n - B_n^T) by the expansion recursion a_k = a_{k-1} + t*beta(k-1).

    Bases: the 1x1 determinant 2t - 1, and the expanded 2x2 determinant
    (2t-1)^2 - (2t-2)(t-1).
    """
    if n < 1:
        raise IndexOutOfRange("alpha requires n >= 1")
    if n == 1:
        return LaurentPoly.from_terms({1: 2, 0: -1})
    two_t_minus_1 = LaurentPoly.from_terms({1: 2, 0: -1})
    two_t_minus_2 = LaurentPoly.from_terms({1: 2, 0: -2})
    t_minus_1 = LaurentPoly.from_terms({1: 1, 0: -1})
    acc = two_t_minus_1 * two_t_minus_1 - two_t_minus_2 * t_minus_1
    t = LaurentPoly.term(1, 1)
    for k in range(3, n + 1):
        acc = acc + t * beta(k - 1)
    return acc


def reciprocal_factor(n: int) -> LaurentPoly:
    """det(A_n - tB_n^T) = 2 - t^n, exactly.

    The substitution identity gives t^n * alpha_n(1/t) = t^n (2t^-n - 1)
    = 2 - t^n; the cofactor oracle confirms the sign for every n <= 5.
    """
    if n < 1:
        raise IndexOutOfRange("reciprocal_factor requires n >= 1")
    return LaurentPoly.from_terms({0: 2, n: -1})


# -- file ingestion -------------------------------------------------------

def load_matrix(path: str) -> SeifertMatrix:
    """Read a Seifert matrix from a JSON file: {"size": N, "entries": [[...]]}."""
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read matrix file {path}: {exc}") from exc
    if not isinstance(doc, dict) or "size" not in doc or "entries" not in doc:
        raise ParseError("matrix file must be an object with 'size' and 'entries'")
    size = doc["size"]
    entries = doc["entries"]
    if not isinstance(size, int) or isinstance(size, bool) or size < 1:
        raise ParseError("'size' must be a positive integer")
    if not isinstance(entries, list) or len(entries) != size:
        raise ParseError(f"'entries' must be a list of {size} rows")
    for row in entries:
        if not isinstance(row, list) or len(row) != size:
            raise ParseError(f"every row must have exactly {size} entries")
        for c in row:
            if not isinstance(c, int) or isinstance(c, bool):
                raise ParseError(f"non-integer matrix entry {c!r}")
    if size % 2 != 0:
        raise OddDimension(f"Seifert matrix dimension {size} is odd")
    return SeifertMatrix.from_entries(entries)
