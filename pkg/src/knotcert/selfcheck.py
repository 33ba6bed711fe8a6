"""Built-in cross-check suite, exposed through the CLI `selftest` subcommand.

Each check pits an independent route against the production pipeline:
closed forms vs determinants, recursion vs cofactor expansion, Bareiss vs
Laplace.  Runs everything for n up to MAX_N and reports per-check results.
"""

from __future__ import annotations

from .certify import primeness_certificate
from .laurent import LaurentPoly, doteq_equal, parse
from .polymatrix import PolyMatrix, alexander_matrix, det_cofactor
from .seifert import (
    FamilySpec,
    alexander,
    alpha_closed,
    alpha_recursive,
    build_family,
    family_blocks,
    reciprocal_factor,
)

MAX_N = 8
COFACTOR_N = 5


def _tA_minus_BT(n: int, kind: str = "C") -> PolyMatrix:
    a, b = family_blocks(FamilySpec(kind, n))
    rows = [
        [
            LaurentPoly.from_terms({1: a[i][j], 0: -b[j][i]})
            for j in range(n)
        ]
        for i in range(n)
    ]
    return PolyMatrix.from_rows(rows)


def run_checks() -> list[tuple[str, bool]]:
    """Return (name, passed) for every cross-check."""
    results: list[tuple[str, bool]] = []
    template_c = parse("2*t - 5 + 2*t^-1")
    template_e = parse("6*t - 13 + 6*t^-1")

    for n in range(1, MAX_N + 1):
        res = alexander(build_family(FamilySpec("C", n)))
        results.append(
            (
                f"closed form C, n={n}",
                res.symmetric == template_c.substitute_power(n) and res.d == n,
            )
        )
        res_e = alexander(build_family(FamilySpec("E", n)))
        results.append(
            (
                f"closed form E, n={n}",
                res_e.symmetric == template_e.substitute_power(n) and res_e.d == n,
            )
        )
        results.append(
            (
                f"factor identity C, n={n}",
                doteq_equal(res.raw, alpha_closed(n) * reciprocal_factor(n))
                is not None,
            )
        )
        results.append(
            (f"recursion alpha, n={n}", alpha_recursive(n) == alpha_closed(n))
        )

    for n in range(1, COFACTOR_N + 1):
        results.append(
            (
                f"cofactor oracle alpha, n={n}",
                det_cofactor(_tA_minus_BT(n)) == alpha_closed(n),
            )
        )
        if 2 * n <= 8:  # cofactor expansion is capped at 8x8
            m = alexander_matrix(build_family(FamilySpec("C", n)).entries)
            results.append(
                (
                    f"bareiss vs cofactor, C, n={n}",
                    det_cofactor(m)
                    == alexander(build_family(FamilySpec("C", n))).raw,
                )
            )

    for kind in ("C", "E"):
        for n in range(1, MAX_N + 1):
            cert = primeness_certificate(FamilySpec(kind, n))
            results.append((f"primeness {kind}, n={n}", cert.verdict == "Prime"))

    return results
