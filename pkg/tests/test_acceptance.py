"""Acceptance suite: one test per criterion, exact tolerances throughout.

Every assertion is bit-exact integer arithmetic; there are no floating
point tolerances anywhere.  Each test prints a pass line so a -s run
reads as a checklist.
"""

import random
import time

import pytest

from knotcert.certify import (
    a_irreducible,
    is_admissible_alexander,
    primeness_certificate,
    verify_witness,
)
from knotcert.errors import NotSymmetrizable, NoWitnessFound, UnsupportedShape
from knotcert.laurent import LaurentPoly, doteq_equal, parse
from knotcert.polymatrix import PolyMatrix, det_bareiss, det_cofactor
from knotcert.seifert import (
    FamilySpec,
    alexander,
    alpha_closed,
    alpha_recursive,
    build_family,
    family_blocks,
    reciprocal_factor,
)

P = LaurentPoly.from_terms


def test_criterion_1_closed_form_family_c():
    start = time.monotonic()
    template = parse("2*t - 5 + 2*t^-1")
    for n in range(1, 9):
        res = alexander(build_family(FamilySpec("C", n)))
        assert res.symmetric == template.substitute_power(n)
    assert time.monotonic() - start < 1.0
    print("PASS criterion 1: family C closed form, n = 1..8, exact")


def test_criterion_2_closed_form_family_e():
    start = time.monotonic()
    template = parse("6*t - 13 + 6*t^-1")
    for n in range(1, 9):
        res = alexander(build_family(FamilySpec("E", n)))
        assert res.symmetric == template.substitute_power(n)
    assert time.monotonic() - start < 1.0
    print("PASS criterion 2: family E closed form, n = 1..8, exact")


def test_criterion_3_recursion_identity():
    start = time.monotonic()
    for n in range(1, 13):
        assert alpha_recursive(n) == alpha_closed(n) == P({n: 2, 0: -1})
    for n in range(1, 6):
        a, b = family_blocks(FamilySpec("C", n))
        m = PolyMatrix.from_rows(
            [[P({1: a[i][j], 0: -b[j][i]}) for j in range(n)] for i in range(n)]
        )
        assert det_cofactor(m) == alpha_closed(n)
    assert time.monotonic() - start < 1.0
    print("PASS criterion 3: recursion = closed form = cofactor determinant")


def test_criterion_4_factor_identity():
    start = time.monotonic()
    for n in range(1, 9):
        raw = alexander(build_family(FamilySpec("C", n))).raw
        assert doteq_equal(raw, alpha_closed(n) * reciprocal_factor(n)) is not None
    assert time.monotonic() - start < 1.0
    print("PASS criterion 4: raw delta = (2t^n - 1) * (-1)^n (2 - t^n) up to units")


def test_criterion_5_determinant_oracle_equivalence():
    start = time.monotonic()
    rng = random.Random(0xA1E)
    for _ in range(500):
        n = rng.randint(1, 5)
        rows = []
        for _ in range(n):
            row = []
            for _ in range(n):
                lo = rng.randint(-1, 1)
                span = rng.randint(1, 3)  # entry degree <= 2
                row.append(LaurentPoly(lo, [rng.randint(-5, 5) for _ in range(span)]))
            rows.append(row)
        m = PolyMatrix.from_rows(rows)
        assert det_bareiss(m) == det_cofactor(m)
    elapsed = time.monotonic() - start
    assert elapsed < 30.0
    print(f"PASS criterion 5: Bareiss = cofactor on 500 random matrices ({elapsed:.2f}s)")


def test_criterion_6_genus_degree():
    for kind in ("C", "E"):
        for n in range(1, 9):
            res = alexander(build_family(FamilySpec(kind, n)))
            assert res.d == n == res.genus_upper
    print("PASS criterion 6: d = n = matrix genus for both families, n = 1..8")


def test_criterion_7_primeness_certificates():
    start = time.monotonic()
    for kind in ("C", "E"):
        for n in range(1, 9):
            cert = primeness_certificate(FamilySpec(kind, n))
            assert cert.verdict == "Prime"
            assert cert.factorization.reconstructs()
            for f, w in cert.factorization.factors:
                assert verify_witness(f, w)
            for split in cert.rejected_splits:
                assert split.rejected
                assert is_admissible_alexander(split.left) == split.left_verdict
                assert is_admissible_alexander(split.right) == split.right_verdict
    assert time.monotonic() - start < 5.0
    print("PASS criterion 7: Prime verdicts with internally consistent certificates")


def test_criterion_8_admissibility():
    for kind, a, b in (("C", 2, -5), ("E", 6, -13)):
        for n in range(1, 9):
            res = alexander(build_family(FamilySpec(kind, n)))
            assert res.symmetric.eval_at_one() == -1
            assert res.symmetric.reciprocal() == res.symmetric
            assert res.symmetric == P({n: a, 0: b, -n: a})
    for n in range(1, 9):
        with pytest.raises(NotSymmetrizable):
            alpha_closed(n).symmetrize()
        product = alpha_closed(n) * reciprocal_factor(n)
        sym, _ = product.symmetrize()
        assert sym.reciprocal() == sym
    print("PASS criterion 8: eval(1) = -1, palindromicity, symmetrize behavior")


def test_criterion_9_degree_additivity():
    rng = random.Random(9)
    for _ in range(1000):
        p = LaurentPoly(
            rng.randint(-6, 6),
            [rng.randint(-9, 9) for _ in range(rng.randint(1, 7))],
        )
        q = LaurentPoly(
            rng.randint(-6, 6),
            [rng.randint(-9, 9) for _ in range(rng.randint(1, 7))],
        )
        if p.is_zero() or q.is_zero():
            continue
        assert (p * q).top_degree() == p.top_degree() + q.top_degree()
    print("PASS criterion 9: degree additivity on 1000 random nonzero pairs")


def test_criterion_10_soundness_red_team():
    rng = random.Random(10)
    cases = 0
    while cases < 100:
        pieces = []
        for _ in range(2):
            a = rng.choice([x for x in range(-9, 10) if x != 0])
            b = rng.choice([1, -1]) - 2 * a
            n = rng.randint(1, 6)
            pieces.append(P({n: a, 0: b, -n: a}))
        product = pieces[0] * pieces[1]
        assert is_admissible_alexander(product).admissible
        try:
            ok, _, _ = a_irreducible(product)
        except (UnsupportedShape, NoWitnessFound):
            cases += 1
            continue
        assert not ok, f"product {product} wrongly certified A-irreducible"
        cases += 1
    print("PASS criterion 10: no product of admissible trinomials certifies as A-irreducible")
