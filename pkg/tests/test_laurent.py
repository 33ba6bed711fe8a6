import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from knotcert.errors import NotSymmetrizable, ParseError, ZeroPolynomial
from knotcert.laurent import LaurentPoly, Unit, divexact, doteq_equal, parse, render

P = LaurentPoly.from_terms

coeff = st.integers(min_value=-(10**10), max_value=10**10)
polys = st.builds(
    LaurentPoly,
    st.integers(min_value=-10, max_value=10),
    st.lists(coeff, max_size=13),
)
nonzero_polys = polys.filter(lambda p: not p.is_zero())
units = st.builds(Unit, st.sampled_from([1, -1]), st.integers(-8, 8))


class TestCanonicalForm:
    def test_trims_leading_and_trailing_zeros(self):
        p = LaurentPoly(-2, (0, 3, 1, 0, 0))
        assert p.min_exp == -1
        assert p.coeffs == (3, 1)

    def test_zero_is_unique(self):
        assert LaurentPoly(5, (0, 0)) == LaurentPoly.zero()
        assert LaurentPoly.zero().min_exp == 0
        assert LaurentPoly.zero().coeffs == ()

    @given(polys)
    def test_nonzero_ends_are_nonzero(self, p):
        if not p.is_zero():
            assert p.coeffs[0] != 0 and p.coeffs[-1] != 0


class TestAdd:
    def test_disjoint_supports(self):
        assert P({1: 2, 0: -5}) + P({-1: 2}) == P({1: 2, 0: -5, -1: 2})

    @pytest.mark.parametrize("n", [1, 3, 7])
    def test_cancellation_to_zero(self, n):
        assert P({n: 1}) + P({n: -1}) == LaurentPoly.zero()

    def test_hand_arithmetic(self):
        # (2t^2 - 1) + 2t(t - 1) = 4t^2 - 2t - 1
        lhs = P({2: 2, 0: -1}) + P({1: 2, 0: -2}) * P({1: 1})
        assert lhs == P({2: 4, 1: -2, 0: -1})


class TestMul:
    def test_paper_factor_product_n1(self):
        assert P({1: 2, 0: -1}) * P({1: 1, 0: -2}) == P({2: 2, 1: -5, 0: 2})

    @given(polys)
    def test_identity(self, p):
        assert p * LaurentPoly.one() == p

    def test_primed_factor_product_n2(self):
        assert P({2: 2, 0: -3}) * P({2: 3, 0: -2}) == P({4: 6, 2: -13, 0: 6})


class TestRingAxioms:
    @settings(max_examples=200)
    @given(polys, polys, polys)
    def test_associativity_and_distributivity(self, p, q, r):
        assert (p + q) + r == p + (q + r)
        assert (p * q) * r == p * (q * r)
        assert p * (q + r) == p * q + p * r

    @given(polys, polys)
    def test_commutativity(self, p, q):
        assert p + q == q + p
        assert p * q == q * p

    @given(nonzero_polys, nonzero_polys)
    def test_degree_additivity(self, p, q):
        prod = p * q
        assert prod.top_degree() == p.top_degree() + q.top_degree()
        assert prod.min_exp == p.min_exp + q.min_exp

    @given(polys, polys)
    def test_eval_at_one_is_multiplicative(self, p, q):
        assert (p * q).eval_at_one() == p.eval_at_one() * q.eval_at_one()


class TestReciprocal:
    def test_exponent_negation(self):
        assert P({4: 2, 0: -1}).reciprocal() == P({-4: 2, 0: -1})

    def test_symmetric_fixed_point(self):
        p = P({1: 2, 0: -5, -1: 2})
        assert p.reciprocal() == p

    def test_zero(self):
        assert LaurentPoly.zero().reciprocal() == LaurentPoly.zero()

    @given(polys)
    def test_involution(self, p):
        assert p.reciprocal().reciprocal() == p


class TestDoteq:
    def test_witness_from_cofactor_determinant(self):
        # Independent 2x2 cofactor oracle on [[0, 2t-1], [t-2, 0]].
        a, b = P({1: 2, 0: -1}), P({1: 1, 0: -2})
        raw = LaurentPoly.zero() * LaurentPoly.zero() - a * b
        sym = P({1: 2, 0: -5, -1: 2})
        witness = doteq_equal(raw, sym)
        assert witness == Unit(-1, 1)
        assert witness.apply(sym) == raw

    def test_distinct_factors_not_equivalent(self):
        for n in range(1, 9):
            assert doteq_equal(P({n: 2, 0: -1}), P({n: 1, 0: -2})) is None

    @given(nonzero_polys)
    def test_reflexive(self, p):
        assert doteq_equal(p, p) == Unit(1, 0)

    @given(nonzero_polys, units, units)
    def test_symmetric_and_transitive(self, p, u1, u2):
        q = u1.apply(p)
        r = u2.apply(q)
        w_pq = doteq_equal(p, q)
        w_qp = doteq_equal(q, p)
        assert w_pq is not None and w_qp is not None
        assert w_qp == w_pq.inverse()
        w_pr = doteq_equal(p, r)
        assert w_pr is not None
        assert w_pr == doteq_equal(q, r).compose(w_pq)


def exhaustive_unit_search(p, max_shift=10):
    """Oracle: brute-force the unit making p palindromic, lead positive."""
    for sign in (1, -1):
        for shift in range(-max_shift, max_shift + 1):
            q = Unit(sign, shift).apply(p)
            if q.reciprocal() == q and q.leading_coefficient() > 0:
                return q, Unit(sign, shift)
    return None


class TestSymmetrize:
    def test_against_unit_search_oracle(self):
        p = P({2: -2, 1: 5, 0: -2})
        expected = exhaustive_unit_search(p)
        assert expected is not None
        assert p.symmetrize() == expected
        assert p.symmetrize() == (P({1: 2, 0: -5, -1: 2}), Unit(-1, -1))

    @pytest.mark.parametrize("n", range(1, 9))
    def test_not_symmetrizable(self, n):
        with pytest.raises(NotSymmetrizable):
            P({n: 2, 0: -1}).symmetrize()

    def test_constant_one(self):
        assert LaurentPoly.one().symmetrize() == (LaurentPoly.one(), Unit(1, 0))

    def test_zero_rejected(self):
        with pytest.raises(ZeroPolynomial):
            LaurentPoly.zero().symmetrize()

    @given(nonzero_polys)
    def test_success_implies_palindrome_and_doteq(self, p):
        try:
            q, u = p.symmetrize()
        except NotSymmetrizable:
            return
        assert q.reciprocal() == q
        assert q == u.apply(p)
        assert doteq_equal(q, p) is not None


class TestEvalAndDegrees:
    @pytest.mark.parametrize("n", [1, 4, 9])
    def test_eval_at_one(self, n):
        assert P({n: 2, 0: -5, -n: 2}).eval_at_one() == -1
        assert P({n: 6, 0: -13, -n: 6}).eval_at_one() == -1
        assert LaurentPoly.zero().eval_at_one() == 0

    def test_top_degree(self):
        assert P({3: 2, 0: -5, -3: 2}).top_degree() == 3
        assert LaurentPoly.one().top_degree() == 0
        assert P({1: 2, 0: -5, -1: 2}).top_degree() == 1
        with pytest.raises(ZeroPolynomial):
            LaurentPoly.zero().top_degree()

    def test_substitute_power(self):
        base = P({1: 2, 0: -5, -1: 2})
        assert base.substitute_power(3) == P({3: 2, 0: -5, -3: 2})
        assert base.substitute_power(1) == base
        assert P({1: 2, 0: -1}).substitute_power(4) == P({4: 2, 0: -1})


class TestDivexact:
    @given(nonzero_polys, nonzero_polys)
    def test_product_division_roundtrip(self, p, q):
        assert divexact(p * q, q) == p

    def test_inexact_raises(self):
        with pytest.raises(ValueError):
            divexact(P({1: 1, 0: 1}), P({0: 2}))


class TestTextGrammar:
    def test_render_examples(self):
        assert render(P({3: 2, 0: -5, -3: 2})) == "2*t^3 - 5 + 2*t^-3"
        assert render(LaurentPoly.zero()) == "0"
        assert render(P({1: 1, 0: -1})) == "t - 1"
        assert render(P({2: -1, -1: 3})) == "-t^2 + 3*t^-1"

    def test_parse_examples(self):
        assert parse("2*t^3 - 5 + 2*t^-3") == P({3: 2, 0: -5, -3: 2})
        assert parse("-t^2 + 3*t^-1") == P({2: -1, -1: 3})
        assert parse("0") == LaurentPoly.zero()
        assert parse("t") == P({1: 1})

    def test_parse_rejects_garbage(self):
        with pytest.raises(ParseError):
            parse("2*x^3")
        with pytest.raises(ParseError):
            parse("")

    @given(polys)
    def test_roundtrip(self, p):
        assert parse(render(p)) == p
