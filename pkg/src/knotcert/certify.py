"""A-irreducibility decisions and primeness certificates.

The certifier is deliberately scoped: it decides factorizations of
symmetric trinomials a*t^n + b + a*t^-n with content 1, which is the shape
every Alexander polynomial in the two supported families takes.  Anything
outside that shape raises UnsupportedShape; an answer is never guessed.
A Prime verdict is sound relative to the genus-degree lemma; Inconclusive
makes no claim either way.
"""

from __future__ import annotations

import dataclasses
from math import gcd, isqrt

from .errors import (
    NonPrimitive,
    NoWitnessFound,
    NotPrime,
    NotSymmetrizable,
    UnsupportedShape,
)
from .laurent import LaurentPoly, Unit
from .seifert import FamilySpec, SeifertMatrix, alexander, build_family


@dataclasses.dataclass(frozen=True)
class AdmissibilityVerdict:
    """Necessary conditions for being a knot Alexander polynomial."""

    symmetric_ok: bool
    eval_one: int
    admissible: bool

    def to_dict(self) -> dict:
        return {
            "symmetric_ok": self.symmetric_ok,
            "eval_one": self.eval_one,
            "admissible": self.admissible,
        }


@dataclasses.dataclass(frozen=True)
class IrreducibilityWitness:
    """How a factor was certified irreducible over the rationals.

    method 'eisenstein': Eisenstein at `prime`, applied to the
    coefficient-reversed polynomial when on_reciprocal is set.
    method 'degree': the factor is linear in t.
    method 'quadratic_enumeration': exhaustive integer divisor enumeration
    found no factorization of the quadratic in u = t^n (valid as
    t-irreducibility only when n = 1).
    """

    method: str
    prime: int | None = None
    on_reciprocal: bool = False

    def to_dict(self) -> dict:
        return {
            "method": self.method,
            "eisenstein_prime": self.prime,
            "on_reciprocal": self.on_reciprocal,
        }


@dataclasses.dataclass(frozen=True)
class FactorizationCertificate:
    input: LaurentPoly
    factors: tuple[tuple[LaurentPoly, IrreducibilityWitness], ...]
    unit: Unit

    @property
    def is_irreducible(self) -> bool:
        return len(self.factors) == 1

    def reconstructs(self) -> bool:
        prod = LaurentPoly.one()
        for f, _ in self.factors:
            prod = prod * f
        return self.unit.apply(prod) == self.input

    def to_dict(self) -> dict:
        return {
            "input": str(self.input),
            "unit": str(self.unit),
            "factors": [
                {"poly": str(f), **w.to_dict()} for f, w in self.factors
            ],
        }


@dataclasses.dataclass(frozen=True)
class SplitRejection:
    """One attempted split of the factorization, with both verdicts."""

    left: LaurentPoly
    right: LaurentPoly
    left_verdict: AdmissibilityVerdict
    right_verdict: AdmissibilityVerdict

    @property
    def rejected(self) -> bool:
        return not (self.left_verdict.admissible and self.right_verdict.admissible)

    def to_dict(self) -> dict:
        return {
            "left": str(self.left),
            "right": str(self.right),
            "left_verdict": self.left_verdict.to_dict(),
            "right_verdict": self.right_verdict.to_dict(),
        }


@dataclasses.dataclass(frozen=True)
class PrimenessCertificate:
    delta: LaurentPoly
    d: int
    matrix_genus: int
    genus: int | None
    genus_argument: str
    factorization: FactorizationCertificate | None
    rejected_splits: tuple[SplitRejection, ...]
    verdict: str  # "Prime" | "Inconclusive"
    reason: str

    def to_dict(self) -> dict:
        return {
            "delta": str(self.delta),
            "d": self.d,
            "genus": self.genus,
            "genus_argument": self.genus_argument,
            "factors": (
                self.factorization.to_dict()["factors"]
                if self.factorization is not None
                else []
            ),
            "rejected_splits": [s.to_dict() for s in self.rejected_splits],
            "verdict": self.verdict,
            "reason": self.reason,
        }


# -- admissibility ---------------------------------------------------------

def is_admissible_alexander(p: LaurentPoly) -> AdmissibilityVerdict:
    """Symmetry plus determinant-one check.  Invariant under units."""
    try:
        p.symmetrize()
        symmetric_ok = True
    except NotSymmetrizable:
        symmetric_ok = False
    eval_one = p.eval_at_one()
    return AdmissibilityVerdict(
        symmetric_ok=symmetric_ok,
        eval_one=eval_one,
        admissible=symmetric_ok and abs(eval_one) == 1,
    )


# -- Eisenstein machinery ---------------------------------------------------

def is_prime(q: int) -> bool:
    if q < 2:
        return False
    if q < 4:
        return True
    if q % 2 == 0:
        return False
    f = 3
    while f <= isqrt(q):
        if q % f == 0:
            return False
        f += 2
    return True


def prime_divisors(n: int) -> list[int]:
    n = abs(n)
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def _require_ordinary(p: LaurentPoly) -> None:
    if p.is_zero() or p.min_exp < 0:
        raise ValueError("ordinary (non-Laurent, nonzero) polynomial expected")


def eisenstein_check(p: LaurentPoly, q: int) -> bool:
    """Eisenstein's criterion for an ordinary integer polynomial at prime q."""
    _require_ordinary(p)
    if p.top_degree() < 1:
        raise ValueError("Eisenstein requires a nonconstant polynomial")
    if not is_prime(q):
        raise NotPrime(f"{q} is not prime")
    if p.content() != 1:
        raise NonPrimitive(f"content of {p} is {p.content()}")
    deg = p.top_degree()
    if p.coefficient(deg) % q == 0:
        return False
    for e in range(deg):
        if p.coefficient(e) % q != 0:
            return False
    return p.coefficient(0) % (q * q) != 0


def _reverse_coefficients(p: LaurentPoly) -> LaurentPoly:
    """t^deg * p(1/t) as an ordinary polynomial."""
    deg = p.top_degree()
    return LaurentPoly(0, tuple(p.coefficient(deg - e) for e in range(deg + 1)))


def irreducibility_witness(p: LaurentPoly) -> IrreducibilityWitness:
    """Search an Eisenstein prime, directly then on the reversed polynomial.

    Candidate primes are the prime divisors of the constant term (direct)
    or of the leading coefficient (reversed); any Eisenstein prime must
    divide the relevant end coefficient, so the search is complete.
    Linear polynomials with no Eisenstein prime get a degree certificate.
    """
    _require_ordinary(p)
    deg = p.top_degree()
    if deg < 1:
        raise ValueError("constant polynomials have no irreducibility witness")
    if p.content() != 1:
        raise NonPrimitive(f"content of {p} is {p.content()}")
    c0 = p.coefficient(0)
    if c0 != 0:
        for q in prime_divisors(c0):
            if eisenstein_check(p, q):
                return IrreducibilityWitness("eisenstein", q, on_reciprocal=False)
        rev = _reverse_coefficients(p)
        for q in prime_divisors(p.coefficient(deg)):
            if eisenstein_check(rev, q):
                return IrreducibilityWitness("eisenstein", q, on_reciprocal=True)
    if deg == 1:
        return IrreducibilityWitness("degree")
    raise NoWitnessFound(f"no Eisenstein prime certifies {p}")


def verify_witness(p: LaurentPoly, w: IrreducibilityWitness) -> bool:
    """Re-check a witness independently of how it was found."""
    if w.method == "degree":
        return p.top_degree() == 1
    if w.method == "eisenstein":
        target = _reverse_coefficients(p) if w.on_reciprocal else p
        return w.prime is not None and eisenstein_check(target, w.prime)
    if w.method == "quadratic_enumeration":
        a, b, n = _trinomial_shape(p.symmetrize()[0])
        return n == 1 and not _quadratic_factorizations(a, b)
    return False


# -- trinomial factorization -------------------------------------------------

def _trinomial_shape(p: LaurentPoly) -> tuple[int, int, int]:
    """Extract (a, b, n) from a symmetric trinomial a*t^n + b + a*t^-n."""
    support = p.support()
    if len(support) != 3 or support[0] != -support[2] or support[1] != 0:
        raise UnsupportedShape(f"support of {p} is not {{-n, 0, n}}")
    n = support[2]
    a_hi, b, a_lo = p.coefficient(n), p.coefficient(0), p.coefficient(-n)
    if a_hi != a_lo:
        raise UnsupportedShape(f"outer coefficients of {p} differ")
    return a_hi, b, n


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small = [d for d in range(1, isqrt(n) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def _quadratic_factorizations(a: int, b: int) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    """All factorizations a*u^2 + b*u + a = (p1*u + q1)(p2*u + q2) over Z.

    Results are deduplicated up to factor order and paired sign flips,
    so a genuine quadratic yields at most one entry.
    """
    found = set()
    for p1 in _divisors(a):  # p1 > 0; sign absorbed into p2
        p2 = a // p1
        for q1_abs in _divisors(a):
            for q1 in (q1_abs, -q1_abs):
                if a % q1 != 0:
                    continue
                q2 = a // q1
                if p1 * q2 + p2 * q1 != b:
                    continue
                plain = tuple(sorted([(p1, q1), (p2, q2)]))
                flipped = tuple(sorted([(-p1, -q1), (-p2, -q2)]))
                # prefer positive leading coefficients where possible
                if plain[0][0] > 0:
                    found.add(plain)
                elif flipped[0][0] > 0:
                    found.add(flipped)
                else:
                    found.add(min(plain, flipped))
    return sorted(found)


def factor_trinomial(p: LaurentPoly) -> FactorizationCertificate:
    """Complete factorization of a symmetric trinomial over the integers.

    Writes t^n * p = a*u^2 + b*u + a with u = t^n and enumerates every
    integer factorization of the quadratic.  Each factor carries an
    irreducibility witness; if no factorization exists the trinomial
    itself is certified irreducible (for n = 1 this is irreducibility in
    t; for n > 1 it is only irreducibility in u, which is not enough, so
    certification aborts with NoWitnessFound).
    """
    a, b, n = _trinomial_shape(p)
    if gcd(a, b) != 1:
        raise NonPrimitive(f"trinomial {p} has content {gcd(a, b)}")
    shifted = Unit(1, n).apply(p)  # a*t^2n + b*t^n + a, ordinary
    pairs = _quadratic_factorizations(a, b)
    if len(pairs) > 1:
        raise RuntimeError(f"non-unique quadratic factorization of {p}")
    if not pairs:
        if n > 1:
            raise NoWitnessFound(
                f"{p} is irreducible in t^{n} but t-irreducibility is uncertified"
            )
        witness = IrreducibilityWitness("quadratic_enumeration")
        cert = FactorizationCertificate(p, ((shifted, witness),), Unit(1, -n))
    else:
        (p1, q1), (p2, q2) = pairs[0]
        f1 = LaurentPoly.from_terms({n: p1, 0: q1})
        f2 = LaurentPoly.from_terms({n: p2, 0: q2})
        cert = FactorizationCertificate(
            p,
            ((f1, irreducibility_witness(f1)), (f2, irreducibility_witness(f2))),
            Unit(1, -n),
        )
    if not cert.reconstructs():
        raise RuntimeError(f"factorization of {p} failed to reconstruct")
    return cert


def a_irreducible(p: LaurentPoly) -> tuple[bool, tuple[SplitRejection, ...], FactorizationCertificate]:
    """Decide whether p admits no split into two non-unit admissible factors.

    Works on the unit-normalized representative, so the answer is
    invariant under replacing p by any unit multiple.  Splits of the
    complete factorization are enumerated and each rejection is recorded
    with both admissibility verdicts.
    """
    if not is_admissible_alexander(p).admissible:
        raise ValueError("a_irreducible requires an admissible input")
    sym, _ = p.symmetrize()
    cert = factor_trinomial(sym)
    if cert.is_irreducible:
        return True, (), cert
    (f1, _), (f2, _) = cert.factors
    split = SplitRejection(
        f1, f2, is_admissible_alexander(f1), is_admissible_alexander(f2)
    )
    return split.rejected, (split,), cert


# -- certificate assembly ----------------------------------------------------

def primeness_certificate(source: FamilySpec | SeifertMatrix) -> PrimenessCertificate:
    """Assemble a primeness certificate from a family spec or Seifert matrix.

    Verdict is Prime only when the genus squeeze d <= g(K) <= matrix genus
    closes (d equals the matrix genus) and the Alexander polynomial is
    certified A-irreducible.  Every other outcome is Inconclusive.
    """
    matrix = build_family(source) if isinstance(source, FamilySpec) else source
    result = alexander(matrix)
    delta = result.symmetric
    d = result.d
    mg = result.genus_upper

    if d == mg:
        genus: int | None = d
        genus_argument = (
            f"d = {d} <= g(K) <= matrix genus = {mg}; the squeeze closes, so g(K) = d(K) = {d}"
        )
        squeeze_ok = True
    else:
        genus = None
        genus_argument = (
            f"d = {d} < matrix genus = {mg}; the squeeze leaves g(K) undetermined"
        )
        squeeze_ok = False

    factorization: FactorizationCertificate | None = None
    splits: tuple[SplitRejection, ...] = ()
    irreducible_ok = False
    reason = ""
    try:
        irreducible_ok, splits, factorization = a_irreducible(delta)
        if not irreducible_ok:
            reason = "an admissible split exists: the polynomial is not A-irreducible"
    except (UnsupportedShape, NoWitnessFound, NonPrimitive) as exc:
        reason = f"A-irreducibility undecided: {exc}"

    if squeeze_ok and irreducible_ok:
        verdict = "Prime"
        reason = "A-irreducible Alexander polynomial with g(K) = d(K)"
    else:
        verdict = "Inconclusive"
        if not squeeze_ok:
            reason = (reason + "; " if reason else "") + "genus squeeze did not close"

    return PrimenessCertificate(
        delta=delta,
        d=d,
        matrix_genus=mg,
        genus=genus,
        genus_argument=genus_argument,
        factorization=factorization,
        rejected_splits=splits,
        verdict=verdict,
        reason=reason,
    )
