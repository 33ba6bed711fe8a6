"""Exact Laurent polynomials over arbitrary-precision integers.

Values are immutable and canonically trimmed: a nonzero polynomial never
stores a zero leading or trailing coefficient, and the zero polynomial is
the unique value with an empty coefficient tuple and min_exp = 0.  All
arithmetic is exact; there is no floating point anywhere.
"""

from __future__ import annotations

import dataclasses
import re
from math import gcd
from typing import Iterable, Mapping

from .errors import NotSymmetrizable, ParseError, ZeroPolynomial


@dataclasses.dataclass(frozen=True)
class Unit:
    """A unit of the Laurent ring, +-t^shift."""

    sign: int
    shift: int

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise ValueError("unit sign must be +1 or -1")

    def apply(self, p: "LaurentPoly") -> "LaurentPoly":
        if p.is_zero():
            return p
        coeffs = p.coeffs if self.sign == 1 else tuple(-c for c in p.coeffs)
        return LaurentPoly(p.min_exp + self.shift, coeffs)

    def inverse(self) -> "Unit":
        return Unit(self.sign, -self.shift)

    def compose(self, other: "Unit") -> "Unit":
        return Unit(self.sign * other.sign, self.shift + other.shift)

    def __str__(self) -> str:
        return str(self.as_poly())

    def as_poly(self) -> "LaurentPoly":
        return LaurentPoly(self.shift, (self.sign,))


@dataclasses.dataclass(init=False, frozen=True)
class LaurentPoly:
    """Integer Laurent polynomial, dense coefficients starting at min_exp.

    coeffs[i] is the coefficient of t^(min_exp + i).  Equal values always
    have equal representations, so == and hash are structural.
    """

    min_exp: int
    coeffs: tuple[int, ...]

    def __init__(self, min_exp: int, coeffs: Iterable[int]):
        cs = list(coeffs)
        lo, hi = 0, len(cs)
        while lo < hi and cs[lo] == 0:
            lo += 1
            min_exp += 1
        while lo < hi and cs[hi - 1] == 0:
            hi -= 1
        if lo == hi:
            object.__setattr__(self, "min_exp", 0)
            object.__setattr__(self, "coeffs", ())
        else:
            object.__setattr__(self, "min_exp", min_exp)
            object.__setattr__(self, "coeffs", tuple(cs[lo:hi]))

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls(0, ())

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls(0, (1,))

    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls(0, (c,))

    @classmethod
    def term(cls, coeff: int, exp: int) -> "LaurentPoly":
        """coeff * t^exp."""
        return cls(exp, (coeff,))

    @classmethod
    def from_terms(cls, terms: Mapping[int, int]) -> "LaurentPoly":
        nz = {e: c for e, c in terms.items() if c != 0}
        if not nz:
            return cls.zero()
        lo, hi = min(nz), max(nz)
        return cls(lo, [nz.get(e, 0) for e in range(lo, hi + 1)])

    # -- basic queries -------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_unit(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs[0] in (1, -1)

    def coefficient(self, exp: int) -> int:
        i = exp - self.min_exp
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def support(self) -> tuple[int, ...]:
        return tuple(
            self.min_exp + i for i, c in enumerate(self.coeffs) if c != 0
        )

    def top_degree(self) -> int:
        """Highest exponent with nonzero coefficient."""
        if self.is_zero():
            raise ZeroPolynomial("top_degree of the zero polynomial")
        return self.min_exp + len(self.coeffs) - 1

    def leading_coefficient(self) -> int:
        if self.is_zero():
            raise ZeroPolynomial("leading coefficient of the zero polynomial")
        return self.coeffs[-1]

    def content(self) -> int:
        """gcd of all coefficients (0 for the zero polynomial)."""
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g

    def eval_at_one(self) -> int:
        return sum(self.coeffs)

    # -- ring operations ----------------------------------------------

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        lo = min(self.min_exp, other.min_exp)
        hi = max(self.min_exp + len(self.coeffs), other.min_exp + len(other.coeffs))
        cs = [0] * (hi - lo)
        for i, c in enumerate(self.coeffs):
            cs[self.min_exp - lo + i] += c
        for i, c in enumerate(other.coeffs):
            cs[other.min_exp - lo + i] += c
        return LaurentPoly(lo, cs)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.min_exp, tuple(-c for c in self.coeffs))

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        if self.is_zero() or other.is_zero():
            return LaurentPoly.zero()
        cs = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                cs[i + j] += a * b
        return LaurentPoly(self.min_exp + other.min_exp, cs)

    def scale(self, k: int) -> "LaurentPoly":
        return LaurentPoly(self.min_exp, tuple(k * c for c in self.coeffs))

    def reciprocal(self) -> "LaurentPoly":
        """The substitution t -> 1/t.  Involutive."""
        if self.is_zero():
            return self
        return LaurentPoly(-self.top_degree(), tuple(reversed(self.coeffs)))

    def substitute_power(self, n: int) -> "LaurentPoly":
        """p(t^n) for n >= 1."""
        if n < 1:
            raise ValueError("substitution power must be >= 1")
        if self.is_zero() or n == 1:
            return self
        cs = [0] * ((len(self.coeffs) - 1) * n + 1)
        for i, c in enumerate(self.coeffs):
            cs[i * n] = c
        return LaurentPoly(self.min_exp * n, cs)

    # -- unit normalization --------------------------------------------

    def symmetrize(self) -> tuple["LaurentPoly", Unit]:
        """Unit-normalize to the palindromic representative.

        Returns (q, u) with q = u * p, q(1/t) = q(t) exactly and the top
        coefficient of q positive.  Raises NotSymmetrizable when no unit
        makes p palindromic (e.g. 2t^n - 1).
        """
        if self.is_zero():
            raise ZeroPolynomial("cannot symmetrize the zero polynomial")
        lo = self.min_exp
        hi = self.min_exp + len(self.coeffs) - 1
        if (lo + hi) % 2 != 0:
            raise NotSymmetrizable(f"support span of {self} has odd center")
        if self.coeffs != tuple(reversed(self.coeffs)):
            raise NotSymmetrizable(f"{self} has non-palindromic coefficients")
        sign = 1 if self.coeffs[-1] > 0 else -1
        unit = Unit(sign, -(lo + hi) // 2)
        return unit.apply(self), unit

    def __str__(self) -> str:
        return render(self)

    __repr__ = __str__


def doteq_equal(p: LaurentPoly, q: LaurentPoly) -> Unit | None:
    """Equality up to a unit: the witness u with p = u * q, or None.

    Support alignment then a single sign/shift comparison; no search.
    """
    if p.is_zero() and q.is_zero():
        return Unit(1, 0)
    if p.is_zero() or q.is_zero():
        return None
    if p.coeffs == q.coeffs:
        return Unit(1, p.min_exp - q.min_exp)
    if p.coeffs == tuple(-c for c in q.coeffs):
        return Unit(-1, p.min_exp - q.min_exp)
    return None


def divexact(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """Exact division in the Laurent ring; raises if q does not divide p."""
    if q.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if p.is_zero():
        return LaurentPoly.zero()
    rem = list(p.coeffs)
    div = q.coeffs
    lead = div[-1]
    out_len = len(rem) - len(div) + 1
    if out_len <= 0:
        raise ValueError(f"{q} does not divide {p}")
    quot = [0] * out_len
    for i in range(out_len - 1, -1, -1):
        c = rem[i + len(div) - 1]
        if c % lead != 0:
            raise ValueError(f"{q} does not divide {p}")
        k = c // lead
        quot[i] = k
        if k:
            for j, d in enumerate(div):
                rem[i + j] -= k * d
    if any(rem):
        raise ValueError(f"{q} does not divide {p}")
    return LaurentPoly(p.min_exp - q.min_exp, quot)


# -- text grammar -------------------------------------------------------

def render(p: LaurentPoly) -> str:
    """Terms in decreasing exponent order, e.g. '2*t^3 - 5 + 2*t^-3'."""
    if p.is_zero():
        return "0"
    parts: list[str] = []
    for i in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[i]
        if c == 0:
            continue
        e = p.min_exp + i
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            tpart = "t" if e == 1 else f"t^{e}"
            body = tpart if mag == 1 else f"{mag}*{tpart}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


_TERM_RE = re.compile(
    r"\s*(?P<sign>[+-])?\s*"
    r"(?:(?P<coeff>\d+)\s*(?:\*\s*(?P<tc>t(?:\^(?P<ec>-?\d+))?))?"
    r"|(?P<tb>t(?:\^(?P<eb>-?\d+))?))"
)


def parse(text: str) -> LaurentPoly:
    """Parse the grammar produced by render()."""
    terms: dict[int, int] = {}
    pos = 0
    stripped = text.strip()
    if not stripped:
        raise ParseError("empty polynomial text")
    while pos < len(text):
        m = _TERM_RE.match(text, pos)
        if m is None:
            if text[pos:].strip():
                raise ParseError(f"cannot parse polynomial near {text[pos:]!r}")
            break
        sign = -1 if m.group("sign") == "-" else 1
        if m.group("coeff") is not None:
            coeff = sign * int(m.group("coeff"))
            if m.group("tc") is not None:
                exp = int(m.group("ec")) if m.group("ec") is not None else 1
            else:
                exp = 0
        else:
            coeff = sign
            exp = int(m.group("eb")) if m.group("eb") is not None else 1
        terms[exp] = terms.get(exp, 0) + coeff
        pos = m.end()
    return LaurentPoly.from_terms(terms)
