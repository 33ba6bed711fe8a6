"""Exception hierarchy shared by all knotcert modules."""


class KnotCertError(Exception):
    """Base class for all errors raised by this package."""


class ZeroPolynomial(KnotCertError):
    """Operation undefined on the zero polynomial."""


class NotSymmetrizable(KnotCertError):
    """No unit makes the polynomial palindromic."""


class DimensionTooLarge(KnotCertError):
    """Cofactor expansion refused beyond its size cap."""


class DimensionMismatch(KnotCertError):
    """Matrix blocks or entries have inconsistent dimensions."""


class IndexOutOfRange(KnotCertError):
    """Generator or recursion index outside its valid range."""


class ParseError(KnotCertError):
    """Malformed polynomial text or matrix file."""


class OddDimension(KnotCertError):
    """Seifert matrices must be 2g x 2g."""


class NotUnimodularIntersection(KnotCertError):
    """det(S - S^T) != +-1: not a knot Seifert matrix in a homology sphere."""


class NotPrime(KnotCertError):
    """Claimed Eisenstein prime fails the primality check."""


class NonPrimitive(KnotCertError):
    """Integer polynomial has content != 1."""


class NoWitnessFound(KnotCertError):
    """The decision procedure cannot certify irreducibility of a factor."""


class UnsupportedShape(KnotCertError):
    """Polynomial outside the symmetric-trinomial shape the certifier handles."""
