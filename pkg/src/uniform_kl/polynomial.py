"""Dense univariate polynomials over the rationals.

Everything downstream (coefficient tables, generating series, dimension
counts) is exact, so the shared polynomial type keeps Fraction coefficients
and never rounds.
"""

from __future__ import annotations

from fractions import Fraction

__all__ = ["UniPoly"]


class UniPoly:
    """Polynomial in one variable t with Fraction coefficients.

    Coefficients are stored densely, indexed by exponent, with trailing
    zeros trimmed; the zero polynomial has an empty coefficient tuple.
    Instances are immutable by convention and hashable.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def monomial(cls, exp, coeff=1):
        if exp < 0:
            raise ValueError("monomial exponent must be nonnegative, got %d" % exp)
        return cls((0,) * exp + (coeff,))

    @classmethod
    def from_terms(cls, terms):
        """Build from a mapping exponent -> coefficient."""
        if not terms:
            return cls()
        top = max(terms)
        return cls([terms.get(e, 0) for e in range(top + 1)])

    @property
    def degree(self):
        """Degree of the polynomial; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    def coeff(self, exp):
        if 0 <= exp < len(self.coeffs):
            return self.coeffs[exp]
        return Fraction(0)

    def is_integral(self):
        """True when every coefficient is an integer."""
        return all(c.denominator == 1 for c in self.coeffs)

    def reverse(self, degree):
        """Coefficient reversal t**degree * p(1/t); requires deg p <= degree."""
        if self.degree > degree:
            raise ValueError(
                "cannot reverse a degree-%d polynomial at degree %d" % (self.degree, degree)
            )
        out = [Fraction(0)] * (degree + 1)
        for e, c in enumerate(self.coeffs):
            out[degree - e] = c
        return UniPoly(out)

    def divexact(self, other):
        """Exact quotient self / other; ArithmeticError if a remainder is left."""
        if not other:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self:
            return UniPoly()
        div = other.coeffs
        dd = len(div) - 1
        lead = div[-1]
        rem = list(self.coeffs)
        if len(rem) - 1 < dd:
            raise ArithmeticError("%s is not divisible by %s" % (self, other))
        quot = [Fraction(0)] * (len(rem) - dd)
        for pos in range(len(quot) - 1, -1, -1):
            q = rem[pos + dd] / lead
            quot[pos] = q
            if q:
                for e, c in enumerate(div):
                    rem[pos + e] -= q * c
        if any(rem[:dd]):
            raise ArithmeticError("%s is not divisible by %s" % (self, other))
        return UniPoly(quot)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UniPoly((other,))
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UniPoly((other,))
        if not isinstance(other, UniPoly):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly([self.coeff(e) + other.coeff(e) for e in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UniPoly((other,))
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return UniPoly([c * other for c in self.coeffs])
        if not isinstance(other, UniPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        out = UniPoly((1,))
        for _ in range(k):
            out = out * self
        return out

    def __str__(self):
        if not self.coeffs:
            return "0"
        pieces = []
        for e, c in enumerate(self.coeffs):
            if not c:
                continue
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                if mag == 1:
                    head = ""
                elif mag.denominator == 1:
                    head = str(mag)
                else:
                    head = "(%s)" % mag
                body = head + ("t" if e == 1 else "t^%d" % e)
            if not pieces:
                pieces.append(("-" if c < 0 else "") + body)
            else:
                pieces.append(("- " if c < 0 else "+ ") + body)
        return " ".join(pieces)

    def __repr__(self):
        return "UniPoly<%s>" % self
