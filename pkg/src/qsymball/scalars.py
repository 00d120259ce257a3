"""Exact scalar arithmetic for q-deformed algebras.

Scalars are Laurent polynomials in s = q^(1/2) with Gaussian-rational
coefficients, optionally divided by a power of delta = q - q^(-1).
The delta denominator is needed for normal ordering E- and F-letters;
everything else stays in the plain Laurent ring.  All arithmetic is
exact; floating point enters only in :meth:`LaurentScalar.eval`.
"""

from __future__ import annotations

import math
from fractions import Fraction


class GaussianRational:
    """Exact complex number with rational real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    def __add__(self, other):
        return GaussianRational(self.re + other.re, self.im + other.im)

    def __sub__(self, other):
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __mul__(self, other):
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def conj(self):
        return GaussianRational(self.re, -self.im)

    def is_zero(self):
        return self.re == 0 and self.im == 0

    def __eq__(self, other):
        if not isinstance(other, GaussianRational):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(self.re, self.im)

    def __repr__(self):
        if self.im == 0:
            return str(self.re)
        return f"({self.re}{'+' if self.im >= 0 else '-'}{abs(self.im)}i)"


_GR_ZERO = GaussianRational(0)
_GR_ONE = GaussianRational(1)

# delta = q - q^(-1) = s^2 - s^(-2), as an exponent->coefficient mapping.
_DELTA = {2: _GR_ONE, -2: GaussianRational(-1)}


def _poly_add(a, b):
    out = dict(a)
    for e, c in b.items():
        s = out.get(e, _GR_ZERO) + c
        if s.is_zero():
            out.pop(e, None)
        else:
            out[e] = s
    return out


def _poly_mul(a, b):
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = ea + eb
            s = out.get(e, _GR_ZERO) + ca * cb
            if s.is_zero():
                out.pop(e, None)
            else:
                out[e] = s
    return out


def _poly_div_delta(a):
    """Exact division by s^2 - s^(-2); returns None if not divisible."""
    if not a:
        return {}
    # Shift so the divisor becomes s^4 - 1 and divide with plain long
    # division; p / delta = s^(2) * p / (s^4 - 1) after the shift.
    m = min(a)
    rem = {e - m: c for e, c in a.items()}
    quo = {}
    while rem and max(rem) >= 4:
        e = max(rem)
        c = rem.pop(e)
        quo[e - 4] = quo.get(e - 4, _GR_ZERO) + c
        s = rem.get(e - 4, _GR_ZERO) + c
        if s.is_zero():
            rem.pop(e - 4, None)
        else:
            rem[e - 4] = s
    if rem:
        return None
    return {e + m + 2: c for e, c in quo.items() if not c.is_zero()}


class LaurentScalar:
    """Laurent polynomial in s = q^(1/2) over a power of delta = q - q^(-1).

    ``coeffs`` maps the exponent of s to a GaussianRational; ``dpow`` is
    the power of delta in the denominator.  Construction normalizes by
    cancelling delta factors, so equality is structural.
    """

    __slots__ = ("coeffs", "dpow")

    def __init__(self, coeffs=None, dpow=0):
        coeffs = {e: c for e, c in (coeffs or {}).items() if not c.is_zero()}
        if not coeffs:
            dpow = 0
        while dpow > 0:
            reduced = _poly_div_delta(coeffs)
            if reduced is None:
                break
            coeffs = reduced
            dpow -= 1
        self.coeffs = coeffs
        self.dpow = dpow

    # -- constructors ------------------------------------------------

    @staticmethod
    def zero():
        return LaurentScalar({})

    @staticmethod
    def one():
        return LaurentScalar({0: _GR_ONE})

    @staticmethod
    def from_rational(re, im=0):
        return LaurentScalar({0: GaussianRational(re, im)})

    @staticmethod
    def imag_unit():
        return LaurentScalar({0: GaussianRational(0, 1)})

    @staticmethod
    def s_pow(k, coeff=1):
        """coeff * s^k, i.e. coeff * q^(k/2)."""
        return LaurentScalar({k: GaussianRational(coeff)})

    @staticmethod
    def q_pow(k, coeff=1):
        """coeff * q^k."""
        return LaurentScalar({2 * k: GaussianRational(coeff)})

    @staticmethod
    def delta_inv():
        """1 / (q - q^(-1))."""
        return LaurentScalar({0: _GR_ONE}, dpow=1)

    # -- ring operations ---------------------------------------------

    def __add__(self, other):
        if self.dpow == other.dpow:
            return LaurentScalar(_poly_add(self.coeffs, other.coeffs), self.dpow)
        hi, lo = (self, other) if self.dpow > other.dpow else (other, self)
        scaled = lo.coeffs
        for _ in range(hi.dpow - lo.dpow):
            scaled = _poly_mul(scaled, _DELTA)
        return LaurentScalar(_poly_add(hi.coeffs, scaled), hi.dpow)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return LaurentScalar({e: -c for e, c in self.coeffs.items()}, self.dpow)

    def __mul__(self, other):
        return LaurentScalar(
            _poly_mul(self.coeffs, other.coeffs), self.dpow + other.dpow
        )

    def conj(self):
        """Complex conjugation; s (hence q) is real and fixed."""
        return LaurentScalar(
            {e: c.conj() for e, c in self.coeffs.items()}, self.dpow
        )

    def is_zero(self):
        return not self.coeffs

    def __eq__(self, other):
        if not isinstance(other, LaurentScalar):
            return NotImplemented
        return self.dpow == other.dpow and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.dpow, frozenset(self.coeffs.items())))

    def eval(self, q):
        """Numeric value at a given q in (0, 1)."""
        if not 0 < q < 1:
            raise ValueError(f"q must lie in (0, 1), got {q}")
        s = math.sqrt(q)
        val = sum(complex(c) * s**e for e, c in self.coeffs.items())
        if self.dpow:
            val /= (q - 1 / q) ** self.dpow
        return val

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = [f"{c!r}*s^{e}" if e else repr(c)
                 for e, c in sorted(self.coeffs.items())]
        body = " + ".join(parts)
        return f"({body})/delta^{self.dpow}" if self.dpow else body


ZERO = LaurentScalar.zero()
ONE = LaurentScalar.one()
