"""Exact truncated q-series with fractional exponents on a declared scale.

A QSeries stores sparse integer coefficients keyed by an integer index k;
index k encodes the monomial q^(k/scale).  Every series carries an explicit
precision bound B (a Fraction): coefficients of all exponents strictly below
B are exact, nothing is claimed at or beyond B.
"""

from __future__ import annotations

import json
from fractions import Fraction
from math import gcd


class InsufficientPrecision(ValueError):
    pass


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


class QSeries:
    __slots__ = ("scale", "coeffs", "precision")

    def __init__(self, scale: int, coeffs: dict, precision):
        if scale <= 0:
            raise ValueError("scale must be positive")
        bound = _as_fraction(precision)
        clean = {}
        for k, c in coeffs.items():
            if c == 0:
                continue
            if k < 0:
                raise ValueError("negative exponents are not supported")
            if Fraction(k, scale) >= bound:
                continue
            clean[k] = c
        self.scale = scale
        self.coeffs = clean
        self.precision = bound

    # -- constructors --------------------------------------------------------
    @classmethod
    def zero(cls, precision, scale: int = 1) -> "QSeries":
        return cls(scale, {}, precision)

    @classmethod
    def one(cls, precision, scale: int = 1) -> "QSeries":
        return cls(scale, {0: 1}, precision)

    @classmethod
    def constant(cls, c: int, precision, scale: int = 1) -> "QSeries":
        return cls(scale, {0: c}, precision)

    # -- views ----------------------------------------------------------------
    def coefficient(self, exponent) -> int:
        """Exact coefficient of q^exponent; exponent must be below precision."""
        e = _as_fraction(exponent)
        if e >= self.precision:
            raise InsufficientPrecision(f"exponent {e} >= precision {self.precision}")
        k = e * self.scale
        if k.denominator != 1:
            return 0
        return self.coeffs.get(int(k), 0)

    def terms(self):
        """Sorted list of (exponent Fraction, coefficient)."""
        return [(Fraction(k, self.scale), c) for k, c in sorted(self.coeffs.items())]

    def rescaled(self, new_scale: int) -> "QSeries":
        if new_scale % self.scale:
            raise ValueError("new scale must be a multiple of the old one")
        m = new_scale // self.scale
        return QSeries(new_scale, {k * m: c for k, c in self.coeffs.items()},
                       self.precision)

    def normalized(self) -> "QSeries":
        """Reduce the scale by the gcd of all indices and the scale."""
        g = self.scale
        for k in self.coeffs:
            g = gcd(g, k)
            if g == 1:
                return self
        if g == self.scale and not self.coeffs:
            return QSeries(1, {}, self.precision)
        return QSeries(self.scale // g, {k // g: c for k, c in self.coeffs.items()},
                       self.precision)

    def is_integral(self) -> bool:
        return all(k % self.scale == 0 for k in self.coeffs)

    def to_integer_scale(self) -> "QSeries":
        """Rewrite on scale 1; raises if any exponent is non-integral."""
        if not self.is_integral():
            raise ValueError("series has non-integral exponents")
        return QSeries(1, {k // self.scale: c for k, c in self.coeffs.items()},
                       self.precision)

    # -- arithmetic -------------------------------------------------------------
    def _common(self, other: "QSeries"):
        s = self.scale * other.scale // gcd(self.scale, other.scale)
        return self.rescaled(s), other.rescaled(s), s

    def __add__(self, other: "QSeries") -> "QSeries":
        a, b, s = self._common(other)
        out = dict(a.coeffs)
        for k, c in b.coeffs.items():
            out[k] = out.get(k, 0) + c
        return QSeries(s, out, min(a.precision, b.precision))

    def __sub__(self, other: "QSeries") -> "QSeries":
        a, b, s = self._common(other)
        out = dict(a.coeffs)
        for k, c in b.coeffs.items():
            out[k] = out.get(k, 0) - c
        return QSeries(s, out, min(a.precision, b.precision))

    def __mul__(self, other: "QSeries") -> "QSeries":
        a, b, s = self._common(other)
        bound = min(a.precision, b.precision)
        kmax = bound * s  # exclusive bound on indices
        out = {}
        small, large = (a.coeffs, b.coeffs) if len(a.coeffs) <= len(b.coeffs) \
            else (b.coeffs, a.coeffs)
        large_items = sorted(large.items())
        for k1, c1 in small.items():
            for k2, c2 in large_items:
                k = k1 + k2
                if k >= kmax:
                    break
                out[k] = out.get(k, 0) + c1 * c2
        return QSeries(s, out, bound)

    def scalar_mul(self, c: int) -> "QSeries":
        return QSeries(self.scale, {k: c * v for k, v in self.coeffs.items()},
                       self.precision)

    def substitute_power(self, m: int) -> "QSeries":
        """q -> q^m: exponents and precision scale by m."""
        if m <= 0:
            raise ValueError("m must be positive")
        return QSeries(self.scale, {k * m: c for k, c in self.coeffs.items()},
                       self.precision * m)

    def truncate(self, precision) -> "QSeries":
        bound = _as_fraction(precision)
        if bound > self.precision:
            raise InsufficientPrecision(
                f"cannot extend precision {self.precision} to {bound}")
        return QSeries(self.scale, self.coeffs, bound)

    def equal_to(self, other: "QSeries", bound) -> bool:
        """True iff coefficients agree for every exponent < bound."""
        b = _as_fraction(bound)
        if b > self.precision or b > other.precision:
            raise InsufficientPrecision(
                f"bound {b} exceeds precision {min(self.precision, other.precision)}")
        a, o, s = self._common(other)
        kmax = b * s
        keys = set(a.coeffs) | set(o.coeffs)
        for k in keys:
            if k < kmax and a.coeffs.get(k, 0) != o.coeffs.get(k, 0):
                return False
        return True

    def first_difference(self, other: "QSeries", bound):
        """Smallest exponent < bound where the two series differ, or None."""
        b = _as_fraction(bound)
        a, o, s = self._common(other)
        kmax = b * s
        diffs = [k for k in set(a.coeffs) | set(o.coeffs)
                 if k < kmax and a.coeffs.get(k, 0) != o.coeffs.get(k, 0)]
        if not diffs:
            return None
        return Fraction(min(diffs), s)

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        a = self.normalized()
        b = other.normalized()
        return (a.scale == b.scale and a.coeffs == b.coeffs
                and a.precision == b.precision)

    def __hash__(self):
        a = self.normalized()
        return hash((a.scale, tuple(sorted(a.coeffs.items())), a.precision))

    def __repr__(self):
        parts = []
        for k, c in sorted(self.coeffs.items())[:8]:
            e = Fraction(k, self.scale)
            parts.append(f"{c}*q^{e}" if e else f"{c}")
        more = " + ..." if len(self.coeffs) > 8 else ""
        body = " + ".join(parts) if parts else "0"
        return f"QSeries({body}{more}; B={self.precision})"

    # -- JSON interchange ---------------------------------------------------
    def to_json_dict(self) -> dict:
        s = self.normalized()
        prec = s.precision
        return {
            "scale": s.scale,
            "precision": f"{prec.numerator}/{prec.denominator}",
            "terms": [[k, c] for k, c in sorted(s.coeffs.items())],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    @classmethod
    def from_json_dict(cls, data: dict) -> "QSeries":
        num, den = data["precision"].split("/")
        return cls(int(data["scale"]),
                   {int(k): int(c) for k, c in data["terms"]},
                   Fraction(int(num), int(den)))


def power(base: QSeries, e: int) -> QSeries:
    """base**e by repeated squaring (e >= 0)."""
    if e < 0:
        raise ValueError("negative powers are not supported")
    result = QSeries.one(base.precision, base.scale)
    acc = base
    while e:
        if e & 1:
            result = result * acc
        e >>= 1
        if e:
            acc = acc * acc
    return result
