"""Theta series: one-dimensional building blocks, coset series of
a - b*w + pO_K by two independent algorithms, and theta series of code
lattices (Construction A).
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction

from .arith import Level, klein_orbit, orbit_table
from .qseries import QSeries


class InternalScaleError(RuntimeError):
    pass


class GuardExceeded(ValueError):
    pass


def norm_form(d: int, x: int, y: int) -> int:
    """Q_d(x, y) = x^2 + x*y + d*y^2."""
    return x * x + x * y + d * y * y


def one_dim_theta(p: int, j: int, precision) -> QSeries:
    """Sum over n of q^((n + j/2p)^2), truncated below `precision`.

    Index scale is 4p^2: the exponent of the term for n is (2pn+j)^2/(4p^2).
    """
    if p < 1:
        raise ValueError("p must be >= 1")
    bound = Fraction(precision)
    scale = 4 * p * p
    kmax = bound * scale
    coeffs = {}
    # (2pn + j)^2 < kmax  <=>  |2pn + j| < sqrt(kmax)
    limit = math.isqrt(int(kmax)) + 2 * p + 1
    n = -(limit // (2 * p)) - 1
    while True:
        t = 2 * p * n + j
        if t > limit:
            break
        k = t * t
        if k < kmax:
            coeffs[k] = coeffs.get(k, 0) + 1
        n += 1
    return QSeries(scale, coeffs, bound)


def _coset_points(d: int, p: int, a: int, b: int, bound: int):
    """All (x, y) with x=a, y=b mod p and Q_d(x, y) < bound.

    Q_d(x,y) = (x + y/2)^2 + (ell/4) y^2 with ell = 4d - 1, so |y| is
    bounded by 2*sqrt(bound/ell) and x lies in an interval per y.
    """
    ell = 4 * d - 1
    ymax = math.isqrt((4 * bound) // ell) + 1
    y = -ymax
    # align y to b mod p
    y += (b - y) % p
    while y <= ymax:
        # x^2 + xy + (d y^2 - bound) < 0
        disc = y * y - 4 * (d * y * y - bound)
        if disc > 0:
            r = math.isqrt(disc)
            lo = (-y - r) // 2 - 1
            hi = (-y + r) // 2 + 1
            x = lo + (a - lo) % p
            while x <= hi:
                q = norm_form(d, x, y)
                if q < bound:
                    yield x, y, q
                x += p
        y += p


def coset_theta_direct(level: Level, p: int, label: tuple[int, int],
                       precision) -> QSeries:
    """Theta series of the coset a - b*w + pO_K by direct point enumeration."""
    bound = Fraction(precision)
    ibound = int(math.ceil(bound))
    a, b = label[0] % p, label[1] % p
    coeffs = {}
    for _x, _y, q in _coset_points(level.d, p, a, b, ibound):
        if q < bound:
            coeffs[q] = coeffs.get(q, 0) + 1
    return QSeries(1, coeffs, bound)


def coset_theta_factored(level: Level, p: int, label: tuple[int, int],
                         precision) -> QSeries:
    """Coset theta via the one-dimensional factorization:

    theta_{p,b}(q^{p^2 ell}) * theta_{p,2a+b}(q^{p^2})
      + theta_{p,b+p}(q^{p^2 ell}) * theta_{p,2a+b+p}(q^{p^2}).
    """
    bound = Fraction(precision)
    a, b = label[0] % p, label[1] % p
    ell = level.ell
    p2 = p * p
    # factors only need precision bound/p^2 resp. bound/(p^2 ell) before
    # substitution; build them directly at the substituted precision.
    inner = bound / p2
    inner_l = bound / (p2 * ell)
    t1 = one_dim_theta(p, b, inner_l).substitute_power(p2 * ell)
    t2 = one_dim_theta(p, 2 * a + b, inner).substitute_power(p2)
    t3 = one_dim_theta(p, b + p, inner_l).substitute_power(p2 * ell)
    t4 = one_dim_theta(p, 2 * a + b + p, inner).substitute_power(p2)
    total = (t1 * t2 + t3 * t4).truncate(bound)
    if not total.is_integral():
        raise InternalScaleError(
            "factored coset series has non-integral exponents")
    return total.to_integer_scale()


# -- memoized orbit-representative series -----------------------------------
_memo_lock = threading.Lock()
_memo: dict = {}


def coset_theta(level: Level, p: int, label: tuple[int, int], precision,
                method: str = "direct") -> QSeries:
    """Memoized coset theta series keyed by the orbit representative."""
    rep = klein_orbit(label, p)[0]
    bound = Fraction(precision)
    key = (p, level.ell, rep, bound, method)
    hit = _memo.get(key)
    if hit is not None:
        return hit
    if method == "direct":
        series = coset_theta_direct(level, p, rep, bound)
    elif method == "factored":
        series = coset_theta_factored(level, p, rep, bound)
    else:
        raise ValueError(f"unknown method {method!r}")
    with _memo_lock:
        return _memo.setdefault(key, series)


def clear_memo():
    with _memo_lock:
        _memo.clear()


def orbit_series(level: Level, p: int, precision, method: str = "direct"):
    """One series per symmetric-enumerator variable, in table order."""
    return [coset_theta(level, p, orb[0], precision, method)
            for orb in orbit_table(p)]


def all_label_series(level: Level, p: int, precision, method: str = "direct"):
    """Series for all p^2 coset labels, index a + p*b."""
    out = []
    for b in range(p):
        for a in range(p):
            out.append(coset_theta(level, p, (a, b), precision, method))
    return out


def code_theta(level: Level, code, precision, method: str = "direct") -> QSeries:
    """Theta series of the Construction-A lattice of a code.

    Evaluates the complete weight enumerator at the coset theta series.
    """
    from .enumerators import cwe, evaluate
    if code.ctx.d_mod_p != level.d % code.ctx.p:
        raise ValueError(
            f"code ring (d={code.ctx.d_mod_p} mod {code.ctx.p}) does not match "
            f"level ell={level.ell} (d={level.d})")
    w = cwe(code)
    args = all_label_series(level, code.ctx.p, precision, method)
    return evaluate(w, args)


_ORACLE_MAX_N = 3
_ORACLE_MAX_PRECISION = 40


def code_theta_oracle(level: Level, code, precision) -> QSeries:
    """Slow independent oracle: enumerate lattice vectors coordinate-wise.

    Walks all x in O_K^n with per-coordinate norms summing below the bound,
    keeps those whose reduction lies in the code.
    """
    bound = Fraction(precision)
    n = code.n
    p = code.ctx.p
    if n > _ORACLE_MAX_N or bound > _ORACLE_MAX_PRECISION:
        raise GuardExceeded(
            f"oracle limited to n <= {_ORACLE_MAX_N}, precision <= {_ORACLE_MAX_PRECISION}")
    ibound = int(math.ceil(bound))
    # each lattice coordinate u - v*w reduces to (u mod p) + (-v mod p)*w
    points = []  # (element, norm) for all one-dim points with norm < bound
    for u, v, q in _coset_points(level.d, 1, 0, 0, ibound):
        if q < bound:
            points.append(((u % p, (-v) % p), q))
    points.sort(key=lambda t: t[1])
    words = set(code.words)
    coeffs: dict = {}

    def walk(i, prefix, norm):
        if i == n:
            if tuple(prefix) in words:
                coeffs[norm] = coeffs.get(norm, 0) + 1
            return
        for elem, q in points:
            total = norm + q
            if total >= bound:
                break
            prefix.append(elem)
            walk(i + 1, prefix, total)
            prefix.pop()

    walk(0, [], 0)
    return QSeries(1, coeffs, bound)
