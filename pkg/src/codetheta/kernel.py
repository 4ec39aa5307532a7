"""The monomial-theta matrix M_{ell,n}: exact rank, nullity, and integer
kernel bases.

Columns are the theta series of the degree-n monomials in the symmetric
enumerator variables, truncated at q^T.  Rank is certified exactly: a
nonzero r x r minor modulo a prime bounds the rank from below, and
explicitly verified integer kernel vectors bound it from above, so the
reported rank/nullity never depends on modular luck.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement
from math import gcd

from .arith import Level, orbit_table
from .qseries import QSeries
from .theta import orbit_series


class EmptyKernel(ValueError):
    pass


class BudgetExceeded(RuntimeError):
    pass


def monomials_graded_lex(n: int, k: int):
    """Exponent vectors of degree n in k variables, graded-lex order
    (all monomials share degree n; lex descending on exponent vectors)."""
    out = []
    for combo in combinations_with_replacement(range(k), n):
        ev = [0] * k
        for i in combo:
            ev[i] += 1
        out.append(tuple(ev))
    out.sort(reverse=True)
    return out


# -- dense truncated products via integer packing -----------------------------

def _pack(coeffs: list[int], width: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = (acc << width) | c
    return acc


def _unpack(value: int, width: int, count: int) -> list[int]:
    mask = (1 << width) - 1
    out = []
    for _ in range(count):
        out.append(value & mask)
        value >>= width
    return out


def dense_mul(a: list[int], b: list[int], trunc: int) -> list[int]:
    """Truncated product of dense nonnegative-coefficient polynomials.

    Packs both into big integers so CPython's fast multiplication does the
    convolution; width is chosen so no limb overflows.
    """
    la, lb = min(len(a), trunc), min(len(b), trunc)
    if la == 0 or lb == 0:
        return [0] * trunc
    ma = max(a[:la])
    mb = max(b[:lb])
    if ma == 0 or mb == 0:
        return [0] * trunc
    width = (ma.bit_length() + mb.bit_length()
             + (min(la, lb)).bit_length() + 1)
    prod = _pack(a[:la], width) * _pack(b[:lb], width)
    out = _unpack(prod, width, trunc)
    return out


def _series_to_dense(s: QSeries, trunc: int) -> list[int]:
    if s.scale != 1:
        s = s.to_integer_scale()
    out = [0] * trunc
    for k, c in s.coeffs.items():
        if k < trunc:
            out[k] = c
    return out


@dataclass
class ThetaMatrix:
    p: int
    level: Level
    n: int
    truncation: int
    monomials: list
    columns: list  # list of dense coefficient lists, rows 0..T

    @property
    def nrows(self):
        return self.truncation + 1

    @property
    def ncols(self):
        return len(self.columns)

    def rows(self):
        return [[col[r] for col in self.columns] for r in range(self.nrows)]

    def column_multiset(self):
        return sorted(tuple(col) for col in self.columns)


def build_matrix(p: int, level: Level, n: int, truncation: int) -> ThetaMatrix:
    """M_{ell,n}: rows = coefficients of q^0..q^T, columns = monomials in
    graded-lex order."""
    k = len(orbit_table(p))
    trunc = truncation + 1
    base = [_series_to_dense(s, trunc)
            for s in orbit_series(level, p, trunc)]
    monos = monomials_graded_lex(n, k)
    cache: dict = {}
    one = [0] * trunc
    one[0] = 1
    cache[tuple([0] * k)] = one

    def series_for(ev):
        hit = cache.get(ev)
        if hit is not None:
            return hit
        # strip one factor: largest-index variable present
        i = max(idx for idx, e in enumerate(ev) if e)
        prev = list(ev)
        prev[i] -= 1
        result = dense_mul(series_for(tuple(prev)), base[i], trunc)
        cache[ev] = result
        return result

    cols = [series_for(ev) for ev in monos]
    return ThetaMatrix(p, level, n, truncation, monos, cols)


@dataclass
class KernelReport:
    p: int
    ell: int
    n: int
    truncation: int
    rank: int
    nullity: int
    kernel_basis: list  # list of integer tuples over the monomial columns
    monomials: list
    stabilized: bool = False
    truncations_tried: list = field(default_factory=list)

    def to_json_dict(self) -> dict:
        return {
            "p": self.p, "ell": self.ell, "n": self.n,
            "truncation": self.truncation,
            "rank": self.rank, "nullity": self.nullity,
            "stabilized": self.stabilized,
            "truncations_tried": list(self.truncations_tried),
            "monomials": [list(ev) for ev in self.monomials],
            "kernel_basis": [list(v) for v in self.kernel_basis],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())


_PRIMES = (2147483647, 2147483629, 2147483587, 2147483579,
           2147483563, 2147483549)


def _mod_echelon(rows: list[list[int]], q: int):
    """Reduced row echelon form mod q; returns (pivot_cols, reduced rows).

    Entries stay below q < 2^31 so the int64 products never overflow.
    """
    import numpy as np
    m = np.array([[x % q for x in row] for row in rows], dtype=np.int64)
    nrows, ncols = m.shape
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(m[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            m[[r, piv]] = m[[piv, r]]
        inv = pow(int(m[r, c]), q - 2, q)
        m[r] = (m[r] * inv) % q
        col = m[:, c].copy()
        col[r] = 0
        hot = np.nonzero(col)[0]
        if hot.size:
            m[hot] = (m[hot] - col[hot, None] * m[r][None, :]) % q
        pivots.append(c)
        r += 1
    return pivots, [[int(x) for x in m[i]] for i in range(r)]


def _rational_reconstruct(a: int, q: int):
    """Rational number n/d = a mod q with |n|, d <= sqrt(q/2), via the
    extended Euclid wayfarer; returns None if no such fraction exists."""
    bound = int((q // 2) ** 0.5)
    r0, r1 = q, a % q
    s0, s1 = 0, 1
    while r1 > bound:
        k = r0 // r1
        r0, r1 = r1, r0 - k * r1
        s0, s1 = s1, s0 - k * s1
    if abs(s1) > bound or s1 == 0:
        return None
    return Fraction(r1, s1)


def _crt_pair(a1, q1, a2, q2):
    inv = pow(q1 % q2, q2 - 2, q2)
    t = ((a2 - a1) * inv) % q2
    return a1 + q1 * t, q1 * q2


def _verify_kernel_vector(matrix: ThetaMatrix, vec) -> bool:
    for row_idx in range(matrix.nrows):
        s = 0
        for c, val in enumerate(vec):
            if val:
                s += val * matrix.columns[c][row_idx]
        if s != 0:
            return False
    return True


def _basis_from_rref(matrix: ThetaMatrix, pivots, reduced_rows, modulus):
    """Integer kernel basis from a reduced echelon form mod `modulus`,
    via rational reconstruction; verified exactly over Z.  None on failure."""
    ncols = matrix.ncols
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for fc in free:
        num = [Fraction(0)] * ncols
        num[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            a = reduced_rows[r][fc]
            if a == 0:
                continue
            rec = _rational_reconstruct((-a) % modulus, modulus)
            if rec is None:
                return None
            num[pc] = rec
        den = 1
        for x in num:
            den = den * x.denominator // gcd(den, x.denominator)
        vec = [int(x * den) for x in num]
        g = 0
        for x in vec:
            g = gcd(g, x)
        if g > 1:
            vec = [x // g for x in vec]
        if not _verify_kernel_vector(matrix, vec):
            return None
        basis.append(tuple(vec))
    return basis


def _fraction_rref_kernel(matrix: ThetaMatrix, rows):
    """Definitive fallback: exact reduced echelon form over Q."""
    work = [[Fraction(x) for x in row] for row in rows]
    ncols = matrix.ncols
    pivots = []
    r = 0
    for c in range(ncols):
        if r == len(work):
            break
        piv = next((i for i in range(r, len(work)) if work[i][c]), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        inv = 1 / work[r][c]
        work[r] = [x * inv for x in work[r]]
        for i in range(len(work)):
            if i != r and work[i][c]:
                f = work[i][c]
                work[i] = [a - f * b for a, b in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for fc in free:
        num = [Fraction(0)] * ncols
        num[fc] = Fraction(1)
        for rr, pc in enumerate(pivots):
            num[pc] = -work[rr][fc]
        den = 1
        for x in num:
            den = den * x.denominator // gcd(den, x.denominator)
        vec = [int(x * den) for x in num]
        g = 0
        for x in vec:
            g = gcd(g, x)
        if g > 1:
            vec = [x // g for x in vec]
        if not _verify_kernel_vector(matrix, vec):
            raise AssertionError("exact elimination produced a bad kernel vector")
        basis.append(tuple(vec))
    return len(pivots), basis


def exact_nullity(matrix: ThetaMatrix) -> KernelReport:
    """Exact rank/nullity over Q with an integer kernel basis.

    Fast path: elimination modulo 31-bit primes (a nonzero r x r minor mod q
    gives rank >= r) with kernel vectors reconstructed via CRT and verified
    exactly over Z (giving rank <= r).  If reconstruction fails, falls back
    to exact rational elimination.
    """
    rows = [row for row in matrix.rows() if any(row)]
    ncols = matrix.ncols
    if not rows:
        basis = []
        for c in range(ncols):
            v = [0] * ncols
            v[c] = 1
            basis.append(tuple(v))
        return KernelReport(matrix.p, matrix.level.ell, matrix.n,
                            matrix.truncation, 0, ncols, basis,
                            matrix.monomials)
    combined = None  # (pivots, entries mod M, M)
    for q in _PRIMES:
        pivots, reduced = _mod_echelon(rows, q)
        if combined is None or len(pivots) > len(combined[0]):
            combined = (pivots, reduced, q)
        elif len(pivots) == len(combined[0]) and pivots == combined[0]:
            prev_pivots, prev_rows, prev_mod = combined
            merged = [[_crt_pair(a, prev_mod, b, q)[0]
                       for a, b in zip(ra, rb)]
                      for ra, rb in zip(prev_rows, reduced)]
            combined = (pivots, merged, prev_mod * q)
        basis = _basis_from_rref(matrix, *combined)
        if basis is not None:
            rank = len(combined[0])
            return KernelReport(matrix.p, matrix.level.ell, matrix.n,
                                matrix.truncation, rank,
                                ncols - rank, basis, matrix.monomials)
    rank, basis = _fraction_rref_kernel(matrix, rows)
    return KernelReport(matrix.p, matrix.level.ell, matrix.n,
                        matrix.truncation, rank, ncols - rank, basis,
                        matrix.monomials)


def default_truncation(level: Level, n: int) -> int:
    return max(17, 4 * n + level.ell)


def stabilized_nullity(p: int, level: Level, n: int,
                       ceiling: int = 2048) -> KernelReport:
    """Nullity at T0 = max(17, 4n + ell), doubling T until the value is
    unchanged across two consecutive doublings.  A nullity of zero is
    already stable (extra rows only add constraints)."""
    t = default_truncation(level, n)
    tried = []
    report = exact_nullity(build_matrix(p, level, n, t))
    tried.append(t)
    stable_steps = 0
    while stable_steps < 2 and report.nullity > 0:
        if 2 * t > ceiling:
            raise BudgetExceeded(
                f"truncation {2 * t} exceeds ceiling {ceiling}")
        t *= 2
        nxt = exact_nullity(build_matrix(p, level, n, t))
        tried.append(t)
        if nxt.nullity > report.nullity:
            raise AssertionError("nullity increased with more rows")
        stable_steps = stable_steps + 1 if nxt.nullity == report.nullity else 0
        report = nxt
    report.stabilized = True
    report.truncations_tried = tried
    return report


def kernel_to_relation(report: KernelReport, index: int = 0):
    """Split a kernel vector into its positive and negative parts, rendered
    as a pair of enumerators with positive coefficients."""
    from .enumerators import WeightEnumerator
    if report.nullity < 1 or not report.kernel_basis:
        raise EmptyKernel("kernel is trivial")
    vec = report.kernel_basis[index]
    k = len(report.monomials[0])
    lhs = {}
    rhs = {}
    for ev, c in zip(report.monomials, vec):
        if c > 0:
            lhs[tuple(ev)] = c
        elif c < 0:
            rhs[tuple(ev)] = -c
    return (WeightEnumerator(k, report.n, lhs),
            WeightEnumerator(k, report.n, rhs))


def nullity_table(p: int, ells, ns, ceiling: int = 2048):
    """Rows = n, columns = ell; entries via stabilized_nullity."""
    table = {}
    for ell in ells:
        level = Level(ell)
        for n in ns:
            table[(n, ell)] = stabilized_nullity(p, level, n, ceiling)
    return table


def nullity_table_csv(p: int, ells, ns, ceiling: int = 2048) -> str:
    table = nullity_table(p, ells, ns, ceiling)
    lines = ["n\\ell," + ",".join(str(e) for e in ells)]
    for n in ns:
        lines.append(str(n) + "," +
                     ",".join(str(table[(n, e)].nullity) for e in ells))
    return "\n".join(lines) + "\n"
