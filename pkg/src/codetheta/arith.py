"""Arithmetic of the quotient rings O_K/pO_K for K = Q(sqrt(-ell)).

For square-free ell = 4d - 1 the ring of integers of K is Z[w] with
w^2 + w + d = 0.  Reducing mod a prime p (p not dividing ell) gives a ring
R = {a + b*w : a, b in F_p} which is either F_p x F_p (split) or F_{p^2}
(field), decided by the Legendre symbol of -ell mod p (by ell mod 8 when
p = 2).

Ring elements are plain pairs (a, b) meaning a + b*w; all operations live
on a RingContext so element values stay cheap and hashable.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache


class AdmissibilityError(ValueError):
    pass


class NotSquareFree(AdmissibilityError):
    pass


class NotThreeMod4(AdmissibilityError):
    pass


class PDividesEll(AdmissibilityError):
    pass


def is_squarefree(n: int) -> bool:
    if n <= 0:
        return False
    if n % 4 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % (f * f) == 0:
            return False
        f += 2
    return True


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) for odd prime p, by Euler's criterion."""
    a %= p
    if a == 0:
        return 0
    r = pow(a, (p - 1) // 2, p)
    return 1 if r == 1 else -1


@dataclass(frozen=True)
class Level:
    """A level ell = 4d - 1 congruent to 3 mod 4.

    Square-freeness is *not* enforced here: the nullity tables in the
    literature include ell = 27 = 3^3, where all formulas below still make
    sense formally.  check_admissible() applies the strict gate.
    """

    ell: int

    def __post_init__(self):
        if self.ell <= 0 or self.ell % 4 != 3:
            raise NotThreeMod4(f"ell = {self.ell} is not a positive integer = 3 mod 4")

    @property
    def d(self) -> int:
        return (self.ell + 1) // 4

    @property
    def squarefree(self) -> bool:
        return is_squarefree(self.ell)


class RingKind(Enum):
    SPLIT = "split"   # F_p x F_p
    FIELD = "field"   # F_{p^2}


Element = tuple  # (a, b) with 0 <= a, b < p, meaning a + b*w


class RingContext:
    """R = F_p[w]/(w^2 + w + d) with d taken mod p."""

    def __init__(self, p: int, d: int):
        if not is_prime(p):
            raise ValueError(f"p = {p} is not prime")
        self.p = p
        self.d_mod_p = d % p
        self.kind = self._classify(p, self.d_mod_p)

    @staticmethod
    def _classify(p: int, d: int) -> RingKind:
        # discriminant of x^2 + x + d is 1 - 4d = -ell mod p
        if p == 2:
            # d even <=> ell = 7 mod 8 <=> w^2 = w: split
            return RingKind.SPLIT if d % 2 == 0 else RingKind.FIELD
        disc = (1 - 4 * d) % p
        return RingKind.SPLIT if legendre(disc, p) == 1 else RingKind.FIELD

    # -- element arithmetic ------------------------------------------------
    def add(self, x: Element, y: Element) -> Element:
        p = self.p
        return ((x[0] + y[0]) % p, (x[1] + y[1]) % p)

    def neg(self, x: Element) -> Element:
        p = self.p
        return ((-x[0]) % p, (-x[1]) % p)

    def sub(self, x: Element, y: Element) -> Element:
        p = self.p
        return ((x[0] - y[0]) % p, (x[1] - y[1]) % p)

    def mul(self, x: Element, y: Element) -> Element:
        # (a1 + b1 w)(a2 + b2 w) with w^2 = -w - d
        a1, b1 = x
        a2, b2 = y
        p = self.p
        return ((a1 * a2 - self.d_mod_p * b1 * b2) % p,
                (a1 * b2 + a2 * b1 - b1 * b2) % p)

    def conj(self, x: Element) -> Element:
        # conj(a + b w) = (a - b) - b w
        a, b = x
        p = self.p
        return ((a - b) % p, (-b) % p)

    def norm(self, x: Element) -> int:
        """N(x) = x * conj(x), an element of F_p."""
        return self.mul(x, self.conj(x))[0]

    def is_unit(self, x: Element) -> bool:
        return self.norm(x) != 0

    def elements(self):
        return [(a, b) for b in range(self.p) for a in range(self.p)]

    @property
    def zero(self) -> Element:
        return (0, 0)

    @property
    def one(self) -> Element:
        return (1, 0)

    def scalar(self, c: int) -> Element:
        return (c % self.p, 0)

    def __repr__(self):
        return f"RingContext(p={self.p}, d={self.d_mod_p}, {self.kind.value})"

    def __eq__(self, other):
        return (isinstance(other, RingContext)
                and (self.p, self.d_mod_p) == (other.p, other.d_mod_p))

    def __hash__(self):
        return hash((self.p, self.d_mod_p))


def check_admissible(p: int, ell: int) -> tuple[Level, RingContext]:
    """Validate (p, ell) and build the quotient ring.

    Raises NotThreeMod4 / NotSquareFree / PDividesEll.
    """
    level = Level(ell)
    if not level.squarefree:
        raise NotSquareFree(f"ell = {ell} is not square-free")
    if ell % p == 0:
        raise PDividesEll(f"p = {p} divides ell = {ell}; the F_p + uF_p case is not supported")
    return level, RingContext(p, level.d)


def ring_for(p: int, ell: int) -> RingContext:
    """Ring context for a level, without the square-free gate."""
    level = Level(ell)
    if ell % p == 0:
        raise PDividesEll(f"p = {p} divides ell = {ell}")
    return RingContext(p, level.d)


# ---------------------------------------------------------------------------
# Coset labels and their Klein-four orbits.
#
# Label (a, b) names the coset a - b*w + pO_K.  The ring element a + b*w
# therefore carries label (a, -b mod p); elem_to_label owns that sign
# convention in one place.
# ---------------------------------------------------------------------------

def elem_to_label(x: Element, p: int) -> tuple[int, int]:
    return (x[0] % p, (-x[1]) % p)


def label_to_elem(label: tuple[int, int], p: int) -> Element:
    a, b = label
    return (a % p, (-b) % p)


def klein_orbit(label: tuple[int, int], p: int) -> tuple[tuple[int, int], ...]:
    """Orbit of (a, b) under (a,b), (-a-b,b), (-a,-b), (a+b,-b), sorted by (b, a)."""
    a, b = label[0] % p, label[1] % p
    orbit = {(a, b), ((-a - b) % p, b), ((-a) % p, (-b) % p), ((a + b) % p, (-b) % p)}
    return tuple(sorted(orbit, key=lambda t: (t[1], t[0])))


# Variable ordering used in the literature for the symmetric enumerators:
# p=2: X,Y,Z; p=3: X,Y,Z,W; p=5: X1..X9.  Listed as orbit representatives.
_PAPER_VAR_REPS = {
    2: [(0, 0), (1, 0), (0, 1)],
    3: [(0, 0), (1, 0), (0, 1), (1, 1)],
    5: [(0, 0), (1, 0), (0, 1), (1, 1), (0, 2),
        (2, 0), (2, 1), (1, 2), (1, 3)],
}

VAR_NAMES = {
    2: ["X", "Y", "Z"],
    3: ["X", "Y", "Z", "W"],
}


def var_names(p: int, count: int) -> list[str]:
    names = VAR_NAMES.get(p)
    if names is not None and len(names) == count:
        return names
    return [f"X{i+1}" for i in range(count)]


@lru_cache(maxsize=None)
def orbit_table(p: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    """Partition of (Z/p)^2 into Klein orbits, in the conventional order.

    For p in {2, 3, 5} the order matches the published variable lists;
    otherwise orbits are sorted by their (b, a)-least representative.
    """
    seen = set()
    orbits = []
    if p in _PAPER_VAR_REPS:
        for rep in _PAPER_VAR_REPS[p]:
            orb = klein_orbit(rep, p)
            if any(lab in seen for lab in orb):
                raise AssertionError("overlapping orbit representatives")
            seen.update(orb)
            orbits.append(orb)
        if len(seen) != p * p:
            raise AssertionError("orbit table does not cover (Z/p)^2")
        return tuple(orbits)
    for b in range(p):
        for a in range(p):
            if (a, b) in seen:
                continue
            orb = klein_orbit((a, b), p)
            seen.update(orb)
            orbits.append(orb)
    orbits.sort(key=lambda orb: (orb[0][1], orb[0][0]))
    return tuple(orbits)


@lru_cache(maxsize=None)
def label_variable_index(p: int) -> dict:
    """Map coset label -> index of its symmetric-enumerator variable."""
    out = {}
    for i, orb in enumerate(orbit_table(p)):
        for lab in orb:
            out[lab] = i
    return out


def orbit_representatives(p: int) -> list[tuple[int, int]]:
    """Canonical ((b, a)-least) representative of each orbit, in table order."""
    return [orb[0] for orb in orbit_table(p)]


def trace(ctx: RingContext, x: Element) -> int:
    """Tr(a + b w) = 2a - b mod p  (since w + conj(w) = -1)."""
    return (2 * x[0] - x[1]) % ctx.p
