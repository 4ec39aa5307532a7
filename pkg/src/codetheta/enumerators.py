"""Complete and symmetric weight enumerators as sparse exponent maps.

Variable ordering follows r_{a+pb+1} = a - b*w for the complete enumerator
(p^2 variables) and the Klein-orbit table for the symmetric one.
"""

from __future__ import annotations

import json

from .arith import elem_to_label, label_variable_index, orbit_table, var_names
from .qseries import QSeries, power


class ArityMismatch(ValueError):
    pass


class WeightEnumerator:
    __slots__ = ("variable_count", "degree", "terms")

    def __init__(self, variable_count: int, degree: int, terms: dict):
        clean = {}
        for ev, c in terms.items():
            if c == 0:
                continue
            if len(ev) != variable_count or sum(ev) != degree:
                raise ValueError(f"bad exponent vector {ev} for degree {degree}")
            clean[tuple(ev)] = c
        self.variable_count = variable_count
        self.degree = degree
        self.terms = clean

    def items(self):
        return sorted(self.terms.items())

    def coefficient_sum(self) -> int:
        return sum(self.terms.values())

    def __eq__(self, other):
        if not isinstance(other, WeightEnumerator):
            return NotImplemented
        return (self.variable_count == other.variable_count
                and self.degree == other.degree and self.terms == other.terms)

    def __hash__(self):
        return hash((self.variable_count, self.degree,
                     tuple(sorted(self.terms.items()))))

    def key(self):
        return tuple(sorted(self.terms.items()))

    def __mul__(self, other: "WeightEnumerator") -> "WeightEnumerator":
        if self.variable_count != other.variable_count:
            raise ArityMismatch("variable counts differ")
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return WeightEnumerator(self.variable_count,
                                self.degree + other.degree, out)

    def __add__(self, other: "WeightEnumerator") -> "WeightEnumerator":
        if (self.variable_count != other.variable_count
                or self.degree != other.degree):
            raise ArityMismatch("cannot add enumerators of different shape")
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return WeightEnumerator(self.variable_count, self.degree, out)

    def __repr__(self):
        return f"WeightEnumerator({self.pretty()})"

    def pretty(self, p: int | None = None) -> str:
        """Render with X,Y,Z,W (p=2,3) or X1..Xk names."""
        names = var_names(p if p is not None else 0, self.variable_count) \
            if p is not None else [f"z{i+1}" for i in range(self.variable_count)]
        if not self.terms:
            return "0"
        parts = []
        for ev, c in sorted(self.terms.items(), reverse=True):
            mono = "".join(
                f"{names[i]}" + (f"^{e}" if e > 1 else "")
                for i, e in enumerate(ev) if e)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"{c}{mono}")
        return " + ".join(parts)

    def to_json_dict(self) -> dict:
        return {"vars": self.variable_count, "degree": self.degree,
                "terms": [[list(ev), c] for ev, c in self.items()]}

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    @classmethod
    def from_json_dict(cls, data: dict) -> "WeightEnumerator":
        return cls(data["vars"], data["degree"],
                   {tuple(ev): c for ev, c in data["terms"]})


def monomial(variable_count: int, exponents, coeff: int = 1) -> WeightEnumerator:
    ev = tuple(exponents)
    return WeightEnumerator(variable_count, sum(ev), {ev: coeff})


def cwe(code) -> WeightEnumerator:
    """Complete weight enumerator: one variable per ring element r_{a+pb+1}."""
    p = code.ctx.p
    k = p * p
    terms: dict = {}
    for word in code.words:
        counts = [0] * k
        for x in word:
            a, b = elem_to_label(x, p)
            counts[a + p * b] += 1
        ev = tuple(counts)
        terms[ev] = terms.get(ev, 0) + 1
    return WeightEnumerator(k, code.n, terms)


def symmetrize(w: WeightEnumerator, p: int) -> WeightEnumerator:
    """Merge complete-enumerator variables along Klein orbits of their labels."""
    if w.variable_count != p * p:
        raise ArityMismatch(f"expected {p*p} variables, got {w.variable_count}")
    var_of = label_variable_index(p)
    nvars = len(orbit_table(p))
    merged: dict = {}
    for ev, c in w.terms.items():
        out = [0] * nvars
        for idx, e in enumerate(ev):
            if e:
                a, b = idx % p, idx // p
                out[var_of[(a, b)]] += e
        key = tuple(out)
        merged[key] = merged.get(key, 0) + c
    return WeightEnumerator(nvars, w.degree, merged)


def swe(code) -> WeightEnumerator:
    return symmetrize(cwe(code), code.ctx.p)


def evaluate(w: WeightEnumerator, args: list[QSeries]) -> QSeries:
    """Evaluate the enumerator at a list of series (one per variable)."""
    if len(args) != w.variable_count:
        raise ArityMismatch(
            f"enumerator takes {w.variable_count} series, got {len(args)}")
    if not w.terms:
        prec = min(a.precision for a in args) if args else 0
        return QSeries.zero(prec)
    pow_cache: dict = {}

    def arg_power(i, e):
        key = (i, e)
        if key not in pow_cache:
            pow_cache[key] = power(args[i], e)
        return pow_cache[key]

    total = None
    for ev, c in w.terms.items():
        term = None
        for i, e in enumerate(ev):
            if not e:
                continue
            factor = arg_power(i, e)
            term = factor if term is None else term * factor
        if term is None:  # degree-0 enumerator
            prec = min(a.precision for a in args)
            term = QSeries.one(prec)
        term = term.scalar_mul(c)
        total = term if total is None else total + term
    return total


def poly_identity_check(lhs: WeightEnumerator, rhs: WeightEnumerator,
                        p: int, level, precision) -> bool:
    """True iff both sides evaluate identically at the level's orbit series."""
    from .theta import orbit_series
    if (lhs.variable_count != rhs.variable_count
            or lhs.degree != rhs.degree):
        raise ArityMismatch("enumerators have different shapes")
    args = orbit_series(level, p, precision)
    return evaluate(lhs, args).equal_to(evaluate(rhs, args), precision)


def parse_poly(text: str, p: int, variable_count: int, degree: int) -> WeightEnumerator:
    """Parse 'X^2 + Y^2 + 2Z^2' / 'X1^2 + 8X3X5' style polynomials."""
    import re
    names = var_names(p, variable_count)
    index = {nm: i for i, nm in enumerate(names)}
    # longest names first so X1 is not read as X followed by 1
    name_pat = "|".join(sorted(map(re.escape, names), key=len, reverse=True))
    term_pat = re.compile(
        rf"([+-]?\s*\d*)\s*((?:(?:{name_pat})(?:\^\d+)?)*)")
    var_pat = re.compile(rf"({name_pat})(?:\^(\d+))?")
    terms: dict = {}
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = term_pat.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial at: {text[pos:pos+20]!r}")
        coef_txt = m.group(1).replace(" ", "")
        if coef_txt in ("", "+"):
            coef = 1
        elif coef_txt == "-":
            coef = -1
        else:
            coef = int(coef_txt)
        ev = [0] * variable_count
        for vm in var_pat.finditer(m.group(2)):
            ev[index[vm.group(1)]] += int(vm.group(2) or 1)
        key = tuple(ev)
        terms[key] = terms.get(key, 0) + coef
        pos = m.end()
        while pos < len(text) and text[pos] in " \t\n":
            pos += 1
    return WeightEnumerator(variable_count, degree, terms)
