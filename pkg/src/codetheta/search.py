"""Enumeration of the generator family C(a1, a2, v), grouping by symmetric
enumerator and by truncated theta series, count tables, and collision
reports."""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from enum import Enum

from .arith import Level, RingContext, ring_for
from .codes import (GuardExceeded, SpanKind, dual_for, make_code, span_of,
                    word_add, word_scale)
from .enumerators import evaluate, swe
from .theta import orbit_series

DEFAULT_PRECISION = 61
FAMILY_GUARD = 10 ** 8


class VectorDomain(Enum):
    ALL_R = "all"
    FP_ONLY = "fp"


@dataclass(frozen=True)
class SearchSpec:
    p: int
    ell: int
    n: int
    span_kind: SpanKind = SpanKind.MODULE
    vector_domain: VectorDomain = VectorDomain.ALL_R
    precision: int = DEFAULT_PRECISION
    dual_kind: str | None = None  # None = span default

    def ring(self) -> RingContext:
        return ring_for(self.p, self.ell)

    def level(self) -> Level:
        return Level(self.ell)

    def resolved_dual_kind(self) -> str:
        if self.dual_kind is not None:
            return self.dual_kind
        return "rational" if self.span_kind == SpanKind.FP else "ring"

    def to_json_dict(self):
        return {"p": self.p, "ell": self.ell, "n": self.n,
                "span": self.span_kind.value,
                "vectors": self.vector_domain.value,
                "precision": self.precision,
                "dual": self.resolved_dual_kind()}


def _vectors(spec: SearchSpec, ctx: RingContext):
    if spec.vector_domain == VectorDomain.FP_ONLY:
        base = [ctx.scalar(c) for c in range(ctx.p)]
    else:
        base = ctx.elements()
    return itertools.product(base, repeat=spec.n)


def enumerate_family(spec: SearchSpec):
    """All codes C(a1, a2, v) over a1, a2 in R and v in the vector domain,
    deduplicated as word sets; deterministic first-seen provenance.

    Yields Code objects.
    """
    ctx = spec.ring()
    p = ctx.p
    base_count = p if spec.vector_domain == VectorDomain.FP_ONLY else p * p
    if base_count ** spec.n * p ** 4 > FAMILY_GUARD:
        raise GuardExceeded("family enumeration too large")
    dual_kind = spec.resolved_dual_kind()
    # nonzero scalars first so first-seen provenance picks conventional
    # generator triples; the family itself is unaffected
    elements = sorted(ctx.elements(), key=lambda x: (x == ctx.zero, x[1], x[0]))
    seen = set()
    for v in _vectors(spec, ctx):
        spanv = span_of(v, ctx, spec.span_kind)
        dual = dual_for(v, ctx, spec.span_kind, dual_kind)
        dual_set = frozenset(dual)
        # group scalars by the set they produce
        left = {}
        for a1 in elements:
            key = frozenset(word_scale(ctx, a1, w) for w in spanv)
            left.setdefault(key, a1)
        right = {}
        for a2 in elements:
            key = frozenset(word_scale(ctx, a2, w) for w in dual_set)
            right.setdefault(key, a2)
        for skey, a1 in left.items():
            for tkey, a2 in right.items():
                if skey <= tkey:
                    words = tkey  # the dual part is closed under addition
                else:
                    words = frozenset(word_add(ctx, x, y)
                                      for x in skey for y in tkey)
                if words in seen:
                    continue
                seen.add(words)
                yield make_code(ctx, words, spec.span_kind,
                                provenance=(a1, a2, v), dual_kind=dual_kind)


def _swe_groups(spec: SearchSpec):
    """Map swe -> list of provenances, deterministic order."""
    groups: dict = {}
    for code in enumerate_family(spec):
        w = swe(code)
        groups.setdefault(w.key(), (w, []))[1].append(code.provenance)
    return groups


def _admissible_levels_after(p: int, ell: int, count: int):
    """Next `count` square-free levels in the same class mod 4p."""
    out = []
    step = 4 * p
    cand = ell + step
    while len(out) < count:
        if Level(cand).squarefree:
            out.append(cand)
        cand += step
    return out


@dataclass
class CollisionClass:
    swes: list            # WeightEnumerator objects, canonical order
    members: dict         # swe key -> list of generator triples
    shared_series: object  # QSeries at the base level
    separations: dict     # ell' -> bool (series all distinct there?)


@dataclass
class CollisionReport:
    spec: SearchSpec
    swe_count: int
    theta_count: int
    classes: list = field(default_factory=list)

    def to_json_dict(self):
        def triple(t):
            a1, a2, v = t
            return {"a1": list(a1), "a2": list(a2), "v": [list(x) for x in v]}
        return {
            "spec": self.spec.to_json_dict(),
            "swe_count": self.swe_count,
            "theta_count": self.theta_count,
            "classes": [
                {
                    "swes": [w.to_json_dict() for w in cls.swes],
                    "members": {i: [triple(t) for t in ms]
                                for i, (_k, ms) in enumerate(sorted(cls.members.items()))},
                    "shared_series": cls.shared_series.to_json_dict(),
                    "separations": {str(e): s for e, s in cls.separations.items()},
                }
                for cls in self.classes
            ],
        }

    def to_json(self):
        return json.dumps(self.to_json_dict())


def _theta_of_swe_key(key, p, level, precision):
    from .enumerators import WeightEnumerator
    nvars = len(key[0][0]) if key else 0
    degree = sum(key[0][0]) if key else 0
    w = WeightEnumerator(nvars, degree, dict(key))
    return evaluate(w, orbit_series(level, p, precision))


def count_cell(spec: SearchSpec):
    """(#distinct swes, #distinct truncated theta series) for one cell."""
    groups = _swe_groups(spec)
    level = spec.level()
    series_keys = set()
    for key in groups:
        s = _theta_of_swe_key(key, spec.p, level, spec.precision)
        series_keys.add(tuple(sorted(s.coeffs.items())))
    return len(groups), len(series_keys)


def count_table(p: int, ells, ns, span_kind=SpanKind.MODULE,
                vector_domain=VectorDomain.ALL_R,
                precision: int = DEFAULT_PRECISION, dual_kind=None):
    """{(n, ell): (swe_count, theta_count)} over a grid."""
    table = {}
    for ell in ells:
        for n in ns:
            spec = SearchSpec(p, ell, n, span_kind, vector_domain,
                              precision, dual_kind)
            table[(n, ell)] = count_cell(spec)
    return table


def count_table_csv(p, ells, ns, span_kind=SpanKind.MODULE,
                    vector_domain=VectorDomain.ALL_R,
                    precision=DEFAULT_PRECISION, dual_kind=None) -> str:
    table = count_table(p, ells, ns, span_kind, vector_domain, precision,
                        dual_kind)
    lines = ["n\\ell," + ",".join(str(e) for e in ells)]
    for n in ns:
        cells = []
        for e in ells:
            s, t = table[(n, e)]
            cells.append(f"{s}:{t}")
        lines.append(str(n) + "," + ",".join(cells))
    return "\n".join(lines) + "\n"


def find_collisions(spec: SearchSpec) -> CollisionReport:
    """Group the family by truncated theta series and report classes whose
    series is shared by at least two distinct symmetric enumerators.

    Each class is re-examined at the next two admissible levels in the same
    residue class, recording whether the series separate there.
    """
    groups = _swe_groups(spec)
    level = spec.level()
    by_theta: dict = {}
    for key, (w, members) in sorted(groups.items()):
        s = _theta_of_swe_key(key, spec.p, level, spec.precision)
        tkey = tuple(sorted(s.coeffs.items()))
        by_theta.setdefault(tkey, []).append((key, w, members, s))
    classes = []
    next_levels = _admissible_levels_after(spec.p, spec.ell, 2)
    for tkey in sorted(by_theta):
        entries = by_theta[tkey]
        if len(entries) < 2:
            continue
        swes = [e[1] for e in entries]
        members = {e[0]: e[2] for e in entries}
        shared = entries[0][3]
        separations = {}
        for ell2 in next_levels:
            level2 = Level(ell2)
            series2 = [
                tuple(sorted(_theta_of_swe_key(e[0], spec.p, level2,
                                               spec.precision).coeffs.items()))
                for e in entries
            ]
            separations[ell2] = len(set(series2)) == len(series2)
        classes.append(CollisionClass(swes, members, shared, separations))
    return CollisionReport(spec, len(groups), len(by_theta), classes)
