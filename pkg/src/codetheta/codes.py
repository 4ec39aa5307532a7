"""Codes over R = O_K/pO_K: the generator family a1*<v> + a2*<v>~perp,
duals in the presence of zero divisors, and canonical word-set form.

Two span kinds exist:

* MODULE: <v> is the R-span of v and <v>~perp the Hermitian dual
  {u : u . conj(v) = 0}, found by exhaustive enumeration (row reduction is
  unsound over the split ring).
* FP: <v> is the F_p-span {c v : c in F_p}.  The matching dual, inferred
  from the published F_p-submodule examples, is the rational trace dual
  {u in F_p^n : sum_i u_i Tr(v_i) = 0}; the Hermitian dual remains
  available as dual_kind="ring".
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from enum import Enum

from .arith import RingContext, trace


class GuardExceeded(ValueError):
    pass


class ContextMismatch(ValueError):
    pass


DUAL_ENUM_GUARD = 10 ** 8


class SpanKind(Enum):
    MODULE = "module"
    FP = "fp"


Word = tuple  # tuple of ring elements


def reduce_pair(u: int, v: int, p: int):
    """Reduction of the lattice point u - v*w to a ring element."""
    return (u % p, (-v) % p)


def word_add(ctx: RingContext, x: Word, y: Word) -> Word:
    return tuple(ctx.add(a, b) for a, b in zip(x, y))


def word_scale(ctx: RingContext, c, x: Word) -> Word:
    return tuple(ctx.mul(c, a) for a in x)


def word_key(word: Word, p: int):
    """Canonical sort key: the (a + p*b) encoding per coordinate."""
    return tuple(a + p * b for a, b in word)


def dual_of_span(v: Word, ctx: RingContext) -> list[Word]:
    """All u in R^n with sum_j u_j * conj(v_j) = 0, by exhaustive search.

    Correct whether or not R has zero divisors.
    """
    n = len(v)
    if (ctx.p ** (2 * n)) > DUAL_ENUM_GUARD:
        raise GuardExceeded(f"dual enumeration p^(2n) = {ctx.p ** (2 * n)} too large")
    cv = tuple(ctx.conj(x) for x in v)
    out = []
    zero = ctx.zero
    for u in itertools.product(ctx.elements(), repeat=n):
        acc = zero
        for x, y in zip(u, cv):
            acc = ctx.add(acc, ctx.mul(x, y))
        if acc == zero:
            out.append(u)
    return out


def rational_trace_dual(v: Word, ctx: RingContext) -> list[Word]:
    """{u in F_p^n : sum_i u_i * Tr(v_i) = 0 mod p}, as ring words."""
    p = ctx.p
    n = len(v)
    coeffs = [trace(ctx, x) for x in v]
    out = []
    for u in itertools.product(range(p), repeat=n):
        if sum(ui * c for ui, c in zip(u, coeffs)) % p == 0:
            out.append(tuple((ui, 0) for ui in u))
    return out


@dataclass(frozen=True)
class Code:
    ctx: RingContext
    n: int
    words: tuple  # canonically sorted tuple of words
    span_kind: SpanKind
    provenance: tuple | None = None  # (a1, a2, v) if generated
    dual_kind: str = "ring"

    def __post_init__(self):
        if not self.words:
            raise ValueError("a code contains at least the zero word")

    def __len__(self):
        return len(self.words)

    def word_set(self):
        return frozenset(self.words)

    def __contains__(self, word):
        return word in set(self.words)

    def to_json_dict(self) -> dict:
        out = {
            "p": self.ctx.p,
            "ell_class": self.ctx.d_mod_p,
            "n": self.n,
            "span": self.span_kind.value,
            "words": [[list(x) for x in w] for w in self.words],
        }
        if self.provenance is not None:
            a1, a2, v = self.provenance
            out["generators"] = {"a1": list(a1), "a2": list(a2),
                                 "v": [list(x) for x in v]}
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())


def make_code(ctx: RingContext, words, span_kind=SpanKind.MODULE,
              provenance=None, dual_kind="ring") -> Code:
    words = list({tuple(w) for w in words})
    n = len(words[0])
    words.sort(key=lambda w: word_key(w, ctx.p))
    return Code(ctx, n, tuple(words), span_kind, provenance, dual_kind)


def span_of(v: Word, ctx: RingContext, span_kind: SpanKind) -> set:
    if span_kind == SpanKind.MODULE:
        scalars = ctx.elements()
    else:
        scalars = [ctx.scalar(c) for c in range(ctx.p)]
    return {word_scale(ctx, c, v) for c in scalars}


def dual_for(v: Word, ctx: RingContext, span_kind: SpanKind,
             dual_kind: str | None = None) -> list[Word]:
    if dual_kind is None:
        dual_kind = "rational" if span_kind == SpanKind.FP else "ring"
    if dual_kind == "ring":
        return dual_of_span(v, ctx)
    if dual_kind == "rational":
        return rational_trace_dual(v, ctx)
    raise ValueError(f"unknown dual kind {dual_kind!r}")


def build_code(a1, a2, v: Word, span_kind: SpanKind, ctx: RingContext,
               dual_kind: str | None = None) -> Code:
    """C(a1, a2, v) = a1*<v> + a2*<v>~perp as an explicit word set."""
    if dual_kind is None:
        dual_kind = "rational" if span_kind == SpanKind.FP else "ring"
    spanv = span_of(v, ctx, span_kind)
    dual = dual_for(v, ctx, span_kind, dual_kind)
    s = {word_scale(ctx, a1, w) for w in spanv}
    t = {word_scale(ctx, a2, w) for w in dual}
    words = {word_add(ctx, x, y) for x in s for y in t}
    return make_code(ctx, words, span_kind, provenance=(tuple(a1), tuple(a2), tuple(v)),
                     dual_kind=dual_kind)


def code_equal(c1: Code, c2: Code) -> bool:
    if c1.ctx != c2.ctx or c1.n != c2.n:
        raise ContextMismatch("codes live over different rings or lengths")
    return c1.words == c2.words


def parse_elem(text: str, ctx: RingContext):
    """Parse 'a+bw' style element syntax: 0, 1, w, w+1, 2w+1, 3, ..."""
    t = text.strip().replace(" ", "").replace("omega", "w")
    if not t:
        raise ValueError("empty element")
    a = b = 0
    for piece in t.replace("-", "+-").split("+"):
        if not piece:
            continue
        if "w" in piece:
            coef = piece[:-1] if piece.endswith("w") else None
            if coef is None:
                raise ValueError(f"bad element syntax: {text!r}")
            if coef in ("", "-"):
                b += -1 if coef == "-" else 1
            else:
                b += int(coef)
        else:
            a += int(piece)
    return (a % ctx.p, b % ctx.p)


def parse_generators(text: str, ctx: RingContext):
    """Parse 'a1;a2;v1,v2,...' inline generator syntax."""
    parts = text.split(";")
    if len(parts) != 3:
        raise ValueError("expected 'a1;a2;v1,v2,...'")
    a1 = parse_elem(parts[0], ctx)
    a2 = parse_elem(parts[1], ctx)
    v = tuple(parse_elem(x, ctx) for x in parts[2].split(","))
    return a1, a2, v
