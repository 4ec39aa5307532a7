import pytest

from codetheta.arith import (Level, NotSquareFree, NotThreeMod4, PDividesEll,
                             RingContext, RingKind, check_admissible,
                             klein_orbit, label_variable_index, legendre,
                             orbit_table, trace)


def test_admissible_examples():
    lv, ctx = check_admissible(2, 7)
    assert ctx.kind == RingKind.SPLIT and lv.d == 2
    lv, ctx = check_admissible(2, 3)
    assert ctx.kind == RingKind.FIELD and lv.d == 1
    lv, ctx = check_admissible(5, 19)
    assert ctx.kind == RingKind.SPLIT and lv.d == 5


def test_admissible_errors():
    with pytest.raises(NotSquareFree):
        check_admissible(3, 175)  # 175 = 5^2 * 7, and 175 = 3 mod 4
    with pytest.raises(NotThreeMod4):
        check_admissible(3, 13)
    with pytest.raises(PDividesEll):
        check_admissible(3, 15)
    with pytest.raises(NotThreeMod4):
        check_admissible(3, 12)  # 12 = 4*3 fails the mod-4 gate first


def test_level_allows_non_squarefree_for_tables():
    # ell = 27 appears in the published nullity tables
    lv = Level(27)
    assert lv.d == 7 and not lv.squarefree


def test_legendre_basics():
    assert legendre(1, 5) == 1
    assert legendre(2, 5) == -1
    assert legendre(-19, 5) == legendre(1, 5) == 1


def test_ring_mul_examples():
    ctx = RingContext(2, 2)  # ell = 7
    assert ctx.mul((0, 1), (0, 1)) == (0, 1)  # w*w = w mod 2 when d even
    ctx3 = RingContext(3, 1)
    assert ctx3.mul((0, 1), (0, 1)) == (2, 2)  # w^2 = -1 - w when d = 1
    for p, d in [(2, 1), (3, 2), (5, 3)]:
        ctx = RingContext(p, d)
        for x in ctx.elements():
            assert ctx.mul(ctx.one, x) == x


def test_conj_examples():
    ctx = RingContext(3, 2)
    assert ctx.conj((0, 0)) == (0, 0)
    assert ctx.conj((0, 1)) == (2, 2)
    ctx5 = RingContext(5, 3)
    assert ctx5.conj((1, 2)) == (4, 3)


@pytest.mark.parametrize("p,d", [(2, 1), (2, 0), (3, 1), (3, 2), (5, 1),
                                 (5, 2), (7, 3)])
def test_conj_involution(p, d):
    ctx = RingContext(p, d)
    for x in ctx.elements():
        assert ctx.conj(ctx.conj(x)) == x


@pytest.mark.parametrize("p,d", [(2, 1), (2, 0), (3, 1), (3, 2), (5, 2), (5, 0)])
def test_conj_multiplicative(p, d):
    ctx = RingContext(p, d)
    for x in ctx.elements():
        for y in ctx.elements():
            assert ctx.conj(ctx.mul(x, y)) == ctx.mul(ctx.conj(x), ctx.conj(y))


@pytest.mark.parametrize("p,d,kind", [
    (2, 0, RingKind.SPLIT), (2, 1, RingKind.FIELD),
    (3, 0, RingKind.SPLIT), (3, 2, RingKind.FIELD),
    (5, 0, RingKind.SPLIT), (5, 3, RingKind.SPLIT), (5, 1, RingKind.FIELD),
])
def test_zero_divisors_match_kind(p, d, kind):
    ctx = RingContext(p, d)
    assert ctx.kind == kind
    nonzero = [x for x in ctx.elements() if x != ctx.zero]
    has_zero_divisor = any(ctx.mul(x, y) == ctx.zero
                           for x in nonzero for y in nonzero)
    assert has_zero_divisor == (kind == RingKind.SPLIT)


def test_klein_orbit_examples():
    assert set(klein_orbit((0, 1), 3)) == {(0, 1), (2, 1), (0, 2), (1, 2)}
    assert klein_orbit((0, 0), 7) == ((0, 0),)
    assert set(klein_orbit((1, 1), 5)) == {(1, 1), (3, 1), (4, 4), (2, 4)}


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11, 13, 17, 19])
def test_orbit_closure_and_counts(p):
    table = orbit_table(p)
    want = 3 if p == 2 else (p + 1) ** 2 // 4
    assert len(table) == want
    covered = set()
    for orb in table:
        for (a, b) in orb:
            assert set(klein_orbit((a, b), p)) <= set(orb)
        covered.update(orb)
    assert len(covered) == p * p


def test_p5_variable_assignment_matches_published_list():
    # swe(X1..X9) = cwe(X1,X2,X6,X6,X2, X3,X4,X7,X4,X3, X5,X8,X8,X5,X9,
    #                   X5,X9,X5,X8,X8, X3,X3,X4,X7,X4)
    want = [1, 2, 6, 6, 2, 3, 4, 7, 4, 3, 5, 8, 8, 5, 9, 5, 9, 5, 8, 8,
            3, 3, 4, 7, 4]
    var_of = label_variable_index(5)
    got = [var_of[(i % 5, i // 5)] + 1 for i in range(25)]
    assert got == want


def test_p3_variable_assignment():
    # swe(X,Y,Z,W) = cwe(X,Y,Y,Z,W,Z,Z,Z,W)
    want = [0, 1, 1, 2, 3, 2, 2, 2, 3]
    var_of = label_variable_index(3)
    got = [var_of[(i % 3, i // 3)] for i in range(9)]
    assert got == want


def test_trace():
    ctx = RingContext(3, 2)
    for x in ctx.elements():
        s = ctx.add(x, ctx.conj(x))
        assert s == (trace(ctx, x), 0)
