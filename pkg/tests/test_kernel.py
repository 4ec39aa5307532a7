import pytest

from codetheta.arith import Level
from codetheta.enumerators import parse_poly
from codetheta.kernel import (EmptyKernel, build_matrix, exact_nullity,
                              kernel_to_relation, monomials_graded_lex,
                              nullity_table_csv, stabilized_nullity)

# The 17 x 15 matrix M_{15,4} as printed (rows q^0..q^16).
M_15_4 = [
    [1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 4, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 8, 0, 0, 0, 0, 0],
    [8, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 16],
    [0, 0, 12, 0, 4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 2, 0, 0, 0, 16, 0, 0, 8, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 4, 0, 0, 0, 0, 16, 0, 0, 0, 16, 0],
    [24, 12, 0, 4, 0, 0, 0, 0, 8, 0, 0, 0, 0, 0, 0],
    [0, 0, 26, 0, 16, 0, 0, 8, 0, 0, 0, 0, 0, 16, 0],
    [0, 14, 0, 8, 0, 24, 0, 0, 16, 0, 0, 0, 16, 0, 0],
    [0, 0, 0, 0, 20, 0, 0, 16, 0, 24, 0, 0, 0, 0, 0],
    [32, 24, 0, 20, 0, 0, 8, 0, 24, 0, 0, 0, 32, 0, 64],
    [0, 0, 28, 0, 20, 0, 0, 24, 0, 0, 0, 16, 0, 16, 0],
    [0, 36, 0, 40, 0, 32, 24, 0, 16, 0, 0, 0, 16, 0, 0],
    [0, 0, 2, 0, 36, 0, 0, 48, 0, 48, 0, 48, 0, 48, 0],
    [40, 18, 0, 40, 0, 8, 40, 0, 32, 0, 16, 0, 32, 0, 0],
]


def test_monomial_count_and_order():
    monos = monomials_graded_lex(4, 3)
    assert len(monos) == 15
    assert monos[0] == (4, 0, 0)       # X^4 first
    assert monos[-1] == (0, 0, 4)      # Z^4 last
    assert monos == sorted(monos, reverse=True)


def test_degree_zero_matrix():
    m = build_matrix(2, Level(7), 0, 10)
    assert m.ncols == 1
    assert m.columns[0][0] == 1 and sum(m.columns[0][1:]) == 0


def test_matrix_n1_columns_are_coset_series():
    from codetheta.theta import orbit_series
    m = build_matrix(3, Level(7), 1, 40)
    assert m.ncols == 4
    series = orbit_series(Level(7), 3, 41)
    for col, s in zip(m.columns, series):
        dense = [0] * 41
        for k, c in s.coeffs.items():
            if k < 41:
                dense[k] = c
        assert col == dense


def test_m_15_4_matches_published_matrix():
    m = build_matrix(2, Level(15), 4, 16)
    assert (m.nrows, m.ncols) == (17, 15)
    printed_cols = sorted(tuple(M_15_4[r][c] for r in range(17))
                          for c in range(15))
    assert m.column_multiset() == printed_cols
    report = exact_nullity(m)
    assert report.rank == 15 and report.nullity == 0


def test_small_nullities():
    assert exact_nullity(build_matrix(2, Level(3), 1, 17)).nullity == 1
    assert exact_nullity(build_matrix(3, Level(7), 2, 40)).nullity == 1


def test_stabilized_examples():
    assert stabilized_nullity(2, Level(7), 2).nullity == 1
    assert stabilized_nullity(5, Level(3), 1).nullity == 4
    r = stabilized_nullity(2, Level(15), 4)
    assert r.nullity == 0 and r.stabilized


def test_kernel_vectors_verify_at_double_truncation():
    r = stabilized_nullity(2, Level(7), 2)
    assert r.nullity == 1
    t2 = r.truncations_tried[-1] * 2
    m2 = build_matrix(2, Level(7), 2, t2)
    for vec in r.kernel_basis:
        for row in range(m2.nrows):
            assert sum(v * m2.columns[c][row]
                       for c, v in enumerate(vec) if v) == 0


def test_nullity_monotone_in_truncation():
    values = [exact_nullity(build_matrix(2, Level(3), 3, t)).nullity
              for t in (17, 34, 68)]
    assert values == sorted(values, reverse=True)


def test_kernel_relation_p2():
    r = stabilized_nullity(2, Level(7), 2)
    lhs, rhs = kernel_to_relation(r)
    diff = {}
    for ev, c in lhs.terms.items():
        diff[ev] = diff.get(ev, 0) + c
    for ev, c in rhs.terms.items():
        diff[ev] = diff.get(ev, 0) - c
    want = {}
    for ev, c in parse_poly("X^2 + Y^2 + 2Z^2", 2, 3, 2).terms.items():
        want[ev] = want.get(ev, 0) + c
    for ev, c in parse_poly("X^2 + 2XZ + Z^2", 2, 3, 2).terms.items():
        want[ev] = want.get(ev, 0) - c
    want = {ev: c for ev, c in want.items() if c}
    got = {ev: c for ev, c in diff.items() if c}
    neg = {ev: -c for ev, c in got.items()}
    assert got == want or neg == want


def test_kernel_relation_empty():
    r = stabilized_nullity(2, Level(15), 4)
    with pytest.raises(EmptyKernel):
        kernel_to_relation(r)


def test_multiplicative_closure_l7():
    """The n=2 kernel relation times each degree-1 monomial lies in the
    n=3 kernel span; nullity(7, 3) = 3."""
    r2 = stabilized_nullity(2, Level(7), 2)
    r3 = stabilized_nullity(2, Level(7), 3)
    assert r3.nullity == 3
    vec2 = r2.kernel_basis[0]
    monos2 = r2.monomials
    monos3 = {ev: i for i, ev in enumerate(r3.monomials)}
    # lift: multiply the n=2 relation by X, Y, Z and check M_{7,3} v = 0
    t = r3.truncations_tried[-1]
    m3 = build_matrix(2, Level(7), 3, t)
    for var in range(3):
        lifted = [0] * len(monos3)
        for ev, c in zip(monos2, vec2):
            if not c:
                continue
            up = list(ev)
            up[var] += 1
            lifted[monos3[tuple(up)]] += c
        for row in range(m3.nrows):
            assert sum(v * m3.columns[cc][row]
                       for cc, v in enumerate(lifted) if v) == 0


def test_nullity_table_csv_shape():
    csv = nullity_table_csv(2, [3, 7], [1, 2])
    lines = csv.strip().splitlines()
    assert lines[0] == "n\\ell,3,7"
    assert lines[1] == "1,1,0"
    assert lines[2] == "2,3,1"
