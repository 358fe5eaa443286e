import pytest

from conftest import CORPUS
from ratgauge.errors import InvalidParameterError
from ratgauge.les import alternating_sum, build_les, verify_exactness
from ratgauge.simplicial import builtin, point, simplex_boundary, torus7


def row_tuple(r):
    return (r.gl_prev, r.gl, r.lc, r.rank_i, r.rank_gamma, r.rank_delta)


def test_sphere_table():
    t = build_les(simplex_boundary(3), 2, 3)
    assert [r.k for r in t.rows] == [3, 2, 1]
    assert row_tuple(t.row(3)) == (0, 1, 1, 0, 1, 0)
    assert row_tuple(t.row(2)) == (0, 0, 0, 0, 0, 0)
    assert row_tuple(t.row(1)) == (1, 2, 1, 1, 1, 0)
    assert t.exact


def test_point_recovers_unitary_fibration():
    t = build_les(point(), 2)
    assert row_tuple(t.row(3))[:3] == (0, 1, 1)
    assert row_tuple(t.row(1))[:3] == (1, 1, 0)
    assert t.exact


def test_default_k_max():
    assert build_les(torus7(), 3).rows[0].k == 2 * 3 - 1 + 2


def test_torus_is_exact():
    assert verify_exactness(build_les(torus7(), 3, 5)) == []


def test_corrupted_lc_column():
    t = build_les(torus7(), 3)
    bad = t.with_row(4, lc=t.row(4).lc + 1)
    assert not bad.exact
    assert verify_exactness(bad)


def test_forced_connecting_map_is_localised():
    t = build_les(point(), 2, 3)
    bad = t.with_row(2, rank_delta=1)
    at_two = [v for v in verify_exactness(bad) if v.k == 2]
    assert len(at_two) == 1
    assert (at_two[0].k, at_two[0].junction) == (2, "Lc->GL_{n-1}")


def test_single_row_table():
    assert verify_exactness(build_les(point(), 2, 1)) == []


def test_rejects_small_n():
    with pytest.raises(InvalidParameterError):
        build_les(point(), 1)
    with pytest.raises(InvalidParameterError):
        build_les(point(), 2, 0)


@pytest.mark.parametrize("name", CORPUS)
@pytest.mark.parametrize("n", range(2, 6))
def test_structural_properties(name, n):
    X = builtin(name)
    t = build_les(X, n, 2 * n - 1 + X.dim)
    assert t.exact and verify_exactness(t) == []
    for r in t.rows:
        assert r.lc == r.gl - r.gl_prev
        assert r.rank_i == r.gl_prev
        assert r.rank_delta == 0
    assert alternating_sum(t) == 0
    ks = [r.k for r in t.rows]
    for lo in ks:
        for hi in ks:
            if lo <= hi:
                assert alternating_sum(t, lo, hi) == 0


FIELDS = ("gl_prev", "gl", "lc", "rank_i", "rank_gamma", "rank_delta")


@pytest.mark.parametrize("name", CORPUS)
def test_every_single_fault_is_caught(name):
    X = builtin(name)
    for n in (2, 3):
        t = build_les(X, n)
        for r in t.rows:
            for f in FIELDS:
                for delta in (-1, 1):
                    bad = t.with_row(r.k, **{f: getattr(r, f) + delta})
                    assert verify_exactness(bad), (n, r.k, f, delta)
                    assert not bad.exact
