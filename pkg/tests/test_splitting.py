from math import comb

import pytest
from hypothesis import given, settings

from macforge.complexes import SimplicialComplex, join, mask, popcount
from macforge.homology import HomologyGroup, Z, torsion_free
from macforge.splitting import (
    decomposition_index,
    rzk_homology_groups,
    stable_splitting,
    summand_shift,
    total_ranks,
    zk_cohomology_groups,
)

from conftest import complexes


def test_square_motivic_summands(square):
    report = stable_splitting(square, "motivic")
    nontrivial = {s.vertices: (s.shift, s.homology) for s in report.nontrivial()}
    assert nontrivial == {
        (1, 2): ((4, 2), {0: Z}),
        (3, 4): ((4, 2), {0: Z}),
        (1, 2, 3, 4): ((6, 4), {1: Z}),
    }


def test_shifts_by_flavor():
    I = mask([1, 3, 5])
    assert summand_shift(I, "motivic") == (5, 3)
    assert summand_shift(I, "complex") == (5,)
    assert summand_shift(I, "real") == (2,)
    with pytest.raises(ValueError):
        summand_shift(I, "quaternionic")


def test_full_simplex_has_no_summands():
    assert stable_splitting(SimplicialComplex.simplex(4)).summands == ()
    assert zk_cohomology_groups(SimplicialComplex.simplex(4)) == {0: Z}


def test_square_is_product_of_three_spheres(square):
    assert total_ranks(zk_cohomology_groups(square)) == [1, 0, 0, 2, 0, 0, 1]


@pytest.mark.parametrize("m", range(2, 7))
def test_sphere_boundary(m):
    K = SimplicialComplex.boundary_of_simplex(m)
    assert zk_cohomology_groups(K) == {0: Z, 2 * m - 1: Z}


@pytest.mark.parametrize("m", range(2, 7))
def test_disjoint_points(m):
    h = zk_cohomology_groups(SimplicialComplex.points(m))
    for l in range(2, m + 1):
        assert h[l + 1] == HomologyGroup((l - 1) * comb(m, l))
    assert set(h) == {0} | {l + 1 for l in range(2, m + 1)}


def test_three_points_ranks():
    assert total_ranks(zk_cohomology_groups(SimplicialComplex.points(3))) == [1, 0, 0, 3, 2]


def test_real_moment_angle_examples(square, rp2):
    assert rzk_homology_groups(SimplicialComplex.points(3)) == {1: HomologyGroup(5)}
    # square: (D¹, S⁰)^K is the torus S¹ × S¹
    assert rzk_homology_groups(square) == {1: HomologyGroup(2), 2: Z}
    assert rzk_homology_groups(rp2)[2].torsion == (2,)


@given(complexes())
def test_summand_count(K):
    assert len(stable_splitting(K).summands) == (1 << K.m) - len(K.faces)
    assert all(I not in K.faces for I in decomposition_index(K))


@given(complexes())
def test_euler_characteristic_of_zk(K):
    # torus action: χ(Z_K) = 0 unless Z_K is a disc
    h = zk_cohomology_groups(K)
    alt = sum((-1) ** d * g.free_rank for d, g in h.items())
    assert alt == (1 if K.is_full_simplex() else 0)


def _poincare(K):
    r = total_ranks(zk_cohomology_groups(K))
    return {d: v for d, v in enumerate(r) if v}


@settings(max_examples=40)
@given(complexes(max_m=3), complexes(max_m=3))
def test_join_is_product(K, L):
    if not (torsion_free(K) and torsion_free(L)):
        return
    pk, pl = _poincare(K), _poincare(L)
    expected = {}
    for a, x in pk.items():
        for b, y in pl.items():
            expected[a + b] = expected.get(a + b, 0) + x * y
    assert _poincare(join(K, L)) == expected
