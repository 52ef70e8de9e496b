import pytest
from hypothesis import given

from macforge.complexes import SimplicialComplex, mask
from macforge.gw import chi_classical_polyhedral
from macforge.homology import HomologyGroup, Z, homology
from macforge.oracles import (
    cubical_complex_real_mac,
    cubical_euler_characteristic,
    koszul_strand,
    koszul_tor_ranks,
    matrix_rank,
    strand_homology_ranks,
)
from macforge.verify import check_complex

from conftest import complexes


def test_cubical_examples(square):
    assert homology(cubical_complex_real_mac(SimplicialComplex.points(2))) == {0: Z, 1: Z}
    assert homology(cubical_complex_real_mac(square)) == {0: Z, 1: HomologyGroup(2), 2: Z}
    assert homology(cubical_complex_real_mac(SimplicialComplex.boundary_of_simplex(3))) == {0: Z, 2: Z}
    assert homology(cubical_complex_real_mac(SimplicialComplex.simplex(3))) == {0: Z}


@given(complexes())
def test_cubical_euler(K):
    assert cubical_euler_characteristic(K) == chi_classical_polyhedral(1, 2, K)


def _compose(a, b):
    out = {}
    for (i, k), x in a.items():
        for (k2, j), y in b.items():
            if k == k2:
                out[(i, j)] = out.get((i, j), 0) + x * y
    return {k: v for k, v in out.items() if v}


@given(complexes())
def test_koszul_differential_squares_to_zero(K):
    I = K.full_mask
    _, d = koszul_strand(K, I)
    for h in d:
        if h - 1 in d:
            assert _compose(d[h - 1], d[h]) == {}


def test_rp2_torsion_visible_mod_2(rp2):
    full = rp2.full_mask
    assert strand_homology_ranks(rp2, full, "Q") == {}
    assert strand_homology_ranks(rp2, full, 2) == {3: 1, 4: 1}
    q, f2 = koszul_tor_ranks(rp2, "Q"), koszul_tor_ranks(rp2, 2)
    assert {k: f2[k] - q.get(k, 0) for k in f2 if f2[k] != q.get(k, 0)} == {(8, 6): 1, (9, 6): 1}


def test_full_simplex_resolution_trivial():
    assert koszul_tor_ranks(SimplicialComplex.simplex(4)) == {(0, 0): 1}


def test_matrix_rank():
    e = {(0, 0): 2, (1, 1): 2, (0, 1): 1}
    assert matrix_rank(e) == 2
    assert matrix_rank({(0, 0): 2, (1, 0): 4}, 2) == 0
    with pytest.raises(ValueError):
        matrix_rank(e, 4)


def test_check_complex_square(square):
    assert all(check_complex(square).values())
    assert all(check_complex(SimplicialComplex.from_facets(3, [[1, 2], [3]])).values())
