import random
from fractions import Fraction
from itertools import combinations
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from macforge.complexes import SimplicialComplex, join, mask
from macforge.homology import (
    ChainComplex,
    HomologyGroup,
    IntegerMatrix,
    NotAComplex,
    Z,
    betti_numbers,
    chain_complex_from_faces,
    cohomology,
    homology,
    invariant_factors,
    reduced_homology,
    reduced_simplicial_chain_complex,
    smith_normal_form,
    smith_normal_form_with_transforms,
    torsion_free,
)

from conftest import RP2_FACETS, complexes


def det(rows):
    A = [[Fraction(x) for x in r] for r in rows]
    n = len(A)
    d = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if A[r][c]), None)
        if p is None:
            return 0
        if p != c:
            A[c], A[p] = A[p], A[c]
            d = -d
        d *= A[c][c]
        for r in range(c + 1, n):
            f = A[r][c] / A[c][c]
            A[r] = [a - f * b for a, b in zip(A[r], A[c])]
    return int(d)


def determinantal_factors(M):
    """Invariant factors from gcds of k x k minors: d_k = D_k / D_{k-1}."""
    rows, cols = len(M), len(M[0]) if M else 0
    D = [1]
    for k in range(1, min(rows, cols) + 1):
        g = 0
        for rs in combinations(range(rows), k):
            for cs in combinations(range(cols), k):
                g = gcd(g, det([[M[r][c] for c in cs] for r in rs]))
        if g == 0:
            break
        D.append(g)
    return tuple(D[k] // D[k - 1] for k in range(1, len(D)))


small_matrices = st.integers(1, 4).flatmap(
    lambda r: st.integers(1, 4).flatmap(
        lambda c: st.lists(st.lists(st.integers(-6, 6), min_size=c, max_size=c), min_size=r, max_size=r)
    )
)


def test_snf_examples():
    assert smith_normal_form(IntegerMatrix.from_dense([[2, 0], [0, 0]])) == ((2,), 1)
    assert smith_normal_form(IntegerMatrix.from_dense([[1, 1], [1, 1]])) == ((1,), 1)
    assert smith_normal_form(IntegerMatrix.from_dense([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])).factors == (2, 6, 12)


def test_snf_triangle_boundary():
    C = reduced_simplicial_chain_complex(SimplicialComplex.boundary_of_simplex(3))
    d1 = C.boundary(1)
    # rows: vertices 1,2,3; columns: edges 12, 13, 23
    assert d1.to_dense() == [[-1, -1, 0], [1, 0, -1], [0, 1, 1]]
    assert smith_normal_form(d1) == ((1, 1), 2)


@given(small_matrices)
def test_snf_matches_determinantal_divisors(M):
    assert smith_normal_form(IntegerMatrix.from_dense(M)).factors == determinantal_factors(M)


@given(small_matrices)
def test_snf_with_transforms(M):
    A = IntegerMatrix.from_dense(M)
    D, U, V = smith_normal_form_with_transforms(A)
    prod = (IntegerMatrix.from_dense(U) @ A @ IntegerMatrix.from_dense(V)).to_dense()
    assert prod == D
    assert abs(det(U)) == 1 and abs(det(V)) == 1
    diag = [D[i][i] for i in range(min(len(D), len(D[0]))) if D[i][i]]
    assert all(D[i][j] == 0 for i in range(len(D)) for j in range(len(D[0])) if i != j)
    assert all(b % a == 0 for a, b in zip(diag, diag[1:]))
    assert tuple(diag) == smith_normal_form(A).factors


@settings(max_examples=30)
@given(st.lists(st.lists(st.integers(-3, 3), min_size=6, max_size=6), min_size=5, max_size=5), st.randoms())
def test_snf_invariant_under_permutation(M, rnd):
    A = IntegerMatrix.from_dense(M)
    rp, cp = list(range(A.rows)), list(range(A.cols))
    rnd.shuffle(rp)
    rnd.shuffle(cp)
    assert smith_normal_form(A.permuted(rp, cp)) == smith_normal_form(A)


def test_invariant_factors_normalise():
    assert invariant_factors([2, 3]) == (6,)
    assert invariant_factors([4, 2, 1, 0]) == (2, 4)
    assert HomologyGroup(0, (2,)) + HomologyGroup(1, (3,)) == HomologyGroup(1, (6,))
    assert str(HomologyGroup(2, (2, 2))) == "Z^2 ⊕ Z/2 ⊕ Z/2"


def test_not_a_complex():
    d1 = IntegerMatrix.from_dense([[1, 1]])
    d2 = IntegerMatrix.from_dense([[1], [1]])
    with pytest.raises(NotAComplex):
        ChainComplex({0: ["a"], 1: ["b", "c"], 2: ["d"]}, {1: d1, 2: d2})


def test_reduced_homology_examples(square):
    assert reduced_homology(SimplicialComplex.points(2)) == {0: Z}
    assert reduced_homology(square) == {1: Z}
    assert reduced_homology(SimplicialComplex.from_facets(6, RP2_FACETS)) == {1: HomologyGroup(0, (2,))}
    assert reduced_homology(SimplicialComplex.boundary_of_simplex(4)) == {2: Z}
    assert reduced_homology(SimplicialComplex.simplex(3)) == {}


def test_rp2_cohomology_torsion_moves_up(rp2):
    from macforge.homology import reduced_cohomology

    assert reduced_cohomology(rp2) == {2: HomologyGroup(0, (2,))}


def test_cubical_circle():
    from macforge.oracles import cubical_complex_real_mac

    h = homology(cubical_complex_real_mac(SimplicialComplex.points(2)))
    assert h == {0: Z, 1: Z}


def test_betti_and_torsion(square, rp2):
    assert betti_numbers(square) == [0, 1]
    assert betti_numbers(SimplicialComplex.simplex(1)) == [0]
    assert not torsion_free(rp2)
    assert torsion_free(square)


@given(complexes())
def test_boundary_squares_to_zero(K):
    C = reduced_simplicial_chain_complex(K)  # construction checks ∂∂ = 0
    for n in C.boundaries:
        if n - 1 in C.boundaries:
            assert (C.boundary(n - 1) @ C.boundary(n)).is_zero()


def test_euler_poincare_exhaustive():
    from macforge.complexes import all_complexes

    for m in range(1, 6):
        for K in all_complexes(m):
            C = reduced_simplicial_chain_complex(K)
            h = homology(C)
            assert C.euler_characteristic() == sum((-1) ** n * g.free_rank for n, g in h.items())


@given(complexes(max_m=5))
def test_cone_is_acyclic(K):
    cone = join(SimplicialComplex.simplex(1), K)
    assert reduced_homology(cone) == {}


@given(complexes(max_m=5))
def test_cohomology_vs_homology_universal_coefficients(K):
    # H^n free rank = H_n free rank; torsion of H^n = torsion of H_{n-1}
    C = chain_complex_from_faces(K.faces)
    h, c = homology(C), cohomology(C)
    for n in set(h) | set(c):
        assert c.get(n, HomologyGroup()).free_rank == h.get(n, HomologyGroup()).free_rank
        assert c.get(n, HomologyGroup()).torsion == h.get(n - 1, HomologyGroup()).torsion


def test_flag_complexes_checked_torsion_free():
    rng = random.Random(3)
    from macforge.complexes import is_flag, random_complex

    seen = 0
    for _ in range(200):
        K = random_complex(6, rng)
        if is_flag(K):
            seen += 1
            assert torsion_free(K)
    assert seen > 0
