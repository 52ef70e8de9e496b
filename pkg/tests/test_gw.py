import random

import pytest
from hypothesis import given, strategies as st

from macforge.affine import cellular_filtration_report
from macforge.complexes import SimplicialComplex, all_complexes, join, random_complex
from macforge.gw import (
    HYPERBOLIC_GM,
    MINUS_ONE,
    ONE,
    GWElement,
    chi_a1_davis,
    chi_a1_davis_scaled,
    chi_a1_from_strata,
    chi_a1_from_summands,
    chi_a1_splitting,
    chi_classical_polyhedral,
    gw_smash_shift,
    gw_wedge_rule,
)
from macforge.splitting import stable_splitting

from conftest import complexes

gw = st.builds(GWElement, st.integers(-20, 20), st.integers(-20, 20))


def test_ring_arithmetic():
    assert MINUS_ONE * MINUS_ONE == ONE
    assert HYPERBOLIC_GM * HYPERBOLIC_GM == 2 * HYPERBOLIC_GM
    assert HYPERBOLIC_GM * (ONE + MINUS_ONE) == GWElement()
    assert 3 - MINUS_ONE == GWElement(3, -1)
    assert str(HYPERBOLIC_GM) == "<1> - <-1>"
    assert str(2 * HYPERBOLIC_GM) == "2<1> - 2<-1>"
    assert str(-MINUS_ONE) == "-<-1>"
    assert str(GWElement()) == "0"
    assert GWElement(3, 1).specialize("C") == GWElement(4, 0)
    assert GWElement(3, 1).specialize("R") == (4, 2)
    with pytest.raises(TypeError):
        ONE + 1.5


@given(gw, gw, gw)
def test_ring_axioms(x, y, z):
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert (x * y).rank == x.rank * y.rank
    assert (x * y).signature == x.signature * y.signature


def test_square_is_zero(square):
    assert chi_a1_davis(square) == GWElement()
    assert chi_a1_splitting(square) == GWElement()


def test_full_simplex_is_point():
    K = SimplicialComplex.simplex(3)
    assert chi_a1_davis(K) == chi_a1_splitting(K) == ONE
    with pytest.raises(ValueError):
        chi_a1_davis_scaled(K)


@pytest.mark.parametrize("m", range(2, 8))
def test_spheres(m):
    K = SimplicialComplex.boundary_of_simplex(m)
    assert chi_a1_davis(K) == ONE - MINUS_ONE**m


def test_triple_agreement_exhaustive():
    for m in range(1, 5):
        for K in all_complexes(m):
            d = chi_a1_davis(K)
            assert d == chi_a1_splitting(K) == chi_a1_from_summands(K, stable_splitting(K))
            assert d.rank == chi_classical_polyhedral(1, 0, K)
            assert d.signature == chi_classical_polyhedral(1, 2, K)
            if not K.is_full_simplex():
                assert chi_a1_davis_scaled(K) == d


def test_triple_agreement_random():
    rng = random.Random(11)
    for _ in range(30):
        K = random_complex(rng.randint(5, 7), rng)
        assert chi_a1_davis(K) == chi_a1_splitting(K) == chi_a1_from_summands(K, stable_splitting(K))


@given(complexes(max_m=3), complexes(max_m=3))
def test_join_multiplicative(K, L):
    assert chi_a1_davis(join(K, L)) == chi_a1_davis(K) * chi_a1_davis(L)


@given(complexes())
def test_strata_excision(K):
    assert chi_a1_from_strata(K.m, cellular_filtration_report(K)) == chi_a1_davis(K)


def test_wedge_and_smash_rules():
    assert gw_wedge_rule([]) == ONE
    assert gw_wedge_rule([ONE + ONE, ONE + ONE]) == GWElement(3, 0)
    # S^{1,0} ∧ S^0 is S^1, whose χ is 0
    assert gw_smash_shift(2 * ONE, 1, 0) == GWElement()
    # S^{1,1} is G_m
    assert gw_smash_shift(2 * ONE, 1, 1) == HYPERBOLIC_GM


def test_classical_polyhedral():
    pts = SimplicialComplex.points(3)
    assert chi_classical_polyhedral(1, 2, pts) == -4
    assert chi_classical_polyhedral(1, 0, pts) == 0
    assert chi_classical_polyhedral(1, 0, SimplicialComplex.simplex(3)) == 1
