"""Wedge summands of suspended moment-angle complexes.

After one suspension the complex, real and motivic moment-angle complexes of
K all split as wedges indexed by the non-faces I of K, with summand a
suspension of |K_I|.  The (co)homology of each of them is therefore a direct
sum over non-faces of shifted (co)homology of full subcomplexes.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from functools import lru_cache

from .complexes import SimplicialComplex, popcount, vertices
from .homology import (
    Z,
    HomologyGroup,
    add_graded,
    graded_to_json,
    reduced_cohomology,
    reduced_homology,
)

FLAVORS = ("motivic", "complex", "real")


def decomposition_index(K: SimplicialComplex) -> list[int]:
    """Non-faces of K in bitmask order.

    Non-faces made only of ghost vertices have ``K_I = {∅}`` and are
    skipped with a warning; for complexes without ghosts this is exactly
    ``list(K.non_faces())``.
    """
    ghost = K.ghost_mask
    if not ghost:
        return list(K.non_faces())
    out = [I for I in K.non_faces() if I & ~ghost]
    warnings.warn(
        f"ghost vertices {list(K.ghost_vertices)}: non-faces inside them are left out of decompositions",
        stacklevel=2,
    )
    return out


@lru_cache(maxsize=64)
def subcomplex_homology(K: SimplicialComplex) -> dict[int, dict[int, HomologyGroup]]:
    """Reduced homology of ``K_I`` for every non-face ``I``."""
    return {I: reduced_homology(K, I) for I in decomposition_index(K)}


@lru_cache(maxsize=64)
def subcomplex_cohomology(K: SimplicialComplex) -> dict[int, dict[int, HomologyGroup]]:
    return {I: reduced_cohomology(K, I) for I in decomposition_index(K)}


@dataclass(frozen=True)
class Summand:
    I: int
    homology: dict  # reduced homology of K_I
    shift: tuple[int, ...]

    @property
    def vertices(self) -> tuple[int, ...]:
        return vertices(self.I)

    @property
    def trivial(self) -> bool:
        return not self.homology

    def to_json(self) -> dict:
        return {
            "I": list(self.vertices),
            "shift": list(self.shift),
            "homology": graded_to_json(self.homology),
            "trivial": self.trivial,
        }


@dataclass(frozen=True)
class DecompositionReport:
    flavor: str
    summands: tuple[Summand, ...]

    def nontrivial(self) -> list[Summand]:
        return [s for s in self.summands if not s.trivial]

    def to_json(self) -> list[dict]:
        return [s.to_json() for s in self.summands]


def summand_shift(I: int, flavor: str) -> tuple[int, ...]:
    k = popcount(I)
    if flavor == "motivic":
        return (k + 2, k)
    if flavor == "complex":
        return (k + 2,)
    if flavor == "real":
        return (2,)
    raise ValueError(f"unknown flavor {flavor!r}; expected one of {FLAVORS}")


def stable_splitting(K: SimplicialComplex, flavor: str = "motivic") -> DecompositionReport:
    """One summand per non-face I, with the homology of K_I and the suspension
    shift of the chosen flavor (bidegree for motivic)."""
    summand_shift(1, flavor)  # validate flavor early
    hom = subcomplex_homology(K)
    return DecompositionReport(flavor, tuple(Summand(I, hom[I], summand_shift(I, flavor)) for I in hom))


def zk_cohomology_groups(K: SimplicialComplex) -> dict[int, HomologyGroup]:
    """Integral cohomology of the moment-angle complex Z_K.

    ``H^0 = Z`` and ``H^i = ⊕_{I ∉ K} H̃^{i-|I|-1}(K_I)`` for ``i > 0``.
    """
    out = {0: Z}
    for I, coh in subcomplex_cohomology(K).items():
        out = add_graded(out, coh, popcount(I) + 1)
    return out


def zk_homology_groups(K: SimplicialComplex) -> dict[int, HomologyGroup]:
    """Reduced integral homology of Z_K: ``⊕_I H̃_{i-|I|-1}(K_I)``."""
    out: dict[int, HomologyGroup] = {}
    for I, hom in subcomplex_homology(K).items():
        out = add_graded(out, hom, popcount(I) + 1)
    return out


def rzk_homology_groups(K: SimplicialComplex) -> dict[int, HomologyGroup]:
    """Reduced integral homology of the real moment-angle complex:
    ``⊕_I H̃_{i-1}(K_I)``."""
    out: dict[int, HomologyGroup] = {}
    for hom in subcomplex_homology(K).values():
        out = add_graded(out, hom, 1)
    return out


def total_ranks(groups: dict[int, HomologyGroup]) -> list[int]:
    """Free ranks as a dense list from degree 0."""
    if not groups:
        return [0]
    top = max(groups)
    return [groups[d].free_rank if d in groups else 0 for d in range(top + 1)]
