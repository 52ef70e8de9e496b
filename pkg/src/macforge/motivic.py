"""Cellular A¹-homology, A¹-Betti numbers and motivic cohomology shapes.

Milnor-Witt K-theory sheaves appear only as formal weights: ``KMW(n)`` is an
opaque tag and the one rewrite rule used is ``KMW(i) ⊗ KMW(j) = KMW(i+j)``.
A finitely generated abelian group tensored with ``KMW(n)`` is kept as the
pair ``(group, n)``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Mapping

from .complexes import GhostVertex, SimplicialComplex, is_flag, popcount, vertices
from .homology import ZERO, HomologyGroup, Z, graded_to_json
from .splitting import subcomplex_cohomology, subcomplex_homology


@dataclass(frozen=True)
class SheafTerm:
    group: HomologyGroup
    weight: int

    def render(self) -> str:
        return _render_term(self.group, self.weight)


def _power(s: str, r: int) -> str:
    return s if r == 1 else f"{s}^{r}"


def _render_term(g: HomologyGroup, n: int) -> str:
    parts = []
    if g.free_rank:
        parts.append(_power("Z" if n == 0 else f"KMW({n})", g.free_rank))
    for t, c in sorted(Counter(g.torsion).items()):
        parts.append(_power(f"Z/{t}" if n == 0 else f"(Z/{t} ⊗ KMW({n}))", c))
    return " ⊕ ".join(parts)


@dataclass(frozen=True)
class SheafExpression:
    """Formal direct sum ``⊕_n G_n ⊗ KMW(n)``, one group per weight."""

    by_weight: tuple[tuple[int, HomologyGroup], ...] = ()

    @classmethod
    def from_terms(cls, terms) -> "SheafExpression":
        acc: dict[int, HomologyGroup] = {}
        for t in terms:
            if t.weight < 0:
                raise ValueError("weights are non-negative")
            acc[t.weight] = acc.get(t.weight, ZERO) + t.group
        return cls(tuple((n, g) for n, g in sorted(acc.items()) if g))

    @classmethod
    def of(cls, group: HomologyGroup, weight: int = 0) -> "SheafExpression":
        return cls.from_terms([SheafTerm(group, weight)])

    @property
    def terms(self) -> list[SheafTerm]:
        return [SheafTerm(g, n) for n, g in self.by_weight]

    def __add__(self, other: "SheafExpression") -> "SheafExpression":
        return SheafExpression.from_terms(self.terms + other.terms)

    def __bool__(self):
        return bool(self.by_weight)

    def weight(self, n: int) -> HomologyGroup:
        return dict(self.by_weight).get(n, ZERO)

    def render(self) -> str:
        if not self.by_weight:
            return "0"
        return " ⊕ ".join(_render_term(g, n) for n, g in self.by_weight)

    __str__ = render

    def to_json(self) -> list[dict]:
        return [{"weight": n, **g.to_json()} for n, g in self.by_weight]


def tensor_kmw(e: SheafExpression, n: int) -> SheafExpression:
    """``e ⊗ KMW(n)``: every weight goes up by ``n``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return SheafExpression(tuple((w + n, g) for w, g in e.by_weight))


# Graded sheaf homology of a pointed chain complex is stored reduced:
# ``{degree: SheafExpression}`` with the basepoint's Z left implicit.

def smash_with_gm_power(reduced: Mapping[int, SheafExpression], n: int) -> dict[int, SheafExpression]:
    """Smash with ``Z ⊕ KMW(n)``: ``H_0 = Z ⊕ H̃_0 ⊗ KMW(n)``,
    ``H_i = H_i ⊗ KMW(n)`` above degree 0.  In reduced form that is a weight
    shift in every degree."""
    if n <= 0:
        raise ValueError("n must be positive")
    return {d: tensor_kmw(e, n) for d, e in reduced.items()}


def suspend(reduced: Mapping[int, SheafExpression], times: int = 1) -> dict[int, SheafExpression]:
    """``H̃_i(ΣC) = H̃_{i-1}(C)``; negative ``times`` desuspends."""
    return {d + times: e for d, e in reduced.items()}


def unreduced(reduced: Mapping[int, SheafExpression]) -> dict[int, SheafExpression]:
    out = dict(reduced)
    out[0] = SheafExpression.of(Z) + out.get(0, SheafExpression())
    return dict(sorted(out.items()))


def _check_ghosts(K: SimplicialComplex, allow_ghost: bool):
    if K.ghost_vertices and not allow_ghost:
        raise GhostVertex(f"ghost vertices {list(K.ghost_vertices)} make the degree-0 statement fail")


def cellular_a1_homology(K: SimplicialComplex, allow_ghost: bool = False) -> dict[int, SheafExpression]:
    """``H_0 = Z`` and ``H_i = ⊕_{I ∉ K} H̃_{i-1}(K_I) ⊗ KMW(|I|)`` for ``i > 0``.

    Degrees with zero homology are omitted.
    """
    _check_ghosts(K, allow_ghost)
    acc: dict[int, list[SheafTerm]] = {}
    for I, hom in subcomplex_homology(K).items():
        for d, g in hom.items():
            acc.setdefault(d + 1, []).append(SheafTerm(g, popcount(I)))
    out = {0: SheafExpression.of(Z)}
    for i in sorted(acc):
        e = SheafExpression.from_terms(acc[i])
        if e:
            out[i] = e
    return out


def cellular_a1_homology_via_splitting(K: SimplicialComplex, allow_ghost: bool = False) -> dict[int, SheafExpression]:
    """Same homology assembled from the stable splitting summands using only
    the suspension and ``G_m``-smash rules, then desuspended once."""
    _check_ghosts(K, allow_ghost)
    wedge: dict[int, SheafExpression] = {}
    for I, hom in subcomplex_homology(K).items():
        piece = {d: SheafExpression.of(g) for d, g in hom.items()}
        piece = smash_with_gm_power(suspend(piece, 2), popcount(I))
        for d, e in piece.items():
            wedge[d] = wedge.get(d, SheafExpression()) + e
    return unreduced({d: e for d, e in suspend(wedge, -1).items() if e})


def render_cellular(h: Mapping[int, SheafExpression]) -> dict[int, str]:
    return {d: e.render() for d, e in sorted(h.items())}


# -- Betti numbers -----------------------------------------------------------

BigradedTable = dict  # (i, j) -> rank, zero entries omitted


def a1_betti_numbers(K: SimplicialComplex) -> BigradedTable:
    """``b^{i,j} = Σ_{I ∉ K, |I| = j} rank H̃^{i-j-1}(K_I)``, and ``b^{0,0} = 1``."""
    table: Counter = Counter({(0, 0): 1})
    for I, coh in subcomplex_cohomology(K).items():
        j = popcount(I)
        for d, g in coh.items():
            if g.free_rank:
                table[(d + j + 1, j)] += g.free_rank
    return dict(sorted(table.items()))


def classical_to_a1(key: tuple[int, int]) -> tuple[int, int]:
    """Classical ``(-h, 2p)`` (Tor degree h, multidegree size p) to A¹ ``(i, j)``."""
    neg_h, two_p = key
    p = two_p // 2
    return (2 * p + neg_h, p)


def a1_to_classical(key: tuple[int, int]) -> tuple[int, int]:
    i, j = key
    return (i - 2 * j, 2 * j)


def classical_bigraded_betti(K: SimplicialComplex, reindex: bool = True) -> BigradedTable:
    """Bigraded Betti numbers ``b^{-h,2p}`` of Z_K from Hochster's formula.

    ``Tor_h`` in squarefree multidegree I is ``H̃^{|I|-h-1}(K_I)``.  Faces
    other than ∅ have contractible K_I, so only non-faces and ``I = ∅``
    (which gives ``b^{0,0} = 1``) contribute.  With ``reindex`` the table is
    keyed by the A¹ coordinates ``(i, j)``; otherwise by ``(-h, 2p)``.
    """
    table: Counter = Counter({(0, 0): 1})
    for I, coh in subcomplex_cohomology(K).items():
        p = popcount(I)
        for d, g in coh.items():
            if g.free_rank:
                table[(-(p - d - 1), 2 * p)] += g.free_rank
    if reindex:
        table = Counter({classical_to_a1(k): v for k, v in table.items()})
    return dict(sorted(table.items()))


def betti_grid(table: BigradedTable) -> list[list[int]]:
    """Dense grid ``grid[j][i]`` of a table keyed by ``(i, j)``."""
    if not table:
        return []
    imax = max(i for i, _ in table)
    jmax = max(j for _, j in table)
    return [[table.get((i, j), 0) for i in range(imax + 1)] for j in range(jmax + 1)]


# -- motivic cohomology ------------------------------------------------------

@dataclass
class MotivicCohomology:
    """Reduced motivic cohomology of Z_K over the coefficient ring A.

    With ``module_form`` the value is ``⊕ A[p, q]^mult`` as listed in
    ``summands``.  Otherwise only the group-level identification is given:
    each entry says that ``H̃^{*,*}(|K_I|)`` appears shifted by ``[j+1, j]``.
    """

    module_form: bool
    hypothesis: str
    summands: list[tuple[int, int, int]] = field(default_factory=list)
    groups: list[dict] = field(default_factory=list)

    def render(self) -> str:
        if not self.module_form:
            return "module_form: unavailable"
        if not self.summands:
            return "0"
        return " ⊕ ".join(_power(f"A[{p},{q}]", c) for p, q, c in self.summands)

    def to_json(self) -> dict:
        out = {"module_form": self.module_form if self.module_form else "unavailable", "hypothesis": self.hypothesis}
        if self.module_form:
            out["summands"] = [{"shift": [p, q], "multiplicity": c} for p, q, c in self.summands]
        else:
            out["groups"] = self.groups
        return out


def motivic_cohomology_decomposition(K: SimplicialComplex) -> MotivicCohomology:
    coh = subcomplex_cohomology(K)
    hom = subcomplex_homology(K)
    torsion = any(g.torsion for h in hom.values() for g in h.values())
    if torsion:
        groups = [
            {"I": list(vertices(I)), "shift": [popcount(I) + 1, popcount(I)], "cohomology": graded_to_json(c)}
            for I, c in coh.items()
            if c
        ]
        return MotivicCohomology(False, "torsion in some full subcomplex", groups=groups)
    hypothesis = "flag complex" if is_flag(K) else "torsion-free homology only; wedge of spheres not verified"
    table = a1_betti_numbers(K)
    summands = sorted((i, j, c) for (i, j), c in table.items() if (i, j) != (0, 0))
    summands.sort(key=lambda t: (t[1], t[0]))
    return MotivicCohomology(True, hypothesis, summands=summands)
