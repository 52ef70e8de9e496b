"""Brute-force models used to check the splitting formulas.

* A cubical cell structure on the real moment-angle complex ``(D¹, S⁰)^K``:
  cells are points of ``{0, 1, [0,1]}^m`` whose interval coordinates span a
  face of K.
* Squarefree strands of the Koszul complex of the Stanley-Reisner ring, whose
  homology is ``Tor(k, k[K])``, with ranks taken over Q or F_p by a
  Gaussian elimination that shares nothing with the Smith form code.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction

from .complexes import SimplicialComplex, popcount, submasks, vertices
from .homology import ChainComplex, IntegerMatrix

MAX_CUBICAL_VERTICES = 14


# -- cubical model -----------------------------------------------------------

def cubical_cells(K: SimplicialComplex) -> list[tuple[int, int]]:
    """Cells as ``(interval_support, ones)``: ``interval_support`` is a face,
    ``ones`` the coordinates at 1 (the rest, outside the support, sit at 0)."""
    if K.m > MAX_CUBICAL_VERTICES:
        raise ValueError(f"cubical model limited to m <= {MAX_CUBICAL_VERTICES}")
    full = K.full_mask
    return [(s, t) for s in sorted(K.faces) for t in sorted(submasks(full & ~s))]


def cubical_complex_real_mac(K: SimplicialComplex) -> ChainComplex:
    """Cellular chain complex of the cubical model of ℝZ_K (unreduced).

    The boundary of an interval coordinate k is ``(k at 1) - (k at 0)``, with
    sign ``(-1)^(number of interval coordinates below k)``.
    """
    bases: dict[int, list[tuple[int, int]]] = {}
    for cell in cubical_cells(K):
        bases.setdefault(popcount(cell[0]), []).append(cell)
    index = {d: {c: k for k, c in enumerate(b)} for d, b in bases.items()}
    boundaries = {}
    for d, basis in bases.items():
        if d == 0:
            continue
        below = index[d - 1]
        data: dict[int, dict[int, int]] = {}
        for col, (s, t) in enumerate(basis):
            for pos, v in enumerate(vertices(s)):
                bit = 1 << (v - 1)
                sign = -1 if pos % 2 else 1
                up = below[(s & ~bit, t | bit)]
                down = below[(s & ~bit, t)]
                data.setdefault(up, {})[col] = sign
                data.setdefault(down, {})[col] = -sign
        boundaries[d] = IntegerMatrix(len(bases[d - 1]), len(basis), data)
    return ChainComplex(bases, boundaries)


def cubical_euler_characteristic(K: SimplicialComplex) -> int:
    """Alternating count of cubical cells."""
    return sum((-1) ** popcount(s) for s, _ in cubical_cells(K))


# -- Koszul strands ----------------------------------------------------------

def koszul_strand(K: SimplicialComplex, I: int) -> tuple[dict[int, list[int]], dict[int, dict[tuple[int, int], int]]]:
    """Multidegree-I strand of the Koszul complex ``K(x) ⊗ k[K]``.

    Degree-h basis: ``u_J ⊗ x^{I∖J}`` with ``|J| = h`` and ``I ∖ J ∈ K``.
    ``d(u_J) = Σ_{i ∈ J} ± x_i u_{J∖i}``; a target survives only if
    ``(I ∖ J) ∪ {i}`` is still a face.  Returns the bases and the integer
    differentials ``{h: {(row, col): entry}}`` for ``d_h : C_h → C_{h-1}``.
    """
    faces = K.faces
    bases: dict[int, list[int]] = {}
    for J in sorted(submasks(I)):
        if I & ~J in faces:
            bases.setdefault(popcount(J), []).append(J)
    index = {h: {J: k for k, J in enumerate(b)} for h, b in bases.items()}
    diffs = {}
    for h, basis in bases.items():
        if h == 0:
            continue
        entries = {}
        below = index.get(h - 1, {})
        for col, J in enumerate(basis):
            for pos, v in enumerate(vertices(J)):
                target = J & ~(1 << (v - 1))
                if target in below:  # (I∖J) ∪ {v} is a face
                    entries[(below[target], col)] = -1 if pos % 2 else 1
        diffs[h] = entries
    return bases, diffs


def _rank_mod_p(entries: dict[tuple[int, int], int], p: int) -> int:
    rows: dict[int, dict[int, int]] = {}
    for (i, j), v in entries.items():
        if v % p:
            rows.setdefault(i, {})[j] = v % p
    rank = 0
    pivots: dict[int, dict[int, int]] = {}  # pivot column -> normalised row
    for r in rows.values():
        r = dict(r)
        while r:
            c = min(r)
            if c not in pivots:
                inv = pow(r[c], -1, p)
                pivots[c] = {j: v * inv % p for j, v in r.items()}
                rank += 1
                break
            f = r[c]
            for j, v in pivots[c].items():
                nv = (r.get(j, 0) - f * v) % p
                if nv:
                    r[j] = nv
                else:
                    r.pop(j, None)
    return rank


def _rank_rational(entries: dict[tuple[int, int], int]) -> int:
    rows: dict[int, dict[int, Fraction]] = {}
    for (i, j), v in entries.items():
        if v:
            rows.setdefault(i, {})[j] = Fraction(v)
    rank = 0
    pivots: dict[int, dict[int, Fraction]] = {}
    for r in rows.values():
        r = dict(r)
        while r:
            c = min(r)
            if c not in pivots:
                lead = r[c]
                pivots[c] = {j: v / lead for j, v in r.items()}
                rank += 1
                break
            f = r[c]
            for j, v in pivots[c].items():
                nv = r.get(j, 0) - f * v
                if nv:
                    r[j] = nv
                else:
                    r.pop(j, None)
    return rank


def matrix_rank(entries: dict[tuple[int, int], int], coefficients="Q") -> int:
    if coefficients in ("Q", 0, None):
        return _rank_rational(entries)
    p = int(coefficients)
    if p < 2 or any(p % q == 0 for q in range(2, int(p**0.5) + 1)):
        raise ValueError(f"{p} is not prime")
    return _rank_mod_p(entries, p)


def strand_homology_ranks(K: SimplicialComplex, I: int, coefficients="Q") -> dict[int, int]:
    bases, diffs = koszul_strand(K, I)
    ranks = {h: matrix_rank(e, coefficients) for h, e in diffs.items()}
    out = {}
    for h, b in bases.items():
        r = len(b) - ranks.get(h, 0) - ranks.get(h + 1, 0)
        if r:
            out[h] = r
    return out


def koszul_tor_ranks(K: SimplicialComplex, coefficients="Q") -> dict[tuple[int, int], int]:
    """Ranks of ``Tor_h(k, k[K])`` in each squarefree multidegree I, keyed by
    the A¹ coordinates ``(i, j) = (2|I| - h, |I|)``."""
    table: Counter = Counter()
    for I in range(1 << K.m):
        p = popcount(I)
        for h, r in strand_homology_ranks(K, I, coefficients).items():
            table[(2 * p - h, p)] += r
    return dict(sorted(table.items()))
