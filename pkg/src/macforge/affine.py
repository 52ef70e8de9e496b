"""Scheme models of the motivic moment-angle complex.

Z_K^{A¹} is the complement in A^m of a union of coordinate subspaces, and two
affine torsors over that complement give affine models.  Presentations are
structured data with a deterministic text rendering; nothing here does any
commutative algebra on them.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import MonomialIdeal, SimplicialComplex, minimal_non_faces, popcount, vertices


class EmptyIdeal(ValueError):
    pass


# A term is (coefficient, variable names); a polynomial is a tuple of terms.
Term = tuple[int, tuple[str, ...]]


@dataclass(frozen=True)
class RingPresentation:
    variables: tuple[str, ...]
    relations: tuple[tuple[Term, ...], ...]

    def __post_init__(self):
        declared = set(self.variables)
        for rel in self.relations:
            for _, names in rel:
                missing = set(names) - declared
                if missing:
                    raise ValueError(f"undeclared variables {sorted(missing)}")

    def render(self) -> str:
        ring = "k[" + ",".join(self.variables) + "]"
        if not self.relations:
            return ring
        return ring + "/(" + ", ".join(render_polynomial(r) for r in self.relations) + ")"

    __str__ = render

    def to_json(self) -> dict:
        return {
            "variables": list(self.variables),
            "relations": [[{"coef": c, "vars": list(v)} for c, v in rel] for rel in self.relations],
        }


def render_polynomial(terms) -> str:
    out = []
    for k, (c, names) in enumerate(terms):
        mono = "*".join(names)
        mag = abs(c)
        body = mono if mag == 1 and mono else (f"{mag}*{mono}" if mono else str(mag))
        if k == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out) if out else "0"


def complement_ideal(K: SimplicialComplex) -> MonomialIdeal:
    """Monomials ``∏_{i ∉ σ} x_i`` over the facets σ, minimalized.

    For the full simplex this is the unit ideal (generator ``0``, the empty
    product), so the removed locus is empty and the complement is A^m.
    """
    full = K.full_mask
    return MonomialIdeal(K.m, (full & ~f for f in K.facets))


def _xs(m: int) -> tuple[str, ...]:
    return tuple(f"x{i}" for i in range(1, m + 1))


def _support_label(g: int, m: int) -> str:
    sep = "" if m < 10 else "_"
    return sep.join(str(v) for v in vertices(g))


def jouanolou_presentation(ideal: MonomialIdeal, aux: str = "y") -> RingPresentation:
    """``k[x, y] / (f_1 y_1 + ... + f_n y_n - 1)``.

    The auxiliary variable of generator f is named after its support, so
    ``(x1, x2)`` gives ``y1, y2`` and ``x1*x3`` gives ``y13``.  The unit ideal
    cuts out nothing, so the model is the polynomial ring itself.
    """
    if not ideal.generators:
        raise EmptyIdeal("the zero ideal removes all of A^m; no torsor model")
    if ideal.is_unit():
        return RingPresentation(_xs(ideal.m), ())
    ys = tuple(aux + _support_label(g, ideal.m) for g in ideal.generators)
    terms = [(1, tuple(f"x{v}" for v in vertices(g)) + (y,)) for g, y in zip(ideal.generators, ys)]
    terms.append((-1, ()))
    return RingPresentation(_xs(ideal.m) + ys, (tuple(terms),))


def sr_cover_presentation(K: SimplicialComplex, aux: str = "y") -> RingPresentation:
    """``k[x, y_ij] / (Σ_{i ∈ f_j} x_i y_ij - 1 : f_j)`` over the minimal
    generators ``f_j`` of the Stanley-Reisner ideal.

    When no vertex lies in two generators the second index is redundant and
    ``y_ij`` is written ``y{i}``.  The full simplex has no generators and
    gives the polynomial ring.
    """
    gens = minimal_non_faces(K).generators
    if not gens:
        return RingPresentation(_xs(K.m), ())
    disjoint = popcount(_or_all(gens)) == sum(popcount(g) for g in gens)
    ys: list[str] = []
    relations = []
    for j, g in enumerate(gens, start=1):
        terms = []
        for i in vertices(g):
            y = f"{aux}{i}" if disjoint else f"{aux}{i}_{j}"
            ys.append(y)
            terms.append((1, (f"x{i}", y)))
        terms.append((-1, ()))
        relations.append(tuple(terms))
    return RingPresentation(_xs(K.m) + tuple(ys), tuple(relations))


def _or_all(gs) -> int:
    out = 0
    for g in gs:
        out |= g
    return out


def dual_presentation(K: SimplicialComplex, aux: str = "y") -> RingPresentation:
    """Torsor model over the complement of ``V(I_{K^∨})``."""
    return jouanolou_presentation(complement_ideal(K), aux)


@dataclass(frozen=True)
class Stratum:
    """All strata coming from faces of one size.

    Each face σ of size ``face_size`` gives the locally closed torus
    ``{x_i = 0 for i ∈ σ, x_i ≠ 0 otherwise} ≅ G_m^(m - |σ|)``.
    ``skeleton_dim`` is the other reading of the index, ``|σ| - 1``.
    """

    face_size: int
    count: int
    torus_dim: int

    @property
    def codimension(self) -> int:
        return self.face_size

    @property
    def skeleton_dim(self) -> int:
        return self.face_size - 1

    def to_json(self) -> dict:
        return {
            "face_size": self.face_size,
            "count": self.count,
            "torus_dim": self.torus_dim,
            "codimension": self.codimension,
            "skeleton_dim": self.skeleton_dim,
        }


def cellular_filtration_report(K: SimplicialComplex) -> list[Stratum]:
    """Strata of the skeletal filtration, the open torus ``G_m^m`` first."""
    fv = K.f_vector()
    return [Stratum(k, c, K.m - k) for k, c in enumerate(fv) if c]
