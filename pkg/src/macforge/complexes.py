"""Abstract simplicial complexes on the vertex set [m].

Vertex subsets are plain ``int`` bitmasks: vertex ``i`` (1-based) is bit
``i - 1``.  Every iterator in this module yields subsets in increasing
bitmask order so that downstream reports are reproducible.

>>> square = SimplicialComplex.from_facets(4, [[1, 3], [2, 3], [2, 4], [1, 4]])
>>> len(square.faces)
9
>>> [vertices(f) for f in square.non_faces()][:2]
[(1, 2), (3, 4)]
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

MAX_VERTICES = 24


class ComplexError(ValueError):
    """Base class for invalid simplicial complex input."""


class VertexOutOfRange(ComplexError):
    pass


class GhostVertex(ComplexError):
    pass


class MTooLarge(ComplexError):
    pass


class DualHasGhostVertex(UserWarning):
    """The Alexander dual has vertices lying in no face."""


# -- bitmask helpers ---------------------------------------------------------

def mask(vs: Iterable[int]) -> int:
    """Bitmask of a collection of 1-based vertices."""
    out = 0
    for v in vs:
        out |= 1 << (v - 1)
    return out


def vertices(s: int) -> tuple[int, ...]:
    """Sorted 1-based vertices of a bitmask."""
    out = []
    i = 1
    while s:
        if s & 1:
            out.append(i)
        s >>= 1
        i += 1
    return tuple(out)


def popcount(s: int) -> int:
    return bin(s).count("1")


def submasks(s: int) -> Iterator[int]:
    """All subsets of ``s`` (including 0 and ``s``), in no particular order."""
    sub = s
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & s


def lex_key(s: int) -> tuple[int, ...]:
    return vertices(s)


# -- complexes ---------------------------------------------------------------

class SimplicialComplex:
    """A downward-closed family of subsets of [m], stored as bitmasks.

    Construct with :meth:`from_facets`.  By default every singleton must be a
    face; ``allow_ghost=True`` lifts that rule (the ghost vertices are then
    listed in :attr:`ghost_vertices`).
    """

    __slots__ = ("m", "faces", "__dict__")

    def __init__(self, m: int, faces: Iterable[int]):
        # Unchecked constructor; callers guarantee downward closure.
        self.m = m
        self.faces = frozenset(faces)

    @classmethod
    def from_facets(cls, m: int, facets: Iterable[Iterable[int]], allow_ghost: bool = False) -> "SimplicialComplex":
        if m > MAX_VERTICES:
            raise MTooLarge(f"m = {m} exceeds the limit of {MAX_VERTICES} vertices")
        if m < 1:
            raise ComplexError("m must be at least 1")
        faces = {0}
        for facet in facets:
            facet = list(facet)
            for v in facet:
                if not isinstance(v, int) or isinstance(v, bool) or not 1 <= v <= m:
                    raise VertexOutOfRange(f"vertex {v!r} not in 1..{m}")
            s = mask(facet)
            if s in faces:
                continue
            faces.update(submasks(s))
        K = cls(m, faces)
        if K.ghost_vertices and not allow_ghost:
            raise GhostVertex(f"vertices {list(K.ghost_vertices)} lie in no facet")
        return K

    @classmethod
    def simplex(cls, m: int) -> "SimplicialComplex":
        return cls.from_facets(m, [range(1, m + 1)])

    @classmethod
    def boundary_of_simplex(cls, m: int) -> "SimplicialComplex":
        """The boundary of the (m-1)-simplex, on m vertices."""
        full = range(1, m + 1)
        return cls.from_facets(m, [[v for v in full if v != w] for w in full])

    @classmethod
    def points(cls, m: int) -> "SimplicialComplex":
        return cls.from_facets(m, [[i] for i in range(1, m + 1)])

    # -- basic structure --

    @property
    def full_mask(self) -> int:
        return (1 << self.m) - 1

    @cached_property
    def facets(self) -> tuple[int, ...]:
        fs = self.faces
        out = []
        for f in sorted(fs):
            if not any(f | (1 << i) in fs for i in range(self.m) if not f >> i & 1):
                out.append(f)
        return tuple(out)

    @cached_property
    def ghost_vertices(self) -> tuple[int, ...]:
        return tuple(i + 1 for i in range(self.m) if (1 << i) not in self.faces)

    @property
    def ghost_mask(self) -> int:
        return mask(self.ghost_vertices)

    @property
    def is_valid(self) -> bool:
        """Contains the empty face and every singleton."""
        return 0 in self.faces and not self.ghost_vertices

    @property
    def dim(self) -> int:
        return max((popcount(f) for f in self.faces), default=0) - 1

    def is_full_simplex(self) -> bool:
        return self.full_mask in self.faces

    def f_vector(self) -> list[int]:
        """Face counts by size, starting with the empty face."""
        out = [0] * (self.dim + 2)
        for f in self.faces:
            out[popcount(f)] += 1
        return out

    def __contains__(self, s: int) -> bool:
        return s in self.faces

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.m == other.m and self.faces == other.faces

    def __hash__(self):
        return hash((self.m, self.faces))

    def __repr__(self):
        fs = [list(vertices(f)) for f in self.facets]
        return f"SimplicialComplex(m={self.m}, facets={fs})"

    def facet_lists(self) -> list[list[int]]:
        return [list(vertices(f)) for f in self.facets]

    # -- enumeration --

    def non_faces(self) -> Iterator[int]:
        """Subsets of [m] that are not faces, in increasing bitmask order."""
        faces = self.faces
        return (s for s in range(1 << self.m) if s not in faces)

    def faces_sorted(self) -> list[int]:
        return sorted(self.faces)


def full_subcomplex(K: SimplicialComplex, I: int) -> tuple[SimplicialComplex, tuple[int, ...]]:
    """The full subcomplex on ``I``, relabelled onto 1..|I|.

    Returns the complex and the tuple of original labels, so that new vertex
    ``k`` is ``labels[k - 1]``.  ``I = 0`` gives ``{∅}`` on zero vertices.
    """
    labels = vertices(I)
    pos = {v: k for k, v in enumerate(labels)}
    faces = set()
    outside = ~I
    for f in K.faces:
        if f & outside == 0:
            g = 0
            for v in vertices(f):
                g |= 1 << pos[v]
            faces.add(g)
    return SimplicialComplex(len(labels), faces), labels


def restrict_faces(K: SimplicialComplex, I: int) -> list[int]:
    """Faces of K contained in I, unrelabelled, in bitmask order."""
    outside = ~I
    return sorted(f for f in K.faces if f & outside == 0)


def alexander_dual(K: SimplicialComplex) -> SimplicialComplex:
    """``{σ ⊆ [m] : [m] \\ σ ∉ K}``.

    The dual may have ghost vertices, or even no faces at all (for the full
    simplex).  It is returned regardless; check :attr:`is_valid`.
    """
    import warnings

    full = K.full_mask
    faces = K.faces
    D = SimplicialComplex(K.m, (s for s in range(1 << K.m) if full & ~s not in faces))
    if D.ghost_vertices:
        warnings.warn(f"Alexander dual has ghost vertices {list(D.ghost_vertices)}", DualHasGhostVertex, stacklevel=2)
    return D


def join(K: SimplicialComplex, L: SimplicialComplex) -> SimplicialComplex:
    m = K.m + L.m
    if m > MAX_VERTICES:
        raise MTooLarge(f"join has {m} vertices, limit is {MAX_VERTICES}")
    return SimplicialComplex(m, (f | (g << K.m) for f in K.faces for g in L.faces))


def skeleton(K: SimplicialComplex, i: int) -> SimplicialComplex:
    if i < 0:
        raise ValueError("skeleton dimension must be non-negative")
    return SimplicialComplex(K.m, (f for f in K.faces if popcount(f) <= i + 1))


@dataclass(frozen=True)
class MonomialIdeal:
    """Squarefree monomial ideal; each generator is the bitmask of its support.

    Generators are minimalized and kept in lexicographic order of their sorted
    vertex tuples.  The generator ``0`` is the unit monomial 1.
    """

    m: int
    generators: tuple[int, ...]

    def __init__(self, m: int, generators: Iterable[int]):
        gens = set(generators)
        minimal = [g for g in gens if not any(h != g and h & g == h for h in gens)]
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "generators", tuple(sorted(minimal, key=lex_key)))

    def __len__(self):
        return len(self.generators)

    def is_unit(self) -> bool:
        return 0 in self.generators

    def __str__(self):
        if not self.generators:
            return "(0)"
        return "(" + ", ".join(monomial_str(g) for g in self.generators) + ")"


def monomial_str(g: int, var: str = "x") -> str:
    if g == 0:
        return "1"
    return "*".join(f"{var}{v}" for v in vertices(g))


def minimal_non_faces(K: SimplicialComplex) -> MonomialIdeal:
    """Minimal generators of the Stanley-Reisner ideal."""
    faces = K.faces
    gens = []
    for s in K.non_faces():
        if all(s & ~(1 << i) in faces for i in range(K.m) if s >> i & 1):
            gens.append(s)
    return MonomialIdeal(K.m, gens)


def stanley_reisner_ideal(K: SimplicialComplex) -> MonomialIdeal:
    return minimal_non_faces(K)


def euler_characteristic(K: SimplicialComplex) -> int:
    """Sum over non-empty faces of ``(-1)^(|σ|-1)``; zero for ``{∅}``."""
    return sum((-1) ** (popcount(f) - 1) for f in K.faces if f)


def is_flag(K: SimplicialComplex) -> bool:
    """Every set of pairwise adjacent vertices spans a face."""
    faces = K.faces
    for s in K.non_faces():
        if popcount(s) >= 3 and all(
            (1 << a | 1 << b) in faces for a in range(K.m) for b in range(a + 1, K.m) if s >> a & 1 and s >> b & 1
        ):
            return False
    return True


# -- corpora -----------------------------------------------------------------

def all_complexes(m: int) -> Iterator[SimplicialComplex]:
    """Every simplicial complex on [m] without ghost vertices.

    Subsets are decided in order of size, a set being eligible only when all
    of its codimension-one faces were included, which yields each downward
    closed family exactly once.
    """
    if m < 1:
        return
    base = {0} | {1 << i for i in range(m)}
    candidates = sorted((s for s in range(1 << m) if popcount(s) >= 2), key=lambda s: (popcount(s), s))

    def rec(k: int, faces: set):
        if k == len(candidates):
            yield SimplicialComplex(m, faces)
            return
        s = candidates[k]
        yield from rec(k + 1, faces)
        if all(s & ~(1 << i) in faces for i in range(m) if s >> i & 1):
            faces.add(s)
            yield from rec(k + 1, faces)
            faces.discard(s)

    yield from rec(0, set(base))


def random_complex(m: int, rng: random.Random, max_facets: int | None = None) -> SimplicialComplex:
    """Draw a facet count and that many uniform non-empty subsets, close
    downward, and redraw until no vertex is a ghost."""
    if max_facets is None:
        max_facets = m + 2
    while True:
        n = rng.randint(1, max_facets)
        facets = [rng.randint(1, (1 << m) - 1) for _ in range(n)]
        faces = {0}
        for f in facets:
            faces.update(submasks(f))
        K = SimplicialComplex(m, faces)
        if not K.ghost_vertices:
            return K
