"""Exact integer chain complexes and (co)homology via Smith normal form.

All arithmetic is on Python ints.  Homology is returned as a ``dict``
mapping degree to :class:`HomologyGroup`, with zero groups left out.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Mapping, NamedTuple

from .complexes import SimplicialComplex, popcount, restrict_faces, vertices


class NotAComplex(ValueError):
    """A boundary composite ∂∘∂ is non-zero."""


# -- groups ------------------------------------------------------------------

def invariant_factors(ds: Iterable[int]) -> tuple[int, ...]:
    """Invariant factors (> 1) of the diagonal group ⊕ Z/d.

    Zeros are ignored (they are free summands, not torsion).
    """
    d = [abs(x) for x in ds if x not in (0, 1, -1)]
    n = len(d)
    for i in range(n):
        for j in range(i + 1, n):
            g = gcd(d[i], d[j])
            d[i], d[j] = g, d[i] * d[j] // g
    return tuple(x for x in d if x > 1)


@dataclass(frozen=True)
class HomologyGroup:
    """Z^free_rank ⊕ Z/t1 ⊕ ... ⊕ Z/tk with t1 | t2 | ... | tk."""

    free_rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion", invariant_factors(self.torsion))

    def __add__(self, other: "HomologyGroup") -> "HomologyGroup":
        return HomologyGroup(self.free_rank + other.free_rank, self.torsion + other.torsion)

    def __bool__(self):
        return self.free_rank > 0 or bool(self.torsion)

    def __str__(self):
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts += [f"Z/{t}" for t in self.torsion]
        return " ⊕ ".join(parts) if parts else "0"

    def to_json(self) -> dict:
        return {"rank": self.free_rank, "torsion": list(self.torsion)}


Z = HomologyGroup(1)
ZERO = HomologyGroup()


def direct_sum(groups: Iterable[HomologyGroup]) -> HomologyGroup:
    out = ZERO
    for g in groups:
        out = out + g
    return out


def add_graded(a: Mapping[int, HomologyGroup], b: Mapping[int, HomologyGroup], shift: int = 0) -> dict[int, HomologyGroup]:
    """``a ⊕ b[shift]``: degree d of ``b`` lands in degree d + shift."""
    out = dict(a)
    for d, g in b.items():
        out[d + shift] = out.get(d + shift, ZERO) + g
    return {d: g for d, g in sorted(out.items()) if g}


# -- matrices ----------------------------------------------------------------

@dataclass
class IntegerMatrix:
    """Sparse integer matrix stored as ``{row: {col: value}}``."""

    rows: int
    cols: int
    data: dict[int, dict[int, int]] = field(default_factory=dict)

    @classmethod
    def from_dense(cls, entries: list[list[int]]) -> "IntegerMatrix":
        rows = len(entries)
        cols = len(entries[0]) if rows else 0
        data = {}
        for i, row in enumerate(entries):
            if len(row) != cols:
                raise ValueError("ragged matrix")
            r = {j: int(v) for j, v in enumerate(row) if v}
            if r:
                data[i] = r
        return cls(rows, cols, data)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntegerMatrix":
        return cls(rows, cols, {})

    def to_dense(self) -> list[list[int]]:
        out = [[0] * self.cols for _ in range(self.rows)]
        for i, r in self.data.items():
            for j, v in r.items():
                out[i][j] = v
        return out

    def __getitem__(self, ij):
        i, j = ij
        return self.data.get(i, {}).get(j, 0)

    def transpose(self) -> "IntegerMatrix":
        data: dict[int, dict[int, int]] = {}
        for i, r in self.data.items():
            for j, v in r.items():
                data.setdefault(j, {})[i] = v
        return IntegerMatrix(self.cols, self.rows, data)

    def __matmul__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        data = {}
        for i, r in self.data.items():
            acc: dict[int, int] = {}
            for k, a in r.items():
                for j, b in other.data.get(k, {}).items():
                    acc[j] = acc.get(j, 0) + a * b
            acc = {j: v for j, v in acc.items() if v}
            if acc:
                data[i] = acc
        return IntegerMatrix(self.rows, other.cols, data)

    def is_zero(self) -> bool:
        return not any(self.data.values())

    def permuted(self, row_perm: list[int], col_perm: list[int]) -> "IntegerMatrix":
        """Row ``i`` moves to ``row_perm[i]``, column ``j`` to ``col_perm[j]``."""
        data = {}
        for i, r in self.data.items():
            data[row_perm[i]] = {col_perm[j]: v for j, v in r.items()}
        return IntegerMatrix(self.rows, self.cols, data)

    def dump(self) -> str:
        return "\n".join(" ".join(f"{v:3d}" for v in row) for row in self.to_dense())


# -- Smith normal form -------------------------------------------------------

class SNF(NamedTuple):
    factors: tuple[int, ...]  # non-zero invariant factors d1 | d2 | ...
    rank: int


def smith_normal_form(M: IntegerMatrix) -> SNF:
    """Invariant factors and rank of an integer matrix.

    Unit pivots are eliminated first on the sparse representation (boundary
    matrices are mostly ±1), and whatever survives is diagonalised densely.
    """
    rows = {i: dict(r) for i, r in M.data.items() if r}
    cols: dict[int, set[int]] = {}
    for i, r in rows.items():
        for j in r:
            cols.setdefault(j, set()).add(i)

    units = 0
    while True:
        pivot = _find_unit(rows, cols)
        if pivot is None:
            break
        pi, pj = pivot
        prow = rows.pop(pi)
        for j in prow:
            cols[j].discard(pi)
        p = prow[pj]
        for i in list(cols.get(pj, ())):
            r = rows[i]
            c = r[pj] * p  # p = ±1, so c = r[pj] / p
            for j, v in prow.items():
                nv = r.get(j, 0) - c * v
                if nv:
                    if j not in r:
                        cols.setdefault(j, set()).add(i)
                    r[j] = nv
                elif j in r:
                    del r[j]
                    cols[j].discard(i)
            if not r:
                del rows[i]
        cols.pop(pj, None)
        units += 1

    rest = _dense_diagonal(rows)
    factors = (1,) * units + _normalise_diagonal(rest)
    return SNF(factors, len(factors))


def _find_unit(rows, cols):
    best = None
    best_cost = None
    for i, r in rows.items():
        for j, v in r.items():
            if v == 1 or v == -1:
                cost = (len(r) - 1) * (len(cols[j]) - 1)
                if best is None or cost < best_cost:
                    best, best_cost = (i, j), cost
                    if cost == 0:
                        return best
    return best


def _dense_diagonal(rows: dict[int, dict[int, int]]) -> list[int]:
    """Diagonalise the remaining block by gcd row/column operations."""
    if not rows:
        return []
    col_ids = sorted({j for r in rows.values() for j in r})
    cidx = {j: k for k, j in enumerate(col_ids)}
    A = []
    for r in rows.values():
        row = [0] * len(col_ids)
        for j, v in r.items():
            row[cidx[j]] = v
        A.append(row)
    diag = []
    nr, nc = len(A), len(col_ids)
    t = 0
    while t < min(nr, nc):
        # smallest non-zero entry as pivot
        piv = None
        for i in range(t, nr):
            for j in range(t, nc):
                if A[i][j] and (piv is None or abs(A[i][j]) < abs(A[piv[0]][piv[1]])):
                    piv = (i, j)
        if piv is None:
            break
        i, j = piv
        A[t], A[i] = A[i], A[t]
        for row in A:
            row[t], row[j] = row[j], row[t]
        while True:
            p = A[t][t]
            done = True
            for i in range(t + 1, nr):
                if A[i][t]:
                    q = A[i][t] // p
                    if q:
                        A[i] = [a - q * b for a, b in zip(A[i], A[t])]
                    if A[i][t]:
                        done = False
            for j in range(t + 1, nc):
                if A[t][j]:
                    q = A[t][j] // p
                    if q:
                        for row in A:
                            row[j] -= q * row[t]
                    if A[t][j]:
                        done = False
            if done:
                break
            # move the smallest remaining entry of row/column t into the pivot
            best = (abs(p), t, t)
            for i in range(t + 1, nr):
                if A[i][t] and abs(A[i][t]) < best[0]:
                    best = (abs(A[i][t]), i, t)
            for j in range(t + 1, nc):
                if A[t][j] and abs(A[t][j]) < best[0]:
                    best = (abs(A[t][j]), t, j)
            _, i, j = best
            if i != t:
                A[t], A[i] = A[i], A[t]
            if j != t:
                for row in A:
                    row[t], row[j] = row[j], row[t]
        diag.append(abs(A[t][t]))
        t += 1
    return diag


def _normalise_diagonal(diag: list[int]) -> tuple[int, ...]:
    d = [abs(x) for x in diag if x]
    n = len(d)
    for i in range(n):
        for j in range(i + 1, n):
            g = gcd(d[i], d[j])
            d[i], d[j] = g, d[i] * d[j] // g
    return tuple(d)


def smith_normal_form_with_transforms(M: IntegerMatrix):
    """Dense Smith form with unimodular ``U``, ``V`` such that ``U M V = D``.

    Returns ``(D, U, V)`` as lists of lists.  Meant for small matrices and
    for checking :func:`smith_normal_form`.
    """
    A = M.to_dense()
    nr, nc = M.rows, M.cols
    U = [[int(i == j) for j in range(nr)] for i in range(nr)]
    V = [[int(i == j) for j in range(nc)] for i in range(nc)]

    def swap_rows(a, b):
        A[a], A[b] = A[b], A[a]
        U[a], U[b] = U[b], U[a]

    def swap_cols(a, b):
        for row in A:
            row[a], row[b] = row[b], row[a]
        for row in V:
            row[a], row[b] = row[b], row[a]

    def add_row(dst, src, q):  # row dst -= q * row src
        A[dst] = [x - q * y for x, y in zip(A[dst], A[src])]
        U[dst] = [x - q * y for x, y in zip(U[dst], U[src])]

    def add_col(dst, src, q):
        for row in A:
            row[dst] -= q * row[src]
        for row in V:
            row[dst] -= q * row[src]

    t = 0
    while t < min(nr, nc):
        entries = [(abs(A[i][j]), i, j) for i in range(t, nr) for j in range(t, nc) if A[i][j]]
        if not entries:
            break
        _, i, j = min(entries)
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            p = A[t][t]
            for i in range(t + 1, nr):
                add_row(i, t, A[i][t] // p)
            for j in range(t + 1, nc):
                add_col(j, t, A[t][j] // p)
            bad = [(abs(A[i][t]), i, t) for i in range(t + 1, nr) if A[i][t]]
            bad += [(abs(A[t][j]), t, j) for j in range(t + 1, nc) if A[t][j]]
            if bad:
                _, i, j = min(bad)
                if i != t:
                    swap_rows(t, i)
                else:
                    swap_cols(t, j)
                continue
            # divisibility: fold a non-divisible entry into row t and retry
            off = next(
                ((i, j) for i in range(t + 1, nr) for j in range(t + 1, nc) if A[i][j] % p),
                None,
            )
            if off is None:
                break
            add_row(t, off[0], -1)
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            U[t] = [-x for x in U[t]]
        t += 1
    return A, U, V


# -- chain complexes ---------------------------------------------------------

@dataclass
class ChainComplex:
    """Boundary maps ``∂_n : C_n → C_{n-1}`` keyed by ``n``.

    ``bases[n]`` labels the basis of ``C_n``; ``∂_n`` has ``len(bases[n-1])``
    rows and ``len(bases[n])`` columns.
    """

    bases: dict[int, list]
    boundaries: dict[int, IntegerMatrix]

    def __post_init__(self):
        for n, d in self.boundaries.items():
            if d.cols != len(self.bases.get(n, ())) or d.rows != len(self.bases.get(n - 1, ())):
                raise ValueError(f"boundary ∂_{n} has the wrong shape")
        for n, d in self.boundaries.items():
            below = self.boundaries.get(n - 1)
            if below is not None and not (below @ d).is_zero():
                raise NotAComplex(f"∂_{n - 1} ∘ ∂_{n} != 0")

    def degrees(self) -> list[int]:
        return sorted(self.bases)

    def rank(self, n: int) -> int:
        return len(self.bases.get(n, ()))

    def boundary(self, n: int) -> IntegerMatrix:
        d = self.boundaries.get(n)
        if d is None:
            return IntegerMatrix.zeros(self.rank(n - 1), self.rank(n))
        return d

    def euler_characteristic(self) -> int:
        return sum((-1) ** n * len(b) for n, b in self.bases.items())

    def dump(self) -> str:
        lines = []
        for n in sorted(self.boundaries):
            d = self.boundaries[n]
            lines.append(f"{n}: {d.rows} x {d.cols}")
        return "\n".join(lines)


def homology(C: ChainComplex) -> dict[int, HomologyGroup]:
    """``H_n = ker ∂_n / im ∂_{n+1}`` for every degree carrying a basis."""
    snf = {n: smith_normal_form(C.boundary(n)) for n in C.degrees()}
    snf_up = {n: smith_normal_form(C.boundary(n + 1)) if n + 1 in C.bases else SNF((), 0) for n in C.degrees()}
    out = {}
    for n in C.degrees():
        free = C.rank(n) - snf[n].rank - snf_up[n].rank
        g = HomologyGroup(free, snf_up[n].factors)
        if g:
            out[n] = g
    return out


def cohomology(C: ChainComplex) -> dict[int, HomologyGroup]:
    """``H^n = ker δ^n / im δ^{n-1}`` with ``δ^n = ∂_{n+1}^T``."""
    out = {}
    for n in C.degrees():
        delta_n = C.boundary(n + 1).transpose() if n + 1 in C.bases else IntegerMatrix.zeros(0, C.rank(n))
        delta_prev = C.boundary(n).transpose()
        a = smith_normal_form(delta_n)
        b = smith_normal_form(delta_prev)
        g = HomologyGroup(C.rank(n) - a.rank - b.rank, b.factors)
        if g:
            out[n] = g
    return out


# -- simplicial chains -------------------------------------------------------

def chain_complex_from_faces(faces: Iterable[int]) -> ChainComplex:
    """Augmented simplicial chains on a downward closed set of bitmasks.

    ``C_{-1}`` is spanned by the empty face.  Faces of each dimension are in
    bitmask order, oriented by increasing vertex label.
    """
    bases: dict[int, list[int]] = {}
    for f in sorted(faces):
        bases.setdefault(popcount(f) - 1, []).append(f)
    index = {n: {f: k for k, f in enumerate(b)} for n, b in bases.items()}
    boundaries = {}
    for n, basis in bases.items():
        if n < 0:
            continue
        data: dict[int, dict[int, int]] = {}
        below = index[n - 1]
        for col, f in enumerate(basis):
            for pos, v in enumerate(vertices(f)):
                row = below[f & ~(1 << (v - 1))]
                data.setdefault(row, {})[col] = -1 if pos % 2 else 1
        boundaries[n] = IntegerMatrix(len(bases[n - 1]), len(basis), data)
    return ChainComplex(bases, boundaries)


def reduced_simplicial_chain_complex(K: SimplicialComplex) -> ChainComplex:
    return chain_complex_from_faces(K.faces)


def _drop_negative(h: dict[int, HomologyGroup]) -> dict[int, HomologyGroup]:
    # degree -1 (the {∅} complex) is not modelled
    return {d: g for d, g in h.items() if d >= 0}


def reduced_homology(K: SimplicialComplex, I: int | None = None) -> dict[int, HomologyGroup]:
    """Reduced integral homology of K, or of the full subcomplex K_I."""
    faces = K.faces if I is None else restrict_faces(K, I)
    return _drop_negative(homology(chain_complex_from_faces(faces)))


def reduced_cohomology(K: SimplicialComplex, I: int | None = None) -> dict[int, HomologyGroup]:
    faces = K.faces if I is None else restrict_faces(K, I)
    return _drop_negative(cohomology(chain_complex_from_faces(faces)))


def betti_numbers(K: SimplicialComplex) -> list[int]:
    """Ranks of reduced homology in degrees 0..dim K."""
    h = reduced_homology(K)
    return [h[d].free_rank if d in h else 0 for d in range(max(K.dim, 0) + 1)]


def torsion_free(K: SimplicialComplex) -> bool:
    return not any(g.torsion for g in reduced_homology(K).values())


def format_graded(h: Mapping[int, HomologyGroup], symbol: str = "H") -> str:
    if not h:
        return "0"
    return ", ".join(f"{symbol}{d} = {g}" for d, g in sorted(h.items()))


def graded_to_json(h: Mapping[int, HomologyGroup]) -> list[dict]:
    return [{"deg": d, **g.to_json()} for d, g in sorted(h.items())]
