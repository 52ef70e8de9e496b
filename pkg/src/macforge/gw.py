"""The subring Z⟨1⟩ + Z⟨-1⟩ of the Grothendieck-Witt ring, and A¹-Euler
characteristics of motivic moment-angle complexes.

An element ``a⟨1⟩ + b⟨-1⟩`` is ``a + b t`` in ``Z[t]/(t² - 1)``.  Rank and
signature are the complex and real Euler characteristics of the realizations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .complexes import SimplicialComplex, euler_characteristic, full_subcomplex, popcount
from .splitting import DecompositionReport, decomposition_index


@dataclass(frozen=True)
class GWElement:
    a: int = 0  # coefficient of <1>
    b: int = 0  # coefficient of <-1>

    @property
    def rank(self) -> int:
        return self.a + self.b

    @property
    def signature(self) -> int:
        return self.a - self.b

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return GWElement(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self):
        return GWElement(-self.a, -self.b)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return GWElement(self.a * other.a + self.b * other.b, self.a * other.b + self.b * other.a)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not defined in GW")
        out, base = ONE, self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def specialize(self, field: str = "generic"):
        """``C`` identifies ⟨-1⟩ with ⟨1⟩; ``R`` returns (rank, signature)."""
        if field == "generic":
            return self
        if field == "C":
            return GWElement(self.rank, 0)
        if field == "R":
            return (self.rank, self.signature)
        raise ValueError(f"unknown field {field!r}")

    def __str__(self):
        if self.a == 0 and self.b == 0:
            return "0"
        parts = []
        for coef, sym in ((self.a, "<1>"), (self.b, "<-1>")):
            if coef == 0:
                continue
            mag = "" if abs(coef) == 1 else str(abs(coef))
            if not parts:
                parts.append(("-" if coef < 0 else "") + mag + sym)
            else:
                parts.append((" - " if coef < 0 else " + ") + mag + sym)
        return "".join(parts)

    def to_json(self) -> dict:
        return {"a": self.a, "b": self.b, "rank": self.rank, "signature": self.signature}


def _coerce(x):
    if isinstance(x, GWElement):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return GWElement(x, 0)
    return NotImplemented


ONE = GWElement(1, 0)
MINUS_ONE = GWElement(0, 1)  # the form <-1>
HYPERBOLIC_GM = ONE - MINUS_ONE  # A¹-Euler characteristic of G_m


def gw_add(x: GWElement, y: GWElement) -> GWElement:
    return x + y


def gw_mul(x: GWElement, y: GWElement) -> GWElement:
    return x * y


def gw_pow(x: GWElement, n: int) -> GWElement:
    return x**n


# -- Euler characteristics ---------------------------------------------------

def chi_classical_polyhedral(chi_x: int, chi_a: int, K: SimplicialComplex) -> int:
    """Euler characteristic of the polyhedral product (X, A)^K from χ(X), χ(A).

    The sum runs over all faces, the empty one included; ``0**0 == 1``.
    """
    return sum((chi_x - chi_a) ** popcount(s) * chi_a ** (K.m - popcount(s)) for s in K.faces)


def chi_a1_davis(K: SimplicialComplex) -> GWElement:
    """``Σ_{σ ∈ K} ⟨-1⟩^|σ| (⟨1⟩ - ⟨-1⟩)^(m - |σ|)``."""
    total = GWElement()
    for s in K.faces:
        k = popcount(s)
        total += MINUS_ONE**k * HYPERBOLIC_GM ** (K.m - k)
    return total


def chi_a1_davis_scaled(K: SimplicialComplex) -> GWElement:
    """``Σ_{σ ∈ K} (-1)^|σ| 2^(m-|σ|-1) (⟨1⟩ - ⟨-1⟩)``.

    Uses ``h^k = 2^(k-1) h`` for ``h = ⟨1⟩ - ⟨-1⟩``, which needs ``k ≥ 1``;
    the top face of the full simplex would need ``h^0 = ⟨1⟩``, so the full
    simplex is rejected.
    """
    if K.is_full_simplex():
        raise ValueError("closed form does not apply to the full simplex")
    coef = sum(Fraction((-1) ** popcount(s) * 2 ** (K.m - popcount(s))) / 2 for s in K.faces)
    assert coef.denominator == 1
    return int(coef) * HYPERBOLIC_GM


def chi_a1_splitting(K: SimplicialComplex) -> GWElement:
    """``⟨1⟩ - Σ_{I ∉ K} (-1)^|I| (χ(K_I) - 1) ⟨-1⟩^|I|``."""
    total = ONE
    for I in decomposition_index(K):
        k = popcount(I)
        chi = euler_characteristic(full_subcomplex(K, I)[0])
        total -= (-1) ** k * (chi - 1) * MINUS_ONE**k
    return total


def gw_wedge_rule(xs: Iterable[GWElement]) -> GWElement:
    """χ(X ∨ Y) = χ(X) + χ(Y) - ⟨1⟩, folded over a list (empty wedge is a point)."""
    total = ONE
    for x in xs:
        total = total + x - ONE
    return total


def gw_smash_shift(x: GWElement, p: int, q: int) -> GWElement:
    """χ(X ∧ S^{p,q}) = ⟨1⟩ + (-1)^p ⟨-1⟩^q (χ(X) - ⟨1⟩)."""
    return ONE + (-1) ** p * MINUS_ONE**q * (x - ONE)


def chi_a1_from_summands(K: SimplicialComplex, report: DecompositionReport) -> GWElement:
    """Rebuild χ_{A¹}(Z_K) from the motivic splitting summands.

    Each summand ``|K_I| ∧ S^{|I|+2,|I|}`` has Euler characteristic given by
    the smash rule applied to ``χ(K_I)⟨1⟩``; the wedge rule combines them into
    χ(ΣZ_K), and one more smash rule with ``S^{1,0}`` undoes the suspension.
    """
    if report.flavor != "motivic":
        raise ValueError("need the motivic splitting")
    pieces = []
    for s in report.summands:
        chi = euler_characteristic(full_subcomplex(K, s.I)[0])
        p, q = s.shift
        pieces.append(gw_smash_shift(GWElement(chi, 0), p, q))
    chi_suspension = gw_wedge_rule(pieces)
    # χ(ΣX) = ⟨1⟩ - (χ(X) - ⟨1⟩), so χ(X) = 2⟨1⟩ - χ(ΣX)
    return 2 * ONE - chi_suspension


def chi_a1_from_strata(m: int, strata) -> GWElement:
    """Excision over a stratification by tori ``G_m^k`` of codimension c:
    each stratum contributes ``⟨-1⟩^c (⟨1⟩ - ⟨-1⟩)^k``."""
    total = GWElement()
    for st in strata:
        total += st.count * MINUS_ONE**st.codimension * HYPERBOLIC_GM**st.torus_dim
    return total
