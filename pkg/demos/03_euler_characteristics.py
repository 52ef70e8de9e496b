# %% [markdown]
# # A¹-Euler characteristics
#
# Values live in Z⟨1⟩ + Z⟨-1⟩.  Rank gives the complex Euler characteristic
# and signature the real one.  Three independent routes should agree.

# %%
import random

from macforge import SimplicialComplex, stable_splitting
from macforge.affine import cellular_filtration_report
from macforge.complexes import random_complex
from macforge.gw import chi_a1_davis, chi_a1_from_strata, chi_a1_from_summands, chi_a1_splitting

rng = random.Random(5)
for _ in range(5):
    K = random_complex(6, rng)
    d = chi_a1_davis(K)
    print(K.facet_lists(), "->", d, "| rank", d.rank, "signature", d.signature)
    assert d == chi_a1_splitting(K) == chi_a1_from_summands(K, stable_splitting(K))

# %% [markdown]
# Excision over the torus strata gives the same element.

# %%
square = SimplicialComplex.from_facets(4, [[1, 3], [2, 3], [2, 4], [1, 4]])
for s in cellular_filtration_report(square):
    print(s.to_json())
print(chi_a1_from_strata(4, cellular_filtration_report(square)))

# %%
for m in range(2, 6):
    print(m, chi_a1_davis(SimplicialComplex.boundary_of_simplex(m)))
