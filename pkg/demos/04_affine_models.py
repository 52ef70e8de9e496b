# %% [markdown]
# # Affine models
#
# Z_K is a complement of coordinate subspaces in A^m.  Two affine torsors
# over it have explicit presentations.

# %%
from macforge import SimplicialComplex
from macforge.affine import complement_ideal, dual_presentation, sr_cover_presentation
from macforge.complexes import monomial_str

two_points = SimplicialComplex.points(2)
print(dual_presentation(two_points, aux="f"))  # SL2

square = SimplicialComplex.from_facets(4, [[1, 3], [2, 3], [2, 4], [1, 4]])
print([monomial_str(g) for g in complement_ideal(square).generators])
print(dual_presentation(square, aux="f"))
print(sr_cover_presentation(square, aux="f"))
