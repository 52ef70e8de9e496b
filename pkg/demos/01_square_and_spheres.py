# %% [markdown]
# # Squares and spheres
#
# The 4-cycle K with missing diagonals {1,2} and {3,4} is the join of two
# pairs of points, so Z_K is (A²∖0) × (A²∖0).  Its cellular A¹-homology has
# one class per nontrivial full subcomplex, with the weight recording |I|.

# %%
from macforge import SimplicialComplex, stable_splitting
from macforge.motivic import a1_betti_numbers, betti_grid, cellular_a1_homology, render_cellular
from macforge.splitting import total_ranks, zk_cohomology_groups

square = SimplicialComplex.from_facets(4, [[1, 3], [2, 3], [2, 4], [1, 4]])
for s in stable_splitting(square, "motivic").nontrivial():
    print(s.vertices, "shift", s.shift, {d: str(g) for d, g in s.homology.items()})

# %%
print(render_cellular(cellular_a1_homology(square)))
print("ranks of H*(Z_K):", total_ranks(zk_cohomology_groups(square)))  # S³ × S³

# %% [markdown]
# Betti table, rows j (weight) and columns i.

# %%
for j, row in enumerate(betti_grid(a1_betti_numbers(square))):
    print(j, " ".join(str(v) if v else "." for v in row))

# %% [markdown]
# The boundary of a simplex on m vertices gives A^m minus the origin: a
# single class KMW(m) in degree m - 1.

# %%
for m in range(2, 7):
    K = SimplicialComplex.boundary_of_simplex(m)
    print(m, render_cellular(cellular_a1_homology(K)))
