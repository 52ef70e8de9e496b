# %% [markdown]
# # Torsion from the projective plane
#
# The six-vertex RP² has H̃_1 = Z/2.  In the splitting the full vertex set
# contributes that torsion in weight 6; smaller full subcomplexes contribute
# free classes.

# %%
from pathlib import Path

from macforge.io import load
from macforge.homology import reduced_homology
from macforge.motivic import cellular_a1_homology, motivic_cohomology_decomposition, render_cellular
from macforge.oracles import koszul_tor_ranks

rp2 = load(Path(__file__).parent / "data" / "rp2.txt")
print({d: str(g) for d, g in reduced_homology(rp2).items()})
print(render_cellular(cellular_a1_homology(rp2))[2])

# %% [markdown]
# Rational Betti numbers miss the torsion; over F_2 it shows up twice.

# %%
q, f2 = koszul_tor_ranks(rp2, "Q"), koszul_tor_ranks(rp2, 2)
print({k: (q.get(k, 0), v) for k, v in f2.items() if q.get(k, 0) != v})

# %%
mc = motivic_cohomology_decomposition(rp2)
print(mc.render(), "because", mc.hypothesis)
