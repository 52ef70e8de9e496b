# %% [markdown]
# # Brute-force oracles
#
# The cubical model of the real moment-angle complex and the Koszul complex
# of the Stanley-Reisner ring never look at full subcomplexes, so they are
# independent checks of the splitting formulas.

# %%
from macforge.verify import exhaustive_corpus, random_corpus, run_checks

result = run_checks(exhaustive_corpus(4))
print(result["complexes"], "complexes", "ok" if result["ok"] else "FAILED")

# %%
result = run_checks(random_corpus(20, range(5, 7), seed=1))
for name, entry in result["checks"].items():
    print(f"{name:30s} {entry['passed']:3d} passed {entry['failed']} failed")

# %% [markdown]
# Same from the shell:
#
#     macforge oracle-verify --exhaustive 4 --random 50 6 --seed 1 --markdown
