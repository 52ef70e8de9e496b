"""Cross-checks of the closed formulas against the brute-force oracles."""

from __future__ import annotations

import os
import random
from concurrent.futures import ProcessPoolExecutor
from typing import Iterable, Iterator

from .complexes import SimplicialComplex, all_complexes, random_complex
from .gw import chi_a1_davis, chi_a1_from_summands, chi_a1_splitting, chi_classical_polyhedral
from .homology import ZERO, homology
from .io import to_dict
from .motivic import a1_betti_numbers
from .oracles import cubical_complex_real_mac, cubical_euler_characteristic, koszul_tor_ranks
from .splitting import rzk_homology_groups, stable_splitting

CHECKS = (
    "cubical_homology",
    "koszul_betti",
    "euler_davis_eq_splitting",
    "euler_splitting_eq_summands",
    "euler_rank",
    "euler_signature",
)


def reduced_cubical_homology(K: SimplicialComplex) -> dict:
    h = homology(cubical_complex_real_mac(K))
    h0 = h.get(0, ZERO)
    if h0.free_rank < 1:
        raise AssertionError("cubical model is empty")
    h = dict(h)
    h[0] = type(h0)(h0.free_rank - 1, h0.torsion)
    return {d: g for d, g in h.items() if g}


def check_complex(K: SimplicialComplex) -> dict[str, bool]:
    davis = chi_a1_davis(K)
    split = chi_a1_splitting(K)
    rebuilt = chi_a1_from_summands(K, stable_splitting(K, "motivic"))
    return {
        "cubical_homology": reduced_cubical_homology(K) == rzk_homology_groups(K),
        "koszul_betti": koszul_tor_ranks(K, "Q") == a1_betti_numbers(K),
        "euler_davis_eq_splitting": davis == split,
        "euler_splitting_eq_summands": split == rebuilt,
        "euler_rank": davis.rank == chi_classical_polyhedral(1, 0, K),
        "euler_signature": davis.signature == chi_classical_polyhedral(1, 2, K) == cubical_euler_characteristic(K),
    }


def exhaustive_corpus(max_m: int) -> Iterator[SimplicialComplex]:
    for m in range(1, max_m + 1):
        yield from all_complexes(m)


def random_corpus(n: int, m: int | Iterable[int], seed: int) -> list[SimplicialComplex]:
    """``n`` seeded random complexes; ``m`` may be a range of vertex counts,
    cycled through in order."""
    rng = random.Random(seed)
    ms = [m] if isinstance(m, int) else list(m)
    return [random_complex(ms[k % len(ms)], rng) for k in range(n)]


def worker_count() -> int:
    try:
        return max(1, int(os.environ.get("MACFORGE_THREADS", "1")))
    except ValueError:
        return 1


def run_checks(corpus: Iterable[SimplicialComplex]) -> dict:
    """Run every check on every complex; results merged in corpus order."""
    corpus = list(corpus)
    workers = worker_count()
    if workers > 1 and len(corpus) > 1:
        with ProcessPoolExecutor(workers) as ex:
            results = list(ex.map(check_complex, corpus, chunksize=8))
    else:
        results = [check_complex(K) for K in corpus]
    summary = {name: {"passed": 0, "failed": 0, "counterexample": None} for name in CHECKS}
    for K, res in zip(corpus, results):
        for name, ok in res.items():
            entry = summary[name]
            if ok:
                entry["passed"] += 1
            else:
                entry["failed"] += 1
                if entry["counterexample"] is None:
                    entry["counterexample"] = to_dict(K)
    return {"complexes": len(corpus), "checks": summary, "ok": all(e["failed"] == 0 for e in summary.values())}
