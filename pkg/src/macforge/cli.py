"""Command line front end: ``macforge <subcommand> ...``.

Exit codes: 0 ok, 2 parse error, 3 invalid complex, 4 failed cross-check.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings

from . import __version__
from .affine import cellular_filtration_report, complement_ideal, dual_presentation, sr_cover_presentation
from .complexes import ComplexError, monomial_str
from .gw import chi_a1_davis, chi_a1_from_summands, chi_a1_splitting, chi_classical_polyhedral
from .homology import graded_to_json, reduced_homology
from .io import ParseError, complex_hash, load, to_dict
from .motivic import (
    a1_betti_numbers,
    betti_grid,
    cellular_a1_homology,
    cellular_a1_homology_via_splitting,
    classical_bigraded_betti,
    motivic_cohomology_decomposition,
    render_cellular,
)
from .splitting import FLAVORS, rzk_homology_groups, stable_splitting, zk_cohomology_groups, zk_homology_groups
from .verify import exhaustive_corpus, random_corpus, run_checks

EXIT_PARSE, EXIT_INVALID, EXIT_CHECK = 2, 3, 4


class CheckFailed(Exception):
    pass


def _table(table: dict) -> list[dict]:
    return [{"i": i, "j": j, "rank": r} for (i, j), r in sorted(table.items())]


def _euler(K, field: str) -> dict:
    davis = chi_a1_davis(K)
    out = {
        "davis": davis.to_json(),
        "splitting": chi_a1_splitting(K).to_json(),
        "rendered": str(davis),
        "classical_complex": chi_classical_polyhedral(1, 0, K),
        "classical_real": chi_classical_polyhedral(1, 2, K),
    }
    if field == "C":
        out["over_C"] = str(davis.specialize("C"))
    elif field == "R":
        rank, sig = davis.specialize("R")
        out["over_R"] = {"rank": rank, "signature": sig}
    return out


def _euler_checks(K) -> list[dict]:
    davis = chi_a1_davis(K)
    split = chi_a1_splitting(K)
    rebuilt = chi_a1_from_summands(K, stable_splitting(K, "motivic"))
    return [
        {"name": "davis == splitting", "ok": davis == split},
        {"name": "splitting == summand rebuild", "ok": split == rebuilt},
        {"name": "rank == classical (1, 0)", "ok": davis.rank == chi_classical_polyhedral(1, 0, K)},
        {"name": "signature == classical (1, 2)", "ok": davis.signature == chi_classical_polyhedral(1, 2, K)},
    ]


def cmd_invariants(K, args) -> tuple[dict, list]:
    allow = args.allow_ghost
    cell = cellular_a1_homology(K, allow_ghost=allow)
    report = stable_splitting(K, "motivic")
    payload = {
        "cellular_a1_homology": {str(d): s for d, s in render_cellular(cell).items()},
        "a1_betti": _table(a1_betti_numbers(K)),
        "euler": _euler(K, args.field),
        "splitting": {"summands": len(report.summands), "nontrivial": len(report.nontrivial())},
        "motivic_cohomology": motivic_cohomology_decomposition(K).to_json(),
    }
    checks = _euler_checks(K) + [
        {
            "name": "cellular homology: formula == splitting rules",
            "ok": cell == cellular_a1_homology_via_splitting(K, allow_ghost=allow),
        },
        {"name": "a1 betti == classical reindexed", "ok": a1_betti_numbers(K) == classical_bigraded_betti(K)},
    ]
    return payload, checks


def cmd_splitting(K, args):
    return {"flavor": args.flavor, "summands": stable_splitting(K, args.flavor).to_json()}, []


def cmd_homology(K, args):
    return {
        "reduced_homology_K": graded_to_json(reduced_homology(K)),
        "zk_cohomology": graded_to_json(zk_cohomology_groups(K)),
        "zk_reduced_homology": graded_to_json(zk_homology_groups(K)),
        "rzk_reduced_homology": graded_to_json(rzk_homology_groups(K)),
    }, []


def cmd_euler(K, args):
    return _euler(K, args.field), _euler_checks(K)


def cmd_betti(K, args):
    raw = classical_bigraded_betti(K, reindex=False)
    return {
        "a1_betti": _table(a1_betti_numbers(K)),
        "classical": [{"neg_h": a, "two_p": b, "rank": r} for (a, b), r in sorted(raw.items())],
    }, [{"name": "a1 betti == classical reindexed", "ok": a1_betti_numbers(K) == classical_bigraded_betti(K)}]


def cmd_affine(K, args):
    if args.model == "dual":
        pres = dual_presentation(K)
        return {"model": "dual", "ring": pres.render(), "presentation": pres.to_json()}, []
    if args.model == "sr":
        pres = sr_cover_presentation(K)
        return {"model": "sr", "ring": pres.render(), "presentation": pres.to_json()}, []
    ideal = complement_ideal(K)
    return {
        "model": "complement",
        "ideal": [monomial_str(g) for g in ideal.generators],
        "strata": [s.to_json() for s in cellular_filtration_report(K)],
    }, []


COMMANDS = {
    "invariants": cmd_invariants,
    "splitting": cmd_splitting,
    "homology": cmd_homology,
    "euler": cmd_euler,
    "betti": cmd_betti,
    "affine": cmd_affine,
}


# -- markdown ----------------------------------------------------------------

def _md_grid(table_rows: list[dict]) -> list[str]:
    table = {(r["i"], r["j"]): r["rank"] for r in table_rows}
    grid = betti_grid(table)
    if not grid:
        return []
    lines = ["| j \\ i | " + " | ".join(str(i) for i in range(len(grid[0]))) + " |"]
    lines.append("|---" * (len(grid[0]) + 1) + "|")
    for j, row in enumerate(grid):
        lines.append(f"| {j} | " + " | ".join(str(v) if v else "." for v in row) + " |")
    return lines


def to_markdown(report: dict) -> str:
    lines = [f"# macforge {report['command']}", "", f"complex `{report['input']['hash']}`: m = {report['input']['m']}", ""]
    payload = report["payload"]
    for key, value in payload.items():
        lines.append(f"## {key}")
        if key in ("a1_betti",) and isinstance(value, list):
            lines += _md_grid(value)
        elif not isinstance(value, (dict, list)):
            lines.append(str(value))
        elif isinstance(value, dict) and all(not isinstance(v, (dict, list)) for v in value.values()):
            lines += [f"- {k}: {v}" for k, v in value.items()]
        else:
            lines += ["```json", json.dumps(value, indent=2, ensure_ascii=False), "```"]
        lines.append("")
    if report.get("checks"):
        lines.append("## checks")
        lines += [f"- {'PASS' if c['ok'] else 'FAIL'} {c['name']}" for c in report["checks"]]
    return "\n".join(lines) + "\n"


# -- entry point -------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="macforge", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, path_required=True):
        if path_required:
            sp.add_argument("path", help="complex file (JSON or text)")
        sp.add_argument("--allow-ghost", action="store_true", help="accept vertices lying in no facet")
        sp.add_argument("--markdown", action="store_true", help="render markdown instead of JSON")
        sp.add_argument("--field", choices=["C", "R", "generic"], default="generic")
        return sp

    for name in COMMANDS:
        sp = common(sub.add_parser(name))
        if name == "splitting":
            sp.add_argument("--flavor", choices=FLAVORS, default="motivic")
        if name == "affine":
            sp.add_argument("--model", choices=["dual", "sr", "complement"], default="dual")

    ov = common(sub.add_parser("oracle-verify"), path_required=False)
    ov.add_argument("path", nargs="?")
    ov.add_argument("--exhaustive", type=int, metavar="M", help="all complexes on at most M vertices")
    ov.add_argument("--random", type=int, nargs=2, metavar=("N", "M"), help="N random complexes on M vertices")
    ov.add_argument("--seed", type=int, default=0)
    return p


def _emit(report: dict, markdown: bool, out) -> None:
    if markdown:
        out.write(to_markdown(report))
    else:
        out.write(json.dumps(report, indent=2, ensure_ascii=False) + "\n")


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    flags = {k: v for k, v in sorted(vars(args).items()) if k not in ("command", "path")}

    if args.command == "oracle-verify":
        return _oracle_verify(args, flags, out)

    try:
        K = load(args.path, allow_ghost=args.allow_ghost)
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except ComplexError as e:
        print(f"invalid complex: {e}", file=sys.stderr)
        return EXIT_INVALID
    try:
        with warnings.catch_warnings():
            if args.allow_ghost:
                warnings.simplefilter("default")
            payload, checks = COMMANDS[args.command](K, args)
    except ComplexError as e:
        print(f"invalid complex: {e}", file=sys.stderr)
        return EXIT_INVALID
    report = {
        "input": {"hash": complex_hash(K), **to_dict(K)},
        "command": args.command,
        "version": __version__,
        "flags": flags,
        "payload": payload,
        "checks": checks,
    }
    _emit(report, args.markdown, out)
    return EXIT_CHECK if any(not c["ok"] for c in checks) else 0


def _oracle_verify(args, flags, out) -> int:
    corpus = []
    try:
        if args.path:
            corpus.append(load(args.path, allow_ghost=False))
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except ComplexError as e:
        print(f"invalid complex: {e}", file=sys.stderr)
        return EXIT_INVALID
    if args.exhaustive:
        corpus += list(exhaustive_corpus(args.exhaustive))
    if args.random:
        n, m = args.random
        corpus += random_corpus(n, m, args.seed)
    if not corpus:
        print("nothing to verify: give a path, --exhaustive or --random", file=sys.stderr)
        return EXIT_PARSE
    result = run_checks(corpus)
    report = {
        "input": {"corpus_size": len(corpus)},
        "command": "oracle-verify",
        "version": __version__,
        "flags": flags,
        "payload": result,
    }
    if args.markdown:
        lines = ["# macforge oracle-verify", "", f"{result['complexes']} complexes", "", "| check | passed | failed |", "|---|---|---|"]
        for name, e in result["checks"].items():
            lines.append(f"| {name} | {e['passed']} | {e['failed']} |")
        for name, e in result["checks"].items():
            if e["counterexample"]:
                lines.append(f"\ncounterexample for {name}: `{json.dumps(e['counterexample'])}`")
        out.write("\n".join(lines) + "\n")
    else:
        out.write(json.dumps(report, indent=2, ensure_ascii=False) + "\n")
    return 0 if result["ok"] else EXIT_CHECK


if __name__ == "__main__":
    sys.exit(main())
