"""Command-line entry point.

Subcommands: search, verify, verify-appendix, verify-deletions, count,
bounds, enumerate-tf, extract-base. Graph files are accepted in the
1-indexed ``v:neighbours`` adjacency-list format or as graph6; outputs are
written in both.

Exit codes: 0 success / witness, 1 certified non-witness, 2 usage error,
3 data or parse error, 4 search budget exhausted, 5 a computed value
contradicts a shipped claim.
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import json
import os
import sys
import time
from dataclasses import dataclass
from pathlib import Path

from . import __version__, bounds, dataset, verify
from .abc_search import (
    EXTENSION_MODE,
    FULL_MODE,
    WITNESS_FOUND,
    SearchParams,
    SearchResult,
    run,
)
from .construct import (
    DEFAULT_DEGREE_RANGE,
    enumerate_triangle_free,
    extension_to_graph,
    serialize_extension,
)
from .counting import fitness, count_cliques, count_independent_sets
from .graph import (
    Graph,
    ParseError,
    decode_graph6,
    emit_adjacency_list,
    encode_graph6,
    parse_adjacency_list,
)

EXIT_OK = 0
EXIT_NONWITNESS = 1
EXIT_USAGE = 2
EXIT_DATA = 3
EXIT_BUDGET = 4
EXIT_CLAIM = 5

OUT_DIR_ENV = "RAMSEY_ABC_OUT"


@dataclass(frozen=True)
class RunConfig:
    """Everything a search run depends on; round-trips through JSON."""

    p: int
    q: int
    n: int
    colony_size: int = 20
    maxlimit: int = 15
    alpha: float = 1.0
    seed: int = 0
    budget: int = 100_000
    mode: str = FULL_MODE
    init_density: float | None = None
    degree_range: tuple[int, int] = DEFAULT_DEGREE_RANGE
    count_cap: int | None = None
    base_file: str | None = None
    out_dir: str = "runs"

    def to_dict(self) -> dict:
        d = dataclasses.asdict(self)
        d["degree_range"] = list(self.degree_range)
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "RunConfig":
        known = {f.name for f in dataclasses.fields(cls)}
        unknown = set(d) - known
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
        d = dict(d)
        if "degree_range" in d and d["degree_range"] is not None:
            d["degree_range"] = tuple(d["degree_range"])
        return cls(**d)

    def search_params(self) -> SearchParams:
        return SearchParams(
            p=self.p,
            q=self.q,
            n=self.n,
            colony_size=self.colony_size,
            maxlimit=self.maxlimit,
            alpha=self.alpha,
            seed=self.seed,
            budget=self.budget,
            mode=self.mode,
            init_density=self.init_density,
            degree_range=self.degree_range,
            count_cap=self.count_cap,
        )


def load_graph_file(path: str | Path) -> Graph:
    """Read a graph file, sniffing adjacency-list vs graph6 format."""
    text = Path(path).read_text()
    stripped = text.strip()
    if not stripped:
        raise ParseError(f"{path}: empty graph file")
    if ":" in stripped.splitlines()[0]:
        return parse_adjacency_list(text).graph
    return decode_graph6(stripped)


def write_graph_files(g: Graph, stem: Path) -> list[str]:
    adj_path = stem.with_suffix(".adj")
    g6_path = stem.with_suffix(".g6")
    adj_path.write_text(emit_adjacency_list(g))
    g6_path.write_text(encode_graph6(g) + "\n")
    return [str(adj_path), str(g6_path)]


def _unique_run_dir(root: Path, seed: int) -> Path:
    stamp = time.strftime("%Y%m%d-%H%M%S")
    candidate = root / f"{stamp}-seed{seed}"
    i = 1
    while candidate.exists():
        i += 1
        candidate = root / f"{stamp}-seed{seed}-{i}"
    candidate.mkdir(parents=True)
    return candidate


def _write_run_record(
    run_dir: Path, config: RunConfig, result: SearchResult, wall_clock: float
) -> None:
    with open(run_dir / "config.json", "w") as fh:
        json.dump(config.to_dict(), fh, indent=2, sort_keys=True)
        fh.write("\n")
    with open(run_dir / "history.csv", "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(
            ["round", "best_fitness", "evaluations", "employed", "onlookers", "scouts"]
        )
        for row in result.history:
            writer.writerow(
                [row.round, row.best_total, row.evaluations, row.employed, row.onlookers, row.scouts]
            )
    record = {
        "version": __version__,
        "seed": config.seed,
        "reason": result.reason,
        "rounds": result.rounds,
        "evaluations": result.evaluations,
        "wall_clock_s": round(wall_clock, 3),
        "best_fitness": {
            "clique_count": result.best_fitness.clique_count,
            "indep_count": result.best_fitness.indep_count,
            "total": result.best_fitness.total,
            "capped": result.best_fitness.capped,
        },
    }
    best = result.best_position
    if isinstance(best, Graph):
        record["best_graph6"] = encode_graph6(best)
    else:
        record["best_extension"] = serialize_extension(best)
        record["best_graph6"] = encode_graph6(extension_to_graph(best))
    with open(run_dir / "result.json", "w") as fh:
        json.dump(record, fh, indent=2, sort_keys=True)
        fh.write("\n")


def cmd_search(args) -> int:
    config_dict = {}
    if args.config:
        with open(args.config) as fh:
            config_dict = json.load(fh)
    overrides = {
        "p": args.p,
        "q": args.q,
        "n": args.n,
        "colony_size": args.colony_size,
        "maxlimit": args.maxlimit,
        "alpha": args.alpha,
        "seed": args.seed,
        "budget": args.budget,
        "mode": args.mode,
        "init_density": args.init_density,
        "count_cap": args.count_cap,
        "base_file": args.base,
        "out_dir": args.out,
    }
    for key, val in overrides.items():
        if val is not None:
            config_dict[key] = val
    if args.degree_range is not None:
        config_dict["degree_range"] = _parse_range(args.degree_range)
    if "out_dir" not in config_dict:
        config_dict["out_dir"] = os.environ.get(OUT_DIR_ENV, "runs")
    if "seed" not in config_dict:
        config_dict["seed"] = int.from_bytes(os.urandom(4), "big")

    base = None
    if config_dict.get("mode") == EXTENSION_MODE:
        base_file = config_dict.get("base_file")
        base = load_graph_file(base_file) if base_file else dataset.extract_base()
        config_dict.setdefault("n", base.n + 5)
    for field in ("p", "q", "n"):
        if field not in config_dict:
            print(f"error: missing required parameter --{field}", file=sys.stderr)
            return EXIT_USAGE
    try:
        config = RunConfig.from_dict(config_dict)
        params = config.search_params()
        params.validate()
    except (TypeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    t0 = time.time()
    result = run(params, base=base)
    wall = time.time() - t0
    if params.count_cap is not None and isinstance(result.best_position, Graph):
        # search may rank with capped counts; the recorded result is exact
        exact = fitness(result.best_position, params.p, params.q)
        result = dataclasses.replace(result, best_fitness=exact)

    run_dir = _unique_run_dir(Path(config.out_dir), config.seed)
    _write_run_record(run_dir, config, result, wall)
    witness_files = []
    if result.reason == WITNESS_FOUND:
        best = result.best_position
        g = best if isinstance(best, Graph) else extension_to_graph(best)
        witness_files = write_graph_files(g, run_dir / "witness")

    print(f"run dir: {run_dir}")
    print(
        f"{result.reason}: best fitness {result.best_fitness.total} "
        f"(cliques {result.best_fitness.clique_count}, "
        f"independent sets {result.best_fitness.indep_count}) "
        f"after {result.evaluations} evaluations, {result.rounds} rounds"
    )
    for path in witness_files:
        print(f"witness written: {path}")
    return EXIT_OK if result.reason == WITNESS_FOUND else EXIT_BUDGET


def cmd_verify(args) -> int:
    all_witness = True
    for path in args.files:
        g = load_graph_file(path)
        cert = verify.certify(g, args.p, args.q)
        print(f"{path}: n={cert.n} p={cert.p} q={cert.q}")
        print(f"  clique count: {cert.clique_count}")
        print(f"  independent-set count: {cert.indep_count}")
        if cert.clique_violation:
            print(f"  clique violation: {[v + 1 for v in cert.clique_violation]}")
        if cert.indep_violation:
            print(f"  independent-set violation: {[v + 1 for v in cert.indep_violation]}")
        if cert.degree_feasible is not None:
            print(f"  degrees within witness range: {cert.degree_feasible}")
        print(f"  witness: {'yes' if cert.is_witness else 'no'}")
        all_witness = all_witness and cert.is_witness
    return EXIT_OK if all_witness else EXIT_NONWITNESS


def cmd_verify_appendix(args) -> int:
    report = verify.verify_appendix()
    if args.json:
        records = [dataclasses.asdict(row) | {"passed": row.passed} for row in report.rows]
        print(json.dumps(records, indent=2, sort_keys=True))
    else:
        print("\n".join(report.lines()))
    return EXIT_OK if report.ok else EXIT_CLAIM


def cmd_verify_deletions(args) -> int:
    report = verify.verify_deletions(threads=args.threads)
    if args.json:
        record = {
            "named": [
                dataclasses.asdict(row) | {"is_witness": row.is_witness}
                for row in report.named
            ],
            "scan_witnesses": [list(hit) for hit in report.scan_witnesses],
        }
        print(json.dumps(record, indent=2, sort_keys=True))
    else:
        print("\n".join(report.lines()))
    return EXIT_OK if report.ok else EXIT_CLAIM


def _parse_range(text: str) -> tuple[int, int]:
    if ".." in text:
        lo, hi = text.split("..", 1)
        return int(lo), int(hi)
    v = int(text)
    return v, v


def cmd_count(args) -> int:
    g = load_graph_file(args.file)
    if args.p is not None and args.q is not None:
        rep = fitness(g, args.p, args.q)
        print(
            f"cliques(p={args.p}): {rep.clique_count}  "
            f"independent(q={args.q}): {rep.indep_count}  total: {rep.total}"
        )
        return EXIT_OK
    if args.cliques is None and args.indep is None:
        print("error: need --p/--q, --cliques or --indep", file=sys.stderr)
        return EXIT_USAGE
    if args.cliques is not None:
        lo, hi = _parse_range(args.cliques)
        print(" ".join(str(count_cliques(g, k)) for k in range(lo, hi + 1)))
    if args.indep is not None:
        lo, hi = _parse_range(args.indep)
        print(" ".join(str(count_independent_sets(g, k)) for k in range(lo, hi + 1)))
    return EXIT_OK


def cmd_bounds(args) -> int:
    value = bounds.known_ramsey(args.p, args.q)
    record: dict = {
        "p": args.p,
        "q": args.q,
        "lower": value.lower,
        "upper": value.upper,
        "exact": value.exact,
        "source": value.source,
    }
    if args.n is not None:
        rng = bounds.degree_range(args.p, args.q, args.n)
        record["n"] = args.n
        record["degree_range"] = [rng.lo, rng.hi]
        if rng.note:
            record["note"] = rng.note
    if args.json:
        print(json.dumps(record, sort_keys=True))
        return EXIT_OK
    if not value.known:
        print(f"R({args.p},{args.q}): unknown")
    elif value.exact:
        print(f"R({args.p},{args.q}) = {value.lower}  [{value.source}]")
    else:
        print(f"R({args.p},{args.q}) in [{value.lower},{value.upper}]  [{value.source}]")
    if args.n is not None:
        print(f"degree range for ({args.p},{args.q},{args.n}) witnesses: [{rng.lo},{rng.hi}]")
        if rng.note:
            print(f"note: {rng.note}")
    return EXIT_OK


def cmd_enumerate_tf(args) -> int:
    catalog = enumerate_triangle_free(args.k)
    for item in catalog:
        if args.adj:
            print(emit_adjacency_list(item.graph), end="")
            print("--")
        else:
            print(encode_graph6(item.graph))
    return EXIT_OK


def cmd_extract_base(args) -> int:
    base = dataset.extract_base()
    out = Path(args.out)
    files = write_graph_files(base, out)
    for path in files:
        print(f"wrote {path}")
    ok = True
    for check, passed, detail in dataset.validate_base(base):
        print(f"{'PASS' if passed else 'FAIL'}  {check} ({detail})")
        ok = ok and passed
    return EXIT_OK if ok else EXIT_CLAIM


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ramsey-abc",
        description="Bee-colony search and exact certification for small Ramsey witness graphs.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_search = sub.add_parser("search", help="minimize the clique + independent-set fitness")
    p_search.add_argument("--config", help="JSON file with a RunConfig; flags override it")
    p_search.add_argument("--p", type=int)
    p_search.add_argument("--q", type=int)
    p_search.add_argument("--n", type=int)
    p_search.add_argument("--colony-size", type=int, dest="colony_size")
    p_search.add_argument("--maxlimit", type=int)
    p_search.add_argument("--alpha", type=float)
    p_search.add_argument("--seed", type=int)
    p_search.add_argument("--budget", type=int)
    p_search.add_argument("--mode", choices=[FULL_MODE, EXTENSION_MODE])
    p_search.add_argument("--init-density", type=float, dest="init_density")
    p_search.add_argument("--degree-range", dest="degree_range", help="LO..HI for extension mode")
    p_search.add_argument("--count-cap", type=int, dest="count_cap")
    p_search.add_argument("--base", help="base graph file for extension mode (default: bundled)")
    p_search.add_argument("--out", help=f"output root (default ${OUT_DIR_ENV} or ./runs)")
    p_search.add_argument("--threads", type=int, help="accepted for symmetry; search runs single-threaded")
    p_search.set_defaults(func=cmd_search)

    p_verify = sub.add_parser("verify", help="exactly certify graph files")
    p_verify.add_argument("files", nargs="+")
    p_verify.add_argument("--p", type=int, required=True)
    p_verify.add_argument("--q", type=int, required=True)
    p_verify.set_defaults(func=cmd_verify)

    p_va = sub.add_parser("verify-appendix", help="adjudicate the bundled dataset claims")
    p_va.add_argument("--json", action="store_true")
    p_va.set_defaults(func=cmd_verify_appendix)

    p_vd = sub.add_parser("verify-deletions", help="check the claimed deletion witnesses and scan all deletions")
    p_vd.add_argument("--threads", type=int, default=os.cpu_count())
    p_vd.add_argument("--json", action="store_true")
    p_vd.set_defaults(func=cmd_verify_deletions)

    p_count = sub.add_parser("count", help="exact clique / independent-set counts")
    p_count.add_argument("--file", required=True)
    p_count.add_argument("--p", type=int)
    p_count.add_argument("--q", type=int)
    p_count.add_argument("--cliques", help="size or LO..HI range")
    p_count.add_argument("--indep", help="size or LO..HI range")
    p_count.set_defaults(func=cmd_count)

    p_bounds = sub.add_parser("bounds", help="known Ramsey values and witness degree ranges")
    p_bounds.add_argument("p", type=int)
    p_bounds.add_argument("q", type=int)
    p_bounds.add_argument("n", type=int, nargs="?")
    p_bounds.add_argument("--json", action="store_true")
    p_bounds.set_defaults(func=cmd_bounds)

    p_tf = sub.add_parser("enumerate-tf", help="canonical triangle-free graphs on k vertices")
    p_tf.add_argument("k", type=int)
    p_tf.add_argument("--adj", action="store_true", help="adjacency lists instead of graph6")
    p_tf.set_defaults(func=cmd_enumerate_tf)

    p_eb = sub.add_parser("extract-base", help="write and validate the 35-vertex base graph")
    p_eb.add_argument("--out", default="base35.adj")
    p_eb.set_defaults(func=cmd_extract_base)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except FileNotFoundError as exc:
        print(f"file error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except json.JSONDecodeError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
