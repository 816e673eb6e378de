"""Command-line entry point: ``labelcut <command> ...``.

Exit status is 0 on success, 1 when a checked property fails and 2 on
malformed input or usage errors.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import checks, formats
from .data import fixture_names, load_fixture
from .errors import LabelCutError
from .generate import GeneratorConfig, generate
from .model import Semantics, Variant, compute_stats
from .reductions import brute_force_hitting_set, decision_pipeline_theorem3, hitting_set_to_st_label_cut
from .solvers import (
    DEFAULT_BUDGET,
    SolveConfig,
    exact_min_label_cut,
    greedy_st_label_cut,
    min_edge_cut,
)
from .transform import operation_k, rainbow_path_transform

EXIT_OK, EXIT_PROPERTY, EXIT_INPUT = 0, 1, 2


def _w(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load(path: str):
    return formats.parse(_read(path))


def cmd_gen(args) -> int:
    cfg = GeneratorConfig(
        n=args.n,
        m=args.m,
        num_labels=args.labels,
        overlap_prob=args.overlap,
        weight_range=(args.wmin, args.wmax),
        seed=args.seed,
        terminals=not args.no_terminals,
    )
    try:
        g = generate(cfg)
    except ValueError as exc:
        raise LabelCutError(str(exc)) from exc
    sys.stdout.write(formats.emit(g))
    return EXIT_OK


def _edge_arg(text: str):
    if "-" in text:
        u, v = text.split("-", 1)
        return (int(u), int(v))
    return int(text)


def cmd_transform(args) -> int:
    g = _load(args.file)
    if args.rainbow is None:
        sys.stdout.write(formats.emit_report(operation_k(g)))
        return EXIT_OK
    try:
        edge = _edge_arg(args.rainbow)
    except ValueError:
        raise LabelCutError(f"bad edge {args.rainbow!r}; use an index or u-v") from None
    h = rainbow_path_transform(g, edge)
    cfg = SolveConfig(Variant.GLOBAL, Semantics.CASCADING, args.budget)
    before = exact_min_label_cut(g, cfg)
    after = exact_min_label_cut(h, cfg)
    out = [
        f"rainbow_edge {args.rainbow}",
        f"original_cut_weight {_w(before.total_weight)}",
        f"transformed_cut_weight {_w(after.total_weight)}",
        f"original_min_label_degree {compute_stats(g).min_label_degree}",
        f"transformed_min_label_degree {compute_stats(h).min_label_degree}",
        f"connectivity_preserved {str(before.total_weight == after.total_weight).lower()}",
    ]
    sys.stdout.write("\n".join(out) + "\n" + formats.emit(h))
    return EXIT_OK


def cmd_solve(args) -> int:
    g = _load(args.file)
    cfg = SolveConfig(args.variant, args.semantics, args.budget)
    if args.method == "greedy":
        if cfg.variant is not Variant.ST:
            raise LabelCutError("the greedy heuristic only handles --variant st")
        sol = greedy_st_label_cut(g, cfg)
    else:
        sol = exact_min_label_cut(g, cfg)
    out = [
        f"variant {cfg.variant.value}",
        f"method {args.method}",
        f"semantics {cfg.semantics.value}",
    ]
    if args.method == "greedy":
        out.append("heuristic true")
    out.append(f"cut_weight {_w(sol.total_weight)}")
    out.append("labels " + " ".join(g.names_of(sol.labels)))
    if cfg.variant is Variant.GLOBAL:
        out.append("witness " + " ".join(str(v) for v in sorted(sol.witness)))
    else:
        out.append(f"witness {sol.witness[0]} {sol.witness[1]}")
    if cfg.variant is Variant.ST:
        _, value = min_edge_cut(g)
        out.append(f"min_edge_cut {value}")
    sys.stdout.write("\n".join(out) + "\n")
    return EXIT_OK


def cmd_stats(args) -> int:
    g = _load(args.file)
    st = compute_stats(g)
    out = [
        f"n {g.n}",
        f"m {g.m}",
        f"labels {g.num_labels}",
        f"non_overlapping {str(g.non_overlapping).lower()}",
        "label_degree " + " ".join(map(str, st.label_degree)),
        f"min_label_degree {st.min_label_degree}",
        f"max_label_degree {st.max_label_degree}",
        "label_frequency " + " ".join(map(str, st.label_frequency)),
        f"max_label_frequency {st.max_label_frequency}",
    ]
    sys.stdout.write("\n".join(out) + "\n")
    return EXIT_OK


def cmd_reduce(args) -> int:
    h = formats.parse_hitting_set(_read(args.file))
    g = hitting_set_to_st_label_cut(h)
    _, edge_cut = min_edge_cut(g)
    hs = brute_force_hitting_set(h)
    cut = exact_min_label_cut(g, SolveConfig(Variant.ST))
    out = [
        f"universe {h.universe_size}",
        f"subsets {len(h.subsets)}",
        f"graph_vertices {g.n}",
        f"graph_edges {g.m}",
        f"min_edge_cut {edge_cut}",
        f"hitting_set_optimum {len(hs)}",
        "hitting_set " + " ".join(map(str, sorted(hs))),
        f"label_cut_optimum {_w(cut.total_weight)}",
        "label_cut " + " ".join(map(str, sorted(cut.labels))),
    ]
    status = EXIT_OK if len(hs) == cut.total_weight else EXIT_PROPERTY
    limit = args.budget if args.budget is not None else h.budget
    if limit is not None:
        res = decision_pipeline_theorem3(h, limit)
        out += [
            f"budget {limit}",
            f"hitting_set_at_most {str(res.hitting_set_at_most).lower()}",
            f"label_cut_at_most {str(res.label_cut_at_most).lower()}",
        ]
    out.append(f"agree {str(status == EXIT_OK).lower()}")
    sys.stdout.write("\n".join(out) + "\n")
    if args.emit_graph:
        sys.stdout.write(formats.emit(g))
    return status


def cmd_check(args) -> int:
    if args.files:
        instances = [(path, _load(path)) for path in args.files]
    else:
        instances = [(name, load_fixture(name)) for name in fixture_names()]
    verdicts = checks.run_suite(
        instances, seed=args.seed, random_count=args.random, global_checks=not args.no_global
    )
    sys.stdout.write(checks.format_verdicts(verdicts))
    return EXIT_OK if checks.suite_passed(verdicts) else EXIT_PROPERTY


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="labelcut", description="Minimum label cut toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    q = sub.add_parser("gen", help="generate a random instance")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--m", type=int, required=True)
    q.add_argument("--labels", type=int, required=True)
    q.add_argument("--overlap", type=float, default=0.0)
    q.add_argument("--wmin", type=int, default=1)
    q.add_argument("--wmax", type=int, default=1)
    q.add_argument("--seed", type=int, default=0)
    q.add_argument("--no-terminals", action="store_true")
    q.set_defaults(func=cmd_gen)

    q = sub.add_parser("transform", help="run operation K, or the rainbow-path split")
    q.add_argument("file")
    q.add_argument("--rainbow", metavar="EDGE", help="edge index or u-v to split")
    q.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    q.set_defaults(func=cmd_transform)

    q = sub.add_parser("solve", help="minimum label cut")
    q.add_argument("file")
    q.add_argument("--variant", choices=[v.value for v in Variant], default="global")
    q.add_argument("--method", choices=["exact", "greedy"], default="exact")
    q.add_argument("--semantics", choices=[s.value for s in Semantics], default="cascading")
    q.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    q.set_defaults(func=cmd_solve)

    q = sub.add_parser("check", help="run the property suite")
    q.add_argument("files", nargs="*", help="instances (default: shipped fixtures)")
    q.add_argument("--seed", type=int, default=0)
    q.add_argument("--random", type=int, default=0, help="extra generated instances")
    q.add_argument("--no-global", action="store_true", help="skip instance-independent checks")
    q.set_defaults(func=cmd_check)

    q = sub.add_parser("reduce", help="hitting set -> label s-t cut")
    q.add_argument("file")
    q.add_argument("--budget", type=int, help="decision bound l")
    q.add_argument("--emit-graph", action="store_true")
    q.set_defaults(func=cmd_reduce)

    q = sub.add_parser("stats", help="label degree statistics")
    q.add_argument("file")
    q.set_defaults(func=cmd_stats)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (LabelCutError, OSError) as exc:
        print(f"labelcut: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
