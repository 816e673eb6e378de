"""The property suite behind ``labelcut check``."""

from __future__ import annotations

import random
from fractions import Fraction

from .generate import GeneratorConfig, generate
from .model import LabeledGraph, Semantics, Variant, is_st_connected, remove_labels
from .oracles import brute_hitting_set_size, brute_min_edge_cut
from .parallel import pmap
from .properties import (
    PropertyVerdict,
    check_f_symmetric,
    check_g_submodular,
    degree_bound,
    find_f_submodularity_violation,
)
from .reductions import HittingSetInstance, brute_force_hitting_set, hitting_set_to_st_label_cut
from .solvers import DEFAULT_BUDGET, SolveConfig, exact_min_label_cut, greedy_st_label_cut, min_edge_cut
from .transform import operation_k, verify_theorem1


def _w(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def instance_checks(tagged) -> list:
    """Per-instance verdicts for one ``(tag, graph)`` pair."""
    tag, g = tagged
    out = []

    def add(name, passed, witness=""):
        out.append(PropertyVerdict(f"{tag}:{name}", passed, "" if passed else witness))

    report = operation_k(g)
    for clause in verify_theorem1(report, g):
        add(f"theorem1_{clause.name}", clause.passed, clause.detail)

    again = operation_k(report.transformed_graph)
    idem = all(len(c) == 1 for c in again.merged_classes) and (
        again.new_weights == report.new_weights
    )
    add("opk_idempotent", idem, "second pass merged labels")

    if g.num_labels <= DEFAULT_BUDGET:
        variants = [Variant.GLOBAL] + ([Variant.ST] if g.terminals else [])
        for variant in variants:
            before = exact_min_label_cut(g, SolveConfig(variant, Semantics.CASCADING))
            after = exact_min_label_cut(report.transformed_graph, SolveConfig(variant))
            add(
                f"opk_preserves_{variant.value}_cut",
                before.total_weight == after.total_weight,
                f"original={_w(before.total_weight)} transformed={_w(after.total_weight)}",
            )

        cut = exact_min_label_cut(g, SolveConfig(Variant.GLOBAL, Semantics.INDEPENDENT))
        bound = degree_bound(g, Semantics.INDEPENDENT)
        add(
            "degree_bound",
            cut.total_weight <= bound,
            f"cut={_w(cut.total_weight)} bound={_w(bound)}",
        )

        if g.terminals:
            for sem in Semantics:
                cfg = SolveConfig(Variant.ST, sem)
                greedy = greedy_st_label_cut(g, cfg)
                exact = exact_min_label_cut(g, cfg)
                alive = remove_labels(g, greedy.labels, sem)
                feasible = not is_st_connected(g, *g.terminals, alive)
                add(
                    f"greedy_{sem.value}_feasible",
                    feasible and greedy.total_weight >= exact.total_weight,
                    f"greedy={_w(greedy.total_weight)} exact={_w(exact.total_weight)}",
                )

    verdict = check_g_submodular(g)
    add(
        "g_submodular",
        verdict.holds,
        f"E'={sorted(verdict.violation[0])} E''={sorted(verdict.violation[1])}"
        if verdict.violation
        else "",
    )
    if g.n <= 12:
        add("f_symmetric", check_f_symmetric(g), "f(A) != f(V-A)")
    return out


def _reduction_sweep(seed: int, count: int) -> PropertyVerdict:
    rng = random.Random(seed)
    for k in range(count):
        size = rng.randint(1, 6)
        subsets = [
            rng.sample(range(size), rng.randint(1, size)) for _ in range(rng.randint(1, 4))
        ]
        h = HittingSetInstance(size, tuple(subsets))
        g = hitting_set_to_st_label_cut(h)
        cut = exact_min_label_cut(g, SolveConfig(Variant.ST))
        hs = brute_force_hitting_set(h)
        if not (len(hs) == cut.total_weight == brute_hitting_set_size(h)):
            return PropertyVerdict(
                "theorem3_reduction", False, f"instance={k} hs={len(hs)} cut={_w(cut.total_weight)}"
            )
    return PropertyVerdict("theorem3_reduction", True)


def _menger_sweep(seed: int, count: int) -> PropertyVerdict:
    rng = random.Random(seed)
    for k in range(count):
        n = rng.randint(2, 7)
        m = rng.randint(n - 1, min(n * (n - 1) // 2, 10))
        g = generate(GeneratorConfig(n, m, 3, seed=rng.getrandbits(32)))
        s, t = g.terminals
        _, value = min_edge_cut(g, s, t)
        brute = brute_min_edge_cut(g, s, t)
        if value != brute:
            return PropertyVerdict("menger_min_edge_cut", False, f"instance={k} flow={value} brute={brute}")
    return PropertyVerdict("menger_min_edge_cut", True)


def random_instances(seed: int, count: int) -> list:
    rng = random.Random(seed)
    out = []
    for k in range(count):
        n = rng.randint(2, 9)
        m = rng.randint(n - 1, min(n * (n - 1) // 2, 12))
        cfg = GeneratorConfig(
            n, m, rng.randint(1, 8), rng.choice([0.0, 0.2, 0.4]), seed=rng.getrandbits(32)
        )
        out.append((f"random{k}", generate(cfg)))
    return out


def run_suite(instances, seed: int = 0, random_count: int = 0, global_checks: bool = True) -> list:
    """Every verdict, in a fixed order, for the given ``(tag, graph)`` pairs."""
    tagged = list(instances) + random_instances(seed, random_count)
    verdicts = [v for chunk in pmap(instance_checks, tagged) for v in chunk]
    if global_checks:
        wit = find_f_submodularity_violation()
        verdicts.append(
            PropertyVerdict(
                "f_not_submodular",
                wit is not None and wit.deficit > 0,
                wit.describe() if wit else "no witness within bounds",
            )
        )
        control = find_f_submodularity_violation(max_vertices=4, distinct_labels=True)
        verdicts.append(
            PropertyVerdict(
                "plain_cut_submodular", control is None, control.describe() if control else ""
            )
        )
        verdicts.append(_reduction_sweep(seed, 50))
        verdicts.append(_menger_sweep(seed, 30))
    return verdicts


def format_verdicts(verdicts) -> str:
    return "".join(v.line() + "\n" for v in verdicts)


def suite_passed(verdicts) -> bool:
    return all(v.passed for v in verdicts)


def check_graph(g: LabeledGraph, tag: str = "instance") -> list:
    return instance_checks((tag, g))
