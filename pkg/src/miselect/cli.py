"""Command-line front end.

Subcommands: ``oracle`` (print the analytic entropy/MI table), ``order``
(run one selection method against the oracle or a sample CSV),
``simulate`` (replicated Monte Carlo experiment, CSV output),
``relevance`` (relevance analysis of a labeled joint), and ``verify``
(self-checks, nonzero exit on failure).
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

import numpy as np

from .estimation import Sample, estimated_provider
from .oracle import (
    FEATURES,
    Scenario,
    ScenarioSpec,
    feature_label,
    oracle_provider,
)
from .relevance import LabeledJoint, RelevanceClass
from .selection import HaltReason, MethodSpec, SelectionTrace, select_all
from .simlab import ExperimentConfig, emit_csv, run_experiment
from .verify import run_all_checks

DEFAULT_SEED = 20250808


def _scenario(text: str) -> Scenario:
    try:
        return Scenario(text.upper())
    except ValueError:
        raise argparse.ArgumentTypeError(f"scenario must be I or II, got {text!r}")


def _build_spec(args: argparse.Namespace) -> ScenarioSpec:
    try:
        return ScenarioSpec(args.scenario, args.k, args.delta, args.a, args.b, args.d)
    except ValueError as exc:
        raise SystemExit(f"error: {exc}")


def _add_spec_flags(p: argparse.ArgumentParser, need_k: bool = True) -> None:
    p.add_argument("--scenario", type=_scenario, default=Scenario.UNIFORM,
                   help="I (uniform drivers) or II (Gaussian drivers)")
    p.add_argument("--k", type=float, default=0.2, required=need_k,
                   help="class slope, in (0,1)")
    p.add_argument("--delta", type=float, default=0.5, help="uniform half-width")
    p.add_argument("--a", type=float, default=3.0)
    p.add_argument("--b", type=float, default=1.0)
    p.add_argument("--d", type=float, default=2.0)


def cmd_oracle(args: argparse.Namespace) -> int:
    spec = _build_spec(args)
    provider = oracle_provider(spec)
    for f in FEATURES:
        h = provider.entropy(f).value
        m = provider.class_mi(f).value
        print(f"{feature_label(f, spec)}\t{h:.4f}\t{m:.4f}")
    return 0


def cmd_order(args: argparse.Namespace) -> int:
    name, _, beta_txt = args.method.strip().partition(":")
    beta = args.beta if args.beta is not None else (
        float(beta_txt) if beta_txt else None
    )
    try:
        mspec = MethodSpec.parse(name if beta is None else f"{name}:{beta}")
    except ValueError as exc:
        raise SystemExit(f"error: {exc}")
    spec = _build_spec(args)
    if args.data:
        try:
            provider = estimated_provider(Sample.from_csv(args.data))
        except (OSError, ValueError) as exc:
            raise SystemExit(f"error: cannot read sample {args.data}: {exc}")
    else:
        provider = oracle_provider(spec)
    trace = select_all(mspec, provider)
    labels = " ".join(feature_label(f, spec) for f in trace.selected)
    print(f"{labels} | halt: {trace.halt.value}")
    if args.trace:
        _write_trace(trace, spec, args.trace)
    return 0


def _write_trace(trace: SelectionTrace, spec: ScenarioSpec, path: str) -> None:
    lines = ["step\tcandidate\tobjective\tselected"]
    for step_no, step in enumerate(trace.steps, start=1):
        for f in FEATURES:
            v = step.objectives.get(f)
            if v is None:
                continue
            mark = "*" if f == step.winner else ""
            lines.append(f"{step_no}\t{feature_label(f, spec)}\t{v}\t{mark}")
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


def parse_config_file(path: str) -> dict[str, str]:
    """Flat key=value grammar; '#' starts a comment, blank lines ignored."""
    raw: dict[str, str] = {}
    with open(path) as fh:
        for lineno, line in enumerate(fh, start=1):
            text = line.split("#", 1)[0].strip()
            if not text:
                continue
            if "=" not in text:
                raise ValueError(f"{path}:{lineno}: expected key = value")
            key, value = (part.strip() for part in text.split("=", 1))
            if not key or not value:
                raise ValueError(f"{path}:{lineno}: empty key or value")
            raw[key.lower()] = value
    return raw


def _floats(text: str) -> tuple[float, ...]:
    return tuple(float(v) for v in text.split(","))


def _ints(text: str) -> tuple[int, ...]:
    return tuple(int(v) for v in text.split(","))


def _methods(text: str) -> tuple[MethodSpec, ...]:
    return tuple(MethodSpec.parse(tok) for tok in text.split(","))


def cmd_simulate(args: argparse.Namespace) -> int:
    raw: dict[str, str] = {}
    if args.config:
        try:
            raw = parse_config_file(args.config)
        except (OSError, ValueError) as exc:
            raise SystemExit(f"error: {exc}")
    def pick(flag, key, parse, default):
        if flag is not None:
            return flag
        if key in raw:
            return parse(raw[key])
        return default

    try:
        config = ExperimentConfig(
            scenario=pick(args.scenario_opt, "scenario", _scenario, Scenario.UNIFORM),
            k_values=pick(args.k_values, "k", _floats, (0.2,)),
            n_values=pick(args.n_values, "n", _ints, (1000,)),
            methods=pick(args.methods, "methods", _methods,
                         (MethodSpec.parse("mifs:1"),)),
            replicates=pick(args.replicates, "replicates", int, 100),
            seed=pick(args.seed, "seed", int, DEFAULT_SEED),
            delta=pick(args.delta, "delta", float, 0.5),
            a=pick(args.a, "a", float, 3.0),
            b=pick(args.b, "b", float, 1.0),
            d=pick(args.d, "d", float, 2.0),
        )
    except ValueError as exc:
        raise SystemExit(f"error: {exc}")
    result = run_experiment(config, keep_traces=bool(args.traces))
    out = args.out or (raw.get("out") or "experiment.csv")
    emit_csv(result, out)
    if args.traces:
        _write_traces_json(result, args.traces)
    for c in result.cells:
        print(
            f"{c.scenario.value} k={c.k:g} n={c.n} {c.method.label()}: "
            f"frequency {c.frequency:.4f} (se {c.stderr():.4f}, "
            f"{c.replicates} replicates)"
        )
    print(f"wrote {out} in {result.runtime:.1f}s")
    return 0


def _write_traces_json(result, path: str) -> None:
    import json

    cells = []
    for (mspec, k, n), traces in result.traces.items():
        cells.append(
            {
                "scenario": result.config.scenario.value,
                "k": k,
                "n": n,
                "method": mspec.method.value,
                "beta": mspec.beta,
                "replicates": [
                    {
                        "selected": [f.name for f in t.selected],
                        "halt": t.halt.value,
                    }
                    for t in traces
                ],
            }
        )
    with open(path, "w") as fh:
        json.dump({"seed": result.config.seed, "cells": cells}, fh, indent=1)


def cmd_relevance(args: argparse.Namespace) -> int:
    try:
        with open(args.joint) as fh:
            joint = LabeledJoint.from_json(fh.read())
    except (OSError, ValueError, KeyError) as exc:
        raise SystemExit(f"error: cannot load joint {args.joint}: {exc}")

    def name(f: int) -> str:
        return f"V{f + 1}"

    chosen = joint.markov_blanket_filter()
    partition = joint.partition(chosen)
    for cls in (RelevanceClass.SR, RelevanceClass.WR_NR, RelevanceClass.WR_R,
                RelevanceClass.IRRELEVANT):
        members = [name(f) for f, c in partition.items() if c is cls]
        label = {
            RelevanceClass.SR: "SR",
            RelevanceClass.WR_NR: "WR-NR",
            RelevanceClass.WR_R: "WR-R",
            RelevanceClass.IRRELEVANT: "Irrelevant",
        }[cls]
        print(f"{label}: {' '.join(members) if members else '-'}")
    sets = joint.relevance_optimal_sets()
    rendered = " ".join("{" + ",".join(name(f) for f in s) + "}" for s in sets)
    print(f"Relevance-optimal sets: {rendered}")
    print("Markov blanket filter: {" + ",".join(name(f) for f in chosen) + "}")
    return 0


def cmd_verify(_: argparse.Namespace) -> int:
    results = run_all_checks()
    for r in results:
        print(f"{'PASS' if r.ok else 'FAIL'} {r.name}: {r.detail}")
    return 0 if all(r.ok for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="miselect",
        description="Mutual-information feature selection lab",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("oracle", help="print the analytic entropy / class-MI table")
    _add_spec_flags(p)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("order", help="run one selection method")
    _add_spec_flags(p, need_k=False)
    p.add_argument("--method", required=True,
                   help="mifs, mifsu, mrmr, mmifsu, micc, qmifs, nmifs, maxmifs")
    p.add_argument("--beta", type=float, default=None)
    p.add_argument("--data", default=None, help="sample CSV; estimator backend")
    p.add_argument("--trace", default=None, help="write per-step objectives as TSV")
    p.set_defaults(func=cmd_order)

    p = sub.add_parser("simulate", help="replicated Monte Carlo experiment")
    p.add_argument("--config", default=None, help="key=value config file")
    p.add_argument("--out", default=None, help="output CSV path")
    p.add_argument("--traces", default=None,
                   help="also dump every per-replicate ordering as JSON")
    p.add_argument("--scenario", dest="scenario_opt", type=_scenario, default=None)
    p.add_argument("--k", dest="k_values", type=_floats, default=None,
                   help="comma-separated class slopes")
    p.add_argument("--n", dest="n_values", type=_ints, default=None,
                   help="comma-separated sample sizes")
    p.add_argument("--methods", type=_methods_arg, default=None,
                   help="comma-separated, e.g. mifs:1,mrmr,maxmifs")
    p.add_argument("--replicates", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--delta", type=float, default=None)
    p.add_argument("--a", type=float, default=None)
    p.add_argument("--b", type=float, default=None)
    p.add_argument("--d", type=float, default=None)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("relevance", help="relevance analysis of a labeled joint")
    p.add_argument("--joint", required=True, help="JSON table with class_index")
    p.set_defaults(func=cmd_relevance)

    p = sub.add_parser("verify", help="run the self-check suite")
    p.set_defaults(func=cmd_verify)
    return parser


def _methods_arg(text: str) -> tuple[MethodSpec, ...]:
    try:
        return _methods(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
