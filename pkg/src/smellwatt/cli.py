"""Command-line driver.

Exit codes: 0 success, 2 invalid input, 3 subject or profiling failure.
Any option may be preset in a TOML file named by ``--config`` or by the
SMELLWATT_CONFIG environment variable, either at top level or in a table
named after the subcommand; options given on the command line win.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import __version__
from .errors import IoFailure, SmellwattError, ValidationError

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib


def _progress(msg: str) -> None:
    print(msg, file=sys.stderr, flush=True)


def _emit(text: str, out: str | None) -> None:
    if out:
        try:
            Path(out).write_text(text, encoding="utf-8")
        except OSError as exc:
            raise IoFailure(out, exc.strerror or str(exc)) from exc
    else:
        sys.stdout.write(text)


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise IoFailure(path, exc.strerror or str(exc)) from exc


def _load_json(path: str):
    try:
        return json.loads(_read(path))
    except json.JSONDecodeError as exc:
        raise ValidationError(f"{path}: {exc}") from exc


def _json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


# -- subcommands ------------------------------------------------------------------

def cmd_detect(a) -> int:
    from .detector import RuleConfig, compute_metrics, detect_smells, dump_instances, ingest_corpus
    from .detector.rules import count_by_kind

    rules = RuleConfig.from_toml(a.rules) if a.rules else RuleConfig()
    corpus = ingest_corpus(a.paths, a.flavor)
    for path, reason in getattr(corpus, "skipped", []):
        _progress(f"skipped {path}: {reason}")
    smells = detect_smells(corpus, rules)
    if a.format == "markdown":
        counts = count_by_kind(smells)
        lines = ["| kind | instances |", "|---|---|"] + [f"| {k.value} | {n} |" for k, n in counts.items()]
        _emit("\n".join(lines) + "\n", a.out)
    else:
        _emit(dump_instances(smells), a.out)
    if a.features:
        from .predictor import build_feature_vector

        fv = build_feature_vector(compute_metrics(corpus), smells, a.category)
        Path(a.features).write_text(_json(fv.to_json()), encoding="utf-8")
    return 0


def _runspec(a, command: str):
    from .profiler import RunSpec

    return RunSpec.from_shell(
        command,
        duration_limit=a.duration,
        sample_interval=a.interval_ms / 1000.0,
        warmup_discard=a.warmup,
        repetitions=a.repetitions,
    )


def _measure(a, command: str, label: str):
    from .profiler import run_repeated, summarize

    spec = _runspec(a, command)
    series = run_repeated(spec, progress=lambda i, n, _s: _progress(f"{label}: run {i}/{n}"))
    return series, summarize(series)


def cmd_profile(a) -> int:
    from .profiler import summary_json, write_runs_csv

    series, summary = _measure(a, a.cmd, "profile")
    if a.runs_csv:
        write_runs_csv(series, a.runs_csv)
    _emit(summary_json(summary), a.out)
    return 0


def cmd_bench(a) -> int:
    from .catalog import SmellKind
    from .impact import AppCategory, ImpactDataset, ImpactRecord, export_impact_csv, ingest_impact_csv
    from .profiler import normalize_per_instance, relative_change

    _, before = _measure(a, a.before, "before")
    _, after = _measure(a, a.after, "after")
    delta = relative_change(before, after)
    per = normalize_per_instance(delta, a.count) if a.count else None
    rec = ImpactRecord(
        a.app, AppCategory.parse(a.category), SmellKind.parse(a.kind), a.count, delta.dcpu_pct, delta.dmem_pct,
        per.dcpu_per_instance if per else None, per.dmem_per_instance if per else None,
    )
    records = []
    if a.dataset and Path(a.dataset).exists():
        records = [r for r in ingest_impact_csv(a.dataset) if r.key != rec.key]
    text = export_impact_csv(ImpactDataset(records + [rec]))
    _emit(text, a.out or a.dataset)
    return 0


def _impact_sources(a):
    from .impact import ingest_batch_csv, ingest_impact_csv
    from .impact.fixtures import reference_batches, reference_dataset

    ds = ingest_impact_csv(a.dataset) if a.dataset else reference_dataset()
    batches = ingest_batch_csv(a.batches) if getattr(a, "batches", None) else (reference_batches() if not a.dataset else [])
    return ds, batches


def cmd_additivity(a) -> int:
    from .advisor import emit_report
    from .impact import BatchMode, additivity_report

    ds, batches = _impact_sources(a)
    modes = {BatchMode(m.upper()) for m in a.modes.split(",")}
    report = additivity_report(ds, [b for b in batches if b.mode in modes])
    _emit(emit_report(report, a.format), a.out)
    return 0


def _load_examples(path):
    from .impact.fixtures import data_path
    from .predictor import read_bench_csv

    if path is None:
        return read_bench_csv(data_path("bench.csv"))
    return read_bench_csv(path)


def cmd_train(a) -> int:
    from .predictor import GAConfig, TrainConfig, ga_select, train

    data = _load_examples(a.dataset)
    base = dict(
        target=a.target, lasso_alpha=a.lasso_alpha, rf_trees=a.trees, ann_epochs=a.epochs,
    )
    features = tuple(f.strip() for f in a.features.split(",")) if a.features else None
    if features is None and a.select == "ga":
        _progress("selecting features with the genetic algorithm")
        sub = ga_select(
            data, a.model, a.seed,
            GAConfig(population=a.population, generations=a.generations, target=a.target),
            TrainConfig(**base),
        )
        features = sub.features
        _progress(f"selected {len(features)} features, CV MSE {sub.fitness:.6g}")
    model = train(data, a.model, TrainConfig(features=features, **base), a.seed)
    _emit(model.to_json() + "\n", a.out)
    return 0


def cmd_predict(a) -> int:
    from .predictor import TrainedModel, predict

    model = TrainedModel.load(a.model)
    fv = _load_json(a.features)
    if "category" in fv:
        from .impact.model import AppCategory

        for c in AppCategory:
            fv.setdefault(f"cat_{c.value}", 1.0 if c.value == AppCategory.parse(fv["category"]).value else 0.0)
    _emit(_json(predict(model, fv).to_dict()), a.out)
    return 0


def cmd_evaluate(a) -> int:
    from .predictor import TrainedModel, evaluate_model

    model = TrainedModel.load(a.model)
    metrics = evaluate_model(model, _load_examples(a.dataset))
    if len(metrics) == 1:
        out = next(iter(metrics.values())).to_dict()
    else:
        out = {h: m.to_dict() for h, m in metrics.items()}
    _emit(_json(out), a.out)
    return 0


def cmd_plan(a) -> int:
    from .advisor import Objective, emit_report, plan_batch
    from .detector import load_instances
    from .impact import ingest_impact_csv
    from .impact.fixtures import reference_dataset
    from .predictor import FeatureVector, TrainedModel

    raw = _load_json(a.inventory)
    inventory = raw if isinstance(raw, dict) else load_instances(json.dumps(raw))
    sources = []
    if a.model:
        sources.append(TrainedModel.load(a.model))
    if a.dataset or not a.model:
        sources.append(ingest_impact_csv(a.dataset) if a.dataset else reference_dataset())
    fv = FeatureVector.from_mapping(_load_json(a.features)) if a.features else None
    plan = plan_batch(inventory, tuple(sources), Objective(a.objective, a.budget), features=fv, category=a.category)
    _emit(emit_report(plan, a.format), a.out)
    return 0


def cmd_report(a) -> int:
    from .advisor import RefactoringPlan, emit_report
    from .impact import ingest_impact_csv

    if a.plan:
        obj = RefactoringPlan.from_dict(_load_json(a.plan))
    elif a.dataset:
        obj = ingest_impact_csv(a.dataset)
    else:
        from .impact.fixtures import reference_dataset

        obj = reference_dataset()
    _emit(emit_report(obj, a.format), a.out)
    return 0


def cmd_catalog(a) -> int:
    from .catalog import export_catalog

    _emit(export_catalog(), a.out)
    return 0


# -- parser ------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="RNG seed (default 0)")
    common.add_argument("--out", help="write output here instead of stdout")
    common.add_argument("--format", default="json", help="json, markdown or csv-plotdata")
    common.add_argument("--config", help="TOML file with option defaults")

    p = argparse.ArgumentParser(prog="smellwatt",
                                description="Code-smell detection and refactoring resource-impact toolkit.")
    p.add_argument("--version", action="version", version=f"smellwatt {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(func=fn)
        return sp

    sp = add("detect", cmd_detect, "detect smells in source trees")
    sp.add_argument("paths", nargs="+")
    sp.add_argument("--flavor", default="java", help="java or python")
    sp.add_argument("--rules", help="TOML file of rule thresholds")
    sp.add_argument("--features", help="also write the feature vector JSON here")
    sp.add_argument("--category", default="testing", help="application category for --features")

    def profiling(sp):
        sp.add_argument("--repetitions", type=int, default=7)
        sp.add_argument("--interval-ms", type=float, default=10.0)
        sp.add_argument("--duration", type=float, default=60.0, help="per-run limit in seconds")
        sp.add_argument("--warmup", type=float, default=1.0, help="seconds discarded at start")

    sp = add("profile", cmd_profile, "sample CPU and memory of a command")
    sp.add_argument("--cmd", required=True, help="shell-style command line of the subject")
    sp.add_argument("--runs-csv", help="also write every sample here")
    profiling(sp)

    sp = add("bench", cmd_bench, "profile before/after versions and record the impact row")
    sp.add_argument("--before", required=True)
    sp.add_argument("--after", required=True)
    sp.add_argument("--app", required=True)
    sp.add_argument("--category", required=True)
    sp.add_argument("--kind", required=True)
    sp.add_argument("--count", type=int, required=True, help="refactored instances")
    sp.add_argument("--dataset", help="impact CSV to update")
    profiling(sp)

    sp = add("additivity", cmd_additivity, "compare batch impact with summed individual impact")
    sp.add_argument("--dataset", help="impact CSV (default: packaged reference data)")
    sp.add_argument("--batches", help="batch CSV (default: packaged reference data)")
    sp.add_argument("--modes", default="IMPROVING,WORSENING",
                    help="batch modes to include; ALL batches are not additive over the stored kinds")

    sp = add("train", cmd_train, "train a regression model")
    sp.add_argument("--model", required=True, help="linear, polynomial, lasso, random-forest or ann")
    sp.add_argument("--target", default="both", help="cpu, mem or both")
    sp.add_argument("--dataset", help="bench CSV (default: packaged benchmark)")
    sp.add_argument("--features", help="comma-separated feature names; skips selection")
    sp.add_argument("--select", default="ga", help="ga or all")
    sp.add_argument("--population", type=int, default=30)
    sp.add_argument("--generations", type=int, default=50)
    sp.add_argument("--lasso-alpha", type=float)
    sp.add_argument("--trees", type=int, default=100)
    sp.add_argument("--epochs", type=int, default=2000)

    sp = add("predict", cmd_predict, "predict resource impact for one application")
    sp.add_argument("--model", required=True)
    sp.add_argument("--features", required=True, help="feature JSON")

    sp = add("evaluate", cmd_evaluate, "MSE and RMSE of a model on a bench CSV")
    sp.add_argument("--model", required=True)
    sp.add_argument("--dataset", required=True)

    sp = add("plan", cmd_plan, "choose which smell kinds to refactor together")
    sp.add_argument("--inventory", required=True, help="detect output or a {kind: count} JSON object")
    sp.add_argument("--objective", default="MINIMIZE_BOTH")
    sp.add_argument("--budget", type=float, help="CPU_ONLY: tolerated memory worsening in percent")
    sp.add_argument("--dataset", help="impact CSV (default: packaged reference data)")
    sp.add_argument("--model", help="trained model JSON")
    sp.add_argument("--features", help="feature JSON, required with --model")
    sp.add_argument("--category")

    sp = add("report", cmd_report, "render a saved plan or an impact dataset")
    sp.add_argument("--plan", help="plan JSON")
    sp.add_argument("--dataset", help="impact CSV")

    sp = add("catalog", cmd_catalog, "smell catalog")
    sp.add_argument("action", choices=["export"])
    return p


def _config_defaults(parser: argparse.ArgumentParser, argv: list[str]) -> None:
    pre = argparse.ArgumentParser(add_help=False)
    pre.add_argument("--config")
    known, _ = pre.parse_known_args(argv)
    path = known.config or os.environ.get("SMELLWATT_CONFIG")
    if not path:
        return
    try:
        with open(path, "rb") as fh:
            data = tomllib.load(fh)
    except OSError as exc:
        raise IoFailure(path, exc.strerror or str(exc)) from exc
    except tomllib.TOMLDecodeError as exc:
        raise ValidationError(f"{path}: {exc}") from exc
    norm = lambda d: {k.replace("-", "_"): v for k, v in d.items() if not isinstance(v, dict)}  # noqa: E731
    top = norm(data)
    parser.set_defaults(**top)
    subs = next(a for a in parser._actions if isinstance(a, argparse._SubParsersAction))
    for name, sp in subs.choices.items():
        section = data.get(name, {})
        sp.set_defaults(**top, **(norm(section) if isinstance(section, dict) else {}))


GLOBAL_FLAGS = ("--seed", "--out", "--format", "--config")


def hoist_globals(argv: list[str], commands) -> list[str]:
    """Move global flags written before the subcommand to just after it."""
    moved, rest = [], []
    i = 0
    while i < len(argv) and argv[i] not in commands:
        tok = argv[i]
        if tok in GLOBAL_FLAGS and i + 1 < len(argv):
            moved += argv[i:i + 2]
            i += 2
            continue
        if tok.split("=", 1)[0] in GLOBAL_FLAGS:
            moved.append(tok)
        else:
            rest.append(tok)
        i += 1
    if i == len(argv):
        return argv
    return rest + [argv[i]] + moved + argv[i + 1:]


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    subs = next(a for a in parser._actions if isinstance(a, argparse._SubParsersAction))
    argv = hoist_globals(argv, subs.choices)
    try:
        _config_defaults(parser, argv)
        args = parser.parse_args(argv)
        if args.format not in ("json", "markdown", "csv-plotdata"):
            raise ValidationError(f"unsupported format {args.format!r}")
        return args.func(args)
    except SmellwattError as exc:
        print(f"smellwatt: {type(exc).__name__}: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
