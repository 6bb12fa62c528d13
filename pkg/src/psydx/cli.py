"""Command-line entry point exposing the whole pipeline as subcommands.

Exit codes: 0 success, 1 domain error, 2 usage error. Usage errors print the
subcommand usage line so scripts fail loudly and early.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any, Sequence, TextIO

from . import evaluation, mock_scripts, refinery, service, trajectory, wire
from .config import AppConfig, load_config, override_section, trainer_manifest
from .corpus import generate_fixture_corpus, load_corpus, save_corpus
from .errors import PsydxError, UsageError
from .gateway import DecodeParams, Gateway, HttpBackend, MockBackend
from .kb import KnowledgeBase, load_kb
from .rewards import group_advantages, schedule_weights
from .wire import canonical17, canonical17_list


def _existing_file(path: str | None, what: str) -> Path:
    if path is None:
        raise UsageError(f"{what} is required")
    p = Path(path)
    if not p.is_file():
        raise UsageError(f"{what} not found: {path}")
    return p


def _load_kb_for(args: argparse.Namespace, config: AppConfig) -> KnowledgeBase:
    path = getattr(args, "kb", None) or config.paths.kb_path
    return load_kb(path)


def _make_gateway(args: argparse.Namespace, config: AppConfig) -> Gateway:
    """Scripted mock when --scripts is given, HTTP backend otherwise."""
    scripts = getattr(args, "scripts", None)
    if scripts is not None:
        backend = MockBackend.from_file(_existing_file(scripts, "mock scripts file"))
    else:
        backend = HttpBackend(
            base_url=config.backend.base_url,
            auth_env_var=config.backend.auth_env_var,
        )
    decode = DecodeParams(
        temperature=config.decode.temperature,
        max_tokens=config.decode.max_tokens,
        seed=config.decode.seed,
    )
    return Gateway(
        backend,
        max_retries=config.backend.max_retries,
        max_in_flight=config.backend.max_in_flight,
        audit_path=getattr(args, "audit", None),
        default_decode=decode,
    )


def _write_text(path: str | None, text: str, stdout: TextIO) -> None:
    if path is None:
        stdout.write(text)
    else:
        Path(path).parent.mkdir(parents=True, exist_ok=True)
        Path(path).write_text(text, encoding="utf-8")


def _dump_sorted(obj: Any) -> str:
    return json.dumps(obj, ensure_ascii=False, indent=2, sort_keys=True) + "\n"


def _cmd_kb_validate(args, config, stdout) -> int:
    kb = load_kb(args.path or config.paths.kb_path)
    n_categories, n_disorders = kb.validate()
    stdout.write(f"{n_categories} categories, {n_disorders} disorders\n")
    return 0


def _cmd_fixture_generate(args, config, stdout) -> int:
    kb = _load_kb_for(args, config)
    corpus = generate_fixture_corpus(seed=args.seed,
                                     n_per_category=args.per_category, kb=kb)
    n = save_corpus(corpus, args.out)
    stdout.write(f"wrote {n} records to {args.out}\n")
    return 0


def _cmd_fixture_scripts(args, config, stdout) -> int:
    kb = _load_kb_for(args, config)
    corpus = load_corpus(_existing_file(args.corpus, "--corpus"), kb,
                         provenance="fixture")
    scripts = mock_scripts.build_all_scripts(corpus, kb)
    _write_text(args.out, _dump_sorted(scripts), stdout)
    if args.out:
        stdout.write(f"wrote {len(scripts)} scripted responses to {args.out}\n")
    return 0


def _cmd_config_show(args, config, stdout) -> int:
    stdout.write(_dump_sorted(config.model_dump()))
    return 0


def _cmd_config_manifest(args, config, stdout) -> int:
    stdout.write(_dump_sorted(trainer_manifest(config)))
    return 0


def _cmd_refine(args, config, stdout) -> int:
    kb = _load_kb_for(args, config)
    corpus = load_corpus(_existing_file(args.corpus, "--corpus"), kb,
                         provenance="external")
    gateway = _make_gateway(args, config)
    refined, report = refinery.refine_corpus(
        corpus, kb, gateway,
        policy=args.policy,
        max_workers=args.workers,
        check_gold=args.check_gold,
    )
    refinery.save_refined(args.out, refined)
    if args.skip_report:
        refinery.save_skip_report(args.skip_report, report)
    stdout.write(
        f"refined {report['refined']}/{report['total']}, "
        f"skipped {report['skipped']}\n"
    )
    return 0


def _cmd_build_trajectories(args, config, stdout) -> int:
    kb = _load_kb_for(args, config)
    corpus = load_corpus(_existing_file(args.corpus, "--corpus"), kb,
                         provenance="fixture")
    gateway = _make_gateway(args, config)
    examples, report = trajectory.build_sft_corpus(
        corpus, kb, gateway, max_workers=args.workers
    )
    trajectory.save_sft(args.out, examples)
    if args.rejects:
        trajectory.save_rejection_report(args.rejects, report)
    stdout.write(f"kept {report['kept']}/{report['total']}, "
                 f"rejected {report['rejected']}\n")
    return 0


def _score_requests(args) -> list[dict[str, Any]]:
    sources = [s for s in (args.request, args.batch, args.trajectories)
               if s is not None]
    if len(sources) != 1:
        raise UsageError("give exactly one of --request, --batch, --trajectories")
    if args.request is not None:
        doc = json.loads(_existing_file(args.request, "--request").read_text(
            encoding="utf-8"))
        return [doc]
    if args.batch is not None:
        path = _existing_file(args.batch, "--batch")
        return [obj for _, obj in wire.iter_jsonl(path)]
    # Compose requests from a trajectory file plus a separate gold label file.
    gold_path = _existing_file(args.gold, "gold label file (--gold)")
    gold = json.loads(gold_path.read_text(encoding="utf-8"))
    traj_path = _existing_file(args.trajectories, "--trajectories")
    trajectories = [obj for _, obj in wire.iter_jsonl(traj_path)]
    if args.weights is None and args.epoch is None:
        raise UsageError("give --weights or --epoch with --trajectories")
    extra: dict[str, Any] = {}
    if args.weights is not None:
        try:
            parts = [float(x) for x in args.weights.split(",")]
        except ValueError:
            raise UsageError(f"bad --weights {args.weights!r}") from None
        extra["weights"] = parts
    else:
        extra["epoch"] = args.epoch
    if args.group:
        return [{"gold": gold, "trajectories": trajectories, **extra}]
    return [{"gold": gold, "trajectory": t, **extra} for t in trajectories]


def _cmd_score(args, config, stdout) -> int:
    requests = _score_requests(args)
    lines = []
    for doc in requests:
        response = service.handle_request(doc, config)
        lines.append(wire.dumps_line(response))
    _write_text(args.out, "".join(line + "\n" for line in lines), stdout)
    return 0


def _cmd_advantages(args, config, stdout) -> int:
    epsilon = args.epsilon_norm
    if epsilon is None:
        epsilon = config.reward.epsilon_norm
    values = group_advantages(args.rewards, epsilon)
    if args.json:
        stdout.write(_dump_sorted({
            "rewards": canonical17_list(args.rewards),
            "advantages": canonical17_list(values),
        }))
    else:
        for value in values:
            stdout.write(canonical17(value) + "\n")
    return 0


def _cmd_schedule(args, config, stdout) -> int:
    if args.epochs < 1:
        raise UsageError(f"--epochs must be >= 1, got {args.epochs}")
    table = config.reward.phase_table
    weights = [schedule_weights(table, epoch, args.epochs)
               for epoch in range(args.epochs)]
    if args.json:
        stdout.write(_dump_sorted({
            "epochs": [
                {"epoch": i, "weights": canonical17_list(w.as_tuple())}
                for i, w in enumerate(weights)
            ]
        }))
    else:
        for w in weights:
            a, b, c = w.as_tuple()
            stdout.write(f"({a!r}, {b!r}, {c!r})\n")
    return 0


def _cmd_evaluate(args, config, stdout) -> int:
    kb = _load_kb_for(args, config)
    corpus = load_corpus(_existing_file(args.corpus, "--corpus"), kb,
                         provenance="fixture")
    gateway = _make_gateway(args, config)
    predictions = evaluation.run_constrained_diagnosis(
        corpus, kb, gateway, max_workers=args.workers
    )
    evaluation.save_predictions(args.out, predictions)
    report = evaluation.compute_metrics(predictions, corpus)
    if args.report:
        text = evaluation.emit_report(report, args.format, kb, label=args.label)
        _write_text(args.report, text, stdout)
    stdout.write(
        f"n={report.n} ca={100 * report.ca:.2f} da={100 * report.da:.2f} "
        f"ja={100 * report.ja:.2f}\n"
    )
    return 0


def _cmd_report(args, config, stdout) -> int:
    kb = _load_kb_for(args, config)
    corpus = load_corpus(_existing_file(args.corpus, "--corpus"), kb,
                         provenance="fixture")
    predictions = evaluation.load_predictions(
        _existing_file(args.predictions, "--predictions")
    )
    report = evaluation.compute_metrics(predictions, corpus)
    text = evaluation.emit_report(report, args.format, kb, label=args.label)
    _write_text(args.out, text, stdout)
    return 0


def _cmd_annotations(args, config, stdout) -> int:
    annotations = evaluation.load_annotations(_existing_file(args.csv, "--csv"))
    aggregate = evaluation.aggregate_error_annotations(annotations)
    out: dict[str, Any] = dict(aggregate)
    if args.kappa:
        raters = args.annotators or [None, None]
        out["kappa"] = canonical17(
            evaluation.cohen_kappa(annotations, raters[0], raters[1])
        )
    stdout.write(_dump_sorted(out))
    return 0


def _cmd_serve_rewards(args, config, stdout) -> int:
    config = override_section(config, "service", host=args.host, port=args.port)
    if args.stdin:
        return service.serve_stdin(config)
    return service.run_http(config)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="psydx",
        description="Diagnosis training-data and reward pipeline tools.",
    )
    parser.add_argument("--config", help="JSON config file (defaults used if absent)")
    commands = parser.add_subparsers(dest="command", required=True,
                                     metavar="COMMAND")

    kb_parser = commands.add_parser("kb", help="knowledge base tools")
    kb_sub = kb_parser.add_subparsers(dest="kb_command", required=True)
    kb_validate = kb_sub.add_parser("validate", help="check KB integrity")
    kb_validate.add_argument("path", nargs="?", default=None,
                             help="KB file or directory (default: packaged KB)")
    kb_validate.set_defaults(handler=_cmd_kb_validate, _parser=kb_validate)

    fixture_parser = commands.add_parser("fixture", help="deterministic fixtures")
    fixture_sub = fixture_parser.add_subparsers(dest="fixture_command",
                                                required=True)
    fx_gen = fixture_sub.add_parser("generate", help="generate a seeded corpus")
    fx_gen.add_argument("--seed", type=int, default=0, help="RNG seed")
    fx_gen.add_argument("--per-category", type=int, default=1, dest="per_category",
                        help="records per category")
    fx_gen.add_argument("--out", required=True, help="output corpus JSONL")
    fx_gen.add_argument("--kb", help="KB path override")
    fx_gen.set_defaults(handler=_cmd_fixture_generate, _parser=fx_gen)
    fx_scripts = fixture_sub.add_parser(
        "scripts", help="emit a gold-consistent mock response table"
    )
    fx_scripts.add_argument("--corpus", required=True, help="corpus JSONL")
    fx_scripts.add_argument("--out", help="output JSON (stdout if omitted)")
    fx_scripts.add_argument("--kb", help="KB path override")
    fx_scripts.set_defaults(handler=_cmd_fixture_scripts, _parser=fx_scripts)

    config_parser = commands.add_parser("config", help="inspect configuration")
    config_sub = config_parser.add_subparsers(dest="config_command", required=True)
    config_show = config_sub.add_parser("show", help="print the resolved config")
    config_show.set_defaults(handler=_cmd_config_show, _parser=config_show)
    config_manifest = config_sub.add_parser(
        "manifest", help="print the trainer manifest block"
    )
    config_manifest.set_defaults(handler=_cmd_config_manifest, _parser=config_manifest)

    refine = commands.add_parser("refine", help="three-step record refinement")
    refine.add_argument("--corpus", required=True, help="input corpus JSONL")
    refine.add_argument("--out", required=True, help="refined records JSONL")
    refine.add_argument("--scripts", help="mock script table (JSON); HTTP if omitted")
    refine.add_argument("--skip-report", dest="skip_report",
                        help="skip report JSON path")
    refine.add_argument("--policy", choices=("skip", "fail"), default="skip",
                        help="on per-record failure")
    refine.add_argument("--check-gold", action="store_true", dest="check_gold",
                        help="reject records whose steps disagree with gold labels")
    refine.add_argument("--workers", type=int, default=4, help="worker threads")
    refine.add_argument("--audit", help="gateway audit log JSONL path")
    refine.add_argument("--kb", help="KB path override")
    refine.set_defaults(handler=_cmd_refine, _parser=refine)

    build = commands.add_parser("build-trajectories",
                                help="three-stage reasoning corpus for SFT")
    build.add_argument("--corpus", required=True, help="input corpus JSONL")
    build.add_argument("--out", required=True, help="SFT examples JSONL")
    build.add_argument("--scripts", help="mock script table (JSON); HTTP if omitted")
    build.add_argument("--rejects", help="rejection report JSON path")
    build.add_argument("--workers", type=int, default=4, help="worker threads")
    build.add_argument("--audit", help="gateway audit log JSONL path")
    build.add_argument("--kb", help="KB path override")
    build.set_defaults(handler=_cmd_build_trajectories, _parser=build)

    score = commands.add_parser("score", help="score trajectories against gold")
    score.add_argument("--request", help="single request JSON file")
    score.add_argument("--batch", help="request JSONL file (one per line)")
    score.add_argument("--trajectories", help="trajectory JSONL file")
    score.add_argument("--gold", help="gold label JSON file (with --trajectories)")
    score.add_argument("--weights", help="comma-separated stage weight ratios")
    score.add_argument("--epoch", type=int, help="resolve weights from the schedule")
    score.add_argument("--group", action="store_true",
                       help="score --trajectories as one GRPO group")
    score.add_argument("--out", help="response JSONL (stdout if omitted)")
    score.set_defaults(handler=_cmd_score, _parser=score)

    advantages = commands.add_parser("advantages",
                                     help="group-normalized advantages")
    advantages.add_argument("rewards", type=float, nargs="+",
                            help="composite rewards of one group")
    advantages.add_argument("--epsilon-norm", type=float, dest="epsilon_norm",
                            help="normalization epsilon (default from config)")
    advantages.add_argument("--json", action="store_true",
                            help="emit a JSON object instead of lines")
    advantages.set_defaults(handler=_cmd_advantages, _parser=advantages)

    schedule = commands.add_parser("schedule",
                                   help="stage weights for each training epoch")
    schedule.add_argument("--epochs", type=int, required=True,
                          help="total training epochs")
    schedule.add_argument("--json", action="store_true",
                          help="emit a JSON object instead of lines")
    schedule.set_defaults(handler=_cmd_schedule, _parser=schedule)

    evaluate = commands.add_parser("evaluate",
                                   help="constrained diagnosis over a corpus")
    evaluate.add_argument("--corpus", required=True, help="corpus JSONL")
    evaluate.add_argument("--out", required=True, help="predictions JSONL")
    evaluate.add_argument("--scripts", help="mock script table (JSON); HTTP if omitted")
    evaluate.add_argument("--report", help="also write a metrics report here")
    evaluate.add_argument("--format", choices=("json", "markdown"), default="json",
                          help="report format")
    evaluate.add_argument("--label", default="model", help="report row label")
    evaluate.add_argument("--workers", type=int, default=4, help="worker threads")
    evaluate.add_argument("--audit", help="gateway audit log JSONL path")
    evaluate.add_argument("--kb", help="KB path override")
    evaluate.set_defaults(handler=_cmd_evaluate, _parser=evaluate)

    report = commands.add_parser("report", help="metrics report from predictions")
    report.add_argument("--predictions", required=True, help="predictions JSONL")
    report.add_argument("--corpus", required=True, help="corpus JSONL")
    report.add_argument("--format", choices=("json", "markdown"), default="json",
                        help="report format")
    report.add_argument("--label", default="model", help="report row label")
    report.add_argument("--out", help="output path (stdout if omitted)")
    report.add_argument("--kb", help="KB path override")
    report.set_defaults(handler=_cmd_report, _parser=report)

    annotations = commands.add_parser("annotations",
                                      help="aggregate error annotations")
    annotations.add_argument("--csv", required=True, help="annotations CSV")
    annotations.add_argument("--kappa", action="store_true",
                             help="also compute two-rater agreement")
    annotations.add_argument("--annotators", nargs=2, metavar=("A", "B"),
                             help="explicit annotator ids for --kappa")
    annotations.set_defaults(handler=_cmd_annotations, _parser=annotations)

    serve = commands.add_parser("serve-rewards",
                                help="reward scoring service (HTTP or stdin JSONL)")
    serve.add_argument("--stdin", action="store_true",
                       help="serve JSONL on stdin/stdout instead of HTTP")
    serve.add_argument("--host", help="bind host (overrides config)")
    serve.add_argument("--port", type=int, help="bind port (overrides config)")
    serve.set_defaults(handler=_cmd_serve_rewards, _parser=serve)

    return parser


def main(argv: Sequence[str] | None = None,
         stdout: TextIO | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    stdout = stdout if stdout is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.config is not None and not Path(args.config).is_file():
            raise UsageError(f"config file not found: {args.config}")
        config = load_config(args.config)
        return args.handler(args, config, stdout)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        getattr(args, "_parser", parser).print_usage(sys.stderr)
        return 2
    except (PsydxError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
