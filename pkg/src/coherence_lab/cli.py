"""Batch command-line front end.

Subcommands: ``measure`` (evaluate a measure on a state file),
``check-channel`` (incoherence/CPO verdicts plus canonical form),
``verify`` (randomized criterion suites), ``hunt`` (skew counterexample and
randomized search), ``mcs`` (membership test and state preparation channel).

Exit codes: 0 success/PASS, 1 violations found, 2 usage error, 3 I/O or
format error.  Output is JSON (reports also serialize to CSV via
``--format csv``); identical argv and seed give byte-identical stdout.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import channels as ch_mod
from . import harness as h_mod
from . import measures as m_mod
from . import mcs as mcs_mod
from . import states as st_mod
from .errors import BadDimError, BadParamsError, CoherenceLabError

CSV_COLUMNS = ("criterion", "measure", "dim", "trials", "violations", "worst_violation", "seed")


class _InputError(Exception):
    """File missing or payload malformed; maps to exit code 3."""


def _default_seed() -> int:
    return int(os.environ.get("COHERENCE_LAB_SEED", "0"))


def _load_json(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise _InputError(f"cannot read {path}: {exc}") from exc


def _load_state(path: str):
    try:
        return st_mod.state_from_dict(_load_json(path))
    except (ValueError, CoherenceLabError) as exc:
        raise _InputError(f"bad state file {path}: {exc}") from exc


def _load_density(path: str) -> st_mod.DensityMatrix:
    state = _load_state(path)
    if isinstance(state, st_mod.PureState):
        return st_mod.from_pure(state)
    return state


def _load_channel(path: str) -> ch_mod.KrausChannel:
    try:
        return ch_mod.channel_from_dict(_load_json(path))
    except (ValueError, CoherenceLabError) as exc:
        raise _InputError(f"bad channel file {path}: {exc}") from exc


def _dump(payload, out_path):
    text = json.dumps(payload, indent=2, sort_keys=True)
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")


def _write_text(text: str, out_path):
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def emit_report(report: h_mod.CriterionReport, format: str = "json") -> str:
    """Serialize one report; CSV uses the fixed column order and no witness."""
    if format == "json":
        return json.dumps(report.to_dict(), indent=2, sort_keys=True)
    if format == "csv":
        return ",".join(CSV_COLUMNS) + "\n" + _csv_row(report) + "\n"
    raise BadParamsError(f"unknown format {format!r}")


def _csv_row(report: h_mod.CriterionReport) -> str:
    d = report.to_dict()
    return ",".join(repr(d[c]) if isinstance(d[c], float) else str(d[c]) for c in CSV_COLUMNS)


def emit_reports(reports, format: str = "json") -> str:
    if format == "json":
        return json.dumps([r.to_dict() for r in reports], indent=2, sort_keys=True)
    if format == "csv":
        return "\n".join([",".join(CSV_COLUMNS)] + [_csv_row(r) for r in reports]) + "\n"
    raise BadParamsError(f"unknown format {format!r}")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coherence-lab",
        description="Coherence measures, incoherent channels, and criteria verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_measure = sub.add_parser("measure", help="evaluate a measure on a state file")
    p_measure.add_argument("--state", required=True, help="state JSON file")
    p_measure.add_argument("--measure", required=True, choices=m_mod.MEASURE_NAMES)
    p_measure.add_argument("--seed", type=int, default=None, help="optimizer seed (int_rand)")
    p_measure.add_argument("--out", default=None)

    p_channel = sub.add_parser("check-channel", help="incoherence and CPO verdicts")
    p_channel.add_argument("--channel", required=True, help="channel JSON file")
    p_channel.add_argument("--tol", type=float, default=ch_mod.INCOHERENT_ENTRY_TOL)
    p_channel.add_argument("--out", default=None)

    p_verify = sub.add_parser("verify", help="run randomized criterion suites")
    p_verify.add_argument("--measure", default=None, choices=m_mod.MEASURE_NAMES)
    p_verify.add_argument(
        "--criterion",
        required=True,
        choices=h_mod.CRITERIA + ("ALL",),
    )
    p_verify.add_argument("--dim", type=int, default=3)
    p_verify.add_argument("--trials", type=int, default=None)
    p_verify.add_argument("--seed", type=int, default=None)
    p_verify.add_argument("--tol", type=float, default=None)
    p_verify.add_argument("--jobs", type=int, default=1)
    p_verify.add_argument("--out", default=None)
    p_verify.add_argument("--format", choices=("json", "csv"), default="json")

    p_hunt = sub.add_parser("hunt", help="skew witness and randomized counterexample search")
    p_hunt.add_argument("--dim", type=int, default=3)
    p_hunt.add_argument("--trials", type=int, default=100)
    p_hunt.add_argument("--seed", type=int, default=None)
    p_hunt.add_argument("--tol", type=float, default=1e-8)
    p_hunt.add_argument("--jobs", type=int, default=1)
    p_hunt.add_argument("--out", default=None)

    p_mcs = sub.add_parser("mcs", help="maximal-coherence membership and preparation")
    p_mcs.add_argument("--state", default=None, help="state JSON file to test")
    p_mcs.add_argument("--tol", type=float, default=1e-8)
    p_mcs.add_argument(
        "--transform-to",
        default=None,
        metavar="PATH",
        help="emit the incoherent channel preparing this target from the uniform superposition",
    )
    p_mcs.add_argument("--out", default=None)
    return parser


_MEASURE_CRITERIA = ("C1", "C2", "C3", "C4", "C5", "LEMMA1")


def _cmd_measure(args) -> int:
    state = _load_state(args.state)
    rho = st_mod.from_pure(state) if isinstance(state, st_mod.PureState) else state
    seed = args.seed if args.seed is not None else _default_seed()
    opt = m_mod.OptimizerConfig(seed=seed)
    measure = m_mod.measure_by_name(args.measure, dim=rho.dim, opt=opt)
    value = measure.evaluate(rho)
    _dump({"measure": args.measure, "dim": rho.dim, "value": value}, args.out)
    return 0


def _cmd_check_channel(args) -> int:
    channel = _load_channel(args.channel)
    incoherent = ch_mod.is_incoherent_channel(channel, args.tol)
    cpo = ch_mod.is_cpo(channel) if incoherent else False
    canonical = None
    if incoherent:
        form = ch_mod.canonical_form(channel, args.tol)
        canonical = {
            "weights": form.weights.tolist(),
            "column_maps": form.column_maps.tolist(),
            "moduli": form.moduli.tolist(),
            "phases": form.phases.tolist(),
        }
    _dump(
        {
            "dim": channel.dim,
            "n_kraus": channel.n_kraus,
            "incoherent": incoherent,
            "cpo": cpo,
            "canonical_form": canonical,
        },
        args.out,
    )
    return 0


def _run_one_criterion(criterion, measure, cfg, jobs, seed):
    if criterion == "LEMMA2":
        return h_mod.check_lemma2(cfg, jobs)
    if criterion == "THEOREM3":
        return h_mod.check_theorem3(cfg, jobs)
    if criterion == "C5":
        opt = m_mod.OptimizerConfig(restarts=cfg.n_trials, seed=seed)
        return h_mod.check_c5(measure, cfg.dim, opt)
    checker = {
        "C1": h_mod.check_c1,
        "C2": h_mod.check_c2,
        "C3": h_mod.check_c3,
        "C4": h_mod.check_c4,
        "LEMMA1": h_mod.check_lemma1,
    }[criterion]
    return checker(measure, cfg, jobs)


def _cmd_verify(args) -> int:
    criteria = [args.criterion]
    if args.criterion == "ALL":
        criteria = list(_MEASURE_CRITERIA) + ["LEMMA2", "THEOREM3"]
    needs_measure = any(c in _MEASURE_CRITERIA for c in criteria)
    if needs_measure and args.measure is None:
        raise BadParamsError(f"--measure is required for criteria {_MEASURE_CRITERIA}")

    seed = args.seed if args.seed is not None else _default_seed()
    tol = args.tol if args.tol is not None else h_mod.default_tol(args.measure or "l1")
    reports = []
    for criterion in criteria:
        trials = args.trials
        if trials is None:
            trials = 64 if criterion == "C5" else 1000
        cfg = h_mod.TrialConfig(dim=args.dim, n_trials=trials, seed=seed, tol=tol)
        reports.append(_run_one_criterion(criterion, args.measure, cfg, args.jobs, seed))

    text = emit_reports(reports, args.format) if len(reports) > 1 else (
        emit_report(reports[0], args.format)
    )
    if args.format == "json":
        text += "\n"
    _write_text(text, args.out)
    return 1 if any(r.violations > 0 for r in reports) else 0


def _cmd_hunt(args) -> int:
    seed = args.seed if args.seed is not None else _default_seed()
    payload = {}
    found = False
    try:
        witness_report = h_mod.skew_witness_report(args.dim, seed)
        payload["skew_witness"] = witness_report.to_dict()
        found = True
    except BadDimError:
        payload["skew_witness"] = None
    cfg = h_mod.TrialConfig(dim=args.dim, n_trials=args.trials, seed=seed, tol=args.tol)
    c2 = h_mod.check_c2("skew", cfg, args.jobs)
    lemma1 = h_mod.check_lemma1("skew", cfg, args.jobs)
    payload["c2_search"] = c2.to_dict()
    payload["lemma1_search"] = lemma1.to_dict()
    found = found or c2.violations > 0 or lemma1.violations > 0
    _dump(payload, args.out)
    return 1 if found else 0


def _cmd_mcs(args) -> int:
    if args.state is None and args.transform_to is None:
        raise BadParamsError("mcs needs --state and/or --transform-to")
    payload = {}
    if args.state is not None:
        rho = _load_density(args.state)
        payload["is_mcs"] = mcs_mod.is_mcs(rho, args.tol)
        payload["deviation"] = mcs_mod.mcs_deviation(rho)
        payload["dim"] = rho.dim
    if args.transform_to is not None:
        target = _load_state(args.transform_to)
        if isinstance(target, st_mod.PureState):
            channel = mcs_mod.transform_mcs_to(target)
        else:
            channel = mcs_mod.transform_mcs_to_mixed(target)
        payload["transform_channel"] = channel.to_dict()
    _dump(payload, args.out)
    return 0


def run(argv) -> int:
    """Dispatch one invocation; returns the process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse reports usage errors itself
        return int(exc.code or 0)
    handlers = {
        "measure": _cmd_measure,
        "check-channel": _cmd_check_channel,
        "verify": _cmd_verify,
        "hunt": _cmd_hunt,
        "mcs": _cmd_mcs,
    }
    try:
        return handlers[args.command](args)
    except _InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except BadParamsError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except CoherenceLabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
