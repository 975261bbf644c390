"""Subcommand bodies. Each takes a validated RunConfig and an OutputSink."""

from collections import Counter
from typing import Callable, Dict, List

import numpy as np

from codes import random_code, repetition_code
from gf import parse_field
from measure import pgm_spectrum
from noise import NoiseProfile, thresholds
from regev import (
    DegenerateDual,
    ReductionVariant,
    compare_prange,
    pgm_counterexample_run,
    pgm_final_distribution,
    pgm_tweaked_distribution,
    reduce_pgm_path,
    reduce_usd_path,
    sample_scp,
)
from solvers import (
    TooFewKept,
    sample_instance,
    sample_phase_instance,
    solve_classical_ml,
    solve_partial_usd,
    solve_pgm_exact,
    solve_usd,
    run_trials,
    tractability_sweep,
)
from utils.budget import check_budget
from utils.logging_config import get_logger, log_event
from utils.rng import child_seed_value, make_rng, spawn_seeds

from .exceptions import UsageError, VerificationFailed
from .output import OutputSink
from .schemas import RunConfig
from .verify import run_checks

logger = get_logger(__name__)

DEFAULT_RATE_GRID = [round(0.01 * i, 2) for i in range(1, 100)]
DEFAULT_OMEGA_GRID = [round(0.02 * i, 2) for i in range(1, 18)]
MONOTONE_SLACK = 1e-9


def _trial_seeds(run_config: RunConfig) -> List[int]:
    return [child_seed_value(child) for child in spawn_seeds(run_config.seed, run_config.trials)]


def cmd_thresholds(run_config: RunConfig, sink: OutputSink) -> dict:
    """Threshold table over a rate grid, checked for ordering before it is written."""
    q = parse_field(run_config.field).q
    rates = sorted(run_config.rates or DEFAULT_RATE_GRID)
    if len(rates) < 2:
        raise UsageError("the rate grid needs at least 2 points")
    rows = [thresholds(q, rate) for rate in rates]

    problems = []
    for row in rows:
        if row.easy_bound > row.tractable_bound + MONOTONE_SLACK:
            problems.append(f"easy > tractable at R={row.rate}")
    for before, after in zip(rows, rows[1:]):
        for name in ("easy_bound", "tractable_bound", "classical_bound"):
            if getattr(after, name) > getattr(before, name) + MONOTONE_SLACK:
                problems.append(f"{name} increases between R={before.rate} and R={after.rate}")
    if problems:
        raise VerificationFailed("threshold ordering checks failed", problems)

    header = ["q", "R", "easy", "classical", "tractable"]
    sink.table("thresholds", header, ([row.as_row()[key] for key in header] for row in rows))
    return {"points": len(rows)}


def _qdp_solver(run_config: RunConfig) -> Callable:
    if run_config.solver == "usd":
        return lambda instance, rng: solve_usd(instance, rng)
    if run_config.solver == "partial_usd":
        run_config.require("omega_prime", "keep_fraction")
        return lambda instance, rng: solve_partial_usd(
            instance, run_config.omega_prime, run_config.keep_fraction, rng=rng)
    if run_config.solver == "pgm":
        return lambda instance, rng: solve_pgm_exact(
            instance, spectrum=pgm_spectrum(instance.code, instance.profile, budget=run_config.budget), rng=rng)
    return lambda instance, rng: solve_classical_ml(instance, rng)


def cmd_solve_qdp(run_config: RunConfig, sink: OutputSink) -> dict:
    """Sample instances, run one solver per trial, write one row per trial."""
    run_config.require("n", "k", "omega")
    field = parse_field(run_config.field)
    if run_config.solver == "partial_usd" and field.q != 2:
        raise UsageError("partial USD runs on binary codes only")
    if run_config.theta is not None:
        if field.q != 2:
            raise UsageError("--theta selects the binary phase profile and needs --field 2")
        if run_config.solver not in ("usd", "ml"):
            raise UsageError(f"solver {run_config.solver} does not support phased noise")
    if run_config.solver == "ml" and run_config.budget is not None:
        check_budget("ML codewords", field.q ** run_config.k, run_config.budget)
    solver = _qdp_solver(run_config)

    def trial(index: int, rng: np.random.Generator) -> dict:
        if run_config.theta is None:
            instance = sample_instance(field, run_config.n, run_config.k, run_config.omega, rng)
        else:
            instance = sample_phase_instance(run_config.n, run_config.k, run_config.omega, run_config.theta, rng)
        try:
            report = solver(instance, rng)
        except TooFewKept as err:
            return {"trial": index, "solver": run_config.solver, "outcome": "abstain", "success": 0,
                    "revealed": err.kept, "rank": None}
        return {"trial": index, "solver": run_config.solver, "outcome": report.outcome.value,
                "success": int(report.recovered), "revealed": report.revealed, "rank": report.rank}

    rows = run_trials(trial, run_config.trials, seed=run_config.seed, workers=run_config.workers)
    header = ["trial", "solver", "outcome", "success", "revealed", "rank"]
    sink.table("results", header, ([row[key] for key in header] for row in rows))
    outcomes = Counter(row["outcome"] for row in rows)
    return {"trials": len(rows), "successes": sum(row["success"] for row in rows), "outcomes": dict(outcomes)}


def _reduction(run_config: RunConfig) -> Callable:
    variant = ReductionVariant(run_config.variant)
    if variant is ReductionVariant.USD_PATH:
        return lambda scp, rng: reduce_usd_path(scp, rng, epsilon=run_config.epsilon)
    if variant is ReductionVariant.PGM_COUNTEREXAMPLE:
        return lambda scp, rng: pgm_counterexample_run(scp.code, scp.profile, rng)
    return lambda scp, rng: reduce_pgm_path(scp, rng, variant)


def cmd_reduce(run_config: RunConfig, sink: OutputSink) -> dict:
    """Short-codeword reductions on random target codes: JSON lines per trial plus a weight histogram."""
    run_config.require("n", "k", "omega_prime")
    field = parse_field(run_config.field)
    reduction = _reduction(run_config)

    def trial(index: int, rng: np.random.Generator) -> dict:
        scp = sample_scp(field, run_config.n, run_config.k, run_config.omega_prime, rng)
        report = reduction(scp, rng)
        record = {"trial": index, **report.to_dict()}
        if report.weight is not None:
            record["relative_weight"] = report.weight / scp.n
        return record

    records = run_trials(trial, run_config.trials, seed=run_config.seed, workers=run_config.workers)
    sink.jsonl("reduce_trials.jsonl", records)
    histogram = Counter(record["weight"] for record in records if record.get("outcome") == "codeword")
    sink.csv("weights.csv", ["weight", "count"], sorted(histogram.items()))
    successes = sum(1 for record in records if record.get("success"))
    weights = [weight for weight, count in histogram.items() for _ in range(count)]
    return {
        "trials": len(records),
        "successes": successes,
        "mean_relative_weight": float(np.mean(weights)) / run_config.n if weights else None,
    }


def cmd_pgm(run_config: RunConfig, sink: OutputSink) -> dict:
    """PGM spectrum of one code plus the weight distributions of both PGM paths."""
    run_config.require("n", "omega")
    field = parse_field(run_config.field)
    rng = make_rng(run_config.seed)
    if run_config.code == "repetition":
        code = repetition_code(field, run_config.n)
    else:
        run_config.require("k")
        code = random_code(field, run_config.n, run_config.k, rng)
    profile = NoiseProfile(field.q, run_config.omega)
    spectrum = pgm_spectrum(code, profile, budget=run_config.budget)

    plain = pgm_final_distribution(code, profile)
    try:
        tweaked = pgm_tweaked_distribution(code, profile)
    except DegenerateDual:
        tweaked = None
    counterexample = pgm_counterexample_run(code, profile)

    document: Dict[str, object] = {
        **spectrum.to_dict(),
        "code": run_config.code,
        "regime": thresholds(field.q, code.rate).regime(profile.omega),
        "plain_branch_probability": plain.branch_probability,
        "tweaked_branch_probability": None if tweaked is None else tweaked.branch_probability,
        "counterexample": counterexample.to_dict(),
    }
    sink.json("pgm_spectrum.json", document)
    rows = []
    for t in range(code.n + 1):
        rows.append([t, float(plain.p[t]), None if tweaked is None else float(tweaked.p[t])])
    sink.csv("pgm_weights.csv", ["t", "p_plain", "p_tweaked"], rows)
    log_event(
        logger, "info", f"P_PGM = {spectrum.p_pgm:.6f}", event_type="cli", subcommand="pgm",
        extra={"n": code.n, "k": code.k, "omega": profile.omega},
    )
    return {"p_pgm": spectrum.p_pgm}


def cmd_prange(run_config: RunConfig, sink: OutputSink) -> dict:
    """Prange rounds against USD-path outputs on one random target code."""
    run_config.require("n", "k", "omega_prime")
    field = parse_field(run_config.field)
    rng = make_rng(run_config.seed)
    scp = sample_scp(field, run_config.n, run_config.k, run_config.omega_prime, rng)
    comparison = compare_prange(scp, rng, run_config.trials)
    sink.table("prange", ["weight", "prange", "usd_path"], comparison.rows())
    return {
        "target_weight": comparison.target_weight,
        "prange_hits": comparison.prange_hits,
        "prange_trials": comparison.prange_trials,
        "usd_trials": comparison.usd_trials,
        "degenerate_dual": comparison.degenerate_dual,
    }


def cmd_sweep(run_config: RunConfig, sink: OutputSink) -> dict:
    """Empirical PGM success against P_PGM along an omega grid."""
    run_config.require("n", "k")
    field = parse_field(run_config.field)
    grid = run_config.omega_grid or DEFAULT_OMEGA_GRID
    points = tractability_sweep(field, run_config.n, run_config.k, grid, run_config.trials,
                                make_rng(run_config.seed), workers=run_config.workers)
    header = ["omega", "trials", "successes", "p_pgm", "easy_bound", "tractable_bound"]
    sink.table("sweep", header, ([point.as_row()[key] for key in header] for point in points))
    return {"points": len(points)}


def cmd_verify(run_config: RunConfig, sink: OutputSink) -> dict:
    """Oracle battery; raises VerificationFailed after the table is written when a check fails."""
    results = run_checks(run_config.seed)
    sink.table("verify", ["check", "status", "detail"], (result.as_row() for result in results))
    failures = [result.name for result in results if not result.passed]
    if failures:
        sink.manifest(summary={"failed": failures})
        raise VerificationFailed(f"{len(failures)} of {len(results)} checks failed", failures)
    return {"checks": len(results), "failed": []}


COMMANDS: Dict[str, Callable[[RunConfig, OutputSink], dict]] = {
    "thresholds": cmd_thresholds,
    "solve-qdp": cmd_solve_qdp,
    "reduce": cmd_reduce,
    "pgm": cmd_pgm,
    "prange": cmd_prange,
    "sweep": cmd_sweep,
    "verify": cmd_verify,
}

TRIAL_COMMANDS = ("solve-qdp", "reduce")


def run_command(run_config: RunConfig, sink: OutputSink) -> dict:
    summary = COMMANDS[run_config.subcommand](run_config, sink)
    seeds = {"trials": _trial_seeds(run_config)} if run_config.subcommand in TRIAL_COMMANDS else {}
    sink.manifest(seeds=seeds, summary=summary)
    return summary
