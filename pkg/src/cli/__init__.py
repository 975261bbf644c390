from .commands import (
    COMMANDS,
    cmd_pgm,
    cmd_prange,
    cmd_reduce,
    cmd_solve_qdp,
    cmd_sweep,
    cmd_thresholds,
    cmd_verify,
    run_command,
)
from .exceptions import CliError, UsageError, VerificationFailed
from .output import OutputSink, render_csv, render_json, render_jsonl
from .parser import build_parser, main
from .schemas import RunConfig, RunConfigSchema, config_hash, load_run_config, save_run_config
from .types import CheckResult
from .verify import CHECKS, run_checks

__all__ = [
    # Types
    'RunConfig',
    'RunConfigSchema',
    'CheckResult',
    'OutputSink',
    # Functions
    'main',
    'build_parser',
    'load_run_config',
    'save_run_config',
    'config_hash',
    'run_command',
    'run_checks',
    'cmd_thresholds',
    'cmd_solve_qdp',
    'cmd_reduce',
    'cmd_pgm',
    'cmd_prange',
    'cmd_sweep',
    'cmd_verify',
    'render_csv',
    'render_jsonl',
    'render_json',
    'COMMANDS',
    'CHECKS',
    # Errors
    'CliError',
    'UsageError',
    'VerificationFailed',
]
