from utils.budget import BudgetExceeded, check_budget
from utils.config_loader import config
from utils.logging_config import get_logger, log_event, setup_logging
from utils.rng import child_seed_value, make_rng, spawn_rngs, spawn_seeds

__all__ = [
    # Configuration
    "config",
    # Logging
    "get_logger",
    "log_event",
    "setup_logging",
    # Budgets
    "BudgetExceeded",
    "check_budget",
    # Random streams
    "make_rng",
    "spawn_seeds",
    "spawn_rngs",
    "child_seed_value",
]
