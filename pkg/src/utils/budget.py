"""Enumeration budgets shared by every package that materializes exponential objects."""

from typing import Optional

from utils.logging_config import get_logger, log_event

logger = get_logger(__name__)


class BudgetExceeded(Exception):
    """An enumeration or dense-state size is over its configured budget."""

    def __init__(self, name: str, required: int, limit: int):
        super().__init__(f"{name} needs {required} elements, budget is {limit}")
        self.name = name
        self.required = required
        self.limit = limit


def check_budget(name: str, required: int, limit: Optional[int]) -> None:
    """Raise BudgetExceeded when `required` is over `limit` (None disables the check)."""
    if limit is not None and required > limit:
        log_event(
            logger,
            "warning",
            f"Budget exceeded for {name}",
            event_type="budget_exceeded",
            extra={"budget": name, "required": int(required), "limit": int(limit)},
        )
        raise BudgetExceeded(name, int(required), int(limit))
