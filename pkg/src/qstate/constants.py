from utils.config_loader import config

DENSE_STATE_BUDGET = int(config.get("budgets.dense_state", 1 << 22))

QUDIT_NORM_TOLERANCE = 1e-10
DENSE_NORM_TOLERANCE = 1e-9
