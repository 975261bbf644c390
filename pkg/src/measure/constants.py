from utils.config_loader import config

NULL_SPACE_CUTOFF = float(config.get("numerics.null_space_cutoff", 1e-13))
PGM_ORACLE_BUDGET = int(config.get("budgets.pgm_oracle", 1 << 12))
