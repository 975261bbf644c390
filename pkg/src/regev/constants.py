from utils.config_loader import config

DUAL_RESAMPLE_LIMIT = int(config.get("regev.dual_resample_limit", 32))
J_RESAMPLE_LIMIT = int(config.get("regev.j_resample_limit", 64))
EXACT_PATH_MAX_SPACE = 1 << 10
