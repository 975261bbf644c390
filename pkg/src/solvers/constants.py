from utils.config_loader import config

ML_CODEWORD_BUDGET = int(config.get("budgets.ml_codewords", 1 << 22))
ML_CHUNK_SIZE = int(config.get("budgets.chunk_size", 1 << 16))
SWEEP_CODES = int(config.get("experiment.sweep_codes", 4))
