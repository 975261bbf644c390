from utils.config_loader import config

COSET_ENUMERATION_BUDGET = int(config.get("budgets.coset_enumeration", 1 << 26))
MESSAGE_ENUMERATION_BUDGET = int(config.get("budgets.message_enumeration", 1 << 20))
ENUMERATION_CHUNK_SIZE = int(config.get("budgets.chunk_size", 1 << 16))

# blocks of (syndromes x dual codewords x n) kept below this many cells
SPECTRA_BLOCK_CELLS = 1 << 24

PRANGE_ROUND_FACTOR = int(config.get("prange.round_factor", 10))
