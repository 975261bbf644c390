from utils.config_loader import config

MAX_FIELD_ORDER = int(config.get("field.max_order", 1 << 16))
MAX_CHARACTER_MATRIX_ORDER = int(config.get("field.character_matrix_max_order", 1024))
