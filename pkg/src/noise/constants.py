from utils.config_loader import config

BISECTION_TOLERANCE = float(config.get("numerics.bisection_tolerance", 1e-12))
BISECTION_MAX_ITERATIONS = int(config.get("numerics.bisection_max_iterations", 200))
DOMAIN_SLACK = float(config.get("numerics.domain_slack", 1e-12))

# symbol value reported by erasure channels
ERASURE = -1
