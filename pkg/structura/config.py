import os
from canonicalwebteam.flask_base.env import load_plain_env_variables


class ConfigurationError(Exception):
    pass


# Load the prefixed FLASK_* env vars into env vars without the prefix. The
# bounds below are read at import time, before any FlaskBase app exists
load_plain_env_variables()


def _int_setting(name, default):
    value = os.getenv(name, str(default)).strip()
    try:
        parsed = int(value)
    except ValueError:
        raise ConfigurationError(f"{name} must be an integer, got {value!r}")
    if parsed < 0:
        raise ConfigurationError(f"{name} must be non-negative")
    return parsed


SECRET_KEY = os.getenv("SECRET_KEY")
ENVIRONMENT = os.getenv("ENVIRONMENT", "devel")
IS_DEVELOPMENT = ENVIRONMENT == "devel"
COMMIT_ID = os.getenv("COMMIT_ID", "commit_id")
SENTRY_DSN = os.getenv("SENTRY_DSN", "").strip()
SENTRY_CONFIG = {"release": COMMIT_ID, "environment": ENVIRONMENT}

# Optional YAML file whose `bounds:` mapping overrides the defaults below
CONFIG_FILE = os.getenv("STRUCTURA_CONFIG", "").strip()

# Enumeration bounds. Exceeding them raises BoundExceeded
MAX_CARRIER = _int_setting("STRUCTURA_MAX_CARRIER", 4)
MAX_ARITY = _int_setting("STRUCTURA_MAX_ARITY", 2)
MAX_IDENTITY_VARIABLES = _int_setting("STRUCTURA_MAX_IDENTITY_VARIABLES", 3)

# Objects up to this many points are used when adjunctions check
# themselves at construction time
SAMPLE_POINTS = _int_setting("STRUCTURA_SAMPLE_POINTS", 2)

# Bounded semantic oracle for theories without a shipped normal form
FALLBACK_MODEL_SIZE = _int_setting("STRUCTURA_FALLBACK_MODEL_SIZE", 3)
FALLBACK_MODEL_LIMIT = _int_setting("STRUCTURA_FALLBACK_MODEL_LIMIT", 400)
FALLBACK_SEARCH_SIZE = _int_setting("STRUCTURA_FALLBACK_SEARCH_SIZE", 5)

# Soundness spot check run when a Lawvere theory is built
ORACLE_CHECK_MODEL_SIZE = _int_setting("STRUCTURA_ORACLE_CHECK_MODEL_SIZE", 2)
ORACLE_CHECK_SAMPLES = _int_setting("STRUCTURA_ORACLE_CHECK_SAMPLES", 40)
SEED = _int_setting("STRUCTURA_SEED", 0)

APP_NAME = "structura"
