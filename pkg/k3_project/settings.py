"""
Settings for the k3 lattice toolkit.

Values are read once at import time. A `.env` file next to the working
directory is honoured through python-dotenv; nothing is required.
"""

import os
from dotenv import load_dotenv
load_dotenv()

BASE_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


def _int_setting(name, default):
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return default
    try:
        return int(raw)
    except ValueError as exc:
        raise ValueError(f"{name} must be an integer, got {raw!r}") from exc


# Only management commands run; there are no models, views or database.
SECRET_KEY = os.getenv('K3_SECRET_KEY', 'k3-lattice-toolkit-local')

DEBUG = False

INSTALLED_APPS = [
    'cli.apps.CliConfig',
]

DATABASES = {}

USE_TZ = True


LOG_LEVEL = os.getenv('K3_LOG_LEVEL', 'WARNING').upper()

# Seed and sample sizes for the reflection-generator searches
SEED = _int_setting('K3_SEED', 20240611)
GENERATOR_COUNT = _int_setting('K3_GENERATOR_COUNT', 48)
GENERATOR_BATCH = _int_setting('K3_GENERATOR_BATCH', 12)
ROOT_BOUND = _int_setting('K3_ROOT_BOUND', 3)

# Largest |d*e| for which cyclic extension orders are cross-checked by search
SPLIT_SEARCH_LIMIT = _int_setting('K3_SPLIT_SEARCH_LIMIT', 10_000)

PACKAGE_LOGGERS = ('intlat', 'mukai', 'monodromy', 'moduli', 'chern', 'extorder', 'cli')


LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '%(asctime)s %(levelname)s %(name)s: %(message)s',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'verbose',
        },
    },
    'loggers': {
        name: {
            'handlers': ['console'],
            'level': LOG_LEVEL,
            'propagate': False,
        }
        for name in PACKAGE_LOGGERS
    },
}
