import os
from pathlib import Path
import environ

env = environ.Env(
    DEBUG=(bool, False)
)

BASE_DIR = Path(__file__).resolve().parent.parent

environ.Env.read_env(os.path.join(BASE_DIR, '.env'))

SECRET_KEY = env('SECRET_KEY', default='concordia-local-only')
DEBUG = env('DEBUG')
ALLOWED_HOSTS = []

INSTALLED_APPS = [
    'django.contrib.contenttypes',

    # Local apps, one per toolkit module
    'apps.free_words',
    'apps.fox_calculus',
    'apps.pair_sets',
    'apps.special_pairs',
    'apps.knot_invariants',
    'apps.infection_planner',
    'apps.cli',

    # Utilities
    'utils',
]

# No computation touches the database.
DATABASES = {
    'default': env.db('DATABASE_URL', default='sqlite://:memory:')
}

USE_TZ = True
TIME_ZONE = 'UTC'
DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'

# ==============================================================================
# RESOURCE CAPS
# ==============================================================================
# Exceeding a cap raises ResourceCapExceeded (CLI exit status 3); it never
# produces a silently wrong answer.
#
# CONCORDIA_MAX_DEPTH: deepest derived-series level F/F^(k) any check may use
# CONCORDIA_MAX_TERMS: largest term count of one Fox derivative or ring product
# ==============================================================================
CONCORDIA_MAX_DEPTH = env.int('CONCORDIA_MAX_DEPTH', default=4)
CONCORDIA_MAX_TERMS = env.int('CONCORDIA_MAX_TERMS', default=100_000)

CONCORDIA_DEFAULT_RANK = env.int('CONCORDIA_DEFAULT_RANK', default=4)

# ==============================================================================
# SIGNATURE NUMERICS
# ==============================================================================
# Eigenvalues closer to zero than the tolerance are recomputed with mpmath at
# CONCORDIA_MPMATH_DPS decimal digits.
# ==============================================================================
CONCORDIA_SIGNATURE_TOLERANCE = env.float('CONCORDIA_SIGNATURE_TOLERANCE', default=1e-9)
CONCORDIA_MPMATH_DPS = env.int('CONCORDIA_MPMATH_DPS', default=50)

# ==============================================================================
# CACHE CONFIGURATION
# ==============================================================================
# Generated pair sets are cached in process memory. The word-class interning
# table in apps.fox_calculus is NOT stored here: eviction would renumber
# classes mid-computation.
# ==============================================================================
CONCORDIA_CACHE_TTL_SECONDS = env.int('CONCORDIA_CACHE_TTL_SECONDS', default=3600)

CACHES = {
    'default': {
        'BACKEND': 'django.core.cache.backends.locmem.LocMemCache',
        'LOCATION': 'concordia-cache',
        'TIMEOUT': CONCORDIA_CACHE_TTL_SECONDS,
        'OPTIONS': {
            'MAX_ENTRIES': 256,
        },
    }
}

# Logging Configuration
# Console output goes to stderr so that command stdout stays machine-readable.
_APP_LOG_LEVEL = 'DEBUG' if DEBUG else env('CONCORDIA_LOG_LEVEL', default='WARNING')

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'json': {
            '()': 'pythonjsonlogger.jsonlogger.JsonFormatter',
            'format': '%(asctime)s %(levelname)s %(name)s %(message)s'
        },
        'verbose': {
            'format': '{levelname} {asctime} {module} {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'stream': 'ext://sys.stderr',
            'formatter': 'json' if not DEBUG else 'verbose',
        },
    },
    'root': {
        'handlers': ['console'],
        'level': 'WARNING',
    },
    'loggers': {
        'django': {
            'handlers': ['console'],
            'level': 'WARNING',
            'propagate': False,
        },
        'apps': {
            'handlers': ['console'],
            'level': _APP_LOG_LEVEL,
            'propagate': False,
        },
        'utils': {
            'handlers': ['console'],
            'level': _APP_LOG_LEVEL,
            'propagate': False,
        },
    },
}
