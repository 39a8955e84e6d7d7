# ruff: noqa: E501
from pathlib import Path

from decouple import Csv
from decouple import config

# ============================================================================
# PATHS
# ============================================================================
BASE_DIR = Path(__file__).resolve(strict=True).parent.parent.parent
APPS_DIR = BASE_DIR / "nestfold"

# ============================================================================
# GENERAL
# ============================================================================
DEBUG = config("DJANGO_DEBUG", default=False, cast=bool)
SECRET_KEY = config("DJANGO_SECRET_KEY", default="nestfold-offline-toolkit-no-secrets-in-use")
TIME_ZONE = "UTC"
LANGUAGE_CODE = "en"
USE_I18N = False
USE_TZ = True

# ============================================================================
# DATABASE
# ============================================================================
# Everything is computed in memory; no models are defined.
DATABASES: dict[str, dict] = {}
DEFAULT_AUTO_FIELD = "django.db.models.BigAutoField"

# ============================================================================
# APPS
# ============================================================================
DJANGO_APPS = [
    "django.contrib.contenttypes",
]
LOCAL_APPS = [
    "nestfold.core",
    "nestfold.derive",
    "nestfold.interp",
    "nestfold.corpus",
    "nestfold.check",
    "nestfold.emit",
    "nestfold.cli",
]
INSTALLED_APPS = DJANGO_APPS + LOCAL_APPS

# ============================================================================
# CHECK PROFILES
# ============================================================================
NESTFOLD_PROFILE = config("NESTFOLD_PROFILE", default="default")
NESTFOLD_ALPHABET = config("NESTFOLD_ALPHABET", default="W,c,x,y", cast=Csv())
NESTFOLD_CHECK_PROFILES = {
    "default": {
        "max_size_bush": 7,
        "max_size_term": 8,
        "max_size_d": 7,
        "max_index": 3,
        "max_index_d": 2,
        "nat_limit": 3,
        "pair_size": 4,
        "alphabet": NESTFOLD_ALPHABET,
    },
    "thorough": {
        "max_size_bush": 8,
        "max_size_term": 9,
        "max_size_d": 8,
        "max_index": 4,
        "max_index_d": 3,
        "nat_limit": 3,
        "pair_size": 5,
        "alphabet": NESTFOLD_ALPHABET,
    },
}
# fast is derived from default by halving sizes and indexes (see check.models.Bounds)
NESTFOLD_SEED = config("NESTFOLD_SEED", default=0, cast=int)
NESTFOLD_AUDIT_TERMINATION = config("NESTFOLD_AUDIT_TERMINATION", default=False, cast=bool)

# ============================================================================
# EMISSION
# ============================================================================
NESTFOLD_EMIT_DIR = config("NESTFOLD_EMIT_DIR", default=str(BASE_DIR / "build" / "emitted"))
NESTFOLD_TYPE_IN_TYPE_PRAGMA = config("NESTFOLD_TYPE_IN_TYPE_PRAGMA", default=True, cast=bool)

# ============================================================================
# LOGGING
# ============================================================================
NESTFOLD_LOG_LEVEL = config("NESTFOLD_LOG_LEVEL", default="INFO")
LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "verbose": {
            "format": "%(levelname)s %(asctime)s %(module)s %(process)d %(thread)d %(message)s",
        },
    },
    "handlers": {
        "console": {
            "level": "DEBUG",
            "class": "logging.StreamHandler",
            "formatter": "verbose",
        },
    },
    "root": {"level": "INFO", "handlers": ["console"]},
    "loggers": {
        "nestfold": {
            "level": NESTFOLD_LOG_LEVEL,
            "handlers": ["console"],
            "propagate": False,
        },
    },
}
