from decouple import config

from .base import *  # noqa: F403
from .base import LOGGING

# ============================================================================
# GENERAL
# ============================================================================
DEBUG = True

# ============================================================================
# LOGGING
# ============================================================================
LOGGING["loggers"]["nestfold"]["level"] = config("NESTFOLD_LOG_LEVEL", default="DEBUG")  # type: ignore[index]
