"""
With these settings, tests run faster.
"""

from .base import *  # noqa: F403
from .base import LOGGING

# ============================================================================
# GENERAL
# ============================================================================
TEST_RUNNER = "django.test.runner.DiscoverRunner"

# ============================================================================
# CHECK PROFILES
# ============================================================================
NESTFOLD_PROFILE = "fast"
NESTFOLD_SEED = 0

# ============================================================================
# LOGGING
# ============================================================================
LOGGING["loggers"]["nestfold"]["level"] = "WARNING"  # type: ignore[index]
