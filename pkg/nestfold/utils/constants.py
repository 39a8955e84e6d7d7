"""
Constants shared across nestfold apps.
"""

# ============================================================================
# DECLARATION FILES
# ============================================================================
DECLARATION_SUFFIX = ".ndt"
KEYWORDS = frozenset({"data", "where"})

# ============================================================================
# DERIVATION NAMING
# ============================================================================
INDEX_TYPE_PREFIX = "Index"
VAR_CTOR_PREFIX = "Var"
IS_CTOR_PREFIX = "Is"
INDEX_VARIABLE_NAMES = ("i", "j", "k", "l", "m", "n")
NAT_INDEX_VARIABLE_NAMES = ("n", "m", "k", "l")
SINGLE_LEAF_CASE = "base"
MOTIVE = "p"
# Interpretation templates bind index arguments to hole variables; the marker keeps
# them apart from carrier parameters, which are always plain identifiers.
HOLE_PREFIX = "#"
OUTER_HOLE = "#0"

# ============================================================================
# SHOW TOKENS
# ============================================================================
SHOW_LP = "("
SHOW_EMP = " "
SHOW_RP = ")"
SHOW_LAMBDA = "\\"
SHOW_ZERO = "0"
SHOW_SUCC = "S"

# ============================================================================
# CARRIERS
# ============================================================================
DEFAULT_ALPHABET = ("W", "c", "x", "y")
DEFAULT_NAT_LIMIT = 3

# ============================================================================
# EMISSION
# ============================================================================
AGDA_INDENT = "  "
AGDA_WRAP_WIDTH = 80
TYPE_IN_TYPE_PRAGMA = "{-# OPTIONS --type-in-type #-}"
CHURCH_CAVEAT = "-- Church encodings quantify over Set inside Set; checking them needs --type-in-type."
