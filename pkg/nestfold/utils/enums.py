from django.db.models import TextChoices


# ============================================================================
# DECLARATIONS
# ============================================================================
class ArgumentKind(TextChoices):
    """Classification of a constructor argument by the nestedness report."""

    PLAIN = "plain", "Plain"
    NESTED = "nested", "Nested"


# ============================================================================
# VALUES
# ============================================================================
class GroundSort(TextChoices):
    """Sorts of ground leaves a value may carry."""

    NAT = "nat", "Natural"
    CHAR = "char", "Character"
    TEXT = "text", "Text"


# ============================================================================
# CONVERSIONS
# ============================================================================
class Direction(TextChoices):
    """Direction of an indexed-representation conversion."""

    TO = "to", "Nested to indexed"
    FROM = "from", "Indexed to nested"


# ============================================================================
# CORPUS
# ============================================================================
class EntryKind(TextChoices):
    """Kinds of corpus registry entries."""

    DECLARATION = "declaration", "Declaration"
    FOLD_SPEC = "fold-spec", "Fold specification"
    FUNCTION = "function", "Function"
    LITERAL = "literal", "Literal"


class ParamKind(TextChoices):
    """How a corpus function parameter is read from the command line."""

    NAT = "nat", "Natural"
    NATIVE = "native", "Native function key"
    VALUE = "value", "Value literal"
    INDEX = "index", "Index literal"


# ============================================================================
# CHECK
# ============================================================================
class CheckStatus(TextChoices):
    """Outcome of a property run."""

    PASS = "pass", "Pass"
    FAIL = "fail", "Fail"


class ProfileName(TextChoices):
    """Bounds profiles for the property suite."""

    FAST = "fast", "Fast"
    DEFAULT = "default", "Default"
    THOROUGH = "thorough", "Thorough"


# ============================================================================
# EMIT
# ============================================================================
class Backend(TextChoices):
    """Output backends."""

    AGDA = "agda", "Agda"
    JSON = "json", "JSON"


class IncludePart(TextChoices):
    """Sections an Agda module may include, in emission order."""

    NESTED_DECL = "nested-decl", "Nested declarations"
    INTERPRETATION = "interpretation", "Index type and interpretation"
    FOLD = "fold", "Dependently typed fold"
    INDUCTION = "induction", "Induction principle"
    MAP = "map", "Generic map"
    HOFOLD = "hofold", "Higher-order fold"
    INDEXED_REP = "indexed-rep", "Indexed representation"
    CHURCH = "church", "Church encoding"
