from nestfold.corpus.services.families import fold_by_name
from nestfold.corpus.services.literals import literal
from nestfold.corpus.services.natives import leaf_function
from nestfold.corpus.services.registry import CorpusEntry
from nestfold.corpus.services.registry import corpus_entry
from nestfold.corpus.services.registry import corpus_registry
from nestfold.corpus.services.registry import list_entries
from nestfold.corpus.services.registry import resolve_value

__all__ = [
    "CorpusEntry",
    "corpus_entry",
    "corpus_registry",
    "fold_by_name",
    "leaf_function",
    "list_entries",
    "literal",
    "resolve_value",
]
