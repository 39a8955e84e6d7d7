import pytest
from django.test import SimpleTestCase

from nestfold.corpus.services.literals import bush_source
from nestfold.corpus.services.literals import literal
from nestfold.corpus.services.natives import collapse_char
from nestfold.corpus.services.natives import leaf_function
from nestfold.corpus.services.reference import deep_equal
from nestfold.corpus.services.reference import map_list_ref
from nestfold.corpus.services.registry import corpus_entry
from nestfold.corpus.services.registry import corpus_registry
from nestfold.corpus.services.registry import list_entries
from nestfold.corpus.services.registry import resolve_value
from nestfold.interp.services.literals import parse_value
from nestfold.interp.values import char
from nestfold.interp.values import nat
from nestfold.utils.enums import EntryKind
from nestfold.utils.exceptions import UnknownEntryError
from nestfold.utils.exceptions import ValueSyntaxError
from nestfold.utils.exceptions import ValueTypeError


class CorpusRegistryTest(SimpleTestCase):
    def test_census(self):
        """Test that the registry holds the functions, literals, folds and declarations."""
        functions = list_entries(kind=EntryKind.FUNCTION)
        self.assertGreaterEqual(len(functions), 22)
        names = set(corpus_registry())
        self.assertTrue({"term1", "term2", "redex0", "bush1"} <= names)
        self.assertTrue({"Bush", "D", "I", "TermE", "List"} <= names)
        self.assertTrue({"foldB", "foldI", "foldT", "foldE", "foldD"} <= names)

    def test_every_entry_has_a_section(self):
        """Test that each entry of every kind names the section introducing it."""
        missing = [entry.name for entry in corpus_registry().values() if not entry.section.startswith("§")]
        self.assertEqual(missing, [])
        self.assertEqual(corpus_entry("D").section, "§5.1")
        self.assertEqual(corpus_entry("foldE").section, "§4")
        self.assertEqual(corpus_entry("term1Term").section, "§3")

    def test_filter(self):
        """Test that an empty filter lists everything and a filter narrows by name."""
        self.assertEqual(len(list_entries()), len(corpus_registry()))
        self.assertEqual({e.name for e in list_entries("sum", EntryKind.FUNCTION)}, {"sumB", "sumB'", "sumD", "sumI", "sum", "sumLL"})

    def test_evaluate_sum_b(self):
        """Test that sumB on bush1 evaluates through the registry."""
        self.assertEqual(corpus_entry("sumB").evaluate({}, literal("bush1")), nat(34))

    def test_evaluate_redex_e(self):
        """Test that redexE on the printed redex gives term2."""
        self.assertEqual(corpus_entry("redexE").evaluate({}, literal("redex0")), literal("term2"))

    def test_evaluate_with_params(self):
        """Test that --param values are resolved by kind."""
        entry = corpus_entry("mapIncr")
        result = entry.evaluate({"n": "5", "l": "3", "f": "Succ"}, literal("num0"))
        self.assertEqual(result, literal("num1"))

    def test_ill_typed_value_is_rejected(self):
        """Test that a value outside the family is refused before evaluation."""
        with self.assertRaises(ValueTypeError):
            corpus_entry("sumB").evaluate({}, parse_value("Cons[1, Nil]"))
        with self.assertRaises(ValueTypeError):
            corpus_entry("sumB").evaluate({}, parse_value("ConsB['c', NilB]"))

    def test_map_incr_level_above_index(self):
        """Test that mapIncr refuses a level above the index."""
        with self.assertRaises(ValueTypeError):
            corpus_entry("mapIncr").evaluate({"n": "1", "l": "2"}, parse_value("Zero"))

    def test_unknown_names(self):
        """Test lookup errors for entries, parameters and natives."""
        with self.assertRaises(UnknownEntryError):
            corpus_entry("foldX")
        with self.assertRaises(UnknownEntryError):
            corpus_entry("sumB").evaluate({"q": "1"}, literal("bush1"))
        with self.assertRaises(UnknownEntryError):
            leaf_function("sqrt")
        with self.assertRaises(ValueSyntaxError):
            corpus_entry("mapB").evaluate({"n": "one"}, literal("bush1"))

    def test_non_function_entries_load(self):
        """Test that declarations and folds load their payload."""
        self.assertEqual(corpus_entry("Bush").load().name, "Bush")
        self.assertEqual(len(corpus_entry("foldD").load().cases), 7)
        with self.assertRaises(UnknownEntryError):
            corpus_entry("sumB").load()


@pytest.mark.parametrize(
    ("items", "expected"),
    [
        ([], "NilB"),
        ([1], "ConsB[1, NilB]"),
        ([1, [2]], "ConsB[1, ConsB[ConsB[2, NilB], NilB]]"),
    ],
)
def test_bush_source(items, expected):
    assert bush_source(items) == expected


def test_resolve_value_prefers_named_literals():
    assert resolve_value("num0") == literal("num0")
    assert resolve_value("Succ[Zero]") == parse_value("Succ[Zero]")


def test_collapse_is_not_injective():
    assert collapse_char(char("W")) == collapse_char(char("c"))
    assert collapse_char(char("x")) == collapse_char(char("y"))


def test_reference_oracles():
    xs = parse_value("Cons[1, Cons[2, Nil]]")
    assert map_list_ref(leaf_function("succ"), xs) == parse_value("Cons[2, Cons[3, Nil]]")
    assert deep_equal(literal("term2"), literal("term2"))
    assert not deep_equal(literal("term1"), literal("term2"))
    assert not deep_equal(nat(1), char("c"))
