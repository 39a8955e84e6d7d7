import pytest
from django.test import SimpleTestCase

from nestfold.core.declarations import App
from nestfold.core.declarations import Arrow
from nestfold.core.declarations import ConstructorDecl
from nestfold.core.declarations import DataDecl
from nestfold.core.declarations import Var
from nestfold.core.services.kinds import kind_check
from nestfold.core.services.loader import load_program
from nestfold.core.services.loader import load_program_file
from nestfold.core.services.parser import parse_program
from nestfold.core.services.printer import render_constructor
from nestfold.core.services.printer import render_program
from nestfold.core.tests.generators import SEEDS
from nestfold.core.tests.generators import random_program
from nestfold.corpus.services.families import corpus_program
from nestfold.corpus.services.families import declaration_files
from nestfold.utils.exceptions import ArityMismatchError
from nestfold.utils.exceptions import DeclarationSyntaxError
from nestfold.utils.exceptions import DuplicateNameError
from nestfold.utils.exceptions import HigherOrderArgumentError
from nestfold.utils.exceptions import UnboundParameterError
from nestfold.utils.exceptions import UnknownTypeConstructorError

BUSH_SOURCE = """
data Bush (a) where
  NilB : Bush a
  ConsB : a -> Bush (Bush a) -> Bush a
"""


def bush(t):
    return App("Bush", (t,))


class ParseProgramTest(SimpleTestCase):
    def test_bush_declaration(self):
        """Test that the Bush source parses to its two constructors."""
        program = parse_program(BUSH_SOURCE)
        expected = DataDecl(
            "Bush",
            ("a",),
            (ConstructorDecl("NilB", ()), ConstructorDecl("ConsB", (Var("a"), bush(bush(Var("a")))))),
        )
        self.assertEqual(program.decls, (expected,))

    def test_empty_input(self):
        """Test that empty input and comment-only input give no declarations."""
        self.assertEqual(parse_program("").decls, ())
        self.assertEqual(parse_program("-- nothing here\n").decls, ())

    def test_mutually_nested_declarations(self):
        """Test the ACons argument of the D/I program."""
        program = corpus_program("d")
        self.assertEqual(program.names, ("I", "D"))
        acons = program.decl("D").constructor("ACons")

        def d(x, y):
            return App("D", (x, y))

        def i(x):
            return App("I", (x,))

        a, b = Var("a"), Var("b")
        self.assertEqual(acons.arg_types[1], d(i(i(d(b, a))), d(d(b, a), d(a, b))))

    def test_positions_are_kept(self):
        """Test that constructor positions point at their source line."""
        program = parse_program(BUSH_SOURCE)
        cons = program.decl("Bush").constructor("ConsB")
        self.assertEqual(cons.position.line, 4)

    def test_syntax_error_has_location(self):
        """Test that a malformed declaration reports line and column."""
        with self.assertRaises(DeclarationSyntaxError) as ctx:
            parse_program("data Bush (a) where\n  NilB Bush a\n")
        self.assertIsNotNone(ctx.exception.line)
        self.assertIsNotNone(ctx.exception.column)

    def test_wrong_result_type(self):
        """Test that a constructor must return the declared type."""
        with self.assertRaises(DeclarationSyntaxError):
            parse_program("data T (a) where\n  C : a -> T (T a)\n")

    def test_duplicate_names(self):
        """Test duplicate declarations, constructors and parameters."""
        with self.assertRaises(DuplicateNameError):
            parse_program(BUSH_SOURCE + BUSH_SOURCE)
        with self.assertRaises(DuplicateNameError):
            parse_program("data T (a) where\n  C : T a\n\ndata U (a) where\n  C : U a\n")
        with self.assertRaises(DuplicateNameError):
            parse_program("data T (a a) where\n  C : T a a\n")


class KindCheckTest(SimpleTestCase):
    def test_corpus_programs_are_accepted(self):
        """Test that every corpus declaration file kind-checks."""
        for path in declaration_files():
            with self.subTest(path=path.name):
                self.assertIsNotNone(kind_check(parse_program(path.read_text(encoding="utf-8"))))

    def test_arity_mismatch(self):
        """Test that List applied to two arguments is rejected."""
        with self.assertRaises(ArityMismatchError):
            load_program("data List (a) where\n  Nil : List a\n  Cons : a -> List a a -> List a\n")

    def test_function_argument(self):
        """Test that a function-typed argument is rejected with an explanation."""
        with self.assertRaises(HigherOrderArgumentError) as ctx:
            load_program("data T (a) where\n  C : (a -> a) -> T a\n")
        self.assertIn("first-order", str(ctx.exception))

    def test_unbound_parameter(self):
        """Test that a type variable must be a declared parameter."""
        with self.assertRaises(UnboundParameterError):
            load_program("data T (a) where\n  C : b -> T a\n")

    def test_unknown_type_constructor(self):
        """Test that every mentioned type constructor must be declared."""
        with self.assertRaises(UnknownTypeConstructorError):
            load_program("data T (a) where\n  C : Maybe a -> T a\n")


def test_function_type_parses_to_arrow():
    program = parse_program("data T (a) where\n  C : (a -> a) -> T a\n")
    assert program.decl("T").constructors[0].arg_types == (Arrow(Var("a"), Var("a")),)


@pytest.mark.parametrize("path", declaration_files(), ids=lambda p: p.stem)
def test_parse_print_identity(path):
    program = corpus_program(path.stem)
    assert parse_program(render_program(program)) == program


@pytest.mark.parametrize("seed", SEEDS)
def test_parse_print_identity_on_generated_programs(seed):
    program = random_program(seed)
    assert kind_check(program) == program
    assert load_program(render_program(program)) == program


def test_load_program_file_rejects_invalid_utf8(tmp_path):
    path = tmp_path / "bad.ndt"
    path.write_bytes(b"data T () where\n  C : T\n\xff\xfe")
    with pytest.raises(DeclarationSyntaxError, match="not valid UTF-8"):
        load_program_file(path)


def test_render_constructor():
    decl = parse_program(BUSH_SOURCE).decl("Bush")
    assert render_constructor(decl.constructor("ConsB"), decl) == "ConsB : a -> Bush (Bush a) -> Bush a"


def test_render_empty_program():
    assert render_program(parse_program("")) == ""
