import json
from functools import cache
from pathlib import Path

import pytest
from django.test import SimpleTestCase
from django.test import override_settings

from nestfold.corpus.services.families import D_CASE_NAMES
from nestfold.corpus.services.families import corpus_program
from nestfold.corpus.services.families import fold_list
from nestfold.derive.services.induction import derive_induction_spec
from nestfold.derive.services.pipeline import derive_artifacts
from nestfold.derive.services.serialization import load_artifacts
from nestfold.emit.models import EmitOptions
from nestfold.emit.services.agda import emit_agda
from nestfold.emit.services.agda import fold_clauses
from nestfold.emit.services.agda import format_canonical
from nestfold.emit.services.agda import hofold_signature
from nestfold.emit.services.agda import induction_signature
from nestfold.emit.services.agda import render_church_constructors
from nestfold.emit.services.agda import render_church_fold
from nestfold.emit.services.agda import render_church_type
from nestfold.emit.services.agda import render_fold
from nestfold.emit.services.agda import render_index_type
from nestfold.emit.services.agda import render_indexed_decl
from nestfold.emit.services.agda import render_induction
from nestfold.emit.services.agda import render_map
from nestfold.emit.services.formatter import normalize_whitespace
from nestfold.emit.services.writer import emit_json
from nestfold.emit.services.writer import write_outputs
from nestfold.utils.constants import CHURCH_CAVEAT
from nestfold.utils.constants import TYPE_IN_TYPE_PRAGMA
from nestfold.utils.enums import Backend
from nestfold.utils.enums import IncludePart
from nestfold.utils.exceptions import EmitError

GOLDENS = Path(__file__).resolve().parent / "goldens"


def golden(name):
    return normalize_whitespace((GOLDENS / f"{name}.agda").read_text(encoding="utf-8"))


@cache
def bush():
    return derive_artifacts(corpus_program("bush"), "Bush")


@cache
def d():
    return derive_artifacts(corpus_program("d"), "D", D_CASE_NAMES)


def church_listing(artifacts):
    church = artifacts.church
    return "\n\n".join(
        [render_church_type(church), render_church_constructors(church), render_church_fold(church)]
    )


@pytest.mark.parametrize(
    ("name", "render"),
    [
        ("foldB", lambda: render_fold(bush().fold_spec)),
        ("indB", lambda: induction_signature(bush().induction_spec)),
        ("BushN", lambda: render_indexed_decl(bush().indexed_rep)),
        ("foldBN", lambda: render_fold(bush().indexed_rep.fold_spec)),
        ("CNBush", lambda: church_listing(bush())),
        ("foldD", lambda: render_fold(d().fold_spec)),
        ("hfoldD", lambda: hofold_signature(d().hofold)),
    ],
)
def test_matches_golden_listing(name, render):
    assert normalize_whitespace(render()) == golden(name)


class FormatTest(SimpleTestCase):
    def test_cons_signature(self):
        """Test that a nested constructor prints with its full argument types."""
        text = format_canonical(corpus_program("bush").decl("Bush"))
        self.assertIn("  ConsB : a -> Bush (Bush a) -> Bush a\n", text)
        self.assertTrue(text.startswith("data Bush (a : Set) : Set where\n"))

    def test_index_type_constructors_in_order(self):
        """Test that IndexD lists VarA, VarB, IsD and IsI in derived order."""
        lines = render_index_type(d().index_type).splitlines()
        self.assertEqual(
            lines,
            [
                "data IndexD : Set where",
                "  VarA : IndexD",
                "  VarB : IndexD",
                "  IsD : IndexD -> IndexD -> IndexD",
                "  IsI : IndexD -> IndexD",
            ],
        )

    def test_nat_shaped_index_prints_as_nat(self):
        """Test that Bush's index type is shown as the naturals."""
        self.assertTrue(render_index_type(bush().index_type).startswith("data Nat : Set where\n  Z : Nat\n"))

    def test_idempotent(self):
        """Test that formatting formatted text changes nothing."""
        for item in (bush().fold_spec, d().hofold, bush().church, corpus_program("d")):
            once = format_canonical(item)
            self.assertEqual(format_canonical(once), once)

    def test_canonical_text(self):
        """Test that trailing spaces and extra blank lines are removed."""
        self.assertEqual(format_canonical("a  \n\n\n\nb"), "a\n\nb\n")

    def test_unknown_item(self):
        """Test that only artifacts and text can be formatted."""
        with self.assertRaises(EmitError):
            format_canonical(42)


class InductionTest(SimpleTestCase):
    def test_clauses_equal_fold_clauses(self):
        """Test that induction clauses are the fold clauses under the induction name."""
        for artifacts in (bush(), d()):
            spec = artifacts.induction_spec
            induction = render_induction(spec).splitlines()
            signature_lines = len(induction_signature(spec).splitlines())
            clauses = "\n".join(induction[signature_lines:])
            expected = "\n".join(fold_clauses(artifacts.fold_spec))
            self.assertEqual(
                normalize_whitespace(clauses.replace(spec.name, artifacts.fold_spec.name)),
                normalize_whitespace(expected),
            )

    def test_regular_view_elides_the_index(self):
        """Test that the List fold and induction carry no index."""
        fold = fold_list()
        text = render_fold(fold)
        self.assertIn("fold : {a : Set} -> {p : Set} ->", text)
        self.assertIn("fold nil cons (Cons x xs) = cons x (fold nil cons xs)", text)
        self.assertIn("(xs : List a) -> p xs", render_induction(derive_induction_spec(fold)))


class MapTest(SimpleTestCase):
    def test_bush_map_by_fold(self):
        """Test that mapB rebuilds every constructor through foldB."""
        text = normalize_whitespace(render_map(bush().fold_spec))
        self.assertEqual(
            text,
            "mapB : {a b : Set} -> (n : Nat) -> (a -> b) -> NBush n a -> NBush n b "
            "mapB {a} {b} n f l = foldB {a} {\\ n -> NBush n b} f (\\ n -> NilB) (\\ n -> ConsB) n l",
        )

    def test_list_map_maps_the_raw_element(self):
        """Test that a raw carrier child is passed through the carrier function."""
        self.assertIn("(\\ x xs -> Cons (f x) xs)", render_map(fold_list()))


class EmitAgdaTest(SimpleTestCase):
    def test_deterministic(self):
        """Test that equal artifacts give byte-identical modules."""
        self.assertEqual(emit_agda(bush()), emit_agda(derive_artifacts(corpus_program("bush"), "Bush")))

    def test_module_layout(self):
        """Test that a full module names itself and holds every part in order."""
        text = emit_agda(d())
        self.assertTrue(text.startswith(f"{TYPE_IN_TYPE_PRAGMA}\nmodule D where\n"))
        order = [
            "data I (a : Set) : Set where",
            "data D (a b : Set) : Set where",
            "data IndexD : Set where",
            "H : IndexD -> Set -> Set -> Set",
            "foldD : ",
            "indD : ",
            "mapD : ",
            "Hp : IndexD -> (Set -> Set -> Set) -> Set -> Set -> Set",
            "hfoldD : ",
            "data DN : IndexD -> Set -> Set -> Set where",
            "CND : IndexD -> Set -> Set -> Set",
            "cmapD : ",
        ]
        positions = [text.index(marker) for marker in order]
        self.assertEqual(positions, sorted(positions))
        self.assertNotIn("  \n", text)

    def test_church_alone_pulls_in_what_it_needs(self):
        """Test that --include church adds the pragma, the caveat and the index type."""
        opts = EmitOptions.from_arguments(include="church")
        text = emit_agda(bush(), opts)
        self.assertTrue(text.startswith(TYPE_IN_TYPE_PRAGMA))
        self.assertIn(CHURCH_CAVEAT, text)
        self.assertIn("data Nat : Set where", text)
        self.assertNotIn("foldB", text)

    @override_settings(NESTFOLD_TYPE_IN_TYPE_PRAGMA=False)
    def test_pragma_follows_settings(self):
        """Test that the pragma can be switched off while the caveat stays."""
        text = emit_agda(bush(), EmitOptions(include=frozenset({IncludePart.CHURCH})))
        self.assertNotIn(TYPE_IN_TYPE_PRAGMA, text)
        self.assertIn(CHURCH_CAVEAT, text)

    def test_no_pragma_without_church(self):
        """Test that a module without Church encodings needs no unsafe flag."""
        text = emit_agda(bush(), EmitOptions.from_arguments(include="fold,induction"))
        self.assertTrue(text.startswith("module Bush where"))

    def test_bush_conversions(self):
        """Test that to and from are folds into each other's constructors."""
        text = normalize_whitespace(emit_agda(bush(), EmitOptions.from_arguments(include="indexed-rep")))
        self.assertIn("to {a} n s = foldB {a} {\\ n -> BushN n a} Base (\\ n -> NilBN) (\\ n -> ConsBN) n s", text)
        self.assertIn("from {a} n s = foldBN {a} {\\ n -> NBush n a} (\\ x -> x) (\\ n -> NilB) (\\ n -> ConsB) n s", text)

    def test_hofold_definition(self):
        """Test that hfoldB is foldB at S Z with the Hp motive."""
        text = normalize_whitespace(emit_agda(bush(), EmitOptions.from_arguments(include="hofold")))
        self.assertIn(
            "hfoldB {a} {p} nil cons x = foldB {a} {\\ n -> Hp n p a} (\\ y -> y) (\\ n -> nil) (\\ n -> cons) (S Z) x",
            text,
        )

    def test_church_map(self):
        """Test that cmapB is a cfoldB into the Church constructors."""
        text = normalize_whitespace(emit_agda(bush(), EmitOptions.from_arguments(include="church")))
        self.assertIn("cmapB {a} {b} n f = cfoldB {a} {\\ n -> CNBush n b} (\\ x -> cbase (f x)) cnil ccons n", text)


class EmitOptionsTest(SimpleTestCase):
    def test_unknown_include(self):
        """Test that an unknown part name is refused."""
        with self.assertRaises(EmitError):
            EmitOptions.from_arguments(include="fold,proofs")

    def test_empty_include(self):
        """Test that an empty include list is refused."""
        with self.assertRaises(EmitError):
            EmitOptions.from_arguments(include=" , ")

    def test_json_takes_no_include(self):
        """Test that the json backend refuses a partial include set."""
        with self.assertRaises(EmitError):
            EmitOptions.from_arguments(backend="json", include="fold")

    def test_unknown_backend(self):
        """Test that only agda and json are backends."""
        with self.assertRaises(EmitError):
            EmitOptions.from_arguments(backend="coq")

    def test_prerequisites(self):
        """Test that the induction part brings its fold and the family it folds."""
        parts = EmitOptions.from_arguments(include="induction").parts()
        self.assertEqual(
            parts,
            (IncludePart.NESTED_DECL, IncludePart.INTERPRETATION, IncludePart.FOLD, IncludePart.INDUCTION),
        )


@pytest.mark.parametrize(("artifacts", "cases"), [(bush, 3), (d, 7)])
def test_json_case_counts(artifacts, cases):
    data = json.loads(emit_json(artifacts()))
    assert list(data)[:1] == ["index_type"]
    assert len(data["fold_spec"]["cases"]) == cases


def test_json_loads_back():
    assert load_artifacts(emit_json(d())) == d()


@pytest.mark.parametrize(
    ("backend", "filename"),
    [(Backend.AGDA, "Bush.agda"), (Backend.JSON, "Bush.artifacts.json")],
)
def test_write_outputs(tmp_path, backend, filename):
    path = write_outputs(bush(), EmitOptions(backend=backend), tmp_path)
    assert path == tmp_path / filename
    assert path.read_text(encoding="utf-8").endswith("\n")
