import pytest
from django.test import SimpleTestCase

from nestfold.core.declarations import App
from nestfold.core.declarations import Var
from nestfold.corpus.services.families import ONE
from nestfold.corpus.services.families import Z
from nestfold.corpus.services.families import bush_n
from nestfold.corpus.services.families import corpus_program
from nestfold.corpus.services.families import fold_b
from nestfold.corpus.services.families import fold_bush_direct
from nestfold.corpus.services.families import fold_d
from nestfold.corpus.services.families import fold_e
from nestfold.corpus.services.families import fold_list
from nestfold.corpus.services.families import fold_t
from nestfold.corpus.services.literals import literal
from nestfold.derive.artifacts import IndexCon
from nestfold.derive.artifacts import IndexVar
from nestfold.derive.services.church import derive_church
from nestfold.derive.services.fold import derive_fold_spec
from nestfold.derive.services.hofold import derive_hofold
from nestfold.derive.services.index import interpret_index
from nestfold.derive.services.indexed import derive_conversions
from nestfold.derive.services.indexed import derive_indexed_rep
from nestfold.derive.services.induction import derive_induction_spec
from nestfold.derive.services.mapping import derive_map_spec
from nestfold.derive.services.pipeline import derive_artifacts
from nestfold.derive.services.properness import coincides_with_direct
from nestfold.derive.services.properness import properness_report
from nestfold.derive.services.serialization import artifacts_to_json
from nestfold.derive.services.serialization import dump_artifacts
from nestfold.derive.services.serialization import load_artifacts
from nestfold.interp.algebra import Native
from nestfold.interp.algebra import Replace
from nestfold.interp.services.evaluator import eval_fold
from nestfold.interp.values import Con
from nestfold.interp.values import con
from nestfold.interp.values import nat
from nestfold.utils.exceptions import DerivationError

P = "p"


def p(*args):
    return App(P, args)


def app_i(x):
    return App("I", (x,))


class InductionSpecTest(SimpleTestCase):
    def test_ind_b(self):
        """Test that indB keeps foldB's cases and adds hypotheses for recursive children."""
        spec = derive_induction_spec(fold_b())
        self.assertEqual(spec.name, "indB")
        self.assertEqual([c.case for c in spec.cases], [c.name for c in fold_b().cases])
        cons = spec.cases[2]
        self.assertEqual(cons.binders, ("x", "xs"))
        self.assertEqual([h.binder for h in cons.hypotheses], ["x", "xs"])

    def test_list_induction(self):
        """Test that the List step has one hypothesis, about the tail."""
        spec = derive_induction_spec(fold_list())
        self.assertEqual(spec.name, "ind")
        cons = spec.cases[1]
        self.assertEqual([h.binder for h in cons.hypotheses], ["xs"])
        self.assertEqual(spec.cases[0].hypotheses, ())

    def test_ind_d(self):
        """Test that indD carries seven cases."""
        spec = derive_induction_spec(fold_d())
        self.assertEqual(spec.name, "indD")
        self.assertEqual(len(spec.cases), 7)
        self.assertEqual(len(spec.cases[3].hypotheses), 4)


class MapSpecTest(SimpleTestCase):
    def test_bush_map_algebra(self):
        """Test that the map keeps constructors and sends leaves to the carrier function."""
        algebra = derive_map_spec(fold_b())
        self.assertEqual(algebra.target("base"), Native("leaf:a"))
        self.assertEqual(algebra.target("nil"), Replace("NilB"))
        self.assertEqual(algebra.target("cons"), Replace("ConsB"))

    def test_term_map_rebuilds_variables(self):
        """Test that a case holding an Incr value is rebuilt by a native."""
        self.assertEqual(derive_map_spec(fold_t()).target("var"), Native("map:var"))

    def test_regular_map_rebuilds_raw_carriers(self):
        """Test that the List cons case maps its raw head."""
        self.assertEqual(derive_map_spec(fold_list()).target("cons"), Native("map:cons"))


class HOFoldTest(SimpleTestCase):
    def test_hfold_b(self):
        """Test that hfoldB has nil and cons arguments and starts at index 1."""
        spec = derive_hofold(fold_b())
        self.assertEqual(spec.name, "hfoldB")
        self.assertEqual(spec.root_index, ONE)
        self.assertEqual([a.name for a in spec.args], ["nil", "cons"])
        self.assertEqual(spec.arg_for("ConsB").arg_types, (Var("a"), p(p(Var("a")))))
        self.assertEqual(interpret_index(spec.hp, ONE), p(Var("a")))

    def test_hfold_d(self):
        """Test the hfoldD argument types; Zero and Succ pass through."""
        spec = derive_hofold(fold_d())
        self.assertEqual([a.name for a in spec.args], ["dnil", "dcons", "acons"])
        a, b = Var("a"), Var("b")
        self.assertEqual(spec.arg_for("ACons").arg_types, (app_i(b), p(app_i(app_i(p(b, a))), p(p(b, a), p(a, b)))))
        self.assertIsNone(spec.arg_for("Succ"))
        self.assertEqual(spec.root_index, IndexCon("IsD", (IndexCon("VarA"), IndexCon("VarB"))))

    def test_hp_agrees_with_h_off_the_root(self):
        """Test that Hp only differs from H where the root index constructor occurs."""
        spec = derive_hofold(fold_d())
        h = fold_d().family
        for index in h.index_type.enumerate(2):
            with self.subTest(index=index):
                mentions_root = "IsD" in repr(index)
                same = interpret_index(spec.hp, index) == interpret_index(h, index)
                self.assertEqual(same, not mentions_root)

    def test_hfold_t(self):
        """Test that the customized Term fold specializes at index 0."""
        spec = derive_hofold(fold_t())
        self.assertEqual(spec.name, "hfoldT")
        self.assertEqual(spec.root_index, Z)
        self.assertEqual([a.name for a in spec.args], ["var", "app", "lam"])

    def test_indexed_family_has_no_hofold(self):
        """Test that folds of indexed representations are refused."""
        with self.assertRaises(DerivationError):
            derive_hofold(bush_n().fold_spec)


class IndexedRepTest(SimpleTestCase):
    def test_bush_n(self):
        """Test BushN's constructors and fold name."""
        rep = derive_indexed_rep(corpus_program("bush"), "Bush")
        self.assertEqual(rep.name, "BushN")
        self.assertEqual(rep.fold_name, "foldBN")
        self.assertEqual([c.name for c in rep.constructors], ["Base", "NilBN", "ConsBN"])

    def test_d_n(self):
        """Test that DN has one constructor per foldD case."""
        rep = derive_indexed_rep(corpus_program("d"), "D")
        self.assertEqual(rep.name, "DN")
        self.assertEqual(len(rep.constructors), 7)
        self.assertEqual(rep.constructors[0].name, "BaseA")

    def test_list_n(self):
        """Test that ListN has a Base constructor and the List twins."""
        rep = derive_indexed_rep(corpus_program("list"), "List")
        self.assertEqual([c.name for c in rep.constructors], ["Base", "NilN", "ConsN"])

    def test_conversions(self):
        """Test to and from on bushes at indexes 0 and 1."""
        conv = derive_conversions(bush_n())
        self.assertEqual(eval_fold(conv.to_fold, conv.to_algebra, ONE, con("NilB")), con("NilBN"))
        self.assertEqual(eval_fold(conv.to_fold, conv.to_algebra, Z, nat(3)), Con("Base", (nat(3),)))
        bush1 = literal("bush1")
        indexed = eval_fold(conv.to_fold, conv.to_algebra, ONE, bush1)
        self.assertEqual(eval_fold(conv.from_fold, conv.from_algebra, ONE, indexed), bush1)


class ChurchTest(SimpleTestCase):
    def test_cn_bush(self):
        """Test CNBush and its constructors."""
        church = derive_church(fold_b())
        self.assertEqual(church.name, "CNBush")
        self.assertEqual([c.name for c in church.constructors], ["cbase", "cnil", "ccons"])
        self.assertEqual(church.constructors[2].recursive, (True, True))
        self.assertEqual((church.cfold_name, church.cmap_name), ("cfoldB", "cmapB"))

    def test_d_encoding_has_seven_arguments(self):
        """Test the D encoding."""
        self.assertEqual(len(derive_church(fold_d()).constructors), 7)


class PropernessTest(SimpleTestCase):
    def test_customized_folds_are_proper(self):
        """Test foldB, foldT and foldE."""
        for fold in (fold_b(), fold_t(), fold_e(), fold_d()):
            with self.subTest(fold=fold.name):
                self.assertTrue(properness_report(fold).proper)
        self.assertEqual(properness_report(fold_b()).root_cases, ("nil", "cons"))

    def test_indexed_representation_is_not_proper(self):
        """Test that BushN's fold has no higher-order specialization."""
        report = properness_report(bush_n().fold_spec)
        self.assertFalse(report.proper)
        self.assertTrue(report.reasons)

    def test_coincides_with_direct(self):
        """Test that foldB is the direct fold but foldT and foldE are not."""
        self.assertTrue(coincides_with_direct(fold_b(), fold_bush_direct()))
        self.assertFalse(coincides_with_direct(fold_t(), derive_fold_spec(corpus_program("term"), "Term")))
        self.assertFalse(coincides_with_direct(fold_e(), derive_fold_spec(corpus_program("terme"), "TermE")))


@pytest.mark.parametrize(("program", "root", "cases"), [("bush", "Bush", 3), ("d", "D", 7), ("term", "Term", 6)])
def test_artifacts_json_round_trip(program, root, cases):
    artifacts = derive_artifacts(corpus_program(program), root)
    text = dump_artifacts(artifacts)
    assert list(artifacts_to_json(artifacts)) == [
        "index_type",
        "interpretation",
        "fold_spec",
        "induction_spec",
        "hofold",
        "indexed_rep",
        "church",
    ]
    assert len(artifacts_to_json(artifacts)["fold_spec"]["cases"]) == cases
    assert load_artifacts(text) == artifacts
    assert dump_artifacts(load_artifacts(text)) == text


def test_index_variables_are_schematic():
    fold = derive_fold_spec(corpus_program("d"), "D")
    assert fold.case("dnil").subject_index == IndexCon("IsD", (IndexVar("i"), IndexVar("j")))
