"""
Tests for the corpus programs on the printed examples.
"""
import pytest
from django.test import SimpleTestCase

from nestfold.corpus.services import functions as fn
from nestfold.corpus.services.families import d_index
from nestfold.corpus.services.families import i_index
from nestfold.corpus.services.literals import literal
from nestfold.corpus.services.natives import LEAF_FUNCTIONS
from nestfold.corpus.services.natives import singleton
from nestfold.corpus.services.natives import succ_nat
from nestfold.corpus.services.natives import wrap_succ
from nestfold.corpus.services.reference import reference_hfold_bush
from nestfold.corpus.services.reference import reference_sum
from nestfold.corpus.services.reference import spine_length
from nestfold.corpus.services.registry import corpus_entry
from nestfold.derive.artifacts import nat_index
from nestfold.interp.algebra import Const
from nestfold.interp.algebra import Native
from nestfold.interp.algebra import Replace
from nestfold.interp.services.literals import parse_value
from nestfold.interp.values import Con
from nestfold.interp.values import as_int
from nestfold.interp.values import char
from nestfold.interp.values import nat
from nestfold.interp.values import text
from nestfold.utils.enums import Direction

V = parse_value

# term1 and term2 with their explicit substitutions flattened
CVT_TERM1 = "Lam[App[Var[Zero], Var[Succ['W']]]]"
CVT_TERM2 = (
    "App[Lam[App[Var[Zero], Var[Succ['W']]]],"
    " Lam[App[App[Lam[App[Var[Zero], Var[Succ[Succ['W']]]]], Var[Zero]],"
    " Lam[App[App[Lam[App[Var[Zero], Var[Succ[Succ[Succ['W']]]]]], Var[Succ[Zero]]], Var[Zero]]]]]]"
)


class BushFunctionsTest(SimpleTestCase):
    """Folds over NBush at index 1."""

    def setUp(self):
        self.bush1 = literal("bush1")

    def test_sum_of_bush1(self):
        """Test that sumB adds every entry of bush1."""
        self.assertEqual(fn.sum_bush(self.bush1), nat(34))
        self.assertEqual(fn.sum_bush(self.bush1), reference_sum(self.bush1))

    def test_length_of_bush1(self):
        """Test that lengthB counts only the top-level spine."""
        self.assertEqual(fn.length_bush(self.bush1), nat(4))
        self.assertEqual(fn.length_bush(self.bush1), spine_length(self.bush1))

    def test_sum_aux_agrees_with_sum(self):
        """Test that the continuation-passing sum agrees with sumB."""
        self.assertEqual(fn.sum_aux(self.bush1), nat(34))
        self.assertEqual(fn.sum_aux(V("NilB")), nat(0))
        self.assertEqual(fn.sum_aux(V("ConsB[5, NilB]")), nat(5))

    def test_hfold_with_constructors_is_identity(self):
        """Test that hfoldB NilB ConsB rebuilds its input."""
        algebra = {"nil": Replace("NilB"), "cons": Replace("ConsB")}
        self.assertEqual(fn.hfold_bush(algebra, self.bush1), self.bush1)
        self.assertEqual(fn.hfold_bush(algebra, V("NilB")), V("NilB"))

    def test_hfold_agrees_with_reference(self):
        """Test that the derived hfoldB and the general-recursive one count the same."""
        algebra = {"nil": Const(nat(0)), "cons": Native("count")}
        natives = {"count": lambda ctx: nat(as_int(ctx.args[-1]) + 1)}
        expected = reference_hfold_bush(nat(0), lambda x, r: nat(as_int(r) + 1), self.bush1)
        self.assertEqual(fn.hfold_bush(algebra, self.bush1, natives), expected)
        self.assertEqual(expected, nat(4))

    def test_map_bush_applies_f_to_every_entry(self):
        """Test that mapB 1 succ adds one per entry."""
        mapped = fn.map_bush(1, succ_nat, self.bush1)
        self.assertEqual(fn.sum_bush(mapped), nat(34 + 7))

    def test_lift(self):
        """Test that lift 0 is the identity and lift 1 g is g."""
        g = fn.length_bush
        self.assertEqual(fn.lift_bush(0, g, nat(3)), nat(3))
        self.assertEqual(fn.lift_bush(1, lambda b: b, self.bush1), self.bush1)
        self.assertEqual(fn.lift_bush(1, g, self.bush1), nat(4))

    def test_convert_to_indexed(self):
        """Test that BushN conversion uses the twin constructors and Base at index 0."""
        self.assertEqual(fn.convert_indexed(Direction.TO, nat_index(1), V("NilB")), V("NilBN"))
        self.assertEqual(fn.convert_indexed(Direction.TO, nat_index(0), nat(3)), V("Base[3]"))
        self.assertEqual(
            fn.convert_indexed(Direction.TO, nat_index(1), V("ConsB[1, NilB]")),
            V("ConsBN[Base[1], NilBN]"),
        )

    def test_convert_round_trip(self):
        """Test that from undoes to on bush1."""
        there = fn.convert_indexed(Direction.TO, nat_index(1), self.bush1)
        self.assertEqual(fn.convert_indexed(Direction.FROM, nat_index(1), there), self.bush1)


@pytest.mark.parametrize(
    ("level", "expected"),
    [
        (3, "num1"),
        (2, "num2"),
    ],
)
def test_map_incr_on_num0(level: int, expected: str):
    assert fn.map_incr(level, wrap_succ, literal("num0")) == literal(expected)


def test_map_incr_at_level_zero_applies_f():
    assert fn.map_incr(0, succ_nat, nat(3)) == nat(4)


@pytest.mark.parametrize(
    ("value", "succ", "expected"),
    [
        ("Zero", LEAF_FUNCTIONS["id"], nat(0)),
        ("Succ['c']", LEAF_FUNCTIONS["id"], char("c")),
        ("Succ['c']", lambda v: nat(1), nat(1)),
    ],
)
def test_fold_incr_regular(value, succ, expected):
    assert fn.fold_incr_regular(nat(0), succ, V(value)) == expected


class TermFunctionsTest(SimpleTestCase):
    """de Bruijn terms through foldT and foldI."""

    def test_map_term(self):
        """Test that mapT 0 reaches free variables only."""
        self.assertEqual(fn.map_term(0, LEAF_FUNCTIONS["next_char"], V("Var['c']")), V("Var['d']"))
        self.assertEqual(fn.map_term(0, wrap_succ, V("Lam[Var[Zero]]")), V("Lam[Var[Zero]]"))
        self.assertEqual(
            fn.map_term(0, LEAF_FUNCTIONS["next_char"], V("Lam[Var[Succ['c']]]")),
            V("Lam[Var[Succ['d']]]"),
        )

    def test_show(self):
        """Test the show tokens on variables, binders and applications."""
        self.assertEqual(fn.show_term(V('Var["x"]')), text("x"))
        self.assertEqual(fn.show_term(V("Lam[Var[Zero]]")), text("\\0"))
        self.assertEqual(fn.show_term(V("App[Var['x'], Var['y']]")), text("(x y)"))
        self.assertEqual(fn.show_term(V(CVT_TERM1)), text("\\(0 SW)"))

    def test_abst(self):
        """Test that abst binds x and shifts every other free variable."""
        x = char("x")
        self.assertEqual(fn.abst_term(x, V("Var['x']")), V("Lam[Var[Zero]]"))
        self.assertEqual(fn.abst_term(x, V("Var['y']")), V("Lam[Var[Succ['y']]]"))
        self.assertEqual(
            fn.abst_term(x, V("App[Var['x'], Var['x']]")),
            V("Lam[App[Var[Zero], Var[Zero]]]"),
        )

    def test_subst(self):
        """Test the three variable actions of subst."""
        s = V("Var['c']")
        self.assertEqual(fn.subst_term(0, s, V("Var[Zero]")), s)
        self.assertEqual(fn.subst_term(0, s, V("Var[Succ['y']]")), V("Var['y']"))
        self.assertEqual(fn.subst_term(0, s, V("Lam[Var[Succ[Zero]]]")), V("Lam[Var[Succ['c']]]"))

    def test_redex(self):
        """Test a beta step and the identity on non-redexes."""
        self.assertEqual(fn.redex_term(V("App[Lam[Var[Zero]], Var['c']]")), V("Var['c']"))
        self.assertEqual(fn.redex_term(V("Var['c']")), V("Var['c']"))

    def test_printed_terms_are_term_char(self):
        """Test that term1Term and term2Term live in Term Char at index 0."""
        for name in ("term1Term", "term2Term"):
            self.assertEqual(corpus_entry("redex").typecheck({}, literal(name)), nat_index(0))

    def test_show_printed_terms(self):
        """Test that showTC renders the printed terms with bound and free variables."""
        self.assertEqual(fn.show_term(literal("term1Term")), text("\\(0 \\((S0 0) \\((SS0 S0) 0)))"))
        self.assertEqual(fn.show_term(literal("term2Term")), text("\\\\((S0 0) SSW)"))
        self.assertEqual(fn.show_term_text(fn.map_term(0, singleton, literal("term2Term"))), text("\\\\((S0 0) SSW)"))

    def test_redex_on_printed_terms(self):
        """Test that applying a printed term to a free variable substitutes it under each binder."""
        c = V("Var['c']")
        self.assertEqual(
            fn.redex_term(Con("App", (literal("term1Term"), c))),
            V(
                "App[Var['c'], Lam[App[App[Var[Succ['c']], Var[Zero]],"
                " Lam[App[App[Var[Succ[Succ['c']]], Var[Succ[Zero]]], Var[Zero]]]]]]",
            ),
        )
        self.assertEqual(
            fn.redex_term(Con("App", (literal("term2Term"), c))),
            V("Lam[App[App[Var[Succ['c']], Var[Zero]], Var[Succ['W']]]]"),
        )

    def test_abst_then_redex_gives_printed_terms_back(self):
        """Test that redex (App (abst x t) (Var x)) is t for both printed terms."""
        for name, x in (("term1Term", "x"), ("term2Term", "W")):
            t = literal(name)
            applied = Con("App", (fn.abst_term(char(x), t), Con("Var", (char(x),))))
            self.assertEqual(fn.redex_term(applied), t)

    def test_abst_binds_the_free_variable_of_term2(self):
        """Test that abst 'W' turns term2Term's free W into the new outermost variable."""
        self.assertEqual(
            fn.abst_term(char("W"), literal("term2Term")),
            V("Lam[Lam[Lam[App[App[Var[Succ[Zero]], Var[Zero]], Var[Succ[Succ[Zero]]]]]]]"),
        )

    def test_beta_law_on_an_abstraction(self):
        """Test that redex (App (abst x t) (Var x)) gives t back."""
        t = V("App[Var['x'], Lam[App[Var[Zero], Var[Succ['y']]]]]")
        applied = Con("App", (fn.abst_term(char("x"), t), V("Var['x']")))
        self.assertEqual(fn.redex_term(applied), t)


class TermEFunctionsTest(SimpleTestCase):
    """Terms with explicit substitutions through foldE."""

    def test_map_terme(self):
        """Test mapE on the three variable cases."""
        f = LEAF_FUNCTIONS["next_char"]
        self.assertEqual(fn.map_terme(0, f, V("VarE['x']")), V("VarE['y']"))
        self.assertEqual(fn.map_terme(1, f, V("VarE[Zero]")), V("VarE[Zero]"))
        self.assertEqual(fn.map_terme(1, f, V("VarE[Succ[VarE['x']]]")), V("VarE[Succ[VarE['y']]]"))

    def test_hfold_terme(self):
        """Test that hfoldE replaces the term constructors and keeps Zero and Succ."""
        identity = {"var": Replace("VarE"), "app": Replace("AppE"), "lam": Replace("LamE")}
        self.assertEqual(fn.hfold_terme(identity, literal("term2")), literal("term2"))
        plain = {"var": Replace("Var"), "app": Replace("App"), "lam": Replace("Lam")}
        self.assertEqual(fn.hfold_terme(plain, V("VarE['x']")), V("Var['x']"))
        self.assertEqual(fn.hfold_terme(plain, V("LamE[VarE[Zero]]")), V("Lam[Var[Zero]]"))

    def test_abst_terme(self):
        """Test that abstE wraps shifted variables in VarE."""
        x = char("x")
        self.assertEqual(fn.abst_terme(x, V("VarE['x']")), V("LamE[VarE[Zero]]"))
        self.assertEqual(fn.abst_terme(x, V("VarE['y']")), V("LamE[VarE[Succ[VarE['y']]]]"))
        self.assertEqual(
            fn.abst_terme(x, V("AppE[VarE['x'], VarE['y']]")),
            V("LamE[AppE[VarE[Zero], VarE[Succ[VarE['y']]]]]"),
        )

    def test_subst_terme(self):
        """Test that substE inserts s under a binder without traversing it."""
        s = V("AppE[VarE['c'], VarE['W']]")
        self.assertEqual(fn.subst_terme(0, s, V("VarE[Zero]")), s)
        self.assertEqual(fn.subst_terme(0, s, V("VarE[Succ[VarE['y']]]")), V("VarE['y']"))
        self.assertEqual(
            fn.subst_terme(0, s, V("LamE[VarE[Succ[VarE[Zero]]]]")),
            V("LamE[VarE[Succ[AppE[VarE['c'], VarE['W']]]]]"),
        )

    def test_redex0_reduces_to_term2(self):
        """Test that one beta step on redex0 yields term2 exactly."""
        self.assertEqual(fn.redex_terme(literal("redex0")), literal("term2"))
        self.assertEqual(fn.redex_terme(V("VarE['c']")), V("VarE['c']"))

    def test_cvt(self):
        """Test that cvtE flattens term1 and term2 into plain de Bruijn terms."""
        self.assertEqual(fn.cvt_terme(0, V("VarE['c']")), V("Var['c']"))
        self.assertEqual(fn.cvt_terme(0, literal("term1")), V(CVT_TERM1))
        self.assertEqual(fn.cvt_terme(0, literal("term2")), V(CVT_TERM2))


class DFunctionsTest(SimpleTestCase):
    """The derived D fold used on D and on I."""

    def test_sum_d(self):
        """Test sumD on the three constructors."""
        self.assertEqual(fn.sum_d(V("DNil")), nat(0))
        self.assertEqual(fn.sum_d(V("DCons[1, 2, DNil, DNil]")), nat(3))
        self.assertEqual(fn.sum_d(V("ACons[Zero, DNil]")), nat(0))

    def test_sum_i(self):
        """Test sumI through foldD at IsI VarA."""
        self.assertEqual(fn.sum_i(V("Zero")), nat(0))
        self.assertEqual(fn.sum_i(V("Succ[3, Zero]")), nat(3))
        self.assertEqual(fn.sum_i(V("Succ[2, Succ[Succ[4, Zero], Zero]]")), nat(6))

    def test_map_d(self):
        """Test mapD' with two different leaf functions and mapD under I."""
        plus_two = lambda v: nat(as_int(v) + 2)  # noqa: E731
        self.assertEqual(
            fn.map_d_top(succ_nat, plus_two, V("DCons[1, 2, DNil, DNil]")),
            V("DCons[2, 4, DNil, DNil]"),
        )
        self.assertEqual(fn.map_d(i_index(), succ_nat, plus_two, V("Succ[1, Zero]")), V("Succ[2, Zero]"))
        self.assertEqual(fn.map_d(d_index(), LEAF_FUNCTIONS["id"], LEAF_FUNCTIONS["id"], V("DNil")), V("DNil"))


class ListFunctionsTest(SimpleTestCase):
    """The regular List fold and the direct one at a nested index."""

    def test_map_and_sum(self):
        """Test map and sum through the regular fold."""
        xs = V("Cons[1, Cons[2, Nil]]")
        self.assertEqual(fn.map_list(succ_nat, xs), V("Cons[2, Cons[3, Nil]]"))
        self.assertEqual(fn.sum_list(xs), nat(3))

    def test_sum_nested_list(self):
        """Test that the direct fold at IsList(IsList VarA) sums a list of lists."""
        xss = V("Cons[Cons[1, Cons[2, Nil]], Cons[Cons[3, Nil], Nil]]")
        self.assertEqual(fn.sum_nested_list(xss), nat(6))
