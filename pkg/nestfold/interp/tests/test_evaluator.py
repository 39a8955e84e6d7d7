import pytest
from django.test import SimpleTestCase

from nestfold.corpus.services import functions as fn
from nestfold.corpus.services.families import ONE
from nestfold.corpus.services.families import d_index
from nestfold.corpus.services.families import fold_b
from nestfold.corpus.services.families import fold_d
from nestfold.corpus.services.families import fold_t
from nestfold.corpus.services.families import nbush
from nestfold.corpus.services.literals import literal
from nestfold.derive.artifacts import nat_index
from nestfold.derive.services.hofold import derive_hofold
from nestfold.interp.algebra import Algebra
from nestfold.interp.algebra import Const
from nestfold.interp.algebra import Native
from nestfold.interp.algebra import Replace
from nestfold.interp.carriers import Carriers
from nestfold.interp.carriers import nats
from nestfold.interp.services.enumeration import enumerate_values
from nestfold.interp.services.evaluator import eval_fold
from nestfold.interp.services.evaluator import eval_hofold
from nestfold.interp.services.evaluator import eval_map
from nestfold.interp.services.literals import format_index
from nestfold.interp.services.literals import format_value
from nestfold.interp.services.literals import parse_index
from nestfold.interp.services.literals import parse_value
from nestfold.interp.services.literals import value_from_json
from nestfold.interp.services.literals import value_to_json
from nestfold.interp.services.trace import EvalTrace
from nestfold.interp.services.trace import descent_audit
from nestfold.interp.services.trace import recording
from nestfold.interp.values import Con
from nestfold.interp.values import as_int
from nestfold.interp.values import char
from nestfold.interp.values import con
from nestfold.interp.values import nat
from nestfold.interp.values import text
from nestfold.interp.values import value_eq
from nestfold.interp.values import value_size
from nestfold.utils.exceptions import AlgebraError
from nestfold.utils.exceptions import MissingCaseError
from nestfold.utils.exceptions import NativeFunctionError
from nestfold.utils.exceptions import ValueSyntaxError
from nestfold.utils.exceptions import ValueTypeError

BUSH_IDENTITY = Algebra.of([("base", Native("id")), ("nil", Replace("NilB")), ("cons", Replace("ConsB"))])
SUM_D = Algebra.of(
    [
        ("varA", Native("id")),
        ("varB", Native("id")),
        ("bnil", Const(nat(0))),
        ("bcons", Native("add")),
        ("acons", Native("add")),
        ("zero", Const(nat(0))),
        ("succ", Native("add")),
    ],
)


def succ(v):
    return nat(as_int(v) + 1)


def plus_two(v):
    return nat(as_int(v) + 2)


class EvalFoldTest(SimpleTestCase):
    def test_identity_algebra(self):
        """Test that the self-constructor algebra rebuilds bush1."""
        bush1 = literal("bush1")
        self.assertEqual(eval_fold(fold_b(), BUSH_IDENTITY, ONE, bush1), bush1)

    def test_fold_d_sum(self):
        """Test foldD with the summing algebra on a small D value."""
        v = con("DCons", nat(1), nat(2), con("DNil"), con("DNil"))
        self.assertEqual(eval_fold(fold_d(), SUM_D, d_index(), v), nat(3))

    def test_missing_case(self):
        """Test that an algebra must cover every case."""
        with self.assertRaises(MissingCaseError):
            eval_fold(fold_b(), Algebra.of([("nil", Const(nat(0)))]), ONE, con("NilB"))
        extra = Algebra.of([*BUSH_IDENTITY.cases.items(), ("leaf", Const(nat(0)))])
        with self.assertRaises(AlgebraError):
            eval_fold(fold_b(), extra, ONE, con("NilB"))

    def test_native_failure_is_wrapped(self):
        """Test that an exception inside a native is reported with its case."""

        def broken(ctx):
            return 1 // 0

        algebra = Algebra.of([("base", Native("broken")), ("nil", Const(nat(0))), ("cons", Native("add"))])
        with self.assertRaises(NativeFunctionError) as ctx:
            eval_fold(fold_b(), algebra, ONE, con("ConsB", nat(1), con("NilB")), {"broken": broken})
        self.assertIn("foldB.base", str(ctx.exception))
        with self.assertRaises(NativeFunctionError):
            eval_fold(fold_b(), algebra, ONE, con("ConsB", nat(1), con("NilB")))

    def test_no_case_matches(self):
        """Test that a value of another family is refused."""
        with self.assertRaises(ValueTypeError):
            eval_fold(fold_b(), BUSH_IDENTITY, ONE, con("Nil"))

    def test_hofold_identity(self):
        """Test the higher-order fold with constructor replacement."""
        spec = derive_hofold(fold_b())
        bush1 = literal("bush1")
        self.assertEqual(eval_hofold(spec, {"nil": Replace("NilB"), "cons": Replace("ConsB")}, bush1), bush1)


class EvalMapTest(SimpleTestCase):
    def test_map_bush(self):
        """Test mapB 1 (+1) on a one-element bush."""
        v = con("ConsB", nat(5), con("NilB"))
        self.assertEqual(eval_map(fold_b(), {"a": succ}, ONE, v), con("ConsB", nat(6), con("NilB")))

    def test_map_d_top(self):
        """Test mapD' (+1) (+2) on a small D value."""
        v = con("DCons", nat(1), nat(2), con("DNil"), con("DNil"))
        expected = con("DCons", nat(2), nat(4), con("DNil"), con("DNil"))
        self.assertEqual(eval_map(fold_d(), {"a": succ, "b": plus_two}, d_index(), v), expected)

    def test_map_identity_on_enumerated_bushes(self):
        """Test that mapping the identity changes nothing."""
        for n in range(3):
            for v in enumerate_values(nbush(), nat_index(n), Carriers.of(a=nats(2)), 6):
                self.assertEqual(eval_map(fold_b(), {}, nat_index(n), v), v)

    def test_map_reaches_variables_through_incr(self):
        """Test that the Term map applies f inside the variable's Incr value."""
        t = parse_value("Lam[App[Var[Zero], Var[Succ['x']]]]")
        expected = parse_value("Lam[App[Var[Zero], Var[Succ['y']]]]")
        self.assertEqual(eval_map(fold_t(), {"a": lambda c: char("y")}, nat_index(0), t), expected)


class DescentAuditTest(SimpleTestCase):
    def test_sum_bush_descends(self):
        """Test that every recursive call of sumB targets a component."""
        with recording() as trace:
            fn.sum_bush(literal("bush1"))
        self.assertGreater(len(trace), 0)
        report = descent_audit(trace)
        self.assertTrue(report.ok)
        self.assertEqual(report.checked, len(trace))

    def test_subst_e_descends(self):
        """Test the audit over redexE on the printed redex."""
        with recording() as trace:
            fn.redex_terme(literal("redex0"))
        self.assertTrue(descent_audit(trace).ok)

    def test_empty_trace(self):
        """Test that an empty trace passes."""
        self.assertTrue(descent_audit(EvalTrace()).ok)

    def test_violation_is_reported(self):
        """Test that a recorded call on a non-component is a violation."""
        trace = EvalTrace()
        trace.record(con("NilB"), ONE, con("NilB"))
        report = descent_audit(trace)
        self.assertFalse(report.ok)
        self.assertEqual(len(report.violations), 1)

    def test_recording_is_scoped(self):
        """Test that nothing is recorded outside the block."""
        with recording() as trace:
            pass
        fn.sum_bush(literal("bush1"))
        self.assertEqual(len(trace), 0)


@pytest.mark.parametrize(
    ("value", "size"),
    [
        (nat(4), 1),
        (con("NilB"), 1),
        (con("ConsB", nat(5), con("NilB")), 3),
    ],
)
def test_value_size(value, size):
    assert value_size(value) == size


def test_value_eq():
    bush1 = literal("bush1")
    assert value_eq(bush1, parse_value(format_value(bush1)))
    assert not value_eq(con("NilB"), con("ConsB", nat(0), con("NilB")))


@pytest.mark.parametrize(
    ("source", "expected"),
    [
        ("ConsB[4, NilB]", con("ConsB", nat(4), con("NilB"))),
        ("'W'", char("W")),
        ('"Ze"', text("Ze")),
        ("NilB[]", Con("NilB")),
    ],
)
def test_parse_value(source, expected):
    assert parse_value(source) == expected


def test_parse_index():
    assert parse_index("3") == nat_index(3)
    assert format_index(parse_index("IsD(IsI(VarA), VarB)")) == "IsD(IsI(VarA), VarB)"


def test_bad_literals():
    with pytest.raises(ValueSyntaxError):
        parse_value("ConsB[4,")
    with pytest.raises(ValueSyntaxError):
        parse_index("IsD(")
    with pytest.raises(ValueSyntaxError):
        value_from_json([1, 2])


def test_json_mirror():
    term2 = literal("term2")
    assert value_from_json(value_to_json(term2)) == term2
    assert value_to_json(text("Ze")) == {"text": "Ze"}
