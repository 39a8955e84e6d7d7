import pytest
from django.test import SimpleTestCase
from django.test import override_settings

from nestfold.check.models import Bounds
from nestfold.check.models import CheckCase
from nestfold.check.models import Property
from nestfold.check.services.properties import property_registry
from nestfold.check.services.runner import audit_termination
from nestfold.check.services.runner import check_property
from nestfold.check.services.runner import run_property
from nestfold.check.services.runner import run_suite
from nestfold.corpus.services.families import ONE
from nestfold.corpus.services.families import fold_b
from nestfold.corpus.services.families import nbush
from nestfold.interp.algebra import Algebra
from nestfold.interp.algebra import Const
from nestfold.interp.algebra import Native
from nestfold.interp.carriers import Carriers
from nestfold.interp.carriers import nats
from nestfold.interp.services.enumeration import enumerate_values
from nestfold.interp.services.evaluator import eval_fold
from nestfold.interp.values import as_int
from nestfold.interp.values import nat
from nestfold.utils.enums import CheckStatus
from nestfold.utils.enums import ProfileName
from nestfold.utils.exceptions import EmptyCarrierError
from nestfold.utils.exceptions import UnknownPropertyError

TINY = Bounds(
    max_size_bush=3,
    max_size_term=3,
    max_size_d=3,
    max_index=1,
    max_index_d=0,
    nat_limit=2,
    pair_size=2,
    alphabet=("W", "x"),
)


def monus(ctx):
    left, right = (as_int(r) for r in ctx.results)
    return nat(max(left - right, 0))


def flipped_monus(ctx):
    left, right = (as_int(r) for r in ctx.results)
    return nat(max(right - left, 0))


def fold_with(cons_key):
    algebra = Algebra.of([("base", Native("id")), ("nil", Const(nat(0))), ("cons", Native(cons_key))])
    natives = {"monus": monus, "flipped_monus": flipped_monus}
    return lambda v: eval_fold(fold_b(), algebra, ONE, v, natives)


def bushes_at_one(bounds):
    for v in enumerate_values(nbush(), ONE, Carriers.of(a=nats(bounds.nat_limit)), bounds.max_size_bush):
        yield CheckCase.of(v=v)


SWAPPED_ARGUMENTS = Property(
    "swapped_monus",
    "a non-commutative cons algebra against its flipped twin",
    bushes_at_one,
    fold_with("monus"),
    fold_with("flipped_monus"),
)


class BoundsTest(SimpleTestCase):
    def test_fast_halves_default(self):
        """Test that the fast profile halves sizes and indexes with a floor of one."""
        default = Bounds.for_profile(ProfileName.DEFAULT)
        fast = Bounds.for_profile(ProfileName.FAST)
        self.assertEqual(fast.max_size_bush, default.max_size_bush // 2)
        self.assertEqual(fast.max_index, max(1, default.max_index // 2))
        self.assertEqual(fast.nat_limit, default.nat_limit)
        self.assertEqual(fast.profile, ProfileName.FAST)

    def test_thorough_is_larger(self):
        """Test that the thorough profile raises every size."""
        default = Bounds.for_profile(ProfileName.DEFAULT)
        thorough = Bounds.for_profile(ProfileName.THOROUGH)
        self.assertGreater(thorough.max_size_term, default.max_size_term)

    @override_settings(NESTFOLD_PROFILE="default", NESTFOLD_SEED=7)
    def test_profile_and_seed_come_from_settings(self):
        """Test that the settings pick the profile and seed."""
        bounds = Bounds.for_profile()
        self.assertEqual(bounds.profile, ProfileName.DEFAULT)
        self.assertEqual(bounds.seed, 7)

    def test_overrides(self):
        """Test that --max-size applies to every family and --max-index caps D."""
        bounds = Bounds().with_overrides(max_size=5, max_index=1, seed=3)
        self.assertEqual((bounds.max_size_bush, bounds.max_size_term, bounds.max_size_d), (5, 5, 5))
        self.assertEqual((bounds.max_index, bounds.max_index_d, bounds.seed), (1, 1, 3))

    def test_empty_domain_is_rejected(self):
        """Test that an empty carrier or a zero size bound is a precondition error."""
        with self.assertRaises(EmptyCarrierError):
            Bounds(nat_limit=0).validated()
        with self.assertRaises(EmptyCarrierError):
            Bounds(alphabet=()).validated()
        with self.assertRaises(EmptyCarrierError):
            Bounds().with_overrides(max_size=0)


class CheckPropertyTest(SimpleTestCase):
    def test_map_identity_passes(self):
        """Test the identity map law on bushes up to index 3 and size 6."""
        bounds = Bounds(max_size_bush=6, max_size_term=3, max_size_d=3, max_index=3, max_index_d=1)
        report = run_property("map_identity", bounds)
        self.assertEqual(report.status, CheckStatus.PASS)
        self.assertGreater(report.cases, 0)
        self.assertIsNone(report.counterexample)

    def test_mutation_gives_minimal_counterexample(self):
        """Test that a non-commutative algebra is caught at the smallest failing bush."""
        report = check_property(SWAPPED_ARGUMENTS, Bounds(max_size_bush=6, nat_limit=3))
        self.assertEqual(report.status, CheckStatus.FAIL)
        self.assertEqual(report.cases, 3)
        self.assertEqual(report.counterexample.inputs, {"v": "ConsB[1, NilB]"})
        self.assertEqual((report.counterexample.left, report.counterexample.right), ("1", "0"))

    def test_evaluation_error_is_a_failed_case(self):
        """Test that an exception while evaluating is reported, not raised."""

        def explode(v):
            return 1 // 0

        prop = Property("explodes", "1 // 0 == v", bushes_at_one, explode, lambda v: v)
        report = check_property(prop, TINY)
        self.assertFalse(report.passed)
        self.assertIn("ZeroDivisionError", report.counterexample.error)
        self.assertIn("error", report.as_json()["counterexample"])

    def test_unknown_property(self):
        """Test that an unregistered name is refused."""
        with self.assertRaises(UnknownPropertyError):
            run_property("no_such_law", TINY)

    def test_spotcheck_is_labelled(self):
        """Test that the uniqueness check says it is a spot-check."""
        report = run_property("uniqueness_spotcheck", TINY)
        self.assertTrue(report.as_json()["spotcheck"])
        self.assertIn("spot-check", report.summary())


class SuiteTest(SimpleTestCase):
    def test_suite_reports_every_property(self):
        """Test that the suite runs the whole registry and passes at tiny bounds."""
        reports = run_suite(bounds=TINY)
        self.assertEqual([r.property for r in reports], list(property_registry()))
        failed = [r.summary() for r in reports if not r.passed]
        self.assertEqual(failed, [])

    def test_reports_are_deterministic(self):
        """Test that equal bounds give identical reports apart from timing."""
        names = ["value_eq_agreement", "sum_consistency", "beta_law_terme"]
        first = [r.as_json() for r in run_suite(bounds=TINY, names=names)]
        second = [r.as_json() for r in run_suite(bounds=TINY, names=names)]
        self.assertEqual(first, second)
        self.assertNotIn("seconds", first[0])

    def test_termination_audit(self):
        """Test that every recursive call made by the checked folds descends."""
        report = audit_termination(bounds=TINY, names=["sum_consistency", "beta_law_term", "hofold_identity"])
        self.assertTrue(report.ok)
        self.assertGreater(report.checked, 0)

    def test_empty_audit(self):
        """Test that auditing no properties passes."""
        self.assertTrue(audit_termination(bounds=TINY, names=[]).ok)


@pytest.mark.parametrize(
    "name",
    [
        "beta_law_term",
        "beta_var_term",
        "map_fuse",
        "map_subst_commute",
        "lemm_m",
        "beta_law_terme",
        "lemm_var",
        "cvt_subst_commute",
        "hfold_cons",
        "add_map",
        "roundtrip_indexed",
        "map_incr_open_closed",
    ],
)
def test_laws_hold_on_the_fast_profile(name):
    report = run_property(name, Bounds.for_profile(ProfileName.FAST))
    assert report.passed, report.summary()
    assert report.cases > 0
