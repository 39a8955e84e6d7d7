"""
Service for the property registry.

Each property states an equality between two evaluations and enumerates its
domain: indexes shallow first, values size-ascending, leaf functions and other
small inputs innermost. The first failing case is therefore a smallest one at
its index.
"""
from __future__ import annotations

import logging
import random
from collections.abc import Callable
from collections.abc import Iterable
from collections.abc import Iterator
from dataclasses import dataclass
from functools import cache
from operator import attrgetter
from typing import Any

from nestfold.check.models import Bounds
from nestfold.check.models import CheckCase
from nestfold.check.models import Property
from nestfold.corpus.services import functions as fn
from nestfold.corpus.services.families import ONE
from nestfold.corpus.services.families import bush_n
from nestfold.corpus.services.families import fold_b
from nestfold.corpus.services.families import fold_d
from nestfold.corpus.services.families import fold_e
from nestfold.corpus.services.families import fold_i
from nestfold.corpus.services.families import fold_list
from nestfold.corpus.services.families import fold_t
from nestfold.corpus.services.families import list_point
from nestfold.corpus.services.families import nbush
from nestfold.corpus.services.natives import CHAR_FAMILY
from nestfold.corpus.services.natives import NAT_FAMILY
from nestfold.corpus.services.natives import LeafFn
from nestfold.corpus.services.natives import leaf_function
from nestfold.corpus.services.natives import wrap_succ
from nestfold.corpus.services.reference import deep_equal
from nestfold.corpus.services.reference import map_list_ref
from nestfold.corpus.services.reference import reference_hfold_bush
from nestfold.corpus.services.reference import reference_hmap_bush
from nestfold.corpus.services.reference import reference_map_incr
from nestfold.corpus.services.reference import reference_sum
from nestfold.corpus.services.registry import COUNT_NATIVES
from nestfold.corpus.services.registry import HFOLD_BUSH_ALGEBRAS
from nestfold.derive.artifacts import FoldSpec
from nestfold.derive.artifacts import HOFoldSpec
from nestfold.derive.artifacts import IndexExpr
from nestfold.derive.artifacts import nat_index
from nestfold.derive.services.hofold import derive_hofold
from nestfold.interp.algebra import Algebra
from nestfold.interp.algebra import AlgebraTarget
from nestfold.interp.algebra import Native
from nestfold.interp.algebra import Replace
from nestfold.interp.carriers import Carriers
from nestfold.interp.carriers import nats
from nestfold.interp.services.enumeration import enumerate_indexed_values
from nestfold.interp.services.enumeration import enumerate_values
from nestfold.interp.services.evaluator import eval_fold
from nestfold.interp.services.evaluator import eval_hofold
from nestfold.interp.services.evaluator import eval_map
from nestfold.interp.services.literals import format_value
from nestfold.interp.services.literals import parse_value
from nestfold.interp.services.typing import check_value_expanded
from nestfold.interp.services.typing import conforms
from nestfold.interp.values import Con
from nestfold.interp.values import Value
from nestfold.interp.values import as_int
from nestfold.interp.values import con
from nestfold.interp.values import nat
from nestfold.interp.values import value_eq
from nestfold.utils.enums import Direction
from nestfold.utils.exceptions import UnknownPropertyError

logger = logging.getLogger(__name__)

# mapIncr is checked exhaustively up to this depth, whatever the profile.
INCR_DEPTH = 6
VALUE_EQ_SAMPLES = 200
NIL_B = con("NilB")


# =============================================================================
# Domains
# =============================================================================


def nat_indexes(bounds: Bounds) -> list[IndexExpr]:
    return [nat_index(n) for n in range(bounds.max_index + 1)]


def d_indexes(bounds: Bounds) -> list[IndexExpr]:
    return list(fold_d().index_type.enumerate(bounds.max_index_d))


@dataclass(frozen=True)
class Domain:
    """A fold together with the indexes, carriers and size bound it is checked over."""

    name: str
    fold: Callable[[], FoldSpec]
    indexes: Callable[[Bounds], Iterable[IndexExpr]]
    carriers: Callable[[Bounds], Carriers]
    size: Callable[[Bounds], int]
    leaf_family: tuple[str, ...]

    def values(self, bounds: Bounds, i: IndexExpr, size: int | None = None) -> Iterator[Value]:
        return enumerate_values(self.fold().family, i, self.carriers(bounds), size or self.size(bounds))

    def map(self, i: IndexExpr, f: LeafFn, v: Value) -> Value:
        """The generic map with f on every carrier parameter."""
        spec = self.fold()
        return eval_map(spec, {p: f for p in spec.params}, i, v)


DOMAINS: dict[str, Domain] = {
    "bush": Domain("bush", fold_b, nat_indexes, Bounds.nat_carriers, attrgetter("max_size_bush"), NAT_FAMILY),
    "incr": Domain("incr", fold_i, nat_indexes, Bounds.char_carriers, attrgetter("max_size_term"), CHAR_FAMILY),
    "term": Domain("term", fold_t, nat_indexes, Bounds.char_carriers, attrgetter("max_size_term"), CHAR_FAMILY),
    "terme": Domain("terme", fold_e, nat_indexes, Bounds.char_carriers, attrgetter("max_size_term"), CHAR_FAMILY),
    "d": Domain(
        "d",
        fold_d,
        d_indexes,
        lambda bounds: bounds.nat_carriers("a", "b"),
        attrgetter("max_size_d"),
        NAT_FAMILY,
    ),
    "list": Domain(
        "list",
        fold_list,
        lambda bounds: [list_point()],
        Bounds.nat_carriers,
        attrgetter("max_size_bush"),
        NAT_FAMILY,
    ),
}
MAP_DOMAINS = ("bush", "term", "terme", "d")


def compose(f: LeafFn, g: LeafFn) -> LeafFn:
    return lambda x: f(g(x))


def self_algebra(spec: FoldSpec) -> Algebra:
    """Every case rebuilds its own constructor; leaves stay put."""
    return Algebra.of((case.name, Native("id") if case.is_leaf else Replace(case.tag or "")) for case in spec.cases)


def self_hofold_algebra(spec: HOFoldSpec) -> dict[str, AlgebraTarget]:
    return {arg.name: Replace(arg.constructor) for arg in spec.args}


def _sub_size(bounds: Bounds) -> int:
    return max(1, bounds.max_size_term - 2)


def _term_values(bounds: Bounds, n: int, size: int | None = None) -> Iterator[Value]:
    return DOMAINS["term"].values(bounds, nat_index(n), size)


def _terme_values(bounds: Bounds, n: int, size: int | None = None) -> Iterator[Value]:
    return DOMAINS["terme"].values(bounds, nat_index(n), size)


def _alphabet(bounds: Bounds) -> tuple[Value, ...]:
    return bounds.char_carriers().values("a")


# =============================================================================
# Map laws
# =============================================================================


def map_identity_cases(bounds: Bounds) -> Iterator[CheckCase]:
    for family in MAP_DOMAINS:
        domain = DOMAINS[family]
        for i in domain.indexes(bounds):
            for v in domain.values(bounds, i):
                yield CheckCase.of(family=family, i=i, v=v)


def map_compose_cases(bounds: Bounds) -> Iterator[CheckCase]:
    for family in MAP_DOMAINS:
        domain = DOMAINS[family]
        for i in domain.indexes(bounds):
            for v in domain.values(bounds, i):
                for f in domain.leaf_family:
                    for g in domain.leaf_family:
                        yield CheckCase.of(family=family, i=i, f=f, g=g, v=v)


def map_composed(family: str, i: IndexExpr, f: str, g: str, v: Value) -> Value:
    return DOMAINS[family].map(i, compose(leaf_function(f), leaf_function(g)), v)


def map_twice(family: str, i: IndexExpr, f: str, g: str, v: Value) -> Value:
    domain = DOMAINS[family]
    return domain.map(i, leaf_function(f), domain.map(i, leaf_function(g), v))


def map_nil_cases(bounds: Bounds) -> Iterator[CheckCase]:
    for n in range(bounds.max_index):
        for f in NAT_FAMILY:
            yield CheckCase.of(n=n, f=f)


def map_cons_cases(bounds: Bounds) -> Iterator[CheckCase]:
    for n in range(bounds.max_index):
        for v in DOMAINS["bush"].values(bounds, nat_index(n + 1)):
            if isinstance(v, Con) and v.tag == "ConsB":
                for f in NAT_FAMILY:
                    yield CheckCase.of(n=n, f=f, v=v)


def map_cons_split(n: int, f: str, v: Con) -> Value:
    x, xs = v.children
    g = leaf_function(f)
    return con("ConsB", fn.map_bush(n, g, x), fn.map_bush(n + 2, g, xs))


def add_map_cases(bounds: Bounds) -> Iterator[CheckCase]:
    for total in range(bounds.max_index + 1):
        for x in DOMAINS["bush"].values(bounds, nat_index(total)):
            for n in range(total + 1):
                for f in NAT_FAMILY:
                    yield CheckCase.of(n=n, m=total - n, f=f, x=x)


def map_nested(n: int, m: int, f: str, x: Value) -> Value:
    g = leaf_function(f)
    return fn.map_bush(n, lambda y: fn.map_bush(m, g, y), x)


# =============================================================================
# Higher-order folds
# =============================================================================

type Step = Callable[[Any, Any], Any]

# The recursive reading of each selectable hfoldB algebra: (nil, cons).
HFOLD_BUSH_REFERENCE: dict[str, tuple[Any, Step]] = {
    "constructors": (NIL_B, lambda x, r: con("ConsB", x, r)),
    "count": (nat(0), lambda x, r: nat(as_int(r) + 1)),
}


def hfold_by_name(algebra: str) -> Callable[[Value], Any]:
    return lambda v: fn.hfold_bush(HFOLD_BUSH_ALGEBRAS[algebra], v, COUNT_NATIVES)


def reference_hfold_by_name(algebra: str) -> Callable[[Value], Any]:
    base, step = HFOLD_BUSH_REFERENCE[algebra]
    return lambda v: reference_hfold_bush(base, step, v)


def hfold_nil_cases(bounds: Bounds) -> Iterator[CheckCase]:
    for algebra in HFOLD_BUSH_ALGEBRAS:
        yield CheckCase.of(algebra=algebra)


def hfold_cons_cases(bounds: Bounds) -> Iterator[CheckCase]:
    for v in DOMAINS["bush"].values(bounds, ONE):
        if isinstance(v, Con) and v.tag == "ConsB":
            for algebra in HFOLD_BUSH_ALGEBRAS:
                yield CheckCase.of(algebra=algebra, v=v)


def hfold_cons_unfolded(algebra: str, v: Con) -> Any:
    """cons x (hfoldB nil cons (hmapB (hfoldB nil cons) xs))."""
    x, xs = v.children
    hfold = hfold_by_name(algebra)
    _, step = HFOLD_BUSH_REFERENCE[algebra]
    return step(x, hfold(reference_hmap_bush(hfold, xs)))


def lift_cases(bounds: Bounds) -> Iterator[CheckCase]:
    for n in range(1, bounds.max_index + 1):
        for x in DOMAINS["bush"].values(bounds, nat_index(n)):
            for algebra in HFOLD_BUSH_ALGEBRAS:
                yield CheckCase.of(n=n, algebra=algebra, x=x)


@cache
def hofold_identity_table() -> tuple[tuple[str, HOFoldSpec], ...]:
    return (
        ("bush", fn.hofold_b()),
        ("term", derive_hofold(fold_t())),
        ("terme", fn.hofold_e()),
        ("d", derive_hofold(fold_d())),
    )


def hofold_identity_cases(bounds: Bounds) -> Iterator[CheckCase]:
    for family, spec in hofold_identity_table():
        for v in DOMAINS[family].values(bounds, spec.root_index):
            yield CheckCase.of(family=family, v=v)


def hofold_self(family: str, v: Value) -> Any:
    spec = dict(hofold_identity_table())[family]
    return eval_hofold(spec, self_hofold_algebra(spec), v)


# =============================================================================
# Indexed representation
# =============================================================================


def roundtrip_cases(bounds: Bounds) -> Iterator[CheckCase]:
    carriers = bounds.nat_carriers()
    for i in nat_indexes(bounds):
        for v in DOMAINS["bush"].values(bounds, i):
            yield CheckCase.of(direction="fromTo", i=i, v=v)
        for w in enumerate_indexed_values(bush_n(), i, carriers, bounds.max_size_bush):
            yield CheckCase.of(direction="toFrom", i=i, v=w)


def roundtrip(direction: str, i: IndexExpr, v: Value) -> Value:
    first, second = (Direction.TO, Direction.FROM) if direction == "fromTo" else (Direction.FROM, Direction.TO)
    return fn.convert_indexed(second, i, fn.convert_indexed(first, i, v))


# =============================================================================
# Terms
# =============================================================================


def beta_term_cases(bounds: Bounds) -> Iterator[CheckCase]:
    for t in _term_values(bounds, 0):
        for x in _alphabet(bounds):
            yield CheckCase.of(x=x, t=t)


def beta_term(x: Value, t: Value) -> Value:
    return fn.redex_term(con("App", fn.abst_term(x, t), con("Var", x)))


def beta_var_term_cases(bounds: Bounds) -> Iterator[CheckCase]:
    for m in range(bounds.max_index + 1):
        for v in DOMAINS["incr"].values(bounds, nat_index(m)):
            for x in _alphabet(bounds):
                yield CheckCase.of(m=m, x=x, v=v)


def subst_matched_var(m: int, x: Value, v: Value) -> Value:
    """subst m (Var x) (mapT m (match x) (Var v))."""
    return fn.subst_term(m, con("Var", x), fn.map_term(m, fn.match_var(x), con("Var", v)))


def map_fuse_cases(bounds: Bounds) -> Iterator[CheckCase]:
    for total in range(bounds.max_index + 1):
        for s in _term_values(bounds, total):
            for m in range(total + 1):
                yield CheckCase.of(m=m, n=total - m, s=s)


def fuse_free_first(m: int, n: int, s: Value) -> Value:
    return fn.map_term(m + n + 1, wrap_succ, fn.map_term(m, wrap_succ, s))


def fuse_open_first(m: int, n: int, s: Value) -> Value:
    return fn.map_term(m, wrap_succ, fn.map_term(m + n, wrap_succ, s))


def map_subst_cases(bounds: Bounds) -> Iterator[CheckCase]:
    for total in range(bounds.max_index + 1):
        for t in _term_values(bounds, total + 1):
            for s in _term_values(bounds, 0, bounds.pair_size):
                for n in range(total + 1):
                    yield CheckCase.of(n=n, m=total - n, s=s, t=t)


def map_after_subst(n: int, m: int, s: Value, t: Value) -> Value:
    return fn.map_term(n, wrap_succ, fn.subst_term(n + m, s, t))


def subst_after_map(n: int, m: int, s: Value, t: Value) -> Value:
    return fn.subst_term(n + m + 1, s, fn.map_term(n, wrap_succ, t))


def lemm_m_cases(bounds: Bounds) -> Iterator[CheckCase]:
    for m in range(bounds.max_index + 1):
        for t in _term_values(bounds, m):
            for s in _term_values(bounds, 0, bounds.pair_size):
                yield CheckCase.of(m=m, s=s, t=t)


def subst_after_shift(m: int, s: Value, t: Value) -> Value:
    return fn.subst_term(m, s, fn.map_term(m, wrap_succ, t))


# =============================================================================
# Terms with explicit substitutions
# =============================================================================


def beta_terme_cases(bounds: Bounds) -> Iterator[CheckCase]:
    for t in _terme_values(bounds, 0):
        for x in _alphabet(bounds):
            yield CheckCase.of(x=x, t=t)


def beta_terme(x: Value, t: Value) -> Value:
    return fn.redex_terme(con("AppE", fn.abst_terme(x, t), con("VarE", x)))


def beta_var_terme_cases(bounds: Bounds) -> Iterator[CheckCase]:
    for x in _alphabet(bounds):
        for y in _alphabet(bounds):
            yield CheckCase.of(x=x, y=y)


def subst_matched_var_e(x: Value, y: Value) -> Value:
    return fn.subst_terme(0, con("VarE", x), fn.map_terme(0, fn.match_var_e(x), con("VarE", y)))


def lemm_var_cases(bounds: Bounds) -> Iterator[CheckCase]:
    small = list(_terme_values(bounds, 0, bounds.pair_size))
    variables = [con("Zero"), *(con("Succ", t) for t in small)]
    for x in variables:
        for s in small:
            yield CheckCase.of(x=x, s=s)


def cvt_subst_var(x: Value, s: Value) -> Value:
    return fn.cvt_terme(0, fn.subst_terme(0, s, con("VarE", x)))


def subst_cvt_var(x: Value, s: Value) -> Value:
    return fn.subst_term(0, fn.cvt_terme(0, s), fn.cvt_terme(1, con("VarE", x)))


def cvt_subst_cases(bounds: Bounds) -> Iterator[CheckCase]:
    for n in range(bounds.max_index):
        for t in _terme_values(bounds, n + 1, _sub_size(bounds)):
            for s in _terme_values(bounds, 0, bounds.pair_size):
                yield CheckCase.of(n=n, s=s, t=t)


def cvt_after_subst(n: int, s: Value, t: Value) -> Value:
    return fn.cvt_terme(n, fn.subst_terme(n, s, t))


def subst_after_cvt(n: int, s: Value, t: Value) -> Value:
    return fn.subst_term(n, fn.cvt_terme(0, s), fn.cvt_terme(n + 1, t))


# =============================================================================
# Folds, lists and the checker itself
# =============================================================================


def bush_cases(bounds: Bounds) -> Iterator[CheckCase]:
    for v in DOMAINS["bush"].values(bounds, ONE):
        yield CheckCase.of(v=v)


def fold_identity_cases(bounds: Bounds) -> Iterator[CheckCase]:
    for family, domain in DOMAINS.items():
        for i in domain.indexes(bounds):
            for v in domain.values(bounds, i):
                yield CheckCase.of(family=family, i=i, v=v)


def fold_self(family: str, i: IndexExpr, v: Value) -> Value:
    spec = DOMAINS[family].fold()
    return eval_fold(spec, self_algebra(spec), i, v)


def map_incr_cases(bounds: Bounds) -> Iterator[CheckCase]:
    for n in range(INCR_DEPTH + 1):
        for v in DOMAINS["incr"].values(bounds, nat_index(n), n + 1):
            for level in range(n + 1):
                # below the carrier depth f receives Incr values, so only the constructor-generic ones fit
                for f in ("Succ", *CHAR_FAMILY) if level == n else ("id", "Succ"):
                    yield CheckCase.of(n=n, level=level, f=f, v=v)


def list_map_cases(bounds: Bounds) -> Iterator[CheckCase]:
    for v in DOMAINS["list"].values(bounds, list_point()):
        for f in NAT_FAMILY:
            yield CheckCase.of(f=f, v=v)


def check_agreement_cases(bounds: Bounds) -> Iterator[CheckCase]:
    for i in nat_indexes(bounds):
        for v in DOMAINS["bush"].values(bounds, i):
            for n in range(bounds.max_index + 1):
                yield CheckCase.of(limit=bounds.nat_limit, n=n, v=v)


def value_eq_cases(bounds: Bounds) -> Iterator[CheckCase]:
    pool = [v for i in nat_indexes(bounds) for v in DOMAINS["bush"].values(bounds, i)]
    if not pool:
        return
    rng = random.Random(bounds.seed)
    for _ in range(VALUE_EQ_SAMPLES):
        u = rng.choice(pool)
        v = parse_value(format_value(u)) if rng.random() < 0.5 else rng.choice(pool)
        yield CheckCase.of(u=u, v=v)


# =============================================================================
# Registry
# =============================================================================


def _properties() -> list[Property]:
    return [
        Property(
            "map_identity",
            "map n id y == y (Bush, Term, TermE, D/I)",
            map_identity_cases,
            lambda family, i, v: DOMAINS[family].map(i, leaf_function("id"), v),
            lambda family, i, v: v,
            topic="maps",
        ),
        Property(
            "map_compose",
            "map n (f . g) x == map n f (map n g x)",
            map_compose_cases,
            map_composed,
            map_twice,
            topic="maps",
        ),
        Property(
            "map_nil",
            "mapB (S n) f NilB == NilB",
            map_nil_cases,
            lambda n, f: fn.map_bush(n + 1, leaf_function(f), NIL_B),
            lambda n, f: NIL_B,
            topic="maps",
        ),
        Property(
            "map_cons",
            "mapB (S n) f (ConsB x xs) == ConsB (mapB n f x) (mapB (S (S n)) f xs)",
            map_cons_cases,
            lambda n, f, v: fn.map_bush(n + 1, leaf_function(f), v),
            map_cons_split,
            topic="maps",
        ),
        Property(
            "add_map",
            "mapB (n + m) f x == mapB n (mapB m f) x",
            add_map_cases,
            lambda n, m, f, x: fn.map_bush(n + m, leaf_function(f), x),
            map_nested,
            topic="maps",
        ),
        Property(
            "hfold_nil",
            "hfoldB nil cons NilB == nil",
            hfold_nil_cases,
            lambda algebra: hfold_by_name(algebra)(NIL_B),
            lambda algebra: HFOLD_BUSH_REFERENCE[algebra][0],
            topic="higher-order folds",
        ),
        Property(
            "hfold_cons",
            "hfoldB nil cons (ConsB x xs) == cons x (hfoldB nil cons (hmapB (hfoldB nil cons) xs))",
            hfold_cons_cases,
            lambda algebra, v: hfold_by_name(algebra)(v),
            hfold_cons_unfolded,
            topic="higher-order folds",
        ),
        Property(
            "uniqueness_spotcheck",
            "lift n hfoldB == lift n (general-recursive hfoldB) on every enumerated bush",
            lift_cases,
            lambda n, algebra, x: fn.lift_bush(n, hfold_by_name(algebra), x),
            lambda n, algebra, x: fn.lift_bush(n, reference_hfold_by_name(algebra), x),
            topic="higher-order folds",
            spotcheck=True,
        ),
        Property(
            "roundtrip_indexed",
            "from (to v) == v and to (from w) == w between NBush and BushN",
            roundtrip_cases,
            roundtrip,
            lambda direction, i, v: v,
            topic="indexed representation",
        ),
        Property(
            "beta_law_term",
            "redex (App (abst x t) (Var x)) == t",
            beta_term_cases,
            beta_term,
            lambda x, t: t,
            topic="terms",
        ),
        Property(
            "beta_var_term",
            "subst m (Var x) (mapT m (match x) (Var v)) == Var v, split on cmp x v at m = 0",
            beta_var_term_cases,
            subst_matched_var,
            lambda m, x, v: con("Var", v),
            topic="terms",
        ),
        Property(
            "map_fuse",
            "mapT (S (m + n)) Succ (mapT m Succ s) == mapT m Succ (mapT (m + n) Succ s)",
            map_fuse_cases,
            fuse_free_first,
            fuse_open_first,
            topic="terms",
        ),
        Property(
            "map_subst_commute",
            "mapT n Succ (subst (n + m) s t) == subst (S (n + m)) s (mapT n Succ t)",
            map_subst_cases,
            map_after_subst,
            subst_after_map,
            topic="terms",
        ),
        Property(
            "lemm_m",
            "t == subst m s (mapT m Succ t)",
            lemm_m_cases,
            lambda m, s, t: t,
            subst_after_shift,
            topic="terms",
        ),
        Property(
            "beta_law_terme",
            "redexE (AppE (abstE x t) (VarE x)) == t",
            beta_terme_cases,
            beta_terme,
            lambda x, t: t,
            topic="explicit substitutions",
        ),
        Property(
            "beta_var_terme",
            "substE 0 (VarE x) (mapE 0 (matchE x) (VarE y)) == VarE y",
            beta_var_terme_cases,
            subst_matched_var_e,
            lambda x, y: con("VarE", y),
            topic="explicit substitutions",
        ),
        Property(
            "lemm_var",
            "cvtE 0 (substE 0 s (VarE x)) == subst 0 (cvtE 0 s) (cvtE 1 (VarE x))",
            lemm_var_cases,
            cvt_subst_var,
            subst_cvt_var,
            topic="explicit substitutions",
        ),
        Property(
            "cvt_subst_commute",
            "cvtE n (substE n s t) == subst n (cvtE 0 s) (cvtE (S n) t)",
            cvt_subst_cases,
            cvt_after_subst,
            subst_after_cvt,
            topic="explicit substitutions",
        ),
        Property(
            "sum_consistency",
            "(sumB v, sumB' v) == (sum of flatten v, sum of flatten v)",
            bush_cases,
            lambda v: (fn.sum_bush(v), fn.sum_aux(v)),
            lambda v: (reference_sum(v), reference_sum(v)),
            topic="folds",
        ),
        Property(
            "fold_identity",
            "the self-constructor algebra rebuilds every value",
            fold_identity_cases,
            fold_self,
            lambda family, i, v: v,
            topic="folds",
        ),
        Property(
            "hofold_identity",
            "the higher-order fold with constructor arguments rebuilds every value",
            hofold_identity_cases,
            hofold_self,
            lambda family, v: v,
            topic="folds",
        ),
        Property(
            "map_incr_open_closed",
            "mapIncr l f v changes v only when v is open at depth l",
            map_incr_cases,
            lambda n, level, f, v: fn.map_incr(level, leaf_function(f), v),
            lambda n, level, f, v: reference_map_incr(level, leaf_function(f), v),
            topic="folds",
        ),
        Property(
            "list_map_fold",
            "map by the List fold == the recursive map",
            list_map_cases,
            lambda f, v: fn.map_list(leaf_function(f), v),
            lambda f, v: map_list_ref(leaf_function(f), v),
            topic="folds",
        ),
        Property(
            "check_agreement",
            "the lazy type checker agrees with full expansion",
            check_agreement_cases,
            lambda limit, n, v: conforms(v, nat_index(n), nbush(), Carriers.of(a=nats(limit))),
            lambda limit, n, v: check_value_expanded(v, nat_index(n), nbush(), Carriers.of(a=nats(limit))),
            topic="checker",
        ),
        Property(
            "value_eq_agreement",
            "value_eq agrees with a deep structural comparison",
            value_eq_cases,
            value_eq,
            deep_equal,
            topic="checker",
        ),
    ]


@cache
def property_registry() -> dict[str, Property]:
    return {prop.name: prop for prop in _properties()}


def get_property(name: str) -> Property:
    try:
        return property_registry()[name]
    except KeyError:
        msg = f"no property named {name!r}; known: {', '.join(property_registry())}"
        raise UnknownPropertyError(msg) from None

