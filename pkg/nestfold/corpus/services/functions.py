"""
Service for the corpus programs: every function is a fold, a map or a higher-order
fold over one of the registered families, never a hand-written recursion.
"""
from __future__ import annotations

import logging
from collections.abc import Callable
from collections.abc import Mapping
from functools import cache
from typing import Any

from nestfold.corpus.services.families import ONE
from nestfold.corpus.services.families import Z
from nestfold.corpus.services.families import bush_n
from nestfold.corpus.services.families import d_index
from nestfold.corpus.services.families import fold_b
from nestfold.corpus.services.families import fold_d
from nestfold.corpus.services.families import fold_e
from nestfold.corpus.services.families import fold_i
from nestfold.corpus.services.families import fold_list
from nestfold.corpus.services.families import fold_list_direct
from nestfold.corpus.services.families import fold_t
from nestfold.corpus.services.families import i_index
from nestfold.corpus.services.families import list_point
from nestfold.corpus.services.families import nested_list_index
from nestfold.corpus.services.natives import LeafFn
from nestfold.corpus.services.natives import cmp
from nestfold.corpus.services.natives import fold_bool
from nestfold.corpus.services.natives import singleton
from nestfold.corpus.services.natives import wrap_succ
from nestfold.derive.artifacts import HOFoldSpec
from nestfold.derive.artifacts import IndexedRepDecl
from nestfold.derive.artifacts import IndexExpr
from nestfold.derive.artifacts import nat_index
from nestfold.derive.services.hofold import derive_hofold
from nestfold.derive.services.indexed import derive_conversions
from nestfold.interp.algebra import Algebra
from nestfold.interp.algebra import AlgebraTarget
from nestfold.interp.algebra import CaseContext
from nestfold.interp.algebra import Const
from nestfold.interp.algebra import Native
from nestfold.interp.algebra import NativeFn
from nestfold.interp.algebra import Replace
from nestfold.interp.services.evaluator import eval_fold
from nestfold.interp.services.evaluator import eval_hofold
from nestfold.interp.services.evaluator import eval_map
from nestfold.interp.values import Con
from nestfold.interp.values import Ground
from nestfold.interp.values import Value
from nestfold.interp.values import as_int
from nestfold.interp.values import con
from nestfold.interp.values import nat
from nestfold.interp.values import text
from nestfold.utils.constants import SHOW_EMP
from nestfold.utils.constants import SHOW_LAMBDA
from nestfold.utils.constants import SHOW_LP
from nestfold.utils.constants import SHOW_RP
from nestfold.utils.constants import SHOW_SUCC
from nestfold.utils.constants import SHOW_ZERO
from nestfold.utils.enums import Direction

logger = logging.getLogger(__name__)

ZERO = con("Zero")


def _text_of(v: Any) -> str:
    if isinstance(v, Ground):
        return str(v.constant)
    msg = f"expected text, got {v!r}"
    raise TypeError(msg)


# =============================================================================
# Bushes
# =============================================================================


def sum_bush(v: Value) -> Value:
    """Sum of every entry of a Bush Nat."""
    algebra = Algebra.of([("base", Native("id")), ("nil", Const(nat(0))), ("cons", Native("add"))])
    return eval_fold(fold_b(), algebra, ONE, v)


def _length_step(ctx: CaseContext) -> Value:
    return nat(as_int(ctx.results[1]) + 1)


def length_bush(v: Value) -> Value:
    """Length of the top-level spine."""
    algebra = Algebra.of([("base", Const(nat(0))), ("nil", Const(nat(0))), ("cons", Native("length_step"))])
    return eval_fold(fold_b(), algebra, ONE, v, {"length_step": _length_step})


def map_bush(n: int, f: LeafFn, v: Value) -> Value:
    return eval_map(fold_b(), {"a": f}, nat_index(n), v)


@cache
def hofold_b() -> HOFoldSpec:
    return derive_hofold(fold_b())


def hfold_bush(
    algebra: Mapping[str, AlgebraTarget],
    v: Value,
    natives: Mapping[str, NativeFn] | None = None,
) -> Any:
    """hfoldB: nil and cons run at every level of the bush, the entries stay put."""
    return eval_hofold(hofold_b(), algebra, v, natives)


def lift_bush(n: int, g: Callable[[Value], Any], v: Value) -> Any:
    """lift 0 g x = x; lift (n+1) g x = g (mapB 1 (lift n g) x)."""
    if n == 0:
        return v
    inner = map_bush(1, lambda x: lift_bush(n - 1, g, x), v)
    return g(inner)


def _sum_aux_cons(ctx: CaseContext) -> Callable[[Callable[[Any], Any]], Value]:
    x, k = ctx.args

    def continuation(f: Callable[[Any], Any]) -> Value:
        return nat(as_int(f(x)) + as_int(k(lambda r: r(f))))

    return continuation


SUM_AUX_NATIVES: dict[str, NativeFn] = {
    "sum_aux_nil": lambda ctx: lambda f: nat(0),
    "sum_aux_cons": _sum_aux_cons,
}


def sum_aux(v: Value) -> Value:
    """The continuation-passing sum: hfoldB at the motive a -> (a -> Nat) -> Nat, run on the identity."""
    algebra = {"nil": Native("sum_aux_nil"), "cons": Native("sum_aux_cons")}
    continuation = hfold_bush(algebra, v, SUM_AUX_NATIVES)
    return continuation(lambda y: y)


def convert_indexed(direction: Direction | str, i: IndexExpr, v: Value, rep: IndexedRepDecl | None = None) -> Value:
    """Move a value between a nested family and its indexed representation (BushN by default)."""
    conversions = derive_conversions(rep or bush_n())
    if Direction(direction) == Direction.TO:
        return eval_fold(conversions.to_fold, conversions.to_algebra, i, v)
    return eval_fold(conversions.from_fold, conversions.from_algebra, i, v)


# =============================================================================
# Incr and Term
# =============================================================================


def map_incr(level: int, f: LeafFn, v: Value) -> Value:
    """mapIncr: f reaches the carrier leaf only when the value is open at the given level."""
    return eval_map(fold_i(), {"a": f}, nat_index(level), v)


def fold_incr_regular(zero: Any, succ: Callable[[Any], Any], v: Value) -> Any:
    """The ordinary fold of Incr, as foldI at index 1."""
    algebra = Algebra.of([("base", Native("regular_succ")), ("zero", Const(zero)), ("succ", Native("id"))])
    return eval_fold(fold_i(), algebra, ONE, v, {"regular_succ": lambda ctx: succ(ctx.args[0])})


def map_term(n: int, f: LeafFn, v: Value) -> Value:
    """mapT n f: every free variable of a Term under n binders gets f at its leaf."""
    return eval_map(fold_t(), {"a": f}, nat_index(n), v)


def show_incr(m: IndexExpr, v: Value) -> Value:
    algebra = Algebra.of([("base", Native("id")), ("zero", Const(text(SHOW_ZERO))), ("succ", Native("show_succ"))])
    natives = {"show_succ": lambda ctx: text(SHOW_SUCC + _text_of(ctx.results[0]))}
    return eval_fold(fold_i(), algebra, m, v, natives)


def _show_app(ctx: CaseContext) -> Value:
    left, right = (_text_of(r) for r in ctx.results)
    return text(f"{SHOW_LP}{left}{SHOW_EMP}{right}{SHOW_RP}")


SHOW_NATIVES: dict[str, NativeFn] = {
    "show_var": lambda ctx: show_incr(ctx.bindings["n"], ctx.args[0]),
    "show_app": _show_app,
    "show_lam": lambda ctx: text(SHOW_LAMBDA + _text_of(ctx.results[0])),
}


def show_term_text(v: Value) -> Value:
    """showT: a closed-over-text Term rendered with the show tokens."""
    algebra = Algebra.of([("var", Native("show_var")), ("app", Native("show_app")), ("lam", Native("show_lam"))])
    return eval_fold(fold_t(), algebra, Z, v, SHOW_NATIVES)


def show_term(v: Value) -> Value:
    """showTC: turn the free character variables into text, then render."""
    return show_term_text(map_term(0, singleton, v))


def match_var(x: Value) -> LeafFn:
    """The leaf function abst maps with: x becomes the new variable, others shift by one."""
    return lambda a: fold_bool(ZERO, con("Succ", a), cmp(x, a))


def abst_term(x: Value, t: Value) -> Value:
    return con("Lam", map_term(0, match_var(x), t))


def varcase(m: IndexExpr, s: Value, v: Value) -> Value:
    """The variable case of substitution, by foldI at m."""

    def base(ctx: CaseContext) -> Value:
        leaf = ctx.args[0]
        if isinstance(leaf, Con) and leaf.tag == "Succ":
            return con("Var", leaf.children[0])
        return s

    algebra = Algebra.of([("base", Native("subst_base")), ("zero", Const(con("Var", ZERO))), ("succ", Native("shift"))])
    natives = {"subst_base": base, "shift": lambda ctx: map_term(0, wrap_succ, ctx.results[0])}
    return eval_fold(fold_i(), algebra, m, v, natives)


def subst_term(n: int, s: Value, t: Value) -> Value:
    """subst n s t: replace variable n of t by s, re-indexing s under every binder it crosses."""
    algebra = Algebra.of([("var", Native("varcase")), ("app", Replace("App")), ("lam", Replace("Lam"))])
    natives = {"varcase": lambda ctx: varcase(ctx.bindings["n"], s, ctx.args[0])}
    return eval_fold(fold_t(), algebra, nat_index(n), t, natives)


def redex_term(v: Value) -> Value:
    match v:
        case Con("App", (Con("Lam", (body,)), arg)):
            return subst_term(0, arg, body)
    return v


# =============================================================================
# Terms with explicit substitutions
# =============================================================================


def map_terme(n: int, f: LeafFn, v: Value) -> Value:
    return eval_map(fold_e(), {"a": f}, nat_index(n), v)


@cache
def hofold_e() -> HOFoldSpec:
    return derive_hofold(fold_e())


def hfold_terme(
    algebra: Mapping[str, AlgebraTarget],
    v: Value,
    natives: Mapping[str, NativeFn] | None = None,
) -> Any:
    """hfoldE: var, app and lam replace VarE, AppE and LamE; Zero and Succ are kept."""
    return eval_hofold(hofold_e(), algebra, v, natives)


def match_var_e(x: Value) -> LeafFn:
    return lambda a: fold_bool(ZERO, con("Succ", con("VarE", a)), cmp(x, a))


def abst_terme(x: Value, t: Value) -> Value:
    return con("LamE", map_terme(0, match_var_e(x), t))


def subst_terme(n: int, s: Value, t: Value) -> Value:
    """substE: s is inserted once, the terms held by Succ are returned untouched."""

    def base(ctx: CaseContext) -> Value:
        leaf = ctx.args[0]
        if isinstance(leaf, Con) and leaf.tag == "Succ":
            return leaf.children[0]
        return s

    algebra = Algebra.of(
        [
            ("varBase", Native("subst_base")),
            ("varZero", Replace("VarE")),
            ("varSucc", Replace("VarE")),
            ("app", Replace("AppE")),
            ("lam", Replace("LamE")),
        ],
    )
    return eval_fold(fold_e(), algebra, nat_index(n), t, {"subst_base": base})


def redex_terme(v: Value) -> Value:
    match v:
        case Con("AppE", (Con("LamE", (body,)), arg)):
            return subst_terme(0, arg, body)
    return v


def cvt_terme(n: int, v: Value) -> Value:
    """Flatten explicit substitutions into a plain Term."""
    algebra = Algebra.of(
        [
            ("varBase", Replace("Var")),
            ("varZero", Const(con("Var", ZERO))),
            ("varSucc", Native("shift")),
            ("app", Replace("App")),
            ("lam", Replace("Lam")),
        ],
    )
    natives = {"shift": lambda ctx: map_term(0, wrap_succ, ctx.results[0])}
    return eval_fold(fold_e(), algebra, nat_index(n), v, natives)


# =============================================================================
# D and I
# =============================================================================


def map_d(i: IndexExpr, f: LeafFn, g: LeafFn, v: Value) -> Value:
    return eval_map(fold_d(), {"a": f, "b": g}, i, v)


def map_d_top(f: LeafFn, g: LeafFn, v: Value) -> Value:
    return map_d(d_index(), f, g, v)


def sum_d(v: Value) -> Value:
    algebra = Algebra.of(
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
    return eval_fold(fold_d(), algebra, d_index(), v)


def sum_i(v: Value) -> Value:
    """Sum of an I Nat through the D fold; the D cases are never reached."""
    algebra = Algebra.of(
        [
            ("varA", Native("id")),
            ("varB", Native("id")),
            ("bnil", Const(nat(0))),
            ("bcons", Native("const0")),
            ("acons", Native("const0")),
            ("zero", Const(nat(0))),
            ("succ", Native("add")),
        ],
    )
    return eval_fold(fold_d(), algebra, i_index(), v)


# =============================================================================
# Lists
# =============================================================================


def map_list(f: LeafFn, v: Value) -> Value:
    return eval_map(fold_list(), {"a": f}, list_point(), v)


def sum_list(v: Value) -> Value:
    algebra = Algebra.of([("nil", Const(nat(0))), ("cons", Native("add"))])
    return eval_fold(fold_list(), algebra, list_point(), v)


def sum_nested_list(v: Value) -> Value:
    """Sum of a List (List Nat) by the direct List fold at IsList(IsList VarA)."""
    algebra = Algebra.of([("base", Native("id")), ("nil", Const(nat(0))), ("cons", Native("add"))])
    return eval_fold(fold_list_direct(), algebra, nested_list_index(), v)
