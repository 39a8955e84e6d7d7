"""
Service for the corpus programs and the fold specifications built on them.

The Nat-indexed families (NBush, NIncr, IncrTermE) are written by hand in the
shape `NTimes f n a`; D/I and List folds come out of the derivation.
"""
from __future__ import annotations

import logging
from functools import cache
from pathlib import Path

from nestfold.core.declarations import App
from nestfold.core.declarations import Program
from nestfold.core.declarations import Var
from nestfold.core.services.loader import load_program_file
from nestfold.derive.artifacts import NAT_INDEX
from nestfold.derive.artifacts import CaseSpec
from nestfold.derive.artifacts import FoldSpec
from nestfold.derive.artifacts import IndexCon
from nestfold.derive.artifacts import IndexedRepDecl
from nestfold.derive.artifacts import IndexExpr
from nestfold.derive.artifacts import IndexVar
from nestfold.derive.artifacts import InterpretationFn
from nestfold.derive.artifacts import InterpretationRule
from nestfold.derive.artifacts import ParamLeaf
from nestfold.derive.artifacts import PCon
from nestfold.derive.artifacts import PHole
from nestfold.derive.artifacts import Raw
from nestfold.derive.artifacts import RawIndexed
from nestfold.derive.artifacts import Recursive
from nestfold.derive.artifacts import nat_index
from nestfold.derive.artifacts import succ_index
from nestfold.derive.services.fold import derive_fold_spec
from nestfold.derive.services.fold import derive_regular_fold_spec
from nestfold.derive.services.index import hole
from nestfold.derive.services.indexed import indexed_rep_of
from nestfold.utils.constants import DECLARATION_SUFFIX
from nestfold.utils.constants import OUTER_HOLE
from nestfold.utils.exceptions import UnknownEntryError

logger = logging.getLogger(__name__)

DECLARATIONS_DIR = Path(__file__).resolve().parent.parent / "declarations"
# D's own constructor cases; the higher-order fold keeps dnil/dcons for its arguments.
D_CASE_NAMES = {"DNil": "bnil", "DCons": "bcons"}

N = IndexVar("n")
Z = nat_index(0)
ONE = nat_index(1)


def declaration_files() -> tuple[Path, ...]:
    return tuple(sorted(DECLARATIONS_DIR.glob(f"*{DECLARATION_SUFFIX}")))


@cache
def corpus_program(name: str) -> Program:
    """The checked program stored as declarations/<name>.ndt."""
    path = DECLARATIONS_DIR / f"{name}{DECLARATION_SUFFIX}"
    if not path.exists():
        msg = f"no corpus declaration file {path.name!r}"
        raise UnknownEntryError(msg)
    return load_program_file(path)


def ntimes(
    name: str,
    program: Program,
    layer: str,
    outer: str | None = None,
    inner: str | None = None,
) -> InterpretationFn:
    """
    The family `n ↦ layer^n a`, optionally wrapped: inner wraps the argument of each
    layer (Incr (TermE x)) and outer wraps the result (Term (NIncr n a)).
    """
    arg = Var(hole(1)) if inner is None else App(inner, (Var(hole(1)),))
    rules = (
        InterpretationRule("Z", (), Var("a")),
        InterpretationRule("S", (hole(1),), App(layer, (arg,))),
    )
    wrapped = App(outer, (Var(OUTER_HOLE),)) if outer is not None else None
    return InterpretationFn(name, NAT_INDEX, ("a",), rules, program, wrapped)


def flat(tag: str, arity: int) -> PCon:
    return PCon(tag, tuple(PHole(k) for k in range(arity)))


# =============================================================================
# Bushes
# =============================================================================


@cache
def nbush() -> InterpretationFn:
    return ntimes("NBush", corpus_program("bush"), "Bush")


@cache
def fold_b() -> FoldSpec:
    return FoldSpec(
        "foldB",
        "Bush",
        nbush(),
        (
            CaseSpec("base", Z, ParamLeaf("a"), (Raw(Var("a")),)),
            CaseSpec("nil", succ_index(N), flat("NilB", 0), ()),
            CaseSpec("cons", succ_index(N), flat("ConsB", 2), (Recursive(N), Recursive(succ_index(N, 2)))),
        ),
    ).validate()


@cache
def bush_n() -> IndexedRepDecl:
    return indexed_rep_of(fold_b())


# =============================================================================
# Incr and Term
# =============================================================================


@cache
def nincr() -> InterpretationFn:
    return ntimes("NIncr", corpus_program("term"), "Incr")


@cache
def nincr_term() -> InterpretationFn:
    return ntimes("NIncr", corpus_program("term"), "Incr", outer="Term")


@cache
def fold_i() -> FoldSpec:
    return FoldSpec(
        "foldI",
        "Incr",
        nincr(),
        (
            CaseSpec("base", Z, ParamLeaf("a"), (Raw(Var("a")),)),
            CaseSpec("zero", succ_index(N), flat("Zero", 0), ()),
            CaseSpec("succ", succ_index(N), flat("Succ", 1), (Recursive(N),)),
        ),
    ).validate()


@cache
def fold_t() -> FoldSpec:
    return FoldSpec(
        "foldT",
        "Term",
        nincr_term(),
        (
            CaseSpec("var", N, flat("Var", 1), (RawIndexed(N, fold_i()),)),
            CaseSpec("app", N, flat("App", 2), (Recursive(N), Recursive(N))),
            CaseSpec("lam", N, flat("Lam", 1), (Recursive(succ_index(N)),)),
        ),
    ).validate()


# =============================================================================
# Terms with explicit substitutions
# =============================================================================


@cache
def incr_terme() -> InterpretationFn:
    return ntimes("IncrTermE", corpus_program("terme"), "Incr", outer="TermE", inner="TermE")


@cache
def fold_e() -> FoldSpec:
    return FoldSpec(
        "foldE",
        "TermE",
        incr_terme(),
        (
            CaseSpec("varBase", Z, flat("VarE", 1), (Raw(Var("a")),)),
            CaseSpec("varZero", succ_index(N), PCon("VarE", (PCon("Zero"),)), ()),
            CaseSpec("varSucc", succ_index(N), PCon("VarE", (PCon("Succ", (PHole(0),)),)), (Recursive(N),)),
            CaseSpec("app", N, flat("AppE", 2), (Recursive(N), Recursive(N))),
            CaseSpec("lam", N, flat("LamE", 1), (Recursive(succ_index(N)),)),
        ),
    ).validate()


# =============================================================================
# Derived folds
# =============================================================================


@cache
def fold_d() -> FoldSpec:
    return derive_fold_spec(corpus_program("d"), "D", D_CASE_NAMES)


@cache
def fold_bush_direct() -> FoldSpec:
    return derive_fold_spec(corpus_program("bush"), "Bush")


@cache
def fold_list() -> FoldSpec:
    """The ordinary List fold."""
    return derive_regular_fold_spec(corpus_program("list"), "List")


@cache
def fold_list_direct() -> FoldSpec:
    return derive_fold_spec(corpus_program("list"), "List")


def d_index() -> IndexExpr:
    """IsD(VarA, VarB): where the D family is D a b."""
    return IndexCon("IsD", (IndexCon("VarA"), IndexCon("VarB")))


def i_index() -> IndexExpr:
    return IndexCon("IsI", (IndexCon("VarA"),))


def list_point() -> IndexExpr:
    return IndexCon("tt")


def nested_list_index() -> IndexExpr:
    return IndexCon("IsList", (IndexCon("IsList", (IndexCon("VarA"),)),))


FOLDS = {
    "foldB": fold_b,
    "foldI": fold_i,
    "foldT": fold_t,
    "foldE": fold_e,
    "foldD": fold_d,
    "fold": fold_list,
}


def fold_by_name(name: str) -> FoldSpec:
    try:
        return FOLDS[name]()
    except KeyError:
        msg = f"no corpus fold named {name!r}"
        raise UnknownEntryError(msg) from None
