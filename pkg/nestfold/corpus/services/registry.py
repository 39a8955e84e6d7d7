"""
Service for the corpus registry: named declarations, folds, literals and functions.

Function entries carry their parameter list and the family their subject lives in,
so a value read from the command line is type-checked before anything runs.
"""
from __future__ import annotations

import logging
from collections.abc import Callable
from collections.abc import Mapping
from dataclasses import dataclass
from dataclasses import field
from functools import cache
from typing import Any

from nestfold.corpus.services import functions as fn
from nestfold.corpus.services.families import FOLDS
from nestfold.corpus.services.families import corpus_program
from nestfold.corpus.services.families import d_index
from nestfold.corpus.services.families import declaration_files
from nestfold.corpus.services.families import fold_d
from nestfold.corpus.services.families import fold_list
from nestfold.corpus.services.families import fold_list_direct
from nestfold.corpus.services.families import i_index
from nestfold.corpus.services.families import incr_terme
from nestfold.corpus.services.families import list_point
from nestfold.corpus.services.families import nbush
from nestfold.corpus.services.families import nested_list_index
from nestfold.corpus.services.families import nincr
from nestfold.corpus.services.families import nincr_term
from nestfold.corpus.services.literals import LITERAL_SOURCES
from nestfold.corpus.services.literals import literal
from nestfold.corpus.services.natives import leaf_function
from nestfold.derive.artifacts import IndexExpr
from nestfold.derive.artifacts import InterpretationFn
from nestfold.derive.artifacts import nat_index
from nestfold.interp.algebra import AlgebraTarget
from nestfold.interp.algebra import Const
from nestfold.interp.algebra import Native
from nestfold.interp.algebra import NativeFn
from nestfold.interp.algebra import Replace
from nestfold.interp.carriers import Carriers
from nestfold.interp.services.literals import parse_index
from nestfold.interp.services.literals import parse_value
from nestfold.interp.services.typing import check_value
from nestfold.interp.values import Ground
from nestfold.interp.values import Value
from nestfold.interp.values import as_int
from nestfold.interp.values import char
from nestfold.interp.values import ground_leaves
from nestfold.interp.values import nat
from nestfold.utils.enums import Direction
from nestfold.utils.enums import EntryKind
from nestfold.utils.enums import GroundSort
from nestfold.utils.enums import ParamKind
from nestfold.utils.exceptions import DuplicateNameError
from nestfold.utils.exceptions import UnknownEntryError
from nestfold.utils.exceptions import ValueSyntaxError
from nestfold.utils.exceptions import ValueTypeError

logger = logging.getLogger(__name__)

NAT_SORTS = (GroundSort.NAT,)
CHAR_SORTS = (GroundSort.CHAR,)
SHOWABLE_SORTS = (GroundSort.CHAR, GroundSort.TEXT)


# =============================================================================
# Higher-order algebras selectable by name
# =============================================================================

COUNT_NATIVES: dict[str, NativeFn] = {
    "count_cons": lambda ctx: nat(as_int(ctx.args[-1]) + 1),
}

HFOLD_BUSH_ALGEBRAS: dict[str, Mapping[str, AlgebraTarget]] = {
    "constructors": {"nil": Replace("NilB"), "cons": Replace("ConsB")},
    "count": {"nil": Const(nat(0)), "cons": Native("count_cons")},
}

HFOLD_TERME_ALGEBRAS: dict[str, Mapping[str, AlgebraTarget]] = {
    "constructors": {"var": Replace("VarE"), "app": Replace("AppE"), "lam": Replace("LamE")},
}


# =============================================================================
# Entries
# =============================================================================


@dataclass(frozen=True, slots=True)
class ParamSpec:
    name: str
    kind: ParamKind
    default: str | None = None
    choices: Mapping[str, Any] | None = None

    def resolve(self, raw: str) -> Any:
        """Read a command-line argument of this parameter."""
        match self.kind:
            case ParamKind.NAT:
                if not raw.isdigit():
                    msg = f"parameter {self.name} expects a natural, got {raw!r}"
                    raise ValueSyntaxError(msg)
                return int(raw)
            case ParamKind.INDEX:
                return parse_index(raw)
            case ParamKind.VALUE:
                return resolve_value(raw)
        if self.choices is not None:
            try:
                return self.choices[raw]
            except KeyError:
                msg = f"parameter {self.name} is one of {', '.join(self.choices)}, got {raw!r}"
                raise UnknownEntryError(msg) from None
        return leaf_function(raw)


@dataclass(frozen=True)
class FunctionSignature:
    """Where the subject of a function lives, given its resolved parameters."""

    params: tuple[ParamSpec, ...]
    family: Callable[[], InterpretationFn]
    subject_index: Callable[[Mapping[str, Any]], IndexExpr]
    run: Callable[[Mapping[str, Any], Value], Any]
    sorts: Mapping[str, tuple[GroundSort, ...]] = field(default_factory=lambda: {"a": NAT_SORTS})
    index_param: str | None = None


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    kind: EntryKind
    summary: str = ""
    signature: FunctionSignature | None = None
    payload: Callable[[], Any] | None = None
    section: str = ""

    def load(self) -> Any:
        if self.payload is None:
            msg = f"{self.name} is a function; evaluate it instead"
            raise UnknownEntryError(msg)
        return self.payload()

    def resolve_params(self, raw: Mapping[str, str]) -> dict[str, Any]:
        signature = self._signature()
        known = {p.name for p in signature.params}
        unknown = sorted(set(raw) - known)
        if unknown:
            msg = f"{self.name} takes no parameter(s) {', '.join(unknown)}"
            raise UnknownEntryError(msg)
        resolved: dict[str, Any] = {}
        for param in signature.params:
            text = raw.get(param.name, param.default)
            if text is None:
                msg = f"{self.name} needs --param {param.name}=..."
                raise ValueSyntaxError(msg)
            resolved[param.name] = param.resolve(text)
        return resolved

    def typecheck(self, params: Mapping[str, Any], v: Value) -> IndexExpr:
        """Raise ValueTypeError unless v inhabits the subject family; return the index used."""
        signature = self._signature()
        index = signature.subject_index(params)
        check_value(v, index, signature.family(), sort_carriers(v, signature.sorts))
        return index

    def evaluate(self, raw_params: Mapping[str, str], v: Value) -> Any:
        params = self.resolve_params(raw_params)
        index = self.typecheck(params, v)
        logger.debug("Evaluating %s at index %s", self.name, index)
        return self._signature().run(params, v)

    def _signature(self) -> FunctionSignature:
        if self.signature is None:
            msg = f"{self.name} is a {self.kind}, not a function"
            raise UnknownEntryError(msg)
        return self.signature


def sort_carriers(v: Value, sorts: Mapping[str, tuple[GroundSort, ...]]) -> Carriers:
    """Carriers holding exactly the grounds of v with an admissible sort."""
    grounds = list(ground_leaves(v))
    sets: dict[str, tuple[Ground, ...]] = {}
    for param, admissible in sorts.items():
        items = tuple(g for g in grounds if g.sort in admissible)
        sets[param] = items or ((nat(0),) if GroundSort.NAT in admissible else (char("W"),))
    return Carriers(sets)


def resolve_value(raw: str) -> Value:
    """A named corpus literal or a value literal."""
    if raw in LITERAL_SOURCES:
        return literal(raw)
    return parse_value(raw)


# =============================================================================
# Sections
# =============================================================================

# Where each entry is introduced in the development the corpus follows.
SECTIONS: dict[str, str] = {
    # declarations
    "Bool": "§3",
    "Bush": "§1",
    "I": "§5.1",
    "D": "§5.1",
    "List": "§1",
    "Nat": "§2",
    "Incr": "§3",
    "Term": "§3",
    "TermE": "§4",
    # folds
    "foldB": "§2",
    "foldI": "§3",
    "foldT": "§3",
    "foldE": "§4",
    "foldD": "§5.1",
    "fold": "§5.4",
    # literals
    "bush1": "§1",
    "num0": "§3",
    "num1": "§3",
    "num2": "§3",
    "term1Term": "§3",
    "term2Term": "§3",
    "term1": "§4",
    "term2": "§4",
    "redex0": "§4",
    # functions
    "sumB": "§2",
    "lengthB": "§2",
    "mapB": "§2",
    "hfoldB": "§2",
    "lift": "§2",
    "sumB'": "§6",
    "toBushN": "§2.1",
    "mapIncr": "§3",
    "foldI'": "§3",
    "showI": "§3",
    "mapT": "§3",
    "showTC": "§3",
    "abst": "§3",
    "subst": "§3",
    "redex": "§3",
    "mapE": "§4",
    "hfoldE": "§4",
    "abstE": "§4",
    "substE": "§4",
    "redexE": "§4",
    "cvtE": "§4",
    "mapD": "§5.1",
    "mapD'": "§5.1",
    "sumD": "§5.1",
    "sumI": "§5.3",
    "map": "§5.4",
    "sum": "§5.4",
    "sumLL": "§5.4",
}


# =============================================================================
# Registry
# =============================================================================


def _n(params: Mapping[str, Any]) -> IndexExpr:
    return nat_index(params["n"])


def _one(params: Mapping[str, Any]) -> IndexExpr:
    return nat_index(1)


def _zero(params: Mapping[str, Any]) -> IndexExpr:
    return nat_index(0)


def _map_incr(params: Mapping[str, Any], v: Value) -> Value:
    if params["l"] > params["n"]:
        msg = f"mapIncr level {params['l']} exceeds the index {params['n']}"
        raise ValueTypeError(msg)
    return fn.map_incr(params["l"], params["f"], v)


def _nat_value(name: str) -> ParamSpec:
    return ParamSpec(name, ParamKind.NAT, "0")


def _function(
    name: str,
    summary: str,
    family: Callable[[], InterpretationFn],
    subject_index: Callable[[Mapping[str, Any]], IndexExpr],
    run: Callable[[Mapping[str, Any], Value], Any],
    params: tuple[ParamSpec, ...] = (),
    sorts: Mapping[str, tuple[GroundSort, ...]] | None = None,
    index_param: str | None = None,
) -> CorpusEntry:
    signature = FunctionSignature(
        params=params,
        family=family,
        subject_index=subject_index,
        run=run,
        sorts=sorts or {"a": NAT_SORTS},
        index_param=index_param,
    )
    return CorpusEntry(name, EntryKind.FUNCTION, summary, signature=signature, section=SECTIONS[name])


def _function_entries() -> list[CorpusEntry]:
    n = _nat_value("n")
    f_nat = ParamSpec("f", ParamKind.NATIVE, "succ")
    f_char = ParamSpec("f", ParamKind.NATIVE, "next_char")
    x_char = ParamSpec("x", ParamKind.VALUE, "'x'")
    s_term = ParamSpec("s", ParamKind.VALUE, "Var['c']")
    s_terme = ParamSpec("s", ParamKind.VALUE, "VarE['c']")
    chars = {"a": CHAR_SORTS}
    return [
        # bushes
        _function("sumB", "Sum of a Bush Nat by foldB", nbush, _one, lambda p, v: fn.sum_bush(v)),
        _function(
            "lengthB", "Spine length by foldB", nbush, _one, lambda p, v: fn.length_bush(v),
            sorts={"a": NAT_SORTS + CHAR_SORTS},
        ),
        _function(
            "mapB", "mapB n f by foldB", nbush, _n,
            lambda p, v: fn.map_bush(p["n"], p["f"], v), params=(ParamSpec("n", ParamKind.NAT, "1"), f_nat),
            index_param="n",
        ),
        _function(
            "hfoldB", "hfoldB as an instance of foldB", nbush, _one,
            lambda p, v: fn.hfold_bush(p["alg"], v, COUNT_NATIVES),
            params=(ParamSpec("alg", ParamKind.NATIVE, "constructors", HFOLD_BUSH_ALGEBRAS),),
        ),
        _function(
            "lift", "lift n of hfoldB", nbush, _n,
            lambda p, v: fn.lift_bush(p["n"], lambda b: fn.hfold_bush(p["alg"], b, COUNT_NATIVES), v),
            params=(
                ParamSpec("n", ParamKind.NAT, "1"),
                ParamSpec("alg", ParamKind.NATIVE, "constructors", HFOLD_BUSH_ALGEBRAS),
            ),
            index_param="n",
        ),
        _function("sumB'", "Sum through the continuation motive", nbush, _one,
                  lambda p, v: fn.sum_aux(v)),
        _function(
            "toBushN", "NBush n into BushN n", nbush, _n,
            lambda p, v: fn.convert_indexed(Direction.TO, nat_index(p["n"]), v),
            params=(ParamSpec("n", ParamKind.NAT, "1"),), index_param="n",
        ),
        # Incr and Term
        _function(
            "mapIncr", "mapIncr l f on NIncr n", nincr, _n,
            _map_incr,
            params=(ParamSpec("n", ParamKind.NAT, "1"), ParamSpec("l", ParamKind.NAT, "0"),
                    ParamSpec("f", ParamKind.NATIVE, "Succ")),
            index_param="n",
        ),
        _function(
            "foldI'", "The regular Incr fold as foldI at 1", nincr, _one,
            lambda p, v: fn.fold_incr_regular(p["zero"], p["f"], v),
            params=(ParamSpec("zero", ParamKind.VALUE, "0"), ParamSpec("f", ParamKind.NATIVE, "id")),
            sorts={"a": NAT_SORTS + CHAR_SORTS},
        ),
        _function(
            "showI", "Render an Incr tower over text", nincr, _n,
            lambda p, v: fn.show_incr(nat_index(p["n"]), v), params=(n,), sorts={"a": SHOWABLE_SORTS},
            index_param="n",
        ),
        _function(
            "mapT", "mapT n f by foldT", nincr_term, _n,
            lambda p, v: fn.map_term(p["n"], p["f"], v), params=(n, f_char), sorts=chars, index_param="n",
        ),
        _function("showTC", "Render a Term Char", nincr_term, _zero,
                  lambda p, v: fn.show_term(v), sorts={"a": SHOWABLE_SORTS}),
        _function("abst", "Bind the free variable x", nincr_term, _zero,
                  lambda p, v: fn.abst_term(p["x"], v), params=(x_char,), sorts=chars),
        _function(
            "subst", "subst n s t by foldT and foldI", nincr_term,
            lambda p: nat_index(p["n"] + 1), lambda p, v: fn.subst_term(p["n"], p["s"], v),
            params=(n, s_term), sorts=chars, index_param="n",
        ),
        _function("redex", "One top-level beta step", nincr_term, _zero,
                  lambda p, v: fn.redex_term(v), sorts=chars),
        # TermE
        _function(
            "mapE", "mapE n f by foldE", incr_terme, _n,
            lambda p, v: fn.map_terme(p["n"], p["f"], v), params=(n, f_char), sorts=chars, index_param="n",
        ),
        _function(
            "hfoldE", "hfoldE as an instance of foldE", incr_terme, _zero,
            lambda p, v: fn.hfold_terme(p["alg"], v),
            params=(ParamSpec("alg", ParamKind.NATIVE, "constructors", HFOLD_TERME_ALGEBRAS),), sorts=chars,
        ),
        _function("abstE", "Bind the free variable x", incr_terme, _zero,
                  lambda p, v: fn.abst_terme(p["x"], v), params=(x_char,), sorts=chars),
        _function(
            "substE", "Sharing substitution by foldE", incr_terme,
            lambda p: nat_index(p["n"] + 1), lambda p, v: fn.subst_terme(p["n"], p["s"], v),
            params=(n, s_terme), sorts=chars, index_param="n",
        ),
        _function("redexE", "One top-level beta step", incr_terme, _zero,
                  lambda p, v: fn.redex_terme(v), sorts=chars),
        _function(
            "cvtE", "TermE to Term", incr_terme, _n,
            lambda p, v: fn.cvt_terme(p["n"], v), params=(n,), sorts=chars, index_param="n",
        ),
        # D and I
        _function(
            "mapD", "mapD i f g by foldD", lambda: fold_d().family, lambda p: p["i"],
            lambda p, v: fn.map_d(p["i"], p["f"], p["g"], v),
            params=(ParamSpec("i", ParamKind.INDEX, "IsD(VarA, VarB)"), f_nat, ParamSpec("g", ParamKind.NATIVE, "succ")),
            sorts={"a": NAT_SORTS, "b": NAT_SORTS}, index_param="i",
        ),
        _function(
            "mapD'", "mapD at IsD(VarA, VarB)", lambda: fold_d().family, lambda p: d_index(),
            lambda p, v: fn.map_d_top(p["f"], p["g"], v),
            params=(f_nat, ParamSpec("g", ParamKind.NATIVE, "succ")), sorts={"a": NAT_SORTS, "b": NAT_SORTS},
        ),
        _function("sumD", "Sum of a D Nat Nat", lambda: fold_d().family, lambda p: d_index(),
                  lambda p, v: fn.sum_d(v), sorts={"a": NAT_SORTS, "b": NAT_SORTS}),
        _function("sumI", "Sum of an I Nat through foldD", lambda: fold_d().family,
                  lambda p: i_index(), lambda p, v: fn.sum_i(v), sorts={"a": NAT_SORTS, "b": NAT_SORTS}),
        # lists
        _function("map", "The List map by the regular fold", lambda: fold_list().family,
                  lambda p: list_point(), lambda p, v: fn.map_list(p["f"], v), params=(f_nat,)),
        _function("sum", "Sum of a List Nat by the regular fold", lambda: fold_list().family,
                  lambda p: list_point(), lambda p, v: fn.sum_list(v)),
        _function(
            "sumLL", "Sum of a List (List Nat) by the direct fold",
            lambda: fold_list_direct().family, lambda p: nested_list_index(), lambda p, v: fn.sum_nested_list(v),
        ),
    ]


def _declaration_entries() -> list[CorpusEntry]:
    entries: dict[str, CorpusEntry] = {}
    for path in declaration_files():
        program = corpus_program(path.stem)
        for decl in program.decls:
            if decl.name not in entries:
                entries[decl.name] = CorpusEntry(
                    decl.name,
                    EntryKind.DECLARATION,
                    f"data {decl.name}",
                    payload=lambda program=program, name=decl.name: program.decl(name),
                    section=SECTIONS[decl.name],
                )
    return list(entries.values())


def _fold_entries() -> list[CorpusEntry]:
    return [
        CorpusEntry(
            name, EntryKind.FOLD_SPEC, f"the {name} specification", payload=loader, section=SECTIONS[name],
        )
        for name, loader in FOLDS.items()
    ]


def _literal_entries() -> list[CorpusEntry]:
    return [
        CorpusEntry(
            name,
            EntryKind.LITERAL,
            source,
            payload=lambda name=name: literal(name),
            section=SECTIONS[name],
        )
        for name, source in LITERAL_SOURCES.items()
    ]


@cache
def corpus_registry() -> dict[str, CorpusEntry]:
    """Every entry by name; names are unique across kinds."""
    registry: dict[str, CorpusEntry] = {}
    for entry in _declaration_entries() + _fold_entries() + _literal_entries() + _function_entries():
        if entry.name in registry:
            msg = f"corpus entry {entry.name!r} registered twice"
            raise DuplicateNameError(msg)
        registry[entry.name] = entry
    return registry


def corpus_entry(name: str) -> CorpusEntry:
    try:
        return corpus_registry()[name]
    except KeyError:
        msg = f"no corpus entry named {name!r}"
        raise UnknownEntryError(msg) from None


def list_entries(text_filter: str = "", kind: EntryKind | str | None = None) -> list[CorpusEntry]:
    """Entries whose name contains text_filter, optionally of one kind, in registration order."""
    return [
        entry
        for entry in corpus_registry().values()
        if text_filter in entry.name and (kind is None or entry.kind == EntryKind(kind))
    ]
