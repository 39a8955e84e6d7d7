"""
Derived artifacts: index types, interpretations, fold specifications and their
induction, higher-order, indexed and Church-encoded companions.
"""
from __future__ import annotations

from collections.abc import Iterator
from collections.abc import Mapping
from dataclasses import dataclass
from dataclasses import field
from functools import cached_property
from typing import TYPE_CHECKING

from nestfold.core.declarations import App
from nestfold.core.declarations import Program
from nestfold.core.declarations import TypeExpr
from nestfold.core.declarations import Var
from nestfold.utils.constants import OUTER_HOLE
from nestfold.utils.exceptions import DerivationError
from nestfold.utils.exceptions import FreeIndexVariableError
from nestfold.utils.exceptions import ValueTypeError

if TYPE_CHECKING:
    from nestfold.interp.algebra import Algebra

# =============================================================================
# Index expressions
# =============================================================================


@dataclass(frozen=True, slots=True)
class IndexVar:
    """A schematic index variable (i, j, n, ...)."""

    name: str


@dataclass(frozen=True, slots=True)
class IndexCon:
    name: str
    args: tuple[IndexExpr, ...] = ()


type IndexExpr = IndexVar | IndexCon


def index_variables(i: IndexExpr) -> tuple[str, ...]:
    """Distinct variables of i in left-to-right order."""
    found: list[str] = []

    def walk(node: IndexExpr) -> None:
        match node:
            case IndexVar(name):
                if name not in found:
                    found.append(name)
            case IndexCon(_, args):
                for arg in args:
                    walk(arg)

    walk(i)
    return tuple(found)


def is_closed(i: IndexExpr) -> bool:
    return not index_variables(i)


def substitute_index(i: IndexExpr, binding: Mapping[str, IndexExpr]) -> IndexExpr:
    match i:
        case IndexVar(name):
            return binding.get(name, i)
        case IndexCon(name, args):
            return IndexCon(name, tuple(substitute_index(a, binding) for a in args))
    raise TypeError(i)


def rename_index(i: IndexExpr, ctor_names: Mapping[str, str], var_names: Mapping[str, str]) -> IndexExpr:
    match i:
        case IndexVar(name):
            return IndexVar(var_names.get(name, name))
        case IndexCon(name, args):
            return IndexCon(ctor_names.get(name, name), tuple(rename_index(a, ctor_names, var_names) for a in args))
    raise TypeError(i)


def match_index(pattern: IndexExpr, i: IndexExpr) -> dict[str, IndexExpr] | None:
    """One-way matching of a schematic index against a closed one."""
    binding: dict[str, IndexExpr] = {}

    def walk(pat: IndexExpr, node: IndexExpr) -> bool:
        match pat:
            case IndexVar(name):
                if name in binding:
                    return binding[name] == node
                binding[name] = node
                return True
            case IndexCon(name, args):
                if not isinstance(node, IndexCon) or node.name != name or len(node.args) != len(args):
                    return False
                return all(walk(p, n) for p, n in zip(args, node.args, strict=True))
        return False

    return binding if walk(pattern, i) else None


def index_size(i: IndexExpr) -> int:
    if isinstance(i, IndexVar):
        return 1
    return 1 + sum(index_size(a) for a in i.args)


# =============================================================================
# Index types
# =============================================================================


@dataclass(frozen=True, slots=True)
class IndexConstructor:
    name: str
    arity: int
    denotes: str | None = None


@dataclass(frozen=True, slots=True)
class IndexTypeDecl:
    """A regular data type whose values name the types arising in a nested family."""

    name: str
    var_ctors: tuple[IndexConstructor, ...]
    con_ctors: tuple[IndexConstructor, ...]

    @property
    def constructors(self) -> tuple[IndexConstructor, ...]:
        return self.var_ctors + self.con_ctors

    @property
    def is_nat_shaped(self) -> bool:
        """One leaf and one unary constructor: isomorphic to the naturals."""
        return len(self.var_ctors) == 1 and len(self.con_ctors) == 1 and self.con_ctors[0].arity == 1

    @property
    def is_unit_shaped(self) -> bool:
        return not self.var_ctors and len(self.con_ctors) == 1 and self.con_ctors[0].arity == 0

    def constructor(self, name: str) -> IndexConstructor:
        for ctor in self.constructors:
            if ctor.name == name:
                return ctor
        msg = f"{self.name} has no constructor {name!r}"
        raise DerivationError(msg)

    def leaf_for(self, param: str) -> IndexConstructor:
        for ctor in self.var_ctors:
            if ctor.denotes == param:
                return ctor
        msg = f"{self.name} has no leaf for parameter {param!r}"
        raise DerivationError(msg)

    def for_type(self, type_name: str) -> IndexConstructor | None:
        for ctor in self.con_ctors:
            if ctor.denotes == type_name:
                return ctor
        return None

    def from_nat(self, n: int) -> IndexExpr:
        """The index S^n Z of a naturals-shaped index type."""
        if self.is_unit_shaped:
            return IndexCon(self.con_ctors[0].name)
        if not self.is_nat_shaped:
            msg = f"{self.name} is not isomorphic to the naturals"
            raise DerivationError(msg)
        index: IndexExpr = IndexCon(self.var_ctors[0].name)
        for _ in range(n):
            index = IndexCon(self.con_ctors[0].name, (index,))
        return index

    def to_nat(self, i: IndexExpr) -> int:
        depth = 0
        while isinstance(i, IndexCon) and i.args:
            depth += 1
            i = i.args[0]
        return depth

    def enumerate(self, max_depth: int) -> Iterator[IndexExpr]:
        """Closed indexes of depth at most max_depth, shallow first."""
        levels: list[list[IndexExpr]] = [[IndexCon(c.name) for c in self.constructors if c.arity == 0]]
        for _ in range(max_depth):
            known = [i for level in levels for i in level]
            fresh: list[IndexExpr] = []
            for ctor in self.con_ctors:
                if ctor.arity == 0:
                    continue
                for combo in _products(known, ctor.arity):
                    candidate = IndexCon(ctor.name, combo)
                    if candidate not in known and candidate not in fresh:
                        fresh.append(candidate)
            levels.append(fresh)
        for level in levels:
            yield from level


def _products(items: list[IndexExpr], arity: int) -> Iterator[tuple[IndexExpr, ...]]:
    if arity == 0:
        yield ()
        return
    for head in items:
        for tail in _products(items, arity - 1):
            yield (head, *tail)


NAT_INDEX = IndexTypeDecl(
    name="Nat",
    var_ctors=(IndexConstructor("Z", 0, "a"),),
    con_ctors=(IndexConstructor("S", 1),),
)
UNIT_INDEX = IndexTypeDecl(name="Unit", var_ctors=(), con_ctors=(IndexConstructor("tt", 0),))


def nat_index(n: int) -> IndexExpr:
    return NAT_INDEX.from_nat(n)


def succ_index(i: IndexExpr, times: int = 1) -> IndexExpr:
    for _ in range(times):
        i = IndexCon("S", (i,))
    return i


# =============================================================================
# Interpretations
# =============================================================================


@dataclass(frozen=True, slots=True)
class InterpretationRule:
    """index_con(binders...) rewrites to template; binders are hole variables."""

    index_con: str
    binders: tuple[str, ...]
    template: TypeExpr


@dataclass(frozen=True)
class InterpretationFn:
    """Maps closed indexes to types; `outer` wraps the result (e.g. Term applied to an Incr tower)."""

    name: str
    index_type: IndexTypeDecl
    params: tuple[str, ...]
    rules: tuple[InterpretationRule, ...]
    program: Program
    outer: TypeExpr | None = None

    def rule(self, index_con: str) -> InterpretationRule:
        for rule in self.rules:
            if rule.index_con == index_con:
                return rule
        msg = f"interpretation {self.name} has no rule for {index_con!r}"
        raise DerivationError(msg)

    @property
    def top_template(self) -> TypeExpr:
        return self.outer if self.outer is not None else Var(OUTER_HOLE)


# =============================================================================
# Fold specifications
# =============================================================================


@dataclass(frozen=True, slots=True)
class Recursive:
    index: IndexExpr


@dataclass(frozen=True, slots=True)
class Raw:
    """A child passed to the case unchanged; Var(param) marks a carrier leaf."""

    type: TypeExpr


@dataclass(frozen=True, slots=True)
class RawIndexed:
    """A child passed unchanged that inhabits another family at an index."""

    index: IndexExpr
    fold: FoldSpec


type ArgSpec = Recursive | Raw | RawIndexed


@dataclass(frozen=True, slots=True)
class ParamLeaf:
    """The subject is itself a carrier value of the parameter."""

    param: str


@dataclass(frozen=True, slots=True)
class PHole:
    position: int


@dataclass(frozen=True, slots=True)
class PCon:
    tag: str
    children: tuple[PatternNode, ...] = ()


type PatternNode = PHole | PCon
type SubjectShape = ParamLeaf | PCon


def pattern_holes(node: PatternNode) -> int:
    if isinstance(node, PHole):
        return 1
    return sum(pattern_holes(c) for c in node.children)


@dataclass(frozen=True, slots=True)
class CaseSpec:
    name: str
    subject_index: IndexExpr
    shape: SubjectShape
    args: tuple[ArgSpec, ...]

    @property
    def binders(self) -> tuple[str, ...]:
        return index_variables(self.subject_index)

    @property
    def tag(self) -> str | None:
        return self.shape.tag if isinstance(self.shape, PCon) else None

    @property
    def is_leaf(self) -> bool:
        return isinstance(self.shape, ParamLeaf)

    def matches(self, value: object) -> bool:
        if isinstance(self.shape, ParamLeaf):
            return True
        return _pattern_matches(self.shape, value)

    def extract(self, value: object) -> tuple[object, ...]:
        """Children bound to the holes, in hole order."""
        if isinstance(self.shape, ParamLeaf):
            return (value,)
        found: dict[int, object] = {}
        _collect(self.shape, value, found)
        return tuple(found[k] for k in range(len(found)))


def _pattern_matches(node: PatternNode, value: object) -> bool:
    if isinstance(node, PHole):
        return True
    tag = getattr(value, "tag", None)
    children = getattr(value, "children", None)
    if tag != node.tag or children is None or len(children) != len(node.children):
        return False
    return all(_pattern_matches(p, c) for p, c in zip(node.children, children, strict=True))


def _collect(node: PatternNode, value: object, found: dict[int, object]) -> None:
    if isinstance(node, PHole):
        found[node.position] = value
        return
    for sub, child in zip(node.children, value.children, strict=True):  # type: ignore[attr-defined]
        _collect(sub, child, found)


@dataclass(frozen=True)
class FoldSpec:
    """A first-class fold: a motive over indexes and one case per abstract constructor."""

    name: str
    root: str
    family: Family
    cases: tuple[CaseSpec, ...]
    direct: bool = False
    motive: str = "p"

    @property
    def index_type(self) -> IndexTypeDecl:
        return self.family.index_type

    @property
    def params(self) -> tuple[str, ...]:
        return self.family.params

    def case(self, name: str) -> CaseSpec:
        for case in self.cases:
            if case.name == name:
                return case
        msg = f"{self.name} has no case {name!r}"
        raise DerivationError(msg)

    def select(self, i: IndexExpr, value: object) -> tuple[CaseSpec, dict[str, IndexExpr]]:
        """The unique case whose subject index and shape match."""
        for case in self.cases:
            binding = match_index(case.subject_index, i)
            if binding is not None and case.matches(value):
                return case, binding
        tag = getattr(value, "tag", None) or repr(value)
        msg = f"{self.name}: no case matches {tag} at index {_show_index(i)}"
        raise ValueTypeError(msg)

    def validate(self) -> FoldSpec:
        for case in self.cases:
            bound = set(case.binders)
            for arg in case.args:
                if isinstance(arg, Recursive | RawIndexed):
                    loose = set(index_variables(arg.index)) - bound
                    if loose:
                        msg = f"{self.name}.{case.name}: index variable(s) {sorted(loose)} not bound by the subject"
                        raise FreeIndexVariableError(msg)
            if isinstance(case.shape, PCon) and pattern_holes(case.shape) != len(case.args):
                msg = f"{self.name}.{case.name}: pattern holes and arguments disagree"
                raise DerivationError(msg)
        return self


def _show_index(i: IndexExpr) -> str:
    if isinstance(i, IndexVar):
        return i.name
    if not i.args:
        return i.name
    return f"{i.name}({', '.join(_show_index(a) for a in i.args)})"


# =============================================================================
# Induction, higher-order folds, indexed representations, Church encodings
# =============================================================================


@dataclass(frozen=True, slots=True)
class Hypothesis:
    binder: str
    index: IndexExpr


@dataclass(frozen=True, slots=True)
class InductionCase:
    case: str
    binders: tuple[str, ...]
    hypotheses: tuple[Hypothesis, ...]


@dataclass(frozen=True)
class InductionSpec:
    name: str
    fold: FoldSpec
    cases: tuple[InductionCase, ...]


@dataclass(frozen=True, slots=True)
class HOFoldArg:
    name: str
    constructor: str
    arg_types: tuple[TypeExpr, ...]
    result: TypeExpr


@dataclass(frozen=True)
class HOFoldSpec:
    name: str
    base: FoldSpec
    hp: InterpretationFn
    root_index: IndexExpr
    args: tuple[HOFoldArg, ...]

    @property
    def root(self) -> str:
        return self.base.root

    def arg_for(self, constructor: str) -> HOFoldArg | None:
        for arg in self.args:
            if arg.constructor == constructor:
                return arg
        return None


@dataclass(frozen=True, slots=True)
class IndexedConstructor:
    name: str
    case: str
    source: str | None
    subject_index: IndexExpr
    args: tuple[ArgSpec, ...]


@dataclass(frozen=True)
class IndexedRepDecl:
    """A non-nested family whose constructors carry their own subject index."""

    name: str
    fold_name: str
    index_type: IndexTypeDecl
    params: tuple[str, ...]
    constructors: tuple[IndexedConstructor, ...]
    program: Program = field(default_factory=Program)
    source: FoldSpec | None = None

    def constructor(self, name: str) -> IndexedConstructor:
        for ctor in self.constructors:
            if ctor.name == name:
                return ctor
        msg = f"{self.name} has no constructor {name!r}"
        raise ValueTypeError(msg)

    @cached_property
    def fold_spec(self) -> FoldSpec:
        cases = tuple(
            CaseSpec(
                c.case,
                c.subject_index,
                PCon(c.name, tuple(PHole(k) for k in range(len(c.args)))),
                c.args,
            )
            for c in self.constructors
        )
        return FoldSpec(self.fold_name, self.name, self, cases, direct=True)


@dataclass(frozen=True, slots=True)
class ChurchConstructor:
    name: str
    case: str
    holes: tuple[str, ...]
    recursive: tuple[bool, ...]


@dataclass(frozen=True)
class ChurchEncodingDecl:
    name: str
    fold: FoldSpec
    constructors: tuple[ChurchConstructor, ...]
    cfold_name: str
    cmap_name: str


type Family = InterpretationFn | IndexedRepDecl


def constructor_result(decl_name: str, params: tuple[str, ...]) -> App:
    return App(decl_name, tuple(Var(p) for p in params))


# =============================================================================
# Bundles
# =============================================================================


@dataclass(frozen=True)
class Conversions:
    """Replacement algebras converting between a family and its indexed representation."""

    to_fold: FoldSpec
    to_algebra: Algebra
    from_fold: FoldSpec
    from_algebra: Algebra


@dataclass(frozen=True)
class DerivedArtifacts:
    root: str
    program: Program
    index_type: IndexTypeDecl
    interpretation: InterpretationFn
    fold_spec: FoldSpec
    induction_spec: InductionSpec
    hofold: HOFoldSpec
    indexed_rep: IndexedRepDecl
    church: ChurchEncodingDecl
