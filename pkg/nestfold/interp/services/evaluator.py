"""
Service for running folds on concrete values.

Every recursive call goes to a hole of the matched pattern, so evaluation descends
structurally and terminates on any finite value.
"""
from __future__ import annotations

import logging
from collections.abc import Callable
from collections.abc import Mapping
from typing import Any

from nestfold.core.declarations import Var
from nestfold.derive.artifacts import CaseSpec
from nestfold.derive.artifacts import FoldSpec
from nestfold.derive.artifacts import HOFoldSpec
from nestfold.derive.artifacts import IndexExpr
from nestfold.derive.artifacts import PatternNode
from nestfold.derive.artifacts import PCon
from nestfold.derive.artifacts import PHole
from nestfold.derive.artifacts import Raw
from nestfold.derive.artifacts import RawIndexed
from nestfold.derive.artifacts import Recursive
from nestfold.derive.artifacts import substitute_index
from nestfold.derive.services.mapping import derive_map_spec
from nestfold.derive.services.mapping import leaf_key
from nestfold.derive.services.mapping import rebuild_key
from nestfold.interp.algebra import Algebra
from nestfold.interp.algebra import AlgebraTarget
from nestfold.interp.algebra import CaseContext
from nestfold.interp.algebra import Const
from nestfold.interp.algebra import Native
from nestfold.interp.algebra import NativeFn
from nestfold.interp.algebra import Replace
from nestfold.interp.services.trace import active_trace
from nestfold.interp.values import Con
from nestfold.interp.values import Value
from nestfold.interp.values import as_int
from nestfold.interp.values import nat
from nestfold.utils.exceptions import MissingCaseError
from nestfold.utils.exceptions import NativeFunctionError
from nestfold.utils.exceptions import NestfoldError

logger = logging.getLogger(__name__)

type LeafFn = Callable[[Value], Value]


def _add(ctx: CaseContext) -> Value:
    return nat(sum(as_int(a) for a in ctx.args))


BUILTIN_NATIVES: dict[str, NativeFn] = {
    "id": lambda ctx: ctx.args[0],
    "const0": lambda ctx: nat(0),
    "add": _add,
}


def rebuild(node: PatternNode, fill: tuple[Any, ...], tag: str | None = None) -> Any:
    """Instantiate a pattern with the hole values; tag, if given, renames the outermost constructor."""
    if isinstance(node, PHole):
        return fill[node.position]
    return Con(tag or node.tag, tuple(rebuild(c, fill) for c in node.children))


class FoldEvaluator:
    """Applies one algebra over one fold, recursing at the translated indexes."""

    def __init__(self, spec: FoldSpec, algebra: Algebra, natives: Mapping[str, NativeFn] | None = None):
        algebra.ensure_covers(spec)
        self.spec = spec
        self.algebra = algebra
        self.natives = {**BUILTIN_NATIVES, **(natives or {})}

    def run(self, i: IndexExpr, v: Value) -> Any:
        case, binding = self.spec.select(i, v)
        trace = active_trace()
        args: list[Any] = []
        for child, arg in zip(case.extract(v), case.args, strict=True):
            if isinstance(arg, Recursive):
                index = substitute_index(arg.index, binding)
                if trace is not None:
                    trace.record(child, index, v)  # type: ignore[arg-type]
                args.append(self.run(index, child))  # type: ignore[arg-type]
            else:
                args.append(child)
        return self.apply(case, i, binding, v, tuple(args))

    def apply(
        self,
        case: CaseSpec,
        i: IndexExpr,
        binding: Mapping[str, IndexExpr],
        v: Value,
        args: tuple[Any, ...],
    ) -> Any:
        target = self.algebra.target(case.name)
        recursive = tuple(isinstance(a, Recursive) for a in case.args)
        if isinstance(target, Replace):
            if isinstance(case.shape, PCon):
                return rebuild(case.shape, args, target.tag)
            return Con(target.tag, args)
        return self.call(target, CaseContext(case, i, binding, v, args, recursive))

    def call(self, target: AlgebraTarget, ctx: CaseContext) -> Any:
        if isinstance(target, Const):
            return target.value
        if isinstance(target, Replace):
            return Con(target.tag, ctx.args)
        try:
            fn = self.natives[target.key]
        except KeyError:
            msg = f"no native function registered under {target.key!r}"
            raise NativeFunctionError(msg) from None
        try:
            return fn(ctx)
        except NestfoldError:
            raise
        except Exception as exc:
            msg = f"native {target.key!r} failed in {self.spec.name}.{ctx.case.name}: {exc}"
            raise NativeFunctionError(msg) from exc


def eval_fold(
    spec: FoldSpec,
    algebra: Algebra,
    i: IndexExpr,
    v: Value,
    natives: Mapping[str, NativeFn] | None = None,
) -> Any:
    return FoldEvaluator(spec, algebra, natives).run(i, v)


def eval_map(
    spec: FoldSpec,
    leaf_fns: Mapping[str, LeafFn],
    i: IndexExpr,
    v: Value,
    natives: Mapping[str, NativeFn] | None = None,
) -> Value:
    """The generic map: constructors kept, carrier leaves sent through leaf_fns (identity when absent)."""
    table: dict[str, NativeFn] = dict(natives or {})
    for param in spec.params:
        fn = leaf_fns.get(param, lambda x: x)
        table[leaf_key(param)] = lambda ctx, fn=fn: fn(ctx.args[0])
    for case in spec.cases:
        if isinstance(case.shape, PCon):
            table[rebuild_key(case.name)] = _rebuild_mapped(case, leaf_fns, natives)
    return eval_fold(spec, derive_map_spec(spec), i, v, table)


def _rebuild_mapped(
    case: CaseSpec,
    leaf_fns: Mapping[str, LeafFn],
    natives: Mapping[str, NativeFn] | None,
) -> NativeFn:
    def native(ctx: CaseContext) -> Value:
        mapped: list[Any] = []
        for value, arg in zip(ctx.args, case.args, strict=True):
            match arg:
                case Raw(Var(param)):
                    mapped.append(leaf_fns.get(param, lambda x: x)(value))
                case RawIndexed(idx, fold):
                    mapped.append(eval_map(fold, leaf_fns, substitute_index(idx, ctx.bindings), value, natives))
                case _:
                    mapped.append(value)
        return rebuild(case.shape, tuple(mapped))  # type: ignore[arg-type]

    return native


class HOFoldEvaluator(FoldEvaluator):
    """
    The direct fold instantiated at the higher-order motive: parameter leaves map to
    themselves, cases of the root constructor go to the higher-order algebra, and the
    other closure constructors rebuild themselves.
    """

    def __init__(
        self,
        hspec: HOFoldSpec,
        algebra: Mapping[str, AlgebraTarget],
        natives: Mapping[str, NativeFn] | None = None,
    ):
        self.hspec = hspec
        self.targets = dict(algebra)
        base = hspec.base
        missing = [a.name for a in hspec.args if a.name not in self.targets]
        if missing:
            msg = f"{hspec.name} needs argument(s) {', '.join(missing)}"
            raise MissingCaseError(msg)
        placeholder: list[tuple[str, AlgebraTarget]] = []
        for case in base.cases:
            arg = hspec.arg_for(case.tag or "")
            if case.is_leaf:
                placeholder.append((case.name, Native("id")))
            elif arg is not None:
                placeholder.append((case.name, self.targets[arg.name]))
            else:
                placeholder.append((case.name, Replace(case.tag or "")))
        super().__init__(base, Algebra.of(placeholder), natives)

    def apply(
        self,
        case: CaseSpec,
        i: IndexExpr,
        binding: Mapping[str, IndexExpr],
        v: Value,
        args: tuple[Any, ...],
    ) -> Any:
        arg = self.hspec.arg_for(case.tag or "") if isinstance(case.shape, PCon) else None
        if arg is None:
            return super().apply(case, i, binding, v, args)
        shape: PCon = case.shape  # type: ignore[assignment]
        children = tuple(rebuild(c, args) for c in shape.children)
        recursive = tuple(_holds_recursion(c, case) for c in shape.children)
        return self.call(self.targets[arg.name], CaseContext(case, i, binding, v, children, recursive))


def _holds_recursion(node: PatternNode, case: CaseSpec) -> bool:
    if isinstance(node, PHole):
        return isinstance(case.args[node.position], Recursive)
    return any(_holds_recursion(c, case) for c in node.children)


def eval_hofold(
    hspec: HOFoldSpec,
    algebra: Mapping[str, AlgebraTarget],
    v: Value,
    natives: Mapping[str, NativeFn] | None = None,
) -> Any:
    """Run a higher-order fold on a value of the root type at its own parameters."""
    return HOFoldEvaluator(hspec, algebra, natives).run(hspec.root_index, v)
