"""
JSON mirror of derived artifacts.

Top-level keys keep a fixed order: index_type, interpretation, fold_spec,
induction_spec, hofold, indexed_rep, church.
"""
from __future__ import annotations

import json
from typing import Any

from django.core.serializers.json import DjangoJSONEncoder

from nestfold.core.declarations import App
from nestfold.core.declarations import Arrow
from nestfold.core.declarations import Program
from nestfold.core.declarations import TypeExpr
from nestfold.core.declarations import Var
from nestfold.core.services.loader import load_program
from nestfold.core.services.printer import render_program
from nestfold.derive.artifacts import ArgSpec
from nestfold.derive.artifacts import CaseSpec
from nestfold.derive.artifacts import ChurchConstructor
from nestfold.derive.artifacts import ChurchEncodingDecl
from nestfold.derive.artifacts import DerivedArtifacts
from nestfold.derive.artifacts import FoldSpec
from nestfold.derive.artifacts import HOFoldArg
from nestfold.derive.artifacts import HOFoldSpec
from nestfold.derive.artifacts import Hypothesis
from nestfold.derive.artifacts import IndexCon
from nestfold.derive.artifacts import IndexConstructor
from nestfold.derive.artifacts import IndexedConstructor
from nestfold.derive.artifacts import IndexedRepDecl
from nestfold.derive.artifacts import IndexExpr
from nestfold.derive.artifacts import IndexTypeDecl
from nestfold.derive.artifacts import IndexVar
from nestfold.derive.artifacts import InductionCase
from nestfold.derive.artifacts import InductionSpec
from nestfold.derive.artifacts import InterpretationFn
from nestfold.derive.artifacts import InterpretationRule
from nestfold.derive.artifacts import ParamLeaf
from nestfold.derive.artifacts import PatternNode
from nestfold.derive.artifacts import PCon
from nestfold.derive.artifacts import PHole
from nestfold.derive.artifacts import Raw
from nestfold.derive.artifacts import RawIndexed
from nestfold.derive.artifacts import Recursive
from nestfold.utils.exceptions import DerivationError

# =============================================================================
# Leaves
# =============================================================================


def index_to_json(i: IndexExpr) -> dict[str, Any]:
    if isinstance(i, IndexVar):
        return {"var": i.name}
    return {"con": i.name, "args": [index_to_json(a) for a in i.args]}


def index_from_json(data: dict[str, Any]) -> IndexExpr:
    if "var" in data:
        return IndexVar(data["var"])
    return IndexCon(data["con"], tuple(index_from_json(a) for a in data["args"]))


def type_to_json(t: TypeExpr) -> dict[str, Any]:
    match t:
        case Var(name):
            return {"var": name}
        case App(con, args):
            return {"app": con, "args": [type_to_json(a) for a in args]}
        case Arrow(domain, codomain):
            return {"arrow": [type_to_json(domain), type_to_json(codomain)]}
    raise TypeError(t)


def type_from_json(data: dict[str, Any]) -> TypeExpr:
    if "var" in data:
        return Var(data["var"])
    if "arrow" in data:
        domain, codomain = data["arrow"]
        return Arrow(type_from_json(domain), type_from_json(codomain))
    return App(data["app"], tuple(type_from_json(a) for a in data["args"]))


def _pattern_to_json(node: PatternNode) -> dict[str, Any]:
    if isinstance(node, PHole):
        return {"hole": node.position}
    return {"con": node.tag, "children": [_pattern_to_json(c) for c in node.children]}


def _pattern_from_json(data: dict[str, Any]) -> PatternNode:
    if "hole" in data:
        return PHole(data["hole"])
    return PCon(data["con"], tuple(_pattern_from_json(c) for c in data["children"]))


# =============================================================================
# Index types and interpretations
# =============================================================================


def _ctor_to_json(c: IndexConstructor) -> dict[str, Any]:
    return {"name": c.name, "arity": c.arity, "denotes": c.denotes}


def index_type_to_json(t: IndexTypeDecl) -> dict[str, Any]:
    return {
        "name": t.name,
        "var_ctors": [_ctor_to_json(c) for c in t.var_ctors],
        "con_ctors": [_ctor_to_json(c) for c in t.con_ctors],
    }


def index_type_from_json(data: dict[str, Any]) -> IndexTypeDecl:
    def ctors(items: list[dict[str, Any]]) -> tuple[IndexConstructor, ...]:
        return tuple(IndexConstructor(c["name"], c["arity"], c["denotes"]) for c in items)

    return IndexTypeDecl(data["name"], ctors(data["var_ctors"]), ctors(data["con_ctors"]))


def interpretation_to_json(h: InterpretationFn, *, with_declarations: bool = True) -> dict[str, Any]:
    data: dict[str, Any] = {
        "name": h.name,
        "index_type": h.index_type.name,
        "params": list(h.params),
        "rules": [
            {"index_con": r.index_con, "binders": list(r.binders), "template": type_to_json(r.template)}
            for r in h.rules
        ],
        "outer": type_to_json(h.outer) if h.outer is not None else None,
    }
    if with_declarations:
        data["declarations"] = render_program(h.program)
    return data


def interpretation_from_json(
    data: dict[str, Any],
    index_type: IndexTypeDecl,
    program: Program | None = None,
) -> InterpretationFn:
    if program is None:
        program = load_program(data["declarations"])
    return InterpretationFn(
        name=data["name"],
        index_type=index_type,
        params=tuple(data["params"]),
        rules=tuple(
            InterpretationRule(r["index_con"], tuple(r["binders"]), type_from_json(r["template"])) for r in data["rules"]
        ),
        program=program,
        outer=type_from_json(data["outer"]) if data["outer"] is not None else None,
    )


# =============================================================================
# Folds
# =============================================================================


def _arg_to_json(arg: ArgSpec) -> dict[str, Any]:
    match arg:
        case Recursive(index):
            return {"recursive": index_to_json(index)}
        case Raw(t):
            return {"raw": type_to_json(t)}
        case RawIndexed(index, fold):
            return {"raw_indexed": index_to_json(index), "fold": fold_to_json(fold, embed_family=True)}
    raise TypeError(arg)


def _arg_from_json(data: dict[str, Any]) -> ArgSpec:
    if "recursive" in data:
        return Recursive(index_from_json(data["recursive"]))
    if "raw" in data:
        return Raw(type_from_json(data["raw"]))
    return RawIndexed(index_from_json(data["raw_indexed"]), fold_from_json(data["fold"]))


def fold_to_json(f: FoldSpec, *, embed_family: bool = False) -> dict[str, Any]:
    data: dict[str, Any] = {
        "name": f.name,
        "root": f.root,
        "direct": f.direct,
        "motive": f.motive,
        "cases": [
            {
                "name": c.name,
                "subject_index": index_to_json(c.subject_index),
                "shape": {"leaf": c.shape.param} if isinstance(c.shape, ParamLeaf) else _pattern_to_json(c.shape),
                "args": [_arg_to_json(a) for a in c.args],
            }
            for c in f.cases
        ],
    }
    if embed_family:
        if not isinstance(f.family, InterpretationFn):
            msg = f"{f.name}: only interpretation families can be embedded"
            raise DerivationError(msg)
        data["index_type"] = index_type_to_json(f.family.index_type)
        data["family"] = interpretation_to_json(f.family)
    return data


def fold_from_json(data: dict[str, Any], family: InterpretationFn | IndexedRepDecl | None = None) -> FoldSpec:
    if family is None:
        family = interpretation_from_json(data["family"], index_type_from_json(data["index_type"]))
    cases = []
    for c in data["cases"]:
        shape = c["shape"]
        cases.append(
            CaseSpec(
                c["name"],
                index_from_json(c["subject_index"]),
                ParamLeaf(shape["leaf"]) if "leaf" in shape else _pattern_from_json(shape),  # type: ignore[arg-type]
                tuple(_arg_from_json(a) for a in c["args"]),
            )
        )
    return FoldSpec(data["name"], data["root"], family, tuple(cases), data["direct"], data["motive"])


# =============================================================================
# Companions
# =============================================================================


def _induction_to_json(s: InductionSpec) -> dict[str, Any]:
    return {
        "name": s.name,
        "cases": [
            {
                "case": c.case,
                "binders": list(c.binders),
                "hypotheses": [{"binder": h.binder, "index": index_to_json(h.index)} for h in c.hypotheses],
            }
            for c in s.cases
        ],
    }


def _induction_from_json(data: dict[str, Any], fold: FoldSpec) -> InductionSpec:
    cases = tuple(
        InductionCase(
            c["case"],
            tuple(c["binders"]),
            tuple(Hypothesis(h["binder"], index_from_json(h["index"])) for h in c["hypotheses"]),
        )
        for c in data["cases"]
    )
    return InductionSpec(data["name"], fold, cases)


def _hofold_to_json(s: HOFoldSpec) -> dict[str, Any]:
    return {
        "name": s.name,
        "hp": interpretation_to_json(s.hp, with_declarations=False),
        "root_index": index_to_json(s.root_index),
        "args": [
            {
                "name": a.name,
                "constructor": a.constructor,
                "arg_types": [type_to_json(t) for t in a.arg_types],
                "result": type_to_json(a.result),
            }
            for a in s.args
        ],
    }


def _hofold_from_json(data: dict[str, Any], fold: FoldSpec, h: InterpretationFn) -> HOFoldSpec:
    args = tuple(
        HOFoldArg(a["name"], a["constructor"], tuple(type_from_json(t) for t in a["arg_types"]), type_from_json(a["result"]))
        for a in data["args"]
    )
    hp = interpretation_from_json(data["hp"], h.index_type, h.program)
    return HOFoldSpec(data["name"], fold, hp, index_from_json(data["root_index"]), args)


def _indexed_to_json(r: IndexedRepDecl) -> dict[str, Any]:
    return {
        "name": r.name,
        "fold_name": r.fold_name,
        "params": list(r.params),
        "constructors": [
            {
                "name": c.name,
                "case": c.case,
                "source": c.source,
                "subject_index": index_to_json(c.subject_index),
                "args": [_arg_to_json(a) for a in c.args],
            }
            for c in r.constructors
        ],
    }


def _indexed_from_json(data: dict[str, Any], fold: FoldSpec) -> IndexedRepDecl:
    constructors = tuple(
        IndexedConstructor(
            c["name"],
            c["case"],
            c["source"],
            index_from_json(c["subject_index"]),
            tuple(_arg_from_json(a) for a in c["args"]),
        )
        for c in data["constructors"]
    )
    return IndexedRepDecl(
        name=data["name"],
        fold_name=data["fold_name"],
        index_type=fold.index_type,
        params=tuple(data["params"]),
        constructors=constructors,
        program=fold.family.program,
        source=fold,
    )


def _church_to_json(c: ChurchEncodingDecl) -> dict[str, Any]:
    return {
        "name": c.name,
        "cfold_name": c.cfold_name,
        "cmap_name": c.cmap_name,
        "constructors": [
            {"name": k.name, "case": k.case, "holes": list(k.holes), "recursive": list(k.recursive)}
            for k in c.constructors
        ],
    }


def _church_from_json(data: dict[str, Any], fold: FoldSpec) -> ChurchEncodingDecl:
    constructors = tuple(
        ChurchConstructor(k["name"], k["case"], tuple(k["holes"]), tuple(k["recursive"])) for k in data["constructors"]
    )
    return ChurchEncodingDecl(data["name"], fold, constructors, data["cfold_name"], data["cmap_name"])


# =============================================================================
# Bundles
# =============================================================================


def artifacts_to_json(a: DerivedArtifacts) -> dict[str, Any]:
    return {
        "index_type": index_type_to_json(a.index_type),
        "interpretation": interpretation_to_json(a.interpretation),
        "fold_spec": fold_to_json(a.fold_spec),
        "induction_spec": _induction_to_json(a.induction_spec),
        "hofold": _hofold_to_json(a.hofold),
        "indexed_rep": _indexed_to_json(a.indexed_rep),
        "church": _church_to_json(a.church),
    }


def artifacts_from_json(data: dict[str, Any]) -> DerivedArtifacts:
    index_type = index_type_from_json(data["index_type"])
    h = interpretation_from_json(data["interpretation"], index_type)
    fold = fold_from_json(data["fold_spec"], h)
    return DerivedArtifacts(
        root=fold.root,
        program=h.program,
        index_type=index_type,
        interpretation=h,
        fold_spec=fold,
        induction_spec=_induction_from_json(data["induction_spec"], fold),
        hofold=_hofold_from_json(data["hofold"], fold, h),
        indexed_rep=_indexed_from_json(data["indexed_rep"], fold),
        church=_church_from_json(data["church"], fold),
    )


def dump_artifacts(a: DerivedArtifacts) -> str:
    return json.dumps(artifacts_to_json(a), indent=2, cls=DjangoJSONEncoder) + "\n"


def load_artifacts(text: str) -> DerivedArtifacts:
    return artifacts_from_json(json.loads(text))
