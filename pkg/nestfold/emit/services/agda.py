"""
Agda source for derived artifacts.

One convention throughout: index arguments of fold cases are explicit, carriers
and motives are implicit, and every fold takes its cases before the index and
the subject. Constructors of indexed families take their indexes implicitly.
"""
from __future__ import annotations

import logging
from collections.abc import Callable
from collections.abc import Mapping

from nestfold.core.declarations import App
from nestfold.core.declarations import Arrow
from nestfold.core.declarations import DataDecl
from nestfold.core.declarations import Program
from nestfold.core.declarations import Var
from nestfold.core.declarations import mentioned_constructors
from nestfold.core.declarations import substitute
from nestfold.core.services.printer import render_constructor
from nestfold.core.services.printer import render_type
from nestfold.derive.artifacts import ArgSpec
from nestfold.derive.artifacts import CaseSpec
from nestfold.derive.artifacts import ChurchEncodingDecl
from nestfold.derive.artifacts import DerivedArtifacts
from nestfold.derive.artifacts import FoldSpec
from nestfold.derive.artifacts import HOFoldSpec
from nestfold.derive.artifacts import IndexCon
from nestfold.derive.artifacts import IndexedRepDecl
from nestfold.derive.artifacts import IndexExpr
from nestfold.derive.artifacts import IndexTypeDecl
from nestfold.derive.artifacts import IndexVar
from nestfold.derive.artifacts import InductionCase
from nestfold.derive.artifacts import InductionSpec
from nestfold.derive.artifacts import InterpretationFn
from nestfold.derive.artifacts import ParamLeaf
from nestfold.derive.artifacts import PatternNode
from nestfold.derive.artifacts import PCon
from nestfold.derive.artifacts import PHole
from nestfold.derive.artifacts import Raw
from nestfold.derive.artifacts import RawIndexed
from nestfold.derive.artifacts import Recursive
from nestfold.derive.artifacts import index_variables
from nestfold.derive.services.induction import case_binders
from nestfold.derive.services.naming import Naming
from nestfold.emit.models import EmitOptions
from nestfold.emit.services.formatter import ARROW
from nestfold.emit.services.formatter import canonical_text
from nestfold.emit.services.formatter import clause
from nestfold.emit.services.formatter import flat_signature
from nestfold.emit.services.formatter import parens
from nestfold.emit.services.formatter import signature
from nestfold.emit.services.formatter import wrap_arrows
from nestfold.emit.services.views import AgdaView
from nestfold.emit.services.views import family_name
from nestfold.emit.services.views import family_type
from nestfold.emit.services.views import fold_family_type
from nestfold.emit.services.views import implicit_sets
from nestfold.emit.services.views import set_kind
from nestfold.utils.constants import AGDA_INDENT
from nestfold.utils.constants import CHURCH_CAVEAT
from nestfold.utils.constants import MOTIVE
from nestfold.utils.constants import TYPE_IN_TYPE_PRAGMA
from nestfold.utils.enums import IncludePart
from nestfold.utils.exceptions import EmitError

logger = logging.getLogger(__name__)

type FamilyAt = Callable[[IndexExpr], str]

LEAF_FUNCTIONS = ("f", "g", "h", "k")
SUBJECT = "xs"


# =============================================================================
# Shared pieces
# =============================================================================


def _top_index(fold: FoldSpec, view: AgdaView) -> IndexExpr:
    """The index a fold's type quantifies over: a variable, or the single point."""
    if view.regular:
        return IndexCon(fold.index_type.con_ctors[0].name)
    return IndexVar(Naming.index_variables(1)[0])


def _top_binder(view: AgdaView) -> list[str]:
    return [] if view.regular else [view.binder(Naming.index_variables(1))]


def _implicit_args(params: tuple[str, ...]) -> list[str]:
    return [f"{{{p}}}" for p in params]


def _sets(params: tuple[str, ...]) -> list[str]:
    return [implicit_sets(params)] if params else []


def _lambda(binders: list[str], body: str) -> str:
    if not binders:
        return parens(body)
    return f"(\\ {' '.join(binders)} -> {body})"


def _pattern(node: PatternNode, terms: tuple[str, ...] | list[str], *, atomic: bool = True) -> str:
    if isinstance(node, PHole):
        return terms[node.position]
    if not node.children:
        return node.tag
    text = " ".join([node.tag, *(_pattern(c, terms) for c in node.children)])
    return f"({text})" if atomic else text


def _subject_pattern(case: CaseSpec, binders: tuple[str, ...]) -> str:
    if isinstance(case.shape, ParamLeaf):
        return binders[0]
    return _pattern(case.shape, binders)


def _is_flat(case: CaseSpec) -> bool:
    shape = case.shape
    return isinstance(shape, PCon) and all(
        isinstance(child, PHole) and child.position == k for k, child in enumerate(shape.children)
    )


def _child_type(fold: FoldSpec, arg: ArgSpec) -> str:
    match arg:
        case Recursive(index):
            return fold_family_type(fold, index)
        case Raw(t):
            return render_type(t, atomic=isinstance(t, Arrow))
        case RawIndexed(index, inner):
            return fold_family_type(inner, index)
    raise TypeError(arg)


def _fresh_params(params: tuple[str, ...]) -> tuple[str, ...]:
    """As many new carrier names as params, taken from the alphabet after them."""
    taken = set(params)
    fresh = []
    for code in range(ord("a"), ord("z") + 1):
        letter = chr(code)
        if letter not in taken and letter not in LEAF_FUNCTIONS and letter != MOTIVE:
            fresh.append(letter)
        if len(fresh) == len(params):
            break
    return tuple(fresh)


def _motive_lambda(fold: FoldSpec, view: AgdaView, family: FamilyAt) -> str:
    top = _top_index(fold, view)
    if view.regular:
        return f"{{{family(top)}}}"
    return f"{{\\ {view.index(top)} -> {family(top)}}}"


def _carrier_terms(
    case: CaseSpec,
    functions: Mapping[str, str],
    fold_name: str,
) -> tuple[str, ...] | None:
    """Hole terms with carrier functions applied to raw carrier children; None if nothing changes."""
    holes = case_binders(case)
    terms = []
    changed = False
    for hole, arg in zip(holes, case.args, strict=True):
        if isinstance(arg, Raw) and isinstance(arg.type, Var) and arg.type.name in functions:
            terms.append(f"({functions[arg.type.name]} {hole})")
            changed = True
        elif isinstance(arg, RawIndexed) or (
            isinstance(arg, Raw) and set(functions) & _type_vars(arg.type)
        ):
            msg = f"{fold_name}.{case.name}: cannot map through a raw argument that mentions a parameter"
            raise EmitError(msg)
        else:
            terms.append(hole)
    return tuple(terms) if changed else None


def _type_vars(t: object) -> set[str]:
    match t:
        case Var(name):
            return {name}
        case App(_, args):
            return set().union(*(_type_vars(a) for a in args))
        case Arrow(domain, codomain):
            return _type_vars(domain) | _type_vars(codomain)
    return set()


def _rebuilt(case: CaseSpec, view: AgdaView, functions: Mapping[str, str], fold_name: str) -> str:
    """The case rebuilding its own constructor, mapping raw carrier children."""
    index_vars = [view.var(b) for b in case.binders]
    terms = _carrier_terms(case, functions, fold_name)
    if terms is None and _is_flat(case):
        return _lambda(index_vars, case.tag or "")
    holes = case_binders(case)
    body = _pattern(case.shape, terms or holes, atomic=False)  # type: ignore[arg-type]
    return _lambda([*index_vars, *holes], body)


# =============================================================================
# Declarations, index types and interpretations
# =============================================================================


def render_data_decl(decl: DataDecl) -> str:
    if decl.params:
        head = f"data {decl.name} ({' '.join(decl.params)} : Set) : Set where"
    else:
        head = f"data {decl.name} : Set where"
    lines = [head]
    lines.extend(wrap_arrows(f"{AGDA_INDENT}{render_constructor(c, decl)}", AGDA_INDENT) for c in decl.constructors)
    return "\n".join(lines)


def render_nested_decls(program: Program) -> str:
    """Declarations with what they mention first; a mutual block if that order cannot exist."""
    ordered = list(reversed(program.decls))
    defined: set[str] = set()
    needs_mutual = False
    for decl in ordered:
        mentioned = {n for c in decl.constructors for t in c.arg_types for n in mentioned_constructors(t)}
        if mentioned - defined - {decl.name}:
            needs_mutual = True
        defined.add(decl.name)
    text = "\n\n".join(render_data_decl(d) for d in ordered)
    if not needs_mutual:
        return text
    body = "\n".join(f"{AGDA_INDENT}{line}" if line else "" for line in text.split("\n"))
    return f"mutual\n{body}"


def render_index_type(index_type: IndexTypeDecl) -> str:
    view = AgdaView.of(index_type)
    if view.regular:
        return ""
    lines = [f"data {view.name} : Set where"]
    for ctor in index_type.constructors:
        kinds = [view.name] * (ctor.arity + 1)
        lines.append(f"{AGDA_INDENT}{view.ctor(ctor.name)} : {ARROW.join(kinds)}")
    return "\n".join(lines)


def _type_function(h: InterpretationFn, name: str, extra: tuple[str, ...], extra_kinds: tuple[str, ...]) -> str:
    view = AgdaView.of(h.index_type)
    if h.outer is not None:
        msg = f"{h.name} wraps its tower in {render_type(h.outer)}; only plain interpretations are emitted"
        raise EmitError(msg)
    kinds = [view.name, *extra_kinds, *(["Set"] * len(h.params)), "Set"]
    lines = [f"{name} : {ARROW.join(kinds)}"]
    args = (*extra, *h.params)
    for rule in h.rules:
        variables = Naming.index_variables(len(rule.binders))
        pattern = view.index(IndexCon(rule.index_con, tuple(IndexVar(v) for v in variables)), atomic=True)
        calls = {
            b: App(name, (Var(view.var(v)), *(Var(a) for a in args)))
            for b, v in zip(rule.binders, variables, strict=True)
        }
        lines.append(clause(" ".join([name, pattern, *args]), render_type(substitute(rule.template, calls))))
    return "\n".join(lines)


def render_interpretation(h: InterpretationFn, root: str) -> str:
    view = AgdaView.of(h.index_type)
    if view.regular:
        return ""
    return _type_function(h, family_name(h, root, view), (), ())


def render_hp(hp: InterpretationFn) -> str:
    return _type_function(hp, hp.name, (MOTIVE,), (f"({set_kind(len(hp.params))})",))


# =============================================================================
# Folds and induction
# =============================================================================


def _case_type(case: CaseSpec, view: AgdaView, fold: FoldSpec) -> str:
    parts = [view.binder(case.binders)] if case.binders else []
    for arg in case.args:
        if isinstance(arg, Recursive):
            parts.append(view.motive_at(arg.index))
        else:
            parts.append(_child_type(fold, arg))
    parts.append(view.motive_at(case.subject_index))
    return f"({ARROW.join(parts)})" if len(parts) > 1 else parts[0]


def fold_signature(fold: FoldSpec, name: str | None = None, family: FamilyAt | None = None) -> str:
    view = AgdaView.of(fold.index_type)
    family = family or (lambda i: fold_family_type(fold, i))
    top = _top_index(fold, view)
    head = [*_sets(fold.params), f"{{{MOTIVE} : {view.motive_kind()}}}"]
    tail = ARROW.join([*_top_binder(view), family(top), view.motive_at(top)])
    return signature(name or fold.name, head, [_case_type(c, view, fold) for c in fold.cases], tail)


def fold_clauses(fold: FoldSpec, name: str | None = None) -> list[str]:
    """One clause per case: recurse at the argument's index on every recursive child."""
    view = AgdaView.of(fold.index_type)
    head = " ".join([name or fold.name, *(c.name for c in fold.cases)])
    clauses = []
    for case in fold.cases:
        binders = case_binders(case)
        lhs = [head] if view.regular else [head, view.index(case.subject_index, atomic=True)]
        lhs.append(_subject_pattern(case, binders))
        rhs = [case.name, *(view.var(b) for b in case.binders)]
        for binder, arg in zip(binders, case.args, strict=True):
            if isinstance(arg, Recursive):
                call = [head] if view.regular else [head, view.index(arg.index, atomic=True)]
                rhs.append(f"({' '.join([*call, binder])})")
            else:
                rhs.append(binder)
        clauses.append(clause(" ".join(lhs), " ".join(rhs)))
    return clauses


def render_fold(fold: FoldSpec) -> str:
    return "\n".join([fold_signature(fold), *fold_clauses(fold)])


def _induction_case_type(fold: FoldSpec, case: CaseSpec, ic: InductionCase, view: AgdaView) -> str:
    parts = [view.binder(case.binders)] if case.binders else []
    if isinstance(case.shape, ParamLeaf):
        binder = ic.binders[0]
        parts.extend([f"({binder} : {case.shape.param})", view.motive_at(case.subject_index, binder)])
        return f"({ARROW.join(parts)})"
    assumed = {h.binder for h in ic.hypotheses}
    for binder, arg in zip(ic.binders, case.args, strict=True):
        child = _child_type(fold, arg)
        parts.append(f"{{{binder} : {child}}}" if binder in assumed else f"({binder} : {child})")
    parts.extend(view.motive_at(h.index, h.binder) for h in ic.hypotheses)
    parts.append(view.motive_at(case.subject_index, _pattern(case.shape, ic.binders)))
    return f"({ARROW.join(parts)})" if len(parts) > 1 else parts[0]


def induction_signature(spec: InductionSpec) -> str:
    fold = spec.fold
    view = AgdaView.of(fold.index_type)
    top = _top_index(fold, view)
    subject_type = fold_family_type(fold, top)
    head = [*_sets(fold.params), f"{{{MOTIVE} : {view.motive_kind(subject_type)}}}"]
    cases = [_induction_case_type(fold, fold.case(ic.case), ic, view) for ic in spec.cases]
    tail = ARROW.join([*_top_binder(view), f"({SUBJECT} : {subject_type})", view.motive_at(top, SUBJECT)])
    return signature(spec.name, head, cases, tail)


def render_induction(spec: InductionSpec) -> str:
    """The induction principle's type over the fold's own clauses."""
    return "\n".join([induction_signature(spec), *fold_clauses(spec.fold, spec.name)])


# =============================================================================
# Generic map
# =============================================================================


def render_map(fold: FoldSpec) -> str:
    """map over every carrier, as the fold that rebuilds each constructor."""
    view = AgdaView.of(fold.index_type)
    name = Naming.map(fold.root)
    targets = _fresh_params(fold.params)
    functions = dict(zip(fold.params, LEAF_FUNCTIONS, strict=False))
    top = _top_index(fold, view)
    parts = [
        *_sets(fold.params + targets),
        *_top_binder(view),
        *(f"({p} -> {t})" for p, t in zip(fold.params, targets, strict=True)),
        fold_family_type(fold, top),
        fold_family_type(fold, top, targets),
    ]
    terms = []
    for case in fold.cases:
        if isinstance(case.shape, ParamLeaf):
            terms.append(functions[case.shape.param])
        else:
            terms.append(_rebuilt(case, view, functions, fold.name))
    index = [] if view.regular else [view.index(top)]
    lhs = [name, *_implicit_args(fold.params + targets), *index, *functions.values(), "l"]
    motive = _motive_lambda(fold, view, lambda i: fold_family_type(fold, i, targets))
    rhs = [fold.name, *_implicit_args(fold.params), motive, *terms, *index, "l"]
    return "\n".join([flat_signature(name, parts), clause(" ".join(lhs), " ".join(rhs))])


# =============================================================================
# Higher-order folds
# =============================================================================


def hofold_signature(spec: HOFoldSpec) -> str:
    decl = spec.hp.program.decl(spec.root)
    head = [*_sets(decl.params), f"{{{MOTIVE} : {set_kind(len(decl.params))}}}"]
    arguments = []
    for arg in spec.args:
        parts = [*_sets(decl.params), *(render_type(t, atomic=isinstance(t, Arrow)) for t in arg.arg_types)]
        parts.append(render_type(arg.result))
        arguments.append(f"({arg.name} : {ARROW.join(parts)})")
    result = spec.args[0].result if spec.args else App(MOTIVE, tuple(Var(p) for p in decl.params))
    return signature(spec.name, head, arguments, f"{render_type(decl.result_type)} -> {render_type(result)}")


def render_hofold(spec: HOFoldSpec) -> str:
    """Hp, the higher-order fold's type, and its definition by the dependently typed fold."""
    fold = spec.base
    view = AgdaView.of(fold.index_type)
    params = fold.params
    terms = []
    for case in fold.cases:
        index_vars = [view.var(b) for b in case.binders]
        if isinstance(case.shape, ParamLeaf):
            terms.append("(\\ y -> y)")
            continue
        if not _is_flat(case):
            msg = f"{fold.name}.{case.name} matches a nested pattern; the higher-order fold needs flat cases"
            raise EmitError(msg)
        arg = spec.arg_for(case.tag or "")
        terms.append(_lambda(index_vars, arg.name if arg is not None else case.tag or ""))
    motive = _motive_lambda(fold, view, lambda i: " ".join([spec.hp.name, view.index(i, atomic=True), MOTIVE, *params]))
    lhs = [spec.name, *_implicit_args((*params, MOTIVE)), *(a.name for a in spec.args), "x"]
    rhs = [fold.name, *_implicit_args(params), motive, *terms, view.index(spec.root_index, atomic=True), "x"]
    definition = "\n".join([hofold_signature(spec), clause(" ".join(lhs), " ".join(rhs))])
    return f"{render_hp(spec.hp)}\n\n{definition}"


# =============================================================================
# Indexed representations
# =============================================================================


def render_indexed_decl(rep: IndexedRepDecl) -> str:
    view = AgdaView.of(rep.index_type)
    kinds = [*([] if view.regular else [view.name]), *(["Set"] * len(rep.params)), "Set"]
    lines = [f"data {rep.name} : {ARROW.join(kinds)} where"]
    for ctor in rep.constructors:
        parts = _sets(rep.params)
        variables = index_variables(ctor.subject_index)
        if variables:
            parts.append(view.binder(variables, implicit=True))
        for arg in ctor.args:
            if isinstance(arg, Recursive):
                parts.append(family_type(rep, rep.name, arg.index))
            else:
                parts.append(_child_type(rep.fold_spec, arg))
        parts.append(family_type(rep, rep.name, ctor.subject_index))
        lines.append(wrap_arrows(f"{AGDA_INDENT}{ctor.name} : {ARROW.join(parts)}", AGDA_INDENT))
    return "\n".join(lines)


def _conversion(name: str, fold: FoldSpec, into: FoldSpec, terms: list[str]) -> str:
    """name folds fold's family into into's family, replacing each case by a term."""
    view = AgdaView.of(fold.index_type)
    top = _top_index(fold, view)
    index = [] if view.regular else [view.index(top)]
    params = fold.params
    parts = [*_sets(params), *_top_binder(view), fold_family_type(fold, top), fold_family_type(into, top)]
    motive = _motive_lambda(fold, view, lambda i: fold_family_type(into, i))
    lhs = [name, *_implicit_args(params), *index, "s"]
    rhs = [fold.name, *_implicit_args(params), motive, *terms, *index, "s"]
    return "\n".join([flat_signature(name, parts), clause(" ".join(lhs), " ".join(rhs))])


def render_conversions(rep: IndexedRepDecl) -> str:
    """to and from: each side folded into the other's constructors."""
    if rep.source is None:
        return ""
    view = AgdaView.of(rep.index_type)
    to_terms, from_terms = [], []
    for ctor in rep.constructors:
        index_vars = [view.var(b) for b in index_variables(ctor.subject_index)]
        to_terms.append(_lambda(index_vars, ctor.name))
        from_terms.append("(\\ x -> x)" if ctor.source is None else _lambda(index_vars, ctor.source))
    return "\n".join([
        _conversion("to", rep.source, rep.fold_spec, to_terms),
        _conversion("from", rep.fold_spec, rep.source, from_terms),
    ])


def render_indexed_rep(rep: IndexedRepDecl) -> str:
    sections = [render_indexed_decl(rep), render_fold(rep.fold_spec), render_conversions(rep)]
    return "\n\n".join(s for s in sections if s)


# =============================================================================
# Church encodings
# =============================================================================


def _church_at(church: ChurchEncodingDecl, view: AgdaView) -> Callable[..., str]:
    def at(i: IndexExpr, params: tuple[str, ...] | None = None) -> str:
        index = [] if view.regular else [view.index(i, atomic=True)]
        return " ".join([church.name, *index, *(church.fold.params if params is None else params)])

    return at


def render_church_type(church: ChurchEncodingDecl) -> str:
    fold = church.fold
    view = AgdaView.of(fold.index_type)
    top = _top_index(fold, view)
    kinds = [*([] if view.regular else [view.name]), *(["Set"] * len(fold.params)), "Set"]
    index = [] if view.regular else [view.index(top)]
    lhs = " ".join([church.name, *index, *fold.params])
    body = signature(
        lhs,
        [f"{{{MOTIVE} : {view.motive_kind()}}}"],
        [_case_type(c, view, fold) for c in fold.cases],
        view.motive_at(top),
        sep="=",
    )
    return f"{church.name} : {ARROW.join(kinds)}\n{body}"


def render_church_constructors(church: ChurchEncodingDecl) -> str:
    fold = church.fold
    view = AgdaView.of(fold.index_type)
    at = _church_at(church, view)
    cases = " ".join(c.name for c in fold.cases)
    blocks = []
    for ctor in church.constructors:
        case = fold.case(ctor.case)
        index_vars = [view.var(b) for b in case.binders]
        parts = _sets(fold.params)
        if case.binders:
            parts.append(view.binder(case.binders))
        for arg in case.args:
            parts.append(at(arg.index) if isinstance(arg, Recursive) else _child_type(fold, arg))
        parts.append(at(case.subject_index))
        applied = [
            f"({hole} {cases})" if recursive else hole
            for hole, recursive in zip(ctor.holes, ctor.recursive, strict=True)
        ]
        lhs = " ".join([ctor.name, *index_vars, *ctor.holes])
        rhs = f"\\ {cases} -> {' '.join([case.name, *index_vars, *applied])}"
        blocks.append("\n".join([flat_signature(ctor.name, parts), clause(lhs, rhs)]))
    return "\n\n".join(blocks)


def render_church_fold(church: ChurchEncodingDecl) -> str:
    fold = church.fold
    view = AgdaView.of(fold.index_type)
    at = _church_at(church, view)
    cases = [c.name for c in fold.cases]
    index = [] if view.regular else [view.index(_top_index(fold, view))]
    lhs = " ".join([church.cfold_name, *cases, *index, "b"])
    return "\n".join([fold_signature(fold, church.cfold_name, at), clause(lhs, " ".join(["b", *cases]))])


def render_church_map(church: ChurchEncodingDecl) -> str:
    fold = church.fold
    view = AgdaView.of(fold.index_type)
    at = _church_at(church, view)
    targets = _fresh_params(fold.params)
    functions = dict(zip(fold.params, LEAF_FUNCTIONS, strict=False))
    top = _top_index(fold, view)
    by_case = {c.case: c for c in church.constructors}
    terms = []
    for case in fold.cases:
        ctor = by_case[case.name]
        if isinstance(case.shape, ParamLeaf):
            terms.append(f"(\\ x -> {ctor.name} ({functions[case.shape.param]} x))")
            continue
        index_vars = [view.var(b) for b in case.binders]
        changed = _carrier_terms(case, functions, fold.name)
        if changed is None:
            terms.append(ctor.name)
        else:
            terms.append(_lambda([*index_vars, *ctor.holes], " ".join([ctor.name, *index_vars, *changed])))
    parts = [
        *_sets(fold.params + targets),
        *_top_binder(view),
        *(f"({p} -> {t})" for p, t in zip(fold.params, targets, strict=True)),
        at(top),
        at(top, targets),
    ]
    index = [] if view.regular else [view.index(top)]
    lhs = [church.cmap_name, *_implicit_args(fold.params + targets), *index, *functions.values()]
    motive = _motive_lambda(fold, view, lambda i: at(i, targets))
    rhs = [church.cfold_name, *_implicit_args(fold.params), motive, *terms, *index]
    return "\n".join([flat_signature(church.cmap_name, parts), clause(" ".join(lhs), " ".join(rhs))])


def render_church(church: ChurchEncodingDecl) -> str:
    sections = [
        f"{CHURCH_CAVEAT}\n{render_church_type(church)}",
        render_church_constructors(church),
        render_church_fold(church),
        render_church_map(church),
    ]
    return "\n\n".join(sections)


# =============================================================================
# Modules
# =============================================================================


def _interpretation_section(a: DerivedArtifacts) -> str:
    parts = [render_index_type(a.index_type), render_interpretation(a.interpretation, a.root)]
    return "\n\n".join(p for p in parts if p)


RENDERERS: dict[IncludePart, Callable[[DerivedArtifacts], str]] = {
    IncludePart.NESTED_DECL: lambda a: render_nested_decls(a.program),
    IncludePart.INTERPRETATION: _interpretation_section,
    IncludePart.FOLD: lambda a: render_fold(a.fold_spec),
    IncludePart.INDUCTION: lambda a: render_induction(a.induction_spec),
    IncludePart.MAP: lambda a: render_map(a.fold_spec),
    IncludePart.HOFOLD: lambda a: render_hofold(a.hofold),
    IncludePart.INDEXED_REP: lambda a: render_indexed_rep(a.indexed_rep),
    IncludePart.CHURCH: lambda a: render_church(a.church),
}


def emit_agda(artifacts: DerivedArtifacts, opts: EmitOptions | None = None) -> str:
    """A self-contained Agda module holding the requested parts in a fixed order."""
    opts = (opts or EmitOptions()).validated()
    parts = opts.parts()
    header = []
    if IncludePart.CHURCH in parts and opts.pragma:
        header.append(TYPE_IN_TYPE_PRAGMA)
    header.append(f"module {opts.module or artifacts.root} where")
    sections = ["\n".join(header)]
    for part in parts:
        text = RENDERERS[part](artifacts)
        if text:
            sections.append(text)
    logger.debug("Emitted %s with %s", artifacts.root, ", ".join(parts))
    return canonical_text("\n\n".join(sections))


def format_canonical(item: object) -> str:
    """Canonical text of a declaration, artifact or already-printed source; idempotent."""
    match item:
        case str():
            return canonical_text(item)
        case DataDecl():
            text = render_data_decl(item)
        case Program():
            text = render_nested_decls(item)
        case IndexTypeDecl():
            text = render_index_type(item)
        case FoldSpec():
            text = render_fold(item)
        case InductionSpec():
            text = render_induction(item)
        case HOFoldSpec():
            text = render_hofold(item)
        case IndexedRepDecl():
            text = render_indexed_rep(item)
        case ChurchEncodingDecl():
            text = render_church(item)
        case DerivedArtifacts():
            text = emit_agda(item)
        case _:
            msg = f"cannot format a {type(item).__name__}"
            raise EmitError(msg)
    return canonical_text(text)
