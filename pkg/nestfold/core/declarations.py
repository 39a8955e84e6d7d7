"""
Abstract syntax of nested data type declaration programs.
"""
from __future__ import annotations

from collections.abc import Iterator
from collections.abc import Mapping
from dataclasses import dataclass
from dataclasses import field
from functools import cached_property

from nestfold.utils.exceptions import UnknownRootError
from nestfold.utils.exceptions import UnknownTypeConstructorError


@dataclass(frozen=True, slots=True)
class Position:
    line: int
    column: int


# =============================================================================
# Type expressions
# =============================================================================

@dataclass(frozen=True, slots=True)
class Var:
    """A type parameter."""

    name: str


@dataclass(frozen=True, slots=True)
class App:
    """A type constructor applied to arguments (possibly none)."""

    con: str
    args: tuple[TypeExpr, ...] = ()


@dataclass(frozen=True, slots=True)
class Arrow:
    """A parenthesised function type; only produced so kind checking can reject it."""

    domain: TypeExpr
    codomain: TypeExpr


type TypeExpr = Var | App | Arrow


def substitute(t: TypeExpr, mapping: Mapping[str, TypeExpr]) -> TypeExpr:
    """Replace type variables simultaneously; unmapped variables are kept."""
    match t:
        case Var(name):
            return mapping.get(name, t)
        case App(con, args):
            return App(con, tuple(substitute(a, mapping) for a in args))
        case Arrow(domain, codomain):
            return Arrow(substitute(domain, mapping), substitute(codomain, mapping))
    raise TypeError(t)


def mentioned_constructors(t: TypeExpr) -> Iterator[str]:
    """Type constructor names of t in left-to-right preorder."""
    match t:
        case App(con, args):
            yield con
            for arg in args:
                yield from mentioned_constructors(arg)
        case Arrow(domain, codomain):
            yield from mentioned_constructors(domain)
            yield from mentioned_constructors(codomain)


def replace_constructor(t: TypeExpr, con: str, replacement: str) -> TypeExpr:
    match t:
        case Var():
            return t
        case App(name, args):
            new_args = tuple(replace_constructor(a, con, replacement) for a in args)
            return App(replacement if name == con else name, new_args)
        case Arrow(domain, codomain):
            return Arrow(
                replace_constructor(domain, con, replacement),
                replace_constructor(codomain, con, replacement),
            )
    raise TypeError(t)


# =============================================================================
# Declarations
# =============================================================================

@dataclass(frozen=True, slots=True)
class ConstructorDecl:
    name: str
    arg_types: tuple[TypeExpr, ...] = ()
    position: Position | None = field(default=None, compare=False, repr=False)

    @property
    def arity(self) -> int:
        return len(self.arg_types)


@dataclass(frozen=True, slots=True)
class DataDecl:
    name: str
    params: tuple[str, ...]
    constructors: tuple[ConstructorDecl, ...]
    position: Position | None = field(default=None, compare=False, repr=False)

    @property
    def arity(self) -> int:
        return len(self.params)

    @property
    def result_type(self) -> App:
        """The declared type applied to its own parameters."""
        return App(self.name, tuple(Var(p) for p in self.params))

    def constructor(self, name: str) -> ConstructorDecl:
        for ctor in self.constructors:
            if ctor.name == name:
                return ctor
        raise KeyError(name)

    def instantiate(self, ctor: ConstructorDecl, args: tuple[TypeExpr, ...]) -> tuple[TypeExpr, ...]:
        """Argument types of ctor with the parameters replaced by args."""
        mapping = dict(zip(self.params, args, strict=True))
        return tuple(substitute(t, mapping) for t in ctor.arg_types)


@dataclass(frozen=True)
class Program:
    decls: tuple[DataDecl, ...] = ()

    @cached_property
    def _by_name(self) -> dict[str, DataDecl]:
        return {d.name: d for d in self.decls}

    @cached_property
    def _owners(self) -> dict[str, DataDecl]:
        return {c.name: d for d in self.decls for c in d.constructors}

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(d.name for d in self.decls)

    def __contains__(self, name: object) -> bool:
        return name in self._by_name

    def decl(self, name: str) -> DataDecl:
        try:
            return self._by_name[name]
        except KeyError:
            msg = f"unknown type constructor {name!r}"
            raise UnknownTypeConstructorError(msg) from None

    def root(self, name: str) -> DataDecl:
        """Like decl, but reports the name as a missing root."""
        try:
            return self._by_name[name]
        except KeyError:
            msg = f"root type {name!r} is not declared"
            raise UnknownRootError(msg) from None

    def owner(self, ctor_name: str) -> DataDecl:
        """The declaration that introduces constructor ctor_name."""
        try:
            return self._owners[ctor_name]
        except KeyError:
            msg = f"unknown constructor {ctor_name!r}"
            raise UnknownTypeConstructorError(msg) from None

    def has_constructor(self, ctor_name: str) -> bool:
        return ctor_name in self._owners

    def restricted(self, names: tuple[str, ...]) -> Program:
        """The sub-program holding exactly the named declarations, in the given order."""
        return Program(tuple(self.decl(n) for n in names))

    def merged(self, other: Program) -> Program:
        """Concatenation keeping the first declaration of each name."""
        seen = set(self.names)
        return Program(self.decls + tuple(d for d in other.decls if d.name not in seen))
