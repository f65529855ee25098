"""Declaration-level structural model of a Java compilation unit."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Optional

TYPE_KINDS = ("class", "interface", "enum", "record", "annotation")


@dataclass
class ImportDecl:
    qualified_name: str
    is_static: bool = False
    is_wildcard: bool = False

    @property
    def simple_name(self) -> str:
        return self.qualified_name.rsplit(".", 1)[-1]


@dataclass
class BodyStats:
    cyclomatic: int
    max_nesting: int
    statement_count: int
    referenced_field_names: frozenset[str]
    called_method_names: frozenset[str]
    body_hash: int
    # uppercase-initial names used in the body (candidate type references)
    type_refs: frozenset[str] = frozenset()
    # statements of the shape `[this.]a = b;` as (lhs, rhs) name pairs
    simple_assignments: tuple[tuple[str, str], ...] = ()


@dataclass
class MethodDecl:
    name: str
    param_type_names: list[str]
    return_type_name: Optional[str]  # None for constructors
    modifiers: set[str] = field(default_factory=set)
    body_stats: Optional[BodyStats] = None
    line_span: tuple[int, int] = (0, 0)
    param_names: list[str] = field(default_factory=list)
    param_type_texts: list[str] = field(default_factory=list)
    type_params: list[str] = field(default_factory=list)

    @property
    def signature_key(self) -> str:
        return f"{self.name}({','.join(self.param_type_names)})"


@dataclass
class FieldDecl:
    name: str
    type_name: str
    modifiers: set[str] = field(default_factory=set)


@dataclass
class TypeDecl:
    name: str
    kind: str  # one of TYPE_KINDS
    modifiers: set[str] = field(default_factory=set)
    supertypes: list[str] = field(default_factory=list)
    fields: list[FieldDecl] = field(default_factory=list)
    methods: list[MethodDecl] = field(default_factory=list)
    nested: list["TypeDecl"] = field(default_factory=list)
    type_params: list[str] = field(default_factory=list)
    line_span: tuple[int, int] = (0, 0)


@dataclass
class SourceModel:
    path: str
    package_name: str = ""
    imports: list[ImportDecl] = field(default_factory=list)
    types: list[TypeDecl] = field(default_factory=list)
    parse_warnings: list[str] = field(default_factory=list)
    http_literal_count: int = 0


def iter_types(model: SourceModel) -> Iterator[tuple[str, TypeDecl]]:
    """Yield (dotted qualified name, decl) for every type, nested included."""
    stack = [(t.name, t) for t in reversed(model.types)]
    while stack:
        qname, decl = stack.pop()
        yield qname, decl
        for inner in reversed(decl.nested):
            stack.append((f"{qname}.{inner.name}", inner))


def nested_type_names(decl: TypeDecl) -> set[str]:
    names: set[str] = set()
    stack = list(decl.nested)
    while stack:
        inner = stack.pop()
        names.add(inner.name)
        stack.extend(inner.nested)
    return names
