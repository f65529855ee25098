"""Name catalogs driving the signal detectors.

The catalogs (collection type names, injection annotations, persistence and
HTTP-client namespaces, design-pattern suffixes, java.lang names) are fixed
data shipped with the tool so that feature schema v1 stays reproducible.
A user-supplied catalog file may extend the lists; such files must declare
their own, higher schema_version.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources

from .errors import SchemaViolation

BUILTIN_CATALOG = "catalog_v1.json"


@dataclass(frozen=True)
class Catalog:
    schema_version: int
    collections: frozenset[str]
    di_annotations: frozenset[str]
    persistence_namespaces: tuple[str, ...]
    persistence_type_suffixes: tuple[str, ...]
    api_namespaces: tuple[str, ...]
    pattern_suffixes: tuple[str, ...]
    java_lang: frozenset[str] = field(default_factory=frozenset)


_REQUIRED_KEYS = (
    "schema_version", "collections", "di_annotations",
    "persistence_namespaces", "persistence_type_suffixes",
    "api_namespaces", "pattern_suffixes", "java_lang",
)


def _from_mapping(raw: dict) -> Catalog:
    missing = [k for k in _REQUIRED_KEYS if k not in raw]
    if missing:
        raise SchemaViolation(f"catalog missing keys: {', '.join(missing)}")
    version = raw["schema_version"]
    if not isinstance(version, int) or version < 1:
        raise SchemaViolation(f"catalog schema_version must be a positive int, got {version!r}")
    return Catalog(
        schema_version=version,
        collections=frozenset(raw["collections"]),
        di_annotations=frozenset(raw["di_annotations"]),
        persistence_namespaces=tuple(raw["persistence_namespaces"]),
        persistence_type_suffixes=tuple(raw["persistence_type_suffixes"]),
        api_namespaces=tuple(raw["api_namespaces"]),
        pattern_suffixes=tuple(raw["pattern_suffixes"]),
        java_lang=frozenset(raw["java_lang"]),
    )


def load_builtin_catalog() -> Catalog:
    text = resources.files("commitgauge.data").joinpath(BUILTIN_CATALOG).read_text("utf-8")
    return _from_mapping(json.loads(text))


def load_catalog(path=None) -> Catalog:
    """Load a catalog file, defaulting to the shipped v1 catalog."""
    if path is None:
        return load_builtin_catalog()
    with open(path, encoding="utf-8") as fh:
        return _from_mapping(json.load(fh))
