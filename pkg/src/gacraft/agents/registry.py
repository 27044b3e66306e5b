"""Loading and validation of the declarative function library."""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .records import FunctionSpec, Param, SubtaskCategory

MIN_PER_CATEGORY = 6


class RegistryError(Exception):
    pass


@dataclass(frozen=True)
class Registry:
    """An immutable set of function specs indexed by name and category."""

    functions: tuple[FunctionSpec, ...]

    def __post_init__(self):
        seen: set[str] = set()
        counts: dict[SubtaskCategory, int] = {c: 0 for c in SubtaskCategory}
        for spec in self.functions:
            if spec.name in seen:
                raise RegistryError(f"duplicate function {spec.name!r}")
            seen.add(spec.name)
            counts[spec.category] += 1
        thin = [c.value for c, n in counts.items() if n < MIN_PER_CATEGORY]
        if thin:
            raise RegistryError(
                f"categories below {MIN_PER_CATEGORY} functions: {', '.join(thin)}"
            )

    def get(self, name: str) -> FunctionSpec | None:
        for spec in self.functions:
            if spec.name == name:
                return spec
        return None

    def for_category(self, category: SubtaskCategory) -> tuple[FunctionSpec, ...]:
        return tuple(s for s in self.functions if s.category == category)


def registry_from_json(doc: dict) -> Registry:
    """Build and validate a registry from its document form."""
    if not isinstance(doc, dict) or "functions" not in doc:
        raise RegistryError("registry document needs a 'functions' list")
    specs = []
    for i, entry in enumerate(doc["functions"]):
        try:
            params = tuple(
                Param(
                    name=p["name"],
                    kind=p["kind"],
                    semantic=p.get("semantic", ""),
                    description=p.get("description", ""),
                )
                for p in entry.get("parameters", ())
            )
            specs.append(FunctionSpec(
                name=entry["name"],
                category=SubtaskCategory(entry["category"]),
                description=entry.get("description", ""),
                parameters=params,
                returns=entry["returns"],
                script_template=entry["script_template"],
            ))
        except (KeyError, ValueError, TypeError) as exc:
            raise RegistryError(f"functions[{i}]: {exc}") from exc
    return Registry(tuple(specs))


def registry_to_json(registry: Registry) -> dict:
    return {
        "version": 1,
        "functions": [
            {
                "name": s.name,
                "category": s.category.value,
                "description": s.description,
                "parameters": [
                    {
                        "name": p.name,
                        "kind": p.kind,
                        "semantic": p.semantic,
                        "description": p.description,
                    }
                    for p in s.parameters
                ],
                "returns": s.returns,
                "script_template": s.script_template,
            }
            for s in registry.functions
        ],
    }


@lru_cache(maxsize=1)
def load_registry() -> Registry:
    """The bundled registry, loaded once per process."""
    text = resources.files("gacraft.data").joinpath("function_registry.json").read_text()
    return registry_from_json(json.loads(text))
