"""Exact motivic principal value engine (python bindings)."""

from ._core import (
    Document,
    EngineError,
    Expr,
    exceptional_alpha,
    parse_config,
    parse_expr,
    scenarios,
)

__all__ = [
    "Document",
    "EngineError",
    "Expr",
    "exceptional_alpha",
    "parse_config",
    "parse_expr",
    "scenarios",
]
