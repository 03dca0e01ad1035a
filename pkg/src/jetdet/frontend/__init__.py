"""Parsing, reporting and CLI: the package's only I/O boundary."""

from .cli import cli_dispatch, main
from .parsing import (
    PolySource,
    default_names,
    infer_variables,
    parse_poly,
    poly_to_str,
)
from .report import SCHEMA_ID, dumps, load_schema, run_analysis

__all__ = [
    "PolySource",
    "SCHEMA_ID",
    "cli_dispatch",
    "default_names",
    "dumps",
    "infer_variables",
    "load_schema",
    "main",
    "parse_poly",
    "poly_to_str",
    "run_analysis",
]
