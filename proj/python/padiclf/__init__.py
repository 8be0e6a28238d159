"""Exact local factors over Q_p and coefficient matrices of metaplectic covers."""

import json

from ._core import (
    AddChar,
    CycNum,
    DomainError,
    Error,
    FieldCtx,
    MultChar,
    RatFun,
    canonical_characters,
    character_classes,
    cover_context,
    dmatrix,
    epsilon,
    lfactor,
    meta_gamma,
    plancherel,
    reducible_at_zero,
    suite_names,
    sweet_integral,
    tate_gamma,
    theta,
    theta_tilde,
)

__all__ = [
    "AddChar",
    "CycNum",
    "DomainError",
    "Error",
    "FieldCtx",
    "MultChar",
    "RatFun",
    "canonical_characters",
    "character_classes",
    "cover_context",
    "dmatrix",
    "emit_table",
    "epsilon",
    "lfactor",
    "meta_gamma",
    "plancherel",
    "reducible_at_zero",
    "run_suite",
    "suite_names",
    "sweet_integral",
    "tate_gamma",
    "theta",
    "theta_tilde",
]


def run_suite(suites, points=(), seed=1, samples=10, max_conductor=2, threads=0, full=False):
    """Run verification suites; returns the parsed JSON report."""
    from . import _core

    report = _core._run_suite(list(suites), [tuple(p) for p in points], seed, samples, max_conductor, threads, full)
    return json.loads(report)


def emit_table(kind, points=(), max_conductor=2):
    """Returns (rows as parsed JSON, LaTeX source)."""
    from . import _core

    data, latex = _core._emit_table(kind, [tuple(p) for p in points], max_conductor)
    return json.loads(data), latex
