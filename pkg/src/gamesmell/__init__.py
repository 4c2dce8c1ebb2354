"""Static analysis of JavaScript web games: code smells and pattern violations."""

from __future__ import annotations

__version__ = "0.1.0"

from gamesmell.config import AnalysisConfig, ConfigError
from gamesmell.findings import Finding, PatternKind, SmellKind

__all__ = [
    "AnalysisConfig",
    "ConfigError",
    "Finding",
    "PatternKind",
    "SmellKind",
    "__version__",
    "aggregate_stats",
    "analyze_corpus",
    "analyze_path",
    "analyze_units",
]

from gamesmell.corpus import (  # noqa: E402  (corpus imports the version above)
    aggregate_stats,
    analyze_corpus,
    analyze_path,
    analyze_units,
)
