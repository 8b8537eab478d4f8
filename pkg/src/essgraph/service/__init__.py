"""Service layer: pydantic report schemas and the FastAPI application.

The CLI is a thin client of this layer; both surfaces serialize the same
models, so JSON output is identical whether it came over HTTP or stdout.
"""

from .schemas import (
    AnalyzeReport,
    ConnectivityInfo,
    SpectrumReport,
    VerifySummaryInfo,
    build_analyze_report,
    build_connectivity_info,
    build_spectrum_report,
    build_verify_summary,
)

__all__ = [
    "AnalyzeReport",
    "ConnectivityInfo",
    "SpectrumReport",
    "VerifySummaryInfo",
    "build_analyze_report",
    "build_connectivity_info",
    "build_spectrum_report",
    "build_verify_summary",
]
