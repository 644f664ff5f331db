# output_format/__init__.py
"""输出格式化模块"""

from .base import BaseOutputFormatter, ReportPayload
from .formatters import HTMLFormatter, JSONFormatter, MarkdownFormatter, TextFormatter
from .manager import OutputFormatManager
from .payloads import (
    AxiomSuitePayload,
    FormalSumPayload,
    ScanPayload,
    SurfacePayload,
    TensorSumPayload,
    ValuePayload,
)

__all__ = [
    "AxiomSuitePayload",
    "BaseOutputFormatter",
    "FormalSumPayload",
    "HTMLFormatter",
    "JSONFormatter",
    "MarkdownFormatter",
    "OutputFormatManager",
    "ReportPayload",
    "ScanPayload",
    "SurfacePayload",
    "TensorSumPayload",
    "ValuePayload",
]
