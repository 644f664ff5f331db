# config/__init__.py
"""配置模块"""

from .settings import (
    DEFAULT_CONFIG,
    EXIT_BAD_SURFACE,
    EXIT_BAD_WORD,
    EXIT_CHECK_FAILED,
    EXIT_OK,
    EXIT_USAGE,
    HTML_REPORT_TEMPLATE,
    SUPPORTED_OUTPUT_FORMATS,
    SURFACE_PRESETS,
)

__all__ = [
    "DEFAULT_CONFIG",
    "EXIT_BAD_SURFACE",
    "EXIT_BAD_WORD",
    "EXIT_CHECK_FAILED",
    "EXIT_OK",
    "EXIT_USAGE",
    "HTML_REPORT_TEMPLATE",
    "SUPPORTED_OUTPUT_FORMATS",
    "SURFACE_PRESETS",
]
