# core/__init__.py
"""核心: 常量、日志与异常"""

from .errors import (
    AlphabetMismatch,
    BadSurface,
    BadSymbol,
    CCurvesError,
    ForeignPair,
    InvariantViolation,
    NonPrimitive,
    SymbolError,
    TrivialClass,
    WordError,
    WordSyntaxError,
)
from .log import logger, setup_logging

__all__ = [
    "AlphabetMismatch",
    "BadSurface",
    "BadSymbol",
    "CCurvesError",
    "ForeignPair",
    "InvariantViolation",
    "NonPrimitive",
    "SymbolError",
    "TrivialClass",
    "WordError",
    "WordSyntaxError",
    "logger",
    "setup_logging",
]
