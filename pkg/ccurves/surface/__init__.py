# surface/__init__.py
"""曲面符号、定向函数与拓扑不变量"""

from .invariants import SurfaceInvariants, boundary_cycles, invariants
from .symbol import (
    SurfaceSymbol,
    all_symbols,
    cyclic_orientation,
    make_symbol,
    orientation_codes,
    preset,
)

__all__ = [
    "SurfaceInvariants",
    "SurfaceSymbol",
    "all_symbols",
    "boundary_cycles",
    "cyclic_orientation",
    "invariants",
    "make_symbol",
    "orientation_codes",
    "preset",
]
