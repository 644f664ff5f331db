# topology/__init__.py
"""相交数与穷举扫描"""

from .models import Finding, ScanReport
from .numbers import (
    bracket_inverse_terms,
    intersection_number,
    is_simple,
    no_cancellation_holds,
    power_bracket_terms,
    self_intersection_number,
)
from .scans import scan_bracket_inverse, scan_cobracket_zero, scan_power_brackets

__all__ = [
    "Finding",
    "ScanReport",
    "bracket_inverse_terms",
    "intersection_number",
    "is_simple",
    "no_cancellation_holds",
    "power_bracket_terms",
    "scan_bracket_inverse",
    "scan_cobracket_zero",
    "scan_power_brackets",
    "self_intersection_number",
]
