# linking/__init__.py
"""链接对的分类与枚举"""

from .classify import classify
from .models import DEFAULT_OPTIONS, LinkedPair, LinkingOptions, Occurrence, PairAnchors
from .pairs import lp1, lp2, power_bound, verify_lp1_cap

__all__ = [
    "DEFAULT_OPTIONS",
    "LinkedPair",
    "LinkingOptions",
    "Occurrence",
    "PairAnchors",
    "classify",
    "lp1",
    "lp2",
    "power_bound",
    "verify_lp1_cap",
]
