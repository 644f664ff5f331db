# __init__.py
"""ccurves: 带边曲面上曲线的 Goldman-Turaev 李双代数的组合计算"""

from .core.constants import PACKAGE_VERSION as __version__

__all__ = ["__version__"]
