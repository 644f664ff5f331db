# surface/invariants.py
"""曲面 Σ_O 的拓扑不变量: 通过 4n 边形的角追踪计算边界分支数"""

from typing import List, Tuple

from pydantic import BaseModel, ConfigDict, Field

from ..core.errors import InvariantViolation
from .symbol import SurfaceSymbol


class SurfaceInvariants(BaseModel):
    """欧拉示性数、边界分支数与亏格"""

    model_config = ConfigDict(frozen=True)

    euler_characteristic: int = Field(..., description="欧拉示性数 1 - n")
    boundary_components: int = Field(..., ge=1, description="边界分支数")
    genus: int = Field(..., ge=0, description="亏格")


def boundary_cycles(o_sym: SurfaceSymbol) -> List[Tuple[int, ...]]:
    """
    4n 边形的边交替为带标号边 o_i 与无标号的边界弧 B_i（B_i 位于 o_i 与 o_{i+1} 之间）。
    粘合 o_{i+1} 与其逆字母所在的边后，B_i 的终点接到 B_{pos(inv(o_{i+1}))} 的起点。
    返回该置换的全部轨道，每个轨道对应一条边界分支。
    """
    codes = o_sym.codes
    m = len(codes)
    successor = [o_sym.positions[codes[(i + 1) % m] ^ 1] for i in range(m)]

    seen = [False] * m
    cycles: List[Tuple[int, ...]] = []
    for start in range(m):
        if seen[start]:
            continue
        orbit = []
        i = start
        while not seen[i]:
            seen[i] = True
            orbit.append(i)
            i = successor[i]
        cycles.append(tuple(orbit))
    return cycles


def invariants(o_sym: SurfaceSymbol) -> SurfaceInvariants:
    n = o_sym.rank
    b = len(boundary_cycles(o_sym))
    twice_genus = n + 1 - b
    if twice_genus < 0 or twice_genus % 2:
        raise InvariantViolation(f"{o_sym}: n={n}, b={b} 不给出整数亏格")
    return SurfaceInvariants(
        euler_characteristic=1 - n,
        boundary_components=b,
        genus=twice_genus // 2,
    )
