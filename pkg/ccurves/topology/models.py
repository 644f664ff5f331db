# topology/models.py
"""扫描结果模型"""

import json
from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, Field


class Finding(BaseModel):
    """扫描中的一条发现，按 JSON-lines 逐条输出"""

    word: str = Field(..., description="规范点分形式的循环字。")
    length: int = Field(..., ge=1, description="字长。")
    cobracket_zero: bool = Field(..., description="余括号是否为零。")
    root_simple: bool = Field(..., description="本原根是否简单（LP1 为空）。")
    self_int: Optional[int] = Field(default=None, ge=0, description="本原根的自相交数。")
    bracket_inverse_terms: Optional[int] = Field(
        default=None, ge=0, description="[V, V̄] 按重数计的项数。"
    )
    power_bracket_terms: Optional[int] = Field(
        default=None, ge=0, description="[V^n, V^m] 按重数计的项数（仅幂次扫描）。"
    )

    def to_record(self) -> Dict[str, Any]:
        record = self.model_dump(exclude={"power_bracket_terms"})
        if self.power_bracket_terms is not None:
            record["power_bracket_terms"] = self.power_bracket_terms
        return record

    def to_jsonl(self) -> str:
        return json.dumps(self.to_record(), separators=(",", ":"), ensure_ascii=False)


class ScanReport(BaseModel):
    """一次穷举扫描的报告；序列化结果与线程数无关"""

    scan: str = Field(..., description="扫描类型。")
    surface: str = Field(..., description="曲面符号。")
    max_length: int = Field(..., ge=1, description="最大字长。")
    exponents: Optional[Tuple[int, int]] = Field(default=None, description="幂次扫描的 (n, m)。")
    findings: List[Finding] = Field(default_factory=list, description="按规范顺序排列的发现。")
    words_scanned: int = Field(default=0, ge=0, description="扫描的字数。")
    primitive_scanned: int = Field(default=0, ge=0, description="其中本原字的个数。")
    violations: int = Field(default=0, ge=0, description="不满足被检验关系的字数。")
    simple_nonzero: int = Field(
        default=0, ge=0, description="简单字却有非零 [V, V̄] 的个数（应为 0）。"
    )
    non_simple_roots: int = Field(
        default=0, ge=0, description="余括号为零但本原根不简单的字数。"
    )
    # 只记日志，不参与序列化
    wall_time: float = Field(default=0.0, ge=0, exclude=True)

    @property
    def passed(self) -> bool:
        return self.violations == 0 and self.simple_nonzero == 0
