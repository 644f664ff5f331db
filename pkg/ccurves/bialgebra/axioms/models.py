# bialgebra/axioms/models.py
"""恒等式检查的结果模型"""

from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field


class AxiomResult(BaseModel):
    """单次恒等式检查的结果"""

    axiom: str = Field(..., description="恒等式名称。")
    words: List[str] = Field(..., description="本次检查使用的字。")
    passed: bool = Field(..., description="残差是否恒为零。")
    residual: List[Dict[str, Any]] = Field(
        default_factory=list, description="非零残差的各项（通过时为空）。"
    )
    witness: Optional[List[str]] = Field(
        default=None, description="失败时的见证字。"
    )
    error: Optional[str] = Field(default=None, description="检查过程中的异常信息。")


class AxiomTally(BaseModel):
    """某个恒等式在一次随机检查中的统计"""

    checked: int = Field(default=0, ge=0)
    failed: int = Field(default=0, ge=0)
    failures: List[AxiomResult] = Field(default_factory=list)


class AxiomSuiteReport(BaseModel):
    """一组恒等式在一个曲面上的随机检查报告"""

    surface: str = Field(..., description="曲面符号。")
    seed: int = Field(..., description="随机种子。")
    samples: int = Field(..., gt=0, description="每个恒等式的抽样次数。")
    max_len: int = Field(..., gt=0, description="抽样字的最大长度。")
    tallies: Dict[str, AxiomTally] = Field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(t.failed == 0 for t in self.tallies.values())
