# linking/models.py
"""链接对的数据模型"""

from dataclasses import dataclass
from typing import Dict, NamedTuple, Optional

from ..words.alphabet import LinearWord
from ..words.cyclic import CyclicWord, subword_at


@dataclass(frozen=True)
class LinkingOptions:
    """会改变计算结果的选项，显式地沿 linking -> bialgebra -> topology 传递"""

    strict_o: bool = False
    bound_slack: int = 0


DEFAULT_OPTIONS = LinkingOptions()


class Occurrence(NamedTuple):
    """基字周期延拓上的一次子字出现: (start mod 基字长度, 长度)"""

    start: int
    length: int


class PairAnchors(NamedTuple):
    """切割所需的位置（均对各自基字长度取模）；第一类链接对没有中段"""

    p1: int
    p2: int
    q1: int
    q2: int
    # Y、Ȳ 的首字母（第二类的 Ȳ 即 Q 中的 Y）；末字母为首字母加 middle_length - 1
    y_first: Optional[int] = None
    ybar_first: Optional[int] = None


@dataclass(frozen=True)
class LinkedPair:
    """
    分类后的链接对 (P, Q)。

    kind 为定义中成立的条款 (1/2/3)，origin 为 "lp1" 或 "lp2"；
    first/second 是 P、Q 所在的基字（LP1 中二者相同）。
    """

    kind: int
    p: Occurrence
    q: Occurrence
    sign: int
    origin: str
    first: CyclicWord
    second: CyclicWord
    anchors: PairAnchors

    @property
    def middle_length(self) -> int:
        """公共中段 Y 的长度"""
        return self.p.length - 2

    @property
    def P(self) -> LinearWord:
        return subword_at(self.first, self.p.start, self.p.length)

    @property
    def Q(self) -> LinearWord:
        return subword_at(self.second, self.q.start, self.q.length)

    def sort_key(self):
        return (self.p.start, self.p.length, self.q.start, self.q.length)

    def to_record(self) -> Dict[str, int]:
        return {
            "kind": self.kind,
            "p_start": self.p.start,
            "p_len": self.p.length,
            "q_start": self.q.start,
            "q_len": self.q.length,
            "sign": self.sign,
        }

    def __str__(self) -> str:
        return f"({self.P}, {self.Q}) kind={self.kind} sign={self.sign:+d}"
