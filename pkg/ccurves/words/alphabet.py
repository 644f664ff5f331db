# words/alphabet.py
"""字母表 A_n 与线性字

字母内部编码为整数: a_i -> 2(i-1), ā_i -> 2(i-1)+1。
这样编码的自然序即 a_1 < ā_1 < a_2 < ā_2 < ...，取逆是 `code ^ 1`。
"""

import re
from dataclasses import dataclass
from functools import total_ordering
from typing import Iterable, Iterator, List, Sequence, Tuple, Union

from ..core.constants import GENERATOR_PREFIX, INVERSE_PREFIX, WORD_SEPARATOR
from ..core.errors import WordSyntaxError

_TOKEN_RE = re.compile(r"^([aA])([1-9][0-9]*)$")
_SPLIT_RE = re.compile(r"[.\s]+")


@total_ordering
@dataclass(frozen=True)
class Letter:
    """A_n 中的一个字母；barred=True 表示 ā_index"""

    index: int
    barred: bool = False

    def __post_init__(self):
        if self.index < 1:
            raise WordSyntaxError(f"字母下标必须为正整数: {self.index}")

    @property
    def code(self) -> int:
        return 2 * (self.index - 1) + int(self.barred)

    @classmethod
    def from_code(cls, code: int) -> "Letter":
        return cls(code // 2 + 1, bool(code & 1))

    def inverse(self) -> "Letter":
        return Letter(self.index, not self.barred)

    def __lt__(self, other: "Letter") -> bool:
        if not isinstance(other, Letter):
            return NotImplemented
        return self.code < other.code

    def __str__(self) -> str:
        prefix = INVERSE_PREFIX if self.barred else GENERATOR_PREFIX
        return f"{prefix}{self.index}"


LetterLike = Union[Letter, int]


def to_code(x: LetterLike) -> int:
    """把 Letter 或整数编码统一为整数编码"""
    if isinstance(x, Letter):
        return x.code
    if isinstance(x, bool) or not isinstance(x, int) or x < 0:
        raise WordSyntaxError(f"无法识别的字母: {x!r}")
    return x


def inverse_code(code: int) -> int:
    return code ^ 1


def format_code(code: int) -> str:
    return str(Letter.from_code(code))


def format_codes(codes: Iterable[int]) -> str:
    """按点分文法输出，例如 `a1.A2`"""
    return WORD_SEPARATOR.join(format_code(c) for c in codes)


def parse_letter(token: str) -> Letter:
    match = _TOKEN_RE.match(token)
    if not match:
        raise WordSyntaxError(f"无法解析的字母: '{token}'")
    return Letter(int(match.group(2)), match.group(1) == INVERSE_PREFIX)


def parse_letters(text: str) -> List[Letter]:
    """解析 `a1.a1.A2` 或 `a1 a1 A2` 形式的字母序列"""
    if text is None:
        raise WordSyntaxError("字文本为空")
    tokens = [t for t in _SPLIT_RE.split(text.strip()) if t]
    if not tokens:
        raise WordSyntaxError(f"字文本为空: '{text}'")
    return [parse_letter(t) for t in tokens]


def alphabet(n: int) -> List[Letter]:
    """A_n 的 2n 个字母，按规范序排列"""
    return [Letter.from_code(c) for c in range(2 * n)]


def rank_of(codes: Iterable[int]) -> int:
    """字中出现的最大生成元下标"""
    return max((c // 2 + 1 for c in codes), default=0)


class LinearWord:
    """线性字（可以为空）"""

    __slots__ = ("codes",)

    def __init__(self, letters: Iterable[LetterLike] = ()):
        self.codes: Tuple[int, ...] = tuple(to_code(x) for x in letters)

    @classmethod
    def parse(cls, text: str) -> "LinearWord":
        return cls(parse_letters(text))

    @property
    def letters(self) -> Tuple[Letter, ...]:
        return tuple(Letter.from_code(c) for c in self.codes)

    def is_freely_reduced(self) -> bool:
        return is_freely_reduced(self.codes)

    def inverse(self) -> "LinearWord":
        return LinearWord(inverse_code(c) for c in reversed(self.codes))

    def __len__(self) -> int:
        return len(self.codes)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __getitem__(self, i: int) -> Letter:
        return Letter.from_code(self.codes[i])

    def __eq__(self, other) -> bool:
        return isinstance(other, LinearWord) and self.codes == other.codes

    def __hash__(self) -> int:
        return hash(("LinearWord", self.codes))

    def __str__(self) -> str:
        return format_codes(self.codes)

    def __repr__(self) -> str:
        return f"LinearWord('{self}')"


def is_freely_reduced(codes: Sequence[int]) -> bool:
    return all(codes[i + 1] != codes[i] ^ 1 for i in range(len(codes) - 1))
