# words/cyclic.py
"""约化循环字及其代数: 规范化、逆、幂、本原根、子字读取与同调向量"""

from typing import Iterable, List, Sequence, Tuple

from ..core.errors import TrivialClass, WordError
from .alphabet import (
    Letter,
    LetterLike,
    LinearWord,
    format_codes,
    inverse_code,
    parse_letters,
    rank_of,
    to_code,
)

# 第 i 个分量为 a_i 的个数减去 ā_i 的个数
HomologyVector = Tuple[int, ...]


def free_reduce(codes: Iterable[int]) -> List[int]:
    """线性地消去所有相邻的互逆字母对"""
    stack: List[int] = []
    for c in codes:
        if stack and stack[-1] == c ^ 1:
            stack.pop()
        else:
            stack.append(c)
    return stack


def cyclic_reduce(codes: Iterable[int]) -> List[int]:
    """自由约化后反复消去首尾互逆字母"""
    reduced = free_reduce(codes)
    lo, hi = 0, len(reduced) - 1
    while lo < hi and reduced[lo] == reduced[hi] ^ 1:
        lo += 1
        hi -= 1
    return reduced[lo : hi + 1]


def is_cyclically_reduced(codes: Sequence[int]) -> bool:
    n = len(codes)
    if n == 0:
        return False
    return all(codes[(i + 1) % n] != codes[i] ^ 1 for i in range(n))


def least_rotation(codes: Sequence[int]) -> Tuple[int, ...]:
    """字典序最小的旋转"""
    t = tuple(codes)
    return min(t[i:] + t[:i] for i in range(len(t)))


def is_canonical(codes: Sequence[int]) -> bool:
    t = tuple(codes)
    return all(t <= t[i:] + t[:i] for i in range(1, len(t)))


class CyclicWord:
    """非空、循环约化、以规范旋转存储的循环字

    只应通过 make_cyclic 或 from_canonical 构造。排序键为 (长度, 编码)。
    """

    __slots__ = ("codes", "_hash")

    def __init__(self, codes: Tuple[int, ...]):
        self.codes = codes
        self._hash = hash(("CyclicWord", codes))

    @classmethod
    def from_canonical(cls, codes: Sequence[int]) -> "CyclicWord":
        """包装已知规范且循环约化的编码（枚举器使用，不再检查）"""
        return cls(tuple(codes))

    @classmethod
    def parse(cls, text: str) -> "CyclicWord":
        return make_cyclic(parse_letters(text))

    @property
    def letters(self) -> Tuple[Letter, ...]:
        return tuple(Letter.from_code(c) for c in self.codes)

    @property
    def rank(self) -> int:
        """出现的最大生成元下标"""
        return rank_of(self.codes)

    def sort_key(self) -> Tuple[int, Tuple[int, ...]]:
        return (len(self.codes), self.codes)

    def __len__(self) -> int:
        return len(self.codes)

    def __eq__(self, other) -> bool:
        return isinstance(other, CyclicWord) and self.codes == other.codes

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "CyclicWord") -> bool:
        if not isinstance(other, CyclicWord):
            return NotImplemented
        return self.sort_key() < other.sort_key()

    def __le__(self, other: "CyclicWord") -> bool:
        if not isinstance(other, CyclicWord):
            return NotImplemented
        return self.sort_key() <= other.sort_key()

    def __str__(self) -> str:
        return format_codes(self.codes)

    def __repr__(self) -> str:
        return f"c({self})"

    def __reduce__(self):
        return (CyclicWord, (self.codes,))


def make_cyclic(tokens: Iterable[LetterLike]) -> CyclicWord:
    """循环约化并取规范旋转；约化为空时抛出 TrivialClass"""
    codes = [to_code(x) for x in tokens]
    if not codes:
        raise TrivialClass("空字表示平凡类")
    reduced = cyclic_reduce(codes)
    if not reduced:
        raise TrivialClass(f"{format_codes(codes)} 约化后为平凡类")
    return CyclicWord(least_rotation(reduced))


def inverse(w: CyclicWord) -> CyclicWord:
    return CyclicWord(least_rotation([inverse_code(c) for c in reversed(w.codes)]))


def power(w: CyclicWord, k: int) -> CyclicWord:
    """W^k (k >= 1)；负幂请用 power(inverse(w), |k|)"""
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise WordError(f"幂次必须是正整数: {k!r}")
    # 规范旋转的 k 次重复仍是规范旋转
    return CyclicWord(w.codes * k)


def signed_power(w: CyclicWord, k: int) -> CyclicWord:
    if k == 0:
        raise TrivialClass("W^0 是平凡类")
    return power(w, k) if k > 0 else power(inverse(w), -k)


def primitive_root(w: CyclicWord) -> Tuple[CyclicWord, int]:
    """返回 (本原根, 重数)，重数取最大可能值"""
    n = len(w.codes)
    for period in range(1, n + 1):
        if n % period:
            continue
        if w.codes == w.codes[:period] * (n // period):
            return CyclicWord(w.codes[:period]), n // period
    return w, 1


def is_primitive(w: CyclicWord) -> bool:
    return primitive_root(w)[1] == 1


def subword_at(w: CyclicWord, start: int, length: int) -> LinearWord:
    """从 start 开始在周期延拓 W^∞ 上读 length 个字母"""
    if length < 1:
        raise WordError(f"子字长度必须 >= 1: {length}")
    n = len(w.codes)
    return LinearWord(w.codes[(start + i) % n] for i in range(length))


def rotation(w: CyclicWord, start: int, length: int) -> Tuple[int, ...]:
    """subword_at 的编码版本，供内部的切割运算使用"""
    n = len(w.codes)
    return tuple(w.codes[(start + i) % n] for i in range(length))


def homology_vector(w: CyclicWord, n: int = 0) -> HomologyVector:
    """指数和向量；n 缺省取字中出现的最大下标"""
    size = max(n, w.rank)
    vec = [0] * size
    for c in w.codes:
        vec[c // 2] += -1 if c & 1 else 1
    return tuple(vec)


def add_homology(a: HomologyVector, b: HomologyVector) -> HomologyVector:
    size = max(len(a), len(b))
    a = tuple(a) + (0,) * (size - len(a))
    b = tuple(b) + (0,) * (size - len(b))
    return tuple(x + y for x, y in zip(a, b))


def is_null_homologous(w: CyclicWord) -> bool:
    return not any(homology_vector(w))
