# words/enumeration.py
"""按 (长度, 字典序) 枚举 A_n 上全部规范约化循环字，并支持按前缀切分"""

from typing import Iterator, List, Sequence, Tuple

from ..core.errors import WordError
from .alphabet import is_freely_reduced
from .cyclic import CyclicWord, is_canonical


def _valid_prefix(n: int, prefix: Sequence[int]) -> bool:
    if not prefix:
        return True
    first = prefix[0]
    return (
        all(first <= c < 2 * n for c in prefix)
        and is_freely_reduced(prefix)
    )


def _extend(n: int, word: List[int], length: int) -> Iterator[Tuple[int, ...]]:
    """深度优先补全到 length；规范旋转以最小字母开头，故后续字母不小于首字母"""
    if len(word) == length:
        if word[-1] != word[0] ^ 1 and is_canonical(word):
            yield tuple(word)
        return
    first = word[0]
    last = word[-1]
    for c in range(first, 2 * n):
        if c == last ^ 1:
            continue
        word.append(c)
        yield from _extend(n, word, length)
        word.pop()


def enumerate_reduced(
    n: int,
    max_len: int,
    *,
    min_len: int = 1,
    prefix: Sequence[int] = (),
) -> Iterator[CyclicWord]:
    """
    枚举长度在 [min_len, max_len] 内的全部规范循环约化字，每个恰好一次。

    Args:
        n: 字母表秩
        max_len: 最大长度
        min_len: 最小长度
        prefix: 只枚举以该编码前缀开头的规范字（用于并行切分）
    """
    if n < 1 or max_len < 1:
        raise WordError(f"枚举参数非法: n={n}, max_len={max_len}")
    prefix = list(prefix)
    if not _valid_prefix(n, prefix):
        return

    for length in range(max(min_len, len(prefix), 1), max_len + 1):
        if prefix:
            yield from (CyclicWord.from_canonical(t) for t in _extend(n, list(prefix), length))
            continue
        for first in range(2 * n):
            for t in _extend(n, [first], length):
                yield CyclicWord.from_canonical(t)


def partition_prefixes(n: int, depth: int) -> List[Tuple[int, ...]]:
    """全部可能作为规范字开头的长度为 depth 的前缀，按字典序"""
    if depth < 1:
        return [()]
    result: List[Tuple[int, ...]] = []

    def walk(current: List[int]):
        if len(current) == depth:
            result.append(tuple(current))
            return
        lo = current[0] if current else 0
        for c in range(lo, 2 * n):
            if current and c == current[-1] ^ 1:
                continue
            current.append(c)
            walk(current)
            current.pop()

    walk([])
    return result


def count_reduced(n: int, max_len: int) -> int:
    return sum(1 for _ in enumerate_reduced(n, max_len))
