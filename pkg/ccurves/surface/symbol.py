# surface/symbol.py
"""曲面符号 O 与循环定向函数 o(·)"""

from itertools import permutations
from typing import Iterable, Iterator, List, Sequence, Tuple

from ..core.errors import AlphabetMismatch, BadSymbol, BadSurface, WordError
from ..core.log import logger
from ..words.alphabet import Letter, LetterLike, format_codes, parse_letters, to_code
from ..words.cyclic import CyclicWord, is_cyclically_reduced


class SurfaceSymbol:
    """
    A_n 中每个字母恰好出现一次的长 2n 的循环字。

    给定的线性代表元被保留为固定代表元，positions[code] 是该字母在其中的位置。
    """

    __slots__ = ("codes", "rank", "positions")

    def __init__(self, codes: Sequence[int]):
        codes = tuple(codes)
        if not codes or len(codes) % 2:
            raise BadSymbol(f"曲面符号长度必须是正偶数: '{format_codes(codes)}'")
        n = len(codes) // 2
        if sorted(codes) != list(range(2 * n)):
            raise BadSymbol(
                f"曲面符号必须恰好使用 A_{n} 的每个字母一次: '{format_codes(codes)}'"
            )
        positions = [0] * (2 * n)
        for i, c in enumerate(codes):
            positions[c] = i
        self.codes: Tuple[int, ...] = codes
        self.rank: int = n
        self.positions: Tuple[int, ...] = tuple(positions)

    @classmethod
    def parse(cls, text: str) -> "SurfaceSymbol":
        try:
            letters = parse_letters(text)
        except WordError as e:
            raise BadSymbol(f"无法解析曲面符号: {e}") from e
        return make_symbol(letters)

    @property
    def letters(self) -> Tuple[Letter, ...]:
        return tuple(Letter.from_code(c) for c in self.codes)

    def position(self, letter: LetterLike) -> int:
        code = to_code(letter)
        if code >= 2 * self.rank:
            raise AlphabetMismatch(f"字母 {Letter.from_code(code)} 不在 A_{self.rank} 中")
        return self.positions[code]

    def contains_word(self, w: CyclicWord) -> bool:
        return all(c < 2 * self.rank for c in w.codes)

    def require_word(self, w: CyclicWord) -> CyclicWord:
        if not self.contains_word(w):
            raise AlphabetMismatch(f"字 {w} 使用了 A_{self.rank} 以外的字母")
        return w

    def __len__(self) -> int:
        return len(self.codes)

    def __eq__(self, other) -> bool:
        return isinstance(other, SurfaceSymbol) and self.codes == other.codes

    def __hash__(self) -> int:
        return hash(("SurfaceSymbol", self.codes))

    def __str__(self) -> str:
        return format_codes(self.codes)

    def __repr__(self) -> str:
        return f"SurfaceSymbol('{self}')"

    def __reduce__(self):
        return (SurfaceSymbol, (self.codes,))


def make_symbol(tokens: Iterable[LetterLike]) -> SurfaceSymbol:
    """校验并构造曲面符号，保留给定的旋转"""
    try:
        codes = [to_code(x) for x in tokens]
    except WordError as e:
        raise BadSymbol(str(e)) from e
    return SurfaceSymbol(codes)


def preset(genus: int, boundary: int) -> SurfaceSymbol:
    """
    (genus, boundary) 对应的标准曲面符号:
    a1 a2 ā1 ā2 ... a_{2g-1} a_{2g} ā_{2g-1} ā_{2g} a_{2g+1} ā_{2g+1} ... a_n ā_n，
    其中 n = 2g + b - 1。构造后用边界追踪自检。
    """
    if genus < 0 or boundary < 1:
        raise BadSurface(f"非法的曲面参数: genus={genus}, boundary={boundary}")
    n = 2 * genus + boundary - 1
    if n < 1:
        raise BadSurface(f"genus={genus}, boundary={boundary} 给出 n={n} < 1")

    codes: List[int] = []
    for h in range(genus):
        x, y = 4 * h, 4 * h + 2
        codes.extend([x, y, x ^ 1, y ^ 1])
    for k in range(2 * genus, n):
        codes.extend([2 * k, 2 * k + 1])

    o_sym = SurfaceSymbol(codes)

    # 延迟导入以避免循环依赖
    from .invariants import invariants

    got = invariants(o_sym)
    if (got.euler_characteristic, got.boundary_components, got.genus) != (
        1 - n,
        boundary,
        genus,
    ):
        logger.error(f"[Surface] 预设自检失败: {o_sym} -> {got}")
        raise BadSurface(f"预设 ({genus}, {boundary}) 自检失败: {got}")
    logger.debug(f"[Surface] 预设 ({genus}, {boundary}) -> {o_sym}")
    return o_sym


def all_symbols(n: int) -> Iterator[SurfaceSymbol]:
    """A_n 的全部曲面符号（固定 a1 在首位，即每个循环排列一次）"""
    rest = list(range(1, 2 * n))
    for perm in permutations(rest):
        yield SurfaceSymbol((0,) + perm)


def cyclic_orientation(
    o_sym: SurfaceSymbol, letters: Sequence[LetterLike], strict: bool = False
) -> int:
    """
    o(·): 字母两两不同时，按其在 O 中的位置数循环下降次数 d；
    d == 1 返回 +1，d == len-1 返回 -1，否则 0。有重复字母返回 0。

    strict=True 时对非循环约化的输入也返回 0。
    """
    codes = [to_code(x) for x in letters]
    if len(codes) < 3:
        raise WordError(f"o(·) 需要至少 3 个字母: {format_codes(codes)}")
    return orientation_codes(o_sym, codes, strict)


def orientation_codes(o_sym: SurfaceSymbol, codes: Sequence[int], strict: bool = False) -> int:
    """cyclic_orientation 的编码版本，链接对枚举的热路径直接调用"""
    if len(set(codes)) != len(codes):
        return 0
    if strict and not is_cyclically_reduced(codes):
        return 0
    positions = o_sym.positions
    try:
        pos = [positions[c] for c in codes]
    except IndexError:
        raise AlphabetMismatch(f"{format_codes(codes)} 含有 A_{o_sym.rank} 以外的字母")
    m = len(pos)
    descents = sum(1 for i in range(m) if pos[i] > pos[(i + 1) % m])
    if descents == 1:
        return 1
    if descents == m - 1:
        return -1
    return 0
