# linking/classify.py
"""按定义的三个条款对一对线性字分类并给出符号"""

from typing import Optional, Tuple

from ..core.errors import WordError
from ..surface.symbol import SurfaceSymbol, orientation_codes
from ..words.alphabet import LinearWord, is_freely_reduced


def classify(
    P: LinearWord, Q: LinearWord, o_sym: SurfaceSymbol, strict: bool = False
) -> Optional[Tuple[int, int]]:
    """
    返回 (kind, sign)，不构成链接对时返回 None。

    P、Q 必须是长度至少为 2 的自由约化字。
    """
    p, q = P.codes, Q.codes
    for word in (p, q):
        if len(word) < 2 or not is_freely_reduced(word):
            raise WordError(f"链接对的分量必须是长度 >= 2 的约化字: {LinearWord(word)}")

    def o(*codes: int) -> int:
        return orientation_codes(o_sym, codes, strict)

    if len(p) == 2 and len(q) == 2:
        sign = o(p[0] ^ 1, q[0] ^ 1, p[1], q[1])
        return (1, sign) if sign else None

    if len(p) != len(q) or len(p) < 3:
        return None

    p1, y, p2 = p[0], p[1:-1], p[-1]
    q1, z, q2 = q[0], q[1:-1], q[-1]
    x1, x2 = y[0], y[-1]

    if z == y:
        if p1 == q1 or p2 == q2:
            return None
        left = o(p1 ^ 1, q1 ^ 1, x1)
        right = o(p2, q2, x2 ^ 1)
        return (2, left) if left and left == right else None

    if z == tuple(c ^ 1 for c in reversed(y)):
        if p1 == q2 ^ 1 or p2 == q1 ^ 1:
            return None
        left = o(q2, p1 ^ 1, x1)
        right = o(q1 ^ 1, p2, x2 ^ 1)
        return (3, left) if left and left == right else None

    return None
