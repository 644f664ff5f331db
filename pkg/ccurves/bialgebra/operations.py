# bialgebra/operations.py
"""余括号 δ 与括号 [,]: 切割构造 δ1/δ2、γ 及其双线性延拓"""

from functools import lru_cache
from typing import Sequence, Tuple

from ..core.errors import ForeignPair, InvariantViolation
from ..core.log import logger
from ..linking.models import DEFAULT_OPTIONS, LinkedPair, LinkingOptions
from ..linking.pairs import lp1, lp2
from ..surface.symbol import SurfaceSymbol
from ..words.alphabet import format_codes
from ..words.cyclic import CyclicWord, is_cyclically_reduced, least_rotation, rotation
from .sums import FormalSum, TensorSum

_CACHE_SIZE = 1 << 16


def _reduced_cyclic(codes: Sequence[int], context: str) -> CyclicWord:
    """切割得到的字必须已经是非空循环约化字，这里只检查、不约化"""
    if not codes or not is_cyclically_reduced(codes):
        raise InvariantViolation(f"[{context}] 切割结果不是约化循环字: '{format_codes(codes)}'")
    return CyclicWord(least_rotation(codes))


def delta_parts(w: CyclicWord, pair: LinkedPair) -> Tuple[CyclicWord, CyclicWord]:
    """
    (δ1, δ2)。

    第一、二类: W1 从 p2 到 q2 之前，W2 是从 q2 开始的互补弧；
    第三类: W1 从 p2 到 Ȳ 之前，W2 从 q2 到 Y 之前。
    """
    if pair.origin != "lp1" or pair.first != w:
        raise ForeignPair(f"链接对 {pair} 不属于 LP1({w})")

    n = len(w)
    a = pair.anchors
    if pair.kind in (1, 2):
        len1 = (a.q2 - a.p2) % n
        w1 = rotation(w, a.p2, len1)
        w2 = rotation(w, a.q2, n - len1)
    else:
        len1 = (a.ybar_first - a.p2) % n
        len2 = (a.y_first - a.q2) % n
        if len1 + len2 + 2 * pair.middle_length != n:
            raise InvariantViolation(f"[delta] {w}: 第三类链接对 {pair} 的 Y 与 Ȳ 相互重叠")
        w1 = rotation(w, a.p2, len1)
        w2 = rotation(w, a.q2, len2)
    return _reduced_cyclic(w1, "delta"), _reduced_cyclic(w2, "delta")


def gamma_word(v: CyclicWord, w: CyclicWord, pair: LinkedPair) -> CyclicWord:
    """
    γ(P, Q)。

    第一、二类: c(V1 W1)，V1、W1 分别是从 p2、q2 开始的完整代表元。
    第三类: 记 m = min(l(Y), l(V), l(W))，V1 为从 p2 开始、长 l(V)-m 的弧，
    W1 为从 Ȳ 的首字母后第 m 个位置开始、长 l(W)-m 的弧。
    """
    if pair.origin != "lp2" or pair.first != v or pair.second != w:
        raise ForeignPair(f"链接对 {pair} 不属于 LP2({v}, {w})")

    lv, lw = len(v), len(w)
    a = pair.anchors
    if pair.kind in (1, 2):
        codes = rotation(v, a.p2, lv) + rotation(w, a.q2, lw)
    else:
        m = min(pair.middle_length, lv, lw)
        codes = rotation(v, a.p2, lv - m) + rotation(w, a.ybar_first + m, lw - m)
    return _reduced_cyclic(codes, "gamma")


@lru_cache(maxsize=_CACHE_SIZE)
def cobracket(
    w: CyclicWord, o_sym: SurfaceSymbol, options: LinkingOptions = DEFAULT_OPTIONS
) -> TensorSum:
    """δ(W) = Σ_{LP1(W)} sign · δ1 ⊗ δ2"""
    result = TensorSum.from_terms(
        (delta_parts(w, pair), pair.sign) for pair in lp1(w, o_sym, options)
    )
    logger.debug(f"[Cobracket] δ({w}) 共 {len(result)} 项")
    return result


@lru_cache(maxsize=_CACHE_SIZE)
def bracket(
    v: CyclicWord,
    w: CyclicWord,
    o_sym: SurfaceSymbol,
    options: LinkingOptions = DEFAULT_OPTIONS,
) -> FormalSum:
    """[V, W] = Σ_{LP2(V, W)} sign · γ"""
    result = FormalSum.from_terms(
        (gamma_word(v, w, pair), pair.sign) for pair in lp2(v, w, o_sym, options)
    )
    logger.debug(f"[Bracket] [{v}, {w}] 共 {len(result)} 项")
    return result


# --- 双线性延拓 ---


def bracket_sum(
    a: FormalSum,
    b: FormalSum,
    o_sym: SurfaceSymbol,
    options: LinkingOptions = DEFAULT_OPTIONS,
) -> FormalSum:
    total = FormalSum()
    for x, ca in a.items():
        for y, cb in b.items():
            total = total + bracket(x, y, o_sym, options) * (ca * cb)
    return total


def cobracket_sum(
    a: FormalSum, o_sym: SurfaceSymbol, options: LinkingOptions = DEFAULT_OPTIONS
) -> TensorSum:
    total = TensorSum()
    for x, c in a.items():
        total = total + cobracket(x, o_sym, options) * c
    return total


def act(
    a: FormalSum,
    t: TensorSum,
    o_sym: SurfaceSymbol,
    options: LinkingOptions = DEFAULT_OPTIONS,
) -> TensorSum:
    """a·(x⊗y) = [a,x]⊗y + x⊗[a,y]"""
    acc = []
    for (x, y), c in t.items():
        for u, ca in a.items():
            for z, cz in bracket(u, x, o_sym, options).items():
                acc.append(((z, y), c * ca * cz))
            for z, cz in bracket(u, y, o_sym, options).items():
                acc.append(((x, z), c * ca * cz))
    return TensorSum.from_terms(acc)


def bracket_tensor(
    t: TensorSum, o_sym: SurfaceSymbol, options: LinkingOptions = DEFAULT_OPTIONS
) -> FormalSum:
    """[,] 作用在二次张量上: x⊗y -> [x, y]"""
    total = FormalSum()
    for (x, y), c in t.items():
        total = total + bracket(x, y, o_sym, options) * c
    return total


def id_tensor_cobracket(
    t: TensorSum, o_sym: SurfaceSymbol, options: LinkingOptions = DEFAULT_OPTIONS
) -> TensorSum:
    """(Id ⊗ δ): x⊗y -> Σ x⊗y1⊗y2"""
    acc = []
    for (x, y), c in t.items():
        for (y1, y2), d in cobracket(y, o_sym, options).items():
            acc.append(((x, y1, y2), c * d))
    return TensorSum.from_terms(acc)
