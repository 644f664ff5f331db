# linking/pairs.py
"""LP1(W) 与 LP2(V, W) 的枚举

对每个起点对 (s, t) 至多存在一个第二类链接对、对每个 (s, e) 至多存在一个第三类链接对:
中段 Y 的长度由第一个失配位置唯一确定，定义中的边界字母不等式恰好是这个失配条件。
"""

from typing import List, Optional

from ..core.log import logger
from ..surface.symbol import SurfaceSymbol, orientation_codes
from ..words.cyclic import CyclicWord
from .models import DEFAULT_OPTIONS, LinkedPair, LinkingOptions, Occurrence, PairAnchors


def power_bound(base_len: int, other_len: int, slack: int = 0) -> int:
    """满足 j < 2 + other_len / base_len 的最大整数 j，再加 slack"""
    # j < 2 + o/b  <=>  j*b < 2b + o
    j = (2 * base_len + other_len - 1) // base_len
    return j + max(slack, 0)


def _enumerate(
    first: CyclicWord,
    second: CyclicWord,
    o_sym: SurfaceSymbol,
    cap: int,
    origin: str,
    strict: bool,
) -> List[LinkedPair]:
    """在 first × second 上按三个条款枚举长度不超过 cap 的链接对"""
    same = origin == "lp1"
    vc, wc = first.codes, second.codes
    lv, lw = len(vc), len(wc)
    max_m = cap - 2
    pairs: List[LinkedPair] = []

    def o(*codes: int) -> int:
        return orientation_codes(o_sym, codes, strict)

    def emit(kind, s, t, length, sign, y=False):
        anchors = PairAnchors(
            p1=s,
            p2=(s + length - 1) % lv,
            q1=t,
            q2=(t + length - 1) % lw,
            y_first=(s + 1) % lv if y else None,
            ybar_first=(t + 1) % lw if y else None,
        )
        pairs.append(
            LinkedPair(
                kind=kind,
                p=Occurrence(s, length),
                q=Occurrence(t, length),
                sign=sign,
                origin=origin,
                first=first,
                second=second,
                anchors=anchors,
            )
        )

    if cap < 2:
        return pairs

    # --- 条款 (1): 两个长度为 2 的子字 ---
    for s in range(lv):
        p1, p2 = vc[s], vc[(s + 1) % lv]
        for t in range(lw):
            if same and s == t:
                continue
            q1, q2 = wc[t], wc[(t + 1) % lw]
            sign = o(p1 ^ 1, q1 ^ 1, p2, q2)
            if sign:
                emit(1, s, t, 2, sign)

    if max_m < 1:
        return pairs

    # --- 条款 (2): P = p1 Y p2, Q = q1 Y q2 ---
    for s in range(lv):
        p1 = vc[s]
        for t in range(lw):
            q1 = wc[t]
            if p1 == q1:
                continue
            m = 0
            while m < max_m and vc[(s + 1 + m) % lv] == wc[(t + 1 + m) % lw]:
                m += 1
            if m == 0:
                continue
            p2, q2 = vc[(s + 1 + m) % lv], wc[(t + 1 + m) % lw]
            if p2 == q2:
                # Y 在长度上界内仍未结束
                continue
            x1, x2 = vc[(s + 1) % lv], vc[(s + m) % lv]
            left = o(p1 ^ 1, q1 ^ 1, x1)
            if left and left == o(p2, q2, x2 ^ 1):
                emit(2, s, t, m + 2, left, y=True)

    # --- 条款 (3): P = p1 Y p2, Q = q1 Ȳ q2；e 为 Ȳ 末字母在 second 中的位置 ---
    for s in range(lv):
        p1 = vc[s]
        for e in range(lw):
            q2 = wc[(e + 1) % lw]
            if p1 == q2 ^ 1:
                continue
            m = 0
            while m < max_m and wc[(e - m) % lw] == vc[(s + 1 + m) % lv] ^ 1:
                m += 1
            if m == 0:
                continue
            p2, q1 = vc[(s + 1 + m) % lv], wc[(e - m) % lw]
            if p2 == q1 ^ 1:
                continue
            t = (e - m) % lw
            if same and s == t:
                continue
            x1, x2 = vc[(s + 1) % lv], vc[(s + m) % lv]
            left = o(q2, p1 ^ 1, x1)
            if left and left == o(q1 ^ 1, p2, x2 ^ 1):
                emit(3, s, t, m + 2, left, y=True)

    pairs.sort(key=LinkedPair.sort_key)
    return pairs


def lp1(
    w: CyclicWord,
    o_sym: SurfaceSymbol,
    options: LinkingOptions = DEFAULT_OPTIONS,
    length_cap: Optional[int] = None,
) -> List[LinkedPair]:
    """W 自身的全部有序链接对；子字长度上界缺省为 l(W)"""
    o_sym.require_word(w)
    cap = len(w) if length_cap is None else length_cap
    pairs = _enumerate(w, w, o_sym, cap, "lp1", options.strict_o)
    logger.debug(f"[LP1] {w}: {len(pairs)} 个链接对 (cap={cap})")
    return pairs


def lp2(
    v: CyclicWord,
    w: CyclicWord,
    o_sym: SurfaceSymbol,
    options: LinkingOptions = DEFAULT_OPTIONS,
) -> List[LinkedPair]:
    """
    V 与 W 的全部链接对。

    P 的起点取 mod l(V)，长度不超过 j_max·l(V)；Q 对称地不超过 k_max·l(W)。
    """
    o_sym.require_word(v)
    o_sym.require_word(w)
    lv, lw = len(v), len(w)
    cap_p = power_bound(lv, lw, options.bound_slack) * lv
    cap_q = power_bound(lw, lv, options.bound_slack) * lw
    pairs = _enumerate(v, w, o_sym, min(cap_p, cap_q), "lp2", options.strict_o)
    logger.debug(f"[LP2] ({v}, {w}): {len(pairs)} 个链接对")
    return pairs


def verify_lp1_cap(
    w: CyclicWord, o_sym: SurfaceSymbol, options: LinkingOptions = DEFAULT_OPTIONS
) -> bool:
    """把 LP1 的长度上界放宽到 l(W)+1 后重算，返回结果是否不变"""
    base = lp1(w, o_sym, options)
    wider = lp1(w, o_sym, options, length_cap=len(w) + 1)
    same = [p.sort_key() for p in base] == [p.sort_key() for p in wider]
    if not same:
        logger.warning(f"[LP1] {w}: 放宽长度上界后链接对从 {len(base)} 变为 {len(wider)}")
    return same
