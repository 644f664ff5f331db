# core/errors.py
"""ccurves 的异常层级"""


class CCurvesError(Exception):
    """所有 ccurves 异常的基类"""


# --- 字相关 ---


class WordError(CCurvesError):
    """非法的字输入"""


class WordSyntaxError(WordError):
    """无法解析的字文本"""


class TrivialClass(WordError):
    """约化后为空字（平凡自由同伦类不在 V 中）"""


class AlphabetMismatch(WordError):
    """字中的字母不属于曲面符号的字母表"""


# --- 曲面符号相关 ---


class SymbolError(CCurvesError):
    """非法的曲面输入"""


class BadSymbol(SymbolError):
    """曲面符号不是 A_n 每个字母恰好出现一次的字"""


class BadSurface(SymbolError):
    """(genus, boundary) 无法给出合法的曲面符号"""


# --- 计算相关 ---


class NonPrimitive(CCurvesError):
    """要求本原字时传入了真幂"""


class ForeignPair(CCurvesError):
    """链接对不属于给定的字"""


class InvariantViolation(CCurvesError):
    """构造结果违反了应当恒成立的性质（例如切割后需要约化）"""
