# topology/numbers.py
"""自相交数、相交数与简单性等判定"""

from ..core.errors import NonPrimitive
from ..linking.models import DEFAULT_OPTIONS, LinkingOptions
from ..linking.pairs import lp1, lp2
from ..bialgebra.operations import bracket
from ..surface.symbol import SurfaceSymbol
from ..words.cyclic import CyclicWord, inverse, is_primitive, primitive_root, signed_power


def _require_primitive(w: CyclicWord) -> CyclicWord:
    root, multiplicity = primitive_root(w)
    if multiplicity > 1:
        raise NonPrimitive(f"{w} = ({root})^{multiplicity} 不是本原字")
    return w


def self_intersection_number(
    w: CyclicWord, o_sym: SurfaceSymbol, options: LinkingOptions = DEFAULT_OPTIONS
) -> int:
    """本原字的最小自相交数 = |LP1(W)| / 2"""
    _require_primitive(w)
    return len(lp1(w, o_sym, options)) // 2


def intersection_number(
    v: CyclicWord,
    w: CyclicWord,
    o_sym: SurfaceSymbol,
    options: LinkingOptions = DEFAULT_OPTIONS,
) -> int:
    """两个本原字的最小相交数 = |LP2(V, W)|"""
    _require_primitive(v)
    _require_primitive(w)
    return len(lp2(v, w, o_sym, options))


def is_simple(
    w: CyclicWord, o_sym: SurfaceSymbol, options: LinkingOptions = DEFAULT_OPTIONS
) -> bool:
    return is_primitive(w) and not lp1(w, o_sym, options)


def no_cancellation_holds(
    v: CyclicWord,
    w: CyclicWord,
    o_sym: SurfaceSymbol,
    options: LinkingOptions = DEFAULT_OPTIONS,
) -> bool:
    """按重数计的 [V, W] 项数是否等于 |LP2(V, W)|"""
    return bracket(v, w, o_sym, options).term_count == len(lp2(v, w, o_sym, options))


def bracket_inverse_terms(
    v: CyclicWord, o_sym: SurfaceSymbol, options: LinkingOptions = DEFAULT_OPTIONS
) -> int:
    """[V, V̄] 按重数计的项数"""
    return bracket(v, inverse(v), o_sym, options).term_count


def power_bracket_terms(
    v: CyclicWord,
    exponents,
    o_sym: SurfaceSymbol,
    options: LinkingOptions = DEFAULT_OPTIONS,
) -> int:
    """[V^n, V^m] 按重数计的项数；负指数通过取逆实现"""
    n, m = exponents
    return bracket(signed_power(v, n), signed_power(v, m), o_sym, options).term_count
