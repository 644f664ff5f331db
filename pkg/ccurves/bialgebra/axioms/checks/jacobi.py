# bialgebra/axioms/checks/jacobi.py
from ....linking.models import DEFAULT_OPTIONS
from ...operations import bracket, bracket_sum
from ...sums import FormalSum
from .. import register_axiom
from ..base import BaseAxiom


@register_axiom
class JacobiIdentity(BaseAxiom):
    """[U,[V,W]] + [V,[W,U]] + [W,[U,V]] = 0"""

    name = "jacobi"
    arity = 3
    description = "Jacobi 恒等式"

    def residual(self, words, o_sym, options=DEFAULT_OPTIONS):
        u, v, w = words
        total = FormalSum()
        for x, y, z in ((u, v, w), (v, w, u), (w, u, v)):
            inner = bracket(y, z, o_sym, options)
            total = total + bracket_sum(FormalSum.monomial(x), inner, o_sym, options)
        return total
