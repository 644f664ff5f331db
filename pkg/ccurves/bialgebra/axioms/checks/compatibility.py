# bialgebra/axioms/checks/compatibility.py
from ....linking.models import DEFAULT_OPTIONS
from ...operations import act, bracket, cobracket, cobracket_sum
from ...sums import FormalSum
from .. import register_axiom
from ..base import BaseAxiom


@register_axiom
class Compatibility(BaseAxiom):
    """δ[A,B] = A·δB - B·δA，其中 A·(x⊗y) = [A,x]⊗y + x⊗[A,y]"""

    name = "compatibility"
    arity = 2
    description = "括号与余括号的相容性"

    def residual(self, words, o_sym, options=DEFAULT_OPTIONS):
        a, b = words
        lhs = cobracket_sum(bracket(a, b, o_sym, options), o_sym, options)
        a_db = act(FormalSum.monomial(a), cobracket(b, o_sym, options), o_sym, options)
        b_da = act(FormalSum.monomial(b), cobracket(a, o_sym, options), o_sym, options)
        return lhs - a_db + b_da
