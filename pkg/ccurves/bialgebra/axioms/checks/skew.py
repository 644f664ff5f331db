# bialgebra/axioms/checks/skew.py
from ....linking.models import DEFAULT_OPTIONS
from ...operations import bracket
from .. import register_axiom
from ..base import BaseAxiom


@register_axiom
class SkewSymmetry(BaseAxiom):
    """[V, W] + [W, V] = 0"""

    name = "skew"
    arity = 2
    description = "括号反对称: [,]∘s = -[,]"

    def residual(self, words, o_sym, options=DEFAULT_OPTIONS):
        v, w = words
        return bracket(v, w, o_sym, options) + bracket(w, v, o_sym, options)
