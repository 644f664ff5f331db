# bialgebra/axioms/checks/coskew.py
from ....linking.models import DEFAULT_OPTIONS
from ...operations import cobracket
from .. import register_axiom
from ..base import BaseAxiom


@register_axiom
class CoskewSymmetry(BaseAxiom):
    """s∘δ + δ = 0"""

    name = "coskew"
    arity = 1
    description = "余括号反对称: s∘δ = -δ"

    def residual(self, words, o_sym, options=DEFAULT_OPTIONS):
        delta = cobracket(words[0], o_sym, options)
        return delta.swap() + delta
