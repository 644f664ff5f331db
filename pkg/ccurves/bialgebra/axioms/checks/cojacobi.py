# bialgebra/axioms/checks/cojacobi.py
from ....linking.models import DEFAULT_OPTIONS
from ...operations import cobracket, id_tensor_cobracket
from .. import register_axiom
from ..base import BaseAxiom


@register_axiom
class CojacobiIdentity(BaseAxiom):
    """(Id + ω + ω²)(Id ⊗ δ)δ = 0"""

    name = "cojacobi"
    arity = 1
    description = "余 Jacobi 恒等式"

    def residual(self, words, o_sym, options=DEFAULT_OPTIONS):
        t = id_tensor_cobracket(cobracket(words[0], o_sym, options), o_sym, options)
        once = t.rotate()
        return t + once + once.rotate()
