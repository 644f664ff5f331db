# bialgebra/axioms/checks/involutive.py
from ....linking.models import DEFAULT_OPTIONS
from ...operations import bracket_tensor, cobracket
from .. import register_axiom
from ..base import BaseAxiom


@register_axiom
class Involutivity(BaseAxiom):
    """[,]∘δ = 0"""

    name = "involutive"
    arity = 1
    description = "对合性: Σ sign·[δ1, δ2] = 0"

    def residual(self, words, o_sym, options=DEFAULT_OPTIONS):
        return bracket_tensor(cobracket(words[0], o_sym, options), o_sym, options)
