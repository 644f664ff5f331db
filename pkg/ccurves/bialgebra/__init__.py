# bialgebra/__init__.py
"""Goldman 括号与 Turaev 余括号"""

from .axioms import check_axiom, get_axiom, list_axioms
from .axioms.sampling import random_reduced_word, run_axiom_suite, sample_words
from .operations import (
    act,
    bracket,
    bracket_sum,
    bracket_tensor,
    cobracket,
    cobracket_sum,
    delta_parts,
    gamma_word,
    id_tensor_cobracket,
)
from .sums import FormalSum, TensorSum, tensor

__all__ = [
    "FormalSum",
    "TensorSum",
    "act",
    "bracket",
    "bracket_sum",
    "bracket_tensor",
    "check_axiom",
    "cobracket",
    "cobracket_sum",
    "delta_parts",
    "gamma_word",
    "get_axiom",
    "id_tensor_cobracket",
    "list_axioms",
    "random_reduced_word",
    "run_axiom_suite",
    "sample_words",
    "tensor",
]
