# words/__init__.py
"""字母表与循环字代数"""

from .alphabet import (
    Letter,
    LinearWord,
    alphabet,
    format_codes,
    inverse_code,
    parse_letter,
    parse_letters,
    to_code,
)
from .cyclic import (
    CyclicWord,
    HomologyVector,
    add_homology,
    cyclic_reduce,
    free_reduce,
    homology_vector,
    inverse,
    is_cyclically_reduced,
    is_null_homologous,
    is_primitive,
    make_cyclic,
    power,
    primitive_root,
    signed_power,
    subword_at,
)
from .enumeration import count_reduced, enumerate_reduced, partition_prefixes

__all__ = [
    "CyclicWord",
    "HomologyVector",
    "Letter",
    "LinearWord",
    "add_homology",
    "alphabet",
    "count_reduced",
    "cyclic_reduce",
    "enumerate_reduced",
    "format_codes",
    "free_reduce",
    "homology_vector",
    "inverse",
    "inverse_code",
    "is_cyclically_reduced",
    "is_null_homologous",
    "is_primitive",
    "make_cyclic",
    "parse_letter",
    "parse_letters",
    "partition_prefixes",
    "power",
    "primitive_root",
    "signed_power",
    "subword_at",
    "to_code",
]
