# bialgebra/sums.py
"""整数系数的形式和: V 中的 FormalSum 与 V^{⊗k} 中的 TensorSum"""

from collections import defaultdict
from typing import Any, Dict, Hashable, Iterable, Iterator, List, Mapping, Tuple

from ..words.cyclic import CyclicWord


class _IntegerSum:
    """不可变的整数线性组合；不存储零系数"""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Hashable, int] = None):
        self._terms: Dict[Hashable, int] = {
            k: int(c) for k, c in (terms or {}).items() if c
        }

    @classmethod
    def from_terms(cls, pairs: Iterable[Tuple[Hashable, int]]):
        acc: Dict[Hashable, int] = defaultdict(int)
        for key, coeff in pairs:
            acc[key] += coeff
        return cls(acc)

    @classmethod
    def zero(cls):
        return cls()

    @staticmethod
    def _key_order(key) -> Any:
        raise NotImplementedError

    def coefficient(self, key) -> int:
        return self._terms.get(key, 0)

    def items(self) -> List[Tuple[Hashable, int]]:
        """按规范顺序排列的 (基元, 系数)"""
        return sorted(self._terms.items(), key=lambda kv: self._key_order(kv[0]))

    def keys(self) -> List[Hashable]:
        return [k for k, _ in self.items()]

    @property
    def term_count(self) -> int:
        """按重数计的项数: 合并同类项后系数绝对值之和"""
        return sum(abs(c) for c in self._terms.values())

    def is_zero(self) -> bool:
        return not self._terms

    def __iter__(self) -> Iterator[Tuple[Hashable, int]]:
        return iter(self.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __contains__(self, key) -> bool:
        return key in self._terms

    def __add__(self, other):
        if not isinstance(other, type(self)):
            return NotImplemented
        acc = dict(self._terms)
        for k, c in other._terms.items():
            acc[k] = acc.get(k, 0) + c
        return type(self)(acc)

    def __neg__(self):
        return type(self)({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, type(self)):
            return NotImplemented
        return self + (-other)

    def __mul__(self, scalar: int):
        if isinstance(scalar, bool) or not isinstance(scalar, int):
            return NotImplemented
        return type(self)({k: c * scalar for k, c in self._terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and not isinstance(other, bool) and other == 0:
            return self.is_zero()
        return isinstance(other, type(self)) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((type(self).__name__, frozenset(self._terms.items())))


def _fmt_coeff(coeff: int, first: bool) -> str:
    sign = "-" if coeff < 0 else ("" if first else "+")
    mag = abs(coeff)
    return f"{sign}{mag}·" if mag != 1 else sign


class FormalSum(_IntegerSum):
    """V 中的元素: 循环字的整数线性组合"""

    __slots__ = ()

    @staticmethod
    def _key_order(key: CyclicWord):
        return key.sort_key()

    @classmethod
    def monomial(cls, word: CyclicWord, coeff: int = 1) -> "FormalSum":
        return cls({word: coeff})

    def to_records(self) -> List[Dict[str, Any]]:
        return [{"word": str(w), "coeff": c} for w, c in self.items()]

    def __str__(self) -> str:
        if not self:
            return "0"
        parts = [f"{_fmt_coeff(c, i == 0)}c({w})" for i, (w, c) in enumerate(self.items())]
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"FormalSum({self})"


class TensorSum(_IntegerSum):
    """V^{⊗k} 中的元素: 键为循环字元组"""

    __slots__ = ()

    @staticmethod
    def _key_order(key: Tuple[CyclicWord, ...]):
        return tuple(w.sort_key() for w in key)

    @classmethod
    def monomial(cls, factors: Tuple[CyclicWord, ...], coeff: int = 1) -> "TensorSum":
        return cls({tuple(factors): coeff})

    @property
    def degree(self) -> int:
        """张量次数；零元返回 0"""
        for key in self._terms:
            return len(key)
        return 0

    def swap(self) -> "TensorSum":
        """s(x⊗y) = y⊗x"""
        return TensorSum.from_terms(((y, x), c) for (x, y), c in self._terms.items())

    def rotate(self) -> "TensorSum":
        """ω(u⊗v⊗w) = w⊗u⊗v"""
        return TensorSum.from_terms(((w, u, v), c) for (u, v, w), c in self._terms.items())

    def to_records(self) -> List[Dict[str, Any]]:
        records = []
        for key, c in self.items():
            if len(key) == 2:
                records.append({"left": str(key[0]), "right": str(key[1]), "coeff": c})
            else:
                records.append({"factors": [str(w) for w in key], "coeff": c})
        return records

    def __str__(self) -> str:
        if not self:
            return "0"
        parts = []
        for i, (key, c) in enumerate(self.items()):
            body = " ⊗ ".join(f"c({w})" for w in key)
            parts.append(f"{_fmt_coeff(c, i == 0)}{body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"TensorSum({self})"


def tensor(left: FormalSum, right: FormalSum) -> TensorSum:
    """双线性张量积 left ⊗ right"""
    return TensorSum.from_terms(
        ((x, y), a * b) for x, a in left.items() for y, b in right.items()
    )
