# bialgebra/axioms/base.py
"""李双代数恒等式的抽象基类"""

from abc import ABC, abstractmethod
from typing import Sequence, Union

from ...linking.models import DEFAULT_OPTIONS, LinkingOptions
from ...surface.symbol import SurfaceSymbol
from ...words.cyclic import CyclicWord
from ..sums import FormalSum, TensorSum


class BaseAxiom(ABC):
    """
    所有恒等式检查都继承此类。

    residual() 精确地在整数上计算恒等式的左端减右端，结果应恒为零。
    """

    @property
    @abstractmethod
    def name(self) -> str:
        """恒等式的唯一名称，例如 'jacobi'"""
        raise NotImplementedError

    @property
    @abstractmethod
    def arity(self) -> int:
        """一次检查需要的字的个数"""
        raise NotImplementedError

    @property
    @abstractmethod
    def description(self) -> str:
        raise NotImplementedError

    @abstractmethod
    def residual(
        self,
        words: Sequence[CyclicWord],
        o_sym: SurfaceSymbol,
        options: LinkingOptions = DEFAULT_OPTIONS,
    ) -> Union[FormalSum, TensorSum]:
        raise NotImplementedError
