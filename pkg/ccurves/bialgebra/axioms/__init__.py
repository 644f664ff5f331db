# bialgebra/axioms/__init__.py
"""李双代数恒等式的注册表与检查入口"""

import inspect
from typing import Dict, List, Optional, Sequence, Type

from ...core.log import logger
from ...linking.models import DEFAULT_OPTIONS, LinkingOptions
from ...surface.symbol import SurfaceSymbol
from ...words.cyclic import CyclicWord
from .base import BaseAxiom
from .models import AxiomResult

# --- 注册器核心 ---

# 键是恒等式名称，值是恒等式实例；在 checks 包导入时填充。
_axiom_registry: Dict[str, BaseAxiom] = {}

# list_axioms() 的固定顺序
AXIOM_ORDER = ("skew", "jacobi", "coskew", "cojacobi", "compatibility", "involutive")


def register_axiom(cls: Type[BaseAxiom]) -> Type[BaseAxiom]:
    """类装饰器: 实例化并注册恒等式"""
    if not inspect.isclass(cls) or not issubclass(cls, BaseAxiom):
        raise TypeError(f"被 @register_axiom 装饰的对象 {cls.__name__} 不是 BaseAxiom 的子类。")

    instance = cls()
    if instance.name in _axiom_registry:
        logger.warning(f"[Axiom] 名称冲突: '{instance.name}' 已被注册，{cls.__name__} 将覆盖之前的注册。")
    _axiom_registry[instance.name] = instance
    logger.debug(f"[Axiom] 已注册恒等式: '{instance.name}' (来自 {cls.__name__})")
    return cls


# --- 自动导入 ---
from . import checks  # noqa: E402, F401

# --- 公共API ---


def list_axioms() -> List[str]:
    known = [name for name in AXIOM_ORDER if name in _axiom_registry]
    extra = sorted(name for name in _axiom_registry if name not in AXIOM_ORDER)
    return known + extra


def get_axiom(name: str) -> Optional[BaseAxiom]:
    axiom = _axiom_registry.get(name)
    if not axiom:
        logger.error(f"[Axiom] 无法找到名为 '{name}' 的恒等式。可用: {list_axioms()}")
    return axiom


def check_axiom(
    name: str,
    o_sym: SurfaceSymbol,
    sample: Sequence[CyclicWord],
    options: LinkingOptions = DEFAULT_OPTIONS,
) -> AxiomResult:
    """在给定的字上精确计算恒等式残差"""
    words = [str(w) for w in sample]
    axiom = get_axiom(name)
    if axiom is None:
        return AxiomResult(axiom=name, words=words, passed=False, error=f"未知的恒等式: {name}")
    if len(sample) != axiom.arity:
        return AxiomResult(
            axiom=name,
            words=words,
            passed=False,
            error=f"'{name}' 需要 {axiom.arity} 个字，收到 {len(sample)} 个",
        )

    try:
        residual = axiom.residual(list(sample), o_sym, options)
    except Exception as e:
        logger.error(f"[Axiom:{name}] 计算残差时发生错误 ({words}): {e}", exc_info=True)
        return AxiomResult(axiom=name, words=words, passed=False, witness=words, error=str(e))

    if residual.is_zero():
        return AxiomResult(axiom=name, words=words, passed=True)

    logger.warning(f"[Axiom:{name}] 残差非零: {words} -> {residual}")
    return AxiomResult(
        axiom=name,
        words=words,
        passed=False,
        residual=residual.to_records(),
        witness=words,
    )


__all__ = [
    "AXIOM_ORDER",
    "BaseAxiom",
    "check_axiom",
    "get_axiom",
    "list_axioms",
    "register_axiom",
]
