# bialgebra/axioms/sampling.py
"""带种子的随机约化字抽样与恒等式随机检查"""

import random
from typing import Iterable, List, Optional

from ...core.errors import TrivialClass
from ...core.log import logger
from ...linking.models import DEFAULT_OPTIONS, LinkingOptions
from ...surface.symbol import SurfaceSymbol
from ...words.cyclic import CyclicWord, make_cyclic
from . import check_axiom, get_axiom, list_axioms
from .models import AxiomSuiteReport, AxiomTally


def random_reduced_word(n: int, max_len: int, rng: random.Random) -> CyclicWord:
    """长度在 [1, max_len] 中均匀取，再均匀地取自由约化序列，最后循环约化"""
    while True:
        length = rng.randint(1, max_len)
        codes: List[int] = []
        for _ in range(length):
            choices = [c for c in range(2 * n) if not codes or c != codes[-1] ^ 1]
            codes.append(rng.choice(choices))
        try:
            return make_cyclic(codes)
        except TrivialClass:
            continue


def sample_words(n: int, count: int, max_len: int, seed: int) -> List[CyclicWord]:
    rng = random.Random(seed)
    return [random_reduced_word(n, max_len, rng) for _ in range(count)]


def run_axiom_suite(
    o_sym: SurfaceSymbol,
    axioms: Optional[Iterable[str]] = None,
    samples: int = 500,
    max_len: int = 8,
    seed: int = 0,
    options: LinkingOptions = DEFAULT_OPTIONS,
) -> AxiomSuiteReport:
    """
    对每个恒等式抽样 samples 次并精确检查。

    Args:
        o_sym: 曲面符号
        axioms: 要检查的恒等式名称，缺省为全部
        samples: 每个恒等式的抽样次数
        max_len: 抽样字的最大长度
        seed: 随机种子，同一参数下结果完全确定
    """
    names = list(axioms) if axioms else list_axioms()
    report = AxiomSuiteReport(surface=str(o_sym), seed=seed, samples=samples, max_len=max_len)
    rng = random.Random(seed)

    for name in names:
        axiom = get_axiom(name)
        tally = AxiomTally()
        report.tallies[name] = tally
        if axiom is None:
            tally.failed += 1
            continue

        logger.info(f"[Axiom:{name}] 开始检查 {samples} 个样本 (曲面 {o_sym})")
        for _ in range(samples):
            sample = [random_reduced_word(o_sym.rank, max_len, rng) for _ in range(axiom.arity)]
            result = check_axiom(name, o_sym, sample, options)
            tally.checked += 1
            if not result.passed:
                tally.failed += 1
                tally.failures.append(result)
        logger.info(f"[Axiom:{name}] 完成: {tally.checked} 个样本，失败 {tally.failed} 个")

    return report
