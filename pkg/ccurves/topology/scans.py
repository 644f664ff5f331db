# topology/scans.py
"""穷举扫描: 余括号为零的字、[V, V̄] 项数与自相交数的关系及其幂次推广

枚举空间按规范字前缀切分给进程池；结果合并后按规范顺序排序，
因此 parallelism=1 与多进程的输出完全一致。
"""

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from ..bialgebra.operations import cobracket
from ..config.settings import DEFAULT_CONFIG
from ..core.log import logger
from ..linking.models import DEFAULT_OPTIONS, LinkingOptions
from ..linking.pairs import lp1
from ..surface.symbol import SurfaceSymbol
from ..words.cyclic import CyclicWord, is_primitive, primitive_root
from ..words.enumeration import enumerate_reduced, partition_prefixes
from .models import Finding, ScanReport
from .numbers import is_simple, power_bracket_terms, self_intersection_number

SCAN_COBRACKET_ZERO = "cobracket_zero"
SCAN_BRACKET_INVERSE = "bracket_inverse"
SCAN_POWER_BRACKETS = "power_brackets"


@dataclass(frozen=True)
class _ScanTask:
    scan: str
    symbol: Tuple[int, ...]
    options: LinkingOptions
    max_len: int
    min_len: int
    prefix: Tuple[int, ...]
    exponents: Tuple[int, int] = (1, -1)


@dataclass
class _PartialResult:
    findings: List[Tuple[Tuple[int, Tuple[int, ...]], Finding]] = field(default_factory=list)
    words: int = 0
    primitives: int = 0
    violations: int = 0
    simple_nonzero: int = 0
    non_simple_roots: int = 0


def _build_tasks(
    scan: str,
    o_sym: SurfaceSymbol,
    max_len: int,
    options: LinkingOptions,
    depth: int,
    exponents: Tuple[int, int],
) -> List[_ScanTask]:
    """短于 depth 的字为一个任务，其余每个长度为 depth 的前缀一个任务"""
    common = dict(scan=scan, symbol=o_sym.codes, options=options, exponents=exponents)
    tasks: List[_ScanTask] = []
    if depth > 1:
        tasks.append(_ScanTask(max_len=min(max_len, depth - 1), min_len=1, prefix=(), **common))
    if max_len >= depth:
        for prefix in partition_prefixes(o_sym.rank, depth):
            tasks.append(_ScanTask(max_len=max_len, min_len=depth, prefix=prefix, **common))
    return tasks


def _cobracket_zero_word(w: CyclicWord, o_sym: SurfaceSymbol, options, out: _PartialResult):
    if not cobracket(w, o_sym, options).is_zero():
        return
    root, _ = primitive_root(w)
    root_simple = is_simple(root, o_sym, options)
    if not root_simple:
        out.non_simple_roots += 1
    out.findings.append(
        (
            w.sort_key(),
            Finding(
                word=str(w),
                length=len(w),
                cobracket_zero=True,
                root_simple=root_simple,
                self_int=self_intersection_number(root, o_sym, options),
            ),
        )
    )


def _power_bracket_word(
    v: CyclicWord, o_sym: SurfaceSymbol, options, exponents, scan: str, out: _PartialResult
):
    if not is_primitive(v):
        return
    out.primitives += 1
    s = len(lp1(v, o_sym, options)) // 2
    t = power_bracket_terms(v, exponents, o_sym, options)
    n, m = exponents
    simple = s == 0

    if scan == SCAN_BRACKET_INVERSE and simple and t != 0:
        logger.error(f"[Scan] 简单字 {v} 的 [V, V̄] 有 {t} 项")
        out.simple_nonzero += 1

    if t == 2 * abs(n * m) * s:
        return
    out.violations += 1
    inverse_scan = scan == SCAN_BRACKET_INVERSE
    out.findings.append(
        (
            v.sort_key(),
            Finding(
                word=str(v),
                length=len(v),
                cobracket_zero=cobracket(v, o_sym, options).is_zero(),
                root_simple=simple,
                self_int=s,
                bracket_inverse_terms=t if inverse_scan else None,
                power_bracket_terms=None if inverse_scan else t,
            ),
        )
    )


def _run_task(task: _ScanTask) -> _PartialResult:
    """单个切分上的扫描（在工作进程中执行）"""
    o_sym = SurfaceSymbol(task.symbol)
    out = _PartialResult()
    words = enumerate_reduced(o_sym.rank, task.max_len, min_len=task.min_len, prefix=task.prefix)
    for w in words:
        out.words += 1
        if task.scan == SCAN_COBRACKET_ZERO:
            _cobracket_zero_word(w, o_sym, task.options, out)
        else:
            _power_bracket_word(w, o_sym, task.options, task.exponents, task.scan, out)
    return out


def _run_scan(
    scan: str,
    o_sym: SurfaceSymbol,
    max_len: int,
    parallelism: int,
    options: LinkingOptions,
    exponents: Tuple[int, int] = (1, -1),
    partition_depth: Optional[int] = None,
) -> ScanReport:
    if max_len < 1:
        raise ValueError(f"max_len 必须 >= 1: {max_len}")
    depth = partition_depth or DEFAULT_CONFIG["partition_depth"]
    tasks = _build_tasks(scan, o_sym, max_len, options, depth, exponents)
    logger.info(f"[Scan] {scan}: 曲面 {o_sym}, max_len={max_len}, {len(tasks)} 个切分, 并行度 {parallelism}")

    started = time.perf_counter()
    if parallelism <= 1:
        partials = [_run_task(task) for task in tasks]
    else:
        with ProcessPoolExecutor(max_workers=parallelism) as executor:
            partials = list(executor.map(_run_task, tasks))
    elapsed = time.perf_counter() - started

    merged = sorted((item for part in partials for item in part.findings), key=lambda kv: kv[0])
    report = ScanReport(
        scan=scan,
        surface=str(o_sym),
        max_length=max_len,
        exponents=None if scan == SCAN_COBRACKET_ZERO else exponents,
        findings=[finding for _, finding in merged],
        words_scanned=sum(p.words for p in partials),
        primitive_scanned=sum(p.primitives for p in partials),
        violations=sum(p.violations for p in partials),
        simple_nonzero=sum(p.simple_nonzero for p in partials),
        non_simple_roots=sum(p.non_simple_roots for p in partials),
        wall_time=elapsed,
    )
    logger.info(
        f"[Scan] {scan} 完成: {report.words_scanned} 个字, {len(report.findings)} 条发现, "
        f"用时 {elapsed:.2f}s"
    )
    return report


def scan_cobracket_zero(
    o_sym: SurfaceSymbol,
    max_len: int,
    parallelism: int = 1,
    options: LinkingOptions = DEFAULT_OPTIONS,
    partition_depth: Optional[int] = None,
) -> ScanReport:
    """报告所有 δ = 0 的字，并标注其本原根是否简单及其自相交数"""
    return _run_scan(SCAN_COBRACKET_ZERO, o_sym, max_len, parallelism, options, partition_depth=partition_depth)


def scan_bracket_inverse(
    o_sym: SurfaceSymbol,
    max_len: int,
    parallelism: int = 1,
    options: LinkingOptions = DEFAULT_OPTIONS,
    partition_depth: Optional[int] = None,
) -> ScanReport:
    """对每个本原字比较 [V, V̄] 的项数 t 与 2·s(V)，报告所有 t != 2s 的字"""
    return _run_scan(
        SCAN_BRACKET_INVERSE, o_sym, max_len, parallelism, options, (1, -1), partition_depth
    )


def scan_power_brackets(
    o_sym: SurfaceSymbol,
    max_len: int,
    exponents: Tuple[int, int] = (1, -1),
    parallelism: int = 1,
    options: LinkingOptions = DEFAULT_OPTIONS,
    partition_depth: Optional[int] = None,
) -> ScanReport:
    """对每个本原字比较 [V^n, V^m] 的项数与 2·|n·m|·s(V)，只报告不断言"""
    n, m = exponents
    if n == 0 or m == 0:
        raise ValueError(f"指数不能为 0: {exponents}")
    if tuple(exponents) == (1, -1):
        return scan_bracket_inverse(o_sym, max_len, parallelism, options, partition_depth)
    return _run_scan(
        SCAN_POWER_BRACKETS, o_sym, max_len, parallelism, options, (n, m), partition_depth
    )
