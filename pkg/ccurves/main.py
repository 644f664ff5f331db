# main.py
"""ccurves 命令行入口"""

import argparse
import sys
from typing import List, Literal, Optional, Sequence, TextIO, Tuple

from pydantic import BaseModel, Field, ValidationError, model_validator

from .bialgebra import bracket, cobracket, list_axioms, run_axiom_suite
from .config import (
    DEFAULT_CONFIG,
    EXIT_BAD_SURFACE,
    EXIT_BAD_WORD,
    EXIT_CHECK_FAILED,
    EXIT_OK,
    EXIT_USAGE,
    SUPPORTED_OUTPUT_FORMATS,
    SURFACE_PRESETS,
)
from .core.constants import PACKAGE_DESCRIPTION, PACKAGE_NAME, PACKAGE_VERSION
from .core.errors import CCurvesError, NonPrimitive, SymbolError, WordError
from .core.log import logger, setup_logging
from .linking import LinkingOptions
from .output_format import (
    AxiomSuitePayload,
    FormalSumPayload,
    OutputFormatManager,
    ReportPayload,
    ScanPayload,
    SurfacePayload,
    TensorSumPayload,
    ValuePayload,
)
from .surface import SurfaceSymbol, boundary_cycles, invariants, preset
from .topology import (
    intersection_number,
    is_simple,
    scan_bracket_inverse,
    scan_cobracket_zero,
    scan_power_brackets,
    self_intersection_number,
)
from .words import CyclicWord

Command = Literal[
    "bracket",
    "cobracket",
    "self-int",
    "int",
    "simple",
    "surface-info",
    "axioms",
    "scan-cobracket-zero",
    "scan-bracket-inverse",
]

# 每个命令需要的字的个数
COMMAND_ARITY = {
    "bracket": 2,
    "cobracket": 1,
    "self-int": 1,
    "int": 2,
    "simple": 1,
    "surface-info": 0,
    "axioms": 0,
    "scan-cobracket-zero": 0,
    "scan-bracket-inverse": 0,
}


class UsageError(Exception):
    """命令行用法错误"""


class _ArgumentParser(argparse.ArgumentParser):
    """用法错误抛出异常而不是直接退出，以便统一映射退出码"""

    def error(self, message):
        raise UsageError(message)


# --- 调用描述 ---


class SurfaceSpec(BaseModel):
    """三种曲面给法恰好用一种: 符号、(genus, boundary) 或具名预设"""

    symbol: Optional[str] = None
    genus: Optional[int] = Field(default=None, ge=0)
    boundary: Optional[int] = Field(default=None, ge=1)
    preset_name: Optional[str] = None

    @model_validator(mode="after")
    def _exactly_one(self):
        given = [
            self.symbol is not None,
            self.genus is not None or self.boundary is not None,
            self.preset_name is not None,
        ]
        if sum(given) != 1:
            raise ValueError("必须恰好给出一种曲面: --symbol、--genus/--boundary 或 --preset")
        if given[1] and (self.genus is None or self.boundary is None):
            raise ValueError("--genus 与 --boundary 必须同时给出")
        if self.preset_name is not None and self.preset_name not in SURFACE_PRESETS:
            raise ValueError(f"未知的预设: {self.preset_name}")
        return self

    def resolve(self) -> SurfaceSymbol:
        if self.symbol is not None:
            return SurfaceSymbol.parse(self.symbol)
        if self.preset_name is not None:
            return preset(*SURFACE_PRESETS[self.preset_name])
        return preset(self.genus, self.boundary)


class Invocation(BaseModel):
    """一次经过校验的命令行调用"""

    command: Command
    surface: SurfaceSpec
    words: List[str] = Field(default_factory=list)
    output_format: str = DEFAULT_CONFIG["default_output_format"]
    output: Optional[str] = None
    threads: int = Field(default=DEFAULT_CONFIG["threads"], ge=1)
    max_len: Optional[int] = Field(default=None, ge=1)
    seed: Optional[int] = None
    samples: int = Field(default=DEFAULT_CONFIG["axiom_samples"], ge=1)
    bound_slack: int = Field(default=DEFAULT_CONFIG["bound_slack"], ge=0)
    strict_o: bool = DEFAULT_CONFIG["strict_o"]
    axioms: List[str] = Field(default_factory=list)
    require_simple_roots: bool = False
    powers: Optional[Tuple[int, int]] = None

    @model_validator(mode="after")
    def _check(self):
        arity = COMMAND_ARITY[self.command]
        if len(self.words) != arity:
            raise ValueError(f"'{self.command}' 需要 {arity} 个字，收到 {len(self.words)} 个")
        if self.output_format not in SUPPORTED_OUTPUT_FORMATS:
            raise ValueError(f"不支持的输出格式: {self.output_format}")
        if self.command.startswith("scan-") and self.max_len is None:
            raise ValueError(f"'{self.command}' 需要 --max-len")
        if self.command == "axioms" and self.seed is None:
            raise ValueError("'axioms' 需要 --seed")
        if self.powers is not None and 0 in self.powers:
            raise ValueError("--powers 的指数不能为 0")
        return self

    @property
    def options(self) -> LinkingOptions:
        return LinkingOptions(strict_o=self.strict_o, bound_slack=self.bound_slack)


# --- 参数解析 ---


def build_parser() -> argparse.ArgumentParser:
    common = _ArgumentParser(add_help=False)
    surface = common.add_argument_group("surface")
    surface.add_argument("--symbol", help="曲面符号，例如 a1.a2.A1.A2")
    surface.add_argument("--genus", type=int)
    surface.add_argument("--boundary", type=int)
    surface.add_argument("--preset", dest="preset_name", choices=sorted(SURFACE_PRESETS))
    common.add_argument("--json", action="store_true", help="等价于 --format json")
    common.add_argument("--format", dest="output_format", choices=sorted(SUPPORTED_OUTPUT_FORMATS))
    common.add_argument("--output", help="输出文件；扫描命令写入 JSON-lines 发现记录")
    common.add_argument("--bound-slack", type=int, default=DEFAULT_CONFIG["bound_slack"])
    common.add_argument("--strict-o", action="store_true", help="o(·) 在非约化输入上取 0")
    common.add_argument("-v", "--verbose", action="count", default=0)

    parser = _ArgumentParser(prog=PACKAGE_NAME, description=PACKAGE_DESCRIPTION)
    parser.add_argument("--version", action="version", version=f"{PACKAGE_NAME} {PACKAGE_VERSION}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    for name, arity, help_text in (
        ("bracket", 2, "Goldman 括号 [V, W]"),
        ("cobracket", 1, "Turaev 余括号 δ(W)"),
        ("self-int", 1, "本原字的最小自相交数"),
        ("int", 2, "两个本原字的最小相交数"),
        ("simple", 1, "是否有简单代表元"),
    ):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("words", nargs=arity, metavar="WORD")

    sub.add_parser("surface-info", parents=[common], help="欧拉示性数、边界分支数与亏格")

    p = sub.add_parser("axioms", parents=[common], help="随机检查李双代数恒等式")
    p.add_argument("--axiom", dest="axioms", action="append", choices=list_axioms())
    p.add_argument("--samples", type=int, default=DEFAULT_CONFIG["axiom_samples"])
    p.add_argument("--max-len", type=int, default=DEFAULT_CONFIG["axiom_max_len"])
    p.add_argument("--seed", type=int, required=True)

    for name, help_text in (
        ("scan-cobracket-zero", "穷举余括号为零的字"),
        ("scan-bracket-inverse", "穷举比较 [V, V̄] 的项数与 2·自相交数"),
    ):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("--max-len", type=int, required=True)
        p.add_argument("--threads", type=int, default=DEFAULT_CONFIG["threads"])
        if name == "scan-cobracket-zero":
            p.add_argument(
                "--require-simple-roots",
                action="store_true",
                help="若有余括号为零而本原根不简单的字则以 4 退出",
            )
        else:
            p.add_argument("--powers", nargs=2, type=int, metavar=("N", "M"), help="改为比较 [V^N, V^M]")
    return parser


def parse_invocation(argv: Sequence[str]) -> Tuple[Invocation, int]:
    """返回 (调用, 日志详细程度)"""
    args = build_parser().parse_args(list(argv))
    values = vars(args)
    output_format = values.get("output_format") or ("json" if values.get("json") else None)
    invocation = Invocation(
        command=values["command"],
        surface=SurfaceSpec(
            symbol=values.get("symbol"),
            genus=values.get("genus"),
            boundary=values.get("boundary"),
            preset_name=values.get("preset_name"),
        ),
        words=values.get("words") or [],
        output_format=output_format or DEFAULT_CONFIG["default_output_format"],
        output=values.get("output"),
        threads=values.get("threads", DEFAULT_CONFIG["threads"]),
        max_len=values.get("max_len"),
        seed=values.get("seed"),
        samples=values.get("samples", DEFAULT_CONFIG["axiom_samples"]),
        bound_slack=values.get("bound_slack", 0),
        strict_o=values.get("strict_o", False),
        axioms=values.get("axioms") or [],
        require_simple_roots=values.get("require_simple_roots", False),
        powers=tuple(values["powers"]) if values.get("powers") else None,
    )
    return invocation, values.get("verbose", 0)


# --- 命令执行 ---


def _parse_words(inv: Invocation, o_sym: SurfaceSymbol) -> List[CyclicWord]:
    return [o_sym.require_word(CyclicWord.parse(text)) for text in inv.words]


def execute(inv: Invocation) -> Tuple[ReportPayload, int]:
    """执行命令，返回 (载荷, 退出码)"""
    o_sym = inv.surface.resolve()
    words = _parse_words(inv, o_sym)
    options = inv.options
    logger.info(f"[CLI] {inv.command} 曲面 {o_sym} 字 {[str(w) for w in words]}")

    if inv.command == "bracket":
        return FormalSumPayload(bracket(words[0], words[1], o_sym, options)), EXIT_OK
    if inv.command == "cobracket":
        return TensorSumPayload(cobracket(words[0], o_sym, options)), EXIT_OK
    if inv.command == "self-int":
        return ValuePayload(self_intersection_number(words[0], o_sym, options), "self-int"), EXIT_OK
    if inv.command == "int":
        value = intersection_number(words[0], words[1], o_sym, options)
        return ValuePayload(value, "int"), EXIT_OK
    if inv.command == "simple":
        return ValuePayload(is_simple(words[0], o_sym, options), "simple"), EXIT_OK
    if inv.command == "surface-info":
        return SurfacePayload(o_sym, invariants(o_sym), boundary_cycles(o_sym)), EXIT_OK

    if inv.command == "axioms":
        report = run_axiom_suite(
            o_sym,
            axioms=inv.axioms or None,
            samples=inv.samples,
            max_len=inv.max_len or DEFAULT_CONFIG["axiom_max_len"],
            seed=inv.seed,
            options=options,
        )
        return AxiomSuitePayload([report]), EXIT_OK if report.passed else EXIT_CHECK_FAILED

    if inv.command == "scan-cobracket-zero":
        report = scan_cobracket_zero(o_sym, inv.max_len, inv.threads, options)
        failed = inv.require_simple_roots and report.non_simple_roots > 0
        return ScanPayload(report), EXIT_CHECK_FAILED if failed else EXIT_OK

    # scan-bracket-inverse
    if inv.powers is not None and tuple(inv.powers) != (1, -1):
        report = scan_power_brackets(o_sym, inv.max_len, inv.powers, inv.threads, options)
        return ScanPayload(report), EXIT_OK
    report = scan_bracket_inverse(o_sym, inv.max_len, inv.threads, options)
    return ScanPayload(report), EXIT_OK if report.passed else EXIT_CHECK_FAILED


def _emit(inv: Invocation, payload: ReportPayload, stdout: TextIO) -> bool:
    manager = OutputFormatManager()
    rendered = manager.format_report(payload, inv.output_format)
    if rendered is None:
        return False

    if inv.output and isinstance(payload, ScanPayload):
        with open(inv.output, "w", encoding="utf-8") as fh:
            fh.write(payload.to_jsonl())
        stdout.write(rendered + "\n")
    elif inv.output:
        with open(inv.output, "w", encoding="utf-8") as fh:
            fh.write(rendered + "\n")
    else:
        stdout.write(rendered + "\n")
    return True


def run(argv: Sequence[str], stdout: Optional[TextIO] = None) -> int:
    """执行一次命令行调用并返回退出码"""
    stdout = stdout or sys.stdout
    try:
        inv, verbosity = parse_invocation(argv)
    except SystemExit as e:
        # --help / --version
        return int(e.code or 0)
    except (UsageError, ValidationError) as e:
        sys.stderr.write(f"{PACKAGE_NAME}: 用法错误: {e}\n")
        return EXIT_USAGE

    setup_logging(verbosity)
    try:
        payload, code = execute(inv)
    except SymbolError as e:
        logger.debug(f"[CLI] 非法曲面: {e}")
        sys.stderr.write(f"{PACKAGE_NAME}: 非法曲面: {e}\n")
        return EXIT_BAD_SURFACE
    except (WordError, NonPrimitive) as e:
        logger.debug(f"[CLI] 非法字: {e}")
        sys.stderr.write(f"{PACKAGE_NAME}: 非法字: {e}\n")
        return EXIT_BAD_WORD
    except CCurvesError as e:
        logger.debug(f"[CLI] 计算失败: {e}", exc_info=True)
        sys.stderr.write(f"{PACKAGE_NAME}: 计算失败: {e}\n")
        return EXIT_CHECK_FAILED

    try:
        if not _emit(inv, payload, stdout):
            return EXIT_CHECK_FAILED
    except OSError as e:
        sys.stderr.write(f"{PACKAGE_NAME}: 无法写出结果: {e}\n")
        return EXIT_USAGE
    return code


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
