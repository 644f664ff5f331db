# output_format/payloads.py
"""各命令的结果载荷"""

import json
from typing import Any, List

from ..bialgebra.axioms.models import AxiomSuiteReport
from ..bialgebra.sums import FormalSum, TensorSum
from ..surface.invariants import SurfaceInvariants
from ..surface.symbol import SurfaceSymbol
from ..topology.models import ScanReport
from .base import ReportPayload


class ValuePayload(ReportPayload):
    """单个整数或布尔值"""

    def __init__(self, value: Any, title: str = "ccurves"):
        self.value = value
        self.title = title

    def to_data(self) -> Any:
        return self.value

    def to_text(self) -> str:
        if isinstance(self.value, bool):
            return "true" if self.value else "false"
        return str(self.value)


class FormalSumPayload(ReportPayload):
    """括号的值"""

    def __init__(self, value: FormalSum, title: str = "bracket"):
        self.value = value
        self.title = title

    def to_data(self) -> Any:
        return self.value.to_records()

    def to_text(self) -> str:
        return str(self.value)

    def to_markdown(self) -> str:
        lines = [f"## {self.title}", "", "| word | coeff |", "| --- | ---: |"]
        lines += [f"| `{w}` | {c} |" for w, c in self.value.items()]
        if not self.value:
            lines.append("| 0 | 0 |")
        return "\n".join(lines) + "\n"


class TensorSumPayload(ReportPayload):
    """余括号的值"""

    def __init__(self, value: TensorSum, title: str = "cobracket"):
        self.value = value
        self.title = title

    def to_data(self) -> Any:
        return self.value.to_records()

    def to_text(self) -> str:
        return str(self.value)

    def to_markdown(self) -> str:
        lines = [f"## {self.title}", "", "| left | right | coeff |", "| --- | --- | ---: |"]
        for key, c in self.value.items():
            lines.append(f"| `{key[0]}` | `{key[1]}` | {c} |")
        if not self.value:
            lines.append("| 0 | 0 | 0 |")
        return "\n".join(lines) + "\n"


class SurfacePayload(ReportPayload):
    """surface-info 的结果"""

    title = "surface"

    def __init__(self, o_sym: SurfaceSymbol, info: SurfaceInvariants, cycles: List[tuple]):
        self.o_sym = o_sym
        self.info = info
        self.cycles = cycles

    def to_data(self) -> Any:
        return {
            "symbol": str(self.o_sym),
            "rank": self.o_sym.rank,
            **self.info.model_dump(),
        }

    def to_text(self) -> str:
        return "\n".join(
            [
                f"symbol: {self.o_sym}",
                f"rank: {self.o_sym.rank}",
                f"euler_characteristic: {self.info.euler_characteristic}",
                f"boundary_components: {self.info.boundary_components}",
                f"genus: {self.info.genus}",
                f"boundary_cycles: {' '.join(str(list(c)) for c in self.cycles)}",
            ]
        )


class AxiomSuitePayload(ReportPayload):
    title = "axioms"

    def __init__(self, reports: List[AxiomSuiteReport]):
        self.reports = reports

    def to_data(self) -> Any:
        return [json.loads(r.model_dump_json()) for r in self.reports]

    def to_text(self) -> str:
        lines = []
        for report in self.reports:
            lines.append(f"surface {report.surface} (seed={report.seed}, max_len={report.max_len})")
            for name, tally in report.tallies.items():
                status = "ok" if tally.failed == 0 else "FAILED"
                lines.append(f"  {name:<14} {tally.checked:>5} checked  {tally.failed:>3} failed  {status}")
                for failure in tally.failures[:3]:
                    lines.append(f"    witness: {' '.join(failure.witness or failure.words)}")
        return "\n".join(lines)

    def to_markdown(self) -> str:
        lines = ["## axioms", ""]
        for report in self.reports:
            lines += [f"### `{report.surface}`", "", "| axiom | checked | failed |", "| --- | ---: | ---: |"]
            lines += [f"| {n} | {t.checked} | {t.failed} |" for n, t in report.tallies.items()]
            lines.append("")
        return "\n".join(lines)


class ScanPayload(ReportPayload):
    def __init__(self, report: ScanReport):
        self.report = report
        self.title = f"scan {report.scan}"

    def to_data(self) -> Any:
        data = json.loads(self.report.model_dump_json(exclude={"findings"}))
        data["findings"] = [f.to_record() for f in self.report.findings]
        return data

    def to_text(self) -> str:
        r = self.report
        lines = [
            f"scan: {r.scan}",
            f"surface: {r.surface}",
            f"max_length: {r.max_length}",
            f"words_scanned: {r.words_scanned}",
        ]
        if r.exponents is not None:
            lines += [
                f"exponents: {r.exponents[0]} {r.exponents[1]}",
                f"primitive_scanned: {r.primitive_scanned}",
                f"violations: {r.violations}",
                f"simple_nonzero: {r.simple_nonzero}",
            ]
        else:
            lines.append(f"non_simple_roots: {r.non_simple_roots}")
        lines.append(f"findings: {len(r.findings)}")
        lines += [f"  {f.to_jsonl()}" for f in r.findings]
        return "\n".join(lines)

    def to_jsonl(self) -> str:
        return "".join(f.to_jsonl() + "\n" for f in self.report.findings)
