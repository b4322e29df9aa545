"""Retest-effort estimates from line counts and from operation counts.

Two independent ratios:

* line ratio: how many lines of code stand behind the changed WSDL lines,
  relative to the code size of the new version;
* operation ratio: the share of operations a subset WSDL leaves out.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Mapping

from .codeanalysis import CodeUnit
from .wsdl import WsdlDocument


class EffortInputError(ValueError):
    pass


@dataclass(frozen=True)
class LineRatioInputs:
    L1: int
    L2: int
    X1: float  # lines of WSDL per operation, v1
    X2: float
    Y1: float  # lines of code per operation, v1
    Y2: float

    def __post_init__(self):
        bad = [k for k, v in asdict(self).items() if not v > 0]
        if bad:
            raise EffortInputError(f"line-ratio inputs must be positive: {', '.join(bad)}")


@dataclass(frozen=True)
class OperationRatioInputs:
    X: int  # operations in v1
    Y: int  # operations in v2
    Z: int  # operations in the subset WSDL

    def __post_init__(self):
        if self.X < 0 or self.Y < 0 or self.Z < 0:
            raise EffortInputError("operation counts must be non-negative")
        if self.Z > self.Y:
            raise EffortInputError(f"Z={self.Z} exceeds Y={self.Y}")


@dataclass(frozen=True)
class EffortReport:
    method: str
    percent_effort_required: float
    percent_effort_reduction: float
    C: float | None = None
    Xav: float | None = None
    Yav: float | None = None
    V_prime: float | None = None
    V2: float | None = None
    inputs: dict = field(default_factory=dict, compare=False)

    def to_json(self) -> dict:
        return asdict(self)

    def dumps(self, pretty: bool = False) -> str:
        return json.dumps(self.to_json(), indent=2 if pretty else None)

    def table(self) -> str:
        rows = [(k, v) for k, v in self.inputs.items()]
        rows += [
            (k, getattr(self, k))
            for k in ("C", "Xav", "Yav", "V_prime", "V2")
            if getattr(self, k) is not None
        ]
        rows += [
            ("effort required %", self.percent_effort_required),
            ("effort reduction %", self.percent_effort_reduction),
        ]
        width = max(len(k) for k, _ in rows)
        out = [f"{self.method} ratio"]
        for k, v in rows:
            shown = f"{v:.2f}" if isinstance(v, float) else str(v)
            out.append(f"  {k.ljust(width)}  {shown}")
        return "\n".join(out)


# formula pieces, exposed so odd operand choices can be checked one by one
def change_lines(L1: float, L2: float) -> float:
    return abs(L1 - L2)


def v_prime(C: float, Yav: float, Xav: float) -> float:
    return C * Yav / Xav


def v2(L2: float, X2: float, Y2: float) -> float:
    return L2 * Y2 / X2


def effort_percent(vp: float, vtwo: float) -> float:
    return 100.0 * vp / vtwo


def line_ratio_effort(inp: LineRatioInputs) -> EffortReport:
    C = change_lines(inp.L1, inp.L2)
    Xav = (inp.X1 + inp.X2) / 2
    Yav = (inp.Y1 + inp.Y2) / 2
    vp = v_prime(C, Yav, Xav)
    vt = v2(inp.L2, inp.X2, inp.Y2)
    req = effort_percent(vp, vt)
    return EffortReport("line", req, 100.0 - req, C, Xav, Yav, vp, vt, asdict(inp))


def operation_ratio_effort(inp: OperationRatioInputs) -> EffortReport:
    if inp.Y == 0:
        raise EffortInputError("Y (operations in the new WSDL) must be positive")
    red = 100.0 * (inp.Y - inp.Z) / inp.Y
    return EffortReport("operation", 100.0 - red, red, inputs=asdict(inp))


def _loc(units: Mapping[str, CodeUnit]) -> int:
    return sum(len(u.body) for u in units.values())


def gather_counts(
    old_wsdl: WsdlDocument,
    new_wsdl: WsdlDocument,
    subset: WsdlDocument,
    old_src: Mapping[str, CodeUnit] | None = None,
    new_src: Mapping[str, CodeUnit] | None = None,
) -> tuple[LineRatioInputs | None, OperationRatioInputs]:
    """Count the inputs of both ratios from real artifacts.

    Lines are counted after newline normalization with blank lines included.
    X is WSDL lines per operation and Y is unit lines per operation. The line
    inputs are None unless both unit maps are given and every count is
    positive.
    """
    X, Y = len(old_wsdl.operation_names), len(new_wsdl.operation_names)
    ops = OperationRatioInputs(X, Y, len(subset.operation_names))
    line = None
    if old_src is not None and new_src is not None and X and Y:
        L1, L2 = old_wsdl.source_line_count, new_wsdl.source_line_count
        counts = (L1, L2, L1 / X, L2 / Y, _loc(old_src) / X, _loc(new_src) / Y)
        if all(c > 0 for c in counts):
            line = LineRatioInputs(*counts)
    return line, ops


def z_interpretations(subset: WsdlDocument, io_modified: frozenset[str] | set[str]) -> dict[str, int]:
    """Z under both readings: every subset operation, or only the modified ones."""
    ops = set(subset.operation_names)
    return {"subset_operations": len(ops), "io_modified_only": len(ops & set(io_modified))}
