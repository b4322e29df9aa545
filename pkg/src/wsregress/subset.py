"""Difference / Unit / Reduce / Combined / Parameter subset WSDLs.

Each builder only decides which operations to keep and why; the document
itself is always produced by :func:`construct_subset`, which restricts the
NEW version of the WSDL and re-parses the result as a self-check.
"""

from __future__ import annotations

import enum
import json
import logging
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .codeanalysis import UnitChangeSet
from .errors import SelectionError, WsdlError
from .wsdl import WsdlDocument, dropped_schema_items, parse_wsdl, restrict, serialize_wsdl
from .wsdldiff import OperationChangeSet, diff_wsdl

log = logging.getLogger(__name__)


class SubsetKind(enum.Enum):
    DIFFERENCE = "difference"
    UNIT = "unit"
    REDUCE = "reduce"
    COMBINED = "combined"
    PARAMETER = "parameter"


@dataclass(frozen=True)
class SubsetSpec:
    kind: SubsetKind
    base: WsdlDocument = field(repr=False)
    required_operations: tuple[str, ...]
    provenance: dict[str, str] = field(default_factory=dict, hash=False)

    def __post_init__(self):
        ops = tuple(dict.fromkeys(self.required_operations))
        object.__setattr__(self, "required_operations", ops)
        object.__setattr__(self, "kind", SubsetKind(self.kind))
        if set(self.provenance) != set(ops):
            raise ValueError("provenance keys must equal required_operations")

    def provenance_json(self, pretty: bool = False) -> str:
        data = {
            "kind": self.kind.value,
            "operations": [{"name": op, "reason": self.provenance[op]} for op in self.required_operations],
        }
        return json.dumps(data, indent=2 if pretty else None)


def construct_subset(spec: SubsetSpec) -> WsdlDocument:
    doc = restrict(spec.base, spec.required_operations)
    dropped = dropped_schema_items(spec.base, spec.required_operations)
    if dropped and set(spec.required_operations) == set(spec.base.operation_names):
        log.warning(
            "dropping %d schema component(s) no operation references: %s",
            len(dropped),
            ", ".join(k[2] for k in dropped),
        )
    if not spec.required_operations:
        log.warning("%s subset has no operations", spec.kind.value)
    text = serialize_wsdl(doc)
    try:
        out = parse_wsdl(text)
    except WsdlError as exc:  # pragma: no cover - would mean restrict() is wrong
        raise WsdlError(f"constructed {spec.kind.value} subset does not re-parse: {exc}") from exc
    if set(out.operation_names) != set(spec.required_operations):  # pragma: no cover
        raise WsdlError("constructed subset lost or gained operations")
    return out


def _in_base_order(base: WsdlDocument, ops: Iterable[str]) -> list[str]:
    want = set(ops)
    return [op for op in base.operation_names if op in want]


def difference_spec(old: WsdlDocument, new: WsdlDocument, changes: OperationChangeSet | None = None) -> SubsetSpec:
    changes = changes or diff_wsdl(old, new)
    ops = changes.difference
    prov = {op: "inserted" if op in changes.inserted else "io-modified" for op in ops}
    return SubsetSpec(SubsetKind.DIFFERENCE, new, tuple(ops), prov)


def difference_wsdl(old: WsdlDocument, new: WsdlDocument) -> WsdlDocument:
    return construct_subset(difference_spec(old, new))


def unit_spec(new: WsdlDocument, units: UnitChangeSet) -> SubsetSpec:
    ops = _in_base_order(new, units.changed)
    skipped = sorted(set(units.changed) - set(ops))
    if skipped:
        log.info("changed units that are not operations (left to the parameter subset): %s", ", ".join(skipped))
    if not ops:
        log.warning("no changed unit is an operation of the new WSDL")
    return SubsetSpec(SubsetKind.UNIT, new, tuple(ops), {op: "code-changed" for op in ops})


def unit_wsdl(new: WsdlDocument, units: UnitChangeSet) -> WsdlDocument:
    return construct_subset(unit_spec(new, units))


def reduce_spec(base: WsdlDocument, selected: Iterable[str]) -> SubsetSpec:
    selected = list(dict.fromkeys(selected))
    for op in selected:
        base.operation(op)  # raises SelectionError with a suggestion
    ops = _in_base_order(base, selected)
    return SubsetSpec(SubsetKind.REDUCE, base, tuple(ops), {op: "user-selected" for op in ops})


def reduce_wsdl(base: WsdlDocument, selected: Iterable[str]) -> WsdlDocument:
    return construct_subset(reduce_spec(base, selected))


def combined_spec(
    base: WsdlDocument,
    parts: Sequence[WsdlDocument | SubsetSpec],
) -> SubsetSpec:
    """Union of the parts' operations, first appearance wins the ordering.

    A part given as a SubsetSpec contributes its own provenance; a bare
    document contributes ``part-<k>``. Reasons for an operation present in
    several parts are joined with ``+``.
    """
    order: list[str] = []
    reasons: dict[str, list[str]] = {}
    known = set(base.operation_names)
    for k, part in enumerate(parts, 1):
        if isinstance(part, SubsetSpec):
            names, prov = part.required_operations, part.provenance
        else:
            names, prov = part.operation_names, {}
        for op in names:
            if op not in known:
                base.operation(op)
            if op not in reasons:
                order.append(op)
                reasons[op] = []
            reason = prov.get(op, f"part-{k}")
            if reason not in reasons[op]:
                reasons[op].append(reason)
    return SubsetSpec(SubsetKind.COMBINED, base, tuple(order), {op: "+".join(reasons[op]) for op in order})


def combined_wsdl(base: WsdlDocument, parts: Sequence[WsdlDocument | SubsetSpec]) -> WsdlDocument:
    return construct_subset(combined_spec(base, parts))


def parameter_spec(new: WsdlDocument, affected: Iterable[str], changed_units: Iterable[str] = ()) -> SubsetSpec:
    affected = set(affected)
    missing = sorted(affected - set(new.operation_names))
    if missing:
        raise SelectionError(
            f"affected operations not in the new WSDL: {', '.join(missing)}"
        )
    direct = set(changed_units)
    ops = _in_base_order(new, affected)
    prov = {op: "code-changed" if op in direct else "call-impacted" for op in ops}
    return SubsetSpec(SubsetKind.PARAMETER, new, tuple(ops), prov)


def parameter_wsdl(new: WsdlDocument, affected: Iterable[str], changed_units: Iterable[str] = ()) -> WsdlDocument:
    return construct_subset(parameter_spec(new, affected, changed_units))


def build(spec: SubsetSpec) -> tuple[WsdlDocument, str]:
    """Subset document plus its serialized text."""
    doc = construct_subset(spec)
    return doc, serialize_wsdl(doc)


def describe(spec: SubsetSpec, reasons: Mapping[str, str] | None = None) -> str:
    reasons = reasons or spec.provenance
    return ", ".join(f"{op} ({reasons[op]})" for op in spec.required_operations) or "(none)"
