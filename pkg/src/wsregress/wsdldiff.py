"""Operation-level change sets between two versions of a WSDL."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .wsdl import Message, WsdlDocument, reference_closure
from .xmlspan import canonical, digest, parse_xml
from .errors import XmlSyntaxError


@dataclass(frozen=True)
class IoSignature:
    input_type: str
    output_type: str
    input_digest: str
    output_digest: str

    def to_json(self) -> dict:
        return {
            "input_type": self.input_type,
            "output_type": self.output_type,
            "input_digest": self.input_digest,
            "output_digest": self.output_digest,
        }


@dataclass(frozen=True)
class OperationChangeSet:
    inserted: frozenset[str]
    deleted: frozenset[str]
    io_modified: frozenset[str]
    unchanged: frozenset[str]
    detail: dict[str, tuple[IoSignature, IoSignature]] = field(default_factory=dict, hash=False, compare=False)
    informational: tuple[str, ...] = field(default=(), compare=False)
    # operation order of the new document, then deleted ones in old order
    order: tuple[str, ...] = field(default=(), compare=False, repr=False)

    @property
    def difference(self) -> list[str]:
        """Operations that belong in a Difference WSDL, in new-document order."""
        want = self.inserted | self.io_modified
        return [op for op in self.order if op in want]

    def _sorted(self, names) -> list[str]:
        pos = {n: i for i, n in enumerate(self.order)}
        return sorted(names, key=lambda n: (pos.get(n, len(pos)), n))

    def to_json(self) -> dict:
        return {
            "inserted": self._sorted(self.inserted),
            "deleted": self._sorted(self.deleted),
            "io_modified": self._sorted(self.io_modified),
            "unchanged": self._sorted(self.unchanged),
            "informational": list(self.informational),
            "detail": {op: {"old": a.to_json(), "new": b.to_json()} for op, (a, b) in sorted(self.detail.items())},
        }

    def dumps(self, pretty: bool = False) -> str:
        return json.dumps(self.to_json(), indent=2 if pretty else None, sort_keys=False)


def _clark(ns: str, local: str) -> str:
    return f"{{{ns}}}{local}" if ns else local


def _direction(doc: WsdlDocument, msg: Message | None, conventional: str) -> tuple[str, str]:
    parts = msg.parts if msg else ()
    type_name = " ".join(_clark(p.namespace, p.ref) for p in parts)
    seeds = [p.key for p in parts]
    tns = doc.target_namespace
    conv = ("type", tns, conventional)
    if conv in doc.schema_index:
        seeds.append(conv)
    pieces = [f"part {p.name} {p.attr} {_clark(p.namespace, p.ref)}" for p in parts]
    index = doc.schema_index
    for key in sorted(reference_closure(doc, seeds)):
        pieces.append(f"{key[0]} {_clark(key[1], key[2])} {index[key].canonical}")
    return type_name, digest("\n".join(pieces))


def io_signature(doc: WsdlDocument, op_name: str) -> IoSignature:
    op = doc.operation(op_name)
    msgs = doc.message_map
    in_type, in_digest = _direction(doc, msgs.get(op.input_message or ""), f"{op_name}Type")
    out_type, out_digest = _direction(doc, msgs.get(op.output_message or ""), f"{op_name}ResponseType")
    return IoSignature(in_type, out_type, in_digest, out_digest)


def _extra_key(fragment: str) -> tuple[str, str]:
    try:
        node = parse_xml(fragment).root
    except XmlSyntaxError:
        return fragment.split(None, 1)[0].lstrip("<"), " ".join(fragment.split())
    label = node.tag + (f" {node.attrs['Name']}" if "Name" in node.attrs else "")
    label += f" {node.attrs['name']}" if "name" in node.attrs else ""
    return label, canonical(node)


def _informational(old: WsdlDocument, new: WsdlDocument) -> list[str]:
    notes = []
    oa, na = old.definitions_attrs, new.definitions_attrs
    for k in sorted(set(oa) | set(na)):
        if oa.get(k) != na.get(k):
            if k not in na:
                notes.append(f"definitions attribute {k} removed")
            elif k not in oa:
                notes.append(f"definitions attribute {k} added")
            else:
                notes.append(f"definitions attribute {k} changed")
    old_x = dict(_extra_key(e) for e in old.extras)
    new_x = dict(_extra_key(e) for e in new.extras)
    for label in old_x:
        if label not in new_x:
            notes.append(f"extension element {label} removed")
        elif old_x[label] != new_x[label]:
            notes.append(f"extension element {label} changed")
    for label in new_x:
        if label not in old_x:
            notes.append(f"extension element {label} added")
    return notes


def diff_wsdl(old: WsdlDocument, new: WsdlDocument) -> OperationChangeSet:
    old_ops, new_ops = old.operation_names, new.operation_names
    old_set, new_set = set(old_ops), set(new_ops)
    modified, unchanged, detail = set(), set(), {}
    for op in old_set & new_set:
        a, b = io_signature(old, op), io_signature(new, op)
        detail[op] = (a, b)
        (unchanged if a == b else modified).add(op)
    order = tuple(new_ops) + tuple(op for op in old_ops if op not in new_set)
    return OperationChangeSet(
        inserted=frozenset(new_set - old_set),
        deleted=frozenset(old_set - new_set),
        io_modified=frozenset(modified),
        unchanged=frozenset(unchanged),
        detail=detail,
        informational=tuple(_informational(old, new)),
        order=order,
    )
