"""WSDL 1.1 document model.

Documents are parsed into immutable records whose leaves are verbatim source
fragments. Restricting a document to a set of operations keeps those
fragments untouched and drops everything the kept operations do not
reference, which is how every subset WSDL is produced.
"""

from __future__ import annotations

import difflib
import enum
import logging
from collections import deque
from dataclasses import dataclass, field, replace
from functools import cached_property
from pathlib import Path
from typing import Iterable

from .errors import SelectionError, WsdlError, XmlSyntaxError
from .xmlspan import Node, XmlDocument, canonical, leading_whitespace, parse_xml

log = logging.getLogger(__name__)

WSDL_NS = "http://schemas.xmlsoap.org/wsdl/"
WSDL2_NS = "http://www.w3.org/ns/wsdl"
XSD_NS = "http://www.w3.org/2001/XMLSchema"
XSD_NAMESPACES = frozenset({XSD_NS, "http://www.w3.org/1999/XMLSchema", "http://www.w3.org/2000/10/XMLSchema"})

# key = (category, namespace, local name)
SchemaKey = tuple[str, str, str]

_CATEGORY = {
    "element": "element",
    "complexType": "type",
    "simpleType": "type",
    "group": "group",
    "attributeGroup": "attributeGroup",
    "attribute": "attribute",
}


class PrefixStyle(enum.Enum):
    PREFIXED = "prefixed"
    UNPREFIXED = "unprefixed"


class Part(enum.Enum):
    START_DEFINITION = "start_definition"
    XSD = "xsd"
    MESSAGE = "message"
    PORT = "port"
    BINDING = "binding"
    SERVICE = "service"
    END_DEFINITION = "end_definition"


PART_ORDER = tuple(Part)


@dataclass(frozen=True)
class Block:
    """Open/close tags of a container whose children are modelled separately."""

    open_tag: str
    close_tag: str
    self_closing: bool = False

    @property
    def opening(self) -> str:
        return self.open_tag[:-2].rstrip() + ">" if self.self_closing else self.open_tag

    def render(self, children: list[str], indent: str, level: int) -> list[str]:
        pad = indent * level
        if not children and self.self_closing:
            return [pad + self.open_tag]
        inner = indent * (level + 1)
        return [pad + self.opening, *(inner + c for c in children), pad + self.close_tag]


@dataclass(frozen=True)
class SchemaType:
    kind: str
    name: str | None
    namespace: str
    fragment: str = field(repr=False)
    refs: frozenset[SchemaKey] = field(default=frozenset(), repr=False)
    canonical: str = field(default="", repr=False, compare=False)
    node: Node | None = field(default=None, repr=False, compare=False)

    @property
    def key(self) -> SchemaKey | None:
        category = _CATEGORY.get(self.kind)
        if category is None or self.name is None:
            return None
        return (category, self.namespace, self.name)


@dataclass(frozen=True)
class Schema:
    block: Block
    target_namespace: str
    items: tuple[SchemaType, ...]
    qualified: bool = False  # elementFormDefault="qualified"


@dataclass(frozen=True)
class MessagePart:
    name: str
    attr: str  # "element" or "type"
    namespace: str
    ref: str

    @property
    def key(self) -> SchemaKey:
        return ("element" if self.attr == "element" else "type", self.namespace, self.ref)


@dataclass(frozen=True)
class Message:
    name: str
    parts: tuple[MessagePart, ...]
    fragment: str = field(repr=False)
    canonical: str = field(default="", repr=False, compare=False)

    @property
    def refs(self) -> frozenset[SchemaKey]:
        return frozenset(p.key for p in self.parts)


@dataclass(frozen=True)
class PortOperation:
    name: str
    input_message: str | None
    output_message: str | None
    fault_messages: tuple[str, ...]
    fragment: str = field(repr=False)

    @property
    def refs(self) -> tuple[str, ...]:
        msgs = [self.input_message, self.output_message, *self.fault_messages]
        return tuple(m for m in msgs if m)


@dataclass(frozen=True)
class PortType:
    name: str
    block: Block
    extras: tuple[str, ...]
    operations: tuple[PortOperation, ...]


@dataclass(frozen=True)
class BindingOperation:
    name: str
    fragment: str = field(repr=False)
    refs: tuple[str, ...] = ()


@dataclass(frozen=True)
class Binding:
    name: str
    port_type: str
    block: Block
    preamble: tuple[str, ...]
    operations: tuple[BindingOperation, ...]


@dataclass(frozen=True)
class Port:
    name: str
    binding: str
    location: str = ""


@dataclass(frozen=True)
class ServiceBlock:
    name: str
    fragment: str = field(repr=False)
    ports: tuple[Port, ...] = ()

    @property
    def bindings(self) -> tuple[str, ...]:
        return tuple(p.binding for p in self.ports)


@dataclass(frozen=True)
class OperationView:
    name: str
    input_message: str
    output_message: str
    input_type: str
    output_type: str


@dataclass(frozen=True)
class WsdlDocument:
    xml_decl: str
    definitions: Block
    definitions_attrs: dict[str, str] = field(hash=False)
    wsdl_prefix: str
    extras: tuple[str, ...]
    types: Block | None
    schemas: tuple[Schema, ...]
    messages: tuple[Message, ...]
    port_type: PortType | None
    bindings: tuple[Binding, ...]
    services: tuple[ServiceBlock, ...]
    indent: str = "  "
    source_line_count: int = field(default=0, compare=False)

    @property
    def prefix_style(self) -> PrefixStyle:
        return PrefixStyle.PREFIXED if self.wsdl_prefix else PrefixStyle.UNPREFIXED

    @property
    def target_namespace(self) -> str:
        return self.definitions_attrs.get("targetNamespace", "")

    @property
    def name(self) -> str:
        return self.definitions_attrs.get("name", "")

    @property
    def operation_names(self) -> list[str]:
        return [op.name for op in self.port_type.operations] if self.port_type else []

    @cached_property
    def message_map(self) -> dict[str, Message]:
        return {m.name: m for m in self.messages}

    @cached_property
    def schema_index(self) -> dict[SchemaKey, SchemaType]:
        index = {}
        for schema in self.schemas:
            for item in schema.items:
                if item.key is not None:
                    index.setdefault(item.key, item)
        return index

    @cached_property
    def schema_namespaces(self) -> frozenset[str]:
        return frozenset(s.target_namespace for s in self.schemas)

    def operation(self, name: str) -> PortOperation:
        for op in self.port_type.operations if self.port_type else ():
            if op.name == name:
                return op
        raise SelectionError(_unknown(name, self.operation_names, "operation"))

    @property
    def operations(self) -> list[OperationView]:
        return [self._view(op) for op in (self.port_type.operations if self.port_type else ())]

    def _view(self, op: PortOperation) -> OperationView:
        def first_type(msg_name):
            msg = self.message_map.get(msg_name or "")
            return msg.parts[0].ref if msg and msg.parts else ""

        return OperationView(
            op.name,
            op.input_message or "",
            op.output_message or "",
            first_type(op.input_message),
            first_type(op.output_message),
        )

    def element_operation_map(self) -> dict[str, str]:
        """Input element/part-wrapper local name -> operation name."""
        out = {}
        for op in self.operations:
            msg = self.message_map.get(op.input_message)
            if msg:
                for p in msg.parts:
                    if p.attr == "element":
                        out.setdefault(p.ref, op.name)
        return out


def _unknown(name: str, known: Iterable[str], what: str) -> str:
    known = list(known)
    close = difflib.get_close_matches(name, known, n=1)
    hint = f"; did you mean {close[0]!r}?" if close else ""
    return f"unknown {what} {name!r}{hint}"


# --------------------------------------------------------------------------
# parsing


def load_wsdl(path: str | Path) -> WsdlDocument:
    path = Path(path)
    try:
        return parse_wsdl(path.read_bytes())
    except (WsdlError, XmlSyntaxError) as exc:
        raise type(exc)(f"{path}: {exc}") from None


def parse_wsdl(text: str | bytes) -> WsdlDocument:
    xml = parse_xml(text)
    root = xml.root
    if root.ns == WSDL2_NS or (root.local == "description" and root.ns != WSDL_NS):
        raise WsdlError("WSDL 2.0 documents are not supported; expected a WSDL 1.1 <definitions> root")
    if not root.is_(WSDL_NS, "definitions"):
        raise WsdlError(f"root element is <{root.tag}>, expected WSDL 1.1 <definitions>")

    indent = "  "
    if root.children:
        ws = leading_whitespace(xml.source, root.children[0].start)
        if "\n" in ws:
            indent = ws.rsplit("\n", 1)[-1] or "  "

    extras, schemas, messages, bindings, services = [], [], [], [], []
    types_block = None
    port_types = []
    for child in root.children:
        if child.ns != WSDL_NS:
            extras.append(xml.raw(child))
        elif child.local == "types":
            if types_block is not None:
                raise WsdlError("multiple <types> sections")
            types_block = _block(xml, child)
            for s in child.children:
                if s.is_(XSD_NAMESPACES, "schema"):
                    schemas.append(_parse_schema(xml, s))
                else:
                    raise WsdlError(f"unsupported element <{s.tag}> inside <types>")
        elif child.local == "message":
            messages.append(_parse_message(xml, child))
        elif child.local == "portType":
            port_types.append(_parse_port_type(xml, child))
        elif child.local == "binding":
            bindings.append(_parse_binding(xml, child))
        elif child.local == "service":
            services.append(_parse_service(xml, child))
        else:
            extras.append(xml.raw(child))
    if len(port_types) > 1:
        raise WsdlError("multiple <portType> elements are not supported")

    doc = WsdlDocument(
        xml_decl=xml.xml_decl,
        definitions=Block(xml.open_tag(root), f"</{root.tag}>", root.self_closing),
        definitions_attrs=dict(root.attrs),
        wsdl_prefix=root.prefix,
        extras=tuple(extras),
        types=types_block,
        schemas=tuple(schemas),
        messages=tuple(messages),
        port_type=port_types[0] if port_types else None,
        bindings=tuple(bindings),
        services=tuple(services),
        indent=indent,
        source_line_count=len(xml.source.decode("utf-8").splitlines()),
    )
    validate(doc)
    return doc


def _block(xml: XmlDocument, node: Node) -> Block:
    return Block(xml.open_tag(node), f"</{node.tag}>", node.self_closing)


def _ns(value: str | None) -> str:
    return value or ""


def _parse_schema(xml: XmlDocument, node: Node) -> Schema:
    tns = node.attrs.get("targetNamespace", "")
    items = []
    for child in node.children:
        name = child.attrs.get("name") if child.local in _CATEGORY else None
        items.append(
            SchemaType(
                kind=child.local,
                name=name,
                namespace=tns,
                fragment=xml.raw(child),
                refs=frozenset(_schema_refs(child)),
                canonical=canonical(child),
                node=child,
            )
        )
    qualified = node.attrs.get("elementFormDefault") == "qualified"
    return Schema(_block(xml, node), tns, tuple(items), qualified)


def _schema_refs(node: Node):
    for n in node.iter():
        a = n.attrs
        if n.ns in XSD_NAMESPACES:
            for attr in ("type", "base", "itemType"):
                if attr in a:
                    yield _key("type", n, a[attr])
            if "memberTypes" in a:
                for qn in a["memberTypes"].split():
                    yield _key("type", n, qn)
            if "substitutionGroup" in a:
                yield _key("element", n, a["substitutionGroup"])
            if "ref" in a and n.local in ("element", "attribute", "group", "attributeGroup"):
                yield _key(_CATEGORY[n.local], n, a["ref"])
        for k, v in a.items():
            # soapenc arrays: wsdl:arrayType="tns:Foo[]"
            if k.endswith(":arrayType") and n.resolve(k)[0] == WSDL_NS:
                yield _key("type", n, v.split("[", 1)[0])


def _key(category: str, node: Node, qname: str) -> SchemaKey:
    ns, local = node.resolve(qname)
    return (category, _ns(ns), local)


def _parse_message(xml: XmlDocument, node: Node) -> Message:
    parts = []
    for p in node.find_all(WSDL_NS, "part"):
        if "element" in p.attrs:
            attr = "element"
        elif "type" in p.attrs:
            attr = "type"
        else:
            raise WsdlError(f"message {node.attrs.get('name')!r} part {p.attrs.get('name')!r} has no element or type")
        ns, local = p.resolve(p.attrs[attr])
        parts.append(MessagePart(p.attrs.get("name", ""), attr, _ns(ns), local))
    return Message(node.attrs.get("name", ""), tuple(parts), xml.raw(node), canonical(node))


def _parse_port_type(xml: XmlDocument, node: Node) -> PortType:
    ops, extras = [], []
    for child in node.children:
        if not child.is_(WSDL_NS, "operation"):
            extras.append(xml.raw(child))
            continue

        def msg(tag):
            el = child.find(WSDL_NS, tag)
            return child.resolve(el.attrs["message"])[1] if el is not None and "message" in el.attrs else None

        faults = tuple(
            f.resolve(f.attrs["message"])[1] for f in child.find_all(WSDL_NS, "fault") if "message" in f.attrs
        )
        ops.append(PortOperation(child.attrs.get("name", ""), msg("input"), msg("output"), faults, xml.raw(child)))
    return PortType(node.attrs.get("name", ""), _block(xml, node), tuple(extras), tuple(ops))


def _parse_binding(xml: XmlDocument, node: Node) -> Binding:
    preamble, ops = [], []
    for child in node.children:
        if child.is_(WSDL_NS, "operation"):
            refs = tuple(
                n.resolve(n.attrs["message"])[1] for n in child.iter() if n is not child and "message" in n.attrs
            )
            ops.append(BindingOperation(child.attrs.get("name", ""), xml.raw(child), refs))
        else:
            preamble.append(xml.raw(child))
    port_type = node.resolve(node.attrs.get("type", ""))[1]
    return Binding(node.attrs.get("name", ""), port_type, _block(xml, node), tuple(preamble), tuple(ops))


def _parse_service(xml: XmlDocument, node: Node) -> ServiceBlock:
    ports = []
    for p in node.find_all(WSDL_NS, "port"):
        address = next((a for a in p.children if a.local == "address"), None)
        ports.append(
            Port(
                p.attrs.get("name", ""),
                p.resolve(p.attrs.get("binding", ""))[1],
                address.attrs.get("location", "") if address is not None else "",
            )
        )
    return ServiceBlock(node.attrs.get("name", ""), xml.raw(node), tuple(ports))


def validate(doc: WsdlDocument) -> None:
    names = doc.operation_names
    seen = set()
    for n in names:
        if n in seen:
            raise WsdlError(f"duplicate operation name {n!r} in portType")
        seen.add(n)

    local_ns = doc.schema_namespaces
    index = doc.schema_index

    def dangling(key: SchemaKey) -> bool:
        category, ns, _ = key
        return ns in local_ns and ns not in XSD_NAMESPACES and key not in index

    for schema in doc.schemas:
        for item in schema.items:
            for ref in sorted(item.refs):
                if dangling(ref):
                    raise WsdlError(
                        f"schema {item.kind} {item.name!r} references undefined {ref[0]} {{{ref[1]}}}{ref[2]}"
                    )
    for msg in doc.messages:
        for p in msg.parts:
            if dangling(p.key):
                raise WsdlError(f"message {msg.name!r} part {p.name!r} references undefined {p.attr} {{{p.namespace}}}{p.ref}")
    msgs = doc.message_map
    for op in doc.port_type.operations if doc.port_type else ():
        for m in op.refs:
            if m not in msgs:
                raise WsdlError(f"operation {op.name!r} references undefined message {m!r}")
    for b in doc.bindings:
        for bop in b.operations:
            if bop.name not in seen:
                raise WsdlError(f"binding {b.name!r} operation {bop.name!r} is not declared in the portType")
            for m in bop.refs:
                if m not in msgs:
                    raise WsdlError(f"binding {b.name!r} operation {bop.name!r} references undefined message {m!r}")


# --------------------------------------------------------------------------
# slicing


def _check_ops(doc: WsdlDocument, ops: Iterable[str]) -> list[str]:
    known = doc.operation_names
    ops = list(dict.fromkeys(ops))
    for op in ops:
        if op not in known:
            raise SelectionError(_unknown(op, known, "operation"))
    return ops


def required_messages(doc: WsdlDocument, ops: Iterable[str]) -> set[str]:
    ops = set(ops)
    names = set()
    for op in doc.port_type.operations if doc.port_type else ():
        if op.name in ops:
            names.update(op.refs)
    for b in doc.bindings:
        for bop in b.operations:
            if bop.name in ops:
                names.update(bop.refs)
    return names


def schema_closure(doc: WsdlDocument, ops: Iterable[str]) -> set[SchemaKey]:
    """Schema components reachable from the given operations.

    Seeds are the ``<Op>Type`` / ``<Op>ResponseType`` named types together
    with every component referenced by the operations' message parts; the
    result is closed under nested references.
    """
    ops = list(ops)
    index = doc.schema_index
    seeds: list[SchemaKey] = []
    conventional = {f"{op}Type" for op in ops} | {f"{op}ResponseType" for op in ops}
    for key in index:
        if key[0] == "type" and key[2] in conventional:
            seeds.append(key)
    msgs = doc.message_map
    for m in sorted(required_messages(doc, ops)):
        seeds.extend(msgs[m].refs)
    return reference_closure(doc, seeds)


def reference_closure(doc: WsdlDocument, seeds: Iterable[SchemaKey]) -> set[SchemaKey]:
    """Locally defined schema keys reachable from ``seeds``."""
    index = doc.schema_index
    seen: set[SchemaKey] = set()
    queue = deque(k for k in seeds if k in index)
    while queue:
        key = queue.popleft()
        if key in seen:
            continue
        seen.add(key)
        queue.extend(r for r in index[key].refs if r in index and r not in seen)
    return seen


def dropped_schema_items(doc: WsdlDocument, ops: Iterable[str]) -> list[SchemaKey]:
    keep = schema_closure(doc, ops)
    return [k for k in doc.schema_index if k not in keep]


def restrict(doc: WsdlDocument, ops: Iterable[str]) -> WsdlDocument:
    """Structural subset of ``doc`` holding only ``ops`` (in source order)."""
    ops = set(_check_ops(doc, ops))
    keep_types = schema_closure(doc, ops)
    keep_msgs = required_messages(doc, ops)
    index = doc.schema_index

    def keep_item(item: SchemaType) -> bool:
        k = item.key
        # first definition wins for duplicate keys; unnamed items (imports etc.) always stay
        return k is None or (k in keep_types and index[k] is item)

    schemas = tuple(replace(s, items=tuple(i for i in s.items if keep_item(i))) for s in doc.schemas)
    port_type = None
    if doc.port_type:
        port_type = replace(doc.port_type, operations=tuple(o for o in doc.port_type.operations if o.name in ops))
    bindings = tuple(replace(b, operations=tuple(o for o in b.operations if o.name in ops)) for b in doc.bindings)
    return replace(
        doc,
        schemas=schemas,
        messages=tuple(m for m in doc.messages if m.name in keep_msgs),
        port_type=port_type,
        bindings=bindings,
    )


# --------------------------------------------------------------------------
# serialization


def _render_part(doc: WsdlDocument, part: Part) -> list[str]:
    ind = doc.indent
    if part is Part.START_DEFINITION:
        lines = [doc.xml_decl] if doc.xml_decl else []
        return lines + [doc.definitions.opening] + [ind + e for e in doc.extras]
    if part is Part.XSD:
        if doc.types is None:
            return []
        children = []
        for s in doc.schemas:
            children.extend(s.block.render([i.fragment for i in s.items], ind, 2))
        if not children and doc.types.self_closing:
            return [ind + doc.types.open_tag]
        return [ind + doc.types.opening, *children, ind + doc.types.close_tag]
    if part is Part.MESSAGE:
        return [ind + m.fragment for m in doc.messages]
    if part is Part.PORT:
        pt = doc.port_type
        if pt is None:
            return []
        return pt.block.render([*pt.extras, *(o.fragment for o in pt.operations)], ind, 1)
    if part is Part.BINDING:
        lines = []
        for b in doc.bindings:
            lines.extend(b.block.render([*b.preamble, *(o.fragment for o in b.operations)], ind, 1))
        return lines
    if part is Part.SERVICE:
        return [ind + s.fragment for s in doc.services]
    if part is Part.END_DEFINITION:
        return [doc.definitions.close_tag]
    raise ValueError(part)


def extract_part(doc: WsdlDocument, part: Part | str, required_operations: Iterable[str] = ()) -> str:
    part = Part(part)
    if part in (Part.START_DEFINITION, Part.SERVICE, Part.END_DEFINITION):
        return "\n".join(_render_part(doc, part))
    return "\n".join(_render_part(restrict(doc, required_operations), part))


def serialize_wsdl(doc: WsdlDocument) -> str:
    lines: list[str] = []
    for part in PART_ORDER:
        lines.extend(_render_part(doc, part))
    return "\n".join(lines) + "\n"
