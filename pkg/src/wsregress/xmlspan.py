"""Span-preserving XML tree built on expat.

Every element remembers the byte offsets of its start tag and of its full
extent inside the source buffer, so callers can slice out verbatim fragments
and splice documents without re-serializing content they do not model.
"""

from __future__ import annotations

import hashlib
import re
import xml.parsers.expat as expat
from dataclasses import dataclass, field

from .errors import XmlSyntaxError

XML_NS = "http://www.w3.org/XML/1998/namespace"

# Attributes whose values are QNames; canonical forms resolve their prefixes.
QNAME_ATTRS = frozenset(
    {"type", "base", "ref", "element", "message", "binding", "itemType", "substitutionGroup"}
)

_XML_DECL = re.compile(rb"^\s*<\?xml[^>]*\?>")


@dataclass(eq=False)
class Node:
    tag: str
    attrs: dict[str, str]
    start: int
    open_end: int = 0
    end: int = 0
    line: int = 0
    nsmap: dict[str, str] = field(default_factory=dict)
    children: list["Node"] = field(default_factory=list)
    text_parts: list[str] = field(default_factory=list)
    parent: "Node | None" = None

    @property
    def prefix(self) -> str:
        return self.tag.split(":", 1)[0] if ":" in self.tag else ""

    @property
    def local(self) -> str:
        return self.tag.rsplit(":", 1)[-1]

    @property
    def ns(self) -> str | None:
        return self.nsmap.get(self.prefix)

    @property
    def text(self) -> str:
        return "".join(self.text_parts)

    @property
    def self_closing(self) -> bool:
        return self.open_end == self.end

    def qname(self) -> tuple[str | None, str]:
        return self.ns, self.local

    def is_(self, ns: str | set[str] | frozenset[str] | None, local: str) -> bool:
        if ns is None or isinstance(ns, str):
            return self.local == local and self.ns == ns
        return self.local == local and self.ns in ns

    def find_all(self, ns, local: str) -> list["Node"]:
        return [c for c in self.children if c.is_(ns, local)]

    def find(self, ns, local: str) -> "Node | None":
        for c in self.children:
            if c.is_(ns, local):
                return c
        return None

    def iter(self):
        yield self
        for c in self.children:
            yield from c.iter()

    def resolve(self, value: str) -> tuple[str | None, str]:
        """Resolve a QName attribute value against the in-scope namespaces."""
        value = value.strip()
        if ":" in value:
            prefix, local = value.split(":", 1)
            return self.nsmap.get(prefix), local
        return self.nsmap.get(""), value


@dataclass(eq=False)
class XmlDocument:
    source: bytes
    root: Node
    xml_decl: str

    def raw(self, node: Node) -> str:
        return self.source[node.start:node.end].decode("utf-8")

    def open_tag(self, node: Node) -> str:
        return self.source[node.start:node.open_end].decode("utf-8")

    def slice(self, start: int, end: int) -> str:
        return self.source[start:end].decode("utf-8")


def _tag_end(buf: bytes, i: int) -> int:
    """Offset just past the '>' closing the tag that starts at ``i``."""
    quote = None
    n = len(buf)
    while i < n:
        ch = buf[i]
        if quote is not None:
            if ch == quote:
                quote = None
        elif ch in (0x22, 0x27):
            quote = ch
        elif ch == 0x3E:
            return i + 1
        i += 1
    raise XmlSyntaxError("unterminated tag")


def parse_xml(data: bytes | str) -> XmlDocument:
    if isinstance(data, str):
        data = data.encode("utf-8")
    parser = expat.ParserCreate(encoding="UTF-8")
    parser.ordered_attributes = True
    parser.buffer_text = True
    stack: list[Node] = []
    roots: list[Node] = []

    def on_start(tag, attr_list):
        attrs = dict(zip(attr_list[::2], attr_list[1::2]))
        parent = stack[-1] if stack else None
        nsmap = dict(parent.nsmap) if parent else {"xml": XML_NS}
        for k, v in attrs.items():
            if k == "xmlns":
                nsmap[""] = v
            elif k.startswith("xmlns:"):
                nsmap[k[6:]] = v
        start = parser.CurrentByteIndex
        node = Node(tag, attrs, start, line=parser.CurrentLineNumber, nsmap=nsmap, parent=parent)
        node.open_end = _tag_end(data, start)
        if data[node.open_end - 2:node.open_end] == b"/>":
            node.end = node.open_end
        if parent is not None:
            parent.children.append(node)
        else:
            roots.append(node)
        stack.append(node)

    def on_end(tag):
        node = stack.pop()
        if not node.end:
            node.end = _tag_end(data, parser.CurrentByteIndex)

    def on_chars(text):
        if stack:
            stack[-1].text_parts.append(text)

    parser.StartElementHandler = on_start
    parser.EndElementHandler = on_end
    parser.CharacterDataHandler = on_chars
    try:
        parser.Parse(data, True)
    except expat.ExpatError as exc:
        raise XmlSyntaxError(
            f"malformed XML: {expat.ErrorString(exc.code)}", exc.lineno, exc.offset
        ) from None
    if not roots:
        raise XmlSyntaxError("document has no root element")
    m = _XML_DECL.match(data)
    decl = m.group(0).strip().decode("utf-8") if m else ""
    return XmlDocument(data, roots[0], decl)


def canonical(node: Node) -> str:
    """Whitespace-, comment- and attribute-order-insensitive rendering."""
    parts: list[str] = []
    _canon(node, parts)
    return "".join(parts)


def _canon(node: Node, out: list[str]) -> None:
    attrs = []
    for k, v in node.attrs.items():
        if k == "xmlns" or k.startswith("xmlns:"):
            continue
        if k in QNAME_ATTRS:
            ns, local = node.resolve(v)
            v = f"{{{ns or ''}}}{local}"
        attrs.append((k, v))
    attrs.sort()
    out.append(f"<{{{node.ns or ''}}}{node.local}")
    for k, v in attrs:
        out.append(f' {k}="{v}"')
    out.append(">")
    text = " ".join(node.text.split())
    if text:
        out.append(text)
    for c in node.children:
        _canon(c, out)
    out.append("</>")


def digest(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()[:16]


def leading_whitespace(source: bytes, offset: int) -> str:
    """Whitespace run immediately preceding ``offset`` (back to previous non-space)."""
    i = offset
    while i > 0 and source[i - 1] in b" \t\r\n":
        i -= 1
    return source[i:offset].decode("utf-8")


def escape_text(s: str) -> str:
    return s.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")


def escape_attr(s: str) -> str:
    return escape_text(s).replace('"', "&quot;")
