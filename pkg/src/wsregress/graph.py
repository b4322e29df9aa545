"""Graphviz renderings of a WSDL document.

The abstract view is a tree: one root for the definitions (or its policy),
one node per operation, and one leaf per input/output type. The detailed
view hangs messages, the port type, bindings and services off the same tree.
"""

from __future__ import annotations

import enum

from .wsdl import WsdlDocument


class View(enum.Enum):
    ABSTRACT = "abstract"
    DETAILED = "detailed"


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


class _Dot:
    def __init__(self, name: str):
        self.name = name
        self.nodes: list[str] = []
        self.edges: list[str] = []

    def node(self, label: str, shape: str = "box") -> str:
        nid = f"n{len(self.nodes)}"
        self.nodes.append(f"  {nid} [label={_quote(label)}, shape={shape}];")
        return nid

    def edge(self, a: str, b: str, label: str | None = None) -> None:
        attr = f" [label={_quote(label)}]" if label else ""
        self.edges.append(f"  {a} -> {b}{attr};")

    def text(self) -> str:
        return "\n".join([f"digraph {_quote(self.name)} {{", *self.nodes, *self.edges, "}"]) + "\n"


def render_graph(doc: WsdlDocument, view: View | str = View.ABSTRACT) -> str:
    view = View(view)
    root_label = doc.name or doc.target_namespace or "definitions"
    dot = _Dot(root_label)
    root = dot.node(root_label, shape="doubleoctagon")

    op_nodes = {}
    for op in doc.operations:
        nid = dot.node(op.name, shape="ellipse")
        op_nodes[op.name] = nid
        dot.edge(root, nid)
        if op.input_message:
            dot.edge(nid, dot.node(op.input_type or op.input_message, shape="note"), "input")
        if op.output_message:
            dot.edge(nid, dot.node(op.output_type or op.output_message, shape="note"), "output")

    if view is View.DETAILED:
        msg_nodes = {m.name: dot.node(f"message {m.name}", shape="component") for m in doc.messages}
        if doc.port_type is not None:
            pt = dot.node(f"portType {doc.port_type.name}", shape="folder")
            dot.edge(root, pt)
            for op in doc.port_type.operations:
                dot.edge(pt, op_nodes[op.name])
                for m in op.refs:
                    if m in msg_nodes:
                        dot.edge(op_nodes[op.name], msg_nodes[m])
        binding_nodes = {}
        for b in doc.bindings:
            bid = dot.node(f"binding {b.name}", shape="folder")
            binding_nodes[b.name] = bid
            dot.edge(root, bid)
            for bop in b.operations:
                if bop.name in op_nodes:
                    dot.edge(bid, op_nodes[bop.name])
        for s in doc.services:
            sid = dot.node(f"service {s.name}", shape="house")
            dot.edge(root, sid)
            for port in s.ports:
                if port.binding in binding_nodes:
                    dot.edge(sid, binding_nodes[port.binding], port.name)
    return dot.text()
