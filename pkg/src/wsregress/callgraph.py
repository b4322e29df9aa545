"""Plain-text call graphs and the affected-operation closure.

File format, one item per line::

    # comment
    @op getVerse
    getVerse -> bgWS

Blank lines are ignored. Node names are any run of non-space characters.
"""

from __future__ import annotations

import logging
import re
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Mapping

from .codeanalysis import CodeUnit
from .errors import CallGraphError

log = logging.getLogger(__name__)

_EDGE = re.compile(r"^(?P<a>\S+)\s*->\s*(?P<b>\S+)$")
_OP = re.compile(r"^@op\s+(?P<name>\S+)$")


@dataclass(frozen=True)
class CallGraph:
    edges: frozenset[tuple[str, str]]
    operations: frozenset[str]
    nodes: frozenset[str]

    @classmethod
    def build(cls, edges: Iterable[tuple[str, str]], operations: Iterable[str] = ()) -> "CallGraph":
        edges = frozenset(edges)
        ops = frozenset(operations)
        nodes = frozenset(n for e in edges for n in e) | ops
        return cls(edges, ops, nodes)

    def callers(self) -> dict[str, set[str]]:
        rev: dict[str, set[str]] = {n: set() for n in self.nodes}
        for a, b in self.edges:
            rev[b].add(a)
        return rev

    def dumps(self) -> str:
        lines = [f"@op {op}" for op in sorted(self.operations)]
        lines += [f"{a} -> {b}" for a, b in sorted(self.edges)]
        return "\n".join(lines) + "\n"


def load_callgraph(text: str) -> CallGraph:
    edges, ops = [], []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("@"):
            m = _OP.match(line)
            if not m:
                raise CallGraphError(f"expected '@op <name>', got {raw.strip()!r}", lineno)
            ops.append(m.group("name"))
            continue
        m = _EDGE.match(line)
        if not m or "->" in (m.group("a") + m.group("b")):
            raise CallGraphError(f"expected 'caller -> callee', got {raw.strip()!r}", lineno)
        edges.append((m.group("a"), m.group("b")))
    endpoints = {n for e in edges for n in e}
    for op in ops:
        if op not in endpoints:
            log.warning("@op %s names a node with no edges; adding it", op)
    return CallGraph.build(edges, ops)


def affected_operations(graph: CallGraph, changed_units: Iterable[str]) -> set[str]:
    """Operations that are changed or call a changed unit, transitively."""
    changed = set(changed_units)
    unknown = changed - graph.nodes
    if unknown:
        log.warning("ignoring changed units absent from the call graph: %s", ", ".join(sorted(unknown)))
    rev = graph.callers()
    seen = set(changed & graph.nodes)
    queue = deque(seen)
    while queue:
        node = queue.popleft()
        for caller in rev[node]:
            if caller not in seen:
                seen.add(caller)
                queue.append(caller)
    return seen & graph.operations


def infer_callgraph(units: Mapping[str, CodeUnit], operations: Iterable[str] = ()) -> CallGraph:
    """Best-effort graph: A -> B whenever B's name is called inside A's body.

    Only plain ``name(`` call sites count, so dispatch through interfaces or
    reflection is missed. Meant as a starting point for a hand-checked file.
    """
    plain = {name.rsplit("::", 1)[-1].split("#", 1)[0]: name for name in units}
    pattern = re.compile(r"\b(" + "|".join(map(re.escape, sorted(plain, key=len, reverse=True))) + r")\s*\(") if plain else None
    edges = set()
    for name, unit in units.items():
        text = unit.text
        body = text[text.find("{") + 1:] if "{" in text else text
        for m in pattern.finditer(body) if pattern else ():
            edges.add((name, plain[m.group(1)]))
    ops = [op for op in operations if op in units]
    return CallGraph.build(edges, ops)
