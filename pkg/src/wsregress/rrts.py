"""Reduced regression test suites.

``build_rrts`` keeps the old cases that exercise inserted or modified
operations, drops everything else, and adds an empty template case for each
inserted operation that has no case yet. ``prtws_reduce`` then narrows the
cases of one operation down to chosen steps.
"""

from __future__ import annotations

import json
import logging
import re
from dataclasses import dataclass, field, replace
from typing import Iterable, Mapping, Sequence

from .errors import SelectionError, WsdlError
from .suite import (
    Dialect,
    PrimaryParameterScenario,
    ScenarioCheck,
    TestCase,
    TestStep,
    TestSuite,
    UNBOUND,
    check_scenario,
    map_operation_tests,
    parse_case_fragment,
    scenario_cases,
    select_step_indices,
    select_steps,
)
from .wsdl import XSD_NAMESPACES, SchemaKey, WsdlDocument
from .wsdldiff import OperationChangeSet
from .xmlspan import Node, escape_attr, escape_text, parse_xml

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class RrtsPlan:
    inserted_ops: frozenset[str]
    modified_ops: frozenset[str]
    deleted_ops: frozenset[str] = frozenset()
    unmodified_ops: frozenset[str] = frozenset()
    step_selection: dict[str, tuple[str, ...]] | None = field(default=None, hash=False)

    def __post_init__(self):
        for name in ("inserted_ops", "modified_ops", "deleted_ops", "unmodified_ops"):
            object.__setattr__(self, name, frozenset(getattr(self, name)))
        sets = [self.inserted_ops, self.modified_ops, self.deleted_ops, self.unmodified_ops]
        for i in range(4):
            for j in range(i + 1, 4):
                both = sets[i] & sets[j]
                if both:
                    raise ValueError(f"plan sets overlap on {', '.join(sorted(both))}")
        if self.step_selection is not None:
            object.__setattr__(
                self, "step_selection", {op: tuple(dict.fromkeys(v)) for op, v in self.step_selection.items()}
            )
            stray = set(self.step_selection) - self.required_operations
            if stray:
                raise ValueError(f"step selection for operations not retested: {', '.join(sorted(stray))}")

    @property
    def required_operations(self) -> frozenset[str]:
        return self.inserted_ops | self.modified_ops

    def to_json(self) -> dict:
        return {
            "required": sorted(self.required_operations),
            "inserted": sorted(self.inserted_ops),
            "modified": sorted(self.modified_ops),
            "deleted": sorted(self.deleted_ops),
            "unmodified": sorted(self.unmodified_ops),
            "step_selection": {k: list(v) for k, v in sorted((self.step_selection or {}).items())},
        }


def plan_from_changes(
    changes: OperationChangeSet,
    code_changed: Iterable[str] = (),
    step_selection: Mapping[str, Sequence[str]] | None = None,
) -> RrtsPlan:
    """Plan straight from a WSDL diff plus the operations whose code changed."""
    code = set(code_changed) & changes.unchanged
    modified = changes.io_modified | code
    return RrtsPlan(
        changes.inserted, modified, changes.deleted, changes.unchanged - code,
        dict(step_selection) if step_selection else None,
    )


def plan_from_subset(
    subset: WsdlDocument,
    old_suite: TestSuite | None = None,
    old_wsdl: WsdlDocument | None = None,
    new_wsdl: WsdlDocument | None = None,
    step_selection: Mapping[str, Sequence[str]] | None = None,
) -> RrtsPlan:
    """Classify a subset WSDL's operations for :func:`build_rrts`.

    With the old WSDL, an operation is inserted when the old version lacks
    it. Without it, an operation is treated as inserted when the old suite
    has no case for it.
    """
    required = set(subset.operation_names)
    new_ops = set(new_wsdl.operation_names) if new_wsdl is not None else None
    if old_wsdl is not None:
        old_ops = set(old_wsdl.operation_names)
        inserted = required - old_ops
        deleted = old_ops - new_ops if new_ops is not None else set()
        pool = (old_ops & new_ops) if new_ops is not None else old_ops
    else:
        if old_suite is None:
            raise ValueError("plan_from_subset needs the old WSDL or the old suite")
        tested = set(map_operation_tests(old_suite, new_wsdl)) - {UNBOUND}
        inserted = required - tested
        deleted = set()
        pool = tested | (new_ops or set())
    modified = required - inserted
    unmodified = pool - required - deleted
    return RrtsPlan(
        frozenset(inserted), frozenset(modified), frozenset(deleted), frozenset(unmodified),
        dict(step_selection) if step_selection else None,
    )


# --------------------------------------------------------------------------
# building


@dataclass(frozen=True)
class RrtsReport:
    kept: tuple[dict, ...]
    dropped: tuple[dict, ...]
    templates: tuple[str, ...]
    flags: tuple[str, ...]
    plan: RrtsPlan

    def to_json(self) -> dict:
        before = sum(k["steps_before"] for k in self.kept) + sum(d["steps"] for d in self.dropped)
        after = sum(k["steps_after"] for k in self.kept)
        return {
            "plan": self.plan.to_json(),
            "kept": list(self.kept),
            "dropped": list(self.dropped),
            "templates": list(self.templates),
            "flags": list(self.flags),
            "totals": {
                "cases_before": len(self.kept) + len(self.dropped),
                "cases_after": len(self.kept) + len(self.templates),
                "steps_before": before,
                "steps_after": after + len(self.templates),
            },
        }

    def dumps(self, pretty: bool = False) -> str:
        return json.dumps(self.to_json(), indent=2 if pretty else None)


class _Binder:
    def __init__(self, wsdl: WsdlDocument):
        self.ops = set(wsdl.operation_names)
        self.emap = wsdl.element_operation_map()

    def step(self, step: TestStep) -> str | None:
        raw = step.operation
        if not raw:
            return None
        if raw in self.ops:
            return raw
        return self.emap.get(raw, raw)

    def case(self, case: TestCase) -> list[str]:
        ops = []
        for s in case.steps:
            op = self.step(s)
            if op and op not in ops:
                ops.append(op)
        if not ops and case.bound_operation:
            ops.append(case.bound_operation)
        return ops


def build_rrts_report(old_suite: TestSuite, plan: RrtsPlan, new_wsdl: WsdlDocument) -> tuple[TestSuite, RrtsReport]:
    new_ops = new_wsdl.operation_names
    missing = sorted(plan.required_operations - set(new_ops))
    if missing:
        raise SelectionError(f"plan operations absent from the new WSDL: {', '.join(missing)}")
    binder = _Binder(new_wsdl)
    selection = plan.step_selection or {}
    kept_cases: list[TestCase] = []
    kept, dropped, flags = [], [], []
    covered: set[str] = set()

    for case in old_suite.cases:
        ops = binder.case(case)
        hit = [op for op in ops if op in plan.required_operations]
        if not hit:
            if not ops:
                reason = "unbound"
            elif any(op in plan.deleted_ops for op in ops):
                reason = "deleted"
            elif all(op not in binder.ops for op in ops):
                reason = "obsolete"
            elif any(op in plan.unmodified_ops for op in ops):
                reason = "unmodified"
            else:
                reason = "not required"
            dropped.append({"case": case.name, "operations": ops, "reason": reason, "steps": len(case.steps)})
            continue
        new_case = _trim(case, binder, selection)
        if not any(binder.step(s) in plan.required_operations for s in new_case.steps) and case.steps:
            dropped.append({"case": case.name, "operations": ops, "reason": "no selected steps", "steps": len(case.steps)})
            continue
        covered.update(hit)
        for op in hit:
            if op in plan.inserted_ops:
                flags.append(f"inserted operation {op} already has test case {case.name}; kept it, no template added")
        if len(ops) > 1:
            flags.append(f"test case {case.name} targets several operations: {', '.join(ops)}")
        kept_cases.append(new_case)
        kept.append({
            "case": case.name,
            "operations": ops,
            "reason": "inserted" if all(op in plan.inserted_ops for op in hit) else "modified",
            "steps_before": len(case.steps),
            "steps_after": len(new_case.steps),
        })

    templates = []
    for op in new_ops:
        if op in plan.inserted_ops and op not in covered:
            templates.append(op)
    existing = {c.name for c in kept_cases}
    template_cases = []
    for op in templates:
        t = make_template(op, new_wsdl, old_suite.dialect, suite=old_suite)
        if t.name in existing:
            raise SelectionError(f"template name {t.name!r} collides with a kept test case")
        template_cases.append(t)
    suite = old_suite.with_cases([*kept_cases, *template_cases])
    if not suite.cases:
        log.warning("reduced suite is empty: nothing to retest")
    return suite, RrtsReport(tuple(kept), tuple(dropped), tuple(templates), tuple(dict.fromkeys(flags)), plan)


def build_rrts(old_suite: TestSuite, plan: RrtsPlan, new_wsdl: WsdlDocument) -> TestSuite:
    return build_rrts_report(old_suite, plan, new_wsdl)[0]


def _trim(case: TestCase, binder: _Binder, selection: Mapping[str, Sequence[str]]) -> TestCase:
    """Drop steps for operations the new WSDL lacks, then apply selections."""
    drop = set()
    for idx, s in enumerate(case.steps):
        op = binder.step(s)
        if op is not None and op not in binder.ops:
            drop.add(idx)
        elif op in selection and s.name not in selection[op]:
            drop.add(idx)
    if not drop:
        return case
    return select_step_indices(case, [i for i in range(len(case.steps)) if i not in drop])


# --------------------------------------------------------------------------
# templates

_SOAPENV = "http://schemas.xmlsoap.org/soap/envelope/"
_XSI = "http://www.w3.org/2001/XMLSchema-instance"
_PAYLOAD_INDENT = "   "


class _Skeleton:
    """Request body skeleton derived from an operation's input schema."""

    def __init__(self, wsdl: WsdlDocument):
        self.wsdl = wsdl
        self.index = wsdl.schema_index
        self.qualified = {}
        for s in wsdl.schemas:
            self.qualified.setdefault(s.target_namespace, s.qualified)
        self.prefixes: dict[str, str] = {}

    def prefix(self, ns: str) -> str:
        if ns not in self.prefixes:
            self.prefixes[ns] = "web" if not self.prefixes else f"web{len(self.prefixes)}"
        return self.prefixes[ns]

    def qname(self, ns: str, local: str, qualified: bool) -> str:
        return f"{self.prefix(ns)}:{local}" if qualified and ns else local

    def global_element(self, key: SchemaKey, depth: int, stack: tuple) -> list[str]:
        item = self.index.get(key)
        if item is None or item.node is None:
            raise WsdlError(f"cannot resolve element {{{key[1]}}}{key[2]} for a request template")
        return self.element(item.node, key[1], depth, stack, is_global=True)

    def element(self, node: Node, ns: str, depth: int, stack: tuple, is_global: bool = False) -> list[str]:
        pad = _PAYLOAD_INDENT * depth
        if "ref" in node.attrs:
            rns, rlocal = node.resolve(node.attrs["ref"])
            key = ("element", rns or "", rlocal)
            if key in stack:
                return [f"{pad}<{self.qname(key[1], rlocal, True)}/>"]
            if key not in self.index:
                log.warning("element ref %s is not defined locally; leaving an empty slot", rlocal)
                return [f"{pad}<{self.qname(key[1], rlocal, True)}></{self.qname(key[1], rlocal, True)}>"]
            return self.global_element(key, depth, stack + (key,))
        name = node.attrs.get("name", "")
        form = node.attrs.get("form")
        qualified = is_global or (form == "qualified" if form else self.qualified.get(ns, False))
        tag = self.qname(ns, name, qualified)
        inner = self.content_of_element(node, ns, depth + 1, stack)
        if inner is None:
            return [f"{pad}<{tag}></{tag}>"]
        if not inner:
            return [f"{pad}<{tag}/>"]
        return [f"{pad}<{tag}>", *inner, f"{pad}</{tag}>"]

    def content_of_element(self, node: Node, ns: str, depth: int, stack: tuple) -> list[str] | None:
        """Child lines, or None for a simple (leaf) element."""
        if "type" in node.attrs:
            tns, tlocal = node.resolve(node.attrs["type"])
            tns = tns or ""
            if tns in XSD_NAMESPACES:
                return None
            key = ("type", tns, tlocal)
            if key in stack:
                return []
            item = self.index.get(key)
            if item is None or item.node is None:
                log.warning("type %s is not defined locally; leaving an empty slot", tlocal)
                return None
            return self.type_content(item.node, tns, depth, stack + (key,))
        for c in node.children:
            if c.ns in XSD_NAMESPACES and c.local in ("complexType", "simpleType"):
                return self.type_content(c, ns, depth, stack)
        return None

    def type_content(self, node: Node, ns: str, depth: int, stack: tuple) -> list[str] | None:
        if node.local == "simpleType":
            return None
        lines: list[str] = []
        for c in node.children:
            if c.ns not in XSD_NAMESPACES:
                continue
            if c.local in ("sequence", "all", "choice"):
                lines += self.particles(c, ns, depth, stack)
            elif c.local == "group" and "ref" in c.attrs:
                lines += self.group(c, depth, stack)
            elif c.local == "simpleContent":
                return None
            elif c.local == "complexContent":
                for d in c.children:
                    if d.local in ("extension", "restriction") and d.ns in XSD_NAMESPACES:
                        if d.local == "extension" and "base" in d.attrs:
                            bns, blocal = d.resolve(d.attrs["base"])
                            key = ("type", bns or "", blocal)
                            base = self.index.get(key)
                            if base is not None and base.node is not None and key not in stack:
                                lines += self.type_content(base.node, key[1], depth, stack + (key,)) or []
                        lines += self.type_content(d, ns, depth, stack) or []
        return lines

    def group(self, node: Node, depth: int, stack: tuple) -> list[str]:
        gns, glocal = node.resolve(node.attrs["ref"])
        key = ("group", gns or "", glocal)
        item = self.index.get(key)
        if item is None or item.node is None or key in stack:
            return []
        return self.type_content(item.node, key[1], depth, stack + (key,)) or []

    def particles(self, node: Node, ns: str, depth: int, stack: tuple) -> list[str]:
        lines: list[str] = []
        kids = [c for c in node.children if c.ns in XSD_NAMESPACES]
        if node.local == "choice":
            kids = kids[:1]
        for c in kids:
            if c.local == "element":
                lines += self.element(c, ns, depth, stack)
            elif c.local in ("sequence", "choice", "all"):
                lines += self.particles(c, ns, depth, stack)
            elif c.local == "group" and "ref" in c.attrs:
                lines += self.group(c, depth, stack)
        return lines

    def body(self, op_name: str) -> list[str]:
        op = self.wsdl.operation(op_name)
        msg = self.wsdl.message_map.get(op.input_message or "")
        parts = msg.parts if msg else ()
        lines: list[str] = []
        if parts and all(p.attr == "element" for p in parts):
            for p in parts:
                if p.namespace in XSD_NAMESPACES:
                    lines.append(f"{_PAYLOAD_INDENT * 2}<{p.ref}></{p.ref}>")
                else:
                    lines += self.global_element(p.key, 2, (p.key,))
        elif parts:
            # rpc style: operation wrapper in the target namespace, one child per part
            tns = self.wsdl.target_namespace
            wrap = self.qname(tns, op_name, True)
            lines.append(f"{_PAYLOAD_INDENT * 2}<{wrap}>")
            for p in parts:
                pad = _PAYLOAD_INDENT * 3
                if p.attr == "element":
                    lines += self.global_element(p.key, 3, (p.key,))
                    continue
                inner = None
                if p.namespace not in XSD_NAMESPACES:
                    item = self.index.get(p.key)
                    if item is None or item.node is None:
                        raise WsdlError(f"cannot resolve type {{{p.namespace}}}{p.ref} for a request template")
                    inner = self.type_content(item.node, p.namespace, 4, (p.key,))
                if inner:
                    lines += [f"{pad}<{p.name}>", *inner, f"{pad}</{p.name}>"]
                else:
                    lines.append(f"{pad}<{p.name}></{p.name}>")
            lines.append(f"{_PAYLOAD_INDENT * 2}</{wrap}>")
        return lines


def request_skeleton(op: str, wsdl: WsdlDocument) -> str:
    """SOAP 1.1 envelope for ``op`` with every input slot left empty."""
    sk = _Skeleton(wsdl)
    body = sk.body(op)
    decls = "".join(f' xmlns:{p}="{escape_attr(ns)}"' for ns, p in sk.prefixes.items())
    out = [f'<soapenv:Envelope xmlns:soapenv="{_SOAPENV}"{decls}>', f"{_PAYLOAD_INDENT}<soapenv:Header/>"]
    if body:
        out += [f"{_PAYLOAD_INDENT}<soapenv:Body>", *body, f"{_PAYLOAD_INDENT}</soapenv:Body>"]
    else:
        out.append(f"{_PAYLOAD_INDENT}<soapenv:Body/>")
    out.append("</soapenv:Envelope>")
    return "\n".join(out)


def _binding_for(op: str, wsdl: WsdlDocument, preferred: Iterable[str] = ()) -> tuple[str, str]:
    """(binding name, endpoint location) to address ``op`` through."""
    candidates = [b.name for b in wsdl.bindings if any(o.name == op for o in b.operations)]
    if not candidates:
        candidates = [b.name for b in wsdl.bindings] or [wsdl.port_type.name if wsdl.port_type else ""]
    chosen = next((p for p in preferred if p in candidates), candidates[0])
    location = ""
    for s in wsdl.services:
        for port in s.ports:
            if port.binding == chosen and port.location:
                location = location or port.location
    return chosen, location


def _lines(pad: str, unit: str, rows: list[tuple[int, str]]) -> str:
    out = []
    for k, (depth, text) in enumerate(rows):
        prefix = "" if k == 0 else pad + unit * depth
        out.append(prefix + text)
    return "\n".join(out)


def _soapui_template(name: str, op: str, interface: str, endpoint: str, payload: str, pad: str, unit: str) -> str:
    q = escape_attr
    rows = [
        (0, f'<con:testCase failOnError="true" failTestCaseOnErrors="true" keepSession="false" maxResults="0" name="{q(name)}" searchProperties="true">'),
        (1, "<con:settings/>"),
        (1, f'<con:testStep type="request" name="{q(op)}">'),
        (2, "<con:settings/>"),
        (2, f'<con:config xsi:type="con:RequestStep" xmlns:xsi="{_XSI}">'),
        (3, f"<con:interface>{escape_text(interface)}</con:interface>"),
        (3, f"<con:operation>{escape_text(op)}</con:operation>"),
        (3, f'<con:request name="{q(op)}">'),
        (4, "<con:settings/>"),
        (4, "<con:encoding>UTF-8</con:encoding>"),
        (4, f"<con:endpoint>{escape_text(endpoint)}</con:endpoint>" if endpoint else "<con:endpoint/>"),
        (4, f"<con:request><![CDATA[{payload}]]></con:request>"),
        (4, "<con:credentials>"),
        (5, "<con:authType>No Authorization</con:authType>"),
        (4, "</con:credentials>"),
        (4, '<con:jmsConfig JMSDeliveryMode="PERSISTENT"/>'),
        (4, "<con:jmsPropertyConfig/>"),
        (4, '<con:wsaConfig mustUnderstand="NONE" version="200508"/>'),
        (4, '<con:wsrmConfig version="1.2"/>'),
        (3, "</con:request>"),
        (2, "</con:config>"),
        (1, "</con:testStep>"),
        (1, "<con:properties>"),
        (2, "<con:property>"),
        (3, "<con:name>template</con:name>"),
        (3, "<con:value>true</con:value>"),
        (2, "</con:property>"),
        (1, "</con:properties>"),
        (0, "</con:testCase>"),
    ]
    return _lines(pad, unit, rows)


def _jmeter_template(name: str, op: str, endpoint: str, action: str, payload: str, pad: str, unit: str) -> str:
    q = escape_attr
    rows = [
        (0, f'<ThreadGroup guiclass="ThreadGroupGui" testclass="ThreadGroup" testname="{q(name)}" enabled="true">'),
        (1, '<stringProp name="TestPlan.comments">template</stringProp>'),
        (1, '<stringProp name="ThreadGroup.on_sample_error">continue</stringProp>'),
        (1, '<elementProp name="ThreadGroup.main_controller" elementType="LoopController" guiclass="LoopControlPanel" testclass="LoopController" testname="Loop Controller" enabled="true">'),
        (2, '<boolProp name="LoopController.continue_forever">false</boolProp>'),
        (2, '<stringProp name="LoopController.loops">1</stringProp>'),
        (1, "</elementProp>"),
        (1, '<stringProp name="ThreadGroup.num_threads">1</stringProp>'),
        (1, '<stringProp name="ThreadGroup.ramp_time">1</stringProp>'),
        (1, '<boolProp name="ThreadGroup.scheduler">false</boolProp>'),
        (1, '<stringProp name="ThreadGroup.duration"></stringProp>'),
        (1, '<stringProp name="ThreadGroup.delay"></stringProp>'),
        (0, "</ThreadGroup>"),
        (0, "<hashTree>"),
        (1, f'<SoapSampler guiclass="SoapSamplerGui" testclass="SoapSampler" testname="{q(op)}" enabled="true">'),
        (2, '<elementProp name="HTTPsampler.Arguments" elementType="Arguments">'),
        (3, '<collectionProp name="Arguments.arguments"/>'),
        (2, "</elementProp>"),
        (2, '<stringProp name="TestPlan.comments"></stringProp>'),
        (2, f'<stringProp name="SoapSampler.URL_DATA">{escape_text(endpoint)}</stringProp>'),
        (2, f'<stringProp name="HTTPSamper.xml_data">{escape_attr(payload)}</stringProp>'),
        (2, '<stringProp name="SoapSampler.xml_data_file"></stringProp>'),
        (2, f'<stringProp name="SoapSampler.SOAP_ACTION">{escape_text(action)}</stringProp>'),
        (2, '<stringProp name="SoapSampler.SEND_SOAP_ACTION">true</stringProp>'),
        (2, '<boolProp name="HTTPSampler.use_keepalive">false</boolProp>'),
        (1, "</SoapSampler>"),
        (1, "<hashTree/>"),
        (0, "</hashTree>"),
    ]
    return _lines(pad, unit, rows)


def _soap_action(op: str, wsdl: WsdlDocument, binding: str) -> str:
    for b in wsdl.bindings:
        if b.name != binding:
            continue
        for bop in b.operations:
            if bop.name == op:
                node = parse_xml(bop.fragment).root
                for n in node.iter():
                    if n.local == "operation" and n is not node and "soapAction" in n.attrs:
                        return n.attrs["soapAction"]
    return ""


def _suite_interfaces(suite: TestSuite | None) -> list[str]:
    if suite is None or suite.dialect is not Dialect.SOAPUI:
        return []
    return re.findall(r"<con:interface>([^<]*)</con:interface>", "".join(c.raw for c in suite.cases))


def make_template(
    op: str,
    wsdl: WsdlDocument,
    dialect: Dialect | str,
    suite: TestSuite | None = None,
    indent_unit: str = "  ",
) -> TestCase:
    """Empty template case ``<op>_TestCase`` with one request step for ``op``."""
    dialect = Dialect(dialect)
    wsdl.operation(op)
    payload = request_skeleton(op, wsdl)
    binding, endpoint = _binding_for(op, wsdl, _suite_interfaces(suite))
    separator = suite.case_separator if suite is not None else "\n"
    pad = separator.rsplit("\n", 1)[-1]
    name = f"{op}_TestCase"
    if dialect is Dialect.SOAPUI:
        text = _soapui_template(name, op, binding, endpoint, payload, pad, indent_unit)
    else:
        action = _soap_action(op, wsdl, binding)
        text = _jmeter_template(name, op, endpoint, action, payload, pad, indent_unit)
    case = parse_case_fragment(text, dialect)
    if not case.is_template:  # pragma: no cover - template markup is ours
        raise AssertionError("rendered template lost its marker")
    return replace(case, separator=separator, bound_operation=op)


# --------------------------------------------------------------------------
# PRTWS


@dataclass(frozen=True)
class PrtwsReport:
    operation: str
    checks: tuple[ScenarioCheck, ...]
    cases: tuple[dict, ...]

    @property
    def steps_before(self) -> int:
        return sum(c["steps_before"] for c in self.cases)

    @property
    def steps_after(self) -> int:
        return sum(c["steps_after"] for c in self.cases)

    @property
    def reduction_percent(self) -> float:
        return 100.0 * (self.steps_before - self.steps_after) / self.steps_before if self.steps_before else 0.0

    def to_json(self) -> dict:
        return {
            "operation": self.operation,
            "scenario_checks": [c.to_json() for c in self.checks],
            "cases": list(self.cases),
            "steps_before": self.steps_before,
            "steps_after": self.steps_after,
            "step_reduction_percent": round(self.reduction_percent, 4),
        }

    def dumps(self, pretty: bool = False) -> str:
        return json.dumps(self.to_json(), indent=2 if pretty else None)


def prtws_reduce_report(
    suite: TestSuite,
    scenario: PrimaryParameterScenario,
    selection: Mapping[str, Sequence[str]],
    wsdl: WsdlDocument | None = None,
) -> tuple[TestSuite, PrtwsReport]:
    checks = check_scenario(suite, scenario, wsdl)
    for c in checks:
        if not c.conforms:
            log.warning("test case %s does not fit the primary-parameter scenario: %s", c.case, "; ".join(c.problems))
    targets = {c.name for c in scenario_cases(suite, scenario, wsdl)}
    for name in selection:
        suite.case(name)  # unknown name -> SelectionError
        if name not in targets:
            raise SelectionError(f"test case {name!r} does not exercise operation {scenario.operation!r}")
    out_cases, rows = [], []
    for case in suite.cases:
        if case.name not in targets:
            out_cases.append(case)
            continue
        if case.name in selection:
            reduced = select_steps(case, selection[case.name])
            out_cases.append(reduced)
            rows.append({"case": case.name, "kept": True, "steps_before": len(case.steps), "steps_after": len(reduced.steps)})
        else:
            rows.append({"case": case.name, "kept": False, "steps_before": len(case.steps), "steps_after": 0})
    return suite.with_cases(out_cases), PrtwsReport(scenario.operation, tuple(checks), tuple(rows))


def prtws_reduce(
    suite: TestSuite,
    scenario: PrimaryParameterScenario,
    selection: Mapping[str, Sequence[str]],
    wsdl: WsdlDocument | None = None,
) -> TestSuite:
    return prtws_reduce_report(suite, scenario, selection, wsdl)[0]
