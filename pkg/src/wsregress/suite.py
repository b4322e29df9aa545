"""SoapUI and JMeter test suites as spliceable text.

A suite file is cut into verbatim chunks: the text before the first child of
the case container (``head``), one chunk per child, and the text after the
last child (``tail``). Children that are test cases are modelled; the rest
stay as opaque :class:`Chunk` text. Test cases are cut the same way around
their steps. Serializing concatenates the chunks again, so anything not
removed comes out byte-for-byte as it went in.

Supported layouts (pinned to SoapUI 4.5 project files and JMeter 2.10 plans):

* SoapUI: ``con:soapui-project`` (first or named ``con:testSuite``) or a
  standalone ``con:testSuite``; a case is ``con:testCase``, a step is
  ``con:testStep``.
* JMeter: ``jmeterTestPlan/hashTree/hashTree``; a case is a ``ThreadGroup``
  plus its ``hashTree``, a step is a ``SoapSampler`` plus its ``hashTree``.
"""

from __future__ import annotations

import enum
import logging
import re
from dataclasses import dataclass, field, replace
from typing import Iterable, Mapping, Sequence, Union

from .errors import SelectionError, SuiteError, XmlSyntaxError
from .wsdl import WsdlDocument, _unknown
from .xmlspan import Node, XmlDocument, leading_whitespace, parse_xml

log = logging.getLogger(__name__)

SOAPUI_NS = "http://eviware.com/soapui/config"
SOAP_ENV_NAMESPACES = frozenset(
    {"http://schemas.xmlsoap.org/soap/envelope/", "http://www.w3.org/2003/05/soap-envelope"}
)
UNBOUND = "<unbound>"
TEMPLATE_MARK = "template"

_CASE_SUFFIX = re.compile(r"^(?P<op>.+?)_TestCase$")


class Dialect(enum.Enum):
    SOAPUI = "soapui"
    JMETER = "jmeter"


@dataclass(frozen=True)
class Chunk:
    """Opaque text between or around modelled children, kept verbatim."""

    text: str
    tag: str = ""


@dataclass(frozen=True)
class TestStep:
    name: str
    operation: str
    request_payload: str = field(repr=False)
    parameter_values: dict[str, str] = field(default_factory=dict, hash=False, repr=False)
    kind: str = "request"
    raw: str = field(default="", repr=False)
    separator: str = field(default="", repr=False)
    payload_parsed: bool = True

    @property
    def text(self) -> str:
        return self.separator + self.raw


CaseItem = Union[TestStep, Chunk]


@dataclass(frozen=True)
class TestCase:
    name: str
    bound_operation: str | None
    items: tuple[CaseItem, ...] = field(repr=False)
    is_template: bool = False
    open: str = field(default="", repr=False)
    close: str = field(default="", repr=False)
    separator: str = field(default="", repr=False)

    @property
    def steps(self) -> tuple[TestStep, ...]:
        return tuple(i for i in self.items if isinstance(i, TestStep))

    @property
    def step_names(self) -> list[str]:
        return [s.name for s in self.steps]

    @property
    def operations(self) -> list[str]:
        """Distinct step operations, in step order."""
        return list(dict.fromkeys(s.operation for s in self.steps if s.operation))

    @property
    def raw(self) -> str:
        return self.open + "".join(i.text for i in self.items) + self.close

    @property
    def text(self) -> str:
        return self.separator + self.raw


SuiteItem = Union[TestCase, Chunk]


@dataclass(frozen=True)
class TestSuite:
    dialect: Dialect
    name: str
    items: tuple[SuiteItem, ...] = field(repr=False)
    head: str = field(default="", repr=False)
    tail: str = field(default="", repr=False)
    # separator used in front of cases added to a suite (indentation)
    case_separator: str = field(default="\n", repr=False)
    # original text of a self-closing, case-less container
    collapsed: str = field(default="", repr=False)

    @property
    def cases(self) -> tuple[TestCase, ...]:
        return tuple(i for i in self.items if isinstance(i, TestCase))

    @property
    def case_names(self) -> list[str]:
        return [c.name for c in self.cases]

    @property
    def passthrough(self) -> tuple[str, ...]:
        return (self.head, *(i.text for i in self.items if isinstance(i, Chunk)), self.tail)

    def case(self, name: str) -> TestCase:
        for c in self.cases:
            if c.name == name:
                return c
        raise SelectionError(_unknown(name, self.case_names, "test case"))

    def with_cases(self, cases: Iterable[TestCase]) -> "TestSuite":
        """Replace the modelled cases, keeping every passthrough chunk.

        Cases whose name matches an existing one take its slot; new names are
        inserted after the last existing case.
        """
        cases = list(cases)
        by_name = {c.name: c for c in cases}
        items: list[SuiteItem] = []
        insert_at = None
        for item in self.items:
            if isinstance(item, TestCase):
                if item.name in by_name:
                    items.append(by_name.pop(item.name))
                insert_at = len(items)
            else:
                items.append(item)
        if insert_at is None:
            insert_at = _default_insert(self.dialect, items)
        fresh = [c for c in cases if c.name in by_name]
        items[insert_at:insert_at] = fresh
        _check_unique(c.name for c in items if isinstance(c, TestCase))
        return replace(self, items=tuple(items))


def _default_insert(dialect: Dialect, items: list[SuiteItem]) -> int:
    if dialect is Dialect.JMETER:
        return 0
    # SoapUI: testCase elements follow settings/runType/description
    pos = 0
    for k, item in enumerate(items):
        if isinstance(item, Chunk) and item.tag in ("settings", "runType", "description"):
            pos = k + 1
    return pos


def _check_unique(names: Iterable[str]) -> None:
    seen = set()
    for n in names:
        if n in seen:
            raise SuiteError(f"duplicate test case name {n!r}")
        seen.add(n)


# --------------------------------------------------------------------------
# chunking


def _chunks(xml: XmlDocument, container: Node, group_hash_tree: bool):
    """Yield (start, end, [nodes]) covering ``container``'s children.

    Each range starts right after the previous child and includes its own
    leading whitespace. With ``group_hash_tree`` an element and the
    ``hashTree`` sibling after it form one group (JMeter layout).
    """
    kids = container.children
    groups: list[list[Node]] = []
    k = 0
    while k < len(kids):
        g = [kids[k]]
        if group_hash_tree and kids[k].tag != "hashTree" and k + 1 < len(kids) and kids[k + 1].tag == "hashTree":
            g.append(kids[k + 1])
            k += 1
        groups.append(g)
        k += 1
    prev = None
    for g in groups:
        first = g[0]
        start = prev if prev is not None else first.start - len(leading_whitespace(xml.source, first.start))
        yield start, g[-1].end, g
        prev = g[-1].end


def _separator_split(text: str) -> tuple[str, str]:
    stripped = text.lstrip(" \t\r\n")
    return text[: len(text) - len(stripped)], stripped


def _container_bounds(xml: XmlDocument, container: Node) -> tuple[int, int]:
    """Byte range of the container's content (between its tags)."""
    if container.self_closing:
        return container.end, container.end
    if container.children:
        first = container.children[0]
        start = first.start - len(leading_whitespace(xml.source, first.start))
        return start, container.children[-1].end
    return container.open_end, container.open_end


# --------------------------------------------------------------------------
# payloads


def parse_payload(payload: str) -> tuple[str, dict[str, str], bool]:
    """(wrapper element local name, leaf parameter values, parsed ok)."""
    if not payload.strip():
        return "", {}, False
    try:
        root = parse_xml(payload.strip()).root
    except XmlSyntaxError:
        return "", {}, False
    body = None
    if root.local == "Envelope":
        body = next((c for c in root.children if c.local == "Body"), None)
    holder = body if body is not None else root
    wrapper = holder.children[0] if body is not None and holder.children else (root if body is None else None)
    if wrapper is None:
        return "", {}, True
    values: dict[str, str] = {}
    paths: dict[str, str] = {}

    def walk(node: Node, path: str):
        for c in node.children:
            p = f"{path}/{c.local}" if path else c.local
            if c.children:
                walk(c, p)
                continue
            v = c.text.strip()
            if c.local in paths:
                # duplicate leaf names: both fall back to their paths
                other = paths[c.local]
                if other and c.local in values:
                    values[other] = values.pop(c.local)
                values[p] = v
            else:
                paths[c.local] = p
                values[c.local] = v

    walk(wrapper, "")
    return wrapper.local, values, True


# --------------------------------------------------------------------------
# SoapUI


def _con_text(node: Node | None, *path: str) -> str:
    for p in path:
        if node is None:
            return ""
        node = node.find(SOAPUI_NS, p)
    return node.text if node is not None else ""


def _soapui_step(xml: XmlDocument, node: Node, sep: str) -> TestStep:
    kind = node.attrs.get("type", "")
    config = node.find(SOAPUI_NS, "config")
    operation = payload = ""
    if kind == "request" and config is not None:
        operation = _con_text(config, "operation").strip()
        payload = _con_text(config, "request", "request")
        if not operation:
            raise SuiteError(f"line {node.line}: request step {node.attrs.get('name')!r} has no operation")
    _, values, ok = parse_payload(payload) if payload else ("", {}, False)
    return TestStep(node.attrs.get("name", ""), operation, payload, values, kind, xml.raw(node), sep, ok)


def _soapui_is_template(node: Node) -> bool:
    props = node.find(SOAPUI_NS, "properties")
    for p in props.find_all(SOAPUI_NS, "property") if props is not None else ():
        if _con_text(p, "name").strip() == TEMPLATE_MARK and _con_text(p, "value").strip().lower() == "true":
            return True
    return False


def _soapui_case(xml: XmlDocument, node: Node, sep: str) -> TestCase:
    name = node.attrs.get("name", "")
    items: list[CaseItem] = []
    for start, end, (child,) in _chunks(xml, node, False):
        text = xml.slice(start, end)
        if child.is_(SOAPUI_NS, "testStep"):
            s, _ = _separator_split(text)
            items.append(_soapui_step(xml, child, s))
        else:
            items.append(Chunk(text, child.local))
    lo, hi = _container_bounds(xml, node)
    return _finish_case(xml, node.start, node.end, lo, hi, name, items, _soapui_is_template(node), sep)


def _finish_case(xml, start, end, lo, hi, name, items, is_template, sep) -> TestCase:
    open_ = xml.slice(start, lo)
    close = xml.slice(hi, end)
    steps = [i for i in items if isinstance(i, TestStep)]
    bound = next((s.operation for s in steps if s.operation), None)
    if bound is None:
        m = _CASE_SUFFIX.match(name)
        bound = m.group("op") if m else None
    return TestCase(name, bound, tuple(items), is_template, open_, close, sep)


def _parse_soapui(xml: XmlDocument, suite_name: str | None) -> TestSuite:
    root = xml.root
    if root.is_(SOAPUI_NS, "testSuite"):
        suite = root
    elif root.is_(SOAPUI_NS, "soapui-project"):
        suites = root.find_all(SOAPUI_NS, "testSuite")
        if suite_name is not None:
            suites = [s for s in suites if s.attrs.get("name") == suite_name]
            if not suites:
                names = [s.attrs.get("name", "") for s in root.find_all(SOAPUI_NS, "testSuite")]
                raise SuiteError(_unknown(suite_name, names, "test suite"))
        if not suites:
            raise SuiteError("SoapUI project has no testSuite")
        suite = suites[0]
    else:
        raise SuiteError(f"root element <{root.tag}> is not a SoapUI project or testSuite")
    items: list[SuiteItem] = []
    for start, end, (child,) in _chunks(xml, suite, False):
        text = xml.slice(start, end)
        if child.is_(SOAPUI_NS, "testCase"):
            s, _ = _separator_split(text)
            items.append(_soapui_case(xml, child, s))
        else:
            items.append(Chunk(text, child.local))
    return _finish_suite(xml, Dialect.SOAPUI, suite.attrs.get("name", ""), suite, items)


def _finish_suite(xml, dialect, name, container, items) -> TestSuite:
    lo, hi = _container_bounds(xml, container)
    head, tail = xml.slice(0, lo), xml.slice(hi, len(xml.source))
    collapsed = ""
    if container.self_closing:
        # <x/> is expanded to <x>...</x> only once cases are added
        collapsed = xml.slice(0, len(xml.source))
        opening = xml.open_tag(container)
        pad = leading_whitespace(xml.source, container.start).rsplit("\n", 1)[-1]
        head = xml.slice(0, container.start) + opening[:-2].rstrip() + ">"
        tail = "\n" + pad + f"</{container.tag}>" + xml.slice(container.end, len(xml.source))
    cases = [i for i in items if isinstance(i, TestCase)]
    _check_unique(c.name for c in cases)
    if cases:
        sep = cases[0].separator
    else:
        pad = leading_whitespace(xml.source, container.start).rsplit("\n", 1)[-1]
        sep = "\n" + pad + "  "
    return TestSuite(dialect, name, tuple(items), head, tail, sep, collapsed)


# --------------------------------------------------------------------------
# JMeter


def _jmeter_prop(node: Node, name: str) -> Node | None:
    for c in node.children:
        if c.attrs.get("name") == name:
            return c
    return None


def _jmeter_step(xml: XmlDocument, group: list[Node], start: int, end: int) -> TestStep:
    sampler = group[0]
    text = xml.slice(start, end)
    sep, raw = _separator_split(text)
    prop = _jmeter_prop(sampler, "HTTPSamper.xml_data")
    payload = prop.text if prop is not None else ""
    wrapper, values, ok = parse_payload(payload)
    return TestStep(sampler.attrs.get("testname", ""), wrapper, payload, values, "SoapSampler", raw, sep, ok)


def _jmeter_case(xml: XmlDocument, group: list[Node], start: int, end: int) -> TestCase:
    tg = group[0]
    name = tg.attrs.get("testname", "")
    comment = _jmeter_prop(tg, "TestPlan.comments")
    is_template = comment is not None and comment.text.strip() == TEMPLATE_MARK
    text = xml.slice(start, end)
    sep, _ = _separator_split(text)
    first = tg.start
    items: list[CaseItem] = []
    if len(group) == 1:
        return _finish_case(xml, first, end, end, end, name, items, is_template, sep)
    tree = group[1]
    for s, e, g in _chunks(xml, tree, True):
        if g[0].tag == "SoapSampler":
            items.append(_jmeter_step(xml, g, s, e))
        else:
            items.append(Chunk(xml.slice(s, e), g[0].tag))
    lo, hi = _container_bounds(xml, tree)
    return _finish_case(xml, first, end, lo, hi, name, items, is_template, sep)


def _parse_jmeter(xml: XmlDocument) -> TestSuite:
    root = xml.root
    if root.tag != "jmeterTestPlan":
        raise SuiteError(f"root element <{root.tag}> is not a JMeter jmeterTestPlan")
    outer = root.find(None, "hashTree")
    if outer is None:
        raise SuiteError("jmeterTestPlan has no hashTree")
    plan = outer.find(None, "TestPlan")
    kids = outer.children
    container = None
    for k, c in enumerate(kids):
        if c is plan and k + 1 < len(kids) and kids[k + 1].tag == "hashTree":
            container = kids[k + 1]
    if plan is None or container is None:
        raise SuiteError("jmeterTestPlan has no TestPlan with a hashTree")
    items: list[SuiteItem] = []
    for s, e, g in _chunks(xml, container, True):
        if g[0].tag == "ThreadGroup":
            items.append(_jmeter_case(xml, g, s, e))
        else:
            items.append(Chunk(xml.slice(s, e), g[0].tag))
    return _finish_suite(xml, Dialect.JMETER, plan.attrs.get("testname", ""), container, items)


# --------------------------------------------------------------------------
# public API


def sniff_dialect(text: str | bytes) -> Dialect:
    root = parse_xml(text).root
    if root.tag == "jmeterTestPlan":
        return Dialect.JMETER
    if root.ns == SOAPUI_NS:
        return Dialect.SOAPUI
    raise SuiteError(f"cannot tell the test-suite dialect from root element <{root.tag}>")


def parse_suite(text: str | bytes, dialect: Dialect | str | None = None, suite_name: str | None = None) -> TestSuite:
    xml = parse_xml(text)
    dialect = sniff_dialect(text) if dialect is None else Dialect(dialect)
    if dialect is Dialect.SOAPUI:
        if xml.root.tag == "jmeterTestPlan":
            raise SuiteError("expected a SoapUI file but found a JMeter plan")
        return _parse_soapui(xml, suite_name)
    if xml.root.ns == SOAPUI_NS:
        raise SuiteError("expected a JMeter plan but found a SoapUI file")
    return _parse_jmeter(xml)


def serialize_suite(suite: TestSuite, dialect: Dialect | str | None = None) -> str:
    if dialect is not None and Dialect(dialect) is not suite.dialect:
        raise SuiteError(f"suite is {suite.dialect.value}, cannot serialize as {Dialect(dialect).value}")
    if suite.collapsed and not suite.items:
        return suite.collapsed
    return suite.head + "".join(i.text for i in suite.items) + suite.tail


def parse_case_fragment(text: str, dialect: Dialect) -> TestCase:
    """Parse one case's XML (as rendered for a template) into a TestCase."""
    if dialect is Dialect.SOAPUI:
        wrapped = f'<con:testSuite xmlns:con="{SOAPUI_NS}" name="_">\n{text}\n</con:testSuite>'
    else:
        wrapped = (
            '<jmeterTestPlan version="1.2"><hashTree><TestPlan testname="_"/><hashTree>\n'
            f"{text}\n</hashTree></hashTree></jmeterTestPlan>"
        )
    suite = parse_suite(wrapped, dialect)
    (case,) = suite.cases
    return case


# --------------------------------------------------------------------------
# operation binding


def step_operation(step: TestStep, wsdl: WsdlDocument | None, element_map: Mapping[str, str] | None = None) -> str | None:
    """WSDL operation a step targets, or None when it targets none."""
    if not step.operation:
        return None
    if wsdl is None:
        return step.operation
    if step.operation in wsdl.operation_names:
        return step.operation
    element_map = element_map if element_map is not None else wsdl.element_operation_map()
    return element_map.get(step.operation)


def case_operations(case: TestCase, wsdl: WsdlDocument | None) -> list[str]:
    """Operations a case binds to: its steps' operations, else its name."""
    emap = wsdl.element_operation_map() if wsdl is not None else None
    ops = []
    for s in case.steps:
        op = step_operation(s, wsdl, emap)
        if op and op not in ops:
            ops.append(op)
    if ops:
        return ops
    m = _CASE_SUFFIX.match(case.name)
    if m and (wsdl is None or m.group("op") in wsdl.operation_names):
        return [m.group("op")]
    return []


def map_operation_tests(suite: TestSuite, wsdl: WsdlDocument | None) -> dict[str, list[str]]:
    out: dict[str, list[str]] = {}
    for case in suite.cases:
        ops = case_operations(case, wsdl)
        if len(ops) > 1:
            log.info("test case %r targets several operations: %s", case.name, ", ".join(ops))
        for op in ops or [UNBOUND]:
            out.setdefault(op, []).append(case.name)
    return out


# --------------------------------------------------------------------------
# step selection


def select_steps(case: TestCase, keep: Iterable[str]) -> TestCase:
    keep = list(dict.fromkeys(keep))
    names = case.step_names
    for k in keep:
        if k not in names:
            raise SelectionError(f"test case {case.name!r}: " + _unknown(k, names, "test step"))
    wanted = set(keep)
    return _filter_steps(case, lambda idx, step: step.name in wanted)


def select_step_indices(case: TestCase, keep: Iterable[int]) -> TestCase:
    """Same as :func:`select_steps` but by 0-based step position."""
    keep = set(keep)
    n = len(case.steps)
    bad = sorted(i for i in keep if not 0 <= i < n)
    if bad:
        raise SelectionError(f"test case {case.name!r} has {n} steps; bad index {bad[0]}")
    return _filter_steps(case, lambda idx, step: idx in keep)


def _filter_steps(case: TestCase, pred) -> TestCase:
    items, idx, dropped = [], 0, False
    for item in case.items:
        if isinstance(item, TestStep):
            if pred(idx, item):
                items.append(item)
            else:
                dropped = True
            idx += 1
        else:
            items.append(item)
    if not dropped:
        return case
    return replace(case, items=tuple(items))


# --------------------------------------------------------------------------
# primary-parameter scenarios


@dataclass(frozen=True)
class PrimaryParameterScenario:
    operation: str
    primary_params: tuple[str, ...]
    fixed_primary_values: dict[str, str] = field(default_factory=dict, hash=False)
    non_primary_params: frozenset[str] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "primary_params", tuple(dict.fromkeys(self.primary_params)))
        object.__setattr__(self, "non_primary_params", frozenset(self.non_primary_params))
        if not self.primary_params:
            raise ValueError("a scenario needs at least one primary parameter")
        overlap = set(self.primary_params) & self.non_primary_params
        if overlap:
            raise ValueError(f"parameters both primary and non-primary: {', '.join(sorted(overlap))}")
        extra = set(self.fixed_primary_values) - set(self.primary_params)
        if extra:
            raise ValueError(f"fixed values given for non-primary parameters: {', '.join(sorted(extra))}")


@dataclass(frozen=True)
class ScenarioCheck:
    case: str
    conforms: bool
    primary_values: dict[str, str] = field(default_factory=dict, hash=False)
    problems: tuple[str, ...] = ()
    unchecked_steps: tuple[str, ...] = ()

    def to_json(self) -> dict:
        return {
            "case": self.case,
            "conforms": self.conforms,
            "primary_values": self.primary_values,
            "problems": list(self.problems),
            "unchecked_steps": list(self.unchecked_steps),
        }


def _param(values: Mapping[str, str], name: str) -> str | None:
    if name in values:
        return values[name]
    for k, v in values.items():
        if k.endswith("/" + name):
            return v
    return None


def scenario_cases(suite: TestSuite, scenario: PrimaryParameterScenario, wsdl: WsdlDocument | None = None) -> list[TestCase]:
    return [c for c in suite.cases if scenario.operation in case_operations(c, wsdl)]


def check_scenario(
    suite: TestSuite, scenario: PrimaryParameterScenario, wsdl: WsdlDocument | None = None
) -> list[ScenarioCheck]:
    """Per-case check that every step shares the same primary values."""
    emap = wsdl.element_operation_map() if wsdl is not None else None
    out = []
    for case in scenario_cases(suite, scenario, wsdl):
        problems, unchecked = [], []
        seen: dict[str, str] = {}
        for step in case.steps:
            if step_operation(step, wsdl, emap) != scenario.operation:
                continue
            if not step.payload_parsed:
                unchecked.append(step.name)
                continue
            for p in scenario.primary_params:
                v = _param(step.parameter_values, p)
                if v is None:
                    problems.append(f"step {step.name!r} has no value for primary parameter {p!r}")
                    continue
                want = scenario.fixed_primary_values.get(p)
                if want is not None and v != want:
                    problems.append(f"step {step.name!r}: {p}={v!r}, scenario fixes {want!r}")
                if p in seen and seen[p] != v:
                    problems.append(f"step {step.name!r}: {p}={v!r} differs from {seen[p]!r} in an earlier step")
                seen.setdefault(p, v)
        out.append(ScenarioCheck(case.name, not problems, dict(seen), tuple(problems), tuple(unchecked)))
    return out


def selection_from_names(case: TestCase, names: Sequence[str]) -> list[str]:
    """Validate names against ``case`` and return them in case order."""
    select_steps(case, names)
    wanted = set(names)
    return [n for n in case.step_names if n in wanted]
