"""Synthetic WSDLs and suites for randomized tests."""

from __future__ import annotations

from build_fixtures import jaxws_wsdl, soapui_case, soapui_standalone_suite, soapui_step

TNS = "http://synth/"
EP = "http://localhost/synth"
IFACE = "SynthBinding"


def op_names(n: int) -> list[str]:
    return [f"op{i}" for i in range(n)]


def wsdl_text(ops) -> str:
    spec = [(op, [("arg0", "xs:string")], [("return", "xs:string")]) for op in ops]
    return jaxws_wsdl(TNS, "SynthService", "Synth", IFACE, spec)


def suite_text(cases) -> str:
    """cases: list of (name, [op per step])."""
    xml = [
        soapui_case(name, [soapui_step(IFACE, EP, TNS, op, f"{name} s{k}", [("arg0", k)]) for k, op in enumerate(ops)])
        for name, ops in cases
    ]
    return soapui_standalone_suite("Synth TestSuite", xml)
