"""Regenerate the committed WSDL and test-suite fixtures.

Run from the repository root:  python tests/fixtures/build_fixtures.py

The outputs are committed; this script only documents how they were made and
lets them be rebuilt consistently after an edit.
"""

from __future__ import annotations

from pathlib import Path
from xml.sax.saxutils import escape

HERE = Path(__file__).parent
WSDL_DIR = HERE / "wsdl"
SUITE_DIR = HERE / "suites"

SOAP_HTTP = "http://schemas.xmlsoap.org/soap/http"


# ---------------------------------------------------------------- WSDL (JAX-WS style, unprefixed)

def jaxws_wsdl(tns, service, port_type, binding, ops, *, conventional=True, policy=False, extra_types=""):
    """ops: list of (name, [(field, type)], [(field, type)])."""
    xsd = []
    for name, ins, outs in ops:
        t_in = f"{name}Type" if conventional else name
        t_out = f"{name}ResponseType" if conventional else f"{name}Response"
        xsd.append(f'      <xs:element name="{name}" type="tns:{t_in}"/>')
        xsd.append(f'      <xs:element name="{name}Response" type="tns:{t_out}"/>')
    for name, ins, outs in ops:
        t_in = f"{name}Type" if conventional else name
        t_out = f"{name}ResponseType" if conventional else f"{name}Response"
        for tname, fields in ((t_in, ins), (t_out, outs)):
            xsd.append(f'      <xs:complexType name="{tname}">')
            xsd.append("        <xs:sequence>")
            for f, t in fields:
                occurs = ' maxOccurs="unbounded"' if t.endswith("*") else ""
                xsd.append(f'          <xs:element name="{f}" type="{t.rstrip("*")}" minOccurs="0"{occurs}/>')
            xsd.append("        </xs:sequence>")
            xsd.append("      </xs:complexType>")
    out = ['<?xml version="1.0" encoding="UTF-8"?>']
    ns_extra = ' xmlns:wsp="http://www.w3.org/ns/ws-policy"' if policy else ""
    out.append(
        f'<definitions xmlns:soap="http://schemas.xmlsoap.org/wsdl/soap/" xmlns:tns="{tns}" '
        f'xmlns:xs="http://www.w3.org/2001/XMLSchema"{ns_extra} xmlns="http://schemas.xmlsoap.org/wsdl/" '
        f'targetNamespace="{tns}" name="{service}">'
    )
    if policy:
        out += [
            f'  <wsp:Policy Name="{binding}Policy">',
            "    <wsp:ExactlyOne>",
            "      <wsp:All/>",
            "    </wsp:ExactlyOne>",
            "  </wsp:Policy>",
        ]
    out += ["  <types>", f'    <xs:schema version="1.0" targetNamespace="{tns}">']
    out += xsd
    if extra_types:
        out.append(extra_types.rstrip("\n"))
    out += ["    </xs:schema>", "  </types>"]
    for name, _, _ in ops:
        for m in (name, f"{name}Response"):
            out += [f'  <message name="{m}">', f'    <part name="parameters" element="tns:{m}"/>', "  </message>"]
    out.append(f'  <portType name="{port_type}">')
    for name, _, _ in ops:
        out += [
            f'    <operation name="{name}">',
            f'      <input message="tns:{name}"/>',
            f'      <output message="tns:{name}Response"/>',
            "    </operation>",
        ]
    out.append("  </portType>")
    out.append(f'  <binding name="{binding}" type="tns:{port_type}">')
    if policy:
        out.append(f'    <wsp:PolicyReference URI="#{binding}Policy"/>')
    out.append(f'    <soap:binding transport="{SOAP_HTTP}" style="document"/>')
    for name, _, _ in ops:
        out += [
            f'    <operation name="{name}">',
            '      <soap:operation soapAction=""/>',
            "      <input>",
            '        <soap:body use="literal"/>',
            "      </input>",
            "      <output>",
            '        <soap:body use="literal"/>',
            "      </output>",
            "    </operation>",
        ]
    out.append("  </binding>")
    host = service.replace("Service", "")
    out += [
        f'  <service name="{service}">',
        f'    <port name="{port_type}Port" binding="tns:{binding}">',
        f'      <soap:address location="http://localhost:8080/{host}/{service}"/>',
        "    </port>",
        "  </service>",
        "</definitions>",
    ]
    return "\n".join(out) + "\n"


S = "xs:string"
I = "xs:int"

SAAS_INDEX_STR = ("Index", [("arg0", S)], [("return", S)])
SAAS_INDEX_INT = ("Index", [("arg0", I)], [("return", I)])
SAAS_SEARCHING = ("Searching", [("arg0", S), ("arg1", S)], [("return", S + "*")])
SAAS_READING = ("readingFile", [("arg0", S)], [("return", S)])
SAAS_EDIT = ("editFile", [("fileName", S), ("edit", "tns:lineEdit")], [("return", "xs:boolean")])
LINE_EDIT = """      <xs:complexType name="lineEdit">
        <xs:sequence>
          <xs:element name="lineToEdit" type="xs:int"/>
          <xs:element name="replacementText" type="xs:string" minOccurs="0"/>
        </xs:sequence>
      </xs:complexType>
"""


def saas(ops, policy=False, extra=""):
    return jaxws_wsdl("http://saas/", "dirService", "dir", "dirPortBinding", ops, policy=policy, extra_types=extra)


# ---------------------------------------------------------------- Eucalyptus-style (prefixed)

EUCA_V1_OPS = [
    "AttachVolume", "DetachVolume", "BundleInstance", "CancelBundleTask", "AssignAddress",
    "UnassignAddress", "ConfigureNetwork", "StopNetwork", "StartNetwork", "DescribeNetworks",
    "DescribePublicAddresses", "DescribeInstances", "RunInstances", "RebootInstances",
    "TerminateInstances", "DescribeResources", "ModifyNode", "MigrateInstances",
    "StartInstance", "StopInstance", "CreateImage", "DescribeServices", "EnableService",
    "DisableService",
]
EUCA_V2_OPS = EUCA_V1_OPS[:3] + ["BundleRestartInstance"] + EUCA_V1_OPS[3:16] + ["DescribeSensors"] + EUCA_V1_OPS[16:]

EUCA_FIELDS = {
    "DescribeSensors": ([("historySize", I), ("collectionIntervalTimeMs", I), ("instanceIds", S + "*")],
                        [("sensorsResources", "tns:sensorsResourceType*")]),
    "DescribeInstances": ([("instanceIds", S + "*")], [("instances", "tns:ccInstanceType*")]),
    "RunInstances": ([("imageId", S), ("minCount", I), ("maxCount", I)], [("instances", "tns:ccInstanceType*")]),
    "DescribeServices": ([("serviceIds", "tns:serviceInfoType*")], [("serviceStatuses", "tns:serviceStatusType*")]),
    "EnableService": ([("serviceIds", "tns:serviceInfoType*")], [("serviceStatuses", "tns:serviceStatusType*")]),
    "DisableService": ([("serviceIds", "tns:serviceInfoType*")], [("serviceStatuses", "tns:serviceStatusType*")]),
}

EUCA_SHARED = """      <xs:complexType name="eucalyptusMessage">
        <xs:sequence>
          <xs:element name="correlationId" type="xs:string"/>
          <xs:element name="userId" type="xs:string"/>
          <xs:element name="statusMessage" type="xs:string" minOccurs="0"/>
          <xs:element name="return" type="xs:boolean"/>
        </xs:sequence>
      </xs:complexType>
      <xs:complexType name="ccInstanceType">
        <xs:sequence>
          <xs:element name="instanceId" type="xs:string"/>
          <xs:element name="stateName" type="xs:string"/>
          <xs:element name="netParams" type="tns:netConfigType"/>
        </xs:sequence>
      </xs:complexType>
      <xs:complexType name="netConfigType">
        <xs:sequence>
          <xs:element name="privateIp" type="xs:string"/>
          <xs:element name="publicIp" type="xs:string"/>
          <xs:element name="vlan" type="xs:int"/>
        </xs:sequence>
      </xs:complexType>
      <xs:complexType name="serviceInfoType">
        <xs:sequence>
          <xs:element name="type" type="xs:string"/>
          <xs:element name="name" type="xs:string"/>
          <xs:element name="uris" type="xs:string" maxOccurs="unbounded"/>
        </xs:sequence>
      </xs:complexType>
      <xs:complexType name="serviceStatusType">
        <xs:sequence>
          <xs:element name="localState" type="xs:string"/>
          <xs:element name="serviceId" type="tns:serviceInfoType"/>
        </xs:sequence>
      </xs:complexType>
"""
EUCA_SENSORS = """      <xs:complexType name="sensorsResourceType">
        <xs:sequence>
          <xs:element name="resourceName" type="xs:string"/>
          <xs:element name="resourceType" type="xs:string"/>
          <xs:element name="metrics" type="tns:metricsResourceType" maxOccurs="unbounded"/>
        </xs:sequence>
      </xs:complexType>
      <xs:complexType name="metricsResourceType">
        <xs:sequence>
          <xs:element name="metricName" type="xs:string"/>
          <xs:element name="value" type="xs:double" maxOccurs="unbounded"/>
        </xs:sequence>
      </xs:complexType>
"""


def euca_wsdl(ops):
    tns = "http://eucalyptus.ucsb.edu/"
    out = ['<?xml version="1.0" encoding="UTF-8"?>']
    out.append(
        '<wsdl:definitions xmlns:wsdl="http://schemas.xmlsoap.org/wsdl/" '
        'xmlns:soap="http://schemas.xmlsoap.org/wsdl/soap/" xmlns:xs="http://www.w3.org/2001/XMLSchema" '
        f'xmlns:tns="{tns}" targetNamespace="{tns}" name="EucalyptusCC">'
    )
    out += ["  <wsdl:types>", f'    <xs:schema targetNamespace="{tns}" elementFormDefault="qualified">']
    for op in ops:
        out.append(f'      <xs:element name="{op}" type="tns:{op}Type"/>')
        out.append(f'      <xs:element name="{op}Response" type="tns:{op}ResponseType"/>')
    for op in ops:
        ins, outs = EUCA_FIELDS.get(op, ([("instanceId", S)], []))
        for tname, fields in ((f"{op}Type", ins), (f"{op}ResponseType", outs)):
            out += [
                f'      <xs:complexType name="{tname}">',
                "        <xs:complexContent>",
                '          <xs:extension base="tns:eucalyptusMessage">',
                "            <xs:sequence>",
            ]
            for f, t in fields:
                occurs = ' maxOccurs="unbounded"' if t.endswith("*") else ""
                out.append(f'              <xs:element name="{f}" type="{t.rstrip("*")}" minOccurs="0"{occurs}/>')
            out += ["            </xs:sequence>", "          </xs:extension>", "        </xs:complexContent>", "      </xs:complexType>"]
    out.append(EUCA_SHARED.rstrip("\n"))
    if "DescribeSensors" in ops:
        out.append(EUCA_SENSORS.rstrip("\n"))
    out += ["    </xs:schema>", "  </wsdl:types>"]
    for op in ops:
        out += [
            f'  <wsdl:message name="{op}RequestMsg">',
            f'    <wsdl:part name="{op}RequestMsgReq" element="tns:{op}"/>',
            "  </wsdl:message>",
            f'  <wsdl:message name="{op}ResponseMsg">',
            f'    <wsdl:part name="{op}ResponseMsgResp" element="tns:{op}Response"/>',
            "  </wsdl:message>",
        ]
    out.append('  <wsdl:portType name="EucalyptusCC">')
    for op in ops:
        out += [
            f'    <wsdl:operation name="{op}">',
            f'      <wsdl:input message="tns:{op}RequestMsg"/>',
            f'      <wsdl:output message="tns:{op}ResponseMsg"/>',
            "    </wsdl:operation>",
        ]
    out.append("  </wsdl:portType>")
    out += ['  <wsdl:binding name="EucalyptusCCSOAP" type="tns:EucalyptusCC">',
            f'    <soap:binding style="document" transport="{SOAP_HTTP}"/>']
    for op in ops:
        out += [
            f'    <wsdl:operation name="{op}">',
            f'      <soap:operation soapAction="EucalyptusCC#{op}" style="document"/>',
            "      <wsdl:input>",
            '        <soap:body use="literal"/>',
            "      </wsdl:input>",
            "      <wsdl:output>",
            '        <soap:body use="literal"/>',
            "      </wsdl:output>",
            "    </wsdl:operation>",
        ]
    out.append("  </wsdl:binding>")
    out += [
        '  <wsdl:service name="EucalyptusCC">',
        '    <wsdl:port name="EucalyptusCC" binding="tns:EucalyptusCCSOAP">',
        '      <soap:address location="http://localhost:8774/axis2/services/EucalyptusCC"/>',
        "    </wsdl:port>",
        "  </wsdl:service>",
        "</wsdl:definitions>",
    ]
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------- BookService (JAX-WS naming)

BOOK_OPS = [
    ("findBookNumber", [], [("return", S)]),
    ("getAbstractOfChapter", [("bookNumber", I), ("chapterNumber", I)], [("return", S)]),
    ("getAllVerseByBookAndChapterNumber", [("bookNumber", I), ("chapterNumber", I)], [("return", S)]),
    ("getVerseByBookAndChapterAndVerseNumber", [("bookNumber", I), ("chapterNumber", I), ("verseNumber", I)], [("return", S)]),
]


# ---------------------------------------------------------------- test suites

SOAPENV = "http://schemas.xmlsoap.org/soap/envelope/"


def envelope(tns, op, params, indent="   "):
    lines = [f'<soapenv:Envelope xmlns:soapenv="{SOAPENV}" xmlns:web="{tns}">', f"{indent}<soapenv:Header/>", f"{indent}<soapenv:Body>"]
    lines.append(f"{indent * 2}<web:{op}>")
    for k, v in params:
        lines.append(f"{indent * 3}<{k}>{escape(str(v))}</{k}>")
    lines.append(f"{indent * 2}</web:{op}>")
    lines += [f"{indent}</soapenv:Body>", "</soapenv:Envelope>"]
    return "\n".join(lines)


def soapui_step(interface, endpoint, tns, op, step, params):
    body = envelope(tns, op, params)
    return f"""      <con:testStep type="request" name="{step}">
        <con:settings/>
        <con:config xsi:type="con:RequestStep" xmlns:xsi="http://www.w3.org/2001/XMLSchema-instance">
          <con:interface>{interface}</con:interface>
          <con:operation>{op}</con:operation>
          <con:request name="{step}">
            <con:settings/>
            <con:encoding>UTF-8</con:encoding>
            <con:endpoint>{endpoint}</con:endpoint>
            <con:request><![CDATA[{body}]]></con:request>
            <con:credentials>
              <con:authType>No Authorization</con:authType>
            </con:credentials>
            <con:jmsConfig JMSDeliveryMode="PERSISTENT"/>
            <con:jmsPropertyConfig/>
            <con:wsaConfig mustUnderstand="NONE" version="200508"/>
            <con:wsrmConfig version="1.2"/>
          </con:request>
        </con:config>
      </con:testStep>"""


def soapui_case(name, steps_xml):
    body = "\n".join(steps_xml)
    return f"""    <con:testCase failOnError="true" failTestCaseOnErrors="true" keepSession="false" maxResults="0" name="{name}" searchProperties="true">
      <con:settings/>
{body}
      <con:properties/>
    </con:testCase>"""


def soapui_suite(suite_name, cases_xml):
    body = "\n".join(cases_xml)
    return f"""  <con:testSuite name="{suite_name}">
    <con:settings/>
    <con:runType>SEQUENTIAL</con:runType>
{body}
    <con:properties/>
    <con:reportParameters/>
  </con:testSuite>"""


def soapui_project(project, interface, wsdl_url, ops, suite_xml):
    op_xml = "\n".join(
        f'    <con:operation isOneWay="false" action="" name="{op}" bindingOperationName="{op}" type="Request-Response" inputName="" receivesAttachments="false" sendsAttachments="false" anonymous="optional"/>'
        for op in ops
    )
    return f"""<?xml version="1.0" encoding="UTF-8"?>
<con:soapui-project name="{project}" resourceRoot="" soapui-version="4.5.1" abortOnError="false" runType="SEQUENTIAL" xmlns:con="http://eviware.com/soapui/config">
  <con:settings/>
  <con:interface xsi:type="con:WsdlInterface" wsaVersion="NONE" name="{interface}" type="wsdl" soapVersion="1_1" anonymous="optional" definition="{wsdl_url}" xmlns:xsi="http://www.w3.org/2001/XMLSchema-instance">
    <con:settings/>
    <con:definitionCache type="TEXT" rootPart="{wsdl_url}"/>
    <con:endpoints>
      <con:endpoint>{wsdl_url.split("?")[0]}</con:endpoint>
    </con:endpoints>
{op_xml}
  </con:interface>
{suite_xml}
  <con:properties/>
  <con:wssContainer/>
  <con:oAuth2ProfileContainer/>
</con:soapui-project>
"""


def soapui_standalone_suite(suite_name, cases_xml):
    body = "\n".join(cases_xml)
    body = "\n".join(line[2:] if line.startswith("    ") else line for line in body.split("\n"))
    return f"""<?xml version="1.0" encoding="UTF-8"?>
<con:testSuite name="{suite_name}" xmlns:con="http://eviware.com/soapui/config">
  <con:settings/>
  <con:runType>SEQUENTIAL</con:runType>
{body}
  <con:properties/>
  <con:reportParameters/>
</con:testSuite>
"""


SAAS_TNS = "http://saas/"
SAAS_EP = "http://localhost:8080/SaaS/dirService"
SAAS_IF = "dirPortBinding"
SAAS_SUITE = "dirPortBinding TestSuite"


def saas_case(op, steps):
    return soapui_case(f"{op}_TestCase", [soapui_step(SAAS_IF, SAAS_EP, SAAS_TNS, op, s, p) for s, p in steps])


INDEX_STEPS = [("Index", [("arg0", "docs")]), ("Index empty folder", [("arg0", "empty")])]
SEARCH_STEPS = [("Searching", [("arg0", "docs"), ("arg1", "regression")]), ("Searching missing", [("arg0", "docs"), ("arg1", "zzz")])]
READ_STEPS = [("readingFile", [("arg0", "docs/readme.txt")])]
EDIT_STEPS = [
    ("editFile", [("fileName", "notes.txt"), ("lineToEdit", 1), ("replacementText", "first")]),
    ("fileName", [("fileName", "todo.txt"), ("lineToEdit", 1), ("replacementText", "first")]),
    ("fileName1", [("fileName", "missing.txt"), ("lineToEdit", 1), ("replacementText", "x")]),
    ("lineToEdit1", [("fileName", "notes.txt"), ("lineToEdit", 0), ("replacementText", "zero")]),
    ("lineToEdit2", [("fileName", "notes.txt"), ("lineToEdit", 999), ("replacementText", "far")]),
    ("replacementText1", [("fileName", "notes.txt"), ("lineToEdit", 2), ("replacementText", "")]),
]


def jmx_sampler(endpoint, tns, op, step, params, indent="        "):
    body = escape(envelope(tns, op, params), {'"': "&quot;"})
    i = indent
    return f"""{i}<SoapSampler guiclass="SoapSamplerGui" testclass="SoapSampler" testname="{step}" enabled="true">
{i}  <elementProp name="HTTPsampler.Arguments" elementType="Arguments">
{i}    <collectionProp name="Arguments.arguments"/>
{i}  </elementProp>
{i}  <stringProp name="TestPlan.comments"></stringProp>
{i}  <stringProp name="SoapSampler.URL_DATA">{endpoint}</stringProp>
{i}  <stringProp name="HTTPSamper.xml_data">{body}</stringProp>
{i}  <stringProp name="SoapSampler.xml_data_file"></stringProp>
{i}  <stringProp name="SoapSampler.SOAP_ACTION"></stringProp>
{i}  <stringProp name="SoapSampler.SEND_SOAP_ACTION">true</stringProp>
{i}  <boolProp name="HTTPSampler.use_keepalive">false</boolProp>
{i}</SoapSampler>
{i}<hashTree/>"""


def jmx_thread_group(name, samplers):
    body = "\n".join(samplers)
    return f"""      <ThreadGroup guiclass="ThreadGroupGui" testclass="ThreadGroup" testname="{name}" enabled="true">
        <stringProp name="ThreadGroup.on_sample_error">continue</stringProp>
        <elementProp name="ThreadGroup.main_controller" elementType="LoopController" guiclass="LoopControlPanel" testclass="LoopController" testname="Loop Controller" enabled="true">
          <boolProp name="LoopController.continue_forever">false</boolProp>
          <stringProp name="LoopController.loops">1</stringProp>
        </elementProp>
        <stringProp name="ThreadGroup.num_threads">1</stringProp>
        <stringProp name="ThreadGroup.ramp_time">1</stringProp>
        <boolProp name="ThreadGroup.scheduler">false</boolProp>
        <stringProp name="ThreadGroup.duration"></stringProp>
        <stringProp name="ThreadGroup.delay"></stringProp>
      </ThreadGroup>
      <hashTree>
{body}
      </hashTree>"""


def jmx_plan(name, groups):
    body = "\n".join(groups)
    return f"""<?xml version="1.0" encoding="UTF-8"?>
<jmeterTestPlan version="1.2" properties="2.5" jmeter="2.10 r1533061">
  <hashTree>
    <TestPlan guiclass="TestPlanGui" testclass="TestPlan" testname="{name}" enabled="true">
      <stringProp name="TestPlan.comments"></stringProp>
      <boolProp name="TestPlan.functional_mode">false</boolProp>
      <boolProp name="TestPlan.serialize_threadgroups">false</boolProp>
      <elementProp name="TestPlan.user_defined_variables" elementType="Arguments" guiclass="ArgumentsPanel" testclass="Arguments" testname="User Defined Variables" enabled="true">
        <collectionProp name="Arguments.arguments"/>
      </elementProp>
      <stringProp name="TestPlan.user_define_classpath"></stringProp>
    </TestPlan>
    <hashTree>
{body}
      <ResultCollector guiclass="ViewResultsFullVisualizer" testclass="ResultCollector" testname="View Results Tree" enabled="true">
        <boolProp name="ResultCollector.error_logging">false</boolProp>
        <stringProp name="filename"></stringProp>
      </ResultCollector>
      <hashTree/>
    </hashTree>
  </hashTree>
</jmeterTestPlan>
"""


def saas_group(op, steps):
    return jmx_thread_group(f"{op}_TestCase", [jmx_sampler(SAAS_EP, SAAS_TNS, op, s, p) for s, p in steps])


BOOK_TNS = "http://BookService/"
BOOK_EP = "http://localhost:8080/BookService/BookServiceService"
BOOK_IF = "BookServicePortBinding"


def book_case(name, op, steps):
    return soapui_case(name, [soapui_step(BOOK_IF, BOOK_EP, BOOK_TNS, op, s, p) for s, p in steps])


CURRENCY_TNS = "http://www.webserviceX.NET/"
CURRENCY_EP = "http://www.webservicex.net/CurrencyConvertor.asmx"
CURRENCY_IF = "CurrencyConvertorSoap"


def currency_case(name, base, targets):
    steps = [soapui_step(CURRENCY_IF, CURRENCY_EP, CURRENCY_TNS, "ConversionRate", f"{base} to {t}",
                         [("web:FromCurrency", base), ("web:ToCurrency", t)]) for t in targets]
    return soapui_case(name, steps)


def main():
    WSDL_DIR.mkdir(exist_ok=True)
    SUITE_DIR.mkdir(exist_ok=True)
    w = lambda d, name, text: (d / name).write_text(text, encoding="utf-8")

    w(WSDL_DIR, "saas1.wsdl", saas([SAAS_INDEX_STR], policy=True))
    w(WSDL_DIR, "saas2.wsdl", saas([SAAS_INDEX_STR, SAAS_SEARCHING, SAAS_READING], policy=True))
    saas3 = saas([SAAS_INDEX_INT, SAAS_SEARCHING, SAAS_READING, SAAS_EDIT], extra=LINE_EDIT)
    w(WSDL_DIR, "saas3.wsdl", saas3)
    w(WSDL_DIR, "saas4.wsdl", saas3)
    w(WSDL_DIR, "eucalyptus_cc_v1.wsdl", euca_wsdl(EUCA_V1_OPS))
    w(WSDL_DIR, "eucalyptus_cc_v2.wsdl", euca_wsdl(EUCA_V2_OPS))
    w(WSDL_DIR, "bookservice.wsdl", jaxws_wsdl(BOOK_TNS, "BookServiceService", "BookService", BOOK_IF, BOOK_OPS, conventional=False))

    w(SUITE_DIR, "saas2_suite.soapui.xml", soapui_project(
        "SaaS_2", SAAS_IF, SAAS_EP + "?wsdl", ["Index", "Searching", "readingFile"],
        soapui_suite(SAAS_SUITE, [saas_case("Index", INDEX_STEPS), saas_case("Searching", SEARCH_STEPS), saas_case("readingFile", READ_STEPS)])))
    w(SUITE_DIR, "saas3_suite.soapui.xml", soapui_project(
        "SaaS_3", SAAS_IF, SAAS_EP + "?wsdl", ["Index", "Searching", "readingFile", "editFile"],
        soapui_suite(SAAS_SUITE, [saas_case("Index", INDEX_STEPS), saas_case("Searching", SEARCH_STEPS),
                                  saas_case("readingFile", READ_STEPS), saas_case("editFile", EDIT_STEPS)])))
    w(SUITE_DIR, "saas_rrts_export.soapui.xml", soapui_standalone_suite(SAAS_SUITE, [
        saas_case("edit", [("edit", [("arg0", "notes.txt")])]),
        saas_case("Searching", SEARCH_STEPS),
        saas_case("editFile", EDIT_STEPS),
    ]))
    w(SUITE_DIR, "saas2_plan.jmx", jmx_plan("SaaS_2 Test Plan", [
        saas_group("Index", INDEX_STEPS), saas_group("Searching", SEARCH_STEPS), saas_group("readingFile", READ_STEPS)]))
    w(SUITE_DIR, "saas3_plan.jmx", jmx_plan("SaaS_3 Test Plan", [
        saas_group("Index", INDEX_STEPS), saas_group("Searching", SEARCH_STEPS),
        saas_group("readingFile", READ_STEPS), saas_group("editFile", EDIT_STEPS)]))

    chapters = [(f"chapter {c}", [("bookNumber", 1), ("chapterNumber", c)]) for c in range(1, 9)]
    gita_verses = [(f"chapter {c} verse {v}", [("bookNumber", 1), ("chapterNumber", c), ("verseNumber", v)])
                   for c, v in ((1, 1), (2, 1), (2, 7), (4, 3))]
    w(SUITE_DIR, "bookservice_suite.soapui.xml", soapui_project(
        "BookService", BOOK_IF, BOOK_EP + "?wsdl", [op for op, _, _ in BOOK_OPS],
        soapui_suite("BookServicePortBinding TestSuite", [
            book_case("findBookNumber_TestCase", "findBookNumber", [("findBookNumber", [])]),
            book_case("GetAbstractOfChapter", "getAbstractOfChapter", chapters),
            book_case("BhagavadGita_AllVerse", "getAllVerseByBookAndChapterNumber",
                      [(f"chapter {c}", [("bookNumber", 1), ("chapterNumber", c)]) for c in (1, 2, 3)]),
            book_case("BhagavadGita_Verse", "getVerseByBookAndChapterAndVerseNumber", gita_verses),
        ])))
    w(SUITE_DIR, "currency_suite.soapui.xml", soapui_project(
        "CurrencyConvertor", CURRENCY_IF, CURRENCY_EP + "?WSDL", ["ConversionRate"],
        soapui_suite("CurrencyConvertorSoap TestSuite", [
            currency_case("IndianRupee", "INR", ["JPY", "AUD", "USD", "EUR"]),
            currency_case("USDollar", "USD", ["INR", "GBP"]),
        ])))


if __name__ == "__main__":
    main()
