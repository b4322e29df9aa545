import json
import re

from hypothesis import given, settings, strategies as st

from wsregress.wsdl import parse_wsdl, serialize_wsdl
from wsregress.wsdldiff import diff_wsdl, io_signature

PAIRS = [("saas1", "saas2"), ("saas2", "saas3"), ("saas3", "saas4"), ("eucalyptus_cc_v1", "eucalyptus_cc_v2")]


def test_saas1_to_saas2(wsdl):
    c = diff_wsdl(wsdl("saas1"), wsdl("saas2"))
    assert c.inserted == {"Searching", "readingFile"}
    assert not c.deleted and not c.io_modified
    assert c.unchanged == {"Index"}


def test_saas2_to_saas3(wsdl):
    c = diff_wsdl(wsdl("saas2"), wsdl("saas3"))
    assert c.inserted == {"editFile"}
    assert c.io_modified == {"Index"}
    assert c.difference == ["Index", "editFile"]
    a, b = c.detail["Index"]
    assert a.input_digest != b.input_digest and a.output_digest != b.output_digest


def test_policy_removal_is_informational_only(wsdl):
    c = diff_wsdl(wsdl("saas2"), wsdl("saas3"))
    assert "definitions attribute xmlns:wsp removed" in c.informational
    assert any(n.startswith("extension element wsp:Policy") for n in c.informational)
    assert c.unchanged == {"Searching", "readingFile"}


def test_eucalyptus_insertions(wsdl):
    c = diff_wsdl(wsdl("eucalyptus_cc_v1"), wsdl("eucalyptus_cc_v2"))
    assert c.inserted >= {"DescribeSensors", "BundleRestartInstance"}
    assert len(c.difference) == 2


def test_identity(wsdl):
    for name in ("saas3", "amazon_ecs", "empty"):
        c = diff_wsdl(wsdl(name), wsdl(name))
        assert c.unchanged == set(wsdl(name).operation_names)
        assert not (c.inserted or c.deleted or c.io_modified or c.informational)


def test_json_report_shape(wsdl):
    data = json.loads(diff_wsdl(wsdl("saas2"), wsdl("saas3")).dumps())
    assert data["inserted"] == ["editFile"] and data["io_modified"] == ["Index"]
    assert set(data) >= {"inserted", "deleted", "io_modified", "unchanged"}


def test_sets_partition_the_operations(wsdl):
    for a, b in PAIRS:
        c = diff_wsdl(wsdl(a), wsdl(b))
        old, new = set(wsdl(a).operation_names), set(wsdl(b).operation_names)
        assert c.inserted == new - old and c.deleted == old - new
        assert c.io_modified | c.unchanged == old & new
        assert not c.io_modified & c.unchanged


def test_symmetry(wsdl):
    for a, b in PAIRS:
        fwd, back = diff_wsdl(wsdl(a), wsdl(b)), diff_wsdl(wsdl(b), wsdl(a))
        assert fwd.inserted == back.deleted and fwd.deleted == back.inserted
        assert fwd.io_modified == back.io_modified


def test_rename_is_delete_plus_insert(wsdl):
    text = serialize_wsdl(wsdl("saas2"))
    renamed = parse_wsdl(re.sub(r'(<operation name=")readingFile(")', r"\1readFile\2", text))
    c = diff_wsdl(wsdl("saas2"), renamed)
    assert c.deleted == {"readingFile"} and c.inserted == {"readFile"}


def test_signature_ignores_prefix_choice(wsdl):
    text = serialize_wsdl(wsdl("eucalyptus_cc_v1"))
    swapped = parse_wsdl(text.replace("xs:", "xsd:").replace("xmlns:xs=", "xmlns:xsd="))
    c = diff_wsdl(wsdl("eucalyptus_cc_v1"), swapped)
    assert not c.io_modified


def test_nested_type_change_is_detected(wsdl):
    text = serialize_wsdl(wsdl("saas3")).replace('name="lineToEdit" type="xs:int"', 'name="lineToEdit" type="xs:long"')
    c = diff_wsdl(wsdl("saas3"), parse_wsdl(text))
    assert c.io_modified == {"editFile"}


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([" ", "  ", "\t", "\n "]), st.sampled_from([" ", "\n", "\t\t"]), st.sampled_from(PAIRS))
def test_whitespace_edits_never_modify(wsdl, inner, between, pair):
    doc = wsdl(pair[1])
    text = serialize_wsdl(doc)
    edited = parse_wsdl(text.replace("/>", inner + "/>").replace(">\n", ">" + between + "\n"))
    c = diff_wsdl(doc, edited)
    assert not c.io_modified and not c.inserted and not c.deleted
    for op in doc.operation_names:
        assert io_signature(doc, op) == io_signature(edited, op)
