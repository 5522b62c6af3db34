import pytest

from extlab.oracle import correlation_table
from extlab.utils.report import (
    make_header,
    make_report,
    region_to_csv,
    render_report,
    report_body,
    report_body_digest,
    table_to_text,
    to_csv,
    to_text,
)


@pytest.fixture
def report():
    body = {
        "scope": "cpc",
        "instances_checked": 2,
        "violations": [
            {
                "suite": "cpc",
                "poset": "3;0<1",
                "decomposition": "0,1|2",
                "triple": [0, 1, 2],
                "indices": [1, 1],
                "lhs": "4",
                "rhs": "3",
            }
        ],
        "suites": {"cpc": {"instances_checked": 2, "checks": 5, "violations": 1, "passed": False}},
        "findings": True,
    }
    return make_report(make_header("verify", 12.5), body)


def test_digest_ignores_header(report):
    other = dict(report, header=make_header("verify", 99))
    assert report_body_digest(report) == report_body_digest(other)
    assert "header" not in report_body(report)
    changed = dict(report, instances_checked=3)
    assert report_body_digest(changed) != report_body_digest(report)


def test_csv(report):
    lines = to_csv(report).splitlines()
    assert lines[0] == "poset,decomposition,triple,indices,lhs,rhs"
    assert lines[1] == '3;0<1,"0,1|2","0,1,2","1,1",4,3'


def test_text(report):
    lines = to_text(report).splitlines()
    assert lines[0].split() == ["cpc", "FAILED", "2", "instances,", "1", "violations"]
    assert lines[1] == "scope cpc: 2 instances checked, 1 violations"
    assert lines[2].startswith("  poset=3;0<1 decomposition=0,1|2")


def test_unknown_format(report):
    assert render_report(report, "json").startswith("{")
    with pytest.raises(ValueError, match="--format yaml is not supported"):
        render_report(report, "yaml")


def test_table_text_pads_columns(width_three):
    p, t = width_three
    text = table_to_text(correlation_table(p, None, t))
    lines = text.splitlines()
    widths = {len(line) for line in lines}
    assert len(widths) == 1
    assert lines[1].split()[:3] == ["1", "1", "2"]


def test_region_csv():
    assert region_to_csv("*.\n**") == "h,k,cell\n0,1,*\n1,1,.\n0,0,*\n1,0,*\n"
