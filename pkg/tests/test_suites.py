import pytest

from extlab.suites import SUITES, AdmissibleSuite, XyzSuite, get_suite_by_name
from extlab.suites.cross_product_suite import KnownValuesSuite
from extlab.utils.report import make_header, make_report, report_body_digest
from extlab.verifier import Verifier


SMALL_SUITES = [name for name in SUITES if name != "admissible"]


def _run_suite(suite):
    checked = 0
    for item in suite.instances():
        violations, info = suite.check(item)
        assert violations == [], item
        assert "checks" in info
        checked += 1
    return checked


@pytest.mark.parametrize("name", SMALL_SUITES)
def test_suite_passes_on_small_posets(make_config, name):
    config = make_config("--max-n", "4", "--suite", name)
    assert _run_suite(SUITES[name](config)) > 0


def test_cpc_suite_with_q(make_config):
    config = make_config("--max-n", "4", "--q", "true")
    assert _run_suite(SUITES["cpc"](config)) > 0


def test_admissible_items(make_config):
    suite = AdmissibleSuite(make_config())
    for dim in AdmissibleSuite.truncations:
        assert suite.check(("identity", dim))[0] == []
    for index in range(20):
        violations, info = suite.check(("pair", index))
        assert violations == []
        assert info["checks"] == 3 + 3 * AdmissibleSuite.max_k


def test_admissible_instances(make_config):
    items = list(AdmissibleSuite(make_config()).instances())
    assert items[:2] == [("identity", 6), ("identity", 10)]
    assert len(items) == 2 + AdmissibleSuite.num_pairs


def test_known_values(make_config):
    suite = KnownValuesSuite(make_config("--max-n", "5"))
    for item in suite.instances():
        assert suite.check(item) == ([], {"checks": 1})


def test_size_cap(make_config):
    assert XyzSuite(make_config("--max-n", "9")).max_n == 6
    assert XyzSuite(make_config("--max-n", "4")).max_n == 4


def test_chains_restrict_sweep(make_config):
    suite = SUITES["cpc"](make_config("--max-n", "6", "--chains", "2,2"))
    assert {(d.a, d.b) for _, d in suite.instances()} == {(2, 2)}
    suite = SUITES["cpc"](make_config("--max-n", "3", "--chains", "2,2"))
    assert list(suite.instances()) == []


def test_suite_registry():
    assert [name for name, _ in get_suite_by_name("all")] == list(SUITES)
    assert get_suite_by_name("gyy") == [("gyy", SUITES["gyy"])]
    with pytest.raises(ValueError, match="--suite nope is not supported"):
        get_suite_by_name("nope")


def test_verify_report(make_config):
    body, passed = Verifier(make_config("--max-n", "4", "--suite", "gyy")).verify()
    assert passed
    assert body["scope"] == "gyy"
    assert body["violations"] == [] and not body["findings"]
    assert body["suites"]["gyy"]["passed"]
    assert body["instances_checked"] == body["suites"]["gyy"]["instances_checked"] > 0


def test_verify_is_independent_of_jobs(make_config):
    digests = []
    for jobs in ("1", "2"):
        config = make_config("--max-n", "5", "--suite", "cpc", "--jobs", jobs)
        body, passed = Verifier(config).verify()
        assert passed
        digests.append(report_body_digest(make_report(make_header("verify", 0), body)))
    assert digests[0] == digests[1]


@pytest.mark.slow
def test_verify_all(make_config):
    body, passed = Verifier(make_config("--max-n", "5", "--suite", "all")).verify()
    assert passed, body["violations"][:3]
    assert list(body["suites"]) == list(SUITES)
