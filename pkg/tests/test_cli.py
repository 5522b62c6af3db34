import json
import os

import pytest

from extlab.main import EXIT_CONFIG, EXIT_OK, run


def test_verify_writes_report_and_params(tmp_path):
    out = tmp_path / "report.json"
    code = run(
        args=["verify", "--suite", "cpc", "--max-n", "4", "--jobs", "1", "--format", "json", "--out", str(out)]
    )
    assert code == EXIT_OK
    report = json.loads(out.read_text())
    assert report["header"]["command"] == "verify"
    assert report["scope"] == "cpc"
    assert report["violations"] == []
    params = json.loads((tmp_path / "params.json").read_text())
    assert params["suite"] == "cpc" and params["max_n"] == 4
    assert (tmp_path / "cmd.sh").read_text().startswith("python run.py")


@pytest.mark.parametrize(
    "args",
    [
        ["verify", "--suite", "nope"],
        ["verify", "--max-n", "11"],
        ["verify", "--jobs", "0"],
        ["search", "--budget", "-1"],
        ["verify", "--unknown"],
        ["frobnicate"],
    ],
)
def test_bad_configuration(args):
    assert run(args=args) == EXIT_CONFIG


def test_malformed_poset_file(poset_file):
    path = poset_file("3;0<")
    assert run(args=["table", path, "--triple", "0,1,2"]) == EXIT_CONFIG


def test_cyclic_poset_file(poset_file):
    path = poset_file("2;0<1,1<0")
    assert run(args=["render", path]) == EXIT_CONFIG


def test_triple_out_of_range(poset_file):
    path = poset_file("3;0<1")
    assert run(args=["table", path, "--triple", "0,1,5"]) == EXIT_CONFIG


def test_table_text(poset_file, capsys):
    path = poset_file("# two chains of two", "4;0<1,2<3")
    assert run(args=["table", path, "--triple", "0,2,1"]) == EXIT_OK
    assert capsys.readouterr().out == "  1 2\n1 1 1\n"


def test_table_csv(poset_file, capsys):
    path = poset_file("4;0<1,2<3")
    assert run(args=["table", path, "--triple", "0,2,1", "--format", "csv"]) == EXIT_OK
    assert capsys.readouterr().out == "i,j,value\n1,1,1\n1,2,1\n"


def test_table_json(poset_file, capsys):
    path = poset_file("4;0<1,2<3")
    assert run(args=["table", path, "--triple", "0,2,1", "--format", "json"]) == EXIT_OK
    report = json.loads(capsys.readouterr().out)
    assert report["poset"] == "4;0<1,2<3"
    assert report["triple"] == [0, 2, 1]
    assert report["entries"] == {"1,1": "1", "1,2": "1"}
    assert not report["signed"] and not report["q"]


def test_signed_table_counts_every_extension(poset_file, capsys):
    path = poset_file("4;0<1,2<3")
    assert run(args=["table", path, "--triple", "0,2,1", "--signed", "true", "--format", "json"]) == EXIT_OK
    report = json.loads(capsys.readouterr().out)
    assert sum(int(v) for v in report["entries"].values()) == 6


def test_render(poset_file, capsys):
    path = poset_file("3;0<1")
    assert run(args=["render", path, "--extension", "-1"]) == EXIT_OK
    assert capsys.readouterr().out == "***\n*..\n"
    assert run(args=["render", path]) == EXIT_OK
    assert capsys.readouterr().out == "...\n...\n"


def test_render_json(poset_file, capsys):
    path = poset_file("3;0<1")
    assert run(args=["render", path, "--extension", "-1", "--format", "json"]) == EXIT_OK
    report = json.loads(capsys.readouterr().out)
    assert report["decomposition"] == "0,1|2"
    assert report["grid"] == ["***", "*.."]


def test_render_extension_out_of_range(poset_file):
    path = poset_file("3;0<1")
    assert run(args=["render", path, "--extension", "3"]) == EXIT_CONFIG


def test_search_zero_budget(tmp_path):
    out = tmp_path / "search.json"
    code = run(args=["search", "--budget", "0", "--jobs", "1", "--format", "json", "--out", str(out)])
    assert code == EXIT_OK
    report = json.loads(out.read_text())
    assert report["instances_checked"] == 0
    assert not report["findings"]


def test_run_prefix_log_dir(tmp_path, poset_file, capsys):
    path = poset_file("3;0<1")
    root = str(tmp_path / "log")
    args = ["render", path, "--log_root_dir", root, "--run_prefix", "demo"]
    assert run(args=args) == EXIT_OK
    assert os.path.exists(os.path.join(root, "render.demo.123", "params.json"))
