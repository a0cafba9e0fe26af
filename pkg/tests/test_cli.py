import json
import os

import pytest
from click.testing import CliRunner

from hopfcyc.cli.main import cli
from hopfcyc.cli.report import HEADER, Report


def _runner() -> CliRunner:
    # stdout carries the report; warnings and errors go to stderr
    try:
        return CliRunner(mix_stderr=False)
    except TypeError:
        return CliRunner()


@pytest.fixture
def run():
    runner = _runner()

    def invoke(*args):
        return runner.invoke(cli, [str(a) for a in args])

    return invoke


def test_examples(run):
    result = run("examples")
    assert result.exit_code == 0
    assert "kc2" in result.stdout.split()
    assert "sweedler" in result.stdout.split()


def test_integral_of_a_group_algebra(run):
    result = run("integral", "kc2")
    assert result.exit_code == 0, result.stdout
    assert result.stdout.startswith(f"{HEADER} 1\n")
    assert "basis: 1 δ_e" in result.stdout
    report = Report.parse(result.stdout)
    assert report.values["dimension"] == 1
    assert report.verdicts == {"unique": True, "right_integral": True}


def test_report_is_deterministic_and_parses_back(run):
    first, second = run("hc", "kc2", "--range", 2), run("hc", "kc2", "--range", 2)
    assert first.exit_code == 0, first.stdout
    assert first.stdout == second.stdout
    report = Report.parse(first.stdout)
    assert report.values["HC"] == [2, 0, 2]
    assert Report.parse(report.render()) == report


def test_cyclic_homology_of_the_ground_field(run):
    result = run("hc", "ground_field", "--range", 6)
    assert result.exit_code == 0, result.stdout
    report = Report.parse(result.stdout)
    assert report.values["HC"] == [1, 0, 1, 0, 1, 0, 1]
    assert report.values["HH"] == [1, 0, 0, 0, 0, 0, 0]
    assert report.verdicts["paths_agree"]


def test_false_verdict_exits_with_one(run, fixture_path):
    result = run("validate", fixture_path("broken_counit.alg"))
    assert result.exit_code == 1
    assert "verdict kc2: false" in result.stdout
    assert "counitality" in result.stdout

    result = run("stable-equiv", "f2c2", "augment")
    assert result.exit_code == 1
    assert Report.parse(result.stdout).verdicts == {
        "colinear": True,
        "stable_equivalence": False,
    }


def test_stable_equivalence_over_a_semisimple_algebra(run):
    result = run("stable-equiv", "kc2", "unit")
    assert result.exit_code == 0, result.stdout
    # witnesses are only printed with --verbose
    assert Report.parse(result.stdout).witnesses == {}


def test_input_errors_exit_with_two(run, fixture_path):
    result = run("validate", fixture_path("bad_syntax.alg"))
    assert result.exit_code == 2
    assert "error: line 6, column 16" in result.stderr

    result = run("integral", "no_such_algebra")
    assert result.exit_code == 2
    assert "error:" in result.stderr

    result = run("stable-equiv", "kc2", "missing_map")
    assert result.exit_code == 2
    assert "missing_map" in result.stderr


def test_config_file(run, tmp_path):
    config = tmp_path / "config.json"
    config.write_text(json.dumps({"max_degree": 2}))
    result = run("cyclic", "build", "kc2", "A_coeff", "--config", config)
    assert result.exit_code == 0, result.stdout
    report = Report.parse(result.stdout)
    assert report.values["max degree"] == 2
    assert [row["dim"] for row in report.tables["dimensions"]] == [4, 8, 16]

    config.write_text(json.dumps({"bogus": 1}))
    result = run("cyclic", "build", "kc2", "--config", config)
    assert result.exit_code == 2


def test_cyclic_upgrade_of_a_non_stable_pair(run, fixture_path):
    result = run("cyclic", "upgrade", fixture_path("nonstable_pair.alg"), "A_reg")
    assert result.exit_code == 1
    assert "note: stability violated" in result.stdout


def test_word_commands(run):
    result = run("word", "normalize", "d0@1 . t@1")
    assert result.exit_code == 0, result.stdout
    report = Report.parse(result.stdout)
    assert report.values["normal form"] == "d1@1"
    assert report.values["faces"] == [1]
    assert report.values["cyclic power"] == 0

    result = run("word", "normalize", "t@2", "--tag", "delta")
    assert result.exit_code == 2

    result = run("word", "eval", "kc2", "t@2 . t@2 . t@2")
    assert result.exit_code == 0, result.stdout
    assert Report.parse(result.stdout).values["normal form"] == "id@2"


def test_word_sampling_is_seeded(run):
    args = ["word", "sample", "kc2", "--max-degree", 3, "--count", 25, "--length", 10]
    first = run(*args, "--seed", 5)
    assert first.exit_code == 0, first.stdout
    report = Report.parse(first.stdout)
    assert report.verdicts == {"normal_forms_agree": True}
    assert report.values == {"words": 25, "disagreements": 0}
    assert "--seed=5" in report.command
    assert run(*args, "--seed", 5).stdout == first.stdout
    assert "--seed=6" in Report.parse(run(*args, "--seed", 6).stdout).command


def test_show_lists_the_objects(run):
    result = run("show", "kc2")
    assert result.exit_code == 0
    for name in ("kc2", "A_coeff", "hfree"):
        assert name in result.stdout


GOLDEN = os.path.join(os.path.dirname(__file__), "golden")

GOLDEN_REPORTS = [
    "validate_kc2",
    "integral_kc2",
    "cofrobenius_kc2",
    "stable_hom_f2c2",
    "suspend_f2c2",
    "desuspend_f2c2",
    "cylinder_f2c2",
    "cocylinder_f2c2",
    "bar_kc2",
    "total_integral_kc2",
    "cyclic_build_kc2",
    "cyclic_check_kc2",
    "cyclic_upgrade_kc2",
    "coapprox_kc2",
    "charmap_kc2",
    "hc_kc2",
    "hc_ground_field",
    "word_normalize",
    "word_eval_kc2",
    "vanishing_kc2",
]


@pytest.mark.parametrize("name", GOLDEN_REPORTS)
def test_golden_reports(run, tmp_path, name):
    path = os.path.join(GOLDEN, f"{name}.json")
    assert os.path.exists(path), f"missing golden report {path}"
    with open(path) as fin:
        golden = json.load(fin)

    args = list(golden["args"])
    if "config" in golden:
        config = tmp_path / "config.json"
        config.write_text(json.dumps(golden["config"]))
        args += ["--config", config]
    result = run(*args)
    assert result.exit_code == golden["exit_code"], result.stdout

    report = Report.parse(result.stdout)
    assert report.command == golden["command"]
    assert report.verdicts == golden["verdicts"]
    for key, value in golden.get("values", {}).items():
        assert report.values[key] == value, key
    for key, rows in golden.get("tables", {}).items():
        assert report.tables[key] == rows, key
    if "notes" in golden:
        assert report.notes == golden["notes"]
    assert report.witnesses == {}


def test_every_golden_file_is_checked():
    recorded = sorted(f[: -len(".json")] for f in os.listdir(GOLDEN) if f.endswith(".json"))
    assert recorded == sorted(GOLDEN_REPORTS)
