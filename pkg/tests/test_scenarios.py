import json
from pathlib import Path

import jsonschema
import pytest

from dehn4.cli import main
from dehn4.report import render, render_json, render_text, report_to_json_dict
from dehn4.scenarios import (
    HypothesisFlag,
    ScenarioError,
    Verdict,
    build_scenario,
    run_scenario,
)

SCHEMA = json.loads(
    (Path(__file__).resolve().parent.parent / "docs" / "report_schema.json").read_text()
)


def run(name, **kwargs):
    return run_scenario(build_scenario(name, **kwargs))


def test_sphere_lens_5_2_obstructed_with_witness():
    report = run("sphere-lens", p=5, q=2)
    assert report.verdict is Verdict.OBSTRUCTED
    text = render_text(report)
    assert "verdict: Obstructed" in text
    assert "{1, 4}" in text


def test_sphere_lens_5_1_not_obstructed():
    assert run("sphere-lens", p=5, q=1).verdict is Verdict.NOT_OBSTRUCTED


def test_sphere_smooth_h_obstructed_by_empty_enumeration():
    report = run("sphere-smooth-h")
    assert report.verdict is Verdict.OBSTRUCTED
    step = next(t for t in report.trace if t.operation == "enumerate_even_splittings")
    assert step.output["count"] == 0


def test_sphere_smooth_e8h_obstructed_by_exclusions():
    report = run("sphere-smooth-e8h")
    assert report.verdict is Verdict.OBSTRUCTED
    enum_step = next(
        t for t in report.trace if t.operation == "enumerate_even_splittings"
    )
    assert enum_step.output["splittings"] == [["E8", "H"], ["E8 + H", "0"]]
    excl = next(t for t in report.trace if t.operation == "exclude_splittings")
    assert [row["excluded_by"] for row in excl.output] == [
        "no-e8-filling-y1",
        "no-acyclic-filling-y2",
    ]


def test_sphere_smooth_e8h_without_exclusion_flags_is_open():
    flags = (
        HypothesisFlag("rho-y1", True, "test input"),
        HypothesisFlag("rho-y2", False, "test input"),
        HypothesisFlag("no-e8-filling-y1", False, "test input"),
        HypothesisFlag("no-acyclic-filling-y2", False, "test input"),
    )
    report = run("sphere-smooth-e8h", flags=flags)
    assert report.verdict is Verdict.NOT_OBSTRUCTED


def test_torus_solid_paper_example_left_trefoils_n3():
    report = run("torus-solid", knot_j="left-trefoil", knot_k="left-trefoil", n=3)
    assert report.verdict is Verdict.OBSTRUCTED


def test_torus_solid_unknot_k_n0_is_inconclusive():
    report = run("torus-solid", knot_j="left-trefoil", knot_k="unknot", n=0)
    assert report.verdict is Verdict.INCONCLUSIVE
    verdict_steps = [
        t for t in report.trace if t.operation == "algebraic_slice_verdict"
    ]
    unknown = [t for t in verdict_steps if t.output["tag"] == "Unknown"]
    assert len(unknown) == 1
    assert unknown[0].inputs["class"] == [1, 0]


def test_torus_top_vs_smooth_mixed():
    report = run("torus-top-vs-smooth")
    assert report.verdict is Verdict.MIXED
    assert report.detail == {"topological": "yes", "smooth": "no"}


def test_torus_top_vs_smooth_extends_when_smooth_side_open():
    # with J the unknot the longitudinal class carries no obstruction, so
    # only the topological conclusion stands
    report = run("torus-top-vs-smooth", knot_j="unknot")
    assert report.verdict is Verdict.EXTENDS
    assert report.detail["topological"] == "yes"
    assert report.detail["smooth"] == "undetermined"


def test_torus_top_vs_smooth_inconclusive_without_alexander_one():
    report = run("torus-top-vs-smooth", knot_k="trefoil")
    assert report.verdict is Verdict.INCONCLUSIVE


def test_twist_extension_2_3_mixed():
    report = run("twist-extension", p=2, q=3)
    assert report.verdict is Verdict.MIXED
    sub = next(t for t in report.trace if t.operation == "extension_subgroup")
    assert sub.output["index"] == 1
    assert any(t.operation.startswith("companion.") for t in report.trace)


def obstruction_witness_present(report) -> bool:
    """Every Obstructed trace must carry one of the four witness kinds."""
    for step in report.trace:
        out = step.output
        if step.operation.endswith("algebraic_slice_verdict") and isinstance(out, dict):
            if out.get("signature") not in (None, 0):
                return True
            fm = out.get("fox_milnor")
            if fm and fm.get("failure"):
                return True
        if step.operation.endswith("lens_qr_bounding") and isinstance(out, dict):
            if not out["bounds_b2_one_filling"]:
                return True
        if step.operation.endswith("enumerate_even_splittings"):
            if out["count"] == 0:
                return True
        if step.operation.endswith("exclude_splittings"):
            if all(row["excluded_by"] for row in out):
                return True
    return False


@pytest.mark.parametrize(
    "kwargs",
    [
        {"name": "sphere-lens", "p": 5, "q": 2},
        {"name": "sphere-smooth-h"},
        {"name": "sphere-smooth-e8h"},
        {"name": "torus-solid", "knot_j": "trefoil", "knot_k": "trefoil", "n": -2},
        {"name": "twist-extension", "p": 3, "q": 4},
    ],
)
def test_every_obstructed_verdict_has_a_witness(kwargs):
    report = run(**kwargs)
    assert report.verdict in (Verdict.OBSTRUCTED, Verdict.MIXED)
    assert obstruction_witness_present(report)


@pytest.mark.parametrize("fmt", ["text", "json"])
@pytest.mark.parametrize(
    "kwargs",
    [
        {"name": "sphere-lens", "p": 7, "q": 3},
        {"name": "torus-solid", "n": -1},
        {"name": "twist-extension", "p": 2, "q": 5},
    ],
)
def test_reports_are_deterministic(kwargs, fmt):
    first = render(run(**kwargs), fmt)
    second = render(run(**kwargs), fmt)
    assert first == second


def test_render_rejects_unknown_format():
    report = run("sphere-lens")
    with pytest.raises(ValueError, match="unknown report format"):
        render(report, "yaml")


@pytest.mark.parametrize(
    "kwargs",
    [
        {"name": "sphere-lens", "p": 5, "q": 2},
        {"name": "sphere-lens", "p": 5, "q": 1},
        {"name": "sphere-smooth-h"},
        {"name": "sphere-smooth-e8h"},
        {"name": "torus-solid", "n": 2},
        {"name": "torus-solid", "knot_j": "left-trefoil", "knot_k": "unknot", "n": 0},
        {"name": "torus-top-vs-smooth"},
        {"name": "twist-extension", "p": 2, "q": 3},
    ],
)
def test_json_reports_validate_against_schema(kwargs):
    payload = json.loads(render_json(run(**kwargs)))
    jsonschema.validate(payload, SCHEMA)


def test_flags_must_carry_provenance():
    with pytest.raises(ValueError, match="provenance"):
        HypothesisFlag("some-fact", True, "")


def test_unknown_scenario_rejected():
    with pytest.raises(ScenarioError, match="unknown scenario"):
        build_scenario("sphere-cube")


def test_scenario_parameters_echoed():
    report = run("torus-solid", knot_j="trefoil", knot_k="figure-eight", n=2)
    data = report_to_json_dict(report)
    assert data["scenario"]["parameters"]["knot_j"] == "trefoil"
    assert data["scenario"]["knots"]["knot_k"]["seifert"] == [[-1, 1], [0, 1]]


# ---- CLI ----


def test_cli_report_text(capsys):
    assert main(["report", "--scenario", "sphere-lens", "--p", "5", "--q", "2"]) == 0
    out = capsys.readouterr().out
    assert "verdict: Obstructed" in out
    assert "{1, 4}" in out


def test_cli_exit_zero_on_not_obstructed(capsys):
    assert main(["report", "--scenario", "sphere-lens", "--p", "5", "--q", "1"]) == 0
    assert "verdict: NotObstructed" in capsys.readouterr().out


def test_cli_json_format(capsys):
    assert (
        main(["report", "--scenario", "twist-extension", "--format", "json"]) == 0
    )
    payload = json.loads(capsys.readouterr().out)
    jsonschema.validate(payload, SCHEMA)
    assert payload["verdict"] == "Mixed"


def test_cli_knot_specs(capsys):
    code = main(
        [
            "report",
            "--scenario",
            "torus-solid",
            "--knot-j",
            '{"torus": [2, 5]}',
            "--knot-k",
            "trefoil",
            "--n",
            "1",
        ]
    )
    assert code == 0
    assert "verdict: Obstructed" in capsys.readouterr().out


def test_cli_error_on_bad_knot(capsys):
    assert main(["report", "--scenario", "torus-solid", "--knot-j", "granny"]) == 1
    assert "error" in capsys.readouterr().err


def test_cli_config_file(tmp_path, capsys, monkeypatch):
    config = {
        "scenario": "sphere-lens",
        "p": 13,
        "q": 5,
    }
    path = tmp_path / "scenario.json"
    path.write_text(json.dumps(config))
    assert main(["report", "--config", str(path)]) == 0
    out = capsys.readouterr().out
    assert "p=13" in out

    monkeypatch.setenv("DEHN4_CONFIG_DIR", str(tmp_path))
    assert main(["report", "--config", "scenario.json"]) == 0


def test_sphere_smooth_h_open_when_rho_constraints_relax():
    flags = (
        HypothesisFlag("rho-y1", False, "test input"),
        HypothesisFlag("rho-y2", False, "test input"),
    )
    assert run("sphere-smooth-h", flags=flags).verdict is Verdict.NOT_OBSTRUCTED


def test_cli_config_knot_objects(tmp_path, capsys):
    path = tmp_path / "knots.json"
    path.write_text(
        json.dumps(
            {
                "scenario": "torus-solid",
                "n": 2,
                "knot_j": {"torus": [2, 5]},
                "knot_k": {"name": "wd", "whitehead": "+"},
            }
        )
    )
    assert main(["report", "--config", str(path), "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["scenario"]["parameters"]["knot_j"] == "torus(2,5)"
    assert payload["scenario"]["knots"]["knot_k"]["name"] == "wd"


def test_cli_flags_override_config(tmp_path, capsys):
    path = tmp_path / "base.json"
    path.write_text(json.dumps({"scenario": "sphere-lens", "p": 5, "q": 2}))
    assert main(["report", "--config", str(path), "--q", "1"]) == 0
    out = capsys.readouterr().out
    assert "q=1" in out
    assert "verdict: NotObstructed" in out


def test_cli_config_unknown_field_rejected(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"scenario": "sphere-lens", "frobnicate": 1}))
    assert main(["report", "--config", str(path)]) == 1
    assert "unknown config fields" in capsys.readouterr().err


def test_cli_config_flag_provenance_required(tmp_path, capsys):
    path = tmp_path / "flags.json"
    path.write_text(
        json.dumps(
            {
                "scenario": "sphere-smooth-h",
                "flags": [{"name": "rho-y1", "value": True}],
            }
        )
    )
    assert main(["report", "--config", str(path)]) == 1
    assert "provenance" in capsys.readouterr().err


def test_cli_requires_scenario(capsys):
    assert main(["report"]) == 1
    assert "no scenario" in capsys.readouterr().err
