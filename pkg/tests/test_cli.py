import json

from cyclecones.cli import run


def run_json(argv):
    document, code = run(argv)
    return document, code


def write(tmp_path, name, doc):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


def test_cone_dual_round_trip(tmp_path):
    path = write(
        tmp_path,
        "cone.json",
        {"basis": "cli2", "dim": 2, "generators": [["1", "0"], ["1", "2"]]},
    )
    document, code = run_json(["cone", "dual", "--input", path])
    assert code == 0 and document["status"] == "ok"
    assert document["payload"]["cone"]["basis"] == "cli2*"


def test_cone_contains_reports_certificate(tmp_path):
    path = write(
        tmp_path,
        "cone.json",
        {"basis": "cli2c", "dim": 2, "generators": [["1", "0"], ["0", "1"]]},
    )
    document, code = run_json(
        ["cone", "contains", "--input", path, "--vector", "2,3"]
    )
    assert code == 0
    assert document["payload"]["member"] is True
    assert document["payload"]["verified"] is True
    document, code = run_json(
        ["cone", "contains", "--input", path, "--vector=-1,1"]
    )
    assert code == 0
    assert document["payload"]["member"] is False
    assert document["payload"]["separating_functional"] == ["1", "0"]


def test_dual_of_zero_cone_is_full_space(tmp_path):
    path = write(
        tmp_path, "zero.json", {"basis": "cliz2", "dim": 2, "generators": []}
    )
    document, code = run_json(["cone", "dual", "--input", path])
    assert code == 0
    dual = document["payload"]["cone"]
    assert dual["inequalities"] == []  # no constraints: the full space
    assert sorted(dual["generators"]) == [
        ["-1", "0"],
        ["0", "-1"],
        ["0", "1"],
        ["1", "0"],
    ]


def test_unknown_subcommand_is_input_error():
    document, code = run_json(["frobnicate"])
    assert code == 1 and document["status"] == "input_error"


def test_missing_file_is_input_error():
    document, code = run_json(["cone", "dual", "--input", "/nonexistent.json"])
    assert code == 1 and document["status"] == "input_error"
    assert document["diagnostics"]


def test_float_in_input_is_rejected(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"basis": "cli2f", "dim": 2, "generators": [[0.5, 1]]}')
    document, code = run_json(["cone", "dual", "--input", str(path)])
    assert code == 1 and document["status"] == "input_error"


def test_domain_error_exit_code(tmp_path):
    # non-pseudo-effective class for the toric geometry -> domain error (2)
    document, code = run_json(
        ["decompose", "--geometry", "toric-3fold:curves", "--class", "0,0,0,0,-1"]
    )
    assert code == 2 and document["status"] == "domain_error"
    assert "separating_functional" in document["payload"]["error"]


def test_projbundle_decomposition_payload():
    document, code = run_json(
        ["projbundle", "--hn", "2:0,2:2", "--k", "2", "--class", "2,-3"]
    )
    assert code == 0
    decomposition = document["payload"]["decomposition"]
    assert decomposition["positive"] == ["1", "-1"]
    assert decomposition["negative"] == ["1", "-2"]
    constants = document["payload"]["constants"]
    assert constants["epsilon"] == {"0": "-2", "1": "-2", "2": "-2", "3": "-1", "4": "0"}


def test_projbundle_class_requires_k():
    document, code = run_json(["projbundle", "--hn", "2:0,2:2", "--class", "1,0"])
    assert code == 1


def test_bck_command(tmp_path):
    path = write(
        tmp_path, "gram.json", {"labels": ["Z"], "gram": [["-2"]], "source": "t"}
    )
    document, code = run_json(
        ["bck", "--gram", path, "--class", "1", "--brute-force"]
    )
    assert code == 0
    assert document["payload"]["negative"] == ["1"]
    assert document["payload"]["brute_force_agrees"] is True


def test_ring_eval_and_pair():
    document, code = run_json(
        ["ring", "eval", "--fixture", "p2-hilb2", "--expr", "D2^3"]
    )
    assert code == 0
    assert document["payload"]["coords"] == ["-6", "3"]
    document, code = run_json(
        ["ring", "pair", "--fixture", "p2-hilb2", "--a", "S3", "--b", "S3"]
    )
    assert code == 0 and document["payload"]["value"] == "-2"
    document, code = run_json(
        ["ring", "pair", "--fixture", "m07-s7", "--a", "(D1+3*D2)^2", "--b", "S2"]
    )
    assert code == 0 and document["payload"]["value"] == "0"


def test_fixture_verify_payload():
    document, code = run_json(["fixture", "toric-3fold", "--verify"])
    assert code == 0
    assert document["payload"]["verification"]["all_ok"] is True


def test_directed_command_reports_no_maximum():
    document, code = run_json(
        ["directed", "--geometry", "toric-3fold:curves", "--class", "1,1,0,1,2"]
    )
    assert code == 0
    payload = document["payload"]
    assert payload["status"] == "no-maximum"
    assert payload["verified"] is True
    assert payload["pair_dominator_set_empty"] is True


def test_byte_identical_output_across_runs(capsys):
    from cyclecones.cli import main

    argv = ["directed", "--geometry", "toric-3fold:curves", "--class", "1,1,0,1,2"]
    main(argv)
    first = capsys.readouterr().out
    main(argv)
    second = capsys.readouterr().out
    assert first == second
    assert "generated_at" not in first


def test_meta_flag_adds_block_outside_payload():
    document, code = run_json(
        ["--meta", "projbundle", "--hn", "3:1"]
    )
    assert code == 0
    assert "generated_at" in document["meta"]
    assert "generated_at" not in json.dumps(document["payload"])


def test_plot_section_writes_svg(tmp_path):
    out = tmp_path / "section.svg"
    document, code = run_json(
        [
            "decompose",
            "--geometry",
            "p2-hilb2:surfaces",
            "--class",
            "1,0,1",
            "--plot-section",
            str(out),
        ]
    )
    assert code == 0
    text = out.read_text()
    assert text.startswith("<svg") and "</svg>" in text
    assert document["payload"]["plot_section"] == str(out)


def test_plot_section_rejected_off_dimension(tmp_path):
    out = tmp_path / "section.svg"
    document, code = run_json(
        [
            "decompose",
            "--geometry",
            "toric-3fold:curves",
            "--class",
            "1,1,0,1,2",
            "--plot-section",
            str(out),
        ]
    )
    assert code == 1 and document["status"] == "input_error"
    assert not out.exists()


def test_geometry_file_input(tmp_path):
    path = write(
        tmp_path,
        "geom.json",
        {
            "name": "demo",
            "basis": "cliq2",
            "dim": 2,
            "mov": {"generators": [["1", "1"], ["0", "1"]]},
            "eff": {"generators": [["1", "0"], ["0", "1"]]},
            "objective": ["1", "1"],
        },
    )
    document, code = run_json(["decompose", "--geometry", path, "--class", "3,1"])
    assert code == 0
    assert document["payload"]["positive"] == ["1", "1"]
    assert document["payload"]["negative"] == ["2", "0"]
