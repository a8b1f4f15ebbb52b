import json


from ceorbits import cli


def run(capsys, argv):
    code = cli.main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_orbits_a3(capsys):
    code, out, err = run(capsys, ["orbits", "A3", "--levi", "1,2"])
    assert code == 0
    payload = json.loads(out)
    assert payload["schema_version"] == 1
    assert payload["request"]["command"] == "orbits"
    result = payload["result"]
    assert result["orbit_count"] == 4
    assert result["modality"] == 2
    assert result["finite"] is False
    piys = sorted(tuple(o["pi_y"]) for o in result["orbits"])
    assert piys == [(), (1, 2, 3), (2, 3), (3,)]
    rec = next(o for o in result["orbits"] if o["pi_y"] == [3])
    assert rec["d_g"] == 2 and rec["boundary"] == [2]
    assert set(rec["stab"]) == {"unipotent_dim", "levi_nodes", "torus_dim"}


def test_output_is_byte_identical(capsys):
    _, out1, _ = run(capsys, ["orbits", "B3", "--levi", "1,3"])
    _, out2, _ = run(capsys, ["orbits", "B3", "--levi", "1,3"])
    assert out1 == out2
    _, t1, _ = run(capsys, ["tangent", "F4", "--levi", "1,2,3", "--format", "table"])
    _, t2, _ = run(capsys, ["tangent", "F4", "--levi", "1,2,3", "--format", "table"])
    assert t1 == t2


def test_tangent_f4(capsys):
    code, out, _ = run(capsys, ["tangent", "F4", "--levi", "1,2,3"])
    assert code == 0
    result = json.loads(out)["result"]
    assert result["total_dim"] == 2574
    assert result["dim_ce"] == 37


def test_tangent_componentwise(capsys):
    code, out, _ = run(capsys, ["tangent", "A2xA1", "--levi", "1"])
    assert code == 0
    result = json.loads(out)["result"]
    assert [c["component"] for c in result["components"]] == ["A2", "A1"]
    assert result["total_dim"] == sum(c["total_dim"] for c in result["components"])
    code, _, err = run(capsys, ["tangent", "A2xA1", "--levi", "1,2"])
    assert code == 2
    assert "full Levi" in err


def test_smooth_a1_empty_levi(capsys):
    code, out, _ = run(capsys, ["smooth", "A1", "--levi", "empty"])
    assert code == 0
    assert json.loads(out)["result"]["smooth"] is True


def test_modality_and_finite(capsys):
    code, out, _ = run(capsys, ["modality", "C4", "--levi", "1,2,3"])
    assert json.loads(out)["result"]["modality"] == 4
    code, out, _ = run(capsys, ["finite", "A2", "--levi", "1"])
    assert json.loads(out)["result"]["finite"] is False
    code, out, _ = run(capsys, ["finite", "A2", "--levi", "full"])
    assert json.loads(out)["result"]["finite"] is True


def test_rootinfo(capsys):
    code, out, _ = run(capsys, ["rootinfo", "G2"])
    result = json.loads(out)["result"]
    assert result["positive_root_count"] == 6
    assert result["singularity"] == 2
    assert result["fundamental_dims"] == {"1": 7, "2": 14}


def test_general_with_crosscheck(capsys):
    code, out, _ = run(
        capsys,
        ["general", "A2", "--levi", "1", "--generators", "1,0;0,1", "--crosscheck"],
    )
    assert code == 0
    result = json.loads(out)["result"]
    assert result["orbit_count"] == 3
    assert result["crosscheck"]["matches"] is True
    assert all(o["torus_saturated"] for o in result["orbits"])
    assert result["ambient_summands"] == [
        {"weight": [1, 0], "g_dim": 3, "l_dim": 2, "hom_dim": 6},
        {"weight": [0, 1], "g_dim": 3, "l_dim": 1, "hom_dim": 3},
    ]
    assert result["ambient_dim"] == 9
    assert sorted(map(tuple, result["sigma_plus"]["rays"])) == [(0, 1), (1, 0)]


def test_invalid_inputs_exit_2(capsys):
    assert run(capsys, ["orbits", "Q7"])[0] == 2
    assert run(capsys, ["orbits", "A3", "--levi", "1,9"])[0] == 2
    assert run(capsys, ["general", "A2", "--levi", "1", "--generators", "1,0,0"])[0] == 2
    assert run(capsys, ["general", "A2", "--levi", "1", "--generators", "-1,0"])[0] == 2
    assert run(capsys, ["tangent", "A2", "--levi", "full"])[0] == 2
    assert run(capsys, [])[0] == 2


def test_table_format(capsys):
    code, out, _ = run(capsys, ["modality", "A3", "--levi", "1,2", "--format", "table"])
    assert code == 0
    assert "modality: 2" in out


def test_presets(capsys, tmp_path, monkeypatch):
    presets = {"mat43": {"command": "orbits", "group": "A3", "levi": "1,2"}}
    path = tmp_path / "presets.json"
    path.write_text(json.dumps(presets))
    monkeypatch.setenv(cli.PRESETS_ENV, str(path))
    code, out, _ = run(capsys, ["--preset", "mat43"])
    assert code == 0
    assert json.loads(out)["result"]["modality"] == 2
    code, _, err = run(capsys, ["--preset", "nope"])
    assert code == 2
    monkeypatch.delenv(cli.PRESETS_ENV)
    assert run(capsys, ["--preset", "mat43"])[0] == 2
