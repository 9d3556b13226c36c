import json

import pytest

from latwidth.cli import main


def write_polygon(path, vertices):
    path.write_text(json.dumps({"vertices": vertices}))
    return str(path)


@pytest.fixture
def ups1_file(tmp_path):
    return write_polygon(tmp_path / "ups1.json", [[0, 0], [1, 2], [2, 1]])


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_width_command(capsys, ups1_file):
    code, out, _ = run(capsys, "width", ups1_file)
    assert code == 0
    assert json.loads(out) == {
        "lw": 2,
        "ls_square": 2,
        "directions": [[1, 0], [0, 1], [1, -1]],
    }


def test_width_of_point_and_simplex(capsys, tmp_path):
    f = write_polygon(tmp_path / "pt.json", [[4, -2]])
    code, out, _ = run(capsys, "width", f)
    assert code == 0 and json.loads(out)["lw"] == 0

    f = write_polygon(tmp_path / "simplex.json", [[0, 0], [1, 0], [0, 1]])
    code, out, _ = run(capsys, "width", f)
    data = json.loads(out)
    assert data["lw"] == 1 and data["ls_square"] == 1


def test_lattice_size_command(capsys, tmp_path):
    f = write_polygon(tmp_path / "seg.json", [[0, 0], [5, 0]])
    code, out, _ = run(capsys, "lattice-size", f)
    data = json.loads(out)
    assert code == 0 and data["ls_square"] == 5
    assert set(data["witness"]) == {"a", "b"}


def test_minimal_and_classify_commands(capsys, tmp_path, ups1_file):
    square = write_polygon(tmp_path / "sq.json", [[0, 0], [1, 0], [1, 1], [0, 1]])
    code, out, _ = run(capsys, "minimal", square)
    assert code == 0
    assert json.loads(out) == {"minimal": False, "width": 1, "offending_vertex": [0, 0]}

    code, out, _ = run(capsys, "classify", square)
    assert json.loads(out)["minimal"] is False

    code, out, _ = run(capsys, "classify", ups1_file)
    data = json.loads(out)
    assert data["minimal"] and data["tag"] == "T1" and data["params"] == {"x": 1, "y": 1}

    simplex = write_polygon(tmp_path / "simplex.json", [[0, 0], [1, 0], [0, 1]])
    code, out, _ = run(capsys, "classify", simplex)
    data = json.loads(out)
    assert data["tag"] == "T1" and data["params"] == {"x": 0, "y": 0}


def test_enumerate_command(capsys):
    code, out, _ = run(capsys, "enumerate", "1")
    assert code == 0
    data = json.loads(out)
    assert len(data) == 1
    entry = data[0]
    assert set(entry) == {"key", "tag", "d", "params", "point_count", "doubled_area", "vertices"}
    assert entry["tag"] == "T1" and entry["point_count"] == 3


def test_enumerate_with_oracle(capsys):
    code, out, _ = run(capsys, "enumerate", "2", "--oracle")
    assert code == 0
    data = json.loads(out)
    assert data["diff"] == {"missing_from_enumerator": [], "extra_in_enumerator": []}
    assert len(data["classes"]) == len(data["oracle"]) == 4


def test_enumerate_output_file_and_determinism(capsys, tmp_path):
    out1 = tmp_path / "a.json"
    out2 = tmp_path / "b.json"
    assert main(["enumerate", "3", "-o", str(out1)]) == 0
    assert main(["enumerate", "3", "--jobs", "2", "-o", str(out2)]) == 0
    capsys.readouterr()
    assert out1.read_bytes() == out2.read_bytes()


def test_verify_command(capsys):
    code, out, _ = run(capsys, "verify", "1", "2", "--oracle")
    assert code == 0
    lines = out.strip().splitlines()
    assert "d=1 point-bound not-applicable" in lines
    assert all(" FAIL " not in line for line in lines)
    assert any(line.startswith("d=2 point-bound PASS") for line in lines)
    assert any(line.startswith("d=2 oracle-equivalence PASS") for line in lines)


def test_verify_writes_reports(capsys, tmp_path):
    report = tmp_path / "reports.json"
    assert main(["verify", "2", "-o", str(report)]) == 0
    capsys.readouterr()
    data = json.loads(report.read_text())
    kinds = {(entry["kind"], entry["d"]) for entry in data}
    assert kinds == {("volume-bound", 2), ("point-bound", 2)}
    assert all(entry["holds"] for entry in data)


def test_plot_command(capsys, tmp_path):
    simplex = write_polygon(tmp_path / "t.json", [[0, 0], [3, 0], [0, 3]])
    code, out, _ = run(capsys, "plot", simplex)
    assert code == 0
    assert out.count('class="latpt"') == 10
    assert 'class="square"' in out

    code2, out2, _ = run(capsys, "plot", simplex)
    assert out == out2  # byte-deterministic

    code, out, _ = run(capsys, "plot", simplex, "--hexagon", "2")
    assert code == 0 and 'stroke-dasharray="6 3"' in out


def test_plot_hexagon_range(capsys, tmp_path):
    simplex = write_polygon(tmp_path / "t.json", [[0, 0], [3, 0], [0, 3]])
    code, _, err = run(capsys, "plot", simplex, "--hexagon", "9")
    assert code == 2 and "hexagon" in err


def test_exit_codes_for_bad_input(capsys, tmp_path):
    missing = tmp_path / "nope.json"
    code, _, err = run(capsys, "width", str(missing))
    assert code == 2

    garbage = tmp_path / "garbage.json"
    garbage.write_text("not json")
    code, _, err = run(capsys, "width", str(garbage))
    assert code == 2

    huge = write_polygon(tmp_path / "huge.json", [[0, 0], [2_000_000, 1]])
    code, _, err = run(capsys, "width", huge)
    assert code == 2 and "magnitude" in err


def test_oracle_needs_small_width(capsys):
    code, _, err = run(capsys, "enumerate", "5", "--oracle")
    assert code == 2
    code, _, err = run(capsys, "verify", "5", "--oracle")
    assert code == 2


def test_usage_error_exit_code(capsys):
    assert main(["enumerate"]) == 2
    capsys.readouterr()


def test_round_trip_canonical_cycle(capsys, tmp_path):
    f = write_polygon(tmp_path / "p.json", [[2, 1], [0, 0], [1, 2], [1, 1], [0, 0]])
    code, out, _ = run(capsys, "width", f)
    assert code == 0  # reader hulls arbitrary lists, duplicates included
