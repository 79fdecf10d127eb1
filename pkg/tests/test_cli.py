import io
import json
import subprocess
import sys

import pytest

from bpa_integrity import cli, read_sweep


def run(*argv):
    out = io.StringIO()
    code = cli.main([str(a) for a in argv], out=out)
    return code, out.getvalue()


@pytest.fixture
def bad_sum(tmp_path):
    p = tmp_path / "half.json"
    p.write_text('{"frame": ["A"], "masses": [{"focal": ["A"], "mass": 0.5}]}')
    return p


@pytest.fixture
def malformed(tmp_path):
    p = tmp_path / "broken.json"
    p.write_text('{"frame": ["A"], "masses": [')
    return p


def test_validate(ref_dir, bad_sum, malformed, capsys):
    assert run("validate", ref_dir / "x.json")[0] == cli.EXIT_OK
    code, text = run("validate", bad_sum)
    assert code == cli.EXIT_INVALID
    assert "sum axiom" in text
    code, _ = run("validate", malformed)
    assert code == cli.EXIT_PARSE
    assert "parse error" in capsys.readouterr().err


def test_validate_epsilon_flag(bad_sum):
    assert run("validate", bad_sum, "--epsilon-sum", "0.6")[0] == cli.EXIT_OK


def test_missing_file_is_io_error(tmp_path):
    assert run("ui", tmp_path / "nope.json")[0] == cli.EXIT_IO


def test_ui_human_and_json(ref_dir):
    code, text = run("ui", ref_dir / "x.json")
    assert code == 0
    assert "0.405465" in text
    code, text = run("ui", ref_dir / "x2.json", "--format", "json")
    doc = json.loads(text)
    assert doc["ui"] == pytest.approx(0.0566330122651325, abs=1e-13)
    assert set(doc) == {
        "file", "ui", "signed_apen", "phi_m", "phi_m_plus_1", "m", "r", "std", "n_nodes", "slide", "flags",
    }


def test_ui_too_few_nodes(ref_dir, capsys):
    code, _ = run("ui", ref_dir / "single.json")
    assert code == cli.EXIT_TOO_FEW_NODES
    assert "at least 3" in capsys.readouterr().err


def test_ui_invalid(bad_sum):
    assert run("ui", bad_sum)[0] == cli.EXIT_INVALID


def test_override_notice(ref_dir, capsys):
    run("ui", ref_dir / "x.json", "--r-factor", "0.3")
    assert "non-normative" in capsys.readouterr().err
    run("ui", ref_dir / "x.json")
    assert "non-normative" not in capsys.readouterr().err


def test_apen(tmp_path):
    code, text = run("apen", "0.55,0.25,0.2,0", "--format", "json")
    doc = json.loads(text)
    assert code == 0 and doc["apen"] == pytest.approx(0.405465108108164, abs=1e-12)
    assert doc["std"] == pytest.approx(0.19685019685029528, abs=1e-15)
    code, text = run("apen", "0.3,0.3,0.3,0.3", "--format", "json")
    doc = json.loads(text)
    assert code == 0 and doc["apen"] == 0.0 and doc["flags"] == ["constant_sequence"]
    assert run("apen", "0.5,0.2")[0] == cli.EXIT_COMPUTE
    assert run("apen", "0.5,abc")[0] == cli.EXIT_PARSE
    seq = tmp_path / "u.txt"
    seq.write_text("0.55 0.25\n0.2 0\n")
    assert "0.405465" in run("apen", seq)[1]
    assert run("apen", "0.55,0.25,0.2,0", "--r", "0")[0] == cli.EXIT_COMPUTE


def test_slide(ref_dir):
    assert run("slide", ref_dir / "x.json")[1].strip() == "0.55,0.25,0.2,0"
    assert run("slide", ref_dir / "x2.json")[1].strip() == "0.7,0.1,0.1,0.1"
    assert run("slide", ref_dir / "single.json")[1].strip() == "1,0"


def test_sweep(tmp_path):
    code, text = run("sweep", "--resolution", "1")
    assert code == 0 and len(text.splitlines()) == 4
    out = tmp_path / "s.csv"
    assert run("sweep", "--resolution", "100", "--output", out)[0] == 0
    recs = read_sweep(out)
    assert len(recs) == 5151
    at = {(r.x, r.y): r.ui for r in recs}
    assert at[(0.2, 0.25)] == pytest.approx(0.405465108108164, abs=1e-12)
    assert run("sweep", "--resolution", "0")[0] == cli.EXIT_USAGE


def test_compare(ref_dir):
    files = [ref_dir / n for n in ("x.json", "x2.json", "x_actual.json")]
    code, text = run("compare", *files, "--format", "json")
    assert code == 0
    ranked = [r["file"] for r in json.loads(text)["results"]]
    assert ranked[-1].endswith("x.json")
    code, text = run("compare", files[0], files[0], "--format", "json")
    rows = json.loads(text)["results"]
    assert len(rows) == 2 and rows[0] == rows[1]
    assert run("compare", files[0])[0] == cli.EXIT_USAGE


def test_compare_reports_failures_inline(ref_dir):
    code, text = run("compare", ref_dir / "x.json", ref_dir / "single.json")
    assert code == cli.EXIT_TOO_FEW_NODES
    assert "single.json" in text and "x.json" in text


def test_machine_floats_17_digits(ref_dir):
    _, text = run("slide", ref_dir / "x.json", "--format", "json")
    assert "0.55000000000000004" in text
    assert json.loads(text)["slide"] == [0.55, 0.25, 0.2, 0.0]


@pytest.mark.parametrize(
    "name, expected",
    [("x.json", 0.4054651081081645), ("x1.json", 0.0566330122651324), ("x2.json", 0.0566330122651324),
     ("x2_table.json", 0.0566330122651324), ("x_actual.json", 0.07125158830764833)],
)
def test_reference_files(ref_dir, name, expected):
    doc = json.loads(run("ui", ref_dir / name, "--format", "json")[1])
    assert doc["ui"] == pytest.approx(expected, abs=1e-12)


def test_module_entry_point(ref_dir):
    proc = subprocess.run(
        [sys.executable, "-m", "bpa_integrity", "ui", str(ref_dir / "single.json")],
        capture_output=True, text=True,
    )
    assert proc.returncode == cli.EXIT_TOO_FEW_NODES
