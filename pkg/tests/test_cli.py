from __future__ import annotations

import io
import json
import subprocess
import sys

import pytest

from distspec.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


def test_spectrum_json():
    code, text = run("spectrum", "Bw")  # K3
    assert code == 0
    data = json.loads(text)
    assert data[0]["graph6"] == "Bw"
    assert data[0]["spectrum"] == [{"root": "2", "approx": 2.0, "mult": 1}, {"root": "-1", "approx": -1.0, "mult": 2}]


def test_spectrum_text_and_disconnected():
    code, text = run("spectrum", "--format", "text", "Bw", "A?")
    assert code == 1
    lines = text.splitlines()
    assert lines[0] == "Bw\t2.0000 -1.0000^2"
    assert lines[1].startswith("A?\terror")


def test_classify():
    code, text = run("classify", "Ch")  # P4
    assert code == 0
    row = json.loads(text)[0]
    assert row["third_largest_le_minus1"] is True
    # P4 is every J family at [1,1,1,1]; the lowest id is reported first
    assert row["descriptor"] == "J1[1,1,1,1]"
    assert "J7[1,1,1,1]" in row["matches"]
    assert row["p4_form"] == "P4[K1,K1,K1,K1]"


def test_classify_unnamed_p4_pattern_reports_p4_form():
    from distspec.graph import complete, edgeless, glex_product, path
    from distspec.graph6 import write_graph6

    g6 = write_graph6(glex_product(path(4), [complete(2), edgeless(2), edgeless(2), complete(2)]))
    code, text = run("classify", g6)
    row = json.loads(text)[0]
    assert row["descriptor"] is None and row["p4_form"] == "P4[K2,K2^c,K2^c,K2]"


def test_build():
    code, text = run("build", "--format", "text", "I1[4]", "I5[2,3]")
    assert code == 0 and text.splitlines()[0] == "C~"


def test_input_file(tmp_path):
    f = tmp_path / "g.g6"
    f.write_text("Bw\nCh\n")
    code, text = run("classify", "--input", str(f))
    assert code == 0 and len(json.loads(text)) == 2


@pytest.mark.parametrize(
    "argv",
    [
        ["spectrum", "A!"],
        ["spectrum"],
        ["build", "J9[1,1,1,1]"],
        ["census", "--order", "7"],
        ["classify", "--input", "/nonexistent/file.g6"],
        ["verify-tables", "--max-param", "1"],
    ],
)
def test_usage_errors_exit_2(argv, capsys):
    code, _ = run(*argv)
    assert code == 2
    assert capsys.readouterr().err.startswith("distspec:")


def test_argparse_errors_exit_2():
    with pytest.raises(SystemExit) as info:
        main(["nonsense"], io.StringIO())
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main(["census", "--jobs", "0"], io.StringIO())
    assert info.value.code == 2


def test_census_exit_codes():
    code, text = run("census", "--order", "5", "--format", "text")
    assert code == 1  # K_{1,1,3} contradicts the verbatim n-3 statement
    assert text.splitlines()[-1] == "FAIL"
    code, text = run("census", "--order", "5", "--corrected", "--format", "text")
    assert code == 0 and text.splitlines()[-1] == "PASS"


def test_census_deterministic_output():
    a = run("census", "--order", "4", "--order", "5")
    b = run("census", "--order", "4", "--order", "5")
    assert a == b
    assert "timing" not in json.loads(a[1])


def test_cospectral():
    code, text = run("cospectral", "J7[1,1,3,9]", "J7[1,9,1,3]")
    assert code == 0
    assert json.loads(text)["cospectral"] == [{"order": 14, "pair": ["J7[1,1,3,9]", "J7[1,9,1,3]"]}]


def test_verify_tables_reports_a16():
    code, text = run("verify-tables", "--max-param", "2", "--format", "text")
    assert code == 1
    assert "table1: 50/51 rows pass" in text
    assert "table2: 16/16 rows pass" in text


def test_module_entry_point_byte_identical():
    cmd = [sys.executable, "-m", "distspec", "spectrum", "Ch", "D~{"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and b"graph6" in a
