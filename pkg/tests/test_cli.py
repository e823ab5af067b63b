import io
import json

from seifcert.cli import run


def _json_out(argv):
    buf = io.StringIO()
    code = run(argv, out=buf)
    return code, json.loads(buf.getvalue())


def test_lspace_command():
    code, rep = _json_out(["lspace", "-1;5/12,1/3,1/3", "--json"])
    assert code == 0
    assert rep["verdict"] is False
    assert rep["h1"] == 9 and rep["e"] == "1/12"
    assert rep["witnesses"]["plus"] == [2, 1]
    assert rep["schema_version"] == 1

    code, rep = _json_out(["lspace", "-1;3/4,1/5,1/9", "--json"])
    assert code == 0 and rep["verdict"] is True


def test_dinv_s3():
    code, rep = _json_out(["dinv", "-1;1/2", "--json"])
    assert code == 0
    assert [row["d"] for row in rep["table"]] == ["0"]


def test_dinv_normalization_echo():
    code, rep = _json_out(["dinv", "0;-1/2", "--json"])
    assert code == 0 and rep["normalized"] == "-1;1/2"


def test_critical_4():
    code, rep = _json_out(["critical", "4", "--json"])
    assert code == 0
    assert rep["multisets_equal"] is True
    assert rep["spin_d"] == "-7/2"
    assert rep["nonzero_count"] >= 1
    assert all(r["d3"] == "-25/22" for r in rep["nonzero"])
    assert rep["nonzero_with_spin_label"] is False


def test_tight_exit_codes():
    buf = io.StringIO()
    assert run(["tight", "-1;1/4,1/4,1/4", "--json"], out=buf) == 3  # e <= 0
    buf = io.StringIO()
    assert run(["tight", "-2;1/2,1/2,1/2", "--json"], out=buf) == 4  # e0 != -1
    code, rep = _json_out(["tight", "-1;1/2,1/2,1/2", "--json", "--list-all"])
    assert code == 0 and rep["candidates"] == 8 and len(rep["certificates"]) == 8


def test_parse_error_exit_code():
    buf = io.StringIO()
    assert run(["lspace", "11;;"], out=buf) == 2
    assert run(["nonsense"], out=buf) == 2


def test_unsupported_exit_code():
    buf = io.StringIO()
    assert run(["dinv", "-1;1/2,1/2"], out=buf) == 4  # e = 0
    assert run(["torus", "4", "6", "11"], out=buf) == 4


def test_d3_command(tmp_path):
    path = tmp_path / "diagram.txt"
    path.write_text(
        "# two +1 pushoffs and a -1 surgery on a twice-stabilized unknot\n"
        "-1 0 1 : 0 -1 -1\n"
        "-1 0 1 : -1 0 -1\n"
        "-3 2 -1 : -1 -1 -4\n",
        encoding="ascii",
    )
    code, rep = _json_out(["d3", str(path), "--json"])
    assert code == 0 and rep["q"] == 2 and rep["components"] == 3

    empty = tmp_path / "empty.txt"
    empty.write_text("", encoding="ascii")
    code, rep = _json_out(["d3", str(empty), "--json"])
    assert code == 0 and rep["d3"] == "0"


def test_alexander_and_torus_commands():
    code, rep = _json_out(["alexander", "3", "4", "--json"])
    assert code == 0 and rep["coefficients"] == [1, 0, -1, 1] and rep["at_one"] == 1
    code, rep = _json_out(["torus", "4", "5", "11", "--json"])
    assert code == 0 and rep["seifert"] == "-1;3/4,1/5,1/9"
    assert {row["k"]: row["d"] for row in rep["d_table_torsion_route"]}[2] == "-25/22"


def test_classify_command():
    code, rep = _json_out(["classify", "-1;3/4,1/5,1/9", "--json"])
    assert code == 0
    assert rep["exists_nonzero"] is True
    assert rep["nonzero_with_spin_label"] is False
    code, rep = _json_out(["classify", "0;1/2,1/3,1/7", "--json"])
    assert code == 0 and rep["all_contact_structures_planar"] is True


def test_schema_flag():
    buf = io.StringIO()
    assert run(["--schema"], out=buf) == 0
    schema = json.loads(buf.getvalue())
    assert set(schema["commands"]) == {
        "lspace", "dinv", "tight", "d3", "alexander", "torus", "critical", "classify",
    }


def test_batch_mode_and_determinism(tmp_path):
    batch = tmp_path / "batch.txt"
    batch.write_text(
        "lspace -1;5/12,1/3,1/3 --json\n"
        "# comment\n"
        "alexander 2 3 --json\n",
        encoding="ascii",
    )
    buf1, buf2 = io.StringIO(), io.StringIO()
    assert run(["--batch", str(batch)], out=buf1) == 0
    assert run(["--batch", str(batch)], out=buf2) == 0
    assert buf1.getvalue() == buf2.getvalue()
    assert buf1.getvalue().count("schema_version") == 2
