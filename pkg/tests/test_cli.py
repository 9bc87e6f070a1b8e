import json

from click.testing import CliRunner

from schurify.cli import main, scalar_str
from schurify.rings import GradedSuperScalar


def run(*args):
    return CliRunner().invoke(main, list(args))


def test_scalar_str():
    assert scalar_str(GradedSuperScalar.zero()) == "0"
    assert scalar_str(GradedSuperScalar.one()) == "1"
    assert scalar_str(GradedSuperScalar.term(1, 1, 1)) == "q*pi"
    assert scalar_str(GradedSuperScalar.term(2, -1, 0)) == "2*q^-1"
    s = GradedSuperScalar.one() + GradedSuperScalar.term(3, 2, 1)
    assert scalar_str(s) == "1+3*q^2*pi"


def test_dim():
    res = run("dim", "--algebra", "zigzag:1", "-n", "2", "-d", "2")
    assert res.exit_code == 0
    assert json.loads(res.output) == {"rank": "202"}


def test_build_labels():
    res = run("build", "--algebra", "trivial", "-n", "2", "-d", "2")
    assert res.exit_code == 0
    out = json.loads(res.output)
    assert out["rank"] == "10"
    assert out["base_dim"] == "1"
    assert len(out["labels"]) == 2


def test_decomp_example_matrix():
    """The n = d = 1 zigzag matrix is [[1, 0], [q pi, 1]] with rows ordered by
    the label order."""
    res = run("decomp", "--algebra", "zigzag:1", "-n", "1", "-d", "1",
              "--field", "Q", "--method", "both", "--out", "csv")
    assert res.exit_code == 0
    import csv
    import io

    rows = list(csv.reader(io.StringIO(res.output)))
    entries = {(r[0], r[1]): r[2] for r in rows}
    assert entries[("[[1], []]", "[[1], []]")] == "1"
    assert entries[("[[1], []]", "[[], [1]]")] == "0"
    assert entries[("[[], [1]]", "[[1], []]")] == "q*pi"
    assert entries[("[[], [1]]", "[[], [1]]")] == "1"


def test_usage_error_exit_2():
    res = run("decomp", "--algebra", "zigzag:1", "-n", "1", "-d", "2", "--field", "Q")
    assert res.exit_code == 2
    res = run("decomp", "--algebra", "zigzag:1", "-n", "1", "-d", "1", "--field", "Z")
    assert res.exit_code == 2
    res = run("dim", "--algebra", "bogus:9")
    assert res.exit_code != 0


def test_char_command():
    res = run("char", "--algebra", "zigzag:1", "-n", "1", "-d", "1",
              "--label", "[[],[1]]", "--method", "both")
    assert res.exit_code == 0
    out = json.loads(res.output)
    assert {e["coeff"] for e in out} == {"1", "q*pi"}


def test_mul_command():
    left = json.dumps([{"b": "1", "r": 1, "s": 1}])
    res = run("mul", "--algebra", "trivial", "-n", "2", "-d", "1",
              "--left", left, "--right", left)
    assert res.exit_code == 0
    out = json.loads(res.output)
    assert out == [{"orbit": [{"b": "1", "r": 1, "s": 1}], "coeff": "1"}]


def test_config_file_and_determinism(tmp_path):
    cfg = tmp_path / "cfg.txt"
    cfg.write_text("algebra=zigzag:1\nn=1\nd=1\nfield=Q\n")
    a = run("--config", str(cfg), "decomp")
    b = run("--config", str(cfg), "decomp")
    assert a.exit_code == 0
    assert a.output == b.output


def test_output_file(tmp_path):
    out = tmp_path / "r.json"
    res = run("dim", "--algebra", "trivial", "-n", "2", "-d", "2",
              "--output", str(out))
    assert res.exit_code == 0
    assert json.loads(out.read_text()) == {"rank": "10"}


def test_verify_small():
    res = run("verify", "--algebra", "trivial", "-n", "2", "-d", "2", "--seed", "1")
    assert res.exit_code == 0
    assert "FAIL" not in res.output
    assert "decomposition" in res.output
