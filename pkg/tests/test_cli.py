import json
import subprocess
import sys

import pytest

from knotrep.cli import EXIT_BUG, EXIT_INCOMPLETE, EXIT_OK, EXIT_USAGE, run_cli


def run(capsys, *argv):
    code = run_cli(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_colorings(capsys):
    code, out, _ = run(capsys, "colorings", "--knot", "trefoil.braid", "--n", "3")
    assert (code, out.strip()) == (EXIT_OK, "9")


def test_compare_unknot_with_itself(capsys):
    code, out, _ = run(capsys, "compare", "--a", "unknot.pd", "--b", "unknot.pd",
                       "--model", "su2")
    assert code == EXIT_OK
    assert "combined: ConsistentBothOrEqual" in out


def test_unsupported_model(capsys):
    code, _, err = run(capsys, "dim", "--knot", "trefoil.braid", "--model", "so5")
    assert code == EXIT_USAGE and "SO(5)" in err


@pytest.mark.parametrize("argv", [
    [], ["frobnicate"], ["colorings", "--knot", "trefoil.braid"],
    ["colorings", "--knot", "no-such-knot", "--n", "3"],
    ["compare", "--a", "unknot", "--b", "unknot", "--gauge", "fix2"],
])
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == EXIT_USAGE


def test_parse_error_in_file(capsys, tmp_path):
    f = tmp_path / "bad.dt"
    f.write_text("4 6 3\n")
    code, _, err = run(capsys, "parse", "--knot", str(f))
    assert code == EXIT_USAGE and "odd" in err


def test_format_sniffing(capsys, tmp_path):
    f = tmp_path / "knot.txt"
    f.write_text("strands=2\n1 1 1\n")
    code, out, _ = run(capsys, "colorings", "--knot", str(f), "--n", "3")
    assert out.strip() == "9"
    g = tmp_path / "knot2.txt"
    g.write_text("4, 6, 2\n")
    assert run(capsys, "colorings", "--knot", str(g), "--n", "3")[1].strip() == "9"
    code, out, _ = run(capsys, "colorings", "--knot", str(g), "--format", "dt", "--n", "3")
    assert out.strip() == "9"


def test_parse_json(capsys):
    code, out, _ = run(capsys, "parse", "--knot", "figure8.dt", "--json")
    data = json.loads(out)
    assert code == EXIT_OK and data["schema"] == 1 and len(data["crossings"]) == 4


def test_wirtinger(capsys):
    code, out, _ = run(capsys, "wirtinger", "--knot", "trefoil.dt", "--json")
    data = json.loads(out)
    assert (data["generators"], data["relators"]) == (3, 2)
    assert data["abelianization"] == [1, []]
    code, out, _ = run(capsys, "wirtinger", "--knot", "trefoil.dt", "--simplify", "--json")
    assert json.loads(out)["generators"] == 2


def test_homs(capsys):
    assert run(capsys, "homs", "--knot", "trefoil.pd", "--group", "S3")[1].strip() == "12"
    assert run(capsys, "homs", "--knot", "figure8.braid", "--group", "D5")[1].strip() == "30"


def test_homs_custom_group(capsys, tmp_path):
    f = tmp_path / "s3.txt"
    f.write_text("(1 2)\n(1 2 3)\n")
    assert run(capsys, "homs", "--knot", "trefoil", "--group-file", str(f))[1].strip() == "12"


def test_homs_budget_is_incomplete(capsys):
    code, out, _ = run(capsys, "homs", "--knot", "figure8.dt", "--group", "S4",
                       "--search-budget", "10")
    assert code == EXIT_INCOMPLETE and out.startswith("incomplete")


def test_ideal_dump(capsys):
    code, out, _ = run(capsys, "ideal", "--knot", "trefoil", "--model", "su2", "--gauge", "fix1")
    header, vars_line = out.splitlines()[:2]
    assert json.loads(header)["free_variables"] == 6
    assert vars_line == "vars: a0 b0 c0 d0 a1 b1 c1 d1"


def test_dim_json(capsys):
    code, out, _ = run(capsys, "dim", "--knot", "unknot", "--model", "so3", "--json")
    data = json.loads(out)
    assert code == EXIT_OK and data["dimension_list"] == [3]


def test_dim_budget_exit(capsys):
    code, out, _ = run(capsys, "dim", "--knot", "trefoil", "--model", "so3", "--budget-deg", "2")
    assert code == EXIT_INCOMPLETE and "incomplete" in out


def test_compare_json_deterministic(capsys):
    argv = ["compare", "--a", "unknot", "--b", "trefoil", "--model", "su2,so2",
            "--gauge", "fix1", "--json"]
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first == second
    data = json.loads(first[1])
    assert data["schema"] == 1 and len(data["entries"]) == 2


def test_lemma_demo(capsys):
    code, out, _ = run(capsys, "lemma-demo", "--json")
    data = json.loads(out)
    assert data["hyperbola"]["closure_projection"] == "vars: y0\n"
    assert data["hyperbola"]["closure_difference"] == "vars: y0\n"
    assert data["dimension_lemma"][2]["diagnostic"] == "irreducibility assertion violated"
    assert data["ideal_equal"]["(x) vs (y)"] == "Incomparable"


def test_invariant_violation_exit(capsys, monkeypatch):
    import knotrep.cli as cli

    monkeypatch.setattr(cli, "abelianization", lambda p: (2, []))
    assert run(capsys, "wirtinger", "--knot", "trefoil")[0] == EXIT_BUG


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "knotrep", "colorings", "--knot",
                          "figure8.braid", "--n", "5"], capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.strip() == "25"
