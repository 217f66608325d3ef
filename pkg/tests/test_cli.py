import json
import subprocess
import sys

from treehopf import cli
from treehopf import linear as L


def run(argv, stdin=None, capsys=None):
    return cli.main(argv)


def test_seq_log_catalan(capsys):
    assert cli.main(["seq", "log-catalan", "--count", "7"]) == 0
    assert capsys.readouterr().out.strip() == "1 1 4 13 46 166 610"


def test_seq_json_schema(capsys):
    assert cli.main(["seq", "catalan", "--count", "3", "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["schema"] == 1
    assert payload["values"] == [1, 1, 2]


def test_coproduct(capsys):
    assert cli.main(["coproduct", "--kind", "coadd", "(x1 x2)"]) == 0
    out = capsys.readouterr().out.strip()
    assert L.parse_poly(out) == L.parse_poly(
        "(x1 x2) (x) 1 + 1 (x) (x1 x2) + x1 (x) x2 + x2 (x) x1")


def test_coproduct_kinds(capsys):
    for kind, arg in (("lr", "(o o)"), ("bf", "(o o)"), ("ck", "[o]")):
        assert cli.main(["coproduct", "--kind", kind, arg]) == 0
        out = capsys.readouterr().out.strip()
        assert L.parse_poly(out) == L.parse_poly(out)


def test_shuffle(capsys):
    assert cli.main(["shuffle", "x1", "x1"]) == 0
    assert capsys.readouterr().out.strip() == "2*(x1 x1)"


def test_derive(capsys):
    assert cli.main(["derive", "--var", "2", "(x1 ((x1 x2) x2))"]) == 0
    assert capsys.readouterr().out.strip() == "2*(x1 (x1 x2))"
    assert cli.main(["derive", "--var", "1", "--to", "2", "x1"]) == 0
    assert capsys.readouterr().out.strip() == "x2"


def test_dtree(capsys):
    assert cli.main(["dtree", "x1", "(x1 x1)"]) == 0
    assert capsys.readouterr().out.strip() == "2*x1"


def test_taylor(capsys):
    assert cli.main(["taylor", "--vars", "1", "(x1 (x1 x1))"]) == 0
    out = capsys.readouterr().out
    assert "[0]:" in out and "[3]: 1" in out


def test_prim_dim_json(capsys):
    rc = cli.main(["prim-dim", "--operad", "magw", "--degree", "3",
                   "--multilinear", "--format", "json"])
    assert rc == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["primDim"] == 14 and payload["match"]


def test_hw_dim(capsys):
    assert cli.main(["hw-dim", "--multidegree", "3,1"]) == 0
    assert capsys.readouterr().out.splitlines()[0] == "10"


def test_verify_jacobi(capsys):
    assert cli.main(["verify", "jacobi"]) == 0
    out = capsys.readouterr().out
    assert "PASS jacobi" in out


def test_verify_json(capsys):
    assert cli.main(["verify", "sequences", "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["schema"] == 1 and payload["ok"]


def test_iso(capsys):
    assert cli.main(["iso", "xi", "[o]"]) == 0
    assert capsys.readouterr().out.strip() == "(o o)"
    assert cli.main(["iso", "theta", "(o o)"]) == 0
    assert capsys.readouterr().out.strip() == "[o]"
    assert cli.main(["iso", "psi", "(o (o o))"]) == 0
    assert capsys.readouterr().out.strip() == "(o (o o)) - ((o o) o)"


def test_trees(capsys):
    assert cli.main(["trees", "4", "--binary", "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["count"] == 5


def test_usage_error_exit_2(capsys):
    assert cli.main(["coproduct", "--kind", "nope", "x1"]) == 2
    assert cli.main(["derive", "--var", "1", "(x1"]) == 2
    assert cli.main(["nonsense"]) == 2


def test_round_trip_of_printed_output(capsys):
    for argv in (["coproduct", "--kind", "lr", "((o o) o)"],
                 ["shuffle", "(x1 x2)", "x1"],
                 ["iso", "theta", "((o o) (o o))"]):
        assert cli.main(argv) == 0
        out = capsys.readouterr().out.strip()
        assert L.format_poly(L.parse_poly(out)) == out


def test_stdin_dash(monkeypatch, capsys):
    import io
    monkeypatch.setattr(sys, "stdin", io.StringIO("(x1 x1)"))
    assert cli.main(["derive", "--var", "1", "-"]) == 0
    assert capsys.readouterr().out.strip() == "2*x1"


def test_installed_entry_point():
    proc = subprocess.run(["treehopf", "seq", "catalan", "--count", "4"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.strip() == "1 1 2 5"
