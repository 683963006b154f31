import json
import subprocess
import sys

import pytest

from partition_lab.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--class", "S3", "--n", "10")
    assert code == 0
    assert out.splitlines() == ["10", "9,1", "8,2", "7,3", "6,4", "6,3,1", "5,3,2", "4,3,3",
                                "3,3,3,1"]
    assert run(capsys, "enumerate", "--class", "S3", "--n", "0")[1] == "()\n"


def test_count(capsys):
    code, out, _ = run(capsys, "count", "--family", "A", "--k", "5", "--m", "2", "--n", "12",
                       "--verbose")
    assert code == 0 and out.splitlines() == ["2", "10,2", "6,5,1"]
    assert run(capsys, "count", "--family", "A", "--k", "5", "--m", "1", "--n", "12")[1] == "2\n"
    code, out, _ = run(capsys, "count", "--family", "DII", "--m", "1", "--n", "17",
                       "--i", "1", "--j", "1")
    assert out == "7\n"


def test_verify(capsys, tmp_path):
    code, out, _ = run(capsys, "verify", "--id", "gfDSkeva", "--k", "3", "--order", "12")
    assert code == 0 and out.strip() == "gfDSkeva[k=3] order=12 match"
    path = tmp_path / "r.json"
    run(capsys, "verify", "--id", "gf3id", "--order", "12", "--json", str(path))
    data = json.loads(path.read_text())
    assert data["schemaVersion"] == 1 and data["status"] == "match"
    assert data["firstDiscrepancy"] is None


def test_verify_all_subset(capsys, tmp_path, monkeypatch):
    path = tmp_path / "all.json"
    monkeypatch.setenv("PARTITION_LAB_THREADS", "1")
    code, out, _ = run(capsys, "verify-all", "--order-scale", "0.5", "--only", "gfE", "boulet",
                       "--json", str(path))
    assert code == 0
    data = json.loads(path.read_text())
    ids = [r["id"] for r in data["reports"]]
    assert ids == sorted(ids) and set(ids) == {"boulet-phi", "boulet-psi", "gfE2", "gfE2b",
                                               "gfE3", "gfE3b", "gfEk"}
    assert data["matched"] == data["cases"]


def test_expand_is_deterministic(capsys):
    a = run(capsys, "expand", "--id", "boulet-psi", "--order", "4")[1]
    b = run(capsys, "expand", "--id", "boulet-psi", "--order", "4")[1]
    assert a == b == "1 + a + a*b + a^2*b + a*b*c + a^2*b^2 + a^2*b*c\n"


def test_render(capsys):
    code, out, _ = run(capsys, "render", "--partition", "10,10,7,5,2", "--k", "3")
    lines = out.splitlines()
    assert lines[0] == "a b c a b c a b c a" and lines[-1] == "weight: a^8*b^6*c^5*d^6*e^5*f^4"


def test_bijection_report(capsys):
    code, out, _ = run(capsys, "bijection-test", "--map", "psi_k", "--k", "3", "--max-size", "10")
    data = json.loads(out)
    assert code == 0 and data["failures"] == [] and data["range"] == [0, 10]
    assert data["casesChecked"] > 0 and data["schemaVersion"] == 1


@pytest.mark.parametrize("argv", [
    ["verify", "--id", "no-such-id"],
    ["verify", "--id", "gfEk", "--k", "2", "--variant", "1"],
    ["enumerate", "--class", "Q", "--n", "3"],
    ["count", "--family", "Z", "--n", "3"],
    ["bijection-test", "--map", "frob", "--max-size", "3"],
    ["render", "--partition", "3,x"],
    ["frobnicate"],
    [],
])
def test_usage_errors_exit_2(capsys, argv):
    assert main(argv) == 2


def test_unknown_id_lists_known(capsys):
    _, _, err = run(capsys, "verify", "--id", "no-such-id")
    assert "known ids" in err and "gf3id" in err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "partition_lab", "count", "--family", "C",
                           "--m", "1", "--n", "10"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip().isdigit()


def test_verification_failure_exits_1(capsys, monkeypatch):
    from partition_lab.catalog import REGISTRY
    from partition_lab.catalog.core import Entry
    from partition_lab.series import VariableContext

    ctx = VariableContext.graded(["q"])

    def factory():
        return ctx, lambda o: ctx.one(o), lambda o: ctx.one(o) + ctx.var("q", o)
    monkeypatch.setitem(REGISTRY, "broken", Entry("broken", "", ({},), factory, 4, "series"))
    code, out, _ = run(capsys, "verify", "--id", "broken")
    assert code == 1 and "mismatch at q: lhs=0 rhs=1" in out


def test_verify_all_parallel_matches_serial(capsys, monkeypatch):
    outputs = []
    for threads in ("1", "2"):
        monkeypatch.setenv("PARTITION_LAB_THREADS", threads)
        code, out, _ = run(capsys, "verify-all", "--order-scale", "0.5", "--only", "gfE", "iz")
        assert code == 0
        outputs.append(out)
    assert outputs[0] == outputs[1]
