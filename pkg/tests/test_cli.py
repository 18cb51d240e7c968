import json
import shutil
import subprocess
import sys

import pytest

from hopfsmash import formats
from hopfsmash.catalog import algebra_entry, h8, nichols8_minus_id_action
from hopfsmash.cli import EXIT_CHECK_FAILED, EXIT_INPUT_ERROR, EXIT_OK, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, "--json", *argv)
    return code, json.loads(out)


@pytest.fixture
def broken(tmp_path):
    data = formats.algebra_to_dict(algebra_entry("kC2").algebra)
    data["antipode"] = [{"i": 0, "j": 0, "c": "1"}, {"i": 0, "j": 1, "c": "1"}]
    p = tmp_path / "broken.json"
    p.write_text(json.dumps(data))
    return p


class TestVerify:
    def test_h8(self, capsys):
        code, out, err = run(capsys, "verify", "catalog:h8")
        assert code == EXIT_OK and "FAIL" not in out and err == ""

    def test_nichols8_warns(self, capsys):
        code, out, err = run(capsys, "verify", "catalog:nichols8")
        assert code == EXIT_OK and "S^2 != id" in err

    def test_broken_file(self, capsys, broken):
        code, report = run_json(capsys, "verify", str(broken))
        assert code == EXIT_CHECK_FAILED
        assert [c["name"] for c in report["checks"] if not c["passed"]] == ["antipode"]
        assert report["inputs"][0]["sha256"] == formats.content_hash(broken.read_bytes())

    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "verify", "/no/such/file.json")
        assert code == EXIT_INPUT_ERROR and "cannot read" in err

    def test_garbage_file(self, capsys, tmp_path):
        p = tmp_path / "x.json"
        p.write_text("[1, 2")
        assert run(capsys, "verify", str(p))[0] == EXIT_INPUT_ERROR

    def test_unknown_catalog(self, capsys):
        assert run(capsys, "verify", "catalog:q8")[0] == EXIT_INPUT_ERROR


class TestExponent:
    def test_kC4(self, capsys):
        code, report = run_json(capsys, "exponent", "catalog:kC4")
        assert code == EXIT_OK and report["results"]["exponent"] == "Found(4)"

    def test_nichols8_bound(self, capsys):
        code, out, _ = run(capsys, "exponent", "catalog:nichols8", "--bound", "100")
        assert code == EXIT_OK and "NotFoundUpTo(100)" in out

    def test_inversion(self, capsys):
        code, out, _ = run(capsys, "exponent", "catalog:kC3", "--aut", "inversion")
        assert "Found(2)" in out

    def test_automorphism_file(self, capsys, tmp_path):
        e = h8()
        p = tmp_path / "tau.json"
        p.write_text(formats.dumps_automorphism(e.automorphisms["tau4"], "catalog:h8"))
        code, report = run_json(capsys, "exponent", "catalog:h8", "--aut", str(p))
        assert report["results"]["exponent"] == "Found(4)" and len(report["inputs"]) == 2

    def test_env_bound(self, capsys, monkeypatch):
        monkeypatch.setenv("HOPFSMASH_BOUND", "2")
        _, out, _ = run(capsys, "exponent", "catalog:kC4")
        assert "NotFoundUpTo(2)" in out

    def test_bad_automorphism(self, capsys):
        assert run(capsys, "exponent", "catalog:kC3", "--aut", "frobenius")[0] == EXIT_INPUT_ERROR

    def test_bad_bound(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["exponent", "catalog:kC3", "--bound", "0"])
        assert exc.value.code == EXIT_INPUT_ERROR


class TestIndicator:
    def test_nichols8(self, capsys):
        code, report = run_json(capsys, "indicator", "catalog:nichols8", "--m", "3")
        assert code == EXIT_OK and report["results"]["indicator"] == "9"
        assert set(report["results"]["methods"].values()) == {"9"}

    def test_h8_module(self, capsys):
        code, report = run_json(capsys, "indicator", "catalog:h8", "--m", "2", "--aut", "tau4", "--rep", "N")
        assert report["results"]["indicator"] == "-1"

    def test_kC2(self, capsys):
        assert run_json(capsys, "indicator", "catalog:kC2", "--m", "2")[1]["results"]["indicator"] == "2"

    def test_gl2_name(self, capsys):
        report = run_json(capsys, "indicator", "catalog:nichols8", "--m", "2", "--aut", "gl2:0,1,1,0")[1]
        assert report["results"]["indicator"] == "0"

    def test_semisimplicity_guard(self, capsys):
        code, _, err = run(capsys, "indicator", "catalog:nichols8", "--m", "2", "--rep", "V2")
        assert code == EXIT_INPUT_ERROR and "semisimple" in err

    def test_order_must_divide(self, capsys):
        assert run(capsys, "indicator", "catalog:h8", "--m", "3", "--aut", "tau4")[0] == EXIT_INPUT_ERROR

    def test_unknown_rep(self, capsys):
        assert run(capsys, "indicator", "catalog:h8", "--m", "2", "--rep", "Q")[0] == EXIT_INPUT_ERROR


class TestSmash:
    def test_kC3(self, capsys):
        code, report = run_json(capsys, "smash", "catalog:kC3", "inversion")
        assert code == EXIT_OK and report["results"]["dimension"] == 6 and report["passed"]

    def test_h8_emit(self, capsys, tmp_path):
        out = tmp_path / "k.json"
        code, report = run_json(capsys, "smash", "catalog:h8", "tau4", "--emit", str(out))
        assert code == EXIT_OK and report["results"]["dimension"] == 16
        code2, report2 = run_json(capsys, "verify", str(out))
        assert code2 == EXIT_OK and report2["passed"]

    def test_action_file(self, capsys, tmp_path):
        p = tmp_path / "action.json"
        p.write_text(formats.dumps_action(nichols8_minus_id_action(), "catalog:nichols8"))
        code, report = run_json(capsys, "smash", "catalog:nichols8", str(p))
        assert code == EXIT_OK and report["results"]["dimension"] == 16


class TestSuite:
    def test_pass(self, capsys):
        code, out, _ = run(capsys, "suite")
        assert code == EXIT_OK and "77/77 checks passed" in out

    def test_mutate(self, capsys):
        code, report = run_json(capsys, "suite", "--mutate")
        assert code == EXIT_CHECK_FAILED
        assert [c["name"] for c in report["checks"] if not c["passed"]] == ["kC3-smash-power-formula"]
        assert all(c["statement"] for c in report["checks"])


class TestCoprime:
    def test_kC5(self, capsys):
        code, report = run_json(capsys, "coprime-experiment", "catalog:kC5", "--aut", "power:2")
        assert code == EXIT_OK and report["results"]["rows"] == {"1": "Found(4)", "3": "Found(4)"}
        assert report["results"]["verdict"] == "agree"

    def test_inconclusive(self, capsys):
        report = run_json(capsys, "coprime-experiment", "catalog:kC5", "--aut", "power:2", "--bound", "3")[1]
        assert report["results"]["verdict"] == "inconclusive"

    def test_requires_aut(self):
        with pytest.raises(SystemExit) as exc:
            main(["coprime-experiment", "catalog:kC5"])
        assert exc.value.code == EXIT_INPUT_ERROR


def test_reports_deterministic(capsys):
    a = run_json(capsys, "indicator", "catalog:h8", "--m", "2", "--aut", "tau4")[1]
    b = run_json(capsys, "indicator", "catalog:h8", "--m", "2", "--aut", "tau4")[1]
    a.pop("wall_time"), b.pop("wall_time")
    assert a == b


def test_no_command():
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == EXIT_INPUT_ERROR


@pytest.mark.skipif(shutil.which("hopfsmash") is None, reason="console script not installed")
def test_console_script():
    proc = subprocess.run(["hopfsmash", "indicator", "catalog:nichols8", "--m", "3"], capture_output=True, text=True)
    assert proc.returncode == 0 and "= 9" in proc.stdout


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "hopfsmash.cli", "verify", "catalog:kC2"], capture_output=True, text=True)
    assert proc.returncode == 0
