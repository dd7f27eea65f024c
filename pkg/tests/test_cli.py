"""CLI behaviour: output formats, exit codes, determinism."""

import json

import pytest

from betheq.cli import EXIT_FAIL, EXIT_OK, EXIT_USAGE, run


def run_capture(capsys, argv):
    code = run(argv)
    out = capsys.readouterr().out
    return code, out


class TestAsm:
    def test_count_prints_bare_integer(self, capsys):
        code, out = run_capture(capsys, ["asm", "count", "--n", "5"])
        assert code == EXIT_OK
        assert out.strip() == "429"

    def test_other_counts(self, capsys):
        assert run_capture(capsys, ["asm", "v", "--n", "7"])[1].strip() == "26"
        assert run_capture(capsys, ["asm", "n8", "--n", "6"])[1].strip() == "11"
        assert run_capture(capsys, ["asm", "ht", "--n", "5"])[1].strip() == "25"

    def test_invalid_parity_is_usage_error(self, capsys):
        code, _ = run_capture(capsys, ["asm", "v", "--n", "4"])
        assert code == EXIT_USAGE


class TestQpoly:
    def test_periodic_n2(self, capsys):
        code, out = run_capture(
            capsys, ["qpoly", "--boundary", "periodic", "--n", "2"]
        )
        assert code == EXIT_OK
        data = json.loads(out)
        assert data["e"] == ["1", "11/5", "1"]

    def test_unknown_boundary_is_usage_error(self, capsys):
        code, _ = run_capture(capsys, ["qpoly", "--boundary", "moebius", "--n", "2"])
        assert code == EXIT_USAGE


class TestVerify:
    def test_conj_n4(self, capsys):
        code, out = run_capture(capsys, ["verify", "conj", "--n", "4"])
        assert code == EXIT_OK
        data = json.loads(out)
        assert data["lhs"] == "74088"
        assert data["rhs"] == "74088"
        assert data["equal"] is True

    def test_verify_requires_n(self, capsys):
        code, _ = run_capture(capsys, ["verify", "conj"])
        assert code == EXIT_USAGE

    def test_hyp_identities(self, capsys):
        code, out = run_capture(capsys, ["verify", "hyp1", "--n", "6"])
        assert code == EXIT_OK
        assert json.loads(out)["equal"] is True

    def test_umbrella(self, capsys):
        code, out = run_capture(capsys, ["verify", "all", "--max-n", "2"])
        assert code == EXIT_OK
        data = json.loads(out)
        assert data["equal"] is True
        assert len(data["reports"]) >= 7

    def test_report_carries_method_and_precision(self, capsys):
        _, out = run_capture(
            capsys, ["verify", "conj2", "--n", "1", "--precision", "128"]
        )
        data = json.loads(out)
        assert data["method"] == "numeric"
        assert data["precision_bits"] == 128
        assert data["tolerance"] is not None


class TestRoots:
    def test_roots_json(self, capsys):
        code, out = run_capture(
            capsys,
            ["roots", "--boundary", "periodic", "--n", "3", "--precision", "128"],
        )
        assert code == EXIT_OK
        data = json.loads(out)
        assert data["L"] == 7
        assert len(data["roots"]) == 3
        assert all(
            set(r) == {"re", "im", "precision"} and r["precision"] == 128
            for r in data["roots"]
        )

    def test_determinism(self, capsys):
        argv = ["roots", "--boundary", "twisted", "--n", "4", "--precision", "96"]
        _, out1 = run_capture(capsys, argv)
        _, out2 = run_capture(capsys, argv)
        assert out1 == out2


class TestDiag:
    def test_small_periodic_chain(self, capsys):
        code, out = run_capture(
            capsys, ["diag", "--L", "5", "--boundary", "periodic"]
        )
        assert code == EXIT_OK
        data = json.loads(out)
        assert data["dim"] == 10
        assert abs(float(data["energy"]["re"]) + 15 / 4) < 1e-9
        assert abs(float(data["ratio"]) - 2) < 1e-9


class TestSchur:
    def test_from_evalues(self, capsys):
        # s_(2) from e-values of variables {1, 2}: h_2 = e1^2 - e2 = 7
        code, out = run_capture(
            capsys, ["schur", "--partition", "2", "--evalues", "1,3,2"]
        )
        assert code == EXIT_OK
        assert json.loads(out)["schur"] == "7"

    def test_staircase_from_periodic_evalues(self, capsys):
        code, out = run_capture(
            capsys,
            ["schur", "--partition", "2,0", "--evalues", "1,11/5,1", "--nvars", "2"],
        )
        assert code == EXIT_OK
        # s_(2) in 2 variables from e = (1, 11/5, 1): e1^2 - e2
        assert json.loads(out)["schur"] == "96/25"


class TestFormats:
    def test_pretty(self, capsys):
        code, out = run_capture(
            capsys, ["--format", "pretty", "verify", "conj", "--n", "2"]
        )
        assert code == EXIT_OK
        assert "equal: True" in out

    def test_csv(self, capsys):
        code, out = run_capture(
            capsys, ["--format", "csv", "verify", "conj", "--n", "2"]
        )
        assert code == EXIT_OK
        lines = out.strip().splitlines()
        assert len(lines) == 2
        assert "lhs" in lines[0]


class TestExitCodes:
    def test_usage_error_on_unknown_command(self, capsys):
        assert run(["frobnicate"]) == EXIT_USAGE

    def test_failing_verification_exits_one(self, capsys, monkeypatch):
        import betheq.conjectures as conj
        from betheq.conjectures import VerificationReport

        def fake(n):
            return VerificationReport(
                conjecture="conj", n=n, lhs=1, rhs=2, equal=False, method="exact"
            )

        monkeypatch.setattr(conj, "verify_periodic_product", fake)
        assert run(["verify", "conj", "--n", "2"]) == EXIT_FAIL
