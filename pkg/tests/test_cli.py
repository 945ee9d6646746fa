"""Command-line behavior: output shapes, determinism, exit codes."""

import json
import subprocess
import sys

import pytest

from smirnov import cli
from smirnov import enumerators as en
from smirnov.exact import LaurentPoly


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestExpand:
    def test_degree_five_cyclic_json(self, capsys):
        code, out, _ = run_cli(
            capsys, "expand", "--variant", "Wtilde", "--n", "5", "--format", "json"
        )
        assert code == 0
        obj = json.loads(out)
        assert obj == en.closed_form("Wtilde", 5).to_json_obj()
        assert obj["basis"] == "e" and obj["degree"] == 5

    def test_text_output(self, capsys):
        code, out, _ = run_cli(capsys, "expand", "--variant", "Wless", "--n", "2")
        assert code == 0
        assert out.strip() == "e[2]  1"

    def test_byte_determinism(self, capsys):
        runs = []
        for _ in range(2):
            _, out, _ = run_cli(
                capsys, "expand", "--variant", "W", "--n", "4", "--format", "json"
            )
            runs.append(out)
        assert runs[0] == runs[1]

    def test_expansion_into_variables(self, capsys):
        code, out, _ = run_cli(
            capsys,
            "expand", "--variant", "W", "--n", "2", "--vars", "2", "--format", "json",
        )
        assert code == 0
        obj = json.loads(out)
        assert obj["vars"] == 2
        assert {tuple(t["exponents"]): t["coeff"] for t in obj["terms"]} == {
            (1, 1): {"0": 1, "1": 1}
        }

    def test_basis_dispatch(self, capsys):
        code, out, _ = run_cli(
            capsys, "expand", "--variant", "W", "--n", "3", "--basis", "p", "--format", "json"
        )
        assert code == 0
        assert json.loads(out)["basis"] == "p/z"
        code, out, _ = run_cli(
            capsys, "expand", "--variant", "W", "--n", "3", "--basis", "F", "--format", "json"
        )
        assert code == 0
        assert json.loads(out)["degree"] == 3

    def test_variant_aliases(self, capsys):
        for alias in ("Wtilde", "wtilde", "W~"):
            code, out, _ = run_cli(
                capsys, "expand", "--variant", alias, "--n", "3", "--format", "json"
            )
            assert code == 0
            assert json.loads(out) == en.closed_form("Wtilde", 3).to_json_obj()


class TestQEuler:
    def test_root_evaluation_example(self, capsys):
        code, out, _ = run_cli(
            capsys, "qeuler", "--variant", "Atilde", "--n", "3", "--q-root", "3"
        )
        assert code == 0
        assert out.strip() == "3*t^2"

    def test_polynomial_output(self, capsys):
        code, out, _ = run_cli(
            capsys, "qeuler", "--variant", "Ades", "--n", "3", "--format", "json"
        )
        assert code == 0
        assert json.loads(out) == en.q_eulerian("Ades", 3).to_json_obj()

    def test_roots_verb_reports_routes(self, capsys):
        code, out, _ = run_cli(
            capsys,
            "roots", "--variant", "Aless", "--n", "4", "--q-root", "2", "--format", "json",
        )
        assert code == 0
        obj = json.loads(out)
        assert obj["agree"] is True
        assert obj["via_eval"] == obj["closed"] == obj["recursion"]


class TestVerify:
    def test_transfer_suite_passes(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--suite", "transfer")
        assert code == 0
        assert "checks passed" in out

    def test_small_all_run_is_green(self, capsys):
        code, out, _ = run_cli(
            capsys,
            "verify", "--suite", "oracle", "--max-n", "3", "--vars", "4", "--format", "json",
        )
        assert code == 0
        records = json.loads(out)
        assert records and all(r["status"] == "pass" for r in records)
        assert set(records[0]) == {"check", "params", "status", "lhs", "rhs"}

    def test_mutated_formula_flips_exit_code(self, capsys, monkeypatch):
        monkeypatch.setattr(
            en, "powersum_top_coefficient", lambda variant, n: LaurentPoly.one()
        )
        code, out, _ = run_cli(
            capsys, "verify", "--suite", "powersum", "--max-n", "2"
        )
        assert code == 1

    def test_unknown_suite_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as info:
            cli.main(["verify", "--suite", "nonsense"])
        assert info.value.code == 2


class TestUsageErrors:
    def test_unknown_variant(self, capsys):
        with pytest.raises(SystemExit) as info:
            cli.main(["expand", "--variant", "Wbogus", "--n", "3"])
        assert info.value.code == 2

    def test_out_of_range_n(self, capsys):
        with pytest.raises(SystemExit) as info:
            cli.main(["expand", "--variant", "W", "--n", "9"])
        assert info.value.code == 2

    def test_range_error_mentions_flag(self, capsys):
        with pytest.raises(SystemExit):
            cli.main(["expand", "--variant", "W", "--n", "99"])
        err = capsys.readouterr().err
        assert "--n" in err

    def test_library_range_error_is_exit_two(self, capsys):
        code = cli.main(["expand", "--variant", "Wneq", "--n", "1"])
        assert code == 2
        assert "error" in capsys.readouterr().err

    def test_missing_verb(self, capsys):
        with pytest.raises(SystemExit) as info:
            cli.main([])
        assert info.value.code == 2


class TestEntryPoint:
    def test_module_invocation(self):
        proc = subprocess.run(
            [sys.executable, "-m", "smirnov", "qeuler", "--variant", "Atilde",
             "--n", "3", "--q-root", "3"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert proc.stdout.strip() == "3*t^2"
