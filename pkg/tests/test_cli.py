# tests/test_cli.py
import io
import json

import pytest

from ccurves.config import EXIT_BAD_SURFACE, EXIT_BAD_WORD, EXIT_CHECK_FAILED, EXIT_OK, EXIT_USAGE
from ccurves.main import parse_invocation, run
from ccurves.words import CyclicWord

GENUS_TWO = ["--genus", "2", "--boundary", "1"]
TORUS = ["--genus", "1", "--boundary", "1"]


def invoke(*argv):
    out = io.StringIO()
    code = run(list(argv), stdout=out)
    return code, out.getvalue()


class TestGoldenOutputs:
    def test_bracket_example_d(self):
        code, out = invoke("bracket", *GENUS_TWO, "a1.a2.a2.a3", "A2.A2", "--json")
        assert code == EXIT_OK
        assert out == '[{"word":"a1.a3","coeff":-2}]\n'

    def test_cobracket_counter_example(self):
        code, out = invoke("cobracket", *TORUS, "a1.a1.a2.a2", "--json")
        assert code == EXIT_OK
        assert out == "[]\n"

    def test_self_int(self):
        code, out = invoke("self-int", *TORUS, "a1.a1.a1.a2.a2")
        assert (code, out) == (EXIT_OK, "2\n")

    def test_intersection(self):
        code, out = invoke("int", "--symbol", "a1.A1.a2.A2", "a1.A2.A2", "a1.A2")
        assert (code, out) == (EXIT_OK, "2\n")

    def test_simple(self):
        assert invoke("simple", *TORUS, "a1.a2") == (EXIT_OK, "true\n")
        assert invoke("simple", "--preset", "punctured_torus", "a1.a1.a2.a2") == (
            EXIT_OK,
            "false\n",
        )

    def test_bracket_text(self):
        code, out = invoke("bracket", *TORUS, "a1", "a2")
        assert (code, out) == (EXIT_OK, "c(a1.a2)\n")

    def test_output_words_reparse(self):
        _, out = invoke("bracket", *GENUS_TWO, "a1.a2.a2.a3", "A2.A2", "--json")
        for record in json.loads(out):
            word = CyclicWord.parse(record["word"])
            assert str(word) == record["word"]

    def test_surface_info(self):
        code, out = invoke("surface-info", "--symbol", "a1.A1.a2.A2", "--json")
        assert code == EXIT_OK
        data = json.loads(out)
        assert data["euler_characteristic"] == -1
        assert data["boundary_components"] == 3
        assert data["genus"] == 0

    def test_html_format(self):
        code, out = invoke("bracket", *TORUS, "a1", "a2", "--format", "html")
        assert code == EXIT_OK
        assert "<html>" in out
        assert "a1.a2" in out


class TestExitCodes:
    @pytest.mark.parametrize(
        "argv, expected",
        [
            (["bracket", *TORUS, "b1", "a2"], EXIT_BAD_WORD),
            (["cobracket", *TORUS, "a1.A1"], EXIT_BAD_WORD),
            (["cobracket", *TORUS, "a5"], EXIT_BAD_WORD),
            (["self-int", *TORUS, "a1.a2.a1.a2"], EXIT_BAD_WORD),
            (["cobracket", "--symbol", "a1.a2.a1.A2", "a1"], EXIT_BAD_SURFACE),
            (["cobracket", "--genus", "0", "--boundary", "1", "a1"], EXIT_BAD_SURFACE),
            (["cobracket", "a1"], EXIT_USAGE),
            (["cobracket", *TORUS, "--symbol", "a1.A1", "a1"], EXIT_USAGE),
            (["cobracket", "--genus", "1", "a1"], EXIT_USAGE),
            (["bracket", *TORUS, "a1"], EXIT_USAGE),
            (["axioms", *TORUS], EXIT_USAGE),
            (["scan-cobracket-zero", *TORUS], EXIT_USAGE),
            (["no-such-command"], EXIT_USAGE),
        ],
    )
    def test_mapping(self, argv, expected, capsys):
        code, out = invoke(*argv)
        assert code == expected
        assert out == ""
        assert capsys.readouterr().err

    def test_error_reported_once(self, capsys):
        code, _ = invoke("cobracket", *TORUS, "b1")
        assert code == EXIT_BAD_WORD
        assert capsys.readouterr().err.count("非法字") == 1

    def test_version(self, capsys):
        code, _ = invoke("--version")
        assert code == EXIT_OK
        assert "ccurves" in capsys.readouterr().out


class TestCommands:
    def test_axioms(self):
        code, out = invoke(
            "axioms", *TORUS, "--seed", "1", "--samples", "5", "--max-len", "4", "--json"
        )
        assert code == EXIT_OK
        (report,) = json.loads(out)
        assert report["seed"] == 1
        assert set(report["tallies"]) >= {"skew", "jacobi", "compatibility"}

    def test_single_axiom(self):
        code, out = invoke(
            "axioms", *TORUS, "--seed", "3", "--samples", "4", "--max-len", "4",
            "--axiom", "coskew", "--json",
        )
        assert code == EXIT_OK
        assert list(json.loads(out)[0]["tallies"]) == ["coskew"]

    def test_scan_writes_jsonl(self, tmp_path):
        target = tmp_path / "findings.jsonl"
        code, out = invoke(
            "scan-cobracket-zero", *TORUS, "--max-len", "4", "--output", str(target)
        )
        assert code == EXIT_OK
        lines = target.read_text(encoding="utf-8").splitlines()
        records = [json.loads(line) for line in lines]
        assert any(r["word"] == "a1.a1.a2.a2" for r in records)
        assert "scan: cobracket_zero" in out

    def test_require_simple_roots(self):
        code, _ = invoke("scan-cobracket-zero", *TORUS, "--max-len", "4", "--require-simple-roots")
        assert code == EXIT_CHECK_FAILED
        code, _ = invoke(
            "scan-cobracket-zero", "--symbol", "a1.A1.a2.A2", "--max-len", "4",
            "--require-simple-roots",
        )
        assert code == EXIT_OK

    def test_scan_threads_byte_identical(self, tmp_path):
        outputs = []
        for threads in ("1", "2"):
            target = tmp_path / f"out-{threads}.jsonl"
            code, out = invoke(
                "scan-bracket-inverse", "--preset", "twice_punctured_torus",
                "--max-len", "4", "--threads", threads, "--json", "--output", str(target),
            )
            assert code == EXIT_OK
            outputs.append((out, target.read_bytes()))
        assert outputs[0] == outputs[1]

    def test_power_scan(self):
        code, out = invoke("scan-bracket-inverse", *TORUS, "--max-len", "3", "--powers", "2", "-1", "--json")
        assert code == EXIT_OK
        assert json.loads(out)["exponents"] == [2, -1]

    def test_zero_power_rejected(self):
        code, _ = invoke("scan-bracket-inverse", *TORUS, "--max-len", "3", "--powers", "0", "1")
        assert code == EXIT_USAGE


def test_parse_invocation_defaults():
    inv, verbosity = parse_invocation(["cobracket", *TORUS, "a1", "-vv"])
    assert verbosity == 2
    assert inv.output_format == "text"
    assert inv.options.bound_slack == 0
    assert not inv.options.strict_o
