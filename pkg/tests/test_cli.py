import io
import json
import subprocess
import sys

import jsonschema
import pytest

from seqfst.cli import main
from seqfst.schemas import BY_COMMAND, ERROR

WORD_TABLE = 'ab\t"xy"\nac\t"xz"\n'


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    code = main([str(a) for a in argv], out=out, err=err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def table(tmp_path):
    p = tmp_path / "t.tsv"
    p.write_text(WORD_TABLE)
    return p


@pytest.fixture
def machine(tmp_path, table):
    built = tmp_path / "b.fst"
    assert run(["build", table, "-o", built])[0] == 0
    return built


def validate_json(command, text):
    payload = json.loads(text)
    jsonschema.validate(payload, BY_COMMAND[command])
    return payload


class TestCheckAxioms:
    def test_words_pass(self):
        code, out, _ = run(["check-axioms", "--structure", "words", "--trials", 500, "--seed", 7])
        assert code == 0 and "all laws pass" in out

    def test_product_fails_with_counterexample(self):
        code, out, _ = run(["check-axioms", "--structure", "product", "--trials", 2000, "--seed", 7])
        assert code == 1
        assert "monotone_disjointness    FAIL" in out and "counterexample:" in out

    def test_missing_structure(self):
        assert run(["check-axioms"])[0] == 2

    def test_unknown_structure(self):
        assert run(["check-axioms", "--structure", "reals"])[0] == 2

    def test_bad_trials(self):
        assert run(["check-axioms", "--structure", "words", "--trials", 0])[0] == 2

    def test_json(self):
        code, out, _ = run(["check-axioms", "--structure", "product", "--trials", 50, "--format", "json"])
        payload = validate_json("check-axioms", out)
        assert code == 1 and payload["ok"] is False

    def test_env_seed(self, monkeypatch):
        monkeypatch.setenv("SEQFST_SEED", "13")
        _, out, _ = run(["check-axioms", "--structure", "natural", "--trials", 5, "--format", "json"])
        assert json.loads(out)["axioms"]["seed"] == 13
        monkeypatch.setenv("SEQFST_SEED", "x")
        assert run(["check-axioms", "--structure", "natural", "--trials", 5])[0] == 2


class TestBuildMinimizeApply:
    def test_build_then_minimize(self, tmp_path, machine):
        small = tmp_path / "m.fst"
        assert run(["minimize", machine, "-o", small])[0] == 0
        text = small.read_text()
        assert "STATES 3" in text and 'IOTA "x"' in text
        code, out, _ = run(["apply", small, "ab"])
        assert code == 0 and out == '"xy"\n'
        assert run(["apply", small, "b"])[1] == "UNDEFINED\n"

    def test_build_minimize_flag(self, tmp_path, table):
        code, out, _ = run(["build", table, "--minimize"])
        assert code == 0 and out.startswith("STRUCTURE words") and "STATES 3" in out

    def test_apply_symbol_outside_alphabet(self, machine):
        code, _, err = run(["apply", machine, "ad"])
        assert code == 2 and "not in the alphabet" in err

    def test_apply_empty_word(self, tmp_path):
        p = tmp_path / "e.tsv"
        p.write_text('""\t"q"\n')
        m = tmp_path / "e.fst"
        run(["build", p, "-o", m])
        assert run(["apply", m, '""'])[1] == '"q"\n'

    def test_rational_table(self, tmp_path):
        p = tmp_path / "r.tsv"
        p.write_text("a\t3\nb\t5\n")
        m = tmp_path / "r.fst"
        code, out, _ = run(["build", p, "--structure", "rational", "--minimize", "-o", m, "--format", "json"])
        payload = validate_json("build", out)
        assert code == 0 and payload["iota"] == "3" and payload["states"] == 2
        assert run(["apply", m, "b", "--format", "json"])[1] == run(["apply", m, "b", "--format", "json"])[1]
        validate_json("apply", run(["apply", m, "b", "--format", "json"])[1])

    def test_parse_error_line_number(self, tmp_path):
        p = tmp_path / "bad.tsv"
        p.write_text('a\t"x"\nb\t"y\n')
        code, _, err = run(["build", p])
        assert code == 2 and "line 2" in err

    def test_missing_file(self, tmp_path):
        assert run(["apply", tmp_path / "none.fst", "a"])[0] == 2

    def test_json_needs_output_path(self, table):
        assert run(["build", table, "--format", "json"])[0] == 2


class TestEquiv:
    def test_self(self, machine):
        code, out, _ = run(["equiv", machine, machine])
        assert code == 0 and out.startswith("EQUIVALENT")

    def test_difference(self, tmp_path, machine):
        other = tmp_path / "o.fst"
        other.write_text(machine.read_text().replace('"xz"', '"xq"'))
        code, out, _ = run(["equiv", machine, other, "--max-len", 3])
        assert code == 1 and 'counterexample "ac"' in out
        code, out, _ = run(["equiv", machine, other, "--format", "json"])
        payload = validate_json("equiv", out)
        assert payload["counterexample"] == "ac" and payload["right"] == '"xq"'

    def test_size_refusal(self, tmp_path):
        p = tmp_path / "wide.tsv"
        p.write_text('abcde\t"x"\n')
        m = tmp_path / "w.fst"
        run(["build", p, "-o", m])
        assert run(["equiv", m, m, "--max-len", 21])[0] == 2


class TestIndexReplicate:
    def test_index(self, table):
        code, out, _ = run(["index", table])
        assert code == 0 and out == "3 essential classes (+1 error class)\n"
        payload = validate_json("index", run(["index", table, "--format", "json"])[1])
        assert payload["index"] == 4

    def test_replicate(self, tmp_path, table):
        dot = tmp_path / "g.dot"
        code, out, _ = run(["replicate", table, "--dot", dot])
        assert code == 0 and "negative cycle: none" in out and "result: all checks pass" in out
        assert "C1 -> C3" in dot.read_text()

    def test_replicate_json_to_file(self, tmp_path, table):
        report = tmp_path / "r.json"
        assert run(["replicate", table, "--format", "json", "-o", report])[0] == 0
        payload = validate_json("replicate", report.read_text())
        assert payload["ok"] and payload["negative_cycle"] is None

    def test_replicate_empty_table(self, tmp_path):
        p = tmp_path / "empty.tsv"
        p.write_text("# nothing here\n")
        code, out, _ = run(["replicate", p])
        assert code == 0 and "trivial one-state machine" in out

    def test_lemma_violation_exit(self, tmp_path, monkeypatch):
        from seqfst import cli
        from seqfst.errors import LemmaViolation

        def boom(tab):
            raise LemmaViolation("finite_case", "forced")

        monkeypatch.setattr(cli, "replicate", boom)
        p = tmp_path / "t.tsv"
        p.write_text(WORD_TABLE)
        code, out, err = run(["replicate", p, "--format", "json"])
        assert code == 1 and "finite_case" in err
        payload = json.loads(out)
        jsonschema.validate(payload, ERROR)
        assert payload["lemma"] == "finite_case"


class TestDeterminism:
    def test_repeated_invocations_identical(self, tmp_path, table):
        outputs = []
        for _ in range(2):
            m, r, d = tmp_path / "m.fst", tmp_path / "r.json", tmp_path / "g.dot"
            texts = [
                run(["check-axioms", "--structure", "rational", "--trials", 100, "--seed", 3, "--format", "json"])[1],
                run(["build", table, "--minimize", "-o", m, "--format", "json"])[1],
                run(["replicate", table, "--format", "json", "-o", r, "--dot", d])[1],
            ]
            outputs.append((texts, m.read_bytes(), r.read_bytes(), d.read_bytes()))
        assert outputs[0] == outputs[1]

    def test_module_entry_point(self, table):
        proc = subprocess.run([sys.executable, "-m", "seqfst", "index", str(table)],
                              capture_output=True, text=True, check=False)
        assert proc.returncode == 0 and proc.stdout == "3 essential classes (+1 error class)\n"
