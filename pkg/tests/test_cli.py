import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from cofiso import properties
from cofiso.cli import invoke

ROOT = Path(__file__).resolve().parent.parent


def run_cli(*args):
    env = dict(os.environ)
    env["PYTHONPATH"] = str(ROOT / "src") + os.pathsep + env.get("PYTHONPATH", "")
    return subprocess.run(
        [sys.executable, "-m", "cofiso", *args],
        capture_output=True,
        text=True,
        env=env,
        cwd=ROOT,
    )


class TestEval:
    def test_product_of_generators(self):
        code, doc = invoke(["eval", "a*b"])
        assert code == 0
        assert doc == {"schema": 1, "value": {"excluded": [], "shift": 0}, "repr": "iso([],0)"}

    def test_group_value(self):
        code, doc = invoke(["eval", "grp(3)*b"])
        assert code == 0
        assert doc["value"] == {"group": 2}

    def test_noise_gate(self):
        code, doc = invoke(["eval", "e[3]", "--j", "2"])
        assert code == 2
        assert doc["error"]["type"] == "EvalError"

    def test_parse_error_carries_column(self):
        code, doc = invoke(["eval", "e[0]"])
        assert code == 2
        assert doc["error"]["type"] == "ParseError"
        assert doc["error"]["column"] == 3


class TestClassify:
    def test_profile_row(self):
        code, doc = invoke(["classify", "iso([2],0)", "--j", "3", "--M", "2"])
        assert code == 0
        assert doc["nd"] == 3
        assert doc["und"] == 1
        assert doc["nr"] == 3
        assert doc["unr"] == 1
        assert doc["noise"] == 2
        assert doc["pi"] == 0
        assert doc["idempotent"] is True
        assert doc["in_gj"] is True
        assert doc["in_M"] is True
        assert doc["in_M_range"] is True
        assert doc["bicyclic"] is None

    def test_bicyclic_profile(self):
        code, doc = invoke(["classify", "b^2*a", "--j", "2"])
        assert code == 0
        assert doc["bicyclic"] == {"k": 2, "l": 1}

    def test_group_operand_rejected(self):
        code, doc = invoke(["classify", "grp(1)", "--j", "2"])
        assert code == 2
        assert doc["error"]["type"] == "EvalError"


class TestGreenOrder:
    def test_same_domain(self):
        code, doc = invoke(["green", "L", "iso([1],0)", "iso([1],1)"])
        assert code == 0
        assert doc["related"] is True

    def test_unrelated_pair_exits_one(self):
        code, doc = invoke(["green", "H", "a", "b"])
        assert code == 1
        assert doc["related"] is False

    def test_translate_witness_reported(self):
        code, doc = invoke(["green", "D", "iso([1],0)", "iso([1,2],1)"])
        assert code == 0
        assert doc["witness"] == {"excluded": [1], "shift": 1}

    def test_bad_relation_is_usage_error(self):
        code, doc = invoke(["green", "X", "a", "b"])
        assert code == 2
        assert doc["error"]["type"] == "usage"

    def test_order_true_and_false(self):
        assert invoke(["order", "iso([1,2],0)", "iso([1],0)"])[0] == 0
        assert invoke(["order", "iso([1],0)", "iso([1,2],0)"])[0] == 1

    def test_order_accepts_levels(self):
        code, doc = invoke(["order", "grp(0)", "iso([3],0)"])
        assert code == 0
        assert doc["leq"] is True


class TestSmallCommands:
    def test_pi(self):
        code, doc = invoke(["pi", "b^2"])
        assert (code, doc["pi"]) == (0, -2)

    def test_arrow(self):
        code, doc = invoke(["arrow", "iso([2],5)"])
        assert code == 0
        assert doc["value"] == {"excluded": [1, 2], "shift": 5}
        assert doc["bicyclic"] == {"k": 2, "l": 7}

    def test_normalize(self):
        code, doc = invoke(["normalize", "bba"])
        assert code == 0
        assert doc["k"] == 2
        assert doc["l"] == 1
        assert doc["value"] == {"excluded": [1, 2], "shift": -1}

    def test_normalize_bad_letter(self):
        code, doc = invoke(["normalize", "abc"])
        assert code == 2
        assert doc["error"]["type"] == "WordError"

    def test_boundary(self):
        code, doc = invoke(["boundary", "--j", "2"])
        assert code == 0
        assert doc["count"] == 2
        assert doc["elements"] == [
            {"excluded": [], "shift": 0},
            {"excluded": [2], "shift": 0},
        ]


class TestTopologyCommands:
    def test_member(self):
        code, doc = invoke(["nbhd", "grp(0)", "--k", "0", "--i", "5", "--j", "2", "--M", "2"])
        assert code == 0
        assert doc["member"] is True

    def test_nonmember_exits_one(self):
        code, doc = invoke(["nbhd", "I", "--k", "0", "--i", "2", "--j", "2"])
        assert code == 1
        assert doc["member"] is False

    def test_converge_verdicts(self):
        argv = ["converge", "--offsets", "2", "--k", "0", "--j", "2"]
        code, doc = invoke(argv + ["--M", "2"])
        assert code == 0
        assert doc["converges"] is True
        assert doc["agree"] is True
        code, doc = invoke(argv)
        assert code == 1
        assert doc["converges"] is False
        assert doc["agree"] is True

    def test_converge_outside_the_space(self):
        code, doc = invoke(["converge", "--offsets", "3", "--k", "0", "--j", "2"])
        assert code == 2
        assert doc["error"]["type"] == "OutsideSpace"

    def test_distinguish(self):
        code, doc = invoke(["distinguish", "2", "3", "--j", "3"])
        assert code == 0
        assert doc["kept_offsets"] == [2]
        assert doc["converges_m1"] is True
        assert doc["converges_m2"] is False

    def test_distinguish_equal_sets(self):
        code, doc = invoke(["distinguish", "2", "2", "--j", "2"])
        assert code == 2
        assert doc["error"]["type"] == "NotDistinct"

    def test_upset(self):
        code, doc = invoke(["upset", "iso([1,2],0)", "--j", "2", "--bound", "2"])
        assert code == 0
        assert doc["count"] == 4
        assert doc["complete"] is True
        assert {"excluded": [], "shift": 0} in doc["elements"]

    def test_upset_gate(self):
        code, doc = invoke(["upset", "iso([3],0)", "--j", "2", "--bound", "4"])
        assert code == 2


class TestVerify:
    def test_passing_suite(self):
        code, doc = invoke(["verify", "absorption", "--N", "3", "--S", "2"])
        assert code == 0
        assert doc["passed"] is True
        assert doc["instances"] > 0
        assert doc["counterexamples"] == []

    def test_unknown_property(self):
        code, doc = invoke(["verify", "nope", "--N", "2", "--S", "1"])
        assert code == 2
        assert doc["error"]["type"] == "UnknownProperty"

    def test_counterexample_exits_three(self, monkeypatch):
        def always_fails(t, bounds, params):
            t.check(False, "broken")

        monkeypatch.setitem(
            properties._REGISTRY, "always_fails", ("it always fails", always_fails)
        )
        code, doc = invoke(["verify", "always_fails", "--N", "1", "--S", "0"])
        assert code == 3
        assert doc["passed"] is False
        assert doc["counterexamples"] == [["'broken'"]]


class TestFraming:
    def test_help_prints_without_a_document(self):
        assert invoke(["--help"]) == (0, None)

    def test_missing_subcommand_is_usage(self):
        code, doc = invoke([])
        assert code == 2
        assert doc["error"]["type"] == "usage"

    def test_every_document_carries_the_schema_field(self):
        for argv in (["pi", "a"], ["eval", "("], ["boundary", "--j", "3"]):
            _, doc = invoke(argv)
            assert doc["schema"] == 1


class TestSubprocess:
    def test_single_json_line(self):
        proc = run_cli("eval", "a*b")
        assert proc.returncode == 0
        assert json.loads(proc.stdout) == {
            "schema": 1,
            "value": {"excluded": [], "shift": 0},
            "repr": "iso([],0)",
        }
        assert proc.stdout.count("\n") == 1

    def test_pretty_flag_indents(self):
        proc = run_cli("--pretty", "classify", "iso([2],0)", "--j", "2")
        assert proc.returncode == 0
        assert "\n  " in proc.stdout
        assert json.loads(proc.stdout)["noise"] == 2

    def test_error_exit_code_propagates(self):
        proc = run_cli("normalize", "xyz")
        assert proc.returncode == 2
        assert json.loads(proc.stdout)["error"]["type"] == "WordError"

    def test_verdict_exit_code_propagates(self):
        proc = run_cli("order", "a", "b")
        assert proc.returncode == 1
