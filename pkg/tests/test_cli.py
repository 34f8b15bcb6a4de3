"""CLI verbs, exit-code contract, and output formats."""

import json
import subprocess
import sys
from pathlib import Path

from dpcover import solve
from dpcover.cli import run
from dpcover.serialize import instance_from_json

FIXTURES = Path(__file__).parent / "fixtures"


def fx(name: str) -> str:
    return str(FIXTURES / name)


class TestExitCodes:
    def test_solve_colorable_is_zero(self, capsys):
        assert run(["solve", fx("fig1_left.json")]) == 0
        out = capsys.readouterr().out
        assert out.startswith("COLORABLE {")

    def test_solve_not_colorable_is_one(self, capsys):
        assert run(["solve", fx("fig1_right.json")]) == 1
        assert capsys.readouterr().out.strip() == "NOT_COLORABLE"

    def test_invalid_instance_is_two(self, capsys):
        assert run(["validate", fx("broken.json")]) == 2
        assert "degree" in capsys.readouterr().out

    def test_usage_error_is_sixty_four(self, capsys):
        assert run(["frobnicate"]) == 64
        assert run(["solve"]) == 64
        assert run(["solve", fx("fig1_left.json"), "--bogus-flag"]) == 64

    def test_missing_file_is_two(self):
        assert run(["solve", "/no/such/file.json"]) == 2

    def test_help_is_zero(self, capsys):
        assert run(["--help"]) == 0
        assert "dpcover" in capsys.readouterr().out

    def test_decide_agrees_with_solve_on_all_degree_list_fixtures(self, capsys):
        fixtures = [
            "fig1_left.json",
            "fig1_right.json",
            "p3_bad.json",
            "knt_3_1.json",
            "knt_4_2.json",
            "cnt_4_1.json",
            "cnt_5_1.json",
            "glue_tri_square.json",
            "c5_three_lists.json",
            "diamond_degree_lists.json",
        ]
        for name in fixtures:
            solve_rc = run(["solve", fx(name)])
            decide_rc = run(["decide", fx(name)])
            capsys.readouterr()
            assert solve_rc == decide_rc, name


class TestValidate:
    def test_valid_file(self, capsys):
        assert run(["validate", fx("fig1_left.json")]) == 0
        assert capsys.readouterr().out.strip() == "VALID"

    def test_json_output(self, capsys):
        assert run(["validate", fx("broken.json"), "--json"]) == 2
        data = json.loads(capsys.readouterr().out)
        assert data["violations"]


class TestSolveOutput:
    def test_transversal_payload_parses(self, capsys):
        run(["solve", fx("fig1_left.json")])
        out = capsys.readouterr().out
        picks = json.loads(out[len("COLORABLE ") :])
        assert picks == {"a": 1, "b": 2, "c": 1, "d": 2}

    def test_json_mode(self, capsys):
        run(["solve", fx("fig1_left.json"), "--json"])
        data = json.loads(capsys.readouterr().out)
        assert data["outcome"] == "colorable"
        assert data["transversal"]["a"] == 1


class TestDecide:
    def test_writes_certificate(self, tmp_path, capsys):
        out = tmp_path / "cert.json"
        assert run(["decide", fx("fig1_right.json"), "--certificate", str(out)]) == 1
        assert "OBSTRUCTED" in capsys.readouterr().out
        data = json.loads(out.read_text())
        assert data["blocks"][0]["kind"] == "Cnt"
        assert data["blocks"][0]["n"] == 4

    def test_json_mode(self, capsys):
        assert run(["decide", fx("p3_bad.json"), "--json"]) == 1
        data = json.loads(capsys.readouterr().out)
        assert data["outcome"] == "obstructed"
        assert len(data["certificate"]["blocks"]) == 2

    def test_non_degree_list_is_invalid_input(self, tmp_path, capsys):
        inst = json.loads(Path(fx("fig1_left.json")).read_text())
        inst["lists"]["a"] = [1]
        for m in inst["matchings"]:
            if "a" in (m["u"], m["v"]):
                side = 0 if m["u"] == "a" else 1
                m["pairs"] = [p for p in m["pairs"] if p[side] == 1]
        p = tmp_path / "short.json"
        p.write_text(json.dumps(inst))
        assert run(["decide", str(p)]) == 2
        assert "degree" in capsys.readouterr().err

    def test_disconnected_handled_per_component(self, tmp_path, capsys):
        data = {
            "vertices": ["a", "b", "c", "d"],
            "edges": [
                {"u": "a", "v": "b", "mult": 1},
                {"u": "c", "v": "d", "mult": 1},
            ],
            "lists": {"a": [1], "b": [1], "c": [1], "d": [2]},
            "matchings": [
                {"u": "a", "v": "b", "pairs": [[1, 1]]},
                {"u": "c", "v": "d", "pairs": []},
            ],
        }
        p = tmp_path / "two_comps.json"
        p.write_text(json.dumps(data))
        assert run(["decide", str(p)]) == 1
        out = capsys.readouterr().out
        assert "OBSTRUCTED" in out and "component" in out


class TestSigned:
    def test_with_k(self, capsys):
        assert run(["signed", fx("signed_unbalanced_c4.json"), "--k", "2"]) == 1
        assert run(["signed", fx("signed_balanced_k3.json"), "--k", "3"]) == 0
        capsys.readouterr()

    def test_with_lists(self, capsys):
        assert run(
            ["signed", fx("signed_unbalanced_c4.json"), "--lists", fx("lists_n2.json")]
        ) == 1
        capsys.readouterr()

    def test_requires_k_or_lists(self, capsys):
        assert run(["signed", fx("signed_unbalanced_c4.json")]) == 64
        capsys.readouterr()

    def test_palette_validation(self, tmp_path, capsys):
        bad_lists = tmp_path / "lists.json"
        bad_lists.write_text(json.dumps({u: [0] for u in "abcd"}))
        rc = run(
            [
                "signed",
                fx("signed_unbalanced_c4.json"),
                "--lists",
                str(bad_lists),
                "--k",
                "2",
            ]
        )
        assert rc == 2
        assert "N_2" in capsys.readouterr().err


class TestCover:
    def test_dot_to_stdout(self, capsys):
        assert run(["cover", fx("fig1_left.json")]) == 0
        out = capsys.readouterr().out
        assert out.startswith("graph cover {")
        assert '"a:1" -- "a:2";' in out

    def test_no_cliques_flag(self, capsys):
        assert run(["cover", fx("fig1_left.json"), "--no-cliques"]) == 0
        out = capsys.readouterr().out
        assert '"a:1" -- "a:2";' not in out
        assert '"a:1" -- "b:1";' in out

    def test_dot_to_file(self, tmp_path):
        out = tmp_path / "cover.dot"
        assert run(["cover", fx("fig1_left.json"), "--dot", str(out)]) == 0
        assert out.read_text().startswith("graph cover {")


class TestGen:
    def test_knt_round_trips_and_solves(self, tmp_path, capsys):
        out = tmp_path / "knt.json"
        cert = tmp_path / "cert.json"
        assert run(["gen", "knt", "4", "2", "-o", str(out), "--certificate", str(cert)]) == 0
        inst = instance_from_json(json.loads(out.read_text()))
        assert not solve(inst).colorable
        assert json.loads(cert.read_text())["blocks"][0]["kind"] == "Knt"
        assert run(["solve", str(out)]) == 1
        capsys.readouterr()

    def test_cnt_stdout(self, capsys):
        assert run(["gen", "cnt", "6", "1"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert len(data["vertices"]) == 6

    def test_glue_plan(self, tmp_path, capsys):
        out = tmp_path / "glued.json"
        assert run(["gen", "glue", fx("glue_plan.json"), "-o", str(out)]) == 0
        assert run(["solve", str(out)]) == 1
        capsys.readouterr()

    def test_random_requires_seed(self, capsys):
        assert run(["gen", "random", fx("c4_lists_only.json")]) == 64
        capsys.readouterr()

    def test_random_deterministic(self, tmp_path, capsys):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        for target in (a, b):
            assert (
                run(
                    [
                        "gen",
                        "random",
                        fx("c4_lists_only.json"),
                        "--seed",
                        "42",
                        "--density",
                        "0.8",
                        "-o",
                        str(target),
                    ]
                )
                == 0
            )
        assert a.read_text() == b.read_text()
        capsys.readouterr()

    def test_generated_instances_reparse_equal(self, tmp_path, capsys):
        out = tmp_path / "g.json"
        assert run(["gen", "cnt", "5", "2", "-o", str(out)]) == 0
        text = out.read_text()
        inst = instance_from_json(json.loads(text))
        from dpcover.serialize import dumps, instance_to_json

        assert dumps(instance_to_json(inst)) == text
        capsys.readouterr()


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "dpcover", "solve", fx("fig1_right.json")],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 1
    assert proc.stdout.strip() == "NOT_COLORABLE"
