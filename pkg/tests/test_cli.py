import json

import pytest

from superquiver.cli import main, render_dual_number, somos_terms
from superquiver.poly import SuperRing


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestSomos:
    def test_eight_terms(self, capsys):
        code, out, _ = run_cli(capsys, "somos", "--terms", "8")
        assert code == 0
        assert out.strip() == "1 1 1 1 2 3 7 23"

    def test_twelve_terms_match_recurrence(self, capsys):
        code, out, _ = run_cli(capsys, "somos", "--terms", "12")
        assert code == 0
        assert out.split() == "1 1 1 1 2 3 7 23 59 314 1529 8209".split()

    def test_super_fifth_term(self, capsys):
        code, out, _ = run_cli(capsys, "somos", "--terms", "5", "--super")
        assert code == 0
        assert out.split()[-1] == "2+eps"

    def test_super_terms_stay_dual(self):
        terms = somos_terms(10, super_mode=True)
        assert terms[4] == "2+eps"
        for text in terms:
            assert "xi" not in text

    def test_render_dual_number(self):
        r = SuperRing(0, 2)
        eps = r.xi(1) * r.xi(2)
        assert render_dual_number(r.int(3) + 2 * eps) == "3+2*eps"
        assert render_dual_number(r.int(5) - eps) == "5-eps"
        assert render_dual_number(r.int(7)) == "7"


class TestQuiverAndSeed:
    def test_quiver_mutate_builder(self, capsys):
        code, out, _ = run_cli(capsys, "quiver", "mutate", "-i", "two_vertex_example", "-k", "1")
        assert code == 0
        obj = json.loads(out)
        assert obj["b"] == [[0, -1], [1, 0]]
        paths = {(p["i"], p["j"], p["k"]): p["mult"] for p in obj["paths"]}
        assert paths == {(1, 2, 1): -1, (1, 2, 2): 2}
        assert obj["weights"] == [-1, 2]

    def test_quiver_mutate_file(self, tmp_path, capsys):
        from superquiver.quiver import somos4_a

        path = tmp_path / "q.json"
        path.write_text(somos4_a().to_json())
        code, out, _ = run_cli(capsys, "quiver", "mutate", "-i", str(path), "-k", "1")
        assert code == 0
        assert json.loads(out)["weights"] == [-1, 1, 0, 0]

    def test_seed_sequence(self, capsys):
        code, out, _ = run_cli(capsys, "seed", "mutate-seq", "-i", "aquiv(2)", "-s", "1,2")
        assert code == 0
        obj = json.loads(out)
        assert obj["history"] == [1, 2]
        assert len(obj["rendered"]) == 2

    def test_unknown_input(self, capsys):
        code, _, err = run_cli(capsys, "quiver", "mutate", "-i", "missing_thing", "-k", "1")
        assert code == 2
        assert "neither a file nor a known quiver name" in err

    def test_deterministic_output(self, capsys):
        outs = set()
        for _ in range(2):
            _, out, _ = run_cli(capsys, "seed", "mutate-seq", "-i", "somos4_a", "-s", "1,2,3")
            outs.add(out)
        assert len(outs) == 1


class TestFriezeCommand:
    def test_json_output(self, capsys):
        code, out, _ = run_cli(capsys, "frieze", "gen", "--width", "1", "--periods", "2")
        assert code == 0
        obj = json.loads(out)
        assert obj["width"] == 1
        assert obj["period"] == 4

    def test_text_output_with_values(self, capsys):
        code, out, _ = run_cli(
            capsys,
            "frieze", "gen", "--width", "1", "--periods", "2",
            "--values", '{"x": [1], "xi": [0, 0]}', "--format", "text",
        )
        assert code == 0
        assert "2" in out


class TestVerifyCommand:
    def test_laurent_pass(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "laurent", "--random", "30", "--rng-seed", "42"
        )
        assert code == 0
        assert "[PASS] laurent" in out

    def test_form_pass(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "form", "--random", "10", "--rng-seed", "1")
        assert code == 0

    def test_reduction_pass(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "reduction", "--random", "10", "--rng-seed", "1")
        assert code == 0

    def test_frieze_pass(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "frieze", "--width", "2")
        assert code == 0

    def test_deterministic_given_seed(self, capsys):
        outs = set()
        for _ in range(2):
            code, out, _ = run_cli(
                capsys, "verify", "laurent", "--random", "25", "--rng-seed", "7"
            )
            outs.add(out)
            assert code == 0
        assert len(outs) == 1


class TestServeDefaults:
    def test_port_env_override(self, monkeypatch):
        from superquiver.cli import build_parser

        monkeypatch.setenv("SUPERQUIVER_PORT", "9155")
        args = build_parser().parse_args(["serve"])
        assert args.port == 9155

    def test_counterexample_exit_code(self, capsys, monkeypatch):
        from superquiver import cli as cli_mod
        from superquiver.verify import Report

        broken = Report(kind="laurent")
        broken.checked = 1
        broken.failures.append({"index": 0, "reason": "synthetic"})
        monkeypatch.setattr(
            cli_mod.verify_mod, "verify_laurent", lambda *a, **k: broken
        )
        code = cli_mod.main(["verify", "laurent", "--random", "1"])
        out = capsys.readouterr().out
        assert code == 1
        assert "FAIL" in out and "synthetic" in out


class TestWorkerPool:
    def test_jobs_flag_matches_sequential_output(self, capsys):
        seq = run_cli(capsys, "verify", "laurent", "--random", "40", "--rng-seed", "5")
        par = run_cli(
            capsys, "verify", "laurent", "--random", "40", "--rng-seed", "5", "--jobs", "2"
        )
        assert seq[0] == par[0] == 0
        assert seq[1] == par[1]
