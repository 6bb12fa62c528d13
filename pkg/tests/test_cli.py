import contextlib
import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from psydx.cli import main
from psydx.corpus import generate_fixture_corpus, save_corpus
from psydx.mock_scripts import build_all_scripts
from psydx.rewards import group_advantages
from psydx.wire import canonical17, canonical17_list

HELP_DIR = Path(__file__).parent / "data" / "cli_help"

HELP_PATHS = {
    "root": [],
    "kb_validate": ["kb", "validate"],
    "fixture_generate": ["fixture", "generate"],
    "fixture_scripts": ["fixture", "scripts"],
    "config_show": ["config", "show"],
    "config_manifest": ["config", "manifest"],
    "refine": ["refine"],
    "build_trajectories": ["build-trajectories"],
    "score": ["score"],
    "advantages": ["advantages"],
    "schedule": ["schedule"],
    "evaluate": ["evaluate"],
    "report": ["report"],
    "annotations": ["annotations"],
    "serve_rewards": ["serve-rewards"],
}

SUBCOMMAND_FLAGS = {
    "fixture_generate": ["--seed", "--per-category", "--out", "--kb"],
    "fixture_scripts": ["--corpus", "--out", "--kb"],
    "refine": ["--corpus", "--out", "--scripts", "--skip-report", "--policy",
               "--check-gold", "--workers", "--audit", "--kb"],
    "build_trajectories": ["--corpus", "--out", "--scripts", "--rejects",
                           "--workers", "--audit", "--kb"],
    "score": ["--request", "--batch", "--trajectories", "--gold", "--weights",
              "--epoch", "--group", "--out"],
    "advantages": ["--epsilon-norm", "--json"],
    "schedule": ["--epochs", "--json"],
    "evaluate": ["--corpus", "--out", "--scripts", "--report", "--format",
                 "--label", "--workers", "--audit", "--kb"],
    "report": ["--predictions", "--corpus", "--format", "--label", "--out",
               "--kb"],
    "annotations": ["--csv", "--kappa", "--annotators"],
    "serve_rewards": ["--stdin", "--host", "--port"],
}


def run_cli(argv):
    out = io.StringIO()
    err = io.StringIO()
    with contextlib.redirect_stderr(err):
        code = main(argv, stdout=out)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture(scope="module")
def workdir(tmp_path_factory, kb):
    """Corpus + scripts shared by the pipeline subcommand tests."""
    root = tmp_path_factory.mktemp("cli")
    corpus = generate_fixture_corpus(seed=13, n_per_category=1, kb=kb)
    save_corpus(corpus, root / "corpus.jsonl")
    scripts = build_all_scripts(corpus, kb)
    (root / "scripts.json").write_text(
        json.dumps(scripts, ensure_ascii=False, indent=2, sort_keys=True),
        encoding="utf-8",
    )
    return root


class TestKbValidate:
    def test_shipped_kb(self):
        code, out, _ = run_cli(["kb", "validate"])
        assert code == 0
        assert out == "16 categories, 76 disorders\n"

    def test_missing_path_is_domain_error(self, tmp_path):
        code, _, err = run_cli(["kb", "validate", str(tmp_path / "nope")])
        assert code == 1
        assert "error:" in err


class TestFixture:
    def test_generate_deterministic(self, tmp_path):
        a, b = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
        code1, out1, _ = run_cli(["fixture", "generate", "--seed", "3",
                                  "--per-category", "2", "--out", str(a)])
        code2, _, _ = run_cli(["fixture", "generate", "--seed", "3",
                               "--per-category", "2", "--out", str(b)])
        assert code1 == code2 == 0
        assert "wrote 32 records" in out1
        assert a.read_bytes() == b.read_bytes()
        assert len(a.read_text().splitlines()) == 32

    def test_scripts_deterministic(self, workdir, tmp_path):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        for path in (a, b):
            code, _, _ = run_cli(["fixture", "scripts", "--corpus",
                                  str(workdir / "corpus.jsonl"), "--out", str(path)])
            assert code == 0
        assert a.read_bytes() == b.read_bytes()

    def test_scripts_to_stdout(self, workdir):
        code, out, _ = run_cli(["fixture", "scripts", "--corpus",
                                str(workdir / "corpus.jsonl")])
        assert code == 0
        assert isinstance(json.loads(out), dict)


class TestRefineCommand:
    def test_refine_and_reports(self, workdir, tmp_path):
        out_path = tmp_path / "refined.jsonl"
        skip_path = tmp_path / "skips.json"
        code, out, _ = run_cli([
            "refine",
            "--corpus", str(workdir / "corpus.jsonl"),
            "--scripts", str(workdir / "scripts.json"),
            "--out", str(out_path),
            "--skip-report", str(skip_path),
        ])
        assert code == 0
        assert out == "refined 16/16, skipped 0\n"
        assert len(out_path.read_text().splitlines()) == 16
        report = json.loads(skip_path.read_text())
        assert report["total"] == 16 and report["skipped"] == 0

    def test_bit_identical_across_runs(self, workdir, tmp_path):
        paths = [tmp_path / "r1.jsonl", tmp_path / "r2.jsonl"]
        for path in paths:
            run_cli(["refine", "--corpus", str(workdir / "corpus.jsonl"),
                     "--scripts", str(workdir / "scripts.json"),
                     "--out", str(path), "--workers", "6"])
        assert paths[0].read_bytes() == paths[1].read_bytes()

    def test_missing_corpus_is_usage_error(self, workdir, tmp_path):
        code, _, err = run_cli(["refine", "--corpus", str(tmp_path / "nope.jsonl"),
                                "--scripts", str(workdir / "scripts.json"),
                                "--out", str(tmp_path / "o.jsonl")])
        assert code == 2
        assert "usage: psydx refine" in err


class TestBuildTrajectoriesCommand:
    def test_build_and_report(self, workdir, tmp_path):
        out_path = tmp_path / "sft.jsonl"
        rej_path = tmp_path / "rejects.json"
        code, out, _ = run_cli([
            "build-trajectories",
            "--corpus", str(workdir / "corpus.jsonl"),
            "--scripts", str(workdir / "scripts.json"),
            "--out", str(out_path),
            "--rejects", str(rej_path),
        ])
        assert code == 0
        # Single-disorder categories cannot reach the 2-candidate minimum.
        assert out == "kept 13/16, rejected 3\n"
        report = json.loads(rej_path.read_text())
        assert report["causes"] == {"undersized_hypothesis": 3}
        lines = out_path.read_text().splitlines()
        assert len(lines) == 13
        assert set(json.loads(lines[0])) == {"input", "target"}

    def test_bit_identical_across_runs(self, workdir, tmp_path):
        paths = [tmp_path / "s1.jsonl", tmp_path / "s2.jsonl"]
        for path in paths:
            run_cli(["build-trajectories", "--corpus", str(workdir / "corpus.jsonl"),
                     "--scripts", str(workdir / "scripts.json"),
                     "--out", str(path), "--workers", "3"])
        assert paths[0].read_bytes() == paths[1].read_bytes()


class TestEvaluateAndReport:
    def test_evaluate_writes_predictions_and_report(self, workdir, tmp_path):
        preds = tmp_path / "preds.jsonl"
        report = tmp_path / "report.json"
        code, out, _ = run_cli([
            "evaluate",
            "--corpus", str(workdir / "corpus.jsonl"),
            "--scripts", str(workdir / "scripts.json"),
            "--out", str(preds),
            "--report", str(report),
        ])
        assert code == 0
        assert out == "n=16 ca=100.00 da=100.00 ja=100.00\n"
        doc = json.loads(report.read_text())
        assert doc["ca"] == 1.0 and doc["n"] == 16
        assert len(preds.read_text().splitlines()) == 16

    def test_evaluate_bit_identical_across_runs(self, workdir, tmp_path):
        paths = [tmp_path / "p1.jsonl", tmp_path / "p2.jsonl"]
        for path in paths:
            run_cli(["evaluate", "--corpus", str(workdir / "corpus.jsonl"),
                     "--scripts", str(workdir / "scripts.json"),
                     "--out", str(path), "--workers", "5"])
        assert paths[0].read_bytes() == paths[1].read_bytes()

    def test_report_markdown_columns(self, workdir, tmp_path, kb):
        preds = tmp_path / "preds.jsonl"
        run_cli(["evaluate", "--corpus", str(workdir / "corpus.jsonl"),
                 "--scripts", str(workdir / "scripts.json"), "--out", str(preds)])
        code, out, _ = run_cli(["report", "--predictions", str(preds),
                                "--corpus", str(workdir / "corpus.jsonl"),
                                "--format", "markdown", "--label", "mockrun"])
        assert code == 0
        header = out.splitlines()[0]
        for abbrev in kb.abbreviations():
            assert f" {abbrev} " in header
        assert "| mockrun |" in out


class TestScoreCommand:
    GOLD = {"category": "Mood disorders", "disorder": "6A70"}
    GOOD = {"category": "Mood disorders", "candidates": ["6A70"], "final": "6A70"}
    POOR = {"category": "Catatonia", "candidates": ["6A60", "6A61", "6A70"],
            "final": "6A60"}

    def test_single_request(self, tmp_path):
        req = tmp_path / "req.json"
        req.write_text(json.dumps({"trajectory": self.GOOD, "gold": self.GOLD,
                                   "weights": [1, 1, 1]}), encoding="utf-8")
        code, out, _ = run_cli(["score", "--request", str(req)])
        assert code == 0
        assert json.loads(out)["reward"]["composite"] == canonical17(1.0)

    def test_batch_requests(self, tmp_path):
        batch = tmp_path / "batch.jsonl"
        rows = [
            {"id": "a", "trajectory": self.GOOD, "gold": self.GOLD, "epoch": 0},
            {"id": "b", "trajectories": [self.GOOD, self.POOR], "gold": self.GOLD,
             "weights": [0.5, 0.25, 0.25]},
        ]
        batch.write_text("".join(json.dumps(r) + "\n" for r in rows),
                         encoding="utf-8")
        out_path = tmp_path / "resp.jsonl"
        code, _, _ = run_cli(["score", "--batch", str(batch), "--out",
                              str(out_path)])
        assert code == 0
        lines = [json.loads(l) for l in out_path.read_text().splitlines()]
        assert [row["id"] for row in lines] == ["a", "b"]
        assert lines[1]["rewards"] == canonical17_list([1.0, 0.125])

    def test_trajectories_with_gold_file(self, tmp_path):
        trajs = tmp_path / "t.jsonl"
        trajs.write_text(json.dumps(self.GOOD) + "\n" + json.dumps(self.POOR) + "\n",
                         encoding="utf-8")
        gold = tmp_path / "gold.json"
        gold.write_text(json.dumps(self.GOLD), encoding="utf-8")
        code, out, _ = run_cli(["score", "--trajectories", str(trajs),
                                "--gold", str(gold), "--weights", "0.5,0.25,0.25"])
        assert code == 0
        rows = [json.loads(l) for l in out.splitlines()]
        assert [r["reward"]["composite"] for r in rows] == canonical17_list(
            [1.0, 0.125])
        code, out, _ = run_cli(["score", "--trajectories", str(trajs),
                                "--gold", str(gold), "--weights", "0.5,0.25,0.25",
                                "--group"])
        assert code == 0
        assert "advantages" in json.loads(out)

    def test_missing_gold_file_is_usage_error(self, tmp_path):
        trajs = tmp_path / "t.jsonl"
        trajs.write_text(json.dumps(self.GOOD) + "\n", encoding="utf-8")
        code, _, err = run_cli(["score", "--trajectories", str(trajs),
                                "--gold", str(tmp_path / "missing.json"),
                                "--weights", "1,1,1"])
        assert code == 2
        assert "usage: psydx score" in err
        assert "gold label file" in err

    def test_exactly_one_source_required(self, tmp_path):
        req = tmp_path / "req.json"
        req.write_text("{}", encoding="utf-8")
        code, _, err = run_cli(["score", "--request", str(req), "--batch",
                                str(req)])
        assert code == 2
        code, _, _ = run_cli(["score"])
        assert code == 2

    def test_trajectories_need_weights_or_epoch(self, tmp_path):
        trajs = tmp_path / "t.jsonl"
        trajs.write_text(json.dumps(self.GOOD) + "\n", encoding="utf-8")
        gold = tmp_path / "gold.json"
        gold.write_text(json.dumps(self.GOLD), encoding="utf-8")
        code, _, err = run_cli(["score", "--trajectories", str(trajs),
                                "--gold", str(gold)])
        assert code == 2
        assert "--weights or --epoch" in err

    def test_domain_error_exit_1(self, tmp_path):
        req = tmp_path / "req.json"
        req.write_text('{"hello": 1}', encoding="utf-8")
        code, _, err = run_cli(["score", "--request", str(req)])
        assert code == 1
        assert "error:" in err


class TestAdvantagesCommand:
    def test_lines_output(self):
        code, out, _ = run_cli(["advantages", "1.0", "0.125"])
        assert code == 0
        assert out.splitlines() == canonical17_list(
            group_advantages([1.0, 0.125], 1e-4))

    def test_json_output_and_epsilon_flag(self):
        code, out, _ = run_cli(["advantages", "1.0", "0.125",
                                "--epsilon-norm", "0.5", "--json"])
        assert code == 0
        doc = json.loads(out)
        assert doc["advantages"] == canonical17_list(
            group_advantages([1.0, 0.125], 0.5))

    def test_bad_epsilon_is_domain_error(self):
        code, _, err = run_cli(["advantages", "1.0", "--epsilon-norm", "-1"])
        assert code == 1
        assert "error:" in err

    def test_no_rewards_is_usage_error(self):
        code, _, _ = run_cli(["advantages"])
        assert code == 2


class TestScheduleCommand:
    def test_three_epochs(self):
        code, out, _ = run_cli(["schedule", "--epochs", "3"])
        assert code == 0
        assert out.splitlines() == [
            "(0.5, 0.25, 0.25)",
            "(0.25, 0.5, 0.25)",
            "(0.25, 0.25, 0.5)",
        ]

    def test_five_epochs(self):
        code, out, _ = run_cli(["schedule", "--epochs", "5"])
        assert code == 0
        assert out.splitlines() == [
            "(0.5, 0.25, 0.25)",
            "(0.5, 0.25, 0.25)",
            "(0.25, 0.5, 0.25)",
            "(0.25, 0.5, 0.25)",
            "(0.25, 0.25, 0.5)",
        ]

    def test_json_output(self):
        code, out, _ = run_cli(["schedule", "--epochs", "3", "--json"])
        assert code == 0
        doc = json.loads(out)
        assert doc["epochs"][0]["weights"] == canonical17_list([0.5, 0.25, 0.25])

    def test_zero_epochs_is_usage_error(self):
        code, _, err = run_cli(["schedule", "--epochs", "0"])
        assert code == 2
        assert "usage: psydx schedule" in err


class TestAnnotationsCommand:
    def test_aggregate_with_kappa(self, tmp_path):
        csv_path = tmp_path / "ann.csv"
        csv_path.write_text(
            "case_id,model_id,error_type,annotator_id\n"
            "c1,m,NR,a\nc1,m,NR,b\nc2,m,WI,a\nc2,m,WI,b\n",
            encoding="utf-8",
        )
        code, out, _ = run_cli(["annotations", "--csv", str(csv_path), "--kappa"])
        assert code == 0
        doc = json.loads(out)
        assert doc["counts"]["NR"] == 2
        assert doc["kappa"] == canonical17(1.0)


class TestConfigCommands:
    def test_show_and_manifest(self):
        code, out, _ = run_cli(["config", "show"])
        assert code == 0
        assert json.loads(out)["reward"]["group_size"] == 8
        code, out, _ = run_cli(["config", "manifest"])
        assert code == 0
        doc = json.loads(out)
        assert doc["passthrough"]["sft_lr"] == 5e-5
        assert doc["passthrough"]["kl_coeff"] == 0.001

    def test_config_file_feeds_subcommands(self, tmp_path):
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({"reward": {"phase_table": [[1, 1, 2]]}}),
                       encoding="utf-8")
        code, out, _ = run_cli(["--config", str(cfg), "schedule", "--epochs", "2"])
        assert code == 0
        assert out.splitlines() == ["(0.25, 0.25, 0.5)", "(0.25, 0.25, 0.5)"]

    def test_missing_config_is_usage_error(self, tmp_path):
        code, _, err = run_cli(["--config", str(tmp_path / "nope.json"),
                                "schedule", "--epochs", "3"])
        assert code == 2
        assert "config file not found" in err


class TestServeStdinCommand:
    def test_objective_round_trip(self, monkeypatch, capsys):
        monkeypatch.setattr(
            sys, "stdin",
            io.StringIO('{"id": "x", "ratios": [1.5], "advantages": [1.0]}\n'),
        )
        code = main(["serve-rewards", "--stdin"])
        assert code == 0
        captured = capsys.readouterr().out
        assert json.loads(captured) == {"id": "x",
                                        "objective": canonical17(1.2)}


class TestHelpSnapshots:
    @pytest.mark.parametrize("name", sorted(HELP_PATHS))
    def test_help_matches_snapshot(self, name, monkeypatch, capsys):
        monkeypatch.setenv("COLUMNS", "80")
        code = main([*HELP_PATHS[name], "--help"])
        assert code == 0
        captured = capsys.readouterr().out
        expected = (HELP_DIR / f"{name}.txt").read_text(encoding="utf-8")
        assert captured == expected

    @pytest.mark.parametrize("name", sorted(SUBCOMMAND_FLAGS))
    def test_help_documents_every_flag(self, name):
        text = (HELP_DIR / f"{name}.txt").read_text(encoding="utf-8")
        for flag in SUBCOMMAND_FLAGS[name]:
            assert flag in text, f"{name} help missing {flag}"

    def test_root_help_lists_all_subcommands(self):
        text = (HELP_DIR / "root.txt").read_text(encoding="utf-8")
        for word in ("kb", "fixture", "config", "refine", "build-trajectories",
                     "score", "advantages", "schedule", "evaluate", "report",
                     "annotations", "serve-rewards"):
            assert word in text


class TestSharedRewardFixture:
    """The checked-in request/response pair other clients verify against."""

    FIXTURES = Path(__file__).parent.parent / "fixtures"

    def test_batch_reproduces_checked_in_responses(self, tmp_path):
        out_path = tmp_path / "resp.jsonl"
        code, _, _ = run_cli(["score", "--batch",
                              str(self.FIXTURES / "reward_requests.jsonl"),
                              "--out", str(out_path)])
        assert code == 0
        expected = (self.FIXTURES / "reward_responses.jsonl").read_bytes()
        assert out_path.read_bytes() == expected

    def test_fixture_covers_every_hypothesis_reward(self):
        rows = [
            json.loads(line) for line in
            (self.FIXTURES / "reward_responses.jsonl").read_text().splitlines()
        ]
        scores = [r for r in rows if "reward" in r]
        assert len(scores) == 8
        hypo = {r["reward"]["r_hypo"] for r in scores}
        assert hypo == set(canonical17_list([1.0, 0.75, 0.5, 0.25, 0.0]))
        group = rows[-1]
        assert len(group["advantages"]) == 8


class TestEntryPoint:
    def test_module_invocation(self):
        proc = subprocess.run(
            [sys.executable, "-m", "psydx.cli", "kb", "validate"],
            capture_output=True, text=True, timeout=60,
        )
        assert proc.returncode == 0
        assert proc.stdout == "16 categories, 76 disorders\n"
