import json

import pytest

from psydx.corpus import generate_fixture_corpus
from psydx.errors import (
    EmptyRewriteError,
    InvalidCategoryError,
    InvalidDisorderError,
    RefinementError,
    UnparseableError,
    UsageError,
)
from psydx.gateway import Gateway, MockBackend, script_key
from psydx.mock_scripts import build_refine_scripts
from psydx.refinery import (
    load_refined,
    refine_corpus,
    refine_step1_category,
    refine_step2_disorder,
    refine_step3_rewrite,
    save_refined,
    save_skip_report,
)


@pytest.fixture(scope="module")
def corpus(kb):
    return generate_fixture_corpus(seed=23, n_per_category=1, kb=kb)


@pytest.fixture(scope="module")
def scripts(corpus, kb):
    return build_refine_scripts(corpus, kb)


def _gateway(scripts, **kw):
    kw.setdefault("sleeper", lambda s: None)
    return Gateway(MockBackend(scripts), **kw)


class TestStep1:
    def test_scripted_category(self, kb, corpus):
        record = corpus.records[0]
        gw = _gateway(
            {
                script_key("category_classify", record.id): json.dumps(
                    {"diagnostic_category": ["Mood disorders"]}
                )
            }
        )
        assert refine_step1_category(record, kb, gw) == "Mood disorders"

    def test_two_categories_takes_first_and_warns(self, kb, corpus, caplog):
        record = corpus.records[0]
        gw = _gateway(
            {
                script_key("category_classify", record.id): json.dumps(
                    {"diagnostic_category": ["Catatonia", "Mood disorders"]}
                )
            }
        )
        with caplog.at_level("WARNING", logger="psydx.refinery"):
            assert refine_step1_category(record, kb, gw) == "Catatonia"
        assert any("taking the first" in m for m in caplog.messages)

    def test_invalid_category(self, kb, corpus):
        record = corpus.records[0]
        gw = _gateway(
            {
                script_key("category_classify", record.id): json.dumps(
                    {"diagnostic_category": ["Made-up disorders"]}
                )
            }
        )
        with pytest.raises(InvalidCategoryError, match="Made-up disorders"):
            refine_step1_category(record, kb, gw)

    def test_unparseable_after_retry(self, kb, corpus):
        record = corpus.records[0]
        gw = _gateway({script_key("category_classify", record.id): "free prose"})
        with pytest.raises(UnparseableError):
            refine_step1_category(record, kb, gw)

    def test_retry_recovers_with_retry_text(self, kb, corpus):
        record = corpus.records[0]
        gw = _gateway(
            {
                script_key("category_classify", record.id): {
                    "text": "hmm, thinking...",
                    "retry_text": json.dumps({"diagnostic_category": ["Catatonia"]}),
                }
            }
        )
        raws = []
        assert refine_step1_category(record, kb, gw, raw_sink=raws) == "Catatonia"
        assert raws == [json.dumps({"diagnostic_category": ["Catatonia"]})]

    def test_bare_string_category_accepted(self, kb, corpus):
        record = corpus.records[0]
        gw = _gateway(
            {
                script_key("category_classify", record.id): json.dumps(
                    {"diagnostic_category": "Catatonia"}
                )
            }
        )
        assert refine_step1_category(record, kb, gw) == "Catatonia"


class TestStep2:
    def test_bare_code_reply(self, kb, corpus):
        record = corpus.records[0]
        gw = _gateway({script_key("disorder_check", record.id): "6A40"})
        code = refine_step2_disorder(record, "Catatonia", kb, gw)
        assert code.code == "6A40"
        assert code.display_name

    def test_json_field_reply(self, kb, corpus):
        record = corpus.records[0]
        gw = _gateway(
            {
                script_key("disorder_check", record.id): json.dumps(
                    {"id": record.id, "diagnostic_disorder": "6A41"}
                )
            }
        )
        assert refine_step2_disorder(record, "Catatonia", kb, gw).code == "6A41"

    def test_code_outside_category(self, kb, corpus):
        record = corpus.records[0]
        gw = _gateway({script_key("disorder_check", record.id): "6A20"})
        with pytest.raises(InvalidDisorderError, match="6A20"):
            refine_step2_disorder(record, "Catatonia", kb, gw)

    def test_junk_code(self, kb, corpus):
        record = corpus.records[0]
        gw = _gateway(
            {
                script_key("disorder_check", record.id): json.dumps(
                    {"diagnostic_disorder": "banana"}
                )
            }
        )
        with pytest.raises(InvalidDisorderError):
            refine_step2_disorder(record, "Catatonia", kb, gw)

    def test_unparseable(self, kb, corpus):
        record = corpus.records[0]
        gw = _gateway(
            {script_key("disorder_check", record.id): "the patient is unwell"}
        )
        with pytest.raises(UnparseableError):
            refine_step2_disorder(record, "Catatonia", kb, gw)


class TestStep3:
    def test_scripted_rewrite(self, kb, corpus):
        record = corpus.records[0]
        gw = _gateway(
            {
                script_key("rewrite", record.id): json.dumps(
                    {"revised_record": "Cleaned-up record."}
                )
            }
        )
        text = refine_step3_rewrite(record, "Catatonia", "6A40", kb, gw)
        assert text == "Cleaned-up record."

    def test_empty_rewrite(self, kb, corpus):
        record = corpus.records[0]
        gw = _gateway(
            {script_key("rewrite", record.id): json.dumps({"revised_record": ""})}
        )
        with pytest.raises(EmptyRewriteError):
            refine_step3_rewrite(record, "Catatonia", "6A40", kb, gw)

    def test_prose_unparseable(self, kb, corpus):
        record = corpus.records[0]
        gw = _gateway({script_key("rewrite", record.id): "here you go: all fixed"})
        with pytest.raises(UnparseableError):
            refine_step3_rewrite(record, "Catatonia", "6A40", kb, gw)

    def test_disorder_category_consistency_checked(self, kb, corpus):
        record = corpus.records[0]
        gw = _gateway({})
        with pytest.raises(InvalidDisorderError):
            refine_step3_rewrite(record, "Catatonia", "6A20", kb, gw)


class TestRefineCorpus:
    def test_all_succeed(self, kb, corpus, scripts):
        refined, report = refine_corpus(corpus, kb, _gateway(scripts))
        assert len(refined) == len(corpus)
        assert report["total"] == len(corpus)
        assert report["refined"] == len(corpus)
        assert report["skipped"] == 0
        assert report["reasons"] == {}
        # Order-stable, gold-consistent under the happy-path scripts.
        assert [r.source_id for r in refined] == [rec.id for rec in corpus.records]
        for rec, ref in zip(corpus.records, refined):
            assert ref.category == rec.gold_category
            assert ref.disorder.code == rec.gold_disorder.code
            assert ref.rewritten_text
            assert len(ref.step_outputs) == 3

    def test_skip_policy_tallies_reasons(self, kb, corpus, scripts):
        bad = dict(scripts)
        victim = corpus.records[2]
        # Plant a step-2 code from the wrong category.
        other = next(
            rec for rec in corpus.records if rec.gold_category != victim.gold_category
        )
        bad[script_key("disorder_check", victim.id)] = json.dumps(
            {"diagnostic_disorder": other.gold_disorder.code}
        )
        refined, report = refine_corpus(corpus, kb, _gateway(bad), policy="skip")
        assert len(refined) == len(corpus) - 1
        assert report["skipped"] == 1
        assert report["reasons"] == {"InvalidDisorder": 1}
        (skip,) = report["skips"]
        assert skip["source_id"] == victim.id
        assert skip["step"] == "disorder"
        assert report["total"] == report["refined"] + report["skipped"]

    def test_fail_policy_names_record(self, kb, corpus, scripts):
        bad = dict(scripts)
        victim = corpus.records[2]
        bad[script_key("rewrite", victim.id)] = json.dumps({"revised_record": ""})
        with pytest.raises(RefinementError) as exc_info:
            refine_corpus(corpus, kb, _gateway(bad), policy="fail")
        assert exc_info.value.case_id == victim.id
        assert victim.id in str(exc_info.value)
        assert exc_info.value.step == "rewrite"

    def test_bad_policy(self, kb, corpus, scripts):
        with pytest.raises(UsageError):
            refine_corpus(corpus, kb, _gateway(scripts), policy="retry")

    def test_deterministic_under_mock(self, kb, corpus, scripts):
        first, _ = refine_corpus(corpus, kb, _gateway(scripts), max_workers=4)
        second, _ = refine_corpus(corpus, kb, _gateway(scripts), max_workers=2)
        assert first == second

    def test_check_gold_flags_disagreement(self, kb, corpus, scripts):
        bad = dict(scripts)
        victim = corpus.records[0]
        wrong = next(
            rec for rec in corpus.records if rec.gold_category != victim.gold_category
        )
        bad[script_key("category_classify", victim.id)] = json.dumps(
            {"diagnostic_category": [wrong.gold_category]}
        )
        # Keep the chain runnable after the planted wrong category.
        bad[script_key("disorder_check", victim.id)] = json.dumps(
            {"diagnostic_disorder": wrong.gold_disorder.code}
        )
        _, lenient_report = refine_corpus(corpus, kb, _gateway(bad))
        assert lenient_report["skipped"] == 0
        refined, report = refine_corpus(corpus, kb, _gateway(bad), check_gold=True)
        assert report["reasons"] == {"GoldInconsistent": 1}
        assert report["skips"][0]["source_id"] == victim.id

    def test_every_output_passes_kb_checks(self, kb, corpus, scripts):
        refined, _ = refine_corpus(corpus, kb, _gateway(scripts))
        for ref in refined:
            entry = kb.lookup(ref.disorder.code)
            assert entry.category == ref.category

    def test_round_trip_jsonl(self, kb, corpus, scripts, tmp_path):
        refined, report = refine_corpus(corpus, kb, _gateway(scripts))
        path = tmp_path / "refined.jsonl"
        assert save_refined(path, refined) == len(refined)
        assert load_refined(path) == refined
        report_path = tmp_path / "skips.json"
        save_skip_report(report_path, report)
        assert json.loads(report_path.read_text())["total"] == len(corpus)
