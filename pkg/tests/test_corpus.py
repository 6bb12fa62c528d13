import json

import pytest

from psydx.corpus import (
    Corpus,
    generate_fixture_corpus,
    load_corpus,
    record_to_obj,
    save_corpus,
)
from psydx.errors import DuplicateIdError, LabelError, ParseError
from psydx.wire import canonical17, dumps_line, read_jsonl, write_jsonl


def _line(case_id="100001", code="6A20", category="Schizophrenia or other primary psychotic disorders",
          display="Schizophrenia", **overrides):
    obj = {
        "id": case_id,
        "sections": {
            "chief_complaint": "Hearing voices for two months.",
            "present_illness_history": "Persistent auditory hallucinations and persecutory ideas.",
            "personal_family_history": "Unremarkable.",
            "physical_examination": "Normal.",
            "mental_status_examination": "Delusions of reference elicited.",
            "auxiliary_tests": "",
        },
        "gold_category": category,
        "gold_disorder": {"code": code, "display_name": display},
    }
    obj.update(overrides)
    return obj


def _write(tmp_path, objs, name="corpus.jsonl"):
    p = tmp_path / name
    p.write_text("\n".join(json.dumps(o) for o in objs) + "\n", encoding="utf-8")
    return p


class TestLoad:
    def test_three_valid_records(self, tmp_path, kb):
        p = _write(tmp_path, [
            _line("1"),
            _line("2", code="6B82", category="Feeding or eating disorders",
                  display="Binge eating disorder"),
            _line("3", code="6A40", category="Catatonia",
                  display="Catatonia associated with another mental disorder"),
        ])
        corpus = load_corpus(p, kb)
        assert len(corpus) == 3
        assert corpus.records[1].gold_disorder.code == "6B82"

    def test_disorder_under_wrong_category(self, tmp_path, kb):
        p = _write(tmp_path, [_line(category="Mood disorders")])
        with pytest.raises(LabelError):
            load_corpus(p, kb)

    def test_unknown_code(self, tmp_path, kb):
        p = _write(tmp_path, [_line(code="6Z99", display="")])
        with pytest.raises(LabelError):
            load_corpus(p, kb)

    def test_duplicate_ids(self, tmp_path, kb):
        p = _write(tmp_path, [_line("123456"), _line("123456")])
        with pytest.raises(DuplicateIdError):
            load_corpus(p, kb)

    def test_malformed_line_reports_line_number(self, tmp_path, kb):
        p = tmp_path / "bad.jsonl"
        p.write_text(json.dumps(_line("1")) + "\n{oops\n", encoding="utf-8")
        with pytest.raises(ParseError) as info:
            load_corpus(p, kb)
        assert info.value.line_number == 2
        assert "line 2" in str(info.value)

    def test_comorbid_disorder_list_rejected(self, tmp_path, kb):
        p = _write(tmp_path, [_line(gold_disorder=[
            {"code": "6A20"}, {"code": "6A21"},
        ])])
        with pytest.raises(LabelError):
            load_corpus(p, kb)

    def test_comorbid_category_list_rejected(self, tmp_path, kb):
        p = _write(tmp_path, [_line(gold_category=["Mood disorders", "Catatonia"])])
        with pytest.raises(LabelError):
            load_corpus(p, kb)

    def test_display_name_mismatch(self, tmp_path, kb):
        p = _write(tmp_path, [_line(display="Schizoaffective disorder")])
        with pytest.raises(LabelError):
            load_corpus(p, kb)

    def test_blank_display_name_allowed(self, tmp_path, kb):
        p = _write(tmp_path, [_line(display="")])
        assert len(load_corpus(p, kb)) == 1

    def test_missing_section(self, tmp_path, kb):
        obj = _line()
        del obj["sections"]["physical_examination"]
        p = _write(tmp_path, [obj])
        with pytest.raises(LabelError):
            load_corpus(p, kb)

    def test_empty_required_section(self, tmp_path, kb):
        obj = _line()
        obj["sections"]["chief_complaint"] = "  "
        p = _write(tmp_path, [obj])
        with pytest.raises(LabelError):
            load_corpus(p, kb)

    def test_empty_auxiliary_tests_allowed(self, tmp_path, kb):
        assert len(load_corpus(_write(tmp_path, [_line()]), kb)) == 1

    def test_extra_sections_preserved_in_order(self, tmp_path, kb):
        obj = _line()
        obj["sections"]["imaging_notes"] = "MRI unremarkable."
        p = _write(tmp_path, [obj])
        corpus = load_corpus(p, kb)
        assert list(corpus.records[0].sections)[-1] == "imaging_notes"

    def test_bare_code_gold_disorder(self, tmp_path, kb):
        p = _write(tmp_path, [_line(gold_disorder="6A20")])
        assert load_corpus(p, kb).records[0].gold_disorder.code == "6A20"


class TestRoundTrip:
    def test_save_load_equal(self, tmp_path, kb):
        corpus = generate_fixture_corpus(7, 1, kb)
        p = tmp_path / "out.jsonl"
        save_corpus(corpus, p)
        again = load_corpus(p, kb, provenance="fixture")
        assert again == corpus

    def test_record_to_obj_schema(self, kb):
        corpus = generate_fixture_corpus(7, 1, kb)
        obj = record_to_obj(corpus.records[0])
        assert set(obj) == {"id", "sections", "gold_category", "gold_disorder"}
        assert set(obj["gold_disorder"]) == {"code", "display_name"}


class TestFixtureGenerator:
    def test_deterministic(self, tmp_path, kb):
        a = tmp_path / "a.jsonl"
        b = tmp_path / "b.jsonl"
        save_corpus(generate_fixture_corpus(7, 1, kb), a)
        save_corpus(generate_fixture_corpus(7, 1, kb), b)
        assert a.read_bytes() == b.read_bytes()

    def test_seed_changes_content(self, kb):
        a = generate_fixture_corpus(7, 1, kb)
        b = generate_fixture_corpus(8, 1, kb)
        assert a != b

    def test_counts_per_category(self, kb):
        corpus = generate_fixture_corpus(7, 2, kb)
        assert len(corpus) == 32
        per_cat: dict[str, int] = {}
        for r in corpus.records:
            per_cat[r.gold_category] = per_cat.get(r.gold_category, 0) + 1
        assert set(per_cat.values()) == {2}
        assert len(per_cat) == 16

    def test_zero_rejected(self, kb):
        with pytest.raises(ValueError):
            generate_fixture_corpus(7, 0, kb)

    def test_ids_unique(self, kb):
        corpus = generate_fixture_corpus(3, 3, kb)
        ids = [r.id for r in corpus.records]
        assert len(set(ids)) == len(ids)

    def test_sections_embed_manifestations(self, kb):
        corpus = generate_fixture_corpus(7, 1, kb)
        for record in corpus.records:
            entry = kb.lookup(record.gold_disorder.code)
            text = record.narrative().lower()
            assert any(m.symptom.lower() in text for m in entry.manifestations)

    def test_all_records_validate(self, kb):
        corpus = generate_fixture_corpus(11, 2, kb)
        for record in corpus.records:
            assert record.gold_category == kb.lookup(record.gold_disorder.code).category


class TestWire:
    def test_canonical17_known_values(self):
        assert canonical17(0.125) == "1.2500000000000000e-1"
        assert canonical17(1.0) == "1.0000000000000000e0"
        assert canonical17(0.0) == "0.0000000000000000e0"
        assert canonical17(-0.75) == "-7.5000000000000000e-1"

    def test_canonical17_rejects_non_finite(self):
        with pytest.raises(ValueError):
            canonical17(float("inf"))

    def test_canonical17_roundtrip(self):
        for value in (0.1, 1 / 3, 2 ** -40, 123456.789):
            assert float(canonical17(value)) == value

    def test_jsonl_roundtrip(self, tmp_path):
        rows = [{"a": 1}, {"b": [1, 2]}, {"c": "x"}]
        p = tmp_path / "rows.jsonl"
        assert write_jsonl(p, rows) == 3
        assert read_jsonl(p) == rows

    def test_dumps_line_compact(self):
        assert dumps_line({"a": 1, "b": 2}) == '{"a":1,"b":2}'
