import io
import json
from fractions import Fraction

import pytest
from fastapi.testclient import TestClient

from psydx.config import AppConfig
from psydx.errors import SchemaError
from psydx.rewards import group_advantages
from psydx.service import (
    build_app,
    handle_group,
    handle_objective,
    handle_request,
    handle_score,
    serve_stdin,
)
from psydx.wire import canonical17, canonical17_list

CFG = AppConfig()

GOLD = {"category": "Mood disorders", "disorder": "6A70"}

PERFECT = {"category": "Mood disorders", "candidates": ["6A70", "6A60"], "final": "6A70"}
# Wrong category, gold at rank 3, wrong final: composite 0.125 at (0.5,0.25,0.25).
POOR = {
    "category": "Catatonia",
    "candidates": ["6A60", "6A61", "6A70"],
    "final": "6A60",
}


class TestHandleScore:
    def test_explicit_weights(self):
        doc = {"id": "t1", "trajectory": POOR, "gold": GOLD,
               "weights": [0.5, 0.25, 0.25]}
        out = handle_score(doc, CFG)
        assert out["id"] == "t1"
        assert out["reward"]["composite"] == canonical17(0.125)
        assert out["reward"]["r_cat"] == canonical17(0.0)
        assert out["reward"]["r_hypo"] == canonical17(0.5)
        assert out["reward"]["r_diff"] == canonical17(0.0)
        assert out["reward"]["weights"] == canonical17_list([0.5, 0.25, 0.25])

    def test_weights_given_as_ratios(self):
        doc = {"trajectory": POOR, "gold": GOLD, "weights": [2, 1, 1]}
        assert handle_score(doc, CFG)["reward"]["composite"] == canonical17(0.125)

    def test_epoch_resolves_via_schedule(self):
        doc = {"trajectory": PERFECT, "gold": GOLD, "epoch": 0}
        out = handle_score(doc, CFG)
        assert out["reward"]["weights"] == canonical17_list([0.5, 0.25, 0.25])
        doc = {"trajectory": PERFECT, "gold": GOLD, "epoch": 4}
        out = handle_score(doc, CFG)
        assert out["reward"]["weights"] == canonical17_list([0.25, 0.25, 0.5])

    def test_weights_xor_epoch(self):
        base = {"trajectory": PERFECT, "gold": GOLD}
        with pytest.raises(SchemaError):
            handle_score(base, CFG)
        with pytest.raises(SchemaError):
            handle_score({**base, "weights": [1, 1, 1], "epoch": 0}, CFG)

    def test_malformed_trajectory_fields_rejected(self):
        doc = {"trajectory": {"candidates": ["6A70", 7]}, "gold": GOLD, "epoch": 0}
        with pytest.raises(SchemaError):
            handle_score(doc, CFG)

    def test_missing_stages_score_zero(self):
        doc = {"trajectory": {}, "gold": GOLD, "weights": [1, 1, 1]}
        assert handle_score(doc, CFG)["reward"]["composite"] == canonical17(0.0)

    def test_bad_gold_rejected(self):
        with pytest.raises(SchemaError):
            handle_score({"trajectory": PERFECT, "gold": {"category": 3},
                          "epoch": 0}, CFG)


class TestHandleGroup:
    def test_two_member_group_hand_values(self):
        doc = {
            "id": "g1",
            "gold": GOLD,
            "trajectories": [PERFECT, POOR],
            "weights": [0.5, 0.25, 0.25],
        }
        out = handle_group(doc, CFG)
        assert out["rewards"] == canonical17_list([1.0, 0.125])
        expected = float(Fraction(4375, 4376))
        assert out["advantages"] == canonical17_list([expected, -expected])
        assert out["objective_at_unit_ratios"] == canonical17(0.0)
        assert [b["composite"] for b in out["breakdowns"]] == canonical17_list(
            [1.0, 0.125]
        )

    def test_identical_rewards_zero_advantages(self):
        doc = {"gold": GOLD, "trajectories": [PERFECT] * 8, "epoch": 0}
        out = handle_group(doc, CFG)
        assert out["advantages"] == [canonical17(0.0)] * 8

    def test_epsilon_norm_override(self):
        doc = {
            "gold": GOLD,
            "trajectories": [PERFECT, POOR],
            "weights": [0.5, 0.25, 0.25],
            "epsilon_norm": 0.5,
        }
        out = handle_group(doc, CFG)
        assert out["advantages"] == canonical17_list(
            group_advantages([1.0, 0.125], 0.5)
        )

    def test_empty_group_rejected(self):
        with pytest.raises(SchemaError):
            handle_group({"gold": GOLD, "trajectories": [], "epoch": 0}, CFG)


class TestHandleObjective:
    def test_clipped_high_ratio(self):
        out = handle_objective({"ratios": [1.5], "advantages": [1.0]}, CFG)
        assert out["objective"] == canonical17(1.2)

    def test_epsilon_clip_override(self):
        doc = {"ratios": [1.5], "advantages": [1.0], "epsilon_clip": 0.5}
        assert handle_objective(doc, CFG)["objective"] == canonical17(1.5)

    def test_negative_advantage_clip_floor(self):
        out = handle_objective({"ratios": [0.5], "advantages": [-1.0]}, CFG)
        assert out["objective"] == canonical17(-0.8)

    def test_non_positive_ratio_rejected(self):
        with pytest.raises(Exception):
            handle_objective({"ratios": [0.0], "advantages": [1.0]}, CFG)

    def test_non_number_rejected(self):
        with pytest.raises(SchemaError):
            handle_objective({"ratios": ["1"], "advantages": [1.0]}, CFG)


class TestDispatch:
    def test_shape_routing(self):
        score_doc = {"trajectory": PERFECT, "gold": GOLD, "epoch": 0}
        group_doc = {"trajectories": [PERFECT], "gold": GOLD, "epoch": 0}
        objective_doc = {"ratios": [1.0], "advantages": [0.5]}
        assert "reward" in handle_request(score_doc, CFG)
        assert "advantages" in handle_request(group_doc, CFG)
        assert "objective" in handle_request(objective_doc, CFG)

    def test_unrecognized_shape(self):
        with pytest.raises(SchemaError):
            handle_request({"hello": 1}, CFG)
        with pytest.raises(SchemaError):
            handle_request([1, 2], CFG)


class TestServeStdin:
    def _run(self, lines):
        out = io.StringIO()
        serve_stdin(CFG, stdin=io.StringIO("".join(lines)), stdout=out)
        return out.getvalue()

    def test_mixed_request_stream(self):
        lines = [
            json.dumps({"id": "a", "trajectory": PERFECT, "gold": GOLD,
                        "epoch": 0}) + "\n",
            "\n",
            json.dumps({"id": "b", "trajectories": [PERFECT, POOR], "gold": GOLD,
                        "weights": [0.5, 0.25, 0.25]}) + "\n",
            "not json\n",
            json.dumps({"id": "c", "ratios": [1.5], "advantages": [1.0]}) + "\n",
            json.dumps({"id": "d", "trajectory": PERFECT, "gold": GOLD}) + "\n",
        ]
        rows = [json.loads(row) for row in self._run(lines).splitlines()]
        assert [row.get("id") for row in rows] == ["a", "b", None, "c", "d"]
        assert "reward" in rows[0]
        assert "advantages" in rows[1]
        assert "error" in rows[2]
        assert rows[3]["objective"] == canonical17(1.2)
        assert "exactly one of" in rows[4]["error"]

    def test_error_lines_do_not_stop_the_loop(self):
        text = self._run(["[]\n", '{"ratios": [1], "advantages": [1]}\n'])
        rows = text.splitlines()
        assert len(rows) == 2
        assert "error" in json.loads(rows[0])

    def test_deterministic_bytes(self):
        lines = [
            json.dumps({"id": "a", "trajectories": [PERFECT, POOR], "gold": GOLD,
                        "epoch": 2}) + "\n",
        ]
        assert self._run(lines) == self._run(lines)


@pytest.fixture(scope="module")
def client():
    return TestClient(build_app(CFG))


class TestHttpApp:
    def test_healthz(self, client):
        response = client.get("/healthz")
        assert response.status_code == 200
        assert response.json() == {"status": "ok"}

    def test_manifest_passthrough_verbatim(self, client):
        body = client.get("/v1/manifest").json()
        assert body["passthrough"] == CFG.passthrough.model_dump()

    def test_score_matches_direct_handler(self, client):
        doc = {"id": "t1", "trajectory": POOR, "gold": GOLD,
               "weights": [0.5, 0.25, 0.25]}
        response = client.post("/v1/score", json=doc)
        assert response.status_code == 200
        assert response.json() == handle_score(doc, CFG)

    def test_group_matches_direct_handler(self, client):
        doc = {"gold": GOLD, "trajectories": [PERFECT, POOR], "epoch": 0}
        assert client.post("/v1/group", json=doc).json() == handle_group(doc, CFG)

    def test_bad_request_is_400_with_error(self, client):
        response = client.post("/v1/group", json={"gold": GOLD, "trajectories": [],
                                                  "epoch": 0})
        assert response.status_code == 400
        assert "error" in response.json()

    def test_non_json_body_is_400(self, client):
        response = client.post("/v1/score", content=b"pure noise",
                               headers={"content-type": "application/json"})
        assert response.status_code == 400

    def test_objective_endpoint(self, client):
        response = client.post("/v1/objective",
                               json={"ratios": [1.0, 1.0], "advantages": [0.5, -0.5]})
        assert response.json()["objective"] == canonical17(0.0)
