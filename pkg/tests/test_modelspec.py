"""Model-spec JSON parsing, validation messages, and round trips."""

import json

import pytest

from mdepbounds import (
    ExplicitEventFamily,
    WindowModel,
    consecutive_run_model,
    dump_model,
    load_model,
    model_to_dict,
    parse_model,
)
from mdepbounds.errors import ModelSpecError


class TestParseModel:
    def test_window_roundtrip(self, tmp_path):
        model = consecutive_run_model(24)
        path = tmp_path / "w1.json"
        dump_model(model, path)
        assert load_model(path) == model

    def test_explicit_roundtrip(self, tmp_path):
        family = ExplicitEventFamily.from_events(
            [0.25] * 4, [[0, 1], [1, 2]], 1)
        path = tmp_path / "e1.json"
        dump_model(family, path)
        loaded = load_model(path)
        assert isinstance(loaded, ExplicitEventFamily)
        assert loaded.events == family.events
        assert loaded.m == family.m

    def test_predicate_table_accepts_01(self):
        spec = {"type": "window", "m": 0, "alphabet_size": 2,
                "symbol_dist": [0.5, 0.5], "predicate_table": [0, 1],
                "horizon": 3}
        model = parse_model(spec)
        assert model.predicate_table == (False, True)

    def test_unknown_type(self):
        with pytest.raises(ModelSpecError, match="unknown model type"):
            parse_model({"type": "mystery"})

    def test_missing_field_named(self):
        with pytest.raises(ModelSpecError, match="missing field 'horizon'"):
            parse_model({"type": "window", "m": 0, "alphabet_size": 2,
                         "symbol_dist": [0.5, 0.5],
                         "predicate_table": [True, False]})

    def test_wrong_field_type_named(self):
        with pytest.raises(ModelSpecError, match="'m' must be an integer"):
            parse_model({"type": "window", "m": "two", "alphabet_size": 2,
                         "symbol_dist": [0.5, 0.5],
                         "predicate_table": [True, False], "horizon": 1})

    def test_bad_table_entry(self):
        with pytest.raises(ModelSpecError, match=r"predicate_table\[1\]"):
            parse_model({"type": "window", "m": 0, "alphabet_size": 2,
                         "symbol_dist": [0.5, 0.5],
                         "predicate_table": [True, 0.5], "horizon": 1})

    def test_domain_errors_become_spec_errors(self):
        with pytest.raises(ModelSpecError, match="sum to 1"):
            parse_model({"type": "window", "m": 0, "alphabet_size": 2,
                         "symbol_dist": [0.9, 0.6],
                         "predicate_table": [True, False], "horizon": 1})

    def test_decode_error_reports_line(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text('{"type": "window",\n  "m": }\n')
        with pytest.raises(ModelSpecError, match="line 2"):
            load_model(path)

    def test_missing_file(self, tmp_path):
        with pytest.raises(ModelSpecError):
            load_model(tmp_path / "nope.json")


class TestNormativeFieldNames:
    def test_window_dict_fields(self):
        d = model_to_dict(consecutive_run_model(3))
        assert set(d) == {"type", "m", "alphabet_size", "symbol_dist",
                          "predicate_table", "horizon"}

    def test_explicit_dict_fields(self):
        d = model_to_dict(ExplicitEventFamily.from_events([1.0], [[0]], 0))
        assert set(d) == {"type", "m", "outcome_weights", "events"}

    def test_emitted_json_parses_back(self, tmp_path):
        model = consecutive_run_model(5)
        path = tmp_path / "m.json"
        dump_model(model, path)
        raw = json.loads(path.read_text())
        assert raw["type"] == "window"
        assert parse_model(raw) == model
