from __future__ import annotations

import json

import pytest

from khs.config import CALIBRATED, DEFAULT_KV_BOUND, LITERAL, Config, load_config


def test_defaults():
    cfg = Config()
    assert cfg.verified_kv_bound == DEFAULT_KV_BOUND == 2**31
    assert cfg.default_cp_mode == CALIBRATED
    assert cfg.output_format == "ascii"


def test_env_overrides_file(tmp_path, monkeypatch):
    f = tmp_path / "cfg.json"
    f.write_text(json.dumps({"verified_kv_bound": 500, "default_cp_mode": "literal"}))
    monkeypatch.setenv("KHS_KV_BOUND", "1000")
    cfg = load_config(f)
    assert cfg.verified_kv_bound == 1000  # env wins over file
    assert cfg.default_cp_mode == LITERAL  # file sets what env does not


def test_overrides_win_over_env(monkeypatch):
    monkeypatch.setenv("KHS_CP_MODE", "literal")
    cfg = load_config(default_cp_mode="calibrated", verified_kv_bound=77)
    assert cfg.default_cp_mode == CALIBRATED
    assert cfg.verified_kv_bound == 77


def test_bad_values_rejected(tmp_path):
    with pytest.raises(ValueError):
        load_config(default_cp_mode="guess")
    f = tmp_path / "cfg.json"
    f.write_text(json.dumps({"mystery_key": 1}))
    with pytest.raises(ValueError):
        load_config(f)
    f.write_text(json.dumps([1, 2]))
    with pytest.raises(ValueError):
        load_config(f)
