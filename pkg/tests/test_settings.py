from __future__ import annotations

import logging
from pathlib import Path

import pytest

from app.settings import APP_DIR, load_settings, require_dir

pytestmark = pytest.mark.usefixtures("clean_env")


def test_defaults():
    settings = load_settings()
    assert settings.seed == 7
    assert settings.trials == 100
    assert settings.tol == 1e-12
    assert settings.log_level == logging.WARNING
    assert settings.slice_time == 1.0
    assert settings.figures_dir == Path("figures")


def test_overrides(monkeypatch):
    monkeypatch.setenv("LPA_SEED", " 0 ")
    monkeypatch.setenv("LPA_TOL", "1e-9")
    monkeypatch.setenv("LPA_LOG_LEVEL", "debug")
    monkeypatch.setenv("LPA_FIGURES_DIR", "/tmp/figs")
    settings = load_settings()
    assert settings.seed == 0
    assert settings.tol == 1e-9
    assert settings.log_level == logging.DEBUG
    assert settings.figures_dir == Path("/tmp/figs")


@pytest.mark.parametrize(
    ("name", "value"),
    [
        ("LPA_SEED", "-1"),
        ("LPA_SEED", "1.5"),
        ("LPA_TRIALS", "0"),
        ("LPA_TOL", "nan"),
        ("LPA_TOL", "-1e-12"),
        ("LPA_LOG_LEVEL", "chatty"),
        ("LPA_SLICE_TIME", "0"),
        ("LPA_SLICE_TIME", "inf"),
    ],
)
def test_invalid(monkeypatch, name, value):
    monkeypatch.setenv(name, value)
    with pytest.raises(RuntimeError, match=name):
        load_settings()


def test_require_dir(tmp_path):
    assert require_dir(APP_DIR) == APP_DIR
    with pytest.raises(RuntimeError):
        require_dir(tmp_path / "missing")
