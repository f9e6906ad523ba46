from __future__ import annotations

import logging
import math
import os
from dataclasses import dataclass
from pathlib import Path

APP_DIR = Path(__file__).resolve().parent


def require_dir(path: Path) -> Path:
    if not path.is_dir():
        raise RuntimeError(f"Required directory not found: {path}")
    return path


def _int_env(name: str, default: int, minimum: int | None = None) -> int:
    raw = os.getenv(name, "").strip()
    if not raw:
        return default
    try:
        value = int(raw)
    except ValueError:
        raise RuntimeError(f"{name} env must be an integer, got {raw!r}") from None
    if minimum is not None and value < minimum:
        raise RuntimeError(f"{name} env must be >= {minimum}, got {value}")
    return value


def _float_env(name: str, default: float, minimum: float = 0.0, exclusive: bool = False) -> float:
    raw = os.getenv(name, "").strip()
    if not raw:
        return default
    try:
        value = float(raw)
    except ValueError:
        raise RuntimeError(f"{name} env must be a number, got {raw!r}") from None
    if not math.isfinite(value) or value < minimum or (exclusive and value == minimum):
        op = ">" if exclusive else ">="
        raise RuntimeError(f"{name} env must be {op} {minimum:g}, got {value}")
    return value


def _log_level_env(name: str, default: str) -> int:
    raw = (os.getenv(name, "").strip() or default).upper()
    level = logging.getLevelName(raw)
    if not isinstance(level, int):
        raise RuntimeError(f"{name} env is not a log level: {raw!r}")
    return level


@dataclass(frozen=True)
class Settings:
    seed: int
    trials: int
    tol: float
    log_level: int
    slice_time: float
    figures_dir: Path


def load_settings() -> Settings:
    """Read LPA_* variables; flags on the command line override them."""
    return Settings(
        seed=_int_env("LPA_SEED", 7, minimum=0),
        trials=_int_env("LPA_TRIALS", 100, minimum=1),
        tol=_float_env("LPA_TOL", 1e-12),
        log_level=_log_level_env("LPA_LOG_LEVEL", "WARNING"),
        slice_time=_float_env("LPA_SLICE_TIME", 1.0, exclusive=True),
        figures_dir=Path(os.getenv("LPA_FIGURES_DIR", "").strip() or "figures"),
    )
