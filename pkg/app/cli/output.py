from __future__ import annotations

from jinja2 import Environment, FileSystemLoader, StrictUndefined

from app.settings import APP_DIR, require_dir
from app.suite.report import Entry

APP_NAME = "little-photon-algebra"
TEMPLATES_DIR = require_dir(APP_DIR / "cli" / "templates")


def _sci(value: float) -> str:
    return f"{value:.3e}"


def _verdict(residual: float, tol: float) -> str:
    return "PASS" if residual <= tol else "FAIL"


def _status(entry: Entry) -> str:
    return "PASS" if entry.passed else "FAIL"


def _detail(entry: Entry) -> str:
    return f"  ({entry.detail})" if entry.detail else ""


templates = Environment(
    loader=FileSystemLoader(str(TEMPLATES_DIR)),
    autoescape=False,
    trim_blocks=True,
    lstrip_blocks=True,
    keep_trailing_newline=True,
    undefined=StrictUndefined,
)
templates.globals["app_name"] = APP_NAME
templates.filters["sci"] = _sci
templates.filters["verdict"] = _verdict
templates.filters["status"] = _status
templates.filters["detail"] = _detail


def render(name: str, **context) -> str:
    return templates.get_template(name).render(**context)
