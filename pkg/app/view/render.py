from __future__ import annotations

import csv
import io
import math
from pathlib import Path

import numpy as np
from jinja2 import Environment, FileSystemLoader, StrictUndefined

from app.settings import APP_DIR, require_dir
from app.view.slicing import Primitive, RelativeViewScene

TEMPLATES_DIR = require_dir(APP_DIR / "view" / "templates")

VIEWPORT = 4.0
CANVAS = 480
PLANE_HALF_SIZE = 3.0
PALETTE = ("#000000", "#1f4e9c", "#b8321f", "#2e7d32", "#7b3f9e", "#b07a00")

# Fixed orthographic camera for 3D relative space; rows are orthonormal so
# spheres about the origin project to circles of the same radius.
_AZIMUTH = math.radians(-35.0)
_ELEVATION = math.radians(25.0)
CAMERA = np.array(
    [
        [math.cos(_AZIMUTH), -math.sin(_AZIMUTH), 0.0],
        [-math.sin(_ELEVATION) * math.sin(_AZIMUTH), -math.sin(_ELEVATION) * math.cos(_AZIMUTH), math.cos(_ELEVATION)],
    ]
)

_env = Environment(
    loader=FileSystemLoader(str(TEMPLATES_DIR)),
    autoescape=True,
    trim_blocks=True,
    lstrip_blocks=True,
    keep_trailing_newline=True,
    undefined=StrictUndefined,
)


def _num(value: float) -> str:
    text = f"{value:.3f}"
    return "0.000" if text == "-0.000" else text


def _screen(xy: np.ndarray) -> tuple[str, str]:
    """Viewport coordinates (y up) to canvas pixels (y down)."""
    scale = CANVAS / (2 * VIEWPORT)
    return _num((xy[0] + VIEWPORT) * scale), _num((VIEWPORT - xy[1]) * scale)


def _project(point: np.ndarray) -> np.ndarray:
    return point if point.shape[0] == 2 else CAMERA @ point


def clip_line(point: np.ndarray, direction: np.ndarray, bound: float = VIEWPORT) -> tuple[np.ndarray, np.ndarray] | None:
    """Segment of point + s*direction inside the box [-bound, bound]^d, or None."""
    lo, hi = -math.inf, math.inf
    for p, d in zip(point, direction):
        if abs(d) < 1e-15:
            if abs(p) > bound:
                return None
            continue
        a, b = (-bound - p) / d, (bound - p) / d
        lo, hi = max(lo, min(a, b)), min(hi, max(a, b))
    if lo > hi:
        return None
    return point + lo * direction, point + hi * direction


def _shape(primitive: Primitive, color: str) -> dict | None:
    point = np.asarray(primitive.point, dtype=float)
    dashed = primitive.style == "dashed"
    scale = CANVAS / (2 * VIEWPORT)
    if primitive.kind == "circle":
        cx, cy = _screen(_project(point))
        r = primitive.radius * scale
        lx, ly = _screen(_project(point) + primitive.radius * np.array([0.72, 0.72]))
        return {"tag": "circle", "cx": cx, "cy": cy, "r": _num(r), "color": color, "dashed": dashed, "label": primitive.label, "lx": lx, "ly": ly}
    if primitive.kind == "point":
        cx, cy = _screen(_project(point))
        lx, ly = _screen(_project(point) + np.array([0.12, 0.12]))
        return {"tag": "dot", "cx": cx, "cy": cy, "color": color, "label": primitive.label, "lx": lx, "ly": ly}
    if primitive.kind == "line":
        segment = clip_line(point, np.asarray(primitive.directions[0]))
        if segment is None:
            return None
        a, b = (_project(end) for end in segment)
        x1, y1 = _screen(a)
        x2, y2 = _screen(b)
        lx, ly = _screen(a + 0.85 * (b - a) + np.array([0.1, 0.15]))
        return {
            "tag": "line", "x1": x1, "y1": y1, "x2": x2, "y2": y2, "color": color, "dashed": dashed,
            "label": primitive.label, "lx": lx, "ly": ly,
        }
    if primitive.kind == "plane":
        d1, d2 = (np.asarray(d) for d in primitive.directions)
        corners = [point + PLANE_HALF_SIZE * (s1 * d1 + s2 * d2) for s1, s2 in ((-1, -1), (1, -1), (1, 1), (-1, 1))]
        pts = [_screen(_project(c)) for c in corners]
        lx, ly = _screen(_project(corners[2]))
        return {"tag": "polygon", "points": " ".join(f"{x},{y}" for x, y in pts), "color": color, "dashed": dashed, "label": primitive.label, "lx": lx, "ly": ly}
    return None


def scene_to_svg(scene: RelativeViewScene, arrows: bool = False) -> str:
    """Render the scene; with arrows, line segments end in an arrowhead along their direction."""
    shapes = []
    hidden = []
    for idx, primitive in enumerate(scene.primitives):
        if not primitive.in_view:
            hidden.append(primitive.label or primitive.kind)
            continue
        shape = _shape(primitive, PALETTE[idx % len(PALETTE)])
        if shape is not None:
            shapes.append(shape)
    return _env.get_template("scene.svg.j2").render(
        size=CANVAS,
        viewport=_num(VIEWPORT),
        title=scene.title or "relative view",
        slice_time=f"{scene.slice_time:g}",
        dimension=scene.dimension,
        shapes=shapes,
        hidden=hidden,
        arrows=arrows,
    )


def _coord(value: float) -> str:
    text = f"{value:.12g}"
    return "0" if text == "-0" else text


def scene_to_csv(scene: RelativeViewScene) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["kind", "label", "coords"])
    for p in scene.primitives:
        if not p.in_view:
            writer.writerow([f"{p.kind}-at-infinity", p.label])
            continue
        coords = list(p.point)
        for d in p.directions:
            coords.extend(d)
        if p.kind == "circle":
            coords.append(p.radius)
        writer.writerow([p.kind, p.label, *(_coord(c) for c in coords)])
    return buf.getvalue()


def write_scene(scene: RelativeViewScene, out: Path, arrows: bool = False) -> Path:
    """Write SVG or CSV by file extension."""
    suffix = out.suffix.lower()
    if suffix == ".svg":
        text = scene_to_svg(scene, arrows)
    elif suffix == ".csv":
        text = scene_to_csv(scene)
    else:
        raise ValueError(f"Unsupported figure extension {out.suffix!r}; use .svg or .csv")
    out.write_text(text, encoding="utf-8")
    return out
