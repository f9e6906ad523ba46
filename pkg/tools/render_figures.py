import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from app.settings import load_settings  # noqa: E402
from app.view.render import write_scene  # noqa: E402
from app.view.scenes import FIGURES, build_scene  # noqa: E402

SETTINGS = load_settings()
FIGURES_DIR = SETTINGS.figures_dir
SLICE_TIME = SETTINGS.slice_time

FIGURES_DIR.mkdir(parents=True, exist_ok=True)


def main():
    print(f"Figures will be written to: {FIGURES_DIR}")
    for name in FIGURES:
        scene = build_scene(name, SLICE_TIME)
        for suffix in (".svg", ".csv"):
            path = write_scene(scene, FIGURES_DIR / f"{name}{suffix}")
            print(f"  {path}")


if __name__ == "__main__":
    main()
