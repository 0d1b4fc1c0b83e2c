"""Bundled presentation files used by the demos, tests, and benchmarks."""

from importlib import resources
from pathlib import Path

_PACKAGE = __name__


def fixture_names() -> list[str]:
    root = resources.files(_PACKAGE)
    return sorted(p.name for p in root.iterdir() if p.name.endswith(".rack"))


def fixture_path(name: str) -> Path:
    """Filesystem path of a bundled fixture (with or without extension)."""
    if not name.endswith((".rack", ".manifest")):
        name += ".rack"
    path = Path(str(resources.files(_PACKAGE) / name))
    if not path.exists():
        raise FileNotFoundError(f"no bundled fixture named {name!r}")
    return path
