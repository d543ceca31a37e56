"""Access to the example input documents shipped with the package."""

from __future__ import annotations

from importlib import resources
from pathlib import Path

from .errors import InputError


def bundled_input(relative: str) -> Path:
    """Filesystem path of a bundled example document.

    ``relative`` names a file under the package's ``data`` directory, for
    example ``"groups/z2_trivial.json"`` or ``"surfaces/torus.json"``.  The
    returned path can be handed directly to the command-line interface.
    """
    root = resources.files(__package__) / "data"
    candidate = root / relative
    if not candidate.is_file():
        available = sorted(
            f"{sub.name}/{item.name}"
            for sub in root.iterdir()
            if sub.is_dir()
            for item in sub.iterdir()
        )
        raise InputError(
            f"no bundled input named {relative!r}; available: {available}"
        )
    return Path(str(candidate))
