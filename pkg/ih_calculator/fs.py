"""fs.py
File system helpers for report and sweep output.
"""
from __future__ import annotations

import logging
from pathlib import Path

logger = logging.getLogger(__name__)


def ensure_dir(path: Path) -> Path:
    """Ensure directory exists, creating it if necessary."""
    path.mkdir(parents=True, exist_ok=True)
    return path


def write_output(text: str, destination: Path | str) -> Path:
    """Write ``text`` to ``destination``, creating parent directories."""
    destination = Path(destination)
    ensure_dir(destination.parent)
    destination.write_text(text if text.endswith("\n") else text + "\n", encoding="utf-8")
    logger.info("Wrote %s", destination)
    return destination
