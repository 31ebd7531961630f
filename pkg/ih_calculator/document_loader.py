from __future__ import annotations

import logging
from pathlib import Path
from typing import Any, List

import yaml
from pydantic import ValidationError

from .exceptions import ParseError
from .document_schema import TwoStrataDocument
from .twostrata import TwoStrataData

"""document_loader.py
Helpers to read a two-strata input document from YAML (or JSON) text.

The document is either the bare TwoStrataData mapping or any mapping that
embeds one under ``two_strata_data``, such as a structured report written
by the ``schubert`` or ``hypersurface`` commands.
"""

logger = logging.getLogger(__name__)

EMBEDDED_KEY = "two_strata_data"


def format_validation_errors(error: ValidationError) -> str:
    """One line per pydantic error: field path, message and offending value."""
    messages: List[str] = []
    for detail in error.errors():
        loc_str = " -> ".join(map(str, detail["loc"])) if detail["loc"] else "root"
        messages.append(f"  - Field '{loc_str}': {detail['msg']} (value: {detail.get('input')})")
    return "\n".join(messages)


def parse_document(raw: Any, source: str = "<document>") -> TwoStrataDocument:
    """Validate an already-decoded document.

    Raises:
        ParseError: If ``raw`` is not a mapping or fails schema validation.
    """
    if not raw:
        raise ParseError(f"Document {source} is empty or not valid YAML content.")
    if not isinstance(raw, dict):
        raise ParseError(
            f"Document {source} must be a mapping, got {type(raw).__name__}"
        )
    if EMBEDDED_KEY in raw:
        raw = raw[EMBEDDED_KEY]
        if not isinstance(raw, dict):
            raise ParseError(f"'{EMBEDDED_KEY}' in {source} must be a mapping")
    try:
        return TwoStrataDocument.model_validate(raw)
    except ValidationError as exc:
        raise ParseError(
            f"Invalid two-strata document {source}:\n{format_validation_errors(exc)}"
        ) from exc


def parse_text(text: str, source: str = "<string>") -> TwoStrataDocument:
    try:
        raw = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        raise ParseError(f"Error parsing YAML from {source}: {exc}") from exc
    return parse_document(raw, source)


def load_document(path: Path | str) -> TwoStrataDocument:
    path = Path(path)
    if not path.is_file():
        raise ParseError(f"Input document not found: {path}")
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"Error reading file {path}: {exc}") from exc
    document = parse_text(text, str(path))
    logger.debug("Loaded two-strata document from %s", path)
    return document


def load_two_strata_data(path: Path | str) -> TwoStrataData:
    return load_document(path).to_data()
