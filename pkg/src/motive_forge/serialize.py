"""Deterministic JSON output and parsing of command-line values."""

from __future__ import annotations

import json
from typing import Any

from .errors import AdmissibilityError
from .tate import LPolynomial, TateSum

SCHEMA = "motive-forge/1"


def _plain(obj: Any):
    if hasattr(obj, "to_json"):
        return _plain(obj.to_json())
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    return obj


def emit_json(result: Any) -> str:
    """One JSON document with sorted keys and a ``schema`` field.

    Term lists come out of ``to_json`` already sorted, so reruns are
    byte-identical.
    """
    payload = _plain(result)
    if not isinstance(payload, dict):
        payload = {"value": payload}
    payload = {"schema": SCHEMA, **payload}
    return json.dumps(payload, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def parse_document(text: str) -> dict:
    data = json.loads(text)
    if not isinstance(data, dict):
        raise AdmissibilityError("expected a JSON object")
    schema = data.get("schema", SCHEMA)
    if schema != SCHEMA:
        raise AdmissibilityError(f"unsupported schema {schema!r}, expected {SCHEMA!r}")
    return data


def parse_tate_sum(text: str) -> TateSum:
    """A TateSum JSON object, or Chow ranks ``"1,1"`` of a pure sum."""
    text = text.strip()
    try:
        if text.startswith("{"):
            return TateSum.from_json(parse_document(text))
        return TateSum.from_pure_coefficients(int(t) for t in text.split(","))
    except (ValueError, KeyError, TypeError) as exc:
        raise AdmissibilityError(
            f"malformed Tate sum {text!r}: expected JSON "
            '{"terms":[{"twist":p,"shift":q,"mult":m}]} or ranks like 1,1'
        ) from exc


def parse_l_polynomial(text: str) -> LPolynomial:
    """An LPolynomial JSON object, or dense ascending coefficients ``"1,1"``."""
    text = text.strip()
    try:
        if text.startswith("{"):
            return LPolynomial.from_json(parse_document(text))
        return LPolynomial.from_list(int(t) for t in text.split(","))
    except (ValueError, KeyError, TypeError) as exc:
        raise AdmissibilityError(
            f'malformed polynomial {text!r}: expected JSON {{"coeffs":[[e,c]]}} or 1,1'
        ) from exc
