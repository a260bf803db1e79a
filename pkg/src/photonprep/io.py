"""JSON documents for matrices and synthesis artifacts.

Complex entries are serialized as two-element [re, im] arrays, row-major.
A synthesis document bundles the unitary with enough context to re-verify
it from scratch: the target, the kind, and kind-specific fields.
"""

from __future__ import annotations

import json
from typing import Any

import numpy as np

from .exceptions import DocumentError
from .result import HeraldPattern, SynthesisResult

KINDS = ("postselect", "herald", "cnz")


def matrix_to_doc(M: np.ndarray, label: str | None = None) -> dict[str, Any]:
    M = np.atleast_2d(np.asarray(M, dtype=complex))
    doc: dict[str, Any] = {
        "rows": M.shape[0],
        "cols": M.shape[1],
        "data": [[float(z.real), float(z.imag)] for z in M.ravel()],
    }
    if label is not None:
        doc["label"] = label
    return doc


def matrix_from_doc(doc: Any, field: str = "matrix") -> np.ndarray:
    if not isinstance(doc, dict):
        raise DocumentError(f"{field}: expected an object", field)
    for key in ("rows", "cols", "data"):
        if key not in doc:
            raise DocumentError(f"{field}.{key}: missing", f"{field}.{key}")
    rows, cols = doc["rows"], doc["cols"]
    if not (isinstance(rows, int) and isinstance(cols, int) and rows > 0 and cols > 0):
        raise DocumentError(f"{field}.rows/cols: must be positive integers", field)
    data = doc["data"]
    if not isinstance(data, list) or len(data) != rows * cols:
        raise DocumentError(
            f"{field}.data: expected {rows * cols} entries", f"{field}.data"
        )
    entries = []
    for idx, pair in enumerate(data):
        if (
            not isinstance(pair, list)
            or len(pair) != 2
            or not all(isinstance(v, (int, float)) for v in pair)
        ):
            raise DocumentError(
                f"{field}.data[{idx}]: expected [re, im]", f"{field}.data"
            )
        entries.append(complex(pair[0], pair[1]))
    M = np.array(entries, dtype=complex).reshape(rows, cols)
    if not np.all(np.isfinite(M)):
        raise DocumentError(f"{field}.data: non-finite entry", f"{field}.data")
    return M


def complex_to_pair(z: complex) -> list[float]:
    z = complex(z)
    return [float(z.real), float(z.imag)]


def synthesis_to_doc(
    result: SynthesisResult, kind: str, target: np.ndarray, **extras: Any
) -> dict[str, Any]:
    if kind not in KINDS:
        raise ValueError(f"unknown synthesis kind {kind!r}")
    doc: dict[str, Any] = {
        "kind": kind,
        "unitary": matrix_to_doc(result.unitary),
        "aux_modes": result.aux_modes,
        "alpha": complex_to_pair(result.scale_alpha),
        "success_probability": float(result.success_probability),
        "target": matrix_to_doc(target),
        "herald": (
            {"modes": result.herald.herald_modes, "signal": list(result.herald.signal)}
            if result.herald is not None
            else None
        ),
    }
    doc.update(extras)
    return doc


def synthesis_from_doc(doc: Any) -> dict[str, Any]:
    """Validate and decode a synthesis document into python values."""
    if not isinstance(doc, dict):
        raise DocumentError("document: expected an object", "document")
    kind = doc.get("kind")
    if kind not in KINDS:
        raise DocumentError(f"kind: expected one of {KINDS}", "kind")
    unitary = matrix_from_doc(doc.get("unitary"), "unitary")
    if np.linalg.norm(unitary.conj().T @ unitary - np.eye(unitary.shape[0])) > 1e-8:
        raise DocumentError("unitary: matrix is not unitary", "unitary")
    out: dict[str, Any] = {
        "kind": kind,
        "unitary": unitary,
        "aux_modes": doc.get("aux_modes", 0),
        "success_probability": doc.get("success_probability"),
        "target": matrix_from_doc(doc.get("target"), "target"),
    }
    herald = doc.get("herald")
    if herald is not None:
        if not isinstance(herald, dict) or "signal" not in herald:
            raise DocumentError("herald.signal: missing", "herald.signal")
        out["herald"] = HeraldPattern(signal=tuple(int(s) for s in herald["signal"]))
    else:
        out["herald"] = None
    for key in ("input_state", ):
        if key in doc and doc[key] is not None:
            out[key] = matrix_from_doc(doc[key], key)
    for key in ("n", "phi", "photons", "payload_modes"):
        if key in doc:
            out[key] = doc[key]
    if kind == "postselect" and "input_state" not in out:
        raise DocumentError("input_state: required for postselect documents", "input_state")
    if kind == "herald" and not isinstance(out.get("photons"), int):
        raise DocumentError("photons: required for herald documents", "photons")
    if kind == "cnz":
        if not isinstance(out.get("n"), int) or not isinstance(out.get("phi"), (int, float)):
            raise DocumentError("n/phi: required for cnz documents", "n")
    return out


def load_json(path: str) -> Any:
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise DocumentError(f"{path}: invalid JSON at line {exc.lineno}: {exc.msg}") from exc


def dump_json(doc: Any, path: str | None) -> None:
    text = json.dumps(doc, indent=2)
    if path is None:
        print(text)
    else:
        with open(path, "w") as fh:
            fh.write(text + "\n")
