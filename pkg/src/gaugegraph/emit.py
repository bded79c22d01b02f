"""Bit-stable CSV/JSON emission for spectra, sweeps, folds and reports."""

from __future__ import annotations

import json
import os

import numpy as np

SPECTRUM_HEADER = ("label", "re_e", "im_e", "abs_e", "winding", "residual", "dominant")
VECTOR_HEADER = ("site", "re", "im", "abs", "phase")
SWEEP_HEADER = ("sites", "gap")


def fmt(value) -> str:
    """17-significant-digit round-trip text for floats; plain text otherwise."""
    if isinstance(value, bool):
        return "1" if value else "0"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return format(float(value), ".17g")
    return str(value)


def csv_bytes(header, rows) -> bytes:
    lines = [",".join(header)]
    lines += [",".join(fmt(cell) for cell in row) for row in rows]
    return ("\n".join(lines) + "\n").encode("utf-8")


def spectrum_row(label, value, winding, residual, dominant) -> tuple:
    value = complex(value)
    return (int(label), value.real, value.imag, abs(value), int(winding),
            float(residual), bool(dominant))


def vector_rows(vector):
    v = np.asarray(vector, dtype=complex)
    return [
        (site + 1, z.real, z.imag, abs(z), float(np.angle(z)))
        for site, z in enumerate(v)
    ]


def spectrum_row_json(row: tuple) -> dict:
    keys = SPECTRUM_HEADER
    out = dict(zip(keys, row))
    out["dominant"] = bool(out["dominant"])
    return out


def vector_row_json(row: tuple) -> dict:
    return dict(zip(VECTOR_HEADER, row))


def json_bytes(payload: dict) -> bytes:
    return (json.dumps(payload, indent=2) + "\n").encode("utf-8")


def write_bytes(path: str, data: bytes):
    parent = os.path.dirname(path)
    if parent:
        os.makedirs(parent, exist_ok=True)
    with open(path, "wb") as fh:
        fh.write(data)
