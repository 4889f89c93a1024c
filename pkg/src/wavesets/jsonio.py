"""JSON interchange for complex matrices and vectors.

Format: {"rows": r, "cols": c, "data": [[re, im], ...]} with data row-major.
Vectors travel as single-column matrices; readers accept either orientation.
"""

from __future__ import annotations

import numpy as np


def matrix_to_json(m: np.ndarray) -> dict:
    m = np.asarray(m, dtype=complex)
    if m.ndim == 1:
        m = m.reshape(-1, 1)
    return {
        "rows": int(m.shape[0]),
        "cols": int(m.shape[1]),
        "data": [[float(v.real), float(v.imag)] for v in m.reshape(-1)],
    }


def matrix_from_json(obj: dict) -> np.ndarray:
    rows, cols = int(obj["rows"]), int(obj["cols"])
    data = obj["data"]
    if len(data) != rows * cols:
        raise ValueError("matrix data length does not match rows*cols")
    flat = np.array([complex(re, im) for re, im in data])
    return flat.reshape(rows, cols)


def vector_from_json(obj: dict) -> np.ndarray:
    m = matrix_from_json(obj)
    if 1 not in m.shape:
        raise ValueError("expected a vector (one row or one column)")
    return m.reshape(-1)
