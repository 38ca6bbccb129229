"""Binary artifact formats.

Three on-disk layouts, all little-endian:

* vector block  -- 8-byte magic ``VSPVEC01`` + u64 length + f64 payload
* matrix block  -- 8-byte magic ``VSPMAT01`` + u64 rows + u64 cols + f64 payload
* container     -- 8-byte magic ``VSPBIN01`` + u32 manifest length + UTF-8 JSON
                   manifest + f64 payloads in manifest order

The JSON manifest is serialized with sorted keys so identical inputs
produce byte-identical files.
"""

from __future__ import annotations

import json
import struct
from pathlib import Path

import numpy as np

from .errors import IoError, WrongLength

VEC_MAGIC = b"VSPVEC01"
MAT_MAGIC = b"VSPMAT01"
BIN_MAGIC = b"VSPBIN01"


def write_vector(path: str | Path, vec: np.ndarray) -> None:
    vec = np.ascontiguousarray(vec, dtype="<f8")
    if vec.ndim != 1:
        raise WrongLength(f"expected a 1-d vector, got shape {vec.shape}")
    with open(path, "wb") as f:
        f.write(VEC_MAGIC)
        f.write(struct.pack("<Q", vec.size))
        f.write(vec.tobytes())


def read_vector(path: str | Path) -> np.ndarray:
    try:
        raw = Path(path).read_bytes()
    except OSError as e:
        raise IoError(str(e)) from e
    if len(raw) < 16 or raw[:8] != VEC_MAGIC:
        raise IoError(f"{path}: not a vector block")
    (n,) = struct.unpack("<Q", raw[8:16])
    payload = raw[16:]
    if len(payload) != 8 * n:
        raise WrongLength(f"{path}: header says {n} values, payload holds {len(payload) // 8}")
    return np.frombuffer(payload, dtype="<f8").astype(np.float64)


def write_matrix(path: str | Path, mat: np.ndarray) -> None:
    mat = np.ascontiguousarray(mat, dtype="<f8")
    if mat.ndim != 2:
        raise WrongLength(f"expected a 2-d matrix, got shape {mat.shape}")
    with open(path, "wb") as f:
        f.write(MAT_MAGIC)
        f.write(struct.pack("<QQ", mat.shape[0], mat.shape[1]))
        f.write(mat.tobytes())


def read_matrix(path: str | Path) -> np.ndarray:
    try:
        raw = Path(path).read_bytes()
    except OSError as e:
        raise IoError(str(e)) from e
    if len(raw) < 24 or raw[:8] != MAT_MAGIC:
        raise IoError(f"{path}: not a matrix block")
    rows, cols = struct.unpack("<QQ", raw[8:24])
    payload = raw[24:]
    if len(payload) != 8 * rows * cols:
        raise WrongLength(f"{path}: header says {rows}x{cols}, payload size is {len(payload)}")
    return np.frombuffer(payload, dtype="<f8").astype(np.float64).reshape(rows, cols)


def write_container(path: str | Path, meta: dict, arrays: dict[str, np.ndarray]) -> None:
    """Write named f64 arrays plus a JSON metadata dict to one file."""
    manifest = {
        "meta": meta,
        "arrays": [{"name": k, "shape": list(arrays[k].shape)} for k in sorted(arrays)],
    }
    blob = json.dumps(manifest, sort_keys=True, separators=(",", ":")).encode("utf-8")
    with open(path, "wb") as f:
        f.write(BIN_MAGIC)
        f.write(struct.pack("<I", len(blob)))
        f.write(blob)
        for entry in manifest["arrays"]:
            f.write(np.ascontiguousarray(arrays[entry["name"]], dtype="<f8").tobytes())


def read_container(path: str | Path) -> tuple[dict, dict[str, np.ndarray]]:
    try:
        raw = Path(path).read_bytes()
    except OSError as e:
        raise IoError(str(e)) from e
    if len(raw) < 12 or raw[:8] != BIN_MAGIC:
        raise IoError(f"{path}: not a container file")
    (mlen,) = struct.unpack("<I", raw[8:12])
    manifest = json.loads(raw[12 : 12 + mlen].decode("utf-8"))
    arrays: dict[str, np.ndarray] = {}
    offset = 12 + mlen
    for entry in manifest["arrays"]:
        shape = tuple(entry["shape"])
        size = int(np.prod(shape)) if shape else 1
        chunk = raw[offset : offset + 8 * size]
        if len(chunk) != 8 * size:
            raise WrongLength(f"{path}: truncated payload for array {entry['name']!r}")
        arrays[entry["name"]] = (
            np.frombuffer(chunk, dtype="<f8").astype(np.float64).reshape(shape)
        )
        offset += 8 * size
    return manifest["meta"], arrays
