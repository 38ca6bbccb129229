"""Binary PPM (P6, 8-bit) image reading and writing.

Images are numpy ``uint8`` arrays of shape ``(height, width, 3)``.
The toolkit accepts no other image codec.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np

from .errors import IoError

MIN_SIDE = 16


def write_ppm(path: str | Path, pixels: np.ndarray) -> None:
    pixels = np.asarray(pixels, dtype=np.uint8)
    if pixels.ndim != 3 or pixels.shape[2] != 3:
        raise IoError(f"expected (H, W, 3) uint8 pixels, got shape {pixels.shape}")
    h, w = pixels.shape[:2]
    with open(path, "wb") as f:
        f.write(f"P6\n{w} {h}\n255\n".encode("ascii"))
        f.write(pixels.tobytes())


def read_ppm(path: str | Path) -> np.ndarray:
    try:
        raw = Path(path).read_bytes()
    except OSError as e:
        raise IoError(str(e)) from e
    if not raw.startswith(b"P6"):
        raise IoError(f"{path}: not a binary PPM (P6) file")

    # Header: magic, width, height, maxval as whitespace-separated tokens,
    # with '#' comments allowed between them.
    tokens: list[bytes] = []
    pos = 2
    while len(tokens) < 3:
        while pos < len(raw) and raw[pos : pos + 1].isspace():
            pos += 1
        if pos < len(raw) and raw[pos : pos + 1] == b"#":
            while pos < len(raw) and raw[pos : pos + 1] != b"\n":
                pos += 1
            continue
        start = pos
        while pos < len(raw) and not raw[pos : pos + 1].isspace():
            pos += 1
        if start == pos:
            raise IoError(f"{path}: truncated PPM header")
        tokens.append(raw[start:pos])
    pos += 1  # single whitespace byte after maxval

    try:
        w, h, maxval = (int(t) for t in tokens)
    except ValueError as e:
        raise IoError(f"{path}: malformed PPM header") from e
    if maxval != 255:
        raise IoError(f"{path}: only 8-bit PPM supported (maxval 255, got {maxval})")
    if w < MIN_SIDE or h < MIN_SIDE:
        raise IoError(f"{path}: image {w}x{h} below minimum side {MIN_SIDE}")

    payload = raw[pos : pos + 3 * w * h]
    if len(payload) != 3 * w * h:
        raise IoError(f"{path}: expected {3 * w * h} pixel bytes, got {len(payload)}")
    return np.frombuffer(payload, dtype=np.uint8).reshape(h, w, 3).copy()
