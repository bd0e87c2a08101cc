"""Binary sampled-grid files ("PSPC" format).

Layout, all little-endian:

    offset  size  field
    0       4     magic, ASCII "PSPC"
    4       4     format version, u32 (currently 1)
    8       4     n  (number of complex variables), u32
    12      4     q  (form degree the samples belong to), u32
    16      8*n   per variable: radial node count u32, angular node count u32
    ...           payload: float64 pairs (re, im), C order, logical shape
                  (R_1, T_1, ..., R_n, T_n)

Samples live on the canonical quadrature grid of `spectral_ops`:
Gauss-Legendre radial nodes on [0, a_k] crossed with uniform angles
2*pi*t/T_k.  Radii are not stored; the consumer supplies them (they are
part of the request, like J), and the node positions then follow from the
counts.
"""

from __future__ import annotations

import struct

import numpy as np

from .errors import InvalidArgumentError

__all__ = ["GRID_MAGIC", "GRID_VERSION", "write_grid", "read_grid"]

GRID_MAGIC = b"PSPC"
GRID_VERSION = 1


def write_grid(path: str, n: int, q: int, counts: list[tuple[int, int]], samples: np.ndarray) -> None:
    """Write complex samples for one coefficient function to `path`.

    `counts` holds (radial, angular) node counts per variable and must match
    the sample array shape (radial and angular axes interleaved).
    """
    if len(counts) != n:
        raise InvalidArgumentError(f"expected {n} per-variable node counts, got {len(counts)}")
    shape = tuple(c for pair in counts for c in pair)
    arr = np.ascontiguousarray(samples, dtype=np.complex128)
    if arr.shape != shape:
        raise InvalidArgumentError(f"sample shape {arr.shape} does not match counts {shape}")
    header = struct.pack("<4sIII", GRID_MAGIC, GRID_VERSION, n, q)
    header += b"".join(struct.pack("<II", r, t) for r, t in counts)
    with open(path, "wb") as fh:
        fh.write(header)
        fh.write(arr.astype("<c16").tobytes(order="C"))


def read_grid(path: str) -> tuple[int, int, list[tuple[int, int]], np.ndarray]:
    """Read a grid file; returns (n, q, counts, samples)."""
    with open(path, "rb") as fh:
        head = fh.read(16)
        if len(head) < 16:
            raise InvalidArgumentError(f"{path}: truncated header")
        magic, version, n, q = struct.unpack("<4sIII", head)
        if magic != GRID_MAGIC:
            raise InvalidArgumentError(f"{path}: bad magic {magic!r}")
        if version != GRID_VERSION:
            raise InvalidArgumentError(f"{path}: unsupported version {version}")
        counts = []
        for _ in range(n):
            pair = fh.read(8)
            if len(pair) < 8:
                raise InvalidArgumentError(f"{path}: truncated node counts")
            counts.append(struct.unpack("<II", pair))
        shape = tuple(c for pair in counts for c in pair)
        expected = int(np.prod(shape)) * 16
        payload = fh.read()
        if len(payload) != expected:
            raise InvalidArgumentError(
                f"{path}: payload is {len(payload)} bytes, expected {expected}"
            )
        samples = np.frombuffer(payload, dtype="<c16").reshape(shape)
    return n, q, counts, samples.astype(np.complex128)
