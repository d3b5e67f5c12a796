"""Tensor persistence: a little-endian binary container and CSV text form.

Binary container layout (all little-endian):

    bytes 0..7    magic ``b"SPSDTNSR"``
    byte  8       dtype code: 0 = float64, 1 = complex128
    byte  9       number of dimensions (1..4)
    bytes 10..15  reserved, zero
    then ndim x uint64 dimension sizes
    then the payload as raw float64 values; complex tensors store
    interleaved (real, imag) pairs per entry.

CSV form: 2-D tensors are written one row per leading index with L columns
(complex tensors use two adjacent columns, real then imaginary, per bin).
Higher-rank tensors are flattened over the leading axes, one row per
flattened index, with the original shape recorded in a ``# shape=...``
header comment so reads round-trip.  Values are formatted with ``repr`` so
text round-trips are bit-exact.
"""

from __future__ import annotations

import io
from pathlib import Path
from typing import Union

import numpy as np

MAGIC = b"SPSDTNSR"
_DTYPE_CODES = {0: np.float64, 1: np.complex128}


def write_tensor(path: Union[str, Path], arr: np.ndarray) -> None:
    """Write a float64 or complex128 tensor to the binary container."""
    Path(path).write_bytes(tensor_bytes(arr))


def tensor_bytes(arr: np.ndarray) -> bytes:
    arr = np.asarray(arr)
    if np.iscomplexobj(arr):
        code, arr = 1, np.ascontiguousarray(arr, dtype=np.complex128)
    else:
        code, arr = 0, np.ascontiguousarray(arr, dtype=np.float64)
    if not 1 <= arr.ndim <= 4:
        raise ValueError(f"container supports 1..4 dimensions, got {arr.ndim}")
    buf = io.BytesIO()
    buf.write(MAGIC)
    buf.write(bytes([code, arr.ndim]) + b"\x00" * 6)
    buf.write(np.asarray(arr.shape, dtype="<u8").tobytes())
    buf.write(arr.astype(arr.dtype.newbyteorder("<"), copy=False).tobytes())
    return buf.getvalue()


def read_tensor(path: Union[str, Path]) -> np.ndarray:
    """Read a tensor written by :func:`write_tensor`."""
    return tensor_from_bytes(Path(path).read_bytes())


def tensor_from_bytes(raw: bytes) -> np.ndarray:
    if raw[:8] != MAGIC:
        raise ValueError("bad magic: not a tensor container")
    code, ndim = raw[8], raw[9]
    if code not in _DTYPE_CODES:
        raise ValueError(f"unknown dtype code {code}")
    shape = np.frombuffer(raw, dtype="<u8", count=ndim, offset=16).astype(int)
    dtype = np.dtype(_DTYPE_CODES[code]).newbyteorder("<")
    offset = 16 + 8 * ndim
    data = np.frombuffer(raw, dtype=dtype, count=int(np.prod(shape)), offset=offset)
    return data.astype(_DTYPE_CODES[code]).reshape(tuple(shape))


def _fmt(x: float) -> str:
    return repr(float(x))


def tensor_csv(arr: np.ndarray) -> str:
    """Render a tensor as CSV text (see module docstring for the layout)."""
    arr = np.asarray(arr)
    if arr.ndim < 2:
        arr = arr.reshape(1, -1)
    shape = arr.shape
    rows = arr.reshape(-1, shape[-1])
    lines = []
    if len(shape) != 2:
        lines.append("# shape=" + ",".join(str(s) for s in shape))
    if np.iscomplexobj(arr):
        for row in rows:
            cells = []
            for z in row:
                cells.append(_fmt(z.real))
                cells.append(_fmt(z.imag))
            lines.append(",".join(cells))
    else:
        for row in rows:
            lines.append(",".join(_fmt(v) for v in row))
    return "\n".join(lines) + "\n"


def write_tensor_csv(path: Union[str, Path], arr: np.ndarray) -> None:
    Path(path).write_text(tensor_csv(arr))


def tensor_from_csv(text: str, complex_valued: bool = False) -> np.ndarray:
    """Parse CSV text produced by :func:`tensor_csv`."""
    shape = None
    rows = []
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        if line.startswith("#"):
            if line.startswith("# shape="):
                shape = tuple(int(s) for s in line[len("# shape=") :].split(","))
            continue
        rows.append([float(c) for c in line.split(",")])
    data = np.asarray(rows, dtype=float)
    if complex_valued:
        data = data[:, 0::2] + 1j * data[:, 1::2]
    if shape is not None:
        data = data.reshape(shape)
    return data


def read_tensor_csv(path: Union[str, Path], complex_valued: bool = False) -> np.ndarray:
    return tensor_from_csv(Path(path).read_text(), complex_valued=complex_valued)
