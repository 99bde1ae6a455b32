"""

quatinv
Copyright (C) 2023  quatinv Contributors

This program is free software: you can redistribute it and/or modify
it under the terms of the GNU General Public License as published by
the Free Software Foundation, version 3 of the License.

This program is distributed in the hope that it will be useful,
but WITHOUT ANY WARRANTY; without even the implied warranty of
MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
GNU General Public License for more details.

You should have received a copy of the GNU General Public License
along with this program.  If not, see <http://www.gnu.org/licenses/>.

qmat.py - QMH1 quaternion matrix files

    "QMH1" magic, n as little-endian u64, then the A, B, C, D planes as
    row-major little-endian float64. Length is exactly 12 + 32·n² bytes.
"""
import struct
from pathlib import Path
from typing import Union

import numpy as np
from logbook import Logger

from .errors import QmatFormatError
from .matrix import QuatMatrix

log = Logger(__name__)

MAGIC = b"QMH1"
_HEADER = struct.Struct("<4sQ")
_PLANE_DTYPE = np.dtype("<f8")


def dump_qmat(z: QuatMatrix) -> bytes:
    if not z.is_square:
        raise QmatFormatError(f"only square matrices are stored, got {z.shape}")

    body = b"".join(
        plane.astype(_PLANE_DTYPE, copy=False).tobytes() for plane in z.planes
    )
    return _HEADER.pack(MAGIC, z.rows) + body


def load_qmat(data: bytes) -> QuatMatrix:
    if len(data) < _HEADER.size:
        raise QmatFormatError(f"truncated header ({len(data)} bytes)")

    magic, n = _HEADER.unpack_from(data)
    if magic != MAGIC:
        raise QmatFormatError(f"bad magic {magic!r}")

    expected = _HEADER.size + 4 * 8 * n * n
    if len(data) != expected:
        kind = "truncated payload" if len(data) < expected else "trailing bytes"
        raise QmatFormatError(f"{kind}: {len(data)} bytes, expected {expected}")

    planes = np.frombuffer(data, dtype=_PLANE_DTYPE, offset=_HEADER.size)
    return QuatMatrix(*planes.reshape(4, n, n).astype(np.float64))


def write_qmat(path: Union[str, Path], z: QuatMatrix) -> None:
    Path(path).write_bytes(dump_qmat(z))
    log.debug("wrote {}x{} matrix to {}", z.rows, z.cols, path)


def read_qmat(path: Union[str, Path]) -> QuatMatrix:
    return load_qmat(Path(path).read_bytes())
