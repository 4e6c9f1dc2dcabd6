"""Hot-loop kernels with backend selection.

The brute-force oracles and the full-space census spend essentially all of
their time in three tight scans; those live in a compiled extension when it
is available, with a pure-Python twin as fallback.  Set
``PARTMAPS_BACKEND=python`` to force the fallback.
"""

from __future__ import annotations

import os
from collections import namedtuple

from partmaps import _pykernels
from partmaps.core import Transformation

if os.environ.get("PARTMAPS_BACKEND", "").lower() in ("python", "pure"):
    _impl = _pykernels
    BACKEND = "python"
else:
    try:
        from partmaps import _ckernels as _impl  # type: ignore[no-redef]

        BACKEND = "c"
    except ImportError:
        _impl = _pykernels
        BACKEND = "python"


Census = namedtuple("Census", "t sigma gamma units gamma_idempotents")


class PackedPool:
    """Same-degree transformations packed into one flat bytes buffer, the
    record format the kernels scan."""

    __slots__ = ("n", "data")

    def __init__(self, n: int, data: bytes = b""):
        if not 1 <= n < 256:
            raise ValueError("packed pools support degrees 1..255")
        if len(data) % n:
            raise ValueError("buffer length is not a multiple of the degree")
        self.n = n
        self.data = bytes(data)

    @classmethod
    def from_maps(cls, n: int, maps) -> "PackedPool":
        buf = bytearray()
        for f in maps:
            buf += bytes(f.images)
        return cls(n, bytes(buf))

    @classmethod
    def from_tables(cls, n: int, tables) -> "PackedPool":
        buf = bytearray()
        for t in tables:
            buf += bytes(t)
        return cls(n, bytes(buf))

    def __len__(self) -> int:
        return len(self.data) // self.n

    def __getitem__(self, i: int) -> Transformation:
        if not 0 <= i < len(self):
            raise IndexError(i)
        return Transformation(self.data[i * self.n : (i + 1) * self.n])

    def table(self, i: int) -> tuple:
        return tuple(self.data[i * self.n : (i + 1) * self.n])

    def __iter__(self):
        for i in range(len(self)):
            yield self[i]


def fgf_flags(targets: PackedPool, candidates: PackedPool) -> bytes:
    """flags[i] = 1 iff some g among ``candidates`` satisfies fgf = f for
    the i-th record f of ``targets``."""
    if targets.n != candidates.n:
        raise ValueError("pools have different degrees")
    return _impl.fgf_flags(targets.data, candidates.data, targets.n)


def fgf_witness(f: Transformation, candidates: PackedPool) -> int:
    """Index of the first g in ``candidates`` with fgf = f, else -1."""
    if f.n != candidates.n:
        raise ValueError("degree mismatch")
    return _impl.fgf_witness(bytes(f.images), candidates.data, f.n)


def idempotent_flags(pool: PackedPool) -> bytes:
    """flags[i] = 1 iff the i-th record satisfies ff = f."""
    return _impl.idempotent_flags(pool.data, pool.n)


def census(n: int, block_of) -> Census:
    """Filter all n^n maps and tally memberships; the definition-direct
    oracle for the enumerators and counting formulas."""
    return Census(*_impl.census(n, bytes(block_of)))
