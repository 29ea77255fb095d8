"""Binary checkpoint files: little-endian records of (u64 x, u128 D(x))."""

from pathlib import Path
from typing import Iterable, List, Union

import numpy as np

from ..exceptions import InputError, WidthError
from .models import Checkpoint

CHECKPOINT_DTYPE = np.dtype([("x", "<u8"), ("D_lo", "<u8"), ("D_hi", "<u8")])
_U64 = 2**64


def write_checkpoints(path: Union[str, Path], checkpoints: Iterable[Checkpoint]) -> Path:
    """Write checkpoints as 24-byte records; D is split into low and high 64-bit words."""
    checkpoints = list(checkpoints)
    records = np.zeros(len(checkpoints), dtype=CHECKPOINT_DTYPE)
    for i, cp in enumerate(checkpoints):
        if not 0 <= cp.D < _U64 * _U64 or not 0 <= cp.x < _U64:
            raise WidthError(f"checkpoint ({cp.x}, {cp.D}) does not fit u64/u128", module="sieve")
        records[i] = (cp.x, cp.D % _U64, cp.D // _U64)
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    records.tofile(path)
    return path


def read_checkpoints(path: Union[str, Path]) -> List[Checkpoint]:
    path = Path(path)
    if not path.exists():
        raise InputError(f"checkpoint file not found: {path}", module="sieve")
    if path.stat().st_size % CHECKPOINT_DTYPE.itemsize:
        raise InputError(f"{path} is not a whole number of checkpoint records", module="sieve")
    records = np.fromfile(path, dtype=CHECKPOINT_DTYPE)
    return [
        Checkpoint(x=int(r["x"]), D=int(r["D_hi"]) * _U64 + int(r["D_lo"]))
        for r in records
    ]
