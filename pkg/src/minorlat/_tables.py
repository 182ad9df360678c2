"""Low-level truth-table kernels.

A table is a plain Python int: bit p holds the value at the point whose
j-th coordinate is ``(p >> (j - 1)) & 1``.  Variable x1 is the least
significant index bit, so bit 0 is the value at the all-zero point and
the top bit the value at the all-one point.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Sequence

import numpy as np

MAX_ARITY = 20


def n_points(arity: int) -> int:
    return 1 << arity


def full_mask(arity: int) -> int:
    return (1 << (1 << arity)) - 1


def check_arity(arity: int) -> None:
    if not 1 <= arity <= MAX_ARITY:
        raise ValueError(f"arity must be in [1, {MAX_ARITY}], got {arity}")


@lru_cache(maxsize=None)
def projection_mask(arity: int, i: int) -> int:
    """Table of the i-th projection at the given arity (0xA..., 0xC..., ...)."""
    if not 1 <= i <= arity:
        raise ValueError(f"projection index {i} out of range for arity {arity}")
    half = 1 << (i - 1)                      # points per half-block
    unit = ((1 << half) - 1) << half         # one block: 2^(i-1) zeros then ones
    block = 1 << (1 << i)                    # 2^(block length in bits)
    reps = (full_mask(arity)) // (block - 1) if arity > i else 1
    return unit * reps


def to_array(table: int, arity: int) -> np.ndarray:
    npts = n_points(arity)
    raw = table.to_bytes((npts + 7) // 8, "little")
    return np.unpackbits(np.frombuffer(raw, np.uint8), bitorder="little")[:npts]


def from_array(bits: np.ndarray) -> int:
    packed = np.packbits(bits.astype(np.uint8), bitorder="little")
    return int.from_bytes(packed.tobytes(), "little")


@lru_cache(maxsize=None)
def bit_columns(arity: int) -> np.ndarray:
    """(2^arity, arity) uint8 matrix; row p lists the coordinates of point p."""
    pts = np.arange(n_points(arity), dtype=np.uint32)
    return ((pts[:, None] >> np.arange(arity)[None, :]) & 1).astype(np.uint8)


@lru_cache(maxsize=None)
def weights(arity: int) -> np.ndarray:
    """Hamming weight of every point index."""
    return bit_columns(arity).sum(axis=1).astype(np.int32)


def compose_tables(f_table: int, n: int, g_tables: Sequence[int], m: int) -> int:
    """Table of f(g_1, ..., g_n) where the g's share arity m."""
    idx = np.zeros(n_points(m), dtype=np.int64)
    for k, g in enumerate(g_tables):
        idx |= to_array(g, m).astype(np.int64) << k
    f_arr = to_array(f_table, n)
    return from_array(f_arr[idx])


def substitute_table(f_table: int, n: int, assignment: Sequence[int], m: int) -> int:
    """Table of f(x_{a_1}, ..., x_{a_n}) at arity m; assignment is 1-based."""
    cols = bit_columns(m)[:, [a - 1 for a in assignment]].astype(np.int64)
    idx = cols @ (np.int64(1) << np.arange(n, dtype=np.int64))
    return from_array(to_array(f_table, n)[idx])


def permute_table(table: int, arity: int, perm: Sequence[int]) -> int:
    """Relabel variables: position k of the new function reads x_{perm[k]} (1-based)."""
    return substitute_table(table, arity, perm, arity)


def complement_table(table: int, arity: int) -> int:
    return table ^ full_mask(arity)


def dual_table(table: int, arity: int) -> int:
    rev = to_array(table, arity)[::-1]
    return from_array(1 - rev)


def essential_mask(table: int, arity: int) -> int:
    """Bitmask over variables (bit i-1 for x_i) the table depends on."""
    out = 0
    for i in range(1, arity + 1):
        stride = 1 << (i - 1)
        lo = ~projection_mask(arity, i) & full_mask(arity)
        if ((table >> stride) ^ table) & lo:
            out |= 1 << (i - 1)
    return out


def is_monotone_table(table: int, arity: int) -> bool:
    for i in range(1, arity + 1):
        stride = 1 << (i - 1)
        lo = ~projection_mask(arity, i) & full_mask(arity)
        if (table & lo) & ~(table >> stride):
            return False
    return True


def anf_array(table: int, arity: int) -> np.ndarray:
    """GF(2) Moebius transform; entry s is the coefficient of the monomial
    over the variable set encoded by s."""
    arr = to_array(table, arity).copy()
    step = 1
    while step < arr.size:
        view = arr.reshape(-1, 2 * step)
        view[:, step:] ^= view[:, :step]
        step *= 2
    return arr


def from_anf_array(coeffs: np.ndarray) -> int:
    arr = coeffs.astype(np.uint8).copy()
    step = 1
    while step < arr.size:
        view = arr.reshape(-1, 2 * step)
        view[:, step:] ^= view[:, :step]
        step *= 2
    return from_array(arr)
