"""Arity-capped equational classes: closure under simple variable
substitutions, class composition, lattice operations, and the monoid laws
at desk scale.

A capped class is an under-approximation of an infinite class: it stores,
for each arity up to the cap, the set of member tables.  Lattice laws are
exact at the cap; composition is exact for inputs materialized at the cap
(composites never need inner arities above the arities present).
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable, Iterable, Optional, Sequence

import numpy as np

from . import _tables as tb
from .core import BooleanFunction

MAX_CAP = 8


@dataclass(frozen=True)
class CappedClass:
    """Per-arity member tables for arities 1..cap; closed under simple
    variable substitutions within the cap unless built by ``unchecked``."""

    cap: int
    members: tuple[frozenset[int], ...]

    def __post_init__(self):
        if not 1 <= self.cap <= MAX_CAP:
            raise ValueError(f"cap must be in [1, {MAX_CAP}]")
        if len(self.members) != self.cap:
            raise ValueError("members must hold one set per arity 1..cap")

    @classmethod
    def unchecked(cls, cap: int, members: Iterable[Iterable[int]]) -> "CappedClass":
        """Test-only: builds the value without the closure invariant."""
        return cls(cap, tuple(frozenset(s) for s in members))

    @classmethod
    def from_functions(cls, cap: int, fns: Iterable[BooleanFunction]) -> "CappedClass":
        sets: list[set[int]] = [set() for _ in range(cap)]
        for f in fns:
            if f.arity <= cap:
                sets[f.arity - 1].add(f.table)
        out = cls(cap, tuple(frozenset(s) for s in sets))
        if not out.is_closed():
            raise ValueError("member set is not closed under variable substitutions")
        return out

    @classmethod
    def from_predicate(cls, cap: int, pred: Callable[[BooleanFunction], bool]) -> "CappedClass":
        fns = []
        for arity in range(1, cap + 1):
            for t in range(1 << (1 << arity)):
                f = BooleanFunction(arity, t)
                if pred(f):
                    fns.append(f)
        return cls.from_functions(cap, fns)

    def arity_slice(self, arity: int) -> frozenset[int]:
        return self.members[arity - 1]

    def functions(self) -> Iterable[BooleanFunction]:
        for arity in range(1, self.cap + 1):
            for t in sorted(self.members[arity - 1]):
                yield BooleanFunction(arity, t)

    def __contains__(self, f: BooleanFunction) -> bool:
        return f.arity <= self.cap and f.table in self.members[f.arity - 1]

    def size(self) -> int:
        return sum(len(s) for s in self.members)

    def is_closed(self) -> bool:
        """Every minor (at arity <= cap) of every member is a member."""
        for arity in range(1, self.cap + 1):
            for t in self.members[arity - 1]:
                for m in range(1, self.cap + 1):
                    for minor_t in _all_substitutions(t, arity, m):
                        if minor_t not in self.members[m - 1]:
                            return False
        return True

    def __le__(self, other: "CappedClass") -> bool:
        _check_caps(self, other)
        return all(a <= b for a, b in zip(self.members, other.members))


def _check_caps(*ks: CappedClass) -> int:
    caps = {k.cap for k in ks}
    if len(caps) != 1:
        raise ValueError("capped classes must share one cap")
    return caps.pop()


def _all_substitutions(table: int, n: int, m: int) -> set[int]:
    """Tables of f(x_{a_1},...,x_{a_n}) over all assignments into 1..m."""
    if m ** n <= 4096:
        out = set()
        for assignment in product(range(1, m + 1), repeat=n):
            out.add(tb.substitute_table(table, n, assignment, m))
        return out
    # chunked enumeration for large assignment spaces
    f_arr = tb.to_array(table, n)
    cols = tb.bit_columns(m).astype(np.int64)
    pow2 = np.int64(1) << np.arange(n, dtype=np.int64)
    out = set()
    total = m ** n
    chunk = 1 << 13
    digits = np.empty((chunk, n), dtype=np.int64)
    for start in range(0, total, chunk):
        ids = np.arange(start, min(start + chunk, total), dtype=np.int64)
        rem = ids.copy()
        for k in range(n):
            digits[: ids.size, k] = rem % m
            rem //= m
        sel = cols[:, digits[: ids.size]]          # (2^m, batch, n)
        idx = np.tensordot(sel, pow2, axes=([2], [0]))  # (2^m, batch)
        bits = f_arr[idx]
        out.update(_pack_columns(bits, m))
    return out


def _pack_columns(bits: np.ndarray, m: int) -> Iterable[int]:
    npts = 1 << m
    if npts <= 62:
        weights = np.int64(1) << np.arange(npts, dtype=np.int64)
        return (int(v) for v in np.unique(weights @ bits.astype(np.int64)))
    packed = np.packbits(bits.astype(np.uint8), axis=0, bitorder="little")
    return (int.from_bytes(col.tobytes(), "little") for col in packed.T)


def closure(gens: Sequence[BooleanFunction], cap: int) -> CappedClass:
    """The smallest class closed under simple variable substitutions that
    contains the generators, cut at the cap."""
    if any(g.arity > cap for g in gens):
        raise ValueError("generator arity above the cap")
    sets: list[set[int]] = [set() for _ in range(cap)]
    for g in gens:
        for m in range(1, cap + 1):
            sets[m - 1] |= _all_substitutions(g.table, g.arity, m)
    return CappedClass(cap, tuple(frozenset(s) for s in sets))


def projection_class(cap: int) -> CappedClass:
    sets = [frozenset(tb.projection_mask(m, i) for i in range(1, m + 1))
            for m in range(1, cap + 1)]
    return CappedClass(cap, tuple(sets))


def compose_classes(left: CappedClass, right: CappedClass) -> CappedClass:
    """All composites f(g_1,...,g_n) with f in left (n-ary) and the g_i in
    right of one common arity <= cap."""
    cap = _check_caps(left, right)
    sets: list[set[int]] = [set() for _ in range(cap)]
    for m in range(1, cap + 1):
        g_tables = sorted(right.arity_slice(m))
        if not g_tables:
            continue
        g_arr = np.stack([tb.to_array(t, m) for t in g_tables]).astype(np.int64)
        b = len(g_tables)
        for n in range(1, cap + 1):
            f_tables = sorted(left.arity_slice(n))
            if not f_tables:
                continue
            total = b ** n
            chunk = max(1, (1 << 16) // (1 << m))
            for start in range(0, total, chunk):
                ids = np.arange(start, min(start + chunk, total), dtype=np.int64)
                rem = ids.copy()
                idx = np.zeros((ids.size, 1 << m), dtype=np.int64)
                for k in range(n):
                    idx |= g_arr[rem % b] << k
                    rem //= b
                for ft in f_tables:
                    bits = tb.to_array(ft, n)[idx]
                    sets[m - 1].update(_pack_columns(bits.T, m))
    return CappedClass(cap, tuple(frozenset(s) for s in sets))


def union(k1: CappedClass, k2: CappedClass) -> CappedClass:
    _check_caps(k1, k2)
    out = CappedClass(k1.cap, tuple(a | b for a, b in zip(k1.members, k2.members)))
    assert out.is_closed()
    return out


def intersect(k1: CappedClass, k2: CappedClass) -> CappedClass:
    _check_caps(k1, k2)
    out = CappedClass(k1.cap, tuple(a & b for a, b in zip(k1.members, k2.members)))
    assert out.is_closed()
    return out


def is_idempotent_at_cap(k: CappedClass) -> bool:
    return compose_classes(k, k) == k


@dataclass(frozen=True)
class AssocLemmaReport:
    subset_holds: bool    # (IJ)K within I(JK)
    equality_holds: bool
    j_closed: bool


def assoc_lemma_check(i: CappedClass, j: CappedClass, k: CappedClass) -> AssocLemmaReport:
    """Compares ((IJ)K) against (I(JK)) at the cap.  The containment is
    unconditional; equality is expected whenever J is substitution-closed."""
    _check_caps(i, j, k)
    left = compose_classes(compose_classes(i, j), k)
    right = compose_classes(i, compose_classes(j, k))
    return AssocLemmaReport(left <= right, left == right, j.is_closed())
