"""Symbolic cardinality classification of closed intervals over the catalog.

The decision procedure follows the classification theorems: an interval is
empty when the endpoints are not nested; finite exactly when the
difference is quasi-monadic (decided on the signature table); countable
when the upper class sits below the disjunction, conjunction, or linear
clone, or when some separating-rank clone chain C yields
C-meet-Mc <= lower and upper <= C-meet-M; and uncountable otherwise, in
which case a pre-verified minimal interval inside the query supplies a
non-quasi-associative witness function.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Optional

import numpy as np

from . import _tables as tb
from .assoc import is_quasi_associative
from .classes import (ClassId, catalog, difference_is_quasi_monadic,
                      difference_sample, dual_class, is_idempotent_class,
                      is_subclass, member, member_mask, property_matrix,
                      _QM_ATOMS)
from .core import BooleanFunction, parse_function
from .minor import canonical_key


@dataclass(frozen=True)
class IntervalVerdict:
    kind: str  # "Empty" | "Finite" | "CountablyInfinite" | "Uncountable"
    justification: str
    count: Optional[int] = None          # exact count for quasi-monadic intervals
    witness_spec: Optional[str] = None   # non-quasi-associative member of the difference
    detail: Optional[str] = None         # e.g. which chain clone fired a bullet

    @property
    def witness(self) -> Optional[BooleanFunction]:
        return parse_function(self.witness_spec) if self.witness_spec else None


@dataclass(frozen=True)
class MinimalInterval:
    lower: ClassId
    upper: ClassId
    witness_spec: str


def minimal_interval_table(max_param: int = 4) -> list[MinimalInterval]:
    """The minimal uncountable intervals, each with a family witness that
    lies in the difference and is not quasi-associative.  Parameterized
    rows are instantiated for chain indices up to max_param."""
    C = ClassId
    rows: list[tuple[ClassId, ClassId, str]] = []
    # below the full class: lower in {T0, T1, L, S, M}
    rows += [(C("T1"), C("Omega"), "f@5"), (C("L"), C("Omega"), "f@5"),
             (C("S"), C("Omega"), "f@5"), (C("M"), C("Omega"), "f@5"),
             (C("T0"), C("Omega"), "dual(f@5)")]
    # below the 0-preserving / 1-preserving / constant-preserving clones
    for low in ("Tc", "L0", "M0"):
        rows.append((C(low), C("T0"), "f@5"))
    rows.append((C("U", 2), C("T0"), "f@5"))
    for low in ("Tc", "L1", "M1"):
        rows.append((C(low), C("T1"), "dual(f@5)"))
    rows.append((C("W", 2), C("T1"), "dual(f@5)"))
    for low in ("Mc", "Sc"):
        rows.append((C(low), C("Tc"), "g@5"))
    rows += [(C("TcU", 2), C("Tc"), "g@5"), (C("TcW", 2), C("Tc"), "g@5")]
    # separating chains against Tc / M meets
    for m in range(2, max_param + 1):
        rows += [(C("TcU", m), C("U", m), "u@5"), (C("MU", m), C("U", m), "u@5"),
                 (C("TcW", m), C("W", m), "dual(u@5)"), (C("MW", m), C("W", m), "dual(u@5)"),
                 (C("McU", m), C("TcU", m), "tu@5"), (C("McW", m), C("TcW", m), "dual(tu@5)")]
    rows += [(C("TcUInf"), C("UInf"), "u@5"), (C("MUInf"), C("UInf"), "u@5"),
             (C("TcWInf"), C("WInf"), "dual(u@5)"), (C("MWInf"), C("WInf"), "dual(u@5)"),
             (C("McUInf"), C("TcUInf"), "tu@5"), (C("McWInf"), C("TcWInf"), "dual(tu@5)")]
    # inside the monotone world.  The two one-endpoint rows are covering
    # pairs of the lattice figure that the classification propositions skip;
    # the pairwise-conjunction family witnesses them all the same.
    rows += [(C("Lambda"), C("M"), "H@5"), (C("V"), C("M"), "H@5"),
             (C("MU", 2), C("M0"), "H@5"), (C("MW", 2), C("M1"), "dual(H@5)"),
             (C("McU", 2), C("Mc"), "H@5"), (C("McW", 2), C("Mc"), "dual(H@5)"),
             (C("SM"), C("McU", 2), "dual(H@5)"), (C("SM"), C("McW", 2), "H@5"),
             (C("Lambda1"), C("M1"), "H@5"), (C("V0"), C("M0"), "dual(H@5)")]
    # consecutive rank steps; H_{n+1} witnesses the W side, its dual the U side
    for n in range(2, max_param + 1):
        wit_w, wit_u = f"H@{n + 1}", f"dual(H@{n + 1})"
        rows += [(C("U", n + 1), C("U", n), wit_u),
                 (C("TcU", n + 1), C("TcU", n), wit_u),
                 (C("MU", n + 1), C("MU", n), wit_u),
                 (C("McU", n + 1), C("McU", n), wit_u),
                 (C("W", n + 1), C("W", n), wit_w),
                 (C("TcW", n + 1), C("TcW", n), wit_w),
                 (C("MW", n + 1), C("MW", n), wit_w),
                 (C("McW", n + 1), C("McW", n), wit_w)]
    # conjunction/disjunction against the separating limits.  The guarded
    # composites G@2,m are 1-separating (the guard is shared), so they live
    # on the U side; their duals witness the W side.
    rows += [(C("Lambda0"), C("MUInf"), "G@2,3"), (C("LambdaC"), C("McUInf"), "G@2,3"),
             (C("V1"), C("MWInf"), "dual(G@2,3)"), (C("Vc"), C("McWInf"), "dual(G@2,3)")]
    # the self-dual column
    rows += [(C("Ic"), C("SM"), "T@7"),
             (C("SM"), C("Sc"), "s@7"), (C("Lc"), C("Sc"), "s@7"),
             (C("Sc"), C("S"), "complement(T@7)"), (C("LS"), C("S"), "complement(T@7)")]
    return [MinimalInterval(a, b, w) for a, b, w in rows]


def _finite_count(c1: ClassId, c2: ClassId) -> Optional[int]:
    if c1.is_quasi_monadic_class and c2.is_quasi_monadic_class:
        gained = _QM_ATOMS[c2.family] - _QM_ATOMS[c1.family]
        return 1 << len(gained)
    if is_subclass(c2, c1):
        return 1  # equal endpoints
    return None


def _bullet4_options(c1: ClassId, c2: ClassId):
    bound = max([2] + [c.m for c in (c1, c2) if c.m is not None]) + 2
    yield "Omega", ClassId("Mc"), ClassId("M")
    yield "UInf", ClassId("McUInf"), ClassId("MUInf")
    yield "WInf", ClassId("McWInf"), ClassId("MWInf")
    for m in range(2, bound + 1):
        yield f"U{m}", ClassId("McU", m), ClassId("MU", m)
        yield f"W{m}", ClassId("McW", m), ClassId("MW", m)


def classify_interval(c1: ClassId, c2: ClassId) -> IntervalVerdict:
    if not (is_idempotent_class(c1) and is_idempotent_class(c2)):
        raise ValueError("interval endpoints must be idempotent catalog classes")
    if not is_subclass(c1, c2):
        return IntervalVerdict("Empty", "empty.not_subclass")
    if difference_is_quasi_monadic(c1, c2):
        for arity in (1, 2):  # cheap sanity: no essential-arity-2 member slips in
            diff = member_mask(c2, arity) & ~member_mask(c1, arity)
            assert not np.any(diff & (property_matrix(arity)["ess_count"] >= 2))
        return IntervalVerdict("Finite", "thm5.finite", count=_finite_count(c1, c2))
    for name, upper in (("thm9.bullet1", ClassId("V")),
                        ("thm9.bullet2", ClassId("Lambda")),
                        ("thm9.bullet3", ClassId("L"))):
        if is_subclass(c2, upper):
            return IntervalVerdict("CountablyInfinite", name)
    for label, c_mc, c_m in _bullet4_options(c1, c2):
        if is_subclass(c_mc, c1) and is_subclass(c2, c_m):
            return IntervalVerdict("CountablyInfinite", "thm9.bullet4", detail=f"C={label}")
    bound = max([4] + [c.m for c in (c1, c2) if c.m is not None]) + 2
    for entry in minimal_interval_table(bound):
        if is_subclass(c1, entry.lower) and is_subclass(entry.upper, c2):
            return IntervalVerdict(
                "Uncountable", "thm10.witness",
                witness_spec=entry.witness_spec,
                detail=f"minimal interval [{entry.lower}, {entry.upper}]")
    raise RuntimeError(
        f"no minimal interval found inside [{c1}, {c2}] although the countability "
        "conditions all failed; the witness table is incomplete")


@lru_cache(maxsize=8)
def _assoc_vector(arity: int) -> np.ndarray:
    """For every table of the given arity, whether the function is
    associative, computed for all tables at once on the 2*arity-1 frame."""
    count = 1 << (1 << arity)
    if arity <= 1:
        return np.ones(count, dtype=bool)
    frame = 2 * arity - 1
    fbits = tb.bit_columns(frame).astype(np.int64)
    pow2 = np.int64(1) << np.arange(arity, dtype=np.int64)
    tables = np.arange(count, dtype=np.int64)
    bits = ((tables[:, None] >> np.arange(1 << arity)) & 1).astype(np.int8)
    nests = []
    for i in range(1, arity + 1):
        inner_idx = fbits[:, i - 1: i - 1 + arity] @ pow2
        base = np.zeros(1 << frame, dtype=np.int64)
        for pos in range(1, arity + 1):
            if pos < i:
                base |= fbits[:, pos - 1] << (pos - 1)
            elif pos > i:
                base |= fbits[:, pos + arity - 2] << (pos - 1)
        inner_val = bits[:, inner_idx].astype(np.int64)
        outer_idx = base[None, :] | (inner_val << (i - 1))
        nests.append(np.take_along_axis(bits, outer_idx, axis=1))
    ok = np.ones(count, dtype=bool)
    for a in range(len(nests)):
        for b in range(a + 1, len(nests)):
            ok &= ~np.any(nests[a] != nests[b], axis=1)
    return ok


@lru_cache(maxsize=8)
def quasi_associative_vector(arity: int) -> np.ndarray:
    """Per-table quasi-associativity for every function of the given arity
    (associativity of the essential core).  Arity <= 4."""
    if arity > 4:
        raise ValueError("quasi_associative_vector caps arity at 4")
    count = 1 << (1 << arity)
    tables = np.arange(count, dtype=np.int64)
    bits = ((tables[:, None] >> np.arange(1 << arity)) & 1).astype(np.int8)
    ess = np.zeros((count, arity), dtype=bool)
    for i in range(arity):
        stride = 1 << i
        lo = [p for p in range(1 << arity) if not p >> i & 1]
        hi = [p + stride for p in lo]
        ess[:, i] = np.any(bits[:, lo] != bits[:, hi], axis=1)
    out = np.ones(count, dtype=bool)
    ess_code = np.zeros(count, dtype=np.int32)
    for i in range(arity):
        ess_code |= ess[:, i].astype(np.int32) << i
    for code in range(1 << arity):
        rows = np.flatnonzero(ess_code == code)
        if rows.size == 0:
            continue
        vars_in = [i for i in range(arity) if code >> i & 1]
        k = len(vars_in)
        if k <= 1:
            continue
        pts = tb.bit_columns(k).astype(np.int64) @ (
            np.int64(1) << np.array([i for i in vars_in], dtype=np.int64))
        core_tables = bits[np.ix_(rows, pts)].astype(np.int64) @ (
            np.int64(1) << np.arange(1 << k, dtype=np.int64))
        out[rows] = _assoc_vector(k)[core_tables]
    return out


@dataclass(frozen=True)
class CrossCheckReport:
    verdict: IntervalVerdict
    scanned: int
    non_quasi_associative: tuple[str, ...]  # hex specs of difference members
    consistent: bool
    witness_found_at_cap: Optional[bool]


def cross_check_thm10(c1: ClassId, c2: ClassId, arity_cap: int = 4) -> CrossCheckReport:
    """Exhaustively scans the difference up to the arity cap and compares
    against the symbolic verdict: a non-quasi-associative member may exist
    only when the verdict is Uncountable.  For Uncountable verdicts the
    report records whether a witness already exists at the cap."""
    from .core import format_function

    if arity_cap > 4:
        raise ValueError("cross_check_thm10 caps arity at 4")
    verdict = classify_interval(c1, c2)
    if verdict.kind == "Empty":
        return CrossCheckReport(verdict, 0, (), True, None)
    bad: list[str] = []
    scanned = 0
    for arity in range(1, arity_cap + 1):
        in_diff = member_mask(c2, arity) & ~member_mask(c1, arity)
        scanned += int(np.count_nonzero(in_diff))
        hits = np.flatnonzero(in_diff & ~quasi_associative_vector(arity))
        for t in hits[:4]:
            bad.append(format_function(BooleanFunction(arity, int(t))))
    if verdict.kind == "Uncountable":
        return CrossCheckReport(verdict, scanned, tuple(bad), True, bool(bad))
    return CrossCheckReport(verdict, scanned, tuple(bad), not bad, None)


def enumerate_between(c1: ClassId, c2: ClassId, cap: int = 3,
                      max_difference: int = 64) -> int:
    """Counts the substitution-closed classes between the capped endpoint
    materializations.  Exact for quasi-monadic-difference intervals, where
    capping loses nothing."""
    from .monoid import _all_substitutions

    diff: list[tuple[int, int]] = []
    in1: dict[int, np.ndarray] = {}
    for arity in range(1, cap + 1):
        in1[arity] = member_mask(c1, arity)
        in2 = member_mask(c2, arity)
        for t in np.flatnonzero(in2 & ~in1[arity]):
            diff.append((arity, int(t)))
    if len(diff) > max_difference:
        raise ValueError(f"difference too large to materialize ({len(diff)} members)")
    index = {d: k for k, d in enumerate(diff)}
    deps: list[frozenset[int]] = []
    for arity, t in diff:
        below = set()
        for m in range(1, cap + 1):
            for mt in _all_substitutions(t, arity, m):
                if not in1[m][mt]:
                    below.add(index[(m, mt)])
        deps.append(frozenset(below))

    above: list[set[int]] = [set() for _ in diff]
    for k, ds in enumerate(deps):
        for d in ds:
            if d != k:
                above[d].add(k)

    def count_downsets(remaining: frozenset[int]) -> int:
        if not remaining:
            return 1
        v = min(remaining)
        up = frozenset(x for x in remaining if x == v or (v in deps[x]))
        down = frozenset(x for x in remaining if x == v or (x in deps[v]))
        return count_downsets(remaining - up) + count_downsets(remaining - down)

    return count_downsets(frozenset(range(len(diff))))


def validate_minimal_intervals(max_param: int = 4) -> list[str]:
    """Machine-checks every table row: the endpoints nest, the witness lies
    in the difference, and the witness is not quasi-associative."""
    problems = []
    for entry in minimal_interval_table(max_param):
        w = parse_function(entry.witness_spec)
        if not is_subclass(entry.lower, entry.upper):
            problems.append(f"{entry}: endpoints not nested")
        if not member(w, entry.upper):
            problems.append(f"{entry}: witness outside the upper class")
        if member(w, entry.lower):
            problems.append(f"{entry}: witness inside the lower class")
        if is_quasi_associative(w):
            problems.append(f"{entry}: witness is quasi-associative")
    return problems
