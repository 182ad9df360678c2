"""Decision oracle for the simple-variable-substitution preorder.

``minor_leq(g, f)`` searches for projections p_1..p_n with
g = f(p_1, ..., p_n).  Both functions are reduced to their essential
cores first; the search then backtracks over assignments of f's argument
positions to g's variables, quotiented by the symmetric blocks of f
(positions whose transposition leaves the table unchanged) and pruned by
variable coverage and by a rolling cache of counterexample points.  All
prunes are exactness-preserving, so a ``None`` answer is a proof of
incomparability; only an exhausted node budget is inconclusive.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations_with_replacement, permutations, product
from typing import Optional, Sequence

import numpy as np

from . import _tables as tb
from .core import BooleanFunction, compose, essential_arity, essential_core, projection


class SearchBudgetExceeded(RuntimeError):
    """Raised when the configured node budget runs out; distinct from a
    definitive negative answer."""


@dataclass(frozen=True)
class SubstitutionWitness:
    """Assignment of f's positions (1..n) to g's variable indices (1..m)."""

    assignment: tuple[int, ...]
    target_arity: int

    @property
    def mapping(self) -> dict[int, int]:
        return {k + 1: v for k, v in enumerate(self.assignment)}

    def replay(self, f: BooleanFunction) -> BooleanFunction:
        return compose(f, [projection(self.target_arity, v) for v in self.assignment])


@dataclass
class PairResult:
    i: int
    j: int
    outcome: str  # "incomparable" | "comparable" | "inconclusive"
    witness: Optional[SubstitutionWitness] = None
    nodes: int = 0


@dataclass
class AntichainReport:
    functions: list[BooleanFunction]
    verdict: Optional[bool]  # None when some pair was inconclusive
    violation: Optional[PairResult]
    pairs: list[PairResult] = field(default_factory=list)

    @property
    def inconclusive(self) -> bool:
        return self.verdict is None


class _Budget:
    def __init__(self, limit: Optional[int]):
        self.limit = limit
        self.nodes = 0

    def spend(self, k: int = 1) -> None:
        self.nodes += k
        if self.limit is not None and self.nodes > self.limit:
            raise SearchBudgetExceeded(f"node budget {self.limit} exhausted")


def symmetric_blocks(f: BooleanFunction) -> list[list[int]]:
    """Partition of argument positions into blocks closed under table-preserving
    transpositions.  Transposition-invariance is transitive (conjugation), so
    testing against one block representative is enough."""
    blocks: list[list[int]] = []
    arr = tb.to_array(f.table, f.arity)
    cols = tb.bit_columns(f.arity).astype(np.int64)
    pow2 = np.int64(1) << np.arange(f.arity, dtype=np.int64)
    for i in range(1, f.arity + 1):
        placed = False
        for block in blocks:
            j = block[0]
            swapped = cols.copy()
            swapped[:, [i - 1, j - 1]] = swapped[:, [j - 1, i - 1]]
            if np.array_equal(arr, arr[swapped @ pow2]):
                block.append(i)
                placed = True
                break
        if not placed:
            blocks.append([i])
    return blocks


class _CompositeChecker:
    """Checks f(x_{a_1},...,x_{a_n}) == g for full assignments, trying a small
    cache of previously failing points before the full table comparison."""

    def __init__(self, f: BooleanFunction, g: BooleanFunction):
        self.f = f
        self.g = g
        self.f_arr = tb.to_array(f.table, f.arity)
        self.g_arr = tb.to_array(g.table, g.arity)
        self.cols = tb.bit_columns(g.arity).astype(np.int64)
        self.pow2 = np.int64(1) << np.arange(f.arity, dtype=np.int64)
        self.counterexamples: list[int] = []

    def _value(self, assignment: Sequence[int], point: int) -> int:
        idx = 0
        for k, a in enumerate(assignment):
            idx |= ((point >> (a - 1)) & 1) << k
        return (self.f.table >> idx) & 1

    def matches(self, assignment: Sequence[int]) -> bool:
        for p in self.counterexamples:
            if self._value(assignment, p) != (self.g.table >> p) & 1:
                return False
        idx = self.cols[:, [a - 1 for a in assignment]] @ self.pow2
        diff = np.flatnonzero(self.f_arr[idx] != self.g_arr)
        if diff.size == 0:
            return True
        if len(self.counterexamples) < 64:
            self.counterexamples.append(int(diff[0]))
        return False


def _search_core(fc: BooleanFunction, gc: BooleanFunction,
                 budget: _Budget) -> Optional[tuple[int, ...]]:
    """Assignment of fc's positions to gc's variables with fc∘assignment == gc,
    or None.  Both inputs are essential cores (gc may be the 1-ary constant)."""
    n, m = fc.arity, gc.arity
    blocks = symmetric_blocks(fc)
    checker = _CompositeChecker(fc, gc)
    need = frozenset(range(1, m + 1)) if essential_arity(gc) else frozenset()
    slots_after = [0] * len(blocks)
    for b in range(len(blocks) - 1, 0, -1):
        slots_after[b - 1] = slots_after[b] + len(blocks[b])

    result: Optional[tuple[int, ...]] = None

    def recurse(b: int, chosen: list[Sequence[int]], covered: frozenset[int]) -> bool:
        nonlocal result
        budget.spend()
        if b == len(blocks):
            if need - covered:
                return False
            flat = [0] * n
            for block, vals in zip(blocks, chosen):
                for pos, v in zip(block, vals):
                    flat[pos - 1] = v
            budget.spend()
            if checker.matches(flat):
                result = tuple(flat)
                return True
            return False
        if len(need - covered) > len(blocks[b]) + slots_after[b]:
            return False
        for vals in combinations_with_replacement(range(1, m + 1), len(blocks[b])):
            if recurse(b + 1, chosen + [vals], covered | set(vals)):
                return True
        return False

    recurse(0, [], frozenset())
    return result


def _minor_leq(g: BooleanFunction, f: BooleanFunction,
               bud: _Budget) -> Optional[SubstitutionWitness]:
    gc, gmap = essential_core(g)
    fc, fmap = essential_core(f)
    if essential_arity(gc) > essential_arity(fc):
        return None

    if gc.arity == fc.arity and gc.table == fc.table:
        core_assignment: Optional[tuple[int, ...]] = tuple(range(1, fc.arity + 1))
    else:
        core_assignment = _search_core(fc, gc, bud)
    if core_assignment is None:
        return None

    # Lift back to the original indexing; dummy positions of f may read any
    # variable of g, so send them to x1.
    g_vars = {k: gmap.get(k, 1) for k in range(1, gc.arity + 1)}
    assignment = [1] * f.arity
    for core_pos, orig_pos in fmap.items():
        assignment[orig_pos - 1] = g_vars[core_assignment[core_pos - 1]]
    witness = SubstitutionWitness(tuple(assignment), g.arity)

    replayed = witness.replay(f)
    assert replayed == g, "witness replay failed"
    assert essential_arity(g) <= essential_arity(f)
    return witness


def minor_leq(g: BooleanFunction, f: BooleanFunction,
              budget: Optional[int] = None) -> Optional[SubstitutionWitness]:
    """A witness iff g = f(p_1,...,p_n) for some g.arity-ary projections.

    Returns None when no substitution exists; raises SearchBudgetExceeded
    when the node budget runs out before the search is complete.
    """
    return _minor_leq(g, f, _Budget(budget))


def equivalent(g: BooleanFunction, f: BooleanFunction,
               budget: Optional[int] = None) -> bool:
    if essential_arity(g) != essential_arity(f):
        return False
    return minor_leq(g, f, budget) is not None and minor_leq(f, g, budget) is not None


def canonical_key(f: BooleanFunction) -> str:
    """Lexicographically minimal core table over variable permutations;
    equal keys characterize equivalence."""
    core, _ = essential_core(f)
    n = core.arity
    if n > 10:
        raise ValueError("canonical_key needs essential arity <= 10")
    if essential_arity(core) <= 1:
        return f"{n}:{core.table:x}"
    best = core.table
    for perm in permutations(range(1, n + 1)):
        t = tb.permute_table(core.table, n, perm)
        if t < best:
            best = t
    return f"{n}:{best:x}"


def verify_antichain(fs: Sequence[BooleanFunction],
                     budget: Optional[int] = None) -> AntichainReport:
    """Checks that minor_leq fails for every ordered pair of distinct entries."""
    if len(fs) < 2:
        raise ValueError("an antichain check needs at least two functions")
    pairs: list[PairResult] = []
    violation: Optional[PairResult] = None
    saw_inconclusive = False
    for i in range(len(fs)):
        for j in range(len(fs)):
            if i == j:
                continue
            bud = _Budget(budget)
            try:
                witness = _minor_leq(fs[i], fs[j], bud)
                outcome = "incomparable" if witness is None else "comparable"
                res = PairResult(i, j, outcome, witness, bud.nodes)
            except SearchBudgetExceeded:
                res = PairResult(i, j, "inconclusive", None, bud.nodes)
                saw_inconclusive = True
            pairs.append(res)
            if res.outcome == "comparable" and violation is None:
                violation = res
    if violation is not None:
        verdict: Optional[bool] = False
    elif saw_inconclusive:
        verdict = None
    else:
        verdict = True
    return AntichainReport(list(fs), verdict, violation, pairs)


def minimal_elements(fs: Sequence[BooleanFunction],
                     budget: Optional[int] = None) -> list[BooleanFunction]:
    """Members of fs not strictly above any other member."""
    out = []
    for i, f in enumerate(fs):
        dominated = False
        for j, g in enumerate(fs):
            if i == j:
                continue
            if minor_leq(g, f, budget) is not None and not equivalent(g, f, budget):
                dominated = True
                break
        if not dominated:
            out.append(f)
    return out


def naive_minor_leq(g: BooleanFunction, f: BooleanFunction) -> Optional[SubstitutionWitness]:
    """Reference oracle: plain enumeration of all m^n projection tuples."""
    m = g.arity
    for assignment in product(range(1, m + 1), repeat=f.arity):
        if compose(f, [projection(m, a) for a in assignment]) == g:
            return SubstitutionWitness(assignment, m)
    return None
