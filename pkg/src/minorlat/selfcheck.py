"""Executable invariant suite: one named check per documented property,
runnable from the CLI (``minorlat selfcheck``) and reused by the tests.

Two checks are marked ``known_defect``: the homomorphism criterion for the
substitution preorder fails as stated once a substitution witness merges
hyperedges, and the complemented-selector antichain family collapses into
a chain (its rank thresholds shift exactly with the identified selector
weight).  Both are reported with explicit counterexamples; the selfcheck
exit status treats a documented failure as expected and flags any change
in either direction.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Callable, Optional

from . import _tables as tb
from . import assoc, classes, classify, families, hypergraph, minor, monoid
from .core import (BooleanFunction, all_functions, complement, compose,
                   constant, dual, essential_arity, essential_core,
                   format_function, from_zhegalkin, parse_function, projection,
                   underline, zhegalkin)


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""
    inconclusive: bool = False
    known_defect: bool = False

    @property
    def as_expected(self) -> bool:
        if self.inconclusive:
            return False
        return self.passed != self.known_defect

    def line(self) -> str:
        if self.inconclusive:
            status = "INCONCLUSIVE"
        elif self.passed:
            status = "pass" if not self.known_defect else "PASS (unexpected: documented defect)"
        else:
            status = "fail (known defect)" if self.known_defect else "FAIL"
        return f"{self.name}: {status}" + (f" -- {self.detail}" if self.detail else "")


@dataclass
class CheckContext:
    seed: int = 0
    budget: Optional[int] = None

    def rng(self, salt: str) -> random.Random:
        return random.Random(f"{self.seed}:{salt}")


_REGISTRY: list[tuple[str, Callable[[CheckContext], CheckResult]]] = []


def _check(name: str):
    def wrap(fn):
        _REGISTRY.append((name, fn))
        return fn
    return wrap


def _random_function(rng: random.Random, arity: int) -> BooleanFunction:
    return BooleanFunction(arity, rng.getrandbits(1 << arity))


def _functions_up_to(arity: int):
    for a in range(1, arity + 1):
        yield from all_functions(a)


# --- core ---------------------------------------------------------------

@_check("core.dnf_roundtrip")
def _core_dnf(ctx: CheckContext) -> CheckResult:
    for f in _functions_up_to(4):
        g = parse_function(format_function(f, "dnf"))
        if g != f:
            return CheckResult("core.dnf_roundtrip", False, f"{format_function(f)} reparsed as {format_function(g)}")
    return CheckResult("core.dnf_roundtrip", True, "exhaustive at arity <= 4")


@_check("core.compose_associativity")
def _core_compose_assoc(ctx: CheckContext) -> CheckResult:
    rng = ctx.rng("compose")
    trials = 0
    for n, m, k in itertools.product((1, 2, 3), repeat=3):
        for _ in range(25):
            f = _random_function(rng, n)
            gs = [_random_function(rng, m) for _ in range(n)]
            hs = [_random_function(rng, k) for _ in range(m)]
            lhs = compose(compose(f, gs), hs)
            rhs = compose(f, [compose(g, hs) for g in gs])
            if lhs != rhs:
                return CheckResult("core.compose_associativity", False, f"n={n} m={m} k={k}")
            trials += 1
    return CheckResult("core.compose_associativity", True, f"{trials} random instances, all arities <= 3")


@_check("core.automorphism_maps")
def _core_autos(ctx: CheckContext) -> CheckResult:
    for f in _functions_up_to(3):
        if dual(dual(f)) != f or complement(complement(f)) != f:
            return CheckResult("core.automorphism_maps", False, "involution broken")
        if dual(complement(f)) != complement(dual(f)):
            return CheckResult("core.automorphism_maps", False, "maps do not commute")
        if underline(f) != dual(complement(f)):
            return CheckResult("core.automorphism_maps", False, "underline mismatch")
    return CheckResult("core.automorphism_maps", True, "exhaustive at arity <= 3")


@_check("core.zhegalkin_roundtrip")
def _core_zheg(ctx: CheckContext) -> CheckResult:
    for f in _functions_up_to(4):
        p = zhegalkin(f)
        if from_zhegalkin(p) != f:
            return CheckResult("core.zhegalkin_roundtrip", False, format_function(f))
        if zhegalkin(from_zhegalkin(p)) != p:
            return CheckResult("core.zhegalkin_roundtrip", False, f"polynomial side, {format_function(f)}")
    return CheckResult("core.zhegalkin_roundtrip", True, "exhaustive at arity <= 4, both directions")


@_check("core.essential_core_idempotent")
def _core_core(ctx: CheckContext) -> CheckResult:
    rng = ctx.rng("core")
    sample = list(_functions_up_to(3)) + [_random_function(rng, 4) for _ in range(500)]
    for f in sample:
        core1, _ = essential_core(f)
        core2, mapping = essential_core(core1)
        if core2 != core1:
            return CheckResult("core.essential_core_idempotent", False, format_function(f))
        if essential_arity(core1) and sorted(mapping.items()) != [(i, i) for i in range(1, core1.arity + 1)]:
            return CheckResult("core.essential_core_idempotent", False, f"non-identity map for {format_function(f)}")
    return CheckResult("core.essential_core_idempotent", True, "exhaustive <= 3 plus 500 random at arity 4")


# --- minor --------------------------------------------------------------

def _core_representatives(max_arity: int) -> list[BooleanFunction]:
    reps: dict[str, BooleanFunction] = {}
    for f in _functions_up_to(max_arity):
        key = minor.canonical_key(f)
        reps.setdefault(key, essential_core(f)[0])
    return sorted(reps.values(), key=lambda f: (f.arity, f.table))


@_check("minor.completeness_oracle")
def _minor_oracle(ctx: CheckContext) -> CheckResult:
    reps = _core_representatives(3)
    pairs = 0
    try:
        for g in reps:
            for f in reps:
                fast = minor.minor_leq(g, f, ctx.budget)
                slow = minor.naive_minor_leq(g, f)
                if (fast is None) != (slow is None):
                    return CheckResult(
                        "minor.completeness_oracle", False,
                        f"disagree on {format_function(g)} vs {format_function(f)}")
                pairs += 1
    except minor.SearchBudgetExceeded:
        return CheckResult("minor.completeness_oracle", False,
                           f"budget ran out after {pairs} pairs", inconclusive=True)
    return CheckResult("minor.completeness_oracle", True,
                       f"{len(reps)} cores, {pairs} ordered pairs, exhaustive at arity <= 3")


@_check("minor.preorder_laws")
def _minor_preorder(ctx: CheckContext) -> CheckResult:
    rng = ctx.rng("preorder")
    try:
        for _ in range(200):
            f = _random_function(rng, rng.randint(1, 4))
            if minor.minor_leq(f, f, ctx.budget) is None:
                return CheckResult("minor.preorder_laws", False, "reflexivity broken")
        for trial in range(1000):
            f = _random_function(rng, rng.randint(2, 4))
            m1 = rng.randint(1, 4)
            g = compose(f, [projection(m1, rng.randint(1, m1)) for _ in range(f.arity)])
            m2 = rng.randint(1, 4)
            h = compose(g, [projection(m2, rng.randint(1, m2)) for _ in range(g.arity)])
            if minor.minor_leq(h, f, ctx.budget) is None:
                return CheckResult("minor.preorder_laws", False, f"transitivity broken at trial {trial}")
    except minor.SearchBudgetExceeded:
        return CheckResult("minor.preorder_laws", False, "budget ran out", inconclusive=True)
    return CheckResult("minor.preorder_laws", True, "reflexivity x200, transitivity x1000, arity <= 4")


@_check("minor.witness_soundness")
def _minor_witness(ctx: CheckContext) -> CheckResult:
    rng = ctx.rng("witness")
    found = 0
    try:
        for _ in range(400):
            f = _random_function(rng, rng.randint(1, 4))
            m = rng.randint(1, 4)
            g = compose(f, [projection(m, rng.randint(1, m)) for _ in range(f.arity)])
            w = minor.minor_leq(g, f, ctx.budget)
            if w is None:
                return CheckResult("minor.witness_soundness", False, "constructed minor not found")
            if w.replay(f) != g:
                return CheckResult("minor.witness_soundness", False, "witness does not replay")
            if essential_arity(g) > essential_arity(f):
                return CheckResult("minor.witness_soundness", False, "essential arity grew")
            if essential_arity(g) == essential_arity(f) and minor.minor_leq(f, g, ctx.budget) is None:
                return CheckResult("minor.witness_soundness", False,
                                   "equal essential arity without equivalence")
            found += 1
    except minor.SearchBudgetExceeded:
        return CheckResult("minor.witness_soundness", False, "budget ran out", inconclusive=True)
    return CheckResult("minor.witness_soundness", True, f"{found} witnesses replayed")


# --- classes ------------------------------------------------------------

@_check("classes.meet_consistency")
def _classes_meets(ctx: CheckContext) -> CheckResult:
    parts = {
        "TcU3": ("Tc", "U3"), "TcW3": ("Tc", "W3"), "MU2": ("M", "U2"),
        "MW2": ("M", "W2"), "McU2": ("Mc", "U2"), "McW2": ("Mc", "W2"),
        "TcUInf": ("Tc", "UInf"), "McWInf": ("Mc", "WInf"),
        "Mc": ("M", "Tc"), "Sc": ("S", "Tc"), "SM": ("S", "M"),
        "Lc": ("L", "Tc"), "LS": ("L", "S"), "LambdaC": ("Lambda", "Tc"),
        "V0": ("V", "T0"),
    }
    for f in _functions_up_to(3):
        for name, (a, b) in parts.items():
            want = classes.member(f, classes.parse_class_id(a)) and \
                classes.member(f, classes.parse_class_id(b))
            if classes.member(f, classes.parse_class_id(name)) != want:
                return CheckResult("classes.meet_consistency", False,
                                   f"{name} vs {a} & {b} on {format_function(f)}")
    return CheckResult("classes.meet_consistency", True, "15 compound tags, exhaustive at arity <= 3")


@_check("classes.duality_transport")
def _classes_duality(ctx: CheckContext) -> CheckResult:
    tags = ["T0", "T1", "M0", "M1", "U2", "W2", "U3", "W3", "UInf", "WInf",
            "Lambda", "V", "Lambda0", "V1", "LambdaC", "Vc", "MU2", "MW2",
            "McU3", "McW3", "L0", "L1", "I0", "I1", "C0", "C1"]
    for f in _functions_up_to(3):
        fd = dual(f)
        for tag in tags:
            c = classes.parse_class_id(tag)
            if classes.member(f, c) != classes.member(fd, classes.dual_class(c)):
                return CheckResult("classes.duality_transport", False,
                                   f"{tag} on {format_function(f)}")
    return CheckResult("classes.duality_transport", True, "exhaustive at arity <= 3")


def _naive_rank(f: BooleanFunction, a: int) -> classes.Rank:
    points = [p for p in range(1 << f.arity) if f.value_at(p) == a]
    if not points:
        return classes.Rank("infinite")
    full = (1 << f.arity) - 1
    masks = [p if a == 1 else (~p) & full for p in points]
    for size in range(1, len(masks) + 1):
        for combo in itertools.combinations(masks, size):
            acc = full
            for m in combo:
                acc &= m
            if acc == 0:
                return classes.Rank("below2") if size <= 2 else classes.Rank("finite", size - 1)
    return classes.Rank("infinite")


@_check("classes.rank_chain")
def _classes_rank(ctx: CheckContext) -> CheckResult:
    rng = ctx.rng("rank")
    sample = list(_functions_up_to(3)) + [_random_function(rng, 4) for _ in range(300)]
    for f in sample:
        for a in (0, 1):
            got = classes.separating_rank(f, a)
            want = _naive_rank(f, a)
            if (got.kind, got.m) != (want.kind, want.m):
                return CheckResult("classes.rank_chain", False,
                                   f"rank mismatch on {format_function(f)} a={a}: {got} vs {want}")
        r = classes.separating_rank(f, 1)
        if r.kind == "finite":
            for k in range(2, r.m + 1):
                if not classes.member(f, classes.ClassId("U", k)):
                    return CheckResult("classes.rank_chain", False, "chain membership broken")
            if classes.member(f, classes.ClassId("U", r.m + 1)):
                return CheckResult("classes.rank_chain", False, "rank sup not sharp")
    return CheckResult("classes.rank_chain", True,
                       "vs subset-enumeration oracle, exhaustive <= 3 plus 300 random at 4")


@_check("classes.closed_under_minors")
def _classes_closed(ctx: CheckContext) -> CheckResult:
    ids = classes.catalog(3)
    for arity in (1, 2, 3):
        masks = {str(c): classes.member_mask(c, arity) for c in ids}
        sub_masks = {str(c): {m: classes.member_mask(c, m) for m in (1, 2, 3)} for c in ids}
        for t in range(1 << (1 << arity)):
            member_of = [c for c in ids if masks[str(c)][t]]
            if not member_of:
                continue
            for m in (1, 2, 3):
                for mt in monoid._all_substitutions(t, arity, m):
                    for c in member_of:
                        if not sub_masks[str(c)][m][mt]:
                            return CheckResult(
                                "classes.closed_under_minors", False,
                                f"{c} loses tt:{arity}:0x{t:x} -> tt:{m}:0x{mt:x}")
    return CheckResult("classes.closed_under_minors", True,
                       "all catalog classes, all minors, exhaustive at arity <= 3")


@_check("classes.catalog_validation")
def _classes_catalog(ctx: CheckContext) -> CheckResult:
    violations = classes.validate_catalog(max_arity=4, max_param=4)
    if violations:
        return CheckResult("classes.catalog_validation", False, violations[0])
    return CheckResult("classes.catalog_validation", True,
                       "inclusion table vs predicates, exhaustive at arity <= 4")


# --- families -----------------------------------------------------------

def _placement_rows() -> list[tuple[str, BooleanFunction, list[str], list[str]]]:
    rows = []
    for n in range(4, 9):
        rows.append((f"f@{n}", families.make_f(n), ["T0"], ["T1", "Tc", "U2", "S", "M"]))
    for n in range(5, 9):
        rows.append((f"f@{n}:L", families.make_f(n), [], ["L"]))
    for n in range(4, 9):
        rows.append((f"g@{n}", families.make_g(n), ["Tc"], ["Mc", "Sc", "TcU2", "TcW2"]))
    for n in range(4, 8):
        rows.append((f"u@{n}", families.make_u(n), ["UInf"], ["TcU2"]))
        rows.append((f"tu@{n}", families.make_tu(n), ["TcUInf"], ["MU2"]))
    for n in range(4, 9):
        rows.append((f"H@{n}", families.make_H(n), ["McW2"], ["U2", "Lambda", "V"]))
        rows.append((f"H@{n}^d", dual(families.make_H(n)), ["McU2"], ["W2", "Lambda", "V"]))
    for n in range(2, 8):
        rows.append((f"H@{n + 1}:rank", families.make_H(n + 1),
                     [f"McW{n}"], [f"W{n + 1}"]))
    for n in (2, 3):
        for m in range(n + 1, 9 - n):
            rows.append((f"G@{n + 1},{m}", families.make_G(n + 1, m),
                         [f"McW{n}"], [f"W{n + 1}"]))
    # the guarded family is 1-separating: the paper's prose lists the dual
    # placement for it (see the decisions ledger); both are asserted here
    for m in range(3, 8):
        rows.append((f"G@2,{m}", families.make_G(2, m), ["McUInf"], ["Lambda"]))
        rows.append((f"G@2,{m}^d", dual(families.make_G(2, m)), ["McWInf"], ["V"]))
    for n in (7, 9):
        rows.append((f"T@{n}", families.make_T(n), ["SM"], ["L"]))
        rows.append((f"s@{n}", families.make_s(n), ["Sc"], ["SM", "L"]))
    return rows


@_check("families.placement")
def _families_placement(ctx: CheckContext) -> CheckResult:
    rows = _placement_rows()
    for name, fn, inside, outside in rows:
        for tag in inside:
            if not classes.member(fn, classes.parse_class_id(tag)):
                return CheckResult("families.placement", False, f"{name} not in {tag}")
        for tag in outside:
            if classes.member(fn, classes.parse_class_id(tag)):
                return CheckResult("families.placement", False, f"{name} unexpectedly in {tag}")
    return CheckResult("families.placement", True, f"{len(rows)} placement rows")


@_check("families.antichains")
def _families_antichains(ctx: CheckContext) -> CheckResult:
    suites = {
        "f@4..8": [families.make_f(n) for n in range(4, 9)],
        "g@4..8": [families.make_g(n) for n in range(4, 9)],
        "u@4..7": [families.make_u(n) for n in range(4, 8)],
        "tu@4..7": [families.make_tu(n) for n in range(4, 8)],
        "H@2..6": [families.make_H(n) for n in range(2, 7)],
        "G@3,3..3,6": [families.make_G(3, m) for m in range(3, 7)],
        "G@2,2..2,6": [families.make_G(2, m) for m in range(2, 7)],
    }
    for name, fs in suites.items():
        rep = minor.verify_antichain(fs, ctx.budget)
        if rep.verdict is None:
            return CheckResult("families.antichains", False, f"{name} inconclusive", inconclusive=True)
        if rep.verdict is False:
            v = rep.violation
            return CheckResult("families.antichains", False,
                               f"{name}: pair ({v.i},{v.j}) comparable via {v.witness.assignment}")
    return CheckResult("families.antichains", True, f"{len(suites)} family prefixes")


@_check("families.heavy_pair_T")
def _families_heavy_T(ctx: CheckContext) -> CheckResult:
    try:
        a = minor.minor_leq(families.make_T(7), families.make_T(9), ctx.budget)
        b = minor.minor_leq(families.make_T(9), families.make_T(7), ctx.budget)
    except minor.SearchBudgetExceeded:
        return CheckResult("families.heavy_pair_T", False, "budget ran out", inconclusive=True)
    if a is not None or b is not None:
        return CheckResult("families.heavy_pair_T", False, "T@7 and T@9 comparable")
    return CheckResult("families.heavy_pair_T", True, "T@7 and T@9 incomparable (quotient search)")


@_check("families.heavy_pair_s")
def _families_heavy_s(ctx: CheckContext) -> CheckResult:
    """The complemented-selector family is claimed to be an antichain, but
    s@7 really is a substitution instance of s@9 (identify the selectors
    with the last two main arguments: every branch threshold shifts with
    the selector weight).  Documented defect; the witness is printed."""
    try:
        a = minor.minor_leq(families.make_s(7), families.make_s(9), ctx.budget)
        b = minor.minor_leq(families.make_s(9), families.make_s(7), ctx.budget)
    except minor.SearchBudgetExceeded:
        return CheckResult("families.heavy_pair_s", False, "budget ran out",
                           inconclusive=True, known_defect=True)
    if a is None and b is None:
        return CheckResult("families.heavy_pair_s", True, "s@7, s@9 incomparable",
                           known_defect=True)
    detail = f"s@7 = s@9 composed with projections {a.assignment}" if a else "reverse direction"
    return CheckResult("families.heavy_pair_s", False, detail, known_defect=True)


@_check("families.monadic_lattice")
def _families_monadic(ctx: CheckContext) -> CheckResult:
    lattice = families.quasi_monadic_lattice(3)
    if len(lattice) != 16:
        return CheckResult("families.monadic_lattice", False, f"{len(lattice)} classes")
    if len({mc.capped for mc in lattice}) != 16:
        return CheckResult("families.monadic_lattice", False, "classes not distinct")
    for a in lattice:
        for b in lattice:
            if (a.capped <= b.capped) != (a.atoms <= b.atoms):
                return CheckResult("families.monadic_lattice", False,
                                   f"order mismatch between {a.name} and {b.name}")
    covers = sum(1 for a in lattice for b in lattice
                 if a.atoms < b.atoms and len(b.atoms - a.atoms) == 1)
    if covers != 32:
        return CheckResult("families.monadic_lattice", False, f"{covers} cover edges")
    return CheckResult("families.monadic_lattice", True,
                       "16 distinct classes, order isomorphic to the 4-cube (32 covers)")


# --- hypergraph ---------------------------------------------------------

def _all_hypergraphs(n: int):
    verts = list(range(1, n + 1))
    subsets = [frozenset(c) for k in range(1, n + 1)
               for c in itertools.combinations(verts, k)]
    for mask in range(1 << len(subsets)):
        yield hypergraph.Hypergraph(
            n, frozenset(s for i, s in enumerate(subsets) if mask >> i & 1))


def _random_hypergraph(rng: random.Random, max_vertices: int = 5,
                       max_edges: int = 6) -> hypergraph.Hypergraph:
    n = rng.randint(1, max_vertices)
    edges = set()
    for _ in range(rng.randint(0, max_edges)):
        size = rng.randint(1, n)
        edges.add(frozenset(rng.sample(range(1, n + 1), size)))
    return hypergraph.Hypergraph(n, frozenset(edges))


@_check("hypergraph.roundtrip")
def _hg_roundtrip(ctx: CheckContext) -> CheckResult:
    checked = 0
    for f in _functions_up_to(4):
        if not classes.is_monotone(f) or f.table == tb.full_mask(f.arity):
            continue
        if hypergraph.function_of(hypergraph.hypergraph_of(f)) != f:
            return CheckResult("hypergraph.roundtrip", False, format_function(f))
        checked += 1
    return CheckResult("hypergraph.roundtrip", True,
                       f"{checked} monotone functions, exhaustive at arity <= 4")


@_check("hypergraph.hom_witnesses")
def _hg_witness(ctx: CheckContext) -> CheckResult:
    rng = ctx.rng("hom")
    found = 0
    for _ in range(400):
        G = _random_hypergraph(rng)
        H = _random_hypergraph(rng)
        w = hypergraph.edge_surjective_hom(G, H, ctx.budget)
        if w is not None:
            if not w.verify(G, H):
                return CheckResult("hypergraph.hom_witnesses", False, f"{G} -> {H}")
            found += 1
    return CheckResult("hypergraph.hom_witnesses", True, f"{found} witnesses re-verified")


@_check("hypergraph.hom_implies_minor")
def _hg_sound(ctx: CheckContext) -> CheckResult:
    for nG in (1, 2, 3):
        for G in _all_hypergraphs(nG):
            fG = hypergraph.function_of(G)
            for nH in (1, 2, 3):
                for H in _all_hypergraphs(nH):
                    if hypergraph.edge_surjective_hom(G, H) is not None:
                        if minor.minor_leq(hypergraph.function_of(H), fG) is None:
                            return CheckResult("hypergraph.hom_implies_minor", False,
                                               f"{G} -> {H}")
    rng = ctx.rng("hom-minor")
    for _ in range(500):
        G, H = _random_hypergraph(rng), _random_hypergraph(rng)
        if hypergraph.edge_surjective_hom(G, H) is not None:
            if minor.minor_leq(hypergraph.function_of(H), hypergraph.function_of(G)) is None:
                return CheckResult("hypergraph.hom_implies_minor", False, f"{G} -> {H}")
    return CheckResult("hypergraph.hom_implies_minor", True,
                       "exhaustive <= 3 vertices plus 500 random <= 5")


@_check("hypergraph.lemma4_as_stated")
def _hg_lemma4(ctx: CheckContext) -> CheckResult:
    """The biconditional fails whenever the substitution witness merges
    hyperedges; smallest counterexample: edges {1},{2} against
    {1},{2},{1,2} on two vertices.  Documented defect."""
    bad = []
    for nG in (1, 2, 3):
        for G in _all_hypergraphs(nG):
            for nH in (1, 2, 3):
                for H in _all_hypergraphs(nH):
                    if not hypergraph.lemma4_check(G, H):
                        bad.append(f"{G} vs {H}")
                        if len(bad) >= 3:
                            return CheckResult(
                                "hypergraph.lemma4_as_stated", False,
                                f"counterexamples: {'; '.join(bad)} ...",
                                known_defect=True)
    rng = ctx.rng("lemma4")
    for _ in range(500):
        G, H = _random_hypergraph(rng), _random_hypergraph(rng)
        if not hypergraph.lemma4_check(G, H):
            bad.append(f"{G} vs {H}")
    if bad:
        return CheckResult("hypergraph.lemma4_as_stated", False,
                           f"counterexamples: {'; '.join(bad[:3])}", known_defect=True)
    return CheckResult("hypergraph.lemma4_as_stated", True, "no counterexample found",
                       known_defect=True)


# --- assoc ----------------------------------------------------------------

@_check("assoc.equivalence_invariance")
def _assoc_equiv(ctx: CheckContext) -> CheckResult:
    by_key: dict[str, bool] = {}
    for f in _functions_up_to(3):
        key = minor.canonical_key(f)
        qa = assoc.is_quasi_associative(f)
        if by_key.setdefault(key, qa) != qa:
            return CheckResult("assoc.equivalence_invariance", False, format_function(f))
    return CheckResult("assoc.equivalence_invariance", True,
                       f"{len(by_key)} equivalence classes at arity <= 3")


@_check("assoc.vacuity")
def _assoc_vacuity(ctx: CheckContext) -> CheckResult:
    for f in _functions_up_to(3):
        if essential_arity(f) <= 1 and not assoc.is_quasi_associative(f):
            return CheckResult("assoc.vacuity", False, format_function(f))
    return CheckResult("assoc.vacuity", True, "exhaustive at arity <= 3")


@_check("assoc.witness_replay")
def _assoc_replay(ctx: CheckContext) -> CheckResult:
    rng = ctx.rng("assoc")
    found = 0
    sample = [families.make_f(5), families.make_g(5), families.make_H(4),
              families.make_G(2, 3)] + [_random_function(rng, rng.randint(2, 4))
                                        for _ in range(200)]
    for f in sample:
        w = assoc.is_associative(f)
        if w is not None:
            if not w.replay(f):
                return CheckResult("assoc.witness_replay", False, format_function(f))
            found += 1
    return CheckResult("assoc.witness_replay", True, f"{found} witnesses replayed")


@_check("assoc.iterate_preserves")
def _assoc_iterate(ctx: CheckContext) -> CheckResult:
    seeds = [parse_function("x1&x2"), parse_function("x1|x2"), parse_function("x1^x2"),
             parse_function("!(x1^x2)"), parse_function("x1^x2^x3"),
             parse_function("x1&x2&x3"), constant(0, 2), constant(1, 2),
             projection(2, 1), projection(2, 2)]
    for f in seeds:
        if assoc.is_associative(f) is not None:
            return CheckResult("assoc.iterate_preserves", False,
                               f"{format_function(f)} expected associative")
        k = 2
        while k * (f.arity - 1) + 1 <= 9 and f.arity > 1:
            if assoc.is_associative(assoc.iterate(f, k)) is not None:
                return CheckResult("assoc.iterate_preserves", False,
                                   f"iterate({format_function(f)}, {k})")
            k += 1
        if assoc.iterate(f, 1) != f:
            return CheckResult("assoc.iterate_preserves", False, "f^1 != f")
    return CheckResult("assoc.iterate_preserves", True,
                       "10 associative seeds, all representable iterates")


_PAPER_TUPLES = "f@5 g@5 u@5 tu@5 H@5 G@4,4 T@7 s@7"


def paper_nonassoc_instances() -> list[tuple[str, BooleanFunction, int, int, int, int, int]]:
    """The displayed non-associativity instances: family spec, positions
    i < j, the frame point (1-bits listed), and the two displayed values."""
    def pt(arity, ones):
        bits = 0
        for t in ones:
            bits |= 1 << (t - 1)
        return bits

    rows = []
    n = 5
    ones = [t for t in range(1, 2 * n) if t not in list(range(1, n)) + [n + 1]]
    rows.append(("f@5", families.make_f(5), 2, 3, pt(2 * n - 1, ones), 1, 0))
    ones = [1] + list(range(n + 1, 2 * n))
    rows.append(("g@5", families.make_g(5), 1, 3, pt(2 * n - 1, ones), 1, 0))
    arity = n + 1
    ones = [t for t in range(1, 2 * arity) if t != 2]
    rows.append(("u@5", families.make_u(5), 1, 2, pt(2 * arity - 1, ones), 0, 1))
    ones = [t for t in range(1, 2 * arity) if not 2 <= t <= n - 1]
    rows.append(("tu@5", families.make_tu(5), 1, 2, pt(2 * arity - 1, ones), 1, 0))
    ones = list(range(1, n + 1))
    rows.append(("H@5", families.make_H(5), 1, 2, pt(2 * n - 1, ones), 0, 1))
    m = nn = 4
    arity = m + nn - 1
    rows.append(("G@4,4", families.make_G(4, 4), 2, 3, pt(2 * arity - 1, [1, 2]), 0, 1))
    n = 7
    arity = n + 2
    ones = list(range(1, n + 3)) + [2 * n + 2, 2 * n + 3]
    rows.append(("T@7", families.make_T(7), 1, 2, pt(2 * arity - 1, ones), 0, 1))
    ones = list(range(1, n + 3))
    rows.append(("s@7", families.make_s(7), 1, 2, pt(2 * arity - 1, ones), 0, 1))
    return rows


@_check("assoc.paper_instances")
def _assoc_paper(ctx: CheckContext) -> CheckResult:
    for name, fn, i, j, point, want_i, want_j in paper_nonassoc_instances():
        vi = assoc.nest(fn, i).value_at(point)
        vj = assoc.nest(fn, j).value_at(point)
        if (vi, vj) != (want_i, want_j):
            return CheckResult("assoc.paper_instances", False,
                               f"{name}: got ({vi},{vj}), displayed ({want_i},{want_j})")
    return CheckResult("assoc.paper_instances", True,
                       f"all displayed tuples reproduce: {_PAPER_TUPLES}")


# --- monoid ---------------------------------------------------------------

def _random_capped(rng: random.Random, cap: int = 3) -> monoid.CappedClass:
    gens = [_random_function(rng, rng.randint(1, cap))
            for _ in range(rng.randint(1, 2))]
    return monoid.closure(gens, cap)


@_check("monoid.assoc_lemma_subset")
def _monoid_assoc(ctx: CheckContext) -> CheckResult:
    rng = ctx.rng("monoid-assoc")
    ks = [_random_capped(rng) for _ in range(200)]
    for t in range(0, 198, 3):
        rep = monoid.assoc_lemma_check(ks[t], ks[t + 1], ks[t + 2])
        if not rep.subset_holds:
            return CheckResult("monoid.assoc_lemma_subset", False,
                               f"containment broken at triple {t}")
    raw = monoid.CappedClass.unchecked(
        2, [frozenset(), frozenset({parse_function("!x1&!x2").table})])
    rep = monoid.assoc_lemma_check(monoid.closure([parse_function("x1|x2")], 2), raw,
                                   monoid.closure([parse_function("!x1")], 2))
    if not rep.subset_holds or rep.j_closed:
        return CheckResult("monoid.assoc_lemma_subset", False, "unclosed-J probe broken")
    return CheckResult("monoid.assoc_lemma_subset", True,
                       "66 random triples at cap 3 plus an unclosed-J probe")


@_check("monoid.assoc_lemma_equality_at_cap")
def _monoid_assoc_eq(ctx: CheckContext) -> CheckResult:
    """Equality requires the middle class to be closed under *all* variable
    substitutions, which no nonempty finite capped class is: paddings above
    the cap are cut, and a regrouped composite can need an inner arity up to
    cap^2.  Within-cap closure is therefore too weak, and equality fails on
    random capped triples.  Documented defect of the capped stand-in."""
    rng = ctx.rng("monoid-assoc")
    ks = [_random_capped(rng) for _ in range(200)]
    for t in range(0, 198, 3):
        rep = monoid.assoc_lemma_check(ks[t], ks[t + 1], ks[t + 2])
        if rep.j_closed and not rep.equality_holds:
            return CheckResult(
                "monoid.assoc_lemma_equality_at_cap", False,
                f"triple {t}: J closed within the cap yet (IJ)K is strictly below I(JK)",
                known_defect=True)
    return CheckResult("monoid.assoc_lemma_equality_at_cap", True,
                       "no truncation instance hit", known_defect=True)


@_check("monoid.identity_laws")
def _monoid_identity(ctx: CheckContext) -> CheckResult:
    rng = ctx.rng("monoid-id")
    p = monoid.projection_class(3)
    for t in range(60):
        k = _random_capped(rng)
        if monoid.compose_classes(k, p) != k:
            return CheckResult("monoid.identity_laws", False, f"right identity broken at {t}")
        if monoid.compose_classes(p, k) != k:
            return CheckResult("monoid.identity_laws", False, f"left identity broken at {t}")
    if not monoid.is_idempotent_at_cap(p):
        return CheckResult("monoid.identity_laws", False, "projection class not idempotent")
    return CheckResult("monoid.identity_laws", True, "60 random classes at cap 3")


@_check("monoid.monotonicity")
def _monoid_monotone(ctx: CheckContext) -> CheckResult:
    rng = ctx.rng("monoid-mono")
    for t in range(40):
        i1, j1 = _random_capped(rng), _random_capped(rng)
        i2 = monoid.union(i1, _random_capped(rng))
        j2 = monoid.union(j1, _random_capped(rng))
        if not monoid.compose_classes(i1, j1) <= monoid.compose_classes(i2, j2):
            return CheckResult("monoid.monotonicity", False, f"broken at {t}")
    return CheckResult("monoid.monotonicity", True, "40 random nested pairs at cap 3")


@_check("monoid.closure_distributivity")
def _monoid_distrib(ctx: CheckContext) -> CheckResult:
    rng = ctx.rng("monoid-dist")
    p = monoid.projection_class(3)
    for t in range(60):
        gens1 = [_random_function(rng, rng.randint(1, 3)) for _ in range(2)]
        gens2 = [_random_function(rng, rng.randint(1, 3)) for _ in range(2)]
        k1 = monoid.CappedClass.unchecked(3, _slices(gens1))
        k2 = monoid.CappedClass.unchecked(3, _slices(gens2))
        k12 = monoid.CappedClass.unchecked(3, _slices(gens1 + gens2))
        left = monoid.compose_classes(k12, p)
        if left != monoid.union(monoid.compose_classes(k1, p), monoid.compose_classes(k2, p)):
            return CheckResult("monoid.closure_distributivity", False, f"union case {t}")
        # intersection distributes one way for raw sets, exactly for closed ones
        inter = monoid.CappedClass.unchecked(
            3, [a & b for a, b in zip(k1.members, k2.members)])
        li = monoid.compose_classes(inter, p)
        ri = monoid.intersect(monoid.compose_classes(k1, p), monoid.compose_classes(k2, p))
        if not li <= ri:
            return CheckResult("monoid.closure_distributivity", False, f"intersection case {t}")
        c1 = monoid.closure(gens1, 3)
        c2 = monoid.closure(gens2, 3)
        if monoid.compose_classes(monoid.intersect(c1, c2), p) != monoid.intersect(c1, c2):
            return CheckResult("monoid.closure_distributivity", False, f"closed intersection {t}")
    return CheckResult("monoid.closure_distributivity", True,
                       "60 random generator sets at cap 3 (intersection: one-sided on raw sets)")


def _slices(fns):
    sets = [set() for _ in range(3)]
    for f in fns:
        sets[f.arity - 1].add(f.table)
    return [frozenset(s) for s in sets]


@_check("monoid.automorphism_transport")
def _monoid_autos(ctx: CheckContext) -> CheckResult:
    rng = ctx.rng("monoid-auto")
    for t in range(30):
        gens = [_random_function(rng, rng.randint(1, 3)) for _ in range(2)]
        k = monoid.closure(gens, 3)
        for mapper in (complement, dual, underline):
            mapped_gens = [mapper(g) for g in gens]
            direct = monoid.closure(mapped_gens, 3)
            routed = monoid.CappedClass(
                3, tuple(frozenset(mapper(BooleanFunction(a + 1, x)).table for x in s)
                         for a, s in enumerate(k.members)))
            if direct != routed:
                return CheckResult("monoid.automorphism_transport", False,
                                   f"{mapper.__name__} at {t}")
    return CheckResult("monoid.automorphism_transport", True, "30 random closures x 3 maps")


@_check("monoid.semigroup_intervals")
def _monoid_semigroup(ctx: CheckContext) -> CheckResult:
    lattice = {mc.name: mc for mc in families.quasi_monadic_lattice(3)}
    idem = ["Empty", "C0", "C1", "C", "Ic", "I0", "I1", "I", "Istar", "Omega1"]
    for lo in idem:
        for hi in idem:
            a, b = lattice[lo], lattice[hi]
            if not (a.atoms <= b.atoms):
                continue
            between = [mc.capped for mc in lattice.values()
                       if a.atoms <= mc.atoms <= b.atoms]
            for k1 in between:
                for k2 in between:
                    prod = monoid.compose_classes(k1, k2)
                    if not (a.capped <= prod and prod <= b.capped):
                        return CheckResult("monoid.semigroup_intervals", False,
                                           f"[{lo},{hi}] broken")
    return CheckResult("monoid.semigroup_intervals", True,
                       "all quasi-monadic idempotent intervals at cap 3")


# --- classify ---------------------------------------------------------------

@_check("classify.minimal_table")
def _classify_table(ctx: CheckContext) -> CheckResult:
    problems = classify.validate_minimal_intervals(4)
    if problems:
        return CheckResult("classify.minimal_table", False, problems[0])
    n = len(classify.minimal_interval_table(4))
    return CheckResult("classify.minimal_table", True,
                       f"{n} rows: witnesses in the difference and not quasi-associative")


@_check("classify.duality")
def _classify_duality(ctx: CheckContext) -> CheckResult:
    ids = classes.catalog(4)
    for c1 in ids:
        for c2 in ids:
            r1 = classify.classify_interval(c1, c2)
            r2 = classify.classify_interval(classes.dual_class(c1), classes.dual_class(c2))
            if (r1.kind, r1.count) != (r2.kind, r2.count):
                return CheckResult("classify.duality", False, f"[{c1},{c2}]")
    return CheckResult("classify.duality", True, f"{len(ids)}^2 catalog pairs (parameters <= 4)")


@_check("classify.verdict_monotonicity")
def _classify_monotone(ctx: CheckContext) -> CheckResult:
    ids = classes.catalog(4)
    verdicts = {(str(a), str(b)): classify.classify_interval(a, b).kind
                for a in ids for b in ids}
    for a in ids:
        for b in ids:
            if verdicts[(str(a), str(b))] != "Uncountable":
                continue
            for c in ids:
                if classes.is_subclass(c, a) and verdicts[(str(c), str(b))] != "Uncountable":
                    return CheckResult("classify.verdict_monotonicity", False,
                                       f"shrinking {a} to {c} under {b}")
                if classes.is_subclass(b, c) and verdicts[(str(a), str(c))] != "Uncountable":
                    return CheckResult("classify.verdict_monotonicity", False,
                                       f"enlarging {b} to {c} over {a}")
    return CheckResult("classify.verdict_monotonicity", True, "catalog sweep, parameters <= 4")


@_check("classify.thm9_10_agreement")
def _classify_agreement(ctx: CheckContext) -> CheckResult:
    ids = classes.catalog(4)
    table = classify.minimal_interval_table(6)
    for a in ids:
        for b in ids:
            v = classify.classify_interval(a, b)
            inside = any(classes.is_subclass(a, e.lower) and classes.is_subclass(e.upper, b)
                         for e in table)
            if (v.kind == "Uncountable") != inside:
                return CheckResult("classify.thm9_10_agreement", False,
                                   f"[{a},{b}] verdict {v.kind}, minimal interval inside: {inside}")
    return CheckResult("classify.thm9_10_agreement", True,
                       "uncountable iff a minimal interval embeds, parameters <= 4")


@_check("classify.thm5_counts")
def _classify_counts(ctx: CheckContext) -> CheckResult:
    ids = classes.catalog(3)
    checked = 0
    for a in ids:
        for b in ids:
            v = classify.classify_interval(a, b)
            if v.kind != "Finite":
                continue
            n = classify.enumerate_between(a, b, cap=3)
            if v.count is not None and n != v.count:
                return CheckResult("classify.thm5_counts", False,
                                   f"[{a},{b}]: symbolic {v.count}, materialized {n}")
            checked += 1
    return CheckResult("classify.thm5_counts", True,
                       f"{checked} finite intervals materialized at cap 3")


@_check("classify.crosscheck_thm10")
def _classify_crosscheck(ctx: CheckContext) -> CheckResult:
    ids = classes.catalog(3)
    pairs = 0
    for a in ids:
        for b in ids:
            if not classes.is_subclass(a, b):
                continue
            rep = classify.cross_check_thm10(a, b, 4)
            if not rep.consistent:
                return CheckResult("classify.crosscheck_thm10", False,
                                   f"[{a},{b}]: {rep.non_quasi_associative[:2]}")
            pairs += 1
    return CheckResult("classify.crosscheck_thm10", True,
                       f"{pairs} nested pairs, exhaustive difference scan at arity <= 4")


def run_selfcheck(seed: int = 0, budget: Optional[int] = None,
                  names: Optional[list[str]] = None) -> list[CheckResult]:
    ctx = CheckContext(seed=seed, budget=budget)
    results = []
    for name, fn in _REGISTRY:
        if names and name not in names:
            continue
        results.append(fn(ctx))
    return results


def check_names() -> list[str]:
    return [name for name, _ in _REGISTRY]
