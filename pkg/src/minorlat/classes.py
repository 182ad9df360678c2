"""Membership predicates for the named classes of the Post lattice plus the
four constant classes, separating ranks, and symbolic inclusion queries.

Each named class is stored twice: a *defining* signature (the primitives
from its definition, e.g. SM = self-dual and monotone) drives membership,
and a *completed* signature (all primitives containing the class, e.g. SM
also preserves both constants and is 1- and 0-separating of rank 2)
drives inclusion queries.  Inclusion between completed signatures is
reverse containment; the ten quasi-monadic classes are kept as explicit
atom sets.  The completed table is data, so ``validate_catalog``
cross-checks it against the defining predicates on every function of
small arity: a completed signature must carve out exactly the same
members as its definition, and every claimed inclusion must hold there.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Optional

import numpy as np

from . import _tables as tb
from .core import BooleanFunction, dual, essential_indices, is_linear

INF = 10 ** 9  # separating-rank "infinity"

RANK_ARITY_LIMIT = 16


# --- separating rank ---------------------------------------------------------

@dataclass(frozen=True)
class Rank:
    kind: str  # "below2" | "finite" | "infinite"
    m: Optional[int] = None

    def at_least(self, k: int) -> bool:
        if self.kind == "infinite":
            return True
        if self.kind == "below2":
            return False
        return self.m >= k

    @property
    def sup(self) -> int:
        if self.kind == "infinite":
            return INF
        if self.kind == "below2":
            return 1
        return self.m

    def __str__(self):
        return {"below2": "below-2", "infinite": "infinite"}.get(self.kind) or f"finite({self.m})"


def _coordinate_masks(f: BooleanFunction, a: int) -> list[int]:
    """For each point of f^{-1}(a), the set of coordinates equal to a."""
    full = (1 << f.arity) - 1
    out = []
    for p in range(1 << f.arity):
        if f.value_at(p) == a:
            out.append(p if a == 1 else (~p) & full)
    return out


def _smallest_zero_and(masks: list[int], full: int) -> Optional[int]:
    """Size of the smallest subset whose AND is 0, or None if the AND of all
    masks is nonzero (every subset shares a coordinate).  Branches on a mask
    clearing the lowest still-shared coordinate, with iterative deepening."""
    masks = sorted(set(masks))
    total = full
    for m in masks:
        total &= m
    if total:
        return None

    def dfs(cur: int, depth: int, limit: int) -> bool:
        if cur == 0:
            return True
        if depth == limit:
            return False
        pivot = cur & -cur
        for m in masks:
            if m & pivot == 0 and cur & m != cur:
                if dfs(cur & m, depth + 1, limit):
                    return True
        return False

    limit = 1
    while True:
        if dfs(full, 0, limit):
            return limit
        limit += 1


@lru_cache(maxsize=1 << 16)
def _rank_cached(arity: int, table: int, a: int) -> Rank:
    f = BooleanFunction(arity, table)
    masks = _coordinate_masks(f, a)
    if not masks:
        return Rank("infinite")
    smallest = _smallest_zero_and(masks, (1 << arity) - 1)
    if smallest is None:
        return Rank("infinite")
    if smallest <= 2:
        return Rank("below2")
    return Rank("finite", smallest - 1)


def separating_rank(f: BooleanFunction, a: int) -> Rank:
    """BelowTwo, Finite(m), or Infinite per the a-separating rank chain."""
    if a not in (0, 1):
        raise ValueError("a must be a bit")
    if f.arity > RANK_ARITY_LIMIT:
        raise ValueError(f"separating_rank caps arity at {RANK_ARITY_LIMIT}")
    return _rank_cached(f.arity, f.table, a)


# --- basic predicates --------------------------------------------------------

def preserves_zero(f: BooleanFunction) -> bool:
    return f.value_at(0) == 0


def preserves_one(f: BooleanFunction) -> bool:
    return f.value_at((1 << f.arity) - 1) == 1


def is_monotone(f: BooleanFunction) -> bool:
    return tb.is_monotone_table(f.table, f.arity)


def is_self_dual(f: BooleanFunction) -> bool:
    return dual(f).table == f.table


def monadic_atom(f: BooleanFunction) -> Optional[str]:
    """'x' | 'nx' | 'zero' | 'one' for quasi-monadic functions, else None."""
    ess = essential_indices(f)
    if len(ess) > 1:
        return None
    if not ess:
        return "zero" if f.table == 0 else "one"
    return "nx" if f.value_at(0) else "x"


def is_conjunctive(f: BooleanFunction) -> bool:
    """Constant, a variable, or a conjunction of (>= 2) variables."""
    atom = monadic_atom(f)
    if atom is not None:
        return atom != "nx"
    mask = tb.full_mask(f.arity)
    for i in essential_indices(f):
        mask &= tb.projection_mask(f.arity, i)
    return f.table == mask


def is_disjunctive(f: BooleanFunction) -> bool:
    atom = monadic_atom(f)
    if atom is not None:
        return atom != "nx"
    mask = 0
    for i in essential_indices(f):
        mask |= tb.projection_mask(f.arity, i)
    return f.table == mask


# --- the catalog -------------------------------------------------------------

@dataclass(frozen=True)
class Sig:
    """A conjunction of primitive class memberships; u/w give the largest k
    with membership in U_k (resp. W_k), 1 meaning not even rank 2."""
    t0: bool = False
    t1: bool = False
    mono: bool = False
    sd: bool = False
    lin: bool = False
    conj: bool = False
    disj: bool = False
    u: int = 1
    w: int = 1

    def implies(self, other: "Sig") -> bool:
        """Whether everything satisfying self satisfies other, comparing
        requirement lists componentwise."""
        return (
            (not other.t0 or self.t0) and (not other.t1 or self.t1)
            and (not other.mono or self.mono) and (not other.sd or self.sd)
            and (not other.lin or self.lin) and (not other.conj or self.conj)
            and (not other.disj or self.disj)
            and self.u >= other.u and self.w >= other.w
        )


_QM_ATOMS: dict[str, frozenset[str]] = {
    "Empty": frozenset(),
    "C0": frozenset({"zero"}),
    "C1": frozenset({"one"}),
    "C": frozenset({"zero", "one"}),
    "Ic": frozenset({"x"}),
    "I0": frozenset({"x", "zero"}),
    "I1": frozenset({"x", "one"}),
    "I": frozenset({"x", "zero", "one"}),
    "Istar": frozenset({"x", "nx"}),
    "Omega1": frozenset({"x", "nx", "zero", "one"}),
}

# Complete primitive memberships of the four quasi-monadic atoms (as
# equivalence classes under dummy-variable padding).
_ATOM_SIG: dict[str, Sig] = {
    "x": Sig(t0=True, t1=True, mono=True, sd=True, lin=True, conj=True, disj=True, u=INF, w=INF),
    "nx": Sig(sd=True, lin=True),
    "zero": Sig(t0=True, mono=True, lin=True, conj=True, disj=True, u=INF),
    "one": Sig(t1=True, mono=True, lin=True, conj=True, disj=True, w=INF),
}

# Defining signatures: the intersections the classes are introduced as.
_DEF_PLAIN: dict[str, Sig] = {
    "Omega": Sig(),
    "T0": Sig(t0=True),
    "T1": Sig(t1=True),
    "Tc": Sig(t0=True, t1=True),
    "M": Sig(mono=True),
    "M0": Sig(mono=True, t0=True),
    "M1": Sig(mono=True, t1=True),
    "Mc": Sig(mono=True, t0=True, t1=True),
    "S": Sig(sd=True),
    "Sc": Sig(sd=True, t0=True, t1=True),
    "SM": Sig(sd=True, mono=True),
    "L": Sig(lin=True),
    "L0": Sig(lin=True, t0=True),
    "L1": Sig(lin=True, t1=True),
    "Lc": Sig(lin=True, t0=True, t1=True),
    "LS": Sig(lin=True, sd=True),
    "Lambda": Sig(conj=True),
    "Lambda0": Sig(conj=True, t0=True),
    "Lambda1": Sig(conj=True, t1=True),
    "LambdaC": Sig(conj=True, t0=True, t1=True),
    "V": Sig(disj=True),
    "V0": Sig(disj=True, t0=True),
    "V1": Sig(disj=True, t1=True),
    "Vc": Sig(disj=True, t0=True, t1=True),
    "UInf": Sig(u=INF),
    "WInf": Sig(w=INF),
    "TcUInf": Sig(t0=True, t1=True, u=INF),
    "TcWInf": Sig(t0=True, t1=True, w=INF),
    "MUInf": Sig(mono=True, u=INF),
    "MWInf": Sig(mono=True, w=INF),
    "McUInf": Sig(mono=True, t0=True, t1=True, u=INF),
    "McWInf": Sig(mono=True, t0=True, t1=True, w=INF),
}

_DEF_PARAM: dict[str, Callable[[int], Sig]] = {
    "U": lambda m: Sig(u=m),
    "W": lambda m: Sig(w=m),
    "TcU": lambda m: Sig(t0=True, t1=True, u=m),
    "TcW": lambda m: Sig(t0=True, t1=True, w=m),
    "MU": lambda m: Sig(mono=True, u=m),
    "MW": lambda m: Sig(mono=True, w=m),
    "McU": lambda m: Sig(mono=True, t0=True, t1=True, u=m),
    "McW": lambda m: Sig(mono=True, t0=True, t1=True, w=m),
}

# Completed signatures: every primitive containing the class.  Derived facts
# beyond the definitions: U_k <= T0 and W_k <= T1; SM <= Tc and SM has rank 2
# both ways; Lc consists of odd sums so is self-dual; conjunctions are
# 1-separating (Lambda0/LambdaC gain u = inf) and disjunctions 0-separating
# (V1/Vc gain w = inf); conjunction/disjunction shapes are monotone.
_FULL_PLAIN: dict[str, Sig] = {
    **_DEF_PLAIN,
    "SM": Sig(sd=True, mono=True, t0=True, t1=True, u=2, w=2),
    "Lc": Sig(lin=True, sd=True, t0=True, t1=True),
    "Lambda": Sig(conj=True, mono=True),
    "Lambda0": Sig(conj=True, mono=True, t0=True, u=INF),
    "Lambda1": Sig(conj=True, mono=True, t1=True),
    "LambdaC": Sig(conj=True, mono=True, t0=True, t1=True, u=INF),
    "V": Sig(disj=True, mono=True),
    "V0": Sig(disj=True, mono=True, t0=True),
    "V1": Sig(disj=True, mono=True, t1=True, w=INF),
    "Vc": Sig(disj=True, mono=True, t0=True, t1=True, w=INF),
    "UInf": Sig(t0=True, u=INF),
    "WInf": Sig(t1=True, w=INF),
    "MUInf": Sig(mono=True, t0=True, u=INF),
    "MWInf": Sig(mono=True, t1=True, w=INF),
}

_FULL_PARAM: dict[str, Callable[[int], Sig]] = {
    **_DEF_PARAM,
    "U": lambda m: Sig(t0=True, u=m),
    "W": lambda m: Sig(t1=True, w=m),
    "MU": lambda m: Sig(mono=True, t0=True, u=m),
    "MW": lambda m: Sig(mono=True, t1=True, w=m),
}

_PARAM_RE = re.compile(r"^(TcU|TcW|McU|McW|MU|MW|U|W)(\d+)$")


@dataclass(frozen=True)
class ClassId:
    family: str
    m: Optional[int] = None

    def __post_init__(self):
        if self.family in _QM_ATOMS or self.family in _DEF_PLAIN:
            if self.m is not None:
                raise ValueError(f"{self.family} takes no parameter")
        elif self.family in _DEF_PARAM:
            if self.m is None or self.m < 2:
                raise ValueError(f"{self.family} needs a parameter m >= 2")
        else:
            raise ValueError(f"unknown class {self.family!r}")

    def __str__(self):
        return self.family if self.m is None else f"{self.family}{self.m}"

    @property
    def is_quasi_monadic_class(self) -> bool:
        return self.family in _QM_ATOMS


def parse_class_id(text: str) -> ClassId:
    text = text.strip()
    if text in _QM_ATOMS or text in _DEF_PLAIN:
        return ClassId(text)
    m = _PARAM_RE.match(text)
    if m:
        return ClassId(m.group(1), int(m.group(2)))
    raise ValueError(f"unknown class {text!r}")


def defining_sig(c: ClassId) -> Optional[Sig]:
    if c.family in _DEF_PLAIN:
        return _DEF_PLAIN[c.family]
    if c.family in _DEF_PARAM:
        return _DEF_PARAM[c.family](c.m)
    return None  # quasi-monadic


def completed_sig(c: ClassId, table: Optional[dict[str, Sig]] = None) -> Optional[Sig]:
    plain = table if table is not None else _FULL_PLAIN
    if c.family in plain:
        return plain[c.family]
    if c.family in _FULL_PARAM:
        return _FULL_PARAM[c.family](c.m)
    return None


def _satisfies(f: BooleanFunction, sig: Sig) -> bool:
    if sig.t0 and not preserves_zero(f):
        return False
    if sig.t1 and not preserves_one(f):
        return False
    if sig.mono and not is_monotone(f):
        return False
    if sig.sd and not is_self_dual(f):
        return False
    if sig.lin and not is_linear(f):
        return False
    if sig.conj and not is_conjunctive(f):
        return False
    if sig.disj and not is_disjunctive(f):
        return False
    if sig.u > 1 and not separating_rank(f, 1).at_least(min(sig.u, f.arity + 1)):
        return False
    if sig.w > 1 and not separating_rank(f, 0).at_least(min(sig.w, f.arity + 1)):
        return False
    return True


def member(f: BooleanFunction, c: ClassId) -> bool:
    sig = defining_sig(c)
    if sig is None:
        atom = monadic_atom(f)
        return atom is not None and atom in _QM_ATOMS[c.family]
    if (sig.u > 1 or sig.w > 1) and f.arity > RANK_ARITY_LIMIT:
        raise ValueError(f"rank-based membership caps arity at {RANK_ARITY_LIMIT}")
    return _satisfies(f, sig)


def _atom_satisfies(atom: str, sig: Sig) -> bool:
    return _ATOM_SIG[atom].implies(sig)


def is_subclass(c1: ClassId, c2: ClassId,
                table: Optional[dict[str, Sig]] = None) -> bool:
    s1, s2 = completed_sig(c1, table), completed_sig(c2, table)
    if s1 is None and s2 is None:
        return _QM_ATOMS[c1.family] <= _QM_ATOMS[c2.family]
    if s1 is None:
        return all(_atom_satisfies(a, s2) for a in _QM_ATOMS[c1.family])
    if s2 is None:
        return False  # every signature class contains all projections
    return s1.implies(s2)


def is_idempotent_class(c: ClassId) -> bool:
    """Every catalog tag is a clone or one of the four constant classes,
    so this holds across the catalog."""
    return c.family in _QM_ATOMS or c.family in _DEF_PLAIN or c.family in _DEF_PARAM


def nonmonadic_slice_sig(c: ClassId) -> Optional[Sig]:
    """Signature satisfied by exactly the members of c with essential
    arity >= 2, or None when c has no such members.  Implications that hold
    only for non-monadic functions: monotone implies both endpoints;
    conjunctions of >= 2 variables are monotone, constant-preserving,
    1-separating, and neither self-dual, linear, disjunctive, nor rank-2
    0-separating (dually for disjunctions); sums of >= 2 variables exclude
    monotone/shape/rank primitives; self-dual makes the endpoints equivalent;
    self-dual monotone functions have rank exactly >= 2 both ways."""
    sig = completed_sig(c)
    if sig is None:
        return None
    if sig.conj and (sig.disj or sig.sd or sig.lin or sig.w >= 2):
        return None
    if sig.disj and (sig.conj or sig.sd or sig.lin or sig.u >= 2):
        return None
    if sig.lin and (sig.mono or sig.conj or sig.disj or sig.u >= 2 or sig.w >= 2):
        return None
    t0, t1, mono, u, w = sig.t0, sig.t1, sig.mono, sig.u, sig.w
    if sig.conj:
        mono, t0, t1, u = True, True, True, INF
    if sig.disj:
        mono, t0, t1, w = True, True, True, INF
    if mono:
        t0 = t1 = True
    if sig.sd and (t0 or t1):
        t0 = t1 = True
    if sig.sd and sig.mono:
        u, w = max(u, 2), max(w, 2)
    return Sig(t0, t1, mono, sig.sd, sig.lin, sig.conj, sig.disj, u, w)


def difference_is_quasi_monadic(c1: ClassId, c2: ClassId) -> bool:
    """Whether every member of c2 outside c1 has essential arity <= 1.
    Assumes c1 <= c2."""
    slice2 = nonmonadic_slice_sig(c2)
    if slice2 is None:
        return True
    s1 = completed_sig(c1)
    if s1 is None:
        return False  # signature classes always have non-monadic members
    return slice2.implies(s1)


DUAL_TAG = {
    "Empty": "Empty", "C0": "C1", "C1": "C0", "C": "C",
    "Ic": "Ic", "I0": "I1", "I1": "I0", "I": "I", "Istar": "Istar",
    "Omega1": "Omega1", "Omega": "Omega",
    "T0": "T1", "T1": "T0", "Tc": "Tc",
    "M": "M", "M0": "M1", "M1": "M0", "Mc": "Mc",
    "S": "S", "Sc": "Sc", "SM": "SM",
    "L": "L", "L0": "L1", "L1": "L0", "Lc": "Lc", "LS": "LS",
    "Lambda": "V", "Lambda0": "V1", "Lambda1": "V0", "LambdaC": "Vc",
    "V": "Lambda", "V0": "Lambda1", "V1": "Lambda0", "Vc": "LambdaC",
    "U": "W", "W": "U", "TcU": "TcW", "TcW": "TcU",
    "MU": "MW", "MW": "MU", "McU": "McW", "McW": "McU",
    "UInf": "WInf", "WInf": "UInf", "TcUInf": "TcWInf", "TcWInf": "TcUInf",
    "MUInf": "MWInf", "MWInf": "MUInf", "McUInf": "McWInf", "McWInf": "McUInf",
}


def dual_class(c: ClassId) -> ClassId:
    return ClassId(DUAL_TAG[c.family], c.m)


def catalog(max_param: int = 4) -> list[ClassId]:
    """Every catalog tag, with parameterized families instantiated for
    2 <= m <= max_param."""
    out = [ClassId(name) for name in _QM_ATOMS]
    out += [ClassId(name) for name in _DEF_PLAIN]
    for fam in _DEF_PARAM:
        out += [ClassId(fam, m) for m in range(2, max_param + 1)]
    return out


# --- bulk membership over all functions of one arity -------------------------

@lru_cache(maxsize=8)
def property_matrix(arity: int) -> dict[str, np.ndarray]:
    """Per-table property vectors for every function of the given arity:
    t0, t1, mono, sd, lin, atom (-1/0..3 over x, nx, zero, one), conj, disj,
    u_sup, w_sup, ess_count.  Arity <= 4."""
    if arity > 4:
        raise ValueError("property_matrix caps arity at 4")
    npts = 1 << arity
    count = 1 << npts
    tables = np.arange(count, dtype=np.uint32)
    bits = ((tables[:, None] >> np.arange(npts, dtype=np.uint32)) & 1).astype(np.uint8)

    t0 = bits[:, 0] == 0
    t1 = bits[:, -1] == 1

    mono = np.ones(count, dtype=bool)
    ess = np.zeros((count, arity), dtype=bool)
    for i in range(arity):
        stride = 1 << i
        lo = [p for p in range(npts) if not p >> i & 1]
        hi = [p + stride for p in lo]
        mono &= ~np.any(bits[:, lo] > bits[:, hi], axis=1)
        ess[:, i] = np.any(bits[:, lo] != bits[:, hi], axis=1)
    ess_count = ess.sum(axis=1)

    pow2 = (np.uint32(1) << np.arange(npts, dtype=np.uint32))
    dual_tables = (1 - bits[:, ::-1]).astype(np.uint32) @ pow2
    sd = dual_tables == tables

    anf = bits.copy()
    step = 1
    while step < npts:
        view = anf.reshape(count, -1, 2 * step)
        view[:, :, step:] ^= view[:, :, :step]
        step *= 2
    high = [s for s in range(npts) if bin(s).count("1") >= 2]
    lin = ~np.any(anf[:, high], axis=1) if high else np.ones(count, dtype=bool)

    atom = np.full(count, -1, dtype=np.int8)
    atom[(ess_count == 0) & (tables == 0)] = 2          # zero
    atom[(ess_count == 0) & (tables == count - 1)] = 3  # one
    atom[(ess_count == 1) & (bits[:, 0] == 0)] = 0      # x
    atom[(ess_count == 1) & (bits[:, 0] == 1)] = 1      # nx

    ess_code = np.zeros(count, dtype=np.int32)
    for i in range(arity):
        ess_code |= ess[:, i].astype(np.int32) << i
    and_of = np.zeros(1 << arity, dtype=np.uint32)
    or_of = np.zeros(1 << arity, dtype=np.uint32)
    for code in range(1 << arity):
        a = tb.full_mask(arity)
        o = 0
        for i in range(arity):
            if code >> i & 1:
                a &= tb.projection_mask(arity, i + 1)
                o |= tb.projection_mask(arity, i + 1)
        and_of[code], or_of[code] = a, o
    monadic_ok = (atom >= 0) & (atom != 1)
    conj = monadic_ok | ((ess_count >= 2) & (tables == and_of[ess_code]))
    disj = monadic_ok | ((ess_count >= 2) & (tables == or_of[ess_code]))

    u_sup = np.empty(count, dtype=np.int64)
    w_sup = np.empty(count, dtype=np.int64)
    for t in range(count):
        f = BooleanFunction(arity, int(t))
        u_sup[t] = separating_rank(f, 1).sup
        w_sup[t] = separating_rank(f, 0).sup

    return {
        "t0": t0, "t1": t1, "mono": mono, "sd": sd, "lin": lin,
        "atom": atom, "conj": conj, "disj": disj,
        "u_sup": u_sup, "w_sup": w_sup, "ess_count": ess_count,
    }


_ATOM_CODE = {"x": 0, "nx": 1, "zero": 2, "one": 3}


def _sig_mask(sig: Sig, arity: int) -> np.ndarray:
    props = property_matrix(arity)
    ok = np.ones(1 << (1 << arity), dtype=bool)
    for name, flag in (("t0", sig.t0), ("t1", sig.t1), ("mono", sig.mono),
                       ("sd", sig.sd), ("lin", sig.lin), ("conj", sig.conj),
                       ("disj", sig.disj)):
        if flag:
            ok &= props[name]
    if sig.u > 1:
        ok &= props["u_sup"] >= min(sig.u, arity + 1)
    if sig.w > 1:
        ok &= props["w_sup"] >= min(sig.w, arity + 1)
    return ok


def member_mask(c: ClassId, arity: int) -> np.ndarray:
    """Boolean vector over all tables of the given arity: membership in c."""
    sig = defining_sig(c)
    if sig is None:
        props = property_matrix(arity)
        codes = [_ATOM_CODE[a] for a in _QM_ATOMS[c.family]]
        return np.isin(props["atom"], codes) if codes else np.zeros(props["atom"].shape, bool)
    return _sig_mask(sig, arity)


def difference_sample(c1: ClassId, c2: ClassId, arity_cap: int) -> list[BooleanFunction]:
    """All functions of arity <= arity_cap in c2 but not in c1, one
    representative per equivalence class."""
    from .minor import canonical_key

    if arity_cap > 4:
        raise ValueError("difference_sample caps arity at 4")
    seen: set[str] = set()
    out: list[BooleanFunction] = []
    for arity in range(1, arity_cap + 1):
        in2 = member_mask(c2, arity)
        in1 = member_mask(c1, arity)
        for t in np.flatnonzero(in2 & ~in1):
            f = BooleanFunction(arity, int(t))
            key = canonical_key(f)
            if key not in seen:
                seen.add(key)
                out.append(f)
    return out


def validate_catalog(max_arity: int = 3, max_param: int = 4,
                     sig_override: Optional[dict[str, Sig]] = None) -> list[str]:
    """Cross-checks the completed-signature table against the defining
    predicates on all functions of arity <= max_arity.  Two checks: every
    completed signature must carve out exactly the defining members, and
    every claimed inclusion must hold memberwise.  Returns violations;
    ``sig_override`` lets tests corrupt the completed table and watch the
    validation fail."""
    full_table = {**_FULL_PLAIN, **(sig_override or {})}
    violations: list[str] = []
    ids = catalog(max_param)
    for arity in range(1, max_arity + 1):
        def_masks = {str(c): member_mask(c, arity) for c in ids}
        for c in ids:
            full = completed_sig(c, full_table)
            if full is None:
                continue
            if not np.array_equal(_sig_mask(full, arity), def_masks[str(c)]):
                violations.append(
                    f"completed signature of {c} disagrees with its definition at arity {arity}")
        for c1 in ids:
            for c2 in ids:
                if str(c1) == str(c2) or not is_subclass(c1, c2, full_table):
                    continue
                bad = def_masks[str(c1)] & ~def_masks[str(c2)]
                if np.any(bad):
                    t = int(np.flatnonzero(bad)[0])
                    violations.append(
                        f"{c1} <= {c2} claimed but tt:{arity}:0x{t:x} separates them")
    return violations
