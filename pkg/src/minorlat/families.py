"""Generators for the antichain families (f_n, g_n, u_n, t^u_n, H_n, G^n_m,
mu_n, T_n, s_n) and the sixteen quasi-monadic classes.

Family specs are written ``f@5``, ``G@3,5``, ``T@7`` and are accepted
anywhere the CLI accepts a function.  The guarded families u/tu place the
guard in position 1, shifting the remaining arguments up by one.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np

from . import _tables as tb
from .core import BooleanFunction, complement, dual

FAMILY_NAMES = ("f", "g", "u", "tu", "H", "G", "mu", "T", "s")


@dataclass(frozen=True)
class FamilySpec:
    family: str
    n: int
    m: Optional[int] = None

    def __str__(self):
        if self.m is None:
            return f"{self.family}@{self.n}"
        return f"{self.family}@{self.n},{self.m}"

    def make(self) -> BooleanFunction:
        return make(self)


def _range_check(name: str, n: int, lo_paper: int, lo_hard: int, strict: bool) -> None:
    if n < lo_hard:
        raise ValueError(f"{name} needs a parameter >= {lo_hard}, got {n}")
    if n < lo_paper and strict:
        raise ValueError(
            f"{name}@{n} is below the documented range (>= {lo_paper}); "
            f"pass strict=False to build it anyway")
    if n < lo_paper:
        warnings.warn(f"{name}@{n} is outside the documented parameter range", stacklevel=3)


def _from_weights(arity: int, one_weights: np.ndarray) -> BooleanFunction:
    return BooleanFunction(arity, tb.from_array(one_weights.astype(np.uint8)))


def make_f(n: int, strict: bool = True) -> BooleanFunction:
    """1 exactly on points of weight 1 or n-1."""
    _range_check("f", n, 4, 2, strict)
    w = tb.weights(n)
    return _from_weights(n, (w == 1) | (w == n - 1))


def make_g(n: int, strict: bool = True) -> BooleanFunction:
    """0 exactly on points with one zero or all zeros."""
    _range_check("g", n, 4, 2, strict)
    z = n - tb.weights(n)
    return _from_weights(n, ~((z == 1) | (z == n)))


def _guarded(inner: BooleanFunction) -> BooleanFunction:
    # guard & inner(rest): the guard is x1, inner reads x2..x(n+1)
    n = inner.arity
    guard = tb.projection_mask(n + 1, 1)
    shifted = tb.substitute_table(inner.table, n, list(range(2, n + 2)), n + 1)
    return BooleanFunction(n + 1, guard & shifted)


def make_u(n: int, strict: bool = True) -> BooleanFunction:
    _range_check("u", n, 4, 2, strict)
    return _guarded(make_f(n, strict=strict))


def make_tu(n: int, strict: bool = True) -> BooleanFunction:
    _range_check("tu", n, 4, 2, strict)
    return _guarded(make_g(n, strict=strict))


def make_H(n: int) -> BooleanFunction:
    """Disjunction of all pairwise conjunctions: 1 iff weight >= 2."""
    if n < 2:
        raise ValueError(f"H needs n >= 2, got {n}")
    return _from_weights(n, tb.weights(n) >= 2)


def make_G(n: int, m: int) -> BooleanFunction:
    """H_n applied to x1..x_{n-1} and H_m of the remaining m variables."""
    if not 2 <= n <= m:
        raise ValueError(f"G needs m >= n >= 2, got n={n}, m={m}")
    arity = m + n - 1
    w = tb.bit_columns(arity)[:, : n - 1].sum(axis=1).astype(np.int32)
    inner = tb.bit_columns(arity)[:, n - 1:].sum(axis=1) >= 2
    return _from_weights(arity, (w + inner) >= 2)


def make_mu(n: int) -> BooleanFunction:
    """Threshold at (n+1)/2; n odd."""
    if n < 3 or n % 2 == 0:
        raise ValueError(f"mu needs an odd n >= 3, got {n}")
    return _from_weights(n, tb.weights(n) >= (n + 1) // 2)


def make_T(n: int, strict: bool = True) -> BooleanFunction:
    """(n+2)-ary; the last two arguments select H_n, mu_n, or H_n dual."""
    if n % 2 == 0:
        raise ValueError(f"T needs an odd n, got {n}")
    _range_check("T", n, 7, 3, strict)
    arity = n + 2
    w = tb.bit_columns(arity)[:, :n].sum(axis=1).astype(np.int32)
    sel = tb.bit_columns(arity)[:, n] + tb.bit_columns(arity)[:, n + 1]
    h = w >= 2
    mu = w >= (n + 1) // 2
    hd = w >= n - 1
    vals = np.where(sel == 2, h, np.where(sel == 1, mu, hd))
    return _from_weights(arity, vals)


def make_s(n: int, strict: bool = True) -> BooleanFunction:
    """T_n with both selector arguments complemented."""
    t = make_T(n, strict=strict)
    arity = n + 2
    cols = tb.bit_columns(arity).astype(np.int64).copy()
    cols[:, n] ^= 1
    cols[:, n + 1] ^= 1
    idx = cols @ (np.int64(1) << np.arange(arity, dtype=np.int64))
    return BooleanFunction(arity, tb.from_array(tb.to_array(t.table, arity)[idx]))


_MAKERS = {
    "f": make_f, "g": make_g, "u": make_u, "tu": make_tu,
    "H": make_H, "mu": make_mu, "T": make_T, "s": make_s,
}


def make(spec: FamilySpec, strict: bool = True) -> BooleanFunction:
    if spec.family == "G":
        if spec.m is None:
            raise ValueError("G takes two parameters, e.g. G@3,5")
        return make_G(spec.n, spec.m)
    if spec.m is not None:
        raise ValueError(f"{spec.family} takes a single parameter")
    maker = _MAKERS[spec.family]
    if spec.family in ("H", "mu"):
        return maker(spec.n)
    return maker(spec.n, strict=strict)


def parse_family_spec(text: str) -> FamilySpec:
    name, _, params = text.partition("@")
    if name not in FAMILY_NAMES or not params:
        raise ValueError(f"bad family spec {text!r}")
    parts = params.split(",")
    return FamilySpec(name, int(parts[0]), int(parts[1]) if len(parts) > 1 else None)


def from_spec_match(name: str, n: str, m: Optional[str]) -> BooleanFunction:
    return make(FamilySpec(name, int(n), int(m) if m is not None else None))


# --- the sixteen quasi-monadic classes --------------------------------------

ATOMS = ("x", "nx", "zero", "one")

_ATOM_LABEL = {"x": "x1", "nx": "~x1", "zero": "0", "one": "1"}


def _figure_name(atoms: frozenset[str]) -> str:
    named = {
        frozenset(): "Empty",
        frozenset({"zero"}): "C0",
        frozenset({"one"}): "C1",
        frozenset({"zero", "one"}): "C",
        frozenset({"x"}): "Ic",
        frozenset({"x", "zero"}): "I0",
        frozenset({"x", "one"}): "I1",
        frozenset({"x", "zero", "one"}): "I",
        frozenset({"x", "nx"}): "Istar",
        frozenset({"x", "nx", "zero", "one"}): "Omega1",
    }
    if atoms in named:
        return named[atoms]
    inner = ",".join(_ATOM_LABEL[a] for a in ("zero", "one", "x", "nx") if a in atoms)
    return "{%s}Ic" % inner


class MonadicClass(NamedTuple):
    name: str
    atoms: frozenset[str]
    capped: "object"  # CappedClass; typed loosely to avoid a hard import cycle


def atom_functions(atoms: frozenset[str], cap: int):
    """All paddings of the chosen quasi-monadic atoms at arities 1..cap."""
    out = []
    for arity in range(1, cap + 1):
        full = tb.full_mask(arity)
        for a in atoms:
            if a == "zero":
                out.append(BooleanFunction(arity, 0))
            elif a == "one":
                out.append(BooleanFunction(arity, full))
            else:
                for i in range(1, arity + 1):
                    t = tb.projection_mask(arity, i)
                    out.append(BooleanFunction(arity, t if a == "x" else t ^ full))
    return out


def quasi_monadic_lattice(cap: int = 3) -> list[MonadicClass]:
    """The 16 equational classes of quasi-monadic functions, materialized
    at the given arity cap, with their lattice-figure names."""
    from .monoid import CappedClass

    out = []
    for mask in range(16):
        atoms = frozenset(a for k, a in enumerate(ATOMS) if mask >> k & 1)
        members = atom_functions(atoms, cap)
        out.append(MonadicClass(_figure_name(atoms), atoms, CappedClass.from_functions(cap, members)))
    out.sort(key=lambda mc: (len(mc.atoms), mc.name))
    return out
