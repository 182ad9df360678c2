"""Bit-packed Boolean functions: evaluation, composition, duality,
essential-variable analysis, the multilinear GF(2) transform, and the
text formats used by the CLI (truth-table literals, formulas, family specs).
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Literal, Optional, Sequence

import numpy as np

from . import _tables as tb

MAX_ARITY = tb.MAX_ARITY


class ParseError(ValueError):
    pass


@dataclass(frozen=True)
class BooleanFunction:
    """An n-ary Boolean function as an arity plus a 2^n-bit table.

    Bit p of ``table`` is the value at the point whose j-th coordinate is
    ``(p >> (j - 1)) & 1`` (x1 is the least significant index bit).
    """

    arity: int
    table: int

    def __post_init__(self):
        tb.check_arity(self.arity)
        if not 0 <= self.table <= tb.full_mask(self.arity):
            raise ValueError("table does not fit in 2^arity bits")

    def value_at(self, bits: int) -> int:
        return (self.table >> bits) & 1

    def __repr__(self):
        return f"BooleanFunction({self.arity}, 0x{self.table:x})"


@dataclass(frozen=True)
class Point:
    """An argument tuple, packed into an int with the same bit convention."""

    arity: int
    bits: int

    def __post_init__(self):
        tb.check_arity(self.arity)
        if not 0 <= self.bits < (1 << self.arity):
            raise ValueError("point bits out of range")

    @classmethod
    def of(cls, *coords: int) -> "Point":
        bits = 0
        for j, c in enumerate(coords):
            if c not in (0, 1):
                raise ValueError("coordinates must be bits")
            bits |= c << j
        return cls(len(coords), bits)

    def coord(self, i: int) -> int:
        return (self.bits >> (i - 1)) & 1


@dataclass(frozen=True)
class Polynomial:
    """A multilinear GF(2) polynomial; the empty monomial is the constant 1."""

    arity: int
    monomials: frozenset[frozenset[int]]

    def __post_init__(self):
        tb.check_arity(self.arity)
        for mono in self.monomials:
            if any(not 1 <= i <= self.arity for i in mono):
                raise ValueError("monomial index out of range")


def evaluate(f: BooleanFunction, p: Point) -> int:
    if p.arity != f.arity:
        raise ValueError(f"arity mismatch: function {f.arity}, point {p.arity}")
    return f.value_at(p.bits)


def projection(m: int, i: int) -> BooleanFunction:
    tb.check_arity(m)
    return BooleanFunction(m, tb.projection_mask(m, i))


def constant(value: int, arity: int = 1) -> BooleanFunction:
    return BooleanFunction(arity, tb.full_mask(arity) if value else 0)


def compose(f: BooleanFunction, gs: Sequence[BooleanFunction]) -> BooleanFunction:
    if len(gs) != f.arity:
        raise ValueError(f"need {f.arity} inner functions, got {len(gs)}")
    m = gs[0].arity
    if any(g.arity != m for g in gs):
        raise ValueError("inner functions must share one arity")
    table = tb.compose_tables(f.table, f.arity, [g.table for g in gs], m)
    return BooleanFunction(m, table)


def substitute(f: BooleanFunction, assignment: Sequence[int], m: int) -> BooleanFunction:
    """f(x_{a_1}, ..., x_{a_n}) at arity m; shorthand for composing with projections."""
    if len(assignment) != f.arity:
        raise ValueError("assignment length must equal the arity")
    if any(not 1 <= a <= m for a in assignment):
        raise ValueError("assignment target out of range")
    return BooleanFunction(m, tb.substitute_table(f.table, f.arity, assignment, m))


def essential_indices(f: BooleanFunction) -> frozenset[int]:
    mask = tb.essential_mask(f.table, f.arity)
    return frozenset(i for i in range(1, f.arity + 1) if mask >> (i - 1) & 1)


def essential_arity(f: BooleanFunction) -> int:
    return tb.essential_mask(f.table, f.arity).bit_count()


def essential_core(f: BooleanFunction) -> tuple[BooleanFunction, dict[int, int]]:
    """The function on its essential variables only, plus the map from core
    positions to original indices.  A constant collapses to the 1-ary
    constant with an empty map (arities stay positive)."""
    idx = sorted(essential_indices(f))
    if not idx:
        return constant(f.table & 1), {}
    k = len(idx)
    cols = tb.bit_columns(k).astype(np.int64)
    pts = cols @ (np.int64(1) << np.array([i - 1 for i in idx], dtype=np.int64))
    core_bits = tb.to_array(f.table, f.arity)[pts]
    return BooleanFunction(k, tb.from_array(core_bits)), {j + 1: idx[j] for j in range(k)}


def complement(f: BooleanFunction) -> BooleanFunction:
    return BooleanFunction(f.arity, tb.complement_table(f.table, f.arity))


def dual(f: BooleanFunction) -> BooleanFunction:
    return BooleanFunction(f.arity, tb.dual_table(f.table, f.arity))


def underline(f: BooleanFunction) -> BooleanFunction:
    return complement(dual(f))


def is_idempotent_fn(f: BooleanFunction) -> bool:
    return f.value_at(0) == 0 and f.value_at((1 << f.arity) - 1) == 1


def zhegalkin(f: BooleanFunction) -> Polynomial:
    coeffs = tb.anf_array(f.table, f.arity)
    monos = []
    for s in np.flatnonzero(coeffs):
        monos.append(frozenset(i + 1 for i in range(f.arity) if s >> i & 1))
    return Polynomial(f.arity, frozenset(monos))


def from_zhegalkin(p: Polynomial) -> BooleanFunction:
    coeffs = np.zeros(1 << p.arity, dtype=np.uint8)
    for mono in p.monomials:
        s = 0
        for i in mono:
            s |= 1 << (i - 1)
        coeffs[s] = 1
    return BooleanFunction(p.arity, tb.from_anf_array(coeffs))


def is_linear(f: BooleanFunction) -> bool:
    coeffs = tb.anf_array(f.table, f.arity)
    degs = tb.weights(f.arity)
    return not np.any(coeffs[degs >= 2])


def minimal_true_points(f: BooleanFunction) -> list[int]:
    """Minimal elements of f^{-1}(1) under the coordinatewise order."""
    if not tb.is_monotone_table(f.table, f.arity):
        raise ValueError("minimal_true_points expects a monotone function")
    out = []
    for p in range(1 << f.arity):
        if not f.value_at(p):
            continue
        if all(not f.value_at(p & ~(1 << j)) for j in range(f.arity) if p >> j & 1):
            out.append(p)
    return out


# --- parsing ---------------------------------------------------------------

_TT_RE = re.compile(r"^tt:(\d+):0x([0-9a-fA-F]+)$")
_FAMILY_RE = re.compile(r"^(f|g|u|tu|H|G|mu|T|s)@(\d+)(?:,(\d+))?$")
_WRAP_RE = re.compile(r"^(dual|complement)\((.*)\)$")
_TOKEN_RE = re.compile(r"\s*(x\d+|[01()!&^|])")


def _hex_width(arity: int) -> int:
    return max(1, (1 << arity) // 4)


def parse_function(text: str) -> BooleanFunction:
    """Accepts a truth-table literal ``tt:<n>:<hex>``, a formula over
    x1..x20 with ``! & ^ |`` and optional ``@n`` arity suffix, a family
    spec such as ``f@5`` or ``G@3,5``, or ``dual(...)``/``complement(...)``
    around any of these."""
    text = text.strip()
    m = _WRAP_RE.match(text)
    if m:
        inner = parse_function(m.group(2))
        return dual(inner) if m.group(1) == "dual" else complement(inner)
    m = _TT_RE.match(text)
    if m:
        arity = int(m.group(1))
        if not 1 <= arity <= MAX_ARITY:
            raise ParseError(f"arity out of range in {text!r}")
        digits = m.group(2)
        if len(digits) != _hex_width(arity):
            raise ParseError(
                f"expected {_hex_width(arity)} hex digits for arity {arity}, got {len(digits)}")
        table = int(digits, 16)
        if table > tb.full_mask(arity):
            raise ParseError("table bits beyond 2^arity")
        return BooleanFunction(arity, table)
    m = _FAMILY_RE.match(text)
    if m:
        from . import families
        return families.from_spec_match(m.group(1), m.group(2), m.group(3))
    return _parse_formula(text)


def _parse_formula(text: str) -> BooleanFunction:
    body, arity_suffix = text, None
    if "@" in text:
        body, _, suf = text.rpartition("@")
        if not suf.isdigit():
            raise ParseError(f"bad arity suffix in {text!r}")
        arity_suffix = int(suf)

    tokens = []
    pos = 0
    while pos < len(body):
        m = _TOKEN_RE.match(body, pos)
        if not m:
            if body[pos:].strip():
                raise ParseError(f"unexpected input at {body[pos:]!r}")
            break
        tokens.append(m.group(1))
        pos = m.end()
    if not tokens:
        raise ParseError("empty formula")

    max_var = max((int(t[1:]) for t in tokens if t.startswith("x")), default=1)
    arity = arity_suffix if arity_suffix is not None else max_var
    if arity < max_var:
        raise ParseError(f"arity suffix @{arity} below the largest variable x{max_var}")
    if not 1 <= arity <= MAX_ARITY:
        raise ParseError(f"arity {arity} out of range")

    it = iter(range(len(tokens)))
    state = {"i": 0}

    def peek():
        return tokens[state["i"]] if state["i"] < len(tokens) else None

    def take():
        t = peek()
        state["i"] += 1
        return t

    full = tb.full_mask(arity)

    def atom() -> int:
        t = take()
        if t is None:
            raise ParseError("unexpected end of formula")
        if t == "(":
            v = expr()
            if take() != ")":
                raise ParseError("missing ')'")
            return v
        if t == "!":
            return atom() ^ full
        if t == "0":
            return 0
        if t == "1":
            return full
        if t.startswith("x"):
            return tb.projection_mask(arity, int(t[1:]))
        raise ParseError(f"unexpected token {t!r}")

    def conj() -> int:
        v = atom()
        while peek() == "&":
            take()
            v &= atom()
        return v

    def xor() -> int:
        v = conj()
        while peek() == "^":
            take()
            v ^= conj()
        return v

    def expr() -> int:
        v = xor()
        while peek() == "|":
            take()
            v |= xor()
        return v

    table = expr()
    if peek() is not None:
        raise ParseError(f"trailing tokens from {peek()!r}")
    return BooleanFunction(arity, table)


def format_function(f: BooleanFunction, style: Literal["hex", "anf", "dnf"] = "hex") -> str:
    if style == "hex":
        return f"tt:{f.arity}:0x{f.table:0{_hex_width(f.arity)}x}"
    if style == "anf":
        return _format_anf(f)
    if style == "dnf":
        return _format_dnf(f)
    raise ValueError(f"unknown style {style!r}")


def _mono_key(mono: Iterable[int]):
    s = sorted(mono)
    return (len(s), s)


def _format_anf(f: BooleanFunction) -> str:
    monos = sorted(zhegalkin(f).monomials, key=_mono_key)
    if not monos:
        return _with_arity("0", f)
    parts = ["1" if not m else "*".join(f"x{i}" for i in sorted(m)) for m in monos]
    return _with_arity(" + ".join(parts), f)


def _format_dnf(f: BooleanFunction) -> str:
    if f.table == 0:
        return _with_arity("0", f)
    if f.table == tb.full_mask(f.arity):
        return _with_arity("1", f)
    if tb.is_monotone_table(f.table, f.arity):
        terms = []
        for p in minimal_true_points(f):
            lits = [f"x{j + 1}" for j in range(f.arity) if p >> j & 1]
            terms.append("&".join(lits))
        terms.sort(key=lambda t: (t.count("&"), t))
    else:
        terms = []
        for p in range(1 << f.arity):
            if not f.value_at(p):
                continue
            lits = [(f"x{j + 1}" if p >> j & 1 else f"!x{j + 1}") for j in range(f.arity)]
            terms.append("&".join(lits))
    return _with_arity(" | ".join(terms), f)


def _with_arity(body: str, f: BooleanFunction) -> str:
    mentioned = {int(m[1:]) for m in re.findall(r"x\d+", body)}
    if max(mentioned, default=1) == f.arity:
        return body
    return f"{body}@{f.arity}"


def all_functions(arity: int) -> Iterable[BooleanFunction]:
    for table in range(1 << (1 << arity)):
        yield BooleanFunction(arity, table)
