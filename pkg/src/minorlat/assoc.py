"""The n-ary associativity predicate, quasi-associativity via essential
cores, the self-composition iteration, and the witness constructions used
for the no-co-atoms and finite-generation arguments.

Associativity is checked on the distinct-variable frame of 2n-1 inputs:
nesting the function into itself at argument positions i and j must give
the same (2n-1)-ary function for every i < j.  Checking projections
beyond the identity pattern is unnecessary, since every projection
instance is a substitution instance of the distinct-variable one.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import (BooleanFunction, complement, compose, essential_arity,
                   essential_core, projection, substitute)
from .minor import minor_leq

ASSOC_ARITY_LIMIT = 10  # the frame 2n-1 must fit in MAX_ARITY


@dataclass(frozen=True)
class NonAssocWitness:
    """Positions i < j and a frame point where the two nestings differ."""

    i: int
    j: int
    arity: int          # of the function itself
    point: int          # packed frame point on 2*arity-1 variables
    value_i: int
    value_j: int

    @property
    def frame_arity(self) -> int:
        return 2 * self.arity - 1

    def replay(self, f: BooleanFunction) -> bool:
        vi = nest(f, self.i).value_at(self.point)
        vj = nest(f, self.j).value_at(self.point)
        return (vi, vj) == (self.value_i, self.value_j) and vi != vj


def nest(f: BooleanFunction, i: int) -> BooleanFunction:
    """f(x_1,...,x_{i-1}, f(x_i,...,x_{i+n-1}), x_{i+n},...,x_{2n-1})."""
    n = f.arity
    frame = 2 * n - 1
    inner = compose(f, [projection(frame, k) for k in range(i, i + n)])
    args = [projection(frame, k) for k in range(1, i)] + [inner] + \
           [projection(frame, k) for k in range(i + n, frame + 1)]
    return compose(f, args)


def is_associative(f: BooleanFunction) -> Optional[NonAssocWitness]:
    """None iff all nestings agree; otherwise the first witness in
    lexicographic (i, j, point) order."""
    n = f.arity
    if n == 1:
        return None
    if n > ASSOC_ARITY_LIMIT:
        raise ValueError(f"is_associative caps arity at {ASSOC_ARITY_LIMIT}")
    nests = {i: nest(f, i) for i in range(1, n + 1)}
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            diff = nests[i].table ^ nests[j].table
            if diff:
                p = (diff & -diff).bit_length() - 1
                w = NonAssocWitness(i, j, n, p,
                                    nests[i].value_at(p), nests[j].value_at(p))
                assert w.replay(f)
                return w
    return None


def is_quasi_associative(f: BooleanFunction) -> bool:
    """Whether f is a minor of an associative function; equivalently its
    essential core is associative (a non-associative minor of an associative
    function can only arise by adding dummy variables)."""
    core, _ = essential_core(f)
    if core.arity > ASSOC_ARITY_LIMIT:
        raise ValueError(f"quasi-associativity caps essential arity at {ASSOC_ARITY_LIMIT}")
    return is_associative(core) is None


def iterate(f: BooleanFunction, k: int) -> BooleanFunction:
    """The k-th self-composition: f^0 is the unary diagonal, f^1 = f, and
    f^k plugs f into the last argument of f^(k-1) on fresh variables."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    n = f.arity
    if k == 0:
        return substitute(f, [1] * n, 1)
    arity_k = k * (n - 1) + 1
    if arity_k > 20:
        raise ValueError(f"f^{k} would have arity {arity_k} > 20")
    current = f
    for step in range(2, k + 1):
        frame = step * (n - 1) + 1
        prev_arity = (step - 1) * (n - 1) + 1
        inner = compose(f, [projection(frame, t) for t in range(frame - n + 1, frame + 1)])
        args = [projection(frame, t) for t in range(1, prev_arity)] + [inner]
        current = compose(current, args)
    return current


def strict_extension_witness(f: BooleanFunction) -> BooleanFunction:
    """x + y + f on two fresh variables: strictly above f in the preorder
    sense used by the no-co-atoms argument.  Asserts the two facts the
    construction needs: the extension is not a minor of f, and identifying
    the fresh pair recovers f."""
    if essential_arity(f) < 2:
        raise ValueError("the extension needs essential arity >= 2")
    n = f.arity
    if n + 2 > 20:
        raise ValueError("extension would exceed the arity cap")
    lifted = substitute(f, list(range(1, n + 1)), n + 2)
    x = projection(n + 2, n + 1)
    y = projection(n + 2, n + 2)
    ext = BooleanFunction(n + 2, lifted.table ^ x.table ^ y.table)

    assert minor_leq(ext, f) is None
    identified = substitute(ext, list(range(1, n + 1)) + [n + 1, n + 1], n + 1)
    collapsed, _ = essential_core(identified)
    original, _ = essential_core(f)
    assert collapsed == original
    return ext


def arity_growth_witness(f: BooleanFunction) -> BooleanFunction:
    """f(x_1,...,x_{N-1}, f(x_N,...,x_{2N-1})): the self-composition whose
    essential arity doubles (minus one) for dummy-free f, as the
    finite-generation argument requires.  The essential-arity claim is
    asserted when f has no dummy variables."""
    n = f.arity
    if essential_arity(f) < 2:
        raise ValueError("the growth construction needs essential arity >= 2")
    if 2 * n - 1 > 20:
        raise ValueError("composite would exceed the arity cap")
    grown = nest(f, n)
    if essential_arity(f) == n:
        assert essential_arity(grown) == 2 * n - 1
    return grown
