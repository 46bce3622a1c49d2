"""Multiplicity-free Lawrence sub-representation over the quotient ring.

Basis vectors of the weight-``m`` sector are 0/1 tuples of length ``n`` with
``m`` ones.  A generator acts only on the two positions it braids; the local
rules below are already written modulo (d+1)(dx-1), where the escape terms
into doubly-occupied partitions vanish.
"""

from __future__ import annotations

from itertools import combinations
from math import comb
from typing import Dict, Iterable, Tuple

from .braidword import BraidWord
from .polyring import OneVarPoly, QuotientPoly

IndexVector = Tuple[int, ...]
IndexState = Dict[IndexVector, QuotientPoly]


class RangeError(ValueError):
    """Sector weight or generator index out of range."""


_ONE = QuotientPoly.one()
_X = QuotientPoly(OneVarPoly({2: 1}))
_XINV = QuotientPoly(OneVarPoly({-2: 1}))
_ONE_MINUS_X = QuotientPoly(OneVarPoly({0: 1, 2: -1}))
_ONE_MINUS_XINV = QuotientPoly(OneVarPoly({0: 1, -2: -1}))
# eigenvalues on the doubly occupied local pair (1, 1)
POS_PAIR = QuotientPoly(OneVarPoly({0: 1, -2: -1}), OneVarPoly({0: 1}))  # 1 - x^-1 + d
NEG_PAIR = QuotientPoly(OneVarPoly(), OneVarPoly({2: 1}))  # x d

# local action: (bit_i, bit_i+1) -> [(coefficient, new pair)]
_LOCAL = {
    1: {
        (0, 0): [(_ONE, (0, 0))],
        (1, 0): [(_ONE, (0, 1))],
        (0, 1): [(_XINV, (1, 0)), (_ONE_MINUS_XINV, (0, 1))],
        (1, 1): [(POS_PAIR, (1, 1))],
    },
    -1: {
        (0, 0): [(_ONE, (0, 0))],
        (0, 1): [(_ONE, (1, 0))],
        (1, 0): [(_X, (0, 1)), (_ONE_MINUS_X, (1, 0))],
        (1, 1): [(NEG_PAIR, (1, 1))],
    },
}


def sector_basis(n: int, m: int) -> list[IndexVector]:
    """All weight-``m`` 0/1 vectors of length ``n``, lexicographically ordered."""
    if n < 0 or not 0 <= m <= n:
        raise RangeError(f"no sector with n={n}, m={m}")
    out = []
    for ones in combinations(range(n), m):
        v = [0] * n
        for k in ones:
            v[k] = 1
        out.append(tuple(v))
    out.sort()
    return out


def basis_state(v: Iterable[int]) -> IndexState:
    return {tuple(v): QuotientPoly.one()}


def apply_generator(state: IndexState, i: int, sign: int) -> IndexState:
    """Apply sigma_i (sign=+1) or its inverse (sign=-1) to ``state``."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    out: IndexState = {}
    rules = _LOCAL[sign]
    for v, amp in state.items():
        if not 1 <= i <= len(v) - 1:
            raise RangeError(f"generator {i} out of range for {len(v)} strands")
        p = i - 1
        for coeff, (u0, u1) in rules[(v[p], v[p + 1])]:
            w = v[:p] + (u0, u1) + v[p + 2:]
            new = out.get(w)
            term = amp if coeff is _ONE else amp * coeff
            new = term if new is None else new + term
            if new:
                out[w] = new
            else:
                out.pop(w, None)
    return out


def apply_word(v: IndexVector, b: BraidWord) -> IndexState:
    """Image of the basis vector ``v`` under ``b``, letters applied left to right."""
    v = tuple(v)
    if len(v) != b.n:
        raise RangeError(f"vector of length {len(v)} for a {b.n}-strand braid")
    state = basis_state(v)
    for g in b.word:
        state = apply_generator(state, abs(g), 1 if g > 0 else -1)
    return state


def diagonal_entry(v: IndexVector, b: BraidWord) -> QuotientPoly:
    return apply_word(v, b).get(tuple(v), QuotientPoly.zero())


def sector_trace(n: int, m: int, b: BraidWord) -> QuotientPoly:
    """Trace of ``b`` on the weight-``m`` sector."""
    if n != b.n:
        raise RangeError(f"sector for {n} strands, braid has {b.n}")
    total = QuotientPoly.zero()
    for v in sector_basis(n, m):
        total = total + diagonal_entry(v, b)
    return total


def open_partial_trace(n: int, m: int, b: BraidWord) -> QuotientPoly:
    """Diagonal sum over weight-``m`` vectors whose first entry is 0."""
    if n != b.n:
        raise RangeError(f"sector for {n} strands, braid has {b.n}")
    if not 0 <= m <= n - 1:
        raise RangeError(f"open sector needs 0 <= m <= n-1, got m={m}, n={n}")
    total = QuotientPoly.zero()
    for v in sector_basis(n, m):
        if v[0] == 0:
            total = total + diagonal_entry(v, b)
    return total


def sector_matrix(n: int, m: int, b: BraidWord) -> list[list[QuotientPoly]]:
    """Full matrix of ``b`` on a sector; column ``j`` is the image of basis ``j``.

    Meant for small cross-checks; traces use :func:`diagonal_entry` directly.
    """
    basis = sector_basis(n, m)
    index = {v: k for k, v in enumerate(basis)}
    size = len(basis)
    mat = [[QuotientPoly.zero() for _ in range(size)] for _ in range(size)]
    for j, v in enumerate(basis):
        for w, amp in apply_word(v, b).items():
            mat[index[w]][j] = amp
    return mat


def sector_dimension(n: int, m: int) -> int:
    return comb(n, m)


def dump_sector_matrix(n: int, m: int, b: BraidWord) -> dict:
    """JSON-ready debug dump (row-major)."""
    return {
        "n": n,
        "m": m,
        "word": list(b.word),
        "basis": [list(v) for v in sector_basis(n, m)],
        "matrix": [[e.to_json() for e in row] for row in sector_matrix(n, m, b)],
    }
