"""Classical Jones and Alexander polynomials of braid closures.

These are computed independently of the Lawrence-representation engine and
serve as cross-checks:

* Jones from the Kauffman bracket state sum over the closure diagram,
* Alexander from the reduced Burau matrix, ``det(I - B) (1-t) / (1-t^n)``.

Both are returned in the variable ``x`` with the orientation convention fixed
by the trefoil ``sigma_1^3``: Jones ``-x^-4 + x^-3 + x^-1`` and Alexander
``x - 1 + x^-1``.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Dict

from .braidword import BraidWord, closure_components, writhe
from .polyring import NotDivisible, OneVarPoly, divide_exact


class DegenerateDeterminant(ArithmeticError):
    """The Burau determinant could not be normalised; indicates a bug."""


class BracketPoly:
    """Laurent polynomial in the Kauffman variable ``A``."""

    __slots__ = ("terms",)

    def __init__(self, terms: Dict[int, int] | None = None):
        self.terms = {k: c for k, c in (terms or {}).items() if c}

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = BracketPoly({0: other})
        return isinstance(other, BracketPoly) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        return f"BracketPoly({dict(sorted(self.terms.items()))!r})"


class _UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))
        self.count = size

    def find(self, a: int) -> int:
        while self.parent[a] != a:
            self.parent[a] = self.parent[self.parent[a]]
            a = self.parent[a]
        return a

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb
            self.count -= 1


def _count_loops(n: int, word: tuple[int, ...], vertical: tuple[bool, ...]) -> int:
    """Number of circles after smoothing each crossing.

    Points are ``(level, position)`` with level 0..L; level L is glued back to
    level 0 by the closure.  ``vertical[k]`` chooses the smoothing that keeps
    both strands going straight through crossing ``k``.
    """
    L = len(word)
    uf = _UnionFind((L + 1) * n)
    node = lambda lvl, p: lvl * n + p  # noqa: E731
    for lvl, g in enumerate(word):
        i = abs(g) - 1
        for p in range(n):
            if p in (i, i + 1):
                continue
            uf.union(node(lvl, p), node(lvl + 1, p))
        if vertical[lvl]:
            uf.union(node(lvl, i), node(lvl + 1, i))
            uf.union(node(lvl, i + 1), node(lvl + 1, i + 1))
        else:
            uf.union(node(lvl, i), node(lvl, i + 1))
            uf.union(node(lvl + 1, i), node(lvl + 1, i + 1))
    for p in range(n):
        uf.union(node(L, p), node(0, p))
    return uf.count


def _poly_mul(p: Dict[int, int], q: Dict[int, int]) -> Dict[int, int]:
    out: Dict[int, int] = {}
    for a, ca in p.items():
        for b, cb in q.items():
            out[a + b] = out.get(a + b, 0) + ca * cb
    return {k: c for k, c in out.items() if c}


@lru_cache(maxsize=None)
def _loop_power(k: int) -> tuple:
    """(-A^2 - A^-2)^k as sorted items."""
    out = {0: 1}
    for _ in range(k):
        out = _poly_mul(out, {2: -1, -2: -1})
    return tuple(sorted(out.items()))


def kauffman_bracket(b: BraidWord) -> BracketPoly:
    """Kauffman bracket of the closure of ``b``, normalised so <unknot> = 1.

    For a positive crossing the A-smoothing is the vertical one; negative
    crossings swap the roles.  The sum runs over all 2^len states.
    """
    word = b.word
    L = len(word)
    # group states by (A-count minus B-count, loops) before expanding
    tally: Dict[tuple[int, int], int] = {}
    for mask in range(1 << L):
        vertical = tuple(bool(mask >> k & 1) for k in range(L))
        a_minus_b = 0
        for k, g in enumerate(word):
            is_a = vertical[k] if g > 0 else not vertical[k]
            a_minus_b += 1 if is_a else -1
        loops = _count_loops(b.n, word, vertical)
        key = (a_minus_b, loops)
        tally[key] = tally.get(key, 0) + 1
    total: Dict[int, int] = {}
    for (a_minus_b, loops), mult in tally.items():
        for e, c in _loop_power(loops - 1):
            k = e + a_minus_b
            total[k] = total.get(k, 0) + mult * c
    return BracketPoly(total)


def jones_oracle(b: BraidWord) -> OneVarPoly:
    """Normalised Jones polynomial of the closure, in the variable ``x``.

    ``f = (-A)^(-3w) <b>`` is a polynomial in ``A^4``-steps times a fixed
    offset; writing ``A^-2 = -x^(-1/2)`` turns ``f`` into the engine's
    convention (knots are unaffected by the sign; links pick it up).
    """
    w = writhe(b)
    bracket = kauffman_bracket(b).terms
    sign = -1 if (3 * w) % 2 else 1
    f = {k - 3 * w: sign * c for k, c in bracket.items()}
    out: Dict[int, int] = {}
    for k, c in f.items():
        if k % 2:
            raise AssertionError("odd power of A in a normalised bracket")
        # A^k = (A^-2)^(-k/2) -> (-1)^(k/2) x^(k/4)
        half = k // 2
        if half % 2:
            c = -c
        x2 = half  # x^(k/4) has doubled exponent k/2
        out[x2] = out.get(x2, 0) + c
    return OneVarPoly(out)


def _burau_reduced_generator(n: int, i: int, sign: int) -> list[list[OneVarPoly]]:
    """Reduced Burau matrix of sigma_i^sign in B_n, entries in Z[t^(+-1)] (as x).

    Uses the Kassel-Turaev convention: the 3x3 window around row ``i`` is
    [[1, 0, 0], [t, -t, 1], [0, 0, 1]], truncated at the edges.  The inverse
    window is [[1, 0, 0], [1, -t^-1, t^-1], [0, 0, 1]].
    """
    size = n - 1
    one = OneVarPoly.const(1)
    zero = OneVarPoly()
    t = OneVarPoly.monomial(2)
    tinv = OneVarPoly.monomial(-2)
    mat = [[one if r == c else zero for c in range(size)] for r in range(size)]
    r = i - 1
    if sign > 0:
        mat[r][r] = -t
        if r - 1 >= 0:
            mat[r][r - 1] = t
        if r + 1 < size:
            mat[r][r + 1] = one
    else:
        mat[r][r] = -tinv
        if r - 1 >= 0:
            mat[r][r - 1] = one
        if r + 1 < size:
            mat[r][r + 1] = tinv
    return mat


def _matmul(p, q):
    size = len(p)
    return [
        [sum((p[r][k] * q[k][c] for k in range(size)), OneVarPoly()) for c in range(size)]
        for r in range(size)
    ]


def reduced_burau(b: BraidWord) -> list[list[OneVarPoly]]:
    size = b.n - 1
    mat = [[OneVarPoly.const(1 if r == c else 0) for c in range(size)] for r in range(size)]
    for g in b.word:
        mat = _matmul(mat, _burau_reduced_generator(b.n, abs(g), 1 if g > 0 else -1))
    return mat


def determinant(mat: list[list[OneVarPoly]]) -> OneVarPoly:
    """Laplace expansion along rows, memoised on the set of used columns."""
    size = len(mat)

    @lru_cache(maxsize=None)
    def minor(row: int, used: int) -> OneVarPoly:
        if row == size:
            return OneVarPoly.const(1)
        total = OneVarPoly()
        sign = 1
        for c in range(size):
            if used >> c & 1:
                continue
            entry = mat[row][c]
            if entry:
                term = entry * minor(row + 1, used | (1 << c))
                total = total + (term if sign > 0 else -term)
            sign = -sign
        return total

    return minor(0, 0)


def alexander_oracle(b: BraidWord) -> OneVarPoly:
    """Conway-normalised Alexander polynomial of the closure, in ``x``.

    ``t^((n-1-w)/2) (1-t)/(1-t^n) det(I - B(b))``; the writhe factor centres
    the result so it is symmetric (knots) or antisymmetric (even-component
    links) under ``x -> x^-1``.  The sign is the one that makes the unknot 1
    and the positive Hopf link ``x^(-1/2) - x^(1/2)``.
    """
    n = b.n
    if n == 1:
        return OneVarPoly.const(1)
    burau = reduced_burau(b)
    size = n - 1
    one = OneVarPoly.const(1)
    shifted = [[(one if r == c else OneVarPoly()) - burau[r][c] for c in range(size)] for r in range(size)]
    det = determinant(shifted)
    if det.is_zero():
        return OneVarPoly()
    cyclotomic = OneVarPoly({2 * k: 1 for k in range(n)})  # (1-t^n)/(1-t)
    try:
        raw = divide_exact(det, cyclotomic)
    except NotDivisible as exc:
        raise DegenerateDeterminant(str(exc)) from exc
    result = raw.shift(n - 1 - writhe(b))
    mirrored = result.invert_x()
    parity = 1 if closure_components(b) % 2 else -1
    if mirrored != (result if parity > 0 else -result):
        raise DegenerateDeterminant(f"unbalanced Alexander polynomial {result} for {b}")
    return result
