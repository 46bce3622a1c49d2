"""Exact arithmetic in Z[x^(+-1/2), d^(+-1)] and in its quotient by (d+1)(dx-1).

Exponents of ``x`` are stored doubled (``x2``) so that half-integral powers
stay on an integer grid.  The quotient ring is free of rank two over
Z[x^(+-1/2)] with basis {1, d}; :class:`QuotientPoly` keeps the pair of
coefficients ``(a, b)`` of that basis, so equality is syntactic.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Mapping


class NotDivisible(ArithmeticError):
    """Raised when an exact polynomial division leaves a remainder."""


def _clean(terms: Mapping) -> dict:
    return {k: c for k, c in terms.items() if c}


def _add_into(acc: dict, key, coeff: int) -> None:
    c = acc.get(key, 0) + coeff
    if c:
        acc[key] = c
    else:
        acc.pop(key, None)


def _x_power_text(x2: int) -> str:
    if x2 % 2:
        return f"x^{{{x2}/2}}"
    if x2 == 2:
        return "x"
    return f"x^{x2 // 2}"


def _monomial_text(coeff: int, factors: list[str], first: bool) -> str:
    sign = "-" if coeff < 0 else "+"
    mag = abs(coeff)
    if not factors:
        body = str(mag)
    elif mag == 1:
        body = "*".join(factors)
    else:
        body = "*".join([str(mag)] + factors)
    if first:
        return ("-" if coeff < 0 else "") + body
    return f" {sign} {body}"


class OneVarPoly:
    """Laurent polynomial in ``x^(1/2)`` with integer coefficients.

    ``terms`` maps doubled exponents to nonzero coefficients.  Instances are
    immutable.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | None = None):
        self._terms = _clean(terms or {})
        self._hash = None

    # -- constructors -----------------------------------------------------
    @classmethod
    def const(cls, c: int) -> "OneVarPoly":
        return cls({0: c})

    @classmethod
    def monomial(cls, x2: int, c: int = 1) -> "OneVarPoly":
        return cls({x2: c})

    @classmethod
    def from_int_coeffs(cls, coeffs: Mapping[int, int]) -> "OneVarPoly":
        """Build from a map of *integer* x-exponents (not doubled)."""
        return cls({2 * e: c for e, c in coeffs.items()})

    @classmethod
    def from_json(cls, data: Iterable) -> "OneVarPoly":
        return cls({int(x2): int(c) for x2, c in data})

    # -- inspection -------------------------------------------------------
    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def coeff(self, x2: int) -> int:
        return self._terms.get(x2, 0)

    def min_x2(self) -> int:
        return min(self._terms)

    def max_x2(self) -> int:
        return max(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = OneVarPoly.const(other)
        if not isinstance(other, OneVarPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- arithmetic -------------------------------------------------------
    @staticmethod
    def _coerce(other) -> "OneVarPoly":
        if isinstance(other, OneVarPoly):
            return other
        if isinstance(other, int):
            return OneVarPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self._terms)
        for k, c in other._terms.items():
            _add_into(acc, k, c)
        return OneVarPoly(acc)

    __radd__ = __add__

    def __neg__(self) -> "OneVarPoly":
        return OneVarPoly({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, QuotientPoly):
            return NotImplemented
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc: dict[int, int] = {}
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                _add_into(acc, k1 + k2, c1 * c2)
        return OneVarPoly(acc)

    __rmul__ = __mul__

    def shift(self, x2: int) -> "OneVarPoly":
        """Multiply by ``x^(x2/2)``."""
        return OneVarPoly({k + x2: c for k, c in self._terms.items()})

    def __pow__(self, k: int) -> "OneVarPoly":
        if k < 0:
            raise ValueError("negative powers only exist for monomials; use shift()")
        result = OneVarPoly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def invert_x(self) -> "OneVarPoly":
        """Substitute ``x -> x^-1``."""
        return OneVarPoly({-k: c for k, c in self._terms.items()})

    def evaluate(self, x):
        """Evaluate at a numeric ``x`` (the half-power uses ``x ** 0.5``)."""
        root = x ** 0.5
        return sum(c * root ** k for k, c in self._terms.items())

    # -- output -----------------------------------------------------------
    def to_json(self) -> list[list[int]]:
        return [[k, c] for k, c in self.items()]

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for i, (x2, c) in enumerate(self.items()):
            factors = [_x_power_text(x2)] if x2 else []
            parts.append(_monomial_text(c, factors, i == 0))
        return "".join(parts)

    def __repr__(self) -> str:
        return f"OneVarPoly({self._terms!r})"


def divide_exact(p: OneVarPoly, q: OneVarPoly) -> OneVarPoly:
    """Return ``r`` with ``r * q == p``.

    Long division from the lowest exponent upward.  Raises
    :class:`NotDivisible` when no Laurent polynomial quotient exists.
    """
    if q.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if p.is_zero():
        return OneVarPoly()
    q_lo, q_hi = q.min_x2(), q.max_x2()
    lead = q.coeff(q_lo)
    rem = dict(p.terms)
    quot: dict[int, int] = {}
    # any exact quotient has support in [p_lo - q_lo, p_hi - q_hi]
    limit = p.max_x2() - q_hi
    while rem:
        lo = min(rem)
        shift = lo - q_lo
        if shift > limit:
            raise NotDivisible(f"{p} is not divisible by {q}")
        c, r = divmod(rem[lo], lead)
        if r:
            raise NotDivisible(f"{p} is not divisible by {q}")
        quot[shift] = c
        for k, qc in q.terms.items():
            _add_into(rem, k + shift, -c * qc)
    return OneVarPoly(quot)


class BivariatePoly:
    """Laurent polynomial in ``x^(1/2)`` and ``d`` with integer coefficients.

    Terms are keyed by ``(x2, de)``: doubled exponent of x and exponent of d.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        self._terms = _clean(terms or {})
        self._hash = None

    @classmethod
    def const(cls, c: int) -> "BivariatePoly":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, x2: int, de: int, c: int = 1) -> "BivariatePoly":
        return cls({(x2, de): c})

    @classmethod
    def from_one_var(cls, p: OneVarPoly, de: int = 0) -> "BivariatePoly":
        return cls({(k, de): c for k, c in p.terms.items()})

    @classmethod
    def from_json(cls, data: Iterable) -> "BivariatePoly":
        return cls({(int(x2), int(de)): int(c) for x2, de, c in data})

    @property
    def terms(self) -> dict[tuple[int, int], int]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = BivariatePoly.const(other)
        if not isinstance(other, BivariatePoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    @staticmethod
    def _coerce(other):
        if isinstance(other, BivariatePoly):
            return other
        if isinstance(other, int):
            return BivariatePoly.const(other)
        if isinstance(other, OneVarPoly):
            return BivariatePoly.from_one_var(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self._terms)
        for k, c in other._terms.items():
            _add_into(acc, k, c)
        return BivariatePoly(acc)

    __radd__ = __add__

    def __neg__(self) -> "BivariatePoly":
        return BivariatePoly({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc: dict[tuple[int, int], int] = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                _add_into(acc, (a1 + a2, b1 + b2), c1 * c2)
        return BivariatePoly(acc)

    __rmul__ = __mul__

    def to_json(self) -> list[list[int]]:
        return [[x2, de, c] for (x2, de), c in self.items()]

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for i, ((x2, de), c) in enumerate(self.items()):
            factors = []
            if x2:
                factors.append(_x_power_text(x2))
            if de:
                factors.append("d" if de == 1 else f"d^{de}")
            parts.append(_monomial_text(c, factors, i == 0))
        return "".join(parts)

    def __repr__(self) -> str:
        return f"BivariatePoly({self._terms!r})"


def hl_arith(p: BivariatePoly, q: BivariatePoly | None, kind: str) -> BivariatePoly:
    """Dispatch ``add``/``sub``/``mul``/``neg`` on the ambient ring."""
    if kind == "add":
        return p + q
    if kind == "sub":
        return p - q
    if kind == "mul":
        return p * q
    if kind == "neg":
        return -p
    raise ValueError(f"unknown operation {kind!r}")


# d^2 = x^-1 + (x^-1 - 1) d
_D2_CONST = OneVarPoly({-2: 1})
_D2_LIN = OneVarPoly({-2: 1, 0: -1})
# d^-1 = (x - 1) + x d
_DINV_CONST = OneVarPoly({2: 1, 0: -1})
_DINV_LIN = OneVarPoly({2: 1})


class QuotientPoly:
    """Element ``a + b*d`` of Z[x^(+-1/2), d^(+-1)] / ((d+1)(dx-1))."""

    __slots__ = ("a", "b", "_hash")

    def __init__(self, a: OneVarPoly | int | None = None, b: OneVarPoly | int | None = None):
        self.a = _as_one_var(a)
        self.b = _as_one_var(b)
        self._hash = None

    @classmethod
    def one(cls) -> "QuotientPoly":
        return cls(1, 0)

    @classmethod
    def zero(cls) -> "QuotientPoly":
        return cls(0, 0)

    @classmethod
    def d(cls) -> "QuotientPoly":
        return cls(0, 1)

    @classmethod
    def x_power(cls, x2: int, c: int = 1) -> "QuotientPoly":
        return cls(OneVarPoly.monomial(x2, c), 0)

    @classmethod
    def from_json(cls, data: Mapping) -> "QuotientPoly":
        return cls(OneVarPoly.from_json(data["a"]), OneVarPoly.from_json(data["b"]))

    def is_zero(self) -> bool:
        return self.a.is_zero() and self.b.is_zero()

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, OneVarPoly)):
            other = QuotientPoly(other, 0)
        if not isinstance(other, QuotientPoly):
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.a, self.b))
        return self._hash

    @staticmethod
    def _coerce(other):
        if isinstance(other, QuotientPoly):
            return other
        if isinstance(other, (int, OneVarPoly)):
            return QuotientPoly(other, 0)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QuotientPoly(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self) -> "QuotientPoly":
        return QuotientPoly(-self.a, -self.b)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QuotientPoly(self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, OneVarPoly)):
            return QuotientPoly(self.a * other, self.b * other)
        if not isinstance(other, QuotientPoly):
            return NotImplemented
        # (a1 + b1 d)(a2 + b2 d) with d^2 replaced once
        bb = self.b * other.b
        a = self.a * other.a
        b = self.a * other.b + self.b * other.a
        if bb:
            a = a + bb * _D2_CONST
            b = b + bb * _D2_LIN
        return QuotientPoly(a, b)

    __rmul__ = __mul__

    def shift_x(self, x2: int) -> "QuotientPoly":
        """Multiply by ``x^(x2/2)``."""
        return QuotientPoly(self.a.shift(x2), self.b.shift(x2))

    def to_json(self) -> dict:
        return {"a": self.a.to_json(), "b": self.b.to_json()}

    def __str__(self) -> str:
        if self.b.is_zero():
            return str(self.a)
        lin = f"({self.b})*d"
        if self.a.is_zero():
            return lin
        return f"{self.a} + {lin}"

    def __repr__(self) -> str:
        return f"QuotientPoly(a={self.a!r}, b={self.b!r})"


def _as_one_var(v) -> OneVarPoly:
    if v is None:
        return OneVarPoly()
    if isinstance(v, int):
        return OneVarPoly.const(v)
    if isinstance(v, OneVarPoly):
        return v
    raise TypeError(f"cannot use {type(v).__name__} as a coefficient")


def q_arith(p: QuotientPoly, q: QuotientPoly, kind: str) -> QuotientPoly:
    if kind == "add":
        return p + q
    if kind == "sub":
        return p - q
    if kind == "mul":
        return p * q
    raise ValueError(f"unknown operation {kind!r}")


@lru_cache(maxsize=None)
def d_power_reduced(k: int) -> QuotientPoly:
    """Canonical form of ``d**k`` in the quotient ring, for any integer k."""
    if k == 0:
        return QuotientPoly.one()
    if k == 1:
        return QuotientPoly.d()
    if k > 1:
        return d_power_reduced(k - 1) * QuotientPoly.d()
    return d_power_reduced(k + 1) * QuotientPoly(_DINV_CONST, _DINV_LIN)


def q_reduce(p: BivariatePoly) -> QuotientPoly:
    """Image of ``p`` in the quotient ring."""
    a: dict[int, int] = {}
    b: dict[int, int] = {}
    for (x2, de), c in p.terms.items():
        dk = d_power_reduced(de)
        for k, v in dk.a.terms.items():
            _add_into(a, k + x2, c * v)
        for k, v in dk.b.terms.items():
            _add_into(b, k + x2, c * v)
    return QuotientPoly(OneVarPoly(a), OneVarPoly(b))


def lift(p: QuotientPoly) -> BivariatePoly:
    """Canonical representative ``a + b*d`` back in the ambient ring."""
    return BivariatePoly.from_one_var(p.a, 0) + BivariatePoly.from_one_var(p.b, 1)


def spec_jones(p: QuotientPoly) -> OneVarPoly:
    """Specialise ``d -> x^-1``."""
    return p.a + p.b.shift(-2)


def spec_alex(p: QuotientPoly) -> OneVarPoly:
    """Specialise ``d -> -1``."""
    return p.a - p.b


# Generators of the ideal, in the ambient ring.
IDEAL_GENERATOR = BivariatePoly({(2, 2): 1, (2, 1): 1, (0, 1): -1, (0, 0): -1})
