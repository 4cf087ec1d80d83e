"""Exact scalar arithmetic: Laurent polynomials in q, quantum integers,
multinomial coefficients and the global Lie-theoretic parameters.

Rationals are plain :class:`fractions.Fraction` values.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Mapping


class LaurentPoly:
    """An element of Z[q, q^-1], stored sparsely as {exponent: coefficient}.

    Zero coefficients are never stored, so equality is structural.
    Instances are treated as immutable.
    """

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        c = {}
        if coeffs:
            for e, v in coeffs.items():
                if v:
                    c[int(e)] = int(v)
        self._c = c
        self._hash = None

    @classmethod
    def const(cls, n: int) -> "LaurentPoly":
        return cls({0: n})

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "LaurentPoly":
        return cls({exp: coeff})

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._c)

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        c = dict(self._c)
        for e, v in other._c.items():
            c[e] = c.get(e, 0) + v
        return LaurentPoly(c)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -v for e, v in self._c.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly({e: v * other for e, v in self._c.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        c: dict[int, int] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                c[e1 + e2] = c.get(e1 + e2, 0) + v1 * v2
        return LaurentPoly(c)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are only defined for monomials; use shift()")
        result = LaurentPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by q^k."""
        return LaurentPoly({e + k: v for e, v in self._c.items()})

    def eval_q1(self) -> int:
        return sum(self._c.values())

    def bar(self) -> "LaurentPoly":
        """The involution q -> q^-1."""
        return LaurentPoly({-e: v for e, v in self._c.items()})

    def degree_range(self) -> tuple[int, int]:
        if not self._c:
            raise ValueError("zero polynomial has no degree")
        return min(self._c), max(self._c)

    def divmod_exact(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact quotient self / other; raises ArithmeticError if not exact."""
        if not other:
            raise ZeroDivisionError("division by the zero Laurent polynomial")
        if not self._c:
            return LaurentPoly()
        lo_d, hi_d = other.degree_range()
        lead = other._c[hi_d]
        rem = dict(self._c)
        quot: dict[int, int] = {}
        while rem:
            hi = max(rem)
            lo = min(rem)
            if hi - lo < hi_d - lo_d:
                raise ArithmeticError(f"{self} is not divisible by {other}")
            c, r = divmod(rem[hi], lead)
            if r:
                raise ArithmeticError(f"{self} is not divisible by {other}")
            e = hi - hi_d
            quot[e] = c
            for oe, ov in other._c.items():
                k = oe + e
                nv = rem.get(k, 0) - c * ov
                if nv:
                    rem[k] = nv
                else:
                    rem.pop(k, None)
        return LaurentPoly(quot)

    def __repr__(self):
        return f"LaurentPoly({self._c!r})"

    def __str__(self):
        if not self._c:
            return "0"
        out = []
        for e in sorted(self._c, reverse=True):
            v = self._c[e]
            sign = "-" if v < 0 else "+"
            a = abs(v)
            if e == 0:
                mono = str(a)
            else:
                qpart = "q" if e == 1 else f"q^{e}"
                mono = qpart if a == 1 else f"{a}*{qpart}"
            out.append((sign, mono))
        s = ("-" if out[0][0] == "-" else "") + out[0][1]
        for sign, mono in out[1:]:
            s += f" {sign} {mono}"
        return s


ZERO = LaurentPoly()
ONE = LaurentPoly.const(1)
Q = LaurentPoly.monomial(1)


def laurent_eval_q1(f: LaurentPoly) -> int:
    return f.eval_q1()


def gram_matrix(ell: int) -> tuple[tuple[int, ...], ...]:
    """Gram matrix of (alpha_i | alpha_j) for type A_{2l}^{(2)}."""
    if ell < 1:
        raise ValueError("ell must be positive")
    if ell == 1:
        return ((2, -4), (-4, 8))
    n = ell + 1
    g = [[0] * n for _ in range(n)]
    for i in range(n):
        g[i][i] = 4
    g[0][0] = 2
    g[ell][ell] = 8
    for i in range(ell):
        off = -4 if i == ell - 1 else -2
        g[i][i + 1] = g[i + 1][i] = off
    return tuple(tuple(row) for row in g)


@dataclass(frozen=True)
class GlobalParams:
    ell: int
    p: int = field(init=False)
    I: tuple[int, ...] = field(init=False)
    J: tuple[int, ...] = field(init=False)
    gram: tuple[tuple[int, ...], ...] = field(init=False)

    def __post_init__(self):
        if self.ell < 1:
            raise ValueError("ell must be a positive integer")
        object.__setattr__(self, "p", 2 * self.ell + 1)
        object.__setattr__(self, "I", tuple(range(self.ell + 1)))
        object.__setattr__(self, "J", tuple(range(self.ell)))
        object.__setattr__(self, "gram", gram_matrix(self.ell))

    def half_norm(self, i: int) -> int:
        """(alpha_i|alpha_i)/2, the exponent of q_i."""
        return self.gram[i][i] // 2

    @property
    def delta(self) -> tuple[int, ...]:
        """Null root coordinates in the simple-root basis."""
        return tuple([2] * self.ell + [1])


@lru_cache(maxsize=None)
def params(ell: int) -> GlobalParams:
    return GlobalParams(ell)


def q_i(i: int, prm: GlobalParams) -> LaurentPoly:
    return LaurentPoly.monomial(prm.half_norm(i))


def quantum_integer(n: int, i: int, prm: GlobalParams) -> LaurentPoly:
    """[n]_i = (q_i^n - q_i^-n)/(q_i - q_i^-1); negative n gives -[|n|]_i."""
    if n < 0:
        return -quantum_integer(-n, i, prm)
    e = prm.half_norm(i)
    return LaurentPoly({e * (n - 1 - 2 * k): 1 for k in range(n)})


def quantum_factorial(n: int, i: int, prm: GlobalParams) -> LaurentPoly:
    if n < 0:
        raise ValueError("quantum factorial of a negative integer")
    out = ONE
    for k in range(1, n + 1):
        out = out * quantum_integer(k, i, prm)
    return out


def multinomial(parts: Iterable[int]) -> int:
    parts = list(parts)
    if any(x < 0 for x in parts):
        raise ValueError("multinomial parts must be nonnegative")
    out = factorial(sum(parts))
    for x in parts:
        out //= factorial(x)
    return out


def pow2(e: int) -> Fraction:
    """2^e as an exact rational (e may be negative)."""
    return Fraction(2**e) if e >= 0 else Fraction(1, 2**-e)


def is_power_of_two(x: Fraction) -> bool:
    if x <= 0:
        return False
    n, d = x.numerator, x.denominator
    return (n & (n - 1)) == 0 and (d & (d - 1)) == 0


def format_fraction(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
