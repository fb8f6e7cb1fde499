"""Exact arithmetic in the cyclotomic integers Z[zeta_N].

Every amplitude, inner product and operator entry in this package is a
:class:`CyclotomicInt`.  Elements are kept in canonical form: coordinates in
the power basis ``1, z, ..., z^(phi(N)-1)`` after reduction modulo the N-th
cyclotomic polynomial, so equality is plain coefficient comparison.

Text form (used by the CLI) writes ``z{N}`` for zeta_N, monomials in
ascending degree, e.g. ``1 - 2*z12^3``; a unit coefficient is omitted and
the first power is written without exponent (``z4``).
"""

from __future__ import annotations

import cmath
from functools import lru_cache
from math import gcd
from typing import Optional, Sequence, Tuple, Union

import numpy as np

from . import _poly

__all__ = [
    "CyclotomicInt",
    "cyclotomic_polynomial",
    "totient",
    "root_of_unity",
    "rescale_order",
    "common_order",
    "reduction_matrix",
]


def lcm(*ns: int) -> int:
    out = 1
    for n in ns:
        out = out * n // gcd(out, n)
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> _poly.Poly:
    """Phi_n as an ascending coefficient tuple.

    Computed by exact division of ``x^n - 1`` by Phi_d for every proper
    divisor d of n.
    """
    if n < 1:
        raise ValueError("cyclotomic_polynomial expects n >= 1")
    num = (-1,) + (0,) * (n - 1) + (1,)
    for d in range(1, n):
        if n % d == 0:
            num, r = _poly.divmod_poly(num, cyclotomic_polynomial(d))
            assert not r
    return num


@lru_cache(maxsize=None)
def totient(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


@lru_cache(maxsize=None)
def _power_rows(n: int) -> Tuple[Tuple[int, ...], ...]:
    # canonical coordinates of zeta_n^k for k = 0..n-1
    phi = totient(n)
    f = cyclotomic_polynomial(n)
    rows = []
    cur = [1] + [0] * (phi - 1)
    for _ in range(n):
        rows.append(tuple(cur))
        # multiply by x, then replace x^phi by -(f - x^phi)
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for j in range(phi):
                cur[j] -= top * f[j]
    return tuple(rows)


@lru_cache(maxsize=None)
def reduction_matrix(n: int) -> np.ndarray:
    """Integer matrix R of shape (n, phi(n)); row k holds the coordinates of zeta_n^k.

    A group-ring vector ``c`` (coefficients of ``1, z, ..., z^(n-1)``) maps to
    its canonical coordinates as ``c @ R``.
    """
    r = np.array(_power_rows(n), dtype=np.int64)
    r.setflags(write=False)
    return r


def _reduce(order: int, coeffs: Sequence[int]) -> Tuple[int, ...]:
    phi = totient(order)
    if len(coeffs) <= phi:
        return tuple(coeffs) + (0,) * (phi - len(coeffs))
    folded = [0] * order
    for k, c in enumerate(coeffs):
        folded[k % order] += c
    rows = _power_rows(order)
    out = [0] * phi
    for k, c in enumerate(folded):
        if c:
            row = rows[k]
            for j in range(phi):
                out[j] += c * row[j]
    return tuple(out)


Scalar = Union["CyclotomicInt", int]


class CyclotomicInt:
    """An element of Z[zeta_N] in canonical power-basis coordinates.

    ``CyclotomicInt(N, coeffs)`` accepts a coefficient vector of any length
    (a polynomial in zeta_N) and reduces it.  Values are immutable; binary
    operations require equal orders (use :func:`rescale_order` or
    :func:`common_order` to bring operands together).  Plain ``int`` operands
    are promoted automatically.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Sequence[int] = ()):
        if order < 1:
            raise ValueError("order must be a positive integer")
        object.__setattr__(self, "order", int(order))
        object.__setattr__(self, "coeffs", _reduce(order, [int(c) for c in coeffs]))

    @classmethod
    def _raw(cls, order: int, coeffs: Tuple[int, ...]) -> "CyclotomicInt":
        obj = cls.__new__(cls)
        object.__setattr__(obj, "order", order)
        object.__setattr__(obj, "coeffs", coeffs)
        return obj

    @classmethod
    def integer(cls, c: int, order: int = 1) -> "CyclotomicInt":
        return cls._raw(order, (int(c),) + (0,) * (totient(order) - 1))

    def __setattr__(self, name, value):
        raise AttributeError("CyclotomicInt is immutable")

    # -- coercion --------------------------------------------------------

    def _coerce(self, other) -> Optional["CyclotomicInt"]:
        if isinstance(other, CyclotomicInt):
            if other.order != self.order:
                raise ValueError(
                    f"order mismatch: {self.order} vs {other.order}; rescale to a common order first"
                )
            return other
        if isinstance(other, (int, np.integer)):
            return CyclotomicInt.integer(int(other), self.order)
        return None

    # -- ring operations -------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CyclotomicInt._raw(self.order, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicInt._raw(self.order, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CyclotomicInt._raw(self.order, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, (int, np.integer)):
            return CyclotomicInt._raw(self.order, tuple(a * int(other) for a in self.coeffs))
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        prod = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return CyclotomicInt._raw(self.order, _reduce(self.order, prod))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("only non-negative integer powers are supported")
        result = CyclotomicInt.integer(1, self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- comparison ------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, CyclotomicInt):
            return self.order == other.order and self.coeffs == other.coeffs
        if isinstance(other, (int, np.integer)):
            return self.as_integer() == int(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    # -- structure -------------------------------------------------------

    def conjugate(self) -> "CyclotomicInt":
        """Complex conjugate, i.e. the image under zeta -> zeta^(N-1)."""
        n = self.order
        out = [0] * n
        for k, c in enumerate(self.coeffs):
            out[(-k) % n] += c
        return CyclotomicInt._raw(n, _reduce(n, out))

    def abs_squared(self) -> "CyclotomicInt":
        return self * self.conjugate()

    def as_integer(self) -> Optional[int]:
        if any(self.coeffs[1:]):
            return None
        return self.coeffs[0]

    def rescale(self, new_order: int) -> "CyclotomicInt":
        """The same number written in Z[zeta_M] via zeta_N = zeta_M^(M/N)."""
        if new_order % self.order:
            raise ValueError(f"{self.order} does not divide {new_order}")
        if new_order == self.order:
            return self
        step = new_order // self.order
        out = [0] * ((len(self.coeffs) - 1) * step + 1)
        for k, c in enumerate(self.coeffs):
            out[k * step] = c
        return CyclotomicInt._raw(new_order, _reduce(new_order, out))

    def root_exponent(self) -> Optional[int]:
        """k with self == zeta_N^k, or None when self is not an N-th root of unity."""
        try:
            return _root_index(self.order)[self.coeffs]
        except KeyError:
            return None

    def __complex__(self):
        # display helper only
        z = cmath.exp(2j * cmath.pi / self.order)
        return complex(sum(c * z**k for k, c in enumerate(self.coeffs)))

    def __str__(self):
        n = self.order
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                terms.append((c < 0, str(abs(c))))
                continue
            mono = f"z{n}" if k == 1 else f"z{n}^{k}"
            body = mono if abs(c) == 1 else f"{abs(c)}*{mono}"
            terms.append((c < 0, body))
        if not terms:
            return "0"
        neg, body = terms[0]
        out = ("-" if neg else "") + body
        for neg, body in terms[1:]:
            out += (" - " if neg else " + ") + body
        return out

    def __repr__(self):
        return f"CyclotomicInt({self.order}, {list(self.coeffs)})"


@lru_cache(maxsize=None)
def _root_index(n: int) -> dict:
    return {row: k for k, row in enumerate(_power_rows(n))}


@lru_cache(maxsize=4096)
def root_of_unity(n: int, k: int = 1) -> CyclotomicInt:
    """zeta_n^(k mod n) in canonical form."""
    if n < 1:
        raise ValueError("root_of_unity expects n >= 1")
    return CyclotomicInt._raw(n, _power_rows(n)[k % n])


def rescale_order(a: CyclotomicInt, m: int) -> CyclotomicInt:
    return a.rescale(m)


def common_order(*values: CyclotomicInt) -> Tuple[CyclotomicInt, ...]:
    """Rescale all arguments to the lcm of their orders."""
    n = lcm(*(v.order for v in values))
    return tuple(v.rescale(n) for v in values)
