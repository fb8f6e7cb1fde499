"""Galois rings GR(4^m) = Z_4[x]/(h) and small quotient rings Z_n[x]/(f).

The basic primitive polynomial h is obtained from a primitive binary
polynomial by the even/odd splitting lift.  Every element of GR(4^m) is
uniquely ``a + 2b`` with a, b in the Teichmuller set {0, 1, xi, ...,
xi^(2^m-2)}; the Frobenius map squares both coordinates and the trace sums
its first m iterates.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from . import _poly
from .finite_field import find_modulus, render_table

__all__ = [
    "hensel_lift",
    "RingContext",
    "RingElement",
    "GR",
    "QuotientRing",
    "SubfieldReport",
    "sylow_decomposition",
    "verify_subfield",
    "teichmuller_table",
    "render_teichmuller_table",
]


def hensel_lift(h2: Sequence[int]) -> _poly.Poly:
    """Lift a primitive binary polynomial to the basic primitive polynomial over Z_4.

    With h2 = e(x) - d(x), e holding the even and d the odd powers,
    g(x^2) = +-(e(x)^2 - d(x)^2); the sign is chosen to make g monic.
    """
    h2 = _poly.trim(h2, 2)
    if not h2 or h2[-1] != 1:
        raise ValueError("h2 must be a monic binary polynomial")
    if not _poly.is_primitive(h2, 2):
        raise ValueError(f"{_poly.format_poly(h2)} is not primitive over Z_2")
    e = tuple(c if k % 2 == 0 else 0 for k, c in enumerate(h2))
    d = tuple(c if k % 2 == 1 else 0 for k, c in enumerate(h2))
    sq = _poly.sub(_poly.mul(e, e), _poly.mul(d, d))
    assert all(c == 0 for c in sq[1::2])
    g = list(sq[0::2])
    if g[-1] < 0:
        g = [-c for c in g]
    assert g[-1] == 1
    return _poly.trim(g, 4)


class RingContext:
    """GR(4^m) built from the lift of ``h2`` (default: the canonical primitive modulus)."""

    def __init__(self, m: int, h2: Optional[Sequence[int]] = None):
        if m < 1:
            raise ValueError("degree must be >= 1")
        if h2 is None:
            h2 = find_modulus(2, m)
        h2 = _poly.trim(h2, 2)
        if len(h2) != m + 1:
            raise ValueError(f"h2 must have degree {m}")
        self.m = m
        self.h2 = h2
        self.h = hensel_lift(h2)
        self.size = 4**m
        r = 2**m - 1
        x_r = (3,) + (0,) * (r - 1) + (1,)
        if _poly.rem(x_r, self.h, 4):
            raise ArithmeticError("lift does not divide x^r - 1")  # pragma: no cover
        self._mul_cache: Dict[Tuple[int, int], int] = {}
        xi = self._from_digits(_poly.rem((0, 1), self.h, 4))
        powers = [1]
        for _ in range(r - 1):
            powers.append(self._mul(powers[-1], xi))
        if self._mul(powers[-1], xi) != 1 or len(set(powers)) != r:
            raise ArithmeticError("xi does not have order 2^m - 1")  # pragma: no cover
        self._teich = [0] + powers
        self._teich_pos = {c: k for k, c in enumerate(self._teich)}
        self._half = {self._add(t, t): t for t in self._teich}
        table = {}
        for a in self._teich:
            for b in self._teich:
                table[self._add(a, self._add(b, b))] = (a, b)
        if len(table) != self.size:
            raise ArithmeticError("Teichmuller decomposition is not a bijection")  # pragma: no cover
        self._decomp_table = table
        self._trace_cache: Dict[int, int] = {}

    # -- code level --------------------------------------------------------

    def _digits(self, code: int) -> Tuple[int, ...]:
        out = []
        for _ in range(self.m):
            code, r = divmod(code, 4)
            out.append(r)
        return tuple(out)

    def _from_digits(self, digits: Sequence[int]) -> int:
        code = 0
        for c in reversed(list(digits)[: self.m] + [0] * (self.m - len(digits))):
            code = code * 4 + c % 4
        return code

    def _add(self, a: int, b: int) -> int:
        return self._from_digits([x + y for x, y in zip(self._digits(a), self._digits(b))])

    def _neg(self, a: int) -> int:
        return self._from_digits([-x for x in self._digits(a)])

    def _mul(self, a: int, b: int) -> int:
        key = (a, b) if a <= b else (b, a)
        out = self._mul_cache.get(key)
        if out is None:
            prod = _poly.mul(self._digits(a), self._digits(b), 4)
            out = self._from_digits(_poly.rem(prod, self.h, 4))
            self._mul_cache[key] = out
        return out

    def _pow(self, a: int, e: int) -> int:
        result, base = 1, a
        while e:
            if e & 1:
                result = self._mul(result, base)
            base = self._mul(base, base)
            e >>= 1
        return result

    # -- element level -------------------------------------------------------

    def __call__(self, value) -> "RingElement":
        """Element from a label (base-4 digits) or an ascending coefficient sequence."""
        if isinstance(value, RingElement):
            return value
        if isinstance(value, int):
            if not 0 <= value < self.size:
                raise ValueError("label out of range")
            return RingElement(self, value)
        coeffs = _poly.trim(value, 4)
        if len(coeffs) > self.m:
            coeffs = _poly.rem(coeffs, self.h, 4)
        return RingElement(self, self._from_digits(coeffs))

    @property
    def xi(self) -> "RingElement":
        return RingElement(self, self._teich[2] if self.m > 1 else 1)

    def elements(self) -> Tuple["RingElement", ...]:
        return tuple(RingElement(self, c) for c in range(self.size))

    def teichmuller_set(self) -> Tuple["RingElement", ...]:
        """(0, 1, xi, ..., xi^(2^m-2))."""
        return tuple(RingElement(self, c) for c in self._teich)

    def teichmuller_index(self, t: "RingElement") -> int:
        return self._teich_pos[t.code]

    def decompose(self, beta: "RingElement") -> Tuple["RingElement", "RingElement"]:
        """(a, b) in T_m x T_m with beta = a + 2b, where a = beta^(2^m)."""
        a = self._pow(beta.code, 2**self.m)
        b = self._half[self._add(beta.code, self._neg(a))]
        return RingElement(self, a), RingElement(self, b)

    def frobenius(self, beta: "RingElement") -> "RingElement":
        a, b = self.decompose(beta)
        return a * a + 2 * (b * b)

    def trace(self, beta: "RingElement") -> int:
        """Sum of the m Frobenius iterates; an integer in {0, 1, 2, 3}."""
        out = self._trace_cache.get(beta.code)
        if out is None:
            acc = RingElement(self, 0)
            cur = beta
            for _ in range(self.m):
                acc = acc + cur
                cur = self.frobenius(cur)
            digits = acc.coeffs
            if any(digits[1:]):  # pragma: no cover
                raise ArithmeticError("trace left Z_4")
            out = digits[0]
            self._trace_cache[beta.code] = out
        return out

    def decomposition_matrix(self) -> List[List["RingElement"]]:
        """Entry [i][j] = T[i] + 2 T[j]."""
        t = self.teichmuller_set()
        return [[a + 2 * b for b in t] for a in t]

    def __repr__(self):
        return f"GR(4^{self.m}, h={_poly.format_poly(self.h)})"


@lru_cache(maxsize=None)
def GR(m: int, h2: Optional[Tuple[int, ...]] = None) -> RingContext:
    """Cached ring context constructor."""
    return RingContext(m, h2)


class RingElement:
    __slots__ = ("ctx", "code")

    def __init__(self, ctx: RingContext, code: int):
        self.ctx = ctx
        self.code = code

    @property
    def coeffs(self) -> Tuple[int, ...]:
        return self.ctx._digits(self.code)

    def _other(self, other):
        if isinstance(other, int):
            return RingElement(self.ctx, self.ctx._from_digits([other]))
        if isinstance(other, RingElement):
            if other.ctx is not self.ctx:
                raise ValueError("operands live in different rings")
            return other
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return RingElement(self.ctx, self.ctx._add(self.code, o.code))

    __radd__ = __add__

    def __neg__(self):
        return RingElement(self.ctx, self.ctx._neg(self.code))

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return RingElement(self.ctx, self.ctx._mul(self.code, o.code))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers are not supported")
        return RingElement(self.ctx, self.ctx._pow(self.code, e))

    def decompose(self):
        return self.ctx.decompose(self)

    def frobenius(self):
        return self.ctx.frobenius(self)

    def trace(self) -> int:
        return self.ctx.trace(self)

    def mod2(self) -> Tuple[int, ...]:
        return tuple(c % 2 for c in self.coeffs)

    def __eq__(self, other):
        if isinstance(other, RingElement):
            return self.ctx is other.ctx and self.code == other.code
        if isinstance(other, int):
            return self.code == self.ctx._from_digits([other])
        return NotImplemented

    def __hash__(self):
        return hash((id(self.ctx), self.code))

    def __str__(self):
        return _poly.format_poly(self.coeffs)

    def __repr__(self):
        return f"<{self} in GR(4^{self.ctx.m})>"


# -- Teichmuller table ---------------------------------------------------------


@dataclass(frozen=True)
class TeichmullerRow:
    power: Optional[int]
    polynomial: str
    z4: Tuple[int, ...]  # highest degree first
    z2: Tuple[int, ...]  # highest degree first


def teichmuller_table(ctx: RingContext) -> List[TeichmullerRow]:
    rows = []
    for k, t in enumerate(ctx.teichmuller_set()):
        hi_first = tuple(reversed(t.coeffs))
        rows.append(
            TeichmullerRow(
                None if k == 0 else k - 1, str(t), hi_first, tuple(c % 2 for c in hi_first)
            )
        )
    return rows


def render_teichmuller_table(rows: Sequence[TeichmullerRow], symbol: str = "ξ") -> str:
    def label(r):
        if r.power is None:
            return "0"
        if r.power == 0:
            return "1"
        return symbol if r.power == 1 else f"{symbol}^{r.power}"

    ts = lambda t: "(" + ",".join(map(str, t)) + ")"
    m = len(rows[0].z4)
    return render_table(
        ["power", "polynomial", f"{m}-tuple in Z4", f"{m}-tuple in Z2"],
        [[label(r), r.polynomial, ts(r.z4), ts(r.z2)] for r in rows],
    )


def teichmuller_records(rows: Sequence[TeichmullerRow]) -> Iterator[str]:
    for r in rows:
        yield json.dumps(
            {"power": r.power, "polynomial": r.polynomial, "z4": list(r.z4), "z2": list(r.z2)}
        )


# -- generic quotient rings ------------------------------------------------------


class QuotientRing:
    """Z_n[x]/(f) for monic f, with elements as ascending coefficient tuples of length deg f."""

    def __init__(self, n: int, f: Sequence[int]):
        f = _poly.trim(f, n)
        if not f or f[-1] != 1 or len(f) < 2:
            raise ValueError("f must be monic of degree >= 1")
        self.n = n
        self.f = f
        self.degree = len(f) - 1
        if n**self.degree > 10**4:
            raise ValueError("quotient ring too large for explicit enumeration")
        self.elements: Tuple[Tuple[int, ...], ...] = tuple(
            tuple(reversed(t)) for t in product(range(n), repeat=self.degree)
        )

    @property
    def zero(self) -> Tuple[int, ...]:
        return (0,) * self.degree

    def _pad(self, c: Sequence[int]) -> Tuple[int, ...]:
        c = tuple(x % self.n for x in c)
        return c + (0,) * (self.degree - len(c))

    def add(self, a, b):
        return tuple((x + y) % self.n for x, y in zip(a, b))

    def scale(self, c: int, a):
        return tuple((c * x) % self.n for x in a)

    def mul(self, a, b):
        return self._pad(_poly.rem(_poly.mul(a, b, self.n), self.f, self.n))

    def format(self, a) -> str:
        return _poly.format_poly(a)

    def __len__(self):
        return len(self.elements)

    def __repr__(self):
        return f"Z_{self.n}[x]/({_poly.format_poly(self.f)})"


def sylow_decomposition(ring: QuotientRing) -> Tuple[tuple, tuple]:
    """Annihilators of the two prime factors of the coefficient modulus.

    For n = p*q (p < q distinct primes) returns S_a = {x : p x = 0} and
    S_b = {x : q x = 0}.
    """
    fac = _poly.factorize(ring.n)
    if len(fac) != 2 or any(e != 1 for e in fac.values()):
        raise ValueError("coefficient modulus must be a product of two distinct primes")
    p, q = sorted(fac)
    s_a = tuple(x for x in ring.elements if ring.scale(p, x) == ring.zero)
    s_b = tuple(x for x in ring.elements if ring.scale(q, x) == ring.zero)
    return s_a, s_b


@dataclass
class SubfieldReport:
    is_field: bool
    identity: Optional[Tuple[int, ...]] = None
    group_order: Optional[int] = None
    failures: List[str] = field(default_factory=list)


def verify_subfield(subset: Sequence[Tuple[int, ...]], ring: QuotientRing) -> SubfieldReport:
    """Decide whether ``subset`` is a field under the ring operations."""
    s = list(dict.fromkeys(tuple(x) for x in subset))
    members = set(s)
    rep = SubfieldReport(is_field=False)
    zero = ring.zero
    if zero not in members:
        rep.failures.append("subset does not contain 0")
        return rep
    for a in s:
        for b in s:
            if ring.add(a, b) not in members:
                rep.failures.append(f"not closed under addition: {ring.format(a)} + {ring.format(b)}")
                return rep
            if ring.mul(a, b) not in members:
                rep.failures.append(f"not closed under multiplication: {ring.format(a)} * {ring.format(b)}")
                return rep
    nonzero = [a for a in s if a != zero]
    identity = next((e for e in nonzero if all(ring.mul(e, a) == a for a in s)), None)
    if identity is None:
        rep.failures.append("no multiplicative identity in subset")
        return rep
    rep.identity = identity
    for a in nonzero:
        if not any(ring.mul(a, b) == identity for b in nonzero):
            rep.failures.append(f"{ring.format(a)} has no inverse in subset")
            return rep
    rep.is_field = True
    rep.group_order = len(nonzero)
    return rep
