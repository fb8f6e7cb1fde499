"""Finite fields GF(p^m) as residue classes of polynomials over Z_p.

Elements carry an integer *label* ``code = c0 + c1 p + ... + c_{m-1} p^(m-1)``
built from their coefficient vector.  Labels are what the MUB constructions
use to identify vector positions with field elements; for m = 1 the label is
the residue itself.  The element *enumeration* ``ctx.elements`` instead
follows the power order 0, 1, alpha, alpha^2, ... of the printed tables.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, List, Optional, Sequence, Tuple

from . import _poly

__all__ = [
    "FieldContext",
    "FieldElement",
    "GF",
    "find_modulus",
    "trace",
    "TableRow",
    "representation_table",
    "render_table",
    "render_representation_table",
    "table_records",
]


def find_modulus(p: int, m: int) -> _poly.Poly:
    """The canonical primitive modulus of GF(p^m).

    Candidates are monic degree-m polynomials ordered lexicographically by
    their coefficients from degree m-1 down to the constant term; the first
    primitive one is returned.  For p = 2 this gives x^2+x+1, x^3+x+1 and
    x^4+x+1.
    """
    if m < 1:
        raise ValueError("extension degree must be >= 1")
    if not _poly.is_prime(p):
        raise ValueError(f"{p} is not prime")
    return _poly.smallest_primitive(p, m)


class FieldContext:
    """GF(p^m) defined by a monic irreducible ``modulus`` over Z_p.

    When the class of x is not primitive (possible with a user supplied
    modulus) the smallest-label primitive element is used as ``alpha``.
    """

    def __init__(self, p: int, m: int, modulus: Optional[Sequence[int]] = None):
        if m < 1:
            raise ValueError("extension degree must be >= 1")
        if not _poly.is_prime(p):
            raise ValueError(f"{p} is not prime")
        if modulus is None:
            modulus = find_modulus(p, m)
        modulus = _poly.trim(modulus, p)
        if len(modulus) != m + 1 or modulus[-1] != 1:
            raise ValueError(f"modulus must be monic of degree {m}")
        if not _poly.is_irreducible(modulus, p):
            raise ValueError(f"{_poly.format_poly(modulus)} is reducible over Z_{p}")
        self.p = p
        self.m = m
        self.q = p**m
        self.modulus = modulus
        self._digits: List[Tuple[int, ...]] = [self._to_digits(c) for c in range(self.q)]
        self._build_tables()

    # -- construction helpers --------------------------------------------

    def _to_digits(self, code: int) -> Tuple[int, ...]:
        out = []
        for _ in range(self.m):
            code, r = divmod(code, self.p)
            out.append(r)
        return tuple(out)

    def _from_digits(self, digits: Sequence[int]) -> int:
        code = 0
        for c in reversed(digits):
            code = code * self.p + c % self.p
        return code

    def _poly_mulmod(self, a: int, b: int) -> int:
        prod = _poly.mul(self._digits[a], self._digits[b], self.p)
        r = _poly.rem(prod, self.modulus, self.p)
        return self._from_digits(r)

    def _build_tables(self) -> None:
        q = self.q
        gen = None
        x_class = self._from_digits(_poly.rem((0, 1), self.modulus, self.p))
        for cand in [x_class] + list(range(1, q)):
            if cand == 0:
                continue
            seen, x = 1, cand
            while x != 1:
                x = self._poly_mulmod(x, cand)
                seen += 1
            if seen == q - 1:
                gen = cand
                break
        assert gen is not None
        exp = [1]
        for _ in range(q - 2):
            exp.append(self._poly_mulmod(exp[-1], gen))
        self._exp = exp
        self._log = {c: k for k, c in enumerate(exp)}
        if len(self._log) != q - 1:  # pragma: no cover - guarded by irreducibility
            raise ArithmeticError("generator search failed")
        self._alpha = gen
        self._add = None
        if q <= 256:
            self._add = [[self._add_digits(a, b) for b in range(q)] for a in range(q)]
        self._trace = [self._trace_of(c) for c in range(q)]

    def _add_digits(self, a: int, b: int) -> int:
        da, db = self._digits[a], self._digits[b]
        return self._from_digits([(x + y) % self.p for x, y in zip(da, db)])

    def _trace_of(self, code: int) -> int:
        acc, x = 0, code
        for _ in range(self.m):
            acc = self.add_codes(acc, x)
            x = self.pow_code(x, self.p)
        digits = self._digits[acc]
        assert not any(digits[1:])
        return digits[0]

    # -- code level arithmetic (used by hot loops) ------------------------

    def add_codes(self, a: int, b: int) -> int:
        if self._add is not None:
            return self._add[a][b]
        return self._add_digits(a, b)

    def neg_code(self, a: int) -> int:
        return self._from_digits([-c for c in self._digits[a]])

    def mul_codes(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def pow_code(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("zero has no inverse")
            return 1 if e == 0 else 0
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    def trace_code(self, a: int) -> int:
        return self._trace[a]

    # -- element level -----------------------------------------------------

    def __call__(self, value) -> "FieldElement":
        """Element from an integer label or an ascending coefficient sequence."""
        if isinstance(value, FieldElement):
            if value.ctx != self:
                raise ValueError("element belongs to a different field")
            return value
        if isinstance(value, int):
            if not 0 <= value < self.q:
                raise ValueError(f"label {value} out of range for GF({self.q})")
            return FieldElement(self, value)
        coeffs = list(value)
        if len(coeffs) > self.m:
            coeffs = list(_poly.rem(_poly.trim(coeffs, self.p), self.modulus, self.p))
        return FieldElement(self, self._from_digits(coeffs))

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    @property
    def alpha(self) -> "FieldElement":
        return FieldElement(self, self._alpha)

    @property
    def elements(self) -> Tuple["FieldElement", ...]:
        """All elements in power order: 0, 1, alpha, ..., alpha^(q-2)."""
        return (self.zero,) + tuple(FieldElement(self, c) for c in self._exp)

    def by_label(self) -> Tuple["FieldElement", ...]:
        """All elements ordered by integer label."""
        return tuple(FieldElement(self, c) for c in range(self.q))

    def log(self, a: "FieldElement") -> int:
        if a.code == 0:
            raise ValueError("zero has no discrete logarithm")
        return self._log[a.code]

    def __eq__(self, other):
        return isinstance(other, FieldContext) and (self.p, self.modulus) == (other.p, other.modulus)

    def __hash__(self):
        return hash((self.p, self.modulus))

    def __repr__(self):
        return f"GF({self.p}^{self.m}, modulus={_poly.format_poly(self.modulus)})"


@lru_cache(maxsize=None)
def GF(p: int, m: int = 1, modulus: Optional[Tuple[int, ...]] = None) -> FieldContext:
    """Cached field context constructor."""
    return FieldContext(p, m, modulus)


class FieldElement:
    """An element of GF(p^m); supports ``+ - * / **`` within one context."""

    __slots__ = ("ctx", "code")

    def __init__(self, ctx: FieldContext, code: int):
        self.ctx = ctx
        self.code = code

    @property
    def coeffs(self) -> Tuple[int, ...]:
        return self.ctx._digits[self.code]

    def _other(self, other) -> "FieldElement":
        if isinstance(other, int):
            return self.ctx(self.ctx._from_digits([other]))
        if not isinstance(other, FieldElement):
            return NotImplemented
        if other.ctx is not self.ctx and other.ctx != self.ctx:
            raise ValueError("operands live in different fields")
        return other

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.ctx, self.ctx.add_codes(self.code, o.code))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.ctx, self.ctx.neg_code(self.code))

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
        return FieldElement(self.ctx, self.ctx.mul_codes(self.code, o.code))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        return FieldElement(self.ctx, self.ctx.pow_code(self.code, e))

    def inverse(self) -> "FieldElement":
        return self ** -1

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def frobenius(self) -> "FieldElement":
        return self ** self.ctx.p

    def trace(self) -> int:
        return self.ctx.trace_code(self.code)

    def __bool__(self):
        return self.code != 0

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.code == other.code and self.ctx == other.ctx
        if isinstance(other, int):
            return self.code == self.ctx._from_digits([other])
        return NotImplemented

    def __hash__(self):
        return hash((self.ctx, self.code))

    def __str__(self):
        return _poly.format_poly(self.coeffs)

    def __repr__(self):
        return f"<{self} in GF({self.ctx.q})>"


def trace(e: FieldElement) -> int:
    """Absolute trace E + E^p + ... + E^(p^(m-1)), as an integer in {0, ..., p-1}."""
    return e.trace()


# -- element tables ----------------------------------------------------------


@dataclass(frozen=True)
class TableRow:
    power: Optional[int]  # None for the zero element
    polynomial: str
    digits: Tuple[int, ...]  # highest degree first

    def power_label(self, symbol: str = "α") -> str:
        if self.power is None:
            return "0"
        if self.power == 0:
            return "1"
        return symbol if self.power == 1 else f"{symbol}^{self.power}"


def representation_table(p: int, m: int, modulus: Optional[Sequence[int]] = None) -> List[TableRow]:
    """Rows 0, alpha^0, ..., alpha^(q-2) with polynomial and tuple forms."""
    ctx = GF(p, m, tuple(modulus) if modulus is not None else None)
    rows = [TableRow(None, "0", (0,) * m)]
    for k, e in enumerate(ctx.elements[1:]):
        rows.append(TableRow(k, _poly.format_poly(e.coeffs), tuple(reversed(e.coeffs))))
    return rows


def _tuple_str(t: Sequence[int]) -> str:
    return "(" + ",".join(str(c) for c in t) + ")"


def render_table(headers: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    """Align columns with ``|`` separators."""
    widths = [max(len(h), *(len(r[i]) for r in rows)) for i, h in enumerate(headers)]
    fmt = lambda cells: " | ".join(c.ljust(w) for c, w in zip(cells, widths)).rstrip()
    lines = [fmt(headers), "-+-".join("-" * w for w in widths)]
    lines += [fmt(r) for r in rows]
    return "\n".join(lines)


def render_representation_table(rows: Sequence[TableRow], symbol: str = "α") -> str:
    m = len(rows[0].digits)
    return render_table(
        ["power", "polynomial", f"{m}-tuple"],
        [[r.power_label(symbol), r.polynomial, _tuple_str(r.digits)] for r in rows],
    )


def table_records(rows: Sequence[TableRow]) -> Iterator[str]:
    """One JSON object per element."""
    for r in rows:
        yield json.dumps({"power": r.power, "polynomial": r.polynomial, "tuple": list(r.digits)})
