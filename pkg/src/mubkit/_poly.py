"""Dense univariate polynomials over Z and Z_n.

A polynomial is a tuple of integers in ascending degree order,
``(c0, c1, ..., cn)`` for ``c0 + c1 x + ... + cn x^n``.  Trailing zeros are
stripped, so the zero polynomial is ``()``.  When a modulus is given every
coefficient is reduced into ``range(mod)``.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from typing import Optional, Sequence, Tuple

Poly = Tuple[int, ...]


def trim(coeffs: Sequence[int], mod: Optional[int] = None) -> Poly:
    if mod is not None:
        coeffs = [c % mod for c in coeffs]
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def degree(f: Poly) -> int:
    return len(f) - 1


def add(f: Poly, g: Poly, mod: Optional[int] = None) -> Poly:
    n = max(len(f), len(g))
    out = [0] * n
    for i, c in enumerate(f):
        out[i] += c
    for i, c in enumerate(g):
        out[i] += c
    return trim(out, mod)


def sub(f: Poly, g: Poly, mod: Optional[int] = None) -> Poly:
    return add(f, tuple(-c for c in g), mod)


def mul(f: Poly, g: Poly, mod: Optional[int] = None) -> Poly:
    if not f or not g:
        return ()
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return trim(out, mod)


def scale(f: Poly, c: int, mod: Optional[int] = None) -> Poly:
    return trim([c * a for a in f], mod)


def divmod_poly(f: Poly, g: Poly, mod: Optional[int] = None) -> Tuple[Poly, Poly]:
    """Quotient and remainder of ``f`` by ``g``.

    Over Z (``mod=None``) the leading coefficient of ``g`` must be +1 or -1 so
    that the division is exact in Z[x]; over Z_n it must be a unit mod n.
    """
    g = trim(g, mod)
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    lead = g[-1]
    if mod is None:
        if lead not in (1, -1):
            raise ValueError("divisor must be monic (up to sign) over Z")
        inv = lead
    else:
        inv = pow(lead, -1, mod)
    rem = list(trim(f, mod))
    dg = len(g) - 1
    if len(rem) <= dg:
        return (), tuple(rem)
    quot = [0] * (len(rem) - dg)
    for k in range(len(rem) - 1, dg - 1, -1):
        c = rem[k] * inv
        if mod is not None:
            c %= mod
        if c == 0:
            continue
        quot[k - dg] = c
        for j, b in enumerate(g):
            rem[k - dg + j] -= c * b
        if mod is not None:
            for j in range(k - dg, k + 1):
                rem[j] %= mod
    return trim(quot, mod), trim(rem[:dg], mod)


def rem(f: Poly, g: Poly, mod: Optional[int] = None) -> Poly:
    return divmod_poly(f, g, mod)[1]


def powmod(f: Poly, e: int, g: Poly, mod: int) -> Poly:
    """``f**e`` reduced modulo the polynomial ``g`` and the integer ``mod``."""
    result: Poly = (1 % mod,) if mod > 1 else ()
    result = trim(result, mod)
    base = rem(f, g, mod)
    while e > 0:
        if e & 1:
            result = rem(mul(result, base, mod), g, mod)
        base = rem(mul(base, base, mod), g, mod)
        e >>= 1
    return result


def evaluate(f: Poly, x: int, mod: Optional[int] = None) -> int:
    acc = 0
    for c in reversed(f):
        acc = acc * x + c
        if mod is not None:
            acc %= mod
    return acc


def format_poly(f: Sequence[int], var: str = "x", sep: str = "+") -> str:
    """Render ascending coefficients as ``1+3x+2x^2`` (the notation of printed tables)."""
    terms = []
    for k, c in enumerate(f):
        if c == 0:
            continue
        if k == 0:
            terms.append(str(c))
            continue
        mono = var if k == 1 else f"{var}^{k}"
        if c == 1:
            terms.append(mono)
        elif c == -1:
            terms.append("-" + mono)
        else:
            terms.append(f"{c}{mono}")
    if not terms:
        return "0"
    out = terms[0]
    for t in terms[1:]:
        out += t if t.startswith("-") else sep + t
    return out


# -- integer helpers -------------------------------------------------------


def factorize(n: int) -> dict:
    """Prime factorisation by trial division (desk-scale inputs only)."""
    if n < 1:
        raise ValueError("factorize expects a positive integer")
    out: dict = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n) == {n: 1}


def prime_power(q: int) -> Optional[Tuple[int, int]]:
    """Return ``(p, m)`` with ``q == p**m`` or ``None`` if q is not a prime power."""
    if q < 2:
        return None
    f = factorize(q)
    if len(f) != 1:
        return None
    (p, m), = f.items()
    return p, m


# -- irreducibility and primitivity over Z_p -------------------------------


def monic_polys(p: int, deg: int):
    """All monic degree-``deg`` polynomials over Z_p.

    Ordered so that the coefficient tuple read from the highest non-leading
    degree down to the constant term increases lexicographically.
    """
    for tail in product(range(p), repeat=deg):
        yield tuple(reversed(tail)) + (1,)


def is_irreducible(f: Poly, p: int) -> bool:
    f = trim(f, p)
    n = degree(f)
    if n < 1:
        return False
    if n == 1:
        return True
    for d in range(1, n // 2 + 1):
        for g in monic_polys(p, d):
            if not rem(f, g, p):
                return False
    return True


def multiplicative_order_of_x(f: Poly, p: int) -> int:
    """Order of the class of x in (Z_p[x]/(f))^*; f must be irreducible and f(0) != 0."""
    q = p ** degree(f)
    group = q - 1
    order = group
    for r in factorize(group):
        while order % r == 0 and powmod((0, 1), order // r, f, p) == (1,):
            order //= r
    return order


def is_primitive(f: Poly, p: int) -> bool:
    f = trim(f, p)
    if not is_irreducible(f, p) or f[0] == 0:
        return False
    return multiplicative_order_of_x(f, p) == p ** degree(f) - 1


@lru_cache(maxsize=None)
def smallest_primitive(p: int, m: int) -> Poly:
    for f in monic_polys(p, m):
        if is_primitive(f, p):
            return f
    raise ValueError(f"no primitive polynomial of degree {m} over Z_{p}")  # pragma: no cover
