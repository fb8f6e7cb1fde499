"""Slow, independent reference implementations used only by the tests."""

import cmath
import itertools


def mobius(n):
    out, k = 1, 2
    while k * k <= n:
        if n % k == 0:
            n //= k
            if n % k == 0:
                return 0
            out = -out
        k += 1
    return -out if n > 1 else out


def _pmul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _pdiv_exact(a, b):
    a = list(a)
    q = [0] * (len(a) - len(b) + 1)
    for k in range(len(q) - 1, -1, -1):
        c = a[k + len(b) - 1] // b[-1]
        q[k] = c
        for j, y in enumerate(b):
            a[k + j] -= c * y
    assert not any(a), "division was not exact"
    return q


def cyclotomic_by_mobius(n):
    """Phi_n = prod_{d | n} (x^d - 1)^mu(n/d)."""
    num, den = [1], [1]
    for d in range(1, n + 1):
        if n % d == 0:
            f = [-1] + [0] * (d - 1) + [1]
            mu = mobius(n // d)
            if mu == 1:
                num = _pmul(num, f)
            elif mu == -1:
                den = _pmul(den, f)
    return tuple(_pdiv_exact(num, den))


def numeric(c):
    """Complex value of a cyclotomic integer (oracle comparison only)."""
    z = cmath.exp(2j * cmath.pi / c.order)
    return sum(a * z**k for k, a in enumerate(c.coeffs))


class NaiveField:
    """GF(p^m) as coefficient lists, multiplied by schoolbook then reduced by the given modulus."""

    def __init__(self, p, modulus):
        self.p = p
        self.mod = list(modulus)
        self.m = len(modulus) - 1

    def elements(self):
        # ascending coefficient tuples, ordered by base-p label
        for digits in itertools.product(range(self.p), repeat=self.m):
            yield tuple(reversed(digits))

    def add(self, a, b):
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def mul(self, a, b):
        prod = [0] * (2 * self.m - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                prod[i + j] += x * y
        for k in range(len(prod) - 1, self.m - 1, -1):
            c = prod[k] % self.p
            if c:
                for j in range(self.m + 1):
                    prod[k - self.m + j] -= c * self.mod[j]
        return tuple(c % self.p for c in prod[: self.m])

    def power(self, a, e):
        out = (1,) + (0,) * (self.m - 1)
        for _ in range(e):
            out = self.mul(out, a)
        return out

    def trace(self, a):
        acc = (0,) * self.m
        x = a
        for _ in range(self.m):
            acc = self.add(acc, x)
            x = self.power(x, self.p)
        assert not any(acc[1:])
        return acc[0]

    def label(self, a):
        return sum(c * self.p**k for k, c in enumerate(a))


def is_irreducible_bruteforce(f, p):
    """No root-free shortcut: test every monic factor of degree 1..deg/2 by long division mod p."""
    n = len(f) - 1
    for deg in range(1, n // 2 + 1):
        for tail in itertools.product(range(p), repeat=deg):
            g = list(tail) + [1]
            r = list(f)
            for k in range(len(r) - 1, deg - 1, -1):
                c = r[k] % p
                if c:
                    for j in range(deg + 1):
                        r[k - deg + j] -= c * g[j]
            if not any(x % p for x in r[:deg]):
                return False
    return True


def inner(u, v):
    """Numeric <u|v> of two entry lists of complex numbers."""
    return sum(a.conjugate() * b for a, b in zip(u, v))
