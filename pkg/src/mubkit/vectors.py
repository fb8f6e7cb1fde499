"""Exact state vectors, bases and matrices over Z[zeta_N].

A :class:`StateVector` stores unnormalised entries together with an integer
``scale_sq`` s; the physical amplitudes are ``entry / sqrt(s)``.

Bulk inner products go through the *group ring* Z[C_N]: an entry is lifted
to its N coefficients on 1, z, ..., z^(N-1), conjugation reverses exponents,
products are cyclic convolutions, and the final reduction modulo Phi_N is the
linear map given by :func:`~mubkit.cyclotomic.reduction_matrix`.  Reduction is
a ring homomorphism compatible with conjugation, so the result is the exact
canonical value.  Arrays use int64 when a coefficient bound proves it safe
and Python integers (``dtype=object``) otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .cyclotomic import CyclotomicInt, lcm, reduction_matrix, root_of_unity, totient

__all__ = [
    "StateVector",
    "Basis",
    "ExactMatrix",
    "computational_basis",
    "canonical_phase",
    "lift",
    "gram",
    "abs_squared_array",
]

_SAFE = 2**62


# -- group ring arrays -------------------------------------------------------


def _pick_dtype(bound: int):
    return np.int64 if bound < _SAFE else object


def _maxabs(a: np.ndarray) -> int:
    if a.size == 0:
        return 0
    return int(np.max(np.abs(a)))


def lift(entries: Sequence[Sequence[CyclotomicInt]], order: int) -> np.ndarray:
    """Group-ring coefficients of a 2-D table of entries, shape (rows, cols, order)."""
    phi = totient(order)
    rows = [[e.rescale(order).coeffs for e in row] for row in entries]
    big = max((abs(c) for row in rows for cs in row for c in cs), default=0)
    out = np.zeros((len(rows), len(rows[0]) if rows else 0, order), dtype=_pick_dtype(big))
    if rows and rows[0]:
        out[:, :, :phi] = np.array(rows, dtype=out.dtype)
    return out


def ring_conj(a: np.ndarray) -> np.ndarray:
    # z^k -> z^(-k)
    return np.roll(a[..., ::-1], 1, axis=-1)


def ring_matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """(p, q, N) x (q, r, N) -> (p, r, N) with cyclic convolution on the last axis."""
    p, q, n = a.shape
    q2, r, n2 = b.shape
    assert q == q2 and n == n2
    bound = q * n * _maxabs(a) * _maxabs(b)
    dt = _pick_dtype(bound)
    a = a.astype(dt)
    b = b.astype(dt)
    out = np.zeros((p, r, n), dtype=dt)
    for j in range(n):
        aj = a[:, :, j]
        if not aj.any():
            continue
        # c[.., k] += a[.., j] * b[.., k - j]
        rolled = np.roll(b, j, axis=-1).reshape(q, r * n)
        out += (aj @ rolled).reshape(p, r, n)
    return out


def ring_mul_elementwise(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    n = a.shape[-1]
    bound = n * _maxabs(a) * _maxabs(b)
    dt = _pick_dtype(bound)
    a = a.astype(dt)
    b = b.astype(dt)
    out = np.zeros(np.broadcast_shapes(a.shape, b.shape), dtype=dt)
    for j in range(n):
        aj = a[..., j : j + 1]
        if not aj.any():
            continue
        out += aj * np.roll(b, j, axis=-1)
    return out


def ring_reduce(a: np.ndarray) -> np.ndarray:
    """Canonical coordinates (..., phi(N)) of group-ring arrays (..., N)."""
    n = a.shape[-1]
    r = reduction_matrix(n)
    bound = n * _maxabs(a) * int(np.max(np.abs(r)))
    dt = _pick_dtype(bound)
    return a.astype(dt) @ r.astype(dt)


def gram(us: Sequence["StateVector"], vs: Sequence["StateVector"], order: Optional[int] = None) -> np.ndarray:
    """Raw inner products <u_i|v_j> as canonical coordinates, shape (len(us), len(vs), phi)."""
    if order is None:
        order = lcm(*(v.order for v in list(us) + list(vs)))
    u = lift([v.entries for v in us], order)
    w = lift([v.entries for v in vs], order)
    g = ring_matmul(ring_conj(u), w.transpose(1, 0, 2))
    return ring_reduce(g)


def _unreduced_gram(us, vs, order):
    u = lift([v.entries for v in us], order)
    w = lift([v.entries for v in vs], order)
    return ring_matmul(ring_conj(u), w.transpose(1, 0, 2))


def abs_squared_array(us: Sequence["StateVector"], vs: Sequence["StateVector"], order: Optional[int] = None):
    """(inner products, |inner products|^2), both as canonical coordinate arrays."""
    if order is None:
        order = lcm(*(v.order for v in list(us) + list(vs)))
    g = _unreduced_gram(us, vs, order)
    sq = ring_mul_elementwise(g, ring_conj(g))
    return ring_reduce(g), ring_reduce(sq)


def to_cyclotomic(coords: Sequence[int], order: int) -> CyclotomicInt:
    return CyclotomicInt._raw(order, tuple(int(c) for c in coords))


# -- vectors -------------------------------------------------------------------


@dataclass(frozen=True)
class StateVector:
    """Entries over Z[zeta_N] with amplitude ``entry / sqrt(scale_sq)``."""

    entries: Tuple[CyclotomicInt, ...]
    scale_sq: int = 1

    def __post_init__(self):
        entries = tuple(self.entries)
        if not entries:
            raise ValueError("empty state vector")
        orders = {e.order for e in entries}
        if len(orders) != 1:
            n = lcm(*orders)
            entries = tuple(e.rescale(n) for e in entries)
        object.__setattr__(self, "entries", entries)
        if self.scale_sq < 1:
            raise ValueError("scale_sq must be a positive integer")

    @classmethod
    def from_exponents(cls, exps: Sequence[Optional[int]], order: int, scale_sq: int) -> "StateVector":
        """Entries zeta_order^k (``None`` for a zero entry)."""
        zero = CyclotomicInt.integer(0, order)
        return cls(tuple(zero if k is None else root_of_unity(order, k) for k in exps), scale_sq)

    @classmethod
    def basis_state(cls, dim: int, index: int, order: int = 1) -> "StateVector":
        return cls(tuple(CyclotomicInt.integer(int(i == index), order) for i in range(dim)), 1)

    @property
    def dim(self) -> int:
        return len(self.entries)

    @property
    def order(self) -> int:
        return self.entries[0].order

    def rescale(self, order: int) -> "StateVector":
        if order == self.order:
            return self
        return StateVector(tuple(e.rescale(order) for e in self.entries), self.scale_sq)

    def inner(self, other: "StateVector") -> CyclotomicInt:
        """Raw (unnormalised) <self|other>, computed entry by entry."""
        n = lcm(self.order, other.order)
        acc = CyclotomicInt.integer(0, n)
        for a, b in zip(self.entries, other.entries):
            acc = acc + a.rescale(n).conjugate() * b.rescale(n)
        return acc

    def norm_sq(self) -> CyclotomicInt:
        return self.inner(self)

    def is_unit(self) -> bool:
        return self.norm_sq() == self.scale_sq

    def scaled(self, c: CyclotomicInt) -> "StateVector":
        n = lcm(self.order, c.order)
        c = c.rescale(n)
        return StateVector(tuple(c * e.rescale(n) for e in self.entries), self.scale_sq)

    def tensor(self, other: "StateVector") -> "StateVector":
        n = lcm(self.order, other.order)
        left = [e.rescale(n) for e in self.entries]
        right = [e.rescale(n) for e in other.entries]
        return StateVector(tuple(a * b for a in left for b in right), self.scale_sq * other.scale_sq)

    def with_entry(self, index: int, value: CyclotomicInt) -> "StateVector":
        entries = list(self.entries)
        entries[index] = value.rescale(self.order) if value.order != self.order else value
        return StateVector(tuple(entries), self.scale_sq)

    def __str__(self):
        body = ", ".join(str(e) for e in self.entries)
        return f"({body})/sqrt({self.scale_sq})" if self.scale_sq != 1 else f"({body})"


def canonical_phase(v: StateVector) -> StateVector:
    """Multiply by a root of unity so the first nonzero entry is 1.

    Vectors whose first nonzero entry is not a root of unity are returned
    unchanged.
    """
    for e in v.entries:
        if e:
            k = e.root_exponent()
            if k is None or k == 0:
                return v
            return v.scaled(root_of_unity(v.order, -k))
    return v


@dataclass(frozen=True)
class Basis:
    """An ordered list of d state vectors of dimension d sharing one cyclotomic order."""

    vectors: Tuple[StateVector, ...]
    label: str = ""

    def __post_init__(self):
        vecs = tuple(self.vectors)
        if not vecs:
            raise ValueError("empty basis")
        dims = {v.dim for v in vecs}
        if len(dims) != 1:
            raise ValueError("basis vectors differ in dimension")
        n = lcm(*(v.order for v in vecs))
        object.__setattr__(self, "vectors", tuple(v.rescale(n) for v in vecs))

    @property
    def dim(self) -> int:
        return self.vectors[0].dim

    @property
    def order(self) -> int:
        return self.vectors[0].order

    def __len__(self):
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)

    def __getitem__(self, i):
        return self.vectors[i]

    def rescale(self, order: int) -> "Basis":
        return Basis(tuple(v.rescale(order) for v in self.vectors), self.label)

    def rows(self) -> List[List[CyclotomicInt]]:
        return [list(v.entries) for v in self.vectors]

    def orthonormality_failures(self) -> List[Tuple[int, int]]:
        """Index pairs (i, j) where <v_i|v_j> differs from s_i * delta_ij."""
        g = gram(self.vectors, self.vectors, self.order)
        bad = []
        for i, vi in enumerate(self.vectors):
            for j, vj in enumerate(self.vectors):
                want = vi.scale_sq if i == j else 0
                if g[i, j, 0] != want or g[i, j, 1:].any():
                    bad.append((i, j))
        return bad

    def is_orthonormal(self) -> bool:
        return len(self.vectors) == self.dim and not self.orthonormality_failures()

    def tensor(self, other: "Basis") -> "Basis":
        """Vector (i, j) of the product sits at index i * len(other) + j."""
        label = f"{self.label}(x){other.label}" if self.label or other.label else ""
        return Basis(tuple(a.tensor(b) for a in self.vectors for b in other.vectors), label)


def computational_basis(d: int, order: int = 1) -> Basis:
    return Basis(tuple(StateVector.basis_state(d, i, order) for i in range(d)), "computational")


# -- matrices --------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class ExactMatrix:
    """Matrix ``entries / denominator`` with entries in Z[zeta_N].

    The fraction is kept reduced (positive denominator coprime to the content
    of the entries), so equal matrices compare equal.
    """

    entries: Tuple[Tuple[CyclotomicInt, ...], ...]
    denominator: int = 1

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.entries)
        if not rows or not rows[0]:
            raise ValueError("empty matrix")
        if len({len(r) for r in rows}) != 1:
            raise ValueError("ragged matrix")
        n = lcm(*(e.order for r in rows for e in r))
        rows = tuple(tuple(e.rescale(n) for e in r) for r in rows)
        den = self.denominator
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            rows = tuple(tuple(-e for e in r) for r in rows)
            den = -den
        g = den
        for r in rows:
            for e in r:
                for c in e.coeffs:
                    g = gcd(g, c)
        if g > 1:
            rows = tuple(tuple(CyclotomicInt._raw(n, tuple(c // g for c in e.coeffs)) for e in r) for r in rows)
            den //= g
        object.__setattr__(self, "entries", rows)
        object.__setattr__(self, "denominator", den)

    def __eq__(self, other):
        # value equality, independent of the cyclotomic order the entries are written in
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if self.shape != other.shape or self.denominator != other.denominator:
            return False
        n = lcm(self.order, other.order)
        return all(
            a.rescale(n) == b.rescale(n) for ra, rb in zip(self.entries, other.entries) for a, b in zip(ra, rb)
        )

    def __hash__(self):
        return hash((self.shape, self.denominator))

    @classmethod
    def from_ints(cls, rows: Sequence[Sequence[int]], order: int = 1, denominator: int = 1) -> "ExactMatrix":
        return cls(tuple(tuple(CyclotomicInt.integer(c, order) for c in r) for r in rows), denominator)

    @classmethod
    def identity(cls, d: int, order: int = 1) -> "ExactMatrix":
        return cls.from_ints([[int(i == j) for j in range(d)] for i in range(d)], order)

    @classmethod
    def diagonal(cls, values: Sequence[CyclotomicInt]) -> "ExactMatrix":
        n = lcm(*(v.order for v in values))
        z = CyclotomicInt.integer(0, n)
        return cls(tuple(tuple(v if i == j else z for j in range(len(values))) for i, v in enumerate(values)))

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.entries), len(self.entries[0])

    @property
    def order(self) -> int:
        return self.entries[0][0].order

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        return mat_mul(self, other)

    def scalar(self, c) -> "ExactMatrix":
        if isinstance(c, int):
            c = CyclotomicInt.integer(c, self.order)
        n = lcm(self.order, c.order)
        c = c.rescale(n)
        return ExactMatrix(tuple(tuple(c * e.rescale(n) for e in r) for r in self.entries), self.denominator)

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        n = lcm(self.order, other.order)
        den = self.denominator * other.denominator // gcd(self.denominator, other.denominator)
        fa, fb = den // self.denominator, den // other.denominator
        return ExactMatrix(
            tuple(
                tuple(a.rescale(n) * fa + b.rescale(n) * fb for a, b in zip(ra, rb))
                for ra, rb in zip(self.entries, other.entries)
            ),
            den,
        )

    def dagger(self) -> "ExactMatrix":
        rows, cols = self.shape
        return ExactMatrix(
            tuple(tuple(self.entries[i][j].conjugate() for i in range(rows)) for j in range(cols)),
            self.denominator,
        )

    def power(self, e: int) -> "ExactMatrix":
        out = ExactMatrix.identity(self.shape[0], self.order)
        for _ in range(e):
            out = out @ self
        return out

    def __str__(self):
        body = "\n".join("[" + ", ".join(str(e) for e in r) + "]" for r in self.entries)
        return body if self.denominator == 1 else f"(1/{self.denominator}) *\n{body}"


def _as_array(m: ExactMatrix, order: int) -> np.ndarray:
    return lift(m.entries, order)


def _from_array(coords: np.ndarray, order: int, denominator: int = 1) -> ExactMatrix:
    return ExactMatrix(
        tuple(tuple(to_cyclotomic(coords[i, j], order) for j in range(coords.shape[1])) for i in range(coords.shape[0])),
        denominator,
    )


def mat_mul(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"cannot multiply {a.shape} by {b.shape}")
    n = lcm(a.order, b.order)
    prod = ring_reduce(ring_matmul(_as_array(a, n), _as_array(b, n)))
    return _from_array(prod, n, a.denominator * b.denominator)


def mat_apply(a: ExactMatrix, v: StateVector) -> StateVector:
    """A v for a matrix with denominator 1 (e.g. Pauli operators)."""
    if a.denominator != 1:
        raise ValueError("mat_apply needs an integral matrix; use apply_raw")
    return StateVector(tuple(apply_raw(a, v.entries)), v.scale_sq)


def apply_raw(a: ExactMatrix, entries: Sequence[CyclotomicInt]) -> List[CyclotomicInt]:
    """Numerators of A x; the true result is this divided by ``a.denominator``."""
    if a.shape[1] != len(entries):
        raise ValueError("dimension mismatch")
    n = lcm(a.order, *(e.order for e in entries))
    col = lift([[e] for e in entries], n)
    out = ring_reduce(ring_matmul(_as_array(a, n), col))
    return [to_cyclotomic(out[i, 0], n) for i in range(out.shape[0])]


def outer(u: StateVector, v: StateVector) -> ExactMatrix:
    """|u><v| without normalisation."""
    n = lcm(u.order, v.order)
    return ExactMatrix(tuple(tuple(a.rescale(n) * b.rescale(n).conjugate() for b in v.entries) for a in u.entries))
