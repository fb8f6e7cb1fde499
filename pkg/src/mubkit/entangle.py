"""Generalised Bell states and exact maximal-entanglement checks.

A two-qudit state |n, n'> lives at flat index ``n * d + n'``.  Every family
here places the entries of a single-qudit vector v on the "diagonal"
``|n, n (+) h>``; unimodular v then gives a maximally entangled state, and
different shifts h have disjoint supports.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import isqrt
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from . import _poly
from .cyclotomic import CyclotomicInt, lcm, root_of_unity
from .finite_field import GF
from .mub import DEFAULT_CAP, mub_composite, mub_even
from .vectors import (
    ExactMatrix,
    StateVector,
    abs_squared_array,
    canonical_phase,
    lift,
    ring_conj,
    ring_matmul,
    ring_reduce,
    to_cyclotomic,
)

__all__ = [
    "BellState",
    "BellFamily",
    "bell_basis",
    "bell_even",
    "bell_odd",
    "bell_composite",
    "bell_family",
    "partial_trace_second",
    "partial_trace_first",
    "BellReport",
    "verify_bell_family",
]


@dataclass(frozen=True)
class BellState:
    """A two-qudit state with labels: shift h, partial-basis index a, vector index b.

    For the plain Fourier family ``a`` is None and ``b`` is the Fourier index k.
    """

    vector: StateVector
    h: int
    a: Optional[int]
    b: int


@dataclass(frozen=True)
class BellFamily:
    """``sets[h][a][b]``: for each shift h, partial bases a of d vectors b."""

    dim: int
    route: str
    sets: Tuple[Tuple[Tuple[BellState, ...], ...], ...]
    provenance: Dict = field(default_factory=dict)

    def states(self) -> List[BellState]:
        return [s for layer in self.sets for part in layer for s in part]

    def layer(self, h: int, a: int = 0) -> Tuple[BellState, ...]:
        return self.sets[h][a]


def _embed(v: StateVector, h: int, shift: Callable[[int, int], int]) -> StateVector:
    d = v.dim
    zero = CyclotomicInt.integer(0, v.order)
    entries = [zero] * (d * d)
    for n, e in enumerate(v.entries):
        entries[n * d + shift(n, h)] = e
    return StateVector(tuple(entries), v.scale_sq)


def _mod_shift(d: int) -> Callable[[int, int], int]:
    return lambda n, h: (n + h) % d


def _family(d, route, partial_bases, shift, prov, refined=True) -> BellFamily:
    sets = []
    for h in range(d):
        layer = []
        for ai, vecs in enumerate(partial_bases):
            layer.append(
                tuple(BellState(_embed(v, h, shift), h, ai if refined else None, b) for b, v in enumerate(vecs))
            )
        sets.append(tuple(layer))
    return BellFamily(d, route, tuple(sets), prov)


def bell_basis(d: int, cap: int = DEFAULT_CAP) -> BellFamily:
    """The d^2 states sum_n omega_d^(k n) |n, n+h> / sqrt(d)."""
    if d < 2:
        raise ValueError("d must be >= 2")
    if d > cap:
        raise ValueError("dimension exceeds the cap")
    vecs = [StateVector.from_exponents([k * n for n in range(d)], d, d) for k in range(d)]
    return _family(d, "fourier", [vecs], _mod_shift(d), {"route": "fourier"}, refined=False)


def bell_even(m: int, cap: int = DEFAULT_CAP) -> BellFamily:
    """Partial bases i^tr((a + 2b) n) |n, n+h> over the Teichmuller set of GR(4^m)."""
    d = 2**m
    mubs = mub_even(m, cap)
    parts = [b.vectors for b in mubs.bases[1:]]
    return _family(d, "ring", parts, _mod_shift(d), {"route": "ring", "m": m, "lift": list(mubs.provenance["lift"])})


def bell_odd(p: int, m: int = 1, cap: int = DEFAULT_CAP, root: str = "p") -> BellFamily:
    """Partial bases w^tr((a n + b) n) |n, n (+) h> over GF(p^m).

    ``root="p"`` uses w = omega_p (the trace lies in Z_p); ``root="d"`` uses the
    literal omega_{p^m}, which agrees for m = 1 only.  The shift (+) is field
    addition on element labels.
    """
    if p == 2 or not _poly.is_prime(p):
        raise ValueError("bell_odd needs an odd prime")
    if root not in ("p", "d"):
        raise ValueError("root must be 'p' or 'd'")
    d = p**m
    if d > cap:
        raise ValueError("dimension exceeds the cap")
    ctx = GF(p, m)
    order = p if root == "p" else d
    parts = []
    for a in range(d):
        vecs = []
        for b in range(d):
            exps = [ctx.trace_code(ctx.mul_codes(ctx.add_codes(ctx.mul_codes(a, n), b), n)) for n in range(d)]
            vecs.append(canonical_phase(StateVector.from_exponents(exps, order, d)))
        parts.append(vecs)
    return _family(d, "field", parts, ctx.add_codes, {"route": "field", "p": p, "m": m, "root": root})


def bell_composite(d: int, cap: int = DEFAULT_CAP) -> BellFamily:
    """min_i(p_i^e_i) layers built from the non-computational tensor-product bases."""
    fac = _poly.factorize(d)
    if len(fac) < 2:
        raise ValueError(f"{d} is not a composite non-prime-power dimension")
    mubs = mub_composite(d, cap)
    parts = [b.vectors for b in mubs.bases[1:]]
    return _family(d, "tensor", parts, _mod_shift(d), {"route": "tensor", "factors": mubs.provenance["factors"]})


def bell_family(d: int, cap: int = DEFAULT_CAP) -> BellFamily:
    """The refined family appropriate for the dimension class."""
    pm = _poly.prime_power(d)
    if pm is None:
        return bell_composite(d, cap)
    p, m = pm
    return bell_even(m, cap) if p == 2 else bell_odd(p, m, cap)


# -- partial traces -----------------------------------------------------------------


def _split(v: StateVector, split):
    if split is None:
        r = isqrt(v.dim)
        if r * r != v.dim:
            raise ValueError("dimension is not a perfect square; pass split=(d_left, d_right)")
        split = (r, r)
    dl, dr = split
    if dl * dr != v.dim:
        raise ValueError("split does not match the dimension")
    return dl, dr


def partial_trace_second(v: StateVector, split: Optional[Tuple[int, int]] = None) -> ExactMatrix:
    """rho_1[n, n''] = sum_n' v[n, n'] conj(v[n'', n']) / s."""
    dl, dr = _split(v, split)
    n = v.order
    m = lift([v.entries[i * dr : (i + 1) * dr] for i in range(dl)], n)
    rho = ring_reduce(ring_matmul(m, ring_conj(m).transpose(1, 0, 2)))
    return ExactMatrix(
        tuple(tuple(to_cyclotomic(rho[i, j], n) for j in range(dl)) for i in range(dl)), v.scale_sq
    )


def partial_trace_first(v: StateVector, split: Optional[Tuple[int, int]] = None) -> ExactMatrix:
    """rho_2[n', n''] = sum_n v[n, n'] conj(v[n, n'']) / s."""
    dl, dr = _split(v, split)
    n = v.order
    m = lift([v.entries[i * dr : (i + 1) * dr] for i in range(dl)], n)
    mt = m.transpose(1, 0, 2)
    rho = ring_reduce(ring_matmul(mt, ring_conj(m)))
    return ExactMatrix(
        tuple(tuple(to_cyclotomic(rho[i, j], n) for j in range(dr)) for i in range(dr)), v.scale_sq
    )


def is_maximally_mixed(rho: ExactMatrix) -> bool:
    d = rho.shape[0]
    return rho == ExactMatrix(ExactMatrix.identity(d, rho.order).entries, d)


# -- verification ---------------------------------------------------------------------


@dataclass
class BellReport:
    orthonormal: bool = True
    entangled: bool = True
    within_h_unbiased: bool = True
    across_h_orthogonal: bool = True
    failures: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.orthonormal and self.entangled and self.within_h_unbiased and self.across_h_orthogonal

    def _fail(self, what: str, msg: str, limit: int = 20):
        setattr(self, what, False)
        if len(self.failures) < limit:
            self.failures.append(msg)


def verify_bell_family(f: BellFamily, level: Optional[int] = None) -> BellReport:
    """Run the four exact checks.

    (i) for each partial-basis index a, the states over all h and b are
    orthonormal; (ii) every reduced state equals I/d; (iii) within one h,
    states of distinct partial bases satisfy level * |<u|v>|^2 = s_u s_v
    (level defaults to d); (iv) states with different h are orthogonal.
    """
    level = f.dim if level is None else level
    states = f.states()
    vecs = [s.vector for s in states]
    order = lcm(*(v.order for v in vecs))
    ip, sq = abs_squared_array(vecs, vecs, order)
    rep = BellReport()
    for i, si in enumerate(states):
        for j, sj in enumerate(states):
            zero_ip = not ip[i, j].any()
            if si.h != sj.h:
                if not zero_ip:
                    rep._fail("across_h_orthogonal", f"states {(si.h, si.a, si.b)} and {(sj.h, sj.a, sj.b)} overlap")
                continue
            if si.a == sj.a:
                want = si.vector.scale_sq if si.b == sj.b else 0
                if ip[i, j, 0] != want or ip[i, j, 1:].any():
                    rep._fail("orthonormal", f"states {(si.h, si.a, si.b)} and {(sj.h, sj.a, sj.b)} not orthonormal")
            elif sq[i, j, 1:].any() or sq[i, j, 0] * level != si.vector.scale_sq * sj.vector.scale_sq:
                rep._fail(
                    "within_h_unbiased",
                    f"states {(si.h, si.a, si.b)} and {(sj.h, sj.a, sj.b)}: |<u|v>|^2 = {to_cyclotomic(sq[i, j], order)}",
                )
    # across-h pairs with equal a are covered by (iv); (i) also needs them zero, already enforced
    for s in states:
        if not is_maximally_mixed(partial_trace_second(s.vector)):
            rep._fail("entangled", f"state {(s.h, s.a, s.b)} is not maximally entangled")
    return rep
