"""Generalised Pauli (shift and clock) operators as exact matrices.

``X|n> = |n+1 mod d>`` and ``Z|n> = omega_d^n |n>``.  Eigenvectors are never
computed; :func:`diagonalizes` only tests the exact predicate U v = lambda v.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from . import _poly
from .cyclotomic import CyclotomicInt, lcm, root_of_unity
from .mub import DEFAULT_CAP, MubSet, mub_prime_power
from .vectors import Basis, ExactMatrix, StateVector, mat_apply, mat_mul

__all__ = [
    "ExactMatrix",
    "shift_op",
    "clock_op",
    "mat_mul",
    "mat_apply",
    "eigenvalue",
    "diagonalizes",
    "pauli_family",
    "MatchingReport",
    "pauli_mub_correspondence",
]


def shift_op(d: int) -> ExactMatrix:
    if d < 1:
        raise ValueError("d must be >= 1")
    return ExactMatrix.from_ints([[int(i == (j + 1) % d) for j in range(d)] for i in range(d)], d)


def clock_op(d: int) -> ExactMatrix:
    if d < 1:
        raise ValueError("d must be >= 1")
    return ExactMatrix.diagonal([root_of_unity(d, n) for n in range(d)])


def eigenvalue(u: ExactMatrix, v: StateVector) -> Optional[CyclotomicInt]:
    """lambda with U v = lambda v, or None.

    The candidate is read off the first nonzero component and then checked on
    every component.  Only unit candidates (roots of unity up to sign) are
    recovered; that covers every monomial operator used here.
    """
    w = mat_apply(u, v)
    n = lcm(w.order, v.order)
    ws = [e.rescale(n) for e in w.entries]
    vs = [e.rescale(n) for e in v.entries]
    lam = None
    for a, b in zip(ws, vs):
        if b:
            k = b.root_exponent()
            if k is not None:
                lam = a * root_of_unity(n, -k)
            else:
                nk = (-b).root_exponent()
                if nk is None:
                    return None
                lam = -(a * root_of_unity(n, -nk))
            break
    if lam is None:
        return None
    if all(a == lam * b for a, b in zip(ws, vs)):
        return lam
    return None


def diagonalizes(u: ExactMatrix, basis: Basis) -> bool:
    """True iff every vector of the basis is an exact eigenvector of U."""
    return all(eigenvalue(u, v) is not None for v in basis.vectors)


def pauli_family(p: int) -> List[Tuple[str, ExactMatrix]]:
    """Z, then X Z^k for k = 0..p-1."""
    x, z = shift_op(p), clock_op(p)
    out = [("Z", z)]
    zk = ExactMatrix.identity(p, p)
    for k in range(p):
        out.append(("X" if k == 0 else "XZ" if k == 1 else f"XZ^{k}", mat_mul(x, zk)))
        zk = mat_mul(zk, z)
    return out


@dataclass
class MatchingReport:
    p: int
    matching: Dict[int, str] = field(default_factory=dict)  # basis index -> operator name
    eigenvalues: Dict[int, List[CyclotomicInt]] = field(default_factory=dict)
    candidates: Dict[int, List[str]] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return len(self.matching) == self.p + 1


def _perfect_matching(adj: Dict[int, List[int]], right: int) -> Optional[Dict[int, int]]:
    match_r: Dict[int, int] = {}

    def augment(u, seen):
        for v in adj[u]:
            if v in seen:
                continue
            seen.add(v)
            if v not in match_r or augment(match_r[v], seen):
                match_r[v] = u
                return True
        return False

    for u in adj:
        if not augment(u, set()):
            return None
    return {u: v for v, u in match_r.items()}


def pauli_mub_correspondence(p: int, mubs: Optional[MubSet] = None, cap: int = DEFAULT_CAP) -> MatchingReport:
    """Match the p + 1 constructed bases to {Z, X Z^k} by exhaustive eigen-tests."""
    if not _poly.is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p > cap:
        raise ValueError("prime exceeds the cap")
    if mubs is None:
        mubs = mub_prime_power(p, cap)
    ops = pauli_family(p)
    rep = MatchingReport(p)
    adj = {}
    for i, b in enumerate(mubs.bases):
        adj[i] = [j for j, (_, u) in enumerate(ops) if diagonalizes(u, b)]
        rep.candidates[i] = [ops[j][0] for j in adj[i]]
    m = _perfect_matching(adj, len(ops)) if len(mubs.bases) == len(ops) else None
    if m is not None:
        for i, j in sorted(m.items()):
            rep.matching[i] = ops[j][0]
            rep.eigenvalues[i] = [eigenvalue(ops[j][1], v) for v in mubs.bases[i].vectors]
    return rep
