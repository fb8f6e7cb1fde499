"""Constructions of mutually unbiased bases and their exact verification.

Routes:

* Fourier / quantum gates for the simplest cases,
* odd prime powers via the finite-field trace,
  ``|theta_b^a>[n] = omega_p^tr((a n + b) n)``,
* powers of two via the Galois ring GR(4^m),
  ``|theta_b^a>[n] = i^tr((a + 2b) n)`` with a, b, n in the Teichmuller set,
* composite dimensions via tensor products of the prime-power factors.

Vector positions and basis/vector indices are identified with field elements
through their integer labels (so for a prime p the index *is* the residue) and
with Teichmuller elements through their position in (0, 1, xi, xi^2, ...).
Unbiasedness is checked as an integer identity: for raw entries with scale
s_A, s_B, ``d * |<u|v>|^2 == s_A * s_B``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Dict, List, Optional, Sequence, Tuple

from . import _poly
from .cyclotomic import CyclotomicInt, lcm, root_of_unity
from .finite_field import GF
from .galois_ring import GR
from .vectors import (
    Basis,
    ExactMatrix,
    StateVector,
    abs_squared_array,
    apply_raw,
    canonical_phase,
    computational_basis,
    outer,
    to_cyclotomic,
)

__all__ = [
    "DEFAULT_CAP",
    "MubSet",
    "fourier_basis",
    "qubit_gate_bases",
    "mub_odd_prime_power",
    "mub_even",
    "mub_prime_power",
    "mub_composite",
    "mub_set",
    "tensor_product",
    "verify_unbiased_pair",
    "unbiased_pair_report",
    "verify_mub_set",
    "weil_sum",
    "PhaseOperator",
    "phase_operator",
]

DEFAULT_CAP = 128

CONSTRUCTIONS = ("auto", "fourier", "gates", "field", "ring", "tensor")


def _check_cap(d: int, cap: int) -> None:
    if d > cap:
        raise ValueError(f"dimension {d} exceeds the desk-scale cap {cap}")


@dataclass(frozen=True)
class MubSet:
    """Bases of one dimension, brought to a common cyclotomic order."""

    dim: int
    bases: Tuple[Basis, ...]
    provenance: Dict = field(default_factory=dict)

    def __post_init__(self):
        bases = tuple(self.bases)
        if bases:
            n = lcm(*(b.order for b in bases))
            bases = tuple(b.rescale(n) for b in bases)
            if any(b.dim != self.dim for b in bases):
                raise ValueError("basis dimension differs from set dimension")
        object.__setattr__(self, "bases", bases)

    @property
    def order(self) -> int:
        return self.bases[0].order if self.bases else 1

    def __len__(self):
        return len(self.bases)

    def __getitem__(self, i) -> Basis:
        return self.bases[i]


# -- elementary routes ----------------------------------------------------------


def fourier_basis(d: int) -> Basis:
    """Vectors theta_k with entries omega_d^(k n), scale d."""
    if d < 1:
        raise ValueError("d must be >= 1")
    if d == 1:
        return computational_basis(1)
    return Basis(tuple(StateVector.from_exponents([k * n for n in range(d)], d, d) for k in range(d)), "fourier")


def qubit_gate_bases() -> Tuple[Basis, Basis, Basis]:
    """Rows of I, H = [[1,1],[1,-1]]/sqrt2 and HS = [[1,i],[1,-i]]/sqrt2."""
    i_ = computational_basis(2, 4)
    h = Basis((StateVector.from_exponents([0, 0], 4, 2), StateVector.from_exponents([0, 2], 4, 2)), "H")
    hs = Basis((StateVector.from_exponents([0, 1], 4, 2), StateVector.from_exponents([0, 3], 4, 2)), "HS")
    return Basis(i_.vectors, "I"), h, hs


def mub_odd_prime_power(p: int, m: int = 1, cap: int = DEFAULT_CAP, modulus=None) -> MubSet:
    """d + 1 bases for d = p^m, p odd, from the finite-field trace formula."""
    if not _poly.is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p == 2:
        raise ValueError("characteristic 2 needs the Galois-ring route (mub_even)")
    d = p**m
    _check_cap(d, cap)
    ctx = GF(p, m, tuple(modulus) if modulus is not None else None)
    bases = [computational_basis(d)]
    for a in range(d):
        vecs = []
        for b in range(d):
            exps = []
            for n in range(d):
                e = ctx.mul_codes(ctx.add_codes(ctx.mul_codes(a, n), b), n)
                exps.append(ctx.trace_code(e))
            vecs.append(canonical_phase(StateVector.from_exponents(exps, p, d)))
        bases.append(Basis(tuple(vecs), f"a={a}"))
    prov = {"class": "odd prime power", "route": "field", "p": p, "m": m, "modulus": list(ctx.modulus)}
    return MubSet(d, tuple(bases), prov)


def mub_even(m: int, cap: int = DEFAULT_CAP) -> MubSet:
    """2^m + 1 bases from GR(4^m); positions, a and b run over the Teichmuller set."""
    if m < 1:
        raise ValueError("m must be >= 1")
    d = 2**m
    _check_cap(d, cap)
    ring = GR(m)
    teich = ring.teichmuller_set()
    bases = [computational_basis(d)]
    for a in teich:
        vecs = []
        for b in teich:
            k = a + 2 * b
            exps = [(k * n).trace() for n in teich]
            vecs.append(canonical_phase(StateVector.from_exponents(exps, 4, d)))
        bases.append(Basis(tuple(vecs), f"a={a}"))
    prov = {"class": "power of two", "route": "ring", "m": m, "lift": list(ring.h)}
    return MubSet(d, tuple(bases), prov)


def mub_prime_power(d: int, cap: int = DEFAULT_CAP) -> MubSet:
    pm = _poly.prime_power(d)
    if pm is None:
        raise ValueError(f"{d} is not a prime power")
    p, m = pm
    return mub_even(m, cap) if p == 2 else mub_odd_prime_power(p, m, cap)


def tensor_product(a: Basis, b: Basis) -> Basis:
    return a.tensor(b)


def mub_composite(d: int, cap: int = DEFAULT_CAP) -> MubSet:
    """min_i(p_i^e_i) + 1 bases as tensor products of the factors' k-th bases.

    Prime powers are delegated to the full constructions.
    """
    if d < 2:
        raise ValueError("d must be >= 2")
    _check_cap(d, cap)
    fac = _poly.factorize(d)
    if len(fac) == 1:
        return mub_prime_power(d, cap)
    factors = sorted(p**e for p, e in fac.items())
    m_tilde = min(factors)
    sets = [mub_prime_power(q, cap) for q in factors]
    bases = []
    for k in range(m_tilde + 1):
        prod = sets[0][k]
        for s in sets[1:]:
            prod = tensor_product(prod, s[k])
        bases.append(Basis(prod.vectors, f"k={k}"))
    prov = {"class": "composite", "route": "tensor", "factors": factors}
    return MubSet(d, tuple(bases), prov)


def mub_set(d: int, construction: str = "auto", cap: int = DEFAULT_CAP) -> MubSet:
    """Dispatch on dimension class or an explicit route name."""
    if construction not in CONSTRUCTIONS:
        raise ValueError(f"unknown construction {construction!r}")
    if d < 1:
        raise ValueError("d must be >= 1")
    _check_cap(d, cap)
    pm = _poly.prime_power(d)
    if d == 1:
        if construction not in ("auto", "fourier"):
            raise ValueError(f"construction {construction!r} needs d >= 2")
        return MubSet(1, (computational_basis(1),), {"class": "trivial", "route": "fourier"})
    if construction == "auto":
        if pm is None:
            return mub_composite(d, cap)
        return mub_prime_power(d, cap)
    if construction == "fourier":
        return MubSet(d, (computational_basis(d), fourier_basis(d)), {"class": "any", "route": "fourier"})
    if construction == "gates":
        if d != 2:
            raise ValueError("the gate route exists only for d = 2")
        return MubSet(2, qubit_gate_bases(), {"class": "qubit", "route": "gates"})
    if construction == "field":
        if pm is None or pm[0] == 2:
            raise ValueError("the field route needs an odd prime power")
        return mub_odd_prime_power(pm[0], pm[1], cap)
    if construction == "ring":
        if pm is None or pm[0] != 2:
            raise ValueError("the ring route needs a power of two")
        return mub_even(pm[1], cap)
    return mub_composite(d, cap)


# -- verification --------------------------------------------------------------------


@dataclass
class PairReport:
    passed: bool
    structural: bool = False  # s_A s_B / d not integral
    failures: List[Tuple[int, int, str, str]] = field(default_factory=list)  # (i, j, <u|v>, |<u|v>|^2)


def unbiased_pair_report(a: Basis, b: Basis, max_failures: int = 10) -> PairReport:
    if a.dim != b.dim:
        raise ValueError("bases differ in dimension")
    d = a.dim
    n = lcm(a.order, b.order)
    ip, sq = abs_squared_array(a.vectors, b.vectors, n)
    rep = PairReport(passed=True)
    for i, u in enumerate(a.vectors):
        for j, v in enumerate(b.vectors):
            target = u.scale_sq * v.scale_sq
            if target % d:
                rep.structural = True
            if sq[i, j, 1:].any() or sq[i, j, 0] * d != target:
                rep.passed = False
                if len(rep.failures) < max_failures:
                    rep.failures.append((i, j, str(to_cyclotomic(ip[i, j], n)), str(to_cyclotomic(sq[i, j], n))))
    if rep.structural:
        rep.passed = False
    return rep


def verify_unbiased_pair(a: Basis, b: Basis) -> bool:
    """True iff every cross overlap has modulus exactly 1/sqrt(d)."""
    return unbiased_pair_report(a, b, max_failures=0).passed


@dataclass
class MubReport:
    dim: int
    orthonormal: List[bool]
    pairs: Dict[Tuple[int, int], bool]
    details: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(self.orthonormal) and all(self.pairs.values())

    def failing_pairs(self) -> List[Tuple[int, int]]:
        return [k for k, ok in self.pairs.items() if not ok]

    def render(self) -> str:
        n = len(self.orthonormal)
        lines = [f"dimension {self.dim}, {n} bases"]
        for k, ok in enumerate(self.orthonormal):
            lines.append(f"basis {k}: {'orthonormal' if ok else 'NOT ORTHONORMAL'}")
        if n > 1:
            head = "     " + "".join(f"{j:>4}" for j in range(n))
            lines.append(head)
            for i in range(n):
                cells = []
                for j in range(n):
                    if i == j:
                        cells.append("   .")
                    else:
                        key = (min(i, j), max(i, j))
                        cells.append("  ok" if self.pairs[key] else "FAIL")
                lines.append(f"{i:>4} " + "".join(cells))
        lines.extend(self.details)
        lines.append("PASS" if self.passed else "FAIL")
        return "\n".join(lines)


def verify_mub_set(s: MubSet) -> MubReport:
    """Orthonormality of each basis and unbiasedness of each pair."""
    ortho = []
    details = []
    for k, b in enumerate(s.bases):
        bad = b.orthonormality_failures()
        ok = not bad and len(b) == b.dim
        ortho.append(ok)
        if not ok:
            where = ", ".join(f"({i},{j})" for i, j in bad[:5])
            details.append(f"basis {k}: orthonormality fails at {where or 'vector count'}")
    pairs = {}
    for i in range(len(s.bases)):
        for j in range(i + 1, len(s.bases)):
            rep = unbiased_pair_report(s.bases[i], s.bases[j], max_failures=1)
            pairs[(i, j)] = rep.passed
            if not rep.passed:
                if rep.structural:
                    details.append(f"pair ({i},{j}): normalisation cannot be unbiased")
                if rep.failures:
                    u, v, ip, sq = rep.failures[0]
                    details.append(f"pair ({i},{j}): vectors {u},{v} have <u|v> = {ip}, |<u|v>|^2 = {sq}")
    return MubReport(s.dim, ortho, pairs, details)


# -- Weil sums and phase operators ----------------------------------------------------


def weil_sum(p: int, m: int, a, b) -> CyclotomicInt:
    """sum over n in GF(p^m) of omega_p^tr((a n + b) n); a, b are elements or labels."""
    ctx = GF(p, m)
    a, b = ctx(a).code, ctx(b).code
    acc = CyclotomicInt.integer(0, p)
    for n in range(ctx.q):
        t = ctx.trace_code(ctx.mul_codes(ctx.add_codes(ctx.mul_codes(a, n), b), n))
        acc = acc + root_of_unity(p, t)
    return acc


@dataclass(frozen=True)
class PhaseOperator:
    """sum_b lambda_b |v_b><v_b| for a basis with rational labels lambda_b."""

    basis: Basis
    eigenvalues: Tuple[Fraction, ...]
    matrix: ExactMatrix

    @property
    def dim(self) -> int:
        return self.basis.dim

    def eigen_failures(self) -> List[int]:
        """Indices b where the matrix does not send v_b to lambda_b v_b."""
        bad = []
        den = self.matrix.denominator
        for k, (lam, v) in enumerate(zip(self.eigenvalues, self.basis.vectors)):
            raw = apply_raw(self.matrix, v.entries)
            for r, e in zip(raw, v.entries):
                n = lcm(r.order, e.order)
                if r.rescale(n) * lam.denominator != e.rescale(n) * (lam.numerator * den):
                    bad.append(k)
                    break
        return bad

    def projectors_sum(self) -> ExactMatrix:
        total = None
        for v in self.basis.vectors:
            term = ExactMatrix(outer(v, v).entries, v.scale_sq)
            total = term if total is None else total + term
        return total


def phase_operator(basis: Basis, eigenvalues: Optional[Sequence] = None) -> PhaseOperator:
    """Assemble the operator exactly; default labels are b = 0, ..., d-1."""
    d = len(basis)
    if eigenvalues is None:
        eigenvalues = range(d)
    lams = tuple(Fraction(x) for x in eigenvalues)
    if len(lams) != d:
        raise ValueError(f"expected {d} eigenvalues, got {len(lams)}")
    scales = {v.scale_sq for v in basis.vectors}
    s = 1
    for x in scales:
        s = s * x // gcd(s, x)
    den = 1
    for lam in lams:
        den = den * lam.denominator // gcd(den, lam.denominator)
    total = None
    for lam, v in zip(lams, basis.vectors):
        weight = int(lam * den) * (s // v.scale_sq)
        term = ExactMatrix(outer(v, v).entries).scalar(weight)
        total = term if total is None else total + term
    return PhaseOperator(basis, lams, ExactMatrix(total.entries, s * den))
