"""JSON interchange for MUB sets, Bell families and verification reports.

A MUB record is one JSON object::

    {"kind": "mub", "dim": d, "order": N, "scale_sq": [s_0, s_1, ...],
     "provenance": {...}, "bases": [[[c_0, ..., c_{phi(N)-1}], ...], ...]}

``bases[k][i][j]`` holds the canonical coordinates of entry j of vector i of
basis k in the power basis of Z[zeta_N]; amplitudes are entry / sqrt(s_k).
A Bell record has ``"kind": "bell"``, the same keys over the d^2-dimensional
space (one entry of ``bases`` per partial basis), and
``provenance["index"]`` listing the (h, a) pair of every partial basis.
Keys are emitted sorted so equal inputs give identical bytes.
"""

from __future__ import annotations

import json
from typing import Dict, List, Tuple

from .cyclotomic import CyclotomicInt, lcm, totient
from .entangle import BellFamily, BellState, verify_bell_family
from .mub import MubSet, unbiased_pair_report
from .vectors import Basis, StateVector

__all__ = [
    "RecordError",
    "mub_to_record",
    "mub_from_record",
    "bell_to_record",
    "bell_from_record",
    "parse_record",
    "dumps",
    "verification_record",
    "bell_verification_record",
]


class RecordError(ValueError):
    """Malformed interchange input."""


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def _coords(vecs, order: int) -> List[List[List[int]]]:
    return [[list(e.rescale(order).coeffs) for e in v.entries] for v in vecs]


def mub_to_record(s: MubSet) -> Dict:
    n = s.order
    return {
        "kind": "mub",
        "dim": s.dim,
        "order": n,
        "scale_sq": [b.vectors[0].scale_sq for b in s.bases],
        "labels": [b.label for b in s.bases],
        "provenance": s.provenance,
        "bases": [_coords(b.vectors, n) for b in s.bases],
    }


def _require(rec: Dict, key: str, kind):
    if key not in rec:
        raise RecordError(f"missing key {key!r}")
    val = rec[key]
    if not isinstance(val, kind) or isinstance(val, bool):
        raise RecordError(f"key {key!r} has the wrong type")
    return val


def _vectors(raw, order: int, dim: int, scale: int, where: str) -> Tuple[StateVector, ...]:
    phi = totient(order)
    if not isinstance(raw, list) or not raw:
        raise RecordError(f"{where}: expected a non-empty list of vectors")
    out = []
    for i, vec in enumerate(raw):
        if not isinstance(vec, list) or len(vec) != dim:
            raise RecordError(f"{where}, vector {i}: expected {dim} entries")
        entries = []
        for j, c in enumerate(vec):
            if (
                not isinstance(c, list)
                or len(c) != phi
                or not all(isinstance(x, int) and not isinstance(x, bool) for x in c)
            ):
                raise RecordError(f"{where}, vector {i}, entry {j}: expected {phi} integer coordinates")
            entries.append(CyclotomicInt._raw(order, tuple(c)))
        out.append(StateVector(tuple(entries), scale))
    return tuple(out)


def _header(rec, kind: str):
    if not isinstance(rec, dict):
        raise RecordError("record must be a JSON object")
    if rec.get("kind", kind) != kind:
        raise RecordError(f"expected a {kind!r} record")
    dim = _require(rec, "dim", int)
    order = _require(rec, "order", int)
    scales = _require(rec, "scale_sq", list)
    bases = _require(rec, "bases", list)
    if dim < 1 or order < 1:
        raise RecordError("dim and order must be positive")
    if len(scales) != len(bases):
        raise RecordError("scale_sq and bases differ in length")
    if not all(isinstance(s, int) and not isinstance(s, bool) and s >= 1 for s in scales):
        raise RecordError("scale_sq entries must be positive integers")
    prov = rec.get("provenance", {})
    if not isinstance(prov, dict):
        raise RecordError("provenance must be an object")
    return dim, order, scales, bases, prov


def mub_from_record(rec: Dict) -> MubSet:
    dim, order, scales, bases, prov = _header(rec, "mub")
    labels = rec.get("labels") or [""] * len(bases)
    if len(labels) != len(bases):
        raise RecordError("labels and bases differ in length")
    out = [
        Basis(_vectors(raw, order, dim, s, f"basis {k}"), str(labels[k]))
        for k, (raw, s) in enumerate(zip(bases, scales))
    ]
    return MubSet(dim, tuple(out), prov)


def bell_to_record(f: BellFamily) -> Dict:
    states = f.states()
    order = lcm(*(s.vector.order for s in states))
    parts, index, scales = [], [], []
    for h, layer in enumerate(f.sets):
        for part in layer:
            parts.append(_coords([s.vector for s in part], order))
            index.append([part[0].h, part[0].a, [s.b for s in part]])
            scales.append(part[0].vector.scale_sq)
    prov = dict(f.provenance)
    prov["index"] = index
    prov["route"] = f.route
    return {"kind": "bell", "dim": f.dim, "order": order, "scale_sq": scales, "provenance": prov, "bases": parts}


def bell_from_record(rec: Dict) -> BellFamily:
    dim, order, scales, bases, prov = _header(rec, "bell")
    index = prov.get("index")
    if not isinstance(index, list) or len(index) != len(bases):
        raise RecordError("provenance.index must list (h, a, b-list) per partial basis")
    by_h: Dict[int, List[Tuple[BellState, ...]]] = {}
    for k, (raw, s, idx) in enumerate(zip(bases, scales, index)):
        try:
            h, a, bs = idx
        except (TypeError, ValueError):
            raise RecordError(f"bad index entry {k}") from None
        vecs = _vectors(raw, order, dim * dim, s, f"partial basis {k}")
        if len(bs) != len(vecs):
            raise RecordError(f"index entry {k} does not match its vectors")
        by_h.setdefault(h, []).append(tuple(BellState(v, h, a, b) for v, b in zip(vecs, bs)))
    sets = tuple(tuple(by_h[h]) for h in sorted(by_h))
    return BellFamily(dim, str(prov.get("route", "")), sets, {k: v for k, v in prov.items() if k != "index"})


def parse_record(text: str):
    """MubSet or BellFamily from JSON text; raises RecordError on malformed input."""
    try:
        rec = json.loads(text)
    except json.JSONDecodeError as exc:
        raise RecordError(f"invalid JSON: {exc}") from None
    if not isinstance(rec, dict):
        raise RecordError("record must be a JSON object")
    kind = rec.get("kind", "mub")
    if kind == "mub":
        return mub_from_record(rec)
    if kind == "bell":
        return bell_from_record(rec)
    raise RecordError(f"unknown record kind {kind!r}")


def verification_record(s: MubSet) -> Dict:
    """Per-basis orthonormality and per-pair unbiasedness, with offending values."""
    ortho = []
    for k, b in enumerate(s.bases):
        bad = b.orthonormality_failures()
        ortho.append({"basis": k, "passed": not bad and len(b) == b.dim, "failures": [list(p) for p in bad[:10]]})
    pairs = []
    for i in range(len(s.bases)):
        for j in range(i + 1, len(s.bases)):
            rep = unbiased_pair_report(s.bases[i], s.bases[j], max_failures=5)
            pairs.append(
                {
                    "pair": [i, j],
                    "passed": rep.passed,
                    "structural": rep.structural,
                    "failures": [
                        {"vectors": [u, v], "inner_product": ip, "abs_squared": sq} for u, v, ip, sq in rep.failures
                    ],
                }
            )
    passed = all(o["passed"] for o in ortho) and all(p["passed"] for p in pairs)
    return {"kind": "mub-report", "dim": s.dim, "bases": len(s.bases), "passed": passed, "orthonormal": ortho, "pairs": pairs}


def bell_verification_record(f: BellFamily) -> Dict:
    rep = verify_bell_family(f)
    return {
        "kind": "bell-report",
        "dim": f.dim,
        "states": len(f.states()),
        "passed": rep.passed,
        "orthonormal": rep.orthonormal,
        "maximally_entangled": rep.entangled,
        "within_h_unbiased": rep.within_h_unbiased,
        "across_h_orthogonal": rep.across_h_orthogonal,
        "failures": rep.failures,
    }
