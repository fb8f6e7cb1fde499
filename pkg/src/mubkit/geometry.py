"""Finite projective planes, the Fano plane over GF(8) and its lift into GR(4^3).

Planes are pure incidence data: a tuple of point labels and a tuple of lines,
each line a frozenset of point indices.  The optional ``elements`` map keeps
the algebraic object (field or ring element, coordinate vector) behind each
point.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from . import _poly
from .finite_field import GF, FieldElement, render_representation_table, representation_table
from .galois_ring import RingContext, RingElement, render_teichmuller_table, teichmuller_table

__all__ = [
    "IncidencePlane",
    "projective_plane",
    "fano_from_gf8",
    "LiftRow",
    "lifted_fano",
    "respects_cyclic_structure",
    "PlaneReport",
    "verify_plane_axioms",
    "find_isomorphism",
    "is_isomorphism",
    "without_line",
    "render_plane",
    "plane_records",
    "render_fano_comparison",
]

PLANE_CAP = 32


@dataclass(frozen=True)
class IncidencePlane:
    points: Tuple[str, ...]
    lines: Tuple[frozenset, ...]
    elements: Optional[Tuple[object, ...]] = None
    name: str = ""

    @property
    def n_points(self) -> int:
        return len(self.points)

    @property
    def n_lines(self) -> int:
        return len(self.lines)

    def lines_through(self, point: int) -> List[int]:
        return [k for k, line in enumerate(self.lines) if point in line]

    def collinear(self, *pts: int) -> bool:
        s = set(pts)
        return any(s <= line for line in self.lines)


def _canonical(vec: Sequence[int], ctx) -> Optional[Tuple[int, ...]]:
    # scale so the first nonzero coordinate is 1
    lead = next((c for c in vec if c), None)
    if lead is None:
        return None
    inv = ctx.pow_code(lead, -1)
    return tuple(ctx.mul_codes(inv, c) for c in vec)


def projective_plane(q: int, cap: int = PLANE_CAP) -> IncidencePlane:
    """PG(2, q): points and lines are projective classes of nonzero vectors of GF(q)^3.

    Coordinates are field labels; the representative of a class has first
    nonzero coordinate 1.  Line [l] contains point (x) when l . x = 0.
    """
    pm = _poly.prime_power(q)
    if pm is None:
        raise ValueError(f"{q} is not a prime power")
    if q > cap:
        raise ValueError(f"order {q} exceeds the cap {cap}")
    ctx = GF(*pm)
    reps = []
    for vec in itertools.product(range(q), repeat=3):
        c = _canonical(vec, ctx)
        if c is not None and c == vec:
            reps.append(vec)

    def dot(u, v):
        acc = 0
        for a, b in zip(u, v):
            acc = ctx.add_codes(acc, ctx.mul_codes(a, b))
        return acc

    lines = tuple(frozenset(i for i, x in enumerate(reps) if dot(l, x) == 0) for l in reps)
    labels = tuple("(" + ",".join(map(str, r)) + ")" for r in reps)
    return IncidencePlane(labels, lines, tuple(reps), f"PG(2,{q})")


def fano_from_gf8() -> IncidencePlane:
    """Points are GF(8)* in power order; lines are zero-sum triples of 3-tuples."""
    ctx = GF(2, 3)
    pts = ctx.elements[1:]
    labels = tuple(r.power_label() for r in representation_table(2, 3)[1:])
    lines = tuple(
        frozenset((i, j, k))
        for i, j, k in itertools.combinations(range(len(pts)), 3)
        if not (pts[i] + pts[j] + pts[k])
    )
    return IncidencePlane(labels, lines, pts, "Fano(GF(8))")


@dataclass(frozen=True)
class LiftRow:
    """One row of the reduction map T_3* -> GF(8)*."""

    ring: RingElement
    field: FieldElement

    @property
    def z4(self) -> Tuple[int, ...]:
        return tuple(reversed(self.ring.coeffs))

    @property
    def z2(self) -> Tuple[int, ...]:
        return tuple(reversed(self.field.coeffs))


def lifted_fano(ctx: RingContext) -> Tuple[List[LiftRow], IncidencePlane]:
    """Reduction table and the plane on T_3* whose lines are preimages of Fano lines."""
    if ctx.m != 3:
        raise ValueError("the lifted Fano plane needs GR(4^3)")
    gf = GF(2, 3, tuple(ctx.h2))
    table = [LiftRow(t, gf(t.mod2())) for t in ctx.teichmuller_set()[1:]]
    images = [r.field for r in table]
    if len(set(images)) != len(table) or any(not e for e in images):
        raise ArithmeticError("reduction is not a bijection onto GF(8)*")  # pragma: no cover
    fano = fano_from_gf8() if gf == GF(2, 3) else _fano_over(gf)
    where = {e: i for i, e in enumerate(fano.elements)}
    pull = {where[r.field]: k for k, r in enumerate(table)}
    lines = tuple(frozenset(pull[i] for i in line) for line in fano.lines)
    labels = tuple("1" if k == 0 else "ξ" if k == 1 else f"ξ^{k}" for k in range(len(table)))
    return table, IncidencePlane(labels, lines, tuple(r.ring for r in table), "lifted Fano(GR(4^3))")


def _fano_over(gf) -> IncidencePlane:
    pts = gf.elements[1:]
    lines = tuple(
        frozenset(c) for c in itertools.combinations(range(7), 3) if not (pts[c[0]] + pts[c[1]] + pts[c[2]])
    )
    return IncidencePlane(tuple(str(p) for p in pts), lines, pts)


def respects_cyclic_structure(table: Sequence[LiftRow]) -> bool:
    """True when reduce(xi * t) == alpha * reduce(t) for every row."""
    by_ring = {r.ring: r.field for r in table}
    ctx = table[0].ring.ctx
    gf = table[0].field.ctx
    return all(by_ring[ctx.xi * r.ring] == gf.alpha * r.field for r in table)


# -- axioms ---------------------------------------------------------------------


@dataclass
class PlaneReport:
    passed: bool
    order: Optional[int]
    n_points: int
    n_lines: int
    quadrangle: Optional[Tuple[int, int, int, int]]
    failures: List[str] = field(default_factory=list)


def verify_plane_axioms(plane: IncidencePlane, limit: int = 20) -> PlaneReport:
    failures: List[str] = []

    def fail(msg):
        if len(failures) < limit:
            failures.append(msg)

    n, lines = plane.n_points, plane.lines
    bad = False
    for i, j in itertools.combinations(range(n), 2):
        c = sum(1 for line in lines if i in line and j in line)
        if c != 1:
            bad = True
            fail(f"points {plane.points[i]} and {plane.points[j]} lie on {c} common lines" if c else
                 f"two points on no common line: {plane.points[i]}, {plane.points[j]}")
    for a, b in itertools.combinations(range(len(lines)), 2):
        c = len(lines[a] & lines[b])
        if c != 1:
            bad = True
            fail(f"lines {a} and {b} meet in {c} points")
    quad = None
    for four in itertools.combinations(range(n), 4):
        if not any(plane.collinear(*t) for t in itertools.combinations(four, 3)):
            quad = four
            break
    if quad is None:
        bad = True
        fail("no four points with no three collinear")
    sizes = {len(line) for line in lines}
    order = None
    if len(sizes) == 1:
        order = sizes.pop() - 1
        expected = order * order + order + 1
        if n != expected or len(lines) != expected:
            bad = True
            fail(f"order {order} needs {expected} points and lines, found {n} and {len(lines)}")
    else:
        bad = True
        fail(f"lines have different sizes {sorted(sizes)}")
    return PlaneReport(not bad, order, n, len(lines), quad, failures)


def without_line(plane: IncidencePlane, index: int) -> IncidencePlane:
    return IncidencePlane(plane.points, plane.lines[:index] + plane.lines[index + 1 :], plane.elements, plane.name)


# -- isomorphism ------------------------------------------------------------------


def is_isomorphism(p: IncidencePlane, q: IncidencePlane, mapping: Dict[int, int]) -> bool:
    if sorted(mapping) != list(range(p.n_points)) or sorted(mapping.values()) != list(range(q.n_points)):
        return False
    image = {frozenset(mapping[i] for i in line) for line in p.lines}
    return image == set(q.lines) and len(p.lines) == len(q.lines)


def find_isomorphism(p: IncidencePlane, q: IncidencePlane) -> Optional[Dict[int, int]]:
    """A point bijection carrying lines onto lines, by backtracking on collinearity."""
    if p.n_points != q.n_points or p.n_lines != q.n_lines:
        return None
    n = p.n_points
    col_p = _collinearity(p)
    col_q = _collinearity(q)
    mapping: Dict[int, int] = {}
    used = set()

    def extend(x: int) -> bool:
        if x == n:
            return True
        done = list(range(x))
        for y in range(n):
            if y in used:
                continue
            ok = all(
                col_p[frozenset((x, a, b))] == col_q[frozenset((y, mapping[a], mapping[b]))]
                for a, b in itertools.combinations(done, 2)
            )
            if ok:
                mapping[x] = y
                used.add(y)
                if extend(x + 1):
                    return True
                used.discard(y)
                del mapping[x]
        return False

    if not extend(0):
        return None
    return dict(mapping) if is_isomorphism(p, q, mapping) else None


def _collinearity(p: IncidencePlane) -> Dict[frozenset, bool]:
    return {frozenset(t): p.collinear(*t) for t in itertools.combinations(range(p.n_points), 3)}


# -- output ---------------------------------------------------------------------------


def render_plane(plane: IncidencePlane) -> str:
    lines = [f"{plane.name}: {plane.n_points} points, {plane.n_lines} lines"]
    for i, label in enumerate(plane.points):
        lines.append(f"  P{i} = {label}  on {len(plane.lines_through(i))} lines")
    for k, line in enumerate(plane.lines):
        pts = sorted(line)
        lines.append(f"  L{k} = {{{', '.join(plane.points[i] for i in pts)}}}  {tuple(pts)}")
    return "\n".join(lines)


def plane_records(plane: IncidencePlane) -> Iterator[str]:
    yield json.dumps({"plane": plane.name, "points": plane.n_points, "lines": plane.n_lines})
    for i, label in enumerate(plane.points):
        yield json.dumps({"point": i, "label": label})
    for k, line in enumerate(plane.lines):
        yield json.dumps({"line": k, "points": sorted(line)})


def render_fano_comparison(ctx: RingContext) -> str:
    """The GF(8) and T_3 representation tables next to each other, then both incidence listings."""
    left = render_representation_table(representation_table(2, 3, tuple(ctx.h2))).splitlines()
    right = render_teichmuller_table(teichmuller_table(ctx)).splitlines()
    width = max(len(s) for s in left)
    rows = [f"{a.ljust(width)}   ||   {b}" for a, b in itertools.zip_longest(left, right, fillvalue="")]
    _, lifted = lifted_fano(ctx)
    return "\n".join(rows + ["", render_plane(fano_from_gf8()), "", render_plane(lifted)])
