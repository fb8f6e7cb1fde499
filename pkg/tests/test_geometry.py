import itertools

import pytest

from mubkit.galois_ring import GR
from mubkit.geometry import (
    IncidencePlane,
    fano_from_gf8,
    find_isomorphism,
    is_isomorphism,
    lifted_fano,
    plane_records,
    projective_plane,
    render_fano_comparison,
    render_plane,
    respects_cyclic_structure,
    verify_plane_axioms,
    without_line,
)
from golden import GR43_TABLE


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
def test_projective_planes(q):
    p = projective_plane(q)
    n = q * q + q + 1
    assert p.n_points == n and p.n_lines == n
    assert all(len(line) == q + 1 for line in p.lines)
    rep = verify_plane_axioms(p)
    assert rep.passed and rep.order == q


def test_every_pair_of_points_on_one_line_q2():
    p = projective_plane(2)
    for i, j in itertools.combinations(range(7), 2):
        assert sum(1 for line in p.lines if {i, j} <= line) == 1


def test_canonical_representatives():
    p = projective_plane(3)
    for vec in p.elements:
        lead = next(c for c in vec if c)
        assert lead == 1


def test_fano_from_gf8():
    f = fano_from_gf8()
    assert f.n_points == 7 and f.n_lines == 7
    assert all(len(line) == 3 for line in f.lines)
    assert all(len(f.lines_through(i)) == 3 for i in range(7))
    # {1, alpha, alpha^3}
    assert frozenset({0, 1, 3}) in f.lines
    assert verify_plane_axioms(f).passed


def test_fano_triples_by_enumeration():
    tuples = [r for r in itertools.product((0, 1), repeat=3) if any(r)]
    triples = [
        c for c in itertools.combinations(tuples, 3) if all((a ^ b ^ x) == 0 for a, b, x in zip(*c))
    ]
    assert len(triples) == len(fano_from_gf8().lines) == 7


def test_fano_isomorphic_to_pg22():
    f, p = fano_from_gf8(), projective_plane(2)
    m = find_isomorphism(f, p)
    assert m is not None and is_isomorphism(f, p, m)


def test_lifted_fano():
    table, plane = lifted_fano(GR(3))
    rows = GR43_TABLE[1:]
    assert [(str(r.ring), r.z4, r.z2) for r in table] == [(poly, z4, z2) for _, poly, z4, z2 in rows]
    assert len({r.field for r in table}) == 7
    assert verify_plane_axioms(plane).passed
    fano = fano_from_gf8()
    identity = {k: k for k in range(7)}
    assert is_isomorphism(plane, fano, identity)
    assert find_isomorphism(plane, fano) is not None
    assert respects_cyclic_structure(table)


def test_lifted_fano_needs_degree_three():
    with pytest.raises(ValueError):
        lifted_fano(GR(2))


def test_removed_line_is_reported():
    rep = verify_plane_axioms(without_line(projective_plane(2), 0))
    assert not rep.passed
    assert any("two points on no common line" in f for f in rep.failures)


def test_non_plane_structures():
    # a triangle: three points, three lines of two points (degenerate, no quadrangle)
    tri = IncidencePlane(("a", "b", "c"), (frozenset({0, 1}), frozenset({1, 2}), frozenset({0, 2})))
    rep = verify_plane_axioms(tri)
    assert not rep.passed and rep.quadrangle is None
    assert find_isomorphism(tri, projective_plane(2)) is None


def test_non_isomorphic_same_counts():
    p = projective_plane(2)
    bent = IncidencePlane(p.points, p.lines[:-1] + (frozenset({0, 1, 2}),))
    assert find_isomorphism(p, bent) is None


def test_rejects_non_prime_power():
    with pytest.raises(ValueError):
        projective_plane(6)


def test_dumps():
    text = render_plane(fano_from_gf8())
    assert text.startswith("Fano(GF(8)): 7 points, 7 lines")
    assert "L0 = {1, α, α^3}  (0, 1, 3)" in text
    recs = list(plane_records(projective_plane(2)))
    assert len(recs) == 1 + 7 + 7
    cmp = render_fano_comparison(GR(3))
    assert "ξ^5   | 3+3x+x^2   | (1,3,3)       | (1,1,1)" in cmp
    assert "α^5   | 1+x+x^2    | (1,1,1)" in cmp
