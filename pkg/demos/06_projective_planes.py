# Projective planes, the Fano plane inside GF(8), and its lift to GR(4^3).
from mubkit.galois_ring import GR
from mubkit.geometry import (
    fano_from_gf8,
    find_isomorphism,
    lifted_fano,
    projective_plane,
    render_fano_comparison,
    respects_cyclic_structure,
    verify_plane_axioms,
)

for q in (2, 3, 4, 5, 7):
    rep = verify_plane_axioms(projective_plane(q))
    print(f"PG(2,{q}): {rep.n_points} points, {rep.n_lines} lines, order {rep.order}, axioms hold: {rep.passed}")

fano = fano_from_gf8()
print("Fano plane and PG(2,2) isomorphic via", find_isomorphism(fano, projective_plane(2)))

table, lifted = lifted_fano(GR(3))
print("lifted plane isomorphic:", find_isomorphism(lifted, fano) is not None,
      "| reduction commutes with xi -> alpha:", respects_cyclic_structure(table))
print()
print(render_fano_comparison(GR(3)))
