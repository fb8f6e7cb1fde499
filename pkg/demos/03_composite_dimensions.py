# Composite dimensions: tensor products of the factors' bases.
from mubkit.galois_ring import QuotientRing, sylow_decomposition, verify_subfield
from mubkit.mub import mub_set, verify_mub_set

six = mub_set(6)
print("d=6 route:", six.provenance)
for k, basis in enumerate(six.bases):
    print(f"C{k}[{basis.label}] first vector: {basis.vectors[1]}")
print(verify_mub_set(six).render())

for d in (10, 12, 15, 20):
    s = mub_set(d)
    print(f"d={d}: {len(s)} bases, pass = {verify_mub_set(s).passed}")

# The ring Z_6[x]/(x^2+3x+1) splits into two fields, yet that does not
# produce more bases; it is shown here only as structure.
ring = QuotientRing(6, (1, 3, 1))
s_a, s_b = sylow_decomposition(ring)
for name, part in (("S_a", s_a), ("S_b", s_b)):
    rep = verify_subfield(part, ring)
    print(name, sorted(ring.format(x) for x in part), "field:", rep.is_field, "units:", rep.group_order)
