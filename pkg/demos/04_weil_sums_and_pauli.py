# Why odd characteristic works with fields and characteristic two does not.
from mubkit.finite_field import GF
from mubkit.mub import weil_sum
from mubkit.pauli import pauli_mub_correspondence

for p, m in [(3, 1), (5, 1), (3, 2)]:
    sizes = {weil_sum(p, m, a, b).abs_squared().as_integer() for a in range(1, p**m) for b in range(p**m)}
    print(f"GF({p**m}): |S|^2 over all a != 0, b  ->  {sorted(sizes)}")

# In characteristic two the sum is 0 except at the single b with b^2 = a,
# where every term is +1.
for m in (1, 2, 3):
    F = GF(2, m)
    for a in range(1, F.q):
        values = [weil_sum(2, m, a, b).as_integer() for b in range(F.q)]
        print(f"GF({F.q}) a={a}: S over b = {values}")

# Each constructed basis is the eigenbasis of exactly one of Z, X, XZ^k.
for p in (2, 3, 5):
    rep = pauli_mub_correspondence(p)
    print(f"p={p}:", rep.matching)
