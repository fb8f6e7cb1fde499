# Finite fields and the Galois ring GR(4^m): the arithmetic behind every construction.
from mubkit.cyclotomic import root_of_unity
from mubkit.finite_field import GF, render_representation_table, representation_table
from mubkit.galois_ring import GR, hensel_lift, render_teichmuller_table, teichmuller_table
from mubkit import _poly

# Amplitudes live in Z[zeta_N]; equality is exact coefficient comparison.
w = root_of_unity(3)
print("1 + w + w^2 =", 1 + w + w * w)
print("|1 + 2w|^2 =", (1 + 2 * w).abs_squared())

# GF(8) from x^3 + x + 1, listed by powers of the primitive element.
print()
print(render_representation_table(representation_table(2, 3)))

# Field arithmetic on elements, plus the absolute trace down to GF(p).
F9 = GF(3, 2)
a = F9.alpha
print()
print("GF(9) modulus:", _poly.format_poly(F9.modulus))
print("alpha^8 == 1:", a ** 8 == F9.one, "  tr(alpha) =", a.trace())

# Lifting binary primitive polynomials to Z_4 gives the rings used for qubits.
for h2 in [(1, 1, 1), (1, 1, 0, 1), (1, 1, 0, 0, 1)]:
    print(_poly.format_poly(h2), "->", _poly.format_poly(hensel_lift(h2)), "(mod 4)")

# The Teichmuller set of GR(4^3) next to its mod-2 shadow.
print()
print(render_teichmuller_table(teichmuller_table(GR(3))))

R = GR(2)
beta = R([2, 1])
a, b = R.decompose(beta)
print()
print(f"{beta} = {a} + 2*({b}),  tr = {beta.trace()},  frobenius = {beta.frobenius()}")
