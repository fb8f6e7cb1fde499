# Generalized Bell states: d^2 maximally entangled states split into
# shift sectors h, each holding mutually unbiased partial bases.
from mubkit.cli import render_bell_family
from mubkit.entangle import bell_family, bell_odd, partial_trace_second, verify_bell_family

f = bell_family(2)
print(render_bell_family(f))
print("reduced state of the first vector:")
print(partial_trace_second(f.states()[0].vector))

for d in range(2, 9):
    rep = verify_bell_family(bell_family(d))
    print(f"d={d}: orthonormal={rep.orthonormal} I/d={rep.entangled} "
          f"unbiased-in-h={rep.within_h_unbiased} orthogonal-across-h={rep.across_h_orthogonal}")

# Writing the exponent with omega_9 instead of omega_3 in d = 9 destroys the structure.
rep = verify_bell_family(bell_odd(3, 2, root="d"))
print("d=9 with omega_9:", "pass" if rep.passed else "fail", "-", rep.failures[0])
