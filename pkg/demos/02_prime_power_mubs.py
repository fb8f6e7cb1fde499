# Complete sets of mutually unbiased bases in prime-power dimensions.
import time

from mubkit.mub import mub_set, verify_mub_set

# Dimension 4 goes through GR(4^2); the printout uses the canonical phase
# (first entry 1) and the text form z4 for i.
s = mub_set(4)
for k, basis in enumerate(s.bases):
    print(f"B{k}:", ", ".join(str(v) for v in basis.vectors))
print(verify_mub_set(s).render())

# Odd prime powers use the field trace; check a few sizes exhaustively.
for d in (3, 5, 9, 16, 27):
    t = time.perf_counter()
    rep = verify_mub_set(mub_set(d))
    print(f"d={d:>2}: {len(rep.orthonormal)} bases, all pairs unbiased: {rep.passed}  ({time.perf_counter() - t:.2f}s)")
