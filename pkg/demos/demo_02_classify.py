"""
Banach, Kannan and path-averaged contractions on three points
==============================================================

On the discrete three-point space, the map 0 -> 1 -> 2 -> 2 is neither a
Banach nor a Kannan contraction, yet it contracts on average along orbits.
"""

from pacontract import (SelfMap, classify_all, delta_trace, pa_check_direct,
                        pa_minimal_alpha)
from pacontract.space import discrete_space

space = discrete_space(3)
T = SelfMap((1, 2, 2))

# Distances along paired orbits: every pair eventually merges at the fixed point 2.
for i, j in [(0, 1), (0, 2), (1, 2)]:
    tr = delta_trace(space, T, i, j)
    print(f"pair {(i, j)}: deltas {tr.deltas}, merge index {tr.merge_index}")

report = classify_all(space, T)
print("Banach:", report.banach.is_member, "beta_min =", report.banach.beta_min,
      "witness", report.banach.witness)
print("Kannan:", report.kannan.is_member, "constraint at (0,1) =", report.kannan.constraint(0, 1),
      "threshold =", report.kannan.threshold)
print("PA:    ", report.pa.is_member, "alpha_min =", report.pa.alpha_min_exact,
      "N =", report.pa.n_min)

# The closed form is cross-checked by evaluating the averaged inequality directly.
pa = pa_minimal_alpha(space, T)
for alpha in (0.4, 0.5, 2 / 3):
    res = pa_check_direct(space, T, alpha, pa.n_min)
    print(f"alpha={alpha:.3f}, N={pa.n_min}: holds={res.holds}",
          "" if res.holds else f"fails for pair {res.pair} at n={res.n}")
