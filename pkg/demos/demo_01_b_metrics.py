"""
Validating b-metrics and finding the smallest coefficient
==========================================================

A b-metric relaxes the triangle inequality to
``d(x, z) <= s * (d(x, y) + d(y, z))`` for some ``s >= 1``. Squaring an
ordinary metric is the classic way to get one.
"""

import numpy as np

from pacontract import FiniteBSpace, minimal_coefficient, validate_b_metric

# The line metric on {0, 1, 2}, and its square.
x = np.arange(3.0)
line = np.abs(x[:, None] - x[None, :])
squared = line ** 2

print("line metric valid with s=1:", validate_b_metric(line, 1.0).valid)

# Squaring breaks the ordinary triangle inequality: d(0, 2) = 4 but the
# detour through 1 only costs 1 + 1 = 2. Every violation is listed.
report = validate_b_metric(squared, 1.0)
for v in report.violations:
    print(f"  {v.axiom} at {v.indices}: {v.lhs} > {v.rhs}")

# The smallest admissible coefficient is the worst triangle ratio.
print("minimal coefficient of the squared metric:", minimal_coefficient(squared))

# p-th powers of a metric are b-metrics with s = 2**(p-1); the minimum can be smaller.
for p in (1.5, 2, 3):
    print(f"p={p}: s_min={minimal_coefficient(line ** p):.4f}  bound 2**(p-1)={2 ** (p - 1):.4f}")

# FiniteBSpace refuses anything that is not a b-metric for its s.
space = FiniteBSpace.from_matrix(squared)  # s computed when omitted
print(space, "s =", space.s)
