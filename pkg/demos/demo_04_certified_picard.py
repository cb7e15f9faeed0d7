"""
Certified Picard iteration
==========================

Iterate x -> x/2 on the reals with the squared distance |x - y|**2, a
b-metric with s = 2. The map shrinks that distance by exactly 1/4, so with
alpha = 1/4 we have s * alpha = 1/2 < 1 and the iteration carries an
explicit error bound.
"""

from pacontract import IterationConfig, picard_solve, verify_decay


def halve(x):
    return x / 2


def sq(x, y):
    return (x - y) ** 2


cfg = IterationConfig(alpha=0.25, s=2.0, tolerance=1e-12, stop_rule="certified_bound")
res = picard_solve(halve, sq, 1.0, cfg)
cert = res.certificate
print(f"status {res.status.value} after {res.iterations} iterations, point {res.point:.3e}")
print(f"a0 = {cert.a0}, C_bound = {cert.C_bound:.6f}, s*alpha = {cert.s_alpha}")

# The true error is 4**-n; the certificate stays above it the whole way.
x = 1.0
for n in range(0, res.iterations + 1, 4):
    print(f"n={n:2d}  true error {sq(x, 0):.3e}  certified bound {cert.fixed_point_bound_at(n):.3e}")
    x /= 2 ** 4

decay = verify_decay(res.residual_trace, cfg.alpha)
print("decay a_k <= C alpha^k with C_fit =", decay.C_fit, "(C_bound", decay.C_bound, ")")

# Claiming too small a factor is caught after the fact.
bad = picard_solve(lambda x: 0.9 * x, lambda x, y: abs(x - y), 1.0,
                   IterationConfig(alpha=0.5, tolerance=1e-9, stop_rule="residual"))
print("dishonest alpha:", bad.status.value, bad.certificate.flags)
