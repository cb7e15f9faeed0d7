"""Checklist reproducing the worked examples and exhaustive property gates.

Each check returns a :class:`CheckResult`; :func:`run_checks` runs them all in
a fixed order. The command-line ``reproduce`` subcommand prints the list and
exits non-zero if any item fails.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from . import classify
from .generator import GeneratorSpec, enumerate_maps, make_space
from .mapping import SelfMap
from .oracle import recursion_failures, verify_theorem
from .solver import IterationConfig, StopRule, picard_solve, verify_decay
from .space import FiniteBSpace, discrete_space

STAIRCASE = SelfMap((1, 2, 2))  # 0 -> 1 -> 2, with 2 fixed
EPS = 1e-9


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, **self.detail}


def theorem_spaces() -> list[FiniteBSpace]:
    """Discrete spaces on 3 and 4 points plus squared line metrics on 1..4 points."""
    out = [discrete_space(3), discrete_space(4)]
    out += [make_space(GeneratorSpec(n, "power_metric", p=2.0)) for n in range(1, 5)]
    return out


def equivalence_spaces() -> list[FiniteBSpace]:
    out = [discrete_space(n) for n in range(1, 5)]
    out += [make_space(GeneratorSpec(n, "power_metric", p=2.0)) for n in range(1, 5)]
    out += [make_space(GeneratorSpec(n, "random_perturbed", p=p, seed=seed))
            for n in (3, 4) for p in (1.0, 2.0) for seed in (0, 1)]
    return out


def check_staircase() -> CheckResult:
    t0 = time.perf_counter()
    sp = discrete_space(3)
    b = classify.banach_modulus(sp, STAIRCASE)
    pa = classify.pa_minimal_alpha(sp, STAIRCASE)
    direct = classify.pa_check_direct(sp, STAIRCASE, 2 / 3, 2)
    elapsed = time.perf_counter() - t0
    ok = (b.beta_min == 1.0 and b.witness == (0, 1) and not b.is_member
          and pa.is_member and pa.alpha_min == 0.5 and pa.n_min == 2
          and direct.holds and elapsed < 1.0)
    return CheckResult("staircase map: Banach 1.0, alpha_min 0.5 at N=2, (2/3, 2) admissible", ok,
                       {"beta_min": b.beta_min, "banach_witness": list(b.witness),
                        "alpha_min": pa.alpha_min, "n_min": pa.n_min,
                        "direct_2_3_at_2": direct.holds, "seconds": elapsed})


def check_kannan() -> CheckResult:
    sp = discrete_space(3)
    k = classify.kannan_modulus(sp, STAIRCASE)
    c01 = k.constraint(0, 1)
    ok = c01 == 0.5 and k.threshold == 0.5 and not k.is_member
    return CheckResult("staircase map: Kannan constraint 0.5 at (0,1) vs threshold 0.5", ok,
                       {"constraint_0_1": c01, "threshold": k.threshold,
                        "beta_min": k.beta_min, "is_member": k.is_member})


def check_banach_implies_pa() -> CheckResult:
    t0 = time.perf_counter()
    checked, failures = 0, []
    for sp in (discrete_space(3), discrete_space(4)):
        for fmap in enumerate_maps(sp.n):
            b = classify.banach_modulus(sp, fmap)
            if 0 < b.beta_min < 1:
                checked += 1
                if not classify.pa_check_direct(sp, fmap, b.beta_min_exact, 1):
                    failures.append(list(fmap.table))
            if b.is_member and not classify.pa_minimal_alpha(sp, fmap).is_member:
                failures.append(list(fmap.table))
    elapsed = time.perf_counter() - t0
    return CheckResult("Banach maps are PA with alpha=beta, N=1 (discrete n=3,4)",
                       not failures and elapsed < 10.0,
                       {"maps_with_beta_in_open_unit": checked, "failures": failures,
                        "seconds": elapsed})


def _pa_instances():
    for sp in theorem_spaces():
        for fmap in enumerate_maps(sp.n):
            pa = classify.pa_minimal_alpha(sp, fmap)
            yield sp, fmap, pa


def check_theorem() -> CheckResult:
    hits, bad = 0, []
    for sp, fmap, pa in _pa_instances():
        v = verify_theorem(sp, fmap, pa)
        if v.hypothesis_met:
            hits += 1
            if not v.theorem_respected:
                bad.append(list(fmap.table))
    return CheckResult("fixed point unique and reached whenever PA with s*alpha<1", not bad,
                       {"instances": hits, "violations": bad})


def oracle_disagreements(sp: FiniteBSpace, fmap: SelfMap) -> list[str]:
    """Ways in which the closed form and the direct check disagree on one map."""
    pa = classify.pa_minimal_alpha(sp, fmap)
    out = []
    if pa.is_member:
        if not classify.pa_check_direct(sp, fmap, min(pa.alpha_min + EPS, 1 - EPS), pa.n_min):
            out.append("rejects alpha_min + eps")
        if pa.alpha_min > EPS and classify.pa_check_direct(sp, fmap, pa.alpha_min - EPS, pa.n_min):
            out.append("accepts alpha_min - eps")
    else:
        for n in range(1, sp.n ** 2 + 1):
            if classify.pa_check_direct(sp, fmap, 1 - EPS, n):
                out.append(f"NotPA but direct check holds at N={n}")
                break
    return out


def check_oracle_equivalence() -> CheckResult:
    maps, bad = 0, []
    for sp in equivalence_spaces():
        for fmap in enumerate_maps(sp.n):
            maps += 1
            why = oracle_disagreements(sp, fmap)
            if why:
                bad.append({"n": sp.n, "table": list(fmap.table), "why": why})
    return CheckResult("closed-form alpha_min matches the direct check at +-1e-9 (n<=4)",
                       not bad, {"maps": maps, "disagreements": bad})


def halving_orbit(n: int) -> list[float]:
    xs, x = [], 1.0
    for _ in range(n + 1):
        xs.append(x)
        x = x / 2
    return xs


def check_solver() -> CheckResult:
    cfg = IterationConfig(alpha=0.25, s=2.0, max_iter=100, tolerance=1e-12,
                          stop_rule=StopRule.CERTIFIED_BOUND)
    res = picard_solve(lambda x: x / 2, lambda x, y: (x - y) ** 2, 1.0, cfg)
    decay = verify_decay(res.residual_trace, 0.25)
    xs = halving_orbit(res.iterations)
    cert = res.certificate
    bound_ok = all(x ** 2 <= cert.fixed_point_bound_at(n) for n, x in enumerate(xs))
    ref = halving_orbit(21)
    a = [(ref[k] - ref[k + 1]) ** 2 for k in range(21)]
    ratios_ok = all(a[k + 1] / a[k] == 0.25 for k in range(20))
    ok = (decay.holds and decay.C_fit == 0.25 and bound_ok and ratios_ok
          and res.status.value == "converged" and res.iterations <= 25
          and cert.fixed_point_bound_at(res.iterations) <= 1e-12)
    return CheckResult("certified Picard on x/2 with |x-y|^2 (s=2, alpha=1/4)", ok,
                       {"iterations": res.iterations, "C_fit": decay.C_fit,
                        "status": res.status.value, "error_bound_ok": bound_ok,
                        "ratios_exact": ratios_ok})


def _recursion_check(name: str, from_n_min: bool) -> CheckResult:
    instances, bad = 0, []
    for sp, fmap, pa in _pa_instances():
        if not (pa.is_member and sp.s * pa.alpha_min < 1):
            continue
        instances += 1
        start = pa.n_min if from_n_min else 1
        for x in range(sp.n):
            fails = recursion_failures(sp, fmap, pa.alpha_min_exact, x, n_from=start)
            if fails:
                n, lhs, rhs = fails[0]
                bad.append({"table": list(fmap.table), "x": x, "n": n,
                            "lhs": str(lhs), "rhs": str(rhs)})
    return CheckResult(name, not bad, {"instances": instances, "violations": len(bad),
                                       "first_violations": bad[:5]})


def check_recursion_all_n() -> CheckResult:
    return _recursion_check("partial sums obey S(n+1) <= alpha_min*S(n) + a0 for every n >= 1",
                            from_n_min=False)


def check_recursion_from_n_min() -> CheckResult:
    return _recursion_check("partial sums obey S(n+1) <= alpha_min*S(n) + a0 for n >= n_min",
                            from_n_min=True)


CHECKS = (check_staircase, check_kannan, check_banach_implies_pa, check_theorem,
          check_oracle_equivalence, check_solver, check_recursion_all_n,
          check_recursion_from_n_min)


def run_checks() -> list[CheckResult]:
    return [check() for check in CHECKS]
