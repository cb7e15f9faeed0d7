"""Certified Picard iteration on caller-defined b-metric spaces.

The caller supplies the map, the distance and a claimed contraction factor
``alpha`` together with the b-metric coefficient ``s``. The certificate bounds
the distance of the n-th iterate to the fixed point by::

    C = a0 * (2 - alpha) / (1 - alpha)
    cauchy(n) = C * s * alpha**n / (1 - s * alpha)
    fixed_point_bound(n) = s * cauchy(n)

where ``a0 = d(x0, T x0)``. The extra factor ``s`` comes from one application
of the relaxed triangle inequality against a far iterate, since a b-metric need
not be continuous; the bound is conservative. ``alpha`` is never trusted: every
trace is rechecked against the partial-sum recursion and the geometric decay
it implies, and any violation withdraws the certificate.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Any, Callable, Optional

# Slack for the a-posteriori checks; the trace itself is floating point.
CHECK_RTOL = 1e-12


class HypothesisError(ValueError):
    """A certified bound was requested but ``s * alpha >= 1``."""


class StopRule(str, enum.Enum):
    RESIDUAL = "residual"
    CERTIFIED_BOUND = "certified_bound"
    BOTH = "both"


class Status(str, enum.Enum):
    CONVERGED = "converged"
    MAX_ITER_REACHED = "max_iter_reached"
    UNCERTIFIED_CONVERGED = "uncertified_converged"


@dataclass(frozen=True)
class IterationConfig:
    alpha: float
    s: float = 1.0
    max_iter: int = 1000
    tolerance: float = 1e-12
    stop_rule: StopRule = StopRule.CERTIFIED_BOUND

    def __post_init__(self):
        if not 0 < self.alpha < 1:
            raise ValueError(f"alpha must lie in (0, 1), got {self.alpha}")
        if not self.s >= 1:
            raise ValueError(f"s must be >= 1, got {self.s}")
        if self.max_iter < 1:
            raise ValueError("max_iter must be >= 1")
        if not self.tolerance > 0:
            raise ValueError("tolerance must be > 0")
        object.__setattr__(self, "stop_rule", StopRule(self.stop_rule))


@dataclass
class ConvergenceCertificate:
    a0: float
    alpha: float
    s: float
    flags: list[str] = field(default_factory=list)

    @property
    def s_alpha(self) -> float:
        return self.s * self.alpha

    @property
    def C_bound(self) -> float:
        return self.a0 * (2 - self.alpha) / (1 - self.alpha)

    @property
    def certified(self) -> bool:
        return self.s_alpha < 1 and not self.flags

    def cauchy_bound_at(self, n: int) -> float:
        """Bound on ``d(x_n, x_m)`` for every ``m > n``; infinite when ``s * alpha >= 1``."""
        if self.s_alpha >= 1:
            return math.inf
        return self.C_bound * self.s * self.alpha ** n / (1 - self.s_alpha)

    def fixed_point_bound_at(self, n: int) -> float:
        return self.s * self.cauchy_bound_at(n)

    def to_dict(self, n: Optional[int] = None) -> dict:
        out = {"a0": self.a0, "alpha": self.alpha, "s": self.s, "s_alpha": self.s_alpha,
               "C_bound": self.C_bound, "certified": self.certified, "flags": list(self.flags),
               "C_bound_rule": "a0*(2-alpha)/(1-alpha)",
               "fixed_point_bound_rule": "s*C*s*alpha**n/(1-s*alpha)"}
        if n is not None:
            fb = self.fixed_point_bound_at(n)
            out["fixed_point_bound"] = None if math.isinf(fb) else fb
        return out


@dataclass
class FixedPointResult:
    point: Any
    iterations: int
    residual_trace: list[float]
    certificate: ConvergenceCertificate
    status: Status

    def to_dict(self) -> dict:
        return {"point": self.point, "iterations": self.iterations, "status": self.status.value,
                "residual_trace": list(self.residual_trace),
                "certificate": self.certificate.to_dict(self.iterations)}


@dataclass(frozen=True)
class DecayCheck:
    holds: bool
    C_fit: float
    C_bound: float
    first_violation: Optional[int]  # first k with a_k > C_bound * alpha**k

    @property
    def within_C_bound(self) -> bool:
        return self.first_violation is None


def verify_decay(residuals, alpha: float) -> DecayCheck:
    """Fit the smallest ``C`` with ``a_k <= C * alpha**k`` over the whole trace."""
    a = [float(x) for x in residuals]
    if not a:
        raise ValueError("empty residual trace")
    if not 0 < alpha < 1:
        raise ValueError(f"alpha must lie in (0, 1), got {alpha}")
    if any(x < 0 or math.isnan(x) for x in a):
        raise ValueError("residuals must be non-negative")
    log_alpha = math.log(alpha)
    c_fit = 0.0
    for k, x in enumerate(a):
        if x == 0:
            continue
        scale = alpha ** k
        ratio = x / scale if scale > 0 else math.inf
        if math.isinf(ratio):
            # alpha**k under/overflowed on a long trace
            ratio = math.exp(min(math.log(x) - k * log_alpha, 709.0))
        c_fit = max(c_fit, ratio)
    c_bound = a[0] * (2 - alpha) / (1 - alpha)
    first = None
    for k, x in enumerate(a):
        if x > c_bound * alpha ** k * (1 + CHECK_RTOL):
            first = k
            break
    return DecayCheck(math.isfinite(c_fit), c_fit, c_bound, first)


def recursion_violations(residuals, alpha: float, rtol: float = CHECK_RTOL) -> list[int]:
    """Indices ``n >= 1`` where ``S_{n+1} <= alpha * S_n + a_0`` fails.

    ``S_n`` is the sum of the first ``n`` residuals.
    """
    a = list(residuals)
    if not a:
        return []
    out = []
    partial = [0.0]
    for x in a:
        partial.append(partial[-1] + x)
    for n in range(1, len(a)):
        rhs = alpha * partial[n] + a[0]
        if partial[n + 1] > rhs + rtol * max(abs(rhs), 1.0):
            out.append(n)
    return out


def audit(cert: ConvergenceCertificate, residuals) -> None:
    """Recheck a trace against ``cert`` and record every failed check in ``cert.flags``."""
    if not residuals:
        return
    bad = recursion_violations(residuals, cert.alpha)
    if bad:
        cert.flags.append(f"partial-sum recursion violated at n={bad[0]}")
    total = math.fsum(residuals)
    if total > cert.C_bound * (1 + CHECK_RTOL):
        cert.flags.append("partial sum exceeds C_bound")
    decay = verify_decay(residuals, cert.alpha)
    if not decay.within_C_bound:
        cert.flags.append(f"geometric decay violated at k={decay.first_violation}")


def picard_solve(map_fn: Callable[[Any], Any], dist_fn: Callable[[Any, Any], float],
                 x0: Any, config: IterationConfig) -> FixedPointResult:
    """Iterate ``x_{k+1} = map_fn(x_k)`` until the configured stopping rule fires.

    With ``stop_rule`` needing the bound, ``s * alpha >= 1`` raises
    :class:`HypothesisError` up front. With the residual rule the run goes
    ahead uncertified.
    """
    rule = config.stop_rule
    needs_bound = rule in (StopRule.CERTIFIED_BOUND, StopRule.BOTH)
    if needs_bound and config.s * config.alpha >= 1:
        raise HypothesisError(
            f"s*alpha = {config.s * config.alpha} >= 1; the error bound needs s*alpha < 1")

    x = x0
    residuals: list[float] = []
    cert: Optional[ConvergenceCertificate] = None
    stopped = False
    for k in range(config.max_iter):
        nxt = map_fn(x)
        a = float(dist_fn(x, nxt))
        residuals.append(a)
        x = nxt
        if cert is None:
            cert = ConvergenceCertificate(a, config.alpha, config.s)
        small_residual = a <= config.tolerance
        small_bound = cert.fixed_point_bound_at(k + 1) <= config.tolerance
        if rule is StopRule.RESIDUAL:
            stopped = small_residual
        elif rule is StopRule.CERTIFIED_BOUND:
            stopped = small_bound
        else:
            stopped = small_residual and small_bound
        if stopped:
            break

    audit(cert, residuals)
    if not stopped:
        status = Status.MAX_ITER_REACHED
    elif cert.certified:
        status = Status.CONVERGED
    else:
        status = Status.UNCERTIFIED_CONVERGED
    return FixedPointResult(x, len(residuals), residuals, cert, status)
