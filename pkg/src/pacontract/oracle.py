"""Brute-force ground truth on finite spaces."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .classify import PAModulus, pa_minimal_alpha
from .mapping import SelfMap, orbit
from .space import FiniteBSpace

CONTINUITY_NOTE = ("finite space with positive minimal distance carries the discrete "
                   "topology, so every self-map is continuous")


def brute_fixed_points(fmap: SelfMap) -> list[int]:
    return [i for i, t in enumerate(fmap.table) if t == i]


@dataclass(frozen=True)
class TheoremVerdict:
    pa_member: bool
    alpha_min: float
    s_alpha_product: float
    hypothesis_met: bool
    fixed_points: tuple[int, ...]
    unique: bool
    all_orbits_converge: bool
    continuity_note: str = CONTINUITY_NOTE

    @property
    def theorem_respected(self) -> bool:
        return not self.hypothesis_met or (self.unique and self.all_orbits_converge)

    def to_dict(self) -> dict:
        return {"pa_member": self.pa_member, "alpha_min": self.alpha_min,
                "s_alpha_product": self.s_alpha_product, "hypothesis_met": self.hypothesis_met,
                "fixed_points": list(self.fixed_points), "unique": self.unique,
                "all_orbits_converge": self.all_orbits_converge,
                "theorem_respected": self.theorem_respected,
                "continuity_note": self.continuity_note}


def verify_theorem(space: FiniteBSpace, fmap: SelfMap,
                   pa: Optional[PAModulus] = None) -> TheoremVerdict:
    """Compare the fixed-point theorem's conclusion with what brute force finds.

    An orbit converges on a finite space only by landing on a fixed point and
    staying there, i.e. its eventual cycle has period 1.
    """
    if pa is None:
        pa = pa_minimal_alpha(space, fmap)
    fixed = tuple(brute_fixed_points(fmap))
    converge = all(orbit(fmap, x).period == 1 for x in range(fmap.n))
    s_alpha = space.s * pa.alpha_min
    return TheoremVerdict(
        pa_member=pa.is_member,
        alpha_min=pa.alpha_min,
        s_alpha_product=s_alpha,
        hypothesis_met=pa.is_member and s_alpha < 1,
        fixed_points=fixed,
        unique=len(fixed) == 1,
        all_orbits_converge=converge,
    )


def residual_trace_exact(space: FiniteBSpace, fmap: SelfMap, x: int) -> list[Fraction]:
    """Residuals ``d(T^k x, T^{k+1} x)`` through one full orbit period plus one step."""
    orb = orbit(fmap, x)
    out, cur = [], x
    for _ in range(orb.pre_period + orb.period + 1):
        nxt = fmap(cur)
        out.append(Fraction(space.d(cur, nxt)))
        cur = nxt
    return out


def recursion_failures(space: FiniteBSpace, fmap: SelfMap, alpha, x: int,
                       n_from: int = 1) -> list[tuple[int, Fraction, Fraction]]:
    """Exact check of ``S_{n+1} <= alpha * S_n + a_0`` along the orbit of ``x``.

    ``S_n`` sums the first ``n`` residuals. Every ``n >= n_from`` is covered:
    past the orbit's horizon the residuals repeat with the cycle, and for a
    convergent orbit they are zero, so both sides are constant from there on.
    Returns ``(n, lhs, rhs)`` for each failure.
    """
    a = residual_trace_exact(space, fmap, x)
    alpha = Fraction(alpha)
    out = []
    for n in range(n_from, len(a)):
        lhs = sum(a[:n + 1])
        rhs = alpha * sum(a[:n]) + a[0]
        if lhs > rhs:
            out.append((n, lhs, rhs))
    return out


def windowed_sums(space: FiniteBSpace, fmap: SelfMap, x: int, p: int, n: int) -> Fraction:
    """``S_p(n)``: sum of ``n`` consecutive residuals starting at index ``p``."""
    total, cur = Fraction(0), fmap.power(p)(x)
    for _ in range(n):
        nxt = fmap(cur)
        total += Fraction(space.d(cur, nxt))
        cur = nxt
    return total
