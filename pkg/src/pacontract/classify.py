"""Banach, Kannan and path-averaged contraction classes on finite b-metric spaces.

Each class gets its minimal modulus and a witness pair. Moduli are exact
rationals (``*_exact``) so the strict thresholds are decided without rounding;
the float views are for display. For the path-averaged
class there are two independent routes: :func:`pa_minimal_alpha` uses the
finite-space characterization (every pair of orbits must eventually merge),
while :func:`pa_check_direct` evaluates the averaged inequality literally,
in exact rational arithmetic, over one full period of each paired orbit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional, Union

from .mapping import SelfMap, delta_trace
from .space import FiniteBSpace, InputError

Pair = tuple[int, int]

ASYMPTOTIC = "asymptotic"


def _pairs(n: int):
    # distances are symmetric, so unordered pairs cover every (x, y) with x != y
    return combinations(range(n), 2)


def _json_real(x: float):
    return "inf" if math.isinf(x) else x


def _json_pair(p: Optional[Pair]):
    return None if p is None else list(p)


@dataclass(frozen=True)
class BanachModulus:
    beta_min_exact: Fraction
    witness: Optional[Pair]

    @property
    def beta_min(self) -> float:
        return float(self.beta_min_exact)

    @property
    def is_member(self) -> bool:
        return self.beta_min_exact < 1

    def to_dict(self) -> dict:
        return {"is_member": self.is_member, "beta_min": self.beta_min,
                "beta_min_exact": str(self.beta_min_exact), "witness": _json_pair(self.witness)}


@dataclass(frozen=True)
class KannanModulus:
    # INF when some pair has d(Tx, Ty) > 0 = d(x, Tx) + d(y, Ty)
    beta_min_exact: Union[Fraction, float]
    threshold_exact: Fraction
    witness: Optional[Pair]
    constraints: tuple[tuple[Pair, float], ...] = ()  # per constraining pair, index order

    @property
    def beta_min(self) -> float:
        return float(self.beta_min_exact)

    @property
    def threshold(self) -> float:
        return float(self.threshold_exact)

    def constraint(self, i: int, j: int) -> Optional[float]:
        key = (min(i, j), max(i, j))
        return dict(self.constraints).get(key)

    @property
    def is_member(self) -> bool:
        return self.beta_min_exact < self.threshold_exact

    def to_dict(self) -> dict:
        return {"is_member": self.is_member, "beta_min": _json_real(self.beta_min),
                "threshold": self.threshold, "witness": _json_pair(self.witness),
                "constraints": [[list(p), _json_real(r)] for p, r in self.constraints]}


@dataclass(frozen=True)
class PAModulus:
    """Outcome of the closed-form path-averaged test.

    For members, ``alpha_min`` is the infimum of admissible factors at horizon
    ``n_min``. For non-members ``alpha_min`` is 1 (no factor below 1 works),
    ``n_min`` is None and ``witness`` is a pair whose orbits never merge.
    """

    is_member: bool
    alpha_min: float
    n_min: Optional[int]
    witness: Optional[Pair]
    alpha_min_exact: Fraction = Fraction(0)

    def to_dict(self) -> dict:
        return {"is_member": self.is_member, "alpha_min": self.alpha_min,
                "alpha_min_exact": str(self.alpha_min_exact), "n_min": self.n_min,
                "witness": _json_pair(self.witness)}


@dataclass(frozen=True)
class DirectCheck:
    holds: bool
    pair: Optional[Pair] = None
    n: Union[int, str, None] = None  # failing n, or ASYMPTOTIC

    def __bool__(self) -> bool:
        return self.holds

    def to_dict(self) -> dict:
        return {"holds": self.holds, "pair": _json_pair(self.pair), "n": self.n}


def _check_sizes(space: FiniteBSpace, fmap: SelfMap):
    if fmap.n != space.n:
        raise InputError(f"map on {fmap.n} points for a space of {space.n}")


def _q(x: float) -> Fraction:
    return Fraction(x)  # exact: every double is a dyadic rational


def banach_modulus(space: FiniteBSpace, fmap: SelfMap) -> BanachModulus:
    _check_sizes(space, fmap)
    best, witness = Fraction(0), None
    for i, j in _pairs(space.n):
        r = _q(space.d(fmap(i), fmap(j))) / _q(space.d(i, j))
        if witness is None or r > best:
            best, witness = r, (i, j)
    return BanachModulus(best, witness)


def kannan_modulus(space: FiniteBSpace, fmap: SelfMap) -> KannanModulus:
    _check_sizes(space, fmap)
    best, witness, constraints = Fraction(0), None, []
    for i, j in _pairs(space.n):
        num = _q(space.d(fmap(i), fmap(j)))
        if num == 0:
            continue
        den = _q(space.d(i, fmap(i))) + _q(space.d(j, fmap(j)))
        r = math.inf if den == 0 else num / den
        constraints.append(((i, j), float(r)))
        if witness is None or r > best:
            best, witness = r, (i, j)
    return KannanModulus(best, 1 / (2 * _q(space.s)), witness, tuple(constraints))


def pa_minimal_alpha(space: FiniteBSpace, fmap: SelfMap) -> PAModulus:
    """Smallest path-averaged factor via the merge characterization.

    A pair whose orbits never coincide keeps both averaged sums growing at the
    same rate, so it rules out every factor below 1. Once all pairs merge, the
    inequality at any ``n`` past the merge index reads
    ``total - delta_0 <= alpha * total``; taking ``N`` as the largest merge
    index makes that the only binding constraint for each pair.
    """
    _check_sizes(space, fmap)
    best, witness, n_min = Fraction(0), None, 1
    for i, j in _pairs(space.n):
        tr = delta_trace(space, fmap, i, j)
        if not tr.merged:
            return PAModulus(False, 1.0, None, (i, j), Fraction(1))
        n_min = max(n_min, tr.merge_index)
        exact = [_q(x) for x in tr.deltas[:tr.merge_index]]
        total = sum(exact)
        r = (total - exact[0]) / total
        if r > best:
            best, witness = r, (i, j)
    return PAModulus(True, float(best), n_min, witness, best)


def _pair_horizon(fmap: SelfMap, i: int, j: int) -> tuple[int, int]:
    seen = {}
    state, k = (i, j), 0
    while state not in seen:
        seen[state] = k
        state = (fmap(state[0]), fmap(state[1]))
        k += 1
    return seen[state], k - seen[state]


def pa_check_direct(space: FiniteBSpace, fmap: SelfMap, alpha: Union[float, Fraction],
                    n_start: int) -> DirectCheck:
    """Evaluate the averaged inequality for every pair and every ``n >= n_start``.

    Finite ``n`` are checked up to one step past the paired orbit's horizon,
    after which both sums either stay constant or grow by the same cycle
    total per period. In the latter case the ratio tends to 1 and the check
    fails with ``n = ASYMPTOTIC``. Arithmetic is exact (``Fraction``).
    """
    _check_sizes(space, fmap)
    if not 0 < alpha < 1:
        raise InputError(f"alpha must lie in (0, 1), got {alpha}")
    if n_start < 1:
        raise InputError(f"n_start must be >= 1, got {n_start}")
    a = Fraction(alpha)
    for i, j in _pairs(space.n):
        mu, lam = _pair_horizon(fmap, i, j)
        h = mu + lam
        last = max(n_start, h + 1)
        deltas = []
        x, y = i, j
        for _ in range(last + 1):
            deltas.append(Fraction(space.d(x, y)))
            x, y = fmap(x), fmap(y)
        if sum(deltas[mu:h]) > 0:
            return DirectCheck(False, (i, j), ASYMPTOTIC)
        for n in range(n_start, last + 1):
            shifted = sum(deltas[1:n + 1])
            base = sum(deltas[:n])
            if shifted > a * base:
                return DirectCheck(False, (i, j), n)
    return DirectCheck(True)


@dataclass(frozen=True)
class ClassificationReport:
    banach: BanachModulus
    kannan: KannanModulus
    pa: PAModulus
    s: float
    banach_implies_pa: bool
    # pa_check_direct(beta_min_exact, 1) when 0 < beta_min < 1, otherwise None
    banach_direct_check: Optional[bool]

    def to_dict(self) -> dict:
        return {"s": self.s, "banach": self.banach.to_dict(), "kannan": self.kannan.to_dict(),
                "pa": self.pa.to_dict(), "banach_implies_pa": self.banach_implies_pa,
                "banach_direct_check": self.banach_direct_check}


def classify_all(space: FiniteBSpace, fmap: SelfMap) -> ClassificationReport:
    b = banach_modulus(space, fmap)
    k = kannan_modulus(space, fmap)
    p = pa_minimal_alpha(space, fmap)
    direct = None
    if 0 < b.beta_min < 1:
        direct = pa_check_direct(space, fmap, b.beta_min_exact, 1).holds
    implies = (not b.is_member) or (p.is_member and direct is not False)
    return ClassificationReport(b, k, p, space.s, implies, direct)
