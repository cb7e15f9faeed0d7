"""Self-maps on finite spaces, orbits, and pairwise distance traces."""

from __future__ import annotations

import enum
import json
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence, Union

from .space import FiniteBSpace, InputError


class MergeState(enum.Enum):
    NEVER = "never"


NEVER = MergeState.NEVER
MergeIndex = Union[int, MergeState]


@dataclass(frozen=True)
class SelfMap:
    """A total function on ``{0, ..., n-1}``; ``table[i]`` is the image of ``i``."""

    table: tuple[int, ...]

    def __post_init__(self):
        n = len(self.table)
        if n < 1:
            raise InputError("a self-map needs at least one point")
        for t in self.table:
            if isinstance(t, bool) or not isinstance(t, int) or not 0 <= t < n:
                raise InputError(f"map entry {t!r} is not an index in [0, {n})")

    @classmethod
    def of(cls, table: Sequence[int]) -> "SelfMap":
        return cls(tuple(table))

    @property
    def n(self) -> int:
        return len(self.table)

    def __call__(self, i: int) -> int:
        return self.table[i]

    def power(self, k: int) -> "SelfMap":
        tbl = list(range(self.n))
        for _ in range(k):
            tbl = [self.table[t] for t in tbl]
        return SelfMap(tuple(tbl))

    def to_dict(self) -> dict:
        return {"table": list(self.table)}

    @classmethod
    def from_dict(cls, data: dict) -> "SelfMap":
        if not isinstance(data, dict) or not isinstance(data.get("table"), list):
            raise InputError("map JSON must be an object with a 'table' list")
        return cls(tuple(data["table"]))


def load_map(path) -> SelfMap:
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read map file {path}: {exc}") from None
    return SelfMap.from_dict(data)


def identity_map(n: int) -> SelfMap:
    return SelfMap(tuple(range(n)))


def constant_map(n: int, c: int = 0) -> SelfMap:
    return SelfMap((c,) * n)


@dataclass(frozen=True)
class Orbit:
    pre_period: int
    period: int
    path: tuple  # states x_0 .. x_{pre_period+period-1}


def _eventual_cycle(step, start) -> Orbit:
    seen = {}
    path = []
    state = start
    while state not in seen:
        seen[state] = len(path)
        path.append(state)
        state = step(state)
    mu = seen[state]
    return Orbit(mu, len(path) - mu, tuple(path))


def orbit(fmap: SelfMap, start: int) -> Orbit:
    """Pre-period, period and path of ``start`` under ``fmap`` (both minimal)."""
    if not 0 <= start < fmap.n:
        raise InputError(f"start {start} out of range")
    return _eventual_cycle(fmap, start)


def paired_orbit(fmap: SelfMap, i: int, j: int) -> Orbit:
    """Orbit of ``(i, j)`` in the product functional graph ``(a, b) -> (T a, T b)``."""
    if not (0 <= i < fmap.n and 0 <= j < fmap.n):
        raise InputError(f"pair ({i}, {j}) out of range")
    return _eventual_cycle(lambda ab: (fmap(ab[0]), fmap(ab[1])), (i, j))


@dataclass(frozen=True)
class DeltaTrace:
    """Distances ``d(T^k x_i, T^k x_j)`` for ``k = 0..H`` over one full paired orbit.

    ``H`` is pre-period plus period of the pair, so ``deltas[H]`` repeats
    ``deltas[pre_period]``. ``prefix_sums[n]`` is the sum of the first ``n`` deltas.
    """

    pair: tuple[int, int]
    deltas: tuple[float, ...]
    pre_period: int
    period: int
    merge_index: MergeIndex
    prefix_sums: tuple[float, ...]

    @property
    def horizon(self) -> int:
        return self.pre_period + self.period

    @property
    def merged(self) -> bool:
        return self.merge_index is not NEVER

    @property
    def total(self) -> float:
        """Sum of all deltas; only meaningful once the pair has merged."""
        return self.prefix_sums[-1]

    def delta(self, k: int) -> float:
        """``delta_k`` for any ``k >= 0``, unrolling the cycle."""
        if k < len(self.deltas):
            return self.deltas[k]
        return self.deltas[self.pre_period + (k - self.pre_period) % self.period]


def delta_trace(space: FiniteBSpace, fmap: SelfMap, i: int, j: int) -> DeltaTrace:
    if fmap.n != space.n:
        raise InputError(f"map on {fmap.n} points for a space of {space.n}")
    orb = paired_orbit(fmap, i, j)
    states = list(orb.path) + [orb.path[orb.pre_period]]
    deltas = tuple(space.d(a, b) for a, b in states)
    h = orb.pre_period + orb.period
    # the cycle lies inside deltas[pre_period:h]; merged iff it is all zero
    if any(deltas[orb.pre_period:h]):
        merge: MergeIndex = NEVER
    else:
        merge = orb.pre_period
        while merge > 0 and deltas[merge - 1] == 0:
            merge -= 1
    prefix = [0.0]
    for k in range(len(deltas)):
        prefix.append(math.fsum(deltas[:k + 1]))
    return DeltaTrace((i, j), deltas, orb.pre_period, orb.period, merge, tuple(prefix))


def successive_distances(space: FiniteBSpace, fmap: SelfMap, x: int, count: int) -> list[float]:
    """Residuals ``a_k = d(T^k x, T^{k+1} x)`` for ``k < count``."""
    out = []
    cur = x
    for _ in range(count):
        nxt = fmap(cur)
        out.append(space.d(cur, nxt))
        cur = nxt
    return out
