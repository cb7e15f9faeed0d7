"""Finite b-metric spaces: axiom validation and the minimal coefficient."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

import numpy as np

# Relative slack on the relaxed triangle inequality only; axioms (i)-(ii) are exact.
TRIANGLE_RTOL = 1e-12


class InputError(ValueError):
    """Malformed input: rejected before any axiom is evaluated."""


@dataclass(frozen=True)
class Violation:
    axiom: str  # "identity", "symmetry" or "triangle"
    indices: tuple[int, ...]
    lhs: float
    rhs: float

    def to_dict(self) -> dict:
        return {"axiom": self.axiom, "indices": list(self.indices),
                "lhs": self.lhs, "rhs": self.rhs}


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = ()

    @property
    def valid(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {"valid": self.valid,
                "violations": [v.to_dict() for v in self.violations]}


def as_distance_matrix(dist) -> np.ndarray:
    """Coerce ``dist`` to a float matrix, rejecting malformed input."""
    try:
        d = np.array(dist, dtype=float)
    except (TypeError, ValueError) as exc:
        raise InputError(f"distance matrix is not numeric: {exc}") from None
    if d.ndim != 2 or d.shape[0] != d.shape[1] or d.shape[0] < 1:
        raise InputError(f"distance matrix must be square and non-empty, got shape {d.shape}")
    if not np.all(np.isfinite(d)):
        raise InputError("distance matrix has non-finite entries")
    if np.any(d < 0):
        raise InputError("distance matrix has negative entries")
    return d


def validate_b_metric(dist, s: float) -> ValidationReport:
    """Check the three b-metric axioms exhaustively and report every violation.

    Violations are listed axiom by axiom, each in row-major index order, so the
    report is deterministic. Input errors (non-square, negative or non-finite
    entries, ``s < 1``) raise :class:`InputError` instead.
    """
    d = as_distance_matrix(dist)
    s = float(s)
    if not np.isfinite(s) or s < 1:
        raise InputError(f"coefficient s must be a finite real >= 1, got {s}")
    n = d.shape[0]
    out: list[Violation] = []

    for i in range(n):
        for j in range(n):
            if (d[i, j] == 0) != (i == j):
                out.append(Violation("identity", (i, j), float(d[i, j]), 0.0))

    for i in range(n):
        for j in range(i + 1, n):
            if d[i, j] != d[j, i]:
                out.append(Violation("symmetry", (i, j), float(d[i, j]), float(d[j, i])))

    # rhs[i, j, k] = s * (d[i, j] + d[j, k]); lhs[i, j, k] = d[i, k]
    rhs = s * (d[:, :, None] + d[None, :, :])
    lhs = np.broadcast_to(d[:, None, :], rhs.shape)
    bad = lhs > rhs * (1 + TRIANGLE_RTOL)
    for i, j, k in zip(*np.nonzero(bad)):
        out.append(Violation("triangle", (int(i), int(j), int(k)),
                             float(lhs[i, j, k]), float(rhs[i, j, k])))
    return ValidationReport(tuple(out))


def minimal_coefficient(dist) -> float:
    """Smallest ``s >= 1`` for which ``dist`` satisfies the relaxed triangle inequality."""
    d = as_distance_matrix(dist)
    n = d.shape[0]
    off = ~np.eye(n, dtype=bool)
    if np.any(np.diag(d) != 0) or np.any(d[off] == 0) or np.any(d != d.T):
        raise InputError("minimal_coefficient needs a symmetric matrix with zero diagonal only")
    best = 1.0
    for i in range(n):
        for k in range(n):
            if i == k:
                continue
            for j in range(n):
                if j == i or j == k:
                    continue
                den = d[i, j] + d[j, k]
                assert den > 0, "positive off-diagonal entries cannot sum to zero"
                best = max(best, d[i, k] / den)
    return float(best)


@dataclass(frozen=True, eq=False)
class FiniteBSpace:
    """A finite point set with a distance matrix and b-metric coefficient ``s``.

    Build through :meth:`from_matrix`, which enforces all three axioms.
    """

    points: tuple[str, ...]
    dist: np.ndarray = field(repr=False)
    s: float = 1.0

    def __post_init__(self):
        self.dist.setflags(write=False)

    @classmethod
    def from_matrix(cls, dist, s: float | None = None,
                    points: Sequence[str] | None = None) -> "FiniteBSpace":
        d = as_distance_matrix(dist).copy()
        n = d.shape[0]
        labels = tuple(str(i) for i in range(n)) if points is None else tuple(map(str, points))
        if len(labels) != n:
            raise InputError(f"{len(labels)} point labels for a {n}x{n} matrix")
        if len(set(labels)) != n:
            raise InputError("point labels must be distinct")
        if s is None:
            s = minimal_coefficient(d)
        report = validate_b_metric(d, s)
        if not report.valid:
            first = report.violations[0]
            raise InputError(f"not a b-metric with s={s}: {len(report.violations)} violations, "
                             f"first {first.axiom} at {first.indices}")
        return cls(labels, d, float(s))

    @property
    def n(self) -> int:
        return len(self.points)

    def d(self, i: int, j: int) -> float:
        return float(self.dist[i, j])

    def to_dict(self) -> dict:
        return {"points": list(self.points), "dist": self.dist.tolist(), "s": self.s}

    @classmethod
    def from_dict(cls, data: dict) -> "FiniteBSpace":
        if not isinstance(data, dict) or "dist" not in data:
            raise InputError("space JSON must be an object with a 'dist' field")
        return cls.from_matrix(data["dist"], data.get("s"), data.get("points"))


def read_space_json(path) -> dict:
    """Raw space JSON; ``InputError`` on a missing file or malformed content."""
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read space file {path}: {exc}") from None
    if not isinstance(data, dict) or "dist" not in data:
        raise InputError("space JSON must be an object with a 'dist' field")
    return data


def load_space(path) -> FiniteBSpace:
    return FiniteBSpace.from_dict(read_space_json(path))


def discrete_space(n: int) -> FiniteBSpace:
    """The discrete metric on ``n`` points (all off-diagonal distances 1)."""
    return FiniteBSpace.from_matrix(np.ones((n, n)) - np.eye(n), 1.0)
