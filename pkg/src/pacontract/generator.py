"""Finite b-metric spaces and self-maps for property tests and class censuses."""

from __future__ import annotations

import hashlib
import itertools
from dataclasses import dataclass, field
from typing import Iterator

import numpy as np
from scipy.sparse.csgraph import floyd_warshall

from .classify import ClassificationReport, classify_all
from .mapping import SelfMap
from .oracle import TheoremVerdict, verify_theorem
from .space import FiniteBSpace, InputError, minimal_coefficient

MAX_ENUMERATION_N = 6
KINDS = ("discrete", "power_metric", "random_perturbed")
PRNG_NAME = "numpy.random.PCG64"


@dataclass(frozen=True)
class GeneratorSpec:
    n: int
    kind: str = "discrete"
    p: float = 1.0
    seed: int = 0
    spread: float = 1.0  # random_perturbed edge weights are drawn from [1, 1 + spread]

    def __post_init__(self):
        if self.n < 1:
            raise InputError(f"n must be >= 1, got {self.n}")
        if self.kind not in KINDS:
            raise InputError(f"unknown kind {self.kind!r}; expected one of {KINDS}")
        if not self.p >= 1:
            raise InputError(f"p must be >= 1, got {self.p}")
        if not 0 <= self.seed < 2 ** 64:
            raise InputError("seed must be a 64-bit unsigned integer")
        if not self.spread >= 0:
            raise InputError("spread must be >= 0")


def random_metric(n: int, seed: int, spread: float = 1.0) -> np.ndarray:
    """Shortest-path completion of random weights on the complete graph: always a metric."""
    rng = np.random.Generator(np.random.PCG64(seed))
    w = 1.0 + spread * rng.random((n, n))
    w = np.triu(w, 1)
    w = w + w.T
    return floyd_warshall(w, directed=False)


def make_space(spec: GeneratorSpec) -> FiniteBSpace:
    n = spec.n
    if spec.kind == "discrete":
        return FiniteBSpace.from_matrix(np.ones((n, n)) - np.eye(n), 1.0)
    if spec.kind == "power_metric":
        x = np.arange(n, dtype=float)
        d = np.abs(x[:, None] - x[None, :]) ** spec.p
    else:
        d = random_metric(n, spec.seed, spec.spread) ** spec.p
    return FiniteBSpace.from_matrix(d, minimal_coefficient(d))


def enumerate_maps(n: int) -> Iterator[SelfMap]:
    """All ``n**n`` self-maps of ``{0, ..., n-1}`` in lexicographic order of their tables."""
    if n < 1:
        raise InputError(f"n must be >= 1, got {n}")
    if n > MAX_ENUMERATION_N:
        raise InputError(f"n={n} gives {n ** n} maps; exhaustive enumeration stops at "
                         f"n={MAX_ENUMERATION_N}, sample maps instead")
    for table in itertools.product(range(n), repeat=n):
        yield SelfMap(table)


def space_fingerprint(space: FiniteBSpace) -> str:
    h = hashlib.sha256()
    h.update(np.ascontiguousarray(space.dist, dtype="<f8").tobytes())
    h.update(repr(space.s).encode())
    return h.hexdigest()


def _cell(b: bool, k: bool, p: bool) -> str:
    return "".join(tag if flag else "-" for tag, flag in zip("BKP", (b, k, p)))


@dataclass(frozen=True)
class CensusRecord:
    table: tuple[int, ...]
    report: ClassificationReport
    verdict: TheoremVerdict

    @property
    def cell(self) -> str:
        return _cell(self.report.banach.is_member, self.report.kannan.is_member,
                     self.report.pa.is_member)

    def to_dict(self) -> dict:
        return {"table": list(self.table), "cell": self.cell,
                "classification": self.report.to_dict(), "theorem": self.verdict.to_dict()}


# derived cells: name -> predicate over (banach, kannan, pa)
DERIVED_CELLS = {
    "banach": lambda b, k, p: b,
    "kannan": lambda b, k, p: k,
    "pa": lambda b, k, p: p,
    "banach_and_pa": lambda b, k, p: b and p,
    "pa_not_banach": lambda b, k, p: p and not b,
    "banach_not_pa": lambda b, k, p: b and not p,
    "kannan_and_pa": lambda b, k, p: k and p,
    "kannan_not_pa": lambda b, k, p: k and not p,
    "pa_not_kannan": lambda b, k, p: p and not k,
    "none": lambda b, k, p: not (b or k or p),
}


@dataclass
class CensusReport:
    n: int
    s: float
    fingerprint: str
    total: int = 0
    counts: dict[str, int] = field(default_factory=lambda: {c: 0 for c in DERIVED_CELLS})
    # raw membership cells, e.g. "B-P" = Banach and PA but not Kannan
    cells: dict[str, int] = field(default_factory=lambda: {
        _cell(*f): 0 for f in itertools.product((True, False), repeat=3)})
    witnesses: dict[str, list[int]] = field(default_factory=dict)
    theorem_violations: list[list[int]] = field(default_factory=list)
    banach_direct_failures: list[list[int]] = field(default_factory=list)
    # PA members with s*alpha_min >= 1 whose fixed point is nevertheless unique
    unique_without_s_alpha: int = 0
    pa_without_s_alpha: int = 0
    prng: str = PRNG_NAME

    def add(self, rec: CensusRecord) -> None:
        self.total += 1
        flags = (rec.report.banach.is_member, rec.report.kannan.is_member,
                 rec.report.pa.is_member)
        self.cells[rec.cell] += 1
        for name, pred in DERIVED_CELLS.items():
            if pred(*flags):
                self.counts[name] += 1
                self.witnesses.setdefault(name, list(rec.table))
        if not rec.verdict.theorem_respected:
            self.theorem_violations.append(list(rec.table))
        if rec.report.banach_direct_check is False:
            self.banach_direct_failures.append(list(rec.table))
        if rec.verdict.pa_member and not rec.verdict.hypothesis_met:
            self.pa_without_s_alpha += 1
            if len(rec.verdict.fixed_points) <= 1:
                self.unique_without_s_alpha += 1

    @property
    def banach_subset_pa(self) -> bool:
        return self.counts["banach_not_pa"] == 0 and not self.banach_direct_failures

    @property
    def release_blocking(self) -> list[str]:
        out = []
        if not self.banach_subset_pa:
            out.append("banach_not_pa")
        if self.theorem_violations:
            out.append("theorem_violated")
        return out

    def to_dict(self) -> dict:
        return {"n": self.n, "s": self.s, "fingerprint": self.fingerprint, "prng": self.prng,
                "total": self.total, "counts": dict(self.counts), "cells": dict(self.cells),
                "witnesses": dict(sorted(self.witnesses.items())),
                "banach_subset_pa": self.banach_subset_pa,
                "theorem_violations": self.theorem_violations,
                "banach_direct_failures": self.banach_direct_failures,
                "pa_without_s_alpha": self.pa_without_s_alpha,
                "unique_without_s_alpha": self.unique_without_s_alpha,
                "release_blocking": self.release_blocking}


def census_records(space: FiniteBSpace) -> Iterator[CensusRecord]:
    for fmap in enumerate_maps(space.n):
        rep = classify_all(space, fmap)
        yield CensusRecord(fmap.table, rep, verify_theorem(space, fmap, rep.pa))


def census(space: FiniteBSpace, on_record=None) -> CensusReport:
    """Classify every self-map of ``space``; ``on_record`` sees each record as it is made."""
    report = CensusReport(space.n, space.s, space_fingerprint(space))
    for rec in census_records(space):
        if on_record is not None:
            on_record(rec)
        report.add(rec)
    return report
