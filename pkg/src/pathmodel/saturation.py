"""Saturation experiments over boxes of dominant triples.

A triple ``(alpha, beta, gamma)`` is *live* when the invariants of the triple
tensor product of the ``N``-fold scaled modules are nonzero for some
``N <= n_max``.  For each live triple the scan asks whether invariants already
exist at the dilation ``k`` under test; failures are violations.

Nonvanishing is decided by the Brauer-Klimyk oracle; the path model is
cross-checked against it elsewhere.
"""
from __future__ import annotations

import csv
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import List, Optional, Tuple

from . import config
from .errors import BoundExceeded
from .hecke_search import hecke_exists
from .root_system import RootSystem, build, parse_cartan_type, triple_lattice_check
from .tensor import invariant_triple_nonzero, oracle_decompose

EXTENDED_LIMIT = 24

IntVec = Tuple[int, ...]


@dataclass(frozen=True)
class ScanConfig:
    system: str
    coord_bound: int
    n_max: int
    k: int
    workers: int = 1
    extended: bool = False

    def __post_init__(self):
        for name in ("coord_bound", "n_max", "k", "workers"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be at least 1")
        object.__setattr__(self, "system", str(parse_cartan_type(self.system)))


@dataclass
class ScanRow:
    alpha: IntVec
    beta: IntVec
    gamma: IntVec
    first_live_N: Optional[int]
    nonzero_at_k: Optional[bool]


@dataclass
class ScanReport:
    config: ScanConfig
    triples_scanned: int
    triples_with_some_N_nonzero: int
    violations: List[Tuple[IntVec, IntVec, IntVec]]
    rows: List[ScanRow] = field(default_factory=list)
    runtime: float = 0.0
    label: str = ""

    def write_csv(self, path) -> None:
        with open(path, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["system", "alpha", "beta", "gamma", "first_live_N", "nonzero_at_k"])
            for r in self.rows:
                w.writerow(
                    [
                        self.config.system,
                        _fmt(r.alpha),
                        _fmt(r.beta),
                        _fmt(r.gamma),
                        "" if r.first_live_N is None else r.first_live_N,
                        "" if r.nonzero_at_k is None else int(r.nonzero_at_k),
                    ]
                )


def _fmt(v) -> str:
    return " ".join(str(x) for x in v)


def evidence_label(R: RootSystem, k: int) -> str:
    kk = R.k_R ** 2
    if k % kk == 0:
        return f"theorem-backed (k is a multiple of k_R^2 = {kk})"
    return f"evidence only (k = {k} is not a multiple of k_R^2 = {kk})"


def _scaled(v, n):
    return tuple(n * x for x in v)


def _scan_alpha(args) -> List[ScanRow]:
    system, alpha, coord_bound, n_max, k = args
    R = build(system)
    rows = []
    box = list(product(range(coord_bound + 1), repeat=R.rank))
    for beta in box:
        for gamma in box:
            if not triple_lattice_check(R, alpha, beta, gamma):
                continue
            first = None
            for n in range(1, n_max + 1):
                if invariant_triple_nonzero(R, _scaled(alpha, n), _scaled(beta, n), _scaled(gamma, n)):
                    first = n
                    break
            at_k = None
            if first is not None:
                at_k = invariant_triple_nonzero(R, _scaled(alpha, k), _scaled(beta, k), _scaled(gamma, k))
            rows.append(ScanRow(alpha, beta, gamma, first, at_k))
    return rows


def saturation_scan(cfg: ScanConfig) -> ScanReport:
    R = build(cfg.system)
    if R.weyl_order > config.weyl_order_bound():
        raise BoundExceeded(f"|W| = {R.weyl_order} exceeds the Weyl-order bound")
    biggest = max(cfg.k, cfg.n_max) * cfg.coord_bound
    if biggest > EXTENDED_LIMIT and not cfg.extended:
        raise BoundExceeded(
            f"scaled coordinates reach {biggest} > {EXTENDED_LIMIT}; pass extended=True to allow"
        )
    start = time.perf_counter()
    alphas = list(product(range(cfg.coord_bound + 1), repeat=R.rank))
    jobs = [(cfg.system, a, cfg.coord_bound, cfg.n_max, cfg.k) for a in alphas]
    if cfg.workers > 1:
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            chunks = list(pool.map(_scan_alpha, jobs))
    else:
        chunks = [_scan_alpha(j) for j in jobs]
    rows = [r for chunk in chunks for r in chunk]
    rows.sort(key=lambda r: (r.alpha, r.beta, r.gamma))
    live = [r for r in rows if r.first_live_N is not None]
    violations = [(r.alpha, r.beta, r.gamma) for r in live if not r.nonzero_at_k]
    return ScanReport(
        config=cfg,
        triples_scanned=len(rows),
        triples_with_some_N_nonzero=len(live),
        violations=violations,
        rows=rows,
        runtime=time.perf_counter() - start,
        label=evidence_label(R, cfg.k),
    )


def is_minuscule_sum(R: RootSystem, v) -> bool:
    allowed = set(R.minuscule_indices())
    v = [Fraction(x) for x in v]
    return all(x.denominator == 1 and x >= 0 and (x == 0 or i in allowed) for i, x in enumerate(v))


def minuscule_check(R: RootSystem, alpha, beta, gamma, denominator_bound: Optional[int] = None) -> str:
    """``"pass"``, ``"fail"`` or ``"inapplicable"``.

    Applies when one of the three is a sum of minuscule coweights.  A Hecke
    path from ``alpha`` to ``gamma`` of Delta-length ``beta`` must then come
    with ``gamma`` occurring in the tensor product of ``alpha`` and ``beta``.
    """
    if not any(is_minuscule_sum(R, v) for v in (alpha, beta, gamma)):
        return "inapplicable"
    if not hecke_exists(R, alpha, beta, gamma, denominator_bound).exists:
        return "pass"
    return "pass" if tuple(int(x) for x in gamma) in oracle_decompose(R, alpha, beta) else "fail"
