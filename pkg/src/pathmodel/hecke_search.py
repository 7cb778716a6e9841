"""Search for Hecke paths between dominant points, and generalized Hecke paths.

Hecke search
------------
A Hecke path of Delta-length ``beta`` inside the dominant chamber moves along
directions of ``W beta`` and may only turn where the current direction
``nu`` hits a wall ``{b = k}`` with ``b(nu) < 0``; the new direction must be a
descendant of ``nu`` for the roots whose walls pass through the turning
point.  Those turning times form a finite set along each segment, so a depth
first search over (point, elapsed time, direction) with memoized dead states
decides existence outright.  An optional denominator bound restricts turning
times, mostly for experiments.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import ceil, floor
from typing import List, Optional, Sequence, Set, Tuple

from .chains import descendants, gtrsim
from .errors import BoundExceeded, NotDominantError, PreconditionError
from .paths import PLPath, delta_length
from .predicates import (
    check_dilation_theorem,
    contained_in_delta,
    is_generalized_hecke,
    is_hecke_path,
)
from .rational import Vec, add, is_integral, is_zero, scale, vec
from .root_system import RootSystem, is_dominant, is_vertex
from .weyl import affine_stabilizer, orbit


@dataclass
class HeckeResult:
    exists: bool
    witness: Optional[PLPath]
    offset: Vec
    denominator_bound: Optional[int]

    @property
    def complete(self) -> bool:
        """A negative answer is final only when no denominator bound was imposed."""
        return self.exists or self.denominator_bound is None


def _wall_times(R: RootSystem, y: Vec, nu: Vec, smax: Fraction) -> List[Fraction]:
    """Times ``0 < s <= smax`` where ``y + s nu`` meets a wall of a root negative on ``nu``."""
    times = set()
    for j in range(len(R.positive_roots)):
        b = R.evaluate(j, nu)
        if b >= 0:
            continue
        h = R.evaluate(j, y)
        low = h + smax * b
        k = ceil(low)
        while k < h:
            times.add((h - k) / -b)
            k += 1
    return sorted(times)


def _exit_time(y: Vec, nu: Vec) -> Optional[Fraction]:
    """Largest ``s`` with ``y + s nu`` dominant (None means unbounded)."""
    out = None
    for a, b in zip(y, nu):
        if b < 0:
            s = a / -b
            out = s if out is None else min(out, s)
    return out


def _can_start(x: Vec, nu: Vec) -> bool:
    return all(b >= 0 for a, b in zip(x, nu) if a == 0)


def hecke_exists(
    R: RootSystem, alpha, beta, gamma, denominator_bound: Optional[int] = None
) -> HeckeResult:
    """Is there a Hecke path in the chamber from ``alpha`` to ``gamma`` of Delta-length ``beta``?"""
    alpha, beta, gamma = vec(alpha), vec(beta), vec(gamma)
    for name, v in (("alpha", alpha), ("beta", beta), ("gamma", gamma)):
        if not is_dominant(R, v):
            raise NotDominantError(f"{name} is not dominant")
    if not is_integral(beta):
        raise PreconditionError("beta must be a coweight")
    if denominator_bound is not None and denominator_bound < 1:
        raise ValueError("denominator bound must be positive")
    if is_zero(beta):
        ok = alpha == gamma
        return HeckeResult(ok, PLPath(R) if ok else None, alpha, denominator_bound)

    directions = sorted(orbit(R, beta))
    dead: Set[tuple] = set()

    def search(y: Vec, t: Fraction, nu: Vec):
        key = (y, t, nu)
        if key in dead:
            return None
        rem = 1 - t
        if add(y, scale(rem, nu)) == gamma:
            return [scale(rem, nu)]
        exit_s = _exit_time(y, nu)
        smax = rem if exit_s is None else min(rem, exit_s)
        for s in _wall_times(R, y, nu, smax):
            if s >= rem:
                break
            if denominator_bound is not None and (t + s).denominator > denominator_bound:
                continue
            x = add(y, scale(s, nu))
            stab = affine_stabilizer(R, x)
            for nxt in descendants(R, nu, stab)[1:]:
                if not _can_start(x, nxt):
                    continue
                tail = search(x, t + s, nxt)
                if tail is not None:
                    return [scale(s, nu)] + tail
        dead.add(key)
        return None

    for nu in directions:
        if not _can_start(alpha, nu):
            continue
        segs = search(alpha, Fraction(0), nu)
        if segs is not None:
            witness = PLPath(R, segs)
            _verify(R, witness, alpha, beta, gamma)
            return HeckeResult(True, witness, alpha, denominator_bound)
    return HeckeResult(False, None, alpha, denominator_bound)


def _verify(R, p, alpha, beta, gamma) -> None:
    ok = (
        is_hecke_path(R, p, offset=alpha).verdict
        and delta_length(R, p).total == beta
        and add(alpha, p.endpoint()) == gamma
        and contained_in_delta(R, p, alpha)
    )
    if not ok:
        raise RuntimeError(f"search produced an invalid witness {p!r}")


# -- generalized Hecke paths -------------------------------------------------------

def _block_type(R: RootSystem, lam) -> Tuple[int, Fraction]:
    lam = vec(lam)
    nz = [i for i, x in enumerate(lam) if x != 0]
    if len(nz) != 1 or lam[nz[0]] < 0 or not is_integral(lam):
        raise PreconditionError(f"block {tuple(map(str, lam))} is not a positive multiple of a fundamental coweight")
    return nz[0], lam[nz[0]]


def enumerate_generalized_hecke(
    R: RootSystem, lambdas: Sequence, coord_bound: int, limit: Optional[int] = 100_000
) -> List[PLPath]:
    """Generalized Hecke paths of block type ``lambdas`` with vertices in a coordinate box.

    Block ``i`` is a run of pieces ``c w(w_j)`` (``lambdas[i] = k w_j``, the
    ``c`` summing to ``k``), each piece going from vertex to vertex.  Turns
    must satisfy the chain condition.  Returned paths are distinct and sorted.
    """
    types = [_block_type(R, lam) for lam in lambdas]
    if len({j for j, _ in types}) != len(types):
        raise PreconditionError("block types must be distinct fundamental coweights")
    dirs = {
        j: sorted(orbit(R, tuple(1 if i == j else 0 for i in range(R.rank)))) for j, _ in types
    }
    found: Set[PLPath] = set()
    box = Fraction(coord_bound)

    def rec(block: int, left: Fraction, y: Vec, prev: Optional[Vec], segs: List[Vec]):
        if block == len(types):
            p = PLPath(R, segs)
            if p not in found:
                found.add(p)
                if limit is not None and len(found) > limit:
                    raise BoundExceeded(f"more than {limit} generalized Hecke paths", partial=len(found))
            return
        j, k = types[block]
        if left == 0:
            rec(block + 1, types[block + 1][1] if block + 1 < len(types) else Fraction(0), y, prev, segs)
            return
        for nu in dirs[j]:
            turning = prev is not None and nu != prev
            if turning and not gtrsim(R, prev, nu, affine_stabilizer(R, y)):
                continue
            cands = set()
            for r in range(len(R.positive_roots)):
                b = R.evaluate(r, nu)
                if b == 0:
                    continue
                h = R.evaluate(r, y)
                lo, hi = sorted((h, h + left * b))
                for level in range(ceil(lo), floor(hi) + 1):
                    c = (level - h) / b
                    if 0 < c <= left:
                        cands.add(c)
            for c in sorted(cands):
                x = add(y, scale(c, nu))
                if any(abs(v) > box for v in x) or not is_vertex(R, x):
                    continue
                segs.append(scale(c, nu))
                rec(block, left - c, x, nu, segs)
                segs.pop()

    rec(0, types[0][1], R.zero(), None, [])
    out = [p for p in found if is_generalized_hecke(R, p)]
    return sorted(out, key=lambda p: [tuple(d) for d in p.segments])


@dataclass
class DilationReport:
    system: str
    lambdas: Tuple[Vec, ...]
    coord_bound: int
    paths_checked: int
    counterexamples: List[PLPath] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.counterexamples


def dilation_sweep(R: RootSystem, lambdas: Sequence, coord_bound: int) -> DilationReport:
    """Check that ``k_R`` times every enumerated generalized Hecke path is generalized LS."""
    lams = tuple(vec(x) for x in lambdas)
    paths = enumerate_generalized_hecke(R, lams, coord_bound)
    bad = [p for p in paths if not check_dilation_theorem(R, p, lams)]
    return DilationReport(str(R.cartan_type), lams, coord_bound, len(paths), bad)


def block_types(R: RootSystem, max_multiple: int = 2, max_blocks: int = 3):
    """Every block type with distinct fundamental coweights, multiples up to ``max_multiple``."""
    from itertools import permutations

    out = []
    for m in range(1, min(max_blocks, R.rank) + 1):
        for idx in permutations(range(R.rank), m):
            for ks in product(range(1, max_multiple + 1), repeat=m):
                out.append(
                    tuple(
                        tuple(Fraction(k) if i == j else Fraction(0) for i in range(R.rank))
                        for j, k in zip(idx, ks)
                    )
                )
    return out
