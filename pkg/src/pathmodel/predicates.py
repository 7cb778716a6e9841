"""Path classes decided breakpoint by breakpoint.

Every check looks at the interior breakpoints of a canonical path, where the
incoming direction must be related to the outgoing one by a chain inside the
affine stabilizer of the breakpoint.  What kind of chain is required separates
the classes:

=====================  ==========================================================
chain condition        incoming ``>=`` some vector in the outgoing closed chamber
Hecke                  billiard, incoming ``>=`` outgoing
simple chain           billiard, a single reflection takes incoming to outgoing
LS                     billiard, a chain of steps that are maximal in W
=====================  ==========================================================

Paths may carry an ``offset`` (their true starting point); stabilizers are
computed at ``offset + p(t)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Sequence

from . import chains
from .chains import Chain
from .errors import NotDominantError, PreconditionError
from .paths import (
    PLPath,
    break_data,
    delta_length,
    dilate,
    is_billiard,
)
from .rational import Vec, add, is_integral, is_zero, positive_multiple, primitive_scale, scale, sub, vec
from .root_system import RootSystem, is_dominant, is_vertex
from .weyl import affine_stabilizer, dominant


@dataclass
class PathVerdict:
    verdict: bool
    witnesses: List[Optional[Chain]] = field(default_factory=list)
    reason: Optional[str] = None

    def __bool__(self):
        return self.verdict

    def to_json_obj(self) -> dict:
        obj = {"verdict": self.verdict}
        if self.reason:
            obj["reason"] = self.reason
        if self.witnesses:
            obj["witnesses"] = [
                None
                if c is None
                else {
                    "vertices": [[str(x) for x in v] for v in c.vertices],
                    "roots": list(c.reflection_roots),
                }
                for c in self.witnesses
            ]
        return obj


def _fail(reason: str, witnesses=None) -> PathVerdict:
    return PathVerdict(False, witnesses or [], reason)


def _in_orbit_scale(R: RootSystem, d: Vec) -> Vec:
    """``d`` rescaled so its dominant projection is primitive integral."""
    return scale(primitive_scale(dominant(R, d)), d)


def _fmt(v) -> str:
    return "(" + ",".join(str(x) for x in v) + ")"


def satisfies_chain_condition(R: RootSystem, p: PLPath, offset=None) -> PathVerdict:
    for b in break_data(R, p, offset):
        if not chains.gtrsim(R, b.left, b.right, affine_stabilizer(R, b.point)):
            return _fail(f"chain condition fails at t={b.time}, point {_fmt(b.point)}")
    return PathVerdict(True)


def _billiard_breaks(R, p, offset, finder, what):
    if not is_billiard(R, p):
        return _fail("not a billiard path")
    witnesses = []
    for b in break_data(R, p, offset):
        left, right = _in_orbit_scale(R, b.left), _in_orbit_scale(R, b.right)
        c = finder(left, right, affine_stabilizer(R, b.point))
        if c is None:
            return _fail(f"no {what} at t={b.time}, point {_fmt(b.point)}", witnesses)
        witnesses.append(c)
    return PathVerdict(True, witnesses)


def is_hecke_path(R: RootSystem, p: PLPath, offset=None) -> PathVerdict:
    return _billiard_breaks(
        R, p, offset, lambda a, b, s: chains.find_chain(R, a, b, s), "chain in the local stabilizer"
    )


def satisfies_simple_chain_condition(R: RootSystem, p: PLPath, offset=None) -> bool:
    def single(a, b, s):
        for j in s.root_indices:
            if R.evaluate(j, a) < 0 and chains.reflect(R, j, a) == b:
                return Chain((a, b), (j,))
        return None

    return _billiard_breaks(R, p, offset, single, "single reflection").verdict


def _check_coweight(lam) -> Vec:
    lam = vec(lam)
    if not is_integral(lam) or any(x < 0 for x in lam):
        raise NotDominantError(f"{_fmt(lam)} is not a dominant coweight")
    return lam


def is_ls_path(R: RootSystem, p: PLPath, lam, offset=None) -> PathVerdict:
    """LS test: billiard of Delta-length ``lam`` with W-maximal local chains at the breaks."""
    lam = _check_coweight(lam)
    total = delta_length(R, p).total
    if total != lam:
        return _fail(f"Delta-length {_fmt(total)} differs from {_fmt(lam)}")
    if is_zero(lam):
        return PathVerdict(True)
    return _billiard_breaks(
        R,
        p,
        offset,
        lambda a, b, s: chains.maximal_chain_in(R, a, b, s),
        "W-maximal chain in the local stabilizer",
    )


def split_by_delta_length(R: RootSystem, p: PLPath, lambdas: Sequence[Vec]) -> Optional[List[PLPath]]:
    """Cut ``p`` where its accumulated Delta-length hits the partial sums of ``lambdas``.

    Returns None when a partial sum is never hit exactly.
    """
    segs = list(p.segments)
    pieces = []
    current: List[Vec] = []
    k = 0
    for lam in lambdas:
        need = vec(lam)
        while not is_zero(need):
            if k >= len(segs):
                return None
            d = segs[k]
            dp = dominant(R, d)
            c = positive_multiple(need, dp)
            if c is not None and c < 1:
                current.append(scale(c, d))
                segs[k] = scale(1 - c, d)
                need = R.zero()
                break
            rest = sub(need, dp)
            if any(x < 0 for x in rest):
                return None
            current.append(d)
            need = rest
            k += 1
        pieces.append(PLPath(R, current))
        current = []
    if k != len(segs):
        return None
    return pieces


def is_generalized_ls1(R: RootSystem, p: PLPath, lambdas: Sequence) -> PathVerdict:
    """Concatenation of LS paths of Delta-lengths ``lambdas`` with ``>~`` at the junctions."""
    lams = [_check_coweight(x) for x in lambdas]
    if not lams or any(is_zero(x) for x in lams):
        raise PreconditionError("block lengths must be nonzero dominant coweights")
    pieces = split_by_delta_length(R, p, lams)
    if pieces is None:
        return _fail("Delta-length does not split along the given blocks")
    witnesses = []
    start = R.zero()
    for k, (piece, lam) in enumerate(zip(pieces, lams)):
        v = is_ls_path(R, piece, lam)
        if not v.verdict:
            return _fail(f"block {k + 1}: {v.reason}", witnesses)
        witnesses.extend(v.witnesses)
        end = add(start, piece.endpoint())
        if k + 1 < len(pieces):
            left = piece.segments[-1]
            right = pieces[k + 1].segments[0]
            if not chains.gtrsim(R, left, right, affine_stabilizer(R, end)):
                return _fail(f"junction {k + 1} at {_fmt(end)} fails the chamber-chain relation", witnesses)
        start = end
    return PathVerdict(True, witnesses)


def _fundamental_type(R: RootSystem, d) -> Optional[int]:
    dp = dominant(R, d)
    nz = [i for i, x in enumerate(dp) if x != 0]
    return nz[0] if len(nz) == 1 else None


def is_generalized_hecke(R: RootSystem, p: PLPath, offset=None) -> bool:
    """Chain condition, segments along W-images of fundamental coweights, breakpoints at vertices."""
    for d in p.segments:
        if _fundamental_type(R, d) is None:
            return False
    base = vec(offset) if offset is not None else R.zero()
    if not all(is_vertex(R, add(base, x)) for x in p.points):
        return False
    return satisfies_chain_condition(R, p, offset).verdict


def check_dilation_theorem(R: RootSystem, p: PLPath, lambdas: Optional[Sequence] = None) -> bool:
    """Is the ``k_R``-dilate of the generalized Hecke path ``p`` generalized LS?

    ``lambdas`` gives the block type of ``p`` before dilation; by default the
    maximal billiard blocks are used.
    """
    if not is_generalized_hecke(R, p):
        raise PreconditionError("path is not generalized Hecke")
    if p.is_constant():
        return True
    q = dilate(p, R.k_R)
    if lambdas is None:
        blocks = delta_length(R, q).blocks
    else:
        blocks = [scale(R.k_R, vec(x)) for x in lambdas]
    return is_generalized_ls1(R, q, blocks).verdict


def contained_in_delta(R: RootSystem, p: PLPath, offset=None) -> bool:
    base = vec(offset) if offset is not None else R.zero()
    if not is_dominant(R, base):
        return False
    return all(is_dominant(R, add(base, x)) for x in p.points)
