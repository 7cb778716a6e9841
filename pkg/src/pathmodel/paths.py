"""Piecewise-linear paths starting at the origin.

A path is stored as the list of its segment displacements.  Paths are taken
up to reparameterization, so the time parameter is fixed canonically: each
segment lasts in proportion to the height (sum of coordinates) of the dominant
projection of its displacement.  That quantity is W-invariant and positively
homogeneous, so reflections and translations of pieces, which is all the root
operators do, never move breakpoint times.

Canonical form drops zero segments and merges neighbours pointing in the same
direction.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .errors import PreconditionError
from .rational import Vec, add, is_zero, positive_multiple, scale, to_strings, vec
from .root_system import RootSystem, build
from .weyl import dominant

ZERO = Fraction(0)


def _height(R: RootSystem, d) -> Fraction:
    return sum(dominant(R, d), ZERO)


def _canonical(segs) -> Tuple[Vec, ...]:
    out: List[Vec] = []
    for d in segs:
        d = vec(d)
        if is_zero(d):
            continue
        if out and positive_multiple(d, out[-1]) is not None:
            out[-1] = add(out[-1], d)
        else:
            out.append(d)
    return tuple(out)


@dataclass(frozen=True, eq=False)
class PLPath:
    R: RootSystem
    segments: Tuple[Vec, ...]

    def __init__(self, R: RootSystem, segments=()):
        object.__setattr__(self, "R", R)
        object.__setattr__(self, "segments", _canonical(segments))
        # Immutable, so the derived data is computed once.
        hs = [_height(R, d) for d in self.segments]
        total = sum(hs, ZERO)
        durs = tuple(h / total for h in hs)
        times = [ZERO]
        for dur in durs:
            times.append(times[-1] + dur)
        if len(times) > 1:
            times[-1] = Fraction(1)
        pts = [R.zero()]
        for d in self.segments:
            pts.append(add(pts[-1], d))
        object.__setattr__(self, "_durations", durs)
        object.__setattr__(self, "_times", tuple(times))
        object.__setattr__(self, "_points", tuple(pts))

    def __eq__(self, other):
        return isinstance(other, PLPath) and self.R is other.R and self.segments == other.segments

    def __hash__(self):
        return hash(self.segments)

    def __repr__(self):
        segs = ", ".join("(" + ",".join(map(str, d)) + ")" for d in self.segments)
        return f"PLPath({self.R.cartan_type}: {segs})"

    @property
    def rank(self) -> int:
        return self.R.rank

    @property
    def durations(self) -> Tuple[Fraction, ...]:
        return self._durations

    @property
    def times(self) -> Tuple[Fraction, ...]:
        """Breakpoint times, including 0 and 1."""
        return self._times

    @property
    def points(self) -> Tuple[Vec, ...]:
        """Positions at the breakpoints, starting with the origin."""
        return self._points

    @property
    def velocities(self) -> Tuple[Vec, ...]:
        return tuple(scale(1 / t, d) for d, t in zip(self.segments, self.durations))

    def endpoint(self) -> Vec:
        return self.points[-1]

    def point_at(self, t) -> Vec:
        t = Fraction(t)
        if not 0 <= t <= 1:
            raise ValueError("time outside [0,1]")
        pts = self.points
        if not self.segments:
            return pts[0]
        times = self.times
        for k, d in enumerate(self.segments):
            if t <= times[k + 1]:
                c = (t - times[k]) / (times[k + 1] - times[k])
                return add(pts[k], scale(c, d))
        return pts[-1]

    def is_constant(self) -> bool:
        return not self.segments


# -- constructors and algebra ------------------------------------------------

def pi_lambda(R: RootSystem, lam) -> PLPath:
    """The straight path ``t -> t*lam``."""
    return PLPath(R, [vec(lam)])


def concat(*paths: PLPath) -> PLPath:
    if not paths:
        raise ValueError("concat needs at least one path")
    R = paths[0].R
    segs = []
    for p in paths:
        if p.R is not R:
            raise ValueError("paths belong to different root systems")
        segs.extend(p.segments)
    return PLPath(R, segs)


def reverse(p: PLPath) -> PLPath:
    """``t -> p(1-t) - p(1)``."""
    return PLPath(p.R, [tuple(-x for x in d) for d in reversed(p.segments)])


def restrict(p: PLPath, a, b) -> PLPath:
    """The piece of ``p`` over ``[a, b]``, translated to start at the origin."""
    a, b = Fraction(a), Fraction(b)
    if not 0 <= a < b <= 1:
        raise PreconditionError("restrict needs 0 <= a < b <= 1")
    times = p.times
    segs = []
    for k, d in enumerate(p.segments):
        lo, hi = max(a, times[k]), min(b, times[k + 1])
        if lo < hi:
            segs.append(scale((hi - lo) / (times[k + 1] - times[k]), d))
    return PLPath(p.R, segs)


def split_at(p: PLPath, t) -> Tuple[PLPath, PLPath]:
    t = Fraction(t)
    if t <= 0:
        return PLPath(p.R), p
    if t >= 1:
        return p, PLPath(p.R)
    return restrict(p, 0, t), restrict(p, t, 1)


def dilate(p: PLPath, k) -> PLPath:
    if Fraction(k) <= 0:
        raise PreconditionError("dilation factor must be positive")
    return PLPath(p.R, [scale(k, d) for d in p.segments])


def endpoint(p: PLPath) -> Vec:
    return p.endpoint()


# -- heights -------------------------------------------------------------------

def heights(R: RootSystem, p: PLPath, root_index: int, offset=None) -> Tuple[Fraction, ...]:
    """Values of the root along the breakpoints (the height function is affine in between)."""
    pts = p.points
    if offset is not None:
        pts = [add(vec(offset), x) for x in pts]
    return tuple(R.evaluate(root_index, x) for x in pts)


def height_min(R: RootSystem, p: PLPath, i: int) -> Fraction:
    return min(heights(R, p, i))


def in_P_Z(R: RootSystem, p: PLPath) -> bool:
    return all(height_min(R, p, i).denominator == 1 for i in range(R.rank))


def local_minima(hs: Sequence[Fraction]) -> List[Fraction]:
    """Values at local minima of a piecewise-affine function given by its breakpoint values.

    Flat runs are compressed first; a minimum is a value where the function
    stops decreasing and starts increasing.  The right end counts when the
    last nonconstant piece decreases.  The left end is skipped: paths start
    at the origin, where every height is the integer 0.
    """
    vals = [hs[0]]
    for h in hs[1:]:
        if h != vals[-1]:
            vals.append(h)
    out = []
    for k in range(1, len(vals)):
        down_before = vals[k] < vals[k - 1]
        up_after = k + 1 < len(vals) and vals[k + 1] > vals[k]
        if down_before and (up_after or k + 1 == len(vals)):
            out.append(vals[k])
    return out


def in_P_Z_loc(R: RootSystem, p: PLPath) -> bool:
    return all(m.denominator == 1 for i in range(R.rank) for m in local_minima(heights(R, p, i)))


# -- Delta-length ----------------------------------------------------------------

@dataclass(frozen=True)
class DeltaLengthVector:
    total: Vec
    blocks: Tuple[Vec, ...]


def billiard_blocks(R: RootSystem, p: PLPath) -> List[Tuple[int, int]]:
    """Maximal runs ``[start, stop)`` of segments with proportional dominant projections."""
    runs = []
    prev = None
    for k, d in enumerate(p.segments):
        dp = dominant(R, d)
        if prev is not None and positive_multiple(dp, prev) is not None:
            runs[-1][1] = k + 1
        else:
            runs.append([k, k + 1])
        prev = dp
    return [tuple(r) for r in runs]


def delta_length(R: RootSystem, p: PLPath) -> DeltaLengthVector:
    projections = [dominant(R, d) for d in p.segments]
    blocks = []
    for a, b in billiard_blocks(R, p):
        acc = R.zero()
        for dp in projections[a:b]:
            acc = add(acc, dp)
        blocks.append(acc)
    total = R.zero()
    for blk in blocks:
        total = add(total, blk)
    return DeltaLengthVector(total, tuple(blocks))


def is_billiard(R: RootSystem, p: PLPath) -> bool:
    return len(billiard_blocks(R, p)) <= 1


@dataclass(frozen=True)
class Break:
    time: Fraction
    point: Vec
    left: Vec
    right: Vec


def break_data(R: RootSystem, p: PLPath, offset=None) -> List[Break]:
    """Interior breakpoints with the incoming and outgoing displacement directions."""
    times, pts, segs = p.times, p.points, p.segments
    off = vec(offset) if offset is not None else None
    out = []
    for k in range(1, len(segs)):
        x = pts[k] if off is None else add(off, pts[k])
        out.append(Break(times[k], x, segs[k - 1], segs[k]))
    return out


# -- JSON interchange ---------------------------------------------------------------

def to_json_obj(p: PLPath, offset=None) -> dict:
    obj = {
        "system": str(p.R.cartan_type),
        "segments": [
            {"dir": to_strings(v), "dur": str(t)} for v, t in zip(p.velocities, p.durations)
        ],
    }
    if offset is not None:
        obj["offset"] = to_strings(offset)
    return obj


def to_json(p: PLPath, offset=None) -> str:
    return json.dumps(to_json_obj(p, offset))


def from_json_obj(obj: dict) -> Tuple[PLPath, Optional[Vec]]:
    R = build(obj["system"])
    segs = []
    for s in obj["segments"]:
        d = vec(s["dir"])
        if len(d) != R.rank:
            raise ValueError(f"direction {s['dir']} has wrong length for {R.cartan_type}")
        dur = Fraction(str(s["dur"]))
        if dur < 0:
            raise ValueError("negative duration")
        segs.append(scale(dur, d))
    offset = vec(obj["offset"]) if "offset" in obj else None
    return PLPath(R, segs), offset


def from_json(text: str) -> Tuple[PLPath, Optional[Vec]]:
    return from_json_obj(json.loads(text))


def load(path) -> Tuple[PLPath, Optional[Vec]]:
    with open(path) as fh:
        return from_json_obj(json.load(fh))
