"""Chains of reflections between vectors of one Weyl orbit.

A chain from ``nu`` to ``mu`` is a sequence of reflections, each applied to a
vector on which its root is negative.  All relations here are invariant under
positive scaling, so each query is moved to primitive integer representatives
and answered on a cached graph over the W-orbit:

* nodes are the orbit elements,
* an edge ``eta -> tau_beta(eta)`` exists for every positive root ``beta`` with
  ``beta(eta) < 0``.

The graph is acyclic because every edge strictly lowers the number of positive
roots negative on the vertex.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Tuple

from .errors import PreconditionError
from .rational import Vec, is_zero, primitive_scale, vec
from .root_system import RootSystem, in_coweight_lattice
from .weyl import (
    StabilizerSubsystem,
    affine_stabilizer,
    dominant,
    length_of_orbit_element,
    orbit,
    reflect,
)


@dataclass(frozen=True)
class Chain:
    vertices: Tuple[Vec, ...]
    reflection_roots: Tuple[int, ...]

    def __len__(self):
        return len(self.reflection_roots)


class _OrbitGraph:
    """Chain graph on one orbit of primitive integer vectors."""

    def __init__(self, R: RootSystem, rep: Tuple[int, ...]):
        self.R = R
        nodes = sorted(orbit(R, rep), key=lambda v: -length_of_orbit_element(R, v))
        self.nodes = [tuple(int(x) for x in v) for v in nodes]
        self.index = {v: i for i, v in enumerate(self.nodes)}
        nroots = len(R.positive_roots)
        self.edges = []  # per node: list of (root index, target node)
        for v in self.nodes:
            out = []
            for j in range(nroots):
                if R.evaluate(j, v) < 0:
                    out.append((j, self.index[tuple(int(x) for x in reflect(R, j, v))]))
            self.edges.append(out)
        # Nodes are sorted by decreasing length, so targets have larger indices.
        n = len(self.nodes)
        reach = [0] * n
        for i in range(n - 1, -1, -1):
            r = 1 << i
            for _, t in self.edges[i]:
                r |= reach[t]
            reach[i] = r
        self.reach = reach
        # An edge is a maximal step iff its target is not reachable through
        # another successor of its source.
        self.unit = []
        for i in range(n):
            targets = {t for _, t in self.edges[i]}
            ok = set()
            for t in targets:
                if not any(s != t and (reach[s] >> t) & 1 for s in targets):
                    ok.add(t)
            self.unit.append(ok)

    def successors(self, i, roots=None, unit_only=False):
        for j, t in self.edges[i]:
            if roots is not None and j not in roots:
                continue
            if unit_only and t not in self.unit[i]:
                continue
            yield j, t


@lru_cache(maxsize=4096)
def _graph(R: RootSystem, dom: Tuple[int, ...]) -> _OrbitGraph:
    return _OrbitGraph(R, dom)


def _normalize_pair(R: RootSystem, nu, mu):
    """Common-scale primitive integer forms of ``nu`` and ``mu``, or None if their orbits differ."""
    nu, mu = vec(nu), vec(mu)
    if is_zero(nu) or is_zero(mu):
        raise PreconditionError("chain relations need nonzero vectors")
    dn, dm = dominant(R, nu), dominant(R, mu)
    if dn != dm:
        return None
    c = primitive_scale(dn)
    a = tuple(int(x * c) for x in nu)
    b = tuple(int(x * c) for x in mu)
    g = _graph(R, tuple(int(x * c) for x in dn))
    return g, g.index[a], g.index[b]


def _roots(subsystem):
    return None if subsystem is None else subsystem.root_indices


def is_chain(R: RootSystem, candidate: Chain, subsystem: Optional[StabilizerSubsystem] = None) -> bool:
    verts = [vec(v) for v in candidate.vertices]
    if any(is_zero(v) for v in verts):
        raise PreconditionError("chain vertices must be nonzero")
    if len(verts) != len(candidate.reflection_roots) + 1:
        return False
    roots = _roots(subsystem)
    for a, b, j in zip(verts, verts[1:], candidate.reflection_roots):
        if roots is not None and j not in roots:
            return False
        if R.evaluate(j, a) >= 0 or reflect(R, j, a) != b:
            return False
    return True


def ge(R: RootSystem, nu, mu, subsystem: Optional[StabilizerSubsystem] = None) -> bool:
    """``nu >= mu`` relative to the subsystem (``None`` means the whole Weyl group)."""
    norm = _normalize_pair(R, nu, mu)
    if norm is None:
        return False
    g, a, b = norm
    if roots_all(R, subsystem):
        return bool((g.reach[a] >> b) & 1)
    return _bfs(g, a, b, _roots(subsystem)) is not None


def roots_all(R, subsystem) -> bool:
    return subsystem is None or len(subsystem.root_indices) == len(R.positive_roots)


def _bfs(g: _OrbitGraph, a: int, b: int, roots, unit_only=False):
    """Shortest chain from a to b as a list of (root, node) steps, or None."""
    if a == b:
        return []
    prev = {a: None}
    q = deque([a])
    while q:
        i = q.popleft()
        for j, t in g.successors(i, roots, unit_only):
            if t in prev or not (g.reach[t] >> b) & 1:
                continue
            prev[t] = (i, j)
            if t == b:
                steps = []
                cur = t
                while prev[cur] is not None:
                    i0, j0 = prev[cur]
                    steps.append((j0, cur))
                    cur = i0
                return steps[::-1]
            q.append(t)
    return None


def _to_chain(R, g, a, steps, scale_back) -> Chain:
    verts = [g.nodes[a]] + [g.nodes[t] for _, t in steps]
    return Chain(
        tuple(tuple(Fraction(x) * scale_back for x in v) for v in verts),
        tuple(j for j, _ in steps),
    )


def find_chain(
    R: RootSystem, nu, mu, subsystem: Optional[StabilizerSubsystem] = None, maximal: bool = False
) -> Optional[Chain]:
    """A witness chain from ``nu`` to ``mu``, optionally made of maximal steps only."""
    norm = _normalize_pair(R, nu, mu)
    if norm is None:
        return None
    g, a, b = norm
    steps = _bfs(g, a, b, _roots(subsystem), unit_only=maximal)
    if steps is None:
        return None
    back = Fraction(1) / primitive_scale(dominant(R, vec(nu)))
    return _to_chain(R, g, a, steps, back)


def chain_dist(R: RootSystem, nu, mu, subsystem: Optional[StabilizerSubsystem] = None) -> Optional[int]:
    """Length of the longest chain from ``nu`` to ``mu``; ``None`` if there is none."""
    norm = _normalize_pair(R, nu, mu)
    if norm is None:
        return None
    g, a, b = norm
    roots = _roots(subsystem)
    if not (g.reach[a] >> b) & 1:
        return None
    best = {b: 0}
    # Nodes between a and b in topological (index) order, processed backwards.
    for i in range(b - 1, a - 1, -1):
        if not (g.reach[a] >> i) & 1 and i != a:
            continue
        d = None
        for _, t in g.successors(i, roots):
            if t in best:
                cand = best[t] + 1
                if d is None or cand > d:
                    d = cand
        if d is not None:
            best[i] = d
    return best.get(a)


def triangle_rel(R: RootSystem, nu, mu) -> bool:
    """For every positive root: negative on ``nu`` forces nonpositive on ``mu``."""
    for j in range(len(R.positive_roots)):
        if R.evaluate(j, nu) < 0 and R.evaluate(j, mu) > 0:
            return False
    return True


def same_chamber(R: RootSystem, mu, nu) -> bool:
    """True iff some closed Weyl chamber contains both vectors."""
    for j in range(len(R.positive_roots)):
        if R.evaluate(j, mu) * R.evaluate(j, nu) < 0:
            return False
    return True


def gtrsim(R: RootSystem, a, d, subsystem: Optional[StabilizerSubsystem] = None) -> bool:
    """``a >= b ~ d`` for some ``b`` reachable from ``a`` in the subsystem."""
    a, d = vec(a), vec(d)
    if is_zero(a) or is_zero(d):
        raise PreconditionError("chain relations need nonzero vectors")
    dom = dominant(R, a)
    c = primitive_scale(dom)
    g = _graph(R, tuple(int(x * c) for x in dom))
    start = g.index[tuple(int(x * c) for x in a)]
    roots = None if roots_all(R, subsystem) else _roots(subsystem)
    seen = {start}
    q = deque([start])
    while q:
        i = q.popleft()
        if same_chamber(R, g.nodes[i], d):
            return True
        for _, t in g.successors(i, roots):
            if t not in seen:
                seen.add(t)
                q.append(t)
    return False


def is_maximal_chain(R: RootSystem, c: Chain) -> bool:
    if not is_chain(R, c):
        raise PreconditionError("input is not a chain")
    return all(chain_dist(R, a, b) == 1 for a, b in zip(c.vertices, c.vertices[1:]))


def a_chain_exists(R: RootSystem, nu, mu, a) -> bool:
    """A chain from ``nu`` to ``mu`` through walls at ``a*nu`` that is maximal in W."""
    a = Fraction(a)
    if a <= 0:
        raise PreconditionError("a must be positive")
    nu = vec(nu)
    point = tuple(a * x for x in nu)
    if in_coweight_lattice(R, point):
        # Special vertex: every chain refines to a maximal one.
        return ge(R, nu, mu)
    return maximal_chain_in(R, nu, mu, affine_stabilizer(R, point)) is not None


def maximal_chain_in(R: RootSystem, nu, mu, subsystem: Optional[StabilizerSubsystem]) -> Optional[Chain]:
    """A chain inside the subsystem all of whose steps are maximal in W, or None."""
    return find_chain(R, nu, mu, subsystem, maximal=True)


def descendants(R: RootSystem, nu, subsystem: Optional[StabilizerSubsystem] = None):
    """All ``mu`` with ``nu >= mu`` in the subsystem, at the scale of ``nu``, ``nu`` first."""
    nu = vec(nu)
    if is_zero(nu):
        raise PreconditionError("chain relations need nonzero vectors")
    dom = dominant(R, nu)
    c = primitive_scale(dom)
    g = _graph(R, tuple(int(x * c) for x in dom))
    start = g.index[tuple(int(x * c) for x in nu)]
    roots = None if roots_all(R, subsystem) else _roots(subsystem)
    order = [start]
    seen = {start}
    for i in order:
        for _, t in g.successors(i, roots):
            if t not in seen:
                seen.add(t)
                order.append(t)
    return [tuple(Fraction(x) / c for x in g.nodes[i]) for i in order]
