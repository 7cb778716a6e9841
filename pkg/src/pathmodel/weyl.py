"""Finite Weyl group actions and affine point stabilizers.

Everything works on coordinate tuples in the fundamental-coweight basis.  The
group itself is never materialized; elements are words in simple reflections
and orbits are produced by reflection BFS.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import FrozenSet, Iterable, Tuple

from . import config
from .errors import BoundExceeded, NotDominantError, PreconditionError
from .rational import Vec, is_zero, vec
from .root_system import RootSystem, is_dominant, is_vertex


@dataclass(frozen=True)
class WeylElement:
    """A product ``s_{w[0]} s_{w[1]} ... s_{w[-1]}`` of simple reflections.

    Acting on a vector applies the rightmost letter first.
    """

    R: RootSystem
    word: Tuple[int, ...] = ()

    def apply(self, v) -> Vec:
        v = vec(v)
        for i in reversed(self.word):
            v = simple_reflect(self.R, i, v)
        return v

    __call__ = apply

    @property
    def matrix(self) -> Tuple[Vec, ...]:
        """Matrix of the element in the coweight basis (columns are images of basis vectors)."""
        n = self.R.rank
        cols = [self.apply(e) for e in self.R.fundamental_coweights]
        return tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))

    def inverse(self) -> "WeylElement":
        return WeylElement(self.R, tuple(reversed(self.word)))

    def __len__(self):
        return len(self.word)


def identity(R: RootSystem) -> WeylElement:
    return WeylElement(R, ())


def simple_reflect(R: RootSystem, i: int, v) -> Vec:
    a = v[i]
    if a == 0:
        return tuple(v)
    col = R.cartan_matrix
    return tuple(x - a * col[k][i] for k, x in enumerate(v))


def reflect(R: RootSystem, root_index: int, v) -> Vec:
    """``v - beta(v) beta^vee`` for the positive root with the given index."""
    b = R.evaluate(root_index, v)
    if b == 0:
        return tuple(v)
    co = R.positive_coroots[root_index]
    return tuple(x - b * c for x, c in zip(v, co))


def _check_order(R: RootSystem) -> None:
    bound = config.weyl_order_bound()
    if R.weyl_order > bound:
        raise BoundExceeded(
            f"|W({R.cartan_type})| = {R.weyl_order} exceeds the Weyl-order bound {bound}"
        )


def dominant_projection(R: RootSystem, v) -> Tuple[Vec, WeylElement]:
    """The dominant element of ``W v`` together with ``w`` such that ``w(v)`` is it."""
    v = vec(v)
    applied = []
    while True:
        i = next((k for k, x in enumerate(v) if x < 0), None)
        if i is None:
            break
        v = simple_reflect(R, i, v)
        applied.append(i)
    return v, WeylElement(R, tuple(reversed(applied)))


def dominant(R: RootSystem, v) -> Vec:
    """Shorthand for the vector part of :func:`dominant_projection`."""
    v = tuple(v)
    while True:
        i = next((k for k, x in enumerate(v) if x < 0), None)
        if i is None:
            return v
        v = simple_reflect(R, i, v)


def contragredient(R: RootSystem, gamma) -> Vec:
    if not is_dominant(R, gamma):
        raise NotDominantError(f"{tuple(map(str, gamma))} is not dominant")
    return dominant_projection(R, tuple(-Fraction(x) for x in gamma))[0]


def orbit(R: RootSystem, v) -> FrozenSet[Vec]:
    """The full W-orbit of ``v``.  Refuses groups above the configured order bound."""
    _check_order(R)
    start = tuple(v)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for u in frontier:
            for i in range(R.rank):
                w = simple_reflect(R, i, u)
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return frozenset(seen)


def length_of_orbit_element(R: RootSystem, mu) -> int:
    """Minimal length of ``w`` with ``w^{-1}(mu)`` dominant.

    This is the number of positive roots that are negative on ``mu``.
    """
    if is_zero(mu):
        raise PreconditionError("orbit length is defined for nonzero vectors only")
    return sum(1 for j in range(len(R.positive_roots)) if R.evaluate(j, mu) < 0)


@dataclass(frozen=True)
class StabilizerSubsystem:
    base_point: Vec
    root_indices: FrozenSet[int]

    def __contains__(self, j) -> bool:
        return j in self.root_indices

    def __len__(self):
        return len(self.root_indices)


def full_subsystem(R: RootSystem) -> StabilizerSubsystem:
    return StabilizerSubsystem(R.zero(), frozenset(range(len(R.positive_roots))))


def subsystem_from_roots(R: RootSystem, indices: Iterable[int]) -> StabilizerSubsystem:
    return StabilizerSubsystem(R.zero(), frozenset(indices))


def affine_stabilizer(R: RootSystem, x) -> StabilizerSubsystem:
    """Positive roots whose affine walls pass through ``x``."""
    x = vec(x)
    idx = frozenset(
        j for j in range(len(R.positive_roots)) if R.evaluate(j, x).denominator == 1
    )
    return StabilizerSubsystem(x, idx)


def is_special(R: RootSystem, x) -> bool:
    return len(affine_stabilizer(R, x)) == len(R.positive_roots)


def coxeter_vertices(R: RootSystem, box: int):
    """Vertices of the affine Coxeter complex with all coordinates in ``[-box, box]``.

    Every vertex is a W_aff-image of a vertex of the fundamental alcove, so its
    coordinates lie in ``(1/k_R) Z``; the candidates on that grid are filtered
    with :func:`~pathmodel.root_system.is_vertex`.
    """
    k = R.k_R
    grid = [Fraction(a, k) for a in range(-box * k, box * k + 1)]
    return [p for p in product(grid, repeat=R.rank) if is_vertex(R, p)]
