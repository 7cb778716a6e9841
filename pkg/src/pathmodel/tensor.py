"""Tensor product multiplicities for the dual group, two independent ways.

Representations are those of the Langlands dual group: highest weights are
dominant coweights, its roots are the coroots of ``R`` and its Weyl vector is
the sum of the fundamental coweights.

* :func:`decompose_paths` counts lowered paths that stay in the chamber after
  being attached to the first highest weight.
* :func:`oracle_decompose` uses Freudenthal's multiplicity recursion and the
  Brauer-Klimyk reflection sum and knows nothing about paths.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Optional, Tuple

from .errors import NotDominantError
from .operators import DEFAULT_ORBIT_BOUND, generate_F_orbit, seed_path
from .predicates import contained_in_delta
from .rational import is_integral, solve, vec
from .root_system import RootSystem, triple_lattice_check
from .weyl import _check_order, contragredient, orbit

IntVec = Tuple[int, ...]


@dataclass
class DecompositionTable:
    alpha: IntVec
    beta: IntVec
    entries: Dict[IntVec, int] = field(default_factory=dict)

    def __contains__(self, gamma) -> bool:
        return tuple(int(x) for x in gamma) in self.entries

    def __getitem__(self, gamma) -> int:
        return self.entries.get(tuple(int(x) for x in gamma), 0)

    def __eq__(self, other):
        return (
            isinstance(other, DecompositionTable)
            and self.alpha == other.alpha
            and self.beta == other.beta
            and self.entries == other.entries
        )

    def rows(self):
        """``(gamma, multiplicity)`` pairs sorted by gamma."""
        return sorted(self.entries.items())


def _as_dominant_int(lam) -> IntVec:
    v = vec(lam)
    if not is_integral(v) or any(x < 0 for x in v):
        raise NotDominantError(f"{tuple(map(str, v))} is not a dominant coweight")
    return tuple(int(x) for x in v)


def dim(R: RootSystem, lam) -> int:
    """Weyl dimension formula."""
    lam = _as_dominant_int(lam)
    num = Fraction(1)
    for row in R.positive_roots:
        top = sum(c * (x + 1) for c, x in zip(row, lam))
        bottom = sum(row)
        num *= Fraction(top, bottom)
    assert num.denominator == 1
    return int(num)


# -- Freudenthal ------------------------------------------------------------------

@lru_cache(maxsize=None)
def _data(R: RootSystem):
    n = R.rank
    rows = R.positive_roots
    gram = [[sum(r[i] * r[j] for r in rows) for j in range(n)] for i in range(n)]
    coroots = [tuple(int(x) for x in c) for c in R.positive_coroots]
    # Height of a coroot over the simple coroots equals the height of the
    # corresponding root of the dual system.
    heights = []
    simple = coroots[:n]
    mat = [[simple[j][i] for j in range(n)] for i in range(n)]
    for c in coroots:
        heights.append(int(sum(solve(mat, c))))
    cartan = R.cartan_matrix
    return gram, coroots, heights, cartan


def _form(gram, x, y) -> int:
    return sum(x[i] * gram[i][j] * y[j] for i in range(len(x)) for j in range(len(y)) if x[i] and y[j])


def _dominant_int(cartan, v):
    v = list(v)
    sign = 1
    n = len(v)
    while True:
        for i in range(n):
            if v[i] < 0:
                a = v[i]
                for k in range(n):
                    v[k] -= a * cartan[k][i]
                sign = -sign
                break
        else:
            return tuple(v), sign


@lru_cache(maxsize=None)
def dominant_weight_multiplicities(R: RootSystem, lam: IntVec) -> Dict[IntVec, int]:
    """Multiplicities of the dominant weights of the irreducible module of highest weight ``lam``."""
    gram, coroots, heights, cartan = _data(R)
    depth = {lam: 0}
    frontier = [lam]
    while frontier:
        nxt = []
        for mu in frontier:
            for c, h in zip(coroots, heights):
                nu = tuple(a - b for a, b in zip(mu, c))
                if min(nu) >= 0 and nu not in depth:
                    depth[nu] = depth[mu] + h
                    nxt.append(nu)
        frontier = nxt
    lr = tuple(a + 1 for a in lam)
    top = _form(gram, lr, lr)
    mult = {lam: 1}
    for mu in sorted(depth, key=depth.get)[1:]:
        acc = 0
        for c in coroots:
            k = 1
            while True:
                w = tuple(a + k * b for a, b in zip(mu, c))
                dw, _ = _dominant_int(cartan, w)
                m = mult.get(dw)
                if m is None:
                    break
                acc += m * _form(gram, w, c)
                k += 1
        mr = tuple(a + 1 for a in mu)
        den = top - _form(gram, mr, mr)
        value, rem = divmod(2 * acc, den)
        assert rem == 0
        mult[mu] = value
    return {mu: m for mu, m in mult.items() if m}


@lru_cache(maxsize=None)
def weight_multiplicities(R: RootSystem, lam: IntVec) -> Dict[IntVec, int]:
    """All weights of the irreducible module with their multiplicities."""
    out = {}
    for mu, m in dominant_weight_multiplicities(R, lam).items():
        for w in orbit(R, mu):
            out[tuple(int(x) for x in w)] = m
    return out


def oracle_decompose(R: RootSystem, alpha, beta) -> DecompositionTable:
    """Brauer-Klimyk: sum over weights of one factor, reflected into the chamber."""
    a, b = _as_dominant_int(alpha), _as_dominant_int(beta)
    t = _oracle(R, a, b)
    return DecompositionTable(a, b, dict(t.entries))


@lru_cache(maxsize=65536)
def _oracle(R: RootSystem, a: IntVec, b: IntVec) -> DecompositionTable:
    _check_order(R)
    cartan = _data(R)[3]
    top, small = (a, b) if dim(R, a) >= dim(R, b) else (b, a)
    acc: Counter = Counter()
    for mu, m in weight_multiplicities(R, small).items():
        v = tuple(x + y + 1 for x, y in zip(top, mu))
        d, sign = _dominant_int(cartan, v)
        if min(d) == 0:
            continue
        acc[tuple(x - 1 for x in d)] += sign * m
    entries = {g: m for g, m in acc.items() if m}
    assert all(m > 0 for m in entries.values())
    return DecompositionTable(a, b, entries)


def decompose_paths(R: RootSystem, alpha, beta, bound: Optional[int] = DEFAULT_ORBIT_BOUND) -> DecompositionTable:
    """Count lowered paths of shape ``beta`` that stay dominant when started at ``alpha``."""
    a, b = _as_dominant_int(alpha), _as_dominant_int(beta)
    tally: Counter = Counter()
    for p in generate_F_orbit(R, seed_path(R, b), bound):
        if contained_in_delta(R, p, a):
            tally[tuple(int(x) + y for x, y in zip(p.endpoint(), a))] += 1
    return DecompositionTable(a, b, dict(tally))


def invariant_triple_nonzero(R: RootSystem, alpha, beta, gamma, method: str = "oracle") -> bool:
    """Does the triple tensor product of the three modules contain invariants?"""
    a, b, g = (_as_dominant_int(x) for x in (alpha, beta, gamma))
    if not triple_lattice_check(R, a, b, g):
        return False
    target = tuple(int(x) for x in contragredient(R, g))
    table = oracle_decompose(R, a, b) if method == "oracle" else decompose_paths(R, a, b)
    return target in table
