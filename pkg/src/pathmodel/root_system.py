"""Root data for semisimple root systems of types A-G and their products.

Conventions
-----------
Vectors of ``V`` are written in the basis of fundamental coweights, so the
simple root ``alpha_i`` evaluates on ``v`` as ``v[i]``.  A root is stored as its
integer coefficient row over the simple roots, and evaluating it is a dot
product.  Coroots are vectors of ``V``; the simple coroot ``alpha_j^vee`` has
coordinates ``(a_1j, ..., a_nj)`` where ``a_ij = alpha_i(alpha_j^vee)``.

Simple roots are numbered as in Bourbaki.  Indices in the API are 0-based:
``alpha_1`` is root index 0.  The simple roots occupy indices ``0..rank-1`` of
``positive_roots``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial, lcm
from typing import Sequence, Tuple

from .errors import CartanTypeError
from .rational import Vec, is_integral, solve, vec, zero

_VALID_RANKS = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 2,
    "D": lambda n: n >= 3,
    "E": lambda n: n in (6, 7, 8),
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}


@dataclass(frozen=True)
class CartanType:
    components: Tuple[Tuple[str, int], ...]

    def __post_init__(self):
        if not self.components:
            raise CartanTypeError("empty Cartan type")
        for letter, n in self.components:
            ok = _VALID_RANKS.get(letter)
            if ok is None or not isinstance(n, int) or not ok(n):
                raise CartanTypeError(f"invalid Cartan type {letter}{n}")

    @property
    def rank(self) -> int:
        return sum(n for _, n in self.components)

    def __str__(self) -> str:
        return "x".join(f"{l}{n}" for l, n in self.components)


def parse_cartan_type(text: str) -> CartanType:
    """Parse strings such as ``"A2"``, ``"G2"``, ``"A1xA1"`` or ``"B2 x A1"``."""
    if isinstance(text, CartanType):
        return text
    parts = [p for p in re.split(r"[x×*]", text.replace(" ", "")) if p]
    comps = []
    for p in parts:
        m = re.fullmatch(r"([A-Ga-g])_?(\d+)", p)
        if not m:
            raise CartanTypeError(f"cannot parse Cartan type component {p!r}")
        comps.append((m.group(1).upper(), int(m.group(2))))
    return CartanType(tuple(comps))


# Symmetric Gram matrices of the simple roots, Bourbaki numbering.
def _gram(letter: str, n: int):
    g = [[Fraction(0)] * n for _ in range(n)]

    def link(i, j, value):
        g[i][j] = g[j][i] = Fraction(value)

    if letter == "A":
        for i in range(n):
            g[i][i] = Fraction(2)
        for i in range(n - 1):
            link(i, i + 1, -1)
    elif letter == "B":
        for i in range(n - 1):
            g[i][i] = Fraction(2)
        g[n - 1][n - 1] = Fraction(1)
        for i in range(n - 1):
            link(i, i + 1, -1)
    elif letter == "C":
        for i in range(n - 1):
            g[i][i] = Fraction(1)
        g[n - 1][n - 1] = Fraction(2)
        for i in range(n - 2):
            link(i, i + 1, Fraction(-1, 2))
        link(n - 2, n - 1, -1)
    elif letter == "D":
        for i in range(n):
            g[i][i] = Fraction(2)
        for i in range(n - 2):
            link(i, i + 1, -1)
        link(n - 3, n - 1, -1)
    elif letter == "E":
        for i in range(n):
            g[i][i] = Fraction(2)
        link(0, 2, -1)
        link(1, 3, -1)
        for i in range(2, n - 1):
            link(i, i + 1, -1)
    elif letter == "F":
        g[0][0] = g[1][1] = Fraction(2)
        g[2][2] = g[3][3] = Fraction(1)
        link(0, 1, -1)
        link(1, 2, -1)
        link(2, 3, Fraction(-1, 2))
    elif letter == "G":
        g[0][0] = Fraction(1)  # alpha_1 short
        g[1][1] = Fraction(3)
        link(0, 1, Fraction(-3, 2))
    return g


def _component_cartan(letter: str, n: int):
    g = _gram(letter, n)
    # a_ij = alpha_i(alpha_j^vee) = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j)
    return [[int(2 * g[i][j] / g[j][j]) for j in range(n)] for i in range(n)]


@dataclass(frozen=True, eq=False)
class RootSystem:
    """Immutable root data; build with :func:`build` (memoized per type)."""

    cartan_type: CartanType
    cartan_matrix: Tuple[Tuple[int, ...], ...]
    positive_roots: Tuple[Tuple[int, ...], ...]
    positive_coroots: Tuple[Vec, ...]
    component_indices: Tuple[Tuple[int, ...], ...]
    highest_root_coeffs: Tuple[Tuple[int, ...], ...]
    k_R: int
    weyl_order: int
    _index: dict = field(repr=False, compare=False)

    @property
    def rank(self) -> int:
        return len(self.cartan_matrix)

    @property
    def simple_coroots(self) -> Tuple[Vec, ...]:
        return self.positive_coroots[: self.rank]

    @property
    def fundamental_coweights(self) -> Tuple[Vec, ...]:
        n = self.rank
        return tuple(vec(1 if i == j else 0 for j in range(n)) for i in range(n))

    @property
    def rho(self) -> Vec:
        """Sum of the fundamental coweights (half-sum of positive coroots)."""
        return vec([1] * self.rank)

    def zero(self) -> Vec:
        return zero(self.rank)

    def root_index(self, row: Sequence[int]) -> int:
        """Index of the positive root with the given coefficient row."""
        return self._index[tuple(row)]

    def evaluate(self, root_index: int, v: Sequence) -> Fraction:
        row = self.positive_roots[root_index]
        return sum((c * x for c, x in zip(row, v) if c), Fraction(0))

    def values(self, v: Sequence) -> Tuple[Fraction, ...]:
        """All positive-root values on ``v``, in root-index order."""
        return tuple(self.evaluate(j, v) for j in range(len(self.positive_roots)))

    def highest_roots(self) -> Tuple[Tuple[int, ...], ...]:
        out = []
        for comp, coeffs in zip(self.component_indices, self.highest_root_coeffs):
            row = [0] * self.rank
            for i, m in zip(comp, coeffs):
                row[i] = m
            out.append(tuple(row))
        return tuple(out)

    def minuscule_indices(self) -> Tuple[int, ...]:
        """Indices i with m_i = 1, i.e. the highest root takes value 1 on the i-th fundamental coweight."""
        out = []
        for comp, coeffs in zip(self.component_indices, self.highest_root_coeffs):
            out.extend(i for i, m in zip(comp, coeffs) if m == 1)
        return tuple(sorted(out))

    def __repr__(self) -> str:
        return f"RootSystem({self.cartan_type})"


def _closure(cartan, n):
    """Positive (root row, coroot vector) pairs by simple-reflection closure."""
    simple = []
    for i in range(n):
        row = tuple(1 if k == i else 0 for k in range(n))
        coroot = tuple(Fraction(cartan[k][i]) for k in range(n))
        simple.append((row, coroot))
    seen = {p[0]: p[1] for p in simple}
    frontier = list(simple)
    while frontier:
        nxt = []
        for row, co in frontier:
            for i in range(n):
                # s_i(r) = r - r(alpha_i^vee) alpha_i ; s_i(v) = v - alpha_i(v) alpha_i^vee
                c = sum(row[k] * cartan[k][i] for k in range(n))
                new_row = tuple(row[k] - (c if k == i else 0) for k in range(n))
                a = co[i]
                new_co = tuple(co[k] - a * cartan[k][i] for k in range(n))
                if all(x <= 0 for x in new_row):
                    new_row = tuple(-x for x in new_row)
                    new_co = tuple(-x for x in new_co)
                if new_row not in seen:
                    seen[new_row] = new_co
                    nxt.append((new_row, new_co))
        frontier = nxt
    return seen


@lru_cache(maxsize=None)
def _build(ctype: CartanType) -> RootSystem:
    n = ctype.rank
    cartan = [[0] * n for _ in range(n)]
    comps = []
    offset = 0
    for letter, r in ctype.components:
        block = _component_cartan(letter, r)
        for i in range(r):
            for j in range(r):
                cartan[offset + i][offset + j] = block[i][j]
        comps.append(tuple(range(offset, offset + r)))
        offset += r
    pairs = _closure(cartan, n)
    simple_rows = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
    others = sorted((r for r in pairs if r not in simple_rows), key=lambda r: (sum(r), r))
    rows = simple_rows + others
    coroots = [tuple(pairs[r]) for r in rows]

    highest = []
    k = 1
    order = 1
    for comp, (letter, r) in zip(comps, ctype.components):
        in_comp = [row for row in rows if any(row[i] for i in comp)]
        top = max(in_comp, key=sum)
        coeffs = tuple(top[i] for i in comp)
        highest.append(coeffs)
        k = lcm(k, *coeffs)
        det = _det([[cartan[i][j] for j in comp] for i in comp])
        m_prod = 1
        for m in coeffs:
            m_prod *= m
        order *= factorial(r) * m_prod * det
    return RootSystem(
        cartan_type=ctype,
        cartan_matrix=tuple(tuple(r) for r in cartan),
        positive_roots=tuple(rows),
        positive_coroots=tuple(coroots),
        component_indices=tuple(comps),
        highest_root_coeffs=tuple(highest),
        k_R=k,
        weyl_order=order,
        _index={r: i for i, r in enumerate(rows)},
    )


def _det(m) -> int:
    m = [list(map(Fraction, r)) for r in m]
    n = len(m)
    d = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c] != 0), None)
        if piv is None:
            return 0
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            d = -d
        d *= m[c][c]
        for i in range(c + 1, n):
            f = m[i][c] / m[c][c]
            m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return int(d)


def build(cartan_type) -> RootSystem:
    """Root data for a Cartan type or type string (``"G2"``, ``"A1xA1"``, ...)."""
    return _build(parse_cartan_type(cartan_type))


def evaluate_root(R: RootSystem, root_index: int, v) -> Fraction:
    return R.evaluate(root_index, v)


def in_coweight_lattice(R: RootSystem, v) -> bool:
    return is_integral(v)


def coroot_coordinates(R: RootSystem, v) -> Vec:
    """Coefficients of ``v`` in the basis of simple coroots."""
    n = R.rank
    cols = R.simple_coroots
    matrix = [[cols[j][i] for j in range(n)] for i in range(n)]
    return solve(matrix, vec(v))


def in_coroot_lattice(R: RootSystem, v) -> bool:
    return is_integral(coroot_coordinates(R, v))


def triple_lattice_check(R: RootSystem, alpha, beta, gamma) -> bool:
    s = tuple(Fraction(a) + Fraction(b) + Fraction(c) for a, b, c in zip(alpha, beta, gamma))
    return in_coroot_lattice(R, s)


def is_dominant(R: RootSystem, v) -> bool:
    return all(Fraction(x) >= 0 for x in v)


def is_vertex(R: RootSystem, x) -> bool:
    """True iff ``x`` is a vertex of the affine Coxeter complex.

    Vertices are the points where the walls through them cut out a single
    point, i.e. the roots integral at ``x`` span the dual space.
    """
    from .rational import rank

    rows = [row for j, row in enumerate(R.positive_roots) if R.evaluate(j, x).denominator == 1]
    return len(rows) >= R.rank and rank(rows) == R.rank
