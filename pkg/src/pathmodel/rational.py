"""Exact rational vectors and the small amount of linear algebra the package needs.

Vectors are plain tuples of :class:`fractions.Fraction`.  They are immutable and
hashable, which is all the chain and orbit searches ask of them.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence, Tuple

Vec = Tuple[Fraction, ...]


def frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x.strip())
    return Fraction(x)


def vec(xs: Iterable) -> Vec:
    return tuple(frac(x) for x in xs)


def zero(n: int) -> Vec:
    return (Fraction(0),) * n


def add(u: Vec, v: Vec) -> Vec:
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Vec, v: Vec) -> Vec:
    return tuple(a - b for a, b in zip(u, v))


def scale(c, v: Vec) -> Vec:
    c = frac(c)
    return tuple(c * a for a in v)


def neg(v: Vec) -> Vec:
    return tuple(-a for a in v)


def is_zero(v: Sequence) -> bool:
    return all(a == 0 for a in v)


def is_integral(v: Sequence) -> bool:
    return all(Fraction(a).denominator == 1 for a in v)


def common_denominator(v: Sequence) -> int:
    return lcm(1, *(Fraction(a).denominator for a in v))


def primitive_scale(v: Sequence) -> Fraction:
    """Positive c such that c*v is a primitive integer vector (gcd of entries 1)."""
    d = common_denominator(v)
    ints = [int(Fraction(a) * d) for a in v]
    g = 0
    for a in ints:
        g = gcd(g, a)
    if g == 0:
        raise ValueError("zero vector has no primitive representative")
    return Fraction(d, g)


def primitive(v: Sequence) -> Tuple[int, ...]:
    c = primitive_scale(v)
    return tuple(int(Fraction(a) * c) for a in v)


def positive_multiple(u: Sequence, v: Sequence):
    """Return c > 0 with u = c*v, or None."""
    c = None
    for a, b in zip(u, v):
        if b == 0:
            if a != 0:
                return None
            continue
        r = Fraction(a) / Fraction(b)
        if c is None:
            c = r
        elif r != c:
            return None
    if c is None or c <= 0:
        return None
    return c


def parse_vector(text: str) -> Vec:
    """Parse ``"1,0"`` or ``"1/2,-1/2"`` into a vector."""
    parts = [p for p in text.replace(" ", "").split(",") if p != ""]
    if not parts:
        raise ValueError(f"empty coordinate list: {text!r}")
    return vec(parts)


def fmt_vector(v: Sequence) -> str:
    return ",".join(str(Fraction(a)) for a in v)


def to_strings(v: Sequence) -> list:
    return [str(Fraction(a)) for a in v]


# -- dense exact linear algebra -------------------------------------------

def _row_reduce(rows):
    m = [list(map(Fraction, r)) for r in rows]
    pivots = []
    r = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows) -> int:
    rows = [r for r in rows]
    if not rows:
        return 0
    return len(_row_reduce(rows)[1])


def solve(matrix, rhs):
    """Solve ``matrix @ x = rhs`` for square nonsingular ``matrix`` exactly."""
    n = len(matrix)
    aug = [list(matrix[i]) + [rhs[i]] for i in range(n)]
    m, pivots = _row_reduce(aug)
    if pivots[:n] != list(range(n)):
        raise ValueError("singular system")
    return tuple(m[i][n] for i in range(n))
