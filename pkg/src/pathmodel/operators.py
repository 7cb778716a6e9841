"""Raising and lowering root operators on paths, and the orbits they generate.

``e_alpha`` follows the spike description: locate the first time ``t1`` the
height ``h = alpha(p(.))`` reaches its minimum ``m`` and the last time ``t0``
before which ``h`` stays at least ``m + 1``.  Between them the path is cut into
pieces where ``h`` runs along its running minimum (these are reflected by the
simple reflection) and spikes above it (kept as they are).  Everything after
``t1`` ends up translated by the coroot.

``f_alpha`` is obtained by conjugating with path reversal.
"""
from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .errors import BoundExceeded, PreconditionError
from .paths import PLPath, concat, pi_lambda, reverse
from .rational import scale, vec
from .root_system import RootSystem
from .weyl import simple_reflect

DEFAULT_ORBIT_BOUND = 200_000


def _check_index(R: RootSystem, i: int) -> None:
    if not 0 <= i < R.rank:
        raise IndexError(f"simple root index {i} out of range for {R.cartan_type}")


def e_alpha(R: RootSystem, p: PLPath, i: int) -> Optional[PLPath]:
    """Raising operator for the i-th simple root; ``None`` where undefined."""
    _check_index(R, i)
    segs = p.segments
    hs = [Fraction(0)]
    for d in segs:
        hs.append(hs[-1] + d[i])
    m = min(hs)
    if m > -1:
        return None
    k1 = hs.index(m)  # t1 sits at breakpoint k1
    level = m + 1

    out: List[tuple] = []
    k = 0
    # [0, t0]: untouched.
    while k < k1 and hs[k + 1] >= level:
        out.append(segs[k])
        k += 1
    # Segment k crosses below m+1; split at the crossing.
    run_min = level
    while k < k1:
        d, h0, h1 = segs[k], hs[k], hs[k + 1]
        if h1 >= run_min:
            out.append(d)  # spike piece
        elif h0 > run_min:
            c = (h0 - run_min) / (h0 - h1)
            out.append(scale(c, d))  # spike tail down to the running minimum
            out.append(simple_reflect(R, i, scale(1 - c, d)))
            run_min = h1
        else:
            out.append(simple_reflect(R, i, d))  # running along the minimum
            run_min = h1
        k += 1
    # [t1, 1]: translated, so displacements are unchanged.
    out.extend(segs[k1:])
    return PLPath(R, out)


def f_alpha(R: RootSystem, p: PLPath, i: int) -> Optional[PLPath]:
    """Lowering operator, defined through reversal: ``f(p) = (e(p*))*``."""
    q = e_alpha(R, reverse(p), i)
    return None if q is None else reverse(q)


@dataclass(frozen=True)
class OperatorWord:
    letters: Tuple[Tuple[str, int], ...]

    @classmethod
    def parse(cls, text: str) -> "OperatorWord":
        """Parse ``"f1 f2 e1"``; indices in the string are 1-based."""
        letters = []
        for tok in text.replace(",", " ").split():
            m = re.fullmatch(r"([ef])(\d+)", tok.strip())
            if not m:
                raise ValueError(f"bad operator letter {tok!r}")
            letters.append((m.group(1), int(m.group(2)) - 1))
        return cls(tuple(letters))

    def __str__(self):
        return " ".join(f"{k}{i + 1}" for k, i in self.letters)

    def __len__(self):
        return len(self.letters)


def apply_word(R: RootSystem, p: PLPath, w: OperatorWord) -> Optional[PLPath]:
    """Apply letters left to right; ``None`` as soon as one is undefined."""
    if isinstance(w, str):
        w = OperatorWord.parse(w)
    for kind, i in w.letters:
        p = (e_alpha if kind == "e" else f_alpha)(R, p, i)
        if p is None:
            return None
    return p


def generate_F_orbit(R: RootSystem, seed: PLPath, bound: Optional[int] = DEFAULT_ORBIT_BOUND) -> List[PLPath]:
    """All paths ``f(seed)`` for words ``f`` in the lowering operators, in BFS order."""
    seen = {seed}
    order = [seed]
    q = deque([seed])
    while q:
        p = q.popleft()
        for i in range(R.rank):
            r = f_alpha(R, p, i)
            if r is not None and r not in seen:
                seen.add(r)
                order.append(r)
                if bound is not None and len(order) > bound:
                    raise BoundExceeded(
                        f"F-orbit exceeds {bound} paths", partial=len(order)
                    )
                q.append(r)
    return order


def seed_path(R: RootSystem, lam) -> PLPath:
    """``pi_{k1 w1} * ... * pi_{kn wn}`` for ``lam = sum k_i w_i``, ascending index."""
    lam = vec(lam)
    if any(x < 0 or x.denominator != 1 for x in lam):
        raise PreconditionError("seed needs a dominant coweight")
    pieces = [
        pi_lambda(R, tuple(x if j == i else 0 for j in range(R.rank)))
        for i, x in enumerate(lam)
        if x
    ]
    return concat(*pieces) if pieces else PLPath(R)


def raise_to_dominant(R: RootSystem, p: PLPath, lambdas: Optional[Sequence] = None):
    """Raise ``p`` into the dominant chamber with a word in the ``e`` operators.

    With ``lambdas`` the input is first checked to be a generalized LS path of
    that type.  Returns ``(path, word)`` where applying ``word`` to ``p``
    gives ``path``.
    """
    from .predicates import contained_in_delta, is_generalized_ls1

    if lambdas is not None and not is_generalized_ls1(R, p, lambdas).verdict:
        raise PreconditionError("input is not a generalized LS path of the given type")
    letters = []
    while True:
        for i in range(R.rank):
            q = e_alpha(R, p, i)
            if q is not None:
                p = q
                letters.append(("e", i))
                break
        else:
            break
    if not contained_in_delta(R, p):
        raise PreconditionError("raising stopped outside the dominant chamber")
    return p, OperatorWord(tuple(letters))
