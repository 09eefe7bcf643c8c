"""Box states of the D_n^(1) crystal B_l in occupation and x-coordinates.

A box of capacity ``l`` holds ``l`` letters from ``1 < 2 < ... < n-1 <
{n, -n} < -(n-1) < ... < -1``; barred letters are written as negative
integers.  The occupation vector ``zeta`` lists the multiplicities in that
order, so the barred letter ``-a`` lives at index ``2n - a``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .kinds import EnergyKind


class StateError(ValueError):
    """Raised for malformed box states, paths and their text forms."""


@dataclass(frozen=True, slots=True)
class BoxState:
    n: int
    zeta: tuple

    def __post_init__(self):
        n, z = self.n, self.zeta
        if n < 3:
            raise StateError(f"rank must be >= 3, got n={n}")
        if len(z) != 2 * n:
            raise StateError(f"zeta must have 2n={2 * n} entries, got {len(z)}")
        if any(c < 0 for c in z):
            raise StateError(f"zeta entries must be non-negative: {z}")
        if z[n - 1] and z[n]:
            raise StateError(f"letters n and -n cannot share a box: {z}")

    @property
    def capacity(self) -> int:
        return sum(self.zeta)

    def count(self, letter: int) -> int:
        return self.zeta[letter_index(self.n, letter)]

    def letters(self) -> list[int]:
        """Letters in weakly increasing order."""
        out = []
        for idx, c in enumerate(self.zeta):
            out += [index_letter(self.n, idx)] * c
        return out

    def __str__(self):
        return format_box(self)


@dataclass(frozen=True, slots=True)
class XCoords:
    """``x = (x_1..x_n, xb_{n-1}..xb_1)``; ``x_n`` may be negative."""
    n: int
    x: tuple

    def __post_init__(self):
        n, x = self.n, self.x
        if len(x) != 2 * n - 1:
            raise StateError(f"x must have 2n-1={2 * n - 1} entries, got {len(x)}")
        if any(c < 0 for i, c in enumerate(x) if i != n - 1):
            raise StateError(f"x_i and xb_i must be non-negative for i<n: {x}")
        if x[n - 1] < -min(x[n - 2], x[n]):
            raise StateError(f"x_n >= -min(x_(n-1), xb_(n-1)) violated: {x}")

    def unbarred(self, i: int) -> int:
        return self.x[i - 1]

    def barred(self, i: int) -> int:
        return self.x[2 * self.n - 1 - i]

    @property
    def level(self) -> int:
        return sum(self.x)


def letter_index(n: int, letter: int) -> int:
    if 1 <= letter <= n:
        return letter - 1
    if -n <= letter <= -1:
        return 2 * n + letter
    raise StateError(f"letter {letter} out of range for n={n}")


def index_letter(n: int, idx: int) -> int:
    return idx + 1 if idx < n else idx - 2 * n


def from_letters(n: int, letters: Iterable[int]) -> BoxState:
    z = [0] * (2 * n)
    for a in letters:
        z[letter_index(n, a)] += 1
    return BoxState(n, tuple(z))


def vacuum(n: int, l: int) -> BoxState:
    """``u_l``: ``l`` copies of letter 1 (the empty box)."""
    return BoxState(n, (l,) + (0,) * (2 * n - 1))


def star_vacuum(n: int, l: int) -> BoxState:
    """``u*_l``: ``l`` copies of letter -1."""
    return BoxState(n, (0,) * (2 * n - 1) + (l,))


# -- coordinate change ------------------------------------------------------

def zeta_to_x(n: int, z: Sequence[int]) -> tuple:
    zn, zbn = z[n - 1], z[n]
    x = list(z[:n - 2])
    x += [z[n - 2] + zbn, zn - zbn, z[n + 1] + zbn]
    x += z[n + 2:]
    return tuple(x)


def x_to_zeta(n: int, x: Sequence[int]) -> tuple:
    xn = x[n - 1]
    zn, zbn = max(0, xn), max(0, -xn)
    m = min(0, xn)
    z = list(x[:n - 2])
    z += [x[n - 2] + m, zn, zbn, x[n] + m]
    z += x[n + 1:]
    return tuple(z)


def to_x(b: BoxState) -> XCoords:
    return XCoords(b.n, zeta_to_x(b.n, b.zeta))


def from_x(xc: XCoords) -> BoxState:
    return BoxState(xc.n, x_to_zeta(xc.n, xc.x))


# -- involutions --------------------------------------------------------------

def sigma1_x(xc: XCoords) -> XCoords:
    x = list(xc.x)
    x[0], x[-1] = x[-1], x[0]
    return XCoords(xc.n, tuple(x))


def sigman_x(xc: XCoords) -> XCoords:
    n, x = xc.n, list(xc.x)
    xn = x[n - 1]
    x[n - 2] += xn
    x[n] += xn
    x[n - 1] = -xn
    return XCoords(n, tuple(x))


def star_x(xc: XCoords) -> XCoords:
    n, x = xc.n, xc.x
    return XCoords(n, tuple(x[n:][::-1]) + (x[n - 1],) + tuple(x[:n - 1][::-1]))


def sigma1(b: BoxState) -> BoxState:
    """Swap the counts of letters 1 and -1."""
    z = list(b.zeta)
    z[0], z[-1] = z[-1], z[0]
    return BoxState(b.n, tuple(z))


def sigman(b: BoxState) -> BoxState:
    """Swap the counts of letters n and -n."""
    n, z = b.n, list(b.zeta)
    z[n - 1], z[n] = z[n], z[n - 1]
    return BoxState(n, tuple(z))


def star_zeta(n: int, z: Sequence[int]) -> tuple:
    return tuple(z[n + 1:][::-1]) + (z[n - 1], z[n]) + tuple(z[:n - 1][::-1])


def star(b: BoxState) -> BoxState:
    """Charge conjugation: swaps a <-> -a for a < n, keeps n and -n."""
    return BoxState(b.n, star_zeta(b.n, b.zeta))


def star_path(p: Sequence[BoxState]) -> tuple:
    """``*`` on a tensor product reverses the order and conjugates each box."""
    return tuple(star(b) for b in reversed(p))


# -- letter counts --------------------------------------------------------------

def a_count(b: BoxState) -> int:
    """Number of particles and anti-particles; a bound pair (-1) counts twice."""
    z = b.zeta
    return sum(z) + z[-1] - z[0]


def a_star_count(b: BoxState) -> int:
    z = b.zeta
    return sum(z) + z[0] - z[-1]


def gamma(kind: EnergyKind, b: BoxState) -> int:
    """Letter-count functional paired with ``kind`` in the counting functions."""
    n, z = b.n, b.zeta
    a = kind.a
    kind.check_rank(n)
    # z[1:n] = zeta_2..zeta_n ; barred -k sits at 2n-k
    if kind.name == "v":
        if a == n - 1:
            return sum(z[1:n]) + z[-1]
        return sum(z[1:n]) + sum(z[n:2 * n - a]) + z[-1]
    if kind.name == "vstar":
        if a != n - 1:
            raise StateError(f"gamma is not defined for {kind}; use gamma_star")
        return sum(z[1:n - 1]) + z[n] + z[-1]
    if kind.name == "wmv":
        return sum(z[1:a]) + z[-1]
    if kind.name == "w":
        if a == n - 1:
            raise StateError("gamma is not defined for w_(n-1)")
        return (a_count(b) + sum(z[1:a])
                - sum(z[2 * n - a:2 * n - 1]))
    return 0  # v0^s1


def gamma_star(a: int, b: BoxState) -> int:
    """Conjugated functional ``gamma_{v_a}(b*)`` for ``1 <= a <= n-2``."""
    if not 1 <= a <= b.n - 2:
        raise StateError(f"gamma_star needs 1 <= a <= n-2, got a={a}")
    return gamma(EnergyKind("v", a), star(b))


def weight(b: BoxState) -> tuple:
    """Classical weight in the epsilon basis: ``zeta_a - zetabar_a``."""
    n, z = b.n, b.zeta
    return tuple(z[a] - z[2 * n - 1 - a] for a in range(n))


# -- enumeration ------------------------------------------------------------------

def _compositions(total: int, parts: int) -> Iterator[tuple]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def boxes(n: int, l: int) -> list[BoxState]:
    """All of B_l at rank n."""
    return [BoxState(n, z) for z in _compositions(l, 2 * n)
            if not (z[n - 1] and z[n])]


def path_capacities(p: Sequence[BoxState]) -> tuple:
    return tuple(b.capacity for b in p)


def check_path(p: Sequence[BoxState]) -> tuple:
    p = tuple(p)
    ranks = {b.n for b in p}
    if len(ranks) > 1:
        raise StateError(f"mixed ranks in path: {sorted(ranks)}")
    return p


# -- text format --------------------------------------------------------------------

_ZETA_RE = re.compile(r"\(\s*-?\d+(\s*,\s*-?\d+)*\s*\)")


def parse_box(text: str, n: int) -> BoxState:
    """Parse ``"1 2 4 -3 -2 -1"`` or a zeta vector ``"(1,1,0,1,0,1,1,1)"``."""
    t = text.strip()
    if _ZETA_RE.fullmatch(t):
        z = tuple(int(s) for s in t.strip("() ").split(","))
        return BoxState(n, z)
    letters = []
    for pos, tok in enumerate(t.split()):
        try:
            a = int(tok)
        except ValueError:
            raise StateError(f"token {pos + 1} {tok!r} is not a signed letter") from None
        if a == 0 or abs(a) > n:
            raise StateError(f"token {pos + 1} {tok!r} out of range for n={n}")
        letters.append(a)
    return from_letters(n, letters)


def format_box(b: BoxState, zeta: bool = False) -> str:
    if zeta:
        return "(" + ",".join(str(c) for c in b.zeta) + ")"
    return " ".join(str(a) for a in b.letters())


def parse_path(text: str, n: int) -> tuple:
    t = text.strip()
    if not t:
        return ()
    out = []
    for k, part in enumerate(t.split("|")):
        try:
            out.append(parse_box(part, n))
        except StateError as e:
            raise StateError(f"box {k + 1}: {e}") from None
    return tuple(out)


def format_path(p: Sequence[BoxState], zeta: bool = False) -> str:
    return " | ".join(format_box(b, zeta) for b in p)
