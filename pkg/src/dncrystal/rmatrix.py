"""Piecewise-linear combinatorial R on B_l (x) B_m and its local energies.

Everything is evaluated in x-coordinates.  The raw pieces are ``V_i`` and
``W_i`` (``0 <= i <= n-1``) together with their ``*`` and ``sigma_1``
transforms; the normalized energies are

    v_i = l + m - V_i,   v0^s1 = l + m - V_0^s1,   v*_i = l + m - V*_i,
    w_i = 2(l + m) - W_i,

all non-negative and zero on ``u_l (x) u_m``.  The local energy ``H`` is
fixed to ``V_0`` exactly.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

from .crystal import (BoxState, StateError, XCoords, a_count, gamma, sigma1_x,
                      sigman_x, star_x, to_x, vacuum, x_to_zeta, zeta_to_x)
from .kinds import EnergyKind, all_kinds

__all__ = [
    "Pieces", "RResult", "pieces", "v_piece", "w_piece", "apply_r",
    "local_energy", "local_energies", "energy_from_pieces", "symmetry_transform",
    "symmetry_expected", "SYMMETRY_OPS", "carrier_stabilize", "carrier_energy_rhs",
    "CarrierError", "EnergyKind",
]


class CarrierError(RuntimeError):
    """A finite stand-in for an infinite carrier did not stabilize."""

    def __init__(self, msg, trace=()):
        super().__init__(msg)
        self.trace = list(trace)


class Pieces(NamedTuple):
    V: tuple        # V_0 .. V_{n-1}
    Vs: tuple       # V*_0 .. V*_{n-1}
    V0s1: int
    W: tuple        # W_0 .. W_{n-1}


@dataclass(frozen=True)
class RResult:
    left: BoxState      # y' (capacity of the right input)
    right: BoxState     # x' (capacity of the left input)
    H: int


def _unpack(n, x):
    """x-tuple -> 1-indexed unbarred list x[1..n] and barred list xb[1..n-1]."""
    unb = [0, *x[:n]]
    bar = [0, *x[:n - 1:-1]]
    return unb, bar


def _v_all(n, x, xb, y, yb, lx, ly, upto=None):
    sd = [0] * n
    se = [0] * n
    for k in range(1, n):
        sd[k] = sd[k - 1] + yb[k] - xb[k]
        se[k] = se[k - 1] + y[k] - x[k]
    xn = x[n]
    out = []
    for i in range(n if upto is None else upto + 1):
        sdi = sd[i]
        best = ly - sd[n - 1] + sdi + xn                                    # eta_{i,n}
        cand = lx + (lx - ly if i == n - 1 else 0) + sdi + se[n - 1] - xn   # eta'_{i,n}
        if cand > best:
            best = cand
        for j in range(1, n):
            base = lx + sdi - sd[j] if j <= i else ly - sd[j] + sdi
            thp = lx + sdi + se[j]
            if j <= n - 2:
                if base > best:
                    best = base                          # theta_{i,j}
                if thp > best:
                    best = thp                           # theta'_{i,j}
            cand = base + yb[j] - x[j]                   # eta_{i,j}
            if cand > best:
                best = cand
            cand = thp + x[j] - yb[j]                    # eta'_{i,j}
            if cand > best:
                best = cand
        out.append(best)
    return out


def _pieces_x(n, xt, yt):
    x, xb = _unpack(n, xt)
    y, yb = _unpack(n, yt)
    lx, ly = sum(xt), sum(yt)
    V = _v_all(n, x, xb, y, yb, lx, ly)
    # (x, y)^* = (y^*, x^*)
    ys, ysb = yb[:] + [y[n]], y[:n]
    xs, xsb = xb[:] + [x[n]], x[:n]
    Vs = _v_all(n, ys, ysb, xs, xsb, ly, lx)
    x1, xb1 = x[:], xb[:]
    x1[1], xb1[1] = xb[1], x[1]
    y1, yb1 = y[:], yb[:]
    y1[1], yb1[1] = yb[1], y[1]
    V0s1 = _v_all(n, x1, xb1, y1, yb1, lx, ly, upto=0)[0]
    W = [2 * V[0], V[0] + V0s1]
    for i in range(2, n - 1):
        W.append(max(V[i] + Vs[i - 1] - y[i], V[i - 1] + Vs[i] - xb[i])
                 + min(x[i], yb[i]))
    W.append(V[n - 1] + Vs[n - 1])
    return Pieces(tuple(V), tuple(Vs), V0s1, tuple(W))


def pieces(x: XCoords, y: XCoords) -> Pieces:
    """All ``V_i``, ``V*_i``, ``V_0^s1`` and ``W_i`` at the pair ``(x, y)``."""
    if x.n != y.n:
        raise StateError(f"rank mismatch: {x.n} vs {y.n}")
    return _pieces_x(x.n, x.x, y.x)


def v_piece(i: int, x: XCoords, y: XCoords) -> int:
    return pieces(x, y).V[i]


def w_piece(i: int, x: XCoords, y: XCoords) -> int:
    return pieces(x, y).W[i]


@lru_cache(maxsize=1 << 18)
def _r_core(n, zb, zc):
    xt, yt = zeta_to_x(n, zb), zeta_to_x(n, zc)
    P = _pieces_x(n, xt, yt)
    V, Vs, W = P.V, P.Vs, P.W
    x, xb = _unpack(n, xt)
    y, yb = _unpack(n, yt)
    xo, xbo = [0] * (n + 1), [0] * n
    yo, ybo = [0] * (n + 1), [0] * n
    for i in range(1, n):
        xo[i] = x[i] + Vs[i - 1] - Vs[i]
        xbo[i] = xb[i] + Vs[i - 1] + W[i] - Vs[i] - W[i - 1]
        yo[i] = y[i] + V[i - 1] + W[i] - V[i] - W[i - 1]
        ybo[i] = yb[i] + V[i - 1] - V[i]
    xo[n] = x[n] + Vs[n - 1] - V[n - 1]
    yo[n] = y[n] + V[n - 1] - Vs[n - 1]
    xot = tuple(xo[1:]) + tuple(xbo[:0:-1])
    yot = tuple(yo[1:]) + tuple(ybo[:0:-1])
    return x_to_zeta(n, yot), x_to_zeta(n, xot), P


def apply_r(b: BoxState, c: BoxState) -> RResult:
    """``R(b (x) c) = c' (x) b'`` with local energy ``H = V_0(b, c)``."""
    if b.n != c.n:
        raise StateError(f"rank mismatch: {b.n} vs {c.n}")
    zl, zr, P = _r_core(b.n, b.zeta, c.zeta)
    try:
        left, right = BoxState(b.n, zl), BoxState(b.n, zr)
    except StateError as e:  # pragma: no cover - would be a formula bug
        raise AssertionError(f"R produced an invalid box from {b} (x) {c}: {e}")
    return RResult(left, right, P.V[0])


def apply_r_raw(n: int, zb: tuple, zc: tuple):
    """Tuple-level ``R`` for hot loops: ``(zeta_left, zeta_right, Pieces)``."""
    return _r_core(n, zb, zc)


def energy_from_pieces(kind: EnergyKind, P: Pieces, lx: int, ly: int) -> int:
    name, a = kind.name, kind.a
    s = lx + ly
    if name == "v":
        return s - P.V[a]
    if name == "vstar":
        return s - P.Vs[a]
    if name == "v0s1":
        return s - P.V0s1
    if name == "w":
        return 2 * s - P.W[a]
    return s - P.W[a] + P.V[a]  # w_a - v_a


def local_energy(kind: EnergyKind, b: BoxState, c: BoxState) -> int:
    if b.n != c.n:
        raise StateError(f"rank mismatch: {b.n} vs {c.n}")
    kind.check_rank(b.n)
    P = _r_core(b.n, b.zeta, c.zeta)[2]
    return energy_from_pieces(kind, P, b.capacity, c.capacity)


def local_energies(b: BoxState, c: BoxState) -> dict:
    """Every lowercase energy at ``b (x) c``."""
    P = _r_core(b.n, b.zeta, c.zeta)[2]
    lb, lc = b.capacity, c.capacity
    return {k: energy_from_pieces(k, P, lb, lc) for k in all_kinds(b.n)}


# -- piece symmetries ---------------------------------------------------------------------

def _piece_value(piece, P):
    kind, i = piece
    if kind == "V":
        return P.V[i]
    if kind == "W":
        return P.W[i]
    raise ValueError(f"unknown piece id {piece!r}")


def symmetry_transform(piece, op: str, x: XCoords, y: XCoords) -> int:
    """Value of ``piece`` (``("V", i)`` or ``("W", i)``) after ``op`` acts on the pair.

    ``op`` is one of ``"s1"``, ``"sn"``, ``"star"``, ``"R"``.  For ``R`` the
    piece is evaluated at ``(y', x')`` where ``R(x (x) y) = y' (x) x'``.
    """
    n = x.n
    if op == "s1":
        xt, yt = sigma1_x(x).x, sigma1_x(y).x
    elif op == "sn":
        xt, yt = sigman_x(x).x, sigman_x(y).x
    elif op == "star":
        xt, yt = star_x(y).x, star_x(x).x
    elif op == "R":
        zl, zr, _ = _r_core(n, x_to_zeta(n, x.x), x_to_zeta(n, y.x))
        xt, yt = zeta_to_x(n, zl), zeta_to_x(n, zr)
    else:
        raise ValueError(f"unknown transformation {op!r}")
    return _piece_value(piece, _pieces_x(n, xt, yt))


def symmetry_expected(piece, op: str, x: XCoords, y: XCoords) -> int:
    """Right-hand side of the transformation law for ``piece`` under ``op``."""
    n = x.n
    kind, i = piece
    P = _pieces_x(n, x.x, y.x)
    if kind == "W":
        if not 1 <= i <= n - 1:
            raise ValueError(f"W_{i} has no symmetry law")
        return P.W[i]
    if kind != "V" or not 0 <= i <= n - 1:
        raise ValueError(f"unknown piece id {piece!r}")
    if i == 0:
        return P.V0s1 if op == "s1" else P.V[0]
    if i == n - 1:
        return P.Vs[i] if op in ("sn", "star") else P.V[i]
    return {"s1": P.V[i], "sn": P.V[i], "star": P.Vs[i],
            "R": P.W[i] - P.Vs[i]}[op]


SYMMETRY_OPS = ("s1", "sn", "star", "R")


# -- stabilized carrier ----------------------------------------------------------

def _with_extra_ones(body: BoxState, k: int) -> BoxState:
    return BoxState(body.n, (body.zeta[0] + k,) + body.zeta[1:])


def carrier_stabilize(y: BoxState, body: BoxState | None = None, start: int | None = None,
                      cap_factor: int = 64):
    """Limit of ``R(xi (x) y)`` as the number of letters 1 in ``xi`` grows.

    ``xi`` is ``body`` plus ``k`` extra letters 1, with ``k`` doubling from
    ``start`` (default ``max(m, 1)``) until the left output and every energy
    agree at two successive sizes.  Returns ``(y_limit, energies)``.
    """
    n = y.n
    if body is None:
        body = vacuum(n, 0)
    m = max(y.capacity, 1)
    k = start or m
    trace = []
    prev = None
    while k <= cap_factor * m:
        xi = _with_extra_ones(body, k)
        res = apply_r(xi, y)
        cur = (res.left, local_energies(xi, y))
        trace.append((k, cur))
        if prev is not None and cur == prev:
            return cur
        prev = cur
        k *= 2
    raise CarrierError(f"carrier did not stabilize for {y} (body {body})", trace)


def carrier_energy_rhs(kind: EnergyKind, y: BoxState, y_limit: BoxState) -> int:
    """``gamma_g(y) + a(y') - gamma_g(y')`` (coefficient 2 on ``a`` for ``w_a``)."""
    coef = 2 if kind.name == "w" else 1
    if kind.name == "wmv" and kind.a == y.n - 1:
        raise ValueError("w_(n-1) - v_(n-1) is v*_(n-1); use that kind")
    return gamma(kind, y) + coef * a_count(y_limit) - gamma(kind, y_limit)
