"""Path-level generalized energies.

For ``p = p_1 (x) ... (x) p_L`` the energy of kind ``g`` is

    E_g(p) = sum_{0 <= i < j <= L} g(p_i (x) p_j^(i+1)),    p_0 = u_inf,

where ``p_j^(i)`` is ``p_j`` dragged to position ``i`` by successive R's.
``UINF`` stands for the infinite vacuum carrier; any local energy with
``UINF`` on the left is evaluated at a finite vacuum grown until it
stabilizes (see :func:`dncrystal.rmatrix.carrier_stabilize`).
"""
from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from .crystal import BoxState, StateError, star_path, star_vacuum, vacuum
from .kinds import EnergyKind, all_kinds, main_kinds
from .rmatrix import (CarrierError, apply_r_raw, carrier_stabilize,
                      energy_from_pieces)


class _UInf:
    __slots__ = ()

    def __repr__(self):
        return "UINF"


UINF = _UInf()


def is_order_sensitive(kind: EnergyKind, n: int) -> bool:
    """True for kinds whose vertex sums ``I_g`` are not R-invariant.

    These are ``v*_a`` with ``1 <= a <= n-2``; every other kind is a sum of
    R-invariant pieces (``w_a = (w_a - v_a) + v_a``, ``w_(n-1) = v_(n-1) + v*_(n-1)``).
    """
    kind.check_rank(n)
    return kind.name == "vstar" and kind.a <= n - 2


@lru_cache(maxsize=1 << 16)
def _uinf_row(n, zc):
    y_lim, en = carrier_stabilize(BoxState(n, zc))
    return y_lim.zeta, en


def _all(n):
    return tuple(all_kinds(n))


def _vertex(n, left, zc):
    """(new zeta of the dragged element, {kind: g(left (x) c)}) for one crossing."""
    if left is UINF:
        zl, en = _uinf_row(n, zc)
        return zl, en
    zl, _, P = apply_r_raw(n, left.zeta, zc)
    lb, lc = left.capacity, sum(zc)
    return zl, {k: energy_from_pieces(k, P, lb, lc) for k in _all(n)}


def _rank(p):
    for b in p:
        if b is not UINF:
            return b.n
    raise StateError("cannot infer the rank of an empty path")


def drag_left(p: Sequence, i: int, j: int):
    """``p_j`` sent to position ``i`` (1-based; ``i=0`` means through a leading ``UINF``).

    Returns ``(p_j^(i), tail)`` where ``tail`` is ``p'_i .. p'_{j-1}``.
    """
    L = len(p)
    if not (0 <= i <= j <= L and j >= 1):
        raise IndexError(f"need 0 <= i <= j <= L={L}, got i={i}, j={j}")
    seq = ([UINF] if i == 0 else []) + list(p[max(i, 1) - 1:j])
    n = _rank(p)
    c = seq[-1]
    tail = []
    for left in reversed(seq[:-1]):
        if left is UINF:
            zl, _ = _uinf_row(n, c.zeta)
            tail.append(UINF)
        else:
            zl, zr, _ = apply_r_raw(n, left.zeta, c.zeta)
            tail.append(BoxState(n, zr))
        c = BoxState(n, zl)
    return c, tuple(reversed(tail))


def vertex_values(seq: Sequence, n: int | None = None) -> list:
    """Energies at the vertices met while dragging ``seq[-1]`` through ``seq[:-1]``.

    ``seq`` may contain ``UINF``.  Entry ``k`` of the result is the dict of
    energies at ``seq[k] (x) seq[-1]^(k+1)``.
    """
    n = n or _rank(seq)
    c = seq[-1]
    if c is UINF:
        return [dict.fromkeys(_all(n), 0) for _ in seq[:-1]]
    zc = c.zeta
    out = []
    for left in reversed(seq[:-1]):
        zl, en = _vertex(n, left, zc)
        out.append(en)
        zc = zl
    return out[::-1]


def vertex_sum_I(kind: EnergyKind, seq: Sequence) -> int:
    """``I_g(seq)``: sum of ``g`` over all vertices of the dragging diagram."""
    return sum(en[kind] for en in vertex_values(seq))


def vertex_sum_I_right(kind: EnergyKind, seq: Sequence[BoxState]) -> int:
    """Mirror image of :func:`vertex_sum_I`: ``seq[0]`` is dragged rightwards
    through ``seq[1:]`` and ``g`` is summed over the crossings.  Here the
    ``v_a`` with ``1 <= a <= n-2`` are the order-sensitive kinds."""
    n = seq[0].n
    zb, lb = seq[0].zeta, seq[0].capacity
    tot = 0
    for c in seq[1:]:
        _, zr, P = apply_r_raw(n, zb, c.zeta)
        tot += energy_from_pieces(kind, P, lb, c.capacity)
        zb = zr
    return tot


def swap_adjacent(seq: Sequence, k: int) -> list:
    """``seq`` with R applied to positions ``k, k+1`` (0-based)."""
    out = list(seq)
    b, c = out[k], out[k + 1]
    if b is UINF or c is UINF:
        if b is UINF and c is UINF:
            return out
        raise ValueError("only a pair of infinite carriers can be swapped")
    zl, zr, _ = apply_r_raw(b.n, b.zeta, c.zeta)
    out[k], out[k + 1] = BoxState(b.n, zl), BoxState(b.n, zr)
    return out


def find_chirality_witness(kind: EnergyKind, n: int, seed: int = 0, tries: int = 20000,
                           right: bool = False, max_cap: int = 2):
    """Search for a path and an adjacent swap that changes ``I_g``.

    Returns ``(seq, k, before, after)`` or ``None``.  With ``right=True`` the
    mirrored sum :func:`vertex_sum_I_right` is used and the swap avoids the
    dragged element at position 0; otherwise the swap avoids the last one.
    """
    import random
    from .crystal import boxes
    rng = random.Random(seed)
    pools = {l: boxes(n, l) for l in range(1, max_cap + 1)}
    f = vertex_sum_I_right if right else vertex_sum_I
    for _ in range(tries):
        L = rng.randint(3, 4)
        seq = [rng.choice(pools[rng.randint(1, max_cap)]) for _ in range(L)]
        ks = range(1, L - 1) if right else range(L - 2)
        for k in ks:
            before, after = f(kind, seq), f(kind, swap_adjacent(seq, k))
            if before != after:
                return seq, k, before, after
    return None


def energy_report(p: Sequence, kinds: Sequence[EnergyKind] | None = None) -> dict:
    """``{kind: [E_g(p_[0]), ..., E_g(p_[L])]}`` via ``E(p_[k]) = E(p_[k-1]) + I(u_inf p_1..p_k)``."""
    p = tuple(p)
    n = _rank(p) if p else None
    if kinds is None:
        kinds = all_kinds(n) if n else []
    out = {k: [0] for k in kinds}
    for j in range(1, len(p) + 1):
        verts = vertex_values([UINF, *p[:j]], n)
        for k in kinds:
            out[k].append(out[k][-1] + sum(en[k] for en in verts))
    return out


def energy(kind: EnergyKind, p: Sequence) -> list:
    """Prefix energies ``E_g(p_[k])`` for ``k = 0..L``."""
    if p:
        kind.check_rank(_rank(p))
    return energy_report(p, [kind])[kind]


def energy_direct(kind: EnergyKind, p: Sequence) -> int:
    """``E_g(p)`` straight from the double sum over ``0 <= i < j <= L``."""
    p = tuple(p)
    seq = [UINF, *p]
    total = 0
    for j in range(1, len(seq)):
        for i in range(j):
            c, _ = drag_left(p, i + 1, j) if i + 1 <= j else (seq[j], ())
            left = seq[i]
            total += _vertex(c.n, left, c.zeta)[1][kind]
    return total


# -- corner diagrams -------------------------------------------------------------

def _default_cap(p):
    caps = [b.capacity for b in p if b is not UINF]
    return max(1, sum(caps) + max(caps, default=0))


def _corner(kinds, p, carrier_cap):
    n = p[0].n
    q = [b.zeta for b in p]
    tot = dict.fromkeys(kinds, 0)
    carrier = vacuum(n, carrier_cap)
    cz, cl = carrier.zeta, carrier_cap
    while q:
        nxt = []
        for zc in q:
            zl, zr, P = apply_r_raw(n, cz, zc)
            lc = sum(zc)
            for k in kinds:
                tot[k] += energy_from_pieces(k, P, cl, lc)
            nxt.append(zl)
            cz = zr
        cz, cl = nxt[0], sum(nxt[0])
        q = nxt[1:]
    return tot


def corner_sum(kind: EnergyKind, p: Sequence[BoxState], cap: int | None = None) -> int:
    """Sum of ``g`` over every vertex of the triangular corner diagram of ``p``.

    Row ``r`` of the diagram sends the leftmost surviving element (``u_inf``
    for ``r = 0``) rightwards through the others.
    """
    p = tuple(p)
    if not p:
        return 0
    kind.check_rank(p[0].n)
    cap = cap or _default_cap(p)
    prev = None
    for _ in range(7):
        cur = _corner([kind], p, cap)[kind]
        if cur == prev:
            return cur
        prev = cur
        cap *= 2
    raise CarrierError(f"corner sum did not stabilize for {kind}")


def _star_corner(a, p, carrier_cap):
    n = p[0].n
    from .kinds import vstar
    kind = vstar(a)
    q = [b.zeta for b in p]
    tot = 0
    cz = star_vacuum(n, carrier_cap).zeta
    while q:
        nxt = []
        for zb in reversed(q):
            zl, zr, P = apply_r_raw(n, zb, cz)
            tot += energy_from_pieces(kind, P, sum(zb), sum(cz))
            nxt.append(zr)
            cz = zl
        nxt.reverse()
        cz = nxt[-1]
        q = nxt[:-1]
    return tot


def star_energy(a: int, p_rev: Sequence[BoxState]) -> list:
    """``E*_{v*_a}`` of ``p_L (x) ... (x) p_1`` for every suffix ``p_k .. p_1``.

    The carrier ``u*_inf`` enters from the right; each later row sends the
    rightmost surviving element leftwards.  Entry ``k`` of the result is the
    energy of the rightmost ``k`` boxes.
    """
    p_rev = tuple(p_rev)
    out = [0]
    for k in range(1, len(p_rev) + 1):
        sub = p_rev[len(p_rev) - k:]
        n = sub[0].n
        if not 1 <= a <= n - 2:
            raise ValueError(f"star energy needs 1 <= a <= n-2, got a={a}")
        cap = _default_cap(sub)
        prev = None
        for _ in range(7):
            cur = _star_corner(a, sub, cap)
            if cur == prev:
                break
            prev = cur
            cap *= 2
        else:
            raise CarrierError("star corner sum did not stabilize")
        out.append(cur)
    return out


def star_energy_via_conjugation(a: int, p_rev: Sequence[BoxState]) -> list:
    """Same numbers through ``E*_{v*_a}(p) = E_{v_a}(p*)``."""
    from .kinds import v
    p_rev = tuple(p_rev)
    return [energy(v(a), star_path(p_rev[len(p_rev) - k:]))[-1] if k else 0
            for k in range(len(p_rev) + 1)]
