"""The D_n^(1) cellular automaton and its spacetime counting functions.

``T_l`` sends the carrier ``u_l`` through the path from the left,

    u_l (x) p_1 (x) ... (x) p_L  ~  p'_1 (x) ... (x) p'_L (x) xi,

and ``T_inf`` is its large-``l`` limit.  The starred automaton works on a
path written right to left, ``p_L (x) ... (x) p_1``, with the carrier ``u*_l``
entering from the right.  Python tuples always hold boxes in display order,
so a "reversed" path is simply the tuple ``(p_L, ..., p_1)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .crystal import (BoxState, StateError, a_count, a_star_count, from_letters,
                      gamma, gamma_star, letter_index, star_path, star_vacuum,
                      vacuum)
from .kinds import EnergyKind, main_kinds, v, vstar, wmv, V0S1
from .rmatrix import CarrierError, apply_r_raw, energy_from_pieces

INF = None  # spelling of "l = infinity" throughout the module


# -- time evolution -------------------------------------------------------------

def _sweep(p, cz):
    n = p[0].n
    out = []
    for b in p:
        zl, zr, _ = apply_r_raw(n, cz, b.zeta)
        out.append(BoxState(n, zl))
        cz = zr
    return tuple(out), cz


def _inf_cap(p):
    caps = [b.capacity for b in p]
    return max(1, sum(caps) + max(caps))


def evolve(p: Sequence[BoxState], l: int | None = INF):
    """One step of ``T_l``; ``l=None`` (or ``math.inf``) gives ``T_inf``.

    Returns ``(p', xi)``.  For ``T_inf`` the carrier is a finite vacuum of
    capacity ``sum(l_j) + max(l_j)``, confirmed by rerunning at twice that
    size; ``xi`` is the carrier emitted by the smaller run.
    """
    p = tuple(p)
    if not p:
        return (), None
    n = p[0].n
    if l is not INF and l != float("inf"):
        if l < 0:
            raise ValueError(f"carrier capacity must be >= 0, got {l}")
        q, cz = _sweep(p, vacuum(n, l).zeta)
        return q, BoxState(n, cz)
    cap = _inf_cap(p)
    q, cz = _sweep(p, vacuum(n, cap).zeta)
    trace = []
    for _ in range(6):
        q2, _ = _sweep(p, vacuum(n, 2 * cap).zeta)
        if q2 == q:
            return q, BoxState(n, cz)
        trace.append((cap, q))
        cap *= 2
        q, cz = q2, None
    raise CarrierError("T_inf did not stabilize", trace)


def carriers(p: Sequence[BoxState]) -> list:
    """Carrier states ``xi^(1) = u_inf, xi^(2), ..., xi^(L+1)`` met during ``T_inf``."""
    p = tuple(p)
    n = p[0].n
    cz = vacuum(n, _inf_cap(p) * 2).zeta
    out = [BoxState(n, cz)]
    for b in p:
        _, cz, _ = apply_r_raw(n, cz, b.zeta)
        out.append(BoxState(n, cz))
    return out


def star_evolve(p_rev: Sequence[BoxState], l: int | None = INF):
    """``T*_l`` on ``p_L (x) ... (x) p_1``: carrier ``u*_l`` enters on the right.

    Returns ``(T*_l(p), xi)`` with ``xi`` the carrier left over on the left.
    """
    p_rev = tuple(p_rev)
    if not p_rev:
        return (), None
    n = p_rev[0].n
    cap = _inf_cap(p_rev) if l is INF or l == float("inf") else l

    def run(c):
        cz = star_vacuum(n, c).zeta
        out = []
        for b in reversed(p_rev):
            zl, zr, _ = apply_r_raw(n, b.zeta, cz)
            out.append(BoxState(n, zr))
            cz = zl
        return tuple(reversed(out)), BoxState(n, cz)

    q, xi = run(cap)
    if l is INF or l == float("inf"):
        for _ in range(6):
            q2, _ = run(2 * cap)
            if q2 == q:
                return q, xi
            cap *= 2
            q, xi = q2, None
        raise CarrierError("T*_inf did not stabilize")
    return q, xi


@dataclass
class EvolutionTrace:
    rows: list                      # rows[t] = T^t(p)
    l: int | None = INF             # None means infinity
    star: bool = False
    emitted: list = field(default_factory=list)

    def format(self) -> str:
        from .crystal import format_path
        return "\n".join(format_path(r) for r in self.rows)


def trace(p: Sequence[BoxState], steps: int, l: int | None = INF) -> EvolutionTrace:
    rows, xis = [tuple(p)], []
    for _ in range(steps):
        q, xi = evolve(rows[-1], l)
        rows.append(q)
        xis.append(xi)
    return EvolutionTrace(rows, l, False, xis)


def star_trace(p_rev: Sequence[BoxState], steps: int, l: int | None = INF) -> EvolutionTrace:
    rows, xis = [tuple(p_rev)], []
    for _ in range(steps):
        q, xi = star_evolve(rows[-1], l)
        rows.append(q)
        xis.append(xi)
    return EvolutionTrace(rows, l, True, xis)


def _is_vacuum(b):
    return b.zeta[0] == b.capacity


def _check_fronts(rows):
    """After ``t`` steps of ``T_inf`` the first ``t`` boxes are empty."""
    for t, row in enumerate(rows):
        for j in range(min(t, len(row))):
            if not _is_vacuum(row[j]):
                raise CarrierError(f"row {t} box {j + 1} is not empty: vacuum front broken")


# -- factorized algorithm on B_1 chains -------------------------------------------

def _ka_step(boxes, a):
    """One ``K_a``.  ``boxes`` is a list of sorted letter tuples (length 1 or 2)."""
    abar = -a
    # pair creation
    cur = [((a, abar) if bx == (-1,) else bx) for bx in boxes]
    moved = [False] * len(cur)   # whether the a in box k has already moved

    def has_a(bx):
        return a in bx

    while True:
        src = next((k for k, bx in enumerate(cur) if has_a(bx) and not moved[k]), None)
        if src is None:
            break
        dst = None
        for k in range(src + 1, len(cur)):
            bx = cur[k]
            if bx == (1,) or bx == (abar,):
                dst = k
                break
        if dst is None:
            raise CarrierError(f"K_{a}: no free box to the right of position {src + 1}; "
                               "pad the state with empty boxes")
        cur[src] = (abar,) if len(cur[src]) == 2 else (1,)
        cur[dst] = (a,) if cur[dst] == (1,) else tuple(sorted((a, abar)))
        moved[dst] = True
    # pair annihilation
    return [((-1,) if len(bx) == 2 else bx) for bx in cur]


def evolve_ka(p: Sequence[BoxState]) -> tuple:
    """``T_inf`` on a chain of capacity-1 boxes through ``K_2 ... K_n K_nbar ... K_2bar``."""
    p = tuple(p)
    if not p:
        return ()
    n = p[0].n
    if any(b.capacity != 1 for b in p):
        raise StateError("the factorized algorithm needs capacity-1 boxes")
    boxes = [tuple(b.letters()) for b in p]
    order = [-a for a in range(2, n + 1)] + list(range(n, 1, -1))  # rightmost K acts first
    for a in order:
        boxes = _ka_step(boxes, a)
    return tuple(from_letters(n, bx) for bx in boxes)


# -- counting functions -----------------------------------------------------------

_COLOR_RANK = None


def canonical_colors(colors: Sequence[int], n: int) -> tuple:
    """Order letters as ``2, ..., n, -n, ..., -2, -1``; only -1 may repeat (twice at most)."""
    cs = list(colors)
    for c in cs:
        if c == 1 or c == 0 or abs(c) > n:
            raise StateError(f"{c} is not a particle color for n={n}")
    for c in set(cs):
        lim = 2 if c == -1 else 1
        if cs.count(c) > lim:
            raise StateError(f"color {c} repeated {cs.count(c)} times")
    return tuple(sorted(cs, key=lambda c: letter_index(n, c)))


def parse_colors(text: str, n: int) -> tuple:
    t = text.strip()
    if t in ("", "empty", "{}"):
        return ()
    return canonical_colors([int(s) for s in t.replace(",", " ").split()], n)


def _quadrant(rows, count):
    """``sum_{t>=1} sum_j count(p^t_j)``; only ``1 <= t < L``, ``j > t`` can contribute."""
    L = len(rows[0])
    total = 0
    for t in range(1, L):
        row = rows[t]
        for j in range(t, L):
            total += count(row[j])
    return total


def _inf_rows(p):
    p = tuple(p)
    tr = trace(p, max(len(p) - 1, 0), INF)
    _check_fronts(tr.rows)
    return tr.rows


def rho(colors: Sequence[int], p: Sequence[BoxState]) -> int:
    """Letters of the listed colors in ``p`` plus every particle in the SW quadrant."""
    p = tuple(p)
    if not p:
        return 0
    n = p[0].n
    cs = canonical_colors(colors, n)
    idx = [letter_index(n, c) for c in cs]
    first = sum(b.zeta[i] for b in p for i in idx)
    return first + _quadrant(_inf_rows(p), a_count)


def _g_coef(kind):
    return 2 if kind.name == "w" else 1


def rho_g(kind: EnergyKind, p: Sequence[BoxState]) -> int:
    p = tuple(p)
    if not p:
        return 0
    return rho_g_prefixes([kind], p)[kind][-1]


def rho_g_prefixes(kinds: Sequence[EnergyKind], p: Sequence[BoxState]) -> dict:
    """``{kind: [rho_g(p_[0]), ..., rho_g(p_[L])]}`` from one ``T_inf`` trace.

    Row ``t`` restricted to the first ``k`` boxes is row ``t`` of the trace of
    ``p_[k]``, since the carrier only moves rightwards.
    """
    p = tuple(p)
    out = {k: [0] for k in kinds}
    if not p:
        return out
    n = p[0].n
    for k in kinds:
        k.check_rank(n)
    rows = _inf_rows(p)
    L = len(p)
    acc_a = [0] * (L + 1)   # acc_a[k] = quadrant count of a over the first k columns
    col = [0] * L
    for t in range(1, L):
        for j in range(t, L):
            col[j] += a_count(rows[t][j])
    for k in range(1, L + 1):
        acc_a[k] = acc_a[k - 1] + col[k - 1]
    for kind in kinds:
        g = 0
        c = _g_coef(kind)
        for k in range(1, L + 1):
            g += gamma(kind, p[k - 1])
            out[kind].append(g + c * acc_a[k])
    return out


def rho_table(p: Sequence[BoxState], kinds: Sequence[EnergyKind] | None = None) -> dict:
    p = tuple(p)
    if kinds is None:
        kinds = main_kinds(p[0].n) if p else []
    return rho_g_prefixes(kinds, p)


def rho_star(a: int, p_rev: Sequence[BoxState]) -> list:
    """``rho*_{v*_a}`` of the rightmost ``k`` boxes for ``k = 0..L``."""
    p_rev = tuple(p_rev)
    if not p_rev:
        return [0]
    n = p_rev[0].n
    if not 1 <= a <= n - 2:
        raise ValueError(f"rho* needs 1 <= a <= n-2, got a={a}")
    L = len(p_rev)
    rows = star_trace(p_rev, max(L - 1, 0)).rows
    for t, row in enumerate(rows):
        for j in range(min(t, L)):
            b = row[L - 1 - j]
            if b.zeta[-1] != b.capacity:
                raise CarrierError(f"row {t}: starred vacuum front broken")
    # column c counted from the right: c = 0 is p_1
    col = [0] * L
    for t in range(1, L):
        row = rows[t]
        for c in range(t, L):
            col[c] += a_star_count(row[L - 1 - c])
    out = [0]
    g = acc = 0
    for k in range(1, L + 1):
        g += gamma_star(a, p_rev[L - k])
        acc += col[k - 1]
        out.append(g + acc)
    return out


# -- reconstruction ------------------------------------------------------------------

def delta_kinds(n: int) -> list:
    """Kinds whose prefix increments determine a box."""
    return [v(a) for a in range(n)] + [vstar(n - 1)] + [wmv(a) for a in range(1, n - 1)]


def reconstruct_box(l_k: int, deltas: dict, n: int) -> BoxState:
    """The box ``p_k`` from the increments ``rho_g(p_[k]) - rho_g(p_[k-1])``."""
    d = {k: deltas[k] for k in delta_kinds(n)}
    dv = [d[v(a)] for a in range(n)]
    dvs = d[vstar(n - 1)]
    dwv = [0] + [d[wmv(a)] for a in range(1, n - 1)]   # dwv[a] for 1 <= a <= n-2
    z = [0] * (2 * n)
    z[0] = l_k - dv[0] + dwv[1]
    for a in range(2, n - 1):
        z[a - 1] = dwv[a] - dwv[a - 1]
    z[n - 2] = min(dv[n - 1], dvs) - dwv[n - 2]
    z[n - 1] = max(dv[n - 1] - dvs, 0)
    z[n] = max(dvs - dv[n - 1], 0)
    z[n + 1] = -max(dv[n - 1], dvs) + dv[n - 2]
    for a in range(1, n - 1):
        z[2 * n - a] = dv[a - 1] - dv[a]
    try:
        b = BoxState(n, tuple(z))
    except StateError as e:
        raise StateError(f"inconsistent increments: {e}") from None
    if b.capacity != l_k:
        raise StateError(f"inconsistent increments: capacity {b.capacity} != {l_k}")
    return b


def reconstruct_path(capacities: Sequence[int], table: dict, n: int) -> tuple:
    """Rebuild every box from a prefix table as produced by :func:`rho_table`."""
    out = []
    for k, lk in enumerate(capacities, start=1):
        deltas = {g: table[g][k] - table[g][k - 1] for g in delta_kinds(n)}
        out.append(reconstruct_box(lk, deltas, n))
    return tuple(out)


# -- equality harnesses ------------------------------------------------------------------

@dataclass
class CheckReport:
    name: str
    rows: list = field(default_factory=list)   # (kind, k, lhs, rhs)

    @property
    def ok(self) -> bool:
        return all(lhs == rhs for _, _, lhs, rhs in self.rows)

    def failures(self) -> list:
        return [r for r in self.rows if r[2] != r[3]]


def check_main(p: Sequence[BoxState], with_w: bool = True) -> CheckReport:
    """Energies against counting functions for every prefix and every covered kind."""
    from .energies import energy_report
    from .kinds import w
    p = tuple(p)
    rep = CheckReport("main")
    if not p:
        return rep
    n = p[0].n
    kinds = main_kinds(n)
    extra = [w(a) for a in range(1, n - 1)] if with_w else []
    en = energy_report(p, kinds + extra)
    rh = rho_g_prefixes(kinds + extra, p)
    for kind in kinds + extra:
        for k in range(len(p) + 1):
            rep.rows.append((kind, k, en[kind][k], rh[kind][k]))
    return rep


def check_star(p_rev: Sequence[BoxState]) -> CheckReport:
    from .energies import star_energy
    p_rev = tuple(p_rev)
    rep = CheckReport("star")
    if not p_rev:
        return rep
    n = p_rev[0].n
    for a in range(1, n - 1):
        lhs, rhs = star_energy(a, p_rev), rho_star(a, p_rev)
        for k in range(len(p_rev) + 1):
            rep.rows.append((vstar(a), k, lhs[k], rhs[k]))
    return rep


def corner_sides(kind: EnergyKind, p: Sequence[BoxState]) -> tuple:
    """``(E_g(p) - E_g(T_inf p), sum_i g(xi^(i) (x) p_i))``."""
    from .energies import energy
    p = tuple(p)
    n = p[0].n
    q, _ = evolve(p)
    lhs = energy(kind, p)[-1] - energy(kind, q)[-1]
    xs = carriers(p)
    rhs = 0
    for xi, b in zip(xs, p):
        _, _, P = apply_r_raw(n, xi.zeta, b.zeta)
        rhs += energy_from_pieces(kind, P, xi.capacity, b.capacity)
    return lhs, rhs
