"""Rigged configurations, vacancy numbers, charges and ultradiscrete tau functions.

A rigged configuration is a multiset of strings ``(color, length, rigging)``
attached to a path shape ``(l_1, ..., l_L)``.  The bijection with highest
paths is not implemented; pairs are read from pair files.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

from .crystal import StateError, boxes, format_path, parse_path, weight
from .kinds import EnergyKind, V0S1, v, vstar, w

TAU_GUARD = 24


class StringTriple(NamedTuple):
    a: int      # color
    j: int      # length
    r: int      # rigging


def _sort_key(s):
    return (s.a, -s.j, s.r)


@dataclass(frozen=True)
class RiggedConfiguration:
    n: int
    shape: tuple
    strings: tuple = ()

    def __post_init__(self):
        if self.n < 3:
            raise ValueError(f"rank must be >= 3, got n={self.n}")
        ss = []
        for s in self.strings:
            s = StringTriple(*s)
            if not 1 <= s.a <= self.n:
                raise ValueError(f"string color {s.a} out of range 1..{self.n}")
            if s.j < 1:
                raise ValueError(f"string length must be >= 1: {s}")
            ss.append(s)
        object.__setattr__(self, "shape", tuple(self.shape))
        object.__setattr__(self, "strings", tuple(sorted(ss, key=_sort_key)))

    def __len__(self):
        return len(self.strings)


def cartan(n: int, a: int, b: int) -> int:
    """D_n Cartan matrix; node ``n-2`` is joined to both ``n-1`` and ``n``."""
    if a == b:
        return 2
    lo, hi = min(a, b), max(a, b)
    if hi == lo + 1 and hi <= n - 1:
        return -1
    if lo == n - 2 and hi == n:
        return -1
    return 0


def vacancy(rc: RiggedConfiguration, a: int, j: int) -> int:
    """``p^(a)_j = delta_{a1} sum_k min(j, l_k) - sum_t C_{a,cl(t)} min(j, lg(t))``."""
    n = rc.n
    out = sum(min(j, lk) for lk in rc.shape) if a == 1 else 0
    for t in rc.strings:
        out -= cartan(n, a, t.a) * min(j, t.j)
    return out


def regime(rc: RiggedConfiguration) -> str:
    """``"highest"`` when ``0 <= r <= p`` everywhere, ``"extended"`` when only
    ``r <= p`` holds (some ``r < 0``), ``"negative-vacancy"`` when some
    ``p < 0`` or ``r > p``."""
    vac = [vacancy(rc, s.a, s.j) for s in rc.strings]
    if any(p < 0 or s.r > p for s, p in zip(rc.strings, vac)):
        return "negative-vacancy"
    if any(s.r < 0 for s in rc.strings):
        return "extended"
    return "highest"


def charge(T: Sequence[StringTriple], n: int) -> int:
    """``c(T) = 1/2 sum_{s,t} C min(lg s, lg t) + sum_s rg(s)``."""
    T = list(T)
    tot = 0
    for i, s in enumerate(T):
        tot += s.j + s.r          # diagonal term: C = 2, halved
        for t in T[i + 1:]:
            tot += cartan(n, s.a, t.a) * min(s.j, t.j)
    return tot


def c_dk(T: Sequence[StringTriple], shape: Sequence[int], d: int, k: int, n: int) -> int:
    """``c^(d)_k(T)`` straight from its definition."""
    T = list(T)
    out = charge(T, n)
    out -= sum(min(shape[i], s.j) for i in range(k) for s in T if s.a == 1)
    out += sum(s.j for s in T if s.a == d)
    return out


def c_dk_shifted(T: Sequence[StringTriple], shape: Sequence[int], d: int, k: int, n: int) -> int:
    """``c^(d)_k`` as ``c^(0)_k`` with riggings of color ``d`` raised by their lengths."""
    T2 = [StringTriple(s.a, s.j, s.r + (s.j if s.a == d else 0)) for s in T]
    return c_dk(T2, shape, 0, k, n)


def _subset_values(rc, lin):
    """``c(T) + sum_{s in T} lin[s]`` for every subset mask of ``rc.strings``."""
    S = rc.strings
    N = len(S)
    n = rc.n
    base = [s.j + s.r + lin[i] for i, s in enumerate(S)]
    cross = [[cartan(n, s.a, t.a) * min(s.j, t.j) for t in S] for s in S]
    vals = [0] * (1 << N)
    for mask in range(1, 1 << N):
        i = (mask & -mask).bit_length() - 1
        rest = mask & (mask - 1)
        acc = vals[rest] + base[i]
        m = rest
        row = cross[i]
        while m:
            q = (m & -m).bit_length() - 1
            acc += row[q]
            m &= m - 1
        vals[mask] = acc
    return vals


def _lin(rc, d, k):
    out = []
    for s in rc.strings:
        x = 0
        if s.a == 1:
            x -= sum(min(lk, s.j) for lk in rc.shape[:k])
        if s.a == d:
            x += s.j
        out.append(x)
    return out


def _guard(rc):
    if len(rc.strings) > TAU_GUARD:
        raise MemoryError(f"{len(rc.strings)} strings exceed the subset guard of {TAU_GUARD}")


def tau(rc: RiggedConfiguration, d: int, k: int):
    """``tau^(d)_k(S) = -min_T c^(d)_k(T)``; returns ``(value, minimizing subset)``."""
    _guard(rc)
    if not 0 <= d <= rc.n:
        raise ValueError(f"d must lie in 0..{rc.n}")
    if not 0 <= k <= len(rc.shape):
        raise ValueError(f"k must lie in 0..{len(rc.shape)}")
    vals = _subset_values(rc, _lin(rc, d, k))
    best = min(range(len(vals)), key=vals.__getitem__)
    T = tuple(s for i, s in enumerate(rc.strings) if best >> i & 1)
    return -vals[best], T


def tau_table(rc: RiggedConfiguration, ds: Sequence[int] | None = None) -> dict:
    """``{d: [tau^(d)_0, ..., tau^(d)_L]}``."""
    _guard(rc)
    ds = range(rc.n + 1) if ds is None else ds
    return {d: [-min(_subset_values(rc, _lin(rc, d, k))) for k in range(len(rc.shape) + 1)]
            for d in ds}


def linear_flow(rc: RiggedConfiguration, l: int | None) -> RiggedConfiguration:
    """Shift each color-1 rigging by ``min(j, l)``; ``l=None`` means infinity."""
    out = []
    for s in rc.strings:
        step = 0 if s.a != 1 else (s.j if l is None else min(s.j, l))
        out.append(StringTriple(s.a, s.j, s.r + step))
    return RiggedConfiguration(rc.n, rc.shape, tuple(out))


# -- conjecture harness ---------------------------------------------------------

def conjecture_sides(p, rc: RiggedConfiguration) -> dict:
    """``{d: (tau row, energy-side row)}`` for the five claimed equalities."""
    from .energies import energy_report
    from .oracle import phi0
    n = rc.n
    p = tuple(p)
    if tuple(b.capacity for b in p) != rc.shape:
        raise StateError(f"path shape {tuple(b.capacity for b in p)} != rc shape {rc.shape}")
    kinds = [v(0), V0S1, vstar(n - 1), v(n - 1), w(2)]
    en = energy_report(p, kinds)
    ph = [0] + [phi0(p[:k]) for k in range(1, len(p) + 1)]
    taus = tau_table(rc, [0, 1, 2, n - 1, n])
    rhs = {
        0: en[v(0)],
        1: en[V0S1],
        n - 1: en[vstar(n - 1)],
        n: en[v(n - 1)],
        2: [a - b + c for a, b, c in zip(en[w(2)], en[v(0)], ph)],
    }
    return {d: (taus[d], rhs[d]) for d in (0, 1, 2, n - 1, n)}, ph


@dataclass
class ConjectureReport:
    highest: bool
    regime: str
    rows: list = field(default_factory=list)   # (l, t, d, k, tau, rhs)
    notes: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r[4] == r[5] for r in self.rows)

    def failures(self) -> list:
        return [r for r in self.rows if r[4] != r[5]]


def _pad(p, extra, cap):
    from .crystal import vacuum
    n = p[0].n
    return tuple(p) + tuple(vacuum(n, cap) for _ in range(extra))


def replay_padding(p, ls=(1, 2, None), steps: int = 5, cap: int | None = None, limit: int = 64) -> int:
    """Fewest trailing empty boxes for which every replayed step emits an empty carrier."""
    from .automaton import evolve
    from .crystal import vacuum
    p = tuple(p)
    n = p[0].n
    cap = cap or p[-1].capacity
    for extra in range(limit + 1):
        q0 = _pad(p, extra, cap)
        good = True
        for l in ls:
            q = q0
            for _ in range(steps):
                big = q + (vacuum(n, cap),) * (len(q) + 1)
                nq, xi = evolve(q, l)
                # T_l of q must agree with T_l of q followed by more empty boxes
                if evolve(big, l)[0][:len(q)] != nq or any(
                        b.zeta[0] != b.capacity for b in evolve(big, l)[0][len(q):]):
                    good = False
                    break
                q = nq
            if not good:
                break
        if good:
            return extra
    raise StateError(f"no padding up to {limit} boxes keeps the carrier empty")


def check_conjecture(p, rc: RiggedConfiguration, ls=(1, 2, None), steps: int = 5,
                     replay: bool = True) -> ConjectureReport:
    """Evaluate the five tau/energy equalities on ``(p, rc)`` and on its replays.

    The replay applies ``T_l`` to the path and the linear flow to the
    configuration ``t = 1..steps`` times.  The path is first extended by
    empty boxes (with the shape extended alike) until no particle leaves
    through the right end during the replay.
    """
    from .oracle import is_highest
    from .crystal import vacuum
    from .automaton import evolve
    p = tuple(p)
    rep = ConjectureReport(is_highest(p), regime(rc))
    if not rep.highest:
        rep.notes.append("path is not highest; the equalities are checked in the extended regime")
    sides, _ = conjecture_sides(p, rc)
    for d, (ta, rh) in sides.items():
        for k in range(len(p) + 1):
            rep.rows.append(("-", 0, d, k, ta[k], rh[k]))
    if not replay or not p:
        return rep
    extra = replay_padding(p, ls, steps)
    if extra:
        rep.notes.append(f"padded with {extra} empty boxes for the replay")
    cap = p[-1].capacity
    p0 = _pad(p, extra, cap)
    rc0 = RiggedConfiguration(rc.n, rc.shape + (cap,) * extra, rc.strings)
    for l in ls:
        q, s = p0, rc0
        for t in range(1, steps + 1):
            q, _ = evolve(q, l)
            s = linear_flow(s, l)
            sides, _ = conjecture_sides(q, s)
            lab = "inf" if l is None else str(l)
            for d, (ta, rh) in sides.items():
                for k in range(len(q) + 1):
                    rep.rows.append((lab, t, d, k, ta[k], rh[k]))
    return rep


def check_flow_shift_identity(p, rc: RiggedConfiguration) -> bool:
    """The identities that make the d=0 and d=1 equalities equivalent.

    ``tau^(1)_k(S) = tau^(0)_k(flow_inf S)`` and
    ``E_{v0^s1}(p_[k]) = E_{v0}(T_inf(p)_[k])`` for every ``k``.
    """
    from .automaton import evolve
    from .energies import energy
    t1 = tau_table(rc, [1])[1]
    t0 = tau_table(linear_flow(rc, None), [0])[0]
    q, _ = evolve(p)
    e1 = energy(V0S1, p)
    e0 = energy(v(0), q)
    return t1 == t0 and e1 == e0


# -- generating polynomial ---------------------------------------------------------

def gen_poly(kind: EnergyKind, shape: Sequence[int], lam: Sequence[int], n: int,
             guard: int = 10 ** 6) -> dict:
    """``X_g(lambda) = sum q^{E_g(p)}`` over highest paths of the given weight.

    Returns ``{exponent: coefficient}``.
    """
    from .energies import energy
    from .oracle import is_highest
    kind.check_rank(n)
    per = [boxes(n, l) for l in shape]
    size = 1
    for b in per:
        size *= len(b)
    if size > guard:
        raise MemoryError(f"{size} paths exceed the enumeration guard {guard}")
    lam = tuple(lam)
    out = {}
    for p in itertools.product(*per):
        wt = tuple(map(sum, zip(*(weight(b) for b in p))))
        if wt != lam or not is_highest(p):
            continue
        e = energy(kind, p)[-1]
        out[e] = out.get(e, 0) + 1
    return dict(sorted(out.items()))


# -- text formats ---------------------------------------------------------------------

def format_rc(rc: RiggedConfiguration) -> str:
    lines = [f"n: {rc.n}", "shape: " + " ".join(map(str, rc.shape))]
    lines += [f"{s.a} {s.j} {s.r}" for s in rc.strings]
    return "\n".join(lines) + "\n"


def parse_rc(text: str) -> RiggedConfiguration:
    n = shape = None
    strings = []
    for num, line in enumerate(text.splitlines(), start=1):
        t = line.strip()
        if not t or t.startswith("#"):
            continue
        if t.startswith("n:"):
            n = int(t[2:])
        elif t.startswith("shape:"):
            shape = tuple(int(x) for x in t[6:].split())
        else:
            parts = t.split()
            if len(parts) != 3:
                raise StateError(f"line {num}: expected 'a j r', got {t!r}")
            try:
                strings.append(StringTriple(*map(int, parts)))
            except ValueError:
                raise StateError(f"line {num}: non-integer entry in {t!r}") from None
    if n is None or shape is None:
        raise StateError("rigged configuration needs 'n:' and 'shape:' header lines")
    return RiggedConfiguration(n, shape, tuple(strings))


def parse_pair(text: str):
    """A path line, a blank line, then a rigged configuration block."""
    head, sep, rest = text.strip("\n").partition("\n\n")
    if not sep:
        raise StateError("pair file needs a blank line between the path and the configuration")
    rc = parse_rc(rest)
    p = parse_path(head, rc.n)
    if tuple(b.capacity for b in p) != rc.shape:
        raise StateError("path capacities disagree with the shape header")
    return p, rc


def format_pair(p, rc: RiggedConfiguration) -> str:
    return format_path(p) + "\n\n" + format_rc(rc)
