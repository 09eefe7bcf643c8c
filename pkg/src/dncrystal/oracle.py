"""Crystal operators on B_1, B_l and their tensor products, and a brute-force R.

Conventions
-----------
Arrows of B_1 (``f_i``, letters as signed integers)::

    1 <= i <= n-1 :  i -> i+1,    -(i+1) -> -i
    i = n         :  n-1 -> -n,   n -> -(n-1)
    i = 0         :  -1 -> 2,     -2 -> 1

Tensor products follow Kashiwara's rule: in ``b (x) b'`` the operator
``f_i`` acts on ``b`` iff ``phi_i(b) > eps_i(b')`` and ``e_i`` acts on ``b``
iff ``phi_i(b) >= eps_i(b')``.  Equivalently, write ``-^eps +^phi`` for each
factor, cancel ``+ -`` pairs, then ``f`` hits the leftmost free ``+`` and ``e``
the rightmost free ``-``.

Under this rule the classical component ``B(l Lambda_1)`` of ``B_1^{(x) l}``
consists of the weakly *decreasing* words, so a box is embedded as its
letters read from largest to smallest.  The 0-arrows of ``B_l`` are not
inherited from that embedding; they are ``f_0 = sigma_1 f_1 sigma_1`` with
``sigma_1`` swapping the counts of 1 and -1.
"""
from __future__ import annotations

from collections import deque
from functools import lru_cache
from typing import Sequence

from .crystal import BoxState, boxes, from_letters, index_letter, vacuum

__all__ = [
    "letter_f", "letter_e", "word_eps_phi", "word_e", "word_f", "box_word",
    "box_eps_phi", "box_e", "box_f", "eps_phi", "e_op", "f_op", "is_highest",
    "phi0", "brute_force_r", "OracleError",
]


class OracleError(RuntimeError):
    """The brute-force crystal construction hit an inconsistency."""


def _arrows(n, i):
    if 1 <= i <= n - 1:
        return {i: i + 1, -(i + 1): -i}
    if i == n:
        return {n - 1: -n, n: -(n - 1)}
    if i == 0:
        return {-1: 2, -2: 1}
    raise ValueError(f"operator index {i} out of range 0..{n}")


@lru_cache(maxsize=None)
def _arrow_tables(n, i):
    f = _arrows(n, i)
    return f, {v: k for k, v in f.items()}


def letter_f(n: int, i: int, a: int):
    return _arrow_tables(n, i)[0].get(a)


def letter_e(n: int, i: int, a: int):
    return _arrow_tables(n, i)[1].get(a)


def _reduce(signs):
    """``signs`` is a list of ``(pos, eps, phi)``; returns (free minus positions, free plus positions)."""
    minus, plus = [], []
    for pos, eps, phi in signs:
        for _ in range(eps):
            if plus:
                plus.pop()
            else:
                minus.append(pos)
        plus.extend([pos] * phi)
    return minus, plus


def _word_signs(n, i, word):
    f, e = _arrow_tables(n, i)
    return [(k, int(a in e), int(a in f)) for k, a in enumerate(word)]


def word_eps_phi(n: int, i: int, word: Sequence[int]) -> tuple:
    minus, plus = _reduce(_word_signs(n, i, word))
    return len(minus), len(plus)


def word_e(n: int, i: int, word: Sequence[int]):
    minus, _ = _reduce(_word_signs(n, i, word))
    if not minus:
        return None
    out = list(word)
    out[minus[-1]] = letter_e(n, i, out[minus[-1]])
    return out


def word_f(n: int, i: int, word: Sequence[int]):
    _, plus = _reduce(_word_signs(n, i, word))
    if not plus:
        return None
    out = list(word)
    out[plus[0]] = letter_f(n, i, out[plus[0]])
    return out


def box_word(b: BoxState) -> list:
    """Embedding of a box into B_1^{(x) l}: letters in decreasing order."""
    return b.letters()[::-1]


def _swap1(z):
    return (z[-1],) + z[1:-1] + (z[0],)


@lru_cache(maxsize=1 << 16)
def _box_data(n, i, z):
    """(eps, phi, e(z) or None, f(z) or None) on a single box."""
    if i == 0:
        eps, phi, e1, f1 = _box_data(n, 1, _swap1(z))
        return (eps, phi, None if e1 is None else _swap1(e1),
                None if f1 is None else _swap1(f1))
    word = []
    for idx in range(2 * n - 1, -1, -1):
        word += [index_letter(n, idx)] * z[idx]
    eps, phi = word_eps_phi(n, i, word)
    we, wf = word_e(n, i, word), word_f(n, i, word)
    ze = None if we is None else from_letters(n, we).zeta
    zf = None if wf is None else from_letters(n, wf).zeta
    return eps, phi, ze, zf


def box_eps_phi(i: int, b: BoxState) -> tuple:
    return _box_data(b.n, i, b.zeta)[:2]


def box_e(i: int, b: BoxState):
    z = _box_data(b.n, i, b.zeta)[2]
    return None if z is None else BoxState(b.n, z)


def box_f(i: int, b: BoxState):
    z = _box_data(b.n, i, b.zeta)[3]
    return None if z is None else BoxState(b.n, z)


def _path_reduce(i, p):
    signs = []
    for k, b in enumerate(p):
        eps, phi = _box_data(b.n, i, b.zeta)[:2]
        signs.append((k, eps, phi))
    return _reduce(signs)


def eps_phi(i: int, p: Sequence[BoxState]) -> tuple:
    """``(eps_i, phi_i)`` of a tensor product of boxes."""
    minus, plus = _path_reduce(i, p)
    return len(minus), len(plus)


def _act(i, p, which):
    minus, plus = _path_reduce(i, p)
    if which == "e":
        if not minus:
            return None, None
        k = minus[-1]
    else:
        if not plus:
            return None, None
        k = plus[0]
    b = p[k]
    z = _box_data(b.n, i, b.zeta)[2 if which == "e" else 3]
    out = list(p)
    out[k] = BoxState(b.n, z)
    return tuple(out), k


def e_op(i: int, p: Sequence[BoxState]):
    """``e_i`` on a tensor product of boxes; ``None`` stands for 0."""
    return _act(i, tuple(p), "e")[0]


def f_op(i: int, p: Sequence[BoxState]):
    return _act(i, tuple(p), "f")[0]


def is_highest(p: Sequence[BoxState]) -> bool:
    """True iff ``e_1 .. e_n`` all annihilate ``p``."""
    p = tuple(p)
    if not p:
        return True
    n = p[0].n
    return all(not _path_reduce(i, p)[0] for i in range(1, n + 1))


def phi0(p: Sequence[BoxState]) -> int:
    return eps_phi(0, p)[1]


def brute_force_r(l: int, m: int, n: int):
    """The crystal isomorphism B_l (x) B_m -> B_m (x) B_l and its local energy.

    Built by breadth-first search from ``u_l (x) u_m -> u_m (x) u_l`` along
    every arrow ``e_i, f_i`` (``0 <= i <= n``).  The energy follows the
    defining rule: an ``e_0`` step adds 1 when it acts on the left factor on
    both sides, subtracts 1 when it acts on the right factor on both sides.
    Returns ``(rmap, H)`` keyed by ``(b, c)`` pairs of :class:`BoxState`;
    ``H`` is normalized to 0 at the vacuum pair.
    """
    start = (vacuum(n, l), vacuum(n, m))
    rmap = {start: (vacuum(n, m), vacuum(n, l))}
    H = {start: 0}
    queue = deque([start])
    while queue:
        src = queue.popleft()
        img = rmap[src]
        for i in range(n + 1):
            for which in ("e", "f"):
                t, k = _act(i, src, which)
                if t is None:
                    if _act(i, img, which)[0] is not None:
                        raise OracleError(f"{which}_{i} kills {src} but not its image {img}")
                    continue
                ti, ki = _act(i, img, which)
                if ti is None:
                    raise OracleError(f"{which}_{i} kills image {img} but not {src}")
                if i == 0:
                    # orient the step as e_0: lower -> upper
                    if which == "e":
                        lower_k, lower_ki = k, ki
                    else:
                        _, lower_k = _act(0, t, "e")
                        _, lower_ki = _act(0, ti, "e")
                    d = 1 if (lower_k, lower_ki) == (0, 0) else -1 if (lower_k, lower_ki) == (1, 1) else 0
                    h = H[src] + (d if which == "e" else -d)
                else:
                    h = H[src]
                if t in rmap:
                    if rmap[t] != ti or H[t] != h:
                        raise OracleError(f"inconsistent image at {t}")
                    continue
                rmap[t] = ti
                H[t] = h
                queue.append(t)
    expected = len(boxes(n, l)) * len(boxes(n, m))
    if len(rmap) != expected or len(set(rmap.values())) != expected:
        raise OracleError(f"search reached {len(rmap)} of {expected} elements "
                          f"({len(set(rmap.values()))} distinct images)")
    return rmap, H
