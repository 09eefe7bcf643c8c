"""Randomized and exhaustive property suites shared by the CLI and the tests.

Every suite returns a :class:`SuiteResult`; failures carry a witness.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from .crystal import BoxState, boxes, star_path, to_x, weight
from .kinds import main_kinds
from .rmatrix import SYMMETRY_OPS, apply_r_raw, symmetry_expected, symmetry_transform


@dataclass
class SuiteResult:
    name: str
    cases: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, witness):
        if len(self.failures) < 20:
            self.failures.append(witness)
        else:
            self.failures[-1] = witness


_BOXES = {}


def box_pool(n, l):
    key = (n, l)
    if key not in _BOXES:
        _BOXES[key] = boxes(n, l)
    return _BOXES[key]


def random_box(rng: random.Random, n: int, l: int) -> BoxState:
    return rng.choice(box_pool(n, l))


def random_path(rng: random.Random, n: int, max_len: int = 8, max_cap: int = 3) -> tuple:
    L = rng.randint(1, max_len)
    return tuple(random_box(rng, n, rng.randint(1, max_cap)) for _ in range(L))


# -- Yang-Baxter -------------------------------------------------------------------------

def _r_on(n, elems, pos):
    """Apply R at positions (pos, pos+1) of a list of (zeta, degree) pairs."""
    (zb, db), (zc, dc) = elems[pos], elems[pos + 1]
    zl, zr, P = apply_r_raw(n, zb, zc)
    H = P.V[0]
    out = list(elems)
    out[pos] = (zl, dc + H)
    out[pos + 1] = (zr, db - H)
    return out


def ybe_holds(a: BoxState, b: BoxState, c: BoxState) -> bool:
    """Both sides of the braid relation agree, degrees included."""
    n = a.n
    start = [(a.zeta, 0), (b.zeta, 0), (c.zeta, 0)]
    lhs = _r_on(n, _r_on(n, _r_on(n, start, 0), 1), 0)
    rhs = _r_on(n, _r_on(n, _r_on(n, start, 1), 0), 1)
    return lhs == rhs


def inverse_holds(b: BoxState, c: BoxState) -> bool:
    n = b.n
    zl, zr, P = apply_r_raw(n, b.zeta, c.zeta)
    zb2, zc2, P2 = apply_r_raw(n, zl, zr)
    return (zb2, zc2) == (b.zeta, c.zeta) and P2.V[0] == P.V[0]


def weight_preserved(b: BoxState, c: BoxState) -> bool:
    n = b.n
    zl, zr, _ = apply_r_raw(n, b.zeta, c.zeta)
    before = [x + y for x, y in zip(weight(b), weight(c))]
    after = [x + y for x, y in zip(weight(BoxState(n, zl)), weight(BoxState(n, zr)))]
    return before == after and sum(zl) == c.capacity and sum(zr) == b.capacity


def run_ybe_exhaustive(n: int, caps) -> SuiteResult:
    res = SuiteResult(f"ybe n={n} caps={tuple(caps)}")
    for a, b, c in itertools.product(*(box_pool(n, l) for l in caps)):
        res.cases += 1
        if not ybe_holds(a, b, c):
            res.fail((a, b, c))
    return res


def run_ybe_random(n: int, cases: int, seed: int, max_cap: int = 4) -> SuiteResult:
    rng = random.Random(seed)
    res = SuiteResult(f"ybe n={n} random")
    for _ in range(cases):
        a, b, c = (random_box(rng, n, rng.randint(1, max_cap)) for _ in range(3))
        res.cases += 1
        if not (ybe_holds(a, b, c) and inverse_holds(a, b) and weight_preserved(a, b)):
            res.fail((a, b, c))
    return res


# -- piece symmetries ---------------------------------------------------------------------------------

def symmetry_pieces(n: int) -> list:
    return [("V", i) for i in range(n)] + [("W", i) for i in range(1, n)]


def run_symmetry(n: int, cases: int, seed: int, max_cap: int = 4) -> SuiteResult:
    rng = random.Random(seed)
    res = SuiteResult(f"symmetry n={n}")
    for _ in range(cases):
        b = random_box(rng, n, rng.randint(1, max_cap))
        c = random_box(rng, n, rng.randint(1, max_cap))
        x, y = to_x(b), to_x(c)
        for piece in symmetry_pieces(n):
            for op in SYMMETRY_OPS:
                res.cases += 1
                if symmetry_transform(piece, op, x, y) != symmetry_expected(piece, op, x, y):
                    res.fail((piece, op, b, c))
    return res


# -- energy suites ---------------------------------------------------------------------------

def run_main(cases: int, seed: int, ranks=(3, 4, 5), max_len: int = 8, max_cap: int = 3,
             roundtrip: bool = True) -> SuiteResult:
    """Energy = counting function on random paths, plus box-by-box reconstruction."""
    from .automaton import check_main, reconstruct_path, rho_table
    rng = random.Random(seed)
    res = SuiteResult("main")
    for _ in range(cases):
        n = rng.choice(ranks)
        p = random_path(rng, n, max_len, max_cap)
        res.cases += 1
        rep = check_main(p)
        if not rep.ok:
            res.fail(("energy", p, rep.failures()[:3]))
            continue
        if roundtrip:
            tab = rho_table(p, main_kinds(n))
            if reconstruct_path([b.capacity for b in p], tab, n) != p:
                res.fail(("reconstruct", p))
    return res


def run_star(cases: int, seed: int, ranks=(3, 4, 5), max_len: int = 8,
             max_cap: int = 3) -> SuiteResult:
    from .automaton import check_star
    rng = random.Random(seed)
    res = SuiteResult("star")
    for _ in range(cases):
        n = rng.choice(ranks)
        p_rev = random_path(rng, n, max_len, max_cap)
        res.cases += 1
        rep = check_star(p_rev)
        if not rep.ok:
            res.fail((p_rev, rep.failures()[:3]))
    return res


def run_oracle(cases=((1, 1, 3), (2, 1, 3), (1, 1, 4))) -> SuiteResult:
    """Closed-form R against the brute-force crystal isomorphism."""
    from .oracle import brute_force_r
    res = SuiteResult("oracle")
    for l, m, n in cases:
        rmap, H = brute_force_r(l, m, n)
        shift = set()
        for (b, c), (cl, bl) in rmap.items():
            res.cases += 1
            zl, zr, P = apply_r_raw(n, b.zeta, c.zeta)
            if (zl, zr) != (cl.zeta, bl.zeta):
                res.fail(("map", l, m, n, b, c))
            shift.add(H[(b, c)] - P.V[0])
        if len(shift) != 1:
            res.fail(("energy shift", l, m, n, sorted(shift)))
    return res


def star_commutes(p_rev) -> bool:
    from .automaton import evolve, star_evolve
    return star_evolve(p_rev)[0] == star_path(evolve(star_path(p_rev))[0])
