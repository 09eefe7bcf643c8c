import itertools
import random

import pytest

from dncrystal.crystal import StateError, vacuum
from dncrystal.kinds import V0S1, v
from dncrystal.rigged import (RiggedConfiguration, StringTriple, c_dk, c_dk_shifted, cartan,
                              charge, check_flow_shift_identity, check_conjecture,
                              conjecture_sides, format_pair, format_rc, gen_poly, linear_flow,
                              parse_pair, parse_rc, regime, tau, tau_table, vacancy)
from golden import PHI0_ROW, TAU_TABLE


def test_cartan_d4():
    C = [[cartan(4, a, b) for b in range(1, 5)] for a in range(1, 5)]
    assert C == [[2, -1, 0, 0], [-1, 2, -1, -1], [0, -1, 2, 0], [0, -1, 0, 2]]
    C5 = [[cartan(5, a, b) for b in range(1, 6)] for a in range(1, 6)]
    assert C5[2][3] == C5[2][4] == -1 and C5[3][4] == 0


def test_vacancy_empty():
    rc = RiggedConfiguration(4, (3, 1, 2))
    assert [vacancy(rc, 1, j) for j in (1, 2, 3)] == [3, 5, 6]
    assert vacancy(rc, 2, 2) == 0 and vacancy(rc, 4, 1) == 0


def test_vacancy_removal(mixed_pair):
    _, rc = mixed_pair
    s = rc.strings[0]
    rest = RiggedConfiguration(rc.n, rc.shape, rc.strings[1:])
    for j in (1, 3, 8):
        assert vacancy(rest, 1, j) - vacancy(rc, 1, j) == 2 * min(j, s.j)
        assert vacancy(rest, 2, j) - vacancy(rc, 2, j) == -min(j, s.j)


def test_example_pair_regime(mixed_pair):
    _, rc = mixed_pair
    # the shipped pair has negative riggings and two negative vacancies
    assert regime(rc) == "negative-vacancy"
    vac = {(s.a, s.j): vacancy(rc, s.a, s.j) for s in rc.strings}
    assert vac[(2, 6)] == -1 and vac[(2, 2)] == -1
    assert all(s.r <= vacancy(rc, s.a, s.j) for s in rc.strings)


def test_regime_labels():
    assert regime(RiggedConfiguration(3, (2, 2), [(1, 1, 0)])) == "highest"
    assert regime(RiggedConfiguration(3, (2, 2), [(1, 1, -1)])) == "extended"


def test_charge_basics(mixed_pair):
    _, rc = mixed_pair
    assert charge([], 4) == 0
    assert all(c_dk([], rc.shape, d, k, 4) == 0 for d in range(5) for k in range(3))
    assert charge(rc.strings, 4) == 14


def test_shift_identity():
    rng = random.Random(0)
    for _ in range(300):
        n = rng.choice((3, 4, 5))
        shape = [rng.randint(1, 3) for _ in range(rng.randint(1, 6))]
        T = [StringTriple(rng.randint(1, n), rng.randint(1, 6), rng.randint(-3, 3))
             for _ in range(rng.randint(0, 5))]
        d, k = rng.randint(0, n), rng.randint(0, len(shape))
        assert c_dk(T, shape, d, k, n) == c_dk_shifted(T, shape, d, k, n)


def test_tau_table_example(mixed_pair):
    _, rc = mixed_pair
    tab = tau_table(rc)
    for d, row in TAU_TABLE.items():
        assert tab[d][1:10] == row


def test_tau_brute_force_subsets(mixed_pair):
    _, rc = mixed_pair
    S = rc.strings
    for d, k in [(0, 3), (2, 1), (4, 9)]:
        brute = -min(c_dk([s for i, s in enumerate(S) if m >> i & 1], rc.shape, d, k, 4)
                     for m in range(1 << len(S)))
        val, T = tau(rc, d, k)
        assert val == brute
        assert -c_dk(T, rc.shape, d, k, 4) == val


def test_tau_empty_and_guard():
    rc = RiggedConfiguration(3, (1, 1))
    assert tau(rc, 0, 2) == (0, ())
    big = RiggedConfiguration(3, (1,), [(1, 1, 0)] * 25)
    with pytest.raises(MemoryError):
        tau(big, 0, 1)


def test_linear_flow():
    rc = RiggedConfiguration(4, (2,) * 10, [(1, 8, -2), (2, 3, 1), (1, 2, 0)])
    f = linear_flow(rc, None)
    assert (1, 8, 6) in f.strings and (2, 3, 1) in f.strings
    assert linear_flow(rc, 1).strings == tuple(sorted(
        [StringTriple(1, 8, -1), StringTriple(2, 3, 1), StringTriple(1, 2, 1)],
        key=lambda s: (s.a, -s.j, s.r)))
    for l, m in [(1, 2), (3, None)]:
        assert linear_flow(linear_flow(rc, l), m) == linear_flow(linear_flow(rc, m), l)


def test_conjecture_on_example(mixed_pair):
    p, rc = mixed_pair
    sides, phi = conjecture_sides(p, rc)
    assert phi[1:10] == PHI0_ROW
    for d, (ta, rh) in sides.items():
        assert ta == rh, d
    rep = check_conjecture(p, rc, replay=False)
    assert rep.ok and not rep.highest


def test_flow_shift_identity(mixed_pair):
    assert check_flow_shift_identity(*mixed_pair)


def test_conjecture_vacuum():
    p = (vacuum(4, 2),) * 4
    rc = RiggedConfiguration(4, (2,) * 4)
    rep = check_conjecture(p, rc, steps=2)
    assert rep.ok and rep.highest and {r[4] for r in rep.rows} == {0}


def test_gen_poly_small():
    assert gen_poly(v(0), (1, 1), (2, 0, 0), 3) == {0: 1}
    assert gen_poly(v(0), (1, 1), (1, 1, 0), 3) == {1: 1}
    assert gen_poly(v(0), (1, 1), (0, 0, 0), 3) == {2: 1}
    assert gen_poly(v(0), (1, 1), (1, 0, 0), 3) == {}


def test_gen_poly_counts_highest_paths():
    from dncrystal.oracle import is_highest
    from dncrystal.crystal import boxes, weight
    lam = (2, 1, 0)
    count = sum(1 for p in itertools.product(boxes(3, 2), boxes(3, 1))
                if is_highest(p) and tuple(map(sum, zip(*(weight(b) for b in p)))) == lam)
    for g in (v(0), V0S1):
        assert sum(gen_poly(g, (2, 1), lam, 3).values()) == count
    with pytest.raises(MemoryError):
        gen_poly(v(0), (3, 3, 3, 3), (0, 0, 0), 3, guard=100)


def test_pair_roundtrip(mixed_pair):
    p, rc = mixed_pair
    p2, rc2 = parse_pair(format_pair(p, rc))
    assert (p2, rc2) == (p, rc)
    assert parse_rc(format_rc(rc)) == rc


def test_parse_errors():
    with pytest.raises(StateError, match="header"):
        parse_rc("1 2 3\n")
    with pytest.raises(StateError, match="line 3"):
        parse_rc("n: 3\nshape: 1\n1 2\n")
    with pytest.raises(StateError, match="blank line"):
        parse_pair("1 | 1\nn: 3\n")
    with pytest.raises(StateError, match="capacities"):
        parse_pair("1 | 1\n\nn: 3\nshape: 1 2\n")
