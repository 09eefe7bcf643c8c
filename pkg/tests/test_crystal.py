import itertools

import pytest

from dncrystal.crystal import (BoxState, StateError, XCoords, a_count, a_star_count, boxes,
                               format_box, format_path, from_x, gamma, gamma_star, parse_box,
                               parse_path, sigma1_x, sigman_x, star, star_vacuum, star_x,
                               to_x, vacuum)
from dncrystal.kinds import EnergyKind, V0S1, all_kinds, v, vstar, w, wmv


def test_to_x_worked_element():
    b = BoxState(4, (3, 0, 1, 0, 2, 0, 1, 0))
    assert to_x(b).x == (3, 0, 3, -2, 2, 1, 0)
    assert from_x(to_x(b)) == b


def test_vacuum_coordinates():
    assert to_x(vacuum(4, 5)).x == (5, 0, 0, 0, 0, 0, 0)
    assert vacuum(3, 3).zeta == (3, 0, 0, 0, 0, 0)
    assert star_vacuum(3, 2).zeta == (0, 0, 0, 0, 0, 2)
    assert vacuum(3, 0).capacity == 0


@pytest.mark.parametrize("n,l", [(3, 0), (3, 1), (3, 2), (3, 3), (4, 1), (4, 2), (4, 3)])
def test_roundtrip_exhaustive(n, l):
    for b in boxes(n, l):
        x = to_x(b)
        assert x.level == l
        assert from_x(x) == b


def test_box_counts():
    for n in (3, 4):
        for l in (1, 2, 3):
            brute = sum(1 for z in itertools.product(range(l + 1), repeat=2 * n)
                        if sum(z) == l and not (z[n - 1] and z[n]))
            assert len(boxes(n, l)) == brute


@pytest.mark.parametrize("n", [3, 4])
def test_involutions_commute(n):
    xs = [to_x(b) for l in (1, 2, 3) for b in boxes(n, l)]
    ops = (sigma1_x, sigman_x, star_x)
    for x in xs:
        for f in ops:
            assert f(f(x)) == x
            assert f(x).level == x.level
        for f, g in itertools.combinations(ops, 2):
            assert f(g(x)) == g(f(x))


def test_star_zeta_example():
    assert star(BoxState(4, (1, 1, 0, 1, 0, 1, 1, 1))).zeta == (1, 1, 1, 1, 0, 0, 1, 1)


def test_a_counts():
    b = BoxState(4, (3, 0, 1, 0, 2, 0, 1, 0))
    assert a_count(b) == 4
    assert a_count(vacuum(4, 6)) == 0
    assert a_star_count(star_vacuum(4, 3)) == 0
    for x in boxes(3, 2):
        assert a_star_count(x) == a_count(star(x))


def test_gamma_values():
    z = BoxState(4, (1, 1, 0, 1, 0, 1, 1, 1))
    assert gamma(v(0), z) == 6
    assert gamma(wmv(1), z) == 1
    assert gamma(V0S1, z) == 0


@pytest.mark.parametrize("n", [3, 4, 5])
def test_gamma_relations(n):
    for l in (1, 2):
        for b in boxes(n, l):
            assert gamma(v(0), b) == a_count(b)
            for a in range(1, n - 1):
                assert gamma(w(a), b) == gamma(wmv(a), b) + gamma(v(a), b)
                assert gamma_star(a, b) == gamma(v(a), star(b))
            for k in all_kinds(n):
                if k in (w(n - 1),) or (k.name == "vstar" and k.a < n - 1):
                    continue
                assert gamma(k, b) >= 0


def test_gamma_rejects_unsupported():
    with pytest.raises(StateError):
        gamma(vstar(1), vacuum(4, 2))
    with pytest.raises(StateError):
        gamma(w(3), vacuum(4, 2))


def test_state_validation():
    with pytest.raises(StateError, match="cannot share"):
        BoxState(3, (0, 0, 1, 1, 0, 0))
    with pytest.raises(StateError, match="non-negative"):
        BoxState(3, (1, -1, 0, 0, 0, 0))
    with pytest.raises(StateError, match="2n"):
        BoxState(3, (1, 0))
    with pytest.raises(StateError):
        XCoords(3, (0, 0, -1, 0, 0))


def test_text_format():
    p = parse_path("1 2 4 -3 -2 -1 | 2 3 4", 4)
    assert [b.capacity for b in p] == [6, 3]
    assert format_path(p) == "1 2 4 -3 -2 -1 | 2 3 4"
    b = parse_box("(3,0,1,0,2,0,1,0)", 4)
    assert format_box(b) == "1 1 1 3 -4 -4 -2"
    assert format_box(b, zeta=True) == "(3,0,1,0,2,0,1,0)"
    assert parse_box(format_box(b, zeta=True), 4) == b
    with pytest.raises(StateError, match="token 2"):
        parse_box("1 x", 4)
    with pytest.raises(StateError, match="box 2"):
        parse_path("1 | 7", 4)


def test_energy_kind_names():
    for n in (3, 4, 5):
        for k in all_kinds(n):
            assert EnergyKind.parse(str(k)) == k
    with pytest.raises(ValueError):
        EnergyKind.parse("w2-v3")
    with pytest.raises(ValueError):
        wmv(3).check_rank(4)
