import pytest

from dncrystal.crystal import boxes, parse_box, parse_path, vacuum
from dncrystal.oracle import (box_e, box_eps_phi, box_f, brute_force_r, e_op, eps_phi, f_op,
                              is_highest, phi0, word_e, word_eps_phi, word_f)
from dncrystal.rmatrix import apply_r
from dncrystal.suites import run_oracle


def test_vacuum_word_signature():
    for n in (3, 4):
        assert word_eps_phi(n, 1, [1] * 5) == (0, 5)
        for i in range(2, n + 1):
            assert word_eps_phi(n, i, [1] * 5) == (0, 0)


@pytest.mark.parametrize("n", [3, 4])
def test_string_property_on_boxes(n):
    for l in (1, 2, 3):
        for b in boxes(n, l):
            for i in range(n + 1):
                eps, phi = box_eps_phi(i, b)
                e = box_e(i, b)
                assert (e is None) == (eps == 0)
                if e is not None:
                    assert box_eps_phi(i, e) == (eps - 1, phi + 1)
                    assert box_f(i, e) == b
                f = box_f(i, b)
                if f is not None:
                    assert box_e(i, f) == b


def test_word_operators_are_inverse():
    w = [2, -3, 1, 3, -2]
    for i in range(4):
        e = word_e(3, i, w)
        if e is not None:
            assert word_f(3, i, e) == w


def test_highest():
    assert is_highest((vacuum(4, 3), vacuum(4, 1), vacuum(4, 2)))
    assert not is_highest((parse_box("2", 3),))
    assert is_highest(parse_path("1 | 2", 3))
    assert not is_highest(parse_path("2 | 1", 3))


def test_highest_paths_closed_under_evolution():
    from dncrystal.automaton import evolve
    from dncrystal.suites import box_pool
    import itertools
    pool = box_pool(3, 1)
    for p in itertools.product(pool, repeat=3):
        p = p + (vacuum(3, 1),) * 3
        if is_highest(p):
            for l in (1, 2, None):
                assert is_highest(evolve(p, l)[0])


def test_tensor_operators_commute_with_r():
    for b in boxes(3, 2):
        for c in boxes(3, 1):
            r = apply_r(b, c)
            for i in range(4):
                for op in (e_op, f_op):
                    src = op(i, (b, c))
                    img = op(i, (r.left, r.right))
                    if src is None:
                        assert img is None
                    else:
                        rr = apply_r(*src)
                        assert (rr.left, rr.right) == img


def test_phi0_row(rows_mixed):
    p = rows_mixed[0]
    assert [phi0(p[:k]) for k in range(1, 10)] == [1, 0, 1, 0, 0, 0, 0, 0, 0]


def test_brute_force_matches_closed_form():
    res = run_oracle()
    assert res.ok, res.failures
    assert res.cases == 36 + 20 * 6 + 64


def test_brute_force_energy_shift():
    rmap, H = brute_force_r(2, 2, 3)
    shifts = {H[k] - apply_r(*k).H for k in rmap}
    assert shifts == {-4}


def test_eps_phi_of_path():
    p = parse_path("1 1 | 2", 3)
    assert eps_phi(1, p) == (0, 1)
