import random

import pytest

from hyperq.errors import SingularValue
from hyperq.jets import (WirtingerJet, fd_partials, jet_conj, jet_mul,
                         jet_recip, seed_const, seed_z1, seed_z2)

from conftest import random_complex, regular_sample


def jet_tuple(j):
    return (j.d_z1, j.d_z1bar, j.d_z2, j.d_z2bar)


def test_seeds():
    j = seed_z1((2 + 1j, 0j))
    assert j.value == 2 + 1j and jet_tuple(j) == (1, 0, 0, 0)
    j = seed_z2((0j, 1j))
    assert j.value == 1j and jet_tuple(j) == (0, 0, 1, 0)
    j = seed_const(5)
    assert j.value == 5 and jet_tuple(j) == (0, 0, 0, 0)


def test_abs_square_jet():
    # z1 * conj(z1) at (2, 0): value 4, d_z1 = 2, d_z1bar = 2
    p = (2 + 0j, 0j)
    j = jet_mul(seed_z1(p), jet_conj(seed_z1(p)))
    assert j.value == 4
    assert jet_tuple(j) == (2, 2, 0, 0)
    fd = fd_partials(lambda a, b: a * a.conjugate(), p)
    assert abs(fd[0] - 2) < 1e-6 and abs(fd[1] - 2) < 1e-6


def test_conj_of_seed_is_barred_direction():
    j = jet_conj(seed_z1((3 - 2j, 1j)))
    assert jet_tuple(j) == (0, 1, 0, 0)
    assert j.value == 3 + 2j


def test_recip_jet():
    p = (2 + 0j, 1j)
    j = jet_recip(seed_z1(p))
    assert j.value == 0.5
    assert abs(j.d_z1 - (-0.25)) < 1e-15
    fd = fd_partials(lambda a, b: 1 / a, p)
    assert abs(fd[0] - j.d_z1) < 1e-9
    with pytest.raises(SingularValue):
        jet_recip(seed_const(0))


def test_conj_involution_exact():
    j = WirtingerJet(1 + 2j, 0.5 - 1j, 2j, -3 + 0.5j, 0.25 + 0.25j)
    assert jet_conj(jet_conj(j)) == j


def test_fd_oracle_on_basic_functions():
    d = fd_partials(lambda a, b: a, (0.4 - 0.2j, 1 + 1j))
    assert abs(d[0] - 1) < 1e-9 and max(abs(d[1]), abs(d[2]), abs(d[3])) < 1e-9
    d = fd_partials(lambda a, b: b.conjugate(), (0j, 1 + 1j))
    assert abs(d[3] - 1) < 1e-9 and max(abs(d[0]), abs(d[1]), abs(d[2])) < 1e-9
    # z1^2 conj(z2) at (1, i): d_z1 = 2 z1 conj(z2) = -2i
    d = fd_partials(lambda a, b: a * a * b.conjugate(), (1 + 0j, 1j))
    assert abs(d[0] - (-2j)) < 1e-6


def test_holomorphic_expressions_have_exact_zero_barred_partials(rng):
    for _ in range(50):
        expr, point = regular_sample(rng, depth=4, allow_recip=False,
                                     allow_conj=False)
        j = expr.evaluate(seed_z1(point), seed_z2(point))
        assert j.d_z1bar == 0 and j.d_z2bar == 0


def test_jets_match_finite_differences(rng):
    for _ in range(60):
        expr, point = regular_sample(rng, depth=6)
        j = expr.evaluate(seed_z1(point), seed_z2(point))
        try:
            fd = fd_partials(lambda a, b: expr.evaluate(a, b), point)
        except SingularValue:
            continue
        for got, ref in zip(fd, jet_tuple(j)):
            assert abs(got - ref) <= 1e-6 * (1 + abs(ref))
