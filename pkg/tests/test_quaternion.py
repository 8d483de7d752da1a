import random

from hypothesis import given, strategies as st

from hyperq.errors import SingularValue
from hyperq.quaternion import (I, J, K, ONE, Quaternion, ZERO, from_real4,
                               hamilton_mul_real4, norm_sq, q_conj,
                               q_inverse, q_mul, to_real4)

from conftest import random_quaternion

import pytest

finite = st.floats(min_value=-10, max_value=10, allow_nan=False)
quaternions = st.builds(
    lambda a, b, c, d: Quaternion(complex(a, b), complex(c, d)),
    finite, finite, finite, finite)


def close(a: Quaternion, b: Quaternion, tol=1e-12):
    return (a - b).abs() <= tol


def test_identity_element():
    q = Quaternion(2 - 1j, 0.5 + 3j)
    assert q_mul(ONE, q) == q
    assert q_mul(q, ONE) == q


def test_basis_products_match_hamilton_table():
    assert q_mul(I, J) == K            # i*j = k
    assert q_mul(J, I) == -K
    assert q_mul(J, J) == -ONE
    assert q_mul(K, K) == -ONE
    # (1+j)(1-j) = 2
    assert q_mul(Quaternion(1 + 0j, 1 + 0j), Quaternion(1 + 0j, -1 + 0j)) \
        == Quaternion(2 + 0j, 0j)


def test_conj_componentwise_and_fixed_point():
    assert q_conj(ONE) == ONE
    assert q_conj(Quaternion(1j, 1 + 1j)) == Quaternion(-1j, -1 - 1j)


@given(quaternions, quaternions)
def test_conj_antiautomorphism(a, b):
    lhs = q_conj(q_mul(a, b))
    rhs = q_mul(q_conj(b), q_conj(a))
    assert close(lhs, rhs, 1e-10)


def test_norm_sq_values():
    assert norm_sq(ZERO) == 0
    assert norm_sq(Quaternion(1 + 0j, 1 + 0j)) == 2
    assert norm_sq(Quaternion(3 + 4j, 0j)) == 25


@given(quaternions, quaternions)
def test_norm_sq_multiplicative(a, b):
    lhs = norm_sq(q_mul(a, b))
    rhs = norm_sq(a) * norm_sq(b)
    assert abs(lhs - rhs) <= 1e-10 * (1 + abs(rhs))


@given(quaternions)
def test_q_times_conj_is_norm_sq(q):
    prod = q_mul(q, q_conj(q))
    assert abs(prod.z1 - norm_sq(q)) <= 1e-12 * (1 + norm_sq(q))
    assert abs(prod.z2) <= 1e-12 * (1 + norm_sq(q))


def test_inverse_examples():
    inv = q_inverse(Quaternion(1 + 0j, 1 + 0j))
    assert close(inv, Quaternion(0.5 + 0j, -0.5 + 0j))
    assert close(q_inverse(Quaternion(1j, 0j)), Quaternion(-1j, 0j))
    with pytest.raises(SingularValue):
        q_inverse(ZERO)


def test_inverse_two_sided():
    rng = random.Random(5)
    for _ in range(200):
        q = random_quaternion(rng, 3.0)
        if norm_sq(q) < 1e-6:
            continue
        assert close(q_mul(q, q_inverse(q)), ONE, 1e-9)
        assert close(q_mul(q_inverse(q), q), ONE, 1e-9)


def test_real4_bridge():
    assert to_real4(J) == (0, 0, 1, 0)
    assert to_real4(I) == (0, 1, 0, 0)
    rng = random.Random(6)
    for _ in range(100):
        q = random_quaternion(rng, 5.0)
        assert from_real4(*to_real4(q)) == q


def test_mul_matches_real4_oracle_bulk():
    rng = random.Random(7)
    for _ in range(2000):
        a = random_quaternion(rng)
        b = random_quaternion(rng)
        got = to_real4(q_mul(a, b))
        want = hamilton_mul_real4(to_real4(a), to_real4(b))
        assert max(abs(g - w) for g, w in zip(got, want)) <= 1e-12


def test_j_commutation_rule_exact():
    # z1 * j == j * conj(z1), exactly
    rng = random.Random(8)
    for _ in range(50):
        c = complex(rng.uniform(-5, 5), rng.uniform(-5, 5))
        lhs = q_mul(Quaternion(c, 0j), J)
        rhs = q_mul(J, Quaternion(c.conjugate(), 0j))
        assert lhs == rhs


@given(quaternions, quaternions, quaternions)
def test_associativity(a, b, c):
    lhs = q_mul(q_mul(a, b), c)
    rhs = q_mul(a, q_mul(b, c))
    scale = 1 + max(norm_sq(a), norm_sq(b), norm_sq(c)) ** 1.5
    assert (lhs - rhs).abs() <= 1e-12 * scale


def test_scalar_multiplication_sides():
    q = Quaternion(1 + 2j, 3 - 1j)
    # left scalar scales both components; right scalar conjugates into z2
    assert 1j * q == Quaternion(1j * (1 + 2j), 1j * (3 - 1j))
    assert q * 1j == q_mul(q, Quaternion(1j, 0j))
