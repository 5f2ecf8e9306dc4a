import numpy as np
import pytest
from hypothesis import given, strategies as st

from unitgroups.quaternion import (I, IS, ONE, S, Z, SplitQuaternion, norm_one_samples,
                                   obstruction_certificate, pell_coefficients, random_quaternion,
                                   sq_conj, sq_inverse, sq_mul, sq_norm, sq_pow)

coeff = st.integers(-10**6, 10**6)
quats = st.builds(SplitQuaternion, coeff, coeff, coeff, coeff)


def matrix(x):
    """2x2 complex matrix model: u + v s -> [[u, v], [conj(v), conj(u)]]."""
    u = complex(x.a, x.b)
    v = complex(x.c, x.d)
    return np.array([[u, v], [v.conjugate(), u.conjugate()]])


# -- examples --------------------------------------------------------------------


def test_basis_products():
    assert I * I == -ONE
    assert S * I == -IS and I * S == IS
    assert S * S == ONE
    assert Z * Z == Z * 2 + 1


def test_conj_examples():
    assert sq_conj(ONE) == ONE
    assert sq_conj(Z) == SplitQuaternion(1, -4, -3, -3)


def test_norm_examples():
    assert sq_norm(Z) == -1
    assert (sq_norm(ONE), sq_norm(I), sq_norm(S)) == (1, 1, -1)


def test_pow_examples():
    assert sq_pow(Z, 8) == Z * 408 + 169
    assert pell_coefficients(8) == (408, 169)
    assert sq_pow(SplitQuaternion(3, -1, 7, 2), 0) == ONE
    with pytest.raises(ValueError):
        sq_pow(Z, -1)


def test_real_part_recurrence():
    re = [sq_pow(Z, j).real for j in range(51)]
    for j in range(2, 51):
        assert re[j] == 2 * re[j - 1] + re[j - 2]
        assert re[j] > 1


def test_certificate_k1():
    cert = obstruction_certificate(1)
    assert (cert.norm_value, cert.re_value, cert.power_norm) == (-1152, 577, 1)
    assert cert.nonzero


@pytest.mark.parametrize("k", [1, 2, 16, 64])
def test_certificate_values(k):
    cert = obstruction_certificate(k)
    assert cert.nonzero and cert.power_norm == 1 and cert.re_value > 1
    # N(w - 1) = N(w) - 2 Re(w) + 1 for N(w) = 1
    assert cert.norm_value == 2 - 2 * cert.re_value


def test_certificate_rejects():
    with pytest.raises(ValueError):
        obstruction_certificate(0)


def test_certificate_bit_size():
    assert obstruction_certificate(64).re_value.bit_length() > 400


def test_inverse_rejects_non_unit():
    with pytest.raises(ZeroDivisionError):
        sq_inverse(SplitQuaternion(2))


# -- properties ------------------------------------------------------------------


@given(quats, quats, quats)
def test_associative(x, y, z):
    assert (x * y) * z == x * (y * z)


@given(quats, quats)
def test_matches_matrix_model(x, y):
    small = [SplitQuaternion(*(c % 1000 for c in (q.a, q.b, q.c, q.d))) for q in (x, y)]
    assert np.allclose(matrix(sq_mul(*small)), matrix(small[0]) @ matrix(small[1]))


@given(quats, quats, quats)
def test_distributive(x, y, z):
    assert x * (y + z) == x * y + x * z
    assert (y + z) * x == y * x + z * x


@given(quats, quats)
def test_conj_laws(x, y):
    assert sq_conj(sq_conj(x)) == x
    assert sq_conj(x * y) == sq_conj(y) * sq_conj(x)
    assert sq_conj(x + y) == sq_conj(x) + sq_conj(y)


@given(quats)
def test_norm_is_central(x):
    n = SplitQuaternion.from_int(sq_norm(x))
    assert x * sq_conj(x) == n == sq_conj(x) * x


@given(quats, quats)
def test_norm_multiplicative(x, y):
    assert sq_norm(x * y) == sq_norm(x) * sq_norm(y)


def test_constructive_inverses():
    rng = np.random.default_rng(3)
    gens = [S, Z, I, IS, sq_conj(Z), -ONE]
    for _ in range(500):
        x = ONE
        for _ in range(int(rng.integers(1, 10))):
            x = x * gens[int(rng.integers(len(gens)))]
        assert sq_norm(x) in (1, -1)
        y = sq_inverse(x)
        assert x * y == ONE == y * x
        assert sq_norm(x) * sq_norm(y) == 1


def test_norm_one_real_part():
    # N(a) = 1 and N(a - 1) = 0 force Re(a) = 1
    rng = np.random.default_rng(7)
    for a in norm_one_samples(rng, 1000):
        assert sq_norm(a) == 1
        if sq_norm(a - 1) == 0:
            assert a.real == 1
        else:
            assert a.real != 1
        # N(a - 1) = 2 - 2 Re(a) when N(a) = 1
        assert sq_norm(a - 1) == 2 - 2 * a.real


def test_random_quaternion_bounds():
    rng = np.random.default_rng(0)
    for _ in range(100):
        q = random_quaternion(rng, 5)
        assert all(-5 <= c <= 5 for c in (q.a, q.b, q.c, q.d))


def test_scalar_ops():
    x = SplitQuaternion(1, 2, 3, 4)
    assert 3 * x == x * 3 == x + x + x
    assert x - 1 == SplitQuaternion(0, 2, 3, 4)
    assert 1 + x == x + 1
    assert str(x) == "1 + 2i + 3s + 4is"
