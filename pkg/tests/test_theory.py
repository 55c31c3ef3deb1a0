"""Level data: scalars, quantum integers, generator matrices."""

from fractions import Fraction

import pytest

from torusrep.cyclotomic import CycNum, root_of_unity, sqrt_integer
from torusrep.rep import root_of_unity_exponent
from torusrep.theory import (default_basis, quantum_integer, s_matrix,
                             t_matrix, t_power_matrix, theory)


def test_color_sets():
    assert theory(6).colors == (0, 1) and theory(6).dim == 2
    assert theory(5).colors == (0, 2) and theory(5).dim == 2
    assert theory(7).colors == (0, 2, 4)
    assert theory(12).colors == tuple(range(5))
    with pytest.raises(ValueError):
        theory(2)


def test_scalar_identities_explicit():
    # recompute the Gauss-sum eta independently of the constructor path
    for p in range(3, 41):
        th = theory(p)
        A, u = th.A, th.u
        assert u * u == A ** (-(6 + p * (p + 1) // 2))
        neg_a = -A
        G = CycNum.zero(th.N)
        for m in range(1, 2 * p + 1):
            G = G + neg_a ** (-(m * m))
        G = G * Fraction(1, 2)
        delta = A ** 2 - A ** -2
        eta = u * A ** 3 * delta * G * Fraction(1, p)
        assert eta == th.eta
        assert eta * eta == -(delta * delta) * Fraction(1, p)
        assert (p * eta).denominator_bound == 1


def test_framing_exponents():
    assert theory(6).e == 3 and theory(12).e == 3
    assert theory(5).e == 2 and theory(13).e == 2
    assert theory(3).e == 4 and theory(7).e == 4
    assert theory(8).s == 16  # 4r, r even
    assert theory(6).s == 24  # 8r, r odd
    assert theory(5).s is None


def test_psi_image_identity_even():
    for p in (4, 6, 8, 10, 12):
        th = theory(p)
        r = p // 2
        alpha2 = root_of_unity(th.N, 2 * (th.N // (2 * p)))
        minus_i = root_of_unity(th.N, 3 * th.N // 4)
        assert th.eta * sqrt_integer(2 * r) == minus_i * (alpha2 - alpha2.inv())


def test_quantum_integers():
    th = theory(6)
    assert quantum_integer(th, 0).is_zero()
    assert quantum_integer(th, 1) == 1
    A = th.A
    assert quantum_integer(th, 2) == A * A + (A * A).inv()
    for p in (5, 6, 7, 10):
        th = theory(p)
        A = th.A
        delta = A ** 2 - A ** -2
        for m in range(-5, 9):
            assert quantum_integer(th, m) == (A ** (2 * m) - A ** (-2 * m)) * delta.inv()
            assert quantum_integer(th, -m) == -quantum_integer(th, m)


def test_t_matrix_values():
    th = theory(6)
    colored = t_matrix(th, "colored")
    assert colored.entries[0][0] == 1  # mu_0
    th7 = theory(7)
    mu1 = t_matrix(th7, "colored")
    # mu for color 2 is (-A)^(4+4)
    assert mu1.entries[1][1] == (-th7.A) ** 8
    signed = t_matrix(th, "signed")
    assert signed.entries[0][0] == 1
    assert signed.entries[1][1] == -(th.A ** 3)
    with pytest.raises(ValueError):
        t_matrix(theory(5), "signed")
    assert default_basis(theory(5)) == "colored"
    assert default_basis(th) == "signed"


def test_s_matrix_values():
    th = theory(6)
    s6 = s_matrix(th, "signed")
    expected = {(0, 0): 1, (0, 1): 2, (1, 0): 2, (1, 1): 4}
    for (i, j), m in expected.items():
        assert s6.entries[i][j] == th.eta * quantum_integer(th, m)
    th5 = theory(5)
    s5 = s_matrix(th5, "colored")
    assert s5.entries[0][1] == th5.eta * quantum_integer(th5, 3)
    assert s5.entries[0][1] == th5.eta * ((-1) ** 2) * quantum_integer(th5, 3)


def test_signed_is_sign_conjugate_of_colored():
    # beta'_l = (-1)^(l-1) b_(l-1): conjugation by diag(+-1) links bases
    for p in (6, 8, 10):
        th = theory(p)
        cs = s_matrix(th, "colored")
        ss = s_matrix(th, "signed")
        r = p // 2
        for l in range(1, r):
            for j in range(1, r):
                sign = (-1) ** (l - 1) * (-1) ** (j - 1)
                assert ss.entries[l - 1][j - 1] == cs.entries[l - 1][j - 1] * sign
        assert t_matrix(th, "signed").entries == tuple(
            tuple(row) for row in t_matrix(th, "colored").entries)


def test_unitarity_and_symmetry():
    for p in range(4, 17):
        th = theory(p)
        s = s_matrix(th)
        t = t_matrix(th)
        assert s.is_symmetric()
        assert s.is_unitary()
        assert t.is_unitary()


def test_modular_relations_golden():
    # S^4 = Id exactly; (S T)^3 S^-2 is the scalar zeta_4p^(3(p-4)/2)
    for p in (4, 6, 8, 10, 12, 14, 16):
        th = theory(p)
        s, t = s_matrix(th), t_matrix(th)
        assert (s ** 4).is_identity()
        rel = ((s * t) ** 3) * (s.conj_transpose() ** 2)
        xi = rel.as_scalar()
        assert xi is not None
        assert root_of_unity_exponent(xi) == 3 * (p - 4) // 2


def test_t_power_matrix_matches_powers():
    for p in (5, 6, 9):
        th = theory(p)
        t1 = t_matrix(th)
        for k in (0, 1, 2, 5):
            assert t_power_matrix(th, k) == t1 ** k
        assert t_power_matrix(th, -1) * t1 == t_power_matrix(th, 0)
        assert t_power_matrix(th, -3) * t_power_matrix(th, 3) == t1 ** 0
