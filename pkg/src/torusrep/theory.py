"""Level data for the torus theories: roots, scalars, generator matrices.

For a level p >= 3 the theory lives in Q(zeta_N) with N = lcm(8, 4p).
The distinguished elements are a primitive 2p-th root of unity A, the
framing root u with u^2 = A^(-6 - p(p+1)/2), and the normalization
eta = u A^3 (A^2 - A^-2)/p * G(A), where G(A) = 1/2 sum_{m=1}^{2p}
(-A)^(-m^2) is half a quadratic Gauss sum.  The identity

    eta^2 = -(A^2 - A^-2)^2 / p

is asserted exactly at construction, as is the u^2 constraint.

Concrete realizations (frozen; see the golden tests and the
figure-eight period table which validate them end to end):

  * even p = 2r:  A = -zeta_2p and u = zeta_8^3 zeta_2p^-3, so the
    numbers here coincide with their images under the classical
    complex embedding sending A to -alpha, alpha = e^(2 pi i / 2p).
  * odd p:  -zeta_2p is not primitive of order 2p, so A = zeta_2p.
    The template u = zeta_8^e zeta_2p^-3 then forces an even exponent
    e; the branch is fixed to e = 2 for p = 1 mod 4 and e = 4 for
    p = 3 mod 4 (for p = 1 mod 4 the two admissible branches are
    Galois conjugate, for p = 3 mod 4 the period table decides).

Colors are 0..r-2 for p = 2r and the even integers 0..p-3 for odd p.
The signed basis (even p only) re-indexes by l = 1..r-1 with
alternating signs, diagonalizing the same data as the colored basis.
"""

from fractions import Fraction
from functools import lru_cache
from math import lcm

from .cyclotomic import CycNum, sqrt_integer
from .matrix import RepMatrix


class TheoryParams:
    """Immutable level data; construct via theory(p)."""

    __slots__ = ("p", "parity", "r", "colors", "dim", "N", "A", "a_exp",
                 "u", "u_exp", "e", "eta", "s")

    def __init__(self, **kw):
        for k in self.__slots__:
            object.__setattr__(self, k, kw[k])

    def __setattr__(self, *a):
        raise AttributeError("TheoryParams is immutable")

    def __repr__(self):
        return (f"TheoryParams(p={self.p}, {self.parity}, dim={self.dim}, "
                f"N={self.N}, e={self.e}, s={self.s})")


@lru_cache(maxsize=None)
def theory(p):
    """Build and validate the level-p data."""
    if p < 3:
        raise ValueError("level p must be at least 3")
    even = p % 2 == 0
    n = lcm(8, 4 * p)
    # A as a monomial exponent of zeta_N
    if even:
        # -zeta_2p = zeta_N^(N/(2p) + N/2), primitive of order 2p
        a_exp = (n // (2 * p) + n // 2) % n
    else:
        a_exp = n // (2 * p)
    A = CycNum.root_of_unity(n, a_exp)

    # u = zeta_8^e * zeta_2p^-3 with u^2 = A^(-6 - p(p+1)/2)
    target = CycNum.root_of_unity(n, (-(6 + p * (p + 1) // 2) * a_exp) % n)
    base_exp = (-3 * (n // (2 * p))) % n
    candidates = []
    for e in range(8):
        u_exp = (e * (n // 8) + base_exp) % n
        if CycNum.root_of_unity(n, (2 * u_exp) % n) == target:
            candidates.append(e)
    if not candidates:
        raise ValueError(f"no framing exponent satisfies u^2 constraint at p={p}")
    if even:
        e = 3
        assert e in candidates, f"even-p framing convention broken at p={p}"
    elif p % 4 == 1:
        e = min(candidates)
        assert e == 2, f"odd-p framing convention broken at p={p}"
    else:
        e = min(candidates) + 4
        assert e == 4 and e in candidates, \
            f"odd-p framing convention broken at p={p}"
    u_exp = (e * (n // 8) + base_exp) % n
    u = CycNum.root_of_unity(n, u_exp)

    # eta from the Gauss sum G = 1/2 sum_{m=1}^{2p} (-A)^(-m^2)
    neg_a_exp = (a_exp + n // 2) % n
    counts = {}
    for m in range(1, 2 * p + 1):
        exp = (-m * m * neg_a_exp) % n
        counts[exp] = counts.get(exp, 0) + 1
    G = CycNum.from_terms(n, counts, den=2)
    delta = A * A - (A * A).inv()  # A^2 - A^-2
    eta = u * CycNum.root_of_unity(n, 3 * a_exp) * delta * G * Fraction(1, p)

    # identities the construction must satisfy
    assert u * u == target, "u^2 identity failed"
    assert eta * eta == -(delta * delta) * Fraction(1, p), "eta^2 identity failed"

    if even:
        r = p // 2
        colors = tuple(range(r - 1))
        s = 4 * r if r % 2 == 0 else 8 * r
        # the classical-embedding image of eta: -i (a^2 - a^-2)/sqrt(2r)
        alpha2 = CycNum.root_of_unity(n, 2 * (n // (2 * p)))
        minus_i = CycNum.root_of_unity(n, 3 * n // 4)
        assert eta * sqrt_integer(2 * r) == minus_i * (alpha2 - alpha2.inv()), \
            "eta does not match its embedded closed form"
    else:
        r = None
        colors = tuple(range(0, p - 2, 2))
        s = None

    return TheoryParams(p=p, parity="even" if even else "odd", r=r,
                        colors=colors, dim=len(colors), N=n, A=A, a_exp=a_exp,
                        u=u, u_exp=u_exp, e=e, eta=eta, s=s)


def quantum_integer(theta, m):
    """[m] = (A^2m - A^-2m)/(A^2 - A^-2), via the integral geometric sum.

    [m] = A^(2-2m) (1 + A^4 + ... + A^(4(m-1))), manifestly in Z[A];
    [-m] = -[m] and [0] = 0.
    """
    if m == 0:
        return CycNum.zero(theta.N)
    if m < 0:
        return -quantum_integer(theta, -m)
    n, ae = theta.N, theta.a_exp
    terms = {}
    for i in range(m):
        exp = ((2 - 2 * m + 4 * i) * ae) % n
        terms[exp] = terms.get(exp, 0) + 1
    return CycNum.from_terms(n, terms)


def _signed_labels(theta):
    return tuple(range(1, theta.r))


def _check_basis(theta, basis):
    if basis not in ("colored", "signed"):
        raise ValueError(f"unknown basis {basis!r}")
    if basis == "signed" and theta.parity != "even":
        raise ValueError("the signed basis exists only for even p")


@lru_cache(maxsize=None)
def _t_matrix_cached(p, basis):
    theta = theory(p)
    n = theta.N
    neg_a = (theta.a_exp + n // 2) % n
    zero = CycNum.zero(n)
    if basis == "colored":
        labels = theta.colors
        diag = [CycNum.root_of_unity(n, neg_a * (l * l + 2 * l)) for l in labels]
    else:
        labels = _signed_labels(theta)
        diag = [CycNum.root_of_unity(n, neg_a * (l * l - 1)) for l in labels]
    ent = [[diag[i] if i == j else zero for j in range(len(labels))]
           for i in range(len(labels))]
    return RepMatrix(p, basis, n, ent, labels)


@lru_cache(maxsize=None)
def _s_matrix_cached(p, basis):
    theta = theory(p)
    n = theta.N
    if basis == "colored":
        labels = theta.colors
        ent = [[theta.eta * ((-1) ** (l + j))
                * quantum_integer(theta, (l + 1) * (j + 1))
                for j in labels] for l in labels]
    else:
        labels = _signed_labels(theta)
        ent = [[theta.eta * quantum_integer(theta, l * j)
                for j in labels] for l in labels]
    return RepMatrix(p, basis, n, ent, labels)


def t_matrix(theta, basis=None):
    """Diagonal twist matrix: mu_l = (-A)^(l^2+2l) on the colored basis,
    (-A)^(l^2-1) on the signed one."""
    basis = basis or default_basis(theta)
    _check_basis(theta, basis)
    return _t_matrix_cached(theta.p, basis)


def s_matrix(theta, basis=None):
    """Symmetric Hopf-pairing matrix: eta (-1)^(l+j) [(l+1)(j+1)] colored,
    eta [l j] signed."""
    basis = basis or default_basis(theta)
    _check_basis(theta, basis)
    return _s_matrix_cached(theta.p, basis)


def default_basis(theta):
    return "signed" if theta.parity == "even" else "colored"


def t_power_matrix(theta, k, basis=None):
    """The k-th power of the twist matrix, as a fresh diagonal."""
    basis = basis or default_basis(theta)
    _check_basis(theta, basis)
    n = theta.N
    neg_a = (theta.a_exp + n // 2) % n
    if basis == "colored":
        labels = theta.colors
        exps = [neg_a * (l * l + 2 * l) * k for l in labels]
    else:
        labels = _signed_labels(theta)
        exps = [neg_a * (l * l - 1) * k for l in labels]
    zero = CycNum.zero(n)
    ent = [[CycNum.root_of_unity(n, exps[i]) if i == j else zero
            for j in range(len(labels))] for i in range(len(labels))]
    return RepMatrix(theta.p, basis, n, ent, labels)
