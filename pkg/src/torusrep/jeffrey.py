"""The closed-formula representation on SL(2,Z) for even levels.

For p = 2r and a matrix U = (a,b;c,d) with c != 0 the value is, entry
by entry over row j and column l in 1..r-1,

    -i zeta_8^(-Phi(U)) sign(c) / sqrt(p|c|) * zeta_4rc^(d l^2)
        * sum over gamma mod 2rc with gamma = j mod 2r of
              zeta_4rc^(a gamma^2) (zeta_2rc^(gamma l) - zeta_2rc^(-gamma l))

with Phi the Rademacher function and the convention zeta_-t = zeta_t^-1
for negative c.  At c = 0 the formula degenerates; T-powers are instead
the diagonal (zeta_8^-1 alpha^(l^2))^k, alpha = zeta_2p, which is the
unique diagonal extension consistent with multiplicativity (checked
exactly in the tests against products evaluated through the formula).

Everything is exact over Q(zeta_NJ) with NJ = lcm(8, 8r|c|); the
1/sqrt(p|c|) factor is realized by a quadratic Gauss sum.

compare() cross-checks the formula against the generator-word
representation: the two can differ only by a root-of-unity scalar,
which is extracted and verified against every entry.
"""

from math import lcm

from .cyclotomic import CycNum, in_subfield, sqrt_integer
from .matrix import RepMatrix
from .rep import evaluate, scalar_order
from .sl2z import Mat2Z, rademacher_phi
from .theory import theory


class JeffreyContext:
    """Host-field data for one closed-formula evaluation."""

    __slots__ = ("p", "r", "u", "nj", "phi_u", "sign_c")

    def __init__(self, p, u):
        if p % 2 != 0 or p < 4:
            raise ValueError("the closed formula needs an even level p >= 4")
        if u.c == 0:
            raise ValueError("c = 0: use jeffrey_t_power for T-powers")
        self.p = p
        self.r = p // 2
        self.u = u
        self.nj = lcm(8, 8 * self.r * abs(u.c))
        self.phi_u = rademacher_phi(u)
        self.sign_c = 1 if u.c > 0 else -1


def jeffrey_matrix(p, u):
    """Exact closed-formula matrix for even p on u with c != 0."""
    ctx = JeffreyContext(p, u)
    a, _, c, d = u.entries()
    r, nj, eps = ctx.r, ctx.nj, ctx.sign_c
    ca = abs(c)
    # nj = 8 r |c| exactly for even p, so zeta_{4r|c|} = zeta_nj^2 and
    # zeta_{2r|c|} = zeta_nj^4; a negative c flips every exponent
    assert nj == 8 * r * ca
    # prefactor: -i zeta_8^(-Phi) sign(c) sqrt(p|c|) / (p|c|)
    pref_exp = (3 * nj // 4 + (-ctx.phi_u % 8) * (nj // 8)) % nj
    pref = sqrt_integer(p * ca).mul_sparse({pref_exp: eps}, den=p * ca)
    labels = tuple(range(1, r))
    rows = []
    for j in labels:
        row = []
        for l in labels:
            terms = {}
            twist = d * l * l  # exponent on zeta_{4r|c|}
            for t in range(ca):
                g = j + 2 * r * t
                base = a * g * g + twist
                e_plus = (eps * (2 * base + 4 * g * l)) % nj
                e_minus = (eps * (2 * base - 4 * g * l)) % nj
                terms[e_plus] = terms.get(e_plus, 0) + 1
                terms[e_minus] = terms.get(e_minus, 0) - 1
            row.append(pref.mul_sparse(terms))
        rows.append(row)
    return RepMatrix(p, "signed", nj, rows, labels)


def jeffrey_t_power(p, k):
    """The diagonal value on T^k: entries (zeta_8^-1 alpha^(l^2))^k."""
    if p % 2 != 0 or p < 4:
        raise ValueError("the closed formula needs an even level p >= 4")
    r = p // 2
    n = lcm(8, 4 * p)
    zero = CycNum.zero(n)
    labels = tuple(range(1, r))
    ent = [[CycNum.root_of_unity(
                n, k * (-(n // 8) + l * l * (n // (2 * p)))) if i == idx else zero
            for idx, _ in enumerate(labels)]
           for i, l in enumerate(labels)]
    return RepMatrix(p, "signed", n, ent, labels)


def _lift_terms(x, m):
    """Entry of a small-field matrix as sparse terms at order m."""
    step = m // x.order
    return {j * step: v for j, v in enumerate(x.nums) if v}, x.den


def _best_reference(word, jef):
    """Index pair with comfortably nonzero float magnitude on both sides."""
    best, arg = -1.0, None
    for i in range(word.dim):
        for j in range(word.dim):
            wv = abs(word.entries[i][j].embed())
            jv = abs(jef.entries[i][j].embed())
            m = min(wv, jv)
            if m > best:
                best, arg = m, (i, j)
    return arg, best


def compare(p, u):
    """Match the closed formula against the generator-word value on u.

    Returns {"match": bool, "scalar": CycNum, ...}; the scalar lambda
    satisfies jeffrey == lambda * word exactly when match is true.  The
    word side is the weight-zero signed-basis value; no re-embedding is
    needed because the theory realizes the classical embedding already.
    """
    theta = theory(p)
    jef = jeffrey_matrix(p, u)
    word = evaluate(theta, u, 0, basis="signed")
    nj = jef.order
    (i0, j0), mag = _best_reference(word, jef)
    if mag < 1e-9:
        raise ValueError("no usable nonzero reference entry")
    w0 = word.entries[i0][j0]
    j0e = jef.entries[i0][j0]
    # try a monomial scalar first (the expected situation)
    ratio = j0e.embed() / w0.embed()
    lam = None
    if abs(abs(ratio) - 1) < 1e-6:
        import cmath
        m = round(cmath.phase(ratio) / (2 * cmath.pi / nj)) % nj
        cand = CycNum.root_of_unity(nj, m)
        if _matches(jef, word, cand):
            lam = cand
    if lam is None:
        # exact fallback: lambda = jef * conj(w0) / |w0|^2, then verify
        norm = w0 * w0.conj()
        coeff = w0.conj() * norm.inv()
        terms, den = _lift_terms(coeff, nj)
        cand = j0e.mul_sparse(terms, den)
        lam = cand if _matches(jef, word, cand) else None
    if lam is None:
        return {"match": False, "scalar": None, "p": p, "u": u.entries()}
    return {
        "match": True,
        "scalar": lam,
        "scalar_order": scalar_order(lam, 10 * nj),
        "p": p,
        "u": u.entries(),
    }


def _matches(jef, word, lam):
    """jef == lam * lifted(word), entry by entry, exactly."""
    nj = jef.order
    lam_is_monomial = sum(1 for v in lam.nums if v) == 1 and lam.den == 1
    if lam_is_monomial:
        exp = next(j for j, v in enumerate(lam.nums) if v)
        if lam.nums[exp] != 1:
            lam_is_monomial = False
    for i in range(word.dim):
        for j in range(word.dim):
            terms, den = _lift_terms(word.entries[i][j], nj)
            if lam_is_monomial:
                shifted = {(e + exp) % nj: v for e, v in terms.items()}
                lifted = CycNum.from_terms(nj, shifted, den) \
                    if shifted else CycNum.zero(nj)
                if jef.entries[i][j] != lifted:
                    return False
            else:
                if jef.entries[i][j] != lam.mul_sparse(terms, den):
                    return False
    return True


def integrality_report(p, u, jef=None, subfield_sample=True):
    """The integrality ladder on one closed-formula value.

    Checks, all exact: every entry times p|c| is an algebraic integer;
    and times p lies in Z[zeta_s] (the final rung of the coprimality
    ladder, since gcd(a, c) = 1 always holds in SL(2,Z)).
    """
    theta = theory(p)
    if jef is None:
        jef = jeffrey_matrix(p, u)
    ca = abs(u.c)
    ok_pc = all(
        (p * ca) % e.denominator_bound == 0 for row in jef.entries for e in row
    )
    ok_p = all(p % e.denominator_bound == 0 for row in jef.entries for e in row)
    ok_sub = None
    if subfield_sample:
        ok_sub = all(
            in_subfield(e * p, theta.s) for row in jef.entries for e in row
        )
    return {
        "p": p,
        "u": u.entries(),
        "pc_integral": ok_pc,
        "p_integral": ok_p,
        "p_in_subring": ok_sub,
        "ok": ok_pc and ok_p and (ok_sub is not False),
    }


def factorization_check(p, u):
    """Exact multiplicativity through U = S * (c, d; -a, -b).

    This is the factorization used to transfer integrality from the
    c-side to the a-side of the ladder; it needs a != 0 and both sides
    are compared in the least common host field, so keep |a|, |c| small.
    """
    a, b, c, d = u.entries()
    if a == 0 or c == 0:
        raise ValueError("factorization check needs a != 0 and c != 0")
    s_mat = Mat2Z(0, -1, 1, 0)
    u2 = Mat2Z(c, d, -a, -b)
    assert s_mat * u2 == u
    left = jeffrey_matrix(p, u)
    right = jeffrey_matrix(p, u2)
    js = jeffrey_matrix(p, s_mat)
    m = lcm(left.order, right.order, js.order)
    prod = None
    dim = left.dim
    for i in range(dim):
        for j in range(dim):
            acc = CycNum.zero(m)
            for k in range(dim):
                terms, den = _lift_terms(js.entries[i][k], m)
                acc = acc + right.entries[k][j].lift(m).mul_sparse(terms, den)
            if acc != left.entries[i][j].lift(m):
                return False
    return True
