"""Evaluating the torus representations on weighted mapping classes.

A mapping class f is decomposed into a word in S and T^k; the product
of the generator matrices equals the representation of (f, w) where w
is the weight accumulated by the extension cocycle along the word, so
the value at an arbitrary weight n is u^(n-w) times the product.  The
result is word-independent (that is exactly what the cocycle buys) and
is tested as such.

Also here: denominator profiles (the executable form of the
integrality theorems), exact and projective matrix orders with
certified minimality, the figure-eight period table, and breadth-first
closure of the image group.
"""

from collections import Counter
from fractions import Fraction
from math import lcm

import cmath

from .cyclotomic import CycNum, in_subfield
from .extension import MERIDIAN, WeightedClass, compose
from .matrix import RepMatrix
from .sl2z import Mat2Z, decompose, identity, t_power
from .theory import default_basis, s_matrix, t_matrix, t_power_matrix

FIG8_MATRIX = Mat2Z(2, 1, 1, 1)

# the published figure-eight periods for p = 3..20, in order
FIG8_PUBLISHED = (1, 1, 10, 6, 4, 3, 12, 30, 5, 12, 14, 12, 20, 12, 18, 12, 9, 60)


class DenominatorProfile:
    """Entry-wise denominator bounds of a matrix, plus the overall lcm."""

    __slots__ = ("bound", "per_entry", "p", "divides_p")

    def __init__(self, bound, per_entry, p):
        self.bound = bound
        self.per_entry = per_entry
        self.p = p
        self.divides_p = (p % bound == 0)

    def __repr__(self):
        return (f"DenominatorProfile(bound={self.bound}, "
                f"divides_p={self.divides_p})")


def evaluate(theta, f, n=0, basis=None):
    """The representation value at (f, n), via generator words.

    The generator matrices are multiplied left to right while the
    weighted classes (g, 0) compose through the extension; the product
    then equals the value at (f, w), and u^(n-w) corrects the weight.
    """
    basis = basis or default_basis(theta)
    word = decompose(f)
    acc = WeightedClass(identity(), 0)
    mat = None
    for tok in word:
        if tok == "S":
            g, gm = Mat2Z(0, -1, 1, 0), s_matrix(theta, basis)
        else:
            k = tok[1]
            g, gm = t_power(k), t_power_matrix(theta, k, basis)
        acc = compose(acc, WeightedClass(g, 0), MERIDIAN)
        mat = gm if mat is None else mat * gm
    if mat is None:
        mat = RepMatrix.identity_like(s_matrix(theta, basis))
    assert acc.f == f
    twist = ((n - acc.n) * theta.u_exp) % theta.N
    return mat.mul_monomial(twist) if twist else mat


def evaluate_word(theta, word, n=0, basis=None):
    """Same as evaluate() but along a caller-supplied word (for the
    word-independence tests)."""
    basis = basis or default_basis(theta)
    acc = WeightedClass(identity(), 0)
    mat = RepMatrix.identity_like(s_matrix(theta, basis))
    for tok in word:
        if tok == "S":
            g, gm = Mat2Z(0, -1, 1, 0), s_matrix(theta, basis)
        else:
            g, gm = t_power(tok[1]), t_power_matrix(theta, tok[1], basis)
        acc = compose(acc, WeightedClass(g, 0), MERIDIAN)
        mat = mat * gm
    twist = ((n - acc.n) * theta.u_exp) % theta.N
    return acc.f, (mat.mul_monomial(twist) if twist else mat)


def evaluate_weighted(theta, wc, basis=None):
    return evaluate(theta, wc.f, wc.n, basis)


def denominator_profile(mat, p=None):
    per = tuple(tuple(e.denominator_bound for e in row) for row in mat.entries)
    bound = 1
    for row in per:
        for b in row:
            bound = lcm(bound, b)
    return DenominatorProfile(bound, per, p if p is not None else mat.p)


# ---------- exact orders ----------


def _phase_candidate(values, cap):
    """lcm of root-of-unity orders suggested by float phases."""
    k = 1
    for z in values:
        if abs(abs(z) - 1) > 1e-6:
            return None
        theta = cmath.phase(z) / (2 * cmath.pi)
        frac = Fraction(theta).limit_denominator(max(cap, 4))
        k = lcm(k, frac.denominator)
        if k > cap:
            return None
    return k


def _certify_order(mat, k, is_target):
    """Check that k is the least exponent with is_target(mat^k)."""
    if not is_target(mat ** k):
        return False
    for q in set(_prime_factors(k)):
        if is_target(mat ** (k // q)):
            return False
    return True


def _prime_factors(n):
    out = []
    d = 2
    while d * d <= n:
        while n % d == 0:
            out.append(d)
            n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def matrix_order(mat, cap=100000):
    """Least k <= cap with mat^k == Id exactly, else None.

    A candidate comes from the floating eigenvalue phases; exactness
    and minimality are then certified with exact arithmetic.  If the
    float hint lies, fall back to sequential exact powers.
    """
    import numpy as np

    eig = np.linalg.eigvals(mat.embed())
    k = _phase_candidate(eig, cap)
    if k is not None and k <= cap and _certify_order(mat, k, RepMatrix.is_identity):
        return k
    acc = mat
    for k in range(1, cap + 1):
        if acc.is_identity():
            return k
        acc = acc * mat
    return None


def projective_order(mat, cap=100000):
    """Least k <= cap with mat^k scalar, with that scalar; else (None, None)."""
    import numpy as np

    eig = np.linalg.eigvals(mat.embed())
    rel = [z / eig[0] for z in eig]
    k = _phase_candidate(rel, cap)
    if k is not None and k <= cap:
        power = mat ** k
        c = power.as_scalar()
        if c is not None and _certify_order(
                mat, k, lambda m: m.as_scalar() is not None):
            return k, c
    acc = mat
    for k in range(1, cap + 1):
        c = acc.as_scalar()
        if c is not None:
            return k, c
        acc = acc * mat
    return None, None


def root_of_unity_exponent(c):
    """k with c == zeta_N^k (N the host order), or None; float-hinted,
    certified exactly."""
    z = c.embed()
    if abs(abs(z) - 1) > 1e-6:
        return None
    n = c.order
    k = round(cmath.phase(z) / (2 * cmath.pi / n)) % n
    return k if c == CycNum.root_of_unity(n, k) else None


def scalar_order(c, cap=100000):
    """Multiplicative order of a root-of-unity scalar, exactly."""
    z = c.embed()
    if abs(abs(z) - 1) > 1e-6:
        return None
    n = c.order
    k = _phase_candidate([z], max(cap, 2 * n))
    if k is not None:
        ck = c ** k
        if ck.is_rational() and ck.as_rational() == 1:
            for q in set(_prime_factors(k)):
                sub = c ** (k // q)
                if sub.is_rational() and sub.as_rational() == 1:
                    break
            else:
                return k
    acc = c
    for k in range(1, cap + 1):
        if acc.is_rational() and acc.as_rational() == 1:
            return k
        acc = acc * c
    return None


def fig8_entry(p, cap=100000):
    """Order data of the level-p value on the figure-eight monodromy."""
    from .theory import theory

    theta = theory(p)
    mat = evaluate(theta, FIG8_MATRIX, 0)
    exact = matrix_order(mat, cap)
    proj, scal = projective_order(mat, cap)
    listed = FIG8_PUBLISHED[p - 3] if 3 <= p <= 20 else None
    entry = {
        "p": p,
        "order": exact,
        "projective_order": proj,
        "scalar": scal,
        "scalar_order": scalar_order(scal) if scal is not None else None,
        "listed": listed,
    }
    if listed is not None:
        entry["match"] = "exact" if exact == listed else _twist_match(
            theta, proj, scal, listed)
    return entry


def _twist_match(theta, proj, scal, listed):
    """Fallback match: some root-of-unity rescaling lambda of the matrix
    attains the listed order, i.e. proj * ord(lambda^proj * scal) == listed.

    Searches lambda over the roots of unity of the host field; reports
    the twist as a monomial exponent if found.
    """
    if proj is None or scal is None or listed % proj != 0:
        return None
    n = theta.N
    want = listed // proj
    for j in range(n):
        tw = scal.mul_monomial((j * proj) % n)
        if scalar_order(tw, 10 * n) == want:
            return {"via": "twist", "lambda_exp": j,
                    "residual_scalar_order": want}
    return None


def fig8_periods(p_min=3, p_max=20, cap=100000):
    """The period table rows for p in [p_min, p_max]."""
    if not (3 <= p_min <= p_max):
        raise ValueError("need 3 <= p_min <= p_max")
    return [fig8_entry(p, cap) for p in range(p_min, p_max + 1)]


# ---------- finite image ----------


def group_closure(theta, cap=10**6, census=True, basis=None):
    """Breadth-first closure of {rho(S,0), rho(T,0)} under multiplication.

    Canonical coordinate tuples make hashing exact.  Returns a dict
    with the group order (and an element-order census) if the closure
    stabilizes within cap distinct elements, else None.  The worklist
    runs single-threaded here; parallel workers would only need
    insertion into the seen-set atomic with its membership test.
    """
    basis = basis or default_basis(theta)
    s = s_matrix(theta, basis)
    t = t_matrix(theta, basis)
    gens = [s, t, s.conj_transpose(), t.conj_transpose()]
    ident = RepMatrix.identity_like(s)
    seen = {ident.key(): ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for m in frontier:
            for g in gens:
                prod = m * g
                k = prod.key()
                if k not in seen:
                    if len(seen) >= cap:
                        return None
                    seen[k] = prod
                    nxt.append(prod)
        frontier = nxt
    result = {"order": len(seen)}
    if census:
        orders = Counter()
        for m in seen.values():
            orders[matrix_order(m, cap=10 * len(seen) + 64)] += 1
        result["element_orders"] = dict(sorted(orders.items()))
    return result


# ---------- sampling helpers ----------


def sample_classes(rng, count, max_height=1000, require_c=False):
    from .sl2z import random_mapping_class

    out = []
    seen = set()
    while len(out) < count:
        m = random_mapping_class(rng, max_height=max_height, require_c=require_c)
        if m.entries() not in seen:
            seen.add(m.entries())
            out.append(m)
    return out


def verify_denominators(theta, classes, check_subfield=True):
    """Check bound(p * rho(f,0)) == 1 (and the subring refinement for
    even p) over the given mapping classes; returns a report list."""
    p = theta.p
    rows = []
    for f in classes:
        mat = evaluate(theta, f, 0)
        prof = denominator_profile(mat, p)
        ok = prof.divides_p
        sub_ok = None
        if ok and check_subfield and theta.s is not None:
            sub_ok = all(
                in_subfield(e * p, theta.s) for row in mat.entries for e in row
            )
            ok = ok and sub_ok
        rows.append({
            "f": f.entries(),
            "bound": prof.bound,
            "divides_p": prof.divides_p,
            "in_subring": sub_ok,
            "ok": ok,
        })
    return rows
