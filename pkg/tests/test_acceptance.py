"""Acceptance criteria, one test per criterion.

Every check here is exact (integer/rational equality); the only floats
are the explicitly-permitted oracles for square roots.  Randomized
criteria use fixed seeds, so runs are bit-reproducible.  Each test
prints a single PASS line on success (run pytest with -s to see them;
any failure fails the test in the usual way).
"""

import random
from fractions import Fraction
from math import gcd

from torusrep.cyclotomic import CycNum, sqrt_integer
from torusrep.extension import LagLine, WeightedClass, compose, wall_sigma
from torusrep.jeffrey import compare, factorization_check, integrality_report
from torusrep.rep import (FIG8_PUBLISHED, evaluate_word, fig8_periods,
                          group_closure, sample_classes, verify_denominators)
from torusrep.sl2z import (GenWord, decompose, dedekind_sum, rademacher_phi,
                           random_mapping_class)
from torusrep.theory import s_matrix, t_matrix, theory

EVEN_SET = (4, 6, 8, 10, 12, 14, 16)


def _report(num, text):
    print(f"ACCEPTANCE {num}: PASS - {text}")


def test_criterion_1_fig8_period_table():
    rows = fig8_periods(3, 20, cap=100000)
    exact, twisted = [], []
    for row in rows:
        listed = FIG8_PUBLISHED[row["p"] - 3]
        assert row["listed"] == listed
        if row["order"] == listed:
            exact.append(row["p"])
            continue
        # fallback: projective order equals the listed value divided by
        # the order of the residual root-of-unity scalar (reported)
        m = row["match"]
        assert m is not None and m.get("via") == "twist", row
        assert row["projective_order"] * m["residual_scalar_order"] == listed
        twisted.append((row["p"], m["residual_scalar_order"]))
    _report(1, f"periods p=3..20 reproduce the published list; exact at "
               f"p={exact}, via reported root-of-unity twist at {twisted}")


def test_criterion_2_even_denominators():
    rng = random.Random(42)
    for p in EVEN_SET:
        th = theory(p)
        classes = sample_classes(rng, 100, max_height=1000)
        rows = verify_denominators(th, classes, check_subfield=True)
        bad = [r for r in rows if not r["ok"]]
        assert not bad, (p, bad[:3])
        assert all(r["in_subring"] for r in rows)
    _report(2, f"bound(p*rho(f,0)) = 1 and subring membership at order s for "
               f"100 classes at each even p in {EVEN_SET}, zero failures")


def test_criterion_3_odd_and_twice_odd_prime():
    rng = random.Random(43)
    levels = (3, 5, 7, 11, 13, 6, 10, 14)
    for p in levels:
        th = theory(p)
        classes = sample_classes(rng, 100, max_height=1000)
        rows = verify_denominators(th, classes, check_subfield=True)
        bad = [r for r in rows if not r["ok"]]
        assert not bad, (p, bad[:3])
    _report(3, f"bound(p*rho(f,0)) = 1 for 100 classes at each p in {levels}, "
               f"zero failures")


def test_criterion_4_eta_identities():
    for p in range(3, 41):
        th = theory(p)
        A, u = th.A, th.u
        neg_a = -A
        G = CycNum.zero(th.N)
        for m in range(1, 2 * p + 1):
            G = G + neg_a ** (-(m * m))
        G = G * Fraction(1, 2)
        delta = A ** 2 - A ** -2
        eta = u * A ** 3 * delta * G * Fraction(1, p)
        assert eta == th.eta
        assert eta * eta == -(delta * delta) * Fraction(1, p)
        if p % 2 == 0:
            r = p // 2
            from torusrep.cyclotomic import root_of_unity

            alpha2 = root_of_unity(th.N, 2 * (th.N // (2 * p)))
            minus_i = root_of_unity(th.N, 3 * th.N // 4)
            assert eta * sqrt_integer(2 * r) == minus_i * (alpha2 - alpha2.inv())
    _report(4, "eta^2 = -(A^2-A^-2)^2/p from the Gauss sum for p=3..40, and "
               "the embedded closed form -i(a^2-a^-2)/sqrt(2r) for even p, exact")


def test_criterion_5_jeffrey_consistency():
    rng = random.Random(44)
    for p in (6, 10, 14):
        for f in sample_classes(rng, 50, max_height=200, require_c=True):
            res = compare(p, f)
            assert res["match"], (p, f)
            rep = integrality_report(p, f)
            assert rep["pc_integral"], (p, f)
            assert rep["p_integral"] and rep["p_in_subring"], (p, f)
    # the a-side of the coprimality ladder: exact multiplicativity
    # through U = S (c, d; -a, -b), on a small-entry subset
    rng = random.Random(45)
    for p in (6, 10, 14):
        done = 0
        while done < 5:
            f = random_mapping_class(rng, max_height=10, require_c=True)
            if f.a == 0:
                continue
            assert factorization_check(p, f), (p, f)
            done += 1
    _report(5, "closed formula == root-of-unity scalar * word value for 50 "
               "classes at p=6,10,14; p*c-integrality, Z[zeta_s] membership "
               "of p*R, and the S-factorization identity all exact")


def test_criterion_6_modular_relations():
    for p in EVEN_SET:
        th = theory(p)
        s, t = s_matrix(th), t_matrix(th)
        assert s.is_symmetric()
        assert (s * s.conj_transpose()).is_identity()
        s4 = (s ** 4).as_scalar()
        assert s4 is not None and (s4 * s4.conj()) == 1
        rel = ((s * t) ** 3) * (s.conj_transpose() ** 2)
        xi = rel.as_scalar()
        assert xi is not None and (xi * xi.conj()) == 1
    _report(6, f"S symmetric, S unitary, S^4 and (ST)^3 S^-2 scalar roots of "
               f"unity, exact for p in {EVEN_SET}")


def test_criterion_7_number_theory_kernel():
    for t in range(1, 51):
        x = sqrt_integer(t)
        assert x * x == t
        assert abs(x.embed() - t ** 0.5) < 1e-9
    for k in range(1, 51):
        for h in range(1, k):
            if gcd(h, k) == 1:
                lhs = dedekind_sum(h, k) + dedekind_sum(k, h)
                rhs = Fraction(-1, 4) + (Fraction(h, k) + Fraction(k, h)
                                         + Fraction(1, h * k)) / 12
                assert lhs == rhs
    rng = random.Random(46)

    def sign(x):
        return (x > 0) - (x < 0)

    done = 0
    while done < 500:
        a = random_mapping_class(rng, max_height=3000)
        b = random_mapping_class(rng, max_height=3000)
        c = a * b
        if a.c and b.c and c.c:
            assert rademacher_phi(c) == (rademacher_phi(a) + rademacher_phi(b)
                                         - 3 * sign(a.c * b.c * c.c))
            done += 1
    _report(7, "sqrt_integer(t)^2 = t for t <= 50, Dedekind reciprocity for "
               "coprime h < k <= 50, Rademacher cocycle on 500 pairs, exact")


def test_criterion_8_extension_and_word_independence():
    rng = random.Random(47)
    lines = []
    while len(lines) < 60:
        x, y = rng.randrange(-9, 10), rng.randrange(-9, 10)
        if x or y:
            lines.append(LagLine(x, y))
    for _ in range(500):
        tri = [rng.choice(lines) for _ in range(3)]
        s = wall_sigma(*tri)
        assert s in (-1, 0, 1)
        if tri[0] == tri[1] or tri[1] == tri[2] or tri[0] == tri[2]:
            assert s == 0
    for _ in range(1000):
        ws = [WeightedClass(random_mapping_class(rng, max_height=500),
                            rng.randrange(-3, 4)) for _ in range(3)]
        assert compose(ws[2], compose(ws[1], ws[0])) == \
            compose(compose(ws[2], ws[1]), ws[0])
    done = 0
    while done < 200:
        p = rng.choice([5, 6, 7, 10, 12])
        th = theory(p)
        f = random_mapping_class(rng, max_height=400)
        g = random_mapping_class(rng, max_height=40)
        w1 = decompose(f)
        w2 = GenWord(tuple(decompose(f * g)) + tuple(decompose(g.inverse())))
        f1, m1 = evaluate_word(th, w1, 0)
        f2, m2 = evaluate_word(th, w2, 0)
        assert f1 == f2 == f and m1 == m2
        done += 1
    _report(8, "sigma in {-1,0,1} vanishing on repeats, 1000 associativity "
               "triples, 200 word-independence checks, all exact")


def test_criterion_9_finite_image_closure():
    golden = {4: 1, 5: 1200, 6: 192}
    for p, want in golden.items():
        res = group_closure(theory(p), cap=10 ** 6, census=False)
        assert res is not None, f"closure cap exceeded at p={p}"
        assert res["order"] == want, (p, res)
    _report(9, f"image closures stabilize: orders {golden} (golden, within "
               f"10^6-element cap)")
