"""Exact arithmetic in cyclotomic fields Q(zeta_N).

Elements are stored in canonical form: a vector of phi(N) rational
coordinates on the power basis {1, zeta_N, ..., zeta_N^(phi(N)-1)},
always reduced modulo the N-th cyclotomic polynomial Phi_N.  Since the
power basis is an integral basis of the ring of integers Z[zeta_N],
the least common denominator of the coordinates is a genuine
ring-of-integers membership test (denominator_bound below).

Internally a CycNum keeps integer numerators plus one common
denominator.  Multiplication and basis reduction run on numpy int64
vectors whenever a conservative bound proves no overflow is possible,
and fall back to arbitrary-precision Python integers otherwise, so
results are exact in all cases.  No floating point is ever used except
in embed(), which exists only for human-facing previews and heuristics.
"""

from fractions import Fraction
from math import gcd
import cmath

import numpy as np

# int64 accumulations are allowed only when bounded by this
_I64_SAFE = 1 << 62


def factorize(n):
    """Prime factorization as a dict prime -> exponent (trial division)."""
    assert n >= 1
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def euler_phi(n):
    phi = 1
    for p, a in factorize(n).items():
        phi *= (p - 1) * p ** (a - 1)
    return phi


def _poly_divexact(num, den):
    """Exact division of integer polynomials (lists, low degree first)."""
    num = list(num)
    dn = len(den) - 1
    assert den[-1] == 1, "divisor must be monic"
    q = [0] * (len(num) - dn)
    for i in range(len(q) - 1, -1, -1):
        c = num[i + dn]
        if c:
            q[i] = c
            for j, dj in enumerate(den):
                num[i + j] -= c * dj
    assert not any(num), "non-exact polynomial division"
    return q


def _poly_stretch(poly, k):
    """p(x) -> p(x^k)."""
    out = [0] * ((len(poly) - 1) * k + 1)
    for i, c in enumerate(poly):
        out[i * k] = c
    return out


def cyclotomic_poly(n):
    """Coefficients of Phi_n, low degree first, as a tuple of ints.

    Built from Phi_1 = x - 1 by Phi_{mq}(x) = Phi_m(x^q)/Phi_m(x) for
    each new prime q, then Phi_n(x) = Phi_rad(n)(x^(n/rad)).
    """
    fac = factorize(n)
    poly = [-1, 1]
    rad = 1
    for q in sorted(fac):
        poly = _poly_divexact(_poly_stretch(poly, q), poly)
        rad *= q
    if n // rad > 1:
        poly = _poly_stretch(poly, n // rad)
    return tuple(poly)


class _Order:
    """Cached per-order data: Phi_N and the power-basis reduction table.

    red[k - phi] holds the coordinates of zeta_N^k for phi <= k < N.
    Rows are kept as int64 when their height allows exact int64
    folding, with a parallel Python-int copy built on demand.
    """

    def __init__(self, n):
        self.n = n
        self.cyclo = cyclotomic_poly(n)
        self.phi = len(self.cyclo) - 1
        phi = self.phi
        if phi == n:  # n == 1
            self.red = np.zeros((0, phi), dtype=np.int64)
            self.red_max = 0
        else:
            tail = np.array([-c for c in self.cyclo[:phi]], dtype=np.int64)
            rows = np.empty((n - phi, phi), dtype=np.int64)
            rows[0] = tail
            hi = int(np.abs(tail).max())
            for k in range(1, n - phi):
                prev = rows[k - 1]
                top = prev[phi - 1]
                row = rows[k]
                row[0] = top * tail[0]
                row[1:] = prev[:phi - 1] + top * tail[1:]
                hi = max(hi, int(np.abs(row).max()))
                # reduction-row heights stay tiny for the orders used
                # here; guard anyway so int64 arithmetic stays exact
                assert hi < (1 << 40), f"reduction table overflow at N={n}"
            self.red = rows
            self.red_max = hi
        self._red_py = None
        self._red_f64 = None

    def red_py(self):
        if self._red_py is None:
            self._red_py = [tuple(int(v) for v in row) for row in self.red]
        return self._red_py

    def red_f64(self):
        # float64 mirror of the reduction table: BLAS matvec, still exact
        # whenever every accumulated value stays below 2^53
        if self._red_f64 is None:
            self._red_f64 = self.red.astype(np.float64)
        return self._red_f64


_order_cache = {}
_ORDER_CACHE_SMALL = 4096


def _order(n):
    """Per-order data, cached (small orders forever, large ones LRU-ish)."""
    info = _order_cache.get(n)
    if info is None:
        info = _Order(n)
        if n > _ORDER_CACHE_SMALL:
            # keep at most two big tables alive, they can be ~100MB
            big = [m for m in _order_cache if m > _ORDER_CACHE_SMALL]
            if len(big) >= 2:
                del _order_cache[min(big, key=lambda m: _order_cache[m]._stamp)]
        _order_cache[n] = info
    info._stamp = _order_stamp()
    return info


_stamp_counter = [0]


def _order_stamp():
    _stamp_counter[0] += 1
    return _stamp_counter[0]


def _content(nums):
    g = 0
    for v in nums:
        g = gcd(g, v)
        if g == 1:
            return 1
    return g


def _fold_buffer(info, buf, den):
    """Reduce a coefficient buffer on exponents [0, N) to canonical form."""
    if isinstance(buf, np.ndarray):
        phi = info.phi
        if len(buf) > phi and info.red_max:
            high = buf[phi:]
            bound = int(np.abs(high).sum()) * info.red_max + int(np.abs(buf[:phi]).max(initial=0))
            if bound < (1 << 53):
                low = buf[:phi] + (high.astype(np.float64) @ info.red_f64()[: len(high)]).astype(np.int64)
                return CycNum._make(info.n, [int(v) for v in low], den)
            if bound < _I64_SAFE:
                low = buf[:phi] + high @ info.red[: len(high)]
                return CycNum._make(info.n, [int(v) for v in low], den)
        buf = [int(v) for v in buf]
    phi = info.phi
    low = buf[:phi]
    if len(buf) > phi:
        high = buf[phi:]
        done = False
        if info.red_max:
            try:
                hv = np.array(high, dtype=np.int64)
            except OverflowError:
                hv = None
            if hv is not None:
                bound = int(np.abs(hv).sum()) * info.red_max
                if bound < _I64_SAFE and all(abs(v) < _I64_SAFE for v in low):
                    lv = np.array(low, dtype=np.int64)
                    lv = lv + hv @ info.red[: len(hv)]
                    low = [int(v) for v in lv]
                    done = True
        if not done:
            rows = info.red_py()
            low = list(low)
            for k, c in enumerate(high):
                if c:
                    row = rows[k]
                    for j in range(phi):
                        if row[j]:
                            low[j] += c * row[j]
    else:
        low = list(low) + [0] * (phi - len(low))
    return CycNum._make(info.n, low, den)


class CycNum:
    """An element of Q(zeta_N) in canonical power-basis form.

    Immutable; arithmetic between elements requires equal order (use
    lift() to move into a larger field first).  `nums` are integer
    numerators over the single denominator `den`, reduced so that
    gcd(gcd(nums), den) == 1 and den >= 1.
    """

    __slots__ = ("order", "nums", "den")

    def __init__(self, order, nums, den):
        self.order = order
        self.nums = nums
        self.den = den

    @staticmethod
    def _make(order, nums, den):
        if den < 0:
            den = -den
            nums = [-v for v in nums]
        g = _content(nums)
        if g == 0:
            return CycNum(order, tuple(nums), 1)
        g = gcd(g, den)
        if g > 1:
            nums = [v // g for v in nums]
            den //= g
        return CycNum(order, tuple(nums), den)

    # ---------- constructors ----------

    @staticmethod
    def zero(order):
        return CycNum(order, (0,) * _order(order).phi, 1)

    @staticmethod
    def from_rational(q, order):
        q = Fraction(q)
        phi = _order(order).phi
        nums = [q.numerator] + [0] * (phi - 1)
        return CycNum._make(order, nums, q.denominator)

    @staticmethod
    def from_terms(order, terms, den=1):
        """Sum of coef * zeta_order^exp from {exp: coef}, coef int or Fraction.

        Exponents are taken mod order (zeta^N = 1 holds before reduction
        mod Phi_N, so this is exact).
        """
        info = _order(order)
        common = den
        for c in terms.values():
            if isinstance(c, Fraction):
                common = common * c.denominator // gcd(common, c.denominator)
        buf = [0] * order
        for e, c in terms.items():
            if isinstance(c, Fraction):
                buf[e % order] += c.numerator * (common // c.denominator)
            else:
                buf[e % order] += c * (common // den)
        return _fold_buffer(info, buf, common)

    # ---------- basic views ----------

    def coords(self):
        """Coordinates as Fractions on the power basis."""
        return tuple(Fraction(v, self.den) for v in self.nums)

    def is_zero(self):
        return not any(self.nums)

    def is_rational(self):
        return not any(self.nums[1:])

    def as_rational(self):
        assert self.is_rational()
        return Fraction(self.nums[0], self.den)

    @property
    def denominator_bound(self):
        """Least d >= 1 with d*self in Z[zeta_N] (power basis is integral)."""
        return self.den

    # ---------- arithmetic ----------

    def _check(self, other):
        if isinstance(other, CycNum):
            if other.order != self.order:
                raise ValueError(
                    f"order mismatch: {self.order} vs {other.order}; lift explicitly"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return CycNum.from_rational(other, self.order)
        return None

    def __add__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        da, db = self.den, other.den
        g = gcd(da, db)
        ma, mb = db // g, da // g
        nums = [a * ma + b * mb for a, b in zip(self.nums, other.nums)]
        return CycNum._make(self.order, nums, da * ma)

    __radd__ = __add__

    def __neg__(self):
        return CycNum(self.order, tuple(-v for v in self.nums), self.den)

    def __sub__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return CycNum._make(
                self.order, [v * q.numerator for v in self.nums], self.den * q.denominator
            )
        other = self._check(other)
        if other is None:
            return NotImplemented
        info = _order(self.order)
        a, b = self.nums, other.nums
        conv = _conv(a, b)
        return _fold_buffer(info, conv, self.den * other.den)

    __rmul__ = __mul__

    def mul_monomial(self, exp):
        """self * zeta_N^exp -- cheap shift modulo x^N - 1, then reduce."""
        n = self.order
        exp %= n
        if exp == 0:
            return self
        return self.mul_sparse({exp: 1})

    def mul_sparse(self, terms, den=1):
        """self * (sum coef * zeta^exp) / den with integer coefs; exact."""
        n = self.order
        mx = max(abs(v) for v in self.nums) if any(self.nums) else 0
        csum = sum(abs(c) for c in terms.values())
        if mx and csum and mx * csum < _I64_SAFE:
            try:
                padded = np.zeros(n, dtype=np.int64)
                padded[: len(self.nums)] = self.nums
                buf = np.zeros(n, dtype=np.int64)
                for e, c in terms.items():
                    if c:
                        buf += c * np.roll(padded, e % n)
                return _fold_buffer(_order(n), buf, self.den * den)
            except OverflowError:
                pass
        buf = [0] * n
        for e, c in terms.items():
            if not c:
                continue
            e %= n
            for j, v in enumerate(self.nums):
                if v:
                    buf[(j + e) % n] += c * v
        return _fold_buffer(_order(n), buf, self.den * den)

    def inv(self):
        """Multiplicative inverse via an exact linear solve.

        Single-monomial elements invert in O(phi); the general case
        solves the phi x phi multiplication system over Q and is meant
        for small host orders.
        """
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic number")
        nz = [j for j, v in enumerate(self.nums) if v]
        if len(nz) == 1:
            j = nz[0]
            inv_mono = CycNum.root_of_unity(self.order, -j)
            return inv_mono * Fraction(self.den, self.nums[j])
        info = _order(self.order)
        phi = info.phi
        if phi > 600:
            raise ValueError(
                f"refusing dense inverse at order {self.order} (phi={phi})"
            )
        # columns of the multiplication-by-self matrix: self * zeta^j
        mat = [[Fraction(0)] * phi for _ in range(phi)]
        acc = self
        for j in range(phi):
            for i, v in enumerate(acc.nums):
                mat[i][j] = Fraction(v, acc.den)
            acc = acc.mul_monomial(1)
        rhs = [Fraction(1)] + [Fraction(0)] * (phi - 1)
        sol = _solve_fraction(mat, rhs)
        common = 1
        for s in sol:
            common = common * s.denominator // gcd(common, s.denominator)
        nums = [int(s * common) for s in sol]
        return CycNum._make(self.order, nums, common)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        other = self._check(other)
        if other is None:
            return NotImplemented
        return self * other.inv()

    def __pow__(self, k):
        if k < 0:
            return self.inv() ** (-k)
        result = CycNum.from_rational(1, self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    # ---------- Galois / field structure ----------

    def conj(self):
        """Complex conjugation, i.e. the Galois map zeta -> zeta^-1."""
        return self.galois(-1)

    def galois(self, k):
        """Ring automorphism zeta_N -> zeta_N^k; requires gcd(k, N) = 1."""
        n = self.order
        k %= n
        if gcd(k, n) != 1:
            raise ValueError(f"galois exponent {k} not coprime to {n}")
        if k == 1:
            return self
        terms = {}
        for j, v in enumerate(self.nums):
            if v:
                terms[(j * k) % n] = v
        return CycNum.from_terms(n, terms, self.den)

    def lift(self, m):
        """The same field element re-expressed at order m (order | m)."""
        n = self.order
        if m % n != 0:
            raise ValueError(f"cannot lift order {n} into non-multiple {m}")
        if m == n:
            return self
        step = m // n
        terms = {j * step: v for j, v in enumerate(self.nums) if v}
        return CycNum.from_terms(m, terms, self.den)

    # ---------- comparisons / hashing ----------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CycNum.from_rational(other, self.order)
        if not isinstance(other, CycNum):
            return NotImplemented
        if other.order != self.order:
            raise ValueError("comparing CycNum of different orders; lift first")
        return self.den == other.den and self.nums == other.nums

    def __hash__(self):
        return hash((self.order, self.den, self.nums))

    # ---------- numeric preview ----------

    def embed(self, k=1):
        """Complex image under zeta_N -> e^(2 pi i k / N), double precision."""
        n = self.order
        if gcd(k % n if n > 1 else 1, n) != 1:
            raise ValueError(f"embedding exponent {k} not coprime to {n}")
        z = cmath.exp(2j * cmath.pi * k / n)
        acc = 0j
        pw = 1 + 0j
        for v in self.nums:
            if v:
                acc += v * pw
            pw *= z
        return acc / self.den

    def __repr__(self):
        terms = []
        for j, v in enumerate(self.nums):
            if v:
                q = Fraction(v, self.den)
                if j == 0:
                    terms.append(str(q))
                else:
                    mono = f"z{j}" if j > 1 else "z"
                    terms.append(f"{q}*{mono}" if abs(q) != 1 else
                                 (f"-{mono}" if q < 0 else mono))
        body = " + ".join(terms) if terms else "0"
        return f"Cyc({self.order}: {body})"

    # ---------- serialization ----------

    def to_dict(self):
        return {
            "order": self.order,
            "coords": [[str(v), str(self.den)] for v in self.nums],
        }

    @staticmethod
    def from_dict(d):
        order = int(d["order"])
        coords = [Fraction(int(num), int(den)) for num, den in d["coords"]]
        phi = _order(order).phi
        if len(coords) != phi:
            raise ValueError(f"expected {phi} coordinates at order {order}")
        common = 1
        for c in coords:
            common = common * c.denominator // gcd(common, c.denominator)
        nums = [int(c * common) for c in coords]
        return CycNum._make(order, nums, common)

    # ---------- named constructors ----------

    @staticmethod
    def root_of_unity(order, k):
        """zeta_order^k in canonical form."""
        assert order >= 1
        return CycNum.from_terms(order, {k % order: 1})


def _conv(a, b):
    """Exact integer convolution, numpy int64 when provably safe."""
    la, lb = len(a), len(b)
    ma = max(abs(v) for v in a) if la else 0
    mb = max(abs(v) for v in b) if lb else 0
    if ma and mb and ma * mb * min(la, lb) < _I64_SAFE:
        try:
            av = np.array(a, dtype=np.int64)
            bv = np.array(b, dtype=np.int64)
            return [int(v) for v in np.convolve(av, bv)]
        except OverflowError:
            pass
    out = [0] * (la + lb - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _solve_fraction(mat, rhs):
    """Gaussian elimination over Fractions; mat is modified in place."""
    n = len(mat)
    for col in range(n):
        piv = next((r for r in range(col, n) if mat[r][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular system")
        mat[col], mat[piv] = mat[piv], mat[col]
        rhs[col], rhs[piv] = rhs[piv], rhs[col]
        inv = 1 / mat[col][col]
        mat[col] = [v * inv for v in mat[col]]
        rhs[col] *= inv
        for r in range(n):
            if r != col and mat[r][col]:
                f = mat[r][col]
                mat[r] = [v - f * w for v, w in zip(mat[r], mat[col])]
                rhs[r] -= f * rhs[col]
    return rhs


# ---------- module-level operations ----------


def root_of_unity(order, k):
    return CycNum.root_of_unity(order, k)


def lift(x, m):
    return x.lift(m)


def galois(x, k):
    return x.galois(k)


def denominator_bound(x):
    return x.denominator_bound


def embed_complex(x, k=1):
    return x.embed(k)


def subfield_fixing_exponents(n, s):
    """Generators of the Galois subgroup {k mod N : k = 1 mod s} fixing Q(zeta_s).

    Returns a short list of exponents whose galois() maps generate the
    subgroup; invariance under these certifies membership in Q(zeta_s).
    """
    if n % s != 0:
        raise ValueError(f"{s} does not divide host order {n}")
    target = euler_phi(n) // euler_phi(s)
    gens = []
    seen = {1}
    for k in range(1 + s, n, s):
        if len(seen) >= target:
            break
        if gcd(k, n) != 1 or k in seen:
            continue
        gens.append(k)
        frontier = list(seen)
        for a in frontier:
            v = a
            while True:
                v = (v * k) % n
                if v in seen:
                    break
                seen.add(v)
                frontier.append(v)
        # recompute closure of the whole generating set
        closure = {1}
        queue = [1]
        while queue:
            a = queue.pop()
            for g in gens:
                b = (a * g) % n
                if b not in closure:
                    closure.add(b)
                    queue.append(b)
        seen = closure
    assert len(seen) == target
    return gens


def in_subfield(x, s):
    """True iff x lies in Q(zeta_s) inside Q(zeta_N) (s must divide N)."""
    n = x.order
    if n == s:
        return True
    for k in subfield_fixing_exponents(n, s):
        if x.galois(k) != x:
            return False
    return True


def to_subfield(x, s):
    """Re-express x at order s; raises if x is not in Q(zeta_s)."""
    n = x.order
    if n == s:
        return x
    if not in_subfield(x, s):
        raise ValueError(f"element is not in Q(zeta_{s})")
    phi_s = _order(s).phi
    basis = [CycNum.root_of_unity(s, j).lift(n) for j in range(phi_s)]
    phi_n = _order(n).phi
    mat = [[Fraction(basis[j].nums[i], basis[j].den) for j in range(phi_s)]
           for i in range(phi_n)]
    rhs = [Fraction(v, x.den) for v in x.nums]
    sol = _solve_rectangular(mat, rhs)
    common = 1
    for c in sol:
        common = common * c.denominator // gcd(common, c.denominator)
    nums = [int(c * common) for c in sol]
    return CycNum._make(s, nums, common)


def _solve_rectangular(mat, rhs):
    """Solve an overdetermined consistent system over Fractions."""
    rows = len(mat)
    cols = len(mat[0])
    aug = [list(mat[r]) + [rhs[r]] for r in range(rows)]
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if aug[i][c] != 0), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [v * inv for v in aug[r]]
        for i in range(rows):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [v - f * w for v, w in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    for i in range(r, rows):
        if aug[i][cols] != 0:
            raise ValueError("inconsistent system")
    sol = [Fraction(0)] * cols
    for i, c in enumerate(pivots):
        sol[c] = aug[i][cols]
    return sol


def sqrt_integer(t):
    """An exact square root of t >= 1 in Z[zeta_4t] via a quadratic Gauss sum.

    Returns x of order 4t with x*x == t, integer coordinates, and
    positive image under zeta_4t -> e^(2 pi i / 4t):
        x = (1 - i)/4 * sum_{j mod 4t} zeta_4t^(j^2)
    The closed form is certified here by squaring exactly; the float
    cross-check lives in the test suite.
    """
    assert t >= 1
    n = 4 * t
    counts = {}
    for j in range(n):
        e = (j * j) % n
        counts[e] = counts.get(e, 0) + 1
    g = CycNum.from_terms(n, counts)
    # (1 - i)/4 with i = zeta_4t^t
    x = g.mul_sparse({0: 1, t: -1}, den=4)
    assert (x * x) == CycNum.from_rational(t, n), f"Gauss sqrt failed for t={t}"
    return x
