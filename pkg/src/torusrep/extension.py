"""The genus-one central extension of the mapping class group.

Elements are pairs (f, n) of a mapping class and an integer weight.
Composition adds weights plus a correction sigma, the signature of
Wall's form on the triple of Lagrangian images; at genus one a
Lagrangian subspace of H_1(torus) = Z^2 is a primitive line.

Conventions frozen here (and defended by golden tests downstream):
homology basis (meridian, longitude) with omega((1,0),(0,1)) = +1, the
default line is the meridian, and sigma((1,0),(0,1),(1,1)) = +1.
"""

from fractions import Fraction
from math import gcd

from .sl2z import identity


class LagLine:
    """A primitive integer line in Z^2, taken modulo sign."""

    __slots__ = ("x", "y")

    def __init__(self, x, y):
        if x == 0 and y == 0:
            raise ValueError("a Lagrangian line needs a nonzero vector")
        g = gcd(abs(x), abs(y))
        x, y = x // g, y // g
        if x < 0 or (x == 0 and y < 0):
            x, y = -x, -y
        self.x, self.y = x, y

    def vector(self):
        return (self.x, self.y)

    def __eq__(self, other):
        return isinstance(other, LagLine) and self.vector() == other.vector()

    def __hash__(self):
        return hash(self.vector())

    def __repr__(self):
        return f"LagLine({self.x},{self.y})"


MERIDIAN = LagLine(1, 0)
LONGITUDE = LagLine(0, 1)


def act(f, line):
    """Image of a line under a mapping class, re-normalized."""
    return LagLine(f.a * line.x + f.b * line.y, f.c * line.x + f.d * line.y)


def _omega(u, v):
    return u[0] * v[1] - u[1] * v[0]


def wall_sigma(l1, l2, l3):
    """Signature of Wall's form on W = {x1+x2+x3 = 0} in l1 + l2 + l3.

    Writing x_i = t_i v_i, W is the rational kernel of (t1,t2,t3) ->
    sum t_i v_i and the form is q(x, y) = omega(x1, y2).  The kernel
    has dimension 1 or 2; the form is diagonalized exactly over Q.
    Values lie in {-1, 0, 1} at genus one.
    """
    v = [l1.vector(), l2.vector(), l3.vector()]
    kernel = _integer_kernel(v)
    # Gram matrix of q on the kernel basis
    gram = []
    for s in kernel:
        row = []
        for t in kernel:
            row.append(Fraction(s[0] * t[1] * _omega(v[0], v[1])))
        gram.append(row)
    # the form must be symmetric on W; a failure means a bad basis
    for i in range(len(kernel)):
        for j in range(len(kernel)):
            assert gram[i][j] == gram[j][i], "Wall form not symmetric on W"
    sig = _signature(gram)
    assert -1 <= sig <= 1
    return sig


def _integer_kernel(v):
    """Basis of {t in Q^3 : sum t_i v_i = 0}, scaled to integers."""
    rows = [[v[0][0], v[1][0], v[2][0]], [v[0][1], v[1][1], v[2][1]]]
    basis = []
    # kernel via exact row reduction over Q
    mat = [[Fraction(x) for x in row] for row in rows]
    pivots = []
    r = 0
    for c in range(3):
        piv = next((i for i in range(r, len(mat)) if mat[i][c] != 0), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = 1 / mat[r][c]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(3) if c not in pivots]
    for fc in free:
        t = [Fraction(0)] * 3
        t[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            t[pc] = -mat[i][fc]
        lcm = 1
        for x in t:
            lcm = lcm * x.denominator // gcd(lcm, x.denominator)
        basis.append(tuple(int(x * lcm) for x in t))
    return basis


def _signature(gram):
    """Signature of a small symmetric rational matrix, exactly."""
    n = len(gram)
    mat = [row[:] for row in gram]
    sig = 0
    done = [False] * n
    for _ in range(n):
        piv = next((i for i in range(n) if not done[i] and mat[i][i] != 0), None)
        if piv is None:
            # no nonzero diagonal: either zero block or hyperbolic pair
            pair = None
            for i in range(n):
                if done[i]:
                    continue
                for j in range(n):
                    if not done[j] and mat[i][j] != 0:
                        pair = (i, j)
                        break
                if pair:
                    break
            if pair is None:
                return sig  # remaining block is zero
            # hyperbolic plane contributes (+1) + (-1) = 0
            i, j = pair
            done[i] = done[j] = True
            _clear(mat, done, i, j)
            continue
        d = mat[piv][piv]
        sig += 1 if d > 0 else -1
        done[piv] = True
        for i in range(n):
            if not done[i] and mat[i][piv]:
                f = mat[i][piv] / d
                for j in range(n):
                    mat[i][j] -= f * mat[piv][j]
                for j in range(n):
                    mat[j][i] = mat[i][j]
    return sig


def _clear(mat, done, i, j):
    # after splitting off a hyperbolic pair, project the rest away; for
    # the 2x2 cases arising at genus one this never runs on live rows
    n = len(mat)
    for r in range(n):
        if not done[r] and (mat[r][i] or mat[r][j]):
            raise AssertionError("unexpected coupling to a hyperbolic pair")


class WeightedClass:
    """A pair (f, n): mapping class plus integer weight."""

    __slots__ = ("f", "n")

    def __init__(self, f, n):
        self.f = f
        self.n = n

    def __eq__(self, other):
        return (isinstance(other, WeightedClass)
                and self.f == other.f and self.n == other.n)

    def __hash__(self):
        return hash((self.f, self.n))

    def __repr__(self):
        return f"WeightedClass({self.f}, n={self.n})"


def compose(w2, w1, line=MERIDIAN):
    """(f2,n2) after (f1,n1): weights add plus the sigma correction."""
    f21 = w2.f * w1.f
    sigma = wall_sigma(act(f21, line), act(w2.f, line), line)
    return WeightedClass(f21, w1.n + w2.n + sigma)


def word_weight(tokens_matrices, line=MERIDIAN):
    """Fold (g,0) factors left to right; returns the total WeightedClass."""
    acc = WeightedClass(identity(), 0)
    for g in tokens_matrices:
        acc = compose(acc, WeightedClass(g, 0), line)
    return acc
