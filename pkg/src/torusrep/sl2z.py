"""Integer 2x2 modular group machinery.

Mapping classes of the torus are identified with SL(2,Z) via their
action on homology in the (meridian, longitude) basis, with

    S = [0 -1]    T = [1 1]
        [1  0],       [0 1].

This module provides exact generator-word decomposition (Euclidean
reduction on the first column), Dedekind sums, and the integer-valued
Rademacher Phi function used by the closed-formula representation.
"""

from fractions import Fraction
from math import gcd


class Mat2Z:
    """An element of SL(2,Z); determinant 1 is checked at construction."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a, b, c, d):
        if a * d - b * c != 1:
            raise ValueError(f"determinant of ({a},{b};{c},{d}) is not 1")
        self.a, self.b, self.c, self.d = a, b, c, d

    def __mul__(self, other):
        return Mat2Z(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self):
        return Mat2Z(self.d, -self.b, -self.c, self.a)

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        result = identity()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def entries(self):
        return (self.a, self.b, self.c, self.d)

    def height(self):
        return max(abs(v) for v in self.entries())

    def trace(self):
        return self.a + self.d

    def __eq__(self, other):
        return isinstance(other, Mat2Z) and self.entries() == other.entries()

    def __hash__(self):
        return hash(self.entries())

    def __repr__(self):
        return f"Mat2Z({self.a},{self.b};{self.c},{self.d})"

    @staticmethod
    def parse(text):
        """Parse the CLI matrix format "a,b;c,d"."""
        try:
            rows = text.strip().split(";")
            (a, b), (c, d) = (tuple(int(v) for v in r.split(",")) for r in rows)
        except Exception:
            raise ValueError(f'matrix must look like "a,b;c,d", got {text!r}')
        return Mat2Z(a, b, c, d)


def identity():
    return Mat2Z(1, 0, 0, 1)


S = Mat2Z(0, -1, 1, 0)
T = Mat2Z(1, 1, 0, 1)
FIG8 = Mat2Z(2, 1, 1, 1)  # standard once-punctured-torus bundle monodromy


def t_power(k):
    return Mat2Z(1, k, 0, 1)


class GenWord:
    """A word in the generators: tokens 'S' or ('T', k) with k != 0.

    Multiplying the tokens left to right reproduces the source matrix.
    """

    __slots__ = ("tokens",)

    def __init__(self, tokens):
        self.tokens = tuple(tokens)

    def matrix(self):
        m = identity()
        for tok in self.tokens:
            m = m * (S if tok == "S" else t_power(tok[1]))
        return m

    def __iter__(self):
        return iter(self.tokens)

    def __len__(self):
        return len(self.tokens)

    def __repr__(self):
        parts = ["S" if t == "S" else f"T^{t[1]}" for t in self.tokens]
        return " ".join(parts) if parts else "(empty)"


def decompose(m):
    """Write m as a word in S and T^k, verified by re-multiplication.

    Euclidean descent on the first column: left-multiplying by T^-q
    with the balanced quotient q = round(a/c) leaves |a - qc| <= |c|/2,
    then S^-1 swaps rows, so |c| at least halves per round and the word
    length is O(log max|entry|).  Each left factor X contributes its
    inverse as the next token, since X_n ... X_1 m = R implies
    m = inv(X_1) ... inv(X_n) R.
    """
    a, b, c, d = m.entries()
    tokens = []
    while c != 0:
        q = (2 * a + c) // (2 * c)  # round(a/c), ties toward +inf
        if q:
            a, b = a - q * c, b - q * d
            tokens.append(("T", q))  # inverse of the applied T^-q
        # S^-1 (a,b;c,d) = (c, d; -a, -b); inverse token is S
        a, b, c, d = c, d, -a, -b
        tokens.append("S")
    # remaining matrix is (1, b; 0, 1) or (-1, b; 0, -1) = S^2 (1, -b; 0, 1)
    if a == -1:
        tokens.extend(["S", "S"])
        b = -b
    if b:
        tokens.append(("T", b))
    word = GenWord(tokens)
    assert word.matrix() == m, "decomposition failed to reproduce the matrix"
    return word


def dedekind_sum(h, k):
    """Dedekind sum s(h,k) = sum_{i=1}^{k-1} ((i/k))((hi/k)), exact.

    ((x)) is the sawtooth x - floor(x) - 1/2 for non-integer x, else 0.
    Computed directly from the definition with integer arithmetic:
    for 0 < i < k, ((i/k)) = (2i - k)/(2k).
    """
    if k < 1:
        raise ValueError("k must be a positive integer")
    if gcd(h, k) != 1:
        raise ValueError(f"gcd({h},{k}) != 1")
    total = 0
    for i in range(1, k):
        m = (h * i) % k
        if m:
            total += (2 * i - k) * (2 * m - k)
    return Fraction(total, 4 * k * k)


def rademacher_phi(m):
    """The Rademacher Phi function on SL(2,Z), an exact integer.

    Phi(a,b;c,d) = (a+d)/c - 12*sign(c)*s(d,|c|) for c != 0, and b/d
    for c = 0 (Rademacher-Grosswald normalization).  The result is
    asserted to be an integer; a non-integer signals a fault.
    """
    a, b, c, d = m.entries()
    if c == 0:
        val = Fraction(b, d)
    else:
        sgn = 1 if c > 0 else -1
        val = Fraction(a + d, c) - 12 * sgn * dedekind_sum(d, abs(c))
    assert val.denominator == 1, f"Phi({m}) = {val} is not an integer"
    return int(val)


def random_word(rng, length):
    """A random word in S, T^k with small k; returns (GenWord, Mat2Z)."""
    tokens = []
    for _ in range(length):
        if rng.random() < 0.45:
            tokens.append("S")
        else:
            k = rng.choice([-3, -2, -1, 1, 2, 3])
            tokens.append(("T", k))
    word = GenWord(tokens)
    return word, word.matrix()


def random_mapping_class(rng, max_height=1000, min_height=0, require_c=False,
                         max_word=24):
    """Sample a mapping class as a bounded random word, height-filtered.

    Uniform sampling of SL(2,Z) by entry height is ill-defined; random
    bounded words with rejection give reproducible, well-spread samples.
    """
    while True:
        length = rng.randrange(2, max_word)
        _, m = random_word(rng, length)
        if m.height() > max_height or m.height() < min_height:
            continue
        if require_c and m.c == 0:
            continue
        return m
