"""Square matrices of exact cyclotomic numbers.

RepMatrix is the carrier for representation values: a square array of
CycNum sharing one host order, tagged with the theory level p and the
basis the rows/columns are indexed by.  All operations are exact.
"""

from fractions import Fraction
from math import lcm

from .cyclotomic import CycNum


class RepMatrix:
    """Square matrix over Q(zeta_order), tagged with level and basis."""

    __slots__ = ("p", "basis", "order", "entries", "labels")

    def __init__(self, p, basis, order, entries, labels=None):
        entries = tuple(tuple(row) for row in entries)
        dim = len(entries)
        for row in entries:
            assert len(row) == dim, "matrix must be square"
            for e in row:
                assert e.order == order, "all entries must share the host order"
        self.p = p
        self.basis = basis
        self.order = order
        self.entries = entries
        self.labels = tuple(labels) if labels is not None else tuple(range(dim))

    @property
    def dim(self):
        return len(self.entries)

    def _compatible(self, other):
        assert isinstance(other, RepMatrix)
        assert (self.p, self.basis, self.order, self.dim) == \
               (other.p, other.basis, other.order, other.dim), \
            "incompatible matrices"

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CycNum)):
            return self.scale(other)
        self._compatible(other)
        n = self.dim
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = self.entries[i][0] * other.entries[0][j]
                for k in range(1, n):
                    acc = acc + self.entries[i][k] * other.entries[k][j]
                row.append(acc)
            rows.append(row)
        return RepMatrix(self.p, self.basis, self.order, rows, self.labels)

    __rmul__ = __mul__

    def scale(self, c):
        return RepMatrix(self.p, self.basis, self.order,
                         [[e * c for e in row] for row in self.entries],
                         self.labels)

    def mul_monomial(self, exp):
        """Multiply every entry by zeta_order^exp (cheap)."""
        return RepMatrix(self.p, self.basis, self.order,
                         [[e.mul_monomial(exp) for e in row] for row in self.entries],
                         self.labels)

    def conj_transpose(self):
        n = self.dim
        return RepMatrix(self.p, self.basis, self.order,
                         [[self.entries[j][i].conj() for j in range(n)]
                          for i in range(n)],
                         self.labels)

    def transpose(self):
        n = self.dim
        return RepMatrix(self.p, self.basis, self.order,
                         [[self.entries[j][i] for j in range(n)] for i in range(n)],
                         self.labels)

    def __pow__(self, k):
        assert k >= 0
        result = RepMatrix.identity_like(self)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    @staticmethod
    def identity_like(m):
        n = m.dim
        one = CycNum.from_rational(1, m.order)
        zero = CycNum.zero(m.order)
        return RepMatrix(m.p, m.basis, m.order,
                         [[one if i == j else zero for j in range(n)]
                          for i in range(n)],
                         m.labels)

    def is_identity(self):
        n = self.dim
        for i in range(n):
            for j in range(n):
                e = self.entries[i][j]
                if i == j:
                    if not e.is_rational() or e.as_rational() != 1:
                        return False
                elif not e.is_zero():
                    return False
        return True

    def as_scalar(self):
        """The scalar c if self == c * Id, else None."""
        n = self.dim
        c = self.entries[0][0]
        for i in range(n):
            for j in range(n):
                e = self.entries[i][j]
                if i == j:
                    if e != c:
                        return None
                elif not e.is_zero():
                    return None
        return c

    def is_symmetric(self):
        n = self.dim
        return all(self.entries[i][j] == self.entries[j][i]
                   for i in range(n) for j in range(i + 1, n))

    def is_unitary(self):
        return (self * self.conj_transpose()).is_identity()

    def lift(self, m):
        return RepMatrix(self.p, self.basis, m,
                         [[e.lift(m) for e in row] for row in self.entries],
                         self.labels)

    def denominator_lcm(self):
        out = 1
        for row in self.entries:
            for e in row:
                out = lcm(out, e.denominator_bound)
        return out

    def __eq__(self, other):
        if not isinstance(other, RepMatrix):
            return NotImplemented
        if (self.order, self.dim) != (other.order, other.dim):
            raise ValueError("comparing matrices over different hosts; lift first")
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.key())

    def key(self):
        """Canonical hashable key (exact coordinates)."""
        return tuple((e.den,) + e.nums for row in self.entries for e in row)

    def embed(self, k=1):
        """Complex float preview of the matrix (numpy array)."""
        import numpy as np
        return np.array([[e.embed(k) for e in row] for row in self.entries])

    def to_dict(self):
        return {
            "p": self.p,
            "basis": self.basis,
            "order": self.order,
            "dim": self.dim,
            "labels": list(self.labels),
            "entries": [[e.to_dict() for e in row] for row in self.entries],
        }

    def __repr__(self):
        return (f"RepMatrix(p={self.p}, basis={self.basis}, order={self.order}, "
                f"dim={self.dim})")
