"""Small exact matrices and vectors over a Field.

Vectors are plain tuples of FieldElem. Matrices act on column vectors, so the
columns of a matrix are the images of the basis vectors and products compose
left-to-right in the usual operator order: (M*N)(x) = M(N(x)).
"""

from __future__ import annotations

from fractions import Fraction

from .errors import FieldError
from .field import Field, FieldElem


def _coerce_entry(field: Field, x) -> FieldElem:
    if isinstance(x, FieldElem):
        if x.field is field or x.field.same_structure(field):
            return x
        if x.field.ncomp == 1 and x.field.base.n == field.base.n:
            return FieldElem(field, (x.parts[0], field.base.zero()))
        raise FieldError("matrix entry from a different field")
    if isinstance(x, (int, Fraction)):
        return field.from_rational(x)
    raise FieldError(f"cannot use {type(x).__name__} as a matrix entry")


class Mat:
    __slots__ = ("field", "n", "rows")

    def __init__(self, field: Field, rows):
        self.field = field
        self.rows = tuple(tuple(_coerce_entry(field, x) for x in r) for r in rows)
        self.n = len(self.rows)
        for r in self.rows:
            if len(r) != self.n:
                raise FieldError("matrix must be square")

    @classmethod
    def identity(cls, field: Field, n: int) -> "Mat":
        one, zero = field.one(), field.zero()
        return cls(field, [[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, field: Field, n: int) -> "Mat":
        z = field.zero()
        return cls(field, [[z] * n for _ in range(n)])

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        body = "; ".join(", ".join(repr(x) for x in r) for r in self.rows)
        return f"[{body}]"

    def __add__(self, other):
        return Mat(self.field, [[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other):
        return Mat(self.field, [[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self):
        return Mat(self.field, [[-a for a in r] for r in self.rows])

    def __mul__(self, other):
        if isinstance(other, Mat):
            n = self.n
            cols = list(zip(*other.rows))
            out = []
            for r in self.rows:
                row = []
                for c in cols:
                    acc = r[0] * c[0]
                    for k in range(1, n):
                        acc = acc + r[k] * c[k]
                    row.append(acc)
                out.append(row)
            return Mat(self.field, out)
        if isinstance(other, (int, Fraction, FieldElem)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, FieldElem)):
            return self.scale(other)
        return NotImplemented

    def scale(self, s) -> "Mat":
        s = _coerce_entry(self.field, s)
        return Mat(self.field, [[s * a for a in r] for r in self.rows])

    def apply(self, vec) -> tuple:
        """Image of a column vector."""
        vec = tuple(_coerce_entry(self.field, x) for x in vec)
        out = []
        for r in self.rows:
            acc = r[0] * vec[0]
            for k in range(1, self.n):
                acc = acc + r[k] * vec[k]
            out.append(acc)
        return tuple(out)

    def transpose(self) -> "Mat":
        return Mat(self.field, list(zip(*self.rows)))

    def map_entries(self, f) -> "Mat":
        return Mat(self.field, [[f(x) for x in r] for r in self.rows])

    def trace(self) -> FieldElem:
        acc = self.rows[0][0]
        for i in range(1, self.n):
            acc = acc + self.rows[i][i]
        return acc

    def is_identity(self) -> bool:
        one, zero = self.field.one(), self.field.zero()
        return all(
            self.rows[i][j] == (one if i == j else zero)
            for i in range(self.n)
            for j in range(self.n)
        )

    def pow(self, k: int) -> "Mat":
        if k < 0:
            return self.inverse().pow(-k)
        out = Mat.identity(self.field, self.n)
        b = self
        while k:
            if k & 1:
                out = out * b
            b = b * b
            k >>= 1
        return out

    def det(self) -> FieldElem:
        n = self.n
        if n == 1:
            return self.rows[0][0]
        if n == 2:
            (a, b), (c, d) = self.rows
            return a * d - b * c
        acc = self.field.zero()
        top = self.rows[0]
        for j in range(n):
            if not top[j]:
                continue
            minor = Mat(self.field, [
                [self.rows[i][k] for k in range(n) if k != j]
                for i in range(1, n)
            ])
            term = top[j] * minor.det()
            acc = acc + term if j % 2 == 0 else acc - term
        return acc

    def inverse(self) -> "Mat":
        n = self.n
        field = self.field
        aug = [list(self.rows[i]) + list(Mat.identity(field, n).rows[i]) for i in range(n)]
        for col in range(n):
            piv = next((r for r in range(col, n) if aug[r][col]), None)
            if piv is None:
                raise FieldError("matrix is singular")
            aug[col], aug[piv] = aug[piv], aug[col]
            pinv = aug[col][col].inv()
            aug[col] = [x * pinv for x in aug[col]]
            for r in range(n):
                if r != col and aug[r][col]:
                    f = aug[r][col]
                    aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
        return Mat(field, [row[n:] for row in aug])

    def rank(self) -> int:
        return self.n - len(self.kernel())

    def kernel(self) -> list[tuple]:
        """Basis of the right null space, as column vectors."""
        n = self.n
        field = self.field
        rows = [list(r) for r in self.rows]
        pivots = []
        r = 0
        for col in range(n):
            piv = next((i for i in range(r, n) if rows[i][col]), None)
            if piv is None:
                continue
            rows[r], rows[piv] = rows[piv], rows[r]
            pinv = rows[r][col].inv()
            rows[r] = [x * pinv for x in rows[r]]
            for i in range(n):
                if i != r and rows[i][col]:
                    f = rows[i][col]
                    rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
            pivots.append(col)
            r += 1
            if r == n:
                break
        free = [c for c in range(n) if c not in pivots]
        basis = []
        for fc in free:
            v = [field.zero()] * n
            v[fc] = field.one()
            for i, pc in enumerate(pivots):
                v[pc] = -rows[i][fc]
            basis.append(tuple(v))
        return basis


def vec_add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(s, v):
    return tuple(s * a for a in v)


def vec_is_zero(v) -> bool:
    return not any(v)


def mat_from_cols(field: Field, cols) -> Mat:
    return Mat(field, list(zip(*cols)))
