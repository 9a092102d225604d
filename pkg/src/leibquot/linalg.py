"""Exact linear algebra over QQ and GF(p): row reduction, kernels, subspaces.

Matrices are tuples of row tuples.  A Subspace is stored as its reduced
row-echelon basis with pivot-leading ones and no zero rows, which makes the
representation canonical: two subspaces are equal iff their basis tuples
compare equal.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .fields import Field, check_same_field

Vector = tuple
Matrix = tuple


class DimensionError(ValueError):
    pass


def vec(field: Field, entries) -> Vector:
    return tuple(field.coerce(x) for x in entries)


def zero_vec(field: Field, n: int) -> Vector:
    z = field.zero()
    return (z,) * n


def is_zero_vec(field: Field, v: Vector) -> bool:
    z = field.zero()
    return all(x == z for x in v)


def vec_add(field: Field, a: Vector, b: Vector) -> Vector:
    return tuple(field.add(x, y) for x, y in zip(a, b, strict=True))


def vec_sub(field: Field, a: Vector, b: Vector) -> Vector:
    return tuple(field.sub(x, y) for x, y in zip(a, b, strict=True))


def vec_scale(field: Field, c, a: Vector) -> Vector:
    return tuple(field.mul(c, x) for x in a)


def mat(field: Field, rows) -> Matrix:
    return tuple(vec(field, r) for r in rows)


def zero_mat(field: Field, m: int, n: int) -> Matrix:
    return tuple(zero_vec(field, n) for _ in range(m))


def identity(field: Field, n: int) -> Matrix:
    z, o = field.zero(), field.one()
    return tuple(tuple(o if i == j else z for j in range(n)) for i in range(n))


def is_zero_mat(field: Field, m: Matrix) -> bool:
    return all(is_zero_vec(field, r) for r in m)


def mat_add(field: Field, a: Matrix, b: Matrix) -> Matrix:
    return tuple(vec_add(field, r, s) for r, s in zip(a, b, strict=True))


def mat_sub(field: Field, a: Matrix, b: Matrix) -> Matrix:
    return tuple(vec_sub(field, r, s) for r, s in zip(a, b, strict=True))


def mat_scale(field: Field, c, a: Matrix) -> Matrix:
    return tuple(vec_scale(field, c, r) for r in a)


def mat_mul(field: Field, a: Matrix, b: Matrix) -> Matrix:
    if a and b and len(a[0]) != len(b):
        raise DimensionError(f"cannot multiply {len(a)}x{len(a[0])} by {len(b)}x{len(b[0])}")
    bt = tuple(zip(*b)) if b else ()
    add, mul, zero = field.add, field.mul, field.zero()
    out = []
    for row in a:
        new = []
        for col in bt:
            s = zero
            for x, y in zip(row, col):
                if x != zero and y != zero:
                    s = add(s, mul(x, y))
            new.append(s)
        out.append(tuple(new))
    return tuple(out)


def mat_vec(field: Field, a: Matrix, v: Vector) -> Vector:
    if a and len(a[0]) != len(v):
        raise DimensionError(f"matrix has {len(a[0])} columns, vector has {len(v)}")
    add, mul, zero = field.add, field.mul, field.zero()
    out = []
    for row in a:
        s = zero
        for x, y in zip(row, v):
            if x != zero and y != zero:
                s = add(s, mul(x, y))
        out.append(s)
    return tuple(out)


def transpose(m: Matrix) -> Matrix:
    return tuple(zip(*m)) if m else ()


def flatten(m: Matrix) -> Vector:
    return tuple(x for row in m for x in row)


def unflatten(v: Vector, rows: int, cols: int) -> Matrix:
    return tuple(tuple(v[i * cols + j] for j in range(cols)) for i in range(rows))


def trace(field: Field, m: Matrix):
    s = field.zero()
    for i in range(len(m)):
        s = field.add(s, m[i][i])
    return s


def rref(field: Field, rows) -> tuple[Matrix, tuple[int, ...]]:
    """Reduced row echelon form with pivot-leading ones; zero rows dropped.

    Returns (rows, pivot_columns).  The output is canonical for the row
    space of the input.
    """
    work = [list(r) for r in rows]
    if not work:
        return (), ()
    ncols = len(work[0])
    zero = field.zero()
    pivots = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(work)):
            if work[i][c] != zero:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        work[r], work[pivot_row] = work[pivot_row], work[r]
        pv = work[r][c]
        if pv != field.one():
            inv = field.inv(pv)
            work[r] = [field.mul(inv, x) for x in work[r]]
        for i in range(len(work)):
            if i != r and work[i][c] != zero:
                f = work[i][c]
                work[i] = [field.sub(x, field.mul(f, y)) for x, y in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    return tuple(tuple(row) for row in work[:r]), tuple(pivots)


def rank(field: Field, m: Matrix) -> int:
    return len(rref(field, m)[0])


def kernel_basis(field: Field, m: Matrix, ncols: int) -> Matrix:
    """Canonical RREF basis of the right kernel {v : m v = 0}."""
    red, pivots = rref(field, m)
    free = [c for c in range(ncols) if c not in pivots]
    zero, one = field.zero(), field.one()
    basis = []
    for f in free:
        v = [zero] * ncols
        v[f] = one
        for r, p in enumerate(pivots):
            v[p] = field.neg(red[r][f])
        basis.append(tuple(v))
    return rref(field, basis)[0]


def solve(field: Field, m: Matrix, b: Vector) -> Vector | None:
    """One exact solution x of m x = b, or None if inconsistent."""
    if not m:
        return () if is_zero_vec(field, b) else None
    ncols = len(m[0])
    aug = tuple(row + (bi,) for row, bi in zip(m, b, strict=True))
    red, pivots = rref(field, aug)
    zero = field.zero()
    if ncols in pivots:
        return None
    x = [zero] * ncols
    for r, p in enumerate(pivots):
        x[p] = red[r][ncols]
    return tuple(x)


@dataclass(frozen=True)
class Subspace:
    """A subspace of field^ambient, stored by its canonical RREF basis."""

    field: Field
    ambient: int
    basis: Matrix = dc_field(default=())

    @staticmethod
    def from_vectors(field: Field, ambient: int, vectors) -> "Subspace":
        vecs = tuple(vec(field, v) for v in vectors)
        for v in vecs:
            if len(v) != ambient:
                raise DimensionError(f"vector of length {len(v)} in ambient {ambient}")
        return Subspace(field, ambient, rref(field, vecs)[0])

    @staticmethod
    def zero(field: Field, ambient: int) -> "Subspace":
        return Subspace(field, ambient, ())

    @staticmethod
    def full(field: Field, ambient: int) -> "Subspace":
        return Subspace(field, ambient, identity(field, ambient))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def is_zero(self) -> bool:
        return not self.basis

    def is_full(self) -> bool:
        return self.dim == self.ambient

    def pivots(self) -> tuple[int, ...]:
        zero = self.field.zero()
        out = []
        for row in self.basis:
            for c, x in enumerate(row):
                if x != zero:
                    out.append(c)
                    break
        return tuple(out)

    def reduce(self, v: Vector) -> Vector:
        """Residue of v after eliminating against the RREF basis."""
        if len(v) != self.ambient:
            raise DimensionError(f"vector length {len(v)} != ambient {self.ambient}")
        f = self.field
        zero = f.zero()
        w = list(v)
        for row, p in zip(self.basis, self.pivots()):
            c = w[p]
            if c != zero:
                w = [f.sub(x, f.mul(c, y)) for x, y in zip(w, row)]
        return tuple(w)

    def contains(self, v: Vector) -> bool:
        return is_zero_vec(self.field, self.reduce(v))

    def contains_space(self, other: "Subspace") -> bool:
        return all(self.contains(row) for row in other.basis)

    def coords(self, v: Vector) -> Vector | None:
        """Coefficients of v against the basis rows, or None if v is outside."""
        f = self.field
        zero = f.zero()
        w = list(vec(f, v))
        cs = []
        for row, p in zip(self.basis, self.pivots()):
            c = w[p]
            cs.append(c)
            if c != zero:
                w = [f.sub(x, f.mul(c, y)) for x, y in zip(w, row)]
        if not is_zero_vec(f, tuple(w)):
            return None
        return tuple(cs)

    def add(self, other: "Subspace") -> "Subspace":
        self._check_compatible(other)
        return Subspace(self.field, self.ambient, rref(self.field, self.basis + other.basis)[0])

    def intersect(self, other: "Subspace") -> "Subspace":
        """Zassenhaus: row-reduce [A|A; B|0]; right blocks of rows with zero
        left block span the intersection."""
        self._check_compatible(other)
        f, n = self.field, self.ambient
        z = zero_vec(f, n)
        block = [row + row for row in self.basis] + [row + z for row in other.basis]
        red, _ = rref(f, block)
        out = [row[n:] for row in red if is_zero_vec(f, row[:n])]
        return Subspace(f, n, rref(f, out)[0])

    def complement_basis(self) -> Matrix:
        """Standard basis vectors on the non-pivot coordinates: a complement."""
        f, n = self.field, self.ambient
        piv = set(self.pivots())
        zero, one = f.zero(), f.one()
        rows = []
        for c in range(n):
            if c not in piv:
                rows.append(tuple(one if j == c else zero for j in range(n)))
        return tuple(rows)

    def random_vector(self, rng, span: int = 5) -> Vector:
        f = self.field
        v = zero_vec(f, self.ambient)
        for row in self.basis:
            v = vec_add(f, v, vec_scale(f, f.random(rng, span), row))
        return v

    def _check_compatible(self, other: "Subspace"):
        check_same_field(self.field, other.field)
        if self.ambient != other.ambient:
            raise DimensionError(f"ambient mismatch: {self.ambient} vs {other.ambient}")


def kernel(field: Field, m: Matrix, ncols: int | None = None) -> Subspace:
    """The right kernel {v : m v = 0} as a canonical Subspace."""
    if ncols is None:
        if not m:
            raise DimensionError("ncols required for an empty matrix")
        ncols = len(m[0])
    return Subspace(field, ncols, kernel_basis(field, m, ncols))


def left_kernel(field: Field, m: Matrix, nrows: int | None = None) -> Subspace:
    """{x : x m = 0}, i.e. the kernel of the transpose."""
    if nrows is None:
        nrows = len(m)
    return kernel(field, transpose(m), nrows)


def intersect_all(spaces) -> Subspace:
    spaces = list(spaces)
    if not spaces:
        raise ValueError("empty intersection")
    out = spaces[0]
    for s in spaces[1:]:
        out = out.intersect(s)
    return out
