"""Exact rational linear algebra.

Everything runs over Q with `fractions.Fraction` scalars: results are always
in lowest terms with positive denominator and no rounding ever occurs.  The
predicates evaluated downstream (rank conditions, kernel membership,
squarefreeness) are polynomial conditions with rational coefficients, so
generic behaviour over Q coincides with generic behaviour over C; see the
README for the full argument.

Subspaces are stored in reduced row echelon form, making equality of
subspaces equality of representations.  The elimination itself is delegated
to the active backend (compiled or pure Python, see `seaweeds.backend`),
which works on denominator-cleared integer rows.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .backend import rank_int_rows, rref_int_rows

Scalar = Fraction


class AmbientMismatch(ValueError):
    """Operands live in different ambient dimensions."""


def as_scalar(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def _int_rows(rows):
    # Clear denominators row by row; positive row scaling preserves both the
    # row space and the rank.
    out = []
    for row in rows:
        den = 1
        for x in row:
            den = lcm(den, x.denominator)
        out.append([int(x * den) for x in row])
    return out


def _frac_rows_from_rref(pivots, int_rows):
    rows = []
    for piv, row in zip(pivots, int_rows):
        p = row[piv]
        rows.append(tuple(Fraction(v, p) for v in row))
    return tuple(rows)


@dataclass(frozen=True)
class Matrix:
    """Immutable rational matrix (tuple-of-tuples of Fraction)."""

    rows: tuple[tuple[Fraction, ...], ...]

    @classmethod
    def from_rows(cls, rows) -> "Matrix":
        return cls(tuple(tuple(as_scalar(x) for x in row) for row in rows))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        one, zero = Fraction(1), Fraction(0)
        return cls(tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "Matrix":
        zero = Fraction(0)
        return cls(tuple((zero,) * ncols for _ in range(nrows)))

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def __add__(self, other: "Matrix") -> "Matrix":
        return Matrix(tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)))

    def __sub__(self, other: "Matrix") -> "Matrix":
        return Matrix(tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)))

    def __neg__(self) -> "Matrix":
        return Matrix(tuple(tuple(-a for a in r) for r in self.rows))

    def scale(self, c) -> "Matrix":
        c = as_scalar(c)
        return Matrix(tuple(tuple(c * a for a in r) for r in self.rows))

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise AmbientMismatch("matrix product shape mismatch")
        cols = other.ncols
        orows = other.rows
        return Matrix(
            tuple(
                tuple(sum(r[k] * orows[k][j] for k in range(self.ncols)) for j in range(cols))
                for r in self.rows
            )
        )

    def transpose(self) -> "Matrix":
        return Matrix(tuple(zip(*self.rows))) if self.rows else Matrix(())

    def trace(self) -> Fraction:
        return sum((self.rows[i][i] for i in range(min(self.nrows, self.ncols))), Fraction(0))

    def vec(self) -> tuple[Fraction, ...]:
        """Row-major flattening."""
        return tuple(x for row in self.rows for x in row)


@dataclass(frozen=True)
class Subspace:
    """Linear subspace of Q^n in canonical reduced echelon form.

    Equal subspaces have equal representations, so dataclass equality is
    subspace equality.
    """

    ambient_dim: int
    basis: tuple[tuple[Fraction, ...], ...]

    @classmethod
    def from_vectors(cls, vectors, ambient_dim: int) -> "Subspace":
        vectors = list(vectors)
        for v in vectors:
            if len(v) != ambient_dim:
                raise AmbientMismatch("vector length does not match ambient dimension")
        rows = _int_rows([[as_scalar(x) for x in v] for v in vectors])
        pivots, reduced = rref_int_rows(rows)
        return cls(ambient_dim, _frac_rows_from_rref(pivots, reduced))

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, ())

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, Matrix.identity(ambient_dim).rows)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def _pivots(self):
        piv = []
        for row in self.basis:
            for j, x in enumerate(row):
                if x:
                    piv.append(j)
                    break
        return piv

    def contains(self, vector) -> bool:
        v = [as_scalar(x) for x in vector]
        if len(v) != self.ambient_dim:
            raise AmbientMismatch("vector length does not match ambient dimension")
        for row, piv in zip(self.basis, self._pivots()):
            c = v[piv]
            if c:
                for j in range(self.ambient_dim):
                    v[j] -= c * row[j]
        return not any(v)

    def contains_subspace(self, other: "Subspace") -> bool:
        if other.ambient_dim != self.ambient_dim:
            raise AmbientMismatch("ambient dimensions differ")
        return all(self.contains(v) for v in other.basis)


def rank(m: Matrix) -> int:
    """Dimension of the row space, by exact fraction-free elimination."""
    return rank_int_rows(_int_rows(m.rows))


def rref(m: Matrix) -> tuple[Matrix, tuple[int, ...]]:
    """Reduced row echelon form and its pivot columns."""
    pivots, reduced = rref_int_rows(_int_rows(m.rows))
    return Matrix(_frac_rows_from_rref(pivots, reduced)), tuple(pivots)


def nullspace(m: Matrix) -> Subspace:
    """Canonical basis of {v : Mv = 0}; dim = ncols - rank."""
    n = m.ncols
    if m.nrows == 0:
        return Subspace.full(n)
    reduced, pivots = rref(m)
    pivot_set = set(pivots)
    vectors = []
    for free in range(n):
        if free in pivot_set:
            continue
        v = [Fraction(0)] * n
        v[free] = Fraction(1)
        for row, piv in zip(reduced.rows, pivots):
            v[piv] = -row[free]
        vectors.append(v)
    return Subspace.from_vectors(vectors, n)


def _complement_rows(s: Subspace) -> Matrix:
    # Rows spanning the orthogonal complement under the standard dot product;
    # over Q the pairing is definite, so (U-perp)-perp == U.
    if s.dim == 0:
        return Matrix.identity(s.ambient_dim)
    comp = nullspace(Matrix(s.basis))
    if comp.dim == 0:
        return Matrix(())
    return Matrix(comp.basis)


def intersect(u: Subspace, v: Subspace) -> Subspace:
    """Canonical basis of the intersection of two subspaces."""
    if u.ambient_dim != v.ambient_dim:
        raise AmbientMismatch("ambient dimensions differ")
    rows = _complement_rows(u).rows + _complement_rows(v).rows
    if not rows:
        return Subspace.full(u.ambient_dim)
    return nullspace(Matrix(rows))


def solve(a: Matrix, b) -> tuple[Fraction, ...] | None:
    """One exact solution of A x = b, or None when inconsistent.

    Free variables, if any, are set to zero.
    """
    b = [as_scalar(x) for x in b]
    if len(b) != a.nrows:
        raise AmbientMismatch("right-hand side length does not match row count")
    aug = Matrix(tuple(row + (bi,) for row, bi in zip(a.rows, b)))
    reduced, pivots = rref(aug)
    n = a.ncols
    if n in pivots:
        return None
    x = [Fraction(0)] * n
    for row, piv in zip(reduced.rows, pivots):
        x[piv] = row[n]
    return tuple(x)


def inverse(m: Matrix) -> Matrix:
    """Exact inverse of a square matrix; raises ValueError when singular."""
    n = m.nrows
    if n != m.ncols:
        raise ValueError("matrix must be square")
    aug = Matrix(tuple(row + eye for row, eye in zip(m.rows, Matrix.identity(n).rows)))
    reduced, pivots = rref(aug)
    if tuple(pivots) != tuple(range(n)):
        raise ValueError("matrix is singular")
    return Matrix(tuple(row[n:] for row in reduced.rows))


# ---------------------------------------------------------------------------
# Polynomials over Q: coefficient tuples, ascending degree, () is zero.
# ---------------------------------------------------------------------------


def poly_normalize(coeffs) -> tuple[Fraction, ...]:
    c = [as_scalar(x) for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def poly_degree(p) -> int:
    return len(p) - 1


def poly_derivative(p) -> tuple[Fraction, ...]:
    return poly_normalize(i * p[i] for i in range(1, len(p)))


def poly_monic(p) -> tuple[Fraction, ...]:
    lead = p[-1]
    return tuple(c / lead for c in p)


def poly_mod(a, b) -> tuple[Fraction, ...]:
    a = list(a)
    db, lead = len(b) - 1, b[-1]
    while len(a) - 1 >= db and any(a):
        if a[-1] == 0:
            a.pop()
            continue
        q = a[-1] / lead
        shift = len(a) - 1 - db
        for i in range(db + 1):
            a[shift + i] -= q * b[i]
        a.pop()
    return poly_normalize(a)


def poly_gcd(a, b) -> tuple[Fraction, ...]:
    """Monic gcd over Q (Euclid)."""
    a, b = poly_normalize(a), poly_normalize(b)
    while b:
        a, b = b, poly_mod(a, b)
    return poly_monic(a) if a else ()


def poly_eval_matrix(p, m: Matrix) -> Matrix:
    acc = Matrix.zeros(m.nrows, m.ncols)
    power = Matrix.identity(m.nrows)
    for c in p:
        if c:
            acc = acc + power.scale(c)
        power = power @ m
    return acc


def minimal_polynomial(m: Matrix) -> tuple[Fraction, ...]:
    """Monic least-degree polynomial p with p(M) = 0 (ascending coefficients).

    Found as the first linear dependence among the vectorized powers
    I, M, M^2, ...; the dependence exists by Cayley-Hamilton, at degree at
    most the matrix size.
    """
    n = m.nrows
    if n != m.ncols:
        raise ValueError("matrix must be square")
    powers = [Matrix.identity(n)]
    for _ in range(n):
        powers.append(powers[-1] @ m)
    for d in range(1, n + 1):
        stacked = Matrix(tuple(zip(*(p.vec() for p in powers[:d]))))
        x = solve(stacked, powers[d].vec())
        if x is not None:
            return poly_normalize(tuple(-c for c in x) + (Fraction(1),))
    raise AssertionError("no minimal polynomial found below Cayley-Hamilton bound")


def is_squarefree(p) -> bool:
    """True iff gcd(p, p') is constant, i.e. p has no repeated roots."""
    p = poly_normalize(p)
    if not p:
        raise ValueError("zero polynomial has no squarefree decomposition")
    if len(p) == 1:
        return True
    return poly_degree(poly_gcd(p, poly_derivative(p))) == 0
