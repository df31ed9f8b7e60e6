"""Seaweed subalgebras of gl(n), sl(n), sp(2n), so(n) from composition pairs.

Two independent constructions are provided.  ``gln_seaweed`` realizes the
type-A block picture directly: the basis is every elementary matrix e_ij
whose row block (under the top composition a) is at most its column block and
whose row block under the bottom composition b is at least its column block.
``flag_seaweed`` is the basis-free double-flag stabilizer inside any of the
four ambient families: matrices preserving the forward coordinate flag with
subspace sizes the prefix sums of a, and the reversed coordinate flag with
sizes the prefix sums of reversed(b) (equivalently, the spans of the last
n - q coordinates for prefix sums q of b).  The two constructions produce the
identical canonical subspace of gl(n); the exhaustive agreement sweep is part
of the acceptance suite.

For sp and so the ambient bilinear form is antidiagonal, so coordinate flags
bounded by floor(N/2) are isotropic and upper-triangular members form a
Borel; composition totals are therefore capped at floor(N/2) in those
families.  The reachable sp/so seaweeds are exactly the double-coordinate-
flag stabilizers; mixed types are out of scope.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .linalg import Matrix, Subspace, nullspace
from .lie import LieAlgebra, StructureError

FAMILIES = ("GL", "SL", "SP", "SO")


@dataclass(frozen=True)
class Composition:
    """Ordered tuple of positive integers; () is the empty composition.

    The CLI text form is comma-separated parts, with "0" denoting the empty
    composition.
    """

    parts: tuple[int, ...]

    def __post_init__(self):
        for p in self.parts:
            if not isinstance(p, int) or p < 1:
                raise ValueError(f"composition parts must be positive integers, got {p!r}")

    @property
    def total(self) -> int:
        return sum(self.parts)

    def prefix_sums(self) -> tuple[int, ...]:
        out, acc = [], 0
        for p in self.parts:
            acc += p
            out.append(acc)
        return tuple(out)

    def reversed(self) -> "Composition":
        return Composition(tuple(self.parts[::-1]))

    @classmethod
    def parse(cls, text: str) -> "Composition":
        text = text.strip()
        if text in ("", "0"):
            return cls(())
        try:
            parts = tuple(int(p) for p in text.split(","))
        except ValueError:
            raise ValueError(f"cannot parse composition {text!r}") from None
        return cls(parts)

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts) if self.parts else "0"


def parse_pair(text: str) -> tuple[Composition, Composition]:
    """Parse the "top|bottom" composition pair syntax, e.g. "2,1|3"."""
    if text.count("|") != 1:
        raise ValueError(f"expected TOP|BOTTOM, got {text!r}")
    top, bottom = text.split("|")
    return Composition.parse(top), Composition.parse(bottom)


def enumerate_compositions(n: int) -> list[Composition]:
    """All 2^(n-1) compositions of n.

    Deterministic order: the k-th composition is read off the (n-1)-bit
    binary expansion of k, most significant bit first, where bit t set means
    "cut after position t+1".  So k=0 is (n) and k=2^(n-1)-1 is (1,...,1).
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    out = []
    for mask in range(1 << (n - 1)):
        parts = []
        run = 1
        for pos in range(n - 1):
            if (mask >> (n - 2 - pos)) & 1:
                parts.append(run)
                run = 1
            else:
                run += 1
        parts.append(run)
        out.append(Composition(tuple(parts)))
    return out


def _block_lookup(comp: Composition) -> list[int]:
    # position -> index of the part containing it (0-based positions)
    blocks = []
    for idx, p in enumerate(comp.parts):
        blocks.extend([idx] * p)
    return blocks


def _elementary(n: int, i: int, j: int) -> Matrix:
    rows = [[Fraction(0)] * n for _ in range(n)]
    rows[i][j] = Fraction(1)
    return Matrix(tuple(tuple(r) for r in rows))


def gln_seaweed(a: Composition, b: Composition) -> LieAlgebra:
    """Type-A seaweed in the block picture.

    Basis: all e_ij with blockA(i) <= blockA(j) and blockB(i) >= blockB(j),
    in row-major order (which is also the canonical echelon order of the
    vectorized span).  Structure constants come from
    [e_ij, e_kl] = d_jk e_il - d_li e_kj; both targets stay inside the basis
    because the block conditions are transitive.
    """
    n = a.total
    if n != b.total:
        raise ValueError("composition totals differ")
    if n < 1:
        raise ValueError("compositions must be nonempty for gl(n)")
    blk_a, blk_b = _block_lookup(a), _block_lookup(b)
    pairs = [
        (i, j)
        for i in range(n)
        for j in range(n)
        if blk_a[i] <= blk_a[j] and blk_b[i] >= blk_b[j]
    ]
    index_of = {p: t for t, p in enumerate(pairs)}
    structure = {}
    for t1, (i, j) in enumerate(pairs):
        for t2 in range(t1 + 1, len(pairs)):
            k, l = pairs[t2]
            acc = {}
            if j == k:
                target = index_of.get((i, l))
                assert target is not None, "seaweed not closed under bracket"
                acc[target] = acc.get(target, 0) + 1
            if l == i:
                target = index_of.get((k, j))
                assert target is not None, "seaweed not closed under bracket"
                acc[target] = acc.get(target, 0) - 1
            acc = {r: c for r, c in acc.items() if c}
            if acc:
                structure[(t1, t2)] = acc
    mats = tuple(_elementary(n, i, j) for i, j in pairs)
    return LieAlgebra(len(pairs), structure, realization=mats, label=f"GL{n}[{a}|{b}]")


def sln_seaweed(a: Composition, b: Composition) -> LieAlgebra:
    """Trace-zero reduction of the gl(n) seaweed (one linear constraint).

    Basis: off-diagonal e_ij of the gl seaweed in row-major order, with each
    diagonal e_ii (i < n-1) replaced by h_i = e_ii - e_{n-1,n-1} and the last
    diagonal dropped.  Every seaweed contains the full diagonal, so the
    dimension drops by exactly one.
    """
    n = a.total
    if n != b.total:
        raise ValueError("composition totals differ")
    if n < 2:
        raise ValueError("sl(n) needs n >= 2")
    blk_a, blk_b = _block_lookup(a), _block_lookup(b)
    m = n - 1
    basis = []  # sparse dicts {(u,v): coeff}
    for i in range(n):
        for j in range(n):
            if blk_a[i] > blk_a[j] or blk_b[i] < blk_b[j]:
                continue
            if i == j == m:
                continue
            if i == j:
                basis.append({(i, i): 1, (m, m): -1})
            else:
                basis.append({(i, j): 1})
    offdiag_index = {}
    diag_index = {}
    for t, elem in enumerate(basis):
        (u, v), _ = next(iter(elem.items()))
        if u == v:
            diag_index[u] = t
        else:
            offdiag_index[(u, v)] = t

    def to_coords(sparse):
        # express a trace-zero sparse elementary combination in the basis
        coords = {}
        diag = {}
        for (u, v), c in sparse.items():
            if not c:
                continue
            if u == v:
                diag[u] = diag.get(u, 0) + c
            else:
                t = offdiag_index.get((u, v))
                assert t is not None, "seaweed not closed under bracket"
                coords[t] = coords.get(t, 0) + c
        for u, c in diag.items():
            if u == m or not c:
                continue
            coords[diag_index[u]] = coords.get(diag_index[u], 0) + c
        assert sum(diag.values()) == 0, "bracket left the trace-zero space"
        return {t: c for t, c in coords.items() if c}

    structure = {}
    for t1 in range(len(basis)):
        for t2 in range(t1 + 1, len(basis)):
            prod = {}
            for (u, v), c1 in basis[t1].items():
                for (k, l), c2 in basis[t2].items():
                    c = c1 * c2
                    if v == k:
                        prod[(u, l)] = prod.get((u, l), 0) + c
                    if l == u:
                        prod[(k, v)] = prod.get((k, v), 0) - c
            coords = to_coords(prod)
            if coords:
                structure[(t1, t2)] = coords

    def realize(sparse):
        rows = [[Fraction(0)] * n for _ in range(n)]
        for (u, v), c in sparse.items():
            rows[u][v] += Fraction(c)
        return Matrix(tuple(tuple(r) for r in rows))

    mats = tuple(realize(e) for e in basis)
    return LieAlgebra(len(basis), structure, realization=mats, label=f"SL{n}[{a}|{b}]")


class AmbientAlgebra:
    """One of the four reductive matrix families, with its defining form.

    For SP the form S is antidiagonal with +1 in the top half and -1 in the
    bottom half; for SO it is antidiagonal with all +1.  Membership in both
    cases is X^T S + S X = 0.
    """

    __slots__ = ("family", "n", "matrix_size", "bilinear_form")

    def __init__(self, family: str, n: int):
        family = family.upper()
        if family not in FAMILIES:
            raise ValueError(f"family must be one of {FAMILIES}")
        if family == "SP":
            if n < 1:
                raise ValueError("sp rank must be at least 1")
            size = 2 * n
        elif family == "SO":
            if n < 2:
                raise ValueError("so matrix size must be at least 2")
            size = n
        else:
            if n < 1:
                raise ValueError("rank must be at least 1")
            size = n
        self.family = family
        self.n = n
        self.matrix_size = size
        if family in ("SP", "SO"):
            rows = [[Fraction(0)] * size for _ in range(size)]
            for i in range(size):
                sign = -1 if (family == "SP" and i >= size // 2) else 1
                rows[i][size - 1 - i] = Fraction(sign)
            self.bilinear_form = Matrix(tuple(tuple(r) for r in rows))
        else:
            self.bilinear_form = None

    @property
    def max_flag(self) -> int:
        """Largest admissible flag-subspace dimension."""
        size = self.matrix_size
        return size if self.family in ("GL", "SL") else size // 2

    def basis_matrices(self) -> tuple[Matrix, ...]:
        return _ambient_basis(self.family, self.n)

    def __repr__(self):
        return f"AmbientAlgebra({self.family}, n={self.n})"


@lru_cache(maxsize=None)
def _ambient_basis(family: str, n: int) -> tuple[Matrix, ...]:
    amb = AmbientAlgebra(family, n)
    size = amb.matrix_size
    if family == "GL":
        return tuple(_elementary(size, i, j) for i in range(size) for j in range(size))
    if family == "SL":
        trace_row = [Fraction(1) if i % (size + 1) == 0 else Fraction(0) for i in range(size * size)]
        space = nullspace(Matrix((tuple(trace_row),)))
    else:
        s = amb.bilinear_form.rows
        rows = []
        for i in range(size):
            for j in range(size):
                row = [Fraction(0)] * (size * size)
                for k in range(size):
                    row[k * size + i] += s[k][j]  # (X^T S)[i][j]
                    row[k * size + j] += s[i][k]  # (S X)[i][j]
                rows.append(tuple(row))
        space = nullspace(Matrix(tuple(rows)))
    return tuple(
        Matrix(tuple(tuple(row[u * size + v] for v in range(size)) for u in range(size)))
        for row in space.basis
    )


@lru_cache(maxsize=None)
def _ambient_table(family: str, n: int):
    """Structure constants of the ambient algebra in its canonical basis.

    Extraction uses the echelon shape of the vectorized basis: coordinates of
    any member are just its values at the pivot positions.
    """
    mats = _ambient_basis(family, n)
    vecs = [m.vec() for m in mats]
    pivots = [next(k for k, x in enumerate(v) if x) for v in vecs]
    table = {}
    for i in range(len(mats)):
        for j in range(i + 1, len(mats)):
            comm = (mats[i] @ mats[j] - mats[j] @ mats[i]).vec()
            coords = {r: comm[p] for r, p in enumerate(pivots) if comm[p]}
            residual = list(comm)
            for r, c in coords.items():
                vr = vecs[r]
                for k in range(len(residual)):
                    residual[k] -= c * vr[k]
            if any(residual):
                raise StructureError("ambient family is not closed under bracket")
            if coords:
                table[(i, j)] = coords
    return table


def flag_seaweed(amb: AmbientAlgebra, a: Composition, b: Composition) -> LieAlgebra:
    """Double-flag stabilizer seaweed inside the ambient algebra.

    Members preserve V_p = span(e_0..e_{p-1}) for every prefix sum p of a and
    W_q = span(e_{N-q}..e_{N-1}) for every prefix sum q of reversed(b).
    Computed as the nullspace of the stacked entry-killing constraints over
    the ambient basis; structure constants are induced through the ambient
    table and the realization is attached.
    """
    size = amb.matrix_size
    if amb.family in ("GL", "SL"):
        if a.total != size or b.total != size:
            raise ValueError(f"composition totals must equal {size} for {amb.family}")
    else:
        if a.total > amb.max_flag or b.total > amb.max_flag:
            raise ValueError(
                f"composition totals must be at most {amb.max_flag} for isotropic flags"
            )
    mats = amb.basis_matrices()
    k_amb = len(mats)
    killed = set()
    for p in a.prefix_sums():
        if p < size:
            killed.update((r, c) for r in range(p, size) for c in range(p))
    for q in b.reversed().prefix_sums():
        if q < size:
            killed.update((r, c) for r in range(size - q) for c in range(size - q, size))
    rows = [tuple(m.rows[r][c] for m in mats) for (r, c) in sorted(killed)]
    if rows:
        coords_space = nullspace(Matrix(tuple(rows)))
    else:
        coords_space = Subspace.full(k_amb)

    amb_table = _ambient_table(amb.family, amb.n)

    def amb_bracket(x, y):
        # bilinear expansion over the nonzero supports (basis rows are sparse)
        out = [Fraction(0)] * k_amb
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if not yj or i == j:
                    continue
                terms = amb_table.get((i, j)) if i < j else amb_table.get((j, i))
                if not terms:
                    continue
                coef = xi * yj if i < j else -xi * yj
                for r, c in terms.items():
                    out[r] += coef * c
        return out

    basis_coords = coords_space.basis
    piv = []
    for row in basis_coords:
        piv.append(next(k for k, x in enumerate(row) if x))
    structure = {}
    for t1 in range(len(basis_coords)):
        for t2 in range(t1 + 1, len(basis_coords)):
            br = amb_bracket(basis_coords[t1], basis_coords[t2])
            coords = {s: br[p] for s, p in enumerate(piv) if br[p]}
            residual = br
            for s, c in coords.items():
                brow = basis_coords[s]
                for k in range(k_amb):
                    residual[k] -= c * brow[k]
            if any(residual):
                raise StructureError("flag stabilizer is not closed under bracket")
            if coords:
                structure[(t1, t2)] = coords

    def realize(coords):
        rows = [[Fraction(0)] * size for _ in range(size)]
        for c, m in zip(coords, mats):
            if c:
                for u in range(size):
                    mr = m.rows[u]
                    ru = rows[u]
                    for v in range(size):
                        if mr[v]:
                            ru[v] += c * mr[v]
        return Matrix(tuple(tuple(r) for r in rows))

    label = f"{amb.family}{size}[{a}|{b}]"
    real = tuple(realize(c) for c in basis_coords)
    return LieAlgebra(len(basis_coords), structure, realization=real, label=label)


def seaweed(family: str, n: int, a: Composition, b: Composition) -> LieAlgebra:
    """Uniform entry point used by the classifier and the CLI."""
    family = family.upper()
    if family == "GL":
        if a.total != n or b.total != n:
            raise ValueError(f"composition totals must equal n={n}")
        return gln_seaweed(a, b)
    if family == "SL":
        if a.total != n or b.total != n:
            raise ValueError(f"composition totals must equal n={n}")
        return sln_seaweed(a, b)
    return flag_seaweed(AmbientAlgebra(family, n), a, b)


def matrix_span(g: LieAlgebra) -> Subspace:
    """Canonical subspace of the ambient matrix space spanned by the
    realization (for cross-constructor comparisons)."""
    if g.realization is None:
        raise ValueError("algebra has no matrix realization")
    if not g.realization:
        raise ValueError("empty realization")
    size = g.realization[0].nrows
    return Subspace.from_vectors([m.vec() for m in g.realization], size * size)
