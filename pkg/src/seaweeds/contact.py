"""Contact and stability analysis of one-forms on Lie algebras.

A one-form phi on an odd-dimensional algebra is contact when the top wedge
power phi ^ (d phi)^k is a volume form.  Two independent tests are provided:

* ``is_contact_form`` uses the kernel characterization: the Kirillov kernel
  must be a line C.x with phi(x) != 0, in which case the Reeb vector
  x / phi(x) is the canonical kernel generator with phi(reeb) = 1.
* ``contact_volume_nonzero`` borders the Kirillov matrix with the
  coordinates of phi and tests nonsingularity, which is the top-wedge
  condition itself (up to a harmless sign).

Stability uses the kernel-bracket criterion: phi is stable iff
[ker B_phi, g] meets ker B_phi only in 0.  Certificates carry everything
needed to re-check the defining equations from scratch.

All operations accept arbitrary finite-dimensional algebras over Q, not just
seaweeds.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from fractions import Fraction

from .linalg import (
    Matrix,
    Subspace,
    intersect,
    inverse,
    is_squarefree,
    minimal_polynomial,
    nullspace,
    rank,
)
from .lie import (
    DEFAULT_BOUND,
    Element,
    LieAlgebra,
    OneForm,
    center,
    kirillov_kernel,
    kirillov_matrix,
)

logger = logging.getLogger(__name__)

DEFAULT_ATTEMPTS = 64
EPSILON_STEPS = 20


class PreconditionError(ValueError):
    """An operation was applied outside its stated domain."""


@dataclass(frozen=True)
class ContactCertificate:
    """Machine-checkable evidence that a form is contact.

    Invariants: B_form . reeb = 0, form(reeb) = 1, dim ker B_form = 1.
    """

    form: OneForm
    reeb: Element
    kernel_dim: int
    pairing: Fraction


@dataclass(frozen=True)
class StabilityCertificate:
    """Evidence for the kernel-bracket stability criterion.

    Invariants: kernel = ker B_form, bracket_span = [kernel, g], and the two
    meet only in 0.
    """

    form: OneForm
    kernel: Subspace
    bracket_span: Subspace
    intersection_dim: int


@dataclass(frozen=True)
class ContactBasis:
    """Basis (reeb, u_1, v_1, ..., u_k, v_k) normalizing the Kirillov form.

    ``dual_check`` is the matrix of B_form in this basis: zero first row and
    column, 2x2 blocks [[0,1],[-1,0]] down the rest of the diagonal.
    """

    elements: tuple[Element, ...]
    dual_check: Matrix


def _require_odd(g: LieAlgebra):
    if g.dim % 2 == 0:
        raise PreconditionError("contact analysis needs an odd-dimensional algebra")


def is_contact_form(g: LieAlgebra, form: OneForm) -> ContactCertificate | None:
    """Certificate iff ker B_form is a line on which the form does not vanish."""
    _require_odd(g)
    kernel = kirillov_kernel(g, form)
    if kernel.dim != 1:
        return None
    x = Element(g, kernel.basis[0])
    pairing = form(x)
    if pairing == 0:
        return None
    reeb = x.scale(Fraction(1) / pairing)
    return ContactCertificate(form=form, reeb=reeb, kernel_dim=1, pairing=form(reeb))


def contact_volume_nonzero(g: LieAlgebra, form: OneForm) -> bool:
    """Top-wedge volume test via the bordered Kirillov matrix.

    The (dim+1)-square skew matrix [[0, phi], [-phi, B_phi]] is nonsingular
    exactly when phi ^ (d phi)^k is a volume form, which is the defining
    contact condition; this route never looks at kernels or Reeb vectors.
    """
    _require_odd(g)
    b = kirillov_matrix(g, form)
    n = g.dim
    top = (Fraction(0),) + form.coords
    rows = [top]
    for i in range(n):
        rows.append((-form.coords[i],) + b.rows[i])
    bordered = Matrix(tuple(rows))
    return rank(bordered) == n + 1


def is_stable_form(g: LieAlgebra, form: OneForm) -> StabilityCertificate | None:
    """Certificate iff [ker B_form, g] intersects ker B_form trivially."""
    kernel = kirillov_kernel(g, form)
    vectors = []
    for k in kernel.basis:
        for j in range(g.dim):
            y = [Fraction(0)] * g.dim
            y[j] = Fraction(1)
            vectors.append(g.bracket_coords(list(k), y))
    span = Subspace.from_vectors(vectors, g.dim)
    inter = intersect(kernel, span)
    if inter.dim != 0:
        return None
    return StabilityCertificate(
        form=form, kernel=kernel, bracket_span=span, intersection_dim=0
    )


def find_contact_form(
    g: LieAlgebra,
    seed: int,
    attempts: int = DEFAULT_ATTEMPTS,
    bound: int = DEFAULT_BOUND,
) -> ContactCertificate | None:
    """Randomized search for a contact form; None means budget exhausted.

    Exhaustion is not a proof of non-contactness, only one-sided evidence;
    the classifier corroborates it against the stability search.
    """
    _require_odd(g)
    rng = random.Random(seed)
    for _ in range(attempts):
        coords = tuple(Fraction(rng.randint(-bound, bound)) for _ in range(g.dim))
        cert = is_contact_form(g, OneForm(g, coords))
        if cert is not None:
            return cert
    return None


def find_stable_form(
    g: LieAlgebra,
    seed: int,
    attempts: int = DEFAULT_ATTEMPTS,
    bound: int = DEFAULT_BOUND,
) -> StabilityCertificate | None:
    """Randomized search for a stable form; None means budget exhausted."""
    rng = random.Random(seed)
    for _ in range(attempts):
        coords = tuple(Fraction(rng.randint(-bound, bound)) for _ in range(g.dim))
        cert = is_stable_form(g, OneForm(g, coords))
        if cert is not None:
            return cert
    return None


def is_semisimple_element(x: Element) -> bool:
    """Squarefree minimal polynomial of the realization, i.e. diagonalizable
    over the algebraic closure."""
    if x.algebra.realization is None:
        raise PreconditionError("semisimplicity needs a matrix realization")
    return is_squarefree(minimal_polynomial(x.matrix()))


def reductive_type_witness(g: LieAlgebra, form: OneForm) -> bool:
    """For a centerless algebra with one-dimensional Kirillov kernel: is the
    kernel generator semisimple?

    A one-dimensional kernel forces index one (kernel dimensions share the
    parity of dim), so the preconditions pin down exactly the index-one
    centerless case.
    """
    if g.realization is None:
        raise PreconditionError("reductive-type witness needs a matrix realization")
    if center(g).dim != 0:
        raise PreconditionError("algebra has nonzero center")
    kernel = kirillov_kernel(g, form)
    if kernel.dim != 1:
        raise PreconditionError("form does not have a one-dimensional kernel")
    return is_semisimple_element(Element(g, kernel.basis[0]))


def _pairing(g: LieAlgebra, form: OneForm, u, v) -> Fraction:
    return sum(
        (c * form.coords[r] for r, c in enumerate(g.bracket_coords(u, v))), Fraction(0)
    )


def _canonical_block(dim: int) -> Matrix:
    rows = [[Fraction(0)] * dim for _ in range(dim)]
    for pos in range(1, dim - 1, 2):
        rows[pos][pos + 1] = Fraction(1)
        rows[pos + 1][pos] = Fraction(-1)
    return Matrix(tuple(tuple(r) for r in rows))


def contact_basis(g: LieAlgebra, cert: ContactCertificate) -> ContactBasis:
    """Normal-form basis for a contact certificate.

    E_1 is the Reeb vector; the rest is built by symplectic elimination on
    ker(form), where the Kirillov form is nondegenerate: take the first
    unused vector u of the canonical spanning order, pair it with the first
    partner v of nonzero pairing (rescaled so B(u,v) = 1), then project the
    remainder onto the pair's B-orthogonal complement.  The pivot rule is
    deterministic, so bases are reproducible across runs and platforms.
    """
    _validate_contact(g, cert)
    form = cert.form
    pool = []
    if g.dim > 1:
        pool = [list(v) for v in nullspace(Matrix((form.coords,))).basis]
    pairs = []
    while pool:
        u = pool.pop(0)
        partner = None
        for idx, v in enumerate(pool):
            if _pairing(g, form, u, v):
                partner = idx
                break
        if partner is None:
            raise PreconditionError("Kirillov form degenerates on ker(form): bad certificate")
        v = pool.pop(partner)
        scale = _pairing(g, form, u, v)
        v = [x / scale for x in v]
        projected = []
        for w in pool:
            bu = _pairing(g, form, w, v)
            bv = _pairing(g, form, w, u)
            projected.append(
                [wx - bu * ux + bv * vx for wx, ux, vx in zip(w, u, v)]
            )
        pool = projected
        pairs.append((u, v))
    elements = [cert.reeb]
    for u, v in pairs:
        elements.append(Element(g, tuple(u)))
        elements.append(Element(g, tuple(v)))
    check = Matrix(
        tuple(
            tuple(_pairing(g, form, list(ei.coords), list(ej.coords)) for ej in elements)
            for ei in elements
        )
    )
    if check != _canonical_block(g.dim):
        raise PreconditionError("symplectic elimination failed to reach the normal form")
    return ContactBasis(elements=tuple(elements), dual_check=check)


def _validate_contact(g: LieAlgebra, cert: ContactCertificate):
    if cert.form.algebra is not g or cert.reeb.algebra is not g:
        raise PreconditionError("certificate refers to a different algebra")
    kernel = kirillov_kernel(g, cert.form)
    if kernel.dim != 1 or cert.kernel_dim != 1:
        raise PreconditionError("certificate kernel is not one-dimensional")
    if not kernel.contains(cert.reeb.coords):
        raise PreconditionError("Reeb vector is not in the Kirillov kernel")
    if cert.form(cert.reeb) != 1:
        raise PreconditionError("Reeb vector is not normalized")


def dual_functional(g: LieAlgebra, vector) -> OneForm:
    """Dual functional of `vector` in the deterministic completed basis:
    the vector first, then greedy completion from the standard basis."""
    chosen = [list(vector)]
    span = Subspace.from_vectors(chosen, g.dim)
    for i in range(g.dim):
        if span.dim == g.dim:
            break
        e = [Fraction(0)] * g.dim
        e[i] = Fraction(1)
        if not span.contains(e):
            chosen.append(e)
            span = Subspace.from_vectors(chosen, g.dim)
    p = Matrix(tuple(zip(*chosen)))  # columns are the basis vectors
    return OneForm(g, tuple(inverse(p).rows[0]))


def contactify(g: LieAlgebra, form: OneForm) -> ContactCertificate | None:
    """Perturb a regular form vanishing on its kernel line into a contact one.

    Preconditions: ker B_form = C.h is one-dimensional and form(h) = 0
    (otherwise ``is_contact_form`` already succeeds).  The perturbation is
    psi = form + eps * h^, with h^ the dual functional of h in the greedy
    completed basis, and eps running down the halving schedule 1, 1/2, ...
    for 20 steps.  The first psi that keeps the same kernel line and pairs
    nontrivially with h is certified.  Exhausting the schedule is
    overwhelming evidence of a precondition bug, so it is logged as an error
    before returning None.
    """
    kernel = kirillov_kernel(g, form)
    if kernel.dim != 1:
        raise PreconditionError("contactify needs a one-dimensional Kirillov kernel")
    h = Element(g, kernel.basis[0])
    if form(h) != 0:
        raise PreconditionError("form does not vanish on its kernel; use is_contact_form")
    hstar = dual_functional(g, h.coords)
    eps = Fraction(1)
    for _ in range(EPSILON_STEPS):
        psi = form + hstar.scale(eps)
        if kirillov_kernel(g, psi) == kernel and psi(h) != 0:
            cert = is_contact_form(g, psi)
            assert cert is not None
            return cert
        eps /= 2
    logger.error(
        "contactify exhausted the epsilon schedule on %s; kernel preservation "
        "failed for every step",
        g.label or "<unlabeled algebra>",
    )
    return None
