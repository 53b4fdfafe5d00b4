"""Logarithmic derivation modules of multiarrangements.

D(A,m) is the module of polynomial vector fields theta with alpha_H**m(H)
dividing theta(alpha_H) for every hyperplane.  Everything here is exact:
graded pieces are kernels of rational constraint matrices in the monomial
basis, freeness searches select true minimal generators degree by degree
(a generator is new exactly when it falls outside the polynomial-ring span
of the earlier ones, by the graded Nakayama count), and verdicts are
certified either by the Saito determinant identity or by a Hilbert-series
contradiction, so Free and NotFree are both proofs.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .core import CentralArrangement, Multiarrangement, essentialize, var_names
from .errors import (
    DimensionMismatch,
    EmptyMultiarrangement,
    NotADerivation,
    WrongRank,
)
from .lattice import intersection_lattice
from .linalg import _Echelon, nullspace, primitive_vector
from .polynomials import (
    IntPoly,
    mp_add_inplace,
    mp_determinant,
    mp_divisible_by_linear_power,
    mp_format,
    mp_from_linear,
    mp_mul,
    mp_mul_monomial,
    mp_pow,
    mp_proportionality,
    monomial_count,
    monomial_residue_mod_linear_power,
    monomials,
)
from .restriction import localize_and_essentialize

FREE = "Free"
NOT_FREE = "NotFree"
UNKNOWN = "Unknown"


class PolyVectorField:
    """Homogeneous vector field sum_i f_i d/dx_i with polynomial coefficients.

    components[i] is the sparse polynomial f_i as {exponent tuple: value};
    all monomials across all components must share one total degree.  The
    zero field has degree -1.
    """

    __slots__ = ("components", "degree")

    def __init__(self, components):
        comps = []
        degrees = set()
        for c in components:
            clean = {tuple(e): v for e, v in c.items() if v != 0}
            comps.append(clean)
            degrees.update(sum(e) for e in clean)
        if len(degrees) > 1:
            raise ValueError("components are not homogeneous of a common degree")
        self.components = tuple(comps)
        self.degree = degrees.pop() if degrees else -1

    @property
    def nvars(self):
        return len(self.components)

    @property
    def is_zero(self):
        return self.degree < 0

    def apply_to_form(self, form):
        """theta(alpha) = sum_i alpha_i f_i for a linear form alpha."""
        out = {}
        for a, comp in zip(form, self.components):
            if a != 0:
                mp_add_inplace(out, comp, a)
        return out

    def __eq__(self, other):
        return (
            isinstance(other, PolyVectorField)
            and self.components == other.components
        )

    def __repr__(self):
        names = var_names(self.nvars)
        parts = [
            f"({mp_format(c, names)})*d/d{n}"
            for c, n in zip(self.components, names)
            if c
        ]
        return " + ".join(parts) if parts else "0"


def euler_field(dim):
    """The field x_1 d/dx_1 + ... + x_dim d/dx_dim."""
    comps = []
    for i in range(dim):
        e = [0] * dim
        e[i] = 1
        comps.append({tuple(e): 1})
    return PolyVectorField(comps)


class Exponents(tuple):
    """Nondecreasing exponent tuple, optionally carrying a certifying basis."""

    def __new__(cls, values, basis=None):
        self = super().__new__(cls, values)
        self.basis = basis
        return self


@dataclass
class FreenessVerdict:
    """Outcome of a freeness decision.

    status is one of "Free", "NotFree", "Unknown".  exponents and basis are
    set for Free via the basis search (criteria-derived Free verdicts carry
    exponents only); the basis lives in the coordinates of `essential`, the
    essentialized model actually searched (equal to the input when that was
    already essential).  witness explains NotFree; bound is the degree bound
    that an Unknown search exhausted.
    """

    status: str
    exponents: tuple = None
    basis: tuple = None
    witness: str = None
    bound: int = None
    essential: Multiarrangement = None

    @property
    def is_free(self):
        return self.status == FREE

    @property
    def is_not_free(self):
        return self.status == NOT_FREE

    @property
    def is_unknown(self):
        return self.status == UNKNOWN


def defining_polynomial(multi):
    """Q(A,m): the product of alpha_H**m(H) over effective hyperplanes."""
    out = {(0,) * multi.dim: 1}
    for i in multi.effective():
        out = mp_mul(out, mp_pow(mp_from_linear(multi.base.forms[i]), multi.mult[i]))
    return out


def derivation_membership(theta, multi):
    """True iff alpha_H**m(H) divides theta(alpha_H) for every hyperplane."""
    if theta.nvars != multi.dim:
        raise DimensionMismatch(
            f"field has {theta.nvars} components, arrangement dimension is {multi.dim}"
        )
    for i in multi.effective():
        value = theta.apply_to_form(multi.base.forms[i])
        if not mp_divisible_by_linear_power(value, multi.base.forms[i], multi.mult[i]):
            return False
    return True


def _graded_kernel(multi, d):
    """Canonical basis of the degree-d piece of D(A,m).

    Returns (kernel vectors, monomial list): a vector is indexed by
    component-major (i * N + k) positions over the degree-d monomials.
    """
    ell = multi.dim
    monos = monomials(ell, d)
    n_monos = len(monos)
    ncols = ell * n_monos
    if ncols == 0:
        return [], monos
    rows = {}
    for h in multi.effective():
        alpha = multi.base.forms[h]
        power = multi.mult[h]
        for k, mono in enumerate(monos):
            residues = monomial_residue_mod_linear_power(mono, alpha, power)
            for key, val in residues.items():
                for i, a in enumerate(alpha):
                    if a == 0:
                        continue
                    row = rows.setdefault((h,) + key, {})
                    col = i * n_monos + k
                    row[col] = row.get(col, 0) + a * val
    dense = [
        tuple(row.get(c, 0) for c in range(ncols))
        for _, row in sorted(rows.items())
    ]
    return nullspace(dense, ncols), monos


def derivation_space_dim(multi, d):
    """Dimension over Q of the homogeneous degree-d part of D(A,m)."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    kernel, _ = _graded_kernel(multi, d)
    return len(kernel)


def _field_from_vector(vec, monos, ell):
    ints = primitive_vector(vec)
    n_monos = len(monos)
    comps = []
    for i in range(ell):
        comp = {}
        for k, mono in enumerate(monos):
            c = ints[i * n_monos + k]
            if c:
                comp[mono] = c
        comps.append(comp)
    return PolyVectorField(comps)


def _vector_of_field(field, monos_index, ell):
    vec = [0] * (ell * len(monos_index))
    for i, comp in enumerate(field.components):
        for exps, c in comp.items():
            vec[i * len(monos_index) + monos_index[exps]] = c
    return vec


def _partitions(total, parts, minimum=1):
    """Nondecreasing tuples of `parts` integers >= minimum summing to total."""
    if parts == 0:
        return [()] if total == 0 else []
    out = []
    for first in range(minimum, total // parts + 1):
        for rest in _partitions(total - first, parts - 1, first):
            out.append((first,) + rest)
    return out


def find_free_basis(multi, degree_bound=None):
    """Decide freeness of D(A,m) by exact minimal-generator search.

    Scans degrees 1..bound (default |m|, which is decisive): at each degree
    the new minimal generators are the kernel elements outside the
    polynomial-ring span of the generators already found.  Free is certified
    by the Saito determinant; NotFree by any of: more than rank-many minimal
    generators, rank-many with degree sum different from |m|, rank-many
    failing the determinant identity, no exponent partition matching the
    graded dimensions, or exhaustion of all degrees up to |m|.  Unknown only
    occurs when a user-supplied bound below |m| runs out.
    """
    ess, center_dim = essentialize(multi)
    rank = ess.dim
    zeros = (0,) * center_dim

    def free(exponents, basis):
        return FreenessVerdict(
            FREE,
            exponents=zeros + tuple(exponents),
            basis=tuple(basis),
            essential=ess,
        )

    if rank == 0:
        return free((), ())
    if rank == 1:
        # one hyperplane x**m in one variable: basis x**m d/dx
        m = ess.total
        return free((m,), (PolyVectorField([{(m,): 1}]),))

    total = ess.total
    bound = total if degree_bound is None else int(degree_bound)
    partitions = _partitions(total, rank)
    gens = []
    for d in range(1, bound + 1):
        kernel, monos = _graded_kernel(ess, d)
        monos_index = {m: k for k, m in enumerate(monos)}
        span = _Echelon(rank * len(monos))
        for g in gens:
            shift = d - g.degree
            for mono in monomials(rank, shift):
                moved = PolyVectorField(
                    [mp_mul_monomial(c, mono) for c in g.components]
                )
                span.add(_vector_of_field(moved, monos_index, rank))
        for vec in kernel:
            if span.add(vec):
                gens.append(_field_from_vector(vec, monos, rank))
        if len(gens) > rank:
            return FreenessVerdict(
                NOT_FREE,
                witness=f"{len(gens)} minimal generators by degree {d} "
                f"exceed the rank {rank}",
                essential=ess,
            )
        if len(gens) == rank:
            degrees = tuple(g.degree for g in gens)
            if sum(degrees) != total:
                return FreenessVerdict(
                    NOT_FREE,
                    witness=f"minimal generator degrees {degrees} "
                    f"sum to {sum(degrees)}, not |m| = {total}",
                    essential=ess,
                )
            if saito_check(gens, ess):
                return free(degrees, gens)
            return FreenessVerdict(
                NOT_FREE,
                witness="rank-many minimal generators fail the determinant "
                f"criterion at degrees {degrees}",
                essential=ess,
            )
        dim_d = len(kernel)
        partitions = [
            e
            for e in partitions
            if sum(monomial_count(rank, d - ei) for ei in e) == dim_d
        ]
        if not partitions:
            return FreenessVerdict(
                NOT_FREE,
                witness=f"graded dimension {dim_d} at degree {d} matches "
                "no exponent partition of |m|",
                essential=ess,
            )
    if bound >= total:
        return FreenessVerdict(
            NOT_FREE,
            witness=f"fewer than {rank} minimal generators exist up to "
            f"degree |m| = {total}, where any free basis must live",
            essential=ess,
        )
    return FreenessVerdict(UNKNOWN, bound=bound, essential=ess)


def saito_check(basis, multi):
    """Exact Saito criterion: det(theta_i(x_j)) is a nonzero constant
    multiple of Q(A,m)."""
    basis = tuple(basis)
    if len(basis) != multi.dim:
        raise DimensionMismatch(
            f"need {multi.dim} fields for a {multi.dim}-dimensional arrangement, "
            f"got {len(basis)}"
        )
    for i, theta in enumerate(basis):
        if not derivation_membership(theta, multi):
            raise NotADerivation(i)
    if any(theta.is_zero for theta in basis):
        return False
    if sum(theta.degree for theta in basis) != multi.total:
        return False
    det = mp_determinant([list(theta.components) for theta in basis])
    if not det:
        return False
    c = mp_proportionality(det, defining_polynomial(multi))
    return c is not None and c != 0


def rank2_exponents(multi):
    """Exponents (d1 <= d2) of an essential rank-2 multiarrangement.

    Rank-2 multiarrangements are always free, so the search is guaranteed
    to succeed; the result carries the certifying basis as `.basis`.
    """
    if multi.total == 0:
        raise EmptyMultiarrangement("rank-2 exponents need at least one hyperplane")
    if multi.dim != 2 or multi.rank() != 2:
        raise WrongRank("expected an essential multiarrangement of rank 2")
    verdict = find_free_basis(multi)
    assert verdict.is_free, "a rank-2 multiarrangement must be free"
    return Exponents(verdict.exponents, basis=verdict.basis)


def multi_char_poly_free(exponents):
    """Characteristic polynomial of a free multiarrangement: prod (t - e_i)."""
    return IntPoly.from_roots(exponents)


@dataclass(frozen=True)
class SigmaStatus:
    """One sigma-coefficient: exact integer value or None, and how it was
    obtained ("definition", "rank<=2", "free-factorization",
    "local-to-global")."""

    value: object
    method: str

    @property
    def exact(self):
        return self.value is not None


def elementary_symmetric(values, k):
    out = 0
    for combo in combinations(values, k):
        prod = 1
        for v in combo:
            prod *= v
        out += prod
    return out


def _local_exponent_product(ess, flat, degree_bound):
    """Product of the exponents of the essentialized localization at a flat,
    or None when that localization's freeness stays unresolved."""
    loc = localize_and_essentialize(ess, flat)
    # rank <= 2 localizations are always free; never let a user bound
    # leave them unresolved
    bound = None if flat.codim <= 2 else degree_bound
    verdict = find_free_basis(loc, bound)
    if not verdict.is_free:
        return None
    prod = 1
    for e in verdict.exponents:
        prod *= e
    return prod


def sigma_coefficients(multi, degree_bound=None):
    """The vector (sigma_0, ..., sigma_r) of chi(A, m, t), r = rank.

    sigma_0 = 1 and sigma_1 = |m| by definition.  When D(A,m) is verified
    free the remaining coefficients come from the factorization
    prod (t - e_i); otherwise sigma_k is summed over the codimension-k flats
    from the exponents of the free localizations, and stays None whenever
    some required localization cannot be resolved within the bound.
    """
    ess, _ = essentialize(multi)
    rank = ess.dim
    out = [SigmaStatus(1, "definition")]
    if rank == 0:
        return tuple(out)
    out.append(SigmaStatus(ess.total, "definition"))
    if rank == 1:
        return tuple(out)
    verdict = find_free_basis(ess, None if rank <= 2 else degree_bound)
    if verdict.is_free:
        method = "rank<=2" if rank <= 2 else "free-factorization"
        for k in range(2, rank + 1):
            out.append(
                SigmaStatus(elementary_symmetric(verdict.exponents, k), method)
            )
        return tuple(out)
    lattice = intersection_lattice(ess.base)
    for k in range(2, rank + 1):
        acc = 0
        for flat in lattice.flats:
            if flat.codim != k:
                continue
            prod = _local_exponent_product(ess, flat, degree_bound)
            if prod is None:
                acc = None
                break
            acc += prod
        out.append(SigmaStatus(acc, "local-to-global"))
    return tuple(out)


def sigma_per_flat(multi, degree_bound=None):
    """Local sigma contribution for every flat of the effective base lattice.

    Returns {Flat: product of local exponents or None}.  Requires the
    multiarrangement to be essential so the flats stay in input coordinates.
    """
    ess, center_dim = essentialize(multi)
    if center_dim != 0:
        raise WrongRank("per-flat sigma values need an essential multiarrangement")
    lattice = intersection_lattice(ess.base)
    return {
        flat: _local_exponent_product(ess, flat, degree_bound)
        for flat in lattice.flats
    }
