"""Arrangement data types and input canonicalization.

A hyperplane through the origin is stored as the primitive integer vector of
its defining linear form with positive leading entry, which makes equality of
hyperplanes a tuple comparison.  Affine hyperplanes a.x = c store (a, c)
jointly primitive under the same sign convention.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DimensionMismatch, DuplicateHyperplane, ZeroForm
from .linalg import echelon, primitive_vector


@dataclass(frozen=True)
class CentralArrangement:
    """Finite set of distinct linear hyperplanes through the origin."""

    dim: int
    forms: tuple  # tuple of primitive integer coefficient tuples

    def __post_init__(self):
        if self.dim < 0:
            raise DimensionMismatch("dimension must be nonnegative")
        for f in self.forms:
            if len(f) != self.dim:
                raise DimensionMismatch(
                    f"form {f} has {len(f)} coefficients, expected {self.dim}"
                )

    @property
    def n_hyperplanes(self):
        return len(self.forms)

    def rank(self):
        """Codimension of the common intersection of all hyperplanes."""
        return echelon(self.forms, self.dim).rank if self.forms else 0

    def is_essential(self):
        return self.rank() == self.dim

    def __repr__(self):
        return f"CentralArrangement(dim={self.dim}, n={len(self.forms)})"


@dataclass(frozen=True)
class AffineArrangement:
    """Finite set of distinct affine hyperplanes a.x = c."""

    dim: int
    hyperplanes: tuple  # tuple of (normal tuple, constant) pairs, jointly primitive

    def __post_init__(self):
        for normal, _c in self.hyperplanes:
            if len(normal) != self.dim:
                raise DimensionMismatch(
                    f"normal {normal} has {len(normal)} coefficients, expected {self.dim}"
                )

    @property
    def n_hyperplanes(self):
        return len(self.hyperplanes)

    def __repr__(self):
        return f"AffineArrangement(dim={self.dim}, n={len(self.hyperplanes)})"


@dataclass(frozen=True)
class Multiarrangement:
    """Central arrangement with a nonnegative multiplicity per hyperplane.

    Hyperplanes of multiplicity zero stay in the base for structural
    consistency but are invisible to every algebraic computation.
    """

    base: CentralArrangement
    mult: tuple

    def __post_init__(self):
        if len(self.mult) != self.base.n_hyperplanes:
            raise DimensionMismatch("one multiplicity per hyperplane required")
        if any(m < 0 for m in self.mult):
            raise ValueError("multiplicities must be nonnegative")

    @property
    def dim(self):
        return self.base.dim

    @property
    def total(self):
        """|m|, the degree of the defining polynomial."""
        return sum(self.mult)

    def effective(self):
        """Indices of hyperplanes with positive multiplicity."""
        return tuple(i for i, m in enumerate(self.mult) if m > 0)

    def rank(self):
        """Codimension of the intersection of the positive-multiplicity
        hyperplanes."""
        forms = [self.base.forms[i] for i in self.effective()]
        return echelon(forms, self.dim).rank if forms else 0

    def is_essential(self):
        return self.rank() == self.dim

    def __repr__(self):
        return f"Multiarrangement(dim={self.dim}, n={self.base.n_hyperplanes}, |m|={self.total})"


def normalize_form(raw):
    """Primitive integer vector with positive leading entry; ZeroForm if zero."""
    try:
        return primitive_vector(raw)
    except ValueError as exc:
        raise ZeroForm(str(exc)) from None


def canonicalize(raw_forms, dim):
    """Build a CentralArrangement from raw rational coefficient vectors.

    Scaling is quotiented out, so proportional inputs collide and raise
    DuplicateHyperplane with both offending positions.  Input order is kept.
    """
    forms = []
    seen = {}
    for idx, raw in enumerate(raw_forms):
        if len(raw) != dim:
            raise DimensionMismatch(
                f"form {idx} has {len(raw)} coefficients, expected {dim}"
            )
        form = normalize_form(raw)
        if form in seen:
            raise DuplicateHyperplane(seen[form], idx)
        seen[form] = idx
        forms.append(form)
    return CentralArrangement(dim, tuple(forms))


def normalize_affine(normal, constant):
    """Jointly primitive (normal, constant) with positive leading normal entry."""
    vec = list(normal) + [constant]
    if all(Fraction(x) == 0 for x in normal):
        raise ZeroForm("affine hyperplane needs a nonzero normal")
    prim = primitive_vector(vec)
    if next(v for v in prim[:-1] if v != 0) < 0:
        prim = tuple(-v for v in prim)
    return prim[:-1], prim[-1]


def multiarrangement(arrangement, mult):
    return Multiarrangement(arrangement, tuple(int(m) for m in mult))


def simple_multiarrangement(arrangement):
    """The arrangement viewed with all multiplicities equal to one."""
    return Multiarrangement(arrangement, (1,) * arrangement.n_hyperplanes)


def var_names(dim):
    if dim <= 4:
        return ("x", "y", "z", "w")[:dim]
    return tuple(f"x{i + 1}" for i in range(dim))


def form_to_string(form, names=None):
    names = names or var_names(len(form))
    parts = []
    for c, name in zip(form, names):
        if c == 0:
            continue
        mag = abs(c)
        term = name if mag == 1 else f"{mag}*{name}"
        if not parts:
            parts.append(term if c > 0 else "-" + term)
        else:
            parts.append(("+ " if c > 0 else "- ") + term)
    return " ".join(parts) if parts else "0"


class _EssentialMap:
    """Coordinate change onto the span of a set of forms.

    rows: canonical RREF basis of the span; a form in the span rewrites as
    the vector of its coefficients at the pivot columns.
    """

    def __init__(self, forms, dim):
        ech = echelon(forms, dim)
        self.dim = dim
        self.rows = ech.rref()
        self.pivots = [next(j for j, v in enumerate(r) if v != 0) for r in self.rows]
        self.rank = len(self.rows)

    def push_form(self, form):
        """Coordinates of a form (must lie in the span) in the RREF basis."""
        lam = [Fraction(form[p]) for p in self.pivots]
        for j in range(self.dim):
            val = sum(lam[i] * self.rows[i][j] for i in range(self.rank))
            if val != Fraction(form[j]):
                raise ValueError("form does not lie in the span")
        return lam


def essentialize(arr):
    """Essentialization of a central arrangement or multiarrangement.

    Returns (essential object, center_dim).  For a multiarrangement the
    multiplicity-zero hyperplanes are dropped, since the essential model only
    carries the algebraically visible part.
    """
    if isinstance(arr, Multiarrangement):
        idx = arr.effective()
        forms = [arr.base.forms[i] for i in idx]
        mult = [arr.mult[i] for i in idx]
        emap = _EssentialMap(forms, arr.dim)
        if emap.rank == arr.dim and len(idx) == arr.base.n_hyperplanes:
            return arr, 0
        new_forms = tuple(normalize_form(emap.push_form(f)) for f in forms)
        ess = Multiarrangement(
            CentralArrangement(emap.rank, new_forms), tuple(mult)
        )
        return ess, arr.dim - emap.rank
    emap = _EssentialMap(arr.forms, arr.dim)
    if emap.rank == arr.dim:
        return arr, 0
    new_forms = tuple(normalize_form(emap.push_form(f)) for f in arr.forms)
    return CentralArrangement(emap.rank, new_forms), arr.dim - emap.rank
