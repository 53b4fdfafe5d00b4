"""Multiarrangements, Ziegler restriction, and rank-2 exponents.

A multiarrangement assigns a positive multiplicity to each hyperplane;
its logarithmic derivation module asks for derivations tangent to each
hyperplane to the prescribed order.  Restricting a simple arrangement
to one of its hyperplanes produces a canonical multiarrangement -- the
Ziegler restriction -- whose multiplicities count how many hyperplanes
collapse onto each image.  In rank 2 every multiarrangement is free,
and the exponents are computable exactly.

Run with:  python demos/02_ziegler_and_multiexponents.py
"""

from arrangements import (
    canonicalize,
    derivation_space_dim,
    find_free_basis,
    form_to_string,
    multi_char_poly_free,
    multiarrangement,
    rank2_exponents,
    reduced_char_poly,
    saito_check,
    ziegler_restriction,
)


def banner(title):
    print()
    print("=" * 72)
    print(title)
    print("=" * 72)


# ----------------------------------------------------------------------
# Start in rank 2, where the whole theory is explicit: three lines
# through the origin with multiplicities (2, 2, 1).
# ----------------------------------------------------------------------
banner("1. Three lines with multiplicities (2, 2, 1)")

lines = canonicalize([(1, 0), (0, 1), (1, -1)], 2)
m = multiarrangement(lines, (2, 2, 1))
print(m)
for form, mult in zip(lines.forms, m.mult):
    print(f"  {form_to_string(form)} = 0   with multiplicity {mult}")
print(f"|m| = {m.total}")

# The exponents of a rank-2 multiarrangement always exist and always
# sum to |m|.
e = rank2_exponents(m)
print(f"exponents: {tuple(e)}   (sum = {sum(e)})")

# The same answer falls out of the general degree-by-degree search,
# together with an explicit basis of the derivation module.
verdict = find_free_basis(m)
print(f"general search: {verdict.status}, exponents {verdict.exponents}")
for theta in verdict.basis:
    print(f"  basis element: {theta}")

# Saito's criterion certifies the basis: the determinant of the
# coefficient matrix equals the defining polynomial (with multiplicity)
# up to a nonzero constant.
print(f"Saito criterion on this basis: {saito_check(verdict.basis, m)}")

# ----------------------------------------------------------------------
# The graded dimensions dim D(A, m)_d themselves.  For a free module
# with exponents (e_1, e_2) the dimension in degree d counts monomial
# multiples of the two generators, so it grows linearly once both are
# in play: 0, 0, 1, 3, 5, 7, ...
# ----------------------------------------------------------------------
banner("2. Graded dimensions of the derivation module")

for d in range(6):
    print(f"  dim D(A, m)_{d} = {derivation_space_dim(m, d)}")
print("exponents (2, 3): one generator in degree 2, one in degree 3")

# ----------------------------------------------------------------------
# Ziegler restriction.  Take the essential braid-like arrangement in
# R^3 and restrict to its first hyperplane: the images of the other
# hyperplanes coincide in pairs, and the multiplicity records how many
# land on each image.
# ----------------------------------------------------------------------
banner("3. Ziegler restriction of a free 3-dimensional arrangement")

A = canonicalize(
    [
        (1, -1, 0), (1, 0, -1), (0, 1, -1),   # x-y, x-z, y-z
        (1, 0, 0), (0, 1, 0), (0, 0, 1),      # x, y, z
    ],
    3,
)
print(A)

zr = ziegler_restriction(A, 0)
# On H0 = {x = y} the surviving coordinates are (y, z).
kept = ("y", "z")
print("Ziegler restriction to H0 (x - y = 0), coordinates (y, z):")
for form, mult in zip(zr.base.forms, zr.mult):
    print(f"  {form_to_string(form, kept)} = 0   with multiplicity {mult}")
print(f"|m| = {zr.total} = n - 1 = {A.n_hyperplanes - 1}")

# The restriction is again rank 2, so its exponents are exact.
ze = rank2_exponents(zr)
print(f"multiexponents of the restriction: {tuple(ze)}")

# For a free arrangement the multiexponents of the Ziegler restriction
# are the exponents of A with the leading 1 removed, and their monic
# product matches the reduced characteristic polynomial of A.
chi0 = reduced_char_poly(A)
predicted = multi_char_poly_free(tuple(ze))
print(f"chi_0(A, t)                      = {chi0}")
print(f"prod (t - e_i) over multiexps    = {predicted}")
assert predicted == chi0
print("the restriction sees the reduced characteristic polynomial exactly")

# ----------------------------------------------------------------------
# A non-free contrast: four generic planes in R^3.  The Ziegler
# restriction is three distinct lines with multiplicity one each --
# it has collapsed nothing -- and its exponents (1, 2) do NOT multiply
# out to chi_0 = t^2 - 3t + 3, which is irreducible over the integers.
# ----------------------------------------------------------------------
banner("4. The same construction on a generic (non-free) arrangement")

G = canonicalize(
    [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)], 3
)
gzr = ziegler_restriction(G, 3)
# On H3 = {x + y + z = 0} the surviving coordinates are again (y, z).
print("restrict 4 generic planes to x + y + z = 0:")
for form, mult in zip(gzr.base.forms, gzr.mult):
    print(f"  {form_to_string(form, kept)} = 0   with multiplicity {mult}")
ge = rank2_exponents(gzr)
print(f"multiexponents: {tuple(ge)}")
print(f"prod (t - e_i)  = {multi_char_poly_free(tuple(ge))}")
print(f"chi_0(G, t)     = {reduced_char_poly(G)}")
print("mismatch -- consistent with G not being free")
