"""Deciding freeness: direct search, Saito certificates, and criteria.

An arrangement is free when its module of logarithmic derivations is a
free module over the polynomial ring; the generator degrees are the
exponents.  Freeness can be settled several ways, and the point of this
demo is that the independent ways agree:

  * a degree-by-degree search for a generating set (with a Saito
    determinant certificate when it succeeds),
  * a chamber-counting criterion in rank 3,
  * a division criterion comparing the arrangement with its restriction.

Run with:  python demos/03_freeness_criteria.py
"""

from arrangements import (
    IntPoly,
    abe_yoshinaga_free_check,
    canonicalize,
    chamber_count,
    char_poly,
    find_free_basis,
    saito_check,
    simple_multiarrangement,
    yoshinaga_3d,
    ziegler_restriction,
)


def banner(title):
    print()
    print("=" * 72)
    print(title)
    print("=" * 72)


BRAID = canonicalize(
    [(1, -1, 0), (1, 0, -1), (0, 1, -1),
     (1, 0, 0), (0, 1, 0), (0, 0, 1)], 3)
GENERIC = canonicalize(
    [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)], 3)

# ----------------------------------------------------------------------
# Route one: search for a basis of D(A) degree by degree.  When it
# finds dim-many generators whose degrees sum to the number of
# hyperplanes, Saito's criterion certifies them as a basis.
# ----------------------------------------------------------------------
banner("1. Direct search for a free basis")

for name, A in [("braid-like", BRAID), ("generic", GENERIC)]:
    multi = simple_multiarrangement(A)
    v = find_free_basis(multi)
    print(f"{name}: {v.status}", end="")
    if v.exponents is not None:
        print(f", exponents {v.exponents}")
        for theta in v.basis:
            print(f"    {theta}")
        print(f"    Saito check: {saito_check(v.basis, multi)}")
    else:
        print(f"\n    witness: {v.witness}")

# For the free one, chi factors over the exponents; for the generic
# one no integer factorization exists.
chi = char_poly(BRAID)
print(f"\nchi(braid-like) = {chi}")
print(f"  equals prod (t - e_i) for e = (1, 2, 3)? "
      f"{chi == IntPoly.from_roots([1, 2, 3])}")
print(f"chi(generic)    = {char_poly(GENERIC)}"
      f"   (t = 1 is its only integer root)")

# ----------------------------------------------------------------------
# Route two, special to rank 3: compare the chamber count of the
# deconed arrangement against the product (1 + d1)(1 + d2) built from
# the multiexponents of the Ziegler restriction.  Equality holds
# exactly for free arrangements, so the test is decisive either way.
# ----------------------------------------------------------------------
banner("2. Chamber-counting criterion in rank 3")

for name, A, h0 in [("braid-like", BRAID, 0), ("generic", GENERIC, 3)]:
    v = yoshinaga_3d(A, h0)
    print(f"{name}: {v.status}")
    if v.witness:
        print(f"    {v.witness}")

# ----------------------------------------------------------------------
# Route three: induction through the Ziegler restriction.  A is free
# iff its restriction (as a multiarrangement) is free AND the second
# coefficients b_2, sigma_2 agree.  This works in any rank; here it
# settles a 4-dimensional arrangement by recursing on a 3-dimensional
# multiarrangement.
# ----------------------------------------------------------------------
banner("3. Restriction criterion in rank 4")

BRAID4 = canonicalize(
    [(1, -1, 0, 0), (1, 0, -1, 0), (1, 0, 0, -1),
     (0, 1, -1, 0), (0, 1, 0, -1), (0, 0, 1, -1),
     (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)], 4)
print(BRAID4)

v = abe_yoshinaga_free_check(BRAID4, 0)
print(f"verdict: {v.status}, exponents {v.exponents}")

zr = ziegler_restriction(BRAID4, 0)
rv = find_free_basis(zr)
print(f"the restriction itself: {rv.status}, multiexponents "
      f"{rv.exponents}  (= the exponents of A with the leading 1 removed)")

# Cross-check with the direct search in dimension 4.
direct = find_free_basis(simple_multiarrangement(BRAID4))
print(f"direct search agrees: {direct.status}, exponents "
      f"{direct.exponents}")
assert direct.exponents == v.exponents

# ----------------------------------------------------------------------
# What a refusal to guess looks like.  The search explores derivation
# degrees only up to a bound; with the bound forced artificially low it
# reports Unknown rather than NotFree, and records the bound that fell
# short.  The default bound (|m|) is always enough to decide.
# ----------------------------------------------------------------------
banner("4. Degree bounds: Unknown is an honest answer")

low = find_free_basis(simple_multiarrangement(BRAID), degree_bound=2)
print(f"braid-like with degree bound 2: {low.status}  "
      f"(bound searched: {low.bound})")
full = find_free_basis(simple_multiarrangement(BRAID))
print(f"braid-like with default bound:  {full.status}, "
      f"exponents {full.exponents}")

# Sometimes a low bound still decides: for five generic hyperplanes in
# R^4 the degree-1 computation alone already rules out every exponent
# profile, so NotFree is certified without seeing high degrees.
GEN45 = canonicalize(
    [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1),
     (1, 1, 1, 1)], 4)
pruned = find_free_basis(simple_multiarrangement(GEN45), degree_bound=1)
print(f"5 generic hyperplanes in R^4, bound 1: {pruned.status}")
print(f"    witness: {pruned.witness}")

print()
print(f"chambers of the braid-like arrangement: {chamber_count(BRAID)}"
      f" = (1+1)(1+2)(1+3)")
print("free arrangements count their chambers through their exponents.")
