"""Independent oracles: finite-field counts, recursions, brute-force Moebius."""

import pytest

from arrangements import (
    CORPUS,
    BadPrime,
    FlatNotInLattice,
    chamber_count,
    char_poly,
    char_poly_recursion,
    decone,
    finite_field_char_poly,
    good_primes,
    intersection_lattice,
    minor_bound,
    moebius_bruteforce,
    point_count,
    region_count_recursion,
)
from conftest import make


def test_minor_bound_small_cases():
    assert minor_bound(make([[1, 0], [0, 1], [1, 1]], 2)) == 1
    assert minor_bound(make([[2, 1], [1, 3]], 2)) == 5  # the 2x2 determinant
    assert minor_bound(make([], 2)) == 0


def test_good_primes_exceed_bound_and_count():
    arr = make([[1, 0], [0, 1], [1, 1]], 2)
    primes = good_primes(arr)
    assert len(primes) == arr.dim + 1
    assert all(q > minor_bound(arr) for q in primes)
    assert list(primes) == [2, 3, 5]


def test_good_primes_budget_guard():
    arr = make([[1] + [0] * 23], 24)
    with pytest.raises(BadPrime):
        good_primes(arr)


def test_point_count_matches_char_poly_evaluation():
    boolean2 = CORPUS["boolean2"].arrangement
    assert point_count(boolean2, 3) == 4  # (3-1)^2
    braid = CORPUS["braid-ess3"].arrangement
    chi = char_poly(braid)
    for q in (7, 11, 13):
        assert point_count(braid, q) == chi(q)


def test_finite_field_char_poly_on_corpus():
    for entry in CORPUS.values():
        arr = entry.arrangement
        assert finite_field_char_poly(arr) == char_poly(arr)


def test_finite_field_witnesses():
    arr = CORPUS["braid-ess3"].arrangement
    chi, witnesses = finite_field_char_poly(arr, with_witnesses=True)
    assert chi == char_poly(arr)
    assert len(witnesses) >= arr.dim + 1
    for w in witnesses:
        assert w.accepted
        assert w.point_count == chi(w.prime)


def test_finite_field_prime_validation():
    arr = CORPUS["braid-ess3"].arrangement
    with pytest.raises(BadPrime):
        finite_field_char_poly(arr, primes=[5, 7])  # fewer than dim+1
    with pytest.raises(BadPrime):
        finite_field_char_poly(arr, primes=[4, 5, 7, 9])  # composites
    # a custom list of good primes works
    assert finite_field_char_poly(arr, primes=[5, 7, 11, 13]) == char_poly(arr)

    skewed = make([[2, 1], [1, 3]], 2)
    assert minor_bound(skewed) == 5
    with pytest.raises(BadPrime):
        finite_field_char_poly(skewed, primes=[3, 7, 11])  # 3 <= bound 5
    assert finite_field_char_poly(skewed, primes=[7, 11, 13]) == char_poly(skewed)


def test_recursions_match_lattice_computations():
    for entry in CORPUS.values():
        arr = entry.arrangement
        assert char_poly_recursion(arr) == char_poly(arr)
        assert region_count_recursion(arr) == chamber_count(arr)


def test_recursions_on_affine_slices():
    for name in ("braid-ess3", "generic34", "supersolvable3"):
        arr = CORPUS[name].arrangement
        for h0 in range(arr.n_hyperplanes):
            dA = decone(arr, h0)
            assert char_poly_recursion(dA) == char_poly(dA)
            assert region_count_recursion(dA) == chamber_count(dA)


def test_recursion_base_cases():
    empty = make([], 3)
    assert region_count_recursion(empty) == 1
    assert char_poly_recursion(empty) == char_poly(empty)
    single = make([[1, -2]], 2)
    assert region_count_recursion(single) == 2


def test_moebius_bruteforce_matches_lattice():
    for name in ("boolean3", "braid-ess3", "generic45", "supersolvable3"):
        arr = CORPUS[name].arrangement
        lat = intersection_lattice(arr)
        mu = moebius_bruteforce(arr)
        assert len(mu) == len(lat.flats)
        for flat in lat.flats:
            assert mu[flat.equations] == lat.moebius_of(flat)
            assert moebius_bruteforce(arr, flat) == lat.moebius_of(flat)


def test_moebius_bruteforce_flat_validation():
    arr = make([[1, 0], [0, 1]], 2)
    foreign = next(
        f
        for f in intersection_lattice(make([[1, 1], [1, -1]], 2)).flats
        if f.codim == 1
    )
    with pytest.raises(FlatNotInLattice):
        moebius_bruteforce(arr, foreign)


def test_moebius_bruteforce_size_limit():
    forms = [[1, k] for k in range(16)] + [[0, 1]]
    arr = make(forms, 2)
    with pytest.raises(ValueError):
        moebius_bruteforce(arr)
