"""Intersection lattices, Moebius functions and characteristic polynomials."""

import pytest

from arrangements import (
    CORPUS,
    FlatNotInLattice,
    IntPoly,
    NonzeroRemainder,
    chamber_count,
    char_poly,
    decone,
    intersection_lattice,
    moebius_bruteforce,
    reduced_char_poly,
)
from conftest import make


def coeffs(poly):
    return [poly.coefficient(k) for k in range(poly.degree + 1)]


def test_empty_arrangement():
    arr = make([], 3)
    lat = intersection_lattice(arr)
    assert lat.level_sizes() == {0: 1}
    assert char_poly(arr) == IntPoly.monomial(3)
    assert chamber_count(arr) == 1
    with pytest.raises(NonzeroRemainder):
        reduced_char_poly(arr)


def test_single_hyperplane():
    arr = make([[1, -1]], 2)
    lat = intersection_lattice(arr)
    assert lat.level_sizes() == {0: 1, 1: 1}
    assert coeffs(char_poly(arr)) == [0, -1, 1]  # chi = t^2 - t
    assert chamber_count(arr) == 2


def test_braid_ess3_lattice_shape():
    # Derived by brute-force intersection enumeration: 7 codimension-2 flats,
    # four of them triple points, three double.
    arr = CORPUS["braid-ess3"].arrangement
    lat = intersection_lattice(arr)
    assert lat.level_sizes() == {0: 1, 1: 6, 2: 7, 3: 1}
    sizes = sorted(len(f.contained) for f in lat.level(2))
    assert sizes == [2, 2, 2, 3, 3, 3, 3]
    triples = [f for f in lat.level(2) if len(f.contained) == 3]
    for flat in triples:
        assert lat.moebius_of(flat) == 2
        assert moebius_bruteforce(arr, flat) == 2


def test_moebius_against_bruteforce_on_corpus():
    for entry in CORPUS.values():
        arr = entry.arrangement
        lat = intersection_lattice(arr)
        mu = moebius_bruteforce(arr)
        assert len(mu) == len(lat.flats)
        for flat in lat.flats:
            assert mu[flat.equations] == lat.moebius_of(flat)


def test_moebius_sign_alternation():
    for name in ("braid-ess3", "generic34", "supersolvable3", "braid-ess4"):
        lat = intersection_lattice(CORPUS[name].arrangement)
        for flat in lat.flats:
            mu = lat.moebius_of(flat)
            assert mu != 0
            assert (mu > 0) == (flat.codim % 2 == 0)


def test_char_poly_corpus_values():
    for entry in CORPUS.values():
        assert coeffs(char_poly(entry.arrangement)) == entry.expected["char_poly"]["value"]


def test_chamber_count_corpus_values():
    for entry in CORPUS.values():
        assert chamber_count(entry.arrangement) == entry.expected["chambers"]["value"]


def test_reduced_char_poly_divides_exactly():
    for entry in CORPUS.values():
        arr = entry.arrangement
        chi0 = reduced_char_poly(arr)
        t_minus_1 = IntPoly((-1, 1))
        assert chi0 * t_minus_1 == char_poly(arr)


def test_reduced_char_poly_rejects_affine_input():
    dA = decone(CORPUS["boolean3"].arrangement, 0)
    with pytest.raises(TypeError):
        reduced_char_poly(dA)


def test_affine_lattice_via_decone():
    # Deconing braid-ess3 gives 5 affine hyperplanes with chi = t^2 - 5t + 6,
    # derived independently by the deletion-restriction recursion.
    arr = CORPUS["braid-ess3"].arrangement
    for h0 in range(arr.n_hyperplanes):
        dA = decone(arr, h0)
        assert dA.n_hyperplanes == 5
        assert coeffs(char_poly(dA)) == [6, -5, 1]


def test_lookup_and_flat_not_in_lattice():
    arr = make([[1, 0], [0, 1]], 2)
    other = make([[1, 1], [1, -1]], 2)
    lat = intersection_lattice(arr)
    foreign = next(f for f in intersection_lattice(other).flats if f.codim == 1)
    with pytest.raises(FlatNotInLattice):
        lat.lookup(foreign)
    for flat in lat.flats:
        assert lat.lookup(flat) is flat
        assert lat.index_of(flat) is not None


def test_lattice_rank_for_non_essential_arrangement():
    arr = make([[1, 0, 0], [0, 1, 0]], 3)
    lat = intersection_lattice(arr)
    assert lat.rank == 2
    assert lat.level_sizes() == {0: 1, 1: 2, 2: 1}
    assert coeffs(char_poly(arr)) == [0, 1, -2, 1]  # t(t-1)^2
