"""Randomized structural checks with a fixed seed (exact assertions only)."""

import random

from arrangements import (
    BadPrime,
    IntPoly,
    chamber_count,
    char_poly,
    char_poly_recursion,
    compare_coefficients,
    find_free_basis,
    finite_field_char_poly,
    intersection_lattice,
    moebius_bruteforce,
    multiarrangement,
    rank2_exponents,
    region_count_recursion,
    saito_check,
    simple_multiarrangement,
)
from conftest import random_central, seeded


def test_oracle_triple_agreement_random():
    rng = seeded(1201)
    for _ in range(40):
        arr = random_central(rng)
        chi = char_poly(arr)
        assert char_poly_recursion(arr) == chi
        assert region_count_recursion(arr) == chamber_count(arr)
        try:
            assert finite_field_char_poly(arr) == chi
        except BadPrime:
            pass  # coefficient growth can exceed the point-count budget


def test_moebius_bruteforce_agreement_random():
    rng = seeded(1202)
    for _ in range(30):
        arr = random_central(rng)
        lat = intersection_lattice(arr)
        mu = moebius_bruteforce(arr)
        assert len(mu) == len(lat.flats)
        for flat in lat.flats:
            assert mu[flat.equations] == lat.moebius_of(flat)


def test_moebius_sign_alternation_random():
    rng = seeded(1203)
    for _ in range(40):
        arr = random_central(rng)
        lat = intersection_lattice(arr)
        for flat in lat.flats:
            mu = lat.moebius_of(flat)
            assert mu != 0
            assert (mu > 0) == (flat.codim % 2 == 0)


def test_random_rank2_multiarrangements_always_free():
    rng = seeded(1204)
    for _ in range(30):
        arr = random_central(rng, dim=2, max_hyperplanes=4)
        mult = tuple(rng.randint(0, 3) for _ in range(arr.n_hyperplanes))
        multi = multiarrangement(arr, mult)
        verdict = find_free_basis(multi)
        assert verdict.is_free
        assert sum(verdict.exponents) == multi.total
        if multi.rank() == 2 and multi.total > 0:
            exps = rank2_exponents(multi)
            assert sorted(exps) == sorted(verdict.exponents)
            assert saito_check(exps.basis, multi)


def test_random_dim3_freeness_search_is_decisive():
    rng = seeded(1205)
    free_seen = notfree_seen = 0
    for _ in range(30):
        arr = random_central(rng, dim=3)
        verdict = find_free_basis(simple_multiarrangement(arr))
        assert not verdict.is_unknown
        if verdict.is_free:
            free_seen += 1
            # Factorization: chi splits over the exponents.
            assert IntPoly.from_roots(verdict.exponents) == char_poly(arr)
        else:
            notfree_seen += 1
            assert verdict.witness
    assert free_seen and notfree_seen  # the sample exercises both branches


def test_random_coefficient_inequality_rank_le_3():
    # Rank <= 3 inputs are tame, so b_i >= sigma_i >= 0 must hold whenever
    # sigma_i is exact; the comparison itself enforces the theorem guard.
    rng = seeded(1206)
    checked = 0
    for _ in range(30):
        arr = random_central(rng)
        if arr.n_hyperplanes < 2:
            continue
        h0 = rng.randrange(arr.n_hyperplanes)
        report = compare_coefficients(arr, h0)
        assert report.tame_arrangement.is_tame
        for i, b_i in enumerate(report.table.b):
            status = report.table.sigma[i]
            if status.exact:
                assert b_i >= status.value >= 0
                assert report.inequality[i] is True
            else:
                assert report.inequality[i] is None
        checked += 1
    assert checked >= 20
