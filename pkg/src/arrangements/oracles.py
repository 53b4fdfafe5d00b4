"""Independent definition-level oracles.

These deliberately avoid the lattice machinery of the main pipeline:

* finite_field_char_poly counts points of F_q**l on no hyperplane and
  Lagrange-interpolates, with an exact bad-prime guard;
* char_poly_recursion / region_count_recursion run the deletion-restriction
  recursions chi(A) = chi(A-H) - chi(A|H) and r(A) = r(A-H) + r(A|H)
  directly on affine data, never consulting Moebius values;
* moebius_bruteforce enumerates all hyperplane subsets and evaluates the
  defining recursion literally.

They exist so the trusted path can be cross-examined; keep them slow and
obvious.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

import numpy as np

from .core import AffineArrangement, CentralArrangement, normalize_affine
from .errors import BadPrime, FlatNotInLattice, InconsistentCounts
from .lattice import hyperplane_rows
from .linalg import det, echelon
from .polynomials import IntPoly

MAX_POINTS = 10 ** 7
_CHUNK = 1 << 16


def minor_bound(arr):
    """Largest |det| over all square submatrices of the coefficient matrix.

    Any prime beyond this bound preserves the rank of every subset of forms
    modulo q, hence the whole intersection pattern; this is the bad-prime
    guard.
    """
    rows = arr.forms
    best = 0
    for k in range(1, min(len(rows), arr.dim) + 1):
        for ri in combinations(range(len(rows)), k):
            sub = [rows[i] for i in ri]
            for ci in combinations(range(arr.dim), k):
                d = abs(det([[row[c] for c in ci] for row in sub]))
                if d > best:
                    best = d
    return int(best)


def _is_prime(q):
    if q < 2:
        return False
    f = 2
    while f * f <= q:
        if q % f == 0:
            return False
        f += 1
    return True


def good_primes(arr, count=None):
    """The smallest count (default dim+1) primes exceeding the minor bound."""
    need = count if count is not None else arr.dim + 1
    bound = minor_bound(arr)
    out = []
    q = bound + 1
    while len(out) < need:
        if _is_prime(q):
            if q ** arr.dim > MAX_POINTS:
                raise BadPrime(
                    f"{q}**{arr.dim} exceeds the point-enumeration budget "
                    f"{MAX_POINTS}; the oracle is desk-scale by design"
                )
            out.append(q)
        q += 1
    return out


def point_count(arr, q):
    """Number of points of F_q**dim lying on no hyperplane."""
    ell = arr.dim
    total = q ** ell
    if ell == 0 or not arr.forms:
        return total
    w = np.array(arr.forms, dtype=np.int64) % q
    count = 0
    for start in range(0, total, _CHUNK):
        idx = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        coords = np.empty((ell, idx.size), dtype=np.int64)
        rest = idx
        for k in range(ell):
            coords[k] = rest % q
            rest = rest // q
        values = (w @ coords) % q
        count += int(np.all(values != 0, axis=0).sum())
    return count


@dataclass(frozen=True)
class PrimeWitness:
    prime: int
    point_count: int
    accepted: bool


def _lagrange(points):
    """Exact interpolation through (x, y) pairs; dense Fraction coefficients."""
    acc = [Fraction(0)] * len(points)
    for i, (xi, yi) in enumerate(points):
        num = [Fraction(1)]
        den = 1
        for j, (xj, _) in enumerate(points):
            if j == i:
                continue
            # multiply num by (t - xj)
            num = [Fraction(0)] + num
            for p in range(len(num) - 1):
                num[p] -= xj * num[p + 1]
            den *= xi - xj
        scale = Fraction(yi, den)
        for p, c in enumerate(num):
            acc[p] += scale * c
    return acc


def finite_field_char_poly(arr, primes=None, with_witnesses=False):
    """Characteristic polynomial by counting points over several F_q.

    Needs at least dim+1 distinct primes, each beyond the minor bound (so no
    rank can degenerate) and small enough that q**dim stays enumerable.
    Every count must fit one integer polynomial of degree dim, or
    InconsistentCounts is raised.
    """
    ell = arr.dim
    if primes is None:
        primes = good_primes(arr)
    primes = list(dict.fromkeys(int(q) for q in primes))
    if len(primes) < ell + 1:
        raise BadPrime(f"need at least dim+1 = {ell + 1} distinct primes")
    bound = minor_bound(arr)
    for q in primes:
        if not _is_prime(q):
            raise BadPrime(f"{q} is not prime")
        if q <= bound:
            raise BadPrime(f"prime {q} does not exceed the minor bound {bound}")
        if q ** ell > MAX_POINTS:
            raise BadPrime(
                f"{q}**{ell} exceeds the point-enumeration budget {MAX_POINTS}"
            )
    witnesses = tuple(PrimeWitness(q, point_count(arr, q), True) for q in primes)
    coeffs = _lagrange([(w.prime, w.point_count) for w in witnesses[: ell + 1]])
    for w in witnesses:
        value = sum(c * w.prime ** p for p, c in enumerate(coeffs))
        if value != w.point_count:
            raise InconsistentCounts(
                f"count at q={w.prime} does not fit the interpolant"
            )
    if any(c.denominator != 1 for c in coeffs):
        raise InconsistentCounts("interpolant has non-integer coefficients")
    poly = IntPoly([int(c) for c in coeffs])
    if poly.degree != ell or not poly.is_monic():
        raise InconsistentCounts(
            f"interpolant {poly} is not monic of degree {ell}"
        )
    if with_witnesses:
        return poly, witnesses
    return poly


def _affine_pairs(arr):
    if isinstance(arr, CentralArrangement):
        return arr.dim, tuple(sorted((tuple(f), 0) for f in arr.forms))
    return arr.dim, tuple(sorted((tuple(n), c) for n, c in arr.hyperplanes))


def _restrict_onto(head, rest):
    """Restrictions of the remaining hyperplanes onto the hyperplane head."""
    a, c = head
    j = next(i for i, v in enumerate(a) if v != 0)
    out = set()
    for b, d in rest:
        normal = [
            Fraction(b[i]) - Fraction(a[i] * b[j], a[j])
            for i in range(len(a))
            if i != j
        ]
        if all(v == 0 for v in normal):
            continue  # parallel hyperplane, empty trace
        const = Fraction(d) - Fraction(b[j] * c, a[j])
        out.add(normalize_affine(normal, const))
    return tuple(sorted(out))


def region_count_recursion(arr):
    """Chambers of the real complement by r(A) = r(A - H) + r(A | H)."""
    dim, pairs = _affine_pairs(arr)
    memo = {}

    def rec(d, hyps):
        if not hyps:
            return 1
        key = (d, hyps)
        if key not in memo:
            head, tail = hyps[0], hyps[1:]
            memo[key] = rec(d, tail) + rec(d - 1, _restrict_onto(head, tail))
        return memo[key]

    return rec(dim, pairs)


def char_poly_recursion(arr):
    """Characteristic polynomial by chi(A) = chi(A - H) - chi(A | H)."""
    dim, pairs = _affine_pairs(arr)
    memo = {}

    def rec(d, hyps):
        if not hyps:
            return IntPoly.monomial(d)
        key = (d, hyps)
        if key not in memo:
            head, tail = hyps[0], hyps[1:]
            memo[key] = rec(d, tail) - rec(d - 1, _restrict_onto(head, tail))
        return memo[key]

    return rec(dim, pairs)


def moebius_bruteforce(arr, flat=None):
    """Moebius values by literal interval enumeration over all subsets.

    With a flat given, returns mu(flat) (FlatNotInLattice when the subset
    enumeration never produces it); otherwise a dict keyed by the canonical
    equations of every flat.
    """
    rows = hyperplane_rows(arr)
    n = len(rows)
    if n > 16:
        raise ValueError("brute-force Moebius is limited to 16 hyperplanes")
    dim = arr.dim
    spans = {}
    for mask in range(1 << n):
        sel = [rows[i] for i in range(n) if mask >> i & 1]
        ech = echelon(sel, dim + 1)
        if any(
            all(r[j] == 0 for j in range(dim)) and r[dim] != 0 for r in ech.rows
        ):
            continue  # empty intersection (affine case)
        key = ech.rref()
        spans.setdefault(key, ech)
    order = sorted(spans, key=lambda k: (len(k), k))
    mu = {}
    for key in order:
        if not key:
            mu[key] = 1
            continue
        ech = spans[key]
        acc = 0
        for other in order:
            if len(other) >= len(key):
                break  # order is by rank; only strictly larger flats matter
            if all(ech.contains(r) for r in other):
                acc += mu[other]
        mu[key] = -acc
    if flat is None:
        return mu
    if flat.equations not in mu:
        raise FlatNotInLattice("flat not reachable as an intersection of hyperplanes")
    return mu[flat.equations]
