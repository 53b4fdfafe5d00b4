"""Shared helpers for the test suite."""

import random
from fractions import Fraction

from arrangements import canonicalize
from arrangements.errors import ArrangementError


def make(forms, dim):
    return canonicalize(forms, dim)


def random_central(rng, dim=None, max_hyperplanes=7):
    """A random central arrangement with small rational coefficients.

    Draws pairwise non-proportional forms; dimension defaults to a random
    choice of 2 or 3.
    """
    if dim is None:
        dim = rng.choice((2, 3))
    n = rng.randint(1, max_hyperplanes)
    forms = []
    guard = 0
    while len(forms) < n:
        guard += 1
        if guard > 500:
            break
        form = tuple(
            Fraction(rng.randint(-3, 3), rng.randint(1, 2)) for _ in range(dim)
        )
        if all(v == 0 for v in form):
            continue
        try:
            canonicalize(forms + [form], dim)
        except ArrangementError:
            continue
        forms.append(form)
    return canonicalize(forms, dim)


def seeded(seed):
    return random.Random(seed)
