"""Shared builders for seeded random test data.

Every property test draws from an explicit random.Random(seed) so a
failure reproduces from the seed alone; nothing here touches global
random state.
"""

import random
from fractions import Fraction

from grtlab.lie import LieElement
from grtlab.words import GradedAlphabet, _lyndon_tuples

XY = GradedAlphabet("x y")
XYZ = GradedAlphabet("x y z")


def random_homogeneous(alphabet, degree, rng, max_terms=3, bound=5):
    """Random integer combination of degree-``degree`` basis words;
    may be zero when the degree has no basis words."""
    words = _lyndon_tuples(alphabet.degrees, degree)
    if not words:
        return LieElement.zero(alphabet)
    chosen = rng.sample(words, min(max_terms, len(words)))
    terms = {}
    for w in chosen:
        c = rng.randint(-bound, bound)
        if c:
            terms[w] = c
    return LieElement(alphabet, terms)


def random_element(alphabet, max_degree, rng, rational=False):
    """Random inhomogeneous element with components up to max_degree."""
    out = LieElement.zero(alphabet)
    for d in range(1, max_degree + 1):
        if rng.random() < 0.6:
            piece = random_homogeneous(alphabet, d, rng)
            if rational and piece.terms:
                q = Fraction(rng.randint(1, 5), rng.randint(1, 4))
                piece = piece.scale(q)
            out = out + piece
    return out


def random_int_matrix(rng, rows, cols, bound=9):
    return [[rng.randint(-bound, bound) for _ in range(cols)]
            for _ in range(rows)]
