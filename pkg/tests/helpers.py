"""Shared test helpers: terse spectrum construction and independent oracles."""

from collections import Counter
from fractions import Fraction
from itertools import combinations_with_replacement

from canonical_lie import Spectrum


def spec(n, *pairs):
    """spec(4, ("1/2", 2)) -> Spectrum; magnitudes given as 'p/q' strings or ints."""
    return Spectrum(n, tuple((Fraction(lam), mult) for lam, mult in pairs))


def grade_dims_by_counting(s):
    """Independent oracle: grading dimensions from label-pair combinatorics.

    Counts wedge pairs (a, b), a < b, bucketed by the sum of their signed
    eigenvalues, without touching the structure constants.
    """
    labels = []
    for lam, mult in s.entries:
        labels.extend([lam] * mult)
        if lam != 0:
            labels.extend([-lam] * mult)
    dims = Counter()
    for i in range(len(labels)):
        for j in range(i + 1, len(labels)):
            dims[labels[i] + labels[j]] += 1
    return dict(dims)


def brute_force_spectra(n, max_half_steps):
    """All valid spectra with magnitudes j/2, 1 <= j <= max_half_steps, plus 0.

    Written independently of the production generator so the two can be
    checked against each other.
    """
    positives = [Fraction(j, 2) for j in range(1, max_half_steps + 1)]
    out = []
    for size in range(0, n // 2 + 1):
        for combo in combinations_with_replacement(positives, size):
            m0 = n - 2 * size
            counts = Counter(combo)
            entries = ([(Fraction(0), m0)] if m0 else []) + sorted(counts.items())
            out.append(Spectrum(n, tuple(entries)))
    return out
