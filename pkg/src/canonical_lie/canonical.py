"""Deciders, constructions and enumeration for canonical spectra of so(n).

An element xi of so(n) is *canonical* when it is the canonical element of
some parabolic subalgebra q of so(n, C): the ad-eigenspaces of xi grade q
and the positive-grade tails are exactly the central descending series of
the nilradical of q.  Two independent deciders live here:

* :func:`theorem2_check` — the generation-based test.  xi is canonical iff
  all ad-eigenvalue grades are integers and the grade-1 piece rebuilds each
  higher grade by repeated bracketing: g^1 = g_1, g^{k+1} = [g_1, g^k] must
  equal g_{k+1} for every positive grade.  Verdicts carry certificates
  (grading dimensions, or the first failing grade with the achieved and
  required dimensions).

* :func:`prop3_check` — the closed-form spectral test.  The magnitude set
  must be an unbroken ladder 0, 1, ..., k, or an unbroken half-odd ladder
  1/2, 3/2, ..., k + 1/2 with the 1/2 magnitude of multiplicity at least 2.

The package's headline property is that the two agree on every half-integral
spectrum; the `verify` CLI command and the acceptance suite sweep that
equivalence exhaustively at small n.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import combinations, combinations_with_replacement

from .exactlin import RatMatrix, Subspace, as_rational, subspace_sum
from .liegraded import (
    GradingMap,
    bracket_spaces,
    descending_series,
    generated_subalgebra,
    grading_of,
    polar,
)
from .sonreal import Spectrum, TooSmall, realize, spectrum_from_matrix, wedge_basis


class NotCanonical(ValueError):
    """Operation requires a canonical spectrum."""


class VerdictReason(str, Enum):
    CANONICAL = "Canonical"
    NON_INTEGRAL = "NonIntegralAdSpectrum"
    GENERATION_FAILS = "GenerationFails"


@dataclass(frozen=True)
class Verdict:
    """Decision plus certificate.

    `failing` is (grade, achieved dim, required dim) for a generation
    failure; `trace` records (grade, dim g^k, dim g_k) for each positive
    grade visited; `witness` is the grading when the algebra was realized.
    """

    canonical: bool
    reason: VerdictReason
    failing: tuple[int, int, int] | None = None
    trace: tuple[tuple[int, int, int], ...] | None = None
    witness: GradingMap | None = None

    def __post_init__(self):
        if (self.reason is VerdictReason.CANONICAL) != self.canonical:
            raise ValueError("verdict reason inconsistent with the boolean answer")


@dataclass(frozen=True)
class ParabolicData:
    """The parabolic built from a canonical spectrum, with its certificates."""

    q: Subspace
    nilradical: Subspace
    series: tuple[Subspace, ...]
    grading: GradingMap


def condition1(s: Spectrum) -> bool:
    """True iff every grade lambda_a + lambda_b over basis pairs is an integer.

    Equivalently: the signed magnitudes are all integers or all half-odd.
    """
    lams = [lam for lam, _ in wedge_basis(s).eigen_labels]
    n = len(lams)
    return all(
        (lams[a] + lams[b]).denominator == 1
        for a in range(n)
        for b in range(a + 1, n)
    )


def theorem2_check(s: Spectrum) -> Verdict:
    """Generation-based canonicality decision with a step-by-step certificate.

    After the integrality gate, iterate g^1 = g_1, g^{k+1} = [g_1, g^k]
    inside the realized algebra and compare against the actual grade spaces.
    Since [g_1, g^k] always lands inside g_{k+1}, the first failure is a
    strict dimension deficit at some grade; success at every positive grade
    is equivalent to g_1 + g_0 + g_{-1} generating the whole algebra.
    """
    if not condition1(s):
        return Verdict(False, VerdictReason.NON_INTEGRAL)
    table = realize(s)
    gm = grading_of(table)
    positive = sorted(int(g) for g in gm.grades() if g > 0)
    kmax = positive[-1] if positive else 0
    g1 = gm.space_at(1)
    current = g1
    trace = []
    for k in range(1, kmax + 1):
        required = gm.space_at(k)
        trace.append((k, current.dim, required.dim))
        if current != required:
            return Verdict(
                False,
                VerdictReason.GENERATION_FAILS,
                failing=(k, current.dim, required.dim),
                trace=tuple(trace),
                witness=gm,
            )
        if k < kmax:
            current = bracket_spaces(table, g1, current)
    return Verdict(True, VerdictReason.CANONICAL, trace=tuple(trace), witness=gm)


def prop3_check(s: Spectrum) -> bool:
    """Closed-form canonicality test on the magnitude ladder."""
    mags = list(s.magnitudes)
    count = len(mags)
    if mags == [Fraction(i) for i in range(count)]:
        return True
    if mags == [Fraction(2 * i + 1, 2) for i in range(count)]:
        return s.mult(Fraction(1, 2)) >= 2
    return False


def strict_generation_report(s: Spectrum) -> tuple[bool, int, int]:
    """Does g_1 + g_{-1} alone generate?  Returns (answer, generated, full).

    This stricter condition fails for some canonical spectra (xi = 0 has
    empty grade +-1 pieces, and so(4) splits as two commuting su(2)s), which
    is why it is not the canonicality criterion.
    """
    table = realize(s)
    gm = grading_of(table)
    seed = subspace_sum(gm.space_at(1), gm.space_at(-1))
    generated = generated_subalgebra(table, seed)
    return generated.dim == table.dim, generated.dim, table.dim


def strict_generation_check(s: Spectrum) -> bool:
    return strict_generation_report(s)[0]


def parabolic_of(s: Spectrum) -> ParabolicData:
    """Parabolic subalgebra, nilradical and descending series of a canonical spectrum.

    q is the sum of the non-negative grade spaces and the nilradical the sum
    of the positive ones; the series is recomputed by bracketing and checked
    against the grading tails rather than assumed.
    """
    verdict = theorem2_check(s)
    if not verdict.canonical:
        raise NotCanonical(f"spectrum {s} is not canonical: {verdict.reason.value}")
    table = realize(s)
    gm = grading_of(table)
    q = gm.tail(0)
    nilradical = gm.tail(1)
    series = tuple(descending_series(table, nilradical))
    for r, term in enumerate(series, start=1):
        if term != gm.tail(r):
            raise RuntimeError(
                f"descending series step {r} does not match the grading tail"
            )
    return ParabolicData(q, nilradical, series, gm)


def theorem1_report(s: Spectrum) -> dict[str, bool]:
    """Check the defining properties of a canonical element, without gating.

    Reports whether (i) all grades are integral, (ii) the descending series
    of the positive-grade sum equals the grading tails step by step,
    (iii) the polar of q is that nilradical, and (iv) the series terminates
    at zero.  Running this on a non-canonical grading shows which property
    breaks.
    """
    table = realize(s)
    gm = grading_of(table)
    q = gm.tail(0)
    nilradical = gm.tail(1)
    series = descending_series(table, nilradical)

    integral = all(g.denominator == 1 for g in gm.grades())
    positive = [g for g in gm.grades() if g > 0]
    deepest = max([int(g) for g in positive if g.denominator == 1], default=0)

    steps = max(len(series), deepest + 1)
    matches = True
    for r in range(1, steps + 1):
        term = series[r - 1] if r <= len(series) else series[-1]
        if term != gm.tail(r):
            matches = False
            break

    return {
        "integral_grades": integral,
        "series_matches_tails": matches,
        "polar_is_nilradical": polar(table, q) == nilradical,
        "series_reaches_zero": series[-1].dim == 0,
    }


def verify_theorem1(s: Spectrum) -> bool:
    """All canonical-element properties hold for a canonical spectrum."""
    if not theorem2_check(s).canonical:
        raise NotCanonical(f"spectrum {s} is not canonical")
    return all(theorem1_report(s).values())


def check_matrix(m: RatMatrix) -> Verdict:
    """Canonicality of a rational skew-symmetric matrix.

    Extraction failing (magnitudes not all half-integral) already implies a
    non-integral ad-spectrum, so that outcome maps straight to a negative
    verdict; otherwise the spectrum is handed to :func:`theorem2_check`.
    """
    s = spectrum_from_matrix(m)
    if s is None:
        return Verdict(False, VerdictReason.NON_INTEGRAL)
    return theorem2_check(s)


def _positive_tuples(parts: int, total: int):
    """All tuples of `parts` positive integers with the given sum."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for cuts in combinations(range(1, total), parts - 1):
        bounds = (0,) + cuts + (total,)
        yield tuple(bounds[i + 1] - bounds[i] for i in range(parts))


def enumerate_canonical(n: int) -> list[Spectrum]:
    """All canonical spectra for so(n), deterministically ordered.

    Integer family: magnitudes exactly 0..k, every multiplicity >= 1.
    Half-odd family (n even): magnitudes exactly 1/2..k+1/2, multiplicity
    of 1/2 at least 2.  Sorted by largest magnitude, then entries.
    """
    if n < 3:
        raise TooSmall(f"need n >= 3, got n = {n}")
    found = [Spectrum(n, ((Fraction(0), n),))]
    for k in range(1, (n - 1) // 2 + 1):
        for total in range(k, (n - 1) // 2 + 1):
            m0 = n - 2 * total
            if m0 < 1:
                continue
            for mults in _positive_tuples(k, total):
                entries = [(Fraction(0), m0)]
                entries += [(Fraction(j + 1), mults[j]) for j in range(k)]
                found.append(Spectrum(n, tuple(entries)))
    if n % 2 == 0:
        half = n // 2
        for k in range(0, half):
            for mults in _positive_tuples(k + 1, half):
                if mults[0] < 2:
                    continue
                entries = [(Fraction(2 * j + 1, 2), mults[j]) for j in range(k + 1)]
                found.append(Spectrum(n, tuple(entries)))
    found.sort(key=lambda s: (s.max_magnitude, s.entries))
    return found


def half_integral_spectra(n: int, max_lambda) -> list[Spectrum]:
    """All valid spectra for so(n) with magnitudes in (1/2)Z up to max_lambda."""
    if n < 3:
        raise TooSmall(f"need n >= 3, got n = {n}")
    bound = as_rational(max_lambda)
    positives = [Fraction(j, 2) for j in range(1, int(2 * bound) + 1)]
    out = []
    for size in range(0, n // 2 + 1):
        for combo in combinations_with_replacement(positives, size):
            m0 = n - 2 * size
            counts: dict[Fraction, int] = {}
            for lam in combo:
                counts[lam] = counts.get(lam, 0) + 1
            entries = ([(Fraction(0), m0)] if m0 else []) + sorted(counts.items())
            out.append(Spectrum(n, tuple(entries)))
    out.sort(key=Spectrum.sort_key)
    return out


@dataclass(frozen=True)
class OracleRecord:
    """One spectrum's results under both deciders, for the equivalence sweep."""

    spectrum: Spectrum
    verdict: Verdict
    prop3: bool
    theorem1_ok: bool | None

    @property
    def agree(self) -> bool:
        return self.verdict.canonical == self.prop3

    @property
    def ok(self) -> bool:
        return self.agree and self.theorem1_ok is not False


def oracle_record(s: Spectrum) -> OracleRecord:
    verdict = theorem2_check(s)
    p3 = prop3_check(s)
    t1 = verify_theorem1(s) if verdict.canonical else None
    return OracleRecord(s, verdict, p3, t1)
