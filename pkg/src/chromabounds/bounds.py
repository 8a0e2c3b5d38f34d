"""Coefficient sequences of characteristic polynomials and their bounds.

The central fact checked here: for a sequence a_0..a_r coming from a rank-r
polynomial on m hyperplanes/edges, every partial binomial sum
sum_i binom(q, k-i) a_i with 0 <= k <= q+r+1 is squeezed between
binom(r+q, k) and binom(m+q, k), with equality throughout exactly when
m = r. The divided-difference operator p -> (p(t) - p(1)) / (t - 1)
realizes the q = -1 sums as coefficients, and iterating it realizes any
negative q.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import CoeffSequenceError, InvariantError
from .exactmath import IntPolynomial, binom
from .graphs import SimpleGraph, chromatic_poly, is_forest


@dataclass(frozen=True)
class CoeffSequence:
    """Validated sign-stripped coefficients (a_0..a_r), all positive."""

    n: int
    m: int
    r: int
    a: tuple[int, ...]


def coeff_sequence(p: IntPolynomial, m: int) -> CoeffSequence:
    """Extract and validate the alternating coefficient sequence of p.

    p must look like a characteristic polynomial: monic of degree n, signs
    strictly alternating down to t^(n-r), zero below. m is the hyperplane
    or edge count and must match a_1 (or be 0 when there are no
    hyperplanes at all).
    """
    if p.is_zero():
        raise CoeffSequenceError("zero polynomial has no coefficient sequence")
    n = p.degree
    lowest = next(i for i, c in enumerate(p.coeffs) if c != 0)
    r = n - lowest
    a = []
    for i in range(r + 1):
        value = (-1) ** i * p.coefficient(n - i)
        if value <= 0:
            raise CoeffSequenceError(
                f"coefficient of t^{n - i} breaks the strict sign alternation"
            )
        a.append(value)
    if a[0] != 1:
        raise CoeffSequenceError(f"leading coefficient must be 1, got {a[0]}")
    if r >= 1:
        if a[1] != m:
            raise CoeffSequenceError(f"a_1 = {a[1]} does not match the stated count m = {m}")
    elif m != 0:
        raise CoeffSequenceError(f"rank 0 forces m = 0, got m = {m}")
    return CoeffSequence(n=n, m=m, r=r, a=tuple(a))


def partial_binomial_sum(s: CoeffSequence, q: int, k: int) -> int:
    """sum of binom(q, k-i) * a_i for i = 0..min(k, r)."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return sum(binom(q, k - i) * s.a[i] for i in range(min(k, s.r) + 1))


def partial_sum_bounds(m: int, r: int, q: int, k: int) -> tuple[int, int]:
    """The guaranteed (lower, upper) pair (binom(r+q, k), binom(m+q, k)).

    Only claimed for 0 <= k <= q+r+1; outside that range the bounds are
    not asserted and asking for them is an error.
    """
    if not 0 <= k <= q + r + 1:
        raise ValueError(f"(q={q}, k={k}) is outside the claimed range 0 <= k <= q+r+1")
    return binom(r + q, k), binom(m + q, k)


@dataclass(frozen=True)
class BoundsRecord:
    q: int
    k: int
    lower: int
    value: int
    upper: int

    @property
    def ok(self) -> bool:
        return self.lower <= self.value <= self.upper

    @property
    def tight(self) -> bool:
        return self.lower == self.value == self.upper


@dataclass(frozen=True)
class BoundsReport:
    """Grid of partial-sum bound checks over a window of shifts q."""

    seq: CoeffSequence
    q_min: int
    q_max: int
    records: tuple[BoundsRecord, ...] = field(default_factory=tuple)

    @property
    def all_ok(self) -> bool:
        return all(rec.ok for rec in self.records)

    @property
    def violations(self) -> tuple[BoundsRecord, ...]:
        return tuple(rec for rec in self.records if not rec.ok)

    @property
    def all_tight(self) -> bool:
        return all(rec.tight for rec in self.records)


def verify_bounds(
    s: CoeffSequence, q_min: int, q_max: int, k_max: int | None = None
) -> BoundsReport:
    """Check the two-sided bounds for every admissible (q, k) in the window.

    Only pairs with 0 <= k <= q+r+1 are claimed, so only those are
    iterated; k_max optionally caps k on top of that.
    """
    if q_min > q_max:
        raise ValueError("empty q window")
    records = []
    for q in range(q_min, q_max + 1):
        top = q + s.r + 1
        if k_max is not None:
            top = min(top, k_max)
        for k in range(0, top + 1):
            lower, upper = partial_sum_bounds(s.m, s.r, q, k)
            value = partial_binomial_sum(s, q, k)
            records.append(BoundsRecord(q=q, k=k, lower=lower, value=value, upper=upper))
    return BoundsReport(seq=s, q_min=q_min, q_max=q_max, records=tuple(records))


@dataclass(frozen=True)
class LowerBoundReport:
    """Nonnegativity of the rank-weighted alternating sums, plus a_2/a_3 floors."""

    alternating_sums: tuple[int, ...]  # indexed by k = 0..r, each must be >= 0
    a2_floor: int | None
    a3_floor: int | None
    seq: CoeffSequence

    @property
    def alternating_ok(self) -> bool:
        return all(v >= 0 for v in self.alternating_sums)

    @property
    def a2_ok(self) -> bool | None:
        return None if self.a2_floor is None else self.seq.a[2] >= self.a2_floor

    @property
    def a3_ok(self) -> bool | None:
        return None if self.a3_floor is None else self.seq.a[3] >= self.a3_floor

    @property
    def all_ok(self) -> bool:
        return self.alternating_ok and self.a2_ok is not False and self.a3_ok is not False


def check_coefficient_lower_bounds(s: CoeffSequence) -> LowerBoundReport:
    """Evaluate (-1)^k sum_i (-1)^i binom(r-i, k-i) a_i >= 0 for k <= r,
    and the closed-form floors for a_2 and a_3 they imply.

    The floors only exist for r >= 2 and r >= 3 respectively; smaller
    ranks are vacuous and reported as None.
    """
    r, m = s.r, s.m
    sums = tuple(
        (-1) ** k * sum((-1) ** i * binom(r - i, k - i) * s.a[i] for i in range(k + 1))
        for k in range(r + 1)
    )
    a2_floor = binom(r, 2) + (m - r) * (r - 1) if r >= 2 else None
    a3_floor = binom(r, 3) + (m - r) * binom(r - 1, 2) if r >= 3 else None
    return LowerBoundReport(alternating_sums=sums, a2_floor=a2_floor, a3_floor=a3_floor, seq=s)


def divided_difference(p: IntPolynomial) -> IntPolynomial:
    """(p(t) - p(1)) / (t - 1), exact for every integer polynomial."""
    return (p - IntPolynomial.constant(p(1))).divide_by_t_minus_1()


def divided_difference_iter(p: IntPolynomial, j: int) -> IntPolynomial:
    """j-fold application of the divided difference (j = 0 is the identity)."""
    if j < 0:
        raise ValueError("iteration count must be nonnegative")
    for _ in range(j):
        p = divided_difference(p)
    return p


def divided_difference_formula(s: CoeffSequence, j: int) -> IntPolynomial:
    """Closed form for the j-th divided difference of the essential polynomial.

    Coefficient of t^(r-j-k) is (-1)^k sum_i binom(-j, k-i) a_i; this is the
    independent route against which the iterated division is checked.
    """
    if j < 0 or j > s.r:
        raise ValueError("j must satisfy 0 <= j <= r")
    r = s.r
    coeffs = [0] * (r - j + 1)
    for k in range(r - j + 1):
        total = sum(binom(-j, k - i) * s.a[i] for i in range(min(k, r) + 1))
        coeffs[r - j - k] = (-1) ** k * total
    return IntPolynomial(tuple(coeffs))


def is_logconcave(s: CoeffSequence) -> bool:
    """a_i^2 >= a_{i-1} a_{i+1} for the interior indices (diagnostic only)."""
    return all(s.a[i] ** 2 >= s.a[i - 1] * s.a[i + 1] for i in range(1, s.r))


@dataclass(frozen=True)
class ForestEquivalence:
    binom_m_match: bool  # a_k == binom(m, k) for all k <= r
    binom_r_match: bool  # a_k == binom(r, k) for all k <= r
    forest: bool  # m == r


def forest_equivalence(g: SimpleGraph) -> ForestEquivalence:
    """Evaluate the three equivalent forest characterizations and insist they agree."""
    p = chromatic_poly(g)
    s = coeff_sequence(p, g.m)
    binom_m = all(s.a[k] == binom(s.m, k) for k in range(s.r + 1))
    binom_r = all(s.a[k] == binom(s.r, k) for k in range(s.r + 1))
    forest = is_forest(g)
    if not (binom_m == binom_r == forest):
        raise InvariantError(
            f"forest equivalence broken on n={g.n}, edges={sorted(g.edges)}: "
            f"({binom_m}, {binom_r}, {forest})"
        )
    return ForestEquivalence(binom_m_match=binom_m, binom_r_match=binom_r, forest=forest)
