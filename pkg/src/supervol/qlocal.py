"""Finite localization sums for equal-rank and Q-type grassmannians.

An odd vector field with isolated zeros reduces the invariant integral
to a finite sum of per-fixed-point invariants.  For the Q-grassmannian
of (r|r)-planes in C^(n|n) the fixed points are the r-subsets S of
{1..n} and the contribution of S is

    alpha(S) = prod_{i in S, j not in S} (a_i + a_j) / (a_i - a_j)

for generic parameters a_1..a_n.  The subset sum C(r, n) is independent
of the parameters and integer-valued; it has the closed form binom(m, l)
for (n, r) = (2m, 2l), (2m+1, 2l+1), (2m+1, 2l) and vanishes for
(n, r) = (2m, 2l+1) -- equivalently, it is nonzero iff r(n-r) is even.

For the equal-rank grassmannian of (r|r)-planes in C^(n|n) the per-point
contribution is identically 1 and the sum just counts the binom(n, r)
fixed points.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .exactnum import as_fraction

Params = tuple[Fraction, ...]


def validate_params(a: Sequence) -> Params:
    """Check a_i != 0 and a_i +- a_j != 0 for i != j; return as Fractions."""
    vals = tuple(as_fraction(x) for x in a)
    if any(x == 0 for x in vals):
        raise ValueError("degenerate parameters")
    for i in range(len(vals)):
        for j in range(i + 1, len(vals)):
            if vals[i] == vals[j] or vals[i] == -vals[j]:
                raise ValueError("degenerate parameters")
    return vals


def random_params(n: int, rng: random.Random) -> Params:
    """Distinct small nonzero integers with no pair summing to zero."""
    chosen: list[int] = []
    taken: set[int] = set()
    while len(chosen) < n:
        x = rng.randint(1, 40 + 4 * n) * rng.choice((1, -1))
        if x in taken or -x in taken:
            continue
        taken.add(x)
        chosen.append(x)
    return tuple(Fraction(x) for x in chosen)


def seeded_param_vectors(n: int, count: int, seed: int) -> list[Params]:
    rng = random.Random(seed)
    return [random_params(n, rng) for _ in range(count)]


def _ratio_table(a: Params) -> list[list[Fraction]]:
    n = len(a)
    table = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i != j:
                table[i][j] = (a[i] + a[j]) / (a[i] - a[j])
    return table


def alpha_subset(subset: Iterable[int], a: Sequence) -> Fraction:
    """Fixed-point contribution of the subset (0-based positions into a)."""
    vals = validate_params(a)
    s = set(subset)
    if not s <= set(range(len(vals))):
        raise ValueError("subset out of range")
    out = Fraction(1)
    for i in s:
        for j in range(len(vals)):
            if j not in s:
                out *= (vals[i] + vals[j]) / (vals[i] - vals[j])
    return out


@dataclass(frozen=True)
class LocalizationReport:
    """Subset-sum values across parameter samples and their consensus."""

    n: int
    r: int
    samples: tuple[tuple[Params, Fraction], ...]
    consensus: Fraction
    agrees: bool


def c_bruteforce(r: int, n: int, samples: Sequence[Sequence]) -> LocalizationReport:
    """Exact subset sum over all r-subsets, per parameter sample.

    The sum must not depend on the parameters; disagreement across
    samples raises (it never fires -- that independence is the primary
    property under test).  Enumeration is 2^n-bounded, so n <= 14.
    """
    if not 0 <= r <= n:
        raise ValueError("require 0 <= r <= n")
    if n > 14:
        raise ValueError("brute force bounded at n <= 14")
    results = []
    for raw in samples:
        a = validate_params(raw)
        if len(a) != n:
            raise ValueError("parameter vector has wrong length")
        ratios = _ratio_table(a)
        total = Fraction(0)
        for subset in itertools.combinations(range(n), r):
            inside = set(subset)
            term = Fraction(1)
            for i in subset:
                row = ratios[i]
                for j in range(n):
                    if j not in inside:
                        term *= row[j]
            total += term
        results.append((a, total))
    consensus = results[0][1] if results else Fraction(0)
    agrees = all(total == consensus for _, total in results)
    if not agrees:
        raise ValueError("parameter dependence detected")
    return LocalizationReport(n, r, tuple(results), consensus, agrees)


def c_closed(r: int, n: int) -> int:
    """Closed form of the subset sum: binom(n//2, r//2), or 0 when n is
    even and r odd."""
    if not 0 <= r <= n:
        raise ValueError("require 0 <= r <= n")
    if n % 2 == 0 and r % 2 == 1:
        return 0
    return math.comb(n // 2, r // 2)


def _recursions_hold(value, nmax: int) -> bool:
    for n in range(1, nmax + 1):
        for r in range(1, n + 1):
            step = value(r, n - 1) if r <= n - 1 else 0
            down = value(r - 1, n - 1)
            if value(r, n) != step + (-1) ** ((n - r) % 2) * down:
                return False
            if value(r, n) != (-1) ** ((r * (n - r)) % 2) * value(n - r, n):
                return False
    return True


def check_recursions(nmax: int) -> bool:
    """Both recursions on the closed form, for all 1 <= r <= n <= nmax:

    C(r,n) = C(r,n-1) + (-1)^(n-r) C(r-1,n-1)  and
    C(r,n) = (-1)^(r(n-r)) C(n-r,n).
    """
    if nmax < 2:
        raise ValueError("nmax must be at least 2")
    return _recursions_hold(lambda r, n: Fraction(c_closed(r, n)), nmax)


def brute_c_table(nmax: int, seed: int, count: int = 3) -> dict[tuple[int, int], Fraction]:
    """Consensus brute-force table for all 0 <= r <= n <= nmax."""
    table = {}
    for n in range(nmax + 1):
        samples = seeded_param_vectors(n, count, seed + n)
        for r in range(n + 1):
            table[(r, n)] = c_bruteforce(r, n, samples).consensus
    return table


def check_recursions_on_table(table: dict[tuple[int, int], Fraction], nmax: int) -> bool:
    """The same two recursions evaluated on a precomputed value table."""
    return _recursions_hold(lambda r, n: table[(r, n)], nmax)


def gl_localization(r: int, n: int, a: Sequence) -> Fraction:
    """Localization count for the equal-rank grassmannian.

    Every fixed point is an r-subset whose contribution is the telescoping
    two-factor product (checked to be 1 en route); the sum is binom(n, r)
    independently of the parameters.
    """
    if not 0 <= r <= n:
        raise ValueError("require 0 <= r <= n")
    vals = validate_params(a)
    if len(vals) != n:
        raise ValueError("parameter vector has wrong length")
    total = Fraction(0)
    for subset in itertools.combinations(range(n), r):
        inside = set(subset)
        contrib = Fraction(1)
        for i in subset:
            for j in range(n):
                if j not in inside:
                    contrib *= ((vals[i] + vals[j]) / (vals[i] - vals[j])
                                * (vals[i] - vals[j]) / (vals[i] + vals[j]))
        if contrib != 1:
            raise ValueError("fixed-point contribution is not 1")
        total += contrib
    assert total == math.comb(n, r)
    return total
