"""Exact coefficient tables for restricted Euler products.

Two independent paths produce the coefficients p(0..N) of
prod_{m in S} (1 - q^m)^(-f_ell(m)): a divisor-sum recurrence and a
truncated product of negative-binomial series.  They must agree
exactly; the recurrence is the workhorse, the product the oracle.
All arithmetic is exact big-integer arithmetic, no floats anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from .model import (
    ExceptionSet,
    WeightFamily,
    largest_S_divisor,
    member,
    sigma_E1,
    support_view,
)


@dataclass(frozen=True)
class GTable:
    """Divisor-weighted sums g(n) = sum of d * f_ell(d) over allowed d | n."""

    exceptions: ExceptionSet
    weights: WeightFamily
    ell: int
    values: tuple[int, ...]  # values[n] is g(n); slot 0 is a placeholder

    @property
    def horizon(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, n: int) -> int:
        if not 1 <= n <= self.horizon:
            raise IndexError(f"g is tabulated for 1..{self.horizon}, got {n}")
        return self.values[n]


@dataclass(frozen=True)
class PartitionTable:
    """Exact coefficients p(0..horizon) for one (exceptions, weights, ell)."""

    exceptions: ExceptionSet
    weights: WeightFamily
    ell: int
    coeffs: tuple[int, ...]

    @property
    def horizon(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> int:
        if not 0 <= n <= self.horizon:
            raise IndexError(f"coefficients run 0..{self.horizon}, got {n}")
        return self.coeffs[n]


@dataclass(frozen=True)
class DeltaValue:
    """The difference p(n)^2 - p(n-1) p(n+1) and its sign."""

    n: int
    value: int
    sign: int


def g_table(E: ExceptionSet, w: WeightFamily, ell: int, N: int) -> GTable:
    """Tabulate g(1..N) by accumulating each allowed d into its multiples."""
    if ell < 1:
        raise ValueError(f"ell must be >= 1, got {ell}")
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    values = [0] * (N + 1)
    for d in range(1, N + 1):
        if not member(E, d):
            contribution = d * w.eval(ell, d)
            for m in range(d, N + 1, d):
                values[m] += contribution
    return GTable(E, w, ell, tuple(values))


def coeffs_by_recurrence(E: ExceptionSet, w: WeightFamily, ell: int, N: int) -> PartitionTable:
    """Coefficients via n p(n) = sum_k g(k) p(n-k); division always exact."""
    if N < 0:
        raise ValueError(f"N must be >= 0, got {N}")
    coeffs = [0] * (N + 1)
    coeffs[0] = 1
    if N >= 1:
        g = g_table(E, w, ell, N).values
        for n in range(1, N + 1):
            acc = 0
            for k in range(1, n + 1):
                acc += g[k] * coeffs[n - k]
            q, r = divmod(acc, n)
            if r:
                raise ArithmeticError(
                    f"inexact division at n={n}: the log-derivative identity guarantees divisibility, so this is a bug")
            coeffs[n] = q
    return PartitionTable(E, w, ell, tuple(coeffs))


def coeffs_by_product(E: ExceptionSet, w: WeightFamily, ell: int, N: int) -> PartitionTable:
    """Coefficients by multiplying out the truncated factor series.

    Each allowed part m contributes sum_j C(f+j-1, j) q^(m j) with
    f = f_ell(m); the binomials are built incrementally so no factorial
    ever appears.
    """
    if N < 0:
        raise ValueError(f"N must be >= 0, got {N}")
    coeffs = [0] * (N + 1)
    coeffs[0] = 1
    if N >= 1:
        for m in support_view(E, N).elements:
            f = w.eval(ell, m)
            series = [1]
            c = 1
            for j in range(1, N // m + 1):
                c = c * (f + j - 1) // j
                series.append(c)
            out = [0] * (N + 1)
            for j, cj in enumerate(series):
                shift = m * j
                for i in range(N + 1 - shift):
                    if coeffs[i]:
                        out[i + shift] += coeffs[i] * cj
            coeffs = out
    return PartitionTable(E, w, ell, tuple(coeffs))


def delta(t: PartitionTable, n: int) -> DeltaValue:
    """Log-concavity difference at n; needs 1 <= n <= horizon - 1."""
    if not 1 <= n <= t.horizon - 1:
        raise ValueError(f"delta needs 1 <= n <= {t.horizon - 1}, got {n}")
    value = t.coeffs[n] * t.coeffs[n] - t.coeffs[n - 1] * t.coeffs[n + 1]
    return DeltaValue(n, value, (value > 0) - (value < 0))


def check_bounds(t: PartitionTable, n: int, maxprod_M: int, parts_count_k: int) -> bool:
    """Exact two-sided coefficient bound at n from maximal-product data.

    Checks M^phi / k! <= p(n) <= p_1(n) * M^psi, with the left side
    compared as k! * p(n) >= M^phi so everything stays in integers.
    """
    if not 0 <= n <= t.horizon:
        raise ValueError(f"n must lie in 0..{t.horizon}, got {n}")
    phi = t.weights.phi(t.ell)
    psi = t.weights.psi(t.ell)
    if phi < 0 or psi < 0:
        raise ValueError("the exact check needs non-negative integer envelope exponents")
    base = coeffs_by_recurrence(t.exceptions, t.weights, 1, n)
    lower_ok = factorial(parts_count_k) * t.coeffs[n] >= maxprod_M ** phi
    upper_ok = t.coeffs[n] <= base.coeffs[n] * maxprod_M ** psi
    return lower_ok and upper_ok


def check_g_bounds(gt: GTable, n: int) -> bool:
    """Exact envelope (n_S)^(phi+1) <= g(n) <= sigma_E1(n) * (n_S)^psi."""
    if not 1 <= n <= gt.horizon:
        raise ValueError(f"n must lie in 1..{gt.horizon}, got {n}")
    ns = largest_S_divisor(gt.exceptions, n)
    phi = gt.weights.phi(gt.ell)
    psi = gt.weights.psi(gt.ell)
    g = gt.values[n]
    return ns ** (phi + 1) <= g <= sigma_E1(gt.exceptions, n) * ns ** psi
