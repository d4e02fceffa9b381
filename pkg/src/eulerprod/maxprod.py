"""Maximal part products over partitions with restricted parts.

For an allowed-part set S and a target n, the key quantity is the
largest product of parts over all partitions of n into parts from S,
together with every partition attaining it, the runner-up product, and
the composition-count coefficient that weights the maximizers in
coefficient asymptotics.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .model import ExceptionSet, support_view

BRUTE_FORCE_BOUND = 30


@dataclass(frozen=True)
class PartitionMultiset:
    """A partition stored as a non-increasing tuple of parts."""

    parts: tuple[int, ...]

    @staticmethod
    def of(parts) -> "PartitionMultiset":
        return PartitionMultiset(tuple(sorted(parts, reverse=True)))

    @property
    def total(self) -> int:
        return sum(self.parts)

    @property
    def product(self) -> int:
        out = 1
        for p in self.parts:
            out *= p
        return out

    @property
    def part_count(self) -> int:
        return len(self.parts)

    def multiplicities(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for p in self.parts:
            out[p] = out.get(p, 0) + 1
        return out

    def ordering_coefficient(self) -> Fraction:
        """Distinct orderings of the parts divided by part_count factorial."""
        denom = 1
        for count in self.multiplicities().values():
            denom *= factorial(count)
        return Fraction(1, denom)


@dataclass(frozen=True)
class MaxProdReport:
    """Everything known about the maximal product at one target n.

    second_product is None when no strictly smaller product exists; the
    closed-form constructors also leave it None because the case
    analysis they implement does not derive runner-up products.
    """

    n: int
    product: int
    maximizers: tuple[PartitionMultiset, ...]
    unique: bool
    coefficient: Fraction
    second_product: int | None


def _assemble(n: int, product: int, parts_list: list[tuple[int, ...]],
              second: int | None) -> MaxProdReport:
    canon = sorted({tuple(sorted(p, reverse=True)) for p in parts_list})
    maximizers = tuple(PartitionMultiset(p) for p in canon)
    coefficient = sum((m.ordering_coefficient() for m in maximizers), Fraction(0))
    return MaxProdReport(n, product, maximizers, len(maximizers) == 1, coefficient, second)


def max_product_values(E: ExceptionSet, n_max: int) -> tuple[int, ...]:
    """The maximal products for every target 0..n_max, values only."""
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    best = [1] * (n_max + 1)
    if n_max >= 1:
        parts = support_view(E, n_max).elements
        for r in range(1, n_max + 1):
            best[r] = max(s * best[r - s] for s in parts if s <= r)
    return tuple(best)


def max_product(E: ExceptionSet, n: int) -> MaxProdReport:
    """Full report at n via dynamic programming over remaining sum."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n == 0:
        return _assemble(0, 1, [()], None)
    parts = support_view(E, n).elements
    best = [1] * (n + 1)
    # top two distinct products per remainder; a third-best value can
    # never climb back into the top two after multiplying by a part
    second: list[int | None] = [None] * (n + 1)
    argsets: list[set[tuple[int, ...]]] = [set() for _ in range(n + 1)]
    argsets[0].add(())
    for r in range(1, n + 1):
        candidates: set[int] = set()
        for s in parts:
            if s > r:
                break
            candidates.add(s * best[r - s])
            if second[r - s] is not None:
                candidates.add(s * second[r - s])
        ordered = sorted(candidates, reverse=True)
        best[r] = ordered[0]
        if len(ordered) > 1:
            second[r] = ordered[1]
        for s in parts:
            if s > r:
                break
            if s * best[r - s] == best[r]:
                for tail in argsets[r - s]:
                    argsets[r].add(tuple(sorted((s,) + tail, reverse=True)))
    return _assemble(n, best[n], list(argsets[n]), second[n])


def max_product_bruteforce(E: ExceptionSet, n: int,
                           bound: int = BRUTE_FORCE_BOUND) -> MaxProdReport:
    """Same report by exhaustive enumeration; refuses large targets."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n > bound:
        raise ValueError(f"brute force is capped at n <= {bound}, got {n}")
    if n == 0:
        return _assemble(0, 1, [()], None)
    parts = support_view(E, n).elements
    products: set[int] = set()
    hits: list[tuple[int, ...]] = []
    best = 0

    def extend(remaining: int, cap: int, acc: tuple[int, ...], acc_product: int) -> None:
        nonlocal best
        if remaining == 0:
            products.add(acc_product)
            if acc_product > best:
                best = acc_product
                hits.clear()
            if acc_product == best:
                hits.append(acc)
            return
        for s in reversed(parts):
            if s <= min(remaining, cap):
                extend(remaining - s, s, acc + (s,), acc_product * s)

    extend(n, n, (), 1)
    runners = [p for p in products if p < best]
    return _assemble(n, best, hits, max(runners) if runners else None)


def second_max(E: ExceptionSet, n: int) -> int | None:
    """Largest product strictly below the maximum; None if absent."""
    return max_product(E, n).second_product


@dataclass(frozen=True)
class SupportHead:
    """Ordered small elements of S plus an optional full tail.

    elements lists members of S in increasing order starting at 1;
    tail_from, when given, adds every integer >= tail_from to S.
    """

    elements: tuple[int, ...]
    tail_from: int | None = None

    def __post_init__(self) -> None:
        if not self.elements or self.elements[0] != 1:
            raise ValueError("support head must start at 1")
        if any(b <= a for a, b in zip(self.elements, self.elements[1:])):
            raise ValueError("support head must be strictly increasing")
        if self.tail_from is not None and self.tail_from <= self.elements[-1]:
            raise ValueError("tail must begin beyond the listed head")

    def contains(self, m: int) -> bool:
        return m in self.elements or (self.tail_from is not None and m >= self.tail_from)

    def next_after(self, m: int) -> int | None:
        candidates = [e for e in self.elements if e > m]
        if self.tail_from is not None:
            candidates.append(max(self.tail_from, m + 1))
        return min(candidates) if candidates else None


def _single(n: int, parts: tuple[int, ...]) -> MaxProdReport:
    return _assemble(n, PartitionMultiset.of(parts).product, [parts], None)


def _listed(n: int, parts_list: list[tuple[int, ...]]) -> MaxProdReport:
    product = PartitionMultiset.of(parts_list[0]).product
    return _assemble(n, product, parts_list, None)


def _closed_form_smallest_part_2(head: SupportHead, n: int) -> MaxProdReport | None:
    """Case analysis when 2 is the smallest allowed part above 1."""
    a3 = head.next_after(2)
    if a3 == 3:
        k, r = divmod(n, 3)
        if n == 1:
            return _single(n, (1,))
        if r == 0:
            return _single(n, (3,) * k)
        if r == 2:
            return _single(n, (3,) * k + (2,))
        # n >= 4 and n == 1 mod 3: a 4 in S ties (4, 3^k) with (3^k, 2, 2)
        blocks = (3,) * ((n - 4) // 3)
        if head.contains(4):
            return _listed(n, [blocks + (2, 2), (4,) + blocks])
        return _single(n, blocks + (2, 2))
    if a3 == 4:
        five = head.contains(5)
        if five and n <= 3:
            return _single(n, (1,) if n == 1 else (2,) * (n // 2) + (1,) * (n % 2))
        r = n % 4
        if r in (0, 2):
            # swap (2,2) <-> (4) freely: one chain of maximizers
            chain = [(4,) * t + (2,) * ((n - 4 * t) // 2) for t in range(n // 4 + 1) if n - 4 * t >= 0 and (n - 4 * t) % 2 == 0]
            return _listed(n, chain)
        if five:
            lead = n - 5
            chain = [(5,) + (4,) * t + (2,) * ((lead - 4 * t) // 2) for t in range((lead // 4) + 1) if (lead - 4 * t) % 2 == 0]
            return _listed(n, chain)
        lead = n - 1
        chain = [(4,) * t + (2,) * ((lead - 4 * t) // 2) + (1,) for t in range((lead // 4) + 1) if (lead - 4 * t) % 2 == 0]
        return _listed(n, chain)
    if a3 == 5:
        if n == 1:
            return _single(n, (1,))
        if n == 3:
            return _single(n, (2, 1))
        if n % 2 == 0:
            return _single(n, (2,) * (n // 2))
        return _single(n, (5,) + (2,) * ((n - 5) // 2))
    # nothing between 2 and 6 helps: twos and at most one 1
    return _single(n, (2,) * (n // 2) + (1,) * (n % 2))


def closed_form_max(head: SupportHead, n: int) -> MaxProdReport | None:
    """Closed-form maximal product when the head matches a known case.

    Covered: smallest part 2 with its subcases keyed on the next
    element; second element a2 >= 3 with the next at least 2*a2 (blocks
    of a2 plus ones); and consecutive a2, a2+1 with a2 >= 3 once n
    reaches a2(a2-1)(3a2-1)/2.  Returns None when no case applies.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    a2 = head.next_after(1)
    if a2 is None:
        return None
    if a2 == 2:
        return _closed_form_smallest_part_2(head, n)
    a3 = head.next_after(a2)
    if a3 is None or a3 >= 2 * a2:
        count, rem = divmod(n, a2)
        return _single(n, (a2,) * count + (1,) * rem)
    if a3 == a2 + 1 and n >= a2 * (a2 - 1) * (3 * a2 - 1) // 2:
        i = n % a2
        return _single(n, (a3,) * i + (a2,) * ((n - i * a3) // a2))
    return None
