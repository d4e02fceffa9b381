"""Weight families and exception sets for restricted Euler products.

Everything downstream works with the formal product

    prod_{m in S} (1 - q^m)^(-f_ell(m)),

where S is the set of allowed part sizes and f_ell is a family of
positive integer weights indexed by ell >= 1.  This module holds the
finite descriptions of both ingredients: ExceptionSet encodes the
forbidden complement E (so S is everything else, and 1 is always
allowed), and WeightFamily bundles the evaluator (ell, n) -> f_ell(n)
with its growth envelope exponents phi(ell) <= psi(ell).
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Callable, Iterator


def divisors(n: int) -> list[int]:
    """Ascending list of the positive divisors of n."""
    if n < 1:
        raise ValueError(f"divisors undefined for {n}")
    small: list[int] = []
    large: list[int] = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


@dataclass(frozen=True)
class PowersOf:
    """The family base, base^2, base^3, ..."""

    base: int

    def __post_init__(self) -> None:
        # base 1 would put 1 into E, which is never allowed
        if self.base < 2:
            raise ValueError(f"powers base must be >= 2, got {self.base}")

    def member(self, n: int) -> bool:
        m = self.base
        while m < n:
            m *= self.base
        return m == n

    def members_up_to(self, limit: int) -> Iterator[int]:
        m = self.base
        while m <= limit:
            yield m
            m *= self.base


@dataclass(frozen=True)
class MultiplesOf:
    """The family step, 2*step, 3*step, ..."""

    step: int

    def __post_init__(self) -> None:
        if self.step < 2:
            raise ValueError(f"multiples step must be >= 2, got {self.step}")

    def member(self, n: int) -> bool:
        return n % self.step == 0

    def members_up_to(self, limit: int) -> Iterator[int]:
        return iter(range(self.step, limit + 1, self.step))


@dataclass(frozen=True)
class SupportComplement:
    """Everything outside a finite support set; pins S exactly.

    Encodes cofinite exception sets such as the one with S = {1, 3}:
    every positive integer not listed in `support` is excluded.
    """

    support: frozenset[int]

    def __post_init__(self) -> None:
        if 1 not in self.support:
            raise ValueError("support must contain 1")
        if any(s < 1 for s in self.support):
            raise ValueError("support elements must be positive")

    def member(self, n: int) -> bool:
        return n not in self.support

    def members_up_to(self, limit: int) -> Iterator[int]:
        return (n for n in range(1, limit + 1) if n not in self.support)


Family = PowersOf | MultiplesOf | SupportComplement


@dataclass(frozen=True)
class ExceptionSet:
    """Finitely described set E of forbidden part sizes; 1 is never in E."""

    atoms: frozenset[int] = frozenset()
    families: tuple[Family, ...] = ()

    def __post_init__(self) -> None:
        bad = [a for a in self.atoms if a < 2]
        if bad:
            raise ValueError(f"atoms must be >= 2 (1 always stays allowed), got {sorted(bad)}")

    @property
    def spec_text(self) -> str:
        """Canonical grammar form of this set, usable as a CLI argument."""
        pieces: list[str] = []
        if self.atoms:
            pieces.append(",".join(str(a) for a in sorted(self.atoms)))
        for fam in self.families:
            if isinstance(fam, PowersOf):
                pieces.append(f"powers:{fam.base}")
            elif isinstance(fam, MultiplesOf):
                pieces.append(f"multiples:{fam.step}")
            else:
                pieces.append("support:" + ",".join(str(s) for s in sorted(fam.support)))
        return " + ".join(pieces) if pieces else "none"


def member(E: ExceptionSet, n: int) -> bool:
    """True iff n is an exception (a forbidden part size)."""
    if n < 1:
        raise ValueError(f"part sizes are positive, got {n}")
    if n in E.atoms:
        return True
    return any(fam.member(n) for fam in E.families)


def enumerate_members(E: ExceptionSet, limit: int) -> list[int]:
    """Sorted exceptions in [1, limit], built generatively per family."""
    found = {a for a in E.atoms if a <= limit}
    for fam in E.families:
        found.update(fam.members_up_to(limit))
    return sorted(found)


@dataclass(frozen=True)
class SupportView:
    """Concrete slice S intersect [1, horizon] of an allowed-part set."""

    source: ExceptionSet
    horizon: int
    elements: tuple[int, ...]


def support_view(E: ExceptionSet, horizon: int) -> SupportView:
    """Materialize the allowed parts up to horizon (always starts at 1)."""
    if horizon < 1:
        raise ValueError(f"horizon must be >= 1, got {horizon}")
    elements = tuple(n for n in range(1, horizon + 1) if not member(E, n))
    return SupportView(E, horizon, elements)


def sigma_E1(E: ExceptionSet, n: int) -> int:
    """Sum of the divisors of n that are allowed parts."""
    return sum(d for d in divisors(n) if not member(E, d))


def largest_S_divisor(E: ExceptionSet, n: int) -> int:
    """Largest divisor of n that is an allowed part; at worst 1."""
    for d in reversed(divisors(n)):
        if not member(E, d):
            return d
    raise AssertionError("unreachable: 1 always divides n and is never excluded")


_TOKEN = re.compile(r"\d+$")


def _parse_positive(token: str, context: str) -> int:
    if not _TOKEN.match(token.strip()):
        raise ValueError(f"bad token {token.strip()!r} in {context!r}")
    return int(token)


def exceptions_from_spec(text: str) -> ExceptionSet:
    """Parse an exception-set description.

    Grammar: atoms and family tokens joined by '+', e.g. '2,4',
    'powers:2', '3 + powers:5', 'multiples:3', 'support:1,3'.
    A support token fixes S outright and cannot be combined with
    anything else.  '', 'none' and 'empty' all mean no exceptions.
    """
    text = text.strip()
    if text in ("", "none", "empty"):
        return ExceptionSet()
    atoms: set[int] = set()
    families: list[Family] = []
    pieces = [piece.strip() for piece in text.split("+")]
    for piece in pieces:
        if piece.startswith("powers:"):
            families.append(PowersOf(_parse_positive(piece[len("powers:"):], piece)))
        elif piece.startswith("multiples:"):
            families.append(MultiplesOf(_parse_positive(piece[len("multiples:"):], piece)))
        elif piece.startswith("support:"):
            if len(pieces) > 1:
                raise ValueError(f"support token {piece!r} cannot be combined with other tokens")
            kept = frozenset(_parse_positive(tok, piece) for tok in piece[len("support:"):].split(","))
            families.append(SupportComplement(kept))
        elif piece:
            for tok in piece.split(","):
                atoms.add(_parse_positive(tok, piece))
        else:
            raise ValueError(f"empty token in exception spec {text!r}")
    return ExceptionSet(frozenset(atoms), tuple(families))


@dataclass(frozen=True)
class WeightFamily:
    """A family of weights f_ell with growth envelope metadata.

    eval(ell, n) must return a positive integer; phi and psi give the
    envelope exponents with n^phi(ell) <= f_ell(n) <= n^psi(ell), and
    envelope_gap bounds psi(ell) - phi(ell) uniformly in ell.
    """

    id: str
    eval: Callable[[int, int], int]
    phi: Callable[[int], int]
    psi: Callable[[int], int]
    envelope_gap: int


def _power_eval(ell: int, n: int) -> int:
    return n ** (ell - 1)


def _example1_eval(ell: int, n: int) -> int:
    if n == 2:
        return 2 ** ell
    return n ** (ell - 1)


def _example2_eval(ell: int, n: int) -> int:
    s = -1 if ell % 2 else 1
    if n == 2:
        return 2 ** (ell + s)
    if n == 4:
        return 4 ** (ell - s)
    return n ** ell


def _exponent_down(ell: int) -> int:
    return ell - 1


def _exponent_flat(ell: int) -> int:
    return ell


def _exponent_up(ell: int) -> int:
    return ell + 1


_EXPONENT_PIECE = re.compile(r"[+-]?(?:ell|alt|\d+)")


def _compile_exponent(expr: str, context: str) -> Callable[[int], int]:
    """Compile an exponent formula over ell into a function of ell.

    Accepted terms, combined with + and -: 'ell', integer literals,
    and 'alt' for the parity sign (-1)^ell.
    """
    text = expr.replace(" ", "")
    pieces = _EXPONENT_PIECE.findall(text)
    if not pieces or "".join(pieces) != text:
        raise ValueError(f"bad exponent formula {expr!r} in {context!r}")
    terms: list[tuple[int, str]] = []
    for piece in pieces:
        sign = 1
        if piece[0] in "+-":
            sign = -1 if piece[0] == "-" else 1
            piece = piece[1:]
        terms.append((sign, piece))

    def evaluate(ell: int) -> int:
        total = 0
        for sign, piece in terms:
            if piece == "ell":
                total += sign * ell
            elif piece == "alt":
                total += sign * (-1 if ell % 2 else 1)
            else:
                total += sign * int(piece)
        return total

    return evaluate


def _custom_weights(path: str) -> WeightFamily:
    with open(path, encoding="utf-8") as handle:
        raw = json.load(handle)
    for key in ("base", "phi", "psi", "B"):
        if key not in raw:
            raise ValueError(f"custom weight file {path!r} is missing {key!r}")
    base_offset = int(raw["base"])
    phi_offset = int(raw["phi"])
    psi_offset = int(raw["psi"])
    gap = int(raw["B"])
    if gap < 0:
        raise ValueError(f"B must be non-negative in {path!r}")
    overrides = {
        int(key): _compile_exponent(value, f"override {key} in {path}")
        for key, value in raw.get("overrides", {}).items()
    }

    def evaluate(ell: int, n: int) -> int:
        if n == 1:
            return 1
        rule = overrides.get(n)
        exponent = rule(ell) if rule else ell + base_offset
        if exponent < 0:
            raise ValueError(f"negative exponent {exponent} for f_{ell}({n}); weights must be positive integers")
        return n ** exponent

    def phi(ell: int) -> int:
        return ell + phi_offset

    def psi(ell: int) -> int:
        return ell + psi_offset

    return WeightFamily(f"custom:{path}", evaluate, phi, psi, gap)


def weight_from_spec(spec: str) -> WeightFamily:
    """Build a weight family from its grammar form.

    'power' is n^(ell-1); 'example1' is the same except f_ell(2) = 2^ell;
    'example2' is n^ell except f_ell(2) = 2^(ell+(-1)^ell) and
    f_ell(4) = 4^(ell-(-1)^ell); 'custom:<path>' reads a JSON file with
    keys base, overrides, phi, psi, B, all exponent offsets relative to
    ell except the override formulas.
    """
    name = spec.strip()
    if name == "power":
        return WeightFamily("power", _power_eval, _exponent_down, _exponent_down, 0)
    if name == "example1":
        return WeightFamily("example1", _example1_eval, _exponent_down, _exponent_flat, 1)
    if name == "example2":
        return WeightFamily("example2", _example2_eval, _exponent_down, _exponent_up, 2)
    if name.startswith("custom:"):
        return _custom_weights(name[len("custom:"):])
    raise ValueError(f"unknown weight family {spec!r}")
