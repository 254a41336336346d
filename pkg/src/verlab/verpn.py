"""Simple-object calculus of the level-p^n Verlinde categories.

Indices, Steinberg digit factorization, the embedding of level p^{n-1}
into level p^n, the odd line, and a knowledge base for symmetric-power
vanishing.  The knowledge base never guesses: it either fires an explicit
rule (with its provenance) or answers Unknown.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from importlib import resources

from .errors import DigitOutOfRange, EvenPrime, IndexOutOfRange


def max_index(p: int, n: int) -> int:
    """Largest simple index at level p^n: p^{n-1}(p-1) - 1."""
    if n < 1:
        raise ValueError("level exponent n must be >= 1")
    return p ** (n - 1) * (p - 1) - 1


def _check_index(p: int, n: int, i: int) -> None:
    if not 0 <= i <= max_index(p, n):
        raise IndexOutOfRange(
            f"index {i} outside [0, {max_index(p, n)}] for (p={p}, n={n})"
        )


@dataclass(frozen=True)
class VerpnSimple:
    p: int
    n: int
    index: int

    def __post_init__(self) -> None:
        _check_index(self.p, self.n, self.index)

    @property
    def digits(self) -> tuple[int, ...]:
        return steinberg_digits(self.p, self.n, self.index)


def steinberg_digits(p: int, n: int, i: int) -> tuple[int, ...]:
    """Base-p digits of i, most significant first, n digits.

    The index bound guarantees the leading digit is at most p-2.
    """
    _check_index(p, n, i)
    digits = []
    for _ in range(n):
        digits.append(i % p)
        i //= p
    return tuple(reversed(digits))


def steinberg_product(p: int, n: int, digits: tuple[int, ...] | list[int]) -> VerpnSimple:
    """Simple object with index sum_j p^{n-j} i_j; inverse of the digit map."""
    digits = tuple(digits)
    if len(digits) != n:
        raise DigitOutOfRange(f"expected {n} digits, got {len(digits)}")
    for d in digits:
        if not 0 <= d <= p - 1:
            raise DigitOutOfRange(f"digit {d} outside [0, {p - 1}]")
    if digits[0] > p - 2:
        raise DigitOutOfRange(f"leading digit {digits[0]} exceeds {p - 2}")
    index = 0
    for d in digits:
        index = index * p + d
    return VerpnSimple(p, n, index)


def embed(p: int, n: int, i: int) -> int:
    """Index of L_i of level p^n inside level p^{n+1}: multiply by p."""
    _check_index(p, n, i)
    return p * i


def odd_line(p: int, n: int) -> int:
    """Index of the odd line generating sVec: p^{n-1}(p-2)."""
    if p == 2:
        raise EvenPrime("no odd line at p = 2")
    if n < 1:
        raise ValueError("level exponent n must be >= 1")
    return p ** (n - 1) * (p - 2)


def is_invertible_simple(p: int, n: int, i: int) -> bool:
    """True for the unit and (odd p) the odd line; the only invertibles."""
    _check_index(p, n, i)
    if i == 0:
        return True
    return p > 2 and i == odd_line(p, n)


class Sym(Enum):
    ZERO = "Zero"
    IS_UNIT = "IsUnit"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class SymStatus:
    status: Sym
    rule: str
    has_unit_summand: bool = False


def _load_fact_file() -> dict:
    path = resources.files("verlab.data").joinpath("sym_power_facts.json")
    return json.loads(path.read_text())


_FACT_FILE = _load_fact_file()
FACTS = tuple(_FACT_FILE["facts"])
UNIT_SUMMAND_FACTS = tuple(_FACT_FILE["unit_summand_facts"])
COMMENTS = tuple(_FACT_FILE["comments"])


def _vanishing_bounds(p: int, n: int, i: int) -> list[tuple[int, str]]:
    """(bound, rule name) pairs: Sym^k L_i = 0 for all k >= bound.

    Rules evaluated in fixed order: prime-power index, top-digit index,
    odd-line shifted index.
    """
    bounds: list[tuple[int, str]] = []
    # Sym^{p^{n-j} - 1} L_{p^j} = 0 for 0 <= j < n
    for j in range(n):
        if i == p**j:
            bounds.append(
                (p ** (n - j) - 1, f"vanishing rule: Sym^(p^{n - j}-1) L_(p^{j}) = 0")
            )
    # Sym^{p-m} L_{p^{n-1} m} = 0 for 0 < m < p-1
    if i % p ** (n - 1) == 0:
        m = i // p ** (n - 1)
        if 0 < m < p - 1:
            bounds.append(
                (p - m, f"vanishing rule: Sym^(p-{m}) L_(p^{n - 1}*{m}) = 0")
            )
    # Sym^{m+2} L_{odd + p^j m} = 0 for 0 <= j < n-1, 0 <= m < p
    if p > 2 and n >= 2:
        base = odd_line(p, n)
        rem = i - base
        if rem >= 0:
            for j in range(n - 1):
                if rem % p**j == 0:
                    m = rem // p**j
                    if 0 <= m < p:
                        bounds.append(
                            (
                                m + 2,
                                f"vanishing rule: Sym^({m}+2) L_(oddline+p^{j}*{m}) = 0",
                            )
                        )
    return bounds


def sym_power_status(p: int, n: int, i: int, k: int) -> SymStatus:
    """Best known status of Sym^k L_i at level p^n.

    Order of evaluation: trivial unit cases, exact fact-table entries,
    the three vanishing rules, the invertible-top inference (Sym of a
    non-invertible simple dies one step above an invertible symmetric
    power), upward closure of Zero.  Anything else is Unknown.
    """
    _check_index(p, n, i)
    if k < 0:
        raise ValueError("power k must be >= 0")

    summand = any(
        f["p"] == p and f["n"] == n and f["index"] == i and f["power"] == k
        for f in UNIT_SUMMAND_FACTS
    )

    if k == 0:
        return SymStatus(Sym.IS_UNIT, "Sym^0 is the unit", summand)
    if i == 0:
        return SymStatus(Sym.IS_UNIT, "all symmetric powers of the unit are the unit", summand)

    matching = [f for f in FACTS if f["p"] == p and f["n"] == n and f["index"] == i]
    for f in matching:
        if f["status"] == "Zero" and k >= f["power"]:
            rule = f["provenance"]
            if k > f["power"]:
                rule += f" (upward closure from k={f['power']})"
            return SymStatus(Sym.ZERO, rule, summand)
        if f["status"] == "IsUnit" and k == f["power"]:
            return SymStatus(Sym.IS_UNIT, f["provenance"], summand)

    for bound, rule in _vanishing_bounds(p, n, i):
        if k >= bound:
            if k > bound:
                rule += f" (upward closure from k={bound})"
            return SymStatus(Sym.ZERO, rule, summand)

    # Invertible-top inference: if Sym^a L is the unit for a non-invertible
    # simple L, then Sym^{a+1} L = 0. Premises must be fact-table entries.
    if not is_invertible_simple(p, n, i):
        for f in matching:
            if f["status"] == "IsUnit" and k >= f["power"] + 1:
                return SymStatus(
                    Sym.ZERO,
                    "invertible-top inference from fact: " + f["provenance"],
                    summand,
                )

    return SymStatus(Sym.UNKNOWN, "no rule matches", summand)
