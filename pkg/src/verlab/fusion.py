"""Semisimple fusion ring of the level-p Verlinde quotient.

Fusion products are computed structurally through the tilting quotient
(tensor-decompose, drop negligible summands).  The trigonometric S-matrix
formula and the truncated Clebsch-Gordan closed form are kept as
independent oracles, never as the production route.
"""
from __future__ import annotations

import functools
import math
from dataclasses import dataclass, field

from .characters import simple_char
from .errors import IndexOutOfRange, NonConvergence, NumericalInstability
from .tilting import is_negligible, tensor_decompose_tilt


def _check_index(p: int, a: int, what: str = "index") -> None:
    if not 0 <= a <= p - 2:
        raise IndexOutOfRange(f"{what} {a} outside [0, {p - 2}] for p={p}")


class FusionElement:
    """Non-negative integer combination of the simples L_0..L_{p-2}."""

    __slots__ = ("p", "_mults")

    def __init__(self, p: int, mults: dict[int, int] | None = None):
        self.p = p
        clean: dict[int, int] = {}
        for i, m in (mults or {}).items():
            _check_index(p, i)
            if m < 0:
                raise ValueError("multiplicities must be non-negative")
            if m:
                clean[int(i)] = int(m)
        self._mults = clean

    @classmethod
    def simple(cls, p: int, a: int) -> "FusionElement":
        return cls(p, {a: 1})

    @property
    def mults(self) -> dict[int, int]:
        return dict(self._mults)

    def length(self) -> int:
        return sum(self._mults.values())

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FusionElement)
            and self.p == other.p
            and self._mults == other._mults
        )

    def __repr__(self) -> str:
        items = ", ".join(f"L{i}: {m}" for i, m in sorted(self._mults.items()))
        return f"FusionElement(p={self.p}, {{{items}}})"

    def __add__(self, other: "FusionElement") -> "FusionElement":
        out = dict(self._mults)
        for i, m in other._mults.items():
            out[i] = out.get(i, 0) + m
        return FusionElement(self.p, out)

    def __mul__(self, other: "FusionElement") -> "FusionElement":
        out: dict[int, int] = {}
        for a, ma in self._mults.items():
            for b, mb in other._mults.items():
                for c, n in fuse(self.p, a, b).mults.items():
                    out[c] = out.get(c, 0) + ma * mb * n
        return FusionElement(self.p, out)


@functools.lru_cache(maxsize=None)
def _fuse_mults(p: int, a: int, b: int) -> tuple[tuple[int, int], ...]:
    dec = tensor_decompose_tilt(p, a, b)
    return tuple(
        (m, mult)
        for m, mult in sorted(dec.terms.items())
        if not is_negligible(p, 1, m)
    )


def fuse(p: int, a: int, b: int) -> FusionElement:
    """Fusion product L_a (x) L_b via the tilting quotient."""
    _check_index(p, a)
    _check_index(p, b)
    return FusionElement(p, dict(_fuse_mults(p, a, b)))


def clebsch_gordan_truncated(p: int, a: int, b: int, c: int) -> int:
    """Closed-form oracle: N_{ab}^c is 0 or 1 by the truncated CG rule."""
    for x in (a, b, c):
        _check_index(p, x)
    if (a + b - c) % 2 != 0:
        return 0
    if abs(a - b) <= c <= min(a + b, 2 * (p - 2) - (a + b)):
        return 1
    return 0


def verlinde_oracle(p: int, a: int, b: int, c: int) -> int:
    """Numeric S-matrix oracle for the fusion coefficient N_{ab}^c.

    Uses S_{xy} proportional to sin((x+1)(y+1)pi/p) and the standard sum
    over the simple labels; the result is rounded and the residual must be
    below 1e-6.  The output slot c may be p-1 (one past the last simple),
    where the S-column vanishes and the coefficient is identically 0.
    """
    _check_index(p, a)
    _check_index(p, b)
    if not 0 <= c <= p - 1:
        raise IndexOutOfRange(f"output index {c} outside [0, {p - 1}] for p={p}")
    total = 0.0
    for j in range(p - 1):
        s = lambda x: math.sin((x + 1) * (j + 1) * math.pi / p)
        total += s(a) * s(b) * s(c) / s(0)
    total *= 2.0 / p
    rounded = round(total)
    if abs(total - rounded) >= 1e-6:
        raise NumericalInstability(
            f"Verlinde sum residual {abs(total - rounded):.2e} for "
            f"(p={p}, {a}, {b}, {c})"
        )
    return int(rounded)


def dim_fp(p: int, a: int) -> int:
    """Categorical dimension of L_a as a residue mod p."""
    _check_index(p, a)
    return (a + 1) % p


def fusion_matrix(p: int, a: int) -> list[list[int]]:
    """Matrix of fusion with L_a: entry [b][c] = N_{ab}^c."""
    _check_index(p, a)
    mat = [[0] * (p - 1) for _ in range(p - 1)]
    for b in range(p - 1):
        for c, n in fuse(p, a, b).mults.items():
            mat[b][c] = n
    return mat


def fpdim(p: int, a: int, tol: float = 1e-10, max_iter: int = 100_000) -> float:
    """Largest eigenvalue of the fusion matrix of L_a by power iteration.

    The matrix is shifted by the identity first (fusion graphs can be
    bipartite, which makes unshifted power iteration oscillate).  The
    result is cross-checked against the quantum dimension of chi_a.
    """
    _check_index(p, a)
    mat = fusion_matrix(p, a)
    size = p - 1

    def apply(vec: list[float]) -> list[float]:
        return [
            vec[b] + sum(mat[b][c] * vec[c] for c in range(size)) for b in range(size)
        ]

    v = [1.0] * size
    for _ in range(max_iter):
        w = apply(v)
        nrm = max(w)
        w = [x / nrm for x in w]
        if max(abs(x - y) for x, y in zip(w, v)) <= tol:
            v = w
            break
        v = w
    else:
        raise NonConvergence(f"power iteration for (p={p}, a={a})")
    mv = apply(v)
    rayleigh = sum(x * y for x, y in zip(v, mv)) / sum(x * x for x in v)
    value = rayleigh - 1.0
    expected = simple_char(p, a).quantum_dimension(p)
    if abs(value - expected) > 1e-8:
        raise NumericalInstability(
            f"power iteration gave {value}, quantum dimension is {expected}"
        )
    return value


@dataclass
class GdEstimate:
    """Root sequence ell(x^{(x)n})^(1/n) and its final value."""

    roots: list[float]
    final: float
    lengths: list[int] = field(default_factory=list)


def _log_big(n: int) -> float:
    """Natural log of a (possibly huge) positive integer."""
    if n <= 0:
        raise ValueError("log of non-positive length")
    if n.bit_length() <= 900:
        return math.log(n)
    k = n.bit_length() - 60
    return math.log(n >> k) + k * math.log(2.0)


def gd_estimate(p: int, x: FusionElement, n_max: int) -> GdEstimate:
    """Growth dimension of x as the limit of ell(x^{(x)n})^(1/n).

    Lengths are exact arbitrary-precision integers; the raw root sequence
    is reported without extrapolation.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    roots: list[float] = []
    lengths: list[int] = []
    power = x
    for n in range(1, n_max + 1):
        if n > 1:
            power = power * x
        ell = power.length()
        lengths.append(ell)
        roots.append(math.exp(_log_big(ell) / n))
    return GdEstimate(roots=roots, final=roots[-1], lengths=lengths)
