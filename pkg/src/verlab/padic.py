"""F_p power-series and p-adic digit arithmetic for Hilbert series.

The central identity: the Hilbert series of a symmetric algebra is
(1-t)^{-D} for a p-adic integer D, where (1-t)^d for d in Z_p is defined
digitwise as the product over j of (1 - t^{p^j})^{d_j}.  This module
expands that product, recovers the exponent greedily from a series, and
implements the finite-symmetric-algebra rule and the extension transform.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import BadTopDim, InsufficientPrecision, NotAPurePower, NotPPower

DEFAULT_TRUNCATION = 64


@dataclass(frozen=True)
class PadicDigits:
    """Base-p digit prefix d_0..d_{M-1} of a p-adic integer, mod p^M."""

    p: int
    digits: tuple[int, ...]

    def __post_init__(self) -> None:
        for d in self.digits:
            if not 0 <= d < self.p:
                raise ValueError(f"digit {d} outside [0, {self.p - 1}]")

    @property
    def precision(self) -> int:
        return len(self.digits)

    def to_int(self) -> int:
        """Representative in [0, p^M)."""
        val = 0
        for d in reversed(self.digits):
            val = val * self.p + d
        return val

    def to_signed_int(self) -> int:
        """Balanced representative: the integer of least absolute value."""
        val = self.to_int()
        mod = self.p**self.precision
        return val - mod if val > mod // 2 else val


def padic_of_int(x: int, p: int, m: int) -> PadicDigits:
    """Digits of x mod p^M; negative integers via the complement."""
    if m < 1:
        raise ValueError("precision M must be >= 1")
    val = x % p**m
    digits = []
    for _ in range(m):
        digits.append(val % p)
        val //= p
    return PadicDigits(p, tuple(digits))


def padic_add(a: PadicDigits, b: PadicDigits) -> PadicDigits:
    if a.p != b.p:
        raise ValueError("mismatched primes")
    m = min(a.precision, b.precision)
    return padic_of_int(a.to_int() + b.to_int(), a.p, m)


def padic_add_int(a: PadicDigits, k: int) -> PadicDigits:
    return padic_of_int(a.to_int() + k, a.p, a.precision)


def padic_neg(a: PadicDigits) -> PadicDigits:
    return padic_of_int(-a.to_int(), a.p, a.precision)


@dataclass(frozen=True)
class FpSeries:
    """Truncated power series over F_p; coeffs[i] is the t^i coefficient."""

    p: int
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "coeffs", tuple(c % self.p for c in self.coeffs)
        )

    @property
    def truncation(self) -> int:
        return len(self.coeffs) - 1

    def __mul__(self, other: "FpSeries") -> "FpSeries":
        if self.p != other.p:
            raise ValueError("mismatched primes")
        n = min(self.truncation, other.truncation)
        out = [0] * (n + 1)
        for i, a in enumerate(self.coeffs[: n + 1]):
            if a:
                for j, b in enumerate(other.coeffs[: n + 1 - i]):
                    if b:
                        out[i + j] = (out[i + j] + a * b) % self.p
        return FpSeries(self.p, tuple(out))

    def value_at_one(self) -> int:
        return sum(self.coeffs) % self.p

    def degree(self) -> int:
        """Degree as a polynomial (top nonzero coefficient index), -1 if 0."""
        for i in range(len(self.coeffs) - 1, -1, -1):
            if self.coeffs[i]:
                return i
        return -1


def fp_one(p: int, n: int) -> FpSeries:
    return FpSeries(p, (1,) + (0,) * n)


def _one_minus_tk_pow(p: int, n: int, k: int, e: int) -> FpSeries:
    """(1 - t^k)^e truncated at t^n, for small e >= 0 (at most p)."""
    base = [0] * (n + 1)
    base[0] = 1
    if k <= n:
        base[k] = p - 1
    factor = FpSeries(p, tuple(base))
    out = fp_one(p, n)
    for _ in range(e):
        out = out * factor
    return out


def one_minus_t_pow(d: PadicDigits, n: int | None = None) -> FpSeries:
    """Digit-product expansion of (1-t)^d truncated at t^N.

    Factor j contributes only for p^j <= N; the precision must satisfy
    p^M > N so that all contributing digits are known.
    """
    if n is None:
        n = DEFAULT_TRUNCATION
    p = d.p
    if p**d.precision <= n:
        raise InsufficientPrecision(
            f"p^M = {p**d.precision} <= N = {n}: not enough digits"
        )
    out = fp_one(p, n)
    for j, dj in enumerate(d.digits):
        if p**j > n:
            break
        if dj:
            out = out * _one_minus_tk_pow(p, n, p**j, dj)
    return out


def one_minus_t_pow_int(x: int, p: int, n: int | None = None) -> FpSeries:
    """(1-t)^x for an integer x, with precision chosen automatically."""
    if n is None:
        n = DEFAULT_TRUNCATION
    m = 1
    while p**m <= n:
        m += 1
    return one_minus_t_pow(padic_of_int(x, p, m), n)


def recoverable_digits(p: int, n: int) -> int:
    """Number of p-adic digits determined by a series truncated at t^N."""
    m = 1
    while p**m <= n:
        m += 1
    return m


def dimplus_from_series(s: FpSeries) -> PadicDigits:
    """Recover e with s = (1-t)^e; the p-adic dimension is then -e.

    Greedy per p-adic level: the unique digit d_0 makes
    s * (1-t)^{p-d_0} a series in t^p (using (1-t)^p = 1-t^p over F_p);
    divide out 1-t^p, compress, recurse.  Any failure of the divisibility
    check means the input violates the pure-power guarantee.
    """
    p = s.p
    if not s.coeffs or s.coeffs[0] != 1:
        raise NotAPurePower("series must have constant term 1")
    cur = list(s.coeffs)
    n = len(cur) - 1
    digits: list[int] = []
    level = 0
    while n >= 1:
        found = None
        for d0 in range(p):
            w = (FpSeries(p, tuple(cur)) * _one_minus_tk_pow(p, n, 1, p - d0)).coeffs
            if all(c == 0 for k, c in enumerate(w) if k % p != 0):
                compressed = [w[p * k] for k in range(n // p + 1)]
                # divide by 1 - t^p, i.e. by 1 - s in compressed coordinates
                quot = [0] * len(compressed)
                for k, c in enumerate(compressed):
                    quot[k] = (c + (quot[k - 1] if k else 0)) % p
                found = (d0, quot)
                break
        if found is None:
            raise NotAPurePower(
                f"no digit yields divisibility at level {level}"
            )
        d0, cur = found
        digits.append(d0)
        n //= p
        level += 1
    return PadicDigits(p, tuple(digits))


def dimplus_of_finite_sym(dmax: int, p: int | None = None) -> int:
    """p-adic dimension of an object whose top nonzero symmetric power is dmax.

    Returns -dmax.  When p is supplied and dmax >= 1, also certifies the
    companion fact that the symmetric algebra has total dimension 0 mod p
    by evaluating the digit product (1-t)^dmax at t = 1.
    """
    if dmax < 0:
        raise ValueError("dmax must be >= 0")
    if p is not None and dmax >= 1:
        series = one_minus_t_pow_int(dmax, p, dmax)
        if series.value_at_one() != 0:
            raise AssertionError(
                f"(1-t)^{dmax} at t=1 is {series.value_at_one()} mod {p}, expected 0"
            )
    return -dmax


def is_p_power(x: int, p: int) -> bool:
    if x < 1:
        return False
    while x % p == 0:
        x //= p
    return x == 1


def extension_transform(
    p: int,
    nlen: int,
    dimplus_v: int | PadicDigits,
    dimplus_v_dual: int | PadicDigits,
) -> tuple[int | PadicDigits, int | PadicDigits]:
    """p-adic dimensions of a unit-by-V extension E and of its dual.

    For an extension of V by the unit whose symmetric-algebra image of the
    unit line has length nlen (necessarily a power of p):
    Dim+(E) = Dim+(V) + 1 - nlen and Dim+(E dual) = Dim+(V dual) + 1.
    """
    if not is_p_power(nlen, p):
        raise NotPPower(f"nlen = {nlen} is not a power of p = {p}")

    def shift(d: int | PadicDigits, k: int) -> int | PadicDigits:
        if isinstance(d, PadicDigits):
            if d.p != p:
                raise ValueError("mismatched primes")
            return padic_add_int(d, k)
        return d + k

    return shift(dimplus_v, 1 - nlen), shift(dimplus_v_dual, 1)


def extension_series(hs_v: FpSeries, nlen: int) -> FpSeries:
    """Series-level form of the extension transform.

    HS_E = (1 + t + ... + t^{nlen-1}) * HS_V; since nlen is a power of p
    the prefactor equals (1-t)^{nlen-1}, so the digit-level shift by
    1 - nlen agrees.
    """
    p = hs_v.p
    if not is_p_power(nlen, p):
        raise NotPPower(f"nlen = {nlen} is not a power of p = {p}")
    n = hs_v.truncation
    pref = FpSeries(p, tuple(1 if i < nlen else 0 for i in range(n + 1)))
    return pref * hs_v


def frobenius_palindromy_check(p: int, hs: list[int] | tuple[int, ...], d: int) -> bool:
    """Dimension shadow of invertibility of the top symmetric power.

    For a finite symmetric algebra with top degree d, the Hilbert
    coefficients must satisfy hs[i] = hs[d-i] * hs[d] mod p, with
    hs[d] = +-1 (the top power is invertible).
    """
    hs = [c % p for c in hs]
    if len(hs) != d + 1:
        raise ValueError(f"expected {d + 1} coefficients, got {len(hs)}")
    if hs[0] != 1:
        raise ValueError("Hilbert series must start with 1")
    top = hs[d]
    if top not in (1, (p - 1) % p):
        raise BadTopDim(f"top coefficient {top} is not +-1 mod {p}")
    return all(hs[i] == (hs[d - i] * top) % p for i in range(d + 1))
