"""Truncated power series over F_p: the ring F_p[[x]] / x^N.

A :class:`TruncSeries` stores its coefficients densely as a read-only numpy
vector of residues; index n holds the coefficient of x^n and the vector
length is the precision N.  Precision is explicit and sticky: binary
operations demand equal precision (lower one explicitly with
:meth:`TruncSeries.truncate`), while the Hasse derivative and the p-th root
return results at the reduced precision those operations support.

:class:`BivTrunc` is the two-variable analogue truncated independently in
each variable: an N-by-N coefficient box with entry (i, j) holding the
coefficient of x^i y^j.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    ModulusMismatch,
    NonUnitConstantTerm,
    NonzeroConstantInner,
    NotAPthPower,
    PrecisionExhausted,
    ShapeMismatch,
)
from .fp import Prime, _binom_digit

__all__ = ["TruncSeries", "BivTrunc", "outer_product", "subst_group_law"]


def _convolve_mod(a: np.ndarray, b: np.ndarray, n: int, p: int) -> np.ndarray:
    """First n coefficients of the product, reduced mod p."""
    if (p - 1) * (p - 1) * min(len(a), len(b)) < 2**62:
        return np.convolve(a, b)[:n] % p
    # big-int fallback, only reachable for very large moduli
    out = [0] * n
    for i, ai in enumerate(int(v) for v in a):
        if ai == 0 or i >= n:
            continue
        for j, bj in enumerate(int(v) for v in b):
            if i + j >= n:
                break
            out[i + j] = (out[i + j] + ai * bj) % p
    return np.array(out, dtype=np.int64)


@dataclass(frozen=True, eq=False)
class TruncSeries:
    """A power series known modulo x^N, coefficients in F_p."""

    modulus: Prime
    coeffs: np.ndarray

    def __post_init__(self) -> None:
        arr = np.ascontiguousarray(self.coeffs, dtype=np.int64)
        if arr.ndim != 1 or len(arr) < 1:
            raise ValueError("coefficient vector must be 1-d and nonempty")
        p = self.modulus.p
        if arr.size and (int(arr.min()) < 0 or int(arr.max()) >= p):
            raise ValueError(f"coefficients must be residues in [0, {p})")
        arr.setflags(write=False)
        object.__setattr__(self, "coeffs", arr)

    # -- construction ------------------------------------------------------

    @classmethod
    def from_ints(cls, modulus: Prime, values: Iterable[int]) -> "TruncSeries":
        """Build a series from arbitrary integers, reducing them mod p."""
        reduced = [int(v) % modulus.p for v in values]
        return cls(modulus, np.array(reduced, dtype=np.int64))

    @classmethod
    def constant(cls, modulus: Prime, precision: int, value: int = 1) -> "TruncSeries":
        arr = np.zeros(precision, dtype=np.int64)
        arr[0] = value % modulus.p
        return cls(modulus, arr)

    @classmethod
    def one_plus_x(cls, modulus: Prime, precision: int) -> "TruncSeries":
        arr = np.zeros(precision, dtype=np.int64)
        arr[0] = 1
        if precision >= 2:
            arr[1] = 1
        return cls(modulus, arr)

    # -- basic structure ---------------------------------------------------

    @property
    def precision(self) -> int:
        return len(self.coeffs)

    def coefficient(self, n: int) -> int:
        """The residue at x^n (0 <= n < precision)."""
        if not 0 <= n < self.precision:
            raise PrecisionExhausted(
                f"coefficient {n} outside precision {self.precision}")
        return int(self.coeffs[n])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return (self.modulus == other.modulus
                and self.precision == other.precision
                and bool(np.array_equal(self.coeffs, other.coeffs)))

    def __hash__(self) -> int:
        return hash((self.modulus, self.coeffs.tobytes()))

    def __repr__(self) -> str:
        return f"<TruncSeries {self.serialize()}>"

    def _check_compatible(self, other: "TruncSeries") -> None:
        if self.modulus != other.modulus:
            raise ModulusMismatch(
                f"p={self.modulus.p} vs p={other.modulus.p}")
        if self.precision != other.precision:
            raise ShapeMismatch(
                f"precision {self.precision} vs {other.precision}; "
                "truncate explicitly before mixing")

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "TruncSeries") -> "TruncSeries":
        self._check_compatible(other)
        return TruncSeries(self.modulus, (self.coeffs + other.coeffs) % self.modulus.p)

    def __sub__(self, other: "TruncSeries") -> "TruncSeries":
        self._check_compatible(other)
        return TruncSeries(self.modulus, (self.coeffs - other.coeffs) % self.modulus.p)

    def __neg__(self) -> "TruncSeries":
        return TruncSeries(self.modulus, (-self.coeffs) % self.modulus.p)

    def __mul__(self, other: "TruncSeries") -> "TruncSeries":
        self._check_compatible(other)
        prod = _convolve_mod(self.coeffs, other.coeffs, self.precision, self.modulus.p)
        return TruncSeries(self.modulus, prod)

    def scaled(self, c: int) -> "TruncSeries":
        """Multiply every coefficient by the integer c (reduced mod p)."""
        return TruncSeries(self.modulus, self.coeffs * (c % self.modulus.p) % self.modulus.p)

    def pow_int(self, e: int) -> "TruncSeries":
        """Nonnegative integer power by square-and-multiply."""
        if e < 0:
            raise ValueError("pow_int expects a nonnegative exponent")
        out = TruncSeries.constant(self.modulus, self.precision)
        base = self
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base * base
        return out

    def truncate(self, precision: int) -> "TruncSeries":
        """Forget coefficients at and above x^precision."""
        if not 1 <= precision <= self.precision:
            raise PrecisionExhausted(
                f"cannot truncate precision {self.precision} to {precision}")
        if precision == self.precision:
            return self
        return TruncSeries(self.modulus, self.coeffs[:precision])

    def invert(self) -> "TruncSeries":
        """The g with f*g = 1 mod x^N.  Newton doubling on the residual."""
        c0 = int(self.coeffs[0])
        if c0 == 0:
            raise NonUnitConstantTerm("constant term must be a unit to invert")
        p = self.modulus.p
        n = self.precision
        g = np.array([pow(c0, -1, p)], dtype=np.int64)
        m = 1
        while m < n:
            m = min(2 * m, n)
            fg = _convolve_mod(self.coeffs[:m], g, m, p)
            t = (-fg) % p
            t[0] = (t[0] + 2) % p
            g = _convolve_mod(g, t, m, p)
        return TruncSeries(self.modulus, g)

    # -- characteristic-p structure ----------------------------------------

    def hasse_derivative(self, m: int) -> "TruncSeries":
        """The m-th Hasse derivative: x^n maps to C(n, m) x^(n-m).

        Binomials come from base-p digit products, so no division by p ever
        happens.  The result is only known modulo x^(N-m).
        """
        if m < 0:
            raise ValueError("derivative order must be nonnegative")
        n = self.precision
        if m >= n:
            raise PrecisionExhausted(
                f"order {m} exceeds what precision {n} supports")
        if m == 0:
            return self
        p = self.modulus.p
        out = np.zeros(n - m, dtype=np.int64)
        for i in range(n - m):
            c = int(self.coeffs[i + m])
            if c == 0:
                continue
            top, bot, factor = i + m, m, 1
            while (top or bot) and factor:
                top, td = divmod(top, p)
                bot, bd = divmod(bot, p)
                factor = factor * _binom_digit(td, bd, p) % p
            out[i] = c * factor % p
        return TruncSeries(self.modulus, out)

    def frobenius(self) -> "TruncSeries":
        """Substitute x -> x^p (the p-th power map on 1-units)."""
        n, p = self.precision, self.modulus.p
        out = np.zeros(n, dtype=np.int64)
        out[::p] = self.coeffs[: (n - 1) // p + 1]
        return TruncSeries(self.modulus, out)

    def pth_root(self) -> "TruncSeries":
        """Invert frobenius.  Precision drops to floor((N-1)/p) + 1."""
        n, p = self.precision, self.modulus.p
        mask = np.ones(n, dtype=bool)
        mask[::p] = False
        bad = np.nonzero(self.coeffs * mask)[0]
        if bad.size:
            raise NotAPthPower(f"nonzero coefficient at x^{int(bad[0])}")
        return TruncSeries(self.modulus, self.coeffs[::p])

    def compose(self, inner: "TruncSeries") -> "TruncSeries":
        """f(inner) for an inner series with zero constant term (Horner)."""
        self._check_compatible(inner)
        if int(inner.coeffs[0]) != 0:
            raise NonzeroConstantInner(
                "inner series must have zero constant term")
        n, p = self.precision, self.modulus.p
        acc = np.zeros(n, dtype=np.int64)
        acc[0] = self.coeffs[n - 1]
        for i in range(n - 2, -1, -1):
            acc = _convolve_mod(acc, inner.coeffs, n, p)
            acc[0] = (acc[0] + int(self.coeffs[i])) % p
        return TruncSeries(self.modulus, acc)

    # -- text form ---------------------------------------------------------

    def serialize(self) -> str:
        body = ",".join(str(int(c)) for c in self.coeffs)
        return f"p={self.modulus.p};N={self.precision};coeffs={body}"

    @classmethod
    def parse(cls, text: str) -> "TruncSeries":
        parts = text.strip().split(";")
        if len(parts) != 3:
            raise ValueError(f"expected 3 ';'-separated fields, got {len(parts)}")
        fields = {}
        for part, key in zip(parts, ("p", "N", "coeffs")):
            prefix = key + "="
            if not part.startswith(prefix):
                raise ValueError(f"expected field {key!r}, got {part!r}")
            fields[key] = part[len(prefix):]
        modulus = Prime(int(fields["p"]))
        precision = int(fields["N"])
        coeffs = [int(tok) for tok in fields["coeffs"].split(",")]
        if len(coeffs) != precision:
            raise ValueError(
                f"N={precision} but {len(coeffs)} coefficients given")
        return cls(modulus, np.array(coeffs, dtype=np.int64))


@dataclass(frozen=True, eq=False)
class BivTrunc:
    """A two-variable series truncated to the N-by-N coefficient box."""

    modulus: Prime
    table: np.ndarray

    def __post_init__(self) -> None:
        arr = np.ascontiguousarray(self.table, dtype=np.int64)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] < 1:
            raise ValueError("table must be a square 2-d array")
        arr.setflags(write=False)
        object.__setattr__(self, "table", arr)

    @property
    def precision(self) -> int:
        return self.table.shape[0]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BivTrunc):
            return NotImplemented
        return (self.modulus == other.modulus
                and self.table.shape == other.table.shape
                and bool(np.array_equal(self.table, other.table)))

    def __hash__(self) -> int:
        return hash((self.modulus, self.table.tobytes()))

    def first_mismatch(self, other: "BivTrunc") -> tuple[int, int] | None:
        """Lexicographically first (i, j) where the boxes differ, else None."""
        if self.modulus != other.modulus:
            raise ModulusMismatch(
                f"p={self.modulus.p} vs p={other.modulus.p}")
        if self.table.shape != other.table.shape:
            raise ShapeMismatch(
                f"box {self.table.shape} vs {other.table.shape}")
        diff = np.argwhere(self.table != other.table)
        if diff.size == 0:
            return None
        return int(diff[0][0]), int(diff[0][1])


def outer_product(f: TruncSeries, g: TruncSeries) -> BivTrunc:
    """The box of f(x) * g(y)."""
    f._check_compatible(g)
    return BivTrunc(f.modulus, np.outer(f.coeffs, g.coeffs) % f.modulus.p)


def subst_group_law(f: TruncSeries) -> BivTrunc:
    """Substitute s = x + y + xy into f, truncated to the N-by-N box.

    1 + s factors as (1+x)(1+y), so for a 1-unit f this is f evaluated on
    the product of the two one-variable arguments.
    """
    n, p = f.precision, f.modulus.p
    acc = np.zeros((n, n), dtype=np.int64)
    for a in f.coeffs[::-1]:
        nxt = np.zeros_like(acc)
        nxt[1:, :] += acc[:-1, :]
        nxt[:, 1:] += acc[:, :-1]
        nxt[1:, 1:] += acc[:-1, :-1]
        nxt[0, 0] += int(a)
        acc = nxt % p
    return BivTrunc(f.modulus, acc)
