"""Spectrum containers and exact quadratic irrationals.

Eigenvalue multisets are represented as (value, multiplicity) pairs sorted in
decreasing order.  Values may be exact (int, Fraction, QuadraticNumber) or
floating point; exact values carry through to serialized output so that
irrational eigenvalues like (-5+sqrt(33))/2 survive a round trip.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from typing import Iterable, Union

Rational = Union[int, Fraction]


def _squarefree_split(d: int) -> tuple[int, int]:
    """Write d = s*s*r with r square-free; return (s, r)."""
    if d < 0:
        raise ValueError("radicand must be non-negative")
    s, r, p = 1, 1, 2
    while p * p <= d:
        while d % (p * p) == 0:
            d //= p * p
            s *= p
        if d % p == 0:
            d //= p
            r *= p
        p += 1
    return s, r * d


@dataclass(frozen=True)
class QuadraticNumber:
    """Exact number of the form a + b*sqrt(d) with rational a, b.

    Stored canonically: d square-free, and b == 0 forces d == 0, so equal
    values compare equal as dataclasses.
    """

    a: Fraction
    b: Fraction
    d: int

    def __init__(self, a: Rational, b: Rational = 0, d: int = 0):
        a, b = Fraction(a), Fraction(b)
        s, r = _squarefree_split(int(d))
        b *= s
        if r <= 1 or b == 0:
            # sqrt(0) = 0 and sqrt(1) = 1 fold into the rational part
            a += b * r if r == 1 else 0
            b, r = Fraction(0), 0
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "d", r)

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def as_fraction(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"{self} is irrational")
        return self.a

    def _sign(self) -> int:
        """Exact sign of a + b*sqrt(d)."""
        a, b = self.a, self.b
        if b == 0:
            return (a > 0) - (a < 0)
        if a == 0:
            return 1 if b > 0 else -1
        if a > 0 and b > 0:
            return 1
        if a < 0 and b < 0:
            return -1
        # opposite signs: compare a*a against b*b*d, sign decided by larger
        lhs, rhs = a * a, b * b * self.d
        if lhs == rhs:
            return 0
        big_is_a = lhs > rhs
        return 1 if (a > 0) == big_is_a else -1

    def __add__(self, other):
        if isinstance(other, QuadraticNumber):
            if self.d == other.d or self.b == 0 or other.b == 0:
                d = self.d or other.d
                return QuadraticNumber(self.a + other.a, self.b + other.b, d)
            return NotImplemented
        if isinstance(other, (int, Fraction)):
            return QuadraticNumber(self.a + other, self.b, self.d)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return QuadraticNumber(-self.a, -self.b, self.d)

    def __sub__(self, other):
        if isinstance(other, (QuadraticNumber, int, Fraction)):
            return self + (-other if isinstance(other, QuadraticNumber) else -Fraction(other))
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, QuadraticNumber):
            if self.d == other.d or self.b == 0 or other.b == 0:
                d = self.d or other.d
                return QuadraticNumber(
                    self.a * other.a + self.b * other.b * d,
                    self.a * other.b + self.b * other.a,
                    d,
                )
            return NotImplemented
        if isinstance(other, (int, Fraction)):
            return QuadraticNumber(self.a * other, self.b * other, self.d)
        return NotImplemented

    __rmul__ = __mul__

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * math.sqrt(self.d)

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        sign = "-" if self.b < 0 else "+"
        babs = abs(self.b)
        bpart = f"sqrt({self.d})" if babs == 1 else f"{babs}*sqrt({self.d})"
        if self.a == 0:
            return f"{bpart}" if self.b > 0 else f"-{bpart}"
        return f"{self.a}{sign}{bpart}"

    def _cmp(self, other) -> int:
        if isinstance(other, (int, Fraction)):
            other = QuadraticNumber(other)
        diff = self - other
        if diff is NotImplemented:
            # different radicands; fall back to floats (never hit by the
            # families here, whose spectra involve a single surd each)
            x, y = float(self), float(other)
            return (x > y) - (x < y)
        return diff._sign()

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __eq__(self, other):
        if isinstance(other, QuadraticNumber):
            return (self.a, self.b, self.d) == (other.a, other.b, other.d)
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))


Value = Union[int, Fraction, QuadraticNumber, float]


def value_to_float(v: Value) -> float:
    return float(v)


def exact_string(v: Value) -> str | None:
    """Canonical text for exact values, None for floats."""
    if isinstance(v, float):
        return None
    if isinstance(v, QuadraticNumber):
        return str(v)
    return str(Fraction(v)) if isinstance(v, Fraction) else str(v)


def _values_equal(x: Value, y: Value) -> bool:
    xf, yf = isinstance(x, float), isinstance(y, float)
    if xf or yf:
        return float(x) == float(y)
    return x == y


def _cmp_values(x: Value, y: Value) -> int:
    if isinstance(x, float) or isinstance(y, float):
        a, b = float(x), float(y)
        return (a > b) - (a < b)
    if _values_equal(x, y):
        return 0
    return 1 if x > y else -1


class Spectrum:
    """Eigenvalue multiset with multiplicities, sorted in decreasing order."""

    __slots__ = ("entries",)

    def __init__(self, pairs: Iterable[tuple[Value, int]]):
        items: list[list] = []
        for value, mult in pairs:
            if mult < 0:
                raise ValueError("negative multiplicity")
            if mult == 0:
                continue
            if isinstance(value, QuadraticNumber) and value.is_rational:
                value = value.as_fraction()
            if isinstance(value, Fraction) and value.denominator == 1:
                value = int(value)
            for item in items:
                if _values_equal(item[0], value):
                    item[1] += mult
                    break
            else:
                items.append([value, mult])
        items.sort(key=cmp_to_key(lambda p, q: _cmp_values(p[0], q[0])), reverse=True)
        for (x, _), (y, _) in zip(items, items[1:]):
            if _cmp_values(x, y) <= 0:
                raise ValueError("spectrum values must strictly decrease")
        self.entries: tuple[tuple[Value, int], ...] = tuple((v, m) for v, m in items)
        if not self.entries:
            raise ValueError("empty spectrum")

    @classmethod
    def from_values(cls, values: Iterable[Value]) -> "Spectrum":
        pairs: list[tuple[Value, int]] = [(v, 1) for v in values]
        return cls(pairs)

    @property
    def dimension(self) -> int:
        return sum(m for _, m in self.entries)

    @property
    def largest(self) -> Value:
        return self.entries[0][0]

    @property
    def smallest(self) -> Value:
        return self.entries[-1][0]

    def values(self) -> list[float]:
        """All eigenvalues as floats, repeated by multiplicity, descending."""
        out: list[float] = []
        for v, m in self.entries:
            out.extend([float(v)] * m)
        return out

    def multiplicity(self, value: Value, tol: float = 0.0) -> int:
        for v, m in self.entries:
            if _values_equal(v, value) or abs(float(v) - float(value)) <= tol:
                return m
        return 0

    def trace(self) -> float:
        return sum(float(v) * m for v, m in self.entries)

    def inertia_counts(self) -> tuple[int, int, int]:
        """(positive, zero, negative) eigenvalue counts, exact where values are."""
        pos = zero = neg = 0
        for v, m in self.entries:
            s = _cmp_values(v, 0)
            if s > 0:
                pos += m
            elif s < 0:
                neg += m
            else:
                zero += m
        return pos, zero, neg

    def to_json_dict(self) -> dict:
        eigs = []
        for v, m in self.entries:
            eigs.append({
                "value": float(f"{float(v):.12g}"),
                "exact": exact_string(v),
                "mult": m,
            })
        return {"n": self.dimension, "eigs": eigs}

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)

    def __eq__(self, other):
        if not isinstance(other, Spectrum):
            return NotImplemented
        if len(self.entries) != len(other.entries):
            return False
        return all(
            m == m2 and _values_equal(v, v2)
            for (v, m), (v2, m2) in zip(self.entries, other.entries)
        )

    def __repr__(self):
        body = ", ".join(
            f"{float(v):.6g}^{m}" if m > 1 else f"{float(v):.6g}"
            for v, m in self.entries
        )
        return f"Spectrum({body})"


def cluster_to_spectrum(values: list[float], cluster_tol: float | None = None) -> Spectrum:
    """Group a descending float eigenvalue list into a Spectrum.

    Adjacent values closer than cluster_tol land in one cluster represented by
    the cluster mean.  Default tolerance scales with the spectral radius.
    """
    if not values:
        raise ValueError("empty eigenvalue list")
    if any(values[i] < values[i + 1] for i in range(len(values) - 1)):
        raise ValueError("eigenvalue list must be sorted in decreasing order")
    if cluster_tol is None:
        radius = max(abs(values[0]), abs(values[-1]))
        cluster_tol = 1e-6 * max(1.0, radius)
    pairs: list[tuple[float, int]] = []
    cluster = [values[0]]
    for v in values[1:]:
        if cluster[-1] - v < cluster_tol:
            cluster.append(v)
        else:
            pairs.append((sum(cluster) / len(cluster), len(cluster)))
            cluster = [v]
    pairs.append((sum(cluster) / len(cluster), len(cluster)))
    return Spectrum(pairs)


def spectra_match(a: Spectrum, b: Spectrum, tol: float = 1e-8) -> bool:
    """True when both spectra agree in dimension, multiplicities, and values.

    Values are compared as floats entry by entry after the canonical
    descending sort; exact entries participate via their float images.
    """
    if a.dimension != b.dimension or len(a.entries) != len(b.entries):
        return False
    for (va, ma), (vb, mb) in zip(a.entries, b.entries):
        if ma != mb or abs(float(va) - float(vb)) >= tol:
            return False
    return True


def max_deviation(a: Spectrum, b: Spectrum) -> float:
    """Largest absolute value difference between aligned entries (inf if shapes differ)."""
    if a.dimension != b.dimension or len(a.entries) != len(b.entries):
        return math.inf
    if any(ma != mb for (_, ma), (_, mb) in zip(a.entries, b.entries)):
        return math.inf
    return max(abs(float(va) - float(vb)) for (va, _), (vb, _) in zip(a.entries, b.entries))
