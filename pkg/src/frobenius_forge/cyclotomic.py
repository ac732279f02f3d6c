"""Exact arithmetic in the cyclotomic field ``Q(zeta_m)``.

Elements are coefficient vectors in the power basis ``1, z, ..., z^(phi(m)-1)``,
reduced modulo the m-th cyclotomic polynomial, so equal elements have equal
representations.
"""

import re
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Dict, Tuple

from .errors import InputError

__all__ = ["Cyclotomic", "cyclotomic_polynomial", "parse_cyclotomic"]


def _polydiv_exact(num, den):
    """Quotient of integer polynomials (low degree first) known to divide exactly."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1] // den[-1]
        out[i] = c
        for j, dj in enumerate(den):
            num[i + j] -= c * dj
    if any(num):
        raise ArithmeticError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> Tuple[int, ...]:
    """Integer coefficients of Phi_m, constant term first."""
    if m < 1:
        raise InputError("cyclotomic modulus must be positive")
    poly = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            poly = _polydiv_exact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


def _reduce(m: int, coeffs) -> Tuple[Fraction, ...]:
    phi = cyclotomic_polynomial(m)
    n = len(phi) - 1
    c = [Fraction(x) for x in coeffs]
    for i in range(len(c) - 1, n - 1, -1):
        lead = c[i]
        if lead:
            for j in range(n + 1):
                c[i - n + j] -= lead * phi[j]
    c = c[:n] + [Fraction(0)] * (n - len(c))
    return tuple(c)


class Cyclotomic:
    __slots__ = ("m", "coeffs")

    def __init__(self, m: int, coeffs=()):
        self.m = m
        self.coeffs = _reduce(m, coeffs)

    @classmethod
    def from_powers(cls, m: int, powers: Dict[int, object]) -> "Cyclotomic":
        """``sum c_k z^k`` for a mapping ``{k: c_k}``; exponents taken mod m."""
        raw = [Fraction(0)] * m
        for k, c in powers.items():
            raw[k % m] += Fraction(c)
        return cls(m, raw)

    @classmethod
    def rational(cls, m: int, value) -> "Cyclotomic":
        return cls(m, [Fraction(value)])

    @classmethod
    def zeta(cls, m: int, k: int = 1) -> "Cyclotomic":
        return cls.from_powers(m, {k: 1})

    def _coerce(self, other):
        if isinstance(other, Cyclotomic):
            if other.m != self.m:
                raise InputError(f"cannot mix Q(zeta_{self.m}) and Q(zeta_{other.m})")
            return other
        return Cyclotomic.rational(self.m, other)

    def __add__(self, other):
        other = self._coerce(other)
        return Cyclotomic(self.m, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.m, [-a for a in self.coeffs])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        prod = [Fraction(0)] * (2 * len(self.coeffs))
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        prod[i + j] += a * b
        return Cyclotomic(self.m, prod)

    __rmul__ = __mul__

    def __truediv__(self, k):
        k = Fraction(k)
        return Cyclotomic(self.m, [a / k for a in self.coeffs])

    def galois(self, t: int) -> "Cyclotomic":
        """Image under ``z -> z^t``; requires ``gcd(t, m) = 1``."""
        if gcd(t, self.m) != 1:
            raise InputError(f"z -> z^{t} is not an automorphism of Q(zeta_{self.m})")
        return Cyclotomic.from_powers(self.m, {k * t: c for k, c in enumerate(self.coeffs) if c})

    def conj(self) -> "Cyclotomic":
        return self.galois(-1)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def __eq__(self, other):
        if isinstance(other, Cyclotomic):
            return self.m == other.m and self.coeffs == other.coeffs
        try:
            return self.is_rational() and self.coeffs[0] == Fraction(other)
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash((self.m, self.coeffs))

    def __repr__(self):
        return f"Cyclotomic({self.m}, {str(self)!r})"

    def __str__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}*{mono}")
        if not terms:
            return "0"
        return " + ".join(terms).replace("+ -", "- ")


_TERM = re.compile(r"^(?:(?P<c>\d+(?:/\d+)?)\s*\*?\s*)?(?P<z>z(?:\s*\^\s*(?P<k>\d+))?)?$")


def parse_cyclotomic(text: str, m: int) -> Cyclotomic:
    """Parse sums like ``1``, ``-1``, ``z^2``, ``2*z + z^4 - 1/2``."""
    s = text.replace(" ", "")
    if not s:
        raise InputError("empty cyclotomic expression")
    powers: Dict[int, Fraction] = {}
    for sign, term in re.findall(r"([+-]?)([^+-]+)", s):
        mt = _TERM.match(term)
        if not mt or (mt.group("c") is None and mt.group("z") is None):
            raise InputError(f"cannot parse term {term!r} in {text!r}")
        c = Fraction(mt.group("c")) if mt.group("c") else Fraction(1)
        k = 0 if mt.group("z") is None else int(mt.group("k") or 1)
        powers[k % m] = powers.get(k % m, 0) + (-c if sign == "-" else c)
    if re.sub(r"([+-]?)([^+-]+)", "", s):
        raise InputError(f"cannot parse {text!r}")
    return Cyclotomic.from_powers(m, powers)
