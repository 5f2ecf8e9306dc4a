"""Split quaternions over the integers.

An element a + b i + c s + d is is stored as four Python ints, with
i^2 = -1, s^2 = 1 and s i = -i s.  Writing it as u + v s with u = a + b i and
v = c + d i in Z[i], the product is

    (u + v s)(u' + v' s) = (u u' + v conj(v')) + (u v' + v conj(u')) s.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

import numpy as np


@dataclass(frozen=True)
class SplitQuaternion:
    a: int = 0
    b: int = 0
    c: int = 0
    d: int = 0

    @classmethod
    def from_int(cls, n: int) -> "SplitQuaternion":
        return cls(int(n), 0, 0, 0)

    def __add__(self, other):
        if isinstance(other, int):
            other = SplitQuaternion.from_int(other)
        return SplitQuaternion(self.a + other.a, self.b + other.b, self.c + other.c, self.d + other.d)

    __radd__ = __add__

    def __neg__(self):
        return SplitQuaternion(-self.a, -self.b, -self.c, -self.d)

    def __sub__(self, other):
        if isinstance(other, int):
            other = SplitQuaternion.from_int(other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return SplitQuaternion(self.a * other, self.b * other, self.c * other, self.d * other)
        return sq_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, e: int):
        return sq_pow(self, e)

    @property
    def real(self) -> int:
        return self.a

    def __str__(self) -> str:
        return f"{self.a} + {self.b}i + {self.c}s + {self.d}is"


ONE = SplitQuaternion(1)
I = SplitQuaternion(0, 1)
S = SplitQuaternion(0, 0, 1)
IS = SplitQuaternion(0, 0, 0, 1)
# z = (1 + 4i) + (3 + 3i)s has norm -1 and satisfies z^2 = 2z + 1
Z = SplitQuaternion(1, 4, 3, 3)


def sq_mul(x: SplitQuaternion, y: SplitQuaternion) -> SplitQuaternion:
    # u = a + bi, v = c + di
    ua, ub, va, vb = x.a, x.b, x.c, x.d
    ua2, ub2, va2, vb2 = y.a, y.b, y.c, y.d
    # u u' + v conj(v')
    re = ua * ua2 - ub * ub2 + va * va2 + vb * vb2
    im = ua * ub2 + ub * ua2 + vb * va2 - va * vb2
    # u v' + v conj(u')
    sre = ua * va2 - ub * vb2 + va * ua2 + vb * ub2
    sim = ua * vb2 + ub * va2 + vb * ua2 - va * ub2
    return SplitQuaternion(re, im, sre, sim)


def sq_conj(x: SplitQuaternion) -> SplitQuaternion:
    return SplitQuaternion(x.a, -x.b, -x.c, -x.d)


def sq_norm(x: SplitQuaternion) -> int:
    return x.a * x.a + x.b * x.b - x.c * x.c - x.d * x.d


def sq_pow(x: SplitQuaternion, e: int) -> SplitQuaternion:
    if e < 0:
        raise ValueError("negative exponent")
    result, base = ONE, x
    while e:
        if e & 1:
            result = sq_mul(result, base)
        base = sq_mul(base, base)
        e >>= 1
    return result


def sq_inverse(x: SplitQuaternion) -> SplitQuaternion:
    """Inverse of a norm +-1 element: N(x) * conj(x)."""
    n = sq_norm(x)
    if n not in (1, -1):
        raise ZeroDivisionError(f"{x} has norm {n} and is not a unit")
    return sq_conj(x) * n


def pell_coefficients(j: int) -> tuple[int, int]:
    """(p, q) with z^j = p z + q, from z^2 = 2z + 1."""
    p, q = 0, 1
    for _ in range(j):
        p, q = 2 * p + q, p
    return p, q


@dataclass(frozen=True)
class ObstructionCertificate:
    k: int
    norm_value: int
    re_value: int
    power_norm: int

    @property
    def nonzero(self) -> bool:
        return self.norm_value != 0


def obstruction_certificate(k: int) -> ObstructionCertificate:
    """N(z^(8k) - 1), Re z^(8k) and N(z^(8k)), with two independent routes to z^(8k)."""
    if k < 1:
        raise ValueError("k must be positive")
    e = 8 * k
    direct = sq_pow(Z, e)
    p, q = pell_coefficients(e)
    if Z * p + q != direct:
        raise ArithmeticError("square-and-multiply disagrees with the linear recurrence")
    power_norm = sq_norm(direct)
    if power_norm != 1:
        raise ArithmeticError(f"N(z^{e}) = {power_norm}, expected 1")
    return ObstructionCertificate(k, sq_norm(direct - 1), direct.real, power_norm)


def random_quaternion(rng: np.random.Generator, bound: int = 10**6) -> SplitQuaternion:
    return SplitQuaternion(*(int(v) for v in rng.integers(-bound, bound + 1, size=4)))


def norm_one_samples(rng: np.random.Generator, count: int, max_len: int = 8) -> Iterator[SplitQuaternion]:
    """Norm-1 elements: products with an even number of norm -1 factors."""
    minus = [S, Z, -S, sq_conj(Z), IS]
    plus = [I, -I, -ONE]
    for _ in range(count):
        length = int(rng.integers(1, max_len + 1))
        factors = [minus[int(rng.integers(len(minus)))] for _ in range(2 * length)]
        factors += [plus[int(rng.integers(len(plus)))] for _ in range(int(rng.integers(0, 3)))]
        rng.shuffle(factors)
        out = ONE
        for f in factors:
            out = out * f
        yield out
