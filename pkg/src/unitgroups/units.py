"""Unit groups, the Jacobson radical, and closed-form unit-group data."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import kernels
from .groups import (AbelianInvariants, GroupTable, abelian_invariants, invariants_from_census,
                     is_abelian, is_normal, recognize_dihedral)
from .numtheory import ceil_div, factorize, is_prime, valuation
from .rings import (TABLE_LIMIT, BudgetError, FiniteRing, IdealSpan, QuotientRing, ideal_product,
                    make_quotient)


@dataclass(frozen=True)
class Structure:
    kind: str  # "dihedral", "abelian" or "unclassified"
    n: Optional[int] = None
    invariants: Optional[AbelianInvariants] = None
    note: str = ""

    def __str__(self) -> str:
        if self.kind == "dihedral":
            return f"D_{2 * self.n}"
        if self.kind == "abelian":
            return str(self.invariants)
        return self.note or "unclassified"

    def as_dict(self) -> dict:
        out: dict = {"kind": self.kind}
        if self.n is not None:
            out["n"] = self.n
        if self.invariants is not None:
            out["invariants"] = list(self.invariants.factors)
        if self.note:
            out["note"] = self.note
        return out


def classify(G: GroupTable) -> Structure:
    """Dihedral first (D_2 and D_4 are abelian), then abelian, else unclassified."""
    inv = abelian_invariants(G) if is_abelian(G) else None
    n = recognize_dihedral(G)
    if n is not None:
        return Structure("dihedral", n=n, invariants=inv)
    if inv is not None:
        return Structure("abelian", invariants=inv)
    return Structure("unclassified")


def classify_abelian_census(census: Counter) -> Structure:
    inv = invariants_from_census(census)
    if inv.factors == (2,):
        return Structure("dihedral", n=1, invariants=inv)
    if inv.factors == (2, 2):
        return Structure("dihedral", n=2, invariants=inv)
    return Structure("abelian", invariants=inv)


@dataclass(frozen=True, eq=False)
class UnitGroupReport:
    ring: Optional[FiniteRing]
    unit_indices: tuple[int, ...]
    group: Optional[GroupTable]
    structure: Structure
    elements: Optional[tuple] = None  # for unit groups of rings that are not materialized

    @property
    def order(self) -> int:
        return len(self.unit_indices)

    def labels(self) -> list[str]:
        if self.group is not None and self.group.labels:
            return list(self.group.labels)
        if self.ring is not None:
            return [self.ring.label(u) for u in self.unit_indices]
        return [str(e) for e in (self.elements or ())]


def unit_set(R: FiniteRing) -> list[int]:
    return [int(u) for u in np.flatnonzero(R.unit_mask())]


def unit_group_table(R: FiniteRing, units: Optional[list[int]] = None) -> GroupTable:
    units = unit_set(R) if units is None else units
    U = np.asarray(units, dtype=np.int64)
    pos = np.full(R.order, -1, dtype=np.int64)
    pos[U] = np.arange(U.size)
    sub = pos[R.mul_table[np.ix_(U, U)]]
    if (sub < 0).any():
        raise RuntimeError("unit set is not closed under multiplication")
    return GroupTable(sub, int(pos[R.one]), tuple(R.label(u) for u in U))


def _ring_pow(R: FiniteRing, x: np.ndarray, e: int) -> np.ndarray:
    result = np.full(x.shape, R.one, dtype=np.int64)
    base = x
    while e:
        if e & 1:
            result = R.mul(result, base)
        e >>= 1
        if e:
            base = R.mul(base, base)
    return result


def unit_order_census(R: FiniteRing, units: Optional[list[int]] = None) -> Counter:
    """Orders of all units without a multiplication table.

    For each prime q of |U| = q^e m, the q-part of the order of u is the least
    q^v with (u^m)^(q^v) = 1, found by repeated q-th powers.
    """
    U = np.asarray(unit_set(R) if units is None else units, dtype=np.int64)
    orders = np.ones(U.size, dtype=np.int64)
    for q, e in factorize(U.size).items():
        h = _ring_pow(R, U, U.size // q**e)
        for _ in range(e):
            todo = h != R.one
            if not todo.any():
                break
            orders[todo] *= q
            h[todo] = _ring_pow(R, h[todo], q)
        if (h != R.one).any():
            raise RuntimeError("unit order does not divide the group order")
    return Counter(orders.tolist())


def unit_group(R: FiniteRing) -> UnitGroupReport:
    units = unit_set(R)
    if R.order <= TABLE_LIMIT:
        G = unit_group_table(R, units)
        return UnitGroupReport(R, tuple(units), G, classify(G))
    if not R.is_commutative:
        raise BudgetError(f"unit group of a non-commutative ring of order {R.order} "
                          f"is beyond the table limit {TABLE_LIMIT}")
    return UnitGroupReport(R, tuple(units), None, classify_abelian_census(unit_order_census(R, units)))


def unit_invariants(R: FiniteRing) -> AbelianInvariants:
    """Abelian invariants of the unit group of a commutative ring."""
    if not R.is_commutative:
        raise ValueError("unit_invariants needs a commutative ring")
    return invariants_from_census(unit_order_census(R))


# -- Jacobson radical ------------------------------------------------------


@dataclass(frozen=True, eq=False)
class RadicalReport:
    radical: IdealSpan
    one_plus_j_order: int
    quotient: QuotientRing
    quotient_units_order: int

    @property
    def j_order(self) -> int:
        return len(self.radical)


def radical_elements(R: FiniteRing) -> list[int]:
    mask = kernels.radical_mask(R.mul_table, R.unit_mask(), R.one_minus)
    return [int(x) for x in np.flatnonzero(mask)]


def radical_by_two_sided_products(R: FiniteRing) -> list[int]:
    """{x : 1 + r x s is a unit for all r, s}; cubic cost, for small rings."""
    t = R.mul_table
    units = R.unit_mask()
    one_plus = R.add(R.one, np.arange(R.order, dtype=np.int64))
    out = []
    for x in range(R.order):
        rx = t[:, x]
        if units[one_plus[t[rx, :]]].all():
            out.append(x)
    return out


def jacobson_radical(R: FiniteRing) -> RadicalReport:
    J = IdealSpan(R, tuple(radical_elements(R)))
    Q = make_quotient(R, J)
    one_plus_j = np.unique(R.add(R.one, np.asarray(J.elements, dtype=np.int64)))
    return RadicalReport(J, int(one_plus_j.size), Q, int(Q.unit_mask().sum()))


def has_trivial_radical(R: FiniteRing) -> bool:
    return len(radical_elements(R)) == 1


def is_nilpotent_ideal(I: IdealSpan) -> bool:
    power = I
    while len(power) > 1:
        nxt = ideal_product(power, I)
        if len(nxt) == len(power):
            return False
        power = nxt
    return True


def radical_counting_check(R: FiniteRing, report: Optional[RadicalReport] = None) -> bool:
    """|R^x| = |(R/J)^x| |J|, units map onto quotient units, and 1 + J is the kernel."""
    rep = report or jacobson_radical(R)
    Q = rep.quotient
    units = np.asarray(unit_set(R), dtype=np.int64)
    q_units = set(int(u) for u in np.flatnonzero(Q.unit_mask()))
    images = Q.project(units)
    if set(int(i) for i in images) != q_units:
        return False
    kernel = set(int(u) for u in units[images == Q.one])
    one_plus_j = set(int(x) for x in R.add(R.one, np.asarray(rep.radical.elements, dtype=np.int64)))
    if kernel != one_plus_j:
        return False
    return units.size == len(q_units) * len(rep.radical)


def one_plus_j_is_normal(R: FiniteRing, report: Optional[RadicalReport] = None) -> bool:
    rep = report or jacobson_radical(R)
    units = unit_set(R)
    G = unit_group_table(R, units)
    pos = {u: i for i, u in enumerate(units)}
    S = [pos[int(x)] for x in R.add(R.one, np.asarray(rep.radical.elements, dtype=np.int64))]
    return is_normal(G, S)


# -- closed forms ------------------------------------------------------------


def un_formula(p: int, n: int) -> AbelianInvariants:
    """Abelian invariants of the unit group of F_p[x]/(x^n)."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if n < 1:
        raise ValueError("n must be positive")
    factors = [q**e for q, e in factorize(p - 1).items()] if p > 2 else []
    k = 1
    while p ** (k - 1) < n:
        mult = ceil_div(n, p ** (k - 1)) - 2 * ceil_div(n, p**k) + ceil_div(n, p ** (k + 1))
        factors.extend([p**k] * mult)
        k += 1
    inv = AbelianInvariants(tuple(factors))
    assert inv.order == p ** (n - 1) * (p - 1)
    return inv


def threshold_decomposition(p: int, r: int) -> AbelianInvariants:
    """Closed form for the unit group of F_p[x]/(x^(p^(r-1)+1)), r >= 2.

    C_{p-1} x C_{p^r} x C_{p^(r-1)}^(p-2) x prod_{1<=j<=r-2} C_{p^j}^(p^(r-2-j) (p-1)^2).
    The p-part has exactly (p-1) p^(r-2) cyclic factors.
    """
    if r < 2:
        raise ValueError("r must be at least 2")
    factors = [q**e for q, e in factorize(p - 1).items()] if p > 2 else []
    factors.append(p**r)
    factors.extend([p ** (r - 1)] * (p - 2))
    for j in range(1, r - 1):
        factors.extend([p**j] * (p ** (r - 2 - j) * (p - 1) ** 2))
    return AbelianInvariants(tuple(factors))


def rank_lower_bound(p: int, r: int) -> int:
    if r < 2:
        raise ValueError("r must be at least 2")
    if p > 2:
        return 1 + (p - 1) * p ** (r - 2)
    return 2 ** (r - 2)


def gl_order(m: int, p: int, k: int) -> int:
    """|GL_m(F_{p^k})|."""
    if m < 1 or k < 1:
        raise ValueError("m and k must be positive")
    q = p**k
    out = 1
    for i in range(m):
        out *= q**m - q**i
    if valuation(out, p) != k * m * (m - 1) // 2:
        raise ArithmeticError("p-adic valuation of the GL order is off")
    return out
