"""The characteristic-zero ring Z_k (+) Z[C2] and the finite semidirect ring B x| A.

Elements of Z[C2] are pairs (a, b) meaning a + b s with s^2 = 1.  The ring
Z_k (+) Z[C2] multiplies by

    (t, u)(t', v) = (t D(v) + t' S(u), u v)

where S and D evaluate at s = 1 and s = -1 and reduce mod k.  It is infinite,
so only its unit group is materialized.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .groups import GroupTable, direct_product, make_cyclic, make_dihedral, subgroup_generated
from .rings import FiniteRing, _check_budget, make_group_algebra, make_zn
from .units import Structure, UnitGroupReport, classify, unit_set

ZC2_UNITS = ((1, 0), (-1, 0), (0, 1), (0, -1))


@dataclass(frozen=True)
class GammaElement:
    t: int
    u: tuple[int, int]

    def __str__(self) -> str:
        a, b = self.u
        if b == 0:
            us = str(a)
        elif a == 0:
            us = {1: "s", -1: "-s"}.get(b, f"{b}s")
        else:
            us = f"{a}{'+' if b > 0 else '-'}{abs(b) if abs(b) != 1 else ''}s"
        return f"({self.t}, {us})"


def random_gamma(rng: np.random.Generator, k: int, bound: int = 50) -> GammaElement:
    a, b = (int(v) for v in rng.integers(-bound, bound + 1, size=2))
    return GammaElement(int(rng.integers(k)), (a, b))


def gamma_element(k: int, t: int, a: int, b: int) -> GammaElement:
    if k < 1:
        raise ValueError("k must be positive")
    return GammaElement(t % k, (int(a), int(b)))


def zc2_mul(u: tuple[int, int], v: tuple[int, int]) -> tuple[int, int]:
    a, b = u
    c, d = v
    return a * c + b * d, a * d + b * c


def zc2_is_unit(a: int, b: int) -> bool:
    # evaluations at s = 1 and s = -1 must both be +-1
    return abs(a + b) == 1 and abs(a - b) == 1


def gamma_maps(k: int, a: int, b: int) -> tuple[int, int]:
    """(S(a + bs), D(a + bs)) in Z_k."""
    if k < 1:
        raise ValueError("k must be positive")
    return (a + b) % k, (a - b) % k


def gamma_mul(k: int, x: GammaElement, y: GammaElement) -> GammaElement:
    su, _ = gamma_maps(k, *x.u)
    _, dv = gamma_maps(k, *y.u)
    return GammaElement((x.t * dv + y.t * su) % k, zc2_mul(x.u, y.u))


def gamma_add(k: int, x: GammaElement, y: GammaElement) -> GammaElement:
    return GammaElement((x.t + y.t) % k, (x.u[0] + y.u[0], x.u[1] + y.u[1]))


def gamma_one(k: int) -> GammaElement:
    return GammaElement(0, (1, 0))


def gamma_unit_group(k: int, *, budget: Optional[int] = None) -> UnitGroupReport:
    """Unit group of Z_k (+) Z[C2]: the 4k elements (t, u) with u in {+-1, +-s}."""
    if k < 1:
        raise ValueError("k must be positive")
    _check_budget(4 * k, budget, f"Gamma({k}) units")
    elems = [GammaElement(t, u) for u in ZC2_UNITS for t in range(k)]
    index = {e: i for i, e in enumerate(elems)}
    n = len(elems)
    mul = np.empty((n, n), dtype=np.int64)
    for i, x in enumerate(elems):
        for j, y in enumerate(elems):
            p = gamma_mul(k, x, y)
            if p not in index:
                raise RuntimeError(f"candidate units are not closed: {x} * {y} = {p}")
            mul[i, j] = index[p]
    one = index[gamma_one(k)]
    if not (mul == one).any(axis=1).all():
        raise RuntimeError("some candidate unit has no inverse among the candidates")
    G = GroupTable(mul, one, tuple(str(e) for e in elems))
    check_gamma_relations(k, G, index)
    structure = classify(G)
    if structure.kind == "unclassified":
        structure = Structure("unclassified", note=f"C2 x D_{2 * k}")
    return UnitGroupReport(None, tuple(range(n)), G, structure, elements=tuple(elems))


def check_gamma_relations(k: int, G: GroupTable, index: dict) -> None:
    r = index[GammaElement(1 % k, (1, 0))]
    s = index[GammaElement(0, (0, 1))]
    minus = index[GammaElement(0, (-1, 0))]
    e = G.identity
    if G.power(r, k) != e or G.op(s, s) != e:
        raise RuntimeError("r^k = 1 or s^2 = 1 fails")
    if G.op(G.op(s, r), s) != G.inverses[r]:
        raise RuntimeError("s r s = r^-1 fails")
    for g in range(G.order):
        if G.op(minus, g) != G.op(g, minus):
            raise RuntimeError("-1 is not central")
    if len(subgroup_generated(G, [r, s, minus])) != G.order:
        raise RuntimeError("r, s, -1 do not generate the unit group")


def c2_times_dihedral(k: int) -> GroupTable:
    return direct_product(make_cyclic(2), make_dihedral(2 * k))


# -- the semidirect ring -----------------------------------------------------


@dataclass(frozen=True, eq=False)
class SemidirectSpec:
    """Ring homomorphisms f, g : A -> Z(B), given as index arrays."""

    A: FiniteRing
    B: FiniteRing
    f: Sequence[int]
    g: Sequence[int]

    def validate(self) -> None:
        A, B = self.A, self.B
        a = np.arange(A.order)
        ai, aj = (x.ravel() for x in np.meshgrid(a, a, indexing="ij"))
        tB = B.mul_table
        for name, h in (("f", self.f), ("g", self.g)):
            h = np.asarray(h, dtype=np.int64)
            if h.shape != (A.order,):
                raise ValueError(f"{name} must map every element of A")
            if h[A.one] != B.one:
                raise ValueError(f"{name}(1) != 1")
            if not (h[A.add(ai, aj)] == B.add(h[ai], h[aj])).all():
                raise ValueError(f"{name} is not additive")
            if not (h[A.mul(ai, aj)] == B.mul(h[ai], h[aj])).all():
                raise ValueError(f"{name} is not multiplicative")
            if not (tB[h, :] == tB[:, h].T).all():
                raise ValueError(f"{name} does not land in the center of B")


def semidirect_ring(spec: SemidirectSpec, *, budget: Optional[int] = None) -> FiniteRing:
    """B (+) A with (b, a)(b', a') = (b f(a') + b' g(a), a a'); (b, a) has index b + |B| a."""
    spec.validate()
    A, B = spec.A, spec.B
    if A.radix is None or B.radix is None:
        raise ValueError("semidirect_ring needs radix rings")
    m = B.order
    _check_budget(m * A.order, budget, "semidirect ring")
    f = np.asarray(spec.f, dtype=np.int64)
    g = np.asarray(spec.g, dtype=np.int64)

    def mul(x, y):
        x = np.asarray(x, dtype=np.int64)
        y = np.asarray(y, dtype=np.int64)
        b, a = x % m, x // m
        b2, a2 = y % m, y // m
        return B.add(B.mul(b, f[a2]), B.mul(b2, g[a])) + m * A.mul(a, a2)

    return FiniteRing(m * A.order, radix=B.radix + A.radix, mul=mul, one=B.zero + m * A.one,
                      label=lambda i: f"({B.label(i % m)}, {A.label(i // m)})",
                      tag=f"{B.tag} x| {A.tag}")


def semidirect_unit_check(spec: SemidirectSpec) -> bool:
    """Check T^x = B' . A^x with B' = {(b, 1)} normal, trivial intersection, and the
    conjugation action (0, a)(b, 1)(0, a)^-1 = (g(a) f(a^-1) b, 1)."""
    T = semidirect_ring(spec)
    A, B = spec.A, spec.B
    m = B.order
    f = np.asarray(spec.f, dtype=np.int64)
    g = np.asarray(spec.g, dtype=np.int64)
    t = T.mul_table
    units = unit_set(T)
    unit_mask = T.unit_mask()
    a_units = unit_set(A)
    bprime = [b + m * A.one for b in range(m)]
    aprime = [B.zero + m * a for a in a_units]
    if not unit_mask[bprime].all() or not unit_mask[aprime].all():
        return False
    if len(units) != m * len(a_units):
        return False
    products = {int(t[b, a]) for b in bprime for a in aprime}
    if products != set(units):
        return False
    if set(bprime) & set(aprime) != {T.one}:
        return False
    # inverse law (b, a)^-1 = (-b g(a^-1) f(a^-1), a^-1)
    a_inv = {a: int(np.flatnonzero(A.mul_table[a] == A.one)[0]) for a in a_units}
    for x in units:
        b, a = x % m, x // m
        ai = a_inv[a]
        claimed = int(B.neg(B.mul(B.mul(b, g[ai]), f[ai]))) + m * ai
        if t[x, claimed] != T.one or t[claimed, x] != T.one:
            return False
    bset = set(bprime)
    for a in a_units:
        x = B.zero + m * a
        xi = B.zero + m * a_inv[a]
        for b in range(m):
            conj = int(t[t[x, b + m * A.one], xi])
            if conj not in bset:
                return False
            expect = int(B.mul(B.mul(g[a], f[a_inv[a]]), b))
            if conj % m != expect:
                return False
    return True


def zc2_mod(m: int) -> FiniteRing:
    """Z_m[C2] as a radix ring: a + b s has index a + m b."""
    return make_group_algebra(make_zn(m), make_cyclic(2), generators={"s": 1}, group_tag="C(2)")


def gamma_truncation(k: int, m: Optional[int] = None) -> tuple[FiniteRing, list[int]]:
    """Z_k x| Z_m[C2] with f = D, g = S, and the images of r, s, -1.

    ``m`` must be a multiple of k so that S and D are well defined on Z_m.
    """
    if m is None:
        m = k if k >= 3 else 3 * k
    if m % k:
        raise ValueError("m must be a multiple of k")
    A = zc2_mod(m)
    B = make_zn(k)
    pairs = [(i % m, i // m) for i in range(A.order)]
    S_map = [(a + b) % k for a, b in pairs]
    D_map = [(a - b) % k for a, b in pairs]
    spec = SemidirectSpec(A, B, f=D_map, g=S_map)
    T = semidirect_ring(spec)
    kk = B.order
    r = 1 % kk + kk * A.one
    s = B.zero + kk * int(A.generators["s"])
    minus_one = B.zero + kk * int(A.neg(A.one))
    return T, [r, s, minus_one]
