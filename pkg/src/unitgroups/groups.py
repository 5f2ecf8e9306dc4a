"""Finite groups as explicit multiplication tables.

Elements are the integers ``0..order-1``.  Recognition is deliberately narrow:
abelian groups are identified by their element-order census, dihedral groups
by searching for a rotation/reflection pair.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional

import numpy as np

from . import kernels
from .numtheory import factorize

EXHAUSTIVE_ASSOC_LIMIT = 24


@dataclass(frozen=True, eq=False)
class GroupTable:
    mul: np.ndarray
    identity: int = 0
    labels: Optional[tuple[str, ...]] = None

    def __post_init__(self):
        mul = np.ascontiguousarray(self.mul, dtype=np.int32)
        if mul.ndim != 2 or mul.shape[0] != mul.shape[1] or mul.shape[0] == 0:
            raise ValueError("multiplication table must be a non-empty square array")
        mul.setflags(write=False)
        object.__setattr__(self, "mul", mul)

    @property
    def order(self) -> int:
        return self.mul.shape[0]

    def label(self, g: int) -> str:
        return self.labels[g] if self.labels else str(g)

    def op(self, g: int, h: int) -> int:
        return int(self.mul[g, h])

    @cached_property
    def inverses(self) -> np.ndarray:
        rows, cols = np.nonzero(self.mul == self.identity)
        inv = np.empty(self.order, dtype=np.int64)
        inv[rows] = cols
        return inv

    @cached_property
    def orders(self) -> np.ndarray:
        return kernels.element_orders(self.mul, self.identity)

    def power(self, g: int, e: int) -> int:
        result, base = self.identity, g
        if e < 0:
            base, e = int(self.inverses[g]), -e
        while e:
            if e & 1:
                result = self.op(result, base)
            base = self.op(base, base)
            e >>= 1
        return result

    def index_of(self, label: str) -> int:
        if not self.labels:
            raise KeyError(label)
        return self.labels.index(label)


@dataclass(frozen=True)
class AbelianInvariants:
    """Canonical primary decomposition: a sorted multiset of prime powers."""

    factors: tuple[int, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(sorted(int(f) for f in self.factors)))
        for f in self.factors:
            if f <= 1 or len(factorize(f)) != 1:
                raise ValueError(f"{f} is not a prime power > 1")

    @property
    def d(self) -> int:
        return len(self.factors)

    @property
    def order(self) -> int:
        out = 1
        for f in self.factors:
            out *= f
        return out

    @classmethod
    def of_cyclic(cls, *orders: int) -> "AbelianInvariants":
        """Invariants of a product of cyclic groups of arbitrary orders."""
        parts = []
        for n in orders:
            parts.extend(p**e for p, e in factorize(n).items())
        return cls(tuple(parts))

    def __str__(self) -> str:
        return " x ".join(f"C{f}" for f in self.factors) if self.factors else "1"


def make_cyclic(n: int) -> GroupTable:
    if n < 1:
        raise ValueError("cyclic group order must be positive")
    idx = np.arange(n)
    labels = tuple(["1", "g"] + [f"g^{i}" for i in range(2, n)])[:n]
    return GroupTable((idx[:, None] + idx[None, :]) % n, 0, labels)


def _dihedral_label(i: int, refl: bool) -> str:
    rot = "1" if i == 0 else ("r" if i == 1 else f"r^{i}")
    if not refl:
        return rot
    return "s" if i == 0 else f"{rot} s"


def make_dihedral(two_n: int) -> GroupTable:
    """D_{2n} with r^i at index i and r^i s at index n + i."""
    if two_n < 2 or two_n % 2:
        raise ValueError(f"dihedral group order must be even and >= 2, got {two_n}")
    n = two_n // 2
    rot = np.arange(two_n) % n
    refl = np.arange(two_n) >= n
    # (r^a s^e)(r^b s^f) = r^(a + (-1)^e b) s^(e + f)
    sign = np.where(refl, -1, 1)
    a = rot[:, None] + sign[:, None] * rot[None, :]
    e = refl[:, None] ^ refl[None, :]
    mul = a % n + n * e
    labels = tuple(_dihedral_label(i, False) for i in range(n)) + tuple(
        _dihedral_label(i, True) for i in range(n)
    )
    return GroupTable(mul, 0, labels)


def direct_product(G: GroupTable, H: GroupTable) -> GroupTable:
    """Componentwise product; the pair (g, h) has index g + |G| h."""
    m = G.order
    gi = np.arange(G.order * H.order) % m
    hi = np.arange(G.order * H.order) // m
    mul = G.mul[gi[:, None], gi[None, :]] + m * H.mul[hi[:, None], hi[None, :]]
    labels = tuple(f"({G.label(g)}, {H.label(h)})" for g, h in zip(gi, hi))
    return GroupTable(mul, G.identity + m * H.identity, labels)


def element_order(G: GroupTable, g: int) -> int:
    return int(G.orders[g])


def order_census(G: GroupTable) -> Counter:
    return Counter(int(o) for o in G.orders)


def is_abelian(G: GroupTable) -> bool:
    return bool((G.mul == G.mul.T).all())


def center(G: GroupTable) -> list[int]:
    return [int(g) for g in np.flatnonzero((G.mul == G.mul.T).all(axis=1))]


def invariants_from_census(census: Counter) -> AbelianInvariants:
    """Primary decomposition of a finite abelian group from its order census.

    With L_k = log_p #{g : g^(p^k) = 1}, the number of C_{p^k} factors is
    2 L_k - L_{k-1} - L_{k+1}.
    """
    total = sum(census.values())
    factors: list[int] = []
    for p, v in factorize(total).items():
        logs = []
        for k in range(v + 2):
            count = sum(c for o, c in census.items() if (p**k) % o == 0)
            L = 0
            while count % p == 0 and count > 1:
                count //= p
                L += 1
            if count != 1:
                raise ValueError("census is not that of an abelian group")
            logs.append(L)
        for k in range(1, v + 1):
            beta = 2 * logs[k] - logs[k - 1] - logs[k + 1]
            if beta < 0:
                raise ValueError("census is not that of an abelian group")
            factors.extend([p**k] * beta)
    inv = AbelianInvariants(tuple(factors))
    if inv.order != total:
        raise ValueError("census is not that of an abelian group")
    return inv


def abelian_invariants(G: GroupTable) -> AbelianInvariants:
    if not is_abelian(G):
        raise ValueError("abelian_invariants requires an abelian group")
    return invariants_from_census(order_census(G))


def subgroup_generated(G: GroupTable, gens: Iterable[int]) -> list[int]:
    return [int(g) for g in kernels.closure(G.mul, list(gens), G.identity)]


def subgroup_table(G: GroupTable, H: Iterable[int]) -> GroupTable:
    """The table of a subgroup, re-indexed in ascending order of ``H``."""
    H = sorted(set(int(h) for h in H))
    pos = np.full(G.order, -1, dtype=np.int64)
    pos[H] = np.arange(len(H))
    sub = pos[G.mul[np.ix_(H, H)]]
    if (sub < 0).any():
        raise ValueError("not closed under the group operation")
    labels = tuple(G.label(h) for h in H) if G.labels else None
    return GroupTable(sub, int(pos[G.identity]), labels)


def is_subgroup(G: GroupTable, S: Iterable[int]) -> bool:
    S = sorted(set(int(s) for s in S))
    if not S or G.identity not in S:
        return False
    idx = np.asarray(S)
    member = np.zeros(G.order, dtype=bool)
    member[idx] = True
    return bool(member[G.mul[np.ix_(idx, idx)]].all())


def is_normal(G: GroupTable, S: Iterable[int]) -> bool:
    S = sorted(set(int(s) for s in S))
    if not is_subgroup(G, S):
        raise ValueError("is_normal requires a subgroup")
    member = np.zeros(G.order, dtype=bool)
    member[S] = True
    g = np.arange(G.order)
    inv = G.inverses
    for s in S:
        conj = G.mul[G.mul[g, s], inv]
        if not member[conj].all():
            return False
    return True


def recognize_dihedral(G: GroupTable) -> Optional[int]:
    """Return n when G is isomorphic to D_{2n}, else None."""
    N = G.order
    if N == 2:
        return 1
    if N % 2 or N < 4:
        return None
    n = N // 2
    orders = G.orders
    inv = G.inverses
    involutions = np.flatnonzero(orders == 2)
    for r in np.flatnonzero(orders == n):
        rot = np.zeros(N, dtype=bool)
        rot[subgroup_generated(G, [int(r)])] = True
        r_inv = inv[r]
        for s in involutions:
            if rot[s]:
                continue
            if G.mul[G.mul[s, r], s] == r_inv:
                # <r> has index 2 and s lies outside it, so <r, s> = G
                return n
    return None


def check_group_axioms(G: GroupTable, rng: Optional[np.random.Generator] = None,
                       samples: int = 10_000) -> bool:
    n = G.order
    idx = np.arange(n)
    if not (G.mul[G.identity] == idx).all() or not (G.mul[:, G.identity] == idx).all():
        return False
    if not all(np.array_equal(np.sort(row), idx) for row in G.mul):
        return False
    if not all(np.array_equal(np.sort(col), idx) for col in G.mul.T):
        return False
    if n <= EXHAUSTIVE_ASSOC_LIMIT:
        a, b, c = np.meshgrid(idx, idx, idx, indexing="ij")
    else:
        rng = rng or np.random.default_rng(0)
        a, b, c = rng.integers(0, n, size=(3, samples))
    return bool((G.mul[G.mul[a, b], c] == G.mul[a, G.mul[b, c]]).all())

