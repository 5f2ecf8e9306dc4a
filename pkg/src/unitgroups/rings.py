"""Finite rings with canonically indexed elements.

Most constructors produce *radix rings*: the additive group is a product of
cyclic groups Z_{b_0} x Z_{b_1} x ... and element ``i`` has mixed-radix digits
``(i // w_k) % b_k`` with the first coordinate least significant.  Addition is
digitwise, zero is index 0, and the full multiplication table can be assembled
from the rows of the additive generators by distributivity.

Quotients and Peirce factors are not radix rings; their operations are routed
through the parent ring.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterable, Optional, Sequence

import numpy as np

from . import kernels
from .groups import GroupTable, is_abelian
from .numtheory import is_prime, lcm

DEFAULT_BUDGET = 1 << 20
TABLE_LIMIT = 4096
_SMALL = 1024
EXHAUSTIVE_AXIOM_LIMIT = 64


class BudgetError(ValueError):
    """A construction would enumerate more elements than allowed."""


def _check_budget(order: int, budget: Optional[int], what: str) -> None:
    limit = DEFAULT_BUDGET if budget is None else budget
    if order > limit:
        raise BudgetError(f"{what} has {order} elements, over the budget of {limit}")


def _weights(radix: Sequence[int]) -> np.ndarray:
    w = np.ones(len(radix), dtype=np.int64)
    for k in range(1, len(radix)):
        w[k] = w[k - 1] * radix[k - 1]
    return w


def decode(idx, base: int, width: int) -> np.ndarray:
    """Split indices into ``width`` base-``base`` digits, least significant first."""
    idx = np.asarray(idx, dtype=np.int64)
    return (idx[..., None] // (base ** np.arange(width, dtype=np.int64))) % base


def encode(digits: np.ndarray, base: int) -> np.ndarray:
    width = digits.shape[-1]
    return (np.asarray(digits, dtype=np.int64) * (base ** np.arange(width, dtype=np.int64))).sum(-1)


class FiniteRing:
    """A finite ring with identity over the element indices ``0..order-1``.

    ``mul`` (and ``add``/``neg`` for non-radix rings) are vectorized callables
    on int64 arrays.  Tables are built lazily.
    """

    def __init__(self, order: int, *, mul: Callable, one: int, radix: Optional[Sequence[int]] = None,
                 add: Optional[Callable] = None, neg: Optional[Callable] = None, zero: int = 0,
                 label: Optional[Callable[[int], str]] = None, tag: str = "",
                 commutative: Optional[bool] = None, generators: Optional[dict[str, int]] = None,
                 unit_hint: Optional[Callable[[], np.ndarray]] = None):
        self.order = int(order)
        self.radix = tuple(int(b) for b in radix) if radix is not None else None
        if self.radix is not None:
            # a digit of base 1 is always 0 and has no basis element of its own
            self.radix = tuple(b for b in self.radix if b != 1) or (1,)
            if int(np.prod(self.radix, dtype=np.int64)) != self.order:
                raise ValueError("radix does not match order")
            zero = 0
        elif add is None or neg is None:
            raise ValueError("non-radix rings need explicit add and neg")
        self._mul = mul
        self._add = add
        self._neg = neg
        self.zero = int(zero)
        self.one = int(one)
        self._label = label
        self.tag = tag
        self._commutative = commutative
        self.generators = dict(generators or {})
        self._unit_hint = unit_hint
        # set when element i is the residue i of Z_n with native arithmetic
        self.int_modulus: Optional[int] = None

    def __repr__(self) -> str:
        return f"FiniteRing({self.tag or '?'}, order={self.order})"

    def __len__(self) -> int:
        return self.order

    # -- arithmetic -------------------------------------------------------

    def add(self, a, b):
        if self.order <= _SMALL:
            return self.add_table[a, b].astype(np.int64)
        if self.radix is not None:
            return kernels.digit_add(a, b, self.radix)
        return self._add(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))

    def neg(self, a):
        a = np.asarray(a, dtype=np.int64)
        if self.radix is not None:
            out = np.zeros(a.shape, dtype=np.int64)
            for w, b in zip(_weights(self.radix), self.radix):
                out += ((-(a // w % b)) % b) * w
            return out
        return self._neg(a)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if self.order <= _SMALL:
            return self.mul_table[a, b].astype(np.int64)
        if "mul_table" in self.__dict__:
            return self.mul_table[a, b].astype(np.int64)
        return self._mul(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))

    def pow(self, x: int, e: int) -> int:
        if e < 0:
            raise ValueError("negative exponent")
        result, base = self.one, int(x)
        while e:
            if e & 1:
                result = int(self.mul(result, base))
            base = int(self.mul(base, base))
            e >>= 1
        return result

    def from_int(self, c: int) -> int:
        """Index of the element c * 1."""
        m = self.characteristic
        c %= m
        out, base = self.zero, self.one
        while c:
            if c & 1:
                out = int(self.add(out, base))
            base = int(self.add(base, base))
            c >>= 1
        return out

    def label(self, i: int) -> str:
        return self._label(int(i)) if self._label else str(int(i))

    def labels(self) -> list[str]:
        return [self.label(i) for i in range(self.order)]

    # -- tables -----------------------------------------------------------

    def _require_table(self, what: str) -> None:
        if self.order > TABLE_LIMIT:
            raise BudgetError(f"{what} table for {self.tag or 'ring'} of order {self.order} "
                              f"exceeds the table limit {TABLE_LIMIT}")

    @cached_property
    def mul_table(self) -> np.ndarray:
        self._require_table("multiplication")
        n = self.order
        everything = np.arange(n, dtype=np.int64)
        if n == 1:
            table = np.zeros((1, 1), dtype=np.int32)
        elif self.radix is not None:
            basis = _weights(self.radix)
            rows = np.stack([self._mul(np.full(n, w, dtype=np.int64), everything) for w in basis])
            table = kernels.distributive_table(self.radix, rows)
        else:
            table = _table_from_vectorized(self._mul, n)
        table.setflags(write=False)
        return table

    @cached_property
    def add_table(self) -> np.ndarray:
        self._require_table("addition")
        n = self.order
        idx = np.arange(n, dtype=np.int64)
        if self.radix is not None:
            table = np.empty((n, n), dtype=np.int32)
            step = max(1, (1 << 22) // n)
            for lo in range(0, n, step):
                table[lo:lo + step] = kernels.digit_add(idx[lo:lo + step, None], idx[None, :], self.radix)
        else:
            table = _table_from_vectorized(self._add, n)
        table.setflags(write=False)
        return table

    @cached_property
    def characteristic(self) -> int:
        if self.radix is not None:
            out = 1
            for w, b in zip(_weights(self.radix), self.radix):
                digit = (self.one // int(w)) % b
                out = lcm(out, b // np.gcd(b, digit))
            return int(out)
        m, x = 1, self.one
        while x != self.zero:
            x = int(self.add(x, self.one))
            m += 1
        return m

    @cached_property
    def is_commutative(self) -> bool:
        if self._commutative is not None:
            return self._commutative
        t = self.mul_table
        return bool((t == t.T).all())

    @cached_property
    def one_minus(self) -> np.ndarray:
        """Index of 1 - x for every x."""
        return self.sub(self.one, np.arange(self.order, dtype=np.int64))

    def unit_mask(self) -> np.ndarray:
        if "_units" not in self.__dict__:
            if self._unit_hint is not None:
                mask = np.asarray(self._unit_hint(), dtype=bool)
            else:
                mask = kernels.unit_mask(self.mul_table, self.one)
            mask.setflags(write=False)
            self.__dict__["_units"] = mask
        return self.__dict__["_units"]


def _table_from_vectorized(op: Callable, n: int) -> np.ndarray:
    table = np.empty((n, n), dtype=np.int32)
    idx = np.arange(n, dtype=np.int64)
    step = max(1, (1 << 20) // n)
    for lo in range(0, n, step):
        rows = idx[lo:lo + step]
        table[lo:lo + step] = op(np.broadcast_to(rows[:, None], (rows.size, n)),
                                 np.broadcast_to(idx[None, :], (rows.size, n)))
    return table


# -- constructors ----------------------------------------------------------


def make_zn(n: int, *, budget: Optional[int] = None) -> FiniteRing:
    if n < 1:
        raise ValueError("Z_n needs n >= 1")
    _check_budget(n, budget, f"Z({n})")
    ring = FiniteRing(n, radix=(n,), mul=lambda a, b: (a * b) % n, one=1 % n,
                      tag=f"Z({n})", commutative=True)
    ring.int_modulus = n
    return ring


def _poly_irreducible(coeffs: Sequence[int], p: int) -> bool:
    """Monic ``coeffs`` (ascending) has no monic factor of degree 1..deg/2 over F_p."""
    d = len(coeffs) - 1
    for fd in range(1, d // 2 + 1):
        for m in range(p**fd):
            f = [(m // p**i) % p for i in range(fd)] + [1]
            rem = list(coeffs)
            for t in range(d, fd - 1, -1):
                c = rem[t] % p
                if c:
                    for j in range(fd + 1):
                        rem[t - fd + j] = (rem[t - fd + j] - c * f[j]) % p
            if not any(r % p for r in rem[:fd]):
                return False
    return True


def conway_free_modulus(p: int, k: int) -> list[int]:
    """Smallest monic irreducible of degree k over F_p, ascending coefficients.

    Candidates are ordered by their coefficients read from the top down, so
    x^2+x+1 is chosen for GF(4) and x^3+x+1 for GF(8).
    """
    for m in range(p**k):
        coeffs = [(m // p**i) % p for i in range(k)] + [1]
        if _poly_irreducible(coeffs, p):
            return coeffs
    raise AssertionError("no irreducible polynomial found")


@dataclass(frozen=True)
class FieldSpec:
    p: int
    k: int
    modulus: tuple[int, ...]

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if len(self.modulus) != self.k + 1 or self.modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree k")
        if not _poly_irreducible(self.modulus, self.p):
            raise ValueError("modulus is reducible")


def make_gf(p: int, k: int = 1, *, budget: Optional[int] = None) -> FiniteRing:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if k < 1:
        raise ValueError("field degree must be positive")
    _check_budget(p**k, budget, f"GF({p**k})")
    spec = FieldSpec(p, k, tuple(conway_free_modulus(p, k)))
    base = make_zn(p)
    ring = make_poly_quotient(base, list(spec.modulus), variable="a", budget=budget)
    ring.tag = f"GF({p**k})"
    ring.field_spec = spec
    ring.generators = {}
    if k == 1:
        ring.int_modulus = p
    field_units = np.arange(ring.order) != 0
    ring._unit_hint = lambda: field_units
    return ring


def _poly_label(coeffs: Sequence[str], var: str) -> str:
    terms = []
    for i, c in enumerate(coeffs):
        if c == "0":
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if not mono:
            terms.append(c)
        elif c == "1":
            terms.append(mono)
        else:
            terms.append(f"{c}{mono}" if c.isdigit() else f"({c}){mono}")
    return " + ".join(terms) if terms else "0"


def make_poly_quotient(R: FiniteRing, modulus: Sequence[int], *, variable: str = "x",
                       budget: Optional[int] = None) -> FiniteRing:
    """R[x]/(modulus) for commutative R and a monic integer coefficient list (ascending)."""
    modulus = [int(c) for c in modulus]
    d = len(modulus) - 1
    if d < 1:
        raise ValueError("modulus must have degree >= 1")
    if modulus[-1] != 1:
        raise ValueError("modulus must be monic")
    if not R.is_commutative:
        raise ValueError("polynomial quotients need a commutative base ring")
    if R.radix is None:
        raise ValueError("polynomial quotients need a radix base ring")
    m = R.order
    _check_budget(m**d, budget, f"{R.tag}[x]/(deg {d})")
    mod = [R.from_int(c) for c in modulus[:d]]
    neg_mod = [int(R.neg(c)) for c in mod]

    weights = [m**i for i in range(d)]

    def int_mul(a, b):
        a, b = np.broadcast_arrays(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))
        A = [(a // w) % m for w in weights]
        B = [(b // w) % m for w in weights]
        conv = [np.zeros(a.shape, dtype=np.int64) for _ in range(2 * d - 1)]
        for i in range(d):
            for j in range(d):
                conv[i + j] += A[i] * B[j]
        for t in range(2 * d - 2, d - 1, -1):
            top = conv[t] % m
            for i, c in enumerate(neg_mod):
                if c:
                    conv[t - d + i] += c * top
        out = np.zeros(a.shape, dtype=np.int64)
        for i in range(d):
            out += (conv[i] % m) * weights[i]
        return out

    def mul(a, b):
        A = decode(a, m, d)
        B = decode(b, m, d)
        shape = np.broadcast(A[..., 0], B[..., 0]).shape
        conv = [np.zeros(shape, dtype=np.int64) for _ in range(2 * d - 1)]
        for i in range(d):
            for j in range(d):
                conv[i + j] = R.add(conv[i + j], R.mul(A[..., i], B[..., j]))
        for t in range(2 * d - 2, d - 1, -1):
            c = conv[t]
            # x^d = -(m_0 + m_1 x + ... + m_{d-1} x^{d-1})
            for j in range(d):
                if neg_mod[j] != R.zero:
                    conv[t - d + j] = R.add(conv[t - d + j], R.mul(c, neg_mod[j]))
        return encode(np.stack(conv[:d], axis=-1), m)

    def label(i):
        return _poly_label([R.label(c) for c in decode(i, m, d)], variable)

    hint = None
    if all(c == R.zero for c in mod):
        # in R[x]/(x^d) a polynomial is a unit iff its constant term is
        def hint():
            return R.unit_mask()[np.arange(m**d) % m]

    x = R.one * m if d > 1 else int(neg_mod[0])
    return FiniteRing(m**d, radix=R.radix * d, mul=int_mul if R.int_modulus else mul, one=R.one,
                      label=label, tag=f"{R.tag}[{variable}]/({_modulus_text(modulus, variable)})",
                      commutative=True, generators={variable: x}, unit_hint=hint)


def _modulus_text(modulus: Sequence[int], var: str) -> str:
    return _poly_label([str(c) for c in modulus], var).replace(" + -", " - ")


def make_matrix_ring(m: int, R: FiniteRing, shape: str = "full", *,
                     budget: Optional[int] = None) -> FiniteRing:
    if m < 1:
        raise ValueError("matrix size must be positive")
    if shape not in ("full", "upper_triangular"):
        raise ValueError(f"unknown matrix shape {shape!r}")
    if R.radix is None:
        raise ValueError("matrix rings need a radix base ring")
    positions = [(i, j) for i in range(m) for j in range(m) if shape == "full" or i <= j]
    P = len(positions)
    q = R.order
    _check_budget(q**P, budget, f"{'M' if shape == 'full' else 'UT'}({m},{R.tag})")
    where = {pos: k for k, pos in enumerate(positions)}

    def mul(a, b):
        A = decode(a, q, P)
        B = decode(b, q, P)
        shape_ = np.broadcast(A[..., 0], B[..., 0]).shape
        out = []
        for (i, j) in positions:
            acc = np.zeros(shape_, dtype=np.int64)
            for k in range(m):
                if (i, k) in where and (k, j) in where:
                    acc = R.add(acc, R.mul(A[..., where[i, k]], B[..., where[k, j]]))
            out.append(acc)
        return encode(np.stack(out, axis=-1), q)

    one_digits = np.zeros(P, dtype=np.int64)
    for i in range(m):
        one_digits[where[i, i]] = R.one
    one = int(encode(one_digits, q))

    def label(idx):
        digits = decode(idx, q, P)
        rows = []
        for i in range(m):
            rows.append("[" + ",".join(R.label(digits[where[i, j]]) if (i, j) in where else "0"
                                       for j in range(m)) + "]")
        return "[" + ",".join(rows) + "]"

    name = "M" if shape == "full" else "UT"
    return FiniteRing(q**P, radix=R.radix * P, mul=mul, one=one, label=label,
                      tag=f"{name}({m},{R.tag})",
                      commutative=(m == 1 and R.is_commutative) or None)


def make_group_algebra(R: FiniteRing, G: GroupTable, *, budget: Optional[int] = None,
                       generators: Optional[dict[str, int]] = None, group_tag: str = "") -> FiniteRing:
    """R[G]; element index is sum of coefficient_g * |R|^g."""
    if R.radix is None:
        raise ValueError("group algebras need a radix base ring")
    q, n = R.order, G.order
    _check_budget(q**n, budget, f"{R.tag}[{group_tag or 'G'}]")
    gmul = G.mul

    def mul(a, b):
        A = decode(a, q, n)
        B = decode(b, q, n)
        shape_ = np.broadcast(A[..., 0], B[..., 0]).shape
        out = [np.zeros(shape_, dtype=np.int64) for _ in range(n)]
        for g in range(n):
            for h in range(n):
                k = gmul[g, h]
                out[k] = R.add(out[k], R.mul(A[..., g], B[..., h]))
        return encode(np.stack(out, axis=-1), q)

    def basis(g):
        return R.one * q**g

    def label(idx):
        digits = decode(idx, q, n)
        terms = []
        for g in range(n):
            c = int(digits[g])
            if c == R.zero:
                continue
            gl = G.label(g)
            cl = R.label(c)
            terms.append(gl if c == R.one else (cl if gl == "1" else f"{cl}*{gl}"))
        return " + ".join(terms) if terms else "0"

    gens = {name: basis(g) for name, g in (generators or {}).items()}

    return FiniteRing(q**n, radix=R.radix * n, mul=mul, one=basis(G.identity), label=label,
                      tag=f"{R.tag}[{group_tag or 'G'}]",
                      commutative=(R.is_commutative and is_abelian(G)) or None,
                      generators=gens)


def make_product(R: FiniteRing, S: FiniteRing, *, budget: Optional[int] = None) -> FiniteRing:
    """R x S; the pair (r, s) has index r + |R| s."""
    m = R.order
    _check_budget(m * S.order, budget, f"{R.tag} x {S.tag}")

    def split(a):
        a = np.asarray(a, dtype=np.int64)
        return a % m, a // m

    def mul(a, b):
        (ra, sa), (rb, sb) = split(a), split(b)
        return R.mul(ra, rb) + m * S.mul(sa, sb)

    def add(a, b):
        (ra, sa), (rb, sb) = split(a), split(b)
        return R.add(ra, rb) + m * S.add(sa, sb)

    def neg(a):
        ra, sa = split(a)
        return R.neg(ra) + m * S.neg(sa)

    radix = R.radix + S.radix if (R.radix is not None and S.radix is not None) else None
    return FiniteRing(m * S.order, radix=radix, mul=mul, add=add, neg=neg, zero=R.zero + m * S.zero,
                      one=R.one + m * S.one,
                      label=lambda i: f"({R.label(i % m)}, {S.label(i // m)})",
                      tag=f"{R.tag} x {S.tag}",
                      commutative=(R.is_commutative and S.is_commutative) or None)


def make_end_c4c2() -> FiniteRing:
    """Endomorphism ring of C4 x C2 under pointwise addition and composition.

    An endomorphism sends e1 -> a e1 + c e2 and e2 -> b e1 + d e2 with
    a in Z4, b in {0, 2}, c, d in Z2; its index is a + 4 (b/2) + 8 c + 16 d.
    The product f*g is the composite f(g(x)).
    """

    def parts(x):
        x = np.asarray(x, dtype=np.int64)
        return x % 4, (x // 4) % 2, (x // 8) % 2, (x // 16) % 2

    def mul(f, g):
        a, bh, c, d = parts(f)
        a2, bh2, c2, d2 = parts(g)
        # f(g(e1)) = f(a2, c2),  f(g(e2)) = f(2 bh2, d2)
        na = (a2 * a + 2 * c2 * bh) % 4
        nc = (a2 * c + c2 * d) % 2
        nbh = (bh2 * a + d2 * bh) % 2
        nd = (d2 * d) % 2
        return na + 4 * nbh + 8 * nc + 16 * nd

    def label(x):
        a, bh, c, d = (int(v) for v in parts(x))
        return f"e1->({a},{c}) e2->({2 * bh},{d})"

    return FiniteRing(32, radix=(4, 2, 2, 2), mul=mul, one=1 + 16, label=label,
                      tag="End(C4 x C2)")


# -- ideals, quotients, idempotents ----------------------------------------


@dataclass(frozen=True, eq=False)
class IdealSpan:
    parent: FiniteRing
    elements: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x) -> bool:
        return int(x) in set(self.elements)

    @property
    def mask(self) -> np.ndarray:
        m = np.zeros(self.parent.order, dtype=bool)
        m[list(self.elements)] = True
        return m


def is_ideal(R: FiniteRing, elements: Iterable[int]) -> bool:
    S = np.asarray(sorted(set(int(e) for e in elements)), dtype=np.int64)
    if S.size == 0:
        return False
    member = np.zeros(R.order, dtype=bool)
    member[S] = True
    if not member[R.zero]:
        return False
    if not member[R.add(S[:, None], S[None, :])].all() or not member[R.neg(S)].all():
        return False
    t = R.mul_table
    return bool(member[t[:, S]].all() and member[t[S, :]].all())


def ideal_closure(R: FiniteRing, gens: Iterable[int]) -> IdealSpan:
    """Two-sided ideal generated by ``gens``: the additive span of all r*g*s."""
    gens = sorted(set(int(g) for g in gens))
    t = R.mul_table
    products = set()
    for g in gens:
        products.update(np.unique(t[t[:, g], :]).tolist())
    products.discard(R.zero)
    span = kernels.closure(R.add_table, sorted(products), R.zero)
    return IdealSpan(R, tuple(int(x) for x in span))


def ideal_product(I: IdealSpan, K: IdealSpan) -> IdealSpan:
    """The ideal I*K: additive span of products i*k."""
    R = I.parent
    t = R.mul_table
    prods = np.unique(t[np.ix_(list(I.elements), list(K.elements))])
    prods = prods[prods != R.zero]
    span = kernels.closure(R.add_table, prods.tolist(), R.zero)
    return IdealSpan(R, tuple(int(x) for x in span))


class QuotientRing(FiniteRing):
    """R/I with cosets represented by their least element index."""

    def __init__(self, parent: FiniteRing, ideal: IdealSpan, reps: np.ndarray, proj: np.ndarray):
        self.parent = parent
        self.ideal = ideal
        self.reps = reps
        self.proj = proj

        def mul(a, b):
            return proj[parent.mul(reps[a], reps[b])]

        def add(a, b):
            return proj[parent.add(reps[a], reps[b])]

        def neg(a):
            return proj[parent.neg(reps[a])]

        super().__init__(len(reps), mul=mul, add=add, neg=neg, zero=int(proj[parent.zero]),
                         one=int(proj[parent.one]), label=lambda i: f"[{parent.label(reps[i])}]",
                         tag=f"{parent.tag}/I", commutative=True if parent.is_commutative else None,
                         generators={k: int(proj[v]) for k, v in parent.generators.items()})

    def project(self, x):
        """The quotient map on parent element indices."""
        return self.proj[np.asarray(x, dtype=np.int64)]


def make_quotient(R: FiniteRing, I: IdealSpan) -> QuotientRing:
    if I.parent is not R:
        raise ValueError("ideal belongs to a different ring")
    if not is_ideal(R, I.elements):
        raise ValueError("not a two-sided ideal")
    members = np.asarray(I.elements, dtype=np.int64)
    rep = np.empty(R.order, dtype=np.int64)
    idx = np.arange(R.order, dtype=np.int64)
    step = max(1, (1 << 22) // max(members.size, 1))
    for lo in range(0, R.order, step):
        rep[lo:lo + step] = R.add(idx[lo:lo + step, None], members[None, :]).min(axis=1)
    reps = np.unique(rep)
    proj = np.searchsorted(reps, rep)
    return QuotientRing(R, I, reps, proj)


def characteristic(R: FiniteRing) -> int:
    return R.characteristic


def central_idempotents(R: FiniteRing) -> list[int]:
    t = R.mul_table
    idx = np.arange(R.order)
    cand = idx[t[idx, idx] == idx]
    central = (t[cand, :] == t[:, cand].T).all(axis=1)
    return [int(e) for e in cand[central]]


def is_indecomposable(R: FiniteRing) -> bool:
    if R.order < 2:
        raise ValueError("the trivial ring has no decomposition question")
    return len(central_idempotents(R)) == 2


class Subring(FiniteRing):
    """A subset of a parent ring closed under its operations, with its own identity."""

    def __init__(self, parent: FiniteRing, elements: Sequence[int], one: int, tag: str):
        elems = np.asarray(sorted(set(int(e) for e in elements)), dtype=np.int64)
        pos = np.full(parent.order, -1, dtype=np.int64)
        pos[elems] = np.arange(elems.size)
        self.parent = parent
        self.elements = elems

        def lift(a):
            return elems[np.asarray(a, dtype=np.int64)]

        super().__init__(elems.size, mul=lambda a, b: pos[parent.mul(lift(a), lift(b))],
                         add=lambda a, b: pos[parent.add(lift(a), lift(b))],
                         neg=lambda a: pos[parent.neg(lift(a))], zero=int(pos[parent.zero]),
                         one=int(pos[one]), label=lambda i: parent.label(elems[i]), tag=tag,
                         commutative=True if parent.is_commutative else None)


def peirce_split(R: FiniteRing, e: int) -> tuple[Subring, Subring]:
    """Split R = eR x (1-e)R at a nontrivial central idempotent e."""
    e = int(e)
    if e in (R.zero, R.one) or e not in central_idempotents(R):
        raise ValueError("peirce_split needs a nontrivial central idempotent")
    f = int(R.sub(R.one, e))
    t = R.mul_table
    R1 = Subring(R, np.unique(t[e, :]), e, f"e{R.tag}")
    R2 = Subring(R, np.unique(t[f, :]), f, f"(1-e){R.tag}")
    return R1, R2


def check_ring_axioms(R: FiniteRing, rng: Optional[np.random.Generator] = None,
                      samples: int = 100_000) -> bool:
    n = R.order
    idx = np.arange(n, dtype=np.int64)
    if n <= EXHAUSTIVE_AXIOM_LIMIT:
        a, b, c = (x.ravel() for x in np.meshgrid(idx, idx, idx, indexing="ij"))
    else:
        rng = rng or np.random.default_rng(0)
        a, b, c = rng.integers(0, n, size=(3, samples))
    checks = [
        R.add(R.add(a, b), c) == R.add(a, R.add(b, c)),
        R.add(a, b) == R.add(b, a),
        R.add(a, R.zero) == a,
        R.add(a, R.neg(a)) == R.zero,
        R.mul(R.mul(a, b), c) == R.mul(a, R.mul(b, c)),
        R.mul(a, R.one) == a,
        R.mul(R.one, a) == a,
        R.mul(a, R.add(b, c)) == R.add(R.mul(a, b), R.mul(a, c)),
        R.mul(R.add(a, b), c) == R.add(R.mul(a, c), R.mul(b, c)),
    ]
    return all(bool(np.all(ch)) for ch in checks) and n % R.characteristic == 0
