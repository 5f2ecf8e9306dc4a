"""Scripted checks: the realizability table and the scripted desk checks.

Every check returns a ``CheckResult``; nothing here raises on a failed check.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .dsl import evaluate, ring_element
from .gamma import (SemidirectSpec, gamma_mul, gamma_truncation, gamma_unit_group, random_gamma,
                    semidirect_unit_check)
from .groups import (AbelianInvariants, direct_product, is_normal, make_cyclic, make_dihedral,
                     order_census, recognize_dihedral, subgroup_generated, subgroup_table)
from .numtheory import valuation
from .quaternion import (norm_one_samples, obstruction_certificate, random_quaternion, sq_conj,
                         sq_inverse, sq_mul, sq_norm)
from .rings import (FiniteRing, ideal_product, is_indecomposable, make_gf, make_poly_quotient,
                    make_quotient, make_zn, peirce_split)
from .units import (gl_order, is_nilpotent_ideal, jacobson_radical, one_plus_j_is_normal,
                    radical_by_two_sided_products, radical_counting_check, rank_lower_bound,
                    threshold_decomposition, un_formula, unit_group, unit_group_table,
                    unit_invariants, unit_set)

TWO_SIDED_LIMIT = 256


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str = ""
    seconds: float = 0.0

    def line(self) -> str:
        return f"{'PASS' if self.ok else 'FAIL'}  {self.name}" + (f"  ({self.detail})" if self.detail else "")


def _timed(name: str, fn: Callable[[], tuple[bool, str]]) -> CheckResult:
    t0 = time.perf_counter()
    try:
        ok, detail = fn()
    except Exception as exc:  # a crash inside a check is a failed check
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    return CheckResult(name, bool(ok), detail, time.perf_counter() - t0)


# -- realizability table ---------------------------------------------------

# (characteristic, n of D_{2n}, ring expression)
TABLE_ROWS: tuple[tuple[int, int, str], ...] = (
    (2, 1, "GA(GF(2), D(2))"),
    (2, 2, "GA(GF(2), D(2)) x GA(GF(2), D(2))"),
    (2, 3, "M(2, GF(2))"),
    (2, 4, "UT(3, GF(2))"),
    (2, 6, "GA(GF(2), D(6))"),
    (3, 1, "GF(3)"),
    (3, 2, "GF(3) x GF(3)"),
    (3, 6, "UT(2, GF(3))"),
    (4, 1, "Z(4)"),
    (4, 2, "Z(4) x Z(4)"),
    (4, 4, "EndC4C2"),
    (4, 6, "Z(4) x M(2, GF(2))"),
    (6, 1, "GF(2) x GF(3)"),
    (6, 2, "GF(2) x GF(3) x GF(3)"),
    (6, 6, "GF(2) x UT(2, GF(3))"),
    (8, 2, "Z(8)"),
    (12, 2, "Z(12)"),
)
GAMMA_KS = (1, 3, 5, 7)


def check_table_row(c: int, n: int, text: str) -> CheckResult:
    def run():
        R = evaluate(text)
        rep = unit_group(R)
        s = rep.structure
        ok = R.characteristic == c and s.kind == "dihedral" and s.n == n
        return ok, f"char {R.characteristic}, units {s} of order {rep.order}"

    return _timed(f"c={c:<2} D_{2 * n:<3} {text}", run)


def check_integers_row() -> CheckResult:
    # Z^x = {1, -1}: the only integers with an integer inverse
    def run():
        units = [a for a in range(-50, 51) if a != 0 and any(a * b == 1 for b in range(-50, 51))]
        G = make_cyclic(len(units))
        return units == [-1, 1] and recognize_dihedral(G) == 1, f"units {units}"

    return _timed("c=0  D_2   Z", run)


def check_gamma_row(k: int) -> CheckResult:
    def run():
        rep = gamma_unit_group(k)
        s = rep.structure
        return s.kind == "dihedral" and s.n == 2 * k, f"units {s} of order {rep.order}"

    return _timed(f"c=0  D_{4 * k:<3} Gamma({k})", run)


def verify_table() -> list[CheckResult]:
    out = [check_table_row(c, n, text) for c, n, text in TABLE_ROWS]
    out.append(check_integers_row())
    out.extend(check_gamma_row(k) for k in GAMMA_KS)
    return out


# -- corpus ------------------------------------------------------------------

EXTRA_CORPUS = (
    "GA(GF(2), D(4))",
    "GA(GF(2), D(12))",
    "PQ(Z(4), [1, 0, 0, 0, 1])",
    "PQ(GF(2), [0, 0, 1])",
    "PQ(GF(2), [0, 0, 0, 1])",
    "PQ(GF(2), [0, 0, 0, 0, 0, 0, 1])",
    "PQ(GF(3), [0, 0, 1])",
    "PQ(GF(3), [0, 0, 0, 0, 1])",
    "PQ(GF(5), [0, 0, 0, 1])",
    "GF(4)",
    "M(2, GF(3))",
)
CORPUS: tuple[str, ...] = tuple(text for _, _, text in TABLE_ROWS) + EXTRA_CORPUS


def radical_corpus_check(text: str, *, two_sided_limit: int = TWO_SIDED_LIMIT) -> CheckResult:
    """All radical facts for one ring."""

    def run():
        R = evaluate(text)
        rep = jacobson_radical(R)
        j = rep.j_order
        n_units = len(unit_set(R))
        facts = {
            "J | R": R.order % j == 0,
            "J | units": n_units % j == 0,
            "counting": radical_counting_check(R, rep),
            "normal": one_plus_j_is_normal(R, rep),
            "nilpotent": is_nilpotent_ideal(rep.radical),
        }
        if R.order <= two_sided_limit:
            facts["two-sided set"] = sorted(radical_by_two_sided_products(R)) == sorted(rep.radical.elements)
        bad = [k for k, v in facts.items() if not v]
        detail = f"|R|={R.order} |J|={j} |R^x|={n_units} |(R/J)^x|={rep.quotient_units_order}"
        return not bad, detail + (f" failed: {', '.join(bad)}" if bad else "")

    return _timed(f"radical {text}", run)


def radical_corpus() -> list[CheckResult]:
    return [radical_corpus_check(text) for text in CORPUS]


# -- desk checks ----------------------------------------------------


def _all_subgroups_2gen(G) -> set[frozenset]:
    subs = set()
    for a in range(G.order):
        for b in range(a, G.order):
            subs.add(frozenset(subgroup_generated(G, [a, b])))
    return subs


def check_dihedral_properties(max_n: int = 12) -> tuple[bool, str]:
    problems = []
    for n in range(1, max_n + 1):
        G = make_dihedral(2 * n)
        if n <= 2:
            # D_2 = C2 and D_4 = C2 x C2
            census = order_census(G)
            if census != order_census(make_cyclic(2) if n == 1 else direct_product(make_cyclic(2), make_cyclic(2))):
                problems.append(f"D_{2 * n} abelian identification")
            continue
        center = sorted(int(g) for g in np.flatnonzero((G.mul == G.mul.T).all(axis=1)))
        expect = [0] if n % 2 else [0, n // 2]
        if center != expect:
            problems.append(f"center of D_{2 * n}")
        rot = frozenset(range(n))
        normal = {S for S in _all_subgroups_2gen(G) if len(S) < G.order and is_normal(G, S)}
        extra = {S for S in normal if not S <= rot}
        if n % 2:
            if extra:
                problems.append(f"D_{2 * n} has normal subgroups outside <r>")
        else:
            # <r^2, s> and <r^2, rs>; rs has index n + 1
            want = {frozenset(subgroup_generated(G, [2 % n, n])), frozenset(subgroup_generated(G, [2 % n, n + 1]))}
            if extra != want or any(len(S) != n for S in want):
                problems.append(f"D_{2 * n} extra normal subgroups")
        # every subgroup of <r> is normal
        for d in range(1, n + 1):
            if n % d == 0 and not is_normal(G, subgroup_generated(G, [d % n])):
                problems.append(f"<r^{d}> in D_{2 * n}")
        if n % 2 == 0 and (n // 2) % 2 == 1:
            H = direct_product(make_cyclic(2), make_dihedral(n))
            if order_census(H) != order_census(G) or recognize_dihedral(H) != n:
                problems.append(f"D_{2 * n} = C2 x D_{n}")
    return not problems, "; ".join(problems) or f"D_2 .. D_{2 * max_n}"


def _embeds_in_dihedral_center(c: int) -> bool:
    # dihedral centers are 1, C2 or C2 x C2
    rep = unit_group(make_zn(c))
    return rep.order <= 4 and all(o <= 2 for o in rep.group.orders)


def check_characteristics(lo: int = 5, hi: int = 24) -> tuple[bool, str]:
    excluded = [c for c in range(lo, hi + 1) if c not in (6, 8, 12)]
    bad = [c for c in excluded if _embeds_in_dihedral_center(c)]
    allowed_ok = all(_embeds_in_dihedral_center(c) for c in (2, 3, 4, 6, 8, 12))
    big = all(len(unit_set(make_zn(m))) > 4 for m in range(13, 101))
    return not bad and allowed_ok and big, f"excluded {excluded[0]}..{excluded[-1]}" + (f"; embeds: {bad}" if bad else "")


UN_SWEEP = tuple((p, n) for p in (2, 3, 5) for n in range(1, 9)) + tuple((2, n) for n in range(9, 13))


def un_oracle(p: int, n: int) -> AbelianInvariants:
    modulus = [0] * n + [1]
    return unit_invariants(make_poly_quotient(make_gf(p), modulus))


def check_un_formula(sweep=UN_SWEEP) -> tuple[bool, str]:
    bad = [(p, n) for p, n in sweep if un_formula(p, n) != un_oracle(p, n)]
    return not bad, f"{len(sweep)} cases" + (f"; mismatches {bad}" if bad else "")


RANK_CASES = ((2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (5, 2), (7, 2))


def check_rank_bounds(cases=RANK_CASES) -> tuple[bool, str]:
    problems = []
    for p, r in cases:
        inv = un_formula(p, p ** (r - 1) + 1)
        if threshold_decomposition(p, r) != inv:
            problems.append(f"closed form ({p},{r})")
        p_part = sum(1 for f in inv.factors if f % p == 0)
        if p_part != (p - 1) * p ** (r - 2):
            problems.append(f"p-part count ({p},{r})")
        if inv.d < rank_lower_bound(p, r):
            problems.append(f"bound ({p},{r})")
    return not problems, "; ".join(problems) or f"{len(cases)} cases"


def check_counting_identity(corpus=CORPUS, limit: int = TWO_SIDED_LIMIT) -> tuple[bool, str]:
    bad = []
    for text in corpus:
        R = evaluate(text)
        if R.order <= limit and not radical_counting_check(R):
            bad.append(text)
    return not bad, f"{len(corpus)} rings" + (f"; failed {bad}" if bad else "")


def check_indecomposability_mod_j2(corpus=CORPUS, limit: int = TWO_SIDED_LIMIT) -> tuple[bool, str]:
    bad, n = [], 0
    for text in corpus:
        R = evaluate(text)
        if R.order > limit or R.order < 2:
            continue
        J = jacobson_radical(R).radical
        Q = make_quotient(R, ideal_product(J, J))
        n += 1
        if is_indecomposable(R) != is_indecomposable(Q):
            bad.append(text)
    return not bad, f"{n} rings" + (f"; failed {bad}" if bad else "")


def unit_center(R: FiniteRing, rng: Optional[np.random.Generator] = None) -> list[int]:
    """Units commuting with every unit, without a full multiplication table."""
    rng = rng or np.random.default_rng(0)
    U = np.asarray(unit_set(R), dtype=np.int64)
    probe = U[rng.choice(U.size, size=min(64, U.size), replace=False)]
    cand = U[(R.mul(U[:, None], probe[None, :]) == R.mul(probe[None, :], U[:, None])).all(axis=1)]
    return [int(z) for z in cand if (R.mul(z, U) == R.mul(U, z)).all()]


def check_gl(rng: Optional[np.random.Generator] = None) -> tuple[bool, str]:
    problems = []
    values = {(2, 2, 1): 6, (2, 3, 1): 48, (3, 2, 1): 168}
    for args, want in values.items():
        if gl_order(*args) != want:
            problems.append(f"gl_order{args}")
    for m in range(1, 5):
        for k in range(1, 4):
            for p in (2, 3):
                if valuation(gl_order(m, p, k), p) != k * m * (m - 1) // 2:
                    problems.append(f"valuation ({m},{p},{k})")
    for q, p, k in ((2, 2, 1), (3, 3, 1), (4, 2, 2)):
        if len(unit_set(evaluate(f"M(2, GF({q}))"))) != gl_order(2, p, k):
            problems.append(f"|GL_2(F_{q})|")
    for q, want in ((4, 3), (8, 7)):
        z = unit_center(evaluate(f"M(2, GF({q}))"), rng)
        if len(z) != want:
            problems.append(f"center of GL_2(F_{q}) has order {len(z)}")
    return not problems, "; ".join(problems) or "orders, valuations, centers 3 and 7"


def check_group_algebra_d12_d4() -> tuple[bool, str]:
    problems = []
    R = evaluate("GA(GF(2), D(12))")
    e = ring_element(R, "r^2 + r^4")
    idx = np.arange(R.order, dtype=np.int64)
    if int(R.mul(e, e)) != e:
        problems.append("r^2 + r^4 is not idempotent")
    if not (R.mul(e, idx) == R.mul(idx, e)).all():
        problems.append("r^2 + r^4 is not central")
    if e in (R.zero, R.one) or is_indecomposable(R):
        problems.append("F_2[D_12] should decompose")
    R1, R2 = peirce_split(R, e)
    if R1.order * R2.order != R.order:
        problems.append("Peirce factors")
    S = evaluate("GA(GF(2), D(4))")
    rep = unit_group(S)
    if S.order != 16 or rep.order != 8 or any(o > 2 for o in rep.group.orders):
        problems.append("F_2[D_4] units")
    return not problems, "; ".join(problems) or f"Peirce factors {R1.order} x {R2.order}; F_2[D_4]: 16 elements, 8 units"


def check_one_plus_2t() -> tuple[bool, str]:
    R = evaluate("PQ(Z(4), [1, 0, 0, 0, 1])")
    t = np.arange(R.order, dtype=np.int64)
    x = R.add(R.one, R.add(t, t))
    good = int((R.mul(x, x) == R.one).sum())
    return good == R.order == 256, f"{good}/{R.order} elements"


Z4_QUOTIENT_BASE = "PQ(Z(4), [1, 0, 0, 0, 1])"
Z4_QUOTIENT_BRANCHES = (
    "2*x",
    "2*x + 2*1; 1 + 3*x + 3*x^2 + x^3",
    "2*x + 2*1; 3*1 + 3*x + 3*x^2 + x^3",
)


def check_z4_chain() -> tuple[bool, str]:
    problems, chars = [], []
    R = evaluate(Z4_QUOTIENT_BASE)
    x = R.generators["x"]
    y = int(R.add(R.one, R.add(x, x)))
    if int(R.mul(y, y)) != R.one:
        problems.append("(1 + 2x)^2 != 1")
    # after 2x - 2 = 0 the element 1 + (1 + x)^3 squares to 1
    Q = evaluate(f"Quot({Z4_QUOTIENT_BASE}, [2*x + 2*1])")
    xq = Q.generators["x"]
    w = int(Q.add(Q.one, Q.pow(int(Q.add(Q.one, xq)), 3)))
    if int(Q.mul(w, w)) != Q.one:
        problems.append("(1 + (1 + x)^3)^2 != 1 modulo 2x - 2")
    for elems in Z4_QUOTIENT_BRANCHES:
        c = evaluate(f"Quot({Z4_QUOTIENT_BASE}, [{elems}])").characteristic
        chars.append(c)
        if c not in (1, 2):
            problems.append(f"[{elems}] has characteristic {c}")
    return not problems, "; ".join(problems) or f"branch characteristics {chars}"


def check_gamma(rng: np.random.Generator, ks=range(1, 13), triples: int = 200) -> tuple[bool, str]:
    problems = []
    for k in ks:
        rep = gamma_unit_group(k)
        if rep.order != 4 * k:
            problems.append(f"|units Gamma({k})|")
        if k % 2 and (rep.structure.kind != "dihedral" or rep.structure.n != 2 * k):
            problems.append(f"Gamma({k}) not D_{4 * k}")
        for _ in range(triples):
            x, y, z = (random_gamma(rng, k) for _ in range(3))
            if gamma_mul(k, gamma_mul(k, x, y), z) != gamma_mul(k, x, gamma_mul(k, y, z)):
                problems.append(f"associativity k={k}")
                break
    for k in (1, 3, 5, 7, 9):
        T, (r, s, minus) = gamma_truncation(k)
        units = unit_set(T)
        pos = {u: i for i, u in enumerate(units)}
        G = unit_group_table(T, units)
        H = subgroup_generated(G, [pos[r], pos[s], pos[minus]])
        if len(H) != 4 * k or recognize_dihedral(subgroup_table(G, H)) != 2 * k:
            problems.append(f"truncation k={k}")
    Z3 = make_zn(3)
    if not semidirect_unit_check(SemidirectSpec(Z3, Z3, list(range(3)), list(range(3)))):
        problems.append("semidirect Z_3")
    Z4, Z2 = make_zn(4), make_zn(2)
    red = [a % 2 for a in range(4)]
    if not semidirect_unit_check(SemidirectSpec(Z4, Z2, red, red)):
        problems.append("semidirect Z_4, Z_2")
    return not problems, "; ".join(problems) or "k = 1..12, truncations k = 1..9 odd"


def check_quaternions(rng: np.random.Generator, samples: int = 1000) -> tuple[bool, str]:
    problems = []
    for k in range(1, 65):
        cert = obstruction_certificate(k)
        if not cert.nonzero or cert.re_value <= 1 or cert.power_norm != 1:
            problems.append(f"certificate k={k}")
    c1 = obstruction_certificate(1)
    if (c1.norm_value, c1.re_value) != (-1152, 577):
        problems.append("k=1 values")
    for _ in range(samples):
        a, b = random_quaternion(rng), random_quaternion(rng)
        if sq_norm(sq_mul(a, b)) != sq_norm(a) * sq_norm(b):
            problems.append("norm multiplicativity")
            break
        if sq_conj(sq_mul(a, b)) != sq_mul(sq_conj(b), sq_conj(a)):
            problems.append("conjugation anti-homomorphism")
            break
    for alpha in norm_one_samples(rng, samples):
        if sq_mul(alpha, sq_inverse(alpha)) != sq_mul(sq_inverse(alpha), alpha) or sq_norm(alpha) != 1:
            problems.append("norm-one inverse")
            break
        if sq_norm(alpha - 1) == 0 and alpha.real != 1:
            problems.append("Re = 1 criterion")
            break
    return not problems, "; ".join(problems) or "k = 1..64 and sampled laws"


@dataclass
class DeskCheck:
    key: str
    title: str
    run: Callable[[np.random.Generator], tuple[bool, str]] = field(repr=False)


DESK_CHECKS: tuple[DeskCheck, ...] = (
    DeskCheck("dihedral", "dihedral centers, normal subgroups, decomposition", lambda rng: check_dihedral_properties()),
    DeskCheck("characteristic", "characteristics 5..24 except 6, 8, 12 excluded", lambda rng: check_characteristics()),
    DeskCheck("un-formula", "unit group formula for F_p[x]/(x^n)", lambda rng: check_un_formula()),
    DeskCheck("rank", "rank bounds at n = p^(r-1) + 1", lambda rng: check_rank_bounds()),
    DeskCheck("counting", "radical counting identity over the corpus", lambda rng: check_counting_identity()),
    DeskCheck("indecomposable", "indecomposability of R and R/J^2", lambda rng: check_indecomposability_mod_j2()),
    DeskCheck("gl", "general linear group orders and centers", lambda rng: check_gl(rng)),
    DeskCheck("group-algebra", "central idempotent in F_2[D_12]; F_2[D_4] units", lambda rng: check_group_algebra_d12_d4()),
    DeskCheck("one-plus-2t", "(1 + 2t)^2 = 1 in Z_4[x]/(x^4 + 1)", lambda rng: check_one_plus_2t()),
    DeskCheck("z4-quotients", "Z_4[x]/(x^4 + 1) branches have characteristic 2", lambda rng: check_z4_chain()),
    DeskCheck("gamma", "Gamma_k unit groups and truncations", lambda rng: check_gamma(rng)),
    DeskCheck("quaternion", "split quaternion laws and obstruction", lambda rng: check_quaternions(rng)),
)


def verify_props(seed: int = 0, only: Optional[set[str]] = None) -> list[CheckResult]:
    known = {c.key for c in DESK_CHECKS}
    if only and not set(only) <= known:
        raise KeyError(f"unknown check(s): {', '.join(sorted(set(only) - known))}")
    rng = np.random.default_rng(seed)
    out = []
    for check in DESK_CHECKS:
        if only and check.key not in only:
            continue
        out.append(_timed(f"{check.key:<15} {check.title}", lambda c=check: c.run(rng)))
    return out
