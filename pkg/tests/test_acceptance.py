"""Acceptance gate: one test per criterion, each recording PASS/FAIL for the summary."""

import random
import time

import numpy as np
import pytest

from dsl_corpus import random_bytes
from unitgroups.dsl import ParseError, parse_ring_expr, to_text
from unitgroups.gamma import (SemidirectSpec, gamma_add, gamma_mul, gamma_unit_group, random_gamma,
                              semidirect_unit_check, zc2_mod)
from unitgroups.groups import recognize_dihedral
from unitgroups.quaternion import (norm_one_samples, obstruction_certificate, random_quaternion,
                                   sq_conj, sq_inverse, sq_norm, SplitQuaternion)
from unitgroups.rings import make_zn
from unitgroups.verify import UN_SWEEP, radical_corpus, radical_corpus_check, un_oracle, verify_props, verify_table
from unitgroups.units import un_formula

SEEDS = (0, 1, 2)


def test_criterion_1_table(record_criterion):
    t0 = time.perf_counter()
    results = verify_table()
    elapsed = time.perf_counter() - t0
    failed = [r.name for r in results if not r.ok]
    record_criterion(1, f"{len(results) - len(failed)}/{len(results)} rows", not failed and len(results) == 22)
    record_criterion(1, f"{elapsed:.2f}s < 30s", elapsed < 30)
    assert not failed and len(results) == 22
    assert elapsed < 30


def test_criterion_2_un_formula(record_criterion):
    t0 = time.perf_counter()
    bad = [(p, n) for p, n in UN_SWEEP if un_oracle(p, n) != un_formula(p, n)]
    elapsed = time.perf_counter() - t0
    record_criterion(2, f"{len(UN_SWEEP) - len(bad)}/{len(UN_SWEEP)} cases", not bad)
    record_criterion(2, f"{elapsed:.2f}s < 60s", elapsed < 60)
    assert not bad and len(UN_SWEEP) == 28
    assert elapsed < 60


def test_criterion_3_obstruction(record_criterion):
    t0 = time.perf_counter()
    certs = [obstruction_certificate(k) for k in range(1, 65)]
    elapsed = time.perf_counter() - t0
    ok = all(c.nonzero and c.power_norm == 1 and c.re_value > 1 for c in certs)
    exact = (certs[0].norm_value, certs[0].re_value) == (-1152, 577)
    record_criterion(3, "k = 1..64 nonzero, N = 1, Re > 1", ok)
    record_criterion(3, "k = 1 gives -1152 and 577", exact)
    record_criterion(3, f"{elapsed:.3f}s < 1s", elapsed < 1)
    assert ok and exact and elapsed < 1


def test_criterion_4_gamma(record_criterion):
    t0 = time.perf_counter()
    bad = []
    for k in range(1, 26, 2):
        rep = gamma_unit_group(k)  # raises if closure, inverses or relations fail
        s = rep.structure
        if rep.order != 4 * k or s.kind != "dihedral" or s.n != 2 * k or recognize_dihedral(rep.group) != 2 * k:
            bad.append(k)
        if k == 1 and s.invariants.factors != (2, 2):
            bad.append(k)
    elapsed = time.perf_counter() - t0
    record_criterion(4, f"odd k <= 25 dihedral of order 4k ({'ok' if not bad else bad})", not bad)
    record_criterion(4, f"{elapsed:.2f}s < 5s", elapsed < 5)
    assert not bad and elapsed < 5


def test_criterion_5_radical(record_criterion):
    t0 = time.perf_counter()
    big = radical_corpus_check("GA(GF(2), D(12))")
    big_elapsed = time.perf_counter() - t0
    results = radical_corpus()
    failed = [r.name for r in results if not r.ok]
    record_criterion(5, f"{len(results) - len(failed)}/{len(results)} corpus rings", not failed and len(results) >= 20)
    record_criterion(5, f"F_2[D_12] {big_elapsed:.2f}s < 120s", big.ok and big_elapsed < 120)
    assert not failed and len(results) >= 20, failed
    assert big.ok and big_elapsed < 120


def test_criterion_6_desk_checks(record_criterion):
    results = verify_props(seed=0)
    failed = [r.name for r in results if not r.ok]
    record_criterion(6, f"{len(results) - len(failed)}/{len(results)} desk checks", not failed)
    assert not failed, failed


# -- criterion 7: property suites under three seeds ---------------------------


def quaternion_laws(rng, n=10_000):
    for _ in range(n):
        x, y, z = (random_quaternion(rng) for _ in range(3))
        if (x * y) * z != x * (y * z):
            return False
        if sq_conj(x * y) != sq_conj(y) * sq_conj(x):
            return False
        if sq_norm(x * y) != sq_norm(x) * sq_norm(y):
            return False
        nx = SplitQuaternion.from_int(sq_norm(x))
        if x * sq_conj(x) != nx or sq_conj(x) * x != nx:
            return False
    for a in norm_one_samples(rng, 1000):
        inv = sq_inverse(a)
        if a * inv != SplitQuaternion(1) or inv * a != SplitQuaternion(1):
            return False
        if sq_norm(a - 1) == 0 and a.real != 1:
            return False
    return True


def gamma_laws(rng, n=2_000):
    for k in range(1, 13):
        for _ in range(n):
            x, y, z = (random_gamma(rng, k) for _ in range(3))
            if gamma_mul(k, gamma_mul(k, x, y), z) != gamma_mul(k, x, gamma_mul(k, y, z)):
                return False
            if gamma_mul(k, x, gamma_add(k, y, z)) != gamma_add(k, gamma_mul(k, x, y), gamma_mul(k, x, z)):
                return False
            if gamma_mul(k, gamma_add(k, y, z), x) != gamma_add(k, gamma_mul(k, y, x), gamma_mul(k, z, x)):
                return False
    return True


def random_spec(rng):
    """A random central pair f, g into B = Z_k, from Z_m or Z_m[C2] with k | m."""
    k = int(rng.integers(1, 7))
    m = k * int(rng.integers(1, max(2, 12 // k) + 1))
    if rng.random() < 0.5:
        A = make_zn(m)
        red = [a % k for a in range(m)]
        return SemidirectSpec(A, make_zn(k), red, red)
    A = zc2_mod(m)
    pairs = [(i % m, i // m) for i in range(A.order)]
    maps = ([(a + b) % k for a, b in pairs], [(a - b) % k for a, b in pairs])
    f, g = (maps[int(rng.integers(2))] for _ in range(2))
    return SemidirectSpec(A, make_zn(k), f, g)


def semidirect_laws(rng, n=12):
    return all(semidirect_unit_check(random_spec(rng)) for _ in range(n))


def parser_fuzz(seed, n=100_000):
    rng = random.Random(seed)
    for _ in range(n):
        data = random_bytes(rng)
        try:
            e = parse_ring_expr(data)
        except ParseError as exc:
            if not 0 <= exc.offset <= len(data):
                return False
        except Exception:
            return False
        else:
            if parse_ring_expr(to_text(e)) != e:
                return False
    return True


@pytest.mark.parametrize("seed", SEEDS)
def test_criterion_7_properties(seed, record_criterion):
    rng = np.random.default_rng(seed)
    parts = {
        "quaternion laws": quaternion_laws(rng),
        "gamma ring laws": gamma_laws(rng),
        "semidirect unit law": semidirect_laws(rng),
        "parser fuzz 1e5": parser_fuzz(seed),
    }
    for name, ok in parts.items():
        record_criterion(7, f"seed {seed} {name}", ok)
    assert all(parts.values()), parts
