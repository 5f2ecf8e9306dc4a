"""Random ring expressions and byte strings for the parser tests."""

import random

from unitgroups.dsl import (EndC4C2, GA, GF, PQ, UT, CyclicG, DihedralG, Elem, Gamma, Mat, Prod,
                            Quot, Term, Zn, generator_context)

PRIME_POWERS = [2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 121]

VALID_SEEDS = [
    "M(2,GF(2))", "Z(4) x M(2,GF(2))", "GA(GF(2), D(6))", "PQ(Z(4), [1,0,0,0,1])",
    "Quot(GA(GF(2), D(2)), [1+s])", "UT(2,GF(3))", "Gamma(5)", "Z(1)", "EndC4C2",
    "Quot(PQ(Z(4), [1, 0, 0, 0, 1]), [2*x + 2*1; 1 + 3*x + 3*x^2 + x^3])",
    "GA(Z(3), C(4)) x GF(9) x Z(12)", "Quot(GA(GF(2), D(12)), [r^2 + r^4; 1 + r*s])",
]

ALPHABET = b"ZGFMUTAPQCDamxEnd4C2Quot()[],;+*^-0123456789 rsxg\t\n\xff"


def random_term(rng: random.Random, ctx) -> Term:
    gen = rng.choice(["1"] + sorted(ctx))
    coeff = rng.choice([None, None, rng.randint(0, 9)])
    exp = rng.choice([None, rng.randint(0, 12)]) if gen in "rxg" else None
    refl = gen == "r" and "s" in ctx and rng.random() < 0.3
    if gen == "1" and coeff is None:
        return Term(None, "1")
    return Term(coeff, gen, exp, refl)


def random_elem(rng: random.Random, ctx) -> Elem:
    return Elem(tuple(random_term(rng, ctx) for _ in range(rng.randint(1, 4))))


def random_atom(rng: random.Random, depth: int):
    leaves = ["Z", "GF", "EndC4C2", "Gamma"]
    kinds = leaves if depth <= 0 else leaves + ["M", "UT", "GA", "PQ", "Quot", "Prod"]
    kind = rng.choice(kinds)
    if kind == "Z":
        return Zn(rng.randint(1, 10**6))
    if kind == "GF":
        return GF(rng.choice(PRIME_POWERS))
    if kind == "EndC4C2":
        return EndC4C2()
    if kind == "Gamma":
        return Gamma(rng.randint(1, 99))
    if kind in ("M", "UT"):
        node = Mat if kind == "M" else UT
        return node(rng.randint(1, 5), random_expr(rng, depth - 1))
    if kind == "GA":
        group = CyclicG(rng.randint(1, 30)) if rng.random() < 0.5 else DihedralG(2 * rng.randint(1, 15))
        return GA(random_expr(rng, depth - 1), group)
    if kind == "PQ":
        poly = tuple(rng.randint(-9, 9) for _ in range(rng.randint(1, 5))) + (1,)
        return PQ(random_expr(rng, depth - 1), poly)
    if kind == "Quot":
        base = random_expr(rng, depth - 1)
        ctx = generator_context(base)
        return Quot(base, tuple(random_elem(rng, ctx) for _ in range(rng.randint(1, 3))))
    return random_expr(rng, depth - 1)


def random_expr(rng: random.Random, depth: int = 3):
    e = random_atom(rng, depth)
    # products are left-nested only, which is all the grammar can express
    while rng.random() < 0.25:
        e = Prod(e, _non_product(rng, depth - 1))
    return e


def _non_product(rng, depth):
    e = random_atom(rng, depth)
    while isinstance(e, Prod):
        e = random_atom(rng, depth)
    return e


def random_bytes(rng: random.Random) -> bytes:
    """Either noise over the grammar's alphabet or a mutated valid expression."""
    if rng.random() < 0.5:
        return bytes(rng.choice(ALPHABET) for _ in range(rng.randint(0, 40)))
    data = bytearray(rng.choice(VALID_SEEDS).encode())
    for _ in range(rng.randint(1, 4)):
        op = rng.randrange(3)
        pos = rng.randint(0, len(data))
        if op == 0:
            data[pos:pos] = bytes([rng.choice(ALPHABET)])
        elif op == 1 and data:
            del data[min(pos, len(data) - 1)]
        elif data:
            data[min(pos, len(data) - 1)] = rng.randrange(256)
    return bytes(data)
