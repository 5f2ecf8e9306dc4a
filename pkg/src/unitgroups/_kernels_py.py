"""Pure-Python (numpy) implementations of the table kernels.

Every function here has a twin with the same signature in ``_ckernels.pyx``.
Tables are square ``int32`` arrays of element indices.
"""

import numpy as np


def _weights(radix):
    w = np.ones(len(radix), dtype=np.int64)
    for k in range(1, len(radix)):
        w[k] = w[k - 1] * radix[k - 1]
    return w


def digit_add(x, y, radix):
    """Digitwise sum of mixed-radix encoded indices ``x`` and ``y``."""
    x = np.asarray(x, dtype=np.int64)
    y = np.asarray(y, dtype=np.int64)
    if all(b == 2 for b in radix):
        return x ^ y
    out = np.zeros(np.broadcast(x, y).shape, dtype=np.int64)
    for w, b in zip(_weights(radix), radix):
        out += ((x // w % b + y // w % b) % b) * w
    return out


def distributive_table(radix, basis_rows):
    """Full multiplication table from the rows of the additive generators.

    ``basis_rows[k]`` is the row of the element whose k-th digit is 1 and all
    others 0.  Row ``a`` is the sum of row ``a - w_k`` and ``basis_rows[k]``
    where ``k`` is the highest nonzero digit of ``a``.
    """
    radix = [int(b) for b in radix]
    n = int(np.prod(radix, dtype=np.int64))
    table = np.zeros((n, n), dtype=np.int32)
    w = 1
    for k, b in enumerate(radix):
        row = np.asarray(basis_rows[k], dtype=np.int64)
        for c in range(1, b):
            prev = table[(c - 1) * w:c * w].astype(np.int64)
            table[c * w:(c + 1) * w] = digit_add(prev, row[None, :], radix)
        w *= b
    return table


def unit_mask(mul, one):
    # Finite rings are Dedekind-finite: a right inverse is two-sided.
    return (np.asarray(mul) == one).any(axis=1)


def radical_mask(mul, units, one_minus):
    """x is radical iff 1 - r*x is a unit for every r."""
    units = np.asarray(units, dtype=bool)
    one_minus = np.asarray(one_minus, dtype=np.int64)
    n = mul.shape[0]
    out = np.empty(n, dtype=bool)
    step = max(1, (1 << 22) // max(n, 1))
    for lo in range(0, n, step):
        cols = mul[:, lo:lo + step]
        out[lo:lo + step] = units[one_minus[cols]].all(axis=0)
    return out


def element_orders(mul, identity):
    mul = np.asarray(mul)
    n = mul.shape[0]
    orders = np.zeros(n, dtype=np.int64)
    idx = np.arange(n)
    power = idx.copy()
    m = 1
    while True:
        hit = (power == identity) & (orders == 0)
        orders[hit] = m
        if (orders > 0).all():
            return orders
        power = mul[power, idx]
        m += 1
        if m > n:
            raise ValueError("table is not a group: some element has no finite order")


def closure(add, gens, zero):
    """Subset generated from ``{zero}`` by the binary table ``add`` and ``gens``.

    Returns a sorted int64 array.  For a group table this is the subgroup
    generated; for a ring's additive table it is the additive span.
    """
    add = np.asarray(add)
    n = add.shape[0]
    member = np.zeros(n, dtype=bool)
    member[zero] = True
    gens = [int(g) for g in gens]
    frontier = np.array([zero], dtype=np.int64)
    while frontier.size:
        new = np.unique(add[np.ix_(frontier, gens)].ravel()) if gens else frontier[:0]
        new = new[~member[new]]
        member[new] = True
        frontier = new
    return np.flatnonzero(member).astype(np.int64)
