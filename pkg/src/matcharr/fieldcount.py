"""Exact point counts of arrangement complements over prime fields.

For a central integer arrangement, the number of points of F_q^dim avoiding
every hyperplane agrees with the characteristic polynomial evaluated at q once
q is a large enough prime (no new incidences appear modulo q).  Counts here
are exact for the given prime either way; the interpolation caller guards
against a bad prime with a control evaluation.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product


def primes_greater_than(lower: int, count: int) -> list[int]:
    """The `count` smallest primes strictly greater than `lower`."""
    out: list[int] = []
    x = max(lower, 1)
    while len(out) < count:
        x += 1
        f = 2
        while f * f <= x:
            if x % f == 0:
                break
            f += 1
        else:
            out.append(x)
    return out


def _canonical_rows_mod(normals, q: int) -> frozenset[tuple[int, ...]]:
    # reduce mod q and scale so the first nonzero entry is 1; drops nothing
    # because entries are tiny compared to q
    out = set()
    for h in normals:
        row = tuple(int(x) % q for x in h)
        first = next((x for x in row if x), None)
        if first is None:
            raise ValueError(f"normal vanishes modulo {q}")
        inv = pow(first, q - 2, q)
        out.add(tuple((x * inv) % q for x in row))
    return frozenset(out)


def _count_rec(rows: frozenset[tuple[int, ...]], dim: int, q: int, memo: dict) -> int:
    # deletion-restriction: N(A) = N(A - h) - N(A^h), exact over F_q
    if not rows:
        return q ** dim
    key = (dim, rows)
    cached = memo.get(key)
    if cached is not None:
        return cached
    ordered = sorted(rows)
    h = ordered[-1]
    rest = frozenset(ordered[:-1])
    deleted = _count_rec(rest, dim, q, memo)

    # restrict the remaining hyperplanes to {h . x = 0}: eliminate the pivot
    # coordinate, canonicalize, and count one dimension down
    p = next(i for i, x in enumerate(h) if x)
    inv = pow(h[p], q - 2, q)
    sub = set()
    alive = True
    for r in rest:
        factor = (r[p] * inv) % q
        g = tuple((r[j] - factor * h[j]) % q for j in range(dim) if j != p)
        first = next((x for x in g if x), None)
        if first is None:
            # r contains the whole subspace of h: nothing on h avoids r
            alive = False
            break
        s = pow(first, q - 2, q)
        sub.add(tuple((x * s) % q for x in g))
    restricted = _count_rec(frozenset(sub), dim - 1, q, memo) if alive else 0

    result = deleted - restricted
    memo[key] = result
    return result


def count_avoiding(normals, dim: int, q: int) -> int:
    """Points of F_q^dim on none of the hyperplanes {normal . x = 0 mod q}."""
    if not normals:
        return q ** dim
    return _count_rec(_canonical_rows_mod(normals, q), dim, q, {})


def count_avoiding_exhaustive(normals, dim: int, q: int) -> int:
    """Same count by walking all q^dim points; small cross-check oracle."""
    rows = [tuple(int(x) % q for x in h) for h in normals]
    count = 0
    for point in product(range(q), repeat=dim):
        for row in rows:
            if sum(c * x for c, x in zip(row, point)) % q == 0:
                break
        else:
            count += 1
    return count


def interpolate_polynomial(points: list[tuple[int, int]]) -> list[Fraction]:
    """Exact Lagrange interpolation; coefficients constant term first."""
    degree = len(points) - 1
    coeffs = [Fraction(0)] * (degree + 1)
    for i, (xi, yi) in enumerate(points):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, (xj, _) in enumerate(points):
            if j == i:
                continue
            nxt = [Fraction(0)] * (len(basis) + 1)
            for k, c in enumerate(basis):
                nxt[k + 1] += c
                nxt[k] -= c * xj
            basis = nxt
            denom *= xi - xj
        scale = Fraction(yi) / denom
        for k, c in enumerate(basis):
            coeffs[k] += scale * c
    return coeffs
