"""Exact integer chamber enumeration for central hyperplane arrangements.

Hyperplanes are inserted one at a time.  A chamber of the partial arrangement
whose witness lies off the new hyperplane h keeps its witness and extends its
sign vector by the sign of h there.  Chambers that h cuts are recovered from
the restriction: the prior normals are projected onto an integer basis of
ker(h) and the chambers of that lower-dimensional arrangement are enumerated
recursively.  Each restriction chamber point p lifts to the witness pair
M*p + h and M*p - h with M = 1 + max_j |h_j . h|, which lie strictly on
opposite sides of h and on the same side of every prior hyperplane as p:

    h_j . (M*p +- h) = M (h_j . p) +- (h_j . h)

is dominated by the first term when h_j . p != 0, and otherwise equals
+-(h_j . h), nonzero because a prior normal vanishing on all of ker(h) would
be parallel to h.  Every chamber of the extended arrangement either contains
an old witness or has a boundary facet inside h whose relative interior is a
restriction chamber, so the construction is complete.

All sign decisions are exact.  Matrices use int64 when products provably fit
and fall back to exact arbitrary-precision object arrays otherwise.
"""

from __future__ import annotations

from functools import cmp_to_key
from math import gcd

import numpy as np

# products below this fit int64 with headroom
_SAFE = 1 << 62


def _maxabs(arr) -> int:
    if arr.size == 0:
        return 0
    return int(np.abs(arr).max())


def _signs(arr) -> np.ndarray:
    return (np.where(arr > 0, 1, np.where(arr < 0, -1, 0))).astype(np.int8)


def _as_matrix(rows, dim: int) -> np.ndarray:
    if not rows:
        return np.zeros((0, dim), dtype=np.int64)
    mat = np.array(rows, dtype=object)
    return _downcast(mat)


def _downcast(arr: np.ndarray) -> np.ndarray:
    if arr.dtype == object and (arr.size == 0 or _maxabs(arr) < _SAFE):
        return arr.astype(np.int64)
    return arr


def _imatmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Exact integer matrix product: int64 fast path, object fallback."""
    inner = a.shape[-1]
    if (a.dtype == np.int64 and b.dtype == np.int64
            and (inner == 0 or _maxabs(a) * _maxabs(b) * inner < _SAFE)):
        return a @ b
    return a.astype(object) @ b.astype(object)


def _combine(p: np.ndarray, m: int, h: np.ndarray, sign: int) -> np.ndarray:
    """m * p + sign * h, exactly."""
    if (p.dtype == np.int64 and h.dtype == np.int64
            and _maxabs(p) * m + _maxabs(h) < _SAFE):
        return m * p + sign * h
    return m * p.astype(object) + sign * h.astype(object)


def _primitive(vec) -> tuple[int, ...]:
    g = 0
    for x in vec:
        g = gcd(g, abs(int(x)))
    out = tuple(int(x) // g for x in vec) if g > 1 else tuple(int(x) for x in vec)
    for x in out:
        if x:
            return out if x > 0 else tuple(-y for y in out)
    return out


def _dedup_rows(rows) -> list[tuple[int, ...]]:
    seen = set()
    out = []
    for r in rows:
        p = _primitive(r)
        if any(p) and p not in seen:
            seen.add(p)
            out.append(p)
    return out


def _kernel_basis(h: tuple[int, ...]) -> np.ndarray:
    """Columns form a rational basis of ker(h): b_j = h_p e_j - h_j e_p."""
    dim = len(h)
    p = next(i for i, x in enumerate(h) if x)
    basis = np.zeros((dim, dim - 1), dtype=object)
    col = 0
    for j in range(dim):
        if j == p:
            continue
        g = gcd(abs(h[p]), abs(h[j])) or 1
        basis[j, col] = h[p] // g
        basis[p, col] = -h[j] // g
        col += 1
    return _downcast(basis)


def _ray_cmp(a, b) -> int:
    # circular order: upper half plane (y > 0, or y == 0 and x > 0) first,
    # then counterclockwise by exact cross product
    ua = 0 if (a[1] > 0 or (a[1] == 0 and a[0] > 0)) else 1
    ub = 0 if (b[1] > 0 or (b[1] == 0 and b[0] > 0)) else 1
    if ua != ub:
        return -1 if ua < ub else 1
    cross = a[0] * b[1] - a[1] * b[0]
    if cross > 0:
        return -1
    if cross < 0:
        return 1
    return 0


def _fan_points_2d(rows) -> list[tuple[int, int]]:
    # chambers of a central line arrangement in the plane: sort the 2k rays of
    # the k lines circularly; each chamber is the open sector between two
    # consecutive rays and contains their sum
    if len(rows) == 1:
        (a, b), = rows
        return [(a, b), (-a, -b)]
    rays = set()
    for a, b in rows:
        rays.add((-b, a))
        rays.add((b, -a))
    ordered = sorted(rays, key=cmp_to_key(_ray_cmp))
    k = len(ordered)
    return [(ordered[i][0] + ordered[(i + 1) % k][0],
             ordered[i][1] + ordered[(i + 1) % k][1]) for i in range(k)]


def _chambers(rows: tuple[tuple[int, ...], ...], dim: int):
    """Sign matrix (int8) and witness matrix for the chambers of `rows`.

    rows must be primitive, nonzero, and pairwise non-parallel.  Sign columns
    follow the order of rows; chamber order is unspecified here.
    """
    if not rows:
        return np.zeros((1, 0), dtype=np.int8), np.zeros((1, dim), dtype=np.int64)
    mat = _as_matrix(list(rows), dim)
    if dim == 1:
        witnesses = np.array([[1], [-1]], dtype=np.int64)
    elif dim == 2:
        witnesses = _as_matrix(_fan_points_2d(rows), dim)
    else:
        return _chambers_incremental(rows, dim)
    signs = _signs(_imatmul(witnesses, mat.T))
    assert not (signs == 0).any()
    return signs, witnesses


def _chambers_incremental(rows: tuple[tuple[int, ...], ...], dim: int):
    signs = np.zeros((1, 0), dtype=np.int8)
    witnesses = np.zeros((1, dim), dtype=np.int64)
    for t, h in enumerate(rows):
        hv = _as_matrix([h], dim)[0]
        prior = _as_matrix(list(rows[:t]), dim)

        # chambers whose witness avoids h survive on their own side
        dots = _imatmul(witnesses, hv.reshape(-1, 1))[:, 0]
        keep = dots != 0
        kept_signs = np.hstack([signs[keep], _signs(dots[keep]).reshape(-1, 1)])
        kept_witnesses = witnesses[keep]

        # chambers cut by h: lift every chamber of the restriction to h
        basis = _kernel_basis(h)
        sub_rows = tuple(_dedup_rows(_imatmul(prior, basis).tolist())) if t else ()
        _, sub_points = _chambers(sub_rows, dim - 1)
        on_h = _downcast(_imatmul(sub_points, basis.T))
        if t:
            scale = 1 + _maxabs(_imatmul(prior, hv.reshape(-1, 1)))
            prior_dots = _imatmul(on_h, prior.T)
            prior_signs = _signs(prior_dots)
            assert not (prior_signs == 0).any()
        else:
            scale = 1
            prior_signs = np.zeros((len(on_h), 0), dtype=np.int8)
        lifted = []
        lifted_signs = []
        for side in (1, -1):
            lifted.append(_combine(on_h, scale, hv, side))
            lifted_signs.append(np.hstack([
                prior_signs,
                np.full((len(on_h), 1), side, dtype=np.int8),
            ]))

        all_signs = np.vstack([kept_signs] + lifted_signs)
        stacks = [kept_witnesses] + lifted
        if any(w.dtype == object for w in stacks):
            stacks = [w.astype(object) for w in stacks]
        all_witnesses = _downcast(np.vstack(stacks))

        # a cut chamber's surviving half appears both as a kept witness and as
        # a lift; unique() keeps the first occurrence, i.e. the kept witness
        uniq, first = np.unique(all_signs, axis=0, return_index=True)
        signs = uniq
        witnesses = all_witnesses[first]
    return signs, witnesses


def enumerate_chambers(normals, dim: int):
    """Chambers of the central arrangement with the given integer normals.

    normals: sequence of nonzero, pairwise non-parallel integer vectors.
    Returns (signs, witnesses): an int8 matrix with one +-1 row per chamber
    (columns in the order of `normals`) and the matching integer witness
    matrix, rows sorted lexicographically by sign vector (-1 before +1).
    Each witness w satisfies sign(normal_i . w) = signs_i exactly.
    """
    rows = tuple(tuple(int(x) for x in v) for v in normals)
    for r in rows:
        if not any(r):
            raise ValueError("zero normal vector")
    if len(set(_primitive(r) for r in rows)) != len(rows):
        raise ValueError("parallel or duplicate normals")
    signs, witnesses = _chambers(rows, dim)
    if len(rows):
        order = np.lexsort(signs.T[::-1])
        signs = signs[order]
        witnesses = witnesses[order]
    return signs, witnesses
