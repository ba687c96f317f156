"""Exact rational feasibility of strict sign systems via a slack program.

Whether a sign vector s is realized by some open chamber reduces to the LP

    maximize  d   subject to   s_i (h_i . x) >= d,  -1 <= x_j <= 1

whose optimum is positive exactly when the strict system has a solution; the
optimal x is then an interior point with maximum margin.  The simplex below
pivots on Fractions (Bland's rule, so degenerate bases cannot cycle) and is
meant as a small-scale oracle, not a bulk enumerator.
"""

from __future__ import annotations

from fractions import Fraction


def max_slack(normals, signs) -> tuple[Fraction, tuple[Fraction, ...]]:
    """Maximize d with signs_i * (normals_i . x) >= d over the unit box.

    Returns (d, x).  d > 0 exactly when the strict sign system is realizable,
    and x then satisfies every strict inequality with margin d.
    """
    m = len(normals)
    if m == 0:
        raise ValueError("need at least one normal")
    if len(signs) != m:
        raise ValueError("one sign per normal required")
    n = len(normals[0])

    # variables: u (n), v (n), d; x = u - v; all nonnegative, d >= 0 is sound
    # because x = 0, d = 0 is always feasible
    structural = 2 * n + 1
    rows = m + 2 * n
    cols = structural + rows

    tableau: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    for i in range(m):
        row = [Fraction(0)] * cols
        for j in range(n):
            coeff = Fraction(signs[i] * normals[i][j])
            row[j] = -coeff
            row[n + j] = coeff
        row[2 * n] = Fraction(1)
        row[structural + i] = Fraction(1)
        tableau.append(row)
        rhs.append(Fraction(0))
    for j in range(n):
        row = [Fraction(0)] * cols
        row[j] = Fraction(1)
        row[n + j] = Fraction(-1)
        row[structural + m + j] = Fraction(1)
        tableau.append(row)
        rhs.append(Fraction(1))
    for j in range(n):
        row = [Fraction(0)] * cols
        row[j] = Fraction(-1)
        row[n + j] = Fraction(1)
        row[structural + m + n + j] = Fraction(1)
        tableau.append(row)
        rhs.append(Fraction(1))

    reduced = [Fraction(0)] * cols
    reduced[2 * n] = Fraction(1)
    objective = Fraction(0)
    basis = list(range(structural, structural + rows))

    while True:
        entering = next((j for j in range(cols) if reduced[j] > 0), None)
        if entering is None:
            break
        leaving = None
        best_ratio = None
        for r in range(rows):
            a = tableau[r][entering]
            if a > 0:
                ratio = rhs[r] / a
                if (best_ratio is None or ratio < best_ratio
                        or (ratio == best_ratio and basis[r] < basis[leaving])):
                    best_ratio = ratio
                    leaving = r
        if leaving is None:
            raise ArithmeticError("slack program cannot be unbounded on a box")
        pivot = tableau[leaving][entering]
        tableau[leaving] = [a / pivot for a in tableau[leaving]]
        rhs[leaving] /= pivot
        for r in range(rows):
            if r != leaving and tableau[r][entering]:
                f = tableau[r][entering]
                tableau[r] = [a - f * b for a, b in zip(tableau[r], tableau[leaving])]
                rhs[r] -= f * rhs[leaving]
        f = reduced[entering]
        reduced = [a - f * b for a, b in zip(reduced, tableau[leaving])]
        objective += f * rhs[leaving]
        basis[leaving] = entering

    values = [Fraction(0)] * cols
    for r, b in enumerate(basis):
        values[b] = rhs[r]
    x = tuple(values[j] - values[n + j] for j in range(n))
    return objective, x


def realizable_sign_vector(normals, signs) -> bool:
    """True when some point satisfies signs_i * (normals_i . x) > 0 for all i."""
    slack, _ = max_slack(normals, signs)
    return slack > 0
