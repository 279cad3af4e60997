"""Exact symmetric-polynomial evaluation and the split-determinant identity.

Everything here is evaluation-based: complete homogeneous polynomials,
Schur polynomials through their h-determinant expansion, the staircase
closed forms, and the identity that sums det products over balanced
partitions.  Points are exact rationals (or integers), so every check the
test suite performs is bit-exact.
"""

from __future__ import annotations

from fractions import Fraction
from random import Random
from typing import Sequence

from .partitions import BalancedPartition, Shape, enumerate_balanced, iter_ssyt

Rational = int | Fraction

DEFAULT_SEED = 1729


def h_eval(m: int, point: Sequence[Rational]) -> Rational:
    """Sum of all degree-m monomials in the coordinates of ``point``.

    Zero for negative m, one for m = 0.  Uses the variable-by-variable
    recurrence h_m(x_1..x_j) = h_m(x_1..x_{j-1}) + x_j * h_{m-1}(x_1..x_j),
    which needs no division and stays integral at integer points.
    """
    if m < 0:
        return 0
    table: list[Rational] = [1] + [0] * m
    for x in point:
        for d in range(1, m + 1):
            table[d] += x * table[d - 1]
    return table[m]


def jt_row(m: int, k: int, point: Sequence[Rational]) -> tuple[Rational, ...]:
    """The length-k row (h_{m-k}, ..., h_{m-2}, h_{m-1}) evaluated at ``point``."""
    if len(point) != k:
        raise ValueError(f"point must have {k} coordinates")
    return tuple(h_eval(m - k + j, point) for j in range(k))


def _exact_div(num: Rational, den: Rational) -> Rational:
    if isinstance(num, int) and isinstance(den, int):
        q, r = divmod(num, den)
        if r:
            raise ArithmeticError("non-exact division during fraction-free elimination")
        return q
    return Fraction(num) / Fraction(den)


def det_exact(rows: Sequence[Sequence[Rational]]) -> Rational:
    """Exact determinant by fraction-free (Bareiss) elimination.

    Integer matrices stay in integers throughout; rational entries are
    handled exactly as well.  Raises ValueError on non-square input.
    """
    n = len(rows)
    mat = [list(r) for r in rows]
    if any(len(r) != n for r in mat):
        raise ValueError("determinant needs a square matrix")
    if n == 0:
        return 1
    sign = 1
    prev: Rational = 1
    for col in range(n - 1):
        pivot_row = next((r for r in range(col, n) if mat[r][col] != 0), None)
        if pivot_row is None:
            return 0
        if pivot_row != col:
            mat[col], mat[pivot_row] = mat[pivot_row], mat[col]
            sign = -sign
        pivot = mat[col][col]
        top = mat[col]
        for r in range(col + 1, n):
            row = mat[r]
            factor = row[col]
            for c in range(col + 1, n):
                row[c] = _exact_div(row[c] * pivot - factor * top[c], prev)
            row[col] = 0
        prev = pivot
    return sign * mat[n - 1][n - 1]


def schur_eval_jt(shape: Shape | Sequence[int], point: Sequence[Rational]) -> Rational:
    """Schur polynomial of ``shape`` at ``point`` via the h-determinant.

    With k = len(point), the shape is padded to k rows, turned back into
    its zig positions a_i = part_{k+1-i} + i, and the rows (h_{a-k}..h_{a-1})
    are stacked largest position on top.  Shapes with more than k positive
    rows evaluate to 0.
    """
    k = len(point)
    parts = shape.rows if isinstance(shape, Shape) else Shape(tuple(shape)).rows
    if len(parts) > k:
        return 0
    padded = tuple(parts) + (0,) * (k - len(parts))
    zigs = [padded[k - i] + i for i in range(1, k + 1)]
    return det_exact([jt_row(a, k, point) for a in reversed(zigs)])


def schur_eval_tableau(shape: Shape | Sequence[int], point: Sequence[Rational]) -> Rational:
    """Oracle Schur evaluation: sum the monomial of every semistandard filling.

    Each filling contributes the product of point[v - 1] over its entries v.
    Exhaustive, so only sensible for desk-scale shapes.
    """
    total: Rational = 0
    for filling in iter_ssyt(shape, len(point)):
        term: Rational = 1
        for row in filling:
            for v in row:
                term *= point[v - 1]
        total += term
    return total


def staircase_shapes(k: int) -> tuple[Shape, Shape]:
    """The staircase pair (k, k-1, ..., 1) and (k-1, k-2, ..., 0)."""
    if k < 1:
        raise ValueError("k must be positive")
    return Shape(tuple(range(k, 0, -1))), Shape(tuple(range(k - 1, -1, -1)))


def staircase_product_eval(k: int, point: Sequence[Rational]) -> Rational:
    """Closed form x_1 ... x_k * prod_{i<j} (x_i + x_j)^2.

    Equals the product of the two staircase Schur polynomials; at the
    all-ones point it collapses to 2^(k(k-1)).
    """
    if len(point) != k:
        raise ValueError(f"point must have {k} coordinates")
    result: Rational = 1
    for x in point:
        result *= x
    for i in range(k):
        for j in range(i + 1, k):
            s = point[i] + point[j]
            result *= s * s
    return result


def _family_size(vectors: Sequence[Sequence[Rational]]) -> int:
    if len(vectors) % 2:
        raise ValueError("need an even number of row vectors")
    k = len(vectors) // 2
    if any(len(v) != k for v in vectors):
        raise ValueError("every row vector must have length k")
    return k


def balanced_det_sum(
    vectors: Sequence[Sequence[Rational]], fixed_evens: Sequence[int] | frozenset[int]
) -> Rational:
    """Sum of det(zig stack) * det(zag stack) over constrained balanced partitions.

    ``vectors[m-1]`` is the row attached to position m in {1, ..., 2k}.  The
    sum ranges over balanced partitions whose zig side meets the even
    positions in exactly ``fixed_evens``; each side stacks its rows in
    increasing position order.  The result never depends on which even
    subset was fixed, which is the identity the verify suite exercises.
    """
    k = _family_size(vectors)
    total: Rational = 0
    for p in enumerate_balanced(k, fixed_evens):
        det_a = det_exact([vectors[i - 1] for i in p.a])
        det_b = det_exact([vectors[i - 1] for i in p.b])
        total += det_a * det_b
    return total


def parity_det_product(vectors: Sequence[Sequence[Rational]]) -> Rational:
    """det(odd-position stack) * det(even-position stack), positions increasing.

    This is the common value of :func:`balanced_det_sum` over every choice
    of fixed even subset.
    """
    _family_size(vectors)
    odd_stack = vectors[0::2]
    even_stack = vectors[1::2]
    return det_exact(odd_stack) * det_exact(even_stack)


def random_vector_family(
    k: int, rng: Random, low: int = -9, high: int = 9
) -> list[tuple[int, ...]]:
    """2k random integer row vectors of length k, drawn from [low, high]."""
    return [tuple(rng.randint(low, high) for _ in range(k)) for _ in range(2 * k)]


def jt_vector_family(k: int, point: Sequence[Rational]) -> list[tuple[Rational, ...]]:
    """The specialized rows for positions 1..2k: m-th vector is jt_row(m)."""
    return [jt_row(m, k, point) for m in range(1, 2 * k + 1)]
