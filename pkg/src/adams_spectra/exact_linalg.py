"""Division-free exact linear algebra over Q, Z and Z[q, q^-1].

Characteristic polynomials are computed by the Berkowitz iteration, which
uses only ring operations (+, -, *), so one implementation serves integer,
rational and Laurent-coefficient matrices alike.  Cost is about n^4/4 ring
multiplications for an n x n matrix.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence, Tuple


def berkowitz_charpoly(rows: Sequence[Sequence]) -> List:
    """Coefficients of det(xI - A), ascending in x, leading coefficient 1.

    Entries may be ints, Fractions or QLaurent values (any ring elements
    supporting mixed arithmetic with ints).
    """
    n = len(rows)
    for r in rows:
        if len(r) != n:
            raise ValueError("matrix must be square")
    if n == 0:
        return [1]
    # poly holds descending coefficients of the leading principal
    # submatrix's characteristic polynomial
    poly = [1, -rows[0][0]]
    for i in range(1, n):
        row = [rows[i][j] for j in range(i)]
        col = [rows[j][i] for j in range(i)]
        a = rows[i][i]
        # items = [1, -a, -R.C, -R.M.C, -R.M^2.C, ...]
        items = [1, -a]
        w = col
        for _ in range(i):
            items.append(-_dot(row, w))
            w = _mat_vec(rows, w, i)
        # lower-triangular Toeplitz multiply: new[u] = sum items[u-v]*poly[v]
        new = []
        for u in range(i + 2):
            acc = 0
            for v in range(max(0, u - len(items) + 1), min(u, i) + 1):
                acc = acc + items[u - v] * poly[v]
            new.append(acc)
        poly = new
    poly.reverse()
    return poly


def _dot(a, b):
    acc = 0
    for x, y in zip(a, b):
        acc = acc + x * y
    return acc


def _mat_vec(rows, w, size):
    return [_dot([rows[u][j] for j in range(size)], w) for u in range(size)]


def charpoly_from_roots(roots: Sequence) -> List:
    """Monic polynomial with the given roots, ascending coefficients."""
    poly = [1]
    for r in roots:
        poly = [0] + poly
        for i in range(len(poly) - 1):
            poly[i] = poly[i] - r * poly[i + 1]
    return poly


def factor_plus_minus_one(poly: Sequence[Fraction]) -> Tuple[int, int] | None:
    """Write a monic rational polynomial as (x-1)^a (x+1)^b if possible,
    returning (a, b), else None."""
    p = [Fraction(c) for c in poly]
    while p and p[-1] == 0:
        p.pop()
    if not p or p[-1] != 1:
        return None

    def value(at: int) -> Fraction:
        acc = Fraction(0)
        for c in reversed(p):
            acc = acc * at + c
        return acc

    counts = {1: 0, -1: 0}
    for root in (1, -1):
        while len(p) > 1 and value(root) == 0:
            out = []
            acc = p[-1]
            for i in range(len(p) - 2, -1, -1):
                out.append(acc)
                acc = p[i] + acc * root
            p = list(reversed(out))
            counts[root] += 1
    if len(p) != 1 or p[0] != 1:
        return None
    return counts[1], counts[-1]


def mat_mul(a: Sequence[Sequence], b: Sequence[Sequence]) -> List[List]:
    n, k = len(a), len(b)
    cols = len(b[0]) if b else 0
    out = [[0] * cols for _ in range(n)]
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for j, aij in enumerate(ai):
            if aij == 0:
                continue
            bj = b[j]
            for c in range(cols):
                if bj[c] != 0:
                    oi[c] = oi[c] + aij * bj[c]
    return out


def mat_sub(a: Sequence[Sequence], b: Sequence[Sequence]) -> List[List]:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_identity(n: int) -> List[List]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_is_zero(a: Sequence[Sequence]) -> bool:
    return all(x == 0 for row in a for x in row)
