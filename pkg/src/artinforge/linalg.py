"""Exact linear algebra over the rationals.

Forward elimination is fraction-free (Bareiss condensation on integer rows,
so every intermediate entry is a minor of the input matrix), and only the
final back-substitution for kernel vectors touches Fractions.  Matrices are
plain lists of rows; an explicit column count allows empty matrices.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm


def _int_rows(rows):
    """Scale each row by the lcm of its denominators; kernels are unchanged."""
    out = []
    for row in rows:
        denoms = [c.denominator for c in row if isinstance(c, Fraction)]
        if denoms:
            scale = lcm(*denoms) if len(denoms) > 1 else denoms[0]
            out.append([int(c * scale) if isinstance(c, Fraction) else c * scale for c in row])
        else:
            out.append(list(row))
    return out


def _echelon(rows, ncols):
    """Bareiss row echelon form. Returns (echelon rows, pivot columns)."""
    m = _int_rows(rows)
    nrows = len(m)
    pivots: list[int] = []
    prev = 1
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, nrows) if m[i][c]), None)
        if pr is None:
            continue
        if pr != r:
            m[r], m[pr] = m[pr], m[r]
        pivot = m[r][c]
        row_r = m[r]
        for i in range(r + 1, nrows):
            row_i = m[i]
            mic = row_i[c]
            for k in range(c + 1, ncols):
                row_i[k] = (pivot * row_i[k] - mic * row_r[k]) // prev
            row_i[c] = 0
        prev = pivot
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m[:r], pivots


def rank(rows, ncols: int) -> int:
    return len(_echelon(rows, ncols)[1])


def _primitive(vec):
    """Clear denominators and divide by the content; first nonzero entry > 0."""
    denoms = [c.denominator for c in vec if isinstance(c, Fraction)]
    scale = lcm(*denoms) if len(denoms) > 1 else (denoms[0] if denoms else 1)
    ints = [int(c * scale) for c in vec]
    g = 0
    for c in ints:
        g = gcd(g, c)
    if g > 1:
        ints = [c // g for c in ints]
    lead = next((c for c in ints if c), 0)
    if lead < 0:
        ints = [-c for c in ints]
    return ints


def kernel_basis(rows, ncols: int) -> list[list[int]]:
    """A basis of the right kernel, one primitive integer vector per free
    column, in ascending column order (deterministic)."""
    ech, pivots = _echelon(rows, ncols)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for f in free:
        x: list = [0] * ncols
        x[f] = 1
        for r in range(len(pivots) - 1, -1, -1):
            p = pivots[r]
            row = ech[r]
            s = 0
            for c in range(p + 1, ncols):
                if row[c] and x[c]:
                    s += row[c] * x[c]
            if s:
                x[p] = Fraction(-s, row[p])
            else:
                x[p] = 0
        basis.append(_primitive(x))
    return basis
