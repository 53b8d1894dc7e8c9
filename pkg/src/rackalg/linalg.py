"""Exact linear algebra over Q, Q(zeta_N) and Z.

Sparse vectors are dicts ``{index: scalar}`` with no zero values.
Rational matrices are reduced with FLINT (python-flint) when available;
anything else goes through a pure-Python Gauss-Jordan elimination.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .cyclotomic import CycScalar

try:  # pragma: no cover - import guard
    import flint
except ImportError:  # pragma: no cover
    flint = None

USE_FLINT = flint is not None


def _is_rational(x) -> bool:
    if isinstance(x, (int, Fraction)):
        return True
    if isinstance(x, CycScalar):
        return x.is_rational()
    return flint is not None and isinstance(x, flint.fmpq)


def _to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, CycScalar):
        return x.c[0]
    return Fraction(int(x.p), int(x.q))


def _fmpq(x):
    if isinstance(x, int):
        return x
    if isinstance(x, CycScalar):
        x = x.c[0]
    if x.denominator == 1:
        return int(x.numerator)
    return flint.fmpq(int(x.numerator), int(x.denominator))


def all_rational(vectors: Iterable[dict]) -> bool:
    return all(_is_rational(v) for vec in vectors for v in vec.values())


# ---------------------------------------------------------------------
# column echelon interface


def column_rref(columns: Sequence[dict], nrows: int, backend: str = "auto"):
    """Greedy pivot columns and coordinates of every column in them.

    Returns ``(pivots, coords)``: ``pivots`` lists the indices of the
    lexicographically first maximal independent set of columns, and
    ``coords[c]`` is a sparse dict {k: coefficient} with
    ``columns[c] = sum_k coefficient * columns[pivots[k]]``.
    """
    if backend == "auto":
        backend = "flint" if USE_FLINT and all_rational(columns) else "python"
    if backend == "flint":
        return _column_rref_flint(columns, nrows)
    return _column_rref_python(columns, nrows)


def _column_rref_flint(columns, nrows):
    ncols = len(columns)
    if ncols == 0:
        return [], []
    if nrows == 0:
        return [], [{} for _ in columns]
    M = flint.fmpq_mat(nrows, ncols)
    for c, col in enumerate(columns):
        for r, v in col.items():
            M[r, c] = _fmpq(v)
    R, rank = M.rref()
    entries = R.entries()
    pivots = []
    for r in range(rank):
        base = r * ncols
        start = pivots[-1] + 1 if pivots else 0
        c = start
        while entries[base + c] == 0:
            c += 1
        pivots.append(c)
    coords = [dict() for _ in range(ncols)]
    for k in range(rank):
        base = k * ncols
        for c in range(ncols):
            v = entries[base + c]
            if v != 0:
                coords[c][k] = Fraction(int(v.p), int(v.q))
    return pivots, coords


def _column_rref_python(columns, nrows):
    """Gauss-Jordan on row dicts; works for any exact field type."""
    ncols = len(columns)
    rows: list[dict] = [dict() for _ in range(nrows)]
    for c, col in enumerate(columns):
        for r, v in col.items():
            if v != 0:
                rows[r][c] = Fraction(v) if isinstance(v, int) else v
    pivots = []
    pivot_rows: list[dict] = []
    remaining = [r for r in rows if r]
    for c in range(ncols):
        idx = next((i for i, r in enumerate(remaining) if c in r), None)
        if idx is None:
            continue
        prow = remaining.pop(idx)
        inv = 1 / prow[c] if not isinstance(prow[c], CycScalar) else prow[c].inverse()
        prow = {k: v * inv for k, v in prow.items()}
        prow = {k: v for k, v in prow.items() if v != 0}
        for group in (remaining, pivot_rows):
            for i, r in enumerate(group):
                f = r.get(c)
                if f is not None and f != 0:
                    for k, v in prow.items():
                        nv = r.get(k, 0) - f * v
                        if nv == 0:
                            r.pop(k, None)
                        else:
                            r[k] = nv
        remaining = [r for r in remaining if r]
        pivots.append(c)
        pivot_rows.append(prow)
    coords = [dict() for _ in range(ncols)]
    for k, r in enumerate(pivot_rows):
        for c, v in r.items():
            coords[c][k] = v
    return pivots, coords


def rank(columns: Sequence[dict], nrows: int) -> int:
    if not columns:
        return 0
    if USE_FLINT and all_rational(columns):
        M = flint.fmpq_mat(nrows, len(columns))
        for c, col in enumerate(columns):
            for r, v in col.items():
                M[r, c] = _fmpq(v)
        return M.rank()
    return len(_column_rref_python(columns, nrows)[0])


def dense_to_columns(M: Sequence[Sequence]) -> tuple[list[dict], int]:
    nrows = len(M)
    ncols = len(M[0]) if nrows else 0
    cols = [dict() for _ in range(ncols)]
    for r, row in enumerate(M):
        for c, v in enumerate(row):
            if v != 0:
                cols[c][r] = v
    return cols, nrows


def in_span(pivot_columns: Sequence[dict], v: dict, nrows: int) -> bool:
    return rank(list(pivot_columns) + [v], nrows) == rank(list(pivot_columns), nrows)


# ---------------------------------------------------------------------
# integer Smith normal form


def smith_invariants(M: Sequence[Sequence[int]]) -> list[int]:
    """Nonzero invariant factors d1 | d2 | ... of an integer matrix."""
    A = [[int(x) for x in row] for row in M]
    m = len(A)
    n = len(A[0]) if m else 0
    diag = []
    t = 0
    while t < m and t < n:
        # pivot: smallest nonzero absolute value in the remaining block
        best = None
        for i in range(t, m):
            row = A[i]
            for j in range(t, n):
                v = row[j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        A[t], A[i] = A[i], A[t]
        if j != t:
            for row in A:
                row[t], row[j] = row[j], row[t]
        while True:
            p = A[t][t]
            done = True
            # clear column t
            for i in range(t + 1, m):
                v = A[i][t]
                if v:
                    q = v // p
                    if q:
                        ri, rt = A[i], A[t]
                        for k in range(t, n):
                            if rt[k]:
                                ri[k] -= q * rt[k]
                    if A[i][t]:
                        done = False
            # clear row t
            rt = A[t]
            for j in range(t + 1, n):
                v = rt[j]
                if v:
                    q = v // p
                    if q:
                        for row in A[t:]:
                            if row[t]:
                                row[j] -= q * row[t]
                    if rt[j]:
                        done = False
            if done:
                # divisibility of the rest
                bad = None
                for i in range(t + 1, m):
                    for j in range(t + 1, n):
                        if A[i][j] % p:
                            bad = i
                            break
                    if bad is not None:
                        break
                if bad is None:
                    break
                rb, rt = A[bad], A[t]
                for k in range(t, n):
                    rt[k] += rb[k]
                continue
            # move the smallest remaining entry of row/column t to the pivot
            best = (abs(A[t][t]), t, t)
            for i in range(t + 1, m):
                if A[i][t] and abs(A[i][t]) < best[0]:
                    best = (abs(A[i][t]), i, t)
            for j in range(t + 1, n):
                if A[t][j] and abs(A[t][j]) < best[0]:
                    best = (abs(A[t][j]), t, j)
            _, i, j = best
            if i != t:
                A[t], A[i] = A[i], A[t]
            if j != t:
                for row in A:
                    row[t], row[j] = row[j], row[t]
        diag.append(abs(A[t][t]))
        t += 1
    return diag


def integer_rank(M: Sequence[Sequence[int]]) -> int:
    if not M or not M[0]:
        return 0
    cols, nrows = dense_to_columns(M)
    return rank(cols, nrows)


def matmul(A: Sequence[Sequence], B: Sequence[Sequence]) -> list[list]:
    n = len(B[0]) if B else 0
    out = []
    for row in A:
        acc = [0] * n
        for k, a in enumerate(row):
            if a:
                bk = B[k]
                for j in range(n):
                    if bk[j]:
                        acc[j] += a * bk[j]
        out.append(acc)
    return out


def row_rref(rows: Sequence[dict], ncols: int):
    """Reduced row echelon form of sparse rows.

    Returns ``(pivots, prows)``: pivot columns in increasing order and
    the matching reduced rows (pivot entry 1, zero in other pivot columns).
    """
    columns = [dict() for _ in range(ncols)]
    for r, row in enumerate(rows):
        for c, v in row.items():
            if v != 0:
                columns[c][r] = v
    pivots, coords = _column_rref_python(columns, len(rows)) if not (
        USE_FLINT and all_rational(rows)) else _column_rref_flint(columns, len(rows))
    prows = [dict() for _ in pivots]
    for c, co in enumerate(coords):
        for k, v in co.items():
            prows[k][c] = v
    return pivots, prows
