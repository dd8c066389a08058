"""Dense linear algebra over the coefficient field K_m.

Matrices are nested lists of FieldScalar.  Everything is exact Gaussian
elimination; sizes stay small (dozens of rows) at desk scale.
"""

from __future__ import annotations


def rref(matrix, field):
    """Reduced row echelon form; returns (rows, pivot column indices)."""
    m = [list(row) for row in matrix]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pr = next((i for i in range(r, nrows) if m[i][c]), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = m[r][c].inverse()
        m[r] = [x * inv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m, pivots


def rank(matrix, field):
    return len(rref(matrix, field)[1])


def det(matrix, field):
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("determinant of a non-square matrix")
    m = [list(row) for row in matrix]
    out = field.one()
    for c in range(n):
        pr = next((i for i in range(c, n) if m[i][c]), None)
        if pr is None:
            return field.zero()
        if pr != c:
            m[c], m[pr] = m[pr], m[c]
            out = -out
        out = out * m[c][c]
        inv = m[c][c].inverse()
        for i in range(c + 1, n):
            if m[i][c]:
                f = m[i][c] * inv
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return out


def inverse(matrix, field):
    """Inverse of a square matrix, or None if singular."""
    n = len(matrix)
    aug = [list(row) + [field.one() if i == j else field.zero()
                        for j in range(n)]
           for i, row in enumerate(matrix)]
    red, pivots = rref(aug, field)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        return None
    return [row[n:] for row in red[:n]]


def kernel_basis(matrix, field):
    """Basis of the right kernel, as column vectors (lists)."""
    nrows = len(matrix)
    ncols = len(matrix[0]) if nrows else 0
    if ncols == 0:
        return []
    red, pivots = rref(matrix, field)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for fcol in free:
        vec = [field.zero()] * ncols
        vec[fcol] = field.one()
        for r, pc in enumerate(pivots):
            vec[pc] = -red[r][fcol]
        basis.append(vec)
    return basis


def sparse_kernel_basis(rows, ncols, field):
    """Basis of the right kernel of a sparse system.

    rows: iterable of {column: FieldScalar} dicts.  Intended for the large
    but very sparse intertwining systems, where dense rref is wasteful.
    """
    pivots = {}  # pivot column -> normalized row dict (pivot entry == 1)
    # sparsest rows first: keeps fill-in during elimination down
    pending = sorted(({c: v for c, v in raw.items() if v} for raw in rows),
                     key=len)
    for row in pending:
        while row:
            c = min(row)
            prow = pivots.get(c)
            if prow is None:
                inv = row.pop(c).inverse()
                pivots[c] = {cc: v * inv for cc, v in row.items()}
                break
            f = row.pop(c)
            for cc, v in prow.items():
                nv = row.get(cc)
                nv = -(f * v) if nv is None else nv - f * v
                if nv:
                    row[cc] = nv
                else:
                    row.pop(cc, None)
    # back-substitute so every pivot row involves only free columns
    for c in sorted(pivots, reverse=True):
        prow = pivots[c]
        hit = [cc for cc in prow if cc in pivots]
        for cc in hit:
            f = prow.pop(cc)
            for c2, v in pivots[cc].items():
                nv = prow.get(c2)
                nv = -(f * v) if nv is None else nv - f * v
                if nv:
                    prow[c2] = nv
                else:
                    prow.pop(c2, None)
    basis = []
    for fc in range(ncols):
        if fc in pivots:
            continue
        vec = [field.zero()] * ncols
        vec[fc] = field.one()
        for pc, prow in pivots.items():
            if fc in prow:
                vec[pc] = -prow[fc]
        basis.append(vec)
    return basis


def solve(matrix, rhs, field):
    """One solution of matrix @ x = rhs, or None if inconsistent."""
    nrows = len(matrix)
    ncols = len(matrix[0]) if nrows else 0
    aug = [list(matrix[i]) + [rhs[i]] for i in range(nrows)]
    red, pivots = rref(aug, field)
    if ncols in pivots:
        return None
    x = [field.zero()] * ncols
    for r, pc in enumerate(pivots):
        x[pc] = red[r][ncols]
    return x
