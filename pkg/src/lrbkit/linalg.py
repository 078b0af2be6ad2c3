"""Exact dense linear algebra.

Matrices are lists of row lists.  Entries are Fractions by default; any type
with field arithmetic via operators and truthiness as the zero test works
(see fields.FpElt).  Pivoting is always "first nonzero from the left, rows in
the order given", so results are deterministic.

Integer-only helpers (rank_int, elementary_divisors) use fraction-free
arithmetic and are the fast path for boundary matrices.
"""

from fractions import Fraction


def rref(rows, ncols):
    """Reduced row echelon form of the span of `rows`.

    Returns (R, pivots): R[i] has a leading 1 at column pivots[i], zeros in
    every other pivot column, and pivots are strictly increasing.
    """
    R = []
    pivots = []
    for row in rows:
        row = list(row)
        for r, c in zip(R, pivots):
            f = row[c]
            if f:
                row = [a - f * b for a, b in zip(row, r)]
        lead = None
        for j in range(ncols):
            if row[j]:
                lead = j
                break
        if lead is None:
            continue
        inv = row[lead]
        row = [a / inv for a in row]
        for i in range(len(R)):
            f = R[i][lead]
            if f:
                R[i] = [a - f * b for a, b in zip(R[i], row)]
        R.append(row)
        pivots.append(lead)
    order = sorted(range(len(R)), key=lambda i: pivots[i])
    return [R[i] for i in order], [pivots[i] for i in order]


def reduce_vector(v, R, pivots):
    """Reduce v against an RREF basis, zeroing the pivot coordinates."""
    v = list(v)
    for r, c in zip(R, pivots):
        f = v[c]
        if f:
            v = [a - f * b for a, b in zip(v, r)]
    return v


def coords_in_rref(v, R, pivots, check=True):
    """Coordinates of v in the RREF basis R.  v must lie in the row span."""
    coords = [v[c] for c in pivots]
    if check:
        rem = list(v)
        for f, r in zip(coords, R):
            if f:
                rem = [a - f * b for a, b in zip(rem, r)]
        assert not any(rem), "vector is not in the span"
    return coords


def rank(rows, ncols):
    return len(rref(rows, ncols)[0])


def rank_int(rows, ncols):
    """Rank of an integer matrix, by fraction-free (Bareiss) elimination."""
    M = [list(r) for r in rows]
    m = len(M)
    r = 0
    prev = 1
    for c in range(ncols):
        if r == m:
            break
        piv = None
        for i in range(r, m):
            if M[i][c]:
                piv = i
                break
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        row_r = M[r]
        g = row_r[c]
        for i in range(r + 1, m):
            row_i = M[i]
            f = row_i[c]
            for j in range(c + 1, ncols):
                row_i[j] = (g * row_i[j] - f * row_r[j]) // prev
            row_i[c] = 0
        prev = M[r][c]
        r += 1
    return r


def nullspace(rows, ncols, one=Fraction(1), zero=Fraction(0)):
    """Basis of {x : for every row r, sum_j r[j] x[j] = 0}, in RREF."""
    R, pivots = rref(rows, ncols)
    pivot_set = set(pivots)
    free = [j for j in range(ncols) if j not in pivot_set]
    basis = []
    for j in free:
        x = [zero] * ncols
        x[j] = one
        for r, c in zip(R, pivots):
            if r[j]:
                x[c] = -r[j]
        basis.append(x)
    return rref(basis, ncols)[0] if basis else []


def elementary_divisors(rows, ncols):
    """Elementary divisors (positive, each dividing the next) of an integer
    matrix, by row/column reduction to Smith normal form."""
    M = [list(map(int, r)) for r in rows]
    m = len(M)
    if m == 0 or ncols == 0:
        return []
    divisors = []
    t = 0
    while t < min(m, ncols):
        # locate a nonzero entry of minimal absolute value in M[t:, t:]
        best = None
        for i in range(t, m):
            for j in range(t, ncols):
                a = M[i][j]
                if a and (best is None or abs(a) < abs(M[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        i0, j0 = best
        M[t], M[i0] = M[i0], M[t]
        for row in M:
            row[t], row[j0] = row[j0], row[t]
        dirty = False
        for i in range(t + 1, m):
            q = M[i][t] // M[t][t]
            if q:
                M[i] = [a - q * b for a, b in zip(M[i], M[t])]
            if M[i][t]:
                dirty = True
        for j in range(t + 1, ncols):
            q = M[t][j] // M[t][t]
            if q:
                for row in M:
                    row[j] -= q * row[t]
            if M[t][j]:
                dirty = True
        if dirty:
            continue
        # enforce the divisibility chain
        d = abs(M[t][t])
        bad = None
        for i in range(t + 1, m):
            for j in range(t + 1, ncols):
                if M[i][j] % d:
                    bad = i
                    break
            if bad is not None:
                break
        if bad is not None:
            M[t] = [a + b for a, b in zip(M[t], M[bad])]
            continue
        divisors.append(d)
        t += 1
    return divisors


def mat_mul(A, B, ncols_b):
    """Product of small dense matrices (lists of rows)."""
    out = []
    for row in A:
        acc = [sum(row[k] * B[k][j] for k in range(len(row))) for j in range(ncols_b)]
        out.append(acc)
    return out
