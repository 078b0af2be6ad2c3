"""Independent oracles for the test suite.

Everything here is deliberately naive: brute-force enumeration and textbook
formulas, no shared code with the library beyond stdlib.  Values asserted in
the tests are computed by these oracles at run time, not copied from the
library's own output.
"""

from fractions import Fraction
from itertools import combinations, permutations
from math import comb, factorial


def brute_derangements(n):
    """Number of fixed-point-free permutations of n letters, by enumeration."""
    if n == 0:
        return 1
    return sum(1 for p in permutations(range(n))
               if all(p[i] != i for i in range(n)))


def rtt_multiplicities(n):
    """Eigenvalue -> multiplicity for the random-to-top operator on all
    orderings of n letters: moving to eigenvalue k counts the orderings
    fixing a chosen k-set minus corrections, i.e. C(n,k) * D(n-k)."""
    return {k: comb(n, k) * brute_derangements(n - k) for k in range(n + 1)}


def brute_flag_count(leq):
    """Number of maximal chains bottom..top of a poset given by a boolean
    order matrix, by depth-first search."""
    n = len(leq)
    bottom = next(i for i in range(n) if all(leq[i][j] for j in range(n)))
    top = next(i for i in range(n) if all(leq[j][i] for j in range(n)))

    def covers(x):
        ups = [y for y in range(n) if y != x and leq[x][y]]
        return [y for y in ups if not any(z != y and z != x and leq[x][z] and leq[z][y] for z in ups)]

    def count(x):
        if x == top:
            return 1
        return sum(count(y) for y in covers(x))

    return count(bottom)


def brute_mobius(leq, x, y):
    """Mobius function by the defining recursion, no memoization."""
    if x == y:
        return 1
    if not leq[x][y]:
        return 0
    return -sum(brute_mobius(leq, x, z) for z in range(len(leq))
                if leq[x][z] and leq[z][y] and z != y)


def boolean_leq(n):
    subs = sorted((frozenset(c) for r in range(n + 1)
                   for c in combinations(range(n), r)),
                  key=lambda s: (len(s), sorted(s)))
    return [[a <= b for b in subs] for a in subs], subs


def check_lrb_table(mul):
    """x*x == x and x*y*x == x*y for every pair, directly on the table."""
    n = len(mul)
    for x in range(n):
        if mul[x][x] != x:
            return False
        for y in range(n):
            xy = mul[x][y]
            if mul[xy][x] != xy:
                return False
    return True


def left_ideal(mul, x):
    return frozenset(mul[b][x] for b in range(len(mul)))


def brute_supports(mul):
    """Distinct principal left ideals, and the ideal of each element."""
    ideals = sorted({left_ideal(mul, x) for x in range(len(mul))},
                    key=lambda s: (len(s), min(s)))
    return ideals, [ideals.index(left_ideal(mul, x)) for x in range(len(mul))]


def fixed_points(perm):
    return sum(1 for i, v in enumerate(perm) if v == i)


def sn_class_reps(n):
    """One permutation per cycle type of S_n, smallest-first order of types."""
    seen = {}
    for p in permutations(range(n)):
        t = _cycle_type(p)
        if t not in seen:
            seen[t] = p
    return [seen[t] for t in sorted(seen)]


def _cycle_type(p):
    n = len(p)
    seen = [False] * n
    lens = []
    for i in range(n):
        if seen[i]:
            continue
        j, c = i, 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            c += 1
        lens.append(c)
    return tuple(sorted(lens, reverse=True))


# --- exact dense helpers, local to the oracles

def _rref_frac(rows, ncols):
    R, piv = [], []
    for row in rows:
        row = [Fraction(x) for x in row]
        for r, c in zip(R, piv):
            f = row[c]
            if f:
                row = [a - f * b for a, b in zip(row, r)]
        lead = next((j for j in range(ncols) if row[j]), None)
        if lead is None:
            continue
        inv = row[lead]
        row = [a / inv for a in row]
        for i, r in enumerate(R):
            f = r[lead]
            if f:
                R[i] = [a - f * b for a, b in zip(r, row)]
        R.append(row)
        piv.append(lead)
    order = sorted(range(len(piv)), key=lambda i: piv[i])
    return [R[i] for i in order], [piv[i] for i in order]


def _kernel_basis(M):
    """Column-vector basis of ker M for a square Fraction matrix."""
    n = len(M)
    R, piv = _rref_frac(M, n)
    free = [j for j in range(n) if j not in piv]
    basis = []
    for j in free:
        v = [Fraction(0)] * n
        v[j] = Fraction(1)
        for row, c in zip(R, piv):
            v[c] = -row[j]
        basis.append(v)
    return basis


def _solve_in_span(basis, targets):
    """Coordinates of each target vector in the span of `basis`; raises if a
    target falls outside.  Returns the matrix A with columns the coordinate
    vectors, as rows A[i][t]."""
    n = len(basis[0])
    k = len(basis)
    aug = [[basis[i][r] for i in range(k)] + [t[r] for t in targets]
           for r in range(n)]
    R, piv = _rref_frac(aug, k + len(targets))
    assert piv[:k] == list(range(k)) and len(piv) == k, "target outside the span"
    A = [[Fraction(0)] * len(targets) for _ in range(k)]
    for row, c in zip(R, piv):
        for t in range(len(targets)):
            A[c][t] = row[k + t]
    return A


def rtt_kernel_character(n, reps):
    """Character values of S_n on the kernel of the random-to-top operator
    over all n! orderings, one value per permutation in reps.  Built from
    scratch: explicit operator, explicit kernel, explicit induced action."""
    orderings = list(permutations(range(n)))
    idx = {o: i for i, o in enumerate(orderings)}
    N = len(orderings)
    M = [[Fraction(0)] * N for _ in range(N)]
    for j, o in enumerate(orderings):
        for a in range(n):
            t = (a,) + tuple(x for x in o if x != a)
            M[idx[t]][j] += 1
    kernel = _kernel_basis(M)
    values = []
    for p in reps:
        # relabel letters; vectors push forward by v'[p.o] = v[o]
        moved = []
        for v in kernel:
            w = [Fraction(0)] * N
            for o, c in zip(orderings, v):
                w[idx[tuple(p[x] for x in o)]] = c
            moved.append(w)
        A = _solve_in_span(kernel, moved)
        values.append(sum(A[i][i] for i in range(len(kernel))))
    return values
