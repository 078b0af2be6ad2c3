"""Order complexes of finite posets and the poset actions attached to an LRB.

The chain complex is the augmented simplicial chain complex of the order
complex: C_{-1} is spanned by the empty chain, C_d by the strictly
increasing (d+1)-tuples, and the boundary deletes entries with alternating
signs.  All homology here is reduced.  Group elements act on a poset by
order-preserving bijections, which permute the increasing tuples without
introducing signs; characters of the induced action on homology are
computed by lifting a homology basis, acting, and reducing back through
recorded row-echelon data.  Every character computation re-verifies the
Hopf trace identity (alternating sum of fixed chains = alternating sum of
homology traces) per conjugacy class, and every Mobius value is checked
against the reduced Euler characteristic of the open interval (Hall's
theorem).
"""

from fractions import Fraction

from .fields import QQ
from .linalg import coords_in_rref, elementary_divisors, nullspace, reduce_vector, rref
from .semigroup import FinitePoset, contraction, semigroup_order, support_lattice
from .symmetry import ClassFunction, permutation_character, pidentity, pinv, trivial_character

# Elementwise homology bookkeeping is exact but cubic-ish; complexes past
# this many chains in one degree are a sign the caller picked the wrong tool.
CHAIN_DEGREE_CAP = 200000


def poset_chains(P):
    """Chains of P by degree: {-1: [()], 0: vertices, 1: pairs, ...}.

    Degree d holds the strictly increasing (d+1)-tuples in lexicographic
    order.  The empty chain is always present, even for the empty poset.
    """
    chains = {-1: [()]}
    cur = [(i,) for i in range(P.size)]
    d = 0
    while cur:
        if len(cur) > CHAIN_DEGREE_CAP:
            raise ValueError("order complex too large: %d chains in degree %d" % (len(cur), d))
        chains[d] = cur
        nxt = []
        for c in cur:
            top = c[-1]
            for j in range(P.size):
                if P.lt(top, j):
                    nxt.append(c + (j,))
        cur = nxt
        d += 1
    return chains


def chain_count(P):
    """Number of chains of every degree >= 0 (the empty chain not counted),
    grouped by degree, without storing the chains.

    Counting by (top element, length) multiplicities: a chain's extensions
    depend only on its top.
    """
    counts = []
    cur = {i: 1 for i in range(P.size)}
    while cur:
        counts.append(sum(cur.values()))
        nxt = {}
        for top, mult in cur.items():
            for j in range(P.size):
                if P.lt(top, j):
                    nxt[j] = nxt.get(j, 0) + mult
        cur = nxt
    return counts


def reduced_euler_characteristic(P):
    """sum_{d >= -1} (-1)^d dim C_d = -1 + sum_d (-1)^d (number of d-chains)."""
    chi = -1
    for d, c in enumerate(chain_count(P)):
        chi += c if d % 2 == 0 else -c
    return chi


class AugmentedChainComplex:
    """Chain groups and boundary maps of the order complex of P over a field.

    boundary_rows(d) lists, for each d-chain, its boundary as a coordinate
    vector over the (d-1)-chains.  d^2 = 0 is asserted on construction.
    """

    def __init__(self, P, field=QQ):
        self.poset = P
        self.field = field
        self.chains = poset_chains(P)
        self.index = {d: {c: i for i, c in enumerate(cs)} for d, cs in self.chains.items()}
        self.top = max(self.chains)
        self._rows = {}
        for d in range(0, self.top + 1):
            self._rows[d] = self._build_rows(d)
        for d in range(0, self.top):
            self._assert_square_zero(d)

    def dim(self, d):
        return len(self.chains.get(d, ()))

    def _build_rows(self, d):
        one = self.field.one
        zero = self.field.zero
        lower = self.index[d - 1]
        m = len(lower)
        rows = []
        for c in self.chains[d]:
            row = [zero] * m
            sign = one
            for i in range(len(c)):
                face = c[:i] + c[i + 1:]
                row[lower[face]] += sign
                sign = -sign
            rows.append(row)
        return rows

    def boundary_rows(self, d):
        """Rows indexed by d-chains, coordinates over (d-1)-chains; the zero
        map outside the populated range."""
        if d in self._rows:
            return self._rows[d]
        return [[self.field.zero] * self.dim(d - 1) for _ in range(self.dim(d))]

    def _assert_square_zero(self, d):
        rows_hi = self._rows[d + 1]
        rows_lo = self._rows[d]
        m = self.dim(d - 1)
        zero = self.field.zero
        for row in rows_hi:
            acc = [zero] * m
            for j, f in enumerate(row):
                if f:
                    lo = rows_lo[j]
                    acc = [a + f * b for a, b in zip(acc, lo)]
            if any(acc):
                raise AssertionError("boundary squared is nonzero in degree %d" % (d + 1))

    def integer_boundary_rows(self, d):
        """Same matrix with integer entries (valid since entries are 0, +-1)."""
        lower = self.index[d - 1]
        m = len(lower)
        rows = []
        for c in self.chains.get(d, ()):
            row = [0] * m
            sign = 1
            for i in range(len(c)):
                face = c[:i] + c[i + 1:]
                row[lower[face]] += sign
                sign = -sign
            rows.append(row)
        return rows


def _transpose(rows, ncols):
    return [[row[j] for row in rows] for j in range(ncols)]


def reduced_homology(P, field=QQ):
    """Reduced homology dimensions {degree: dim}, nonzero degrees only.

    The empty poset gives {-1: 1}; a poset with a cone point gives {}.
    """
    cx = AugmentedChainComplex(P, field)
    ranks = {}
    for d in range(0, cx.top + 1):
        ranks[d] = len(rref(cx.boundary_rows(d), cx.dim(d - 1))[0])
    ranks[cx.top + 1] = 0
    dims = {}
    for d in range(-1, cx.top + 1):
        hd = cx.dim(d) - ranks.get(d, 0) - ranks.get(d + 1, 0)
        assert hd >= 0
        if hd:
            dims[d] = hd
    return dims


def homology_basis_data(cx, d):
    """Echelon data for H_d of the complex: (R_B, piv_B, R_H, piv_H).

    R_B spans the boundaries inside C_d; R_H rows are cycles reduced against
    R_B, in incremental echelon form, and represent a homology basis.  The
    two pivot sets are disjoint, so a cycle's homology coordinates are read
    off R_H pivots after killing its R_B part.
    """
    n = cx.dim(d)
    R_B, piv_B = rref(cx.boundary_rows(d + 1), n)
    bnd = cx.boundary_rows(d)
    cycles = nullspace(_transpose(bnd, cx.dim(d - 1)), n,
                       one=cx.field.one, zero=cx.field.zero) if n else []
    R_H, piv_H = [], []
    for z in cycles:
        z = reduce_vector(z, R_B, piv_B)
        z = reduce_vector(z, R_H, piv_H)
        j = next((k for k, v in enumerate(z) if v), None)
        if j is None:
            continue
        inv = cx.field.one / z[j]
        z = [inv * v for v in z]
        for i, r in enumerate(R_H):
            f = r[j]
            if f:
                R_H[i] = [a - f * b for a, b in zip(r, z)]
        pos = 0
        while pos < len(piv_H) and piv_H[pos] < j:
            pos += 1
        R_H.insert(pos, z)
        piv_H.insert(pos, j)
    return R_B, piv_B, R_H, piv_H


def _chain_image(chain, perm, idx):
    """Image of a chain tuple; entries stay in poset order because the map
    preserves order, so the image is again a stored chain."""
    img = tuple(perm[x] for x in chain)
    if img not in idx:
        raise ValueError("permutation is not order-preserving on %r" % (chain,))
    return img


def equivariant_homology_characters(P, perms, group):
    """Characters of `group` on every nonzero reduced homology group of P.

    perms[i] is the poset permutation of group.elements[i]; the map need not
    be injective.  Returns {degree: ClassFunction}.  Rational field only.
    Asserts, per conjugacy class, the Hopf trace identity against fixed
    chain counts.
    """
    cx = AugmentedChainComplex(P, QQ)
    data = {d: homology_basis_data(cx, d) for d in range(0, cx.top + 1)}
    chars = {}
    fixed = {}
    reps = group.class_reps()
    rep_perms = [perms[group.index[r]] for r in reps]
    for d in range(0, cx.top + 1):
        R_B, piv_B, R_H, piv_H = data[d]
        if not R_H:
            continue
        idx = cx.index[d]
        values = []
        for p in rep_perms:
            images = [idx[_chain_image(c, p, idx)] for c in cx.chains[d]]
            tr = Fraction(0)
            for k, h in enumerate(R_H):
                v = [Fraction(0)] * len(images)
                for i, f in enumerate(h):
                    if f:
                        v[images[i]] = f
                v = reduce_vector(v, R_B, piv_B)
                tr += coords_in_rref(v, R_H, piv_H)[k]
            values.append(tr)
        chars[d] = ClassFunction(group, values)
    if P.size == 0:
        chars[-1] = trivial_character(group)
    for ci, p in enumerate(rep_perms):
        lhs = Fraction(-1)  # the empty chain, degree -1
        sign = 1
        for d in range(0, cx.top + 1):
            idx = cx.index[d]
            lhs += sign * sum(1 for c in cx.chains[d] if _chain_image(c, p, idx) == c)
            sign = -sign
        rhs = Fraction(0)
        for d, chi in chars.items():
            rhs += chi.values[ci] if d % 2 == 0 else -chi.values[ci]
        assert lhs == rhs, "Hopf trace fails at class %d: %s != %s" % (ci, lhs, rhs)
    return chars


def equivariant_homology_character(P, perms, group, degree):
    """Character on one homology degree (zero class function if H vanishes)."""
    chars = equivariant_homology_characters(P, perms, group)
    if degree in chars:
        return chars[degree]
    from .symmetry import zero_class_function
    return zero_class_function(group)


def contragredient(chi):
    """chi*(g) = chi(g^{-1}); the character of the dual representation."""
    values = [chi.value_on(pinv(r)) for r in chi.group.class_reps()]
    return ClassFunction(chi.group, values)


def mobius(P, x, y):
    """Mobius function of the poset, memoized on P.

    The requested value is cross-checked against the reduced Euler
    characteristic of the open interval (Hall's theorem).
    """
    if not P.leq[x][y]:
        return 0
    cache = getattr(P, "_mobius_cache", None)
    if cache is None:
        cache = P._mobius_cache = {}
    val = _mobius_memo(P, x, y, cache)
    if x == y:
        return val
    inner = [z for z in range(P.size) if P.lt(x, z) and P.lt(z, y)]
    sub, _ = P.subposet(inner)
    assert val == reduced_euler_characteristic(sub), \
        "Mobius value disagrees with the open interval's Euler characteristic"
    return val


def _mobius_memo(P, x, y, cache):
    if x == y:
        return 1
    key = (x, y)
    if key not in cache:
        total = 0
        for z in range(P.size):
            if P.leq[x][z] and P.lt(z, y):
                total += _mobius_memo(P, x, z, cache)
        cache[key] = -total
    return cache[key]


def open_interval_poset(P, x, y):
    """The open interval (x, y) as a poset, with its index map into P."""
    inner = [z for z in range(P.size) if P.lt(x, z) and P.lt(z, y)]
    return P.subposet(inner)


def interval_homology_character(P, x, y, perms, group, degree):
    """Character of `group` on H_degree of the open interval (x, y).

    perms are permutations of P fixing x and y.  The closed cases follow the
    usual conventions: (x, x) carries a single class in degree -2 and a
    cover pair carries the empty complex, so both give the trivial character
    in their degree.  Returns (ClassFunction, dims dict).
    """
    for i, g in enumerate(perms):
        if g[x] != x or g[y] != y:
            raise ValueError("group element %d moves an interval endpoint" % i)
    if x == y:
        if degree == -2:
            return trivial_character(group), {-2: 1}
        from .symmetry import zero_class_function
        return zero_class_function(group), {-2: 1}
    sub, old = open_interval_poset(P, x, y)
    back = {o: i for i, o in enumerate(old)}
    sub_perms = [tuple(back[g[o]] for o in old) for g in perms]
    chars = equivariant_homology_characters(sub, sub_perms, group)
    dims = {d: int(c.dim()) for d, c in chars.items()}
    if degree in chars:
        return chars[degree], dims
    from .symmetry import zero_class_function
    return zero_class_function(group), dims


def poset_join(P, Q):
    """The ordinal join: everything in P below everything in Q."""
    n, m = P.size, Q.size
    leq = [[False] * (n + m) for _ in range(n + m)]
    for i in range(n):
        for j in range(n):
            leq[i][j] = P.leq[i][j]
    for i in range(m):
        for j in range(m):
            leq[n + i][n + j] = Q.leq[i][j]
    for i in range(n):
        for j in range(m):
            leq[i][n + j] = True
    return FinitePoset(leq, validate=False)


def join_homology_check(P, Q, field=QQ):
    """Check the chain-level and homology-level Kunneth identities for the
    ordinal join: C_q(P*Q) = sum_{i+j=q-1} C_i x C_j, and over a field
    H_q(P*Q) = sum_{i+j=q-1} H_i x H_j (reduced throughout).  Returns a
    report dict; raises on failure."""
    J = poset_join(P, Q)
    cp = {d: len(cs) for d, cs in poset_chains(P).items()}
    cq = {d: len(cs) for d, cs in poset_chains(Q).items()}
    cj = {d: len(cs) for d, cs in poset_chains(J).items()}
    top = max(cj)
    for q in range(-1, top + 1):
        want = sum(cp.get(i, 0) * cq.get(q - 1 - i, 0) for i in range(-1, q + 1))
        got = cj.get(q, 0)
        assert got == want, "chain Kunneth fails in degree %d: %d != %d" % (q, got, want)
    hp = reduced_homology(P, field)
    hq = reduced_homology(Q, field)
    hj = reduced_homology(J, field)
    pred = {}
    for i, a in hp.items():
        for j, b in hq.items():
            q = i + j + 1
            pred[q] = pred.get(q, 0) + a * b
    pred = {q: v for q, v in pred.items() if v}
    assert hj == pred, "homology Kunneth fails: %r != %r" % (hj, pred)
    return {"join_homology": hj, "left": hp, "right": hq, "chains": cj}


# ---------------------------------------------------------------------------
# poset actions attached to an LRB

def _below_y(S, y, X=None, lat=None, sm=None):
    """Elements of {x != y : y x = x}, optionally restricted to supports >= X."""
    out = []
    for x in range(S.size):
        if x != y and S.mul[y][x] == x:
            if X is None or lat.leq[X][sm.sigma[x]]:
                out.append(x)
    return out


def star_action_poset(S, X, y, H, lat=None, sm=None):
    """The poset {x < y} (supports >= X when X is not None) with the twisted
    H-action g * x = y g(x).

    H is a PermGroup of automorphisms of S stabilizing the support of y (and
    X).  Returns (poset, elements, star_perms) where elements maps poset
    index to semigroup element and star_perms aligns with H.elements.  The
    star maps are verified to be order-preserving bijections satisfying the
    action law.
    """
    if lat is None or sm is None:
        lat, sm = support_lattice(S)
    elems = _below_y(S, y, X, lat, sm)
    pos = {b: i for i, b in enumerate(elems)}
    leq = [[S.mul[b][a] == a for b in elems] for a in elems]
    P = FinitePoset(leq, labels=[S.label(b) for b in elems] if S.labels else None,
                    validate=False)
    star = []
    for g in H.elements:
        img = [S.mul[y][g[b]] for b in elems]
        if any(b not in pos for b in img):
            raise ValueError("star action leaves the poset")
        p = tuple(pos[b] for b in img)
        if sorted(p) != list(range(len(elems))):
            raise ValueError("star action is not a bijection")
        star.append(p)
    n = len(elems)
    for p in star:
        for a in range(n):
            for b in range(n):
                if P.leq[a][b] != P.leq[p[a]][p[b]]:
                    raise ValueError("star action is not order-preserving")
    index = {g: i for i, g in enumerate(H.elements)}
    from .symmetry import pcompose
    for i, g in enumerate(H.elements):
        for j, h in enumerate(H.elements):
            gh = index[pcompose(g, h)]
            if pcompose(star[i], star[j]) != star[gh]:
                raise ValueError("star maps do not compose as a group action")
    return P, elems, star


def support_rank(lat, X):
    """Height of a support in the support semilattice."""
    if lat.rank is not None:
        return lat.rank[X]
    return lat.poset().heights()[X]


def degree_character(S, Y, A, lat=None, sm=None):
    """The degree character of the stabilizer of support Y: its action on the
    top reduced homology of {x < y} under the star action.

    One-dimensional with values +-1; independent of the chosen fiber element
    (re-verified against a second one when the fiber has several).
    """
    if lat is None or sm is None:
        lat, sm = A.lat, A.sm
    H = A.stabilizer_support(Y)
    fiber = sm.preimage(Y)
    r = support_rank(lat, Y)
    chi = _degree_character_at(S, fiber[0], H, r)
    if len(fiber) > 1:
        chi2 = _degree_character_at(S, fiber[-1], H, r)
        assert chi.values == chi2.values, "degree character depends on the fiber element"
    assert chi.dim() == 1, "degree character is not one-dimensional"
    assert all(v == 1 or v == -1 for v in chi.values), "degree character has a value != +-1"
    _assert_multiplicative(chi, H)
    return chi


def _degree_character_at(S, y, H, r):
    P, _, star = star_action_poset(S, None, y, H)
    chars = equivariant_homology_characters(P, star, H)
    dims = {d: int(c.dim()) for d, c in chars.items()}
    assert dims == {r - 1: 1}, \
        "homology below an element is not a single class in degree rank-1: %r" % (dims,)
    return chars[r - 1]


def _assert_multiplicative(chi, H, cap=60):
    from .symmetry import pcompose
    gens = H.elements if H.order <= cap else H.generators + H.class_reps()
    for g in gens:
        for h in gens:
            assert chi.value_on(pcompose(g, h)) == chi.value_on(g) * chi.value_on(h), \
                "degree character is not multiplicative"


def h0_tilde_character(S, X, y, H, lat=None, sm=None):
    """Character of H on the reduced 0-homology of {x < y, supp x >= X}:
    the permutation character on Hasse components minus the trivial one.

    Each component is checked to contain an element of support X.
    """
    if lat is None or sm is None:
        lat, sm = support_lattice(S)
    P, elems, star = star_action_poset(S, X, y, H, lat, sm)
    comps = P.components()
    for comp in comps:
        assert any(sm.sigma[elems[i]] == X for i in comp), \
            "a component of the poset below %d misses support %d" % (y, X)
    where = {}
    for ci, comp in enumerate(comps):
        for i in comp:
            where[i] = ci
    comp_perms = []
    for p in star:
        q = [None] * len(comps)
        for ci, comp in enumerate(comps):
            q[ci] = where[p[comp[0]]]
        comp_perms.append(tuple(q))
    chi = permutation_character(H, point_perms=comp_perms) - trivial_character(H)
    return chi


# ---------------------------------------------------------------------------
# structural classes of LRBs

def is_cw_lrb(S, integral=True):
    """Whether every contraction of S is the face poset of a regular CW
    complex, by the sphere-profile criterion.

    For every support X and every y of support Y > X, the poset
    {x < y, supp x >= X} must have graded order, rational reduced homology
    concentrated in degree rank(Y) - rank(X) - 1 with dimension 1, and
    torsion-free integral chain data (all boundary elementary divisors 1).
    Returns (bool, witness); witness names the first failing pair.
    """
    lat, sm = support_lattice(S)
    pos = lat.poset()
    if not pos.is_graded_by_height():
        return False, {"reason": "support semilattice is not graded"}
    rank = pos.heights()
    checks = []
    for y in range(S.size):
        for X in range(lat.size):
            if lat.leq[X][sm.sigma[y]]:
                checks.append((X, y))
    checks.sort(key=lambda t: len(_below_y(S, t[1], t[0], lat, sm)))
    for X, y in checks:
        elems = _below_y(S, y, X, lat, sm)
        sub = FinitePoset([[S.mul[b][a] == a for b in elems] for a in elems], validate=False)
        if not sub.is_graded_by_height():
            return False, {"X": X, "y": y, "reason": "ungraded"}
        r = rank[sm.sigma[y]] - rank[X] - 1
        dims = reduced_homology(sub, QQ)
        if dims != ({r: 1} if r >= 0 else {-1: 1} if r == -1 else {}):
            return False, {"X": X, "y": y, "reason": "homology", "dims": dims, "want_degree": r}
        if integral:
            cx = AugmentedChainComplex(sub, QQ)
            for d in range(0, cx.top + 1):
                divs = elementary_divisors(cx.integer_boundary_rows(d), cx.dim(d - 1))
                if any(e != 1 for e in divs):
                    return False, {"X": X, "y": y, "reason": "torsion", "degree": d}
    return True, None


def is_hereditary_homological(S, field=QQ):
    """Whether every component of every poset {x < y, supp x >= X} (X below
    the support of y) is acyclic over the field.  For connected LRBs this is
    the hereditary-algebra criterion.  Returns (bool, witness)."""
    lat, sm = support_lattice(S)
    for Y in range(lat.size):
        y = min(sm.preimage(Y))
        for X in range(lat.size):
            if X != Y and lat.leq[X][Y]:
                elems = _below_y(S, y, X, lat, sm)
                sub = FinitePoset([[S.mul[b][a] == a for b in elems] for a in elems],
                                  validate=False)
                for comp in sub.components():
                    piece, _ = sub.subposet(comp)
                    dims = reduced_homology(piece, field)
                    if dims:
                        return False, {"X": X, "y": y, "component": comp, "dims": dims}
    return True, None
