"""Constructions of the left regular bands this package studies.

Three families:

* sign-vector semigroups (faces of hyperplane arrangements, and the face
  semigroups of cube complexes, which embed into a power of the three-element
  band L = {0,+,-});
* flag semigroups of geometric lattices (prefixes of complete flags, with
  the join-and-deduplicate product), including the free LRB as the boolean
  case;
* the standard lattice families feeding the flag construction: boolean,
  projective (subspaces over a finite field) and affine.

Sign vectors are tuples over {-1, 0, +1}.  Element order in every
constructor is deterministic.
"""

from dataclasses import dataclass, field
from itertools import combinations, product

from .fields import is_prime
from .semigroup import FinitePoset, Semigroup, check_lrb_axioms, support_lattice


class NotClosedError(ValueError):
    def __init__(self, witness):
        super().__init__("sign-vector set not closed under the product: %r" % (witness,))
        self.witness = witness


class InvalidLatticeError(ValueError):
    pass


# ---------------------------------------------------------------------------
# sign vectors

SIGN_CHARS = {1: "+", 0: "0", -1: "-"}
CHAR_SIGNS = {"+": 1, "0": 0, "-": -1}


def sign_label(vec):
    return "".join(SIGN_CHARS[v] for v in vec)


def sign_vector_of(text):
    return tuple(CHAR_SIGNS[c] for c in text)


def sign_product(x, y):
    return tuple(a if a != 0 else b for a, b in zip(x, y))


def lrb_from_sign_vectors(k, vectors):
    """The semigroup of a set of sign vectors under the composition product
    (x.y)_i = x_i if x_i != 0 else y_i.

    Input order is kept, so permutation actions supplied alongside a vector
    list stay aligned with element indices.  Raises NotClosedError with a
    witness pair if some product leaves the set.
    """
    vecs = [tuple(v) for v in vectors]
    for v in vecs:
        if len(v) != k or any(e not in (-1, 0, 1) for e in v):
            raise ValueError("bad sign vector %r" % (v,))
    if len(set(vecs)) != len(vecs):
        raise ValueError("duplicate sign vectors")
    index = {v: i for i, v in enumerate(vecs)}
    n = len(vecs)
    mul = [[0] * n for _ in range(n)]
    for i, x in enumerate(vecs):
        for j, y in enumerate(vecs):
            p = sign_product(x, y)
            if p not in index:
                raise NotClosedError((x, y, p))
            mul[i][j] = index[p]
    zero = tuple([0] * k)
    ident = index.get(zero)
    S = Semigroup(mul, labels=[sign_label(v) for v in vecs], identity=ident, check=False)
    ok, witness = check_lrb_axioms(S)
    assert ok, witness
    return S


def full_L_power(k):
    """All of L^k; the free object among sign-vector LRBs."""
    vecs = sorted(product((0, 1, -1), repeat=k))
    return lrb_from_sign_vectors(k, vecs)


# ---------------------------------------------------------------------------
# cube complexes as sign vectors

@dataclass
class CubeComplexData:
    """A cube complex presented by its cubes' sign vectors over k hyperplanes.
    sgn_H(c) = 0 exactly when the hyperplane H crosses the cube c."""

    k: int
    cubes: list
    labels: list = None

    def zero_sets(self):
        return [frozenset(i for i, s in enumerate(c) if s == 0) for c in self.cubes]

    def to_json(self):
        return {"k": self.k, "cubes": [list(sign_label(c)) for c in self.cubes]}

    @classmethod
    def from_json(cls, obj):
        return cls(k=obj["k"], cubes=[sign_vector_of("".join(c)) for c in obj["cubes"]])


@dataclass
class CubeLRB:
    semigroup: Semigroup
    data: CubeComplexData
    zero_sets: list


def catzero_cube_lrb(data):
    """LRB of a cube complex.  Supports correspond to the zero-sets
    (crossing hyperplane sets); the checks here enforce the combinatorial
    consequences of the geometry, not the geometry itself:

    * sigma(c) <= sigma(c') iff zeros(c) is contained in zeros(c');
    * below each support the zero-sets form a full boolean lattice of subsets.
    """
    S = lrb_from_sign_vectors(data.k, data.cubes)
    zsets = data.zero_sets()
    lat, sm = support_lattice(S)
    support_zeros = {}
    for c in range(S.size):
        X = sm.sigma[c]
        if X in support_zeros:
            if support_zeros[X] != zsets[c]:
                raise ValueError("two zero-sets share a support")
        else:
            support_zeros[X] = zsets[c]
    if len(set(support_zeros.values())) != lat.size:
        raise ValueError("two supports share a zero-set")
    for X in range(lat.size):
        for Y in range(lat.size):
            if lat.leq[X][Y] != (support_zeros[X] <= support_zeros[Y]):
                raise ValueError("support order disagrees with zero-set inclusion")
    present = set(support_zeros.values())
    for Z in present:
        for r in range(len(Z) + 1):
            for sub in combinations(sorted(Z), r):
                if frozenset(sub) not in present:
                    raise ValueError("zero-set interval below %r is not boolean" % (set(Z),))
    return CubeLRB(semigroup=S, data=data, zero_sets=zsets)


def cubulated_ngon(n):
    """The cubulated n-gon: an n-cycle of squares glued around a central
    vertex.  2n+1 vertices (center, edge midpoints m_i, corners v_i), 3n
    edges (spokes s_i and half-edges b_i, b'_i), n squares Q_i, and n
    hyperplanes H_i, where H_i crosses the two squares Q_{i-1}, Q_i and the
    spoke s_i.

    Returns (CubeComplexData, [rotation, reflection]) with the dihedral
    generators as permutations of the cube list.
    """
    if n < 4:
        raise ValueError("cubulated n-gon needs n >= 4")

    def minus_except(plus=(), zero=()):
        v = [-1] * n
        for i in plus:
            v[i % n] = 1
        for i in zero:
            v[i % n] = 0
        return tuple(v)

    cubes = []
    labels = []
    cubes.append(minus_except())
    labels.append("z")
    for i in range(n):
        cubes.append(minus_except(plus=(i,)))
        labels.append("m%d" % i)
    for i in range(n):
        cubes.append(minus_except(plus=(i, i + 1)))
        labels.append("v%d" % i)
    for i in range(n):
        cubes.append(minus_except(zero=(i,)))
        labels.append("s%d" % i)
    for i in range(n):
        cubes.append(minus_except(plus=(i,), zero=(i + 1,)))
        labels.append("b%d" % i)
    for i in range(n):
        cubes.append(minus_except(plus=(i + 1,), zero=(i,)))
        labels.append("b'%d" % i)
    for i in range(n):
        cubes.append(minus_except(zero=(i, i + 1)))
        labels.append("Q%d" % i)
    assert len(set(cubes)) == 6 * n + 1

    index = {v: i for i, v in enumerate(cubes)}

    def perm_from_coordinate_map(cmap):
        # cmap sends hyperplane index j to the source coordinate; the cube
        # permutation is read off by transforming each sign vector
        out = []
        for v in cubes:
            w = tuple(v[cmap(j)] for j in range(n))
            out.append(index[w])
        return tuple(out)

    rotation = perm_from_coordinate_map(lambda j: (j - 1) % n)
    reflection = perm_from_coordinate_map(lambda j: (1 - j) % n)
    data = CubeComplexData(k=n, cubes=cubes, labels=labels)
    return data, [rotation, reflection]


def rank2_arrangement_faces(m):
    """Faces of m distinct lines through the origin in the plane.

    m = 1 gives the three faces {line, two half-planes} = L^1; for m >= 2
    there are 4m+1 faces: the origin, 2m rays and 2m chambers.  Rays and
    chambers are indexed counterclockwise, ray r_k lying on line (k mod m)
    and chamber c_k between r_k and r_{k+1}.

    Returns (Semigroup, [rotation, reflection]) where rotation shifts by one
    line (r_k -> r_{k+2}) and reflection fixes r_0; together they generate a
    dihedral group of order 2m.
    """
    if m < 1:
        raise ValueError("need m >= 1")
    if m == 1:
        vecs = [(0,), (1,), (-1,)]
        S = lrb_from_sign_vectors(1, vecs)
        return S, [(0, 2, 1), (0, 1, 2)]

    def ray_vec(k):
        v = []
        for j in range(m):
            if k % m == j:
                v.append(0)
            else:
                d = (k - j) % (2 * m)
                v.append(1 if 1 <= d <= m - 1 else -1)
        return tuple(v)

    def chamber_vec(k):
        a, b = ray_vec(k), ray_vec(k + 1)
        return tuple(x if x != 0 else y for x, y in zip(a, b))

    vecs = [tuple([0] * m)]
    for k in range(2 * m):
        vecs.append(ray_vec(k))
    for k in range(2 * m):
        vecs.append(chamber_vec(k))
    assert len(set(vecs)) == 4 * m + 1
    S = lrb_from_sign_vectors(m, vecs)

    def face_perm(ray_map, chamber_map):
        p = [0] * (4 * m + 1)
        for k in range(2 * m):
            p[1 + k] = 1 + ray_map(k) % (2 * m)
            p[1 + 2 * m + k] = 1 + 2 * m + chamber_map(k) % (2 * m)
        return tuple(p)

    rotation = face_perm(lambda k: k + 2, lambda k: k + 2)
    reflection = face_perm(lambda k: -k, lambda k: -k - 1)
    return S, [rotation, reflection]


# ---------------------------------------------------------------------------
# geometric lattices

@dataclass
class GeometricLattice:
    poset: FinitePoset
    join: list
    meet: list
    rank: list
    atoms: list
    bottom: int
    top: int
    labels: list = None

    @property
    def size(self):
        return self.poset.size

    def leq(self, x, y):
        return self.poset.leq[x][y]

    def to_json(self):
        return {
            "size": self.size,
            "leq": [[int(v) for v in row] for row in self.poset.leq],
            "rank": list(self.rank),
            "atoms": list(self.atoms),
        }

    def rank_sizes(self):
        out = [0] * (max(self.rank) + 1)
        for r in self.rank:
            out[r] += 1
        return out


def geometric_lattice(leq, labels=None):
    """Validate an order matrix as a geometric lattice: unique joins and
    meets, graded by height, atomic, and semimodular."""
    P = FinitePoset(leq, labels=labels)
    n = P.size

    def bound(x, y, upper):
        if upper:
            cands = [z for z in range(n) if P.leq[x][z] and P.leq[y][z]]
            best = [z for z in cands if all(P.leq[z][w] for w in cands)]
        else:
            cands = [z for z in range(n) if P.leq[z][x] and P.leq[z][y]]
            best = [z for z in cands if all(P.leq[w][z] for w in cands)]
        if len(best) != 1:
            raise InvalidLatticeError(
                "no unique %s bound for (%d,%d)" % ("upper" if upper else "lower", x, y))
        return best[0]

    join = [[bound(x, y, True) for y in range(n)] for x in range(n)]
    meet = [[bound(x, y, False) for y in range(n)] for x in range(n)]
    if not P.is_graded_by_height():
        raise InvalidLatticeError("not graded")
    rank = P.heights()
    bottom = rank.index(0)
    top = rank.index(max(rank))
    atoms = [x for x in range(n) if rank[x] == 1]
    for x in range(n):
        below = [a for a in atoms if P.leq[a][x]]
        j = bottom
        for a in below:
            j = join[j][a]
        if j != x:
            raise InvalidLatticeError("element %d is not a join of atoms" % x)
    for x in range(n):
        for y in range(n):
            if rank[x] + rank[y] < rank[meet[x][y]] + rank[join[x][y]]:
                raise InvalidLatticeError("semimodularity fails at (%d,%d)" % (x, y))
    return GeometricLattice(poset=P, join=join, meet=meet, rank=rank,
                            atoms=atoms, bottom=bottom, top=top, labels=labels)


def lattice_interval(L, x, y):
    """The interval [x, y] of a geometric lattice, revalidated as one.
    Returns (GeometricLattice, list mapping new indices to old)."""
    if not L.leq(x, y):
        raise ValueError("empty interval")
    keep = [z for z in range(L.size) if L.leq(x, z) and L.leq(z, y)]
    leq = [[L.poset.leq[a][b] for b in keep] for a in keep]
    labels = [L.labels[a] for a in keep] if L.labels else None
    return geometric_lattice(leq, labels=labels), keep


def boolean_lattice(n):
    """Subsets of an n-set, ordered by inclusion."""
    if n < 0:
        raise ValueError("n >= 0")
    subsets = sorted((frozenset(c) for r in range(n + 1) for c in combinations(range(n), r)),
                     key=lambda s: (len(s), sorted(s)))
    leq = [[a <= b for b in subsets] for a in subsets]
    labels = ["{" + ",".join(map(str, sorted(s))) + "}" for s in subsets]
    return geometric_lattice(leq, labels=labels)


# --- finite fields -----------------------------------------------------------

class GFTable:
    """GF(p^e) by explicit add/mul tables.  Elements are indices 0..q-1,
    encoding polynomials over F_p in base p (index = sum c_i p^i), reduced
    modulo the lexicographically first monic irreducible of degree e."""

    def __init__(self, q):
        p, e = prime_power(q)
        self.q, self.p, self.e = q, p, e
        self.modulus = _first_irreducible(p, e) if e > 1 else (0, 1)

        def to_poly(i):
            c = []
            for _ in range(e):
                c.append(i % p)
                i //= p
            return c

        def from_poly(c):
            return sum(ci * p ** i for i, ci in enumerate(c))

        polys = [to_poly(i) for i in range(q)]
        self.add = [[from_poly([(a + b) % p for a, b in zip(polys[i], polys[j])])
                     for j in range(q)] for i in range(q)]
        self.mul = [[from_poly(_poly_mulmod(polys[i], polys[j], self.modulus, p))
                     for j in range(q)] for i in range(q)]
        self.neg = [from_poly([(-a) % p for a in polys[i]]) for i in range(q)]
        self.inv = [None] * q
        for i in range(1, q):
            for j in range(1, q):
                if self.mul[i][j] == 1:
                    self.inv[i] = j
                    break
            assert self.inv[i] is not None, "not a field; modulus reducible?"


def prime_power(q):
    if q < 2:
        raise ValueError("q must be a prime power")
    for p in range(2, q + 1):
        if not is_prime(p):
            continue
        e, r = 0, q
        while r % p == 0:
            r //= p
            e += 1
        if e and r == 1:
            return p, e
        if q % p == 0:
            break
    raise ValueError("%d is not a prime power" % q)


def _poly_mulmod(a, b, modulus, p):
    e = len(a)
    prod = [0] * (2 * e - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    # modulus is monic of degree e, given by its lower coefficients
    for d in range(len(prod) - 1, e - 1, -1):
        c = prod[d]
        if c:
            prod[d] = 0
            for i, mi in enumerate(modulus):
                prod[d - e + i] = (prod[d - e + i] - c * mi) % p
    return prod[:e]


def _poly_divides(d, f, p):
    # monic d, f as coefficient lists (low to high); True if d | f over F_p
    f = list(f)
    while len(f) >= len(d):
        c = f[-1]
        if c == 0:
            f.pop()
            continue
        off = len(f) - len(d)
        for i, di in enumerate(d):
            f[off + i] = (f[off + i] - c * di) % p
        f.pop()
    return all(c == 0 for c in f)


def _first_irreducible(p, e):
    """Lower coefficients (c_0..c_{e-1}) of the lexicographically first monic
    irreducible of degree e over F_p, scanning constant term fastest."""
    for idx in range(p ** e):
        lower = []
        i = idx
        for _ in range(e):
            lower.append(i % p)
            i //= p
        f = lower + [1]
        if f[0] == 0:
            continue
        reducible = False
        for deg in range(1, e // 2 + 1):
            for didx in range(p ** deg):
                dl, j = [], didx
                for _ in range(deg):
                    dl.append(j % p)
                    j //= p
                if _poly_divides(dl + [1], f, p):
                    reducible = True
                    break
            if reducible:
                break
        if not reducible:
            return tuple(lower)
    raise AssertionError("no irreducible found")


def _rref_enumerate(n, k, F):
    """All k x n matrices over GF(q) in reduced row echelon form with rank k."""
    q = F.q
    for pivots in combinations(range(n), k):
        free = []
        for i in range(k):
            for j in range(pivots[i] + 1, n):
                if j not in pivots:
                    free.append((i, j))
        for vals in product(range(q), repeat=len(free)):
            M = [[0] * n for _ in range(k)]
            for i, c in enumerate(pivots):
                M[i][c] = 1
            for (i, j), v in zip(free, vals):
                M[i][j] = v
            yield [tuple(row) for row in M]


def _row_space_points(rows, n, F):
    pts = set()
    k = len(rows)
    for coeffs in product(range(F.q), repeat=k):
        v = [0] * n
        for c, row in zip(coeffs, rows):
            if c:
                v = [F.add[vi][F.mul[c][ri]] for vi, ri in zip(v, row)]
        pts.add(tuple(v))
    return frozenset(pts)


def pg_lattice(n, q):
    """Lattice of linear subspaces of F_q^n (the projective geometry of rank
    n).  Rank k elements are counted by the Gaussian binomial [n choose k]_q."""
    if n < 0:
        raise ValueError("n >= 0")
    F = GFTable(q)
    flats = []
    for k in range(n + 1):
        for M in _rref_enumerate(n, k, F):
            flats.append((k, _row_space_points(M, n, F)))
    flats.sort(key=lambda t: (t[0], sorted(t[1])))
    assert len(set(s for _, s in flats)) == len(flats)
    leq = [[a <= b for _, b in flats] for _, a in flats]
    return geometric_lattice(leq)


def ag_lattice(n, q):
    """Lattice of affine flats of F_q^n, plus the empty flat at the bottom.
    Rank k > 0 elements are the (k-1)-dimensional flats, q^{n-k+1} [n choose
    k-1]_q of them."""
    if n < 0:
        raise ValueError("n >= 0")
    F = GFTable(q)
    points = [tuple(v) for v in product(range(q), repeat=n)]
    ranked = [(0, frozenset())]
    seen = {frozenset()}
    for k in range(n + 1):
        for M in _rref_enumerate(n, k, F):
            W = _row_space_points(M, n, F)
            for v in points:
                coset = frozenset(tuple(F.add[a][b] for a, b in zip(v, w)) for w in W)
                if coset not in seen:
                    seen.add(coset)
                    ranked.append((k + 1, coset))
    ranked.sort(key=lambda t: (t[0], sorted(t[1])))
    leq = [[a <= b for _, b in ranked] for _, a in ranked]
    return geometric_lattice(leq)


# ---------------------------------------------------------------------------
# flag semigroups of geometric lattices

@dataclass
class FlagLRB:
    semigroup: Semigroup
    lattice: GeometricLattice
    flags: list
    flag_index: dict = field(repr=False)

    def complete_flags(self):
        full = max(self.lattice.rank)
        return [i for i, f in enumerate(self.flags) if len(f) == full]


def geometric_lattice_lrb(L):
    """The flag LRB of a geometric lattice: elements are prefixes of complete
    flags (saturated chains from an atom), including the empty flag; the
    product appends joins with the left flag's top and deletes repeats.

    Flags are interned in lexicographic order of their lattice-index tuples,
    so the empty flag (the identity) is element 0.
    """
    flags = [()]
    frontier = [(a,) for a in L.atoms]
    while frontier:
        flags.extend(frontier)
        nxt = []
        for f in frontier:
            top = f[-1]
            for u in L.poset.upper_covers(top):
                nxt.append(f + (u,))
        frontier = nxt
    flags.sort()
    flag_index = {f: i for i, f in enumerate(flags)}
    n = len(flags)
    mul = [[0] * n for _ in range(n)]
    for i, f in enumerate(flags):
        for j, g in enumerate(flags):
            if not f:
                mul[i][j] = j
                continue
            seq = list(f)
            top = f[-1]
            for y in g:
                z = L.join[top][y]
                if z != seq[-1]:
                    seq.append(z)
                    top = z
            h = tuple(seq)
            if h not in flag_index:
                raise InvalidLatticeError("flag product left the flag set at (%r,%r)" % (f, g))
            mul[i][j] = flag_index[h]
    labels = None
    if L.labels:
        labels = ["(" + ",".join(L.labels[x] for x in f) + ")" for f in flags]
    else:
        labels = ["(" + ",".join(map(str, f)) + ")" for f in flags]
    S = Semigroup(mul, labels=labels, identity=flag_index[()], check=False)
    ok, witness = check_lrb_axioms(S)
    assert ok, witness
    return FlagLRB(semigroup=S, lattice=L, flags=flags, flag_index=flag_index)


def flag_permutation(FL, lattice_perm):
    """Lift a lattice permutation to a permutation of the flag elements."""
    out = []
    for f in FL.flags:
        g = tuple(lattice_perm[x] for x in f)
        out.append(FL.flag_index[g])
    return tuple(out)


def free_lrb(n):
    """The free LRB on n letters: words with distinct letters, product
    concatenates and keeps the first occurrence of each letter.  Isomorphic
    to the flag LRB of the boolean lattice, but built directly on words."""
    if n < 0:
        raise ValueError("n >= 0")
    words = [()]
    frontier = [()]
    while frontier:
        nxt = []
        for w in frontier:
            for a in range(n):
                if a not in w:
                    nxt.append(w + (a,))
        words.extend(nxt)
        frontier = nxt
    words.sort(key=lambda w: (len(w), w))
    index = {w: i for i, w in enumerate(words)}
    N = len(words)
    mul = [[0] * N for _ in range(N)]
    for i, u in enumerate(words):
        for j, v in enumerate(words):
            seq = list(u)
            for a in v:
                if a not in u:
                    seq.append(a)
            mul[i][j] = index[tuple(seq)]
    letters = "abcdefghijklmnopqrstuvwxyz"
    if n <= 26:
        labels = ["".join(letters[a] for a in w) or "e" for w in words]
    else:
        labels = [".".join(map(str, w)) or "e" for w in words]
    return Semigroup(mul, labels=labels, identity=0, check=False)


def word_permutation(n, letter_perm):
    """Lift a letter permutation to a permutation of free_lrb(n)'s words."""
    if sorted(letter_perm) != list(range(n)):
        raise ValueError("not a permutation of range(%d)" % n)
    words = [()]
    frontier = [()]
    while frontier:
        nxt = []
        for w in frontier:
            for a in range(n):
                if a not in w:
                    nxt.append(w + (a,))
        words.extend(nxt)
        frontier = nxt
    words.sort(key=lambda w: (len(w), w))
    index = {w: i for i, w in enumerate(words)}
    return tuple(index[tuple(letter_perm[a] for a in w)] for w in words)
