"""Finite semigroups as multiplication tables, and the posets attached to a
left regular band: the support semilattice, the semigroup order, and
contractions.

Conventions fixed here and relied on everywhere else:

* Elements are dense integer indices; the multiplication table is the single
  source of truth.
* Supports are deduplicated principal left ideals S·b, ordered by inclusion
  and indexed canonically by (ideal cardinality, minimal member index).  That
  indexing is a linear extension of the support order, with the minimum at
  index 0.
* The semigroup order is x <= y iff y·x = x.  Under it, elements with the
  same support are incomparable, and x < y forces sigma(x) < sigma(y).
"""

from dataclasses import dataclass, field


class Semigroup:
    """A finite semigroup given by its multiplication table.

    mul[a][b] is the index of the product a·b.  The empty semigroup is
    rejected.  Associativity is checked eagerly for small tables; larger
    tables are checked by dense sampling (and every construction in this
    package is additionally covered by exhaustive tests at small size).
    """

    ASSOC_CHECK_LIMIT = 120

    def __init__(self, mul, labels=None, identity=None, check=True):
        n = len(mul)
        if n == 0:
            raise ValueError("empty semigroup is not allowed")
        for row in mul:
            if len(row) != n or any(not (0 <= v < n) for v in row):
                raise ValueError("multiplication table is not square over the element range")
        self.size = n
        self.mul = [list(row) for row in mul]
        self.labels = list(labels) if labels is not None else None
        if self.labels is not None and len(self.labels) != n:
            raise ValueError("labels length mismatch")
        self.identity = identity
        if identity is not None:
            row = self.mul[identity]
            if any(row[a] != a for a in range(n)) or any(self.mul[a][identity] != a for a in range(n)):
                raise ValueError("declared identity is not an identity")
        if check:
            if n <= self.ASSOC_CHECK_LIMIT:
                self._check_associativity_full()
            else:
                self._check_associativity_sampled()

    def _check_associativity_full(self):
        mul = self.mul
        for a in range(self.size):
            ra = mul[a]
            for b in range(self.size):
                ab = ra[b]
                rab = mul[ab]
                rb = mul[b]
                for c in range(self.size):
                    if rab[c] != ra[rb[c]]:
                        raise ValueError("not associative at (%d,%d,%d)" % (a, b, c))

    def _check_associativity_sampled(self, step=None):
        # deterministic strided sample; full coverage lives in the test suite
        n = self.size
        mul = self.mul
        if step is None:
            step = max(1, n // 40)
        idx = list(range(0, n, step))
        for a in idx:
            for b in idx:
                ab = mul[a][b]
                for c in idx:
                    if mul[ab][c] != mul[a][mul[b][c]]:
                        raise ValueError("not associative at (%d,%d,%d)" % (a, b, c))

    def prod(self, a, b):
        return self.mul[a][b]

    def label(self, a):
        return self.labels[a] if self.labels else str(a)

    def to_json(self):
        return {
            "size": self.size,
            "mul": [list(r) for r in self.mul],
            "labels": self.labels,
            "identity": self.identity,
        }

    @classmethod
    def from_json(cls, obj):
        return cls(obj["mul"], labels=obj.get("labels"), identity=obj.get("identity"))

    def __repr__(self):
        return "Semigroup(size=%d)" % self.size


class FinitePoset:
    """A finite poset as a boolean order matrix, with the usual derived data
    (covers, heights, connected components of the Hasse diagram)."""

    def __init__(self, leq, labels=None, validate=None):
        n = len(leq)
        self.size = n
        self.leq = [list(map(bool, row)) for row in leq]
        self.labels = list(labels) if labels is not None else None
        if validate is None:
            validate = n <= 400
        if validate:
            self._validate()
        self._covers = None
        self._heights = None

    def _validate(self):
        n = self.size
        leq = self.leq
        for i in range(n):
            if not leq[i][i]:
                raise ValueError("not reflexive at %d" % i)
            for j in range(n):
                if i != j and leq[i][j] and leq[j][i]:
                    raise ValueError("not antisymmetric at (%d,%d)" % (i, j))
        for i in range(n):
            for j in range(n):
                if leq[i][j]:
                    for k in range(n):
                        if leq[j][k] and not leq[i][k]:
                            raise ValueError("not transitive at (%d,%d,%d)" % (i, j, k))

    def lt(self, i, j):
        return i != j and self.leq[i][j]

    def covers(self):
        """List of (lower, upper) cover pairs."""
        if self._covers is None:
            n = self.size
            leq = self.leq
            out = []
            for i in range(n):
                ups = [j for j in range(n) if i != j and leq[i][j]]
                for j in ups:
                    if not any(k != j and leq[k][j] for k in ups):
                        out.append((i, j))
            self._covers = out
        return self._covers

    def upper_covers(self, i):
        return [b for a, b in self.covers() if a == i]

    def heights(self):
        """Length of the longest chain ending at each element."""
        if self._heights is None:
            n = self.size
            order = sorted(range(n), key=lambda i: sum(self.leq[j][i] for j in range(n)))
            h = [0] * n
            for i in order:
                below = [j for j in range(n) if j != i and self.leq[j][i]]
                h[i] = 1 + max((h[j] for j in below), default=-1)
            self._heights = h
        return self._heights

    def is_graded_by_height(self):
        h = self.heights()
        return all(h[b] == h[a] + 1 for a, b in self.covers())

    def components(self):
        """Connected components of the Hasse diagram (as sorted index lists)."""
        n = self.size
        adj = [[] for _ in range(n)]
        for a, b in self.covers():
            adj[a].append(b)
            adj[b].append(a)
        seen = [False] * n
        comps = []
        for s in range(n):
            if seen[s]:
                continue
            stack = [s]
            seen[s] = True
            comp = []
            while stack:
                v = stack.pop()
                comp.append(v)
                for w in adj[v]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    def subposet(self, indices):
        """Induced subposet; returns (poset, list mapping new -> old index)."""
        indices = list(indices)
        leq = [[self.leq[a][b] for b in indices] for a in indices]
        labels = [self.labels[a] for a in indices] if self.labels else None
        return FinitePoset(leq, labels=labels, validate=False), indices

    def open_lower(self, y):
        return [x for x in range(self.size) if x != y and self.leq[x][y]]

    def to_json(self):
        return {"size": self.size, "leq": [[int(v) for v in row] for row in self.leq], "labels": self.labels}

    def __repr__(self):
        return "FinitePoset(size=%d)" % self.size


@dataclass
class SupportLattice:
    """The support semilattice of an LRB: deduplicated principal left ideals
    under inclusion.  meet(X, Y) is the support of any product x·y."""

    size: int
    leq: list
    meet: list
    min: int
    max: object = None
    rank: object = None
    ideals: list = field(default_factory=list, repr=False)

    def leq_(self, x, y):
        return self.leq[x][y]

    def poset(self):
        return FinitePoset(self.leq, validate=False)

    def lower_set(self, x):
        return [y for y in range(self.size) if self.leq[y][x]]

    def to_json(self):
        return {
            "size": self.size,
            "leq": [[int(v) for v in row] for row in self.leq],
            "meet": [list(r) for r in self.meet],
            "rank": self.rank,
            "min": self.min,
            "max": self.max,
        }


@dataclass
class SupportMap:
    sigma: list

    def __getitem__(self, b):
        return self.sigma[b]

    def preimage(self, X):
        return [b for b, s in enumerate(self.sigma) if s == X]


def check_lrb_axioms(S):
    """Check x·x = x and x·y·x = x·y for all x, y.

    Returns (True, None) or (False, witness) where witness names the first
    violated axiom and the offending pair.
    """
    mul = S.mul
    for x in range(S.size):
        if mul[x][x] != x:
            return False, ("idempotence", x)
    for x in range(S.size):
        rx = mul[x]
        for y in range(S.size):
            xy = rx[y]
            if mul[xy][x] != xy:
                return False, ("xyx=xy", (x, y))
    return True, None


def support_lattice(S):
    """Support semilattice and support map of an LRB.

    Supports are the distinct principal left ideals S·b, ordered by
    inclusion; the canonical index sorts by (ideal cardinality, minimal
    member).  Verifies S·a ∩ S·b = S·(a·b) and the order criterion
    sigma(x) <= sigma(y) iff x·y = x.
    """
    ok, witness = check_lrb_axioms(S)
    if not ok:
        raise ValueError("not a left regular band: %r" % (witness,))
    n = S.size
    mul = S.mul
    ideal_of = [frozenset(mul[a][b] for a in range(n)) | {b} for b in range(n)]
    # b = b·b is already in the ideal; the union is for clarity only
    distinct = sorted(set(ideal_of), key=lambda s: (len(s), min(s)))
    index = {ideal: i for i, ideal in enumerate(distinct)}
    sigma = [index[ideal_of[b]] for b in range(n)]
    k = len(distinct)
    leq = [[distinct[x] <= distinct[y] for y in range(k)] for x in range(k)]
    reps = [min(b for b in range(n) if sigma[b] == X) for X in range(k)]
    meet = [[None] * k for _ in range(k)]
    for X in range(k):
        for Y in range(k):
            m = sigma[mul[reps[X]][reps[Y]]]
            if distinct[m] != distinct[X] & distinct[Y]:
                raise ValueError("S·a ∩ S·b != S·ab at supports (%d,%d)" % (X, Y))
            meet[X][Y] = m
    # order criterion, exhaustive
    for x in range(n):
        rx = mul[x]
        sx = sigma[x]
        for y in range(n):
            if (rx[y] == x) != leq[sx][sigma[y]]:
                raise ValueError("support order criterion fails at (%d,%d)" % (x, y))
    bottom = 0
    if any(not leq[bottom][Y] for Y in range(k)):
        raise ValueError("support semilattice has no minimum")
    top = k - 1 if all(leq[Y][k - 1] for Y in range(k)) else None
    lat = SupportLattice(size=k, leq=leq, meet=meet, min=bottom, max=top, ideals=distinct)
    pos = lat.poset()
    if pos.is_graded_by_height():
        lat.rank = pos.heights()
    return lat, SupportMap(sigma)


def semigroup_order(S):
    """The order x <= y iff y·x = x, as a FinitePoset."""
    n = S.size
    mul = S.mul
    leq = [[mul[y][x] == x for y in range(n)] for x in range(n)]
    for x in range(n):
        if not leq[x][x]:
            raise ValueError("semigroup order is not reflexive; not an LRB?")
        for y in range(n):
            if x != y and leq[x][y] and leq[y][x]:
                raise ValueError("semigroup order is not antisymmetric")
    return FinitePoset(leq, labels=S.labels, validate=False)


def contraction(S, X, lat=None, sm=None):
    """The subsemigroup on {b : sigma(b) >= X}; returns (Semigroup, embedding)."""
    if lat is None or sm is None:
        lat, sm = support_lattice(S)
    keep = [b for b in range(S.size) if lat.leq[X][sm.sigma[b]]]
    pos = {b: i for i, b in enumerate(keep)}
    mul = []
    for a in keep:
        row = []
        for b in keep:
            ab = S.mul[a][b]
            if ab not in pos:
                raise ValueError("contraction is not closed; support map is broken")
            row.append(pos[ab])
        mul.append(row)
    labels = [S.label(b) for b in keep] if S.labels else None
    ident = None
    if S.identity is not None and S.identity in pos:
        ident = pos[S.identity]
    else:
        # a contraction of a monoid has its own identity: any minimal-support
        # element x of the contraction with x·b = b for all kept b
        for i, a in enumerate(keep):
            if all(mul[i][j] == j and mul[j][i] == j for j in range(len(keep))):
                ident = i
                break
    return Semigroup(mul, labels=labels, identity=ident, check=False), keep


def is_connected(S):
    """True iff each contraction's semigroup-order Hasse diagram is connected."""
    lat, sm = support_lattice(S)
    for X in range(lat.size):
        T, _ = contraction(S, X, lat, sm)
        if len(semigroup_order(T).components()) != 1:
            return False
    return True


def is_hereditary_tree(S):
    """Sufficient condition for heredity: the semigroup poset is a rooted tree
    (unique maximal element, every other element with exactly one upper cover,
    connected Hasse diagram)."""
    P = semigroup_order(S)
    maxima = [i for i in range(P.size) if not any(P.lt(i, j) for j in range(P.size))]
    if len(maxima) != 1:
        return False
    root = maxima[0]
    for i in range(P.size):
        if i != root and len(P.upper_covers(i)) != 1:
            return False
    return len(P.components()) == 1


def lrb_join(S, T):
    """Join of two LRBs on the disjoint union: elements of S absorb elements
    of T from both sides, so S sits below T in the semigroup order."""
    n, m = S.size, T.size
    mul = [[0] * (n + m) for _ in range(n + m)]
    for a in range(n):
        for b in range(n):
            mul[a][b] = S.mul[a][b]
    for a in range(m):
        for b in range(m):
            mul[n + a][n + b] = n + T.mul[a][b]
    for a in range(n):
        for b in range(m):
            mul[a][n + b] = a
            mul[n + b][a] = a
    labels = None
    if S.labels and T.labels:
        labels = [s + "|0" for s in S.labels] + [t + "|1" for t in T.labels]
    ident = n + T.identity if T.identity is not None else None
    out = Semigroup(mul, labels=labels, identity=ident, check=False)
    ok, witness = check_lrb_axioms(out)
    assert ok, witness
    return out


def meet_semilattice_lrb(leq, labels=None):
    """A finite meet-semilattice as an LRB (product = meet).  leq is the order
    matrix; all pairwise meets must exist."""
    P = FinitePoset(leq)
    n = P.size
    mul = [[None] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            lowers = [c for c in range(n) if P.leq[c][a] and P.leq[c][b]]
            meets = [c for c in lowers if all(P.leq[d][c] for d in lowers)]
            if len(meets) != 1:
                raise ValueError("not a meet-semilattice at (%d,%d)" % (a, b))
            mul[a][b] = meets[0]
    tops = [i for i in range(n) if all(P.leq[j][i] for j in range(n))]
    ident = tops[0] if tops else None
    return Semigroup(mul, labels=labels, identity=ident, check=False)
