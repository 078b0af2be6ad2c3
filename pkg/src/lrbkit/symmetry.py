"""Finite permutation groups acting on an LRB by semigroup automorphisms,
and exact character arithmetic over cyclotomic values.

A PermGroup is a closed list of permutations (tuples) of some index set,
optionally carrying an aligned "abstract" permutation per element (a second,
faithful realization on a small set; for symmetric groups the letters, used
to read off cycle types).  A GroupAction couples a PermGroup with a specific
LRB and exposes the induced action on supports, orbits, stabilizers and the
orbit poset.

Class-function values are Fractions or CyclotomicValues; the latter live in
Q[x]/(x^m - 1) and are canonicalized against the relation module spanned by
the shifted prime orbit sums, which is exactly the kernel of evaluation at a
primitive m-th root of unity.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

from .linalg import reduce_vector, rref
from .semigroup import FinitePoset, support_lattice

GROUP_ORDER_CAP = 10 ** 6


# ---------------------------------------------------------------------------
# permutations

def pcompose(p, q):
    """p after q: (p.q)(i) = p[q[i]]."""
    return tuple(p[i] for i in q)


def pinv(p):
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v] = i
    return tuple(out)


def pidentity(n):
    return tuple(range(n))


def perm_order(p):
    n = 1
    q = p
    ident = pidentity(len(p))
    while q != ident:
        q = pcompose(q, p)
        n += 1
    return n


def cycle_type(p):
    """Cycle lengths of p, including fixed points, sorted descending."""
    seen = [False] * len(p)
    out = []
    for i in range(len(p)):
        if seen[i]:
            continue
        ln = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = p[j]
            ln += 1
        out.append(ln)
    return tuple(sorted(out, reverse=True))


# ---------------------------------------------------------------------------
# groups

class PermGroup:
    """A finite permutation group as an explicit, sorted element list.

    elements[0] is always the identity (the lexicographic minimum).  classes
    lists conjugacy classes as sorted index lists, ordered by smallest
    member, so class 0 is the identity's.
    """

    def __init__(self, elements, abstract=None, generators=None):
        pairs = sorted(zip(elements, abstract)) if abstract is not None \
            else sorted((e, None) for e in elements)
        self.elements = [p[0] for p in pairs]
        self.abstract = [p[1] for p in pairs] if abstract is not None else None
        self.degree = len(self.elements[0])
        self.generators = list(generators) if generators is not None else list(self.elements)
        self.index = {e: i for i, e in enumerate(self.elements)}
        if len(self.index) != len(self.elements):
            raise ValueError("duplicate group elements")
        if self.elements[0] != pidentity(self.degree):
            raise ValueError("identity missing")
        if self.abstract is not None:
            if len(set(self.abstract)) != len(self.abstract):
                raise ValueError("abstract labels not faithful")
        self._classes = None
        self._abstract_index = None

    @property
    def order(self):
        return len(self.elements)

    @classmethod
    def close(cls, generators, degree, abstract_generators=None, cap=GROUP_ORDER_CAP):
        """Generate the group by breadth-first closure.  When abstract
        generators are supplied they are closed in lockstep, and the pairing
        is checked to be a bijection (both realizations faithful)."""
        gens = [tuple(g) for g in generators]
        for g in gens:
            if sorted(g) != list(range(degree)):
                raise ValueError("generator is not a permutation of range(%d)" % degree)
        ident = pidentity(degree)
        if abstract_generators is None:
            seen = {ident}
            frontier = [ident]
            while frontier:
                nxt = []
                for x in frontier:
                    for g in gens:
                        y = pcompose(g, x)
                        if y not in seen:
                            if len(seen) >= cap:
                                raise ValueError("group order exceeds cap %d" % cap)
                            seen.add(y)
                            nxt.append(y)
                frontier = nxt
            return cls(sorted(seen), generators=gens)
        agens = [tuple(a) for a in abstract_generators]
        if len(agens) != len(gens):
            raise ValueError("generator lists differ in length")
        adeg = len(agens[0]) if agens else 0
        aident = pidentity(adeg)
        seen = {ident: aident}
        aseen = {aident}
        frontier = [(ident, aident)]
        while frontier:
            nxt = []
            for x, ax in frontier:
                for g, ag in zip(gens, agens):
                    y, ay = pcompose(g, x), pcompose(ag, ax)
                    if y in seen:
                        if seen[y] != ay:
                            raise ValueError("abstract labeling is not single-valued")
                        continue
                    if ay in aseen:
                        raise ValueError("abstract labeling is not injective")
                    if len(seen) >= cap:
                        raise ValueError("group order exceeds cap %d" % cap)
                    seen[y] = ay
                    aseen.add(ay)
                    nxt.append((y, ay))
            frontier = nxt
        elems = sorted(seen)
        return cls(elems, abstract=[seen[e] for e in elems], generators=gens)

    @property
    def classes(self):
        if self._classes is None:
            gens = self.generators
            ginv = [pinv(g) for g in gens]
            assigned = [None] * self.order
            classes = []
            for i in range(self.order):
                if assigned[i] is not None:
                    continue
                orb = {i}
                stack = [self.elements[i]]
                while stack:
                    x = stack.pop()
                    for g, gi in zip(gens, ginv):
                        y = pcompose(pcompose(g, x), gi)
                        j = self.index[y]
                        if j not in orb:
                            orb.add(j)
                            stack.append(y)
                ci = len(classes)
                for j in orb:
                    assigned[j] = ci
                classes.append(sorted(orb))
            self._classes = classes
            self._class_of = assigned
        return self._classes

    def class_of(self, perm):
        self.classes
        return self._class_of[self.index[perm]]

    def class_reps(self):
        return [self.elements[c[0]] for c in self.classes]

    def class_sizes(self):
        return [len(c) for c in self.classes]

    def abstract_of(self, perm):
        return self.abstract[self.index[perm]]

    def class_of_abstract(self, aperm):
        if self.abstract is None:
            raise ValueError("group has no abstract labels")
        if self._abstract_index is None:
            self.classes
            self._abstract_index = {a: self._class_of[i] for i, a in enumerate(self.abstract)}
        return self._abstract_index[aperm]

    def exponent(self):
        e = 1
        for p in self.class_reps():
            e = lcm(e, perm_order(p))
        return e

    def subgroup(self, perms, assume_closed=False):
        """Subgroup on an explicit element set.  Closure is verified unless
        the caller got the set from an automatically-closed construction
        (stabilizers, intersections)."""
        elems = sorted(set(perms))
        if not assume_closed:
            sidx = set(elems)
            for a in elems:
                for b in elems:
                    if pcompose(a, b) not in sidx:
                        raise ValueError("subgroup element set is not closed")
        abstract = [self.abstract[self.index[e]] for e in elems] if self.abstract else None
        return PermGroup(elems, abstract=abstract)

    def intersection(self, other):
        common = [e for e in self.elements if e in other.index]
        return self.subgroup(common, assume_closed=True)

    def contains_all(self, sub):
        return all(e in self.index for e in sub.elements)


# ---------------------------------------------------------------------------
# actions on an LRB

class GroupAction:
    """A PermGroup acting on an LRB by semigroup automorphisms.

    Builds the support lattice, the induced permutations of supports (one per
    group element, aligned with group.elements), and orbit/stabilizer data.
    The automorphism property is checked exhaustively on generators, and
    equivariance of the support map on all elements.
    """

    def __init__(self, S, group, check=True):
        self.S = S
        self.group = group
        if check:
            ok, witness = verify_automorphisms(S, group.generators)
            if not ok:
                raise ValueError("not automorphisms: witness %r" % (witness,))
        self.lat, self.sm = support_lattice(S)
        sigma = self.sm.sigma
        reps = [min(b for b in range(S.size) if sigma[b] == X) for X in range(self.lat.size)]
        sperms = []
        for g in group.elements:
            sp = tuple(sigma[g[reps[X]]] for X in range(self.lat.size))
            sperms.append(sp)
        for gi, g in enumerate(group.elements):
            sp = sperms[gi]
            for b in range(S.size):
                if sp[sigma[b]] != sigma[g[b]]:
                    raise ValueError("support action ill-defined at element %d" % gi)
        self.support_perms = sperms

    def orbits_elements(self):
        return orbits_of_perms(self.group.generators, self.S.size)

    def orbits_supports(self):
        gen_idx = [self.group.index[g] for g in self.group.generators]
        return orbits_of_perms([self.support_perms[i] for i in gen_idx], self.lat.size)

    def support_orbit_index(self):
        orbs = self.orbits_supports()
        idx = [None] * self.lat.size
        for oi, orb in enumerate(orbs):
            for X in orb:
                idx[X] = oi
        return orbs, idx

    def stabilizer_support(self, X):
        members = [g for g, sp in zip(self.group.elements, self.support_perms) if sp[X] == X]
        return self.group.subgroup(members, assume_closed=True)

    def stabilizer_supports(self, Xs):
        members = [g for g, sp in zip(self.group.elements, self.support_perms)
                   if all(sp[X] == X for X in Xs)]
        return self.group.subgroup(members, assume_closed=True)

    def orbit_poset(self):
        """Poset on support orbits: [X] <= [Y] iff X <= g(Y) for some g."""
        orbs, idx = self.support_orbit_index()
        k = len(orbs)
        leq = [[False] * k for _ in range(k)]
        for a in range(k):
            X = orbs[a][0]
            for b in range(k):
                Y = orbs[b][0]
                leq[a][b] = any(self.lat.leq[X][sp[Y]] for sp in self.support_perms)
        return FinitePoset(leq), orbs, idx


def orbits_of_perms(perms, n):
    """Orbit partition of range(n) under a list of permutations; orbits are
    sorted lists, ordered by smallest member."""
    seen = [False] * n
    out = []
    for s in range(n):
        if seen[s]:
            continue
        orb = {s}
        stack = [s]
        seen[s] = True
        while stack:
            v = stack.pop()
            for p in perms:
                w = p[v]
                if not seen[w]:
                    seen[w] = True
                    orb.add(w)
                    stack.append(w)
        out.append(sorted(orb))
    return out


def verify_automorphisms(S, gens):
    """Exhaustively check that each generator is a semigroup automorphism.
    Returns (True, None) or (False, (generator index, b, b'))."""
    mul = S.mul
    n = S.size
    for gi, g in enumerate(gens):
        if sorted(g) != list(range(n)):
            return False, (gi, None, None)
        for a in range(n):
            ga = g[a]
            rga = mul[ga]
            ra = mul[a]
            for b in range(n):
                if g[ra[b]] != rga[g[b]]:
                    return False, (gi, a, b)
    return True, None


# ---------------------------------------------------------------------------
# cyclotomic values

_REL_CACHE = {}


def _relation_basis(m):
    """RREF basis of the kernel of evaluation Q[x]/(x^m-1) -> Q(zeta_m),
    spanned by all cyclic shifts of the prime orbit sums 1 + x^{m/p} + ...
    + x^{(p-1)m/p} for primes p dividing m."""
    if m not in _REL_CACHE:
        primes = []
        r = m
        d = 2
        while d * d <= r:
            if r % d == 0:
                primes.append(d)
                while r % d == 0:
                    r //= d
            d += 1
        if r > 1:
            primes.append(r)
        rows = []
        for p in primes:
            base = [Fraction(0)] * m
            for t in range(p):
                base[t * (m // p)] = Fraction(1)
            for shift in range(m):
                rows.append([base[(j - shift) % m] for j in range(m)])
        _REL_CACHE[m] = rref(rows, m)
    return _REL_CACHE[m]


class CyclotomicValue:
    """An element of Q(zeta_m), stored as a canonical coefficient vector in
    Q[x]/(x^m - 1).  Arithmetic promotes operands to the lcm level."""

    __slots__ = ("m", "coeffs")
    __hash__ = None

    def __init__(self, m, coeffs, _canonical=False):
        if m < 1:
            raise ValueError("m >= 1")
        cs = [Fraction(c) for c in coeffs]
        if len(cs) > m:
            raise ValueError("too many coefficients")
        cs += [Fraction(0)] * (m - len(cs))
        if not _canonical:
            R, piv = _relation_basis(m)
            cs = reduce_vector(cs, R, piv)
        self.m = m
        self.coeffs = tuple(cs)

    @classmethod
    def root(cls, m, j):
        """zeta_m^j."""
        c = [Fraction(0)] * m
        c[j % m] = Fraction(1)
        return cls(m, c)

    def promote(self, M):
        if M == self.m:
            return self
        if M % self.m:
            raise ValueError("cannot promote %d -> %d" % (self.m, M))
        c = [Fraction(0)] * M
        step = M // self.m
        for j, v in enumerate(self.coeffs):
            c[j * step] = v
        return CyclotomicValue(M, c)

    @staticmethod
    def _lift(v, m):
        if isinstance(v, CyclotomicValue):
            return v
        return CyclotomicValue(m, [Fraction(v)])

    def _pair(self, other):
        o = self._lift(other, self.m)
        M = lcm(self.m, o.m)
        return self.promote(M), o.promote(M)

    def __add__(self, other):
        a, b = self._pair(other)
        return CyclotomicValue(a.m, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicValue(self.m, [-x for x in self.coeffs], _canonical=True)

    def __sub__(self, other):
        return self + (-self._lift(other, self.m))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CyclotomicValue(self.m, [x * other for x in self.coeffs], _canonical=True)
        a, b = self._pair(other)
        m = a.m
        out = [Fraction(0)] * m
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        out[(i + j) % m] += x * y
        return CyclotomicValue(m, out)

    __rmul__ = __mul__

    def conj(self):
        c = [Fraction(0)] * self.m
        for j, v in enumerate(self.coeffs):
            c[(-j) % self.m] = v
        return CyclotomicValue(self.m, c)

    def is_zero(self):
        return all(v == 0 for v in self.coeffs)

    def as_fraction(self):
        """The rational this value equals, or None if irrational."""
        one = CyclotomicValue(self.m, [Fraction(1)])
        k = next((j for j, v in enumerate(one.coeffs) if v), None)
        assert k is not None
        r = self.coeffs[k] / one.coeffs[k]
        scaled = one * r
        if scaled.coeffs == self.coeffs:
            return r
        return None

    def is_rational(self):
        return self.as_fraction() is not None

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            f = self.as_fraction()
            return f is not None and f == other
        if isinstance(other, CyclotomicValue):
            a, b = self._pair(other)
            return a.coeffs == b.coeffs
        return NotImplemented

    def __repr__(self):
        return "CyclotomicValue(m=%d, %s)" % (self.m, list(self.coeffs))

    def to_json(self):
        return {"cyclotomic": {"m": self.m, "coeffs": [str(c) for c in self.coeffs]}}


def conj_value(v):
    return v.conj() if isinstance(v, CyclotomicValue) else v


def simplify_value(v):
    if isinstance(v, CyclotomicValue):
        f = v.as_fraction()
        return f if f is not None else v
    return v


def as_fraction(v):
    if isinstance(v, CyclotomicValue):
        f = v.as_fraction()
        if f is None:
            raise ValueError("value is not rational: %r" % (v,))
        return f
    return Fraction(v)


def value_to_json(v):
    v = simplify_value(v)
    if isinstance(v, CyclotomicValue):
        return v.to_json()
    return {"rational": str(Fraction(v))}


def value_from_json(obj):
    if "rational" in obj:
        return Fraction(obj["rational"])
    c = obj["cyclotomic"]
    return CyclotomicValue(c["m"], [Fraction(x) for x in c["coeffs"]])


# ---------------------------------------------------------------------------
# class functions

@dataclass
class ClassFunction:
    """A function on the conjugacy classes of a PermGroup.  Values are
    Fractions or CyclotomicValues."""

    group: PermGroup
    values: list

    def __post_init__(self):
        if len(self.values) != len(self.group.classes):
            raise ValueError("one value per conjugacy class")
        self.values = [simplify_value(v) for v in self.values]

    def value_on(self, perm):
        return self.values[self.group.class_of(perm)]

    def value_on_abstract(self, aperm):
        return self.values[self.group.class_of_abstract(aperm)]

    def dim(self):
        return self.values[self.group.class_of(pidentity(self.group.degree))]

    def __add__(self, other):
        assert self.group is other.group or self.group.elements == other.group.elements
        return ClassFunction(self.group, [a + b for a, b in zip(self.values, other.values)])

    def __sub__(self, other):
        assert self.group is other.group or self.group.elements == other.group.elements
        return ClassFunction(self.group, [a - b for a, b in zip(self.values, other.values)])

    def scale(self, c):
        return ClassFunction(self.group, [v * c for v in self.values])

    def tensor(self, other):
        assert self.group is other.group or self.group.elements == other.group.elements
        return ClassFunction(self.group, [a * b for a, b in zip(self.values, other.values)])

    def conj(self):
        return ClassFunction(self.group, [conj_value(v) for v in self.values])

    def is_zero(self):
        return all(v == 0 or (isinstance(v, CyclotomicValue) and v.is_zero())
                   for v in self.values)

    def to_json(self):
        return [value_to_json(v) for v in self.values]


def trivial_character(group):
    return ClassFunction(group, [Fraction(1)] * len(group.classes))


def zero_class_function(group):
    return ClassFunction(group, [Fraction(0)] * len(group.classes))


def permutation_character(group, point_perms=None, subset=None):
    """Fixed-point character.  point_perms maps each group element (by
    position in group.elements) to a permutation of some set; default is the
    group's own elements.  subset restricts the count to given points, and is
    checked to be stable."""
    if point_perms is None:
        point_perms = group.elements
    n = len(point_perms[0])
    pts = range(n) if subset is None else list(subset)
    if subset is not None:
        sset = set(pts)
        for p in point_perms:
            if any(p[i] not in sset for i in pts):
                raise ValueError("subset is not stable under the group")
    values = []
    for cls in group.classes:
        p = point_perms[cls[0]]
        values.append(Fraction(sum(1 for i in pts if p[i] == i)))
    return ClassFunction(group, values)


def inner_product(f1, f2, subgroup=None):
    """<f1, f2>_H = (1/|H|) sum_h f1(h) conj(f2(h)); H defaults to f1's
    group.  Both functions must be defined on every element of H."""
    H = subgroup if subgroup is not None else f1.group
    total = Fraction(0)
    for h in H.elements:
        total = f1.value_on(h) * conj_value(f2.value_on(h)) + total
    total = total * Fraction(1, H.order)
    return simplify_value(total)


def restrict_character(phi, H):
    """Restrict phi (on a group containing H's elements) to H."""
    return ClassFunction(H, [phi.value_on(r) for r in H.class_reps()])


def induce_character(phi, G):
    """Induce phi from its group H up to G (H's elements must all lie in G).
    ind(g) = (1/|H|) sum_{x in G} phi0(x^-1 g x)."""
    H = phi.group
    if not G.contains_all(H):
        raise ValueError("not a subgroup")
    xinvs = [pinv(x) for x in G.elements]
    values = []
    for rep in G.class_reps():
        total = Fraction(0)
        for x, xi in zip(G.elements, xinvs):
            y = pcompose(pcompose(xi, rep), x)
            if y in H.index:
                total = phi.value_on(y) + total
        values.append(total * Fraction(1, H.order))
    return ClassFunction(G, values)


# ---------------------------------------------------------------------------
# character tables

@dataclass
class CharacterTable:
    group: PermGroup
    irreducibles: list
    names: list
    source: str

    def validate(self):
        sizes = self.group.class_sizes()
        dimsq = Fraction(0)
        for i, chi in enumerate(self.irreducibles):
            dimsq += as_fraction(chi.dim()) ** 2
            for j, psi in enumerate(self.irreducibles):
                ip = inner_product(chi, psi)
                want = Fraction(1 if i == j else 0)
                if as_fraction(ip) != want:
                    raise ValueError("orthogonality fails at rows (%d,%d): %r" % (i, j, ip))
        if dimsq != self.group.order:
            raise ValueError("sum of squared dims %s != |G| %d" % (dimsq, self.group.order))
        if len(self.irreducibles) != len(self.group.classes):
            raise ValueError("need one irreducible per class")
        return True


def character_table(group, family, data=None):
    """Exact character table for a built-in family, or a user table.

    family: "cyclic" (generator 0 generates), "dihedral" (generators are a
    rotation of order n and a reflection), "symmetric" (abstract labels are
    the letter permutations), or "user" with data = JSON rows.
    """
    if family == "user":
        rows = [ClassFunction(group, [value_from_json(v) for v in row]) for row in data]
        tab = CharacterTable(group, rows, ["user%d" % i for i in range(len(rows))], "user")
        tab.validate()
        return tab
    if group.order == 1:
        tab = CharacterTable(group, [trivial_character(group)], ["triv"], family)
        tab.validate()
        return tab
    if family == "cyclic":
        tab = _cyclic_table(group)
    elif family == "dihedral":
        tab = _dihedral_table(group)
    elif family == "symmetric":
        tab = _symmetric_table(group)
    else:
        raise ValueError("unknown family %r" % (family,))
    tab.validate()
    return tab


def _power_index(group, r):
    n = perm_order(r)
    powers = {}
    p = pidentity(group.degree)
    for k in range(n):
        powers[p] = k
        p = pcompose(r, p)
    return n, powers


def _cyclic_table(group):
    r = group.generators[0]
    n, powers = _power_index(group, r)
    if n != group.order or len(powers) != group.order:
        raise ValueError("generator 0 does not generate a cyclic group of full order")
    ks = [powers[rep] for rep in group.class_reps()]
    rows, names = [], []
    for j in range(n):
        vals = [CyclotomicValue.root(n, j * k) for k in ks]
        rows.append(ClassFunction(group, vals))
        names.append("chi%d" % j)
    return CharacterTable(group, rows, names, "cyclic")


def _dihedral_table(group):
    gens = group.generators
    r = gens[0]
    n, powers = _power_index(group, r)
    if group.order != 2 * n:
        raise ValueError("expected order 2n for rotation order n")
    s = next((g for g in gens[1:] if g not in powers), None)
    if s is None or perm_order(s) != 2 or pcompose(pcompose(s, r), s) != pinv(r):
        raise ValueError("generators do not present a dihedral group")
    # classify each class rep: (k, None) for r^k, (k, "refl") for s r^k
    kinds = []
    for rep in group.class_reps():
        if rep in powers:
            kinds.append((powers[rep], False))
        else:
            t = pcompose(s, rep)
            if t not in powers:
                raise ValueError("element is neither rotation nor reflection")
            kinds.append((powers[t], True))
    rows, names = [], []

    def linear(rot_sign, refl_sign):
        vals = []
        for k, refl in kinds:
            v = Fraction(rot_sign) ** k
            if refl:
                v = v * refl_sign
            vals.append(v)
        return ClassFunction(group, vals)

    rows.append(linear(1, 1))
    names.append("triv")
    rows.append(linear(1, -1))
    names.append("det")
    if n % 2 == 0:
        rows.append(linear(-1, 1))
        names.append("alt+")
        rows.append(linear(-1, -1))
        names.append("alt-")
    for j in range(1, (n - 1) // 2 + 1 if n % 2 else n // 2):
        vals = []
        for k, refl in kinds:
            if refl:
                vals.append(Fraction(0))
            else:
                vals.append(CyclotomicValue.root(n, j * k) + CyclotomicValue.root(n, -j * k))
        rows.append(ClassFunction(group, vals))
        names.append("rho%d" % j)
    return CharacterTable(group, rows, names, "dihedral")


SYMMETRIC_TABLE_CAP = 8


def partitions_of(n):
    out = []

    def rec(rest, maxpart, acc):
        if rest == 0:
            out.append(tuple(acc))
            return
        for p in range(min(rest, maxpart), 0, -1):
            acc.append(p)
            rec(rest - p, p, acc)
            acc.pop()

    rec(n, n, [])
    return out


@lru_cache(maxsize=None)
def mn_character_value(lam, mu):
    """chi_lam at a permutation of cycle type mu, by border-strip recursion
    on beta numbers."""
    if sum(lam) != sum(mu):
        raise ValueError("sizes differ")
    if not mu:
        return 1
    ell, rest = mu[0], mu[1:]
    k = len(lam)
    beta = [lam[i] + (k - 1 - i) for i in range(k)]
    bset = set(beta)
    total = 0
    for b in beta:
        if b - ell >= 0 and (b - ell) not in bset:
            height = sum(1 for c in beta if b - ell < c < b)
            newb = sorted((bset - {b}) | {b - ell}, reverse=True)
            newlam = tuple(v - (k - 1 - i) for i, v in enumerate(newb))
            newlam = tuple(x for x in newlam if x)
            total += (-1 if height % 2 else 1) * mn_character_value(newlam, rest)
    return total


def _symmetric_table(group):
    if group.abstract is None:
        raise ValueError("symmetric table needs letter permutations as abstract labels")
    n = len(group.abstract[0])
    if n > SYMMETRIC_TABLE_CAP:
        raise ValueError("symmetric table capped at n = %d" % SYMMETRIC_TABLE_CAP)
    fact = 1
    for i in range(2, n + 1):
        fact *= i
    if group.order != fact:
        raise ValueError("group is not the full symmetric group on its letters")
    types = []
    for cls in group.classes:
        types.append(cycle_type(group.abstract[cls[0]]))
    if len(set(types)) != len(types):
        raise ValueError("conjugacy classes do not separate cycle types")
    rows, names = [], []
    for lam in partitions_of(n):
        vals = [Fraction(mn_character_value(lam, mu)) for mu in types]
        rows.append(ClassFunction(group, vals))
        names.append("+".join(map(str, lam)))
    return CharacterTable(group, rows, names, "symmetric")


def isotypic_multiplicities(table, phi):
    """Multiplicities <chi_i, phi> for each irreducible, as Fractions."""
    return [as_fraction(inner_product(chi, phi)) for chi in table.irreducibles]
