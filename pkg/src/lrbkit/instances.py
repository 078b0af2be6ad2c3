"""Instance resolution for the command line tools.

An instance bundles the object under study (a band, or a geometric lattice)
with a symmetry group given by permutation generators, plus optional extras:
sign data for reflection arrangements (the determinant of each generator)
and a character table family for isotypic decompositions.

Instances come from two sources.

Builtin references, ``builtin:<family>?<params>`` in URL query syntax:

    builtin:free-lrb?n=3&group=symmetric
    builtin:boolean-flags?n=3&group=symmetric
    builtin:boolean-semilattice?n=2
    builtin:chain?n=3
    builtin:cubulated-ngon?n=4&group=dihedral
    builtin:rank2?m=3&group=dihedral
    builtin:pg-flags?n=2&q=2&group=atoms
    builtin:boolean-lattice?n=4&group=symmetric
    builtin:pg-lattice?n=2&q=2&group=atoms
    builtin:ag-lattice?n=2&q=2

or a path to a JSON file with fields

    kind          "table" | "lattice" | "arrangement" | "cubes"
    mul           multiplication table          (kind table)
    identity      index of the identity or null (kind table)
    leq           order matrix of a geometric lattice (kind lattice)
    k, faces      sign vectors over k lines, e.g. ["0++", "+-0"] (arrangement)
    cubes         {"k":, "cubes":} cube sign vectors (kind cubes)
    labels        optional element names
    generators    permutations: of elements (band kinds) or of lattice points
    abstract_generators   optional faithful relabeling of the generators,
                          e.g. letter permutations behind induced ones
    det_signs     +-1 per generator (arrangement kinds)
    character_table       "cyclic" | "dihedral" | "symmetric"

The group is whatever the generators generate; no generators means the
trivial group.  Lattice-kind instances feed the chain and flag machinery
(descent operators, derangement characters, top-to-random spectra); band
kinds feed the algebra machinery directly.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
import json
import urllib.parse

from .constructions import (CubeComplexData, catzero_cube_lrb, cubulated_ngon,
                            rank2_arrangement_faces, lrb_from_sign_vectors,
                            sign_vector_of, boolean_lattice, pg_lattice,
                            ag_lattice, geometric_lattice, free_lrb,
                            word_permutation)
from .fields import QQ
from .semigroup import Semigroup, meet_semilattice_lrb
from .symmetry import ClassFunction, pcompose, pidentity


@dataclass
class Instance:
    """A resolved instance: the object, its symmetry generators, extras."""

    key: str
    kind: str                    # "lrb" or "lattice"
    semigroup: object = None
    lattice: object = None
    generators: list = field(default_factory=list)
    abstract_gens: list = None   # faithful relabeling, or None
    det_signs: list = None       # +-1 per generator, arrangements only
    table_family: str = None
    cube: object = None          # CubeLRB for cube-complex instances
    source: str = ""

    def size_note(self):
        if self.kind == "lrb":
            return "band with %d elements" % self.semigroup.size
        return "lattice with %d elements" % self.lattice.size


def sign_homomorphism(group, gens, signs):
    """Extend +-1 generator signs to the whole group multiplicatively.

    Raises when no such homomorphism exists (two words for the same element
    with different sign products), which happens e.g. for an arrangement
    action that is not faithful enough to separate rotations from
    reflections."""
    if not gens:
        from .symmetry import trivial_character
        return trivial_character(group)
    ident = pidentity(len(group.elements[0]))
    val = {ident: 1}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            s = val[g]
            for p, sp in zip(gens, signs):
                h = pcompose(p, g)
                t = s * sp
                if h in val:
                    if val[h] != t:
                        raise ValueError("generator signs are not multiplicative")
                else:
                    val[h] = t
                    nxt.append(h)
        frontier = nxt
    if len(val) != len(group.elements):
        raise ValueError("signs given for a proper subgroup only")
    return ClassFunction(group, [Fraction(val[r]) for r in group.class_reps()])


# ---------------------------------------------------------------------------
# symmetric generator kits

def _symmetric_gens(n):
    """Transposition and cycle generating S_n (empty for n < 2)."""
    if n < 2:
        return []
    if n == 2:
        return [(1, 0)]
    cyc = tuple(range(1, n)) + (0,)
    tr = (1, 0) + tuple(range(2, n))
    return [tr, cyc]


def _boolean_subsets(n):
    # same interning order as boolean_lattice
    return sorted((frozenset(c) for r in range(n + 1) for c in combinations(range(n), r)),
                  key=lambda s: (len(s), sorted(s)))


def _subset_perm(subsets, index, letter_perm):
    return tuple(index[frozenset(letter_perm[x] for x in s)] for s in subsets)


def _boolean_lattice_gens(n):
    subsets = _boolean_subsets(n)
    index = {s: i for i, s in enumerate(subsets)}
    letters = _symmetric_gens(n)
    return [_subset_perm(subsets, index, lp) for lp in letters], letters


def _rank2_lattice_gens(L):
    """Atom permutations as lattice permutations; only valid in rank 2,
    where bottom and top are the only non-atoms."""
    if max(L.rank) != 2:
        raise ValueError("group=atoms needs a rank 2 lattice")
    atoms = L.atoms
    pos = {a: i for i, a in enumerate(atoms)}
    out, letters = [], _symmetric_gens(len(atoms))
    for lp in letters:
        p = list(range(L.size))
        for a in atoms:
            p[a] = atoms[lp[pos[a]]]
        out.append(tuple(p))
    return out, letters


def _dihedral_pick(group, rotation, reflection):
    if group == "dihedral":
        return [rotation, reflection]
    if group == "cyclic":
        return [rotation]
    if group == "trivial":
        return []
    raise ValueError("group must be dihedral, cyclic or trivial, not %r" % (group,))


# ---------------------------------------------------------------------------
# builtin families

def _b_free(key, p):
    n = int(p.pop("n"))
    grp = p.pop("group", "symmetric")
    S = free_lrb(n)
    if grp == "symmetric":
        letters = _symmetric_gens(n)
        gens = [word_permutation(n, lp) for lp in letters]
        fam = "symmetric" if letters else "cyclic"
        return Instance(key=key, kind="lrb", semigroup=S, generators=gens,
                        abstract_gens=letters or None, table_family=fam,
                        source="free band on %d letters, letter symmetries" % n)
    if grp == "trivial":
        return Instance(key=key, kind="lrb", semigroup=S, table_family="cyclic",
                        source="free band on %d letters" % n)
    raise ValueError("group must be symmetric or trivial, not %r" % (grp,))


def _b_boolean_flags(key, p):
    from .constructions import geometric_lattice_lrb, flag_permutation
    n = int(p.pop("n"))
    grp = p.pop("group", "symmetric")
    L = boolean_lattice(n)
    FL = geometric_lattice_lrb(L)
    if grp == "symmetric":
        latgens, letters = _boolean_lattice_gens(n)
        gens = [flag_permutation(FL, q) for q in latgens]
        fam = "symmetric" if letters else "cyclic"
        return Instance(key=key, kind="lrb", semigroup=FL.semigroup, generators=gens,
                        abstract_gens=letters or None, table_family=fam,
                        source="flags of the boolean lattice on %d atoms" % n)
    if grp == "trivial":
        return Instance(key=key, kind="lrb", semigroup=FL.semigroup, table_family="cyclic",
                        source="flags of the boolean lattice on %d atoms" % n)
    raise ValueError("group must be symmetric or trivial, not %r" % (grp,))


def _b_boolean_semilattice(key, p):
    n = int(p.pop("n"))
    grp = p.pop("group", "trivial")
    subsets = _boolean_subsets(n)
    leq = [[a <= b for b in subsets] for a in subsets]
    labels = ["{" + ",".join(map(str, sorted(s))) + "}" for s in subsets]
    S = meet_semilattice_lrb(leq, labels=labels)
    gens, letters = ([], [])
    if grp == "symmetric":
        gens, letters = _boolean_lattice_gens(n)
    elif grp != "trivial":
        raise ValueError("group must be symmetric or trivial, not %r" % (grp,))
    fam = "symmetric" if letters else "cyclic"
    return Instance(key=key, kind="lrb", semigroup=S, generators=gens,
                    abstract_gens=letters or None, table_family=fam,
                    source="meet semilattice of subsets of a %d-set" % n)


def _b_chain(key, p):
    n = int(p.pop("n"))
    if n < 1:
        raise ValueError("chain needs n >= 1")
    leq = [[i <= j for j in range(n)] for i in range(n)]
    S = meet_semilattice_lrb(leq, labels=["c%d" % i for i in range(n)])
    return Instance(key=key, kind="lrb", semigroup=S, table_family="cyclic",
                    source="chain semilattice with %d elements" % n)


def _b_cubulated_ngon(key, p):
    n = int(p.pop("n"))
    grp = p.pop("group", "dihedral")
    data, (rot, refl) = cubulated_ngon(n)
    cube = catzero_cube_lrb(data)
    inst = Instance(key=key, kind="lrb", semigroup=cube.semigroup,
                    generators=_dihedral_pick(grp, rot, refl),
                    table_family={"dihedral": "dihedral", "cyclic": "cyclic",
                                  "trivial": "cyclic"}[grp],
                    source="cubulated %d-gon" % n)
    inst.cube = cube
    return inst


def _b_rank2(key, p):
    m = int(p.pop("m"))
    grp = p.pop("group", "dihedral")
    S, (rot, refl) = rank2_arrangement_faces(m)
    if m == 1 and grp == "dihedral":
        # the face action cannot tell the half-turn from the reflection
        # across the line, so the determinant data would be inconsistent
        raise ValueError("rank2 with m=1 supports group=cyclic or trivial only")
    gens = _dihedral_pick(grp, rot, refl)
    signs = {"dihedral": [1, -1], "cyclic": [1], "trivial": []}[grp]
    return Instance(key=key, kind="lrb", semigroup=S, generators=gens,
                    det_signs=signs,
                    table_family={"dihedral": "dihedral", "cyclic": "cyclic",
                                  "trivial": "cyclic"}[grp],
                    source="faces of %d lines through the plane's origin" % m)


def _pg_instance(key, p, want_flags):
    from .constructions import geometric_lattice_lrb, flag_permutation
    n = int(p.pop("n"))
    q = int(p.pop("q"))
    grp = p.pop("group", "trivial")
    L = pg_lattice(n, q)
    gens, letters = ([], [])
    if grp == "atoms":
        gens, letters = _rank2_lattice_gens(L)
    elif grp != "trivial":
        raise ValueError("group must be atoms or trivial, not %r" % (grp,))
    fam = "symmetric" if letters else "cyclic"
    src = "subspace lattice of F_%d^%d" % (q, n)
    if not want_flags:
        return Instance(key=key, kind="lattice", lattice=L, generators=gens,
                        abstract_gens=letters or None, table_family=fam, source=src)
    FL = geometric_lattice_lrb(L)
    fgens = [flag_permutation(FL, g) for g in gens]
    return Instance(key=key, kind="lrb", semigroup=FL.semigroup, generators=fgens,
                    abstract_gens=letters or None, table_family=fam,
                    source="flags of the " + src)


def _b_pg_flags(key, p):
    return _pg_instance(key, p, want_flags=True)


def _b_pg_lattice(key, p):
    return _pg_instance(key, p, want_flags=False)


def _b_boolean_lattice(key, p):
    n = int(p.pop("n"))
    grp = p.pop("group", "symmetric")
    L = boolean_lattice(n)
    gens, letters = ([], [])
    if grp == "symmetric":
        gens, letters = _boolean_lattice_gens(n)
    elif grp != "trivial":
        raise ValueError("group must be symmetric or trivial, not %r" % (grp,))
    fam = "symmetric" if letters else "cyclic"
    return Instance(key=key, kind="lattice", lattice=L, generators=gens,
                    abstract_gens=letters or None, table_family=fam,
                    source="boolean lattice on %d atoms" % n)


def _b_ag_lattice(key, p):
    n = int(p.pop("n"))
    q = int(p.pop("q"))
    L = ag_lattice(n, q)
    return Instance(key=key, kind="lattice", lattice=L, table_family="cyclic",
                    source="affine subset lattice of F_%d^%d" % (q, n))


BUILTIN_FAMILIES = {
    "free-lrb": _b_free,
    "boolean-flags": _b_boolean_flags,
    "boolean-semilattice": _b_boolean_semilattice,
    "chain": _b_chain,
    "cubulated-ngon": _b_cubulated_ngon,
    "rank2": _b_rank2,
    "pg-flags": _b_pg_flags,
    "pg-lattice": _b_pg_lattice,
    "boolean-lattice": _b_boolean_lattice,
    "ag-lattice": _b_ag_lattice,
}


def _parse_builtin(text):
    rest = text[len("builtin:"):]
    name, _, query = rest.partition("?")
    if name not in BUILTIN_FAMILIES:
        raise ValueError("unknown builtin %r (have: %s)" %
                         (name, ", ".join(sorted(BUILTIN_FAMILIES))))
    params = {}
    if query:
        for k, vs in urllib.parse.parse_qs(query, keep_blank_values=True).items():
            if len(vs) != 1:
                raise ValueError("parameter %r given twice" % (k,))
            params[k] = vs[0]
    return name, params


def canonical_builtin_key(name, params):
    if not params:
        return "builtin:" + name
    return "builtin:%s?%s" % (name, "&".join("%s=%s" % (k, params[k])
                                             for k in sorted(params)))


def builtin_instance(text):
    name, params = _parse_builtin(text)
    key = canonical_builtin_key(name, params)
    p = dict(params)
    inst = BUILTIN_FAMILIES[name](key, p)
    if p:
        raise ValueError("unknown parameters %s for builtin %r" % (sorted(p), name))
    return inst


# ---------------------------------------------------------------------------
# JSON instance files

def instance_from_json(obj, key):
    kind = obj.get("kind")
    gens = [tuple(g) for g in obj.get("generators", [])]
    agens = obj.get("abstract_generators")
    if agens is not None:
        agens = [tuple(g) for g in agens]
    fam = obj.get("character_table")
    labels = obj.get("labels")
    if kind == "table":
        S = Semigroup(obj["mul"], labels=labels, identity=obj.get("identity"))
        from .semigroup import check_lrb_axioms
        ok, witness = check_lrb_axioms(S)
        if not ok:
            raise ValueError("multiplication table is not an LRB: %r" % (witness,))
        return Instance(key=key, kind="lrb", semigroup=S, generators=gens,
                        abstract_gens=agens, table_family=fam, source="table file")
    if kind == "lattice":
        L = geometric_lattice([[bool(v) for v in row] for row in obj["leq"]],
                              labels=labels)
        return Instance(key=key, kind="lattice", lattice=L, generators=gens,
                        abstract_gens=agens, table_family=fam, source="lattice file")
    if kind == "arrangement":
        k = obj["k"]
        vecs = [sign_vector_of(f) for f in obj["faces"]]
        S = lrb_from_sign_vectors(k, vecs)
        if labels:
            S = Semigroup(S.mul, labels=labels, identity=S.identity, check=False)
        signs = obj.get("det_signs")
        if signs is not None and len(signs) != len(gens):
            raise ValueError("det_signs must match generators one for one")
        return Instance(key=key, kind="lrb", semigroup=S, generators=gens,
                        abstract_gens=agens, det_signs=signs, table_family=fam,
                        source="arrangement file")
    if kind == "cubes":
        data = CubeComplexData.from_json(obj["cubes"])
        cube = catzero_cube_lrb(data)
        inst = Instance(key=key, kind="lrb", semigroup=cube.semigroup,
                        generators=gens, abstract_gens=agens, table_family=fam,
                        source="cube complex file")
        inst.cube = cube
        return inst
    raise ValueError("kind must be table, lattice, arrangement or cubes, not %r"
                     % (kind,))


def resolve_instance(text):
    """Resolve a builtin reference or a JSON file path to an Instance."""
    if text.startswith("builtin:"):
        return builtin_instance(text)
    with open(text) as fh:
        obj = json.load(fh)
    return instance_from_json(obj, key=text)


# corpus the full verification run walks; ordered cheap to expensive
VERIFY_CORPUS = [
    "builtin:boolean-semilattice?n=2",
    "builtin:boolean-semilattice?n=3&group=symmetric",
    "builtin:chain?n=3",
    "builtin:free-lrb?n=2&group=symmetric",
    "builtin:free-lrb?n=3&group=symmetric",
    "builtin:free-lrb?n=4&group=symmetric",
    "builtin:pg-flags?n=2&q=2&group=atoms",
    "builtin:rank2?m=3&group=dihedral",
    "builtin:rank2?m=3&group=trivial",
    "builtin:rank2?m=4&group=dihedral",
    "builtin:rank2?m=4&group=cyclic",
    "builtin:cubulated-ngon?n=4&group=dihedral",
    "builtin:cubulated-ngon?n=4&group=cyclic",
    "builtin:cubulated-ngon?n=5&group=dihedral",
    "builtin:cubulated-ngon?n=5&group=cyclic",
    "builtin:cubulated-ngon?n=6&group=dihedral",
    "builtin:cubulated-ngon?n=6&group=cyclic",
    "builtin:boolean-lattice?n=3&group=symmetric",
    "builtin:boolean-lattice?n=4&group=symmetric",
    "builtin:pg-lattice?n=2&q=2&group=atoms",
    "builtin:ag-lattice?n=2&q=2",
]
