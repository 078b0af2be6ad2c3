from fractions import Fraction

import pytest

from lrbkit import (CharacterTable, ClassFunction, CyclotomicValue,
                    GroupAction, PermGroup, character_table, free_lrb,
                    induce_character, inner_product, isotypic_multiplicities,
                    permutation_character, restrict_character,
                    trivial_character, word_permutation)
from lrbkit.symmetry import (as_fraction, cycle_type, mn_character_value,
                             partitions_of, pcompose, perm_order, pinv)

from oracles import sn_class_reps


def sym(n):
    if n < 2:
        return PermGroup.close([], n)
    gens = [(1, 0) + tuple(range(2, n)), tuple(range(1, n)) + (0,)]
    return PermGroup.close(gens, n)


def test_perm_basics():
    p = (1, 2, 0, 4, 3)
    assert pcompose(p, pinv(p)) == (0, 1, 2, 3, 4)
    assert perm_order(p) == 6
    assert cycle_type(p) == (3, 2)


def test_close_symmetric_orders():
    for n, order in [(2, 2), (3, 6), (4, 24)]:
        assert sym(n).order == order


def test_close_cap():
    gens = [(1, 0) + tuple(range(2, 6)), tuple(range(1, 6)) + (0,)]
    with pytest.raises(ValueError):
        PermGroup.close(gens, 6, cap=100)


def test_classes_of_s4():
    G = sym(4)
    assert len(G.classes) == 5
    assert sorted(G.class_sizes()) == [1, 3, 6, 6, 8]
    types = {cycle_type(r) for r in G.class_reps()}
    assert types == {cycle_type(r) for r in sn_class_reps(4)}


def test_cyclotomic_arithmetic():
    i = CyclotomicValue.root(4, 1)
    assert (i * i).as_fraction() == Fraction(-1)
    assert not i.is_rational()
    assert (i * i.conj()).as_fraction() == Fraction(1)
    # the primitive 5th roots sum to -1
    total = sum((CyclotomicValue.root(5, j) for j in range(1, 5)),
                CyclotomicValue.root(5, 0) * Fraction(0))
    assert total.as_fraction() == Fraction(-1)


def test_cyclic_table():
    G = PermGroup.close([(1, 2, 3, 0)], 4)
    tab = character_table(G, "cyclic")
    assert tab.validate()
    assert len(tab.irreducibles) == 4
    gen_class = G.class_of((1, 2, 3, 0))
    vals = [chi.values[gen_class] for chi in tab.irreducibles]
    # on the generator: 1, -1, and the two primitive 4th roots
    rational = sorted(as_fraction(v) for v in vals
                      if not isinstance(v, CyclotomicValue) or v.is_rational())
    assert rational == [-1, 1]
    assert len(vals) == 4 and len(set(map(str, vals))) == 4


def test_dihedral_table():
    rot = (1, 2, 3, 0)
    refl = (0, 3, 2, 1)
    G = PermGroup.close([rot, refl], 4)
    assert G.order == 8
    tab = character_table(G, "dihedral")
    assert tab.validate()
    dims = sorted(as_fraction(chi.dim()) for chi in tab.irreducibles)
    assert dims == [1, 1, 1, 1, 2]


def test_symmetric_table_dims():
    letters = sorted(sym(4).elements)
    G = PermGroup.close([(1, 0, 2, 3), (1, 2, 3, 0)], 4,
                        abstract_generators=[(1, 0, 2, 3), (1, 2, 3, 0)])
    tab = character_table(G, "symmetric")
    assert tab.validate()
    dims = sorted(as_fraction(chi.dim()) for chi in tab.irreducibles)
    assert dims == [1, 1, 2, 3, 3]
    assert len(letters) == 24


def test_character_table_rejects_unknown_family():
    with pytest.raises(ValueError):
        character_table(sym(3), "sporadic")


def test_trivial_group_any_family():
    G = PermGroup.close([], 3)
    for family in ("cyclic", "dihedral", "symmetric"):
        assert len(character_table(G, family).irreducibles) == 1


def test_permutation_character_decomposes():
    G = sym(3)
    # the natural character on 3 points
    nat = ClassFunction(G, [Fraction(sum(1 for i in range(3) if r[i] == i))
                            for r in G.class_reps()])
    triv = trivial_character(G)
    assert as_fraction(inner_product(nat, triv)) == 1
    assert as_fraction(inner_product(nat, nat)) == 2


def test_frobenius_reciprocity():
    G = sym(3)
    H = G.subgroup([(0, 1, 2), (1, 0, 2)])
    phi = trivial_character(H)
    ind = induce_character(phi, G)
    assert as_fraction(ind.dim()) == 3
    for psi_vals in ([1, 1, 1], [2, 0, -1]):
        psi = ClassFunction(G, [Fraction(v) for v in psi_vals])
        lhs = as_fraction(inner_product(ind, psi))
        rhs = as_fraction(inner_product(phi, restrict_character(psi, H)))
        assert lhs == rhs


def test_isotypic_multiplicities_of_regular_character():
    gens = [(1, 0, 2), (1, 2, 0)]
    G = PermGroup.close(gens, 3, abstract_generators=gens)
    tab = character_table(G, "symmetric")
    reg = ClassFunction(G, [Fraction(6 if cycle_type(r) == (1, 1, 1) else 0)
                            for r in G.class_reps()])
    mults = isotypic_multiplicities(tab, reg)
    dims = [as_fraction(chi.dim()) for chi in tab.irreducibles]
    assert mults == dims


def test_mn_character_and_partitions():
    assert len(partitions_of(4)) == 5
    assert len(partitions_of(6)) == 11
    # border-strip recursion gives the irreducible values
    assert mn_character_value((2, 1), (1, 1, 1)) == 2
    assert mn_character_value((2, 1), (2, 1)) == 0
    assert mn_character_value((2, 1), (3,)) == -1
    assert mn_character_value((4,), (2, 2)) == 1
    assert mn_character_value((1, 1, 1), (2, 1)) == -1


def test_group_action_rejects_non_automorphism():
    S = free_lrb(2)
    G = PermGroup.close([word_permutation(2, (1, 0))], S.size)
    GroupAction(S, G)  # fine
    bad = list(range(S.size))
    bad[0], bad[1] = bad[1], bad[0]
    with pytest.raises(ValueError):
        GroupAction(S, PermGroup.close([tuple(bad)], S.size))


def test_group_action_orbits_free3():
    S = free_lrb(3)
    gens = [word_permutation(3, p) for p in [(1, 0, 2), (1, 2, 0)]]
    A = GroupAction(S, PermGroup.close(gens, S.size))
    # orbits by word pattern: e, a, ab, abc
    assert len(A.orbits_elements()) == 4
    assert len(A.orbits_supports()) == 4
    assert sorted(len(o) for o in A.orbits_elements()) == [1, 3, 6, 6]
    orbs, idx = A.support_orbit_index()
    for X in range(A.lat.size):
        assert A.stabilizer_support(X).order * len(orbs[idx[X]]) == 6
