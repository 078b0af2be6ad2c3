from fractions import Fraction

from lrbkit import (FinitePoset, boolean_lattice, catzero_cube_lrb,
                    cubulated_ngon, free_lrb, pg_lattice, reduced_homology)
from lrbkit.constructions import rank2_arrangement_faces
from lrbkit.symmetry import PermGroup, as_fraction
from lrbkit.topology import (chain_count, contragredient,
                             equivariant_homology_characters,
                             interval_homology_character, is_cw_lrb,
                             is_hereditary_homological, join_homology_check,
                             mobius, open_interval_poset, poset_chains,
                             poset_join, reduced_euler_characteristic)

from oracles import boolean_leq, brute_mobius


def two_chain():
    return FinitePoset([[True, True], [False, True]])


def antichain(n):
    return FinitePoset([[i == j for j in range(n)] for i in range(n)])


def test_poset_chains_and_counts():
    P = two_chain()
    ch = poset_chains(P)
    assert ch[-1] == [()]
    assert ch[0] == [(0,), (1,)]
    assert ch[1] == [(0, 1)]
    assert chain_count(P) == [2, 1]
    assert reduced_euler_characteristic(P) == 0


def test_boolean_proper_part_is_a_sphere():
    for n in (2, 3, 4):
        L = boolean_lattice(n)
        sub, _ = open_interval_poset(L.poset, L.bottom, L.top)
        assert reduced_homology(sub) == {n - 2: 1}


def test_homology_edge_cases():
    assert reduced_homology(antichain(0)) == {-1: 1}
    assert reduced_homology(antichain(2)) == {0: 1}
    # a cone is contractible
    assert reduced_homology(two_chain()) == {}


def test_mobius_against_defining_recursion():
    leq, _ = boolean_leq(4)
    L = boolean_lattice(4)
    for y in range(L.size):
        assert mobius(L.poset, L.bottom, y) == brute_mobius(leq, 0, y)
    P = pg_lattice(3, 2)
    # mu(0, 1) = -q^3 for the rank-3 subspace lattice
    assert mobius(P.poset, P.bottom, P.top) == -8
    assert brute_mobius(P.poset.leq, P.bottom, P.top) == -8


def test_euler_characteristic_matches_homology():
    for P in [antichain(3), two_chain(), poset_join(antichain(2), antichain(2))]:
        dims = reduced_homology(P)
        chi = sum((-1) ** d * v for d, v in dims.items())
        assert chi == reduced_euler_characteristic(P)


def test_join_kunneth():
    # S^0 * S^0 is a circle
    rep = join_homology_check(antichain(2), antichain(2))
    assert rep["join_homology"] == {1: 1}
    rep = join_homology_check(antichain(2), two_chain())
    assert rep["join_homology"] == {}


def test_top_homology_of_boolean_is_sign():
    L = boolean_lattice(3)
    sub, idx = open_interval_poset(L.poset, L.bottom, L.top)
    pos = {v: i for i, v in enumerate(idx)}

    def induced(letter_perm):
        out = []
        for v in idx:
            members = sorted(letter_perm[a] for a in range(3) if L.leq(L.atoms[a], v))
            w = next(z for z in range(L.size)
                     if sorted(a for a in range(3) if L.leq(L.atoms[a], z)) == members)
            out.append(pos[w])
        return tuple(out)

    gens = [(1, 0, 2), (1, 2, 0)]
    G = PermGroup.close([induced(p) for p in gens], sub.size)
    perms = list(G.elements)
    chars = equivariant_homology_characters(sub, perms, G)
    assert set(chars) == {1}
    chi = chars[1]
    assert as_fraction(chi.dim()) == 1
    # sign character: -1 on the induced transposition
    assert as_fraction(chi.value_on(induced((1, 0, 2)))) == -1
    back = contragredient(chi)
    assert all(str(a) == str(b) for a, b in zip(back.values, chi.values))


def test_interval_character_sentinels():
    L = boolean_lattice(2)
    G = PermGroup.close([], L.size)
    perms = list(G.elements)
    # closed point: one class in degree -2
    chi = interval_homology_character(L.poset, L.bottom, L.bottom, perms, G, -2)
    assert as_fraction(chi.dim()) == 1
    # cover pair: empty complex in degree -1
    chi = interval_homology_character(L.poset, L.bottom, L.atoms[0], perms, G, -1)
    assert as_fraction(chi.dim()) == 1


def test_cw_recognition():
    data, _ = cubulated_ngon(4)
    ok, witness = is_cw_lrb(catzero_cube_lrb(data).semigroup)
    assert ok, witness
    S, _ = rank2_arrangement_faces(3)
    ok, witness = is_cw_lrb(S)
    assert ok, witness
    ok, witness = is_cw_lrb(free_lrb(3))
    assert not ok and witness


def test_hereditary_homological():
    assert is_hereditary_homological(free_lrb(3))
    data, _ = cubulated_ngon(4)
    assert not is_hereditary_homological(catzero_cube_lrb(data).semigroup)
