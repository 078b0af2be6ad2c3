from fractions import Fraction

import pytest

from lrbkit import (Semigroup, check_lrb_axioms, free_lrb, is_connected,
                    is_hereditary_tree, meet_semilattice_lrb, semigroup_order,
                    support_lattice)
from lrbkit.semigroup import contraction, lrb_join

from oracles import boolean_leq, brute_supports, check_lrb_table


def chain_lrb(n):
    leq = [[i <= j for j in range(n)] for i in range(n)]
    return meet_semilattice_lrb(leq)


def test_free_lrb_is_lrb_and_sizes():
    for n, size in [(0, 1), (1, 2), (2, 5), (3, 16), (4, 65)]:
        S = free_lrb(n)
        assert S.size == size
        ok, witness = check_lrb_axioms(S)
        assert ok, witness
        assert check_lrb_table(S.mul)


def test_rejects_non_lrb_table():
    # Z/2 is a group, not a band
    S = Semigroup([[0, 1], [1, 0]], check=False)
    ok, witness = check_lrb_axioms(S)
    assert not ok and witness


def test_empty_semigroup_rejected():
    with pytest.raises(ValueError):
        Semigroup([])


def test_support_lattice_matches_brute_ideals():
    for S in [free_lrb(2), free_lrb(3), chain_lrb(4)]:
        lat, sm = support_lattice(S)
        ideals, sigma = brute_supports(S.mul)
        assert lat.size == len(ideals)
        assert list(sm.sigma) == sigma
        # sigma is a homomorphism onto the meet
        for a in range(S.size):
            for b in range(S.size):
                assert sm.sigma[S.mul[a][b]] == lat.meet[sm.sigma[a]][sm.sigma[b]]
        # the order is ideal containment
        for X in range(lat.size):
            for Y in range(lat.size):
                assert lat.leq[X][Y] == (ideals[X] <= ideals[Y])


def test_support_of_product_depends_only_on_supports():
    S = free_lrb(3)
    lat, sm = support_lattice(S)
    for a in range(S.size):
        for b in range(S.size):
            assert sm.sigma[S.mul[a][b]] == sm.sigma[S.mul[b][a]]


def test_semilattice_lrb_is_its_own_support_lattice():
    leq, _ = boolean_leq(3)
    S = meet_semilattice_lrb(leq)
    lat, sm = support_lattice(S)
    assert lat.size == S.size
    assert sorted(sm.sigma) == list(range(S.size))


def test_meet_semilattice_rejects_non_semilattice():
    # two maximal elements with no join is fine for meets, but two minimal
    # elements with no meet is not
    leq = [[True, False, True], [False, True, True], [False, False, True]]
    # elements 0,1 incomparable with only a common upper bound: no meet
    with pytest.raises(ValueError):
        meet_semilattice_lrb(leq)


def test_semigroup_order_and_tree_flags():
    S = free_lrb(2)
    P = semigroup_order(S)
    # identity is the unique maximum
    top = [i for i in range(P.size) if not any(P.lt(i, j) for j in range(P.size))]
    assert top == [S.identity]
    assert is_hereditary_tree(S)
    assert is_connected(S)


def test_contraction_of_free_lrb():
    S = free_lrb(3)
    lat, sm = support_lattice(S)
    # contracting at an atom support leaves the words through that letter
    X = next(Z for Z in range(lat.size) if lat.rank[Z] == 1)
    T, kept = contraction(S, X, lat, sm)
    ok, witness = check_lrb_axioms(T)
    assert ok, witness
    assert T.size == len(kept)


def test_lrb_join_with_point():
    point = Semigroup([[0]])
    S = free_lrb(2)
    J = lrb_join(point, S)
    assert J.size == S.size + 1
    ok, witness = check_lrb_axioms(J)
    assert ok, witness
    # the point absorbs everything
    for b in range(1, J.size):
        assert J.mul[0][b] == 0 and J.mul[b][0] == 0


def test_json_round_trip():
    S = free_lrb(2)
    T = Semigroup.from_json(S.to_json())
    assert T.mul == S.mul and T.labels == S.labels and T.identity == S.identity
