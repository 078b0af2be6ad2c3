from math import comb

import pytest

from lrbkit import (boolean_lattice, catzero_cube_lrb, check_lrb_axioms,
                    cubulated_ngon, free_lrb, geometric_lattice,
                    geometric_lattice_lrb, pg_lattice, rank2_arrangement_faces,
                    support_lattice, word_permutation)
from lrbkit.constructions import (CubeComplexData, InvalidLatticeError,
                                  NotClosedError, ag_lattice, flag_permutation,
                                  lattice_interval, lrb_from_sign_vectors,
                                  prime_power, sign_product)


def is_automorphism(S, perm):
    return all(perm[S.mul[a][b]] == S.mul[perm[a]][perm[b]]
               for a in range(S.size) for b in range(S.size))


def test_free_lrb_sizes():
    # number of words without letter repetition: sum_k n!/(n-k)!
    for n, size in [(0, 1), (1, 2), (2, 5), (3, 16), (4, 65), (5, 326)]:
        assert free_lrb(n).size == size


def test_word_permutation_is_automorphism():
    S = free_lrb(3)
    for letter_perm in [(1, 0, 2), (1, 2, 0), (2, 1, 0)]:
        assert is_automorphism(S, word_permutation(3, letter_perm))


def test_word_permutation_rejects_bad_input():
    with pytest.raises(ValueError):
        word_permutation(3, (0, 0, 1))


def test_cubulated_ngon_counts():
    # 2n+1 vertices, 3n edges, n squares; supports are the crossing sets
    for n in (4, 5, 7):
        data, (rot, refl) = cubulated_ngon(n)
        assert len(data.cubes) == 6 * n + 1
        cube = catzero_cube_lrb(data)
        S = cube.semigroup
        assert S.size == 6 * n + 1
        ok, witness = check_lrb_axioms(S)
        assert ok, witness
        lat, _ = support_lattice(S)
        assert lat.size == 2 * n + 1
        assert is_automorphism(S, rot) and is_automorphism(S, refl)


def test_cubulated_ngon_too_small():
    with pytest.raises(ValueError):
        cubulated_ngon(3)


def test_cube_data_json_round_trip():
    data, _ = cubulated_ngon(4)
    back = CubeComplexData.from_json(data.to_json())
    assert back.k == data.k and back.cubes == data.cubes


def test_rank2_faces():
    for m in (2, 3, 4, 6):
        S, (rot, refl) = rank2_arrangement_faces(m)
        assert S.size == 4 * m + 1
        ok, witness = check_lrb_axioms(S)
        assert ok, witness
        assert is_automorphism(S, rot) and is_automorphism(S, refl)
        # rotation shifts by one line, so it has order m on rays
        p = list(range(S.size))
        for _ in range(m):
            p = [rot[i] for i in p]
        assert p == list(range(S.size))
    S1, gens1 = rank2_arrangement_faces(1)
    assert S1.size == 3


def test_sign_products_and_closure():
    assert sign_product((0, 1), (1, -1)) == (1, 1)
    assert sign_product((1, -1), (0, 1)) == (1, -1)
    with pytest.raises(NotClosedError):
        lrb_from_sign_vectors(2, [(0, 1), (1, 0)])


def test_boolean_lattice_shape():
    for n in (2, 3, 4):
        L = boolean_lattice(n)
        assert L.size == 2 ** n
        assert L.rank_sizes() == [comb(n, k) for k in range(n + 1)]
        assert len(L.atoms) == n


def test_pg_lattice_shape():
    # n is the vector space dimension, so n = 3, q = 2 is the Fano plane
    L = pg_lattice(3, 2)
    assert L.rank_sizes() == [1, 7, 7, 1]
    # q-binomial [3 choose 1]_3 = 13
    assert pg_lattice(3, 3).rank_sizes()[1] == 13
    assert pg_lattice(2, 2).rank_sizes() == [1, 3, 1]


def test_ag_lattice_shape():
    L = ag_lattice(2, 2)
    assert L.rank_sizes() == [1, 4, 6, 1]


def test_prime_power_detection():
    assert prime_power(8) == (2, 3)
    assert prime_power(9) == (3, 2)
    with pytest.raises(ValueError):
        prime_power(6)


def test_geometric_lattice_rejects_pentagon():
    # N5 is a lattice but not graded
    o, a, b, c, i = range(5)
    leq = [[False] * 5 for _ in range(5)]
    for x in range(5):
        leq[x][x] = True
        leq[o][x] = True
        leq[x][i] = True
    leq[a][b] = True
    with pytest.raises(InvalidLatticeError):
        geometric_lattice(leq)


def test_lattice_interval_of_boolean():
    L = boolean_lattice(4)
    M, kept = lattice_interval(L, L.atoms[0], L.top)
    assert M.size == 8 and len(kept) == 8
    assert M.rank_sizes() == [1, 3, 3, 1]


def test_flag_lrb_of_boolean():
    for n in (2, 3, 4):
        FL = geometric_lattice_lrb(boolean_lattice(n))
        S = FL.semigroup
        # saturated chains from an atom biject with nonempty words without
        # repeats, plus the empty flag
        assert S.size == free_lrb(n).size
        assert S.identity == 0 and FL.flags[0] == ()
        ok, witness = check_lrb_axioms(S)
        assert ok, witness
        for f in FL.complete_flags():
            assert all(S.mul[f][x] == f for x in range(S.size))


def test_flag_lrb_of_pg():
    FL = geometric_lattice_lrb(pg_lattice(3, 2))
    # empty flag, 7 points, 21 point-line flags, 21 complete flags
    assert FL.semigroup.size == 1 + 7 + 21 + 21
    assert len(FL.complete_flags()) == 21


def test_flag_permutation_is_automorphism():
    L = boolean_lattice(3)
    FL = geometric_lattice_lrb(L)
    # the lattice automorphism swapping atoms 0,1
    perm = []
    for x in range(L.size):
        members = [a for a in L.atoms if L.leq(a, x)]
        swapped = [{L.atoms[0]: L.atoms[1], L.atoms[1]: L.atoms[0]}.get(a, a)
                   for a in members]
        y = next(z for z in range(L.size)
                 if sorted(a for a in L.atoms if L.leq(a, z)) == sorted(swapped)
                 and L.rank[z] == L.rank[x])
        perm.append(y)
    assert is_automorphism(FL.semigroup, flag_permutation(FL, perm))
