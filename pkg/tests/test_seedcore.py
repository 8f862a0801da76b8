import random

import pytest

from clusterlift.seedcore import (cluster_valuation, disjoint_union, highly_freeze, in_laurent_ring, in_upper_bound,
                                  is_maximal_rank, mutate, mutate_exchange_matrix, new_seed, random_seed,
                                  semi_freeze, seed_from_partition, symmetrizer)


def a2_seed():
    # x1 -> x2, frozen x3 -> x1
    return new_seed(["1", "2", "3"], ["uf", "uf", "hf"], [[0, 1], [-1, 0], [1, 0]])


def test_matrix_mutation_rule():
    s = new_seed(["1", "2", "3"], ["uf", "uf", "uf"], [[0, 1, -1], [-1, 0, 1], [1, -1, 0]])
    m = mutate(s, "1")
    assert m.B == ((0, -1, 1), (1, 0, 0), (-1, 0, 0))


def test_exchange_relation_exact():
    s = a2_seed()
    m = mutate(s, "1")
    # b_31 = 1 > 0 (3 -> 1) and b_21 = -1 (1 -> 2): x1 x1' = x3 + x2
    assert m.x("1") * s.x("1") == s.x("2") + s.x("3")


def test_involution_on_random_seeds():
    rng = random.Random(3)
    for _ in range(30):
        s = random_seed(rng, 3, 1, 1)
        k = rng.choice(s.unfrozen)
        assert mutate(mutate(s, k), k) == s


def test_a2_pentagon():
    s = new_seed(["1", "2"], ["uf", "uf"], [[0, 1], [-1, 0]])
    p = s.mutate_path(["1", "2", "1", "2", "1"])
    assert sorted(map(str, p.cluster)) == sorted(map(str, s.cluster))
    assert p.cluster != s.cluster  # the period-5 return swaps the labels


def test_validation_errors():
    with pytest.raises(ValueError):
        new_seed(["1", "2"], ["uf", "uf"], [[1, 1], [-1, 0]])
    with pytest.raises(ValueError):
        new_seed(["1", "2"], ["uf", "uf"], [[0, 1], [1, 0]])
    with pytest.raises(ValueError):
        new_seed(["1", "1"], ["uf", "hf"], [[0], [1]])
    with pytest.raises(ValueError):
        mutate(a2_seed(), "3")
    with pytest.raises(KeyError):
        mutate(a2_seed(), "9")


def test_degree_condition_checked_and_mutated():
    with pytest.raises(ValueError):
        new_seed(["1", "2"], ["uf", "hf"], [[0], [1]], sigma=[[0], [1]])
    s = new_seed(["1", "2", "3"], ["uf", "hf", "hf"], [[0], [1], [-1]], sigma=[[0], [1], [1]])
    m = mutate(s, "1")
    assert m.degree.rows[0] == (1,)


def test_symmetrizer_of_b2():
    s = new_seed(["1", "2"], ["uf", "uf"], [[0, 1], [-2, 0]])
    d = symmetrizer(s)
    # diag(d) B is skew-symmetric
    assert d[0] * s.b("1", "2") == -d[1] * s.b("2", "1")


def test_freezing_classes():
    s = a2_seed()
    t = semi_freeze(s, ["3"])
    assert t.semi_frozen == ("3",) and t.highly_frozen == ()
    assert highly_freeze(t, ["3"]).kinds == s.kinds
    with pytest.raises(ValueError):
        semi_freeze(s, ["1"])


def test_laurent_ring_membership_depends_on_frozen_class():
    s = a2_seed()
    f = s.x("3") ** -1
    assert not in_laurent_ring(f, s)
    assert in_laurent_ring(f.extend(s.variables), semi_freeze(s, ["3"]))


def test_upper_bound_contains_cluster_variables():
    s = a2_seed()
    m = mutate(s, "1")
    assert in_upper_bound(m.x("1"), s)
    assert not in_upper_bound(s.x("1") ** -1 * s.x("2") ** -1 * 7 + s.x("3") ** -1, s)


def test_cluster_valuation():
    s = semi_freeze(a2_seed(), ["3"])
    f = s.x("3") ** -2 * s.x("1") + s.x("3")
    assert cluster_valuation(f, "3", s) == -2


def test_disjoint_union_and_partition():
    s = seed_from_partition(["1"], [[0], [1]], hf=["2"])
    u = disjoint_union(s, s)
    assert len(u.vertices) == 4 and len(u.unfrozen) == 2
    assert is_maximal_rank(u)


def test_cluster_valuation_agrees_in_neighbour_seed():
    from clusterlift.seedcore import rewrite_in_neighbour

    rng = random.Random(8)
    for _ in range(20):
        s = random_seed(rng, 3, 2, 0)
        # a cluster monomial with some negative frozen exponents
        f = s.x(s.unfrozen[0]) ** rng.randint(0, 2) * s.x(s.frozen[0]) ** rng.randint(-2, 2) * s.x(s.frozen[1]) ** rng.randint(-2, 2)
        f = f + s.x(s.frozen[0]) ** -1
        k = rng.choice(s.unfrozen)
        g, _ = rewrite_in_neighbour(f, s, k)
        for d in s.frozen:
            assert cluster_valuation(f, d, s) == cluster_valuation(g, s.varname(d))


def test_maximal_rank_is_mutation_invariant():
    rng = random.Random(9)
    for _ in range(20):
        s = random_seed(rng, 3, 1, 1)
        start = is_maximal_rank(s)
        for _ in range(8):
            s = mutate_exchange_matrix(s, rng.choice(s.unfrozen))
            assert is_maximal_rank(s) == start


def test_isolated_unfrozen_vertices_are_flagged():
    s = new_seed(["1", "2", "3"], ["uf", "uf", "hf"], [[0, 0], [0, 0], [1, 0]])
    assert s.isolated == ("2",)
