import random
from dataclasses import replace

import pytest

from clusterlift.lifting import (LiftingConfig, D_degrees, deletion_map, lift_in_steps, lift_seed,
                                 mutate_lifting_matrix, random_lifting, unlifted, verify_lift_mutation_square)
from clusterlift.seedcore import mutate, new_seed, random_seed


def small():
    return new_seed(["1", "2", "3"], ["uf", "uf", "hf"], [[0, -1], [1, 0], [0, 1]])


def test_example_lift():
    s = lift_seed(small(), LiftingConfig(("d",), ("1", "2", "3"), ((1, 2, 3),)))
    assert s.B == ((0, -1), (1, 0), (0, 1), (-2, -2))
    assert [str(p) for p in s.cluster][3] == str(s.x("d"))
    assert s.kind("d") == "sf"


def test_lifting_matrix_mutation_formula():
    t = small()
    cfg = LiftingConfig(("d",), ("1", "2", "3"), ((1, 2, 3),))
    # column of 1 is (0, 1, 0): B^+ picks x2, B^- picks nothing -> max(2, 0) - 1
    assert mutate_lifting_matrix(cfg, t, "1").nu == ((1, 2, 3),)
    # column of 2 is (-1, 0, 1): max(3, 1) - 2
    assert mutate_lifting_matrix(cfg, t, "2").nu == ((1, 1, 3),)


def test_bad_configs_rejected():
    with pytest.raises(ValueError):
        LiftingConfig(("d",), ("1", "2"), ((1,),))
    with pytest.raises(ValueError):
        LiftingConfig(("1",), ("1",), ((0,),))
    with pytest.raises(ValueError):
        lift_seed(small(), LiftingConfig(("d",), ("1", "2"), ((1, 1),)))


def test_square_commutes_on_random_seeds():
    rng = random.Random(11)
    for _ in range(40):
        t = random_seed(rng, rng.randint(1, 4), rng.randint(0, 2), rng.randint(0, 1))
        cfg = random_lifting(rng, t, rng.randint(1, 3))
        word = [rng.choice(t.unfrozen) for _ in range(3)]
        rep = verify_lift_mutation_square(t, cfg, word)
        assert rep.ok, rep.failures()


def test_deletion_and_homogeneity_after_mutation():
    t = small()
    cfg = LiftingConfig(("d",), t.vertices, ((1, 2, 3),))
    s = mutate(lift_seed(t, cfg), "1")
    assert deletion_map(s.x("1"), s.nu) == mutate(t, "1").x("1")
    assert D_degrees(s.x("1"), s.nu) == {s.nu.column("1")}
    assert unlifted(s).cluster == mutate(t, "1").cluster


def test_lifting_in_two_steps_matches_one_step():
    rng = random.Random(5)
    t = random_seed(rng, 3, 1, 1)
    cfg = random_lifting(rng, t, 2)
    once = lift_seed(replace(t, degree=None), cfg)
    twice = lift_in_steps(replace(t, degree=None), cfg, [cfg.D[0]])
    assert twice.B == once.B
    assert twice.cluster == once.cluster


def test_empty_lift_is_identity():
    t = small()
    assert lift_seed(t, LiftingConfig((), t.vertices, ())) is t
