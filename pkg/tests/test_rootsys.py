import numpy as np
import pytest

from clusterlift.rootsys import (WeylWord, cartan, inversions, is_reduced, longest_word, parabolic_longest,
                                 reduced_word_of_matrix, reduced_words, weyl_matrix, word_act, word_stats)


def test_g2_cartan_and_symmetrizer():
    g2 = cartan("G2")
    assert g2.matrix.tolist() == [[2, -3], [-1, 2]]
    assert tuple(g2.d) == (1, 3)


@pytest.mark.parametrize("label,count", [("A1", 1), ("A2", 3), ("A3", 6), ("B2", 4), ("B3", 9),
                                         ("C3", 9), ("D4", 12), ("G2", 6)])
def test_positive_root_counts(label, count):
    cd = cartan(label)
    assert len(cd.positive_roots) == count
    assert len(longest_word(cd)) == count


def test_family_and_rank_spellings_agree():
    assert cartan("A", 3).matrix.tolist() == cartan("A3").matrix.tolist()
    prod = cartan("B2xA1")
    assert prod.rank == 3


def test_reduced_word_counts():
    assert len(reduced_words(longest_word(cartan("A3")))) == 16
    assert len(reduced_words(longest_word(cartan("B2")))) == 2


def test_paper_order_is_reversed():
    cd = cartan("A3")
    w = WeylWord.from_paper_order((1, 2, 3, 1, 2, 1), cd)
    assert w.letters == (1, 2, 1, 3, 2, 1)
    assert w.paper_order() == (1, 2, 3, 1, 2, 1)


def test_non_reduced_word_rejected_by_predicate():
    cd = cartan("A2")
    assert not is_reduced(WeylWord((1, 1), cd))
    assert is_reduced(WeylWord((1, 2, 1), cd))


def test_inversions_are_positive_and_distinct():
    cd = cartan("B3")
    w = longest_word(cd)
    inv = inversions(w)
    assert len(set(map(tuple, inv))) == len(w)
    assert all(min(b) >= 0 for b in inv)


def test_longest_element_acts_by_minus_involution():
    cd = cartan("A2")
    w0 = longest_word(cd)
    assert tuple(word_act(w0, cd.fundamental(1))) == (0, -1)


def test_matrix_round_trip():
    cd = cartan("C3")
    w = WeylWord((1, 2, 3, 2), cd)
    again = WeylWord(reduced_word_of_matrix(weyl_matrix(w), cd), cd)
    assert np.array_equal(weyl_matrix(again), weyl_matrix(w))
    assert len(again) == 4


def test_parabolic_longest_length():
    assert len(parabolic_longest(cartan("A3"), (1, 2))) == 3


def test_word_stats_successors():
    st = word_stats(WeylWord((1, 2, 1), cartan("A2")))
    assert st.k_plus(1) == 3
    assert st.k_plus(2) == 4  # past the end: frozen


def _all_words(rank, length):
    import itertools

    return itertools.product(range(1, rank + 1), repeat=length)


@pytest.mark.parametrize("label", ["A2", "B2", "G2"])
def test_is_reduced_matches_brute_force(label):
    cd = cartan(label)
    shortest = {}
    for length in range(0, 7):
        for letters in _all_words(cd.rank, length):
            key = weyl_matrix(WeylWord(letters, cd)).tobytes()
            shortest.setdefault(key, length)
    for length in range(0, 7):
        for letters in _all_words(cd.rank, length):
            w = WeylWord(letters, cd)
            assert is_reduced(w) == (shortest[weyl_matrix(w).tobytes()] == length), letters


@pytest.mark.parametrize("label", ["A3", "B3", "C3", "G2"])
def test_reversal_inverts_action(label):
    cd = cartan(label)
    for w in reduced_words(longest_word(cd), 20):
        for i in range(1, cd.rank + 1):
            lam = tuple(3 * x for x in cd.fundamental(i))
            assert tuple(word_act(w, word_act(w.reverse(), lam))) == lam


@pytest.mark.parametrize("label", ["A3", "B3", "G2"])
def test_inversion_sets_agree_across_reduced_words(label):
    cd = cartan(label)
    words = reduced_words(longest_word(cd), 30)
    sets = {frozenset(map(tuple, inversions(w))) for w in words}
    assert sets == {frozenset(map(tuple, cd.positive_roots))}
