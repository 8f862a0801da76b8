import random
from fractions import Fraction

import pytest

from clusterlift import branching as br
from clusterlift import minor_oracle as mo
from clusterlift.rootsys import WeylWord, cartan


def test_sbar_squares_to_minus_one_on_its_block():
    s = mo.sbar(3, 1)
    assert (s @ s).evaluate() == [[-1, 0, 0], [0, -1, 0], [0, 0, 1]]


def test_inverse_and_determinant():
    rng = random.Random(1)
    g = mo.random_sl(4, rng)
    assert g.det() == mo.ONE
    assert (g @ g.inverse()).evaluate() == mo.RatLaurentMatrix.identity(4).evaluate()


def test_principal_minors_of_identity():
    e = mo.RatLaurentMatrix.identity(3)
    assert mo.minor_value(1, (), (), e) == 1
    assert mo.minor_value(1, (1,), (), e) == 0


def test_minor_is_independent_of_reduced_word():
    rng = random.Random(2)
    g = mo.random_sl(3, rng)
    assert mo.generalized_minor(1, (), (1, 2, 1), g) == mo.generalized_minor(1, (), (2, 1, 2), g)


def test_minor_index_checked():
    with pytest.raises(ValueError):
        mo.generalized_minor(3, (), (), mo.RatLaurentMatrix.identity(3))


def test_fz_identity_random_sl4():
    rng = random.Random(4)
    for _ in range(10):
        alpha, v, w = mo.random_fz_case(4, rng)
        assert mo.fz_identity_check(4, alpha, v, w, mo.random_sl(4, rng))


def test_sl3_variables_are_matrix_entries():
    rng = random.Random(6)
    w = WeylWord((1, 2, 1), cartan("A2"))
    g = mo.uw_point(w, mo.random_params(w, rng))
    y = g.evaluate()
    vals = {k: mo._coeff(v, 0) for k, v in mo.variable_minors(w, g).items()}
    assert vals == {"1": y[0][1], "2": y[0][1] * y[1][2] - y[0][2], "3": y[0][2]}


def test_charts_reproduce_tensor_nu_sl3():
    rng = random.Random(8)
    cd = cartan("A2")
    for letters in ((1, 2, 1), (2, 1, 2)):
        w = WeylWord(letters, cd)
        got = mo.chart_nu("tensor_left", cd, w, rng) + mo.chart_nu("tensor_right", cd, w, rng)
        assert got == br.tensor_nu(cd, w).nu


def test_chart_case_checked():
    with pytest.raises(ValueError):
        mo.chart_valuation("diagonal", cartan("A2"), WeylWord((1,), cartan("A2")), 1, 1, random.Random(0))


def test_expansion_endpoints_both_sides():
    rng = random.Random(9)
    g = mo.random_sl(3, rng)
    for side in ("right", "left"):
        rep = mo.expansion_check(3, 1, 2, (1,), (2, 1), g, side)
        assert rep.ok, rep.lines("expansion")


def test_only_type_a_supported():
    with pytest.raises(ValueError):
        mo.uw_point(WeylWord((1,), cartan("B2")), [Fraction(1)])


def test_mutated_variable_is_identified_and_perturbation_is_not():
    from clusterlift.seedcore import mutate

    rng = random.Random(3)
    cd = cartan("A3")
    w = WeylWord((1, 2, 1, 3, 2, 1), cd)
    s = br.uw_seed(cd, w).seed
    f = mutate(s, "1").x("1")
    assert mo.match_minor(f, s, w, rng) == (1, (1,), (2, 1))
    assert mo.match_minor(f + 1, s, w, rng) is None


def test_lifting_is_what_makes_variables_regular_on_g():
    from clusterlift.seedcore import as_reference
    from clusterlift.suites import _bfs_variables, _polynomial_in_t

    rng = random.Random(3)
    cd = cartan("A3")
    w = WeylWord((1, 2, 1, 3, 2, 1), cd)
    g = mo.RatLaurentMatrix([[mo.random_rational(rng) + mo.random_rational(rng) * mo.t_var for _ in range(4)]
                             for _ in range(4)])
    plain = br.uw_seed(cd, w).seed
    lifted = as_reference(br.base_affine_seed(cd, w)[1])
    vals = mo.reference_values(plain, g)
    assert not all(_polynomial_in_t(f, vals) for f in _bfs_variables(plain, 3))
    vals = mo.reference_values(lifted, g)
    assert all(_polynomial_in_t(f, vals) for f in _bfs_variables(lifted, 3))


def test_weyl_group_orders():
    assert len(mo.weyl_elements(cartan("A2"))) == 6
    assert len(mo.weyl_elements(cartan("A3"))) == 24
    assert len(mo.weyl_elements(cartan("B2"))) == 8


def test_sl2_translation_expansion():
    # Delta_{e,s}(g x(t)) = g12 + t g11: constant term Delta_{e,s}(g), top term Delta_{e,e}(g)
    g = mo.RatLaurentMatrix([[3, 5], [1, 2]])
    f = mo.generalized_minor(1, (), (1,), g @ mo.x_pos(2, 1, mo.t_var))
    assert f == 5 + 3 * mo.t_var
    assert mo.expansion_check(2, 1, 1, (), (1,), g).ok
