import pytest

from clusterlift import branching as br
from clusterlift import quiver
from clusterlift.lifting import LiftingConfig
from clusterlift.rootsys import WeylWord, cartan
from clusterlift.seedcore import mutate
from clusterlift.seedio import dump_nu, dump_seed, load_nu, load_seed


def _seeds():
    a3 = cartan("A3")
    w = WeylWord((1, 2, 1, 3, 2, 1), a3)
    bs, L = br.tensor_seed(a3, w)
    yield bs.seed
    yield L
    yield mutate(mutate(L, "1"), "2")
    yield br.double_cell_lifted(cartan("A2"), WeylWord((1, 2, 1), cartan("A2")), WeylWord((1, 2, 1), cartan("A2")))


@pytest.mark.parametrize("seed", list(_seeds()))
def test_round_trip_is_byte_identical(seed):
    text = dump_seed(seed)
    back = load_seed(text)
    assert dump_seed(back) == text
    assert back == seed
    assert back.nu == seed.nu


def test_nu_round_trip():
    cfg = LiftingConfig(("d",), ("1", "2"), ((1, -2),))
    assert load_nu(dump_nu(cfg)) == cfg


@pytest.mark.parametrize("text", ["not json", '{"format": "other"}', '{"format": "clusterlift-seed/1"}'])
def test_bad_files_rejected(text):
    with pytest.raises(ValueError):
        load_seed(text)


def test_sl3_quiver():
    s = br.uw_seed(cartan("A2"), (1, 2, 1)).seed
    assert quiver.arrows(s) == {("2", "1"): (1, 1), ("1", "3"): (1, 1)}
    text = quiver.to_text(s)
    assert text.splitlines()[0] == "vertices: o1 #2 #3"


def test_dot_shapes():
    a2 = cartan("A2")
    _, L = br.tensor_seed(a2, WeylWord((1, 2, 1), a2))
    dot = quiver.to_dot(L)
    assert '"1" [shape=circle]' in dot
    assert '"1_l" [shape=box]' in dot
    assert '"2" [shape=box, style=filled, fillcolor=black, fontcolor=white]' in dot
    assert dot.startswith("digraph") and dot.rstrip().endswith("}")


def test_g2_valued_arrows():
    g2 = cartan("G2")
    s = br.uw_seed(g2, WeylWord.from_paper_order((1, 2, 1, 2, 1, 2), g2)).seed
    arr = quiver.arrows(s)
    assert arr[("2", "1")] == (3, 1)
    assert arr[("3", "2")] == (1, 3)
