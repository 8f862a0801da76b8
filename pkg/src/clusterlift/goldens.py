"""Reference fixtures: the small lifting example, the SL4 ice hive and the G2 quiver.

Vertex labels follow the library: positions "1".."l" of the subscript-order
word, lifting directions "a_l"/"a_r".  Arrow values are (b_ij, -b_ji).
"""
from __future__ import annotations

from .branching import tensor_nu, tensor_seed
from .laurent import LaurentPoly
from .lifting import LiftingConfig, lift_seed
from .quiver import arrows
from .rootsys import WeylWord, cartan
from .seedcore import new_seed

LIFT_B = ((0, -1), (1, 0), (0, 1), (-2, -2))

SL4_REVERSED_WORD = (1, 2, 3, 1, 2, 1)
SL4_B = ((0, -1, 1), (1, 0, -1), (-1, 1, 0), (0, 1, 0), (0, -1, 1), (0, 0, -1))
SL4_NU = ((1, 0, 1, 0, 0, 1), (0, 1, 0, 0, 1, 0), (0, 0, 0, 1, 0, 0),
          (1, 1, 0, 1, 0, 0), (0, 0, 1, 0, 1, 0), (0, 0, 0, 0, 0, 1))
SL4_ARROWS = {
    ("1", "3"): (1, 1), ("2", "5"): (1, 1), ("3", "6"): (1, 1), ("5", "3"): (1, 1),
    ("2", "1"): (1, 1), ("4", "2"): (1, 1), ("3", "2"): (1, 1),
}
SL4_LIFTED_ARROWS = {
    **SL4_ARROWS,
    ("1_l", "1"): (1, 1), ("2_l", "2"): (1, 1), ("2_r", "1"): (1, 1), ("1", "2_l"): (1, 1),
    ("3_r", "3"): (1, 1), ("2", "3_l"): (1, 1), ("1", "1_r"): (1, 1), ("3", "2_r"): (1, 1),
}

G2_REVERSED_WORD = (1, 2, 1, 2, 1, 2)
G2_B = ((0, -1, 1, 0), (3, 0, -3, 1), (-1, 1, 0, -1), (0, -1, 3, 0), (0, 0, -1, 1), (0, 0, 0, -1))
G2_NU = ((0, 1, 0, 1, 0, 1), (1, 0, 1, 0, 1, 0), (0, 0, 0, 0, 0, 1), (1, 1, 2, 1, 1, 0))
G2_ARROWS = {
    ("2", "4"): (1, 1), ("4", "6"): (1, 1), ("1", "3"): (1, 1), ("3", "5"): (1, 1),
    ("2", "1"): (3, 1), ("4", "3"): (3, 1), ("3", "2"): (1, 3), ("5", "4"): (1, 3),
}
# lifting directions are drawn as plain (repeated) arrows
G2_LIFTED_MULTIPLICITIES = {
    ("1", "2_r"): 1, ("2_l", "1"): 1, ("1", "1_l"): 3, ("1_l", "2"): 1, ("1_r", "4"): 1,
}


def golden_lift():
    t = new_seed(["1", "2", "3"], ["uf", "uf", "hf"], [[0, -1], [1, 0], [0, 1]])
    cfg = LiftingConfig(("d",), t.vertices, ((1, 2, 3),))
    s = lift_seed(t, cfg)
    vs = s.variables
    want = (LaurentPoly.monomial({"x1": 1, "xd": 1}, vs), LaurentPoly.monomial({"x2": 1, "xd": 2}, vs),
            LaurentPoly.monomial({"x3": 1, "xd": 3}, vs), LaurentPoly.monomial({"xd": 1}, vs))
    ok = s.B == LIFT_B and s.cluster == want
    return ok, f"B={s.B}"


def _split(arr: dict, frozen_dirs) -> tuple[dict, dict]:
    main = {e: v for e, v in arr.items() if not (set(e) & frozen_dirs)}
    extra = {e: v for e, v in arr.items() if set(e) & frozen_dirs}
    return main, extra


def golden_sl4():
    cd = cartan("A3")
    w = WeylWord.from_paper_order(SL4_REVERSED_WORD, cd)
    bs, L = tensor_seed(cd, w)
    ok_b = bs.seed.B == SL4_B
    ok_nu = tensor_nu(cd, w).nu == SL4_NU
    ok_q = arrows(bs.seed) == SL4_ARROWS
    ok_l = arrows(L) == SL4_LIFTED_ARROWS
    hf = set(bs.seed.highly_frozen) == {"4", "5", "6"}
    return ok_b and ok_nu and ok_q and ok_l and hf, f"B={ok_b} nu={ok_nu} quiver={ok_q} lifted={ok_l}"


def golden_g2():
    cd = cartan("G2")
    w = WeylWord.from_paper_order(G2_REVERSED_WORD, cd)
    bs, L = tensor_seed(cd, w)
    ok_b = bs.seed.B == G2_B
    ok_nu = tensor_nu(cd, w).nu == G2_NU
    ok_q = arrows(bs.seed) == G2_ARROWS
    main, extra = _split(arrows(L), set(L.nu.D))
    ok_l = main == G2_ARROWS and {e: v[0] for e, v in extra.items()} == G2_LIFTED_MULTIPLICITIES
    return ok_b and ok_nu and ok_q and ok_l, f"B={ok_b} nu={ok_nu} quiver={ok_q} lifted={ok_l}"


CHECKS = {"lift-example": golden_lift, "SL4-ice-hive": golden_sl4, "G2-quiver": golden_g2}
