"""Acceptance criteria 1-12, each with its runtime bound.

Every test records one ``CRITERION n PASS|FAIL`` line, printed in the
terminal summary (and echoed to stdout for ``-s`` runs).
"""
import random
import time

from clusterlift import branching as br
from clusterlift import goldens
from clusterlift import minor_oracle as mo
from clusterlift.laurent import LaurentPoly, substitute
from clusterlift.rootsys import WeylWord, cartan
from clusterlift.seedcore import mutate
from clusterlift.suites import run_suite

SEED = 7


def _timed(fn, repeat=1):
    best, out = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return out, best


def _record(verdicts, n, title, ok, elapsed, bound, detail=""):
    fast = elapsed < bound
    verdict = "PASS" if ok and fast else "FAIL"
    line = f"CRITERION {n:>2} {verdict} {title} ({elapsed * 1000:.1f} ms, bound {bound * 1000:g} ms)"
    if detail:
        line += f" {detail}"
    verdicts[n] = line
    print(line)
    assert ok, line
    assert fast, line


def _suite(name, trials=None):
    rep = run_suite(name, seed=SEED, trials=trials)
    return rep.ok, "; ".join(f"{c} {d}" for c, _, d in rep.failures[:3])


# The fixture checks are timed best-of-3 so that first-call import work
# does not count against millisecond bounds.

def test_c01_golden_lift(verdicts):
    (ok, detail), dt = _timed(goldens.golden_lift, repeat=3)
    _record(verdicts, 1, "golden lift", ok, dt, 1e-3, "" if ok else detail)


def test_c02_sl4_ice_hive(verdicts):
    (ok, detail), dt = _timed(goldens.golden_sl4, repeat=3)
    _record(verdicts, 2, "SL4 ice hive", ok, dt, 10e-3, "" if ok else detail)


def test_c03_g2_quiver(verdicts):
    (ok, detail), dt = _timed(goldens.golden_g2, repeat=3)
    _record(verdicts, 3, "G2 quiver", ok, dt, 10e-3, "" if ok else detail)


def _sl3_minors():
    a2 = cartan("A2")
    w = WeylWord((1, 2, 1), a2)
    s = br.uw_seed(a2, w).seed
    mu1 = mutate(s, "1").x("1")
    # symbolic: substitute the minors of the unitriangular matrix [[1,a,b],[0,1,c],[0,0,1]]
    abc = ("a", "b", "c")
    a, b, c = (LaurentPoly.var(v, abc) for v in abc)
    images = {s.varname("1"): a, s.varname("2"): a * c - b, s.varname("3"): b}
    symbolic = substitute(mu1, images) == c
    rng = random.Random(SEED)
    numeric = True
    for _ in range(20):
        g = mo.uw_point(w, mo.random_params(w, rng))
        y = g.evaluate()
        av, bv, cv = y[0][1], y[0][2], y[1][2]
        vals = mo.variable_minors(w, g)
        got = {k: mo._coeff(v, 0) for k, v in vals.items()}
        numeric &= got == {"1": av, "2": av * cv - bv, "3": bv}
        numeric &= mo._coeff(mo.evaluate_at(mu1, {s.varname(k): v for k, v in vals.items()}), 0) == cv
    return symbolic and numeric, f"symbolic={symbolic} numeric={numeric}"


def test_c04_sl3_minors(verdicts):
    (ok, detail), dt = _timed(_sl3_minors)
    _record(verdicts, 4, "SL3 minors", ok, dt, 50e-3, "" if ok else detail)


def test_c05_commuting_square(verdicts):
    def run():
        ok1, d1 = _suite("lifting-square", 200)
        ok2, d2 = _suite("periodicity", 5)
        return ok1 and ok2, d1 + d2
    (ok, detail), dt = _timed(run)
    _record(verdicts, 5, "commuting square and rank-2 periods", ok, dt, 5.0, detail)


def test_c06_fz_identity(verdicts):
    (ok, detail), dt = _timed(lambda: _suite("fz", 50))
    _record(verdicts, 6, "FZ identity", ok, dt, 10.0, detail)


def test_c07_oracle_charts(verdicts):
    (ok, detail), dt = _timed(lambda: _suite("charts"))
    _record(verdicts, 7, "chart valuations vs closed forms", ok, dt, 30.0, detail)


def test_c08_degree_configurations(verdicts):
    (ok, detail), dt = _timed(lambda: _suite("degrees"))
    _record(verdicts, 8, "degree configurations", ok, dt, 20.0, detail)


def test_c09_prv(verdicts):
    (ok, detail), dt = _timed(lambda: _suite("prv"))
    _record(verdicts, 9, "PRV triples", ok, dt, 10.0, detail)


def test_c10_strict_inclusion_witness(verdicts):
    (ok, detail), dt = _timed(lambda: _suite("witness", 5))
    _record(verdicts, 10, "strict-inclusion witness", ok, dt, 1.0, detail)


def test_c11_laurent_positivity(verdicts):
    (ok, detail), dt = _timed(lambda: _suite("positivity"))
    _record(verdicts, 11, "Laurent positivity", ok, dt, 10.0, detail)


def test_c12_deletion_homogeneity(verdicts):
    (ok, detail), dt = _timed(lambda: _suite("deletion", 100))
    _record(verdicts, 12, "deletion map and homogeneity", ok, dt, 10.0, detail)
