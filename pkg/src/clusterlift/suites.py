"""Named verification suites.

Each suite takes a ``random.Random`` and a trial count and returns a
:class:`SuiteReport` of ``SUITE CASE VERDICT [detail]`` rows.  Failures are
recorded, never raised, so that a report lists every counterexample.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass, field, replace
from typing import Callable

import sympy

from . import branching as br
from . import minor_oracle as mo
from .laurent import NotLaurent
from .lifting import lift_seed, mutate_lifting_matrix, random_lifting, verify_lift_mutation_square
from .rootsys import WeylWord, braid_moves, cartan, longest_word, reduced_words
from .seedcore import (DegreeConfig, Seed, as_reference, cluster_valuation, highly_freeze, in_upper_bound,
                       is_maximal_rank, mutate, new_seed, random_seed)


@dataclass
class SuiteReport:
    suite: str
    rows: list[tuple[str, bool, str]] = field(default_factory=list)

    def add(self, case: str, ok: bool, detail: str = ""):
        self.rows.append((case, bool(ok), detail))

    def extend(self, rows):
        for r in rows:
            self.add(*r)

    @property
    def ok(self) -> bool:
        return all(r[1] for r in self.rows)

    @property
    def failures(self):
        return [r for r in self.rows if not r[1]]

    def lines(self) -> list[str]:
        return [f"{self.suite} {c} {'PASS' if ok else 'FAIL'}" + (f" {d}" if d else "")
                for c, ok, d in self.rows]


SWEEP_TYPES = ("A1", "A2", "A3", "A4", "B2", "B3", "C3", "D4", "G2")


def sweep_words(label: str, cap: int = 200) -> list[WeylWord]:
    cd = cartan(label)
    return reduced_words(longest_word(cd), cap)


def random_degree(rng: random.Random, s: Seed, dim: int = 2, bound: int = 2) -> DegreeConfig:
    """A random integer solution of sigma^T B = 0."""
    n = len(s.vertices)
    if s.unfrozen:
        basis = sympy.Matrix([list(r) for r in s.B]).T.nullspace()
    else:
        basis = [sympy.eye(n)[:, i] for i in range(n)]
    basis = [b * math.lcm(*(sympy.Rational(x).q for x in b)) for b in basis]
    cols = []
    for _ in range(dim):
        v = sympy.zeros(n, 1)
        for b in basis:
            v += rng.randint(-bound, bound) * b
        cols.append([int(x) for x in v])
    return DegreeConfig(dim, tuple(tuple(c[i] for c in cols) for i in range(n)))


def _random_small_seed(rng: random.Random, max_vertices: int = 6) -> Seed:
    n_uf = rng.randint(1, min(4, max_vertices))
    rest = rng.randint(0, max_vertices - n_uf)
    n_sf = rng.randint(0, rest)
    return random_seed(rng, n_uf, n_sf, rest - n_sf)


# ---------------------------------------------------------------- suites

def suite_lifting_square(rng: random.Random, trials: int = 200) -> SuiteReport:
    """Lift-then-mutate against mutate-then-lift, plus the degree-lift square."""
    rep = SuiteReport("lifting-square")
    for trial in range(trials):
        t = _random_small_seed(rng)
        cfg = random_lifting(rng, t, rng.randint(1, 3))
        k = rng.choice(t.unfrozen)
        square = verify_lift_mutation_square(t, cfg, [k])
        bad = [f"{p}:{c}" for p, c, ok, _ in square.rows if not ok]
        rep.add(f"trial{trial}:k={k}", not bad, ",".join(bad))
        sigma = random_degree(rng, t)
        ts = replace(t, degree=sigma)
        lifted_then = mutate(lift_seed(ts, cfg), k)
        then_lifted = lift_seed(mutate(ts, k), mutate_lifting_matrix(cfg, t, k))
        rep.add(f"trial{trial}:degree-square", lifted_then.degree == then_lifted.degree)
    return rep


def _rank2_seed(b: int, c: int) -> Seed:
    return new_seed(["1", "2", "3"], ["uf", "uf", "sf"], [[0, b], [-c, 0], [1, -1]])


def suite_periodicity(rng: random.Random, trials: int = 5) -> SuiteReport:
    """Rank-2 periods 5/6/8 and path independence of the lifting matrix."""
    rep = SuiteReport("periodicity")
    for name, (b, c), period in (("A2", (1, 1), 5), ("B2", (1, 2), 6), ("G2", (1, 3), 8)):
        t = _rank2_seed(b, c)
        for trial in range(trials):
            cfg = random_lifting(rng, t, rng.randint(1, 3))
            L = lift_seed(t, cfg)
            w1 = ["1", "2"] * period
            w2 = ["2", "1"] * period
            p1 = L.mutate_path(w1[:period])
            p2 = L.mutate_path(w2[:period])
            same = sorted(map(str, p1.cluster)) == sorted(map(str, L.cluster))
            earlier = any(sorted(map(str, L.mutate_path(w1[:p]).cluster)) == sorted(map(str, L.cluster))
                          for p in range(1, period))
            rep.add(f"{name}:trial{trial}:period={period}", same and not earlier)
            rep.add(f"{name}:trial{trial}:endpoints", p1.cluster == p2.cluster and p1.B == p2.B)
            rep.add(f"{name}:trial{trial}:nu", p1.nu == p2.nu, f"{p1.nu.nu} vs {p2.nu.nu}")
            back = L.mutate_path(w1[:2 * period] if period % 2 else w1[:period])
            rep.add(f"{name}:trial{trial}:return", back.cluster == L.cluster and back.nu == cfg)
    return rep


def suite_involution(rng: random.Random, trials: int = 100) -> SuiteReport:
    rep = SuiteReport("involution")
    for trial in range(trials):
        n = rng.randint(1, 8)
        n_uf = rng.randint(1, n)
        t = random_seed(rng, n_uf, rng.randint(0, n - n_uf), 0)
        t = replace(t, degree=random_degree(rng, t))
        k = rng.choice(t.unfrozen)
        back = mutate(mutate(t, k), k)
        rep.add(f"trial{trial}:k={k}", back == t and back.degree == t.degree)
    return rep


def _bfs_variables(s: Seed, depth: int):
    """Every cluster variable reached within ``depth`` mutations."""
    seen = {}
    frontier = [(s, None)]
    clusters = {tuple(map(str, s.cluster))}
    for _ in range(depth):
        nxt = []
        for seed, last in frontier:
            for k in seed.unfrozen:
                if k == last:
                    continue
                m = mutate(seed, k)
                key = tuple(map(str, m.cluster))
                if key in clusters:
                    continue
                clusters.add(key)
                seen[str(m.x(k))] = m.x(k)
                nxt.append((m, k))
        frontier = nxt
    return list(seen.values())


def suite_positivity(rng: random.Random, trials: int = 0, depth: int = 6) -> SuiteReport:
    rep = SuiteReport("positivity")
    cases = [("A2", (1, 2, 1)), ("A2", (2, 1, 2)), ("A3", (1, 2, 1, 3, 2, 1)), ("A3", (2, 1, 3, 2, 1, 3))]
    for label, letters in cases:
        bs = br.uw_seed(cartan(label), letters)
        vs = _bfs_variables(bs.seed, depth)
        bad = [str(f) for f in vs if any(not isinstance(c, int) or c < 0 for c in f.terms.values())]
        rep.add(f"{label}:({','.join(map(str, letters))})", not bad, f"variables={len(vs)}" + (f" bad={bad[0]}" if bad else ""))
    for trial in range(trials):
        t = random_seed(rng, rng.randint(2, 3), 0, 0, bound=2)
        vs = _bfs_variables(t, 4)
        bad = [str(f) for f in vs if any(c < 0 for c in f.terms.values())]
        rep.add(f"random{trial}", not bad, f"variables={len(vs)}")
    return rep


def suite_degrees(rng: random.Random, trials: int = 0, cap: int = 200) -> SuiteReport:
    """sigma validity, maximal rank and lifted degrees over reduced words of w_0."""
    rep = SuiteReport("degrees")
    for label in SWEEP_TYPES:
        cd = cartan(label)
        words = sweep_words(label, cap)
        bad = []
        for w in words:
            try:
                bs = br.uw_seed(cd, w)
            except ValueError as exc:
                bad.append(f"({w}):{exc}")
                continue
            if not is_maximal_rank(bs.seed):
                bad.append(f"({w}):rank")
            cfg = br.tensor_nu(cd, w)
            if any(r != tuple(int(w[k] == a) for k in range(1, len(w) + 1))
                   for a, r in enumerate(cfg.nu[:cd.rank], 1)):
                bad.append(f"({w}):left-rows")
            L = lift_seed(bs.seed, cfg)
            deg = br.branching_degree(L, cd)
            for k in range(1, len(w) + 1):
                if deg.rows[k - 1] != br.expected_lifted_degree(cfg, bs.sigma, k, cd):
                    bad.append(f"({w}):degree{k}")
        rep.add(f"{label}:words={len(words)}", not bad, bad[0] if bad else "")
    levi = br.uw_seed(cartan("A3"), WeylWord.from_paper_order((2, 3, 1, 2), cartan("A3")))
    s = levi.sigma.rows
    rep.add("A3-levi:sigma4=sigma2+sigma3", s[3] == tuple(a + b for a, b in zip(s[1], s[2])))
    for label in ("A2", "A3", "B2", "G2"):
        cd = cartan(label)
        for size in range(cd.rank):
            for subset in _subsets(cd.rank, size):
                bs, L = br.levi_seed(cd, subset)
                deg = br.branching_degree(L, cd)
                ok = all(deg.rows[k - 1] == br.expected_lifted_degree(L.nu, bs.sigma, k, cd)
                         for k in range(1, len(bs.word) + 1))
                rep.add(f"{label}-levi{list(subset)}", ok and is_maximal_rank(bs.seed))
    return rep


def _subsets(n: int, size: int):
    import itertools

    return [tuple(c) for c in itertools.combinations(range(1, n + 1), size)]


def suite_prv(rng: random.Random, trials: int = 0, cap: int = 200) -> SuiteReport:
    rep = SuiteReport("prv")
    for label in SWEEP_TYPES:
        words = sweep_words(label, cap)
        bad = []
        for w in words:
            bs = br.BranchingSeed(w, None, {})
            for k in range(1, len(w) + 1):
                lam, mu, nu = br.tensor_variable_weight(bs, k)
                if not br.prv_check(lam, mu, nu, br.prv_witness(w, k)):
                    bad.append(f"({w}):k={k}")
        rep.add(f"{label}:words={len(words)}", not bad, bad[0] if bad else "")
    return rep


def suite_fz(rng: random.Random, trials: int = 50) -> SuiteReport:
    rep = SuiteReport("fz")
    for n in (3, 4, 5):
        bad = []
        for _ in range(trials):
            alpha, v, w = mo.random_fz_case(n, rng)
            if not mo.fz_identity_check(n, alpha, v, w, mo.random_sl(n, rng)):
                bad.append(f"a={alpha},v={v},w={w}")
        rep.add(f"SL{n}:cases={trials}", not bad, bad[0] if bad else "")
    return rep


def suite_charts(rng: random.Random, trials: int = 0) -> SuiteReport:
    rep = SuiteReport("charts")
    a2 = cartan("A2")
    for subset in ((), (1,), (2,)):
        w = br.levi_word(a2, subset)
        got = mo.chart_nu("levi", a2, w, rng)
        want = br.levi_nu(a2, w).nu
        rep.add(f"A2-levi{list(subset)}:({w})", got == want, f"{got}")
    for label in ("A2", "A3"):
        cd = cartan(label)
        for w in reduced_words(longest_word(cd)):
            got = mo.chart_nu("tensor_left", cd, w, rng) + mo.chart_nu("tensor_right", cd, w, rng)
            want = br.tensor_nu(cd, w).nu
            rep.add(f"{label}-tensor:({w})", got == want, "" if got == want else f"{got}")
    return rep


def suite_deletion(rng: random.Random, trials: int = 100) -> SuiteReport:
    """Deletion map and D-homogeneity along random mutation words on branching seeds."""
    rep = SuiteReport("deletion")
    a2, a3 = cartan("A2"), cartan("A3")
    bases = [
        (br.uw_seed(a2, (1, 2, 1)).seed, br.tensor_nu(a2, WeylWord((1, 2, 1), a2))),
        (br.uw_seed(a3, (1, 2, 1, 3, 2, 1)).seed, br.tensor_nu(a3, WeylWord((1, 2, 1, 3, 2, 1), a3))),
        (br.uw_seed(a3, (2, 1, 3, 2, 1, 3)).seed, br.tensor_nu(a3, WeylWord((2, 1, 3, 2, 1, 3), a3))),
    ]
    g2 = cartan("G2")
    g2w = WeylWord.from_paper_order((1, 2, 1, 2, 1, 2), g2)
    bases.append((br.uw_seed(g2, g2w).seed, br.tensor_nu(g2, g2w)))
    bs, _ = br.levi_seed(a3, (2,))
    bases.append((bs.seed, br.levi_nu(a3, bs.word)))
    for trial in range(trials):
        t, cfg = bases[trial % len(bases)]
        word = [rng.choice(t.unfrozen) for _ in range(rng.randint(1, 5))]
        square = verify_lift_mutation_square(replace(t, degree=None), cfg, word)
        bad = [f"{p}:{c}" for p, c, ok, _ in square.rows if not ok and c in ("deletion", "homogeneous", "mutate")]
        rep.add(f"trial{trial}:({','.join(word)})", not bad, ",".join(bad))
    return rep


def suite_variables(rng: random.Random, trials: int = 20) -> SuiteReport:
    """Cluster variables of t_i against minors at random points of U(w)."""
    rep = SuiteReport("variables")
    a2 = cartan("A2")
    w = WeylWord((1, 2, 1), a2)
    bs = br.uw_seed(a2, w)
    mu1 = mutate(bs.seed, "1").x("1")
    bad = 0
    for _ in range(trials):
        p = mo.random_params(w, rng)
        y = mo.uw_point(w, p).evaluate()
        a, b, c = y[0][1], y[0][2], y[1][2]
        vals = mo.variable_minors(w, mo.uw_point(w, p))
        got = {k: mo._coeff(v, 0) for k, v in vals.items()}
        ok = got == {"1": a, "2": a * c - b, "3": b}
        ok = ok and mo._coeff(mo.evaluate_at(mu1, {bs.seed.varname(k): v for k, v in vals.items()}), 0) == c
        bad += not ok
    rep.add(f"A2:(1,2,1):points={trials}", bad == 0, "x1=a x2=ac-b x3=b mu1(x1)=c")
    for label, letters in (("A2", (2, 1, 2)), ("A3", (1, 2, 1, 3, 2, 1)), ("A3", (2, 1, 3, 2, 1, 3)),
                           ("A3", (1, 2, 3)), ("A3", (2, 1, 3, 2))):
        cd = cartan(label)
        w = WeylWord(letters, cd)
        bs = br.uw_seed(cd, w)
        ok = True
        for _ in range(5):
            g = mo.uw_point(w, mo.random_params(w, rng))
            vals = mo.reference_values(bs.seed, g)
            ok &= all(v.terms for v in vals.values())
        rep.add(f"{label}:({w}):initial-nonzero", ok)
        rep.add(f"{label}:({w}):mutated-regular", _mutated_regular(bs, rng, 3))
        found, missing = [], []
        for f in _bfs_variables(bs.seed, 3):
            m = mo.match_minor(f, bs.seed, w, rng)
            (found if m else missing).append(m or str(f))
        detail = f"matched={len(found)}/{len(found) + len(missing)}"
        rep.add(f"{label}:({w}):mutated-are-minors", not missing, detail + (f" unmatched={missing[0]}" if missing else ""))
    for label, letters in (("A2", (1, 2, 1)), ("A3", (1, 2, 1, 3, 2, 1))):
        cd = cartan(label)
        w = WeylWord(letters, cd)
        rep.add(f"{label}:({w}):base-affine-regular-on-G", _base_affine_regular(cd, w, rng, 3))
    return rep


def _polynomial_in_t(f, vals) -> bool:
    try:
        v = mo.evaluate_at(f, vals)
    except NotLaurent:
        return False
    return not v.terms or mo.order_in_t(v) >= 0


def _mutated_regular(bs: br.BranchingSeed, rng: random.Random, depth: int) -> bool:
    """Mutated variables restricted to a random affine line in U(w) are polynomials in t."""
    w = bs.word
    params = [mo.random_rational(rng) + mo.random_rational(rng, nonzero=True) * mo.t_var for _ in range(len(w))]
    g = mo.uw_point(w, params)
    vals = mo.reference_values(bs.seed, g)
    return all(_polynomial_in_t(f, vals) for f in _bfs_variables(bs.seed, depth))


def _base_affine_regular(cd, w: WeylWord, rng: random.Random, depth: int) -> bool:
    """Mutated variables of the base affine lifted seed are polynomial on lines g0 + t g1 of matrices.

    The lifted seed is taken as its own reference seed; its initial variables
    are the tagged minors, including Delta^{varpi_a}_{e,e} on the D vertices.
    """
    _, s = br.base_affine_seed(cd, w)
    s = as_reference(s)
    n = cd.rank + 1
    g = mo.RatLaurentMatrix([[mo.random_rational(rng) + mo.random_rational(rng) * mo.t_var for _ in range(n)]
                             for _ in range(n)])
    vals = mo.reference_values(s, g)
    if any(not v.terms for v in vals.values()):
        return False
    return all(_polynomial_in_t(f, vals) for f in _bfs_variables(s, depth))


def suite_minors(rng: random.Random, trials: int = 20) -> SuiteReport:
    """Non-vanishing of Delta_{e,w} and the support criterion for Delta_{s_alpha,w} on U."""
    rep = SuiteReport("minors")
    for n in (3, 4):
        cd = mo.sl(n)
        points = [mo.random_upper(n, rng) for _ in range(max(trials, 5))]
        bad_e, bad_s = [], []
        for w in mo.weyl_elements(cd):
            support = set(w)
            for a in range(1, n):
                if any(not mo.generalized_minor(a, (), w, g).terms for g in points[:5]):
                    bad_e.append(f"a={a},w={w}")
                zero = all(not mo.generalized_minor(a, (a,), w, g).terms for g in points[:trials])
                if zero != (a not in support):
                    bad_s.append(f"a={a},w={w}")
        rep.add(f"SL{n}:e,w-nonvanishing", not bad_e, bad_e[0] if bad_e else "")
        rep.add(f"SL{n}:s,w-vanishing-iff-outside-support", not bad_s, bad_s[0] if bad_s else "")
    return rep


def suite_witness(rng: random.Random, trials: int = 5) -> SuiteReport:
    rep = SuiteReport("witness")
    a2 = cartan("A2")
    for letters in ((1, 2, 1), (2, 1, 2)):
        w = WeylWord(letters, a2)
        alpha = letters[0]
        s = br.double_cell_lifted(a2, w, w)
        f = br.strict_inclusion_witness(s, a2, alpha)
        d = br.levi_label(alpha)
        hf = highly_freeze(s, s.semi_frozen)
        rep.add(f"({w}):CV={cluster_valuation(f, d, s)}", cluster_valuation(f, d, s) == -1)
        rep.add(f"({w}):highly-frozen-not-in-upper-bound", not in_upper_bound(f, hf))
        rep.add(f"({w}):semi-frozen-in-upper-bound", in_upper_bound(f, s))
        ok = True
        for _ in range(trials):
            g = mo.random_sl(3, rng)
            ok &= mo.evaluate_at(f, mo.reference_values(s, g)) == mo.generalized_minor(alpha, (alpha,), (alpha,), g)
        rep.add(f"({w}):equals-minor-s,s", ok)
        order = mo.divisor_order(3, alpha, alpha, (alpha,), (alpha,), rng)
        x_order = mo.divisor_order(3, alpha, alpha, (), (), rng)
        rep.add(f"({w}):divisor-order={order}", order == 0 and x_order == 1, f"X_alpha order={x_order}")
    return rep


def suite_expansion(rng: random.Random, trials: int = 40) -> SuiteReport:
    rep = SuiteReport("expansion")
    for n in (2, 3, 4):
        cd = mo.sl(n)
        bad = []
        for _ in range(trials):
            alpha, beta = rng.randint(1, n - 1), rng.randint(1, n - 1)
            v, w = mo.random_length_word(cd, rng), mo.random_length_word(cd, rng)
            for side in ("right", "left"):
                r = mo.expansion_check(n, alpha, beta, v, w, mo.random_sl(n, rng), side)
                bad += [c for c, ok, _ in r.rows if not ok]
        rep.add(f"SL{n}:cases={trials}", not bad, bad[0] if bad else "")
    return rep


def suite_braid(rng: random.Random, trials: int = 0) -> SuiteReport:
    """Seeds of braid-related words: one mutation in simply-laced types, a search otherwise.

    For B2 and G2 a row passes when some mutation sequence inside the braid
    window is found; this records an observation, not a theorem.
    """
    rep = SuiteReport("braid")
    for label in ("A2", "A3"):
        cd = cartan(label)
        for w in reduced_words(longest_word(cd)):
            for other in braid_moves(w):
                for lifted in (False, True):
                    path = br.braid_relation(cd, w, other, depth=2, lifted=lifted)
                    tag = "lifted" if lifted else "plain"
                    rep.add(f"{label}:({w})->({','.join(map(str, other))}):{tag}",
                            path is not None and len(path) <= 1, f"path={path}")
    for label, depth in (("B2", 6), ("G2", 10)):
        cd = cartan(label)
        w = longest_word(cd)
        for other in braid_moves(w):
            for lifted in (False, True):
                path = br.braid_relation(cd, w, other, depth=depth, lifted=lifted)
                tag = "lifted" if lifted else "plain"
                detail = f"mutations={len(path)} path={','.join(path)}" if path is not None else f"none within {depth}"
                rep.add(f"{label}:({w})->({','.join(map(str, other))}):{tag}", path is not None, detail)
    return rep


def suite_goldens(rng: random.Random, trials: int = 0) -> SuiteReport:
    from . import goldens

    rep = SuiteReport("goldens")
    for name, check in goldens.CHECKS.items():
        ok, detail = check()
        rep.add(name, ok, detail)
    return rep


SUITES: dict[str, tuple[Callable[[random.Random, int], SuiteReport], int]] = {
    "goldens": (suite_goldens, 0),
    "lifting-square": (suite_lifting_square, 200),
    "periodicity": (suite_periodicity, 5),
    "involution": (suite_involution, 100),
    "positivity": (suite_positivity, 0),
    "degrees": (suite_degrees, 0),
    "prv": (suite_prv, 0),
    "fz": (suite_fz, 50),
    "charts": (suite_charts, 0),
    "deletion": (suite_deletion, 100),
    "variables": (suite_variables, 20),
    "witness": (suite_witness, 5),
    "expansion": (suite_expansion, 40),
    "braid": (suite_braid, 0),
    "minors": (suite_minors, 20),
}


def run_suite(name: str, seed: int = 0, trials: int | None = None) -> SuiteReport:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    fn, default = SUITES[name]
    return fn(random.Random(seed), default if trials is None else trials)
