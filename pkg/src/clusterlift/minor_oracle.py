"""Exact SL_n oracle for generalized minors.

Matrices have entries in Q[t, t^-1] (LaurentPoly over the single variable
``t`` with Fraction coefficients).  Generalized minors are computed through
representatives, Delta^{varpi_k}_{v,w}(g) = Delta^{varpi_k}_{e,e}(vbar^-1 g wbar),
so no row/column sign convention is ever chosen by hand.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .laurent import LaurentPoly, var_valuation
from .rootsys import (CartanData, WeylWord, cartan, inversions, is_positive_root, is_reduced,
                      reduced_word_of_matrix, root_act, weyl_matrix, word_act)

T = ("t",)
Scalar = int | Fraction | LaurentPoly


def _lp(c: Scalar) -> LaurentPoly:
    if isinstance(c, LaurentPoly):
        return c.extend(T) if c.varset != T else c
    return LaurentPoly.const(Fraction(c), T)


ZERO = LaurentPoly({}, T)
ONE = LaurentPoly.const(1, T)
t_var = LaurentPoly.var("t", T)


def t_power(e: int, coef: Scalar = 1) -> LaurentPoly:
    return LaurentPoly({(e,): Fraction(coef)}, T)


class RatLaurentMatrix:
    """Square matrix over Q[t, t^-1]."""

    __slots__ = ("n", "rows")

    def __init__(self, rows: Sequence[Sequence[Scalar]]):
        self.rows = tuple(tuple(_lp(x) for x in r) for r in rows)
        self.n = len(self.rows)
        if any(len(r) != self.n for r in self.rows):
            raise ValueError("matrix must be square")

    @classmethod
    def identity(cls, n: int) -> "RatLaurentMatrix":
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    def __getitem__(self, ij) -> LaurentPoly:
        i, j = ij
        return self.rows[i][j]

    def __matmul__(self, other: "RatLaurentMatrix") -> "RatLaurentMatrix":
        cols = list(zip(*other.rows))
        out = []
        for r in self.rows:
            row = []
            for c in cols:
                acc = ZERO
                for a, b in zip(r, c):
                    if a.terms and b.terms:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return RatLaurentMatrix(out)

    def __eq__(self, other) -> bool:
        return isinstance(other, RatLaurentMatrix) and self.rows == other.rows

    def transpose(self) -> "RatLaurentMatrix":
        return RatLaurentMatrix(list(zip(*self.rows)))

    def minor(self, rows: Sequence[int], cols: Sequence[int]) -> LaurentPoly:
        """Determinant of a submatrix (0-based indices), by permutation expansion."""
        k = len(rows)
        total = ZERO
        for perm in itertools.permutations(range(k)):
            term = ONE
            for a, b in enumerate(perm):
                e = self.rows[rows[a]][cols[b]]
                if not e.terms:
                    term = ZERO
                    break
                term = term * e
            if term.terms:
                total = total + term if _perm_sign(perm) > 0 else total - term
        return total

    def principal_minor(self, k: int) -> LaurentPoly:
        return self.minor(range(k), range(k))

    def det(self) -> LaurentPoly:
        return self.principal_minor(self.n)

    def inverse(self) -> "RatLaurentMatrix":
        """Adjugate over det; det must be a unit of Q[t, t^-1] (a monomial)."""
        d = self.det()
        if not d.is_monomial():
            raise ValueError("matrix is not invertible over Q[t, t^-1]")
        n = self.n
        dinv = d ** -1
        out = [[ZERO] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                rs = [r for r in range(n) if r != j]
                cs = [c for c in range(n) if c != i]
                cof = self.minor(rs, cs) if n > 1 else ONE
                out[i][j] = cof * dinv if (i + j) % 2 == 0 else -(cof * dinv)
        return RatLaurentMatrix(out)

    def evaluate(self) -> list[list[Fraction]]:
        """Entries as rationals; fails when some entry depends on t."""
        out = []
        for r in self.rows:
            row = []
            for e in r:
                if any(k != (0,) for k in e.terms):
                    raise ValueError("entry depends on t")
                row.append(Fraction(e.terms.get((0,), 0)))
            out.append(row)
        return out

    def __repr__(self):
        return "RatLaurentMatrix(" + "; ".join(", ".join(str(x) for x in r) for r in self.rows) + ")"


def _perm_sign(perm) -> int:
    sign, seen = 1, [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


# ---------------------------------------------------------------- builders

def _elem(n: int, i: int, j: int, c: Scalar) -> RatLaurentMatrix:
    rows = [[ONE if a == b else ZERO for b in range(n)] for a in range(n)]
    rows[i][j] = rows[i][j] + _lp(c)
    return RatLaurentMatrix(rows)


def x_pos(n: int, i: int, c: Scalar) -> RatLaurentMatrix:
    """x_{alpha_i}(c) = I + c E_{i,i+1} (1-based i)."""
    return _elem(n, i - 1, i, c)


def x_neg(n: int, i: int, c: Scalar) -> RatLaurentMatrix:
    return _elem(n, i, i - 1, c)


def root_span(beta: Sequence[int]) -> tuple[int, int]:
    """A positive root of A_{n-1} is alpha_i + ... + alpha_j; returns (i, j)."""
    support = [p + 1 for p, x in enumerate(beta) if x]
    i, j = support[0], support[-1]
    if any(x not in (0, 1) for x in beta) or support != list(range(i, j + 1)):
        raise ValueError(f"{tuple(beta)} is not a positive root of type A")
    return i, j


def x_root(n: int, beta: Sequence[int], c: Scalar) -> RatLaurentMatrix:
    """I + c E_{i, j+1} for beta = alpha_i + ... + alpha_j."""
    i, j = root_span(beta)
    return _elem(n, i - 1, j, c)


def torus(n: int, i: int, c: Scalar) -> RatLaurentMatrix:
    """alpha_i^vee(c) = diag(.., c, c^-1, ..) at positions i, i+1."""
    c = _lp(c)
    rows = [[ONE if a == b else ZERO for b in range(n)] for a in range(n)]
    rows[i - 1][i - 1] = c
    rows[i][i] = c ** -1
    return RatLaurentMatrix(rows)


def diagonal(entries: Sequence[Scalar]) -> RatLaurentMatrix:
    n = len(entries)
    return RatLaurentMatrix([[_lp(entries[a]) if a == b else ZERO for b in range(n)] for a in range(n)])


def sbar(n: int, i: int) -> RatLaurentMatrix:
    """The 2x2 block [[0, -1], [1, 0]] at rows/columns (i, i+1)."""
    rows = [[ONE if a == b else ZERO for b in range(n)] for a in range(n)]
    rows[i - 1][i - 1] = ZERO
    rows[i][i] = ZERO
    rows[i - 1][i] = -ONE
    rows[i][i - 1] = ONE
    return RatLaurentMatrix(rows)


def phi(n: int, i: int, block: Sequence[Sequence[Scalar]]) -> RatLaurentMatrix:
    """Image of a 2x2 matrix under the SL_2 embedding at simple root i."""
    rows = [[ONE if a == b else ZERO for b in range(n)] for a in range(n)]
    for a in range(2):
        for b in range(2):
            rows[i - 1 + a][i - 1 + b] = _lp(block[a][b])
    return RatLaurentMatrix(rows)


def word_bar(n: int, letters: Iterable[int]) -> RatLaurentMatrix:
    """wbar = sbar_{j_1} ... sbar_{j_m} for the product word (j_1, ..., j_m)."""
    out = RatLaurentMatrix.identity(n)
    for i in letters:
        out = out @ sbar(n, i)
    return out


def product(mats: Iterable[RatLaurentMatrix], n: int | None = None) -> RatLaurentMatrix:
    mats = list(mats)
    out = mats[0] if mats else RatLaurentMatrix.identity(n or 1)
    for m in mats[1:]:
        out = out @ m
    return out


# ---------------------------------------------------------------- minors

def _letters(w) -> tuple[int, ...]:
    return tuple(w.letters) if isinstance(w, WeylWord) else tuple(w)


def reduce_word(cd: CartanData, letters: Sequence[int]) -> tuple[int, ...]:
    """A reduced product word for the element s_{j_1}...s_{j_m}.

    Representatives are only braid-invariant on reduced words (sbar_i^2 = -1).
    """
    return reduced_word_of_matrix(weyl_matrix(WeylWord(tuple(letters), cd)), cd)


def generalized_minor(k: int, v, w, g: RatLaurentMatrix) -> LaurentPoly:
    """Delta^{varpi_k}_{v,w}(g); v, w are product words (or WeylWords)."""
    n = g.n
    if not 1 <= k <= n - 1:
        raise ValueError(f"fundamental weight index {k} outside [1, {n - 1}]")
    vbar_inv = word_bar(n, _letters(v)).transpose()  # sbar's are orthogonal
    m = vbar_inv @ g @ word_bar(n, _letters(w))
    return m.principal_minor(k)


def minor_value(k: int, v, w, g: RatLaurentMatrix) -> Fraction:
    f = generalized_minor(k, v, w, g)
    if any(e != (0,) for e in f.terms):
        raise ValueError("minor depends on t")
    return Fraction(f.terms.get((0,), 0))


def sl(n: int) -> CartanData:
    return cartan("A", n - 1)


def _rank_check(cd: CartanData) -> int:
    if cd.label != f"A{cd.rank}":
        raise ValueError(f"the minor oracle supports SL_n only, got {cd.label}")
    return cd.rank + 1


def random_rational(rng: random.Random, bound: int = 1000, nonzero: bool = False) -> Fraction:
    while True:
        q = Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
        if q or not nonzero:
            return q


def random_lower(n: int, rng: random.Random) -> RatLaurentMatrix:
    return RatLaurentMatrix([[ONE if a == b else (_lp(random_rational(rng)) if a > b else ZERO)
                              for b in range(n)] for a in range(n)])


def random_upper(n: int, rng: random.Random) -> RatLaurentMatrix:
    return random_lower(n, rng).transpose()


def random_torus(n: int, rng: random.Random) -> RatLaurentMatrix:
    d = [random_rational(rng, nonzero=True) for _ in range(n - 1)]
    return diagonal(d + [1 / math_prod(d)])


def math_prod(xs) -> Fraction:
    out = Fraction(1)
    for x in xs:
        out *= x
    return out


def random_sl(n: int, rng: random.Random) -> RatLaurentMatrix:
    """g = u^- h u with random rational entries; det g = 1."""
    return random_lower(n, rng) @ random_torus(n, rng) @ random_upper(n, rng)


def fz_identity_check(n: int, alpha: int, v, w, g: RatLaurentMatrix) -> bool:
    """Delta_{v,w} Delta_{vs,ws} = Delta_{vs,w} Delta_{v,ws} + prod_beta Delta^{varpi_beta}_{v,w}^{-a_{beta,alpha}}."""
    cd = sl(n)
    v, w = _letters(v), _letters(w)
    vs, ws = v + (alpha,), w + (alpha,)
    if not (is_reduced(WeylWord(vs, cd)) and is_reduced(WeylWord(ws, cd))):
        raise ValueError("fz identity needs l(v s_alpha) = l(v) + 1 and l(w s_alpha) = l(w) + 1")
    lhs = generalized_minor(alpha, v, w, g) * generalized_minor(alpha, vs, ws, g)
    rhs = generalized_minor(alpha, vs, w, g) * generalized_minor(alpha, v, ws, g)
    prod = ONE
    for beta in range(1, n):
        if beta != alpha and cd.a(beta, alpha):
            prod = prod * generalized_minor(beta, v, w, g) ** (-cd.a(beta, alpha))
    return lhs == rhs + prod


def random_length_word(cd: CartanData, rng: random.Random, max_len: int | None = None) -> tuple[int, ...]:
    """A random reduced word, grown letter by letter."""
    cap = len(cd.positive_roots) if max_len is None else max_len
    target = rng.randint(0, cap)
    word: list[int] = []
    while len(word) < target:
        options = [i for i in range(1, cd.rank + 1) if is_reduced(WeylWord(tuple(word) + (i,), cd))]
        if not options:
            break
        word.append(rng.choice(options))
    return tuple(word)


def random_fz_case(n: int, rng: random.Random):
    """(alpha, v, w) with v s_alpha > v and w s_alpha > w."""
    cd = sl(n)
    while True:
        alpha = rng.randint(1, n - 1)
        v = random_length_word(cd, rng, len(cd.positive_roots) - 1)
        w = random_length_word(cd, rng, len(cd.positive_roots) - 1)
        if is_reduced(WeylWord(v + (alpha,), cd)) and is_reduced(WeylWord(w + (alpha,), cd)):
            return alpha, v, w


# ---------------------------------------------------------------- U(w)

def uw_point(word: WeylWord, params: Sequence[Scalar]) -> RatLaurentMatrix:
    """prod_k x_{beta_k}(p_k) over the inversions in reflection order."""
    n = _rank_check(word.cartan)
    betas = inversions(word)
    if len(params) != len(betas):
        raise ValueError(f"expected {len(betas)} parameters, got {len(params)}")
    out = RatLaurentMatrix.identity(n)
    for beta, p in zip(betas, params):
        out = out @ x_root(n, beta, p)
    return out


def random_params(word: WeylWord, rng: random.Random) -> list[Fraction]:
    return [random_rational(rng, nonzero=True) for _ in range(len(word))]


def variable_minors(word: WeylWord, g: RatLaurentMatrix) -> dict[str, LaurentPoly]:
    """Minor values of the initial cluster variables x_k = Delta^{varpi_{i_k}}_{e, i_1...i_k}."""
    return {str(k): generalized_minor(word[k], (), word.letters[:k], g) for k in range(1, len(word) + 1)}


def weyl_elements(cd: CartanData) -> list[tuple[int, ...]]:
    """One reduced product word per Weyl group element, by breadth-first search."""
    key = lambda w: weyl_matrix(WeylWord(w, cd)).tobytes()
    seen = {key(()): ()}
    frontier: list[tuple[int, ...]] = [()]
    while frontier:
        nxt = []
        for w in frontier:
            for i in range(1, cd.rank + 1):
                u = w + (i,)
                k = key(u)
                if k not in seen:
                    seen[k] = u
                    nxt.append(u)
        frontier = nxt
    return list(seen.values())


def match_minor(f: LaurentPoly, s, word: WeylWord, rng: random.Random,
                confirm: int = 3) -> tuple[int, tuple[int, ...], tuple[int, ...]] | None:
    """A generalized minor equal to f on U(w), or None.

    Candidates are the (alpha, v, w) whose value matches f at one random point
    of U(w); a candidate is kept only if it also matches at ``confirm`` further
    points.  ``s`` is the tagged reference seed the expansion of f refers to.
    """
    cd = word.cartan
    n = _rank_check(cd)
    els = weyl_elements(cd)

    def value_at(g):
        return _coeff(evaluate_at(f, reference_values(s, g)), 0)

    g = uw_point(word, random_params(word, rng))
    target = value_at(g)
    cands = [(a, v, u) for a in range(1, n) for v in els for u in els
             if _coeff(generalized_minor(a, v, u, g), 0) == target]
    for _ in range(confirm):
        if not cands:
            return None
        g = uw_point(word, random_params(word, rng))
        target = value_at(g)
        cands = [c for c in cands if _coeff(generalized_minor(c[0], c[1], c[2], g), 0) == target]
    return cands[0] if cands else None


# ---------------------------------------------------------------- charts

CASES = ("levi", "tensor_left", "tensor_right")


def order_in_t(f: LaurentPoly) -> int | float:
    return var_valuation(f, "t") if f.terms else float("inf")


def chart_valuation(case: str, cd: CartanData, word: WeylWord, alpha: int, k: int,
                    rng: random.Random, retries: int = 5, samples: int = 2) -> int:
    """nu_{d,k} = -(order at t = 0) of the k-th minor along the chart curve.

    Left and Levi charts evaluate at x_alpha(1/t) y, the right chart at
    y x_alpha(1/t), for random rational points y of U(z).  The smallest order
    over ``samples`` independent points is kept; a vanishing minor triggers a
    retry.
    """
    if case not in CASES:
        raise ValueError(f"unknown chart case {case!r}; expected one of {CASES}")
    n = _rank_check(cd)
    curve = x_pos(n, alpha, t_power(-1))
    best = None
    fails = 0
    done = 0
    while done < samples:
        y = uw_point(word, random_params(word, rng))
        g = curve @ y if case in ("levi", "tensor_left") else y @ curve
        f = generalized_minor(word[k], (), word.letters[:k], g)
        if not f.terms:
            fails += 1
            if fails > retries:
                raise RuntimeError(f"minor {k} vanished at {fails} random points")
            continue
        o = int(order_in_t(f))
        best = o if best is None else min(best, o)
        done += 1
    return -best


def chart_nu(case: str, cd: CartanData, word: WeylWord, rng: random.Random) -> tuple[tuple[int, ...], ...]:
    """All rows alpha = 1..rank of the chart lifting matrix for one case."""
    return tuple(tuple(chart_valuation(case, cd, word, a, k, rng) for k in range(1, len(word) + 1))
                 for a in range(1, cd.rank + 1))


# ---------------------------------------------------------------- expansions

@dataclass
class OracleReport:
    rows: list[tuple[str, bool, str]] = field(default_factory=list)

    def add(self, case: str, ok: bool, detail: str = ""):
        self.rows.append((case, bool(ok), detail))

    @property
    def ok(self) -> bool:
        return all(r[1] for r in self.rows)

    def lines(self, suite: str) -> list[str]:
        return [f"{suite} {c} {'PASS' if ok else 'FAIL'}" + (f" {d}" if d else "") for c, ok, d in self.rows]


def _coeff(f: LaurentPoly, e: int) -> Fraction:
    return Fraction(f.terms.get((e,), 0))


def _degree_range(f: LaurentPoly) -> tuple[int, int]:
    es = [e[0] for e in f.terms]
    return (min(es), max(es)) if es else (0, 0)


def expansion_check(n: int, alpha: int, beta: int, v, w, g: RatLaurentMatrix, side: str = "right") -> OracleReport:
    """Endpoint identities for translations by a simple root subgroup.

    Right: Delta_{v,w}(g x_beta(t)) is independent of t when w^-1 beta > 0;
    otherwise it is a polynomial of degree N = <-w varpi_alpha, beta^v> whose
    t^0 coefficient is Delta_{v,w}(g) and whose t^N coefficient is
    Delta_{v, s_beta w}(g).
    Left: Delta_{v,w}(x_beta(t) g) is independent of t when v^-1 beta < 0;
    otherwise it has degree N = <v varpi_alpha, beta^v>, t^0 coefficient
    Delta_{v,w}(g) and t^N coefficient Delta_{s_beta v, w}(g).
    """
    cd = sl(n)
    v, w = _letters(v), _letters(w)
    rep = OracleReport()
    tag = f"n={n},a={alpha},b={beta},v=({','.join(map(str, v))}),w=({','.join(map(str, w))}),{side}"
    base = generalized_minor(alpha, v, w, g)
    if side == "right":
        f = generalized_minor(alpha, v, w, g @ x_pos(n, beta, t_var))
        u = w
    else:
        f = generalized_minor(alpha, v, w, x_pos(n, beta, t_var) @ g)
        u = v
    u_inv_beta = root_act(WeylWord(tuple(reversed(u)), cd), cd.simple_root(beta))
    independent = is_positive_root(u_inv_beta) if side == "right" else not is_positive_root(u_inv_beta)
    if independent:
        rep.add(tag + ":constant", f == base, f"value={base}")
        return rep
    lam = word_act(WeylWord(u, cd), cd.fundamental(alpha))
    N = -lam[beta - 1] if side == "right" else lam[beta - 1]
    lo, hi = _degree_range(f)
    rep.add(tag + ":degree", lo >= 0 and hi <= N, f"N={N} range=[{lo},{hi}]")
    rep.add(tag + ":t^0", _coeff(f, 0) == _coeff(base, 0))
    if side == "right":
        top = generalized_minor(alpha, v, reduce_word(cd, (beta,) + w), g)
    else:
        top = generalized_minor(alpha, reduce_word(cd, (beta,) + v), w, g)
    rep.add(tag + f":t^{N}", _coeff(f, N) == _coeff(top, 0))
    return rep


# ---------------------------------------------------------------- divisors

def divisor_curve(n: int, alpha: int, rng: random.Random) -> RatLaurentMatrix:
    """u^- phi_alpha([[t, -1], [1, 0]]) u; the principal minor X_alpha has order 1."""
    return random_lower(n, rng) @ phi(n, alpha, [[t_var, -1], [1, 0]]) @ random_upper(n, rng)


def divisor_order(n: int, alpha: int, k: int, v, w, rng: random.Random, samples: int = 3) -> int:
    """Order at t = 0 of Delta^{varpi_k}_{v,w} along the alpha-divisor curve (min over samples)."""
    orders = []
    for _ in range(samples):
        f = generalized_minor(k, v, w, divisor_curve(n, alpha, rng))
        orders.append(order_in_t(f))
    return min(orders)


# ---------------------------------------------------------------- seeds at points

def reference_values(s, g: RatLaurentMatrix) -> dict[str, LaurentPoly]:
    """Values of a tagged seed's reference variables at g.

    Every vertex needs a minor tag giving the value of its cluster variable.
    For lifted seeds still expanded in the unlifted reference variables the
    lifted variable is x_i prod_d x_d^{nu_{d,i}}, so the D-values are fixed
    first and divided out.
    """
    vals: dict[str, LaurentPoly] = {}
    cfg = None if s.is_reference() else s.nu
    D = tuple(cfg.D) if cfg is not None else ()
    for v in D:
        alpha, vw, ww = s.tags[v]
        vals[s.varname(v)] = generalized_minor(alpha, vw, ww, g)
    for v in s.vertices:
        if v in D:
            continue
        alpha, vw, ww = s.tags[v]
        val = generalized_minor(alpha, vw, ww, g)
        if cfg is not None:
            for d, e in zip(D, cfg.column(v)):
                if e:
                    val = val * vals[s.varname(d)] ** (-e)
        vals[s.varname(v)] = val
    return vals


def evaluate_at(f: LaurentPoly, values: dict[str, LaurentPoly]) -> LaurentPoly:
    from .laurent import substitute

    return substitute(f, {v: values[v] for v in f.varset}).extend(T) if f.terms else ZERO
