"""Seeds, mutation, degree configurations and the basic seed operations.

A seed keeps its cluster as Laurent expansions in the variables of a fixed
reference seed, so equalities between cluster variables are equalities of
expansions.  Vertex labels are strings; the reference variable of vertex ``v``
is named ``x<v>``.
"""
from __future__ import annotations

import math
import random
import re
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

import numpy as np

from .laurent import LaurentPoly, NotDivisible, NotLaurent, exact_div, substitute, var_valuation

KINDS = ("uf", "sf", "hf")
_LABEL = re.compile(r"^[A-Za-z0-9_']+$")


def varname(label: str) -> str:
    return f"x{label}"


def _natural_key(label: str):
    return [(0, int(p), "") if p.isdigit() else (1, 0, p) for p in re.split(r"(\d+)", label) if p]


@dataclass(frozen=True)
class DegreeConfig:
    """Integer degree vectors of length ``dim``, one per vertex (vertex order)."""

    dim: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        if any(len(r) != self.dim for r in rows):
            raise ValueError("degree vectors must all have length dim")

    def as_array(self) -> np.ndarray:
        return np.array(self.rows, dtype=object).reshape(len(self.rows), self.dim)


@dataclass(frozen=True)
class Seed:
    vertices: tuple[str, ...]
    kinds: tuple[str, ...]
    B: tuple[tuple[int, ...], ...]
    cluster: tuple[LaurentPoly, ...]
    variables: tuple[str, ...]
    degree: DegreeConfig | None = None
    # bookkeeping carried by lifted and branching seeds; not part of equality
    nu: object = field(default=None, compare=False)
    tags: Mapping[str, tuple] | None = field(default=None, compare=False)
    word: object = field(default=None, compare=False)

    # ------------------------------------------------------------ indexing
    @property
    def unfrozen(self) -> tuple[str, ...]:
        return tuple(v for v, k in zip(self.vertices, self.kinds) if k == "uf")

    @property
    def semi_frozen(self) -> tuple[str, ...]:
        return tuple(v for v, k in zip(self.vertices, self.kinds) if k == "sf")

    @property
    def highly_frozen(self) -> tuple[str, ...]:
        return tuple(v for v, k in zip(self.vertices, self.kinds) if k == "hf")

    @property
    def frozen(self) -> tuple[str, ...]:
        return tuple(v for v, k in zip(self.vertices, self.kinds) if k != "uf")

    def kind(self, v) -> str:
        return self.kinds[self.row(v)]

    def row(self, v) -> int:
        return self.vertices.index(str(v))

    def col(self, v) -> int:
        return self.unfrozen.index(str(v))

    @property
    def matrix(self) -> np.ndarray:
        return np.array(self.B, dtype=object).reshape(len(self.vertices), len(self.unfrozen))

    def b(self, i, j) -> int:
        """b_{i,j} with the drawing conventions for frozen pairs."""
        i, j = str(i), str(j)
        ki, kj = self.kind(i), self.kind(j)
        if kj == "uf":
            return self.B[self.row(i)][self.col(j)]
        if ki == "uf":
            return -self.B[self.row(j)][self.col(i)]
        return 0

    def x(self, v) -> LaurentPoly:
        return self.cluster[self.row(v)]

    def varname(self, v) -> str:
        return self.variables[self.row(v)]

    def is_reference(self) -> bool:
        return all(
            p == LaurentPoly.var(name, self.variables)
            for p, name in zip(self.cluster, self.variables)
        )

    @property
    def isolated(self) -> tuple[str, ...]:
        """Mutable vertices with no arrows at all (permitted, but flagged)."""
        M = self.matrix
        return tuple(v for c, v in enumerate(self.unfrozen) if all(M[r, c] == 0 for r in range(M.shape[0])))

    # ------------------------------------------------------------ mutation
    def mutate(self, k) -> "Seed":
        return mutate(self, k)

    def mutate_path(self, ks: Iterable) -> "Seed":
        s = self
        for k in ks:
            s = mutate(s, k)
        return s


def _check_skew_symmetrizable(P: np.ndarray) -> list[Fraction]:
    n = P.shape[0]
    d: list[Fraction | None] = [None] * n
    for i in range(n):
        if P[i, i] != 0:
            raise ValueError(f"principal part has nonzero diagonal entry at position {i + 1}")
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if (P[i, j] == 0) != (P[j, i] == 0):
                    raise ValueError("principal part is not sign-skew-symmetric")
                if P[i, j] == 0:
                    continue
                if (P[i, j] > 0) == (P[j, i] > 0):
                    raise ValueError("principal part is not sign-skew-symmetric")
                want = d[i] * Fraction(int(P[i, j]), -int(P[j, i]))
                if d[j] is None:
                    d[j] = want
                    stack.append(j)
                elif d[j] != want:
                    raise ValueError("principal part is not skew-symmetrizable")
    return d  # type: ignore[return-value]


def principal_part(s: Seed) -> np.ndarray:
    rows = [s.row(v) for v in s.unfrozen]
    return s.matrix[rows, :]


def symmetrizer(s: Seed) -> list[int]:
    d = _check_skew_symmetrizable(principal_part(s))
    den = math.lcm(*(x.denominator for x in d)) if d else 1
    return [int(x * den) for x in d]


def _check_graduation(B: np.ndarray, deg: DegreeConfig) -> None:
    if len(deg.rows) != B.shape[0]:
        raise ValueError("degree configuration has the wrong number of vertices")
    S = deg.as_array()
    if B.shape[1] == 0 or deg.dim == 0:
        return
    prod = S.T.dot(B)
    if any(x != 0 for x in prod.flat):
        bad = [c + 1 for c in range(B.shape[1]) if any(x != 0 for x in prod[:, c])]
        raise ValueError(f"degree configuration fails the graduation condition at columns {bad}")


def new_seed(vertices: Sequence, kinds: Sequence[str], B, sigma=None,
             cluster: Sequence[LaurentPoly] | None = None,
             variables: Sequence[str] | None = None, **extra) -> Seed:
    """Validate and build a seed.

    ``B`` has one row per vertex (in ``vertices`` order) and one column per
    unfrozen vertex (in the same relative order).  Without ``cluster`` the
    seed is its own reference seed.
    """
    vs = tuple(str(v) for v in vertices)
    if len(set(vs)) != len(vs):
        raise ValueError("vertex labels must be distinct")
    for v in vs:
        if not _LABEL.match(v):
            raise ValueError(f"vertex label {v!r} may only use letters, digits, '_' and \"'\"")
    ks = tuple(kinds)
    if len(ks) != len(vs) or any(k not in KINDS for k in ks):
        raise ValueError("each vertex needs a kind among uf, sf, hf")
    n_uf = sum(k == "uf" for k in ks)
    M = np.array(B, dtype=object)
    if M.size == 0:
        M = M.reshape(len(vs), n_uf)
    if M.ndim != 2 or M.shape != (len(vs), n_uf):
        raise ValueError(f"B must be {len(vs)}x{n_uf}, got {M.shape}")
    Bt = tuple(tuple(int(x) for x in row) for row in M)
    M = np.array(Bt, dtype=object).reshape(len(vs), n_uf)
    uf_rows = [i for i, k in enumerate(ks) if k == "uf"]
    _check_skew_symmetrizable(M[uf_rows, :])
    names = tuple(variables) if variables is not None else tuple(varname(v) for v in vs)
    if cluster is None:
        cl = tuple(LaurentPoly.var(n, names) for n in names)
    else:
        cl = tuple(p.extend(names) if set(p.varset) <= set(names) else p for p in cluster)
        if len(cl) != len(vs) or any(p.is_zero() for p in cl):
            raise ValueError("cluster must hold one nonzero Laurent polynomial per vertex")
    deg = None
    if sigma is not None:
        deg = sigma if isinstance(sigma, DegreeConfig) else _degree_from_rows(sigma)
        _check_graduation(M, deg)
    return Seed(vs, ks, Bt, cl, names, deg, **extra)


def _degree_from_rows(rows) -> DegreeConfig:
    rows = [tuple(int(x) for x in r) for r in rows]
    return DegreeConfig(len(rows[0]) if rows else 0, tuple(rows))


def seed_from_partition(uf: Iterable, B, sf: Iterable = (), hf: Iterable = (), sigma=None) -> Seed:
    """Vertices in natural label order, kinds read off the partition."""
    kind = {str(v): "uf" for v in uf}
    kind.update({str(v): "sf" for v in sf})
    kind.update({str(v): "hf" for v in hf})
    order = sorted(kind, key=_natural_key)
    return new_seed(order, [kind[v] for v in order], B, sigma)


def _mutate_matrix(M: np.ndarray, kinds: Sequence[str], k_row: int, k_col: int) -> np.ndarray:
    out = M.copy()
    n, m = M.shape
    for i in range(n):
        for j in range(m):
            if i == k_row or j == k_col:
                out[i, j] = -M[i, j]
            else:
                bik, bkj = M[i, k_col], M[k_row, j]
                out[i, j] = M[i, j] + max(bik, 0) * max(bkj, 0) - max(-bik, 0) * max(-bkj, 0)
    return out


def exchange_monomials(s: Seed, k) -> tuple[LaurentPoly, LaurentPoly]:
    """M^+ and M^- of the exchange relation at ``k``, in the reference variables."""
    c = s.col(k)
    plus = LaurentPoly.const(1, s.variables)
    minus = LaurentPoly.const(1, s.variables)
    for r, row in enumerate(s.B):
        b = row[c]
        if b > 0:
            plus = plus * s.cluster[r] ** b
        elif b < 0:
            minus = minus * s.cluster[r] ** (-b)
    return plus, minus


def mutate_degree(s: Seed, k) -> DegreeConfig:
    """sigma'_k = sum_i [b_ik]_+ sigma_i - sigma_k, other vertices unchanged."""
    if s.degree is None:
        raise ValueError("seed carries no degree configuration")
    k = str(k)
    if s.kind(k) != "uf":
        raise ValueError(f"vertex {k} is frozen")
    c, r = s.col(k), s.row(k)
    new = [0] * s.degree.dim
    for i, row in enumerate(s.B):
        b = row[c]
        if b > 0:
            new = [a + b * x for a, x in zip(new, s.degree.rows[i])]
    new = [a - x for a, x in zip(new, s.degree.rows[r])]
    rows = list(s.degree.rows)
    rows[r] = tuple(new)
    return DegreeConfig(s.degree.dim, tuple(rows))


def mutate(s: Seed, k) -> Seed:
    """Seed mutation at an unfrozen vertex (matrix, cluster, degree, lifting)."""
    k = str(k)
    if k not in s.vertices:
        raise KeyError(f"unknown vertex {k}")
    if s.kind(k) != "uf":
        raise ValueError(f"cannot mutate at frozen vertex {k}")
    r, c = s.row(k), s.col(k)
    M = s.matrix
    plus, minus = exchange_monomials(s, k)
    try:
        xk = exact_div(plus + minus, s.cluster[r])
    except NotDivisible as exc:  # the Laurent phenomenon forbids this
        raise RuntimeError(f"exchange relation at {k} is not Laurent: internal error") from exc
    cl = list(s.cluster)
    cl[r] = xk.extend(s.variables)
    deg = mutate_degree(s, k) if s.degree is not None else None
    nu = s.nu
    if nu is not None:
        from .lifting import mutate_lifted_nu
        nu = mutate_lifted_nu(s, k)
    tags = s.tags
    if tags is not None and k in tags:
        # the new variable at k is no longer the tagged minor
        tags = {v: tag for v, tag in tags.items() if v != k}
    newM = _mutate_matrix(M, s.kinds, r, c)
    Bt = tuple(tuple(int(x) for x in row) for row in newM)
    return replace(s, B=Bt, cluster=tuple(cl), degree=deg, nu=nu, tags=tags)


def mutate_exchange_matrix(s: Seed, k) -> Seed:
    """mu_k on the exchange matrix (and degree configuration) only.

    The cluster is not mutated: the result is its own reference seed.
    """
    k = str(k)
    if s.kind(k) != "uf":
        raise ValueError(f"cannot mutate at frozen vertex {k}")
    M = _mutate_matrix(s.matrix, s.kinds, s.row(k), s.col(k))
    deg = mutate_degree(s, k) if s.degree is not None else None
    return new_seed(s.vertices, s.kinds, M, deg)


def as_reference(s: Seed) -> Seed:
    """The same seed taken as its own reference seed (cluster = its variables)."""
    cl = tuple(LaurentPoly.var(n, s.variables) for n in s.variables)
    return replace(s, cluster=cl)


# ---------------------------------------------------------------- freezing

def semi_freeze(s: Seed, F: Iterable) -> Seed:
    """t_F: move highly-frozen vertices of F to the semi-frozen class."""
    F = {str(v) for v in F}
    bad = [v for v in F if v not in s.vertices or s.kind(v) != "hf"]
    if bad:
        raise ValueError(f"vertices {sorted(bad)} are not highly frozen")
    kinds = tuple("sf" if v in F else k for v, k in zip(s.vertices, s.kinds))
    return replace(s, kinds=kinds)


def highly_freeze(s: Seed, F: Iterable) -> Seed:
    """t^F: move semi-frozen vertices of F to the highly-frozen class."""
    F = {str(v) for v in F}
    bad = [v for v in F if v not in s.vertices or s.kind(v) != "sf"]
    if bad:
        raise ValueError(f"vertices {sorted(bad)} are not semi-frozen")
    kinds = tuple("hf" if v in F else k for v, k in zip(s.vertices, s.kinds))
    return replace(s, kinds=kinds)


# ---------------------------------------------------------------- union

def _fresh(label: str, taken: set[str]) -> str:
    while label in taken:
        label = label + "'"
    return label


def disjoint_union(s: Seed, t: Seed) -> Seed:
    """Block-diagonal union; colliding labels of ``t`` get primes appended."""
    taken = set(s.vertices) | set(s.variables)
    ren = {}
    for v in t.vertices:
        nv = _fresh(v, taken | set(ren.values()))
        while varname(nv) in taken:
            nv = _fresh(nv + "'", taken | set(ren.values()))
        ren[v] = nv
    tv = tuple(ren[v] for v in t.vertices)
    var_ren = {old: varname(ren[v]) if old == varname(v) else old + "'"
               for old, v in zip(t.variables, t.vertices)}
    tvars = tuple(var_ren[o] for o in t.variables)
    variables = s.variables + tvars
    vertices = s.vertices + tv
    kinds = s.kinds + t.kinds
    # columns follow vertex order among unfrozen ones
    uf_s, uf_t = len(s.unfrozen), len(t.unfrozen)
    rows = [list(r) + [0] * uf_t for r in s.B] + [[0] * uf_s + list(r) for r in t.B]
    t_cluster = []
    for p in t.cluster:
        q = LaurentPoly(p.terms, tuple(var_ren[v] for v in p.varset))
        t_cluster.append(q.extend(variables))
    cluster = tuple(p.extend(variables) for p in s.cluster) + tuple(t_cluster)
    deg = None
    if s.degree is not None and t.degree is not None:
        a, b = s.degree.dim, t.degree.dim
        deg = DegreeConfig(a + b, tuple(r + (0,) * b for r in s.degree.rows)
                           + tuple((0,) * a + r for r in t.degree.rows))
    return Seed(vertices, kinds, tuple(tuple(r) for r in rows), cluster, variables, deg)


# ---------------------------------------------------------------- valuations

def cluster_valuation(f: LaurentPoly, d, seed: Seed | None = None) -> int:
    """CV_d(f): minimal exponent of x_d in an expansion of f in any seed."""
    if f.is_zero():
        raise ValueError("cluster valuation of 0 is undefined")
    name = seed.varname(d) if seed is not None else str(d)
    if seed is not None and seed.kind(d) == "uf":
        raise ValueError(f"vertex {d} is not frozen")
    return int(var_valuation(f, name))


def in_laurent_ring(f: LaurentPoly, s: Seed) -> bool:
    """f (over the seed's own variables) lies in L(s): highly-frozen exponents >= 0."""
    for v in s.highly_frozen:
        if var_valuation(f, s.varname(v)) < 0:
            return False
    return True


def rewrite_in_neighbour(f: LaurentPoly, s: Seed, k) -> tuple[LaurentPoly, str]:
    """Express f in the cluster of mu_k(s); x_k is replaced by (M^+ + M^-)/y.

    Returns the rewritten polynomial and the name of the fresh symbol y that
    stands for the new variable x_k'.  Raises NotLaurent when the result is not
    a Laurent polynomial.
    """
    k = str(k)
    plus, minus = exchange_monomials(s, k)
    y = s.varname(k) + "_new"
    img = (plus + minus) * LaurentPoly.monomial({y: -1}, s.variables + (y,))
    return substitute(f, {s.varname(k): img}), y


def in_upper_bound(f: LaurentPoly, s: Seed) -> bool:
    """Membership of f in L(s) and in every L(mu_k s), k unfrozen.

    ``s`` must be its own reference seed; f is given in its variables.
    """
    if not s.is_reference():
        raise ValueError("upper-bound test needs the reference seed")
    f = f.extend(s.variables) if set(f.varset) <= set(s.variables) else f
    if not in_laurent_ring(f, s):
        return False
    for k in s.unfrozen:
        try:
            g, _ = rewrite_in_neighbour(f, s, k)
        except NotLaurent:
            return False
        for v in s.highly_frozen:
            if var_valuation(g, s.varname(v)) < 0:
                return False
    return True


def matrix_rank(B) -> int:
    """Rank over the rationals."""
    import sympy

    M = np.array(B, dtype=object)
    if M.size == 0:
        return 0
    return int(sympy.Matrix(M.tolist()).rank())


def is_maximal_rank(B_or_seed) -> bool:
    if isinstance(B_or_seed, Seed):
        M = B_or_seed.matrix
    else:
        M = np.array(B_or_seed, dtype=object)
        if M.ndim == 1:
            M = M.reshape(-1, 1)
    if M.ndim != 2:
        return False
    return matrix_rank(M) == M.shape[1]


# ---------------------------------------------------------------- random seeds

def random_seed(rng: random.Random, n_uf: int, n_sf: int = 0, n_hf: int = 0,
                bound: int = 3, symmetrizable: bool = True) -> Seed:
    """Random seed with skew-symmetrizable principal part and entries in [-bound, bound].

    The principal part is d-scaled skew-symmetric: b_ij = d_i s_ij with s
    skew-symmetric, so diag(d)^{-1} B is skew-symmetric.
    """
    d = [rng.choice((1, 1, 2, 3)) if symmetrizable else 1 for _ in range(n_uf)]
    S = [[0] * n_uf for _ in range(n_uf)]
    for i in range(n_uf):
        for j in range(i + 1, n_uf):
            cap = bound // max(d[i], d[j])
            v = rng.randint(-cap, cap)
            S[i][j], S[j][i] = v, -v
    P = [[d[i] * S[i][j] for j in range(n_uf)] for i in range(n_uf)]
    frozen = [[rng.randint(-bound, bound) for _ in range(n_uf)] for _ in range(n_sf + n_hf)]
    labels = [str(i + 1) for i in range(n_uf + n_sf + n_hf)]
    kinds = ["uf"] * n_uf + ["sf"] * n_sf + ["hf"] * n_hf
    return new_seed(labels, kinds, P + frozen)
