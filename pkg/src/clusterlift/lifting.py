"""Monomial lifting of seeds.

Lifting a seed ``t`` along a matrix ``nu`` (rows indexed by a new set ``D``,
columns by the vertices of ``t``) adds one semi-frozen vertex per ``d`` in D:

* the exchange matrix gains the rows ``-nu B``;
* each x_i is multiplied by the monomial prod_d x_d^{nu[d, i]};
* the canonical degree configuration gives x_i degree nu[:, i] and x_d degree e_d.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Iterable, Sequence

import numpy as np

from .laurent import LaurentPoly, substitute
from .seedcore import DegreeConfig, Seed, mutate, new_seed, varname


@dataclass(frozen=True)
class LiftingConfig:
    D: tuple[str, ...]
    I: tuple[str, ...]
    nu: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "D", tuple(str(d) for d in self.D))
        object.__setattr__(self, "I", tuple(str(i) for i in self.I))
        rows = tuple(tuple(int(x) for x in r) for r in self.nu)
        object.__setattr__(self, "nu", rows)
        if len(rows) != len(self.D) or any(len(r) != len(self.I) for r in rows):
            raise ValueError("nu must have one row per element of D and one column per vertex")
        if set(self.D) & set(self.I):
            raise ValueError(f"D and I overlap: {sorted(set(self.D) & set(self.I))}")

    @property
    def matrix(self) -> np.ndarray:
        return np.array(self.nu, dtype=object).reshape(len(self.D), len(self.I))

    def column(self, i) -> tuple[int, ...]:
        c = self.I.index(str(i))
        return tuple(r[c] for r in self.nu)

    def row(self, d) -> tuple[int, ...]:
        return self.nu[self.D.index(str(d))]

    def restrict_rows(self, D: Iterable) -> "LiftingConfig":
        D = [str(d) for d in D]
        return LiftingConfig(tuple(D), self.I, tuple(self.row(d) for d in D))

    def pad_columns(self, I: Sequence) -> "LiftingConfig":
        """Same rows, zero entries on the extra columns of ``I``."""
        I = tuple(str(i) for i in I)
        rows = tuple(tuple(self.row(d)[self.I.index(i)] if i in self.I else 0 for i in I)
                     for d in self.D)
        return LiftingConfig(self.D, I, rows)


def _check_compatible(t: Seed, cfg: LiftingConfig) -> None:
    if tuple(cfg.I) != tuple(t.vertices):
        raise ValueError("lifting matrix columns must match the seed's vertices")
    clash = set(cfg.D) & (set(t.vertices) | {v[1:] for v in t.variables})
    if clash:
        raise ValueError(f"D labels clash with the seed: {sorted(clash)}")


def lifted_B(t: Seed, cfg: LiftingConfig) -> np.ndarray:
    M = t.matrix
    extra = -cfg.matrix.dot(M) if len(cfg.D) and M.size else np.zeros((len(cfg.D), M.shape[1]), dtype=object)
    return np.vstack([M, extra]) if len(cfg.D) else M


def canonical_degree(cfg: LiftingConfig) -> DegreeConfig:
    """The Z^D configuration (nu, Id)."""
    nD = len(cfg.D)
    rows = [cfg.column(i) for i in cfg.I]
    rows += [tuple(int(a == b) for b in range(nD)) for a in range(nD)]
    return DegreeConfig(nD, tuple(rows))


def lift_degree_config(sigma: DegreeConfig, cfg: LiftingConfig) -> DegreeConfig:
    """Lift sigma to (nu, Id) x (sigma, 0) on I followed by D."""
    base = canonical_degree(cfg)
    nI = len(cfg.I)
    rows = []
    for r, row in enumerate(base.rows):
        tail = sigma.rows[r] if r < nI else (0,) * sigma.dim
        rows.append(tuple(row) + tuple(tail))
    return DegreeConfig(base.dim + sigma.dim, tuple(rows))


def lift_seed(t: Seed, cfg: LiftingConfig, with_sigma: bool = True) -> Seed:
    """The lifted seed; D vertices are semi-frozen.

    When ``t`` carries a degree configuration and ``with_sigma`` holds, the
    lifted seed carries the lift of it; otherwise the canonical (nu, Id).
    """
    _check_compatible(t, cfg)
    if not cfg.D:
        return t
    Dvars = tuple(varname(d) for d in cfg.D)
    variables = t.variables + Dvars
    cluster = []
    for c, p in enumerate(t.cluster):
        mono = LaurentPoly.monomial(cfg.column(t.vertices[c]), Dvars)
        cluster.append((p * mono).extend(variables))
    cluster += [LaurentPoly.var(v, variables) for v in Dvars]
    deg = canonical_degree(cfg)
    if t.degree is not None and with_sigma:
        deg = lift_degree_config(t.degree, cfg)
    M = lifted_B(t, cfg)
    s = new_seed(t.vertices + cfg.D, t.kinds + ("sf",) * len(cfg.D), M, deg,
                 cluster=cluster, variables=variables)
    return replace(s, nu=cfg, tags=t.tags, word=t.word)


def mutate_lifting_matrix(cfg: LiftingConfig, t: Seed, k) -> LiftingConfig:
    """nu'[:, k] = max(nu B^+[:, k], nu B^-[:, k]) - nu[:, k], other columns kept."""
    k = str(k)
    if t.kind(k) != "uf":
        raise ValueError(f"cannot mutate the lifting matrix at frozen vertex {k}")
    c = t.col(k)
    col = [row[c] for row in t.B]
    kc = cfg.I.index(k)
    rows = []
    for r in cfg.nu:
        pos = sum(n * max(b, 0) for n, b in zip(r, col))
        neg = sum(n * max(-b, 0) for n, b in zip(r, col))
        new = list(r)
        new[kc] = max(pos, neg) - r[kc]
        rows.append(tuple(new))
    return LiftingConfig(cfg.D, cfg.I, tuple(rows))


def unlifted(s: Seed) -> Seed:
    """Drop the D vertices of a lifted seed and apply the deletion map."""
    cfg: LiftingConfig = s.nu
    keep = [s.row(v) for v in cfg.I]
    variables = tuple(s.variables[r] for r in keep)
    cluster = [deletion_map(s.cluster[r], cfg).extend(variables) for r in keep]
    B = [s.B[r] for r in keep]
    return new_seed(cfg.I, [s.kinds[r] for r in keep], B, cluster=cluster, variables=variables)


def mutate_lifted_nu(s: Seed, k) -> LiftingConfig:
    """Follow the stored lifting matrix of a lifted seed through mu_k."""
    cfg: LiftingConfig = s.nu
    base_rows = [s.row(v) for v in cfg.I]
    base = new_seed(cfg.I, [s.kinds[r] for r in base_rows], [s.B[r] for r in base_rows])
    return mutate_lifting_matrix(cfg, base, k)


def deletion_map(f: LaurentPoly, cfg: LiftingConfig) -> LaurentPoly:
    """x_d -> 1 for every d in D."""
    names = [varname(d) for d in cfg.D]
    f = substitute(f, {n: 1 for n in names if n in f.varset})
    keep = tuple(v for v in f.varset if v not in names)
    return f.extend(keep) if set(f.used_vars()) <= set(keep) else f


def D_degrees(f: LaurentPoly, cfg: LiftingConfig) -> set[tuple[int, ...]]:
    return f.degree_in([varname(d) for d in cfg.D])


@dataclass
class SquareReport:
    rows: list[tuple[str, str, bool, str]] = field(default_factory=list)

    def add(self, prefix: str, check: str, ok: bool, detail: str = ""):
        self.rows.append((prefix, check, bool(ok), detail))

    @property
    def ok(self) -> bool:
        return all(r[2] for r in self.rows)

    def failures(self):
        return [r for r in self.rows if not r[2]]

    def lines(self, suite: str = "lifting-square") -> list[str]:
        return [f"{suite} {p}:{c} {'PASS' if ok else 'FAIL'}" + (f" {d}" if d else "")
                for p, c, ok, d in self.rows]


def verify_lift_mutation_square(t: Seed, cfg: LiftingConfig, word: Sequence) -> SquareReport:
    """Compare mutate-then-lift with lift-then-mutate along every prefix of ``word``.

    Checks exact equality of B, the cluster and the canonical degree
    configuration, then the deletion map and the D-homogeneity of each lifted
    variable.  Failures are recorded, never raised.
    """
    rep = SquareReport()
    t = replace(t, degree=None)
    lifted = lift_seed(t, cfg)
    down, nu = t, cfg
    rep.add("()", "start", True)
    for step, k in enumerate(word, 1):
        prefix = "(" + ",".join(str(x) for x in word[:step]) + ")"
        try:
            nu = mutate_lifting_matrix(nu, down, k)
            down = mutate(down, k)
            lifted = mutate(lifted, k)
        except (ValueError, KeyError, RuntimeError) as exc:
            rep.add(prefix, "mutate", False, str(exc))
            return rep
        other = lift_seed(down, nu)
        rep.add(prefix, "B", lifted.B == other.B)
        rep.add(prefix, "cluster", lifted.cluster == other.cluster)
        rep.add(prefix, "degree", lifted.degree == other.degree)
        rep.add(prefix, "nu", lifted.nu == nu)
        dele = all(deletion_map(lifted.x(v), nu) == down.x(v) for v in down.vertices)
        rep.add(prefix, "deletion", dele)
        homog = all(D_degrees(lifted.x(v), nu) == {nu.column(v)} for v in down.vertices)
        rep.add(prefix, "homogeneous", homog)
    return rep


def lift_in_steps(t: Seed, cfg: LiftingConfig, first: Iterable) -> Seed:
    """Lift by the rows ``first`` of nu, then by the remaining rows padded with 0."""
    first = [str(d) for d in first]
    rest = [d for d in cfg.D if d not in first]
    step1 = lift_seed(t, cfg.restrict_rows(first))
    cfg2 = cfg.restrict_rows(rest).pad_columns(step1.vertices)
    return lift_seed(replace(step1, degree=None, nu=None), cfg2)


def random_lifting(rng, t: Seed, nD: int, bound: int = 3, prefix: str = "d") -> LiftingConfig:
    D = tuple(f"{prefix}{j + 1}" for j in range(nD))
    nu = tuple(tuple(rng.randint(-bound, bound) for _ in t.vertices) for _ in D)
    return LiftingConfig(D, t.vertices, nu)
