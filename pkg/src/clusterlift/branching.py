"""Seeds on unipotent cells and the branching liftings built on them.

Vertices of the seed attached to a reduced word (i_1, ..., i_l) are the
positions "1".."l"; vertex k carries the minor Delta^{w_{i_k}}_{e, s_{i_1}...s_{i_k}}.
Minor tags are ``(alpha, v_letters, w_letters)`` and mean
Delta^{varpi_alpha}_{v, w} with v, w given as product words.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Iterable, Sequence

from .lifting import LiftingConfig, lift_seed
from .rootsys import (CartanData, Weight, WeylWord, dominant_split, is_dominant, is_reduced,
                      longest_word, parabolic_longest, reduced_word_of_matrix,
                      weyl_matrix, word_act, word_stats)
from .seedcore import DegreeConfig, Seed, as_reference, disjoint_union, mutate_exchange_matrix, new_seed

MinorTag = tuple[int, tuple[int, ...], tuple[int, ...]]


@dataclass(frozen=True)
class BranchingSeed:
    word: WeylWord
    seed: Seed
    minor_tags: dict

    @property
    def sigma(self) -> DegreeConfig:
        return self.seed.degree

    @property
    def cartan(self) -> CartanData:
        return self.word.cartan


def exchange_entry(word: WeylWord, st, j: int, k: int) -> int:
    cd = word.cartan
    jp, kp = st.k_plus(j), st.k_plus(k)
    if j == st.k_minus(k):
        return 1
    if j == kp:
        return -1
    if j < k < jp < kp:
        return cd.a(word[j], word[k])
    if k < j < kp < jp:
        return -cd.a(word[j], word[k])
    return 0


def variable_weight(word: WeylWord, k: int) -> Weight:
    """z_{<=k}^{-1} varpi_{i_k}."""
    return word_act(word.prefix(k), word.cartan.fundamental(word[k]))


def sigma_of_word(word: WeylWord) -> DegreeConfig:
    """sigma_k = z_{<=k}^{-1} varpi_{i_k} - varpi_{i_k}."""
    cd = word.cartan
    rows = []
    for k in range(1, len(word) + 1):
        lam = variable_weight(word, k)
        rows.append(tuple(a - b for a, b in zip(lam, cd.fundamental(word[k]))))
    return DegreeConfig(cd.rank, tuple(rows))


def uw_seed(cd: CartanData, word: WeylWord | Sequence[int]) -> BranchingSeed:
    if not isinstance(word, WeylWord):
        word = WeylWord(tuple(word), cd)
    if not is_reduced(word):
        raise ValueError(f"word ({word}) is not reduced")
    l = len(word)
    st = word_stats(word)
    hf = set(st.alpha_max.values())
    vertices = [str(k) for k in range(1, l + 1)]
    kinds = ["hf" if k in hf else "uf" for k in range(1, l + 1)]
    uf = [k for k in range(1, l + 1) if k not in hf]
    B = [[exchange_entry(word, st, j, k) for k in uf] for j in range(1, l + 1)]
    tags = {str(k): (word[k], (), word.letters[:k]) for k in range(1, l + 1)}
    s = new_seed(vertices, kinds, B, sigma_of_word(word))
    s = replace(s, tags=tags, word=word)
    return BranchingSeed(word, s, tags)


# ---------------------------------------------------------------- Levi case

def levi_word(cd: CartanData, subset: Iterable[int]) -> WeylWord:
    """A reduced word for w_0 w_{0,I}, in subscript order."""
    subset = sorted(set(int(a) for a in subset))
    if len(subset) == cd.rank:
        raise ValueError("the Levi subset must be a proper subset of the simple roots")
    W0 = weyl_matrix(longest_word(cd))
    WI = weyl_matrix(WeylWord(parabolic_longest(cd, subset), cd))
    p = reduced_word_of_matrix(W0 @ WI, cd)
    return WeylWord(tuple(reversed(p)), cd)


def levi_label(alpha: int) -> str:
    return f"d{alpha}"


def levi_nu(cd: CartanData, word: WeylWord, labels: Sequence[str] | None = None) -> LiftingConfig:
    """nu_{alpha, k} = delta_{alpha, i_k} over D = simple roots."""
    D = tuple(levi_label(a) for a in range(1, cd.rank + 1))
    I = tuple(labels) if labels is not None else tuple(str(k) for k in range(1, len(word) + 1))
    nu = tuple(tuple(int(word[k] == a) for k in range(1, len(word) + 1)) for a in range(1, cd.rank + 1))
    return LiftingConfig(D, I, nu)


def levi_seed(cd: CartanData, subset: Iterable[int]) -> tuple[BranchingSeed, Seed]:
    bs = uw_seed(cd, levi_word(cd, subset))
    return bs, lift_seed(bs.seed, levi_nu(cd, bs.word))


# ---------------------------------------------------------------- tensor case

def tensor_label(alpha: int, side: str) -> str:
    return f"{alpha}_{side}"


def _check_full(word: WeylWord) -> None:
    if not is_reduced(word) or len(word) != len(word.cartan.positive_roots):
        raise ValueError(f"word ({word}) is not a reduced expression of w_0")


def tensor_nu(cd: CartanData, word: WeylWord, restrict_to_left: bool = False) -> LiftingConfig:
    """nu_{alpha_l,k} = delta_{alpha, i_k}; nu_{alpha_r,k} = max(0, <-z_{<=k}^{-1} varpi_{i_k}, alpha^v>)."""
    _check_full(word)
    l = len(word)
    I = tuple(str(k) for k in range(1, l + 1))
    D, rows = [], []
    for a in range(1, cd.rank + 1):
        D.append(tensor_label(a, "l"))
        rows.append(tuple(int(word[k] == a) for k in range(1, l + 1)))
    if not restrict_to_left:
        lams = [variable_weight(word, k) for k in range(1, l + 1)]
        for a in range(1, cd.rank + 1):
            D.append(tensor_label(a, "r"))
            rows.append(tuple(max(0, -lam[a - 1]) for lam in lams))
    return LiftingConfig(tuple(D), I, tuple(rows))


def tensor_seed(cd: CartanData, word: WeylWord, restrict_to_left: bool = False) -> tuple[BranchingSeed, Seed]:
    bs = uw_seed(cd, word)
    return bs, lift_seed(bs.seed, tensor_nu(cd, bs.word, restrict_to_left))


def base_affine_seed(cd: CartanData, word: WeylWord) -> tuple[BranchingSeed, Seed]:
    """Tensor seed lifted along D_l only; lifted variables are Delta_{e, (w_0)_{<=k}}."""
    bs, s = tensor_seed(cd, word, restrict_to_left=True)
    tags = {str(k): (word[k], (), word.letters[:k]) for k in range(1, len(word) + 1)}
    for a in range(1, cd.rank + 1):
        tags[tensor_label(a, "l")] = (a, (), ())
    return bs, replace(s, tags=tags)


def tensor_variable_weight(bs: BranchingSeed, k: int) -> tuple[Weight, Weight, Weight]:
    """(varpi_{i_k}, lambda^-, lambda^+) for lambda = z_{<=k}^{-1} varpi_{i_k}."""
    word = bs.word
    plus, minus = dominant_split(variable_weight(word, k))
    return word.cartan.fundamental(word[k]), minus, plus


def prv_witness(word: WeylWord, k: int) -> WeylWord:
    """v = w_0 z_{<=k} as a product word."""
    cd = word.cartan
    return WeylWord(longest_word(cd).letters + tuple(reversed(word.letters[:k])), cd)


def prv_check(lam: Weight, mu: Weight, nu: Weight, v: WeylWord) -> bool:
    """w_0 lam + v mu == v nu, exactly."""
    for x in (lam, mu, nu):
        if not is_dominant(x):
            raise ValueError(f"weight {tuple(x)} is not dominant")
    cd = v.cartan
    left = tuple(a + b for a, b in zip(word_act(longest_word(cd), lam), word_act(v, mu)))
    return left == tuple(word_act(v, nu))


# ---------------------------------------------------------------- degrees

def d_alpha(label: str) -> int:
    """The simple root a lifting direction is attached to ("d2", "2_l", "2_r" -> 2)."""
    s = label[1:] if label.startswith("d") else label.split("_")[0]
    return int(s)


def branching_degree(s: Seed, cd: CartanData) -> DegreeConfig:
    """Regrade the lifted degree (nu, Id) x (sigma, 0) as (a, rho(a) + b).

    ``a`` lives in Z^D and rho sends e_d to varpi_{alpha(d)}; this is the
    identity for the Levi case and the pair sum for the diagonal case.
    """
    cfg: LiftingConfig = s.nu
    rows = tuple(_regrade(row, cfg.D, cd) for row in s.degree.rows)
    return DegreeConfig(len(cfg.D) + cd.rank, rows)


def _regrade(row: Sequence[int], D: Sequence[str], cd: CartanData) -> tuple[int, ...]:
    nD = len(D)
    a, b = row[:nD], row[nD:]
    if len(b) != cd.rank:
        raise ValueError("lifted seed carries no weight-valued degree configuration")
    w = list(b)
    for coeff, d in zip(a, D):
        w[d_alpha(d) - 1] += coeff
    return tuple(a) + tuple(w)


def degree_set(s: Seed, k, depth: int, cd: CartanData | None = None) -> set[tuple[int, ...]]:
    """Degrees carried by vertex k over the seeds reached within ``depth`` mutations.

    Only exchange matrices and degree configurations are mutated.  With ``cd``
    a lifted seed's degrees are regraded as in :func:`branching_degree`.  This
    is a finite piece of the set, with no claim about the whole.
    """
    k = str(k)
    if s.degree is None:
        raise ValueError("seed carries no degree configuration")
    if s.kind(k) != "uf":
        raise ValueError(f"vertex {k} is not unfrozen")
    D = s.nu.D if cd is not None else ()
    start = replace(s, nu=None, tags=None)
    seen = {(start.B, start.degree.rows)}
    frontier = [start]
    out = set()
    for step in range(depth + 1):
        for cur in frontier:
            row = cur.degree.rows[cur.row(k)]
            out.add(_regrade(row, D, cd) if cd is not None else tuple(row))
        if step == depth:
            break
        nxt = []
        for cur in frontier:
            for j in cur.unfrozen:
                m = mutate_exchange_matrix(cur, j)
                key = (m.B, m.degree.rows)
                if key not in seen:
                    seen.add(key)
                    nxt.append(m)
        frontier = nxt
    return out


def expected_lifted_degree(cfg: LiftingConfig, sigma: DegreeConfig, k: int, cd: CartanData) -> tuple[int, ...]:
    """(nu_{.,k}, rho(nu_{.,k}) + sigma_k) from the closed formula."""
    col = cfg.column(str(k))
    w = list(sigma.rows[k - 1])
    for coeff, d in zip(col, cfg.D):
        w[d_alpha(d) - 1] += coeff
    return tuple(col) + tuple(w)


# ---------------------------------------------------------------- double cell

def double_cell_seed(cd: CartanData, word_prime: WeylWord, word: WeylWord) -> tuple[Seed, LiftingConfig]:
    """Union of the transposed seed of ``word_prime`` (labels k') with that of ``word``.

    The lifting matrix is nu_{alpha, j} = delta_{alpha, chi(j)}, chi(j) the
    fundamental weight of the minor at j, over D = simple roots.
    """
    _check_full(word_prime)
    _check_full(word)
    tp = uw_seed(cd, word_prime).seed
    ren = {v: v + "'" for v in tp.vertices}
    tp = new_seed([ren[v] for v in tp.vertices], tp.kinds, tp.B)
    t = uw_seed(cd, word).seed
    u = disjoint_union(tp, t)
    tags = {}
    chi = {}
    for k in range(1, len(word_prime) + 1):
        tags[f"{k}'"] = (word_prime[k], word_prime.letters[:k], ())
        chi[f"{k}'"] = word_prime[k]
    for k in range(1, len(word) + 1):
        tags[str(k)] = (word[k], (), word.letters[:k])
        chi[str(k)] = word[k]
    u = replace(u, tags=tags)
    D = tuple(levi_label(a) for a in range(1, cd.rank + 1))
    nu = tuple(tuple(int(chi[v] == a) for v in u.vertices) for a in range(1, cd.rank + 1))
    return u, LiftingConfig(D, u.vertices, nu)


def double_cell_lifted(cd: CartanData, word_prime: WeylWord, word: WeylWord) -> Seed:
    """Lifted double-cell seed, rebased so that its cluster is its own variables."""
    u, cfg = double_cell_seed(cd, word_prime, word)
    s = lift_seed(u, cfg)
    tags = dict(u.tags)
    for a in range(1, cd.rank + 1):
        tags[levi_label(a)] = (a, (), ())
    return replace(as_reference(s), tags=tags)


def strict_inclusion_witness(s: Seed, cd: CartanData, alpha: int):
    """(x_1 x_1' + prod_beta x_{d_beta}^{-a_{beta,alpha}}) / x_{d_alpha} in the variables of ``s``.

    ``s`` is the lifted double-cell seed taken as its own reference seed; with
    i_1 = i'_1 = alpha this element is the minor Delta^{varpi_alpha}_{s_alpha, s_alpha}.
    """
    from .laurent import LaurentPoly

    num = s.x("1") * s.x("1'")
    prod = LaurentPoly.const(1, s.variables)
    for b in range(1, cd.rank + 1):
        if b != alpha and cd.a(b, alpha) != 0:
            prod = prod * s.x(levi_label(b)) ** (-cd.a(b, alpha))
    return (num + prod) * s.x(levi_label(alpha)) ** -1


# ---------------------------------------------------------------- braid moves

def _table(s: Seed) -> tuple[dict, dict, tuple[str, ...]]:
    """(b lookup over vertices x unfrozen, kind lookup, unfrozen) for fast comparisons."""
    uf = s.unfrozen
    b = {(v, j): s.B[r][c] for r, v in enumerate(s.vertices) for c, j in enumerate(uf)}
    return b, dict(zip(s.vertices, s.kinds)), uf


def _window_match(s: Seed, t: Seed, window: Sequence[str]) -> bool:
    """Some relabelling of the window vertices turns B(s) into B(t)."""
    (bs, ks, ufs), (bt, kt, _) = _table(s), _table(t)
    inside = set(window)
    outside = [v for v in s.vertices if v not in inside]
    if any(ks[v] != kt[v] for v in outside):
        return False
    if any(bs[i, j] != bt[i, j] for i in outside for j in ufs if j not in inside):
        return False

    uft = t.unfrozen
    if len(uft) != len(ufs):
        return False

    def signature(b, k, uf, v):
        col = tuple(sorted(b[i, v] for i in s.vertices)) if k[v] == "uf" else ()
        return k[v], tuple(sorted(b[v, j] for j in uf)), col

    sig_t = {v: signature(bt, kt, uft, v) for v in window}
    cands = {v: [u for u in window if sig_t[u] == signature(bs, ks, ufs, v)] for v in window}
    if any(not c for c in cands.values()):
        return False
    order = sorted(window, key=lambda v: len(cands[v]))
    perm: dict[str, str] = {}

    def image(x: str):
        return perm.get(x) if x in inside else x

    def consistent(v: str) -> bool:
        for j in ufs:
            rj = image(j)
            if rj is not None and bs[v, j] != bt[perm[v], rj]:
                return False
        if ks[v] == "uf":
            for i in s.vertices:
                ri = image(i)
                if ri is not None and bs[i, v] != bt[ri, perm[v]]:
                    return False
        return True

    def extend(n: int) -> bool:
        if n == len(order):
            return True
        v = order[n]
        for u in cands[v]:
            if u in perm.values():
                continue
            perm[v] = u
            if consistent(v) and extend(n + 1):
                return True
            del perm[v]
        return False

    return extend(0)


def braid_relation(cd: CartanData, word: WeylWord, other: WeylWord, depth: int = 6,
                   lifted: bool = False) -> tuple[str, ...] | None:
    """A mutation sequence taking the seed of ``word`` to that of ``other``, or None.

    The words must agree outside one window (a braid move).  Mutations and
    relabellings are confined to the window positions, and only exchange
    matrices are compared, so None means "not found within ``depth``", not
    "inequivalent".  With ``lifted`` the tensor-product lifted seeds are
    compared instead, D rows included.
    """
    if not isinstance(word, WeylWord):
        word = WeylWord(tuple(word), cd)
    if not isinstance(other, WeylWord):
        other = WeylWord(tuple(other), cd)
    if len(word) != len(other):
        raise ValueError("braid-related words have equal length")
    diff = [k for k in range(1, len(word) + 1) if word[k] != other[k]]
    if not diff:
        return ()
    window = [str(k) for k in range(diff[0], diff[-1] + 1)]
    if lifted:
        s, t = tensor_seed(cd, word)[1], tensor_seed(cd, other)[1]
    else:
        s, t = uw_seed(cd, word).seed, uw_seed(cd, other).seed
    s = new_seed(s.vertices, s.kinds, s.B)
    frontier = [(s, ())]
    seen = {s.B}
    for step in range(depth + 1):
        for cur, path in frontier:
            if _window_match(cur, t, window):
                return path
        if step == depth:
            break
        nxt = []
        for cur, path in frontier:
            for k in window:
                if cur.kind(k) != "uf" or (path and path[-1] == k):
                    continue
                m = mutate_exchange_matrix(cur, k)
                if m.B not in seen:
                    seen.add(m.B)
                    nxt.append((m, path + (k,)))
        frontier = nxt
    return None
