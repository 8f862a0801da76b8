"""Finite root systems, Weyl group words and the index bookkeeping used by
the branching seeds.

Conventions
-----------
* ``A[i][j] = <alpha_j, alpha_i^vee>`` (row ``i`` pairs with the coroot of
  ``alpha_i``).  Column ``j`` of ``A`` is ``alpha_j`` written in the
  fundamental-weight basis.
* Weights are integer tuples in the fundamental-weight basis, roots are integer
  tuples in the simple-root basis.  Simple indices are 1-based everywhere in
  the public API.
* A :class:`WeylWord` stores letters ``(i_1, ..., i_l)`` in subscript order.
  The element it names is ``z = s_{i_l} ... s_{i_1}``; prefixes give
  ``z_{<=k} = s_{i_k} ... s_{i_1}`` and ``z_{<=k}^{-1} = s_{i_1} ... s_{i_k}``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

Weight = tuple[int, ...]
Root = tuple[int, ...]


@dataclass(frozen=True)
class CartanData:
    label: str
    rank: int
    A: tuple[tuple[int, ...], ...]
    d: tuple[int, ...]

    def __post_init__(self):
        n = self.rank
        if len(self.A) != n or any(len(r) != n for r in self.A):
            raise ValueError("Cartan matrix has wrong shape")
        if len(self.d) != n or any(x <= 0 for x in self.d):
            raise ValueError("symmetrizers must be positive")
        for i in range(n):
            if self.A[i][i] != 2:
                raise ValueError(f"A[{i + 1}][{i + 1}] must be 2")
            for j in range(n):
                if i == j:
                    continue
                if self.A[i][j] > 0:
                    raise ValueError("off-diagonal Cartan entries must be <= 0")
                if (self.A[i][j] == 0) != (self.A[j][i] == 0):
                    raise ValueError("Cartan zero pattern is not symmetric")
                if self.d[i] * self.A[i][j] != self.d[j] * self.A[j][i]:
                    raise ValueError("Cartan matrix is not symmetrized by d")

    @property
    def matrix(self) -> np.ndarray:
        return np.array(self.A, dtype=np.int64)

    def a(self, i: int, j: int) -> int:
        """Entry a_{i,j} = <alpha_j, alpha_i^vee>, 1-based."""
        return self.A[i - 1][j - 1]

    def fundamental(self, i: int) -> Weight:
        return tuple(int(k == i - 1) for k in range(self.rank))

    def simple_root(self, i: int) -> Root:
        return tuple(int(k == i - 1) for k in range(self.rank))

    def root_to_weight(self, beta: Root) -> Weight:
        return tuple(int(x) for x in self.matrix @ np.array(beta, dtype=np.int64))

    def pair(self, lam: Weight, i: int) -> int:
        """<lambda, alpha_i^vee> for a weight in fundamental coordinates."""
        return lam[i - 1]

    def root_pair(self, beta: Root, i: int) -> int:
        """<beta, alpha_i^vee> for a root in simple-root coordinates."""
        return sum(self.A[i - 1][j] * beta[j] for j in range(self.rank))

    def reflect_weight(self, i: int, lam: Weight) -> Weight:
        c = lam[i - 1]
        if c == 0:
            return tuple(lam)
        return tuple(lam[r] - c * self.A[r][i - 1] for r in range(self.rank))

    def reflect_root(self, i: int, beta: Root) -> Root:
        c = self.root_pair(beta, i)
        if c == 0:
            return tuple(beta)
        out = list(beta)
        out[i - 1] -= c
        return tuple(out)

    @cached_property
    def positive_roots(self) -> tuple[Root, ...]:
        """All positive roots, grown from the simple roots by reflections."""
        seen = {self.simple_root(i) for i in range(1, self.rank + 1)}
        frontier = list(seen)
        while frontier:
            nxt = []
            for beta in frontier:
                for i in range(1, self.rank + 1):
                    gamma = self.reflect_root(i, beta)
                    if all(x >= 0 for x in gamma) and gamma not in seen:
                        seen.add(gamma)
                        nxt.append(gamma)
            frontier = nxt
        return tuple(sorted(seen, key=lambda b: (sum(b), tuple(-x for x in b))))

    def __str__(self):
        return self.label


def is_positive_root(beta: Root) -> bool:
    return any(x > 0 for x in beta) and all(x >= 0 for x in beta)


def is_negative_root(beta: Root) -> bool:
    return any(x < 0 for x in beta) and all(x <= 0 for x in beta)


# Bourbaki numbering.  Entries are a_{i,j} = <alpha_j, alpha_i^vee>.
def _cartan_block(family: str, n: int) -> list[list[int]]:
    A = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i, j, aij=-1, aji=-1):
        A[i][j], A[j][i] = aij, aji

    if family == "A":
        if n < 1:
            raise ValueError("A_n needs n >= 1")
        for i in range(n - 1):
            link(i, i + 1)
    elif family == "B":
        if n < 2:
            raise ValueError("B_n needs n >= 2")
        for i in range(n - 2):
            link(i, i + 1)
        # alpha_n short
        link(n - 2, n - 1, -1, -2)
    elif family == "C":
        if n < 2:
            raise ValueError("C_n needs n >= 2")
        for i in range(n - 2):
            link(i, i + 1)
        # alpha_n long
        link(n - 2, n - 1, -2, -1)
    elif family == "D":
        if n < 3:
            raise ValueError("D_n needs n >= 3")
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 3, n - 1)
    elif family == "E":
        if n not in (6, 7, 8):
            raise ValueError("E_n needs n in {6,7,8}")
        link(0, 2)
        link(1, 3)
        for i in range(2, n - 1):
            link(i, i + 1)
    elif family == "F":
        if n != 4:
            raise ValueError("F_n needs n = 4")
        link(0, 1)
        link(1, 2, -1, -2)
        link(2, 3)
    elif family == "G":
        if n != 2:
            raise ValueError("G_n needs n = 2")
        # alpha_1 short, alpha_2 long
        link(0, 1, -3, -1)
    else:
        raise ValueError(f"unsupported family {family!r}")
    return A


def _symmetrizer(A: list[list[int]]) -> list[int]:
    n = len(A)
    d: list[Fraction | None] = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if j != i and A[i][j] != 0 and d[j] is None:
                    d[j] = d[i] * Fraction(A[i][j], A[j][i])
                    stack.append(j)
    den = 1
    for x in d:
        den = den * x.denominator // np.gcd(den, x.denominator)
    return [int(x * den) for x in d]


def parse_type(text: str) -> list[tuple[str, int]]:
    """Parse ``A3``, ``A:3``, ``B2xA1`` style labels into (family, rank) parts."""
    parts = []
    for chunk in text.replace("*", "x").split("x"):
        chunk = chunk.strip().replace(":", "")
        if not chunk:
            continue
        fam, num = chunk[0].upper(), chunk[1:]
        if not num.isdigit():
            raise ValueError(f"cannot parse Cartan type {text!r}")
        parts.append((fam, int(num)))
    if not parts:
        raise ValueError(f"cannot parse Cartan type {text!r}")
    return parts


def cartan(family: str | Sequence[tuple[str, int]], rank: int | None = None) -> CartanData:
    """Build the Cartan datum of a finite type or a finite product of types.

    ``cartan("A", 2)``, ``cartan("A2")`` and ``cartan([("A", 1), ("A", 1)])``
    are all accepted; products give the block-diagonal matrix.
    """
    if isinstance(family, str):
        parts = [(family.upper(), rank)] if rank is not None else parse_type(family)
    else:
        parts = [(f.upper(), r) for f, r in family]
    blocks = [_cartan_block(f, r) for f, r in parts]
    n = sum(len(b) for b in blocks)
    A = [[0] * n for _ in range(n)]
    off = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, v in enumerate(row):
                A[off + i][off + j] = v
        off += len(b)
    label = "x".join(f"{f}{r}" for f, r in parts)
    return CartanData(label, n, tuple(map(tuple, A)), tuple(_symmetrizer(A)))


# ---------------------------------------------------------------- words


@dataclass(frozen=True)
class WeylWord:
    letters: tuple[int, ...]
    cartan: CartanData = field(repr=False)

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        for x in self.letters:
            if not 1 <= x <= self.cartan.rank:
                raise ValueError(f"letter {x} outside [1, {self.cartan.rank}]")

    @classmethod
    def from_paper_order(cls, letters: Iterable[int], cd: CartanData) -> "WeylWord":
        """Words written as (i_l, ..., i_1) are reversed into subscript order."""
        return cls(tuple(reversed(tuple(letters))), cd)

    def paper_order(self) -> tuple[int, ...]:
        return tuple(reversed(self.letters))

    def __len__(self):
        return len(self.letters)

    def __getitem__(self, k: int) -> int:
        """1-based letter access, i_k."""
        return self.letters[k - 1]

    def prefix(self, k: int) -> "WeylWord":
        return WeylWord(self.letters[:k], self.cartan)

    def reverse(self) -> "WeylWord":
        return WeylWord(tuple(reversed(self.letters)), self.cartan)

    def support(self) -> set[int]:
        return set(self.letters)

    def __str__(self):
        return ",".join(map(str, self.letters))


def word_act(w: WeylWord, lam: Weight) -> Weight:
    """Apply s_{i_1} s_{i_2} ... s_{i_l} to a weight (rightmost letter first).

    For a prefix of length k this is z_{<=k}^{-1} lambda.
    """
    lam = tuple(lam)
    if len(lam) != w.cartan.rank:
        raise ValueError("weight rank does not match the word's Cartan datum")
    for i in reversed(w.letters):
        lam = w.cartan.reflect_weight(i, lam)
    return lam


def root_act(w: WeylWord, beta: Root) -> Root:
    """Same composition order as :func:`word_act`, on simple-root coordinates."""
    beta = tuple(beta)
    for i in reversed(w.letters):
        beta = w.cartan.reflect_root(i, beta)
    return beta


def z_prefix_root(w: WeylWord, k: int, beta: Root) -> Root:
    """z_{<=k} beta = s_{i_k} ... s_{i_1} beta."""
    beta = tuple(beta)
    for i in w.letters[:k]:
        beta = w.cartan.reflect_root(i, beta)
    return beta


def z_prefix_weight(w: WeylWord, k: int, lam: Weight) -> Weight:
    lam = tuple(lam)
    for i in w.letters[:k]:
        lam = w.cartan.reflect_weight(i, lam)
    return lam


def _reflection_order(w: WeylWord) -> list[Root]:
    cd = w.cartan
    out = []
    for k in range(1, len(w) + 1):
        out.append(root_act(w.prefix(k - 1), cd.simple_root(w[k])))
    return out


def is_reduced(w: WeylWord) -> bool:
    """Each beta_k = s_{i_1}...s_{i_{k-1}}(alpha_{i_k}) must stay positive."""
    return all(is_positive_root(b) for b in _reflection_order(w))


def inversions(w: WeylWord) -> list[Root]:
    """Inversions of the word in reflection order beta_1, ..., beta_l."""
    roots = _reflection_order(w)
    if not all(is_positive_root(b) for b in roots):
        raise ValueError(f"word ({w}) is not reduced")
    return roots


def _extend_longest(cd: CartanData, allowed: Sequence[int]) -> tuple[int, ...]:
    # Greedily append s_i while the length grows: w s_i > w iff w(alpha_i) > 0.
    word: list[int] = []
    while True:
        for i in allowed:
            beta = cd.simple_root(i)
            for j in reversed(word):
                beta = cd.reflect_root(j, beta)
            if is_positive_root(beta):
                word.append(i)
                break
        else:
            return tuple(word)


def longest_word(cd: CartanData) -> WeylWord:
    """A reduced word of w_0, smallest-index greedy choice at every step."""
    return WeylWord(_extend_longest(cd, range(1, cd.rank + 1)), cd)


def weyl_matrix(w: WeylWord) -> np.ndarray:
    """Matrix of s_{i_1}...s_{i_l} acting on simple-root coordinates."""
    cd = w.cartan
    cols = [root_act(w, cd.simple_root(i)) for i in range(1, cd.rank + 1)]
    return np.array(cols, dtype=np.int64).T


def reduced_word_of_matrix(M: np.ndarray, cd: CartanData) -> tuple[int, ...]:
    """Product word (j_1, ..., j_m) with M = s_{j_1} ... s_{j_m}, reduced.

    ``M`` acts on simple-root coordinates.  Right descents are stripped one at
    a time: M s_i is shorter than M iff M(alpha_i) is negative.
    """
    M = np.array(M, dtype=np.int64)
    tail: list[int] = []
    for _ in range(len(cd.positive_roots) + 1):
        if np.array_equal(M, np.eye(cd.rank, dtype=np.int64)):
            return tuple(reversed(tail))
        for i in range(1, cd.rank + 1):
            if is_negative_root(tuple(M[:, i - 1])):
                tail.append(i)
                M = M @ weyl_matrix(WeylWord((i,), cd))
                break
        else:
            break
    raise ValueError("matrix is not a Weyl group element")


def parabolic_longest(cd: CartanData, subset: Iterable[int]) -> tuple[int, ...]:
    return _extend_longest(cd, sorted(subset))


@dataclass(frozen=True)
class WordStats:
    length: int
    plus: dict[int, int]
    minus: dict[int, int]
    alpha_min: dict[int, int]
    alpha_max: dict[int, int]
    alpha_minus: dict[int, int]

    def k_plus(self, k: int) -> int:
        return k if k in (0, self.length + 1) else self.plus[k]

    def k_minus(self, k: int) -> int:
        return k if k in (0, self.length + 1) else self.minus[k]


def word_stats(w: WeylWord) -> WordStats:
    """k^+, k^-, alpha^min, alpha^max and alpha(-) for a word.

    ``alpha_minus`` holds alpha(-) = min{k : z_{<=k} alpha < 0} for each simple
    alpha that is an inversion of z; it is empty for non-reduced words.
    """
    n = len(w)
    plus, minus = {}, {}
    for k in range(1, n + 1):
        nxt = [j for j in range(k + 1, n + 1) if w[j] == w[k]]
        prv = [j for j in range(1, k) if w[j] == w[k]]
        plus[k] = nxt[0] if nxt else n + 1
        minus[k] = prv[-1] if prv else 0
    amin, amax = {}, {}
    for k in range(1, n + 1):
        amin.setdefault(w[k], k)
        amax[w[k]] = k
    aminus = {}
    if is_reduced(w):
        cd = w.cartan
        for a in range(1, cd.rank + 1):
            for k in range(1, n + 1):
                if is_negative_root(z_prefix_root(w, k, cd.simple_root(a))):
                    aminus[a] = k
                    break
    return WordStats(n, plus, minus, amin, amax, aminus)


def alpha_minus(w: WeylWord, alpha: int) -> int:
    st = word_stats(w)
    if alpha not in st.alpha_minus:
        raise ValueError(f"alpha_{alpha} is not an inversion of the word ({w})")
    return st.alpha_minus[alpha]


def dominant_split(lam: Weight) -> tuple[Weight, Weight]:
    """Componentwise positive and negative parts, lam = plus - minus."""
    return tuple(max(x, 0) for x in lam), tuple(max(-x, 0) for x in lam)


def is_dominant(lam: Weight) -> bool:
    return all(x >= 0 for x in lam)


def braid_moves(w: WeylWord) -> Iterable[tuple[int, ...]]:
    """Words obtained from ``w`` by one braid or commutation move."""
    cd = w.cartan
    L = w.letters
    for p in range(len(L)):
        for q in range(p + 2, min(len(L), p + 6) + 1):
            a, b = L[p], L[p + 1]
            if a == b:
                continue
            m = _coxeter_m(cd, a, b)
            if q - p != m:
                continue
            seg = L[p:q]
            expect = tuple(a if t % 2 == 0 else b for t in range(m))
            if seg == expect:
                swapped = tuple(b if t % 2 == 0 else a for t in range(m))
                yield L[:p] + swapped + L[q:]


def _coxeter_m(cd: CartanData, i: int, j: int) -> int:
    prod = cd.a(i, j) * cd.a(j, i)
    return {0: 2, 1: 3, 2: 4, 3: 6}[prod]


def reduced_words(w: WeylWord, cap: int | None = None) -> list[WeylWord]:
    """Reduced words of the same element, depth-first over braid moves.

    Deterministic; stops after ``cap`` words when a cap is given.
    """
    if not is_reduced(w):
        raise ValueError(f"word ({w}) is not reduced")
    seen = {w.letters}
    order = [w.letters]
    stack = [w.letters]
    while stack and (cap is None or len(order) < cap):
        cur = stack.pop()
        for nxt in sorted(braid_moves(WeylWord(cur, w.cartan)), reverse=True):
            if nxt not in seen:
                seen.add(nxt)
                order.append(nxt)
                stack.append(nxt)
                if cap is not None and len(order) >= cap:
                    break
    return [WeylWord(x, w.cartan) for x in order]
