"""Exact multivariate Laurent polynomials.

A :class:`LaurentPoly` is a finite map from integer exponent vectors to nonzero
coefficients over an ordered tuple of variable names.  Coefficients are Python
integers (unbounded) in the cluster code; the minor oracle reuses the class with
:class:`fractions.Fraction` coefficients in the single variable ``t``.

Operands over different variable tuples are aligned on the union of their names,
so ``x + y`` works without declaring a common ring first.
"""
from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Mapping, Union

Number = Union[int, Fraction]
Exps = tuple[int, ...]


class NotDivisible(ValueError):
    """Raised when an exact Laurent division has a nonzero remainder."""


class NotLaurent(ValueError):
    """Raised when a substitution would leave the Laurent ring."""

    def __init__(self, var: str, msg: str = ""):
        self.var = var
        super().__init__(msg or f"negative power of non-invertible image of {var}")


def _norm(c: Number) -> Number:
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c.numerator)
    return c


class LaurentPoly:
    __slots__ = ("varset", "terms", "_hash")

    def __init__(self, terms: Mapping[Exps, Number] | None = None, varset: Iterable[str] = ()):
        self.varset: tuple[str, ...] = tuple(varset)
        n = len(self.varset)
        clean = {}
        for e, c in (terms or {}).items():
            if c == 0:
                continue
            e = tuple(e)
            if len(e) != n:
                raise ValueError("exponent vector does not match the variable set")
            clean[e] = _norm(c)
        self.terms: dict[Exps, Number] = clean
        self._hash = None

    # -------------------------------------------------------------- builders
    @classmethod
    def const(cls, c: Number, varset: Iterable[str] = ()) -> "LaurentPoly":
        vs = tuple(varset)
        return cls({(0,) * len(vs): c}, vs)

    @classmethod
    def var(cls, name: str, varset: Iterable[str] | None = None) -> "LaurentPoly":
        vs = tuple(varset) if varset is not None else (name,)
        if name not in vs:
            vs = vs + (name,)
        e = tuple(int(v == name) for v in vs)
        return cls({e: 1}, vs)

    @classmethod
    def monomial(cls, exps: Mapping[str, int] | Iterable[int], varset: Iterable[str] | None = None,
                 coef: Number = 1) -> "LaurentPoly":
        """x^m, given either a name->exponent map or a vector over ``varset``."""
        if isinstance(exps, Mapping):
            vs = tuple(varset) if varset is not None else tuple(exps)
            extra = tuple(v for v in exps if v not in vs)
            vs = vs + extra
            e = tuple(int(exps.get(v, 0)) for v in vs)
        else:
            if varset is None:
                raise ValueError("a varset is needed for an exponent vector")
            vs = tuple(varset)
            e = tuple(int(x) for x in exps)
        return cls({e: coef}, vs)

    # -------------------------------------------------------------- basics
    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def extend(self, varset: Iterable[str]) -> "LaurentPoly":
        """Re-express over ``varset``, which must contain every used variable."""
        vs = tuple(varset)
        if vs == self.varset:
            return self
        idx = {v: i for i, v in enumerate(vs)}
        used = self.used_vars()
        missing = [v for v in used if v not in idx]
        if missing:
            raise ValueError(f"variables {missing} missing from the target varset")
        pos = [idx.get(v) for v in self.varset]
        out = {}
        for e, c in self.terms.items():
            ne = [0] * len(vs)
            for p, x in zip(pos, e):
                if x:
                    ne[p] = x
            out[tuple(ne)] = c
        return LaurentPoly(out, vs)

    def used_vars(self) -> list[str]:
        return [v for i, v in enumerate(self.varset) if any(e[i] for e in self.terms)]

    def _coerce(self, other) -> tuple["LaurentPoly", "LaurentPoly"]:
        if not isinstance(other, LaurentPoly):
            if isinstance(other, (int, Fraction)):
                return self, LaurentPoly.const(other, self.varset)
            return NotImplemented, NotImplemented
        if other.varset == self.varset:
            return self, other
        vs = self.varset + tuple(v for v in other.varset if v not in self.varset)
        return self.extend(vs), other.extend(vs)

    # -------------------------------------------------------------- ring ops
    def __add__(self, other):
        a, b = self._coerce(other)
        if a is NotImplemented:
            return NotImplemented
        out = dict(a.terms)
        for e, c in b.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out, a.varset)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self.terms.items()}, self.varset)

    def __sub__(self, other):
        a, b = self._coerce(other)
        if a is NotImplemented:
            return NotImplemented
        return a + (-b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        a, b = self._coerce(other)
        if a is NotImplemented:
            return NotImplemented
        out: dict[Exps, Number] = {}
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(out, a.varset)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if not self.is_monomial():
                raise NotLaurent(",".join(self.used_vars()) or "1",
                                 "negative power of a non-monomial Laurent polynomial")
            (e, c), = self.terms.items()
            inv = Fraction(1, 1) / c
            return LaurentPoly({tuple(n * x for x in e): inv ** (-n)}, self.varset)
        result = LaurentPoly.const(1, self.varset)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * LaurentPoly.const(Fraction(1) / other, self.varset)
        return exact_div(self, other)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.const(other, self.varset)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if other.varset == self.varset:
            return self.terms == other.terms
        a, b = self._coerce(other)
        return a.terms == b.terms

    def __hash__(self):
        if self._hash is None:
            key = frozenset(
                (frozenset((v, x) for v, x in zip(self.varset, e) if x), c)
                for e, c in self.terms.items()
            )
            self._hash = hash(key)
        return self._hash

    # -------------------------------------------------------------- queries
    def exponent(self, var: str) -> list[int]:
        i = self.varset.index(var)
        return [e[i] for e in self.terms]

    def degree_in(self, names: Iterable[str]) -> set[tuple[int, ...]]:
        """The set of exponent vectors restricted to ``names`` across all terms."""
        idx = [self.varset.index(v) if v in self.varset else None for v in names]
        return {tuple(e[i] if i is not None else 0 for i in idx) for e in self.terms}

    def coefficients(self) -> list[Number]:
        return list(self.terms.values())

    def evaluate(self, point: Mapping[str, Number]) -> Number:
        """Exact value at a point; missing variables are an error."""
        total: Number = 0
        vals = [point[v] for v in self.varset]
        for e, c in self.terms.items():
            term = Fraction(c)
            for v, x in zip(vals, e):
                if x:
                    term *= Fraction(v) ** x
            total += term
        return _norm(Fraction(total))

    def sorted_terms(self) -> list[tuple[Exps, Number]]:
        """Terms in descending graded-lexicographic order of exponents."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def __str__(self):
        return to_text(self)

    def __repr__(self):
        return f"LaurentPoly({to_text(self)!r})"


def _align(*polys: LaurentPoly) -> tuple[tuple[str, ...], list[LaurentPoly]]:
    vs: list[str] = []
    for p in polys:
        for v in p.varset:
            if v not in vs:
                vs.append(v)
    t = tuple(vs)
    return t, [p.extend(t) for p in polys]


def var_valuation(f: LaurentPoly, var: str) -> float | int:
    """Minimal exponent of ``var`` over the terms of ``f`` (``inf`` for 0)."""
    if f.is_zero():
        return math.inf
    if var not in f.varset:
        return 0
    return min(f.exponent(var))


def _div_coef(a: Number, b: Number) -> Number:
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        if r:
            raise NotDivisible(f"coefficient {a} is not divisible by {b}")
        return q
    return _norm(Fraction(a) / Fraction(b))


def exact_div(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    """Quotient q with f = q*g in the Laurent ring, or :class:`NotDivisible`.

    Long division by lexicographic leading terms.  Monomials are units, so a
    step never gets stuck; the quotient support must sit in the box spanned by
    the coordinatewise exponent ranges of f and g, which bounds the loop.
    """
    if g.is_zero():
        raise ZeroDivisionError("division by the zero Laurent polynomial")
    vs, (f, g) = _align(f, g)
    if f.is_zero():
        return LaurentPoly({}, vs)
    n = len(vs)
    if g.is_monomial():
        (ge, gc), = g.terms.items()
        return LaurentPoly({tuple(x - y for x, y in zip(e, ge)): _div_coef(c, gc)
                            for e, c in f.terms.items()}, vs)
    lo = [min(e[i] for e in f.terms) - min(e[i] for e in g.terms) for i in range(n)]
    hi = [max(e[i] for e in f.terms) - max(e[i] for e in g.terms) for i in range(n)]
    if any(a > b for a, b in zip(lo, hi)):
        raise NotDivisible("Newton polytope of the divisor does not fit")
    lt_g = max(g.terms)
    lc_g = g.terms[lt_g]
    g_items = list(g.terms.items())
    r = dict(f.terms)
    q: dict[Exps, Number] = {}
    while r:
        lt = max(r)
        m = tuple(x - y for x, y in zip(lt, lt_g))
        if any(not (a <= x <= b) for a, x, b in zip(lo, m, hi)):
            raise NotDivisible("nonzero remainder")
        c = _div_coef(r[lt], lc_g)
        q[m] = c
        for e, gc in g_items:
            k = tuple(x + y for x, y in zip(m, e))
            v = r.get(k, 0) - c * gc
            if v:
                r[k] = v
            else:
                r.pop(k, None)
    return LaurentPoly(q, vs)


def substitute(f: LaurentPoly, assignment: Mapping[str, LaurentPoly | Number]) -> LaurentPoly:
    """Replace variables by Laurent polynomials.

    Variables absent from ``assignment`` are kept.  A negative power of a
    non-monomial image is allowed only when the final exact division goes
    through; otherwise :class:`NotLaurent` names the offending variable.
    """
    images = {}
    for v, img in assignment.items():
        if not isinstance(img, LaurentPoly):
            img = LaurentPoly.const(img)
        images[v] = img
    keep = [v for v in f.varset if v not in images]
    base_vs = tuple(keep)
    for img in images.values():
        base_vs = base_vs + tuple(v for v in img.varset if v not in base_vs)
    images = {v: img.extend(base_vs) for v, img in images.items()}
    # shift negative powers of non-monomial images into a common denominator
    shift = {}
    for i, v in enumerate(f.varset):
        if v in images and not images[v].is_monomial():
            m = min(e[i] for e in f.terms) if f.terms else 0
            if m < 0:
                shift[v] = -m
    powers: dict[tuple[str, int], LaurentPoly] = {}

    def power(v: str, k: int) -> LaurentPoly:
        key = (v, k)
        if key not in powers:
            powers[key] = images[v] ** k
        return powers[key]

    keep_idx = {v: base_vs.index(v) for v in keep}
    total = LaurentPoly({}, base_vs)
    for e, c in f.terms.items():
        mono = [0] * len(base_vs)
        term = None
        for v, x in zip(f.varset, e):
            if v in images:
                k = x + shift.get(v, 0)
                if k:
                    p = power(v, k)
                    term = p if term is None else term * p
            elif x:
                mono[keep_idx[v]] = x
        piece = LaurentPoly({tuple(mono): c}, base_vs)
        total = total + (piece if term is None else piece * term)
    if not shift:
        return total
    den = LaurentPoly.const(1, base_vs)
    for v, k in shift.items():
        den = den * power(v, k)
    try:
        return exact_div(total, den)
    except NotDivisible:
        raise NotLaurent(sorted(shift)[0]) from None


# ---------------------------------------------------------------- text form

def _fmt_coef(c: Number) -> str:
    return str(c)


def to_text(f: LaurentPoly) -> str:
    """``coef * v1^e1 ... vk^ek`` terms joined by `` + `` in graded-lex order."""
    if f.is_zero():
        return "0"
    parts = []
    for e, c in f.sorted_terms():
        mono = " ".join(f"{v}^{x}" for v, x in zip(f.varset, e) if x)
        parts.append(f"{_fmt_coef(c)} * {mono}" if mono else _fmt_coef(c))
    return " + ".join(parts)


_TERM = re.compile(r"^\s*(-?\d+(?:/\d+)?)\s*(?:\*\s*(.*))?$")


def from_text(text: str, varset: Iterable[str] | None = None) -> LaurentPoly:
    """Parse the output of :func:`to_text`."""
    text = text.strip()
    vs = list(varset) if varset is not None else []
    if text == "0":
        return LaurentPoly({}, vs)
    raw = []
    for chunk in text.split(" + "):
        m = _TERM.match(chunk)
        if not m:
            raise ValueError(f"cannot parse Laurent term {chunk!r}")
        coef = Fraction(m.group(1))
        mono = {}
        if m.group(2):
            for tok in m.group(2).split():
                name, _, x = tok.rpartition("^")
                if not name:
                    name, x = tok, "1"
                mono[name] = mono.get(name, 0) + int(x)
                if name not in vs:
                    vs.append(name)
        raw.append((mono, _norm(coef)))
    out: dict[Exps, Number] = {}
    for mono, c in raw:
        e = tuple(mono.get(v, 0) for v in vs)
        out[e] = out.get(e, 0) + c
    return LaurentPoly(out, vs)
