"""Exact multivariate polynomial arithmetic over the rationals.

Monomials are dense exponent tuples over a fixed, ordered ambient variable
list; coefficients are Python ints or :class:`fractions.Fraction` values and
every operation is exact.  Term orders are realised as tuple-valued sort
keys, so ``max``, ``sorted`` and heaps consume them directly.

The precedence convention is fixed throughout the package: earlier variables
are larger, i.e. ``x1 > x2 > ... > xn`` (``> z > t`` when those are present).
Under GRevLex this makes the last variable the cheapest one, which is what
the staircases computed here rely on.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from heapq import heappop, heappush
from itertools import combinations_with_replacement
from typing import Iterable, Mapping, Sequence

from .errors import AmbientMismatchError

Monomial = tuple[int, ...]
Coeff = "int | Fraction"


# ---------------------------------------------------------------------------
# coefficients

def _norm_coeff(c):
    """Normalise a rational coefficient, preferring plain ints."""
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


def coeff_div(a, b):
    """Exact division of rational coefficients (never floats)."""
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        if r == 0:
            return q
        return Fraction(a, b)
    return _norm_coeff(Fraction(a) / Fraction(b))


def coeff_str(c) -> str:
    return str(c)


def parse_coeff(text: str):
    num, slash, den = text.partition("/")
    if slash:
        return _norm_coeff(Fraction(int(num), int(den)))
    return int(num)


# ---------------------------------------------------------------------------
# monomials

def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    """True when ``a`` divides ``b`` exponentwise."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    """Quotient a/b; caller guarantees divisibility."""
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_degree(a: Monomial) -> int:
    return sum(a)


def mono_coprime(a: Monomial, b: Monomial) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def monomials_of_degree(nvars: int, degree: int) -> list[Monomial]:
    """All exponent tuples of the given total degree, ascending in GRevLex."""
    out = []
    for combo in combinations_with_replacement(range(nvars), degree):
        exp = [0] * nvars
        for i in combo:
            exp[i] += 1
        out.append(tuple(exp))
    out.sort(key=GREVLEX.key)
    return out


# ---------------------------------------------------------------------------
# term orders

def _grevlex_key(m: Monomial):
    return (sum(m), *[-e for e in reversed(m)])


def _lex_key(m: Monomial):
    return m


def _deglex_key(m: Monomial):
    return (sum(m), *m)


class TermOrder:
    """A multiplicative total well-order on monomials.

    ``kind`` is one of ``grevlex``, ``lex``, ``deglex`` or ``elimination``.
    An elimination order carries the index set of its leading block: any
    monomial involving a block variable beats every monomial that avoids the
    block, which is exactly what variable elimination needs.  Within the
    block, and on the remaining variables, ties are broken by GRevLex.
    """

    __slots__ = ("kind", "block", "key")

    def __init__(self, kind: str, block: tuple[int, ...] = ()):
        if kind not in ("grevlex", "lex", "deglex", "elimination"):
            raise ValueError(f"unknown term order kind {kind!r}")
        if kind == "elimination" and not block:
            raise ValueError("elimination order needs a non-empty block")
        self.kind = kind
        self.block = tuple(sorted(block))
        if kind == "grevlex":
            self.key = _grevlex_key
        elif kind == "lex":
            self.key = _lex_key
        elif kind == "deglex":
            self.key = _deglex_key
        else:
            blockset = frozenset(self.block)
            blk = self.block

            def key(m, _blk=blk, _bs=blockset):
                head = [m[i] for i in _blk]
                tail = [e for i, e in enumerate(m) if i not in _bs]
                return (
                    sum(head),
                    *[-e for e in reversed(head)],
                    sum(tail),
                    *[-e for e in reversed(tail)],
                )

            self.key = key

    @classmethod
    def elimination(cls, block) -> "TermOrder":
        """Elimination order; ``block`` is a size (first k variables) or an
        explicit iterable of variable indices forming the leading block."""
        if isinstance(block, int):
            block = range(block)
        return cls("elimination", tuple(block))

    def cmp(self, a: Monomial, b: Monomial) -> int:
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def __eq__(self, other):
        return (
            isinstance(other, TermOrder)
            and self.kind == other.kind
            and self.block == other.block
        )

    def __hash__(self):
        return hash((self.kind, self.block))

    def __repr__(self):
        if self.kind == "elimination":
            return f"TermOrder.elimination({self.block})"
        return f"TermOrder({self.kind!r})"


GREVLEX = TermOrder("grevlex")
LEX = TermOrder("lex")
DEGLEX = TermOrder("deglex")


def cmp_monomials(a: Monomial, b: Monomial, order: TermOrder = GREVLEX) -> int:
    """Compare two monomials, returning -1, 0 or 1."""
    if len(a) != len(b):
        raise AmbientMismatchError(
            f"monomials over {len(a)} and {len(b)} variables"
        )
    return order.cmp(a, b)


# ---------------------------------------------------------------------------
# polynomials

class Polynomial:
    """An exact polynomial: a map from exponent tuples to rational coefficients.

    Instances are immutable values; all arithmetic returns new objects.  The
    stored term map is unordered, canonical descending order is produced on
    demand by :meth:`sorted_terms` / :func:`format_polynomial`.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Monomial, object] | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Monomial, object] = {}
        for m, c in items:
            c = _norm_coeff(c)
            if c:
                clean[m] = clean.get(m, 0) + c
                if not clean[m]:
                    del clean[m]
        self.nvars = nvars
        self.terms = clean

    # -- constructors ------------------------------------------------------
    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, c) -> "Polynomial":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def monomial(cls, mono: Monomial, coeff=1) -> "Polynomial":
        return cls(len(mono), {mono: coeff})

    @classmethod
    def variable(cls, nvars: int, i: int) -> "Polynomial":
        exp = [0] * nvars
        exp[i] = 1
        return cls(nvars, {tuple(exp): 1})

    # -- basic protocol ----------------------------------------------------
    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.nvars, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    __hash__ = None  # mutable-looking value type; never used as a dict key

    def _check(self, other: "Polynomial"):
        if self.nvars != other.nvars:
            raise AmbientMismatchError(
                f"polynomials over {self.nvars} and {other.nvars} variables"
            )

    def _coerce(self, other):
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.nvars, other)
        return other

    # -- arithmetic --------------------------------------------------------
    def __neg__(self) -> "Polynomial":
        return Polynomial(self.nvars, {m: -c for m, c in self.terms.items()})

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        res = Polynomial.__new__(Polynomial)
        res.nvars, res.terms = self.nvars, out
        return res

    __radd__ = __add__

    def __sub__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            if not other:
                return Polynomial.zero(self.nvars)
            return Polynomial(
                self.nvars, {m: c * other for m, c in self.terms.items()}
            )
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check(other)
        out: dict[Monomial, object] = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                m = mono_mul(ma, mb)
                s = out.get(m, 0) + ca * cb
                if s:
                    out[m] = s
                else:
                    del out[m]
        res = Polynomial.__new__(Polynomial)
        res.nvars, res.terms = self.nvars, out
        return res

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Polynomial":
        if not isinstance(e, int) or e < 0:
            raise ValueError("polynomial powers must be non-negative integers")
        result = Polynomial.constant(self.nvars, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def mul_term(self, mono: Monomial, coeff=1) -> "Polynomial":
        """Multiply by a single term (fast path used by the division loop)."""
        if not coeff:
            return Polynomial.zero(self.nvars)
        return Polynomial(
            self.nvars, {mono_mul(m, mono): c * coeff for m, c in self.terms.items()}
        )

    # -- inspection --------------------------------------------------------
    def coefficient(self, mono: Monomial):
        return self.terms.get(mono, 0)

    def total_degree(self) -> int:
        """Maximal term degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {sum(m) for m in self.terms}
        return len(degs) <= 1

    def top_degree_part(self) -> "Polynomial":
        """The homogeneous component of highest total degree."""
        d = self.total_degree()
        return Polynomial(
            self.nvars, {m: c for m, c in self.terms.items() if sum(m) == d}
        )

    def sorted_terms(self, order: TermOrder = GREVLEX) -> list:
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def leading_term(self, order: TermOrder = GREVLEX) -> tuple[Monomial, object]:
        if not self.terms:
            raise ValueError("the zero polynomial has no leading term")
        m = max(self.terms, key=order.key)
        return m, self.terms[m]

    def leading_monomial(self, order: TermOrder = GREVLEX) -> Monomial:
        return self.leading_term(order)[0]

    def leading_coefficient(self, order: TermOrder = GREVLEX):
        return self.leading_term(order)[1]

    def monic(self, order: TermOrder = GREVLEX) -> "Polynomial":
        _, c = self.leading_term(order)
        if c == 1:
            return self
        return Polynomial(
            self.nvars, {m: coeff_div(a, c) for m, a in self.terms.items()}
        )

    def __repr__(self):
        if not self.terms:
            return f"Polynomial({self.nvars}, 0)"
        names = tuple(f"x{i + 1}" for i in range(self.nvars))
        return f"Polynomial({self.nvars}, {_format(self, names, GREVLEX)})"


# ---------------------------------------------------------------------------
# division algorithm

def _reducer_info(reducers: Sequence[Polynomial], order: TermOrder):
    """Precompute (leading monomial, leading coeff, tail items) per reducer."""
    info = []
    for g in reducers:
        if not g:
            raise ValueError("reducers must be nonzero")
        lm, lc = g.leading_term(order)
        tail = [(m, c) for m, c in g.terms.items() if m != lm]
        info.append((lm, lc, tail))
    return info


def _normal_form(terms: dict, info, order: TermOrder):
    """Core division loop on raw term dicts.

    Monomials are processed in strictly descending order via a heap of
    negated order keys, which is equivalent to always rewriting the current
    leading term.  Returns (normal form dict, per-reducer quotient dicts).
    """
    key = order.key
    work = dict(terms)
    heap = [((*[-v for v in key(m)],), m) for m in work]
    heap.sort()
    nf: dict = {}
    quots: list[dict] = [{} for _ in info]
    while heap:
        _, m = heappop(heap)
        c = work.pop(m, 0)
        if not c:
            continue
        for idx, (lm, lc, tail) in enumerate(info):
            if mono_divides(lm, m):
                q = mono_div(m, lm)
                s = coeff_div(c, lc)
                qd = quots[idx]
                qd[q] = qd.get(q, 0) + s
                for tm, tc in tail:
                    t = mono_mul(q, tm)
                    old = work.get(t, 0)
                    new = old - s * tc
                    if new:
                        if not old:
                            heappush(heap, ((*[-v for v in key(t)],), t))
                        work[t] = new
                    else:
                        work.pop(t, None)
                break
        else:
            nf[m] = c
    return nf, quots


def reduce(
    p: Polynomial, reducers: Sequence[Polynomial], order: TermOrder = GREVLEX
) -> tuple[Polynomial, list[Polynomial]]:
    """Multivariate division of ``p`` by the list ``reducers``.

    Returns ``(normal_form, quotients)`` with
    ``p == sum(q_i * g_i) + normal_form`` and no term of the normal form
    divisible by any leading monomial of the reducers.  Reducers are tried
    leftmost first, so the result is deterministic for a fixed list order.
    """
    for g in reducers:
        if g.nvars != p.nvars:
            raise AmbientMismatchError("reducer over a different ambient ring")
    info = _reducer_info(reducers, order)
    nf, quots = _normal_form(p.terms, info, order)
    return (
        Polynomial(p.nvars, nf),
        [Polynomial(p.nvars, q) for q in quots],
    )


def s_polynomial(
    f: Polynomial, g: Polynomial, order: TermOrder = GREVLEX
) -> Polynomial:
    """The S-polynomial: both leading terms are scaled onto their lcm and
    cancelled, so S(f, f) == 0."""
    if not f or not g:
        raise ValueError("S-polynomial of the zero polynomial is undefined")
    lmf, lcf = f.leading_term(order)
    lmg, lcg = g.leading_term(order)
    lcm = mono_lcm(lmf, lmg)
    return f.mul_term(mono_div(lcm, lmf), coeff_div(1, lcf)) - g.mul_term(
        mono_div(lcm, lmg), coeff_div(1, lcg)
    )


# ---------------------------------------------------------------------------
# ambient rings, parsing and printing

_NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9]*\Z")
_TERM_RE = re.compile(r"[+-]?[^+-]+")
_RATIONAL_RE = re.compile(r"\d+(?:/\d+)?\Z")
_FACTOR_RE = re.compile(r"([A-Za-z][A-Za-z0-9]*)(?:\^(\d+))?\Z")


class PolyRing:
    """An ordered tuple of variable names; earlier names take precedence."""

    __slots__ = ("names", "index")

    def __init__(self, names: Iterable[str]):
        names = tuple(names)
        for nm in names:
            if not _NAME_RE.match(nm):
                raise ValueError(f"bad variable name {nm!r}")
        if len(set(names)) != len(names):
            raise ValueError("duplicate variable names")
        self.names = names
        self.index = {nm: i for i, nm in enumerate(names)}

    @property
    def nvars(self) -> int:
        return len(self.names)

    def var(self, name: str) -> Polynomial:
        return Polynomial.variable(self.nvars, self.index[name])

    def one(self) -> Polynomial:
        return Polynomial.constant(self.nvars, 1)

    def zero(self) -> Polynomial:
        return Polynomial.zero(self.nvars)

    def extend(self, *names: str) -> "PolyRing":
        return PolyRing(self.names + names)

    def without(self, drop: Iterable[str]) -> "PolyRing":
        drop = set(drop)
        return PolyRing(nm for nm in self.names if nm not in drop)

    def lift(self, p: Polynomial, source: "PolyRing") -> Polynomial:
        """Re-express ``p`` (over ``source``) in this ring, matching by name.

        Source variables that actually occur in ``p`` must exist here.
        """
        if p.nvars != source.nvars:
            raise AmbientMismatchError("polynomial does not match source ring")
        pos = []
        for i, nm in enumerate(source.names):
            pos.append(self.index.get(nm, -1))
        out = {}
        for m, c in p.terms.items():
            exp = [0] * self.nvars
            for i, e in enumerate(m):
                if not e:
                    continue
                j = pos[i]
                if j < 0:
                    raise AmbientMismatchError(
                        f"variable {source.names[i]!r} is absent from target ring"
                    )
                exp[j] = e
            out[tuple(exp)] = c
        return Polynomial(self.nvars, out)

    def poly(self, text: str) -> Polynomial:
        return parse_polynomial(text, self)

    def fmt(self, p: Polynomial, order: TermOrder = GREVLEX) -> str:
        return format_polynomial(p, self, order)

    def __eq__(self, other):
        return isinstance(other, PolyRing) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return f"PolyRing({', '.join(self.names)})"


def xring(n: int, *extra: str) -> PolyRing:
    """The ring F[x1..xn], optionally extended by further variables."""
    return PolyRing(tuple(f"x{i}" for i in range(1, n + 1)) + extra)


def yring(n: int) -> PolyRing:
    """The dual ring F[y1..yn]."""
    return PolyRing(f"y{i}" for i in range(1, n + 1))


def _format(p: Polynomial, names: Sequence[str], order: TermOrder) -> str:
    parts = []
    for m, c in p.sorted_terms(order):
        factors = [
            f"{names[i]}^{e}" if e > 1 else names[i] for i, e in enumerate(m) if e
        ]
        neg = c < 0
        a = -c if neg else c
        if not factors:
            body = coeff_str(a)
        elif a == 1:
            body = "*".join(factors)
        else:
            body = coeff_str(a) + "*" + "*".join(factors)
        parts.append((neg, body))
    first_neg, first = parts[0]
    out = ("-" if first_neg else "") + first
    for neg, body in parts[1:]:
        out += (" - " if neg else " + ") + body
    return out


def format_polynomial(
    p: Polynomial, ring: PolyRing, order: TermOrder = GREVLEX
) -> str:
    """Render a polynomial in the package text format, e.g. ``x2*x3 - x1``."""
    if p.nvars != ring.nvars:
        raise AmbientMismatchError("polynomial does not live in this ring")
    if not p:
        return "0"
    return _format(p, ring.names, order)


def parse_polynomial(text: str, ring: PolyRing) -> Polynomial:
    """Parse the text format: terms joined by + or -, factors joined by *.

    A term is an optional integer-or-rational coefficient followed by
    ``name^exp`` factors; whitespace is insignificant.
    """
    s = "".join(text.split())
    if not s:
        raise ValueError("empty polynomial text")
    chunks = _TERM_RE.findall(s)
    if "".join(chunks) != s:
        raise ValueError(f"cannot tokenise {text!r}")
    terms: dict[Monomial, object] = {}
    for chunk in chunks:
        sign = 1
        if chunk[0] in "+-":
            sign = -1 if chunk[0] == "-" else 1
            chunk = chunk[1:]
        if not chunk:
            raise ValueError(f"dangling sign in {text!r}")
        coeff = sign
        exp = [0] * ring.nvars
        for factor in chunk.split("*"):
            if _RATIONAL_RE.match(factor):
                coeff *= parse_coeff(factor)
                continue
            m = _FACTOR_RE.match(factor)
            if not m or m.group(1) not in ring.index:
                raise ValueError(f"bad factor {factor!r} in {text!r}")
            exp[ring.index[m.group(1)]] += int(m.group(2) or 1)
        mono = tuple(exp)
        c = terms.get(mono, 0) + coeff
        if c:
            terms[mono] = c
        else:
            terms.pop(mono, None)
    return Polynomial(ring.nvars, terms)


# ---------------------------------------------------------------------------
# ideals

@dataclass(frozen=True)
class Ideal:
    """A finitely generated ideal, tagged with its ambient ring.

    Zero generators are dropped at construction.  ``homogeneous`` is a
    three-valued flag: True (checked at construction), False, or None (unknown).
    """

    ring: PolyRing
    gens: tuple[Polynomial, ...]
    homogeneous: "bool | None" = None

    def __post_init__(self):
        gens = tuple(g for g in self.gens if g)
        for g in gens:
            if g.nvars != self.ring.nvars:
                raise AmbientMismatchError("generator outside the ambient ring")
        if self.homogeneous is True and not all(g.is_homogeneous() for g in gens):
            raise ValueError("ideal flagged homogeneous has inhomogeneous generators")
        object.__setattr__(self, "gens", gens)

    @property
    def is_zero(self) -> bool:
        return not self.gens

    def __repr__(self):
        body = ", ".join(self.ring.fmt(g) for g in self.gens) or "0"
        return f"Ideal({body})"
