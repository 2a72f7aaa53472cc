"""Buchberger engine and ideal-theoretic operators.

The completion loop uses the normal selection strategy (pairs of smallest
lcm degree first) together with the Gebauer-Moeller pair criteria; new
elements are fully tail-reduced, and the final basis is minimalised,
interreduced, made monic and sorted by leading monomial.  The result is the
canonical reduced Groebner basis: unique for a given ideal and order, which
is what ideal equality, colon ideals and the regression tests lean on.
"""

from __future__ import annotations

from dataclasses import dataclass
from heapq import heappop, heappush
from itertools import combinations

from .errors import AmbientMismatchError, NonReducedBasisError, ResourceLimitError
from .polyarith import (
    GREVLEX,
    Ideal,
    Monomial,
    PolyRing,
    Polynomial,
    TermOrder,
    _normal_form,
    coeff_div,
    mono_coprime,
    mono_div,
    mono_divides,
    mono_lcm,
    reduce,
    s_polynomial,
)

DEFAULT_PAIR_CAP = 10**6


@dataclass(frozen=True)
class GroebnerBasis:
    """An order-tagged Groebner basis; ``reduced`` marks the canonical form."""

    ring: PolyRing
    order: TermOrder
    elements: tuple[Polynomial, ...]
    reduced: bool = True

    def leading_monomials(self) -> tuple[Monomial, ...]:
        return tuple(g.leading_monomial(self.order) for g in self.elements)

    def __repr__(self):
        body = ", ".join(self.ring.fmt(g, self.order) for g in self.elements)
        return f"GroebnerBasis[{self.order!r}]({body})"


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal kept as its minimal generators (a divisibility
    antichain); redundant generators passed in are dropped."""

    ring: PolyRing
    gens: tuple[Monomial, ...]

    def __post_init__(self):
        uniq = sorted(set(self.gens), key=GREVLEX.key)
        minimal = [
            m
            for m in uniq
            if not any(o != m and mono_divides(o, m) for o in uniq)
        ]
        object.__setattr__(self, "gens", tuple(minimal))

    def contains_monomial(self, m: Monomial) -> bool:
        return any(mono_divides(g, m) for g in self.gens)


# ---------------------------------------------------------------------------
# Buchberger completion

def buchberger(
    ideal: Ideal, order: TermOrder = GREVLEX, pair_cap: "int | None" = None
) -> GroebnerBasis:
    """Reduced Groebner basis of ``ideal`` with respect to ``order``.

    Raises :class:`ResourceLimitError` once more than ``pair_cap`` S-pairs
    (default ``DEFAULT_PAIR_CAP``) have been enqueued, turning runaway
    computations into clean failures.
    """
    cap = DEFAULT_PAIR_CAP if pair_cap is None else pair_cap
    key = order.key

    basis: list[Polynomial] = []
    lms: list[Monomial] = []
    info: list = []  # reducer info, kept in sync with basis
    alive: set[tuple[int, int]] = set()
    heap: list = []
    enqueued = 0

    def nf(p: Polynomial) -> Polynomial:
        out, _ = _normal_form(p.terms, info, order)
        return Polynomial(p.nvars, out)

    def update(h: Polynomial):
        """Gebauer-Moeller installation of a new basis element."""
        nonlocal enqueued
        t = len(basis)
        lt, lc = h.leading_term(order)
        lcm_with = [mono_lcm(lm, lt) for lm in lms]
        # new pairs, pruned by the lcm-divisibility and coprimality criteria
        candidates = list(range(t))
        kept: list[int] = []
        while candidates:
            i = candidates.pop(0)
            li = lcm_with[i]
            if mono_coprime(lms[i], lt) or (
                all(not mono_divides(lcm_with[j], li) for j in candidates)
                and all(not mono_divides(lcm_with[j], li) for j in kept)
            ):
                kept.append(i)
        new_pairs = [i for i in kept if not mono_coprime(lms[i], lt)]
        # chain criterion against surviving old pairs
        for i, j in list(alive):
            lij = mono_lcm(lms[i], lms[j])
            if (
                mono_divides(lt, lij)
                and lcm_with[i] != lij
                and lcm_with[j] != lij
            ):
                alive.discard((i, j))
        basis.append(h)
        lms.append(lt)
        tail = [(m, c) for m, c in h.terms.items() if m != lt]
        info.append((lt, lc, tail))
        for i in new_pairs:
            li = lcm_with[i]
            heappush(heap, (sum(li), key(li), i, t))
            alive.add((i, t))
            enqueued += 1
            if enqueued > cap:
                raise ResourceLimitError(
                    f"pair queue exceeded the cap of {cap} pairs"
                )

    for g in ideal.gens:
        h = nf(g)
        if h:
            update(h.monic(order))

    while heap:
        _, _, i, j = heappop(heap)
        if (i, j) not in alive:
            continue
        alive.discard((i, j))
        f, g = basis[i], basis[j]
        lcm = mono_lcm(lms[i], lms[j])
        s = f.mul_term(
            mono_div(lcm, lms[i]), coeff_div(1, f.terms[lms[i]])
        ) - g.mul_term(mono_div(lcm, lms[j]), coeff_div(1, g.terms[lms[j]]))
        h = nf(s)
        if h:
            update(h.monic(order))

    # minimalise: keep only elements whose leading monomial is undivided
    order_idx = sorted(range(len(basis)), key=lambda i: key(lms[i]))
    minimal: list[int] = []
    for i in order_idx:
        if not any(mono_divides(lms[j], lms[i]) for j in minimal):
            minimal.append(i)
    # interreduce tails; normal forms against a Groebner basis are canonical,
    # so a single pass in any order yields the reduced basis
    final = {i: basis[i] for i in minimal}
    for i in minimal:
        others = [final[j] for j in minimal if j != i]
        final[i] = reduce(final[i], others, order)[0].monic(order)
    return GroebnerBasis(ideal.ring, order, tuple(final[i] for i in minimal), True)


def is_groebner_basis(polys, order: TermOrder = GREVLEX) -> bool:
    """Direct Buchberger criterion: every S-polynomial reduces to zero.

    Quadratic and slow; meant for verifying outputs, not producing them.
    """
    polys = list(polys)
    for f, g in combinations(polys, 2):
        s = s_polynomial(f, g, order)
        if s and reduce(s, polys, order)[0]:
            return False
    return True


# ---------------------------------------------------------------------------
# derived operators

def initial_ideal(gb: GroebnerBasis) -> MonomialIdeal:
    """Leading-monomial ideal of a reduced basis (minimal generators)."""
    if not gb.reduced:
        raise NonReducedBasisError("initial_ideal requires a reduced basis")
    return MonomialIdeal(gb.ring, gb.leading_monomials())


def top_form_ideal(ideal: Ideal, pair_cap: "int | None" = None) -> Ideal:
    """The ideal of top-degree forms of all elements.

    GRevLex refines the degree filtration, so the top forms of a GRevLex
    Groebner basis generate it.
    """
    if ideal.is_zero:
        return Ideal(ideal.ring, (), homogeneous=True)
    gb = buchberger(ideal, GREVLEX, pair_cap)
    tops = tuple(g.top_degree_part() for g in gb.elements)
    return Ideal(ideal.ring, tops, homogeneous=True)


def ideal_member(f: Polynomial, gb: GroebnerBasis) -> bool:
    return not reduce(f, list(gb.elements), gb.order)[0]


def ideal_equal(
    a: Ideal, b: Ideal, order: TermOrder = GREVLEX, pair_cap: "int | None" = None
) -> bool:
    """Equality through canonical reduced bases."""
    if a.ring != b.ring:
        raise AmbientMismatchError("ideals live in different rings")
    ga = buchberger(a, order, pair_cap)
    gb = buchberger(b, order, pair_cap)
    return ga.elements == gb.elements


def _fresh_name(ring: PolyRing, base: str = "t") -> str:
    if base not in ring.index:
        return base
    k = 0
    while f"{base}{k}" in ring.index:
        k += 1
    return f"{base}{k}"


def eliminate(
    ideal: Ideal, names, pair_cap: "int | None" = None
) -> Ideal:
    """Generators of the elimination ideal ``I meet F[remaining variables]``.

    Computed from a Groebner basis for an elimination order whose leading
    block is ``names``; the result lives in the contracted ring.
    """
    names = tuple(names)
    if not names:
        return ideal
    for nm in names:
        if nm not in ideal.ring.index:
            raise AmbientMismatchError(f"no variable {nm!r} to eliminate")
    block = tuple(ideal.ring.index[nm] for nm in names)
    order = TermOrder.elimination(block)
    gb = buchberger(ideal, order, pair_cap)
    blockset = set(block)
    small = ideal.ring.without(names)
    kept = [
        small.lift(g, ideal.ring)
        for g in gb.elements
        if all(all(m[i] == 0 for i in blockset) for m in g.terms)
    ]
    return Ideal(small, tuple(kept))


def intersect(a: Ideal, b: Ideal, pair_cap: "int | None" = None) -> Ideal:
    """Ideal intersection via the auxiliary variable trick
    ``I meet J = (t*I + (1-t)*J) meet F[x]``."""
    if a.ring != b.ring:
        raise AmbientMismatchError("ideals live in different rings")
    ring = a.ring
    if a.is_zero or b.is_zero:
        return Ideal(ring, ())
    tname = _fresh_name(ring)
    big = ring.extend(tname)
    t = big.var(tname)
    gens = [t * big.lift(g, ring) for g in a.gens]
    gens += [(1 - t) * big.lift(g, ring) for g in b.gens]
    out = eliminate(Ideal(big, tuple(gens)), (tname,), pair_cap)
    return Ideal(ring, out.gens)


def exact_divide(g: Polynomial, f: Polynomial, order: TermOrder = GREVLEX) -> Polynomial:
    """Quotient g/f for a known multiple; remainder must vanish."""
    nf, quots = reduce(g, [f], order)
    if nf:
        raise ValueError("exact_divide called on a non-multiple")
    return quots[0]


def colon_ideal(a: Ideal, b: Ideal, pair_cap: "int | None" = None) -> Ideal:
    """The colon ideal (a : b) = all f with f*b inside a.

    For each generator f of b, (a : f) is obtained as (a meet <f>)/f through
    one elimination; the results are intersected over the generators.  The
    returned generators are the canonical reduced basis.
    """
    if b.is_zero:
        raise ValueError("colon by the zero ideal")
    if a.ring != b.ring:
        raise AmbientMismatchError("ideals live in different rings")
    ring = a.ring
    result: "Ideal | None" = None
    for f in b.gens:
        meet = intersect(a, Ideal(ring, (f,)), pair_cap)
        part = Ideal(ring, tuple(exact_divide(g, f) for g in meet.gens))
        result = part if result is None else intersect(result, part, pair_cap)
    gb = buchberger(result, GREVLEX, pair_cap)
    return Ideal(ring, gb.elements)


def substitute(f: Polynomial, var: int, value: Polynomial) -> Polynomial:
    """Evaluate the homomorphism sending variable ``var`` to ``value``."""
    if value.nvars != f.nvars:
        raise AmbientMismatchError("substitution value in a different ring")
    powers = {0: Polynomial.constant(f.nvars, 1)}
    out = Polynomial.zero(f.nvars)
    for m, c in f.terms.items():
        e = m[var]
        if e not in powers:
            powers[e] = value**e
        rest = list(m)
        rest[var] = 0
        out = out + powers[e].mul_term(tuple(rest), c)
    return out


def substitute_ideal(ideal: Ideal, name: str, value: Polynomial) -> Ideal:
    """Generatorwise substitution; the ambient ring is unchanged."""
    i = ideal.ring.index[name]
    return Ideal(ideal.ring, tuple(substitute(g, i, value) for g in ideal.gens))


def is_regular_element(
    ideal: Ideal, f: Polynomial, pair_cap: "int | None" = None
) -> bool:
    """True when f is a non zero-divisor on R/I, i.e. (I : f) = I."""
    if not f:
        raise ValueError("regularity of the zero element is undefined")
    quotient = colon_ideal(ideal, Ideal(ideal.ring, (f,)), pair_cap)
    return ideal_equal(quotient, ideal, GREVLEX, pair_cap)


def krull_dim_monomial(m_ideal: MonomialIdeal) -> int:
    """Krull dimension of R/M for a monomial ideal M: the largest number of
    variables supporting none of the generators entirely."""
    nv = m_ideal.ring.nvars
    zero = (0,) * nv
    if any(g == zero for g in m_ideal.gens):
        raise ValueError("monomial ideal contains 1; the quotient is zero")
    supports = [frozenset(i for i, e in enumerate(g) if e) for g in m_ideal.gens]
    for size in range(nv, 0, -1):
        for subset in combinations(range(nv), size):
            s = set(subset)
            if all(not sup <= s for sup in supports):
                return size
    return 0
