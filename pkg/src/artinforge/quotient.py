"""Artinian quotient toolkit.

Everything here works inside R/I presented by a reduced Groebner basis: the
staircase complement (standard monomials) is the vector-space basis, normal
forms give coordinates, and multiplication matrices feed the socle and
equivariant trace computations.  The dual side (contraction action and
annihilators of dual polynomials) realises Macaulay's inverse systems.
"""

from __future__ import annotations

from . import linalg
from .errors import (
    AmbientMismatchError,
    EquivarianceError,
    NonReducedBasisError,
    NotArtinianError,
)
from .groebner import GroebnerBasis, buchberger, ideal_member
from .polyarith import (
    GREVLEX,
    Ideal,
    Monomial,
    Polynomial,
    _normal_form,
    _reducer_info,
    mono_divides,
    monomials_of_degree,
    xring,
)


class StandardBasis:
    """The monomials outside a leading-term ideal, grouped by total degree."""

    __slots__ = ("by_degree", "monomials")

    def __init__(self, by_degree):
        self.by_degree = tuple(tuple(level) for level in by_degree)
        self.monomials = tuple(m for level in self.by_degree for m in level)

    def __len__(self):
        return len(self.monomials)

    def __iter__(self):
        return iter(self.monomials)


def standard_monomials(
    gb: GroebnerBasis, max_degree: "int | None" = None
) -> StandardBasis:
    """Enumerate the staircase complement of a reduced basis by degree.

    The complement is closed under divisibility, so the first empty degree
    level ends the enumeration; if levels are still non-empty past the
    safety bound (default ``4 * nvars``) the quotient is not Artinian and
    :class:`NotArtinianError` is raised.
    """
    if not gb.reduced:
        raise NonReducedBasisError("standard_monomials requires a reduced basis")
    nv = gb.ring.nvars
    bound = 4 * nv if max_degree is None else max_degree
    lms = gb.leading_monomials()
    key = gb.order.key

    def is_standard(m: Monomial) -> bool:
        return not any(mono_divides(lm, m) for lm in lms)

    levels = []
    level = [m for m in [(0,) * nv] if is_standard(m)]
    degree = 0
    while level:
        levels.append(sorted(level, key=key))
        if degree >= bound:
            raise NotArtinianError(
                f"standard monomials still appear at degree {degree}; "
                f"bound {bound} exceeded"
            )
        nxt = set()
        for m in level:
            for i in range(nv):
                up = m[:i] + (m[i] + 1,) + m[i + 1 :]
                if up not in nxt and is_standard(up):
                    nxt.add(up)
        level = list(nxt)
        degree += 1
    return StandardBasis(levels)


def hilbert_series(basis: StandardBasis) -> list[int]:
    """Coefficient k counts the standard monomials of degree k."""
    return [len(level) for level in basis.by_degree]


class QuotientAlgebra:
    """R/I with a fixed monomial basis and cached multiplication data.

    All caches are write-once and idempotent, so instances are safe to share
    between threads.
    """

    def __init__(self, gb: GroebnerBasis, max_degree: "int | None" = None):
        self.gb = gb
        self.basis = standard_monomials(gb, max_degree)
        self._index = {m: i for i, m in enumerate(self.basis.monomials)}
        self._info = _reducer_info(gb.elements, gb.order) if gb.elements else []
        self._mult: dict[int, tuple] = {}
        self._socle: "tuple[int, bool] | None" = None
        self._traces: dict[tuple, list] = {}

    @property
    def ring(self):
        return self.gb.ring

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def is_graded(self) -> bool:
        return all(g.is_homogeneous() for g in self.gb.elements)

    def normal_form(self, f: Polynomial) -> Polynomial:
        nf, _ = _normal_form(f.terms, self._info, self.gb.order)
        return Polynomial(f.nvars, nf)

    def coords(self, f: Polynomial) -> list:
        """Coefficient vector of the normal form in the standard basis."""
        nf = self.normal_form(f)
        vec = [0] * self.dimension
        for m, c in nf.terms.items():
            vec[self._index[m]] = c
        return vec

    def mult_matrix(self, i: int) -> tuple:
        """Multiplication by the i-th variable; column j holds the
        coordinates of x_i * basis_j.  Rows of the returned tuple are
        immutable tuples."""
        cached = self._mult.get(i)
        if cached is not None:
            return cached
        n = self.dimension
        cols = []
        for m in self.basis.monomials:
            up = m[:i] + (m[i] + 1,) + m[i + 1 :]
            cols.append(self.coords(Polynomial.monomial(up)))
        matrix = tuple(tuple(cols[j][r] for j in range(n)) for r in range(n))
        self._mult[i] = matrix
        return matrix


def coords(f: Polynomial, quotient: QuotientAlgebra) -> list:
    return quotient.coords(f)


def mult_matrix(quotient: QuotientAlgebra, i: int) -> tuple:
    return quotient.mult_matrix(i)


def _graded_socle_dimension(q: QuotientAlgebra) -> int:
    """Per-degree kernels; the socle of a graded Artinian algebra is graded,
    and multiplication by a variable raises degree by one."""
    levels = q.basis.by_degree
    nv = q.ring.nvars
    total = 0
    for d, level in enumerate(levels):
        target = levels[d + 1] if d + 1 < len(levels) else ()
        target_index = {m: r for r, m in enumerate(target)}
        rows = [[0] * len(level) for _ in range(nv * len(target))]
        for j, m in enumerate(level):
            for i in range(nv):
                up = m[:i] + (m[i] + 1,) + m[i + 1 :]
                nf = q.normal_form(Polynomial.monomial(up))
                for mono, c in nf.terms.items():
                    rows[i * len(target) + target_index[mono]][j] = c
        total += len(linalg.kernel_basis(rows, len(level)))
    return total


def socle_dimension(q: QuotientAlgebra) -> tuple[int, bool]:
    """Dimension of the annihilator of (x_1, ..., x_n) in R/I, plus the
    Gorenstein verdict (socle dimension one)."""
    if q._socle is not None:
        return q._socle
    if q.is_graded():
        dim = _graded_socle_dimension(q)
    else:
        # intersect the kernels of the multiplication matrices iteratively
        n = q.dimension
        current = [[1 if r == s else 0 for r in range(n)] for s in range(n)]
        for i in range(q.ring.nvars):
            if not current:
                break
            m = q.mult_matrix(i)
            rows = [
                [sum(m[r][k] * v[k] for k in range(n) if v[k]) for v in current]
                for r in range(n)
            ]
            combos = linalg.kernel_basis(rows, len(current))
            current = [
                [
                    sum(cmb[s] * current[s][r] for s in range(len(current)))
                    for r in range(n)
                ]
                for cmb in combos
            ]
        dim = len(current)
    q._socle = (dim, dim == 1)
    return q._socle


def _perm_image(perm, nvars: int) -> tuple[int, ...]:
    image = tuple(getattr(perm, "image", perm))
    if sorted(image) != list(range(nvars)):
        raise ValueError(f"not a permutation of {nvars} letters: {image}")
    return image


def equivariant_graded_trace(q: QuotientAlgebra, perm) -> list:
    """Trace, degree by degree, of the linear map induced on R/I by
    permuting the variables.

    The permutation must leave the defining ideal invariant (checked by
    reducing the image of every basis element); permuting variables
    preserves degree, so the map is block diagonal over the degree levels.
    """
    image = _perm_image(perm, q.ring.nvars)
    cached = q._traces.get(image)
    if cached is not None:
        return list(cached)

    def act(m: Monomial) -> Monomial:
        out = [0] * len(m)
        for i, e in enumerate(m):
            out[image[i]] = e
        return tuple(out)

    for g in q.gb.elements:
        moved = Polynomial(g.nvars, {act(m): c for m, c in g.terms.items()})
        if q.normal_form(moved):
            raise EquivarianceError(
                "defining ideal is not invariant under the permutation"
            )
    traces = []
    for level in q.basis.by_degree:
        t = 0
        for m in level:
            nf = q.normal_form(Polynomial.monomial(act(m)))
            t += nf.terms.get(m, 0)
        traces.append(t)
    q._traces[image] = tuple(traces)
    return traces


# ---------------------------------------------------------------------------
# Macaulay inverse systems

def contract(f: Polynomial, g: Polynomial) -> Polynomial:
    """Apolarity contraction: x^a acts on y^b giving y^(b-a) when b >= a
    componentwise and zero otherwise, extended bilinearly."""
    if f.nvars != g.nvars:
        raise AmbientMismatchError(
            "contraction needs matching primal and dual variable counts"
        )
    out: dict[Monomial, object] = {}
    for a, ca in f.terms.items():
        for b, cb in g.terms.items():
            if mono_divides(a, b):
                m = tuple(x - y for x, y in zip(b, a))
                s = out.get(m, 0) + ca * cb
                if s:
                    out[m] = s
                else:
                    del out[m]
    return Polynomial(f.nvars, out)


def annihilator(
    g: Polynomial,
    n: "int | None" = None,
    pair_cap: "int | None" = None,
    check_cutoff: bool = False,
) -> Ideal:
    """The apolar ideal Ann(g) of a nonzero homogeneous dual polynomial.

    For each degree d from 1 to deg(g)+1 the kernel of the catalecticant map
    (degree-d forms f -> f contracted into g) is computed by exact
    nullspace; degrees beyond deg(g) consist of all monomials, so deg(g)+1
    suffices to generate.  Kernel elements already in the ideal generated so
    far are dropped, which leaves a small generating set of the same ideal.
    With ``check_cutoff`` the run asserts that degree deg(g)+2 contributes
    nothing new.
    """
    if not g:
        raise ValueError("annihilator of the zero polynomial")
    if not g.is_homogeneous():
        raise ValueError("annihilator requires a homogeneous dual polynomial")
    nv = g.nvars if n is None else n
    if nv != g.nvars:
        raise ValueError("variable count does not match the dual polynomial")
    ring = xring(nv)
    deg = g.total_degree()
    gens: list[Polynomial] = []
    gb = None

    def admit(p: Polynomial):
        nonlocal gb
        if gb is not None and ideal_member(p, gb):
            return
        gens.append(p)
        gb = buchberger(Ideal(ring, tuple(gens)), GREVLEX, pair_cap)

    for d in range(1, deg + 2):
        cols = monomials_of_degree(nv, d)
        if d > deg:
            for m in cols:
                admit(Polynomial.monomial(m))
            continue
        targets = monomials_of_degree(nv, deg - d)
        rows = [
            [g.terms.get(tuple(t + a for t, a in zip(tm, cm)), 0) for cm in cols]
            for tm in targets
        ]
        for vec in linalg.kernel_basis(rows, len(cols)):
            admit(Polynomial(nv, {m: c for m, c in zip(cols, vec) if c}))
    if check_cutoff:
        for m in monomials_of_degree(nv, deg + 2):
            if not ideal_member(Polynomial.monomial(m), gb):
                raise AssertionError(
                    "annihilator generation degree bound deg(g)+1 failed"
                )
    return Ideal(ring, tuple(gens), homogeneous=True)
