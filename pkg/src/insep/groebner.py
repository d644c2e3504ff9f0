"""Buchberger's algorithm over K[U_0,...,U_n] with K a rational function field,
plus Krull-dimension computation from the leading-term ideal.

This is the independent verification oracle for singular-locus codimensions:
it must either answer correctly or fail loudly on a resource cap, never guess.
"""

from dataclasses import dataclass
from itertools import combinations

from .upoly import GREVLEX, UPoly, mono_div, mono_divides, mono_lcm, mono_mul, order_key

MAX_PAIRS = 10_000
MAX_MONOMIALS = 1_000_000


class ResourceLimitError(RuntimeError):
    """A configured pair or monomial cap was exceeded."""


@dataclass(frozen=True)
class GroebnerBasis:
    generators: tuple
    order: str
    reduced: bool

    def leading_monomials(self):
        return [g.leading_monomial(self.order) for g in self.generators]


@dataclass(frozen=True)
class DimensionReport:
    affine_dim: int
    projective_dim: object  # int, or None for an empty projective locus

    def codim_in_hypersurface(self, n):
        """Codimension inside a hypersurface of dimension n-1 in P^n."""
        if self.projective_dim is None:
            return None
        return (n - 1) - self.projective_dim


def normal_form(f, basis, order, counter=None, reducer_offset=0):
    """Full remainder of f under division by basis; deterministic reducer choice.

    ``reducer_offset`` rotates the reducer preference, used by the confluence
    property test; any admissible choice gives the same result against a
    Groebner basis.
    """
    lead = [(g.leading_monomial(order), g.leading_coeff(order), g) for g in basis if g]
    remainder = UPoly.zero(f.field, f.nvars)
    work = f
    while work:
        e = work.leading_monomial(order)
        c = work.terms[e]
        if counter is not None:
            counter[0] += len(work.terms)
            if counter[0] > MAX_MONOMIALS:
                raise ResourceLimitError("monomial budget exceeded during reduction")
        hit = None
        m = len(lead)
        for i in range(m):
            lm, lc, g = lead[(i + reducer_offset) % m]
            if mono_divides(lm, e):
                hit = (lm, lc, g)
                break
        if hit is None:
            remainder = remainder + UPoly(f.field, f.nvars, {e: c})
            work = work - UPoly(f.field, f.nvars, {e: c})
        else:
            lm, lc, g = hit
            work = work - g.mul_term(c / lc, mono_div(e, lm))
    return remainder


def s_polynomial(f, g, order):
    lf = f.leading_monomial(order)
    lg = g.leading_monomial(order)
    lcm = mono_lcm(lf, lg)
    return (f.mul_term(f.field.one() / f.leading_coeff(order), mono_div(lcm, lf))
            - g.mul_term(g.field.one() / g.leading_coeff(order), mono_div(lcm, lg)))


def buchberger(gens, order=GREVLEX, verify=True):
    """A reduced Groebner basis of the ideal generated by the nonzero inputs."""
    gens = [g for g in gens if g]
    if not gens:
        raise ValueError("need at least one nonzero generator")
    field = gens[0].field
    nvars = gens[0].nvars
    basis = [g.monic(order) for g in gens]
    key = order_key(order)

    pairs = {(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))}
    counter = [0]
    processed = 0
    while pairs:
        # normal strategy: minimal lcm in the order, ties broken on indices
        def pair_key(p):
            lcm = mono_lcm(basis[p[0]].leading_monomial(order), basis[p[1]].leading_monomial(order))
            return (key(lcm), p)

        i, j = min(pairs, key=pair_key)
        pairs.discard((i, j))
        processed += 1
        if processed > MAX_PAIRS:
            raise ResourceLimitError("pair budget exceeded")
        li = basis[i].leading_monomial(order)
        lj = basis[j].leading_monomial(order)
        if mono_lcm(li, lj) == mono_mul(li, lj):
            continue  # coprime leading terms reduce to zero
        s = s_polynomial(basis[i], basis[j], order)
        rem = normal_form(s, basis, order, counter=counter)
        if rem:
            rem = rem.monic(order)
            basis.append(rem)
            new = len(basis) - 1
            pairs.update((k, new) for k in range(new))

    reduced = _interreduce(_minimalize(basis, order), order)
    gb = GroebnerBasis(generators=tuple(reduced), order=order, reduced=True)
    if verify:
        if not is_groebner_basis(gb):
            raise AssertionError("produced basis failed the S-polynomial check")
        for g in gens:
            if normal_form(g, list(gb.generators), order):
                raise AssertionError("input generator does not reduce to zero")
    return gb


def _minimalize(basis, order):
    key = order_key(order)
    out = []
    for g in sorted(basis, key=lambda h: key(h.leading_monomial(order))):
        lm = g.leading_monomial(order)
        if not any(mono_divides(h.leading_monomial(order), lm) for h in out):
            out.append(g)
    return out


def _interreduce(basis, order):
    out = []
    for i, g in enumerate(basis):
        others = basis[:i] + basis[i + 1:]
        r = normal_form(g, others, order)
        if r:
            out.append(r.monic(order))
    return out


def is_groebner_basis(gb):
    """Exhaustive check: every S-polynomial reduces to zero."""
    basis = list(gb.generators)
    for f, g in combinations(basis, 2):
        s = s_polynomial(f, g, gb.order)
        if normal_form(s, basis, gb.order):
            return False
    return True


def ideal_dimension(gb, nvars=None):
    """Affine and projective dimension from independent variable subsets.

    A subset S of the variables is independent modulo the leading-term ideal
    iff no leading monomial involves only variables from S; the affine Krull
    dimension is the maximal size of an independent subset.  ``nvars`` is only
    needed for the zero ideal (no generators).
    """
    leads = gb.leading_monomials()
    if gb.generators:
        nvars = gb.generators[0].nvars
    elif nvars is None:
        raise ValueError("the zero ideal needs an explicit variable count")
    supports = [frozenset(i for i, x in enumerate(e) if x) for e in leads]
    if any(not s for s in supports):
        # a unit leading term: the whole ring, empty locus
        return DimensionReport(affine_dim=-1, projective_dim=None)
    best = 0
    for size in range(nvars, 0, -1):
        for subset in combinations(range(nvars), size):
            sset = set(subset)
            if all(not supp <= sset for supp in supports):
                best = size
                break
        if best:
            break
    affine = best
    projective = affine - 1 if affine >= 1 else None
    return DimensionReport(affine_dim=affine, projective_dim=projective)


@dataclass(frozen=True)
class CodimCheck:
    predicted_d: int
    affine_dim: int
    oracle_codim: object  # int or None when the locus is empty
    match: bool


def verify_codim(hypersurface, order=GREVLEX):
    """Confirm the predicted singular codimension against the Groebner oracle.

    The singular locus of V_+(f) is cut out by f together with the coefficient
    partials df/dt_k; the predicted codimension is the invariant d (d = n means
    a regular scheme, i.e. an empty singular locus).
    """
    from .fermat import invariant_d, singular_ideal_partials

    d = invariant_d(hypersurface)
    gens = [g for g in singular_ideal_partials(hypersurface) if g]
    gb = buchberger(gens, order=order)
    report = ideal_dimension(gb)
    codim = report.codim_in_hypersurface(hypersurface.n)
    if d == hypersurface.n:
        match = report.projective_dim is None
    else:
        match = codim == d
    return CodimCheck(predicted_d=d, affine_dim=report.affine_dim,
                      oracle_codim=codim, match=match)
