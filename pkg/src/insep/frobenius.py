"""Frobenius-coordinate decomposition over K = F_p(t_1,...,t_n) and the exact
linear algebra over K that it turns p-th-power questions into.

Every f in K can be written uniquely as f = sum_e g_e^p t^e over the monomial
exponents e in {0,...,p-1}^n; coefficients of K^p-linear relations then fall
out of ordinary K-linear systems on the g_e.
"""

from dataclasses import dataclass
from itertools import permutations, product

from .fieldarith import Matrix, MultiPoly, RatFunc

PSPAN_BASIS_CAP = 4


class NotAPthPowerError(ValueError):
    """Raised when asked for a p-th root of something that has none."""


@dataclass(frozen=True)
class FrobeniusCoordinates:
    """The decomposition f = sum_e g_e^p t^e; zero coordinates are omitted."""

    element: RatFunc
    coords: dict

    def reassemble(self):
        field = self.element.field()
        total = field.zero()
        for e, g in self.coords.items():
            mono = RatFunc(MultiPoly(field.p, field.vars, {e: 1}), reduce=False)
            total = total + (g ** field.p) * mono
        return total


@dataclass(frozen=True)
class PBasisResult:
    """A greedy p-basis for K^p(generators) inside K; d is its size."""

    examined: tuple
    selected: tuple
    d: int


_DECOMP_CACHE = {}
_DECOMP_CACHE_MAX = 20_000


def frobenius_decompose(f):
    """Write f = a/b as (a*b^(p-1))/b^p and split the numerator by exponents mod p."""
    hit = _DECOMP_CACHE.get(f)
    if hit is not None:
        return hit
    p = f.p
    n = len(f.vars)
    b = f.den
    numerator = f.num * (b ** (p - 1))
    roots = {}
    for expo, c in numerator.terms.items():
        e = tuple(x % p for x in expo)
        q = tuple((x - r) // p for x, r in zip(expo, e))
        bucket = roots.setdefault(e, {})
        bucket[q] = c  # distinct expo give distinct (e, q), no accumulation needed
    coords = {}
    for e in sorted(roots):
        # coefficient p-th roots in F_p are the identity map
        root_poly = MultiPoly(p, f.vars, roots[e])
        g = RatFunc(root_poly, b)
        if g:
            coords[e] = g
    assert len(coords) <= p ** n
    result = FrobeniusCoordinates(element=f, coords=coords)
    if len(_DECOMP_CACHE) >= _DECOMP_CACHE_MAX:
        _DECOMP_CACHE.clear()
    _DECOMP_CACHE[f] = result
    return result


def is_pth_power(f):
    """True iff only the e = 0 Frobenius coordinate of f is nonzero (or f = 0)."""
    coords = frobenius_decompose(f).coords
    zero_e = (0,) * len(f.vars)
    return set(coords) <= {zero_e}


def pth_root(f):
    """The unique g with g^p = f; raises NotAPthPowerError otherwise."""
    coords = frobenius_decompose(f).coords
    zero_e = (0,) * len(f.vars)
    if not coords:
        return f.field().zero()
    if set(coords) != {zero_e}:
        raise NotAPthPowerError("%r is not a p-th power" % (f,))
    return coords[zero_e]


def _coordinate_matrix(elems, field):
    """Rows of Frobenius coordinates over the union of appearing exponents."""
    decomps = [frobenius_decompose(f).coords for f in elems]
    keys = sorted(set().union(*decomps)) if decomps else []
    zero = field.zero()
    rows = [[d.get(e, zero) for e in keys] for d in decomps]
    return rows, keys


def p_linear_independent(elems):
    """No nontrivial K^p-linear relation among the elements (empty list: True).

    A relation sum_i d_i^p f_i = 0 holds iff sum_i d_i g_{i,e} = 0 for every
    exponent e, so independence is a rank computation over K.
    """
    elems = list(elems)
    if not elems:
        return True
    field = elems[0].field()
    rows, _ = _coordinate_matrix(elems, field)
    if not rows[0]:
        return False  # all elements are zero
    return Matrix(field, rows).rank() == len(elems)


def p_linear_relation(elems):
    """A vector (d_i) with sum d_i^p f_i = 0, or None if the family is independent."""
    elems = list(elems)
    if not elems:
        return None
    field = elems[0].field()
    rows, _ = _coordinate_matrix(elems, field)
    if not rows[0]:
        one = field.one()
        return [one] + [field.zero()] * (len(elems) - 1)
    kernel = Matrix(field, rows).transpose().kernel_basis()
    if not kernel:
        return None
    return kernel[0]


_PSPAN_CACHE = {}
_PSPAN_CACHE_MAX = 20_000


def membership_in_pspan(mu, basis):
    """Solve mu = sum_a d_a^p * prod_j basis_j^(a_j) over a in {0..p-1}^len(basis).

    Returns {exponent tuple: d_a} with zero coefficients omitted, or None when
    mu does not lie in K^p(basis).
    """
    key = (mu, tuple(basis))
    if key in _PSPAN_CACHE:
        return _PSPAN_CACHE[key]
    result = _membership_in_pspan(mu, list(basis))
    if len(_PSPAN_CACHE) >= _PSPAN_CACHE_MAX:
        _PSPAN_CACHE.clear()
    _PSPAN_CACHE[key] = result
    return result


def _membership_in_pspan(mu, basis):
    if len(basis) > PSPAN_BASIS_CAP:
        raise ValueError("p-span membership supports at most %d generators" % PSPAN_BASIS_CAP)
    field = mu.field()
    p = field.p
    exponents = sorted(product(range(p), repeat=len(basis)))
    monomials = []
    for a in exponents:
        m = field.one()
        for g, e in zip(basis, a):
            m = m * (g ** e)
        monomials.append(m)
    rows, keys = _coordinate_matrix(monomials + [mu], field)
    target = rows[-1]
    columns = rows[:-1]
    if not keys:
        # everything in sight is zero
        return {} if mu.is_zero() else None
    m = Matrix(field, [[columns[j][i] for j in range(len(monomials))] for i in range(len(keys))])
    sol = m.solve(target)
    if sol is None:
        return None
    return {a: c for a, c in zip(exponents, sol) if c}


def pspan_combination_value(combo, basis, field):
    """Evaluate sum_a d_a^p * prod basis^a for a membership witness."""
    total = field.zero()
    p = field.p
    for a, d in combo.items():
        term = d ** p
        for g, e in zip(basis, a):
            term = term * (g ** e)
        total = total + term
    return total


def pdegree_generated(gens):
    """Greedy p-basis of K^p(gens): keep each generator not spanned by the kept ones."""
    examined = tuple(gens)
    selected = []
    for mu in examined:
        if membership_in_pspan(mu, selected) is None:
            selected.append(mu)
    return PBasisResult(examined=examined, selected=tuple(selected), d=len(selected))


def pdegree_all_orders(gens):
    """The set of d values over every scan order (a field invariant, so size 1)."""
    return {pdegree_generated(list(perm)).d for perm in permutations(gens)}


def imperfection_degree(field):
    """The p-degree of K over K^p; for F_p(t_1,...,t_n) this is n."""
    return field.imperfection_degree()
