"""Finite-dimensional local algebra calculus: embedding dimension, tensor
squares L (x)_K L of height-one extensions, and root adjunctions
R[T]/(T^(p^r) - f^p).

Algebras are presented by structure constants over a base field together with
designated generators of the maximal ideal; computing the radical from scratch
in characteristic p is deliberately avoided.
"""

import random
from dataclasses import dataclass
from itertools import product

from .fieldarith import (
    FunctionField,
    Matrix,
    NotAPthPowerCheckError,
    PrimeField,
    extension_tower,
    row_space_basis,
)
from .frobenius import is_pth_power

DIMENSION_CAP = 512
ASSOC_FULL_CAP = 48
ASSOC_SAMPLE = 4000


class ArtinError(ValueError):
    pass


class NotLocalError(ArtinError):
    """The designated ideal is not a nilpotent maximal ideal with field quotient."""


class InvalidPresentationError(ArtinError):
    """The p-th powers presenting the extension are p-dependent."""


class DimensionOverflowError(ArtinError):
    """A constructed algebra would exceed the configured dimension cap."""


class ResidueFieldError(ArtinError):
    """The residue field is outside the class this module can certify or factor in."""


@dataclass(frozen=True)
class EdimReport:
    dim_total: int
    residue_dim: int
    edim: int
    dim_m: int
    dim_m_sq: int


class FiniteLocalAlgebra:
    """A commutative algebra over a field, given by structure constants.

    Basis element 0 is the multiplicative identity.  ``table[i][j]`` maps basis
    indices to coefficients of e_i * e_j.  ``maxideal_gens`` are vectors (lists
    of field elements) generating the designated maximal ideal.
    """

    def __init__(self, field, dim, table, maxideal_gens, check=True):
        self.field = field
        self.dim = dim
        self.table = table
        self.maxideal_gens = [list(g) for g in maxideal_gens]
        if check:
            self._check_identity()
            self._check_commutative()
            self._check_associative()
        self.m_basis = self._ideal_basis(self.maxideal_gens)
        self.residue_dim = self.dim - len(self.m_basis)
        if check:
            self._check_nilpotent()
            self._residue = ResidueData(self)
            self._residue.certify_field()
        else:
            self._residue = ResidueData(self)

    # -- element helpers ----------------------------------------------------

    def zero_vec(self):
        return [self.field.zero()] * self.dim

    def basis_vec(self, i):
        v = self.zero_vec()
        v[i] = self.field.one()
        return v

    def one_vec(self):
        return self.basis_vec(0)

    def from_table_entry(self, entry):
        v = self.zero_vec()
        for m, c in entry.items():
            v[m] = v[m] + c
        return v

    def mul_vec(self, a, b):
        out = self.zero_vec()
        for i, ai in enumerate(a):
            if not ai:
                continue
            row = self.table[i]
            for j, bj in enumerate(b):
                if not bj:
                    continue
                scale = ai * bj
                for m, c in row[j].items():
                    out[m] = out[m] + scale * c
        return out

    def pow_vec(self, a, n):
        result = self.one_vec()
        base = a
        while n > 0:
            if n & 1:
                result = self.mul_vec(result, base)
            base = self.mul_vec(base, base)
            n >>= 1
        return result

    def scalar_vec(self, c):
        v = self.zero_vec()
        v[0] = c
        return v

    # -- construction invariants ----------------------------------------------------

    def _check_identity(self):
        one = self.field.one()
        for j in range(self.dim):
            entry = self.table[0][j]
            if {m: c for m, c in entry.items() if c} != {j: one}:
                raise ArtinError("basis element 0 is not the identity")

    def _check_commutative(self):
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                a = {m: c for m, c in self.table[i][j].items() if c}
                b = {m: c for m, c in self.table[j][i].items() if c}
                if a != b:
                    raise ArtinError("multiplication table is not commutative")

    def _assoc_triple_ok(self, i, j, k):
        left = self.mul_vec(self.from_table_entry(self.table[i][j]), self.basis_vec(k))
        right = self.mul_vec(self.basis_vec(i), self.from_table_entry(self.table[j][k]))
        return all(x == y for x, y in zip(left, right))

    def _check_associative(self):
        n = self.dim
        if n <= ASSOC_FULL_CAP:
            triples = product(range(n), repeat=3)
        else:
            # full O(n^3) is too slow here; deterministic sample instead
            rng = random.Random(887 * n)
            triples = ((rng.randrange(n), rng.randrange(n), rng.randrange(n))
                       for _ in range(ASSOC_SAMPLE))
        for i, j, k in triples:
            if not self._assoc_triple_ok(i, j, k):
                raise ArtinError("multiplication table is not associative at (%d,%d,%d)" % (i, j, k))

    def _ideal_basis(self, gens):
        products = []
        for g in gens:
            for j in range(self.dim):
                products.append(self.mul_vec(g, self.basis_vec(j)))
        return row_space_basis(self.field, products)

    def _check_nilpotent(self):
        current = self.m_basis
        while current:
            nxt = row_space_basis(
                self.field,
                [self.mul_vec(a, b) for a in current for b in self.m_basis],
            )
            if len(nxt) >= len(current):
                raise NotLocalError("designated ideal is not nilpotent")
            current = nxt

    def ideal_power_basis(self, k):
        """Basis of m^k as a subspace (m^0 = A)."""
        if k == 0:
            return [self.basis_vec(i) for i in range(self.dim)]
        current = self.m_basis
        for _ in range(k - 1):
            if not current:
                return []
            current = row_space_basis(
                self.field,
                [self.mul_vec(a, b) for a in current for b in self.m_basis],
            )
        return current

    def __repr__(self):
        return "FiniteLocalAlgebra(dim=%d over %r)" % (self.dim, self.field)


class ResidueData:
    """The quotient A/m with a linear section, multiplication, and p-th roots."""

    def __init__(self, algebra):
        self.algebra = algebra
        field = algebra.field
        m_rows = [list(v) for v in algebra.m_basis]
        if m_rows:
            reduced, _, pivots = Matrix(field, m_rows)._echelon()
            self.m_rref = [reduced[i] for i in range(len(pivots))]
            self.pivots = pivots
        else:
            self.m_rref = []
            self.pivots = []
        pivot_set = set(self.pivots)
        self.free_cols = [c for c in range(algebra.dim) if c not in pivot_set]
        self.q = len(self.free_cols)
        self.one = self.project(algebra.one_vec())

    def reduce_mod_m(self, vec):
        v = list(vec)
        for row, pc in zip(self.m_rref, self.pivots):
            if v[pc]:
                factor = v[pc]
                v = [a - factor * b for a, b in zip(v, row)]
        return v

    def project(self, vec):
        v = self.reduce_mod_m(vec)
        return tuple(v[c] for c in self.free_cols)

    def section(self, coords):
        v = self.algebra.zero_vec()
        for c, x in zip(self.free_cols, coords):
            v[c] = x
        return v

    def mul(self, qa, qb):
        return self.project(self.algebra.mul_vec(self.section(qa), self.section(qb)))

    def pow(self, qa, n):
        result = self.one
        base = qa
        while n > 0:
            if n & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            n >>= 1
        return result

    def as_base_scalar(self, qv):
        """For one-dimensional residue fields, the value under A/m = k."""
        if self.q != 1:
            raise ResidueFieldError("residue field has dimension %d > 1" % self.q)
        return qv[0] / self.one[0]

    def pth_root(self, qv):
        """A p-th root inside A/m, or None if there is none."""
        field = self.algebra.field
        p = field.characteristic
        if self.q == 1:
            val = self.as_base_scalar(qv)
            root = field.pth_root(val)
            if root is None:
                return None
            return tuple(x * root for x in self.one)
        if isinstance(field, PrimeField):
            # finite field F_(p^q): Frobenius is bijective with inverse x -> x^(p^(q-1))
            cand = self.pow(qv, p ** (self.q - 1))
            if self.pow(cand, p) == tuple(qv):
                return cand
            return None
        raise ResidueFieldError(
            "p-th roots in a %d-dimensional residue field over %r are not supported"
            % (self.q, field))

    def minpoly(self, qv):
        """Monic minimal polynomial of qv over the base field, as a coefficient list."""
        field = self.algebra.field
        powers = [self.one]
        current = self.one
        while True:
            span = [list(v) for v in powers]
            m = Matrix(field, [[span[j][i] for j in range(len(span))] for i in range(self.q)])
            current = self.mul(current, qv)
            sol = m.solve(list(current))
            if sol is not None:
                # current = sum sol_j * qv^j, so minpoly = T^k - sum sol_j T^j
                return [-c for c in sol] + [field.one()]
            powers.append(current)

    def certify_field(self):
        """Raise NotLocalError unless A/m can be certified to be a field."""
        if not any(self.one):
            raise NotLocalError("the identity lies in the designated ideal")
        if self.q == 1:
            return
        field = self.algebra.field
        for c in range(self.q):
            theta = tuple(field.one() if i == c else field.zero() for i in range(self.q))
            poly = self.minpoly(theta)
            if len(poly) - 1 == self.q:
                if _is_irreducible(field, poly):
                    return
                raise NotLocalError("residue ring is not a field (reducible minimal polynomial)")
        raise NotLocalError("cannot certify the residue ring is a field "
                            "(no single basis generator found)")


def _is_irreducible(field, coeffs):
    """Irreducibility of a monic univariate polynomial over the base field."""
    if isinstance(field, PrimeField):
        return _is_irreducible_mod_p([c.val for c in coeffs], field.p)
    if isinstance(field, FunctionField):
        p = field.p
        deg = len(coeffs) - 1
        e = 0
        while p ** (e + 1) <= deg:
            e += 1
        # only the shape T^(p^e) - c arises here; irreducible iff c is not a p-th power
        if deg == p ** e and e >= 1 and all(not c for c in coeffs[1:-1]):
            return not is_pth_power(-coeffs[0])
        raise ResidueFieldError("cannot decide irreducibility of %r over %r" % (coeffs, field))
    raise ResidueFieldError("cannot decide irreducibility over %r" % (field,))


def _poly_mod(num, den, p):
    num = list(num)
    while len(num) >= len(den):
        if num[-1] % p:
            factor = num[-1] * pow(den[-1], p - 2, p)
            shift = len(num) - len(den)
            for i, c in enumerate(den):
                num[shift + i] = (num[shift + i] - factor * c) % p
        num.pop()
    return num


def _is_irreducible_mod_p(coeffs, p):
    deg = len(coeffs) - 1
    if deg <= 1:
        return deg == 1
    for d in range(1, deg // 2 + 1):
        for tail in product(range(p), repeat=d):
            den = list(tail) + [1]
            if all(c % p == 0 for c in _poly_mod(coeffs, den, p)):
                return False
    return True


# -- the three operations ------------------------------------------------------


def edim(algebra):
    """Embedding dimension: dim of m/m^2 over the residue field A/m."""
    dim_m = len(algebra.m_basis)
    m_sq = algebra.ideal_power_basis(2)
    dim_m_sq = len(m_sq)
    q = algebra.residue_dim
    diff = dim_m - dim_m_sq
    if diff % q:
        raise ArtinError("dim m/m^2 = %d is not a multiple of the residue degree %d" % (diff, q))
    return EdimReport(
        dim_total=algebra.dim,
        residue_dim=q,
        edim=diff // q,
        dim_m=dim_m,
        dim_m_sq=dim_m_sq,
    )


def tensor_self(field, pth_powers, check=True):
    """L (x)_K L for L = K(b_1^(1/p), ..., b_m^(1/p)), as an L-algebra.

    In the basis of monomials in the nilpotents U_i - a_i (exponents < p), the
    structure constants are 0/1: each nilpotent has vanishing p-th power.
    """
    pth_powers = list(pth_powers)
    m = len(pth_powers)
    p = field.p
    try:
        tower = extension_tower(field, pth_powers)
    except NotAPthPowerCheckError as exc:
        raise InvalidPresentationError(str(exc)) from exc
    exponents = sorted(product(range(p), repeat=m))
    index = {e: i for i, e in enumerate(exponents)}
    one = tower.one() if m else field.one()
    coeff_field = tower if m else field
    dim = p ** m
    table = []
    for a in exponents:
        row = []
        for b in exponents:
            total = tuple(x + y for x, y in zip(a, b))
            if all(x < p for x in total):
                row.append({index[total]: one})
            else:
                row.append({})
        table.append(row)
    gens = []
    for i in range(m):
        e = tuple(1 if j == i else 0 for j in range(m))
        v = [coeff_field.zero()] * dim
        v[index[e]] = one
        gens.append(v)
    return FiniteLocalAlgebra(coeff_field, dim, table, gens, check=check)


def adjoin_root(algebra, f, r, check=True, dimension_cap=DIMENSION_CAP):
    """A = R[T]/(T^(p^r) - f^p), with maximal ideal lifted from R plus one new generator.

    The new generator is h = T^(p^(r-s)) - c where c^(p^s) = (residue of f)^p
    with s maximal; the quotient A/(m_R, h) is then a field.
    """
    if r < 1:
        raise ArtinError("r must be >= 1")
    field = algebra.field
    p = field.characteristic
    n_r = algebra.dim
    q = p ** r
    dim = q * n_r
    if dim > dimension_cap:
        raise DimensionOverflowError("dim %d exceeds cap %d" % (dim, dimension_cap))

    fp = algebra.pow_vec(f, p)

    def idx(i, j):
        return j * n_r + i

    table = [[None] * dim for _ in range(dim)]
    pair_products = {}
    for i in range(n_r):
        for k in range(i, n_r):
            pair_products[(i, k)] = algebra.from_table_entry(algebra.table[i][k])
    for i in range(n_r):
        for k in range(n_r):
            prod_vec = pair_products[(min(i, k), max(i, k))]
            reduced = None
            for j in range(q):
                for l in range(q):
                    e = j + l
                    if e < q:
                        entry = {idx(m, e): c for m, c in enumerate(prod_vec) if c}
                    else:
                        if reduced is None:
                            reduced = algebra.mul_vec(prod_vec, fp)
                        entry = {idx(m, e - q): c for m, c in enumerate(reduced) if c}
                    table[idx(i, j)][idx(k, l)] = entry

    residue = algebra._residue
    fbar = residue.project(f)
    s = 1
    y = fbar
    while s < r:
        root = residue.pth_root(y)
        if root is None:
            break
        y = root
        s += 1
    lift_y = residue.section(y)

    gens = []
    for g in algebra.maxideal_gens:
        v = [field.zero()] * dim
        for i, c in enumerate(g):
            v[idx(i, 0)] = c
        gens.append(v)
    h = [field.zero()] * dim
    h[idx(0, p ** (r - s))] = field.one()
    for i, c in enumerate(lift_y):
        h[idx(i, 0)] = h[idx(i, 0)] - c
    gens.append(h)

    return FiniteLocalAlgebra(field, dim, table, gens, check=check)


def geometric_edim_formula(pdeg, trdeg):
    """The difference p-degree minus transcendence degree of a field extension."""
    if trdeg < 0 or pdeg < trdeg:
        raise ArtinError("need pdeg >= trdeg >= 0, got (%r, %r)" % (pdeg, trdeg))
    return pdeg - trdeg


# -- convenience constructors used by tests and the CLI -------------------------


def base_field_algebra(field):
    """The algebra A = k itself (zero maximal ideal)."""
    return FiniteLocalAlgebra(field, 1, [[{0: field.one()}]], [])


def truncated_polynomial_algebra(field, exponents):
    """k[u_1,...,u_r]/(u_1^(a_1),...,u_r^(a_r)) with its monomial basis."""
    exponents = list(exponents)
    monos = sorted(product(*[range(a) for a in exponents]))
    index = {e: i for i, e in enumerate(monos)}
    one = field.one()
    dim = len(monos)
    table = []
    for a in monos:
        row = []
        for b in monos:
            total = tuple(x + y for x, y in zip(a, b))
            if all(x < bound for x, bound in zip(total, exponents)):
                row.append({index[total]: one})
            else:
                row.append({})
        table.append(row)
    gens = []
    for i, bound in enumerate(exponents):
        if bound >= 2:
            e = tuple(1 if j == i else 0 for j in range(len(exponents)))
            v = [field.zero()] * dim
            v[index[e]] = one
            gens.append(v)
    return FiniteLocalAlgebra(field, dim, table, gens)
