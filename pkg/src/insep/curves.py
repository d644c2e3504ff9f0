"""Plane curves lambda*U_0^p + Q(lambda)*U_1^p + U_2^p = 0 with invariant d = 1.

Such a curve is the image of a projective line over L = K(lambda^(1/p)) under a
degree-one map; the interesting geometry is concentrated at one singular point,
where the curve and the line differ by the conductor Artin rings
O_A = L[u]/(u^(p-1)) and its K-subalgebra O_A0 of half dimension.
"""

from dataclasses import dataclass

from .fieldarith import (
    Matrix,
    RatFunc,
    SimpleExtensionField,
    TruncSeriesRing,
    in_span,
    row_space_basis,
)
from .fermat import PFermatHypersurface, invariant_d, singular_ideal
from .frobenius import is_pth_power, membership_in_pspan

CASE_P2 = "P2"
CASE_RESIDUE_L = "ResidueL"
CASE_RESIDUE_K = "ResidueK"


class WrongInvariantError(ValueError):
    """The coefficient triple does not have invariant d = 1."""


class UnsupportedPError(ValueError):
    """Conductor computations are limited to p <= 5."""


class TrivialExtensionError(ValueError):
    """The proposed p-th root already exists in K."""


class NotASubalgebraError(ValueError):
    """The provided span is not a unital K-subalgebra of O_A."""


# -- normal form ---------------------------------------------------------------


@dataclass(frozen=True)
class CurveNormalForm:
    field: object        # FunctionField K
    lam: RatFunc         # lambda, not a p-th power
    root_coeffs: tuple   # c_0..c_(p-1) with Q(lambda) = sum c_i^p lambda^i
    scale_unit: RatFunc  # the coefficient that was scaled to 1
    slot_to_index: tuple  # canonical slot (lam, Q, 1) -> index in the input triple

    @property
    def p(self):
        return self.field.p

    def q_of_lambda(self):
        total = self.field.zero()
        power = self.field.one()
        for c in self.root_coeffs:
            total = total + (c ** self.p) * power
            power = power * self.lam
        return total

    def q_derivative(self):
        """Q'(lambda) = sum i * c_i^p * lambda^(i-1)."""
        total = self.field.zero()
        power = self.field.one()
        for i, c in enumerate(self.root_coeffs):
            if i >= 1:
                total = total + self.field.from_int(i) * (c ** self.p) * power
                power = power * self.lam
        return total

    def curve(self):
        return PFermatHypersurface(
            field=self.field, n=2,
            coeffs=(self.lam, self.q_of_lambda(), self.field.one()))

    def reproduces(self, original_coeffs):
        """Original triple = unit * (canonical triple permuted); exactness check."""
        canonical = (self.lam, self.q_of_lambda(), self.field.one())
        for slot, index in enumerate(self.slot_to_index):
            if original_coeffs[index] != self.scale_unit * canonical[slot]:
                return False
        return True


def normal_form(field, lam0, lam1, lam2):
    """Scale and permute a d = 1 triple into lambda*U_0^p + Q(lambda)*U_1^p + U_2^p.

    The last nonzero coefficient is scaled to 1; among the other two ratios the
    first that is not a p-th power becomes lambda, and the remaining one is
    expressed over K^p(lambda).
    """
    coeffs = (lam0, lam1, lam2)
    X = PFermatHypersurface(field=field, n=2, coeffs=coeffs)
    d = invariant_d(X)
    if d != 1:
        raise WrongInvariantError("invariant d = %d, need 1" % d)
    r = max(i for i, c in enumerate(coeffs) if c)
    unit = coeffs[r]
    rest = [i for i in range(3) if i != r]
    ratios = {i: coeffs[i] / unit for i in rest}
    lam_index = next((i for i in rest if not is_pth_power(ratios[i])), None)
    if lam_index is None:
        raise AssertionError("d = 1 but every ratio is a p-th power")
    other_index = next(i for i in rest if i != lam_index)
    lam = ratios[lam_index]
    combo = membership_in_pspan(ratios[other_index], [lam])
    if combo is None:
        raise AssertionError("d = 1 but the second ratio is outside K^p(lambda)")
    root_coeffs = [field.zero()] * field.p
    for (i,), c in combo.items():
        root_coeffs[i] = c
    nf = CurveNormalForm(field=field, lam=lam, root_coeffs=tuple(root_coeffs),
                         scale_unit=unit, slot_to_index=(lam_index, other_index, r))
    if not nf.reproduces(coeffs):
        raise AssertionError("normal form failed to reproduce the input equation")
    return nf


# -- normalization ---------------------------------------------------------------


@dataclass(frozen=True)
class NormalizationMap:
    nf: CurveNormalForm
    line_field: SimpleExtensionField   # L = K(lambda^(1/p))
    q_root: object                      # element of L with q_root^p = Q(lambda)

    def images(self):
        """Pullbacks of U_0, U_1, U_2 as linear forms a*T_0 + b*T_1 over L."""
        L = self.line_field
        x = L.gen()
        return (
            (L.one(), L.zero()),
            (L.zero(), L.one()),
            (-x, -self.q_root),
        )


def _bivar_mul(a, b, zero):
    res = {}
    for (i1, j1), c1 in a.items():
        for (i2, j2), c2 in b.items():
            key = (i1 + i2, j1 + j2)
            res[key] = res.get(key, zero) + c1 * c2
    return {k: v for k, v in res.items() if v}


def _bivar_pow(a, n, one_elem, zero):
    result = {(0, 0): one_elem}
    base = dict(a)
    while n > 0:
        if n & 1:
            result = _bivar_mul(result, base, zero)
        base = _bivar_mul(base, base, zero)
        n >>= 1
    return result


def normalization(nf):
    """The map P^1_L -> X; the pulled-back equation is checked to vanish exactly."""
    field = nf.field
    p = nf.p
    L = SimpleExtensionField(field, nf.lam, gen_name="x")
    x = L.gen()
    q_root = L.zero()
    for i, c in enumerate(nf.root_coeffs):
        q_root = q_root + L.lift(c) * (x ** i)
    if q_root ** p != L.lift(nf.q_of_lambda()):
        raise AssertionError("q_root^p != Q(lambda)")

    # nu*(f) = lam*T0^p + Q*T1^p + (-x*T0 - q_root*T1)^p must vanish identically
    zero = L.zero()
    u2 = {(1, 0): -x, (0, 1): -q_root}
    total = _bivar_pow(u2, p, L.one(), zero)
    lamL = L.lift(nf.lam)
    qL = L.lift(nf.q_of_lambda())
    total[(p, 0)] = total.get((p, 0), zero) + lamL
    total[(0, p)] = total.get((0, p), zero) + qL
    if any(v for v in total.values()):
        raise AssertionError("pullback of the defining equation did not vanish")

    # degree one: the preimage of the U_0 = 0 section is V_+(T_0), of K-length p
    if L.dim_over_bottom() != p:
        raise AssertionError("[L:K] != p")
    return NormalizationMap(nf=nf, line_field=L, q_root=q_root)


def preimage_length_of_u0_section(nu):
    """K-length of the fiber over the U_0 = 0 section: dim_K L at the point (0:1)."""
    # the pullback of U_0 is exactly T_0, and V_+(T_0) = {(0:1)} has residue field L
    img = nu.images()[0]
    if img != (nu.line_field.one(), nu.line_field.zero()):
        raise AssertionError("pullback of U_0 is not T_0")
    return nu.line_field.dim_over_bottom()


# -- the singular point -------------------------------------------------------------


@dataclass(frozen=True)
class SingularPointData:
    point_on_line: tuple   # (-rho : 1) in P^1_L
    image_point: tuple     # coordinates of a_0 in P^2, as elements of L
    residue_degree: int    # 1 or p


def singular_point(nf):
    """The unique singular point: (-Q'(lambda)^(1/p) : 1) upstairs and its image."""
    nu = normalization(nf)
    L = nu.line_field
    x = L.gen()
    p = nf.p
    # rho = (d/dx) sum c_i x^i satisfies rho^p = Q'(lambda)
    rho = L.zero()
    for i, c in enumerate(nf.root_coeffs):
        if i >= 1:
            rho = rho + L.from_int(i) * L.lift(c) * (x ** (i - 1))
    if rho ** p != L.lift(nf.q_derivative()):
        raise AssertionError("rho^p != Q'(lambda)")
    a = (-rho, L.one())
    images = nu.images()
    image_point = tuple(c0 * a[0] + c1 * a[1] for c0, c1 in images)

    # the image must satisfy the equation and every singular-ideal generator
    X = nf.curve()
    for gen in singular_ideal(X):
        vec = gen.coefficient_vector(p)
        val = L.zero()
        for coeff, coord in zip(vec, image_point):
            val = val + L.lift(coeff) * (coord ** p)
        if val:
            raise AssertionError("image point misses a singular-ideal generator")

    # U_1 pulls back to T_1 = 1 at a, so the affine coordinates are the others
    affine = (image_point[0], image_point[2])
    degree = 1 if all(c.in_base() for c in affine) else p
    return SingularPointData(point_on_line=a, image_point=image_point, residue_degree=degree)


# -- conductor rings ---------------------------------------------------------------


class ConductorRing:
    """O_A = L[u]/(u^(p-1)) seen as a K-vector space of dimension p(p-1)."""

    def __init__(self, line_field):
        self.L = line_field
        self.K = line_field.base
        self.p = line_field.p
        self.order = self.p - 1
        self.series = TruncSeriesRing(line_field, self.order)
        self.dim_K = self.p * (self.p - 1)

    def flatten(self, series):
        vec = []
        for j in range(self.order):
            vec.extend(series.coeffs[j].coeffs)
        return vec

    def unflatten(self, vec):
        p = self.p
        coeffs = []
        for j in range(self.order):
            coeffs.append(self.L.from_coeffs(vec[j * p:(j + 1) * p]))
        return self.series.from_coeffs(coeffs)

    def mul(self, v, w):
        return self.flatten(self.unflatten(v) * self.unflatten(w))

    def one_vec(self):
        return self.flatten(self.series.one())

    def l_span(self):
        """Basis of the coefficient field L sitting in degree zero."""
        out = []
        for i in range(self.p):
            vec = [self.K.zero()] * self.dim_K
            vec[i] = self.K.one()
            out.append(vec)
        return out

    def u_level_span(self, k):
        """Basis of the subspace u^k * L."""
        out = []
        for i in range(self.p):
            vec = [self.K.zero()] * self.dim_K
            vec[k * self.p + i] = self.K.one()
            out.append(vec)
        return out

    def vanishing_order(self, vec):
        return self.unflatten(vec).order_of_vanishing()


@dataclass(frozen=True)
class ConductorProfile:
    ring: ConductorRing
    chart_index: int
    images: tuple            # series images of the two affine coordinates
    subalgebra_basis: tuple  # K-basis (flattened vectors) of O_A0
    dim_subalgebra: int
    case: str
    residue_degree: int
    witnesses: dict


def _subspace_intersection_dim(field, basis_a, basis_b):
    if not basis_a or not basis_b:
        return 0
    da = len(row_space_basis(field, [list(v) for v in basis_a]))
    db = len(row_space_basis(field, [list(v) for v in basis_b]))
    dsum = len(row_space_basis(field, [list(v) for v in basis_a] + [list(v) for v in basis_b]))
    return da + db - dsum


def conductor_profile(nf):
    """O_A, the K-subalgebra closure O_A0 of the curve's affine coordinates, and the case tag.

    Works in the affine chart U_i = 1 for the first coordinate of the singular
    point that is a unit, with local parameter u = T_0/T_1 + rho.
    """
    p = nf.p
    if p > 5:
        raise UnsupportedPError("conductor computations support p <= 5 only")
    nu = normalization(nf)
    L = nu.line_field
    sp = singular_point(nf)
    ring = ConductorRing(L)
    series = ring.series

    rho = -sp.point_on_line[0]
    # s = T0/T1 expands as u - rho in the local parameter u
    s_series = series.from_coeffs([-rho, L.one()] if ring.order > 1 else [-rho])
    x = L.gen()
    # U2/U1 pulls back to -x*s - q_root
    u2_over_u1 = -(series.constant(x) * s_series) - series.constant(nu.q_root)

    if sp.image_point[0]:
        chart = 0
        inv = s_series.inverse()
        images = (inv, u2_over_u1 * inv)            # U1/U0, U2/U0
    else:
        chart = 1
        images = (s_series, u2_over_u1)             # U0/U1, U2/U1

    # K-subalgebra closure of {1, images}: adjoin pairwise products until stable
    vectors = [ring.one_vec()] + [ring.flatten(im) for im in images]
    basis = row_space_basis(ring.K, vectors)
    while True:
        products = [ring.mul(a, b) for i, a in enumerate(basis) for b in basis[i:]]
        new_basis = row_space_basis(ring.K, [list(v) for v in basis] + products)
        if len(new_basis) == len(basis):
            basis = new_basis
            break
        basis = new_basis

    dim_sub = len(basis)
    if dim_sub != p * (p - 1) // 2:
        raise AssertionError("dim_K(O_A0) = %d, expected p(p-1)/2 = %d"
                             % (dim_sub, p * (p - 1) // 2))
    if _subspace_intersection_dim(ring.K, basis, ring.l_span()) != 1:
        raise AssertionError("O_A0 /\\ L is bigger than K")
    # conductor exactness guard: u^(p-2)*L does not land inside O_A0
    top = ring.u_level_span(ring.order - 1)
    if _subspace_intersection_dim(ring.K, basis, top) >= p:
        raise AssertionError("conductor would be larger than (u^(p-1))")

    witnesses = {}
    if p == 2:
        case = CASE_P2
    elif sp.residue_degree == 1:
        case = CASE_RESIDUE_K
        consts = [im.coeffs[0] for im in images]
        v = ring.flatten(images[0] - series.constant(consts[0]))
        w = ring.flatten(images[1] - series.constant(consts[1]))
        alpha = ring.unflatten(v).coeffs[1]
        beta = ring.unflatten(w).coeffs[1]
        m = Matrix(ring.K, [list(alpha.coeffs), list(beta.coeffs)])
        if m.rank() != 2:
            raise AssertionError("ResidueK witnesses are dependent mod m^2")
        witnesses = {"v": v, "w": w}
    else:
        case = CASE_RESIDUE_L
        idx = next(i for i, im in enumerate(images) if not im.coeffs[0].in_base())
        h = images[idx]
        mu = h.coeffs[0]
        f_part = h - series.constant(mu)
        if f_part.order_of_vanishing() != 1:
            raise AssertionError("ResidueL witness f does not lie in m \\ m^2")
        witnesses = {"mu": mu, "f": ring.flatten(f_part)}
        if p >= 5:
            # basis is in echelon form, so order-2 members of the span show up as rows
            g_vec = next((list(v) for v in basis if ring.vanishing_order(v) == 2), None)
            if g_vec is None:
                raise AssertionError("no ResidueL witness g in m^2 \\ m^3")
            witnesses["g"] = g_vec
        # at p = 3 the condition g in m^2 \ m^3 is vacuous: m^2 = 0 in L[u]/(u^2)

    return ConductorProfile(ring=ring, chart_index=chart, images=images,
                            subalgebra_basis=tuple(tuple(v) for v in basis),
                            dim_subalgebra=dim_sub, case=case,
                            residue_degree=sp.residue_degree, witnesses=witnesses)


# -- base change, glueing cohomology, multiple-curve arithmetic ----------------------


def remains_integral(nf, b):
    """True iff the curve stays integral after adjoining b^(1/p) to K.

    Equivalent to b not becoming a p-th power in the curve's function field,
    which for the normalized curve means b outside K^p(lambda).
    """
    if is_pth_power(b):
        raise TrivialExtensionError("%r is already a p-th power in K" % (b,))
    return membership_in_pspan(b, [nf.lam]) is None


@dataclass(frozen=True)
class GlueingCohomology:
    h0: int
    h1: int
    admissible: bool


def glueing_cohomology(ring, subalg_basis):
    """h^0 and h^1 of the curve glued from P^1_L along subalg inside O_A.

    Exactness of 0 -> H^0 -> subalg (+) L -> O_A -> H^1 -> 0 reduces both
    numbers to subspace dimension counts over K.
    """
    basis = [list(v) for v in subalg_basis]
    span = row_space_basis(ring.K, basis)
    if len(span) != len(basis):
        basis = [list(v) for v in span]
    if not in_span(ring.K, basis, ring.one_vec()):
        raise NotASubalgebraError("1 is not in the span")
    for i, a in enumerate(basis):
        for b in basis[i:]:
            if not in_span(ring.K, basis, ring.mul(a, b)):
                raise NotASubalgebraError("span is not closed under multiplication")
    h0 = _subspace_intersection_dim(ring.K, basis, ring.l_span())
    h1 = ring.dim_K - len(basis) - ring.p + h0
    p = ring.p
    admissible = h0 == 1 and len(basis) == p * (p - 1) // 2
    return GlueingCohomology(h0=h0, h1=h1, admissible=admissible)


@dataclass(frozen=True)
class MultipleCurveProfile:
    multiplicity: int
    deg_nilpotent_grading: int
    chi: int


def multiple_curve_profile(p):
    """Solve chi = sum_(j<p) (j*deg + 1) for the grading degree; always -1.

    chi = 1 - (p-1)(p-2)/2 is the Euler characteristic of the base-changed
    curve, and the graded pieces of its nilpotent filtration are line bundles
    of degrees 0, deg, 2*deg, ....
    """
    if p < 2:
        raise ValueError("p must be at least 2")
    chi = 1 - (p - 1) * (p - 2) // 2
    denominator = p * (p - 1) // 2
    numerator = chi - p
    if numerator % denominator:
        raise AssertionError("grading degree is not an integer")
    deg = numerator // denominator
    if deg != -1:
        raise AssertionError("expected degree -1, found %d" % deg)
    return MultipleCurveProfile(multiplicity=p, deg_nilpotent_grading=deg, chi=chi)
