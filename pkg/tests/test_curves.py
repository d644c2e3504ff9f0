import pytest

from insep.curves import (
    CASE_P2,
    CASE_RESIDUE_K,
    CASE_RESIDUE_L,
    NotASubalgebraError,
    TrivialExtensionError,
    UnsupportedPError,
    WrongInvariantError,
    conductor_profile,
    glueing_cohomology,
    multiple_curve_profile,
    normal_form,
    normalization,
    preimage_length_of_u0_section,
    remains_integral,
    singular_point,
)
from insep.fieldarith import FunctionField, parse_expr
from insep.frobenius import p_linear_independent

from conftest import seeded


def nf_of(p, variables, exprs):
    K = FunctionField(p, variables)
    return normal_form(K, *[parse_expr(e, K) for e in exprs])


def test_normal_form_monomial_q():
    nf = nf_of(3, ["t"], ["t", "t^2", "1"])
    K = nf.field
    assert nf.lam == K.gen("t")
    assert nf.q_of_lambda() == parse_expr("t^2", K)
    assert nf.root_coeffs == (K.zero(), K.zero(), K.one())  # Q = lambda^2


def test_normal_form_membership_coefficient():
    nf = nf_of(2, ["s", "t"], ["t", "s^2*t", "1"])
    K = nf.field
    assert nf.lam == K.gen("t")
    assert nf.root_coeffs == (K.zero(), K.gen("s"))  # Q = s^2 * lambda


def test_normal_form_wrong_invariant():
    with pytest.raises(WrongInvariantError):
        nf_of(2, ["s", "t"], ["s^2", "t^2", "1"])
    with pytest.raises(WrongInvariantError):
        nf_of(2, ["s", "t"], ["s", "t", "1"])  # d = 2


def test_normal_form_reproduces_scaled_permuted_input():
    # no coefficient equal to 1; scaling and slot assignment must reconstruct
    K = FunctionField(3, ["t"])
    t = K.gen("t")
    nf = normal_form(K, t, t * t, t)
    assert nf.reproduces((t, t * t, t))
    nf2 = nf_of(2, ["s", "t"], ["t", "t+s^2*t", "1"])
    assert nf2.q_of_lambda() == parse_expr("t+s^2*t", nf2.field)


def test_normalization_pullback_vanishes():
    for args in ((3, ["t"], ["t", "t^2", "1"]),
                 (2, ["s", "t"], ["t", "s^2*t", "1"]),
                 (5, ["t"], ["t", "t^2", "1"])):
        nf = nf_of(*args)
        nu = normalization(nf)  # raises if the pullback fails to vanish
        assert preimage_length_of_u0_section(nu) == nf.p


def test_normalization_degenerate_q_zero():
    K = FunctionField(2, ["s", "t"])
    nf = normal_form(K, K.gen("t"), K.zero(), K.one())
    nu = normalization(nf)
    assert nu.q_root == nu.line_field.zero()


def test_singular_point_residue_l():
    nf = nf_of(3, ["t"], ["t", "t^2", "1"])
    sp = singular_point(nf)
    L = sp.point_on_line[0].field
    x = L.gen()
    # a = (lambda^(1/3) : 1), image (lambda^(1/3) : 1 : lambda^(2/3))
    assert sp.point_on_line == (x, L.one())
    assert sp.image_point == (x, L.one(), x * x)
    assert sp.residue_degree == 3


def test_singular_point_residue_k():
    nf = nf_of(3, ["s", "t"], ["t", "s^3*t", "1"])
    sp = singular_point(nf)
    L = sp.point_on_line[0].field
    s = L.lift(nf.field.gen("s"))
    assert sp.point_on_line == (-s, L.one())
    assert sp.image_point == (-s, L.one(), L.zero())
    assert sp.residue_degree == 1


def test_singular_point_zero_derivative():
    K = FunctionField(2, ["s", "t"])
    nf = normal_form(K, K.gen("t"), K.zero(), K.one())
    sp = singular_point(nf)
    L = sp.point_on_line[0].field
    assert sp.point_on_line == (L.zero(), L.one())
    assert sp.residue_degree == 1


def test_conductor_profile_p2():
    nf = nf_of(2, ["s", "t"], ["t", "s^2*t", "1"])
    cp = conductor_profile(nf)
    assert cp.case == CASE_P2
    assert cp.dim_subalgebra == 1
    assert cp.ring.dim_K == 2


@pytest.mark.parametrize("args,case,expected_dim", [
    ((3, ["t"], ["t", "t^2", "1"]), CASE_RESIDUE_L, 3),
    ((3, ["s", "t"], ["t", "s^3*t", "1"]), CASE_RESIDUE_K, 3),
    ((5, ["t"], ["t", "t^2", "1"]), CASE_RESIDUE_L, 10),
    ((5, ["s", "t"], ["t", "s^5*t", "1"]), CASE_RESIDUE_K, 10),
])
def test_conductor_profile_cases(args, case, expected_dim):
    nf = nf_of(*args)
    cp = conductor_profile(nf)
    assert cp.case == case
    assert cp.dim_subalgebra == expected_dim == nf.p * (nf.p - 1) // 2
    assert cp.ring.dim_K == nf.p * (nf.p - 1)
    sp = singular_point(nf)
    assert (cp.case == CASE_RESIDUE_L) == (sp.residue_degree == nf.p)
    if case == CASE_RESIDUE_L:
        assert not cp.witnesses["mu"].in_base()
        assert cp.ring.vanishing_order(cp.witnesses["f"]) == 1
        if nf.p >= 5:
            assert cp.ring.vanishing_order(cp.witnesses["g"]) == 2
    if case == CASE_RESIDUE_K:
        assert cp.ring.vanishing_order(cp.witnesses["v"]) == 1
        assert cp.ring.vanishing_order(cp.witnesses["w"]) >= 1


def test_conductor_unsupported_p():
    nf = nf_of(7, ["t"], ["t", "t^2", "1"])
    with pytest.raises(UnsupportedPError):
        conductor_profile(nf)


def test_glueing_cohomology_values():
    for args, h1 in (((2, ["s", "t"], ["t", "s^2*t", "1"]), 0),
                     ((3, ["t"], ["t", "t^2", "1"]), 1),
                     ((3, ["s", "t"], ["t", "s^3*t", "1"]), 1),
                     ((5, ["t"], ["t", "t^2", "1"]), 6)):
        nf = nf_of(*args)
        cp = conductor_profile(nf)
        gc = glueing_cohomology(cp.ring, cp.subalgebra_basis)
        assert gc.h0 == 1
        assert gc.h1 == h1 == (nf.p - 1) * (nf.p - 2) // 2
        assert gc.admissible


def test_glueing_cohomology_whole_ring_not_admissible():
    nf = nf_of(3, ["t"], ["t", "t^2", "1"])
    cp = conductor_profile(nf)
    ring = cp.ring
    full = []
    for i in range(ring.dim_K):
        v = [ring.K.zero()] * ring.dim_K
        v[i] = ring.K.one()
        full.append(v)
    gc = glueing_cohomology(ring, full)
    assert gc.h0 == 3  # the diagonal copy of L
    assert gc.h1 == 0
    assert not gc.admissible


def test_glueing_cohomology_rejects_non_subalgebra():
    nf = nf_of(3, ["t"], ["t", "t^2", "1"])
    cp = conductor_profile(nf)
    ring = cp.ring
    # the line K*u is not unital
    v = [ring.K.zero()] * ring.dim_K
    v[ring.p] = ring.K.one()
    with pytest.raises(NotASubalgebraError):
        glueing_cohomology(ring, [v])


def test_remains_integral():
    K = FunctionField(2, ["s", "t"])
    s, t = K.gens()
    nf = normal_form(K, t, K.zero(), K.one())
    assert remains_integral(nf, s) is True
    assert remains_integral(nf, t) is False       # lambda gains a root upstairs
    assert remains_integral(nf, s * s * t) is False  # s^2 t = (s^2)*lambda
    with pytest.raises(TrivialExtensionError):
        remains_integral(nf, s * s)


def test_remains_integral_cross_check():
    rng = seeded(99)
    K = FunctionField(3, ["s", "t"])
    s, t = K.gens()
    nf = normal_form(K, t, t * t, K.one())
    L_powers = [K.one(), t, t * t]
    for b in (s, s + t, s * t, t + K.one(), (s ** 3) * t, (s ** 3) * (t ** 2)):
        result = remains_integral(nf, b)
        # independent route: b becomes a p-th power in L iff {1, lam, lam^2, b}
        # acquires a K^p-linear relation
        dependent = not p_linear_independent(L_powers + [b])
        assert result == (not dependent)


def test_multiple_curve_profile():
    for p in (2, 3, 5, 7):
        prof = multiple_curve_profile(p)
        assert prof.deg_nilpotent_grading == -1
        assert prof.multiplicity == p
        assert prof.chi == 1 - (p - 1) * (p - 2) // 2


def test_glueing_cohomology_on_hand_built_subalgebras():
    from insep.curves import ConductorRing
    from insep.fieldarith import SimpleExtensionField

    K = FunctionField(3, ["t"])
    L = SimpleExtensionField(K, K.gen("t"))
    ring = ConductorRing(L)
    zero = [K.zero()] * ring.dim_K

    def unit_vec(i):
        v = list(zero)
        v[i] = K.one()
        return v

    one_vec = unit_vec(0)
    u_vec = unit_vec(ring.p)          # u
    xu_vec = unit_vec(ring.p + 1)     # x*u
    # admissible shape: K[u, x*u] with u^2 = 0
    gc = glueing_cohomology(ring, [one_vec, u_vec, xu_vec])
    assert (gc.h0, gc.h1, gc.admissible) == (1, 1, True)
    # unital and closed but too small: not admissible
    gc = glueing_cohomology(ring, [one_vec, u_vec])
    assert (gc.h0, gc.h1, gc.admissible) == (1, 2, False)


def test_two_term_q_normal_form():
    nf = nf_of(3, ["t"], ["t", "t+t^2", "1"])
    K = nf.field
    assert nf.root_coeffs == (K.zero(), K.one(), K.one())  # Q = lambda + lambda^2
    cp = conductor_profile(nf)
    assert cp.case == CASE_RESIDUE_L
    gc = glueing_cohomology(cp.ring, cp.subalgebra_basis)
    assert (gc.h0, gc.h1) == (1, 1)


def test_oracle_confirms_singular_point_support():
    from insep.fermat import singular_ideal_partials
    from insep.groebner import buchberger, ideal_dimension

    for args in ((3, ["t"], ["t", "t^2", "1"]),
                 (3, ["s", "t"], ["t", "s^3*t", "1"]),
                 (2, ["s", "t"], ["t", "s^2*t", "1"])):
        nf = nf_of(*args)
        sp = singular_point(nf)
        X = nf.curve()
        gb = buchberger([g for g in singular_ideal_partials(X) if g])
        assert ideal_dimension(gb).projective_dim == 0  # isolated singular locus
        L = sp.point_on_line[0].field
        for gen in gb.generators:
            value = gen.evaluate(list(sp.image_point), L.one(), embed_coeff=L.lift)
            assert not value  # the singular point lies in the oracle's locus
