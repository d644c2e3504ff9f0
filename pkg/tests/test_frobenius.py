from itertools import permutations

import pytest

from insep.fieldarith import FunctionField, parse_expr
from insep.frobenius import (
    NotAPthPowerError,
    frobenius_decompose,
    imperfection_degree,
    is_pth_power,
    membership_in_pspan,
    p_linear_independent,
    p_linear_relation,
    pdegree_generated,
    pspan_combination_value,
    pth_root,
)

from conftest import random_nonzero_ratfunc, random_ratfunc, seeded


def test_decompose_monomial(K2st):
    s, t = K2st.gens()
    coords = frobenius_decompose(s * s * t).coords
    assert coords == {(0, 1): s}


def test_decompose_sum(K2st):
    s, t = K2st.gens()
    coords = frobenius_decompose(s + t).coords
    assert coords == {(1, 0): K2st.one(), (0, 1): K2st.one()}


def test_decompose_fraction_satisfies_reassembly(K2st):
    s, t = K2st.gens()
    f = K2st.one() / (s + t)
    fc = frobenius_decompose(f)
    assert set(fc.coords) == {(1, 0), (0, 1)}
    # both coordinates are 1/(s+t): squaring and reassembling recovers f
    assert fc.coords[(1, 0)] == K2st.one() / (s + t)
    assert fc.reassemble() == f


def test_reassembly_on_500_random_elements(K2st, K3st):
    rng = seeded(111)
    count = 0
    for field in (K2st, K3st):
        for _ in range(250):
            f = random_ratfunc(rng, field)
            assert frobenius_decompose(f).reassemble() == f
            count += 1
    assert count == 500


def test_pth_power_detection(K2st, K3t):
    assert is_pth_power(parse_expr("s^2+t^2", K2st))
    assert pth_root(parse_expr("s^2+t^2", K2st)) == parse_expr("s+t", K2st)
    assert not is_pth_power(K3t.gen("t"))
    with pytest.raises(NotAPthPowerError):
        pth_root(K3t.gen("t"))


def test_pth_root_of_fraction(K2st):
    f = parse_expr("(s^2*t^4)/(1+s^2)", K2st)
    root = pth_root(f)
    assert root == parse_expr("(s*t^2)/(1+s)", K2st)
    assert root * root == f


def test_root_round_trip_random(K2st, K3st):
    rng = seeded(222)
    for field in (K2st, K3st):
        for _ in range(250):
            f = random_ratfunc(rng, field)
            g = f ** field.p
            assert is_pth_power(g)
            assert pth_root(g) == f


def test_p_linear_independence_examples(K2st):
    s, t = K2st.gens()
    assert p_linear_independent([s, t, K2st.one()])
    assert not p_linear_independent([t, t])
    assert p_linear_independent([])
    relation = p_linear_relation([t, s * s * t, K2st.one()])
    value = K2st.zero()
    for d, lam in zip(relation, [t, s * s * t, K2st.one()]):
        value = value + (d ** 2) * lam
    assert value.is_zero()


def test_membership_examples(K2st, K3t):
    s, t = K2st.gens()
    t3 = K3t.gen("t")
    assert membership_in_pspan(t3 * t3, [t3]) == {(2,): K3t.one()}
    assert membership_in_pspan(s, [t]) is None
    assert membership_in_pspan(s * s * t, [t]) == {(1,): s}


def test_membership_witness_reassembles(K2st, K3st):
    rng = seeded(333)
    for field in (K2st, K3st):
        gens = field.gens()
        for _ in range(40):
            # build a guaranteed member from random p-th coefficients
            combo_val = field.zero()
            for i in range(field.p):
                d = random_ratfunc(rng, field, max_terms=2, max_exp=1)
                combo_val = combo_val + (d ** field.p) * (gens[0] ** i)
            witness = membership_in_pspan(combo_val, [gens[0]])
            assert witness is not None
            assert pspan_combination_value(witness, [gens[0]], field) == combo_val


def test_pdegree_examples(K2st):
    s, t = K2st.gens()
    assert pdegree_generated([s, t]).d == 2
    assert pdegree_generated([t, s * s * t]).d == 1
    assert pdegree_generated([]).d == 0


def test_pbasis_spans_every_examined_generator(K2st, K3st):
    rng = seeded(445)
    for field in (K2st, K3st):
        for _ in range(10):
            gens = [random_nonzero_ratfunc(rng, field, max_terms=2, max_exp=1)
                    for _ in range(rng.randrange(1, 5))]
            result = pdegree_generated(gens)
            selected = list(result.selected)
            for i, mu in enumerate(selected):
                assert membership_in_pspan(mu, selected[:i]) is None
            for mu in result.examined:
                assert membership_in_pspan(mu, selected) is not None


def test_pdegree_order_invariance(K2st, K3st):
    rng = seeded(444)
    for field in (K2st, K3st):
        for _ in range(8):
            gens = [random_nonzero_ratfunc(rng, field, max_terms=2, max_exp=1)
                    for _ in range(rng.randrange(1, 5))]
            values = {pdegree_generated(list(p)).d for p in permutations(gens)}
            assert len(values) == 1


def test_pdegree_monotonicity_and_bound(K2st, K3st):
    rng = seeded(555)
    for field in (K2st, K3st):
        for _ in range(25):
            gens = [random_nonzero_ratfunc(rng, field, max_terms=2, max_exp=1)
                    for _ in range(rng.randrange(0, 4))]
            extra = random_nonzero_ratfunc(rng, field, max_terms=2, max_exp=1)
            d0 = pdegree_generated(gens).d
            d1 = pdegree_generated(gens + [extra]).d
            assert d0 <= d1 <= d0 + 1
            assert d0 <= min(len(gens), imperfection_degree(field))


def _in_p_linear_span(field, mu, others):
    """Solve mu = sum d_i^p * others_i directly in Frobenius coordinates."""
    from insep.fieldarith import Matrix

    decomps = [frobenius_decompose(f).coords for f in others + [mu]]
    keys = sorted(set().union(*decomps))
    if not keys:
        return mu.is_zero()
    zero = field.zero()
    cols = [[decomps[j].get(e, zero) for j in range(len(others))] for e in keys]
    rhs = [decomps[-1].get(e, zero) for e in keys]
    return Matrix(field, cols).solve(rhs) is not None


def test_independence_consistent_with_linear_membership(K2st, K3st):
    rng = seeded(666)
    for field in (K2st, K3st):
        for _ in range(30):
            elems = [random_nonzero_ratfunc(rng, field, max_terms=2, max_exp=1)
                     for _ in range(rng.randrange(1, 4))]
            indep = p_linear_independent(elems)
            spanned = any(
                _in_p_linear_span(field, elems[i], elems[:i] + elems[i + 1:])
                for i in range(len(elems))
            )
            assert indep == (not spanned)
            if not indep:
                # membership_in_pspan must confirm the witnessed dependence
                relation = p_linear_relation(elems)
                j = max(i for i, c in enumerate(relation) if c)
                rest = elems[:j] + elems[j + 1:]
                assert membership_in_pspan(elems[j], rest) is not None


def test_imperfection_degree():
    assert imperfection_degree(FunctionField(2, ["t"])) == 1
    assert imperfection_degree(FunctionField(3, ["s", "t"])) == 2
    assert imperfection_degree(FunctionField(2, [])) == 0
