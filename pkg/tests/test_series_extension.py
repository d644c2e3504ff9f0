import pytest

from insep.fieldarith import (
    NotAPthPowerCheckError,
    SimpleExtensionField,
    TruncSeriesRing,
    extension_tower,
)

from conftest import random_ratfunc, seeded


def test_extension_constructor_rejects_pth_powers(K2st):
    s = K2st.gen("s")
    with pytest.raises(NotAPthPowerCheckError):
        SimpleExtensionField(K2st, s * s)


def test_extension_arithmetic(K3t):
    t = K3t.gen("t")
    L = SimpleExtensionField(K3t, t, gen_name="x")
    x = L.gen()
    assert x ** 3 == L.lift(t)
    a = x + L.one()
    inv = a.inverse()
    assert a * inv == L.one()
    # (x+1)^3 = x^3 + 1 = t + 1 in characteristic 3
    assert a ** 3 == L.lift(t + K3t.one())


def test_extension_pth_root(K3t):
    t = K3t.gen("t")
    L = SimpleExtensionField(K3t, t)
    x = L.gen()
    w = x * x + L.lift(t)
    root = L.pth_root(w ** 3)
    assert root is not None and root ** 3 == w ** 3
    assert L.pth_root(x + L.one()) is None  # not in K at all


def test_tower_of_two_roots(K2st):
    s, t = K2st.gens()
    T = extension_tower(K2st, [s, t])
    assert T.dim_over_bottom() == 4
    xs = T.level_gen(0)
    xt = T.level_gen(1)
    assert xs ** 2 == T.from_bottom(s)
    assert xt ** 2 == T.from_bottom(t)
    prod = xs * xt
    assert prod ** 2 == T.from_bottom(s * t)
    assert (prod.inverse() * prod) == T.one()
    with pytest.raises(NotAPthPowerCheckError):
        extension_tower(K2st, [t, s * s * t])  # s^2 t lies in K^2(t)


def test_trunc_series_arithmetic(K3t):
    R = TruncSeriesRing(K3t, 4)
    u = R.gen()
    one = R.one()
    f = one + u
    g = f.inverse()
    assert f * g == one
    assert (u ** 4).order_of_vanishing() == 4  # truncated away
    assert (u * u).order_of_vanishing() == 2


def test_trunc_series_random_inverse(K3t):
    rng = seeded(909)
    R = TruncSeriesRing(K3t, 3)
    for _ in range(40):
        coeffs = [random_ratfunc(rng, K3t, max_terms=2, max_exp=2) for _ in range(3)]
        while not coeffs[0]:
            coeffs[0] = random_ratfunc(rng, K3t, max_terms=2, max_exp=2)
        f = R.from_coeffs(coeffs)
        assert f * f.inverse() == R.one()


def test_series_non_unit(K3t):
    R = TruncSeriesRing(K3t, 3)
    with pytest.raises(ZeroDivisionError):
        R.gen().inverse()
