"""Smoke tests for the python bindings."""
import math

import pytest

rslab = pytest.importorskip("rslab")


def test_arith():
    assert rslab.kloosterman(1, 1, 1) == pytest.approx(1.0)
    assert rslab.kloosterman(1, 1, 4) == pytest.approx(-2.0, abs=1e-12)
    assert rslab.ramanujan_sum(3, 6) == -2
    assert rslab.weil_bound_margin(1, 1, 4) == pytest.approx(4.0)


def test_bessel_and_gamma():
    assert rslab.bessel_j(0, 0.0) == 1.0
    assert rslab.bessel_j(11, 4 * math.pi) == pytest.approx(0.291337967938966, rel=1e-10)
    assert rslab.gamma_ratio(0j, 12, 12) == pytest.approx(1.0)
    z = rslab.zeta(2 + 0j)
    assert z.real == pytest.approx(math.pi**2 / 6, rel=1e-12)


def test_forms_and_lvalue():
    forms = rslab.hecke_eigenforms(12, 25000)
    assert len(forms) == 1
    delta = rslab.table_of(forms[0])
    assert delta(2) == pytest.approx(-24 / 2**5.5, rel=1e-12)
    L = rslab.central_lvalue(delta, delta, 1e-6)
    assert L.value > 0
    assert L.trunc_bound < 1e-6


def test_petersson_and_delta_symbol():
    w = rslab.petersson_geometric(1, 1, 12)
    assert w == pytest.approx(2.84028737516750049, rel=1e-8)
    dd = rslab.DeltaDecomposition(100)
    assert dd.delta(0) == pytest.approx(1.0, abs=1e-7)
    assert abs(dd.delta(7)) < 1e-7


def test_windows_and_shifted_sum():
    W = rslab.SmoothWindow.plateau(0.5, 1.0, 2.0, 3.0)
    assert W(1.5) == 1.0
    forms = rslab.hecke_eigenforms(12, 3 * 512 + 8)
    f = rslab.table_of(forms[0])
    s = rslab.shifted_sum_direct(f, f, 1, 512, W)
    assert math.isfinite(s)
