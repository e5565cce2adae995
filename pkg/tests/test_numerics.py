"""Scalar building blocks: gamma, beta, the unit-circle map, windowed roots."""

from __future__ import annotations

import math
import random
import warnings

import pytest

from lemnis import (
    BranchBoundaryWarning,
    DomainError,
    Tolerance,
    beta,
    branch_root,
    e_of,
    gamma_real,
    principal_arg,
)


def test_gamma_small_integers_and_half():
    assert gamma_real(1.0) == pytest.approx(1.0, rel=1e-14)
    assert gamma_real(2.0) == pytest.approx(1.0, rel=1e-14)
    assert gamma_real(5.0) == pytest.approx(24.0, rel=1e-13)
    assert gamma_real(0.5) == pytest.approx(math.sqrt(math.pi), rel=1e-14)


def test_gamma_quarter():
    assert gamma_real(0.25) == pytest.approx(3.6256099082219083, rel=1e-13)


def test_gamma_sixth():
    # mpmath.gamma(mpf(1)/6) to 19 digits
    assert gamma_real(1.0 / 6.0) == pytest.approx(5.566316001780235204, rel=1e-13)


def test_gamma_recursion():
    rng = random.Random(71)
    for _ in range(200):
        x = rng.uniform(0.05, 20.0)
        assert gamma_real(x + 1.0) == pytest.approx(x * gamma_real(x), rel=1e-12)


def test_gamma_reflection():
    rng = random.Random(72)
    for _ in range(100):
        x = rng.uniform(0.02, 0.98)
        lhs = gamma_real(x) * gamma_real(1.0 - x)
        assert lhs == pytest.approx(math.pi / math.sin(math.pi * x), rel=1e-12)


def test_gamma_rejects_nonpositive():
    for bad in (0.0, -0.5, -3.0):
        with pytest.raises(DomainError):
            gamma_real(bad)


def test_beta_quartic_periods():
    assert beta(0.25, 0.25) == pytest.approx(7.4162987092054876737, rel=1e-13)


def test_beta_sextic_periods():
    # equals sqrt(3) * gamma(1/3)^3 / (2^(1/3) * pi); decimal checked
    # against mpmath at 40 digits
    g3 = gamma_real(1.0 / 3.0)
    closed = math.sqrt(3.0) * g3**3 / (2.0 ** (1.0 / 3.0) * math.pi)
    assert beta(1.0 / 3.0, 1.0 / 6.0) == pytest.approx(8.413092631952725567, rel=1e-13)
    assert beta(1.0 / 3.0, 1.0 / 6.0) == pytest.approx(closed, rel=1e-13)


def test_beta_symmetry_and_identity():
    rng = random.Random(73)
    for _ in range(50):
        x = rng.uniform(0.1, 5.0)
        y = rng.uniform(0.1, 5.0)
        assert beta(x, y) == pytest.approx(beta(y, x), rel=1e-13)
        assert beta(x, y) == pytest.approx(
            gamma_real(x) * gamma_real(y) / gamma_real(x + y), rel=1e-13
        )


def test_beta_rejects_nonpositive():
    with pytest.raises(DomainError):
        beta(-1.0, 2.0)
    with pytest.raises(DomainError):
        beta(0.5, 0.0)


def test_e_of_special_values():
    assert e_of(0.0) == 1.0
    assert abs(e_of(0.5) - (-1.0)) < 1e-15
    assert abs(e_of(0.25) - 1j) < 1e-15
    r = math.sqrt(0.5)
    assert abs(e_of(0.125) - complex(r, r)) < 1e-15


def test_e_of_is_homomorphism():
    rng = random.Random(74)
    for _ in range(200):
        x = rng.uniform(-8.0, 8.0)
        y = rng.uniform(-8.0, 8.0)
        assert abs(e_of(x + y) - e_of(x) * e_of(y)) < 1e-14
        assert abs(abs(e_of(x)) - 1.0) < 1e-15
        assert abs(e_of(x + 1.0) - e_of(x)) < 1e-14


def test_principal_arg_window():
    assert principal_arg(1.0) == 0.0
    assert principal_arg(-1.0) == pytest.approx(math.pi)
    # the underside of the cut folds onto +pi, keeping the window half open
    assert principal_arg(complex(-1.0, -0.0)) == pytest.approx(math.pi)
    assert principal_arg(1j) == pytest.approx(math.pi / 2)


def test_branch_root_examples():
    assert branch_root(1.0, 4, 0.0) == pytest.approx(1.0)
    r = branch_root(-8.0, 3, math.pi / 3)
    assert r == pytest.approx(complex(1.0, math.sqrt(3.0)), abs=1e-12)
    assert branch_root(0.0, 5, 1.0) == 0j


def test_branch_root_window_and_power():
    rng = random.Random(75)
    for _ in range(300):
        w = complex(rng.uniform(-3, 3), rng.uniform(-3, 3))
        if abs(w) < 1e-3:
            continue
        k = rng.choice((2, 3, 4, 6))
        center = rng.uniform(-3.0, 3.0)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", BranchBoundaryWarning)
            r = branch_root(w, k, center)
        assert abs(r**k - w) < 1e-12 * max(1.0, abs(w))
        d = principal_arg(r * e_of(-center / (2 * math.pi)))
        assert d <= math.pi / k + 1e-9
        assert d > -math.pi / k - 1e-9


def test_branch_root_boundary_warns():
    # -1 has square roots at +/- i, both sitting on the edge of the
    # window centered at 0
    with pytest.warns(BranchBoundaryWarning):
        branch_root(-1.0, 2, 0.0)


def test_branch_root_rejects_small_k():
    with pytest.raises(DomainError):
        branch_root(1.0, 1, 0.0)


def test_tolerance_validation():
    Tolerance(1e-9, 1e-9)
    with pytest.raises(DomainError):
        Tolerance(abs_tol=0.0)
    with pytest.raises(DomainError):
        Tolerance(rel_tol=-1e-10)
