"""Two compatible mean iterations and their hypergeometric limit formulas."""

from __future__ import annotations

import math
import random

import pytest

from lemnis import (
    DomainError,
    GaussParams,
    MeanPair,
    SchwarzVariant,
    closed_form_limit,
    cubic_preimage_x0,
    eta_pair,
    gauss_2f1,
    iterate_until_converged,
    limit_quartic,
    limit_sextic,
    step_quartic,
    step_sextic,
)
from lemnis.meaniter import sextic_means_complex

QUARTIC = SchwarzVariant.QUARTIC
SEXTIC = SchwarzVariant.SEXTIC

# limits computed independently at 40 digits from the series formulas
QUARTIC_LIMITS = {
    (2.0, 1.0): 1.59235907813963962,
    (1.0, 10.0): 4.2097921355260806796,
    (10.0, 1.0): 6.2582680548482363348,
}
SEXTIC_LIMITS = {
    (3.0, 5.0): 3.2590941992012041135,
    (5.0, 3.0): 4.6930212366337050966,
    (1.0, 10.0): 1.6618537584186517404,
    (10.0, 1.0): 8.4539528199854351213,
}


def test_pair_validation():
    MeanPair(1.0, 2.0)
    for bad in ((0.0, 1.0), (-1.0, 2.0), (float("nan"), 1.0), (1.0, float("inf"))):
        with pytest.raises(DomainError):
            MeanPair(*bad)


def test_quartic_step_values():
    q = step_quartic(MeanPair(2.0, 1.0))
    assert q.a == pytest.approx(1.5)
    assert q.b == pytest.approx(math.sqrt(3.0))


def test_quartic_step_argument_identity():
    # with x = 2a/(a+b) the complementary ratio collapses to b/a, which
    # is what makes the series argument transform cleanly under the step
    rng = random.Random(121)
    for _ in range(50):
        a = rng.uniform(0.1, 10.0)
        b = rng.uniform(0.1, 10.0)
        x = 2.0 * a / (a + b)
        assert (2.0 - x) / x == pytest.approx(b / a, rel=1e-14)


def test_eta_pair():
    e1, e2 = eta_pair(MeanPair(3.0, 5.0))
    assert e1 == pytest.approx(9.0)
    assert e2 == pytest.approx(1.0)
    # conjugate regime: a > b
    e1, e2 = eta_pair(MeanPair(5.0, 3.0))
    assert e1 == pytest.approx(e2.conjugate())
    assert abs(e1) == pytest.approx(5.0)  # |b + i sqrt(a^2-b^2)| = a


def test_sextic_step_values():
    q = step_sextic(MeanPair(3.0, 5.0))
    # second mean in closed form: 3^(2/3) (9^(1/3) + 1) / 2
    m2 = 3.0 ** (2.0 / 3.0) * (9.0 ** (1.0 / 3.0) + 1.0) / 2.0
    assert q.b == pytest.approx(m2, rel=1e-14)
    assert q.a == pytest.approx(3.2684095580975043, rel=1e-13)


def test_sextic_step_stays_real():
    rng = random.Random(122)
    for _ in range(100):
        a = rng.uniform(0.1, 10.0)
        b = rng.uniform(0.1, 10.0)
        m1, m2 = sextic_means_complex(MeanPair(a, b))
        scale = max(abs(m1), abs(m2), 1.0)
        assert abs(m1.imag) < 1e-10 * scale
        assert abs(m2.imag) < 1e-10 * scale
        q = step_sextic(MeanPair(a, b))
        assert q.a > 0.0
        assert q.b > 0.0


def test_steps_contract_the_gap():
    rng = random.Random(123)
    for variant, step in ((QUARTIC, step_quartic), (SEXTIC, step_sextic)):
        for _ in range(40):
            p = MeanPair(rng.uniform(0.1, 10.0), rng.uniform(0.1, 10.0))
            q = step(p)
            if p.gap() > 1e-10:
                assert q.gap() < 0.5 * p.gap()


def test_fixed_point_needs_no_iterations():
    trace = iterate_until_converged(MeanPair(3.7, 3.7), QUARTIC)
    assert trace.iterations == 0
    assert trace.converged
    assert trace.limit == pytest.approx(3.7, rel=1e-12)


def test_iterate_validation():
    p = MeanPair(2.0, 1.0)
    with pytest.raises(DomainError):
        iterate_until_converged(p, QUARTIC, tol=1e-16)
    with pytest.raises(DomainError):
        iterate_until_converged(p, QUARTIC, tol=0.1)
    with pytest.raises(DomainError):
        iterate_until_converged(p, QUARTIC, max_iter=0)
    with pytest.raises(DomainError):
        iterate_until_converged(p, QUARTIC, max_iter=500)


def test_linear_rate_takes_many_iterations():
    # the quartic gap contracts by about 1/4 per step, so full double
    # precision needs around twenty steps
    trace = iterate_until_converged(MeanPair(2.0, 1.0), QUARTIC, tol=1e-12)
    assert trace.converged
    assert trace.iterations == 20
    ratios = [
        trace.pairs[k + 1].gap() / trace.pairs[k].gap() for k in range(4, 8)
    ]
    for r in ratios:
        assert 0.15 < r < 0.35


def test_sextic_rate_is_much_faster():
    trace = iterate_until_converged(MeanPair(3.0, 5.0), SEXTIC, tol=1e-12)
    assert trace.converged
    assert trace.iterations <= 12
    # contraction near 1/27 per step
    r = trace.pairs[2].gap() / trace.pairs[1].gap()
    assert 0.02 < r < 0.06


def test_frozen_quartic_limits():
    for (a, b), ref in QUARTIC_LIMITS.items():
        assert limit_quartic(MeanPair(a, b)) == pytest.approx(ref, rel=1e-13)


def test_frozen_sextic_limits():
    for (a, b), ref in SEXTIC_LIMITS.items():
        assert limit_sextic(MeanPair(a, b)) == pytest.approx(ref, rel=1e-13)


def test_closed_form_limit_dispatch():
    p = MeanPair(2.0, 1.0)
    assert closed_form_limit(p, QUARTIC) == limit_quartic(p)
    assert closed_form_limit(p, SEXTIC) == limit_sextic(p)


def test_closed_form_is_series_quotient():
    # quartic: a / F(1/4,1/2;5/4; 1-(b/a)^2)^2, sextic: a / F(1/6,1/2;7/6; .)
    p = MeanPair(1.0, 1.2)
    x = 1.0 - (p.b / p.a) ** 2
    fq = gauss_2f1(GaussParams(0.25, 0.5, 1.25), x).real
    fs = gauss_2f1(GaussParams(1.0 / 6.0, 0.5, 7.0 / 6.0), x).real
    assert limit_quartic(p) == pytest.approx(p.a / fq**2, rel=1e-13)
    assert limit_sextic(p) == pytest.approx(p.a / fs, rel=1e-13)


def test_orbit_limit_matches_closed_form():
    rng = random.Random(124)
    for _ in range(30):
        a = rng.uniform(0.1, 10.0)
        b = rng.uniform(0.1, 10.0)
        p = MeanPair(a, b)
        tq = iterate_until_converged(p, QUARTIC, tol=1e-6, max_iter=12)
        assert abs(tq.limit - limit_quartic(p)) < 1e-11 * max(1.0, limit_quartic(p))
        ts = iterate_until_converged(p, SEXTIC, tol=1e-12, max_iter=12)
        assert abs(ts.limit - limit_sextic(p)) < 1e-10 * max(1.0, limit_sextic(p))


def test_limit_is_homogeneous():
    rng = random.Random(125)
    for _ in range(20):
        a = rng.uniform(0.5, 5.0)
        b = rng.uniform(0.5, 5.0)
        lam = rng.uniform(0.2, 4.0)
        base = limit_quartic(MeanPair(a, b))
        assert limit_quartic(MeanPair(lam * a, lam * b)) == pytest.approx(
            lam * base, rel=1e-11
        )


def test_limit_between_min_and_max():
    rng = random.Random(126)
    for variant in (QUARTIC, SEXTIC):
        for _ in range(30):
            a = rng.uniform(0.1, 10.0)
            b = rng.uniform(0.1, 10.0)
            m = closed_form_limit(MeanPair(a, b), variant)
            assert min(a, b) - 1e-12 <= m <= max(a, b) + 1e-12


def test_cubic_preimage_value_and_identity():
    x0 = cubic_preimage_x0(MeanPair(3.0, 5.0))
    assert x0 == pytest.approx(0.9606248332378425, rel=1e-12)
    rng = random.Random(127)
    for _ in range(40):
        a = rng.uniform(0.1, 5.0)
        b = a * rng.uniform(1.0 + 1e-6, 3.0)
        x0 = cubic_preimage_x0(MeanPair(a, b))
        assert 0.75 < x0 <= 1.0
        image = x0 * (9.0 - 8.0 * x0) ** 2 / (4.0 * x0 - 3.0) ** 3
        assert image == pytest.approx((b / a) ** 2, rel=1e-11)


def test_cubic_preimage_requires_ordered_pair():
    with pytest.raises(DomainError):
        cubic_preimage_x0(MeanPair(5.0, 3.0))
