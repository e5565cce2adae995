"""Two-term mean iterations attached to the quartic and sextic curves.

Each step replaces a positive pair by a pair of means; the common limit is a
hypergeometric value of the starting pair.  The sextic step goes through a
conjugate pair of auxiliary numbers and conjugate cube roots, so the means
are real by construction even when the discriminant is negative.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .hypergeometric import GaussParams, SchwarzVariant, gauss_2f1
from .numerics import DEFAULT_TOLERANCE, DomainError, Tolerance, branch_root

_SQRT3 = math.sqrt(3.0)


@dataclass(frozen=True)
class MeanPair:
    a: float
    b: float

    def __post_init__(self) -> None:
        for v in (self.a, self.b):
            if not (math.isfinite(v) and v > 0.0):
                raise DomainError("mean iteration needs finite positive entries")

    def gap(self) -> float:
        return abs(self.a - self.b)


@dataclass(frozen=True)
class IterationTrace:
    """A full orbit: every pair visited, plus the extracted limit.

    `limit` is the common limit estimated from the orbit itself by repeated
    difference extrapolation of the midpoints (a_n + b_n)/2.  The raw final
    midpoint is available as pairs[-1]; the extrapolated value is what the
    closed-form comparisons use, since the plain midpoint converges only
    linearly for the quartic step.
    """

    pairs: tuple[MeanPair, ...]
    converged: bool
    limit: float
    iterations: int


def step_quartic(p: MeanPair) -> MeanPair:
    a1 = 0.5 * (p.a + p.b)
    return MeanPair(a1, math.sqrt(p.a * a1))


def eta_pair(p: MeanPair) -> tuple[complex, complex]:
    """b +/- sqrt(b^2 - a^2), a conjugate pair when a > b."""
    s = cmath.sqrt(complex(p.b * p.b - p.a * p.a, 0.0))
    return p.b + s, p.b - s


def sextic_means_complex(p: MeanPair) -> tuple[complex, complex]:
    """The two sextic means before the real parts are taken.

    Cube roots are the ones with argument in (-pi/6, pi/6); for a conjugate
    pair that makes the two roots conjugate, so both combinations below are
    real up to roundoff.
    """
    eta1, eta2 = eta_pair(p)
    r1 = branch_root(eta1, 3, 0.0)
    r2 = branch_root(eta2, 3, 0.0)
    a23 = p.a ** (2.0 / 3.0)
    m1 = a23 * cmath.sqrt(r1 * r1 + r1 * r2 + r2 * r2) / _SQRT3
    m2 = a23 * (r1 + r2) / 2.0
    return m1, m2


def step_sextic(p: MeanPair) -> MeanPair:
    m1, m2 = sextic_means_complex(p)
    scale = max(abs(m1), abs(m2), 1.0)
    if max(abs(m1.imag), abs(m2.imag)) > 1e-9 * scale:
        raise DomainError("sextic means came out non-real; inputs out of range")
    return MeanPair(m1.real, m2.real)


def _step(variant: SchwarzVariant):
    if variant is SchwarzVariant.QUARTIC:
        return step_quartic
    if variant is SchwarzVariant.SEXTIC:
        return step_sextic
    raise DomainError("unknown variant")


def _precondition(p: MeanPair, variant: SchwarzVariant) -> MeanPair:
    # Each step preserves the limit, so stepping until the series argument
    # 1 - (b/a)^2 is small is free.
    step = _step(variant)
    guard = 0
    while abs(1.0 - (p.b / p.a) ** 2) >= 0.8:
        p = step(p)
        guard += 1
        if guard > 64:
            raise DomainError("preconditioning failed to contract the pair")
    return p


def limit_quartic(p: MeanPair, tol: Tolerance | None = None) -> float:
    tol = tol or DEFAULT_TOLERANCE
    p = _precondition(p, SchwarzVariant.QUARTIC)
    f = gauss_2f1(GaussParams(0.25, 0.5, 1.25), 1.0 - (p.b / p.a) ** 2, tol)
    return p.a / (f.real * f.real)


def limit_sextic(p: MeanPair, tol: Tolerance | None = None) -> float:
    tol = tol or DEFAULT_TOLERANCE
    p = _precondition(p, SchwarzVariant.SEXTIC)
    f = gauss_2f1(GaussParams(1.0 / 6.0, 0.5, 7.0 / 6.0), 1.0 - (p.b / p.a) ** 2, tol)
    return p.a / f.real


def closed_form_limit(p: MeanPair, variant: SchwarzVariant, tol: Tolerance | None = None) -> float:
    if variant is SchwarzVariant.QUARTIC:
        return limit_quartic(p, tol)
    return limit_sextic(p, tol)


def _accelerated_limit(mids: list[float]) -> float:
    """Repeated difference extrapolation, keeping the most settled level."""
    if len(mids) == 1:
        return mids[0]
    best = mids[-1]
    best_err = abs(mids[-1] - mids[-2])
    cur = mids
    while len(cur) >= 3:
        nxt = []
        for k in range(len(cur) - 2):
            d1 = cur[k + 1] - cur[k]
            d2 = cur[k + 2] - cur[k + 1]
            den = d2 - d1
            if den == 0.0:
                nxt.append(cur[k + 2])
            else:
                nxt.append(cur[k + 2] - d2 * d2 / den)
        cur = nxt
        if len(cur) >= 2:
            err = abs(cur[-1] - cur[-2])
            if err <= best_err:
                best, best_err = cur[-1], err
        elif best_err > 0.0:
            best = cur[-1]
    return best


def iterate_until_converged(
    p: MeanPair,
    variant: SchwarzVariant,
    tol: float = 1e-12,
    max_iter: int = 60,
) -> IterationTrace:
    """Run the mean iteration until the relative gap drops below tol.

    Non-convergence within max_iter is reported in the trace, not raised.
    """
    if not 1e-15 < tol < 1e-3:
        raise DomainError("tol must lie in (1e-15, 1e-3)")
    if not 1 <= max_iter <= 200:
        raise DomainError("max_iter must lie in [1, 200]")
    step = _step(variant)
    pairs = [p]
    while pairs[-1].gap() >= tol * pairs[-1].a and len(pairs) <= max_iter:
        pairs.append(step(pairs[-1]))
    last = pairs[-1]
    mids = [0.5 * (q.a + q.b) for q in pairs]
    return IterationTrace(
        pairs=tuple(pairs),
        converged=last.gap() < tol * last.a,
        limit=_accelerated_limit(mids),
        iterations=len(pairs) - 1,
    )


def cubic_preimage_x0(p: MeanPair) -> float:
    """The real preimage in (3/4, 1] of b^2/a^2 under x (9-8x)^2 / (4x-3)^3.

    Defined for a < b; the radicand b^2 - a^2 is then positive and both cube
    roots are of positive reals.
    """
    if not p.a < p.b:
        raise DomainError("cubic preimage needs a < b")
    s = math.sqrt(p.b * p.b - p.a * p.a)
    r1 = (p.b + s) ** (1.0 / 3.0)
    r2 = (p.b - s) ** (1.0 / 3.0)
    return 0.375 * ((p.a ** (2.0 / 3.0) / s) * (r1 - r2) + 2.0)
