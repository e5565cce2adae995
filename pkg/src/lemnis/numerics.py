"""Scalar helpers shared by every other module.

Real gamma and beta, the unit-circle map ``e_of`` and windowed k-th roots.
Everything here is a pure function of binary64 inputs.
"""

from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass

TWO_PI = 2.0 * math.pi


class DomainError(ValueError):
    """Argument outside the mathematical domain of an operation."""


class IterationLimitError(RuntimeError):
    """An iterative scheme hit its cap before reaching tolerance."""


class PathError(ValueError):
    """An integration path cannot be routed safely."""


class BranchBoundaryWarning(UserWarning):
    """A requested root lies within roundoff of its argument window edge."""


@dataclass(frozen=True)
class Tolerance:
    """Absolute and relative accuracy targets used across the package."""

    abs_tol: float = 1e-10
    rel_tol: float = 1e-10

    def __post_init__(self) -> None:
        if self.abs_tol <= 0.0 or self.rel_tol <= 0.0:
            raise DomainError("tolerances must be positive")


DEFAULT_TOLERANCE = Tolerance()

# Lanczos, g = 7, nine terms.  Relative error stays below 1e-13 on the
# positive real axis, which is the only place public callers may evaluate.
_LANCZOS_G = 7.0
_LANCZOS_COEFFS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)


def gamma_real(x: float) -> float:
    """Gamma function on the positive real axis."""
    x = float(x)
    if x <= 0.0:
        raise DomainError(f"gamma_real requires x > 0, got {x}")
    if x < 0.5:
        # reflect once so the rational core only sees arguments >= 0.5
        return math.pi / (math.sin(math.pi * x) * gamma_real(1.0 - x))
    z = x - 1.0
    acc = _LANCZOS_COEFFS[0]
    for i, c in enumerate(_LANCZOS_COEFFS[1:], start=1):
        acc += c / (z + i)
    t = z + _LANCZOS_G + 0.5
    return math.sqrt(TWO_PI) * t ** (z + 0.5) * math.exp(-t) * acc


def _gamma_signed(x: float) -> float:
    # Internal: gamma at negative non-integer arguments via reflection.
    # Needed for series connection coefficients, not part of the public API.
    x = float(x)
    if x > 0.0:
        return gamma_real(x)
    if x == math.floor(x):
        raise DomainError(f"gamma pole at {x}")
    return math.pi / (math.sin(math.pi * x) * gamma_real(1.0 - x))


def beta(x: float, y: float) -> float:
    """Euler beta B(x, y) = Gamma(x) Gamma(y) / Gamma(x + y) for x, y > 0."""
    if x <= 0.0 or y <= 0.0:
        raise DomainError(f"beta requires positive arguments, got ({x}, {y})")
    return gamma_real(x) * gamma_real(y) / gamma_real(x + y)


def e_of(x: float) -> complex:
    """exp(2*pi*i*x) for real x.  The result always has modulus 1."""
    y = float(x)
    y -= round(y)  # 1-periodic; reduce to [-1/2, 1/2] before cos/sin
    return complex(math.cos(TWO_PI * y), math.sin(TWO_PI * y))


def principal_arg(w: complex) -> float:
    """Argument of w in the package-wide convention (-pi, pi]."""
    a = cmath.phase(complex(w))
    if a <= -math.pi:
        a = math.pi  # signed-zero underside of the cut maps to +pi
    return a


def branch_root(w: complex, k: int, arg_center: float) -> complex:
    """k-th root of w whose argument lies in (arg_center - pi/k, arg_center + pi/k].

    The window has width 2*pi/k, so exactly one of the k roots qualifies.
    w = 0 returns 0 exactly.  A root within roundoff of the window edge
    raises BranchBoundaryWarning because the choice is no longer stable.
    """
    if k < 2:
        raise DomainError(f"branch_root requires k >= 2, got {k}")
    w = complex(w)
    if w == 0:
        return 0j
    base = principal_arg(w) / k
    half = math.pi / k
    step = TWO_PI / k
    j = round((arg_center - base) / step)
    psi = base + j * step
    delta = psi - arg_center
    if delta <= -half:
        psi += step
        delta += step
    elif delta > half:
        psi -= step
        delta -= step
    if min(abs(delta - half), abs(delta + half)) < 1e-12:
        warnings.warn(
            "k-th root argument within roundoff of the window boundary",
            BranchBoundaryWarning,
            stacklevel=2,
        )
    return abs(w) ** (1.0 / k) * complex(math.cos(psi), math.sin(psi))
