"""Circuit matrices of the Gauss family and their exact unit-ring normal forms.

Two layers live here.  The floating layer (`general_m0_m1`,
`m0_m1_closed_form`, `base_change_affine`) carries the circuit matrices of a
generic parameter triple as complex 2x2 arrays.  The exact layer (`CycInt`,
`CircuitMatrix`, `AffineMap`) works over Z[i] or Z[zeta] with no floats at
all, so group-theoretic statements (orders, closures) are decided exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable

import numpy as np

from .numerics import DomainError, IterationLimitError, e_of


class Ring(Enum):
    """Coefficient ring for the exact layer.

    GAUSS is Z[i] with basis (1, i).  EISENSTEIN6 is Z[zeta] with basis
    (1, zeta) where zeta = (1 + sqrt(3) i)/2, so zeta^2 = zeta - 1.
    """

    GAUSS = "gauss"
    EISENSTEIN6 = "eisenstein6"

    @property
    def generator(self) -> complex:
        if self is Ring.GAUSS:
            return 1j
        return complex(0.5, math.sqrt(3.0) / 2.0)


@dataclass(frozen=True)
class CycInt:
    """x + y*g with integer x, y and g the ring generator."""

    x: int
    y: int
    ring: Ring

    def __post_init__(self) -> None:
        if not isinstance(self.x, int) or not isinstance(self.y, int):
            raise DomainError("CycInt coordinates must be integers")

    @property
    def value(self) -> complex:
        return self.x + self.y * self.ring.generator

    def __add__(self, other: "CycInt") -> "CycInt":
        self._same_ring(other)
        return CycInt(self.x + other.x, self.y + other.y, self.ring)

    def __sub__(self, other: "CycInt") -> "CycInt":
        self._same_ring(other)
        return CycInt(self.x - other.x, self.y - other.y, self.ring)

    def __neg__(self) -> "CycInt":
        return CycInt(-self.x, -self.y, self.ring)

    def __mul__(self, other: "CycInt") -> "CycInt":
        self._same_ring(other)
        # g^2 = -1 for GAUSS, g^2 = g - 1 for EISENSTEIN6.
        cross = self.x * other.y + self.y * other.x
        if self.ring is Ring.GAUSS:
            return CycInt(self.x * other.x - self.y * other.y, cross, self.ring)
        return CycInt(
            self.x * other.x - self.y * other.y,
            cross + self.y * other.y,
            self.ring,
        )

    def _same_ring(self, other: "CycInt") -> None:
        if self.ring is not other.ring:
            raise DomainError("mixed-ring arithmetic is not defined")

    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0

    def is_one(self) -> bool:
        return self.x == 1 and self.y == 0

    def is_unit(self) -> bool:
        return self in units(self.ring)

    def unit_inverse(self) -> "CycInt":
        for u in units(self.ring):
            if (self * u).is_one():
                return u
        raise DomainError(f"{self} is not a unit")


def ring_one(ring: Ring) -> CycInt:
    return CycInt(1, 0, ring)


def ring_gen(ring: Ring) -> CycInt:
    return CycInt(0, 1, ring)


def units(ring: Ring) -> tuple[CycInt, ...]:
    """All units, listed as consecutive powers of the generator."""
    if ring is Ring.GAUSS:
        return (
            CycInt(1, 0, ring),
            CycInt(0, 1, ring),
            CycInt(-1, 0, ring),
            CycInt(0, -1, ring),
        )
    return (
        CycInt(1, 0, ring),
        CycInt(0, 1, ring),
        CycInt(-1, 1, ring),
        CycInt(-1, 0, ring),
        CycInt(0, -1, ring),
        CycInt(1, -1, ring),
    )


@dataclass(frozen=True)
class CircuitMatrix:
    """2x2 matrix over a unit ring; the determinant must be a unit."""

    e11: CycInt
    e12: CycInt
    e21: CycInt
    e22: CycInt

    def __post_init__(self) -> None:
        ring = self.e11.ring
        for e in (self.e12, self.e21, self.e22):
            if e.ring is not ring:
                raise DomainError("matrix entries must share one ring")
        if not self.det().is_unit():
            raise DomainError("determinant must be a unit")

    @property
    def ring(self) -> Ring:
        return self.e11.ring

    @classmethod
    def identity(cls, ring: Ring) -> "CircuitMatrix":
        one, zero = ring_one(ring), CycInt(0, 0, ring)
        return cls(one, zero, zero, one)

    def det(self) -> CycInt:
        return self.e11 * self.e22 - self.e12 * self.e21

    def __matmul__(self, other: "CircuitMatrix") -> "CircuitMatrix":
        return CircuitMatrix(
            self.e11 * other.e11 + self.e12 * other.e21,
            self.e11 * other.e12 + self.e12 * other.e22,
            self.e21 * other.e11 + self.e22 * other.e21,
            self.e21 * other.e12 + self.e22 * other.e22,
        )

    def inverse(self) -> "CircuitMatrix":
        dinv = self.det().unit_inverse()
        return CircuitMatrix(
            dinv * self.e22, -(dinv * self.e12), -(dinv * self.e21), dinv * self.e11
        )

    def order(self, cap: int = 24) -> int:
        """Smallest n >= 1 with M^n = 1, decided by exact arithmetic."""
        acc = self
        ident = CircuitMatrix.identity(self.ring)
        for n in range(1, cap + 1):
            if acc == ident:
                return n
            acc = acc @ self
        raise IterationLimitError(f"order exceeds {cap}")

    def as_complex(self) -> np.ndarray:
        return np.array(
            [
                [self.e11.value, self.e12.value],
                [self.e21.value, self.e22.value],
            ],
            dtype=complex,
        )


@dataclass(frozen=True)
class AffineMap:
    """z |-> unit*z + shift with unit a ring unit."""

    unit: CycInt
    shift: CycInt

    def __post_init__(self) -> None:
        if self.unit.ring is not self.shift.ring:
            raise DomainError("unit and shift must share one ring")
        if not self.unit.is_unit():
            raise DomainError("AffineMap unit must be a ring unit")

    @property
    def ring(self) -> Ring:
        return self.unit.ring

    @classmethod
    def identity(cls, ring: Ring) -> "AffineMap":
        return cls(ring_one(ring), CycInt(0, 0, ring))

    def __matmul__(self, other: "AffineMap") -> "AffineMap":
        # Composition "self after other".
        return AffineMap(self.unit * other.unit, self.unit * other.shift + self.shift)

    def inverse(self) -> "AffineMap":
        uinv = self.unit.unit_inverse()
        return AffineMap(uinv, -(uinv * self.shift))

    def apply(self, z: complex) -> complex:
        return self.unit.value * z + self.shift.value


def as_affine(m: CircuitMatrix) -> AffineMap:
    """Read [[u, s], [0, 1]] as the map z |-> u*z + s."""
    if not (m.e21.is_zero() and m.e22.is_one()):
        raise DomainError("matrix is not in affine normal form (bottom row must be (0, 1))")
    return AffineMap(m.e11, m.e12)


def _dist_to_int(x: float) -> float:
    return abs(x - round(x))


def invariant_hermitian_form(alpha: float, beta: float, gamma: float) -> np.ndarray:
    """The invariant hermitian matrix of the local-solution basis.

    Requires alpha, alpha - gamma, beta - gamma all non-integral; the
    denominators below vanish otherwise.
    """
    for label, v in (("alpha", alpha), ("alpha-gamma", alpha - gamma), ("beta-gamma", beta - gamma)):
        if _dist_to_int(v) < 1e-9:
            raise DomainError(f"{label} must not be an integer")
    ega = e_of(gamma - alpha)
    d = ega - 1.0
    h11 = (ega - e_of(beta)) / d
    h12 = -ega / d
    h21 = (1.0 - e_of(beta)) / d
    h22 = (1.0 - e_of(gamma)) / (d * (e_of(alpha) - 1.0))
    return np.array([[h11, h12], [h21, h22]], dtype=complex)


def general_m0_m1(alpha: float, beta: float, gamma: float) -> tuple[np.ndarray, np.ndarray]:
    """Circuit matrices around 0 and 1 via the invariant-form route.

    M0 is the reflection-like update of lambda0*I along the second basis
    vector, M1 the corresponding update of I along the first; both come out
    upper/lower triangular with unit second eigenvalue.
    """
    h = invariant_hermitian_form(alpha, beta, gamma)
    ident = np.eye(2, dtype=complex)
    lam0 = e_of(-gamma)
    lam1 = e_of(gamma - alpha - beta)
    e1 = np.array([[1.0, 0.0]], dtype=complex)
    e2 = np.array([[0.0, 1.0]], dtype=complex)
    m0 = lam0 * ident - (lam0 - 1.0) / (e2 @ h @ e2.conj().T)[0, 0] * (h @ e2.conj().T @ e2)
    m1 = ident - (1.0 - lam1) / (e1 @ h @ e1.conj().T)[0, 0] * (h @ e1.conj().T @ e1)
    return m0, m1


def m0_m1_closed_form(alpha: float, beta: float, gamma: float) -> tuple[np.ndarray, np.ndarray]:
    """Same two matrices written out entrywise; the dual route for checks."""
    m0 = np.array([[e_of(-gamma), 1.0 - e_of(-alpha)], [0.0, 1.0]], dtype=complex)
    m1 = np.array(
        [[e_of(gamma - alpha - beta), 0.0], [e_of(-beta) - 1.0, 1.0]], dtype=complex
    )
    return m0, m1


def base_change_affine(m: np.ndarray, alpha: float) -> np.ndarray:
    """Conjugate by diag(1, 1 - e_of(alpha)).

    At beta = 0 this takes the circuit pair to the exact normal forms of
    `n_matrices`.
    """
    s = 1.0 - e_of(alpha)
    t = np.array([[1.0, 0.0], [0.0, s]], dtype=complex)
    tinv = np.array([[1.0, 0.0], [0.0, 1.0 / s]], dtype=complex)
    return t @ np.asarray(m, dtype=complex) @ tinv


def n_matrices(variant) -> tuple[CircuitMatrix, CircuitMatrix, CircuitMatrix]:
    """Exact normal-form generators (N0, N1, (N0 N1)^-1) for a Schwarz variant.

    Orders are (2, 4, 4) over Z[i] and (2, 6, 3) over Z[zeta].
    """
    from .hypergeometric import SchwarzVariant

    if variant is SchwarzVariant.QUARTIC:
        ring = Ring.GAUSS
    elif variant is SchwarzVariant.SEXTIC:
        ring = Ring.EISENSTEIN6
    else:
        raise DomainError("unknown variant")
    one, zero, g = ring_one(ring), CycInt(0, 0, ring), ring_gen(ring)
    n0 = CircuitMatrix(-one, g, zero, one)
    n1 = CircuitMatrix(g, zero, zero, one)
    n01inv = (n0 @ n1).inverse()
    return n0, n1, n01inv


@dataclass(frozen=True)
class ClosureSummary:
    """What the closure search saw before it stopped."""

    units: tuple[CycInt, ...]
    has_translation_basis: bool
    elements_explored: int


def _unit_subgroup(gen_units: Iterable[CycInt], ring: Ring) -> tuple[CycInt, ...]:
    group = {ring_one(ring)}
    frontier = set(group)
    gens = set(gen_units) | {u.unit_inverse() for u in gen_units}
    while frontier:
        nxt = {f * g for f in frontier for g in gens} - group
        group |= nxt
        frontier = nxt
    order = units(ring)
    return tuple(sorted(group, key=order.index))


def group_closure(generators: list[AffineMap], cap: int = 10000) -> ClosureSummary:
    """Breadth-first closure of an affine generator list.

    Stops once the reachable unit set matches the subgroup generated by the
    generator units and both basis translations z |-> z + 1 and
    z |-> z + g have been seen, or once `cap` elements are explored.  Only a
    unit set still growing at the cap is an error; a genuinely infinite
    translation part (such as the single generator z |-> z + 1) just reports
    what was found.
    """
    if not generators:
        raise DomainError("need at least one generator")
    if cap > 10000:
        raise DomainError("cap must be at most 10000")
    ring = generators[0].ring
    for g in generators:
        if g.ring is not ring:
            raise DomainError("generators must share one ring")
    target_units = _unit_subgroup((g.unit for g in generators), ring)
    gens = list(generators) + [g.inverse() for g in generators]

    one = ring_one(ring)
    basis = {one, ring_gen(ring)}
    visited = {AffineMap.identity(ring)}
    frontier = list(visited)
    seen_units = {one}
    translations: set[CycInt] = {CycInt(0, 0, ring)}

    def satisfied() -> bool:
        return set(target_units) <= seen_units and basis <= translations

    while frontier and len(visited) < cap and not satisfied():
        nxt = []
        for f in frontier:
            for g in gens:
                h = g @ f
                if h in visited:
                    continue
                visited.add(h)
                nxt.append(h)
                seen_units.add(h.unit)
                if h.unit.is_one():
                    translations.add(h.shift)
        frontier = nxt
    if not set(target_units) <= seen_units:
        raise IterationLimitError("unit set had not stabilized at the exploration cap")
    return ClosureSummary(
        units=target_units,
        has_translation_basis=basis <= translations,
        elements_explored=len(visited),
    )
