"""Weil groups of R and C, their tempered L-parameters, and the Langlands
match with components of the tempered dual.

W_C is just C^*, so its unitary characters are pairs (ell, t) acting as
(z/|z|)^ell |z|^(2it) up to normalization; only the pair matters here, so a
character is stored as its integer winding and real twist.  W_R contains C^*
with index two, and its irreducibles are the two one-dimensional characters
sgn^eps |.|^it of the abelianization together with the two-dimensional
representations induced from C^* characters with nonzero winding.  Inducing
(ell, t) and (-ell, t) gives the same representation, so ell >= 1 is the
canonical label.

The Langlands correspondence for GL over R and C matches a tempered
parameter's multiset of summands with a point of the tempered dual: each
two-dimensional summand feeds a gl2 block of the Levi, each character a gl1
block, and the twists become the continuous coordinates.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from typing import Union

from .levi import LeviShape, SigmaOrbit
from .param_space import (
    ComplexComponent,
    ComplexTemperedPoint,
    Component,
    RealTemperedPoint,
    canonicalize_point,
)


@dataclass(frozen=True)
class RealCharacter:
    """Unitary character sgn^epsilon |.|^(i t) of R^*."""

    epsilon: int
    t: float

    def __post_init__(self) -> None:
        if self.epsilon not in (0, 1):
            raise ValueError(f"epsilon must be 0 or 1, got {self.epsilon}")
        object.__setattr__(self, "t", float(self.t))

    def value(self, x: float) -> complex:
        if x == 0:
            raise ValueError("character is only defined on nonzero reals")
        sign = -1.0 if (x < 0 and self.epsilon == 1) else 1.0
        return sign * cmath.exp(1j * self.t * cmath.log(abs(x)).real)


@dataclass(frozen=True)
class ComplexCharacter:
    """Unitary character (z/|z|)^ell |z|^(i t) of C^*, |z| the usual modulus."""

    ell: int
    t: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "t", float(self.t))

    def value(self, z: complex) -> complex:
        if z == 0:
            raise ValueError("character is only defined on nonzero complex numbers")
        modulus = abs(z)
        return (z / modulus) ** self.ell * cmath.exp(1j * self.t * cmath.log(modulus).real)

    def conjugate(self) -> "ComplexCharacter":
        """Precomposition with complex conjugation: the winding flips."""
        return ComplexCharacter(-self.ell, self.t)


@dataclass(frozen=True)
class OneDim:
    """One-dimensional summand of a W_R parameter."""

    chi: RealCharacter


@dataclass(frozen=True)
class TwoDimInduced:
    """Two-dimensional summand induced from a C^* character with ell >= 1."""

    chi: ComplexCharacter

    def __post_init__(self) -> None:
        if self.chi.ell < 1:
            raise ValueError(
                f"induced summands need winding >= 1, got {self.chi.ell}; "
                "winding 0 induces reducibly"
            )


Summand = Union[OneDim, TwoDimInduced]


def _summand_key(s: Summand) -> tuple:
    if isinstance(s, TwoDimInduced):
        return (0, s.chi.ell, s.chi.t)
    return (1, s.chi.epsilon, s.chi.t)


@dataclass(frozen=True)
class LParameterR:
    """Tempered L-parameter of GL(n, R): a multiset of summands.

    Summands are kept sorted (two-dimensional first, then by label and
    twist) so equal parameters compare equal.
    """

    summands: tuple[Summand, ...]

    def __post_init__(self) -> None:
        ordered = tuple(sorted(self.summands, key=_summand_key))
        object.__setattr__(self, "summands", ordered)
        if not self.summands:
            raise ValueError("a parameter needs at least one summand")

    @property
    def n(self) -> int:
        return sum(2 if isinstance(s, TwoDimInduced) else 1 for s in self.summands)


@dataclass(frozen=True)
class LParameterC:
    """Tempered L-parameter of GL(n, C): a multiset of C^* characters."""

    summands: tuple[ComplexCharacter, ...]

    def __post_init__(self) -> None:
        ordered = tuple(sorted(self.summands, key=lambda c: (c.ell, c.t)))
        object.__setattr__(self, "summands", ordered)
        if not self.summands:
            raise ValueError("a parameter needs at least one summand")

    @property
    def n(self) -> int:
        return len(self.summands)


def restrict(parameter: LParameterR) -> LParameterC:
    """Restriction of a W_R parameter to the index-two subgroup C^*.

    A character sgn^eps |.|^it factors through the abelianization, and the
    composite with the inclusion of C^* is the norm z -> |z|^2, so it
    restricts to |z|^(2it): winding 0, twist doubled.  An induced
    two-dimensional summand restricts to the inducing character plus its
    conjugate, windings ell and -ell with the twist unchanged.
    """
    parts: list[ComplexCharacter] = []
    for s in parameter.summands:
        if isinstance(s, TwoDimInduced):
            parts.append(ComplexCharacter(s.chi.ell, s.chi.t))
            parts.append(ComplexCharacter(-s.chi.ell, s.chi.t))
        else:
            parts.append(ComplexCharacter(0, 2.0 * s.chi.t))
    return LParameterC(tuple(parts))


def langlands_real(parameter: LParameterR) -> RealTemperedPoint:
    """Tempered-dual point matched with a W_R parameter.

    Two-dimensional summands fill the gl2 blocks and characters the gl1
    blocks; the parameter's canonical summand order makes the point
    canonical by construction.
    """
    gl2 = [s for s in parameter.summands if isinstance(s, TwoDimInduced)]
    gl1 = [s for s in parameter.summands if isinstance(s, OneDim)]
    shape = LeviShape(len(gl2), len(gl1))
    orbit = SigmaOrbit(
        tuple(s.chi.ell for s in gl2),
        tuple(s.chi.epsilon for s in gl1),
    )
    params = tuple(s.chi.t for s in gl2) + tuple(s.chi.t for s in gl1)
    return RealTemperedPoint(Component(shape, orbit), params)


def langlands_real_inverse(point: RealTemperedPoint) -> LParameterR:
    """Parameter matched with a tempered-dual point; inverse of the above."""
    point = canonicalize_point(point)
    component = point.component
    q = component.shape.q
    summands: list[Summand] = []
    for ell, t in zip(component.orbit.gl2_labels, point.params[:q]):
        summands.append(TwoDimInduced(ComplexCharacter(ell, t)))
    for eps, t in zip(component.orbit.gl1_labels, point.params[q:]):
        summands.append(OneDim(RealCharacter(eps, t)))
    return LParameterR(tuple(summands))


def langlands_complex(parameter: LParameterC) -> ComplexTemperedPoint:
    """Tempered-dual point matched with a W_C parameter."""
    component = ComplexComponent(tuple(c.ell for c in parameter.summands))
    params = tuple(c.t for c in parameter.summands)
    return ComplexTemperedPoint(component, params)
