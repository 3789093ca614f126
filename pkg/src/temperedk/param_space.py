"""Connected components of the tempered duals of GL(n, R) and GL(n, C).

A real component pairs a Levi shape with a discrete-series orbit; its
continuous parameters sweep R^(q+r) modulo the orbit's isotropy.  Components
with trivial isotropy are honest Euclidean spaces ("free"); the others are
closed cones R^d / prod S_m.  The complex side is simpler: one maximal
torus, components indexed by multisets of n circle exponents.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement, groupby

from .levi import (
    IsotropyDescriptor,
    LeviShape,
    SigmaOrbit,
    enumerate_levi_shapes,
    enumerate_orbits,
)
from .levi import isotropy as orbit_isotropy

KIND_FREE = "free"
KIND_CONE = "cone"


def _label_runs(labels: tuple[int, ...], offset: int) -> list[tuple[int, int]]:
    """(start, stop) coordinate ranges of equal-label runs, shifted by offset."""
    out = []
    i = 0
    for _, run in groupby(labels):
        m = len(list(run))
        out.append((offset + i, offset + i + m))
        i += m
    return out


@dataclass(frozen=True)
class Component:
    """One connected piece of the real tempered dual."""

    shape: LeviShape
    orbit: SigmaOrbit

    def __post_init__(self) -> None:
        if len(self.orbit.gl2_labels) != self.shape.q or len(self.orbit.gl1_labels) != self.shape.r:
            raise ValueError(
                f"orbit sizes {len(self.orbit.gl2_labels)}+{len(self.orbit.gl1_labels)} "
                f"do not fit shape (q={self.shape.q}, r={self.shape.r})"
            )

    @property
    def dimension(self) -> int:
        return self.shape.q + self.shape.r

    @property
    def isotropy(self) -> IsotropyDescriptor:
        return orbit_isotropy(self.orbit)

    @property
    def multiplicities(self) -> tuple[int, ...]:
        return self.isotropy.multiplicities

    @property
    def is_free(self) -> bool:
        return self.isotropy.is_trivial

    @property
    def kind(self) -> str:
        return KIND_FREE if self.is_free else KIND_CONE

    @property
    def key(self) -> str:
        """Canonical reference string, stable across runs and serializations."""
        gl2 = ",".join(str(label) for label in self.orbit.gl2_labels)
        gl1 = ",".join(str(label) for label in self.orbit.gl1_labels)
        return f"shape:{self.shape.q},{self.shape.r}|gl2:{gl2}|gl1:{gl1}"

    @property
    def param_blocks(self) -> tuple[tuple[int, int], ...]:
        """Coordinate ranges acted on by one isotropy factor each; gl2 first."""
        return tuple(
            _label_runs(self.orbit.gl2_labels, 0)
            + _label_runs(self.orbit.gl1_labels, self.shape.q)
        )


@dataclass(frozen=True)
class ComplexComponent:
    """One connected piece of the complex tempered dual: n circle exponents."""

    labels: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "labels", tuple(sorted(self.labels)))
        if not self.labels:
            raise ValueError("a complex component needs at least one label")

    @property
    def dimension(self) -> int:
        return len(self.labels)

    @property
    def multiplicities(self) -> tuple[int, ...]:
        mults = []
        for _, run in groupby(self.labels):
            m = len(list(run))
            if m >= 2:
                mults.append(m)
        return tuple(mults)

    @property
    def is_free(self) -> bool:
        return not self.multiplicities

    @property
    def kind(self) -> str:
        return KIND_FREE if self.is_free else KIND_CONE

    @property
    def key(self) -> str:
        return "labels:" + ",".join(str(label) for label in self.labels)

    @property
    def param_blocks(self) -> tuple[tuple[int, int], ...]:
        return tuple(_label_runs(self.labels, 0))


@dataclass(frozen=True)
class ConeChart:
    """Chart R^d / prod S_m  ~=  R^num_lines x [0, oo)^num_rays.

    Each block of m equal labels is charted by its mean (one full line) and
    its m - 1 consecutive ascending gaps (rays); coordinates with unrepeated
    labels keep their lines untouched.
    """

    num_lines: int
    num_rays: int


@dataclass(frozen=True)
class RealTemperedPoint:
    """A point on a real component: the continuous twists, one per block."""

    component: Component
    params: tuple[float, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "params", tuple(self.params))
        if len(self.params) != self.component.dimension:
            raise ValueError(
                f"expected {self.component.dimension} parameters, got {len(self.params)}"
            )


@dataclass(frozen=True)
class ComplexTemperedPoint:
    """A point on a complex component: n continuous twists."""

    component: ComplexComponent
    params: tuple[float, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "params", tuple(self.params))
        if len(self.params) != self.component.dimension:
            raise ValueError(
                f"expected {self.component.dimension} parameters, got {len(self.params)}"
            )


def real_components(n: int, cutoff: int) -> list[Component]:
    """Component catalog for GL(n, R), gl2 labels truncated at cutoff.

    Order is deterministic: shape-major (descending q), orbit-minor
    lexicographic, so identical inputs always serialize identically.
    """
    out = []
    for shape in enumerate_levi_shapes(n):
        for orbit in enumerate_orbits(shape, cutoff):
            out.append(Component(shape, orbit))
    return out


def complex_components(n: int, cutoff: int) -> list[ComplexComponent]:
    """Catalog for GL(n, C): all label multisets drawn from [-cutoff, cutoff]."""
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    if cutoff < 1:
        raise ValueError(f"cutoff must be >= 1, got {cutoff}")
    return [
        ComplexComponent(labels)
        for labels in combinations_with_replacement(range(-cutoff, cutoff + 1), n)
    ]


def cone_chart(component: Component | ComplexComponent) -> ConeChart:
    """Mean-and-gaps chart of the component's orbit space."""
    rays = sum(m - 1 for m in component.multiplicities)
    return ConeChart(component.dimension - rays, rays)


def canonicalize_point(
    point: RealTemperedPoint | ComplexTemperedPoint,
) -> RealTemperedPoint | ComplexTemperedPoint:
    """One representative per isotropy orbit: sort each equal-label block.

    Idempotent, and invariant under any permutation of parameters within a
    block of repeated labels.
    """
    params = list(point.params)
    for start, stop in point.component.param_blocks:
        params[start:stop] = sorted(params[start:stop])
    return type(point)(point.component, tuple(params))
