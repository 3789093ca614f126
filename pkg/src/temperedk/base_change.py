"""Base change from GL(n, R) to GL(n, C) on points, components, and K-theory.

On parameters, base change is restriction from W_R to C^*.  On the tempered
dual it therefore sends a real component to one complex component (each gl2
label ell contributes the pair ell, -ell; each gl1 block contributes label
0) and acts on the continuous coordinates by an integer linear map: a gl2
coordinate t feeds both members of its pair, a gl1 coordinate doubles.

That affine picture decides everything about the induced K-theory map.  The
parameter map is proper exactly when its matrix has full column rank, which
holds for every catalog component, so each map pulls compactly supported
K-theory back.  Only degree-one geometry survives the pullback: for n = 1
both real lines land on the winding-0 complex line with coefficient 1,
while for n >= 2 every image component either repeats a label or has
dimension larger than its source, and the induced map vanishes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .ktheory import KClass, KGroupPresentation, k_complex, k_real, kclass, kclass_add, kclass_scale
from .param_space import (
    ComplexComponent,
    ComplexTemperedPoint,
    Component,
    RealTemperedPoint,
    canonicalize_point,
)


@dataclass(frozen=True)
class ParameterMap:
    """Integer linear map between component parameter spaces, rows = target
    coordinates, columns = source coordinates."""

    source: Component
    target: ComplexComponent
    matrix: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(row) for row in self.matrix)
        object.__setattr__(self, "matrix", rows)
        if len(rows) != self.target.dimension:
            raise ValueError("matrix row count must equal the target dimension")
        for row in rows:
            if len(row) != self.source.dimension:
                raise ValueError("matrix column count must equal the source dimension")

    @property
    def column_rank(self) -> int:
        return _column_rank(self.matrix)

    @property
    def is_proper(self) -> bool:
        """Preimages of compacta are compact iff no source direction is
        killed, i.e. the matrix has full column rank."""
        return self.column_rank == self.source.dimension


def _column_rank(matrix: tuple[tuple[int, ...], ...]) -> int:
    if not matrix:
        return 0
    rows = [[Fraction(x) for x in row] for row in matrix]
    ncols = len(rows[0])
    rank = 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inverse = 1 / rows[rank][col]
        rows[rank] = [x * inverse for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col] != 0:
                factor = rows[i][col]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def bc_component(component: Component) -> ParameterMap:
    """Base change on one real component: target labels and coordinate map.

    Each gl2 label ell lands on the pair {ell, -ell} sharing the source
    coordinate; each gl1 label lands on 0 with the coordinate doubled.
    """
    q = component.shape.q
    r = component.shape.r
    labels = []
    for ell in component.orbit.gl2_labels:
        labels.append(ell)
        labels.append(-ell)
    labels.extend(0 for _ in range(r))
    target = ComplexComponent(tuple(labels))

    dim_source = component.dimension
    matrix: list[tuple[int, ...]] = []
    for i in range(q):
        row = tuple(1 if j == i else 0 for j in range(dim_source))
        matrix.append(row)
        matrix.append(row)
    for i in range(r):
        matrix.append(tuple(2 if j == q + i else 0 for j in range(dim_source)))
    return ParameterMap(component, target, tuple(matrix))


def is_proper(pmap: ParameterMap) -> bool:
    """Function form of ParameterMap.is_proper, for catalog sweeps."""
    return pmap.is_proper


def bc_point_real(point: RealTemperedPoint) -> ComplexTemperedPoint:
    """Base change on one tempered-dual point, returned in canonical form."""
    point = canonicalize_point(point)
    component = point.component
    q = component.shape.q
    pairs = []
    for ell, t in zip(component.orbit.gl2_labels, point.params[:q]):
        pairs.append((ell, t))
        pairs.append((-ell, t))
    for t in point.params[q:]:
        pairs.append((0, 2.0 * t))
    pairs.sort()
    target = ComplexComponent(tuple(label for label, _ in pairs))
    params = tuple(t for _, t in pairs)
    return ComplexTemperedPoint(target, params)


@dataclass(frozen=True)
class InducedKMap:
    """Induced map on K-theory in one degree, as images of the source
    generators.  Generators absent from ``assignments`` map to zero."""

    source: KGroupPresentation
    target: KGroupPresentation
    assignments: tuple[tuple[str, KClass], ...]

    def __post_init__(self) -> None:
        ordered = tuple(sorted(self.assignments, key=lambda kv: kv[0]))
        object.__setattr__(self, "assignments", ordered)
        known = set(self.source.generator_keys)
        seen = set()
        for key, cls in ordered:
            if key not in known:
                raise ValueError(f"assignment for {key!r}, which is not a source generator")
            if key in seen:
                raise ValueError(f"generator {key!r} assigned twice")
            seen.add(key)
            if cls.presentation != self.target:
                raise ValueError(f"image of {key!r} lives in the wrong presentation")

    @property
    def is_zero(self) -> bool:
        return all(cls.is_zero for _, cls in self.assignments)

    @property
    def support(self) -> tuple[str, ...]:
        return tuple(key for key, cls in self.assignments if not cls.is_zero)

    def image_of(self, key: str) -> KClass:
        if key not in self.source.generator_keys:
            raise ValueError(f"{key!r} is not a source generator")
        for k, cls in self.assignments:
            if k == key:
                return cls
        return kclass(self.target)


def induced_k_map(n: int, cutoff: int) -> InducedKMap:
    """Map on K-theory induced by base change, in the only live degree n mod 2.

    Base change sends the real tempered dual into the complex one, and a
    proper continuous map pulls compactly supported K-theory back, so the
    induced map runs from the complex catalog to the real one.  A complex
    generator pulls back to a real generator X with coefficient 1 exactly
    when the parameter map of X lands on it with degree-one affine
    geometry: q = 0, equal dimensions, free target.  Coordinate doubling is
    ignored because t -> 2t can be deformed to the identity through proper
    maps.  For n = 1 this matches both character lines onto the winding-0
    generator; for n >= 2 no component qualifies and the map is zero.
    """
    k0c, k1c = k_complex(n, cutoff)
    k0r, k1r = k_real(n, cutoff)
    degree = n % 2
    source = k0c if degree == 0 else k1c
    target = k0r if degree == 0 else k1r

    images: dict[str, dict[str, int]] = {key: {} for key in source.generator_keys}
    target_keys = set(target.generator_keys)
    for real_component in target.generators:
        pmap = bc_component(real_component)
        if not pmap.is_proper:
            continue
        if real_component.shape.q != 0:
            continue
        if pmap.target.dimension != real_component.dimension:
            continue
        if not pmap.target.is_free:
            continue
        complex_key = pmap.target.key
        if complex_key in images and real_component.key in target_keys:
            images[complex_key][real_component.key] = (
                images[complex_key].get(real_component.key, 0) + 1
            )
    assignments = tuple(
        (key, kclass(target, coeffs)) for key, coeffs in images.items() if coeffs
    )
    return InducedKMap(source, target, assignments)


def pullback(kmap: InducedKMap, cls: KClass) -> KClass:
    """Linear extension of the induced map to an arbitrary class."""
    if cls.presentation != kmap.source:
        raise ValueError("class does not live in the map's source presentation")
    total = kclass(kmap.target)
    for key, coeff in cls.items:
        total = kclass_add(total, kclass_scale(kmap.image_of(key), coeff))
    return total
