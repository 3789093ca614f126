"""Levi bookkeeping for GL(n, R): partitions into 2-blocks and 1-blocks,
their Weyl groups, and discrete-series orbit data.

Over R only blocks of size 1 and 2 carry discrete series, so an equivalence
class of Levi subgroups is determined by a pair (q, r) with 2q + r = n.  A
discrete-series datum on such a Levi is a multiset of q GL(2)-indices
(integers >= 1) together with a multiset of r GL(1)-characters of the
order-two component group (0 = trivial, 1 = sign), always kept in canonical
sorted form so that each Weyl orbit has exactly one representative.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement, groupby


@dataclass(frozen=True)
class LeviShape:
    """Partition n = 2q + r: q blocks of size 2 and r blocks of size 1."""

    q: int
    r: int

    def __post_init__(self) -> None:
        if self.q < 0 or self.r < 0:
            raise ValueError(f"block counts must be non-negative, got q={self.q}, r={self.r}")
        if self.n < 1:
            raise ValueError("empty shape: need 2q + r >= 1")

    @property
    def n(self) -> int:
        return 2 * self.q + self.r

    def __str__(self) -> str:
        return "+".join(["2"] * self.q + ["1"] * self.r)


@dataclass(frozen=True)
class WeylDescriptor:
    """Product of symmetric-group factors; degree 0 and 1 factors are dropped."""

    factor_degrees: tuple[int, ...]

    @property
    def is_trivial(self) -> bool:
        return not self.factor_degrees

    def __str__(self) -> str:
        if self.is_trivial:
            return "1"
        return " x ".join(f"S{d}" for d in self.factor_degrees)


@dataclass(frozen=True)
class SigmaOrbit:
    """Canonical Weyl orbit of discrete-series data on a shape (q, r).

    ``gl2_labels`` holds the q discrete-series indices (>= 1) and
    ``gl1_labels`` the r characters (0 or 1); both are stored sorted
    ascending, so two orbits are equal iff they are the same multisets.
    """

    gl2_labels: tuple[int, ...]
    gl1_labels: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "gl2_labels", tuple(sorted(self.gl2_labels)))
        object.__setattr__(self, "gl1_labels", tuple(sorted(self.gl1_labels)))
        if any(label < 1 for label in self.gl2_labels):
            raise ValueError(f"gl2 labels index discrete series and must be >= 1: {self.gl2_labels}")
        if any(label not in (0, 1) for label in self.gl1_labels):
            raise ValueError(f"gl1 labels must be 0 (trivial) or 1 (sign): {self.gl1_labels}")


@dataclass(frozen=True)
class IsotropyDescriptor:
    """Multiplicities (each >= 2) of repeated labels, gl2 block first."""

    multiplicities: tuple[int, ...]

    @property
    def is_trivial(self) -> bool:
        return not self.multiplicities


def enumerate_levi_shapes(n: int) -> list[LeviShape]:
    """All shapes for n in descending q; there are exactly floor(n/2) + 1."""
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    return [LeviShape(q, n - 2 * q) for q in range(n // 2, -1, -1)]


def weyl_group(shape: LeviShape) -> WeylDescriptor:
    """Block permutations of the Levi: S_q x S_r with trivial factors dropped."""
    return WeylDescriptor(tuple(d for d in (shape.q, shape.r) if d >= 2))


def isotropy(orbit: SigmaOrbit) -> IsotropyDescriptor:
    """Stabilizer of the orbit datum inside the Weyl group.

    A label repeated m times within its block contributes one S_m factor;
    equal labels in different blocks never merge.  The orbit is generic
    exactly when the result is trivial.
    """
    mults = []
    for block in (orbit.gl2_labels, orbit.gl1_labels):
        for _, run in groupby(block):
            m = len(list(run))
            if m >= 2:
                mults.append(m)
    return IsotropyDescriptor(tuple(mults))


def enumerate_orbits(shape: LeviShape, cutoff: int) -> list[SigmaOrbit]:
    """All orbits on the shape with gl2 labels drawn from {1..cutoff}.

    gl1 labels range over {0, 1} and need no truncation.  The order is
    lexicographic, gl2-major; the count is C(cutoff + q - 1, q) * (r + 1).
    """
    if cutoff < 1:
        raise ValueError(f"cutoff must be >= 1, got {cutoff}")
    out = []
    for gl2 in combinations_with_replacement(range(1, cutoff + 1), shape.q):
        for gl1 in combinations_with_replacement((0, 1), shape.r):
            out.append(SigmaOrbit(gl2, gl1))
    return out
