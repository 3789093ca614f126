"""Exact catalogs of the tempered duals of GL(n, R) and GL(n, C), the
K-theory of their reduced C*-algebras, and archimedean base change."""

__version__ = "0.1.0"

from .base_change import (
    InducedKMap,
    ParameterMap,
    bc_component,
    bc_point_real,
    induced_k_map,
    is_proper,
    pullback,
)
from .ktheory import (
    IndexFamily,
    KClass,
    KGroupPresentation,
    closed_form_complex,
    closed_form_real,
    k_complex,
    k_of_component,
    k_of_euclidean,
    k_real,
    kclass,
    kclass_add,
    kclass_scale,
)
from .levi import (
    IsotropyDescriptor,
    LeviShape,
    SigmaOrbit,
    WeylDescriptor,
    enumerate_levi_shapes,
    enumerate_orbits,
    isotropy,
    weyl_group,
)
from .param_space import (
    ComplexComponent,
    ComplexTemperedPoint,
    Component,
    ConeChart,
    RealTemperedPoint,
    canonicalize_point,
    complex_components,
    cone_chart,
    real_components,
)
from .weil import (
    ComplexCharacter,
    LParameterC,
    LParameterR,
    OneDim,
    RealCharacter,
    TwoDimInduced,
    langlands_complex,
    langlands_real,
    langlands_real_inverse,
    restrict,
)

__all__ = [
    "__version__",
    "ComplexCharacter",
    "ComplexComponent",
    "ComplexTemperedPoint",
    "Component",
    "ConeChart",
    "IndexFamily",
    "InducedKMap",
    "IsotropyDescriptor",
    "KClass",
    "KGroupPresentation",
    "LParameterC",
    "LParameterR",
    "LeviShape",
    "OneDim",
    "ParameterMap",
    "RealCharacter",
    "RealTemperedPoint",
    "SigmaOrbit",
    "TwoDimInduced",
    "WeylDescriptor",
    "bc_component",
    "bc_point_real",
    "canonicalize_point",
    "closed_form_complex",
    "closed_form_real",
    "complex_components",
    "cone_chart",
    "enumerate_levi_shapes",
    "enumerate_orbits",
    "induced_k_map",
    "is_proper",
    "isotropy",
    "k_complex",
    "k_of_component",
    "k_of_euclidean",
    "k_real",
    "kclass",
    "kclass_add",
    "kclass_scale",
    "langlands_complex",
    "langlands_real",
    "langlands_real_inverse",
    "pullback",
    "real_components",
    "restrict",
    "weyl_group",
]
