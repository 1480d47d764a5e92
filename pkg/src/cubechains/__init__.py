"""Cube chains, discrete gradient fields and critical cells of directed path spaces."""

from .cubical import CubicalComplex, LabelSet, random_complex, standard_cube
from .euclid import (CriticalRoute, EuclideanComplex, embed, enumerate_critical_routes,
                     route_to_sequence, sequence_to_route)
from .homology import BettiReport, betti, conf_counts, generalized_conf_counts, homology_report
from .morse import DiscreteVectorField, critical, find_cycle, is_gradient, permutahedron_field
from .partitions import build_pk, permutahedron
from .poset import FinitePoset, ResourceLimitError, SimplicialComplex, order_complex
from .wk import (CriticalSequence, build_wk, critical_from_sequences, critical_inductive,
                 enumerate_critical_sequences, sigma)

__all__ = [
    "BettiReport", "CriticalRoute", "CriticalSequence", "CubicalComplex", "DiscreteVectorField",
    "EuclideanComplex", "FinitePoset", "LabelSet", "ResourceLimitError", "SimplicialComplex",
    "betti", "build_pk", "build_wk", "conf_counts", "critical", "critical_from_sequences",
    "critical_inductive", "embed", "enumerate_critical_routes", "enumerate_critical_sequences",
    "find_cycle", "generalized_conf_counts", "homology_report", "is_gradient", "order_complex",
    "permutahedron", "permutahedron_field", "random_complex", "route_to_sequence",
    "sequence_to_route", "sigma", "standard_cube",
]
