"""Exact computation in Steinberg algebras of graph groupoids and shift groupoids."""

from .algebra import Element, Enclosure, i_norm, identity, indicator, linear_combine, normalize
from .bisections import Basic, CylSet, disjointify, is_bisection, member, mul_basic
from .coeffs import GaussianRational
from .errors import SteinbergError
from .graph import Graph, Path, compose_paths, parse_graph, rose, validate_graph
from .lpa import LpaExpr, LpaNormal, phi, phi_inverse, reduce_lpa
from .points import (
    AperiodicPoint,
    EvPerPoint,
    GroupoidElement,
    canonical_point,
    fibonacci_point,
    groupoid_element,
)
from .representations import GeneratorAssignment, check_axioms, extend_pi, regular_rep_apply
from .uniqueness import (
    Certificate,
    ck_certificate,
    condition_L,
    graded_certificate,
    isotropy_group,
    verify_certificate,
)

__all__ = [
    "Element",
    "Enclosure",
    "i_norm",
    "identity",
    "indicator",
    "linear_combine",
    "normalize",
    "Basic",
    "CylSet",
    "disjointify",
    "is_bisection",
    "member",
    "mul_basic",
    "GaussianRational",
    "SteinbergError",
    "Graph",
    "Path",
    "compose_paths",
    "parse_graph",
    "rose",
    "validate_graph",
    "LpaExpr",
    "LpaNormal",
    "phi",
    "phi_inverse",
    "reduce_lpa",
    "AperiodicPoint",
    "EvPerPoint",
    "GroupoidElement",
    "canonical_point",
    "fibonacci_point",
    "groupoid_element",
    "GeneratorAssignment",
    "check_axioms",
    "extend_pi",
    "regular_rep_apply",
    "Certificate",
    "ck_certificate",
    "condition_L",
    "graded_certificate",
    "isotropy_group",
    "verify_certificate",
]

__version__ = "0.1.0"
