"""Exact tools for simply laced hyperbolic root lattices and the
presentations of their groups over rings.

Everything is integer or rational arithmetic; no floats enter any
decision. A compiled kernel extension is used when available, with a
pure Python fallback selected automatically at import.
"""

from .kernels import BACKEND
from .errors import DomainError, InvariantViolation, KmxError, SingularMatrixError
from .diagram import (
    Diagram,
    DiagramType,
    build_diagram,
    catalog,
    catalog_names,
    classify,
    diagram_by_name,
    enumerate_hyperbolic,
    is_hyperbolic,
    is_isomorphic,
)
from .lattice import (
    apply_word,
    fundamental_weights,
    height,
    inner,
    is_real_root,
    norm,
    real_roots_up_to_height,
    reflect,
    signature,
    weyl_reduce_to_chamber,
)
from .geometry import (
    BOUND,
    facet_check,
    pq_cosh2,
    pq_cosh2_via_projection,
)
from .pairs import (
    Certificate,
    certificate_from_json,
    certificate_to_json,
    is_classically_prenilpotent,
    is_prenilpotent,
    oracle_weyl,
    reduce_to_certificate,
    span_scan_verdict,
    split_pair,
    verify_certificate,
)
from .ring import IntegerRing, PrimeField, ResidueRing, TableRing, galois4, ring_from_string
from .presentation import (
    kac_moody_presentation,
    parse_presentation,
    serialize_presentation,
    steinberg_presentation,
)
from .matrixcheck import h_identities_check, verify_all

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BOUND",
    "Certificate",
    "Diagram",
    "DiagramType",
    "DomainError",
    "IntegerRing",
    "InvariantViolation",
    "KmxError",
    "PrimeField",
    "ResidueRing",
    "SingularMatrixError",
    "TableRing",
    "__version__",
    "apply_word",
    "build_diagram",
    "catalog",
    "catalog_names",
    "certificate_from_json",
    "certificate_to_json",
    "classify",
    "diagram_by_name",
    "enumerate_hyperbolic",
    "facet_check",
    "fundamental_weights",
    "galois4",
    "h_identities_check",
    "height",
    "inner",
    "is_classically_prenilpotent",
    "is_hyperbolic",
    "is_isomorphic",
    "is_prenilpotent",
    "is_real_root",
    "kac_moody_presentation",
    "norm",
    "oracle_weyl",
    "parse_presentation",
    "pq_cosh2",
    "pq_cosh2_via_projection",
    "real_roots_up_to_height",
    "reduce_to_certificate",
    "reflect",
    "ring_from_string",
    "serialize_presentation",
    "signature",
    "span_scan_verdict",
    "split_pair",
    "steinberg_presentation",
    "verify_all",
    "verify_certificate",
    "weyl_reduce_to_chamber",
]
