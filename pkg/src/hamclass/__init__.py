"""Tools for graphs whose vertex-deleted subgraphs stay hamiltonian or traceable.

The two families studied here generalize hypohamiltonian and
hypotraceable graphs: a graph belongs to the cycle family at parameter k
when its longest cycle misses exactly k vertices yet every induced
subgraph of that order has a spanning cycle, and to the path family when
the analogous statements hold for paths after deleting any k vertices.
The package bundles exact solvers for the relevant invariants, degree
and order bounds that empty out small parameter ranges, an exhaustive
scanner with replayable certificates, and an auditor for the segment
counting arguments behind the degree bounds.
"""

from .attachment import (
    AttachmentConfig,
    ClaimIndexRecord,
    ClaimReport,
    ConfigError,
    build_config,
    consecutive_neighbor_check,
    degree_chain_audit,
    verify_gamma_claim,
    verify_pi_claims,
)
from .canon import are_isomorphic, canonical_form, canonical_graph6
from .generate import GENERATION_CAP, generate_connected
from .graphs import (
    Graph,
    Graph6Error,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    degree_profile,
    induced_subgraph,
    is_connected,
    parse_graph6,
    path_graph,
    petersen,
    vertex_connectivity,
    write_graph6,
)
from .membership import (
    BoundReport,
    ClassKind,
    ClassParams,
    MembershipVerdict,
    bound_pipeline,
    check_induced_path_property,
    connectivity_requirement,
    emptiness_threshold,
    gamma_membership,
    is_hypohamiltonian,
    is_hypotraceable,
    membership,
    parameter_emptiness,
    pi_membership,
    required_connectivity,
    theorem_max_degree,
)
from .search import (
    Certificate,
    CertificateError,
    EmptinessReport,
    ScanSpec,
    certify,
    parse_certificate,
    scan,
    verify_certificate,
)
from .walks import (
    CycleWitness,
    PathWitness,
    WitnessError,
    check_witness,
    circumference,
    detour_order,
    hamilton_cycle,
    hamilton_path,
)

__all__ = [
    "AttachmentConfig",
    "BoundReport",
    "Certificate",
    "CertificateError",
    "ClaimIndexRecord",
    "ClaimReport",
    "ClassKind",
    "ClassParams",
    "ConfigError",
    "CycleWitness",
    "EmptinessReport",
    "GENERATION_CAP",
    "Graph",
    "Graph6Error",
    "MembershipVerdict",
    "PathWitness",
    "ScanSpec",
    "WitnessError",
    "are_isomorphic",
    "bound_pipeline",
    "build_config",
    "canonical_form",
    "canonical_graph6",
    "certify",
    "check_induced_path_property",
    "check_witness",
    "circumference",
    "complete_bipartite",
    "complete_graph",
    "connectivity_requirement",
    "consecutive_neighbor_check",
    "cycle_graph",
    "degree_chain_audit",
    "degree_profile",
    "detour_order",
    "emptiness_threshold",
    "gamma_membership",
    "generate_connected",
    "hamilton_cycle",
    "hamilton_path",
    "induced_subgraph",
    "is_connected",
    "is_hypohamiltonian",
    "is_hypotraceable",
    "membership",
    "parameter_emptiness",
    "parse_certificate",
    "parse_graph6",
    "path_graph",
    "petersen",
    "pi_membership",
    "required_connectivity",
    "scan",
    "theorem_max_degree",
    "verify_certificate",
    "verify_gamma_claim",
    "verify_pi_claims",
    "vertex_connectivity",
    "write_graph6",
]

__version__ = "0.1.0"
