"""Deciders for the two vertex-deletion Hamiltonicity classes.

A graph of order n belongs to the cycle class at level k when its
circumference is exactly n-k and every induced subgraph on n-k vertices
has a Hamilton cycle; the path class replaces circumference with detour
order and spanning cycles with spanning paths. Level 1 recovers the
hypohamiltonian and hypotraceable families.

Alongside the exact deciders live the derived necessary conditions:
degree ceilings, connectivity floors, and the order threshold below
which a class is empty outright. These power the scan pipeline's
pruning and the parameter-only emptiness check.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import combinations

from .graphs import Graph, degree_profile, induced_subgraph, vertex_connectivity
from .walks import (
    CycleWitness,
    PathWitness,
    circumference,
    detour_order,
    hamilton_cycle,
    hamilton_path,
    longest_induced_path_from,
)

WRONG_LENGTH = "wrong_length"
BAD_DELETION_SET = "bad_deletion_set"

RULE_ORDER = (
    "order_threshold",
    "min_degree",
    "max_degree",
    "holton_sheehan",
    "connectivity",
)
DEFAULT_RULES = frozenset(r for r in RULE_ORDER if r != "holton_sheehan")


class ClassKind(Enum):
    GAMMA = "gamma"
    PI = "pi"


@dataclass(frozen=True)
class ClassParams:
    k: int
    kind: ClassKind

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError(f"deletion count k must be positive, got {self.k}")


@dataclass(frozen=True)
class MembershipVerdict:
    member: bool
    reason: str | None
    found_length: int | None
    bad_set: tuple[int, ...] | None
    witness: CycleWitness | PathWitness | None
    deletion_walks: tuple[CycleWitness | PathWitness, ...] | None


def _target_length(g: Graph, params: ClassParams) -> int:
    k = params.k
    target = g.n - k
    if params.kind is ClassKind.GAMMA and target < 3:
        raise ValueError(f"no room for a cycle: order {g.n} minus {k} deleted")
    if params.kind is ClassKind.PI and target < 1:
        raise ValueError(f"no room for a path: order {g.n} minus {k} deleted")
    return target


def gamma_membership(g: Graph, k: int, *, collect_walks: bool = False) -> MembershipVerdict:
    """Decide cycle-class membership at level k.

    Circumference is compared first; deletion sets are then tried in
    lexicographic order and the first failure is reported, so refutations
    are reproducible.
    """
    params = ClassParams(k, ClassKind.GAMMA)
    target = _target_length(g, params)
    length, longest = circumference(g)
    if length != target:
        return MembershipVerdict(False, WRONG_LENGTH, length, None, longest, None)
    walks: list[CycleWitness] | None = [] if collect_walks else None
    for drop in combinations(range(g.n), k):
        keep = [v for v in range(g.n) if v not in drop]
        cyc = hamilton_cycle(induced_subgraph(g, keep))
        if cyc is None:
            return MembershipVerdict(False, BAD_DELETION_SET, None, drop, None, None)
        if walks is not None:
            walks.append(CycleWitness(tuple(keep[i] for i in cyc.vertices)))
    return MembershipVerdict(
        True, None, target, None, None, tuple(walks) if walks is not None else None
    )


def pi_membership(g: Graph, k: int, *, collect_walks: bool = False) -> MembershipVerdict:
    """Decide path-class membership at level k. Mirrors gamma_membership."""
    params = ClassParams(k, ClassKind.PI)
    target = _target_length(g, params)
    length, longest = detour_order(g)
    if length != target:
        return MembershipVerdict(False, WRONG_LENGTH, length, None, longest, None)
    walks: list[PathWitness] | None = [] if collect_walks else None
    for drop in combinations(range(g.n), k):
        keep = [v for v in range(g.n) if v not in drop]
        pth = hamilton_path(induced_subgraph(g, keep))
        if pth is None:
            return MembershipVerdict(False, BAD_DELETION_SET, None, drop, None, None)
        if walks is not None:
            walks.append(PathWitness(tuple(keep[i] for i in pth.vertices)))
    return MembershipVerdict(
        True, None, target, None, None, tuple(walks) if walks is not None else None
    )


def membership(g: Graph, params: ClassParams, *, collect_walks: bool = False) -> MembershipVerdict:
    if params.kind is ClassKind.GAMMA:
        return gamma_membership(g, params.k, collect_walks=collect_walks)
    return pi_membership(g, params.k, collect_walks=collect_walks)


def is_hypohamiltonian(g: Graph) -> bool:
    if g.n < 4:
        return False
    return gamma_membership(g, 1).member


def hypohamiltonian_direct(g: Graph) -> bool:
    """Textbook definition, deliberately not sharing the decider's code
    path: non-Hamiltonian, every single deletion Hamiltonian."""
    if g.n < 4 or hamilton_cycle(g) is not None:
        return False
    full = g.vertex_mask
    return all(
        hamilton_cycle(induced_subgraph(g, full ^ (1 << v))) is not None
        for v in range(g.n)
    )


def is_hypotraceable(g: Graph) -> bool:
    if g.n < 4:
        return False
    return pi_membership(g, 1).member


def hypotraceable_direct(g: Graph) -> bool:
    if g.n < 4 or hamilton_path(g) is not None:
        return False
    full = g.vertex_mask
    return all(
        hamilton_path(induced_subgraph(g, full ^ (1 << v))) is not None
        for v in range(g.n)
    )


def check_induced_path_property(g: Graph, k: int) -> int | None:
    """Smallest vertex heading no induced path of order k+1, or None.

    Members with k >= 2 must have such a path from every vertex, so a
    returned vertex refutes membership.
    """
    if k < 2:
        raise ValueError("induced-path property applies for k >= 2")
    want = k + 1
    for v in range(g.n):
        if longest_induced_path_from(g, v, stop_at=want).order < want:
            return v
    return None


def required_connectivity(params: ClassParams) -> int:
    return params.k + 2 if params.kind is ClassKind.GAMMA else params.k + 1


def connectivity_requirement(g: Graph, params: ClassParams) -> bool:
    if g.n == 1:
        return False
    return vertex_connectivity(g) >= required_connectivity(params)


def theorem_max_degree(n: int, params: ClassParams) -> Fraction:
    """Exact degree ceiling for a member of order n."""
    if n < 1:
        raise ValueError(f"order {n} must be positive")
    ksq = params.k * params.k
    num = n - ksq + 1 if params.kind is ClassKind.GAMMA else n - ksq
    return Fraction(num, 2)


def emptiness_threshold(params: ClassParams) -> int:
    """Smallest order not ruled out by the degree/connectivity clash.

    The class is provably empty for every order below the returned value
    when k >= 2; at k=1 the formula is still reported but carries no
    vacuity claim.
    """
    k = params.k
    return k * k + 2 * k + 3 if params.kind is ClassKind.GAMMA else k * k + 2 * k + 2


def parameter_emptiness(n: int, params: ClassParams) -> bool:
    """True when the degree window is empty on parameters alone: the
    ceiling falls below the connectivity-forced floor, so no graph of
    order n can satisfy both necessary conditions."""
    return theorem_max_degree(n, params) < required_connectivity(params)


@dataclass(frozen=True)
class BoundReport:
    n: int
    k: int
    kind: ClassKind
    min_degree_required: int
    max_degree_allowed: Fraction
    connectivity_required: int
    order_threshold: int
    violated: frozenset[str]


def bound_pipeline(g: Graph, params: ClassParams, *, holton_sheehan: bool = False) -> BoundReport:
    """Evaluate every necessary condition on one graph.

    All rules are checked (no short-circuit) so callers see the complete
    violation set. The classical (n-4)/2 hypohamiltonian ceiling is
    opt-in: it is inherited knowledge, not something re-proven here.
    """
    n = g.n
    k = params.k
    floor = required_connectivity(params)
    ceiling = theorem_max_degree(n, params)
    threshold = emptiness_threshold(params)
    prof = degree_profile(g)
    bad = set()
    if k >= 2 and n < threshold:
        bad.add("order_threshold")
    if prof.min_degree < floor:
        bad.add("min_degree")
    if prof.max_degree > ceiling:
        bad.add("max_degree")
    if (
        holton_sheehan
        and params.kind is ClassKind.GAMMA
        and k == 1
        and 2 * prof.max_degree > n - 4
    ):
        bad.add("holton_sheehan")
    kappa = 0 if n == 1 else vertex_connectivity(g)
    if kappa < floor:
        bad.add("connectivity")
    return BoundReport(n, k, params.kind, floor, ceiling, floor, threshold, frozenset(bad))
