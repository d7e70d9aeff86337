"""Staged emptiness scans and replayable membership certificates.

A scan runs every graph of one order through a prune-then-decide
pipeline: parameter and degree rules first, a connectivity cut next,
and the exact membership decision only for the survivors. Graphs come
either from the internal isomorph-free generator (small orders) or
from an external graph6 stream. Reports are deterministic up to the
wall-clock field, so census results can be diffed between runs.

Certificates package one membership verdict together with enough
witness material that a verifier can replay it structurally, without
redoing the search that produced it.
"""

from __future__ import annotations

import json
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations, islice, repeat
from math import floor
from typing import Iterable, Iterator, TextIO

from .generate import GENERATION_CAP, generate_connected
from .graphs import (
    GRAPH6_HEADER,
    Graph,
    Graph6Error,
    degree_profile,
    induced_subgraph,
    parse_graph6,
    vertex_connectivity,
    write_graph6,
)
from .membership import (
    BAD_DELETION_SET,
    DEFAULT_RULES,
    RULE_ORDER,
    WRONG_LENGTH,
    ClassKind,
    ClassParams,
    membership,
    parameter_emptiness,
    required_connectivity,
    theorem_max_degree,
)
from .walks import (
    circumference,
    detour_order,
    hamilton_cycle,
    hamilton_path,
    is_cycle_in,
    is_path_in,
)

log = logging.getLogger(__name__)

SOURCE_GENERATOR = "gen"
SOURCE_STREAM = "stream"


class CertificateError(ValueError):
    """The record cannot even be read as a certificate."""


@dataclass(frozen=True)
class Certificate:
    graph6: str
    kind: ClassKind
    k: int
    verdict: str
    reason: str | None
    found_length: int | None
    witness_set: tuple[int, ...] | None
    witness_walks: tuple[tuple[int, ...], ...] | None

    def to_json(self) -> str:
        return json.dumps(
            {
                "graph6": self.graph6,
                "class": self.kind.value,
                "k": self.k,
                "verdict": self.verdict,
                "reason": self.reason,
                "found_length": self.found_length,
                "witness_set": None if self.witness_set is None else list(self.witness_set),
                "witness_walks": None
                if self.witness_walks is None
                else [list(w) for w in self.witness_walks],
            },
            separators=(",", ":"),
        )


_CERT_KEYS = frozenset(
    ("graph6", "class", "k", "verdict", "reason", "found_length", "witness_set", "witness_walks")
)


def _plain_int(x: object) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def parse_certificate(line: str) -> Certificate:
    try:
        obj = json.loads(line)
    except ValueError as exc:
        raise CertificateError(f"not a certificate record: {exc}") from exc
    if not isinstance(obj, dict) or set(obj) != _CERT_KEYS:
        raise CertificateError("certificate fields missing or unknown")
    graph6 = obj["graph6"]
    if not isinstance(graph6, str):
        raise CertificateError("graph6 must be a string")
    try:
        kind = ClassKind(obj["class"])
    except ValueError as exc:
        raise CertificateError(f"unknown class {obj['class']!r}") from exc
    k = obj["k"]
    if not _plain_int(k) or k < 1:
        raise CertificateError("k must be a positive integer")
    verdict = obj["verdict"]
    if verdict not in ("member", "refuted"):
        raise CertificateError(f"unknown verdict {verdict!r}")
    reason = obj["reason"]
    if reason not in (None, WRONG_LENGTH, BAD_DELETION_SET):
        raise CertificateError(f"unknown reason {reason!r}")
    found = obj["found_length"]
    if found is not None and not _plain_int(found):
        raise CertificateError("found_length must be an integer or null")
    wset = obj["witness_set"]
    if wset is not None:
        if not isinstance(wset, list) or not all(_plain_int(v) for v in wset):
            raise CertificateError("witness_set must be a vertex array or null")
        wset = tuple(wset)
    walks = obj["witness_walks"]
    if walks is not None:
        bad = not isinstance(walks, list) or not all(
            isinstance(w, list) and all(_plain_int(v) for v in w) for w in walks
        )
        if bad:
            raise CertificateError("witness_walks must be an array of vertex arrays or null")
        walks = tuple(tuple(w) for w in walks)
    return Certificate(graph6, kind, k, verdict, reason, found, wset, walks)


def certify(g: Graph, params: ClassParams, *, include_walks: bool = True) -> Certificate:
    """Decide membership and package the verdict with its witnesses.

    Without walks a member certificate is a bare claim that verifiers
    must re-decide; with them (the default) verification replays the
    per-deletion walks structurally.
    """
    verdict = membership(g, params, collect_walks=include_walks)
    g6 = write_graph6(g)
    if verdict.member:
        walks = (
            None
            if verdict.deletion_walks is None
            else tuple(w.vertices for w in verdict.deletion_walks)
        )
        return Certificate(g6, params.kind, params.k, "member", None, verdict.found_length, None, walks)
    if verdict.reason == WRONG_LENGTH:
        walks = None if verdict.witness is None else (verdict.witness.vertices,)
        return Certificate(
            g6, params.kind, params.k, "refuted", WRONG_LENGTH, verdict.found_length, None, walks
        )
    return Certificate(
        g6, params.kind, params.k, "refuted", BAD_DELETION_SET, None, verdict.bad_set, None
    )


def _walk_ok(g: Graph, kind: ClassKind, verts: tuple[int, ...]) -> bool:
    return is_cycle_in(g, verts) if kind is ClassKind.GAMMA else is_path_in(g, verts)


def verify_certificate(cert: Certificate) -> bool:
    """Replay a certificate against its embedded graph.

    Walk witnesses are validated structurally. The one exact search a
    member certificate still needs is the longest-walk length: valid
    per-deletion walks alone cannot rule out a longer walk in the full
    graph (complete graphs would certify as members otherwise). Refuting
    deletion sets are re-searched, and a claimed length shorter than the
    target is re-derived, since no walk can witness an upper bound.
    """
    try:
        g = parse_graph6(cert.graph6)
    except Graph6Error as exc:
        raise CertificateError(f"embedded graph does not parse: {exc}") from exc
    kind, k = cert.kind, cert.k
    target = g.n - k
    if kind is ClassKind.GAMMA and target < 3:
        return False
    if kind is ClassKind.PI and target < 1:
        return False

    if cert.verdict == "member":
        if cert.reason is not None or cert.witness_set is not None:
            return False
        if cert.found_length is not None and cert.found_length != target:
            return False
        if cert.witness_walks is None:
            return membership(g, ClassParams(k, kind)).member
        exact = circumference(g)[0] if kind is ClassKind.GAMMA else detour_order(g)[0]
        if exact != target:
            return False
        drops = list(combinations(range(g.n), k))
        if len(cert.witness_walks) != len(drops):
            return False
        for drop, walk in zip(drops, cert.witness_walks):
            if len(walk) != target or set(walk) & set(drop):
                return False
            if not _walk_ok(g, kind, walk):
                return False
        return True

    if cert.reason == WRONG_LENGTH:
        found = cert.found_length
        if found is None or found == target or cert.witness_set is not None:
            return False
        if cert.witness_walks is not None:
            if len(cert.witness_walks) != 1:
                return False
            walk = cert.witness_walks[0]
            if len(walk) != found or not _walk_ok(g, kind, walk):
                return False
            if found > target:
                return True
        exact = circumference(g)[0] if kind is ClassKind.GAMMA else detour_order(g)[0]
        return exact == found

    if cert.reason == BAD_DELETION_SET:
        if cert.found_length is not None or cert.witness_walks is not None:
            return False
        drop = cert.witness_set
        if drop is None or len(drop) != k or len(set(drop)) != k:
            return False
        if not all(0 <= v < g.n for v in drop):
            return False
        keep = [v for v in range(g.n) if v not in drop]
        sub = induced_subgraph(g, keep)
        walk = hamilton_cycle(sub) if kind is ClassKind.GAMMA else hamilton_path(sub)
        return walk is None

    return False


@dataclass(frozen=True)
class ScanSpec:
    n: int
    params: ClassParams
    source: str = SOURCE_GENERATOR
    prune_rules: frozenset[str] = DEFAULT_RULES

    def __post_init__(self) -> None:
        if self.source not in (SOURCE_GENERATOR, SOURCE_STREAM):
            raise ValueError(f"source must be gen or stream, got {self.source!r}")
        if self.source == SOURCE_GENERATOR and self.n > GENERATION_CAP:
            raise ValueError(
                f"internal generation stops at order {GENERATION_CAP}; stream order {self.n} instead"
            )
        unknown = set(self.prune_rules) - set(RULE_ORDER)
        if unknown:
            raise ValueError(f"unknown prune rules {sorted(unknown)}")
        floor_needed = 3 if self.params.kind is ClassKind.GAMMA else 1
        if self.n - self.params.k < floor_needed:
            raise ValueError(f"order {self.n} leaves no room at k={self.params.k}")


@dataclass(frozen=True)
class EmptinessReport:
    spec: ScanSpec
    total_examined: int
    pruned_per_rule: dict[str, int]
    fully_decided: int
    members_found: tuple[str, ...]
    wall_seconds: float


def first_violated_rule(g: Graph, params: ClassParams, rules: frozenset[str]) -> str | None:
    """Cheapest-first staged rules; the first hit takes the attribution.

    The order threshold is a parameter-only fact and carries no claim at
    k=1, where members below any classical bound are ruled out by search
    rather than by formula.
    """
    n = g.n
    prof = None
    for rule in RULE_ORDER:
        if rule not in rules:
            continue
        if rule == "order_threshold":
            if params.k >= 2 and parameter_emptiness(n, params):
                return rule
        elif rule == "min_degree":
            prof = prof or degree_profile(g)
            if prof.min_degree < required_connectivity(params):
                return rule
        elif rule == "max_degree":
            prof = prof or degree_profile(g)
            if prof.max_degree > theorem_max_degree(n, params):
                return rule
        elif rule == "holton_sheehan":
            if params.kind is ClassKind.GAMMA and params.k == 1:
                prof = prof or degree_profile(g)
                if 2 * prof.max_degree > n - 4:
                    return rule
        elif rule == "connectivity":
            kappa = 0 if n == 1 else vertex_connectivity(g)
            if kappa < required_connectivity(params):
                return rule
    return None


def _generator_ceiling(spec: ScanSpec) -> int | None:
    cap = None
    if "max_degree" in spec.prune_rules:
        cap = floor(theorem_max_degree(spec.n, spec.params))
    if (
        "holton_sheehan" in spec.prune_rules
        and spec.params.kind is ClassKind.GAMMA
        and spec.params.k == 1
    ):
        hs = (spec.n - 4) // 2
        cap = hs if cap is None else min(cap, hs)
    return cap


def _iter_stream(stream: Iterable[str], n: int, tally: list[int]) -> Iterator[Graph]:
    for lineno, raw in enumerate(stream, 1):
        line = raw.strip()
        if lineno == 1 and line.startswith(GRAPH6_HEADER):
            line = line[len(GRAPH6_HEADER) :].strip()
        if not line:
            continue
        try:
            g = parse_graph6(line)
        except Graph6Error as exc:
            tally[0] += 1
            log.warning("record %d skipped: %s", lineno, exc)
            continue
        if g.n != n:
            tally[0] += 1
            log.warning("record %d skipped: order %d in an order-%d scan", lineno, g.n, n)
            continue
        yield g


def _decide_chunk(
    graphs: list[Graph], params: ClassParams, rules: frozenset[str]
) -> tuple[dict[str, int], int, list[str]]:
    counts: dict[str, int] = {}
    decided = 0
    members = []
    for g in graphs:
        rule = first_violated_rule(g, params, rules)
        if rule is not None:
            counts[rule] = counts.get(rule, 0) + 1
            continue
        decided += 1
        if membership(g, params).member:
            members.append(write_graph6(g))
    return counts, decided, members


def _chunks(graphs: Iterator[Graph], size: int) -> Iterator[list[Graph]]:
    while True:
        block = list(islice(graphs, size))
        if not block:
            return
        yield block


def scan(spec: ScanSpec, stream: Iterable[str] | TextIO | None = None, *, workers: int = 1) -> EmptinessReport:
    """Examine every graph of order spec.n from the chosen source.

    The max-degree ceiling (and the optional classical one at k=1) is
    pushed into the generator when its rule is enabled: graphs above the
    ceiling are never materialized, so they appear in no count. Reports
    from parallel chunks merge commutatively and members_found is sorted,
    making the report independent of completion order.
    """
    start = time.perf_counter()
    tally = [0]
    if spec.source == SOURCE_STREAM:
        if stream is None:
            raise ValueError("stream source needs an input stream")
        graphs: Iterator[Graph] = _iter_stream(stream, spec.n, tally)
    else:
        cap = _generator_ceiling(spec)
        if cap is not None and cap < 0:
            graphs = iter(())
        else:
            graphs = generate_connected(spec.n, max_degree=cap)

    pruned = {rule: 0 for rule in RULE_ORDER if rule in spec.prune_rules}
    total = 0
    decided = 0
    members: list[str] = []
    if workers > 1:

        def blocks() -> Iterator[list[Graph]]:
            nonlocal total
            for block in _chunks(graphs, 256):
                total += len(block)
                yield block

        with ProcessPoolExecutor(max_workers=workers) as pool:
            for block_counts, block_decided, block_members in pool.map(
                _decide_chunk, blocks(), repeat(spec.params), repeat(spec.prune_rules)
            ):
                for rule, c in block_counts.items():
                    pruned[rule] += c
                decided += block_decided
                members.extend(block_members)
    else:
        for g in graphs:
            total += 1
            rule = first_violated_rule(g, spec.params, spec.prune_rules)
            if rule is not None:
                pruned[rule] += 1
                continue
            decided += 1
            if membership(g, spec.params).member:
                members.append(write_graph6(g))
    if tally[0]:
        log.warning("%d malformed or mismatched records skipped", tally[0])
    wall = time.perf_counter() - start
    return EmptinessReport(spec, total, pruned, decided, tuple(sorted(members)), wall)
