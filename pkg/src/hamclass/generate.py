"""Isomorph-free generation of small connected graphs.

Orderly augmentation: a graph on m+1 vertices is produced from its
deletion parent, the graph left after removing one vertex of the
canonical orbit. Growing every connected parent by every attachment
subset and keeping a child only when its newest vertex lands in that
orbit yields each isomorphism class exactly once. Two accepted children
of one parent can still coincide (the parent's own symmetries), so a
per-parent set of canonical forms removes those; children of distinct
parents never collide because the deletion parent is determined up to
isomorphism.

The canonical orbit is the set of non-cutvertices minimizing
(degree, refined cell position, marked canonical code); the first two
components are cheap and settle almost every candidate before the code
is needed. Non-cutvertices keep parents connected, and every connected
graph has at least two of them, so no class is orphaned.

An optional degree ceiling is applied while augmenting. Deleting a
vertex never raises a degree, so the parent of a ceiling-respecting
graph respects the ceiling too and the truncated tree still covers
every such class.
"""

from __future__ import annotations

from typing import Iterator

from .canon import canonical_form, marked_code, refine
from .graphs import MAX_ORDER, Graph, bits, closure_mask

GENERATION_CAP = 10


def _non_cutvertices(g: Graph) -> list[int]:
    full = g.vertex_mask
    out = []
    for u in range(g.n):
        rem = full ^ (1 << u)
        seed = rem & -rem
        if closure_mask(g.adj, rem, seed) == rem:
            out.append(u)
    return out


def _newest_is_canonical(child: Graph) -> bool:
    v = child.n - 1
    live = _non_cutvertices(child)
    dv = child.degree(v)
    dmin = min(child.degree(u) for u in live)
    if dv > dmin:
        return False
    ties = [u for u in live if child.degree(u) == dv]
    if ties == [v]:
        return True
    cells = refine(child.adj, [tuple(range(child.n))])
    pos = {u: i for i, cell in enumerate(cells) for u in cell}
    low = min(pos[u] for u in ties)
    if pos[v] > low:
        return False
    ties = [u for u in ties if pos[u] == low]
    if ties == [v]:
        return True
    code_v = marked_code(child, v)
    return all(code_v <= marked_code(child, u) for u in ties if u != v)


def _children(parent: Graph, max_degree: int | None) -> Iterator[Graph]:
    m = parent.n
    rows = parent.adj
    for attach in range(1, 1 << m):
        if max_degree is not None:
            if attach.bit_count() > max_degree:
                continue
            if any(rows[u].bit_count() >= max_degree for u in bits(attach)):
                continue
        new_rows = tuple(
            rows[u] | (1 << m) if attach >> u & 1 else rows[u] for u in range(m)
        )
        yield Graph(m + 1, new_rows + (attach,))


def generate_connected(n: int, *, max_degree: int | None = None) -> Iterator[Graph]:
    """All connected graphs of order n, one per isomorphism class.

    max_degree keeps only graphs with every degree at or below it, pruning
    during augmentation rather than filtering afterwards.
    """
    if not 1 <= n <= min(GENERATION_CAP, MAX_ORDER):
        raise ValueError(f"order {n} outside 1..{GENERATION_CAP}")
    if max_degree is not None and max_degree < 0:
        raise ValueError("negative degree ceiling")
    level: list[Graph] = [Graph(1, (0,))]
    if n == 1:
        yield from level
        return
    if max_degree == 0:
        return
    for m in range(1, n):
        grown: list[Graph] = []
        last = m + 1 == n
        for parent in level:
            seen: set[tuple[int, ...]] = set()
            for child in _children(parent, max_degree):
                if not _newest_is_canonical(child):
                    continue
                form = canonical_form(child)
                if form in seen:
                    continue
                seen.add(form)
                if last:
                    yield child
                else:
                    grown.append(child)
        level = grown
