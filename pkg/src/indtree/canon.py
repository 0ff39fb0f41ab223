"""Canonical labeling via partition refinement and individualization.

The canonical form of a (optionally vertex-colored) graph is the
lexicographically minimal row-major upper-triangle bit string of the
adjacency matrix, minimized over all labelings that respect the equitable
refinement of the color partition. Two graphs get equal forms exactly when
they are (color-preserving) isomorphic.

The backtracking search individualizes one vertex of the first non-singleton
cell at a time. Automorphisms discovered when two leaves tie on the minimal
encoding are reused to prune sibling branches, which keeps highly symmetric
inputs (empty graphs, complete bipartite blowups) from exploding; pruning
never changes the minimum, since a skipped branch is the image of an explored
one under a known automorphism.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .graph import Graph, GraphError, RootedGraph, bits

_MAX_STORED_AUTOMORPHISMS = 200


@dataclass(frozen=True)
class CanonicalForm:
    """Isomorphism-class certificate: equal ``data`` iff isomorphic.

    ``data`` embeds the vertex count and the color multiset, so forms of
    different sizes or colorings never collide. ``colors`` records the input
    assignment and does not participate in equality.
    """

    data: bytes
    n: int
    colors: tuple[int, ...] | None = field(default=None, compare=False)


def canonical_form(g: Graph, colors: Sequence[int] | None = None) -> CanonicalForm:
    """Canonical form of ``g``; ``colors`` assigns one int per vertex."""
    form, _ = canonical_labeling(g, colors)
    return form


def canonical_labeling(
    g: Graph, colors: Sequence[int] | None = None
) -> tuple[CanonicalForm, tuple[int, ...]]:
    """Canonical form plus one labeling achieving it.

    The labeling maps each original vertex to its canonical position; any
    relabeled copy of ``g`` yields the same form and an equivalent labeling.
    """
    n = g.n
    color_tuple: tuple[int, ...] | None = None
    if colors is not None:
        color_tuple = tuple(colors)
        if len(color_tuple) != n:
            raise GraphError(f"expected {n} colors, got {len(color_tuple)}")
    if n == 0:
        return CanonicalForm(_pack(0, color_tuple, 0), 0, color_tuple), ()

    if color_tuple is None:
        cells = [(1 << n) - 1]
    else:
        cells = [
            _mask_where(color_tuple, c) for c in sorted(set(color_tuple))
        ]
    code, perm = _search(g.adj, n, cells)
    return CanonicalForm(_pack(n, color_tuple, code), n, color_tuple), perm


def are_rooted_isomorphic(a: RootedGraph, b: RootedGraph) -> bool:
    """True iff some isomorphism maps ``a.root`` to ``b.root``.

    Implemented by giving the root a unique color and comparing canonical
    forms.
    """
    if a.graph.n != b.graph.n:
        return False
    ca = canonical_form(a.graph, _root_colors(a.graph.n, a.root))
    cb = canonical_form(b.graph, _root_colors(b.graph.n, b.root))
    return ca.data == cb.data


def _root_colors(n: int, root: int) -> tuple[int, ...]:
    return tuple(1 if v == root else 0 for v in range(n))


def _mask_where(colors: tuple[int, ...], value: int) -> int:
    m = 0
    for v, c in enumerate(colors):
        if c == value:
            m |= 1 << v
    return m


def _pack(n: int, colors: tuple[int, ...] | None, code: int) -> bytes:
    head = n.to_bytes(4, "big")
    if colors is None:
        head += b"\x00"
    else:
        head += b"\x01"
        head += b"".join(
            c.to_bytes(8, "big", signed=True) for c in sorted(colors)
        )
    nbits = n * (n - 1) // 2
    return head + code.to_bytes((nbits + 7) // 8 or 1, "big")


def _refine(adj: tuple[int, ...], cells: list[int]) -> list[int]:
    """Equitable refinement: split cells by degree into every cell, smallest
    degree first, until stable. Deterministic in the cell order, so the
    result is isomorphism-invariant."""
    changed = True
    while changed:
        changed = False
        for w in cells:
            for ci, c in enumerate(cells):
                if c.bit_count() == 1:
                    continue
                groups: dict[int, int] = {}
                for v in bits(c):
                    d = (adj[v] & w).bit_count()
                    groups[d] = groups.get(d, 0) | 1 << v
                if len(groups) > 1:
                    cells[ci : ci + 1] = [groups[d] for d in sorted(groups)]
                    changed = True
                    break
            if changed:
                break
    return cells


def _search(
    adj: tuple[int, ...], n: int, init_cells: list[int]
) -> tuple[int, tuple[int, ...]]:
    """Minimal encoding and a labeling achieving it."""
    best_code: int | None = None
    best_perm: list[int] | None = None
    best_inv: list[int] | None = None
    autos: list[tuple[int, ...]] = []

    def leaf(cells: list[int]) -> None:
        nonlocal best_code, best_perm, best_inv
        order = [c.bit_length() - 1 for c in cells]  # position -> vertex
        code = 0
        for i in range(n):
            ai = adj[order[i]]
            row = 0
            for j in range(i + 1, n):
                row = row << 1 | (ai >> order[j] & 1)
            code = code << (n - 1 - i) | row
        if best_code is None or code < best_code:
            best_code = code
            perm = [0] * n
            for pos, v in enumerate(order):
                perm[v] = pos
            best_perm = perm
            best_inv = order
        elif code == best_code and len(autos) < _MAX_STORED_AUTOMORPHISMS:
            assert best_inv is not None and best_perm is not None
            phi = [0] * n
            for pos, v in enumerate(order):
                phi[v] = best_inv[pos]
            if any(phi[v] != v for v in range(n)):
                autos.append(tuple(phi))

    def descend(cells: list[int], base: tuple[int, ...]) -> None:
        cells = _refine(adj, cells)
        target = -1
        for ci, c in enumerate(cells):
            if c.bit_count() > 1:
                target = ci
                break
        if target < 0:
            leaf(cells)
            return
        cell = cells[target]
        explored = 0
        for v in bits(cell):
            # skip v if an automorphism fixing the base maps it into an
            # already-explored sibling's orbit
            gens = [a for a in autos if all(a[b] == b for b in base)]
            orbit = 1 << v
            if gens:
                stack = [v]
                while stack:
                    u = stack.pop()
                    for a in gens:
                        w = a[u]
                        if not orbit >> w & 1:
                            orbit |= 1 << w
                            stack.append(w)
            if orbit & explored:
                continue
            explored |= 1 << v
            child = cells[:target] + [1 << v, cell & ~(1 << v)] + cells[target + 1 :]
            descend(child, base + (v,))

    descend(list(init_cells), ())
    assert best_code is not None and best_perm is not None
    return best_code, tuple(best_perm)
