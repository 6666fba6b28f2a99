"""Small helpers for vertex sets stored as Python ints (bit ``v`` set <=> vertex ``v`` present)."""

from __future__ import annotations

from typing import Iterable, Iterator


def iter_bits(x: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``x`` in increasing order."""
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def bits_list(x: int) -> list[int]:
    return list(iter_bits(x))


def lowest_bit(x: int) -> int:
    """Index of the lowest set bit; ``x`` must be nonzero."""
    return (x & -x).bit_length() - 1


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def union_of(adj: list[int] | tuple[int, ...], vertices: int) -> int:
    """Union of ``adj[v]`` over the vertices in the mask ``vertices``."""
    out = 0
    for v in iter_bits(vertices):
        out |= adj[v]
    return out


def bfs_layers(adj, sources: int, allowed: int) -> list[int]:
    """Plain BFS on the induced subgraph on ``allowed``; returns the layer masks.

    ``sources`` must be a subset of ``allowed``.
    """
    layers = [sources]
    seen = sources
    frontier = sources
    while frontier:
        nxt = union_of(adj, frontier) & allowed & ~seen
        if not nxt:
            break
        layers.append(nxt)
        seen |= nxt
        frontier = nxt
    return layers


def trace_back(adj, layers: list[int], v: int, depth: int) -> list[int]:
    """Walk from ``v`` (in ``layers[depth]``) back to layer 0; returns [v, ..., source]."""
    path = [v]
    for d in range(depth - 1, -1, -1):
        v = lowest_bit(adj[v] & layers[d])
        path.append(v)
    return path
