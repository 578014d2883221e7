"""Hom-set enumeration and counting, with size guards.

Graph hom-sets are generated by backtracking over vertex images in source
order. Two prunings only: an arc whose endpoints are both decided must map
to a loop or an arc of the right direction, and nothing else is assumed
until a full map is handed to the staged membership check. Surjectivity or
rigidity shortfalls are therefore caught at leaves, not predicted.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterator

from .chains import Chain, VertexMorphism, count_rigid_surjections, enumerate_rigid_surjections
from .errors import GuardExceeded
from .morphisms import MorphismClass, check_object_kind, is_member, object_chain

DEFAULT_MAX_VERTICES = 8
DEFAULT_MAX_CHAIN = 10


@dataclass(frozen=True)
class HomSet:
    """An enumerated hom-set; morphisms are in canonical order."""

    cls: MorphismClass
    source: object
    target: object
    morphisms: tuple

    def __len__(self) -> int:
        return len(self.morphisms)

    def __iter__(self) -> Iterator[VertexMorphism]:
        return iter(self.morphisms)


def _guard_sizes(a, b, cls, max_vertices, max_chain) -> None:
    chain_class = cls in (MorphismClass.CH_EMB, MorphismClass.CH_RS)
    limit = max_chain if chain_class else max_vertices
    kind = "chain" if chain_class else "graph"
    for obj in (a, b):
        n = len(object_chain(obj))
        if n > limit:
            raise GuardExceeded(
                f"{kind} with {n} vertices is over the guard of {limit}; "
                "pass a larger guard to override"
            )


def _iter_chain_embeddings(a: Chain, b: Chain) -> Iterator[VertexMorphism]:
    for positions in combinations(range(len(b)), len(a)):
        yield VertexMorphism(a, b, tuple(b.vertices[j] for j in positions))


def _iter_graph_homs(a, b, cls: MorphismClass) -> Iterator[VertexMorphism]:
    src, dst = a.chain, b.chain
    n = len(src)
    spos = {v: i for i, v in enumerate(src.vertices)}
    dpos = {w: j for j, w in enumerate(dst.vertices)}
    # an arc is checkable once its later endpoint gets an image
    pending: list[list] = [[] for _ in range(n)]
    for u, v in a.arcs:
        iu, iv = spos[u], spos[v]
        pending[max(iu, iv)].append((iu, iv))
    images: list = [None] * n

    def arc_ok(iu: int, iv: int) -> bool:
        fu, fv = images[iu], images[iv]
        if fu == fv:
            return True
        if (fu, fv) not in b.arcs:
            return False
        # arc direction relative to the order must be preserved
        return (dpos[fu] < dpos[fv]) == (iu < iv)

    def grow(i: int) -> Iterator[VertexMorphism]:
        if i == n:
            f = VertexMorphism(src, dst, tuple(images))
            if is_member(f, cls, a, b):
                yield f
            return
        for w in dst.vertices:
            images[i] = w
            if all(arc_ok(iu, iv) for iu, iv in pending[i]):
                yield from grow(i + 1)
        images[i] = None

    yield from grow(0)


def iter_homset(
    a,
    b,
    cls: MorphismClass,
    *,
    max_vertices: int = DEFAULT_MAX_VERTICES,
    max_chain: int = DEFAULT_MAX_CHAIN,
) -> Iterator[VertexMorphism]:
    """Yield hom(a, b) in canonical order.

    Canonical means lexicographic in target-position tuples, source vertices
    scanned in chain order. Guards bound the object sizes, not the output.
    """
    check_object_kind(a, cls)
    check_object_kind(b, cls)
    _guard_sizes(a, b, cls, max_vertices, max_chain)
    if cls is MorphismClass.CH_EMB:
        yield from _iter_chain_embeddings(a, b)
    elif cls is MorphismClass.CH_RS:
        yield from enumerate_rigid_surjections(a, b, max_chain=max_chain)
    else:
        yield from _iter_graph_homs(a, b, cls)


def enumerate_homset(
    a,
    b,
    cls: MorphismClass,
    *,
    max_vertices: int = DEFAULT_MAX_VERTICES,
    max_chain: int = DEFAULT_MAX_CHAIN,
) -> HomSet:
    morphisms = tuple(
        iter_homset(a, b, cls, max_vertices=max_vertices, max_chain=max_chain)
    )
    return HomSet(cls, a, b, morphisms)


def count_homset(
    a,
    b,
    cls: MorphismClass,
    *,
    max_vertices: int = DEFAULT_MAX_VERTICES,
    max_chain: int = DEFAULT_MAX_CHAIN,
) -> int:
    """|hom(a, b)|, closed-form for the chain classes.

    Chain embeddings are choices of image positions; rigid surjections are
    kernel partitions. Graph classes count by generation.
    """
    check_object_kind(a, cls)
    check_object_kind(b, cls)
    _guard_sizes(a, b, cls, max_vertices, max_chain)
    if cls is MorphismClass.CH_EMB:
        return comb(len(b), len(a))
    if cls is MorphismClass.CH_RS:
        return count_rigid_surjections(a, b)
    return sum(1 for _ in _iter_graph_homs(a, b, cls))
