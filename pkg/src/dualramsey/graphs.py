"""Ordered oriented graphs and their forward/backward digraph parts.

Loops are implicit everywhere: arc sets store non-loop pairs only, and every
predicate treats (v, v) as present on each vertex v. An ordered oriented
graph carries a chain on its vertices and an orientation with no 2-cycles;
a LinExtDigraph is the forward-only special case, where every stored arc
agrees with the chain.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .chains import Chain, Verdict, VertexMorphism, relabel_chain, sal_key
from .errors import InvalidInput, PreconditionError


@dataclass(frozen=True)
class OrderedOrientedGraph:
    """A chain plus a loop-free arc set with no two-vertex cycles."""

    chain: Chain
    arcs: frozenset

    def __post_init__(self) -> None:
        arcs = frozenset(tuple(a) for a in self.arcs)
        object.__setattr__(self, "arcs", arcs)
        for u, v in arcs:
            if u not in self.chain or v not in self.chain:
                raise InvalidInput(f"arc ({u!r}, {v!r}) leaves the vertex set")
            if u == v:
                raise InvalidInput(f"loop on {u!r} must stay implicit")
            if (v, u) in arcs:
                raise InvalidInput(f"arcs ({u!r},{v!r}) and ({v!r},{u!r}) form a 2-cycle")

    def sorted_arcs(self) -> list:
        try:
            return self._sorted
        except AttributeError:
            pos = self.chain.position
            ordered = sorted(self.arcs, key=lambda a: (pos(a[0]), pos(a[1])))
            object.__setattr__(self, "_sorted", ordered)
            return ordered

    def to_json(self) -> dict:
        return {
            "vertices": list(self.chain.vertices),
            "arcs": [list(a) for a in self.sorted_arcs()],
        }

    @classmethod
    def from_json(cls, data) -> "OrderedOrientedGraph":
        if not isinstance(data, dict) or "vertices" not in data:
            raise InvalidInput('graph JSON needs "vertices" (and optionally "arcs")')
        chain = Chain(tuple(data["vertices"]))
        arcs = frozenset(tuple(a) for a in data.get("arcs", ()))
        return cls(chain, arcs)


@dataclass(frozen=True)
class LinExtDigraph:
    """A digraph whose non-loop arcs all run forward along its chain."""

    chain: Chain
    arcs: frozenset

    def __post_init__(self) -> None:
        arcs = frozenset(tuple(a) for a in self.arcs)
        object.__setattr__(self, "arcs", arcs)
        for u, v in arcs:
            # position() also rejects labels off the chain; u == v fails less()
            if not self.chain.less(u, v):
                raise InvalidInput(f"arc ({u!r}, {v!r}) does not run forward")

    def sorted_arcs(self) -> list:
        try:
            return self._sorted
        except AttributeError:
            pos = self.chain.position
            ordered = sorted(self.arcs, key=lambda a: (pos(a[0]), pos(a[1])))
            object.__setattr__(self, "_sorted", ordered)
            return ordered

    def to_json(self) -> dict:
        return {
            "vertices": list(self.chain.vertices),
            "arcs": [list(a) for a in self.sorted_arcs()],
        }

    @classmethod
    def from_json(cls, data) -> "LinExtDigraph":
        if not isinstance(data, dict) or "vertices" not in data:
            raise InvalidInput('digraph JSON needs "vertices" (and optionally "arcs")')
        chain = Chain(tuple(data["vertices"]))
        arcs = frozenset(tuple(a) for a in data.get("arcs", ()))
        return cls(chain, arcs)


@lru_cache(maxsize=None)
def forward_part(g: OrderedOrientedGraph) -> LinExtDigraph:
    """Keep the arcs that agree with the vertex order."""
    fwd = frozenset((u, v) for (u, v) in g.arcs if g.chain.less(u, v))
    return LinExtDigraph(g.chain, fwd)


@lru_cache(maxsize=None)
def backward_part_reversed(g: OrderedOrientedGraph) -> LinExtDigraph:
    """Reverse the arcs that disagree with the vertex order."""
    bwd = frozenset((v, u) for (u, v) in g.arcs if g.chain.less(v, u))
    return LinExtDigraph(g.chain, bwd)


def relabel_graph(g, mapping):
    """Rename a graph's labels through a mapping; works for both graph kinds."""
    chain = relabel_chain(g.chain, mapping)
    arcs = frozenset((mapping[u], mapping[v]) for (u, v) in g.arcs)
    return type(g)(chain, arcs)


def _check_label_sets(f: VertexMorphism, g, h) -> None:
    if f.source.label_set() != g.chain.label_set():
        raise InvalidInput("morphism source labels differ from the source graph")
    if f.target.label_set() != h.chain.label_set():
        raise InvalidInput("morphism target labels differ from the target graph")


def is_homomorphism(f: VertexMorphism, g, h) -> bool:
    """Arcs map to arcs; collapsing an arc to a vertex is fine (implicit loops)."""
    _check_label_sets(f, g, h)
    for u, v in g.arcs:
        fu, fv = f.apply(u), f.apply(v)
        if fu != fv and (fu, fv) not in h.arcs:
            return False
    return True


def is_embedding(f: VertexMorphism, g, h) -> bool:
    """Injective homomorphism that also reflects arcs."""
    _check_label_sets(f, g, h)
    if not f.is_injective() or not is_homomorphism(f, g, h):
        return False
    inverse = {f.apply(v): v for v in g.chain}
    for w1, w2 in h.arcs:
        if w1 in inverse and w2 in inverse and (inverse[w1], inverse[w2]) not in g.arcs:
            return False
    return True


def is_quotient_map(f: VertexMorphism, g, h) -> bool:
    """Surjective on vertices, with every target arc hit by some source arc."""
    if not is_homomorphism(f, g, h):
        raise PreconditionError("quotient maps must be homomorphisms")
    if not f.is_surjective():
        return False
    hit = {(f.apply(u), f.apply(v)) for (u, v) in g.arcs}
    return all(arc in hit for arc in h.arcs)


@lru_cache(maxsize=None)
def pair_chain(d) -> Chain:
    """Loops plus arcs of d as a chain, sorted by the pair order of d's chain."""
    pairs = [(v, v) for v in d.chain] + list(d.arcs)
    pairs.sort(key=lambda p: sal_key(p, d.chain))
    return Chain(tuple(pairs))


def induced_arc_map(f: VertexMorphism, p, q) -> Verdict:
    """Lift f to arcs-with-loops: (u, v) goes to (f(u), f(v)).

    Accepts iff every image is again a loop or an arc of q; the accepted
    verdict carries the lift as a VertexMorphism between the two pair
    chains, which is what the rigidity stages scan. Rejection witnesses are
    the first offending arc in pair order, with its image.
    """
    _check_label_sets(f, p, q)
    src = pair_chain(p)
    fmap = dict(zip(f.source.vertices, f.images))
    images = []
    for u, v in src:
        fu, fv = fmap[u], fmap[v]
        if fu != fv and (fu, fv) not in q.arcs:
            return Verdict(False, "arc_map", ((u, v), (fu, fv)))
        images.append((fu, fv))
    lift = VertexMorphism(src, pair_chain(q), tuple(images))
    return Verdict(True, arc_map=lift)


def to_dot(g, name: str = "g") -> str:
    """GraphViz DOT text; invisible heavy edges pin the vertex order left to right."""
    lines = [f'digraph "{name}" {{', "  rankdir=LR;", "  node [shape=circle];"]
    for v in g.chain:
        lines.append(f'  "{v}";')
    for u, v in zip(g.chain.vertices, g.chain.vertices[1:]):
        lines.append(f'  "{u}" -> "{v}" [style=invis, weight=100];')
    for u, v in g.sorted_arcs():
        lines.append(f'  "{u}" -> "{v}";')
    lines.append("}")
    return "\n".join(lines)
