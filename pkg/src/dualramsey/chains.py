"""Chains (finite linear orders), vertex maps, and rigid surjections.

A chain is a nonempty sequence of distinct hashable labels; the order is the
listing order and labels are otherwise opaque. Rigid surjections (surjective
maps whose minimal preimages increase along the target) are the workhorse
morphisms downstream, and the specialised pair/set orders defined here are
what the arc-level rigidity checks sort by.

Each order comes in two forms on purpose: a predicate written from its
defining clauses and a sort key derived independently. Tests pin the two
against each other; code that needs to sort uses the key.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb, factorial
from typing import Any, Iterable, Iterator

from .errors import GuardExceeded, InvalidInput, PreconditionError

Label = Any
Pair = tuple


def jsonify(value):
    """Recursively turn tuples and frozensets into JSON-friendly lists."""
    if isinstance(value, (tuple, list)):
        return [jsonify(v) for v in value]
    if isinstance(value, (set, frozenset)):
        return sorted((jsonify(v) for v in value), key=repr)
    return value


@dataclass(frozen=True)
class Verdict:
    """Outcome of a membership check: accepted, or rejected at a named stage.

    Rejections carry the earliest witness in the check's canonical scan
    order. Arc-level checks attach the induced map on arcs-with-loops in
    arc_map when they accept.
    """

    accepted: bool
    stage: str | None = None
    witness: Any = None
    arc_map: Any = None

    def __bool__(self) -> bool:
        return self.accepted

    def to_json(self) -> dict:
        return {
            "accepted": self.accepted,
            "stage": self.stage,
            "witness": jsonify(self.witness),
        }


@dataclass(frozen=True)
class Chain:
    """A nonempty finite linear order. Labels are distinct; order is positional."""

    vertices: tuple

    def __post_init__(self) -> None:
        vs = tuple(self.vertices)
        object.__setattr__(self, "vertices", vs)
        if not vs:
            raise InvalidInput("a chain must have at least one vertex")
        pos: dict = {}
        for i, v in enumerate(vs):
            if v in pos:
                raise InvalidInput(f"duplicate chain label {v!r}")
            pos[v] = i
        object.__setattr__(self, "_pos", pos)
        object.__setattr__(self, "_labels", frozenset(pos))

    @classmethod
    def standard(cls, n: int) -> "Chain":
        """The chain 1 < 2 < ... < n."""
        if n < 1:
            raise InvalidInput("a standard chain needs n >= 1")
        return cls(tuple(range(1, n + 1)))

    def position(self, label: Label) -> int:
        try:
            return self._pos[label]
        except KeyError:
            raise InvalidInput(f"label {label!r} is not on the chain") from None

    def less(self, a: Label, b: Label) -> bool:
        return self.position(a) < self.position(b)

    def label_set(self) -> frozenset:
        return self._labels

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self) -> Iterator:
        return iter(self.vertices)

    def __contains__(self, label: Label) -> bool:
        return label in self._pos

    def to_json(self) -> dict:
        return {"vertices": list(self.vertices)}

    @classmethod
    def from_json(cls, data) -> "Chain":
        if not isinstance(data, dict) or "vertices" not in data:
            raise InvalidInput('chain JSON needs a "vertices" field')
        return cls(tuple(data["vertices"]))


def concat(a: Chain, b: Chain) -> Chain:
    """Concatenate two label-disjoint chains; all of a comes before all of b."""
    overlap = a.label_set() & b.label_set()
    if overlap:
        raise InvalidInput(f"chains share labels {sorted(overlap, key=repr)}")
    return Chain(a.vertices + b.vertices)


def relabel_chain(chain: Chain, mapping) -> Chain:
    """Rename labels through a mapping, keeping the order. Collisions are rejected."""
    missing = [v for v in chain if v not in mapping]
    if missing:
        raise InvalidInput(f"relabeling misses chain labels {missing}")
    return Chain(tuple(mapping[v] for v in chain))


@dataclass(frozen=True)
class VertexMorphism:
    """A total map between chains, stored as the image tuple in source order."""

    source: Chain
    target: Chain
    images: tuple

    def __post_init__(self) -> None:
        imgs = tuple(self.images)
        object.__setattr__(self, "images", imgs)
        if len(imgs) != len(self.source):
            raise InvalidInput("image tuple length must match the source chain")
        for w in imgs:
            if w not in self.target:
                raise InvalidInput(f"image {w!r} is not a target label")

    @classmethod
    def from_mapping(cls, source: Chain, target: Chain, mapping) -> "VertexMorphism":
        missing = [v for v in source if v not in mapping]
        if missing:
            raise InvalidInput(f"map misses source labels {missing}")
        return cls(source, target, tuple(mapping[v] for v in source))

    def apply(self, label: Label) -> Label:
        return self.images[self.source.position(label)]

    @property
    def mapping(self) -> dict:
        return dict(zip(self.source.vertices, self.images))

    def image_positions(self) -> tuple:
        return tuple(self.target.position(w) for w in self.images)

    def is_surjective(self) -> bool:
        return set(self.images) == set(self.target.vertices)

    def is_injective(self) -> bool:
        return len(set(self.images)) == len(self.images)

    def to_json(self) -> dict:
        keys = [str(v) for v in self.source.vertices]
        if len(set(keys)) != len(keys):
            raise InvalidInput("source labels collide as JSON keys; relabel first")
        return {
            "source": self.source.to_json(),
            "target": self.target.to_json(),
            "map": dict(zip(keys, (jsonify(w) for w in self.images))),
        }

    @classmethod
    def from_json(cls, data) -> "VertexMorphism":
        try:
            source = Chain.from_json(data["source"])
            target = Chain.from_json(data["target"])
            raw = data["map"]
        except (KeyError, TypeError):
            raise InvalidInput(
                'morphism JSON needs "source", "target" and "map" fields'
            ) from None
        mapping = {}
        for v in source:
            if v in raw:
                mapping[v] = raw[v]
            elif str(v) in raw:
                mapping[v] = raw[str(v)]
            else:
                raise InvalidInput(f"map misses source label {v!r}")
        return cls.from_mapping(source, target, mapping)


def identity(chain: Chain) -> VertexMorphism:
    return VertexMorphism(chain, chain, chain.vertices)


def compose_vertex(outer: VertexMorphism, inner: VertexMorphism) -> VertexMorphism:
    """Pointwise composite outer . inner; the middle label sets must agree."""
    if inner.target.label_set() != outer.source.label_set():
        raise InvalidInput("not composable: middle label sets differ")
    return VertexMorphism(
        inner.source, outer.target, tuple(outer.apply(w) for w in inner.images)
    )


def align_morphism(f: VertexMorphism, source: Chain, target: Chain) -> VertexMorphism:
    """Re-seat f's label map on the given chains.

    Objects own the order: a morphism handed in with the same label sets but
    its own vertex listing is interpreted against the objects' listing.
    """
    if f.source.label_set() != source.label_set():
        raise InvalidInput("morphism source labels do not match the object")
    if f.target.label_set() != target.label_set():
        raise InvalidInput("morphism target labels do not match the object")
    if f.source == source and f.target == target:
        return f
    return VertexMorphism(source, target, tuple(f.apply(v) for v in source))


# ---------------------------------------------------------------------------
# Orders on pairs and label sets.


def alex_pair_less(p: Pair, q: Pair, chain: Chain) -> bool:
    """Anti-lexicographic pair order: second coordinates decide first."""
    (a1, a2), (b1, b2) = p, q
    if chain.less(a2, b2):
        return True
    if a2 == b2:
        return chain.less(a1, b1)
    return False


def alex_pair_key(p: Pair, chain: Chain) -> tuple:
    a1, a2 = p
    return (chain.position(a2), chain.position(a1))


def characteristic_vector(x: Iterable, chain: Chain) -> tuple:
    """0/1 membership vector of the set x, read in chain order."""
    xs = set(x)
    for v in xs:
        chain.position(v)
    return tuple(1 if v in xs else 0 for v in chain)


def alex_set_less(x: Iterable, y: Iterable, chain: Chain) -> bool:
    """Set order: a proper subset comes first; otherwise the largest
    label on which the sets disagree decides, smaller side first."""
    xs, ys = set(x), set(y)
    for v in xs | ys:
        chain.position(v)
    if xs == ys:
        return False
    if xs < ys:
        return True
    if ys < xs:
        return False
    mx = max(xs - ys, key=chain.position)
    my = max(ys - xs, key=chain.position)
    return chain.less(mx, my)


def alex_set_key(x: Iterable, chain: Chain) -> tuple:
    """Sort key for alex_set_less: the characteristic vector read top-down."""
    xs = set(x)
    for v in xs:
        chain.position(v)
    return tuple(1 if v in xs else 0 for v in reversed(chain.vertices))


def sal_less(p: Pair, q: Pair, chain: Chain) -> bool:
    """Pair order used to line up arcs-with-loops: diagonal pairs first (by
    coordinate), then non-diagonal pairs grouped by two-element support in
    the set order, ties inside a support broken by the pair order."""
    (a1, a2), (b1, b2) = p, q
    for v in (a1, a2, b1, b2):
        chain.position(v)
    p_diag, q_diag = a1 == a2, b1 == b2
    if p_diag and q_diag:
        return chain.less(a1, b1)
    if p_diag:
        return True
    if q_diag:
        return False
    if {a1, a2} == {b1, b2}:
        return alex_pair_less(p, q, chain)
    return alex_set_less({a1, a2}, {b1, b2}, chain)


def sal_key(p: Pair, chain: Chain) -> tuple:
    """Total sort key for sal_less; agreement with the clauses is pinned by tests."""
    a1, a2 = p
    if a1 == a2:
        return (0, (chain.position(a1),), ())
    return (1, alex_set_key({a1, a2}, chain), alex_pair_key(p, chain))


# ---------------------------------------------------------------------------
# Rigid surjections.


def is_rigid_surjection(f: VertexMorphism) -> Verdict:
    """Surjective, with minimal preimages strictly increasing along the target.

    Rejections name the first missing target label (stage "surjective") or
    the first consecutive target pair whose minimal preimages fail to
    increase (stage "min_preimage").
    """
    firsts: dict = {}
    for i, w in enumerate(f.images):
        firsts.setdefault(w, i)
    for w in f.target:
        if w not in firsts:
            return Verdict(False, "surjective", w)
    for x, y in zip(f.target.vertices, f.target.vertices[1:]):
        # strict increase on consecutive pairs gives it on all pairs
        if firsts[x] >= firsts[y]:
            return Verdict(False, "min_preimage", (x, y))
    return Verdict(True)


def is_initial_segment_preserving(f: VertexMorphism) -> bool:
    """Does every initial segment of the source map onto an initial segment?

    For surjections this is equivalent to rigidity; the equivalence is a
    test hook, so both predicates ship.
    """
    if not f.is_surjective():
        raise PreconditionError("initial-segment check is for surjections only")
    seen: set = set()
    for w in f.images:
        seen.add(w)
        if seen != set(f.target.vertices[: len(seen)]):
            return False
    return True


def enumerate_rigid_surjections(
    a: Chain, b: Chain, *, max_chain: int = 10
) -> list[VertexMorphism]:
    """All rigid surjections a -> b, lexicographic in target-position tuples.

    Images grow along a; at every prefix the used targets must form an
    initial segment, so the only legal images are the targets used so far
    plus the next fresh one. That invariant is rigidity itself, which makes
    the enumeration complete without a post-filter.
    """
    if len(a) > max_chain or len(b) > max_chain:
        raise GuardExceeded(
            f"chain of more than {max_chain} elements; pass max_chain to override"
        )
    n, k = len(a), len(b)
    out: list[VertexMorphism] = []
    if k > n:
        return out
    images: list = []

    def grow(i: int, used: int) -> None:
        if i == n:
            if used == k:
                out.append(VertexMorphism(a, b, tuple(images)))
            return
        if k - used > n - i:  # not enough room left to hit every target
            return
        for j in range(min(used + 1, k)):
            images.append(b.vertices[j])
            grow(i + 1, max(used, j + 1))
            images.pop()

    grow(0, 0)
    return out


def count_rigid_surjections(a: Chain, b: Chain) -> int:
    """|rigid surjections a -> b| in closed form.

    A rigid surjection is determined by its kernel partition (blocks ordered
    by their minima), so the count is the number of partitions of an |a|-set
    into |b| blocks.
    """
    n, k = len(a), len(b)
    if k > n:
        return 0
    total = sum((-1) ** i * comb(k, i) * (k - i) ** n for i in range(k + 1))
    return total // factorial(k)
