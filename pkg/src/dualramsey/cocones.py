"""Digraph pairs, the split/glue correspondence, and commuting cocones.

An ordered oriented graph splits into its forward part and its reversed
backward part, two forward-only digraphs on the same chain with disjoint
arc sets; gluing goes the other way, from a label-disjoint pair of digraphs
(with cocone legs into a common target) to one graph whose vertex order
puts the whole first component before the second. glue() can verify its
own output contract: the split of the glued graph returns the two inputs
arc-for-arc, and every piecewise leg is an accepted strong rigid quotient.
Those checks are theorems about the construction, so their failure raises
ContractViolation rather than returning a verdict.
"""
from __future__ import annotations

from dataclasses import dataclass

from .chains import Chain, VertexMorphism, concat
from .errors import ContractViolation, InvalidInput, PreconditionError
from .graphs import (
    LinExtDigraph,
    OrderedOrientedGraph,
    backward_part_reversed,
    forward_part,
)
from .morphisms import MorphismClass, compose, is_srq_edig, is_srq_oograph


@dataclass(frozen=True)
class EDigPair:
    """An ordered pair of forward-only digraphs."""

    first: LinExtDigraph
    second: LinExtDigraph

    def to_json(self) -> dict:
        return {"first": self.first.to_json(), "second": self.second.to_json()}

    @classmethod
    def from_json(cls, data) -> "EDigPair":
        try:
            return cls(
                LinExtDigraph.from_json(data["first"]),
                LinExtDigraph.from_json(data["second"]),
            )
        except (KeyError, TypeError):
            raise InvalidInput('pair JSON needs "first" and "second" digraphs') from None


def product_compose(outer, inner, objects) -> tuple:
    """Componentwise composite of morphism pairs between digraph pairs.

    objects is a triple of EDigPair; each component composes under the
    forward-only srq class with the usual membership checks.
    """
    a, b, c = objects
    first = compose(outer[0], inner[0], MorphismClass.EDIG_SRQ, (a.first, b.first, c.first))
    second = compose(outer[1], inner[1], MorphismClass.EDIG_SRQ, (a.second, b.second, c.second))
    return (first, second)


def split_oograph(g: OrderedOrientedGraph) -> EDigPair:
    """Forward part and reversed backward part, on the shared chain."""
    return EDigPair(forward_part(g), backward_part_reversed(g))


def is_in_subcategory_d(p: EDigPair) -> bool:
    """Is the pair a split of some ordered oriented graph?

    Literally: same chain, disjoint arc sets, and no arc of the first equal
    to a reversed arc of the second (the last is automatic for forward-only
    arcs on one chain, but the definition is checked as stated).
    """
    if p.first.chain != p.second.chain:
        return False
    if p.first.arcs & p.second.arcs:
        return False
    reversed_second = {(v, u) for (u, v) in p.second.arcs}
    return not (p.first.arcs & reversed_second)


def unsplit_pair(p: EDigPair) -> OrderedOrientedGraph:
    """Rebuild the graph whose split is p; inverse to split_oograph."""
    if not is_in_subcategory_d(p):
        raise PreconditionError("the pair is not a split of any ordered oriented graph")
    arcs = set(p.first.arcs) | {(v, u) for (u, v) in p.second.arcs}
    return OrderedOrientedGraph(p.first.chain, frozenset(arcs))


@dataclass(frozen=True)
class BottomVertex:
    """One bottom vertex of a binary shape: a target graph and two labeled
    arrows (u, i) and (v, j) into the i-th and j-th top copy."""

    target: OrderedOrientedGraph
    first: tuple
    second: tuple


@dataclass(frozen=True)
class BinaryShape:
    """A shape whose bottom vertices each point at two legs; out-degree two
    is structural here, one arrow pair per bottom vertex."""

    bottoms: tuple

    def __post_init__(self) -> None:
        object.__setattr__(self, "bottoms", tuple(self.bottoms))
        for bottom in self.bottoms:
            if not isinstance(bottom, BottomVertex):
                raise InvalidInput("shape bottoms must be BottomVertex entries")


@dataclass(frozen=True)
class BinaryCoconeData:
    """A label-disjoint digraph pair with cocone legs into one target graph.

    Legs are pairs (f_i, g_i): f_i maps the first component srq-onto the
    target's forward part, g_i maps the second component srq-onto the
    target's reversed backward part. Leg indices used by shapes are 1-based.
    """

    apex_first: LinExtDigraph
    apex_second: LinExtDigraph
    target: OrderedOrientedGraph
    legs: tuple
    shape: BinaryShape | None = None

    def __post_init__(self) -> None:
        legs = tuple((f, g) for f, g in self.legs)
        object.__setattr__(self, "legs", legs)
        if not legs:
            raise InvalidInput("a cocone needs at least one leg")
        overlap = self.apex_first.chain.label_set() & self.apex_second.chain.label_set()
        if overlap:
            raise InvalidInput(
                f"apex components share labels {sorted(overlap, key=repr)}"
            )
        fwd = forward_part(self.target)
        bwd = backward_part_reversed(self.target)
        for idx, (f, g) in enumerate(legs, start=1):
            vf = is_srq_edig(f, self.apex_first, fwd)
            if not vf:
                raise InvalidInput(
                    f"leg {idx}: first component is not srq onto the forward part "
                    f"(stage {vf.stage}, witness {vf.witness!r})"
                )
            vg = is_srq_edig(g, self.apex_second, bwd)
            if not vg:
                raise InvalidInput(
                    f"leg {idx}: second component is not srq onto the reversed "
                    f"backward part (stage {vg.stage}, witness {vg.witness!r})"
                )


def glue(d: BinaryCoconeData, *, verify: bool = True):
    """Fuse the apex pair into one ordered oriented graph and extend the legs.

    The glued graph concatenates the chains (first component in front),
    keeps the first component's arcs forward, and installs the second
    component's arcs reversed. Each leg pair becomes one piecewise vertex
    map. With verify on, the output contract is asserted: splitting the
    glued graph returns the apex arc sets exactly, and every piecewise map
    is an accepted srq onto the target.
    """
    chain = concat(d.apex_first.chain, d.apex_second.chain)
    arcs = set(d.apex_first.arcs) | {(v, u) for (u, v) in d.apex_second.arcs}
    glued = OrderedOrientedGraph(chain, frozenset(arcs))
    phis = []
    for f, g in d.legs:
        images = tuple(f.apply(v) for v in d.apex_first.chain) + tuple(
            g.apply(w) for w in d.apex_second.chain
        )
        phis.append(VertexMorphism(chain, d.target.chain, images))
    phis = tuple(phis)
    if verify:
        _assert_glue_contract(d, glued, phis)
    return glued, phis


def _assert_glue_contract(d: BinaryCoconeData, glued, phis) -> None:
    pair = split_oograph(glued)
    if not is_in_subcategory_d(pair):
        raise ContractViolation("the glued graph does not split cleanly")
    if pair.first.arcs != d.apex_first.arcs:
        raise ContractViolation("forward part of the glued graph drifted from the first apex")
    if pair.second.arcs != d.apex_second.arcs:
        raise ContractViolation("reversed backward part drifted from the second apex")
    for i, phi in enumerate(phis, start=1):
        verdict = is_srq_oograph(phi, glued, d.target)
        if not verdict:
            raise ContractViolation(
                f"glued leg {i} is not srq (stage {verdict.stage}, witness {verdict.witness!r})"
            )


def check_commuting_cocone(d: BinaryCoconeData, phis) -> bool:
    """Do commuting shape squares stay commuting after gluing?

    For each bottom vertex with arrows (u, i) and (v, j): if u composed with
    leg i equals v composed with leg j on both components, then u composed
    with the i-th glued map must equal v composed with the j-th one on every
    glued vertex. Returns the conjunction over all bottom vertices; a shape
    with no commuting squares is vacuously fine. No shape means True.
    """
    if d.shape is None:
        return True
    if len(phis) != len(d.legs):
        raise InvalidInput("one glued map per leg is required")
    for bottom in d.shape.bottoms:
        u, i = bottom.first
        v, j = bottom.second
        for idx in (i, j):
            if not 1 <= idx <= len(d.legs):
                raise InvalidInput(f"leg index {idx} is out of range")
        for arrow, _idx in (bottom.first, bottom.second):
            if arrow.source.label_set() != d.target.chain.label_set():
                raise InvalidInput("bottom arrow source labels must match the cocone target")
            if arrow.target.label_set() != bottom.target.chain.label_set():
                raise InvalidInput("bottom arrow target labels must match the bottom object")
        fi, gi = d.legs[i - 1]
        fj, gj = d.legs[j - 1]
        commutes_first = all(
            u.apply(fi.apply(x)) == v.apply(fj.apply(x)) for x in d.apex_first.chain
        )
        commutes_second = all(
            u.apply(gi.apply(x)) == v.apply(gj.apply(x)) for x in d.apex_second.chain
        )
        if commutes_first and commutes_second:
            phi_i, phi_j = phis[i - 1], phis[j - 1]
            if any(
                u.apply(phi_i.apply(x)) != v.apply(phi_j.apply(x))
                for x in phi_i.source
            ):
                return False
    return True


def rigidity_comparison_cases(
    phi: VertexMorphism,
    glued: OrderedOrientedGraph,
    target: OrderedOrientedGraph,
    first_labels,
) -> dict:
    """Classify the min-preimage comparisons behind both rigidity legs.

    For an accepted srq out of a glued graph, each leg's rigidity check
    walks consecutive pairs of its target pair chain and compares minimal
    preimages. Every such minimum lies entirely inside one of the two glued
    parts; relative to the leg's own part (forward leg: the first part,
    backward leg: the second) a comparison is case 1 when both minima are
    own-part, case 2 when both sit in the other part, case 3 own-then-other,
    case 4 other-then-own. Returns {"forward": set, "backward": set}.
    """
    verdict = is_srq_oograph(phi, glued, target)
    if not verdict:
        raise PreconditionError(
            f"the case census needs an accepted srq (stage {verdict.stage})"
        )
    first = frozenset(first_labels)
    out = {}
    for name, lift, own_in_first in (
        ("forward", verdict.arc_map[0], True),
        ("backward", verdict.arc_map[1], False),
    ):
        firsts: dict = {}
        for pair, image in zip(lift.source.vertices, lift.images):
            firsts.setdefault(image, pair)
        cases = set()
        for x, y in zip(lift.target.vertices, lift.target.vertices[1:]):
            mx, my = firsts[x], firsts[y]
            x_own = (mx[0] in first) == own_in_first
            y_own = (my[0] in first) == own_in_first
            if x_own and y_own:
                cases.add(1)
            elif not x_own and not y_own:
                cases.add(2)
            elif x_own:
                cases.add(3)
            else:
                cases.add(4)
        out[name] = cases
    return out


# ---------------------------------------------------------------------------
# JSON forms.


def _morphism_pair_from_json(data) -> tuple:
    try:
        return (
            VertexMorphism.from_json(data["first"]),
            VertexMorphism.from_json(data["second"]),
        )
    except (KeyError, TypeError):
        raise InvalidInput('leg JSON needs "first" and "second" morphisms') from None


def cocone_from_json(data) -> BinaryCoconeData:
    try:
        apex_first = LinExtDigraph.from_json(data["apex_first"])
        apex_second = LinExtDigraph.from_json(data["apex_second"])
        target = OrderedOrientedGraph.from_json(data["target"])
        raw_legs = data["legs"]
    except (KeyError, TypeError):
        raise InvalidInput(
            'cocone JSON needs "apex_first", "apex_second", "target", "legs"'
        ) from None
    legs = tuple(_morphism_pair_from_json(leg) for leg in raw_legs)
    shape = None
    if data.get("shape") is not None:
        bottoms = []
        for raw in data["shape"].get("bottoms", ()):
            try:
                bottom_target = OrderedOrientedGraph.from_json(raw["target"])
                u_raw, i = raw["first"]
                v_raw, j = raw["second"]
            except (KeyError, TypeError, ValueError):
                raise InvalidInput(
                    'shape bottom JSON needs "target", "first": [morphism, i], '
                    '"second": [morphism, j]'
                ) from None
            bottoms.append(
                BottomVertex(
                    bottom_target,
                    (VertexMorphism.from_json(u_raw), int(i)),
                    (VertexMorphism.from_json(v_raw), int(j)),
                )
            )
        shape = BinaryShape(tuple(bottoms))
    return BinaryCoconeData(apex_first, apex_second, target, legs, shape)


def cocone_to_json(d: BinaryCoconeData) -> dict:
    out = {
        "apex_first": d.apex_first.to_json(),
        "apex_second": d.apex_second.to_json(),
        "target": d.target.to_json(),
        "legs": [
            {"first": f.to_json(), "second": g.to_json()} for f, g in d.legs
        ],
    }
    if d.shape is not None:
        out["shape"] = {
            "bottoms": [
                {
                    "target": bottom.target.to_json(),
                    "first": [bottom.first[0].to_json(), bottom.first[1]],
                    "second": [bottom.second[0].to_json(), bottom.second[1]],
                }
                for bottom in d.shape.bottoms
            ]
        }
    return out
