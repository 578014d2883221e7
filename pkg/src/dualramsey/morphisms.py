"""The four morphism classes, staged membership checks, and composition.

Membership checks return Verdicts whose stage names the first failing
condition in a fixed scan order, so a rejection is reproducible and
explains itself. The strong-rigid-quotient checks reduce arc-level rigidity
to the plain rigid-surjection verdict on the induced map between pair
chains; for ordered oriented graphs that happens once per leg, forward
arcs first, then backward arcs reversed.

compose() re-checks class membership of the composite and raises
ContractViolation if it ever fails; closure under composition is a theorem,
so that branch firing means a bug here.
"""
from __future__ import annotations

from enum import Enum

from .chains import (
    Chain,
    Verdict,
    VertexMorphism,
    align_morphism,
    compose_vertex,
    identity,
    is_rigid_surjection,
)
from .errors import ContractViolation, InvalidInput, PreconditionError
from .graphs import (
    LinExtDigraph,
    OrderedOrientedGraph,
    backward_part_reversed,
    forward_part,
    induced_arc_map,
    is_quotient_map,
)


class MorphismClass(Enum):
    """Which category a membership or hom-set question lives in."""

    CH_EMB = "ch-emb"
    CH_RS = "ch-rs"
    EDIG_SRQ = "edig-srq"
    OOGRA_SRQ = "oogra-srq"

    @classmethod
    def from_tag(cls, tag: str) -> "MorphismClass":
        for member in cls:
            if member.value == tag:
                return member
        raise InvalidInput(
            f"unknown morphism class {tag!r}; pick one of "
            + ", ".join(m.value for m in cls)
        )


OBJECT_KIND = {
    MorphismClass.CH_EMB: Chain,
    MorphismClass.CH_RS: Chain,
    MorphismClass.EDIG_SRQ: LinExtDigraph,
    MorphismClass.OOGRA_SRQ: OrderedOrientedGraph,
}


def object_chain(obj) -> Chain:
    return obj if isinstance(obj, Chain) else obj.chain


def check_object_kind(obj, cls: MorphismClass) -> None:
    kind = OBJECT_KIND[cls]
    if not isinstance(obj, kind):
        raise InvalidInput(f"{cls.value} expects {kind.__name__} objects, got {type(obj).__name__}")


def is_chain_embedding(f: VertexMorphism) -> Verdict:
    """Injective and strictly order-preserving between chains."""
    seen: dict = {}
    for v, w in zip(f.source.vertices, f.images):
        if w in seen:
            return Verdict(False, "injective", (seen[w], v))
        seen[w] = v
    for w1, w2 in zip(f.images, f.images[1:]):
        if not f.target.less(w1, w2):
            return Verdict(False, "order", (w1, w2))
    return Verdict(True)


def is_srq_edig(f: VertexMorphism, p: LinExtDigraph, q: LinExtDigraph) -> Verdict:
    """Staged strong-rigid-quotient check for forward-only digraphs.

    Stage "homomorphism" rejects the first arc (in pair order) whose image
    is neither a loop nor an arc of q; for forward-only arcs this condition
    and well-definedness of the arc lift are the same thing, so they share
    the stage. The surviving lift then takes the plain rigid-surjection
    verdict, whose stages pass through unchanged.
    """
    lifted = induced_arc_map(f, p, q)
    if not lifted:
        return Verdict(False, "homomorphism", lifted.witness)
    rigid = is_rigid_surjection(lifted.arc_map)
    if not rigid:
        return Verdict(False, rigid.stage, rigid.witness)
    return Verdict(True, arc_map=lifted.arc_map)


def is_srq_oograph(
    f: VertexMorphism, g: OrderedOrientedGraph, h: OrderedOrientedGraph
) -> Verdict:
    """Staged strong-rigid-quotient check for ordered oriented graphs.

    A vertex-level homomorphism stage runs first (witness = first offending
    arc in position order, with its image). Then each split leg takes the
    forward-only check; a leg failure keeps that check's stage, prefixed
    "forward:" or "backward:". Accepted verdicts carry both arc lifts as
    arc_map = (forward, backward).
    """
    if f.source.label_set() != g.chain.label_set():
        raise InvalidInput("morphism source labels differ from the source graph")
    if f.target.label_set() != h.chain.label_set():
        raise InvalidInput("morphism target labels differ from the target graph")
    fmap = dict(zip(f.source.vertices, f.images))
    for u, v in g.sorted_arcs():
        fu, fv = fmap[u], fmap[v]
        if fu != fv and (fu, fv) not in h.arcs:
            return Verdict(False, "homomorphism", ((u, v), (fu, fv)))
    fwd = is_srq_edig(f, forward_part(g), forward_part(h))
    if not fwd:
        return Verdict(False, f"forward:{fwd.stage}", fwd.witness)
    bwd = is_srq_edig(f, backward_part_reversed(g), backward_part_reversed(h))
    if not bwd:
        return Verdict(False, f"backward:{bwd.stage}", bwd.witness)
    return Verdict(True, arc_map=(fwd.arc_map, bwd.arc_map))


def is_member(f: VertexMorphism, cls: MorphismClass, source, target) -> Verdict:
    """Membership of f in the class, between the given objects.

    Morphisms are matched to the objects by label sets; the objects' own
    vertex orders are the ones that count.
    """
    check_object_kind(source, cls)
    check_object_kind(target, cls)
    if cls is MorphismClass.CH_EMB:
        return is_chain_embedding(align_morphism(f, source, target))
    if cls is MorphismClass.CH_RS:
        return is_rigid_surjection(align_morphism(f, source, target))
    aligned = align_morphism(f, source.chain, target.chain)
    if cls is MorphismClass.EDIG_SRQ:
        return is_srq_edig(aligned, source, target)
    return is_srq_oograph(aligned, source, target)


def identity_morphism(obj) -> VertexMorphism:
    return identity(object_chain(obj))


def compose(
    outer: VertexMorphism, inner: VertexMorphism, cls: MorphismClass, objects
) -> VertexMorphism:
    """Composite outer . inner with membership checked on the way in and out.

    objects is the triple (a, b, c) with inner: a -> b and outer: b -> c.
    Bad inputs raise PreconditionError; a composite that fails membership
    raises ContractViolation, because closure is a theorem.
    """
    a, b, c = objects
    v_in = is_member(inner, cls, a, b)
    if not v_in:
        raise PreconditionError(
            f"inner morphism is not {cls.value} (stage {v_in.stage}, witness {v_in.witness!r})"
        )
    v_out = is_member(outer, cls, b, c)
    if not v_out:
        raise PreconditionError(
            f"outer morphism is not {cls.value} (stage {v_out.stage}, witness {v_out.witness!r})"
        )
    composite = compose_vertex(
        align_morphism(outer, object_chain(b), object_chain(c)),
        align_morphism(inner, object_chain(a), object_chain(b)),
    )
    closure = is_member(composite, cls, a, c)
    if not closure:
        raise ContractViolation(
            f"composite left {cls.value} at stage {closure.stage}; closure law broken"
        )
    return composite


def derived_rigid_surjection_and_quotient(
    f: VertexMorphism, g: OrderedOrientedGraph, h: OrderedOrientedGraph
) -> bool:
    """An accepted graph-level srq is also a vertex-level rigid surjection and
    a quotient map. Callers hand in an accepted morphism; the conjunction is
    then a theorem and should never come back False."""
    verdict = is_srq_oograph(f, g, h)
    if not verdict:
        raise PreconditionError(
            f"defined for accepted srq morphisms only (stage {verdict.stage})"
        )
    aligned = align_morphism(f, g.chain, h.chain)
    return bool(is_rigid_surjection(aligned)) and is_quotient_map(aligned, g, h)


def min_preimage_lemma_check(arc_lift: VertexMorphism, s) -> bool:
    """min f^-1(min S) should equal min f^-1(S) for a rigid surjection f.

    arc_lift is any surjective VertexMorphism (in practice the arc lift from
    an accepted srq verdict); s is a nonempty subset of its target labels.
    """
    subset = {tuple(x) if isinstance(x, list) else x for x in s}
    if not subset:
        raise PreconditionError("the subset must be nonempty")
    for x in subset:
        if x not in arc_lift.target:
            raise PreconditionError(f"{x!r} is not a target label")
    rigid = is_rigid_surjection(arc_lift)
    if not rigid:
        raise PreconditionError(f"not a rigid surjection (stage {rigid.stage})")
    min_s = min(subset, key=arc_lift.target.position)
    pre_of_min = min(
        (v for v in arc_lift.source if arc_lift.apply(v) == min_s),
        key=arc_lift.source.position,
    )
    pre_of_set = min(
        (v for v in arc_lift.source if arc_lift.apply(v) in subset),
        key=arc_lift.source.position,
    )
    return pre_of_min == pre_of_set
