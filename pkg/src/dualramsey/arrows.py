"""Arrow relations, counterexample search, and the partition encoding.

The dual arrow c ->(k) b over a colors hom(c, a) with k colors and asks for
a morphism w in hom(c, b) whose composite set { g . w : g in hom(b, a) } is
monochromatic; the direct arrow colors hom(a, c) and composes on the other
side. Checking an instance reduces to a covering question over finite index
sets, so both checkers share one solver:

  * composite sets are precomputed per w, deduplicated, and frozen;
  * the backtracker searches for a coloring leaving every set
    non-monochromatic, scanning morphism indices in canonical order and
    colors in increasing order, restricted to colorings whose distinct
    colors first appear in increasing order. Any counterexample renames to
    such a coloring without getting lexicographically larger, so the first
    hit is the lexicographically least counterexample overall.
  * forward checking bans the one color that would complete an
    all-but-one-assigned monochromatic set.

A returned counterexample is re-verified against every composite set before
it leaves this module; a failure there is a ContractViolation. The naive
reference scans all k**n colorings in lexicographic order: a pure loop for
small hom-sets and, for two colors, a bit-packed numpy sweep that makes the
same scan feasible up to n around 32.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Any, Iterable, Iterator

import numpy as np

from .chains import Chain, VertexMorphism, compose_vertex, is_rigid_surjection, jsonify
from .errors import ContractViolation, GuardExceeded, InvalidInput, PreconditionError
from .homsets import DEFAULT_MAX_CHAIN, DEFAULT_MAX_VERTICES, HomSet, enumerate_homset
from .morphisms import MorphismClass

DEFAULT_MAX_HOMSET = 24
DEFAULT_MAX_COLORS = 4
NAIVE_MAX_HOMSET = 12
BITSET_MAX_HOMSET = 36
_BITSET_CHUNK = 1 << 22


@dataclass(frozen=True)
class Coloring:
    """A k-coloring of an enumerated hom-set, colors 1..k by morphism index."""

    k: int
    assignment: tuple

    def __post_init__(self) -> None:
        object.__setattr__(self, "assignment", tuple(self.assignment))
        if self.k < 1:
            raise InvalidInput("need at least one color")
        for c in self.assignment:
            if not 1 <= c <= self.k:
                raise InvalidInput(f"color {c!r} is outside 1..{self.k}")

    def to_json(self) -> dict:
        return {"k": self.k, "assignment": list(self.assignment)}


@dataclass(frozen=True)
class ArrowVerdict:
    """Whether the arrow relation holds; if not, the least bad coloring."""

    holds: bool
    counterexample: Coloring | None = None

    def __bool__(self) -> bool:
        return self.holds

    def to_json(self) -> dict:
        return {
            "holds": self.holds,
            "counterexample": None
            if self.counterexample is None
            else self.counterexample.to_json(),
        }


@dataclass(frozen=True)
class ArrowInstance:
    """A built arrow instance: the colored hom-set, the senders, and for each
    sender the indices (into the colored hom-set) of its composites."""

    mode: str
    colored: HomSet
    senders: HomSet
    composite_sets: tuple


def build_arrow_instance(
    c,
    b,
    a,
    cls: MorphismClass,
    *,
    mode: str = "dual",
    max_homset: int = DEFAULT_MAX_HOMSET,
    max_vertices: int = DEFAULT_MAX_VERTICES,
    max_chain: int = DEFAULT_MAX_CHAIN,
) -> ArrowInstance:
    """Enumerate the hom-sets of an arrow instance and index the composites.

    Dual mode colors hom(c, a), sends via w in hom(c, b), and composes with
    hom(b, a) on the outside; direct mode colors hom(a, c), sends via
    hom(b, c), and composes with hom(a, b) on the inside. Either way the
    middle hom-set must be nonempty for the relation to say anything.
    """
    if mode not in ("dual", "direct"):
        raise InvalidInput(f"mode must be 'dual' or 'direct', not {mode!r}")
    sizes = {"max_vertices": max_vertices, "max_chain": max_chain}
    if mode == "dual":
        middle = enumerate_homset(b, a, cls, **sizes)
        if not middle.morphisms:
            raise PreconditionError("hom(b, a) is empty; the dual arrow needs it")
        colored = enumerate_homset(c, a, cls, **sizes)
        senders = enumerate_homset(c, b, cls, **sizes)
    else:
        middle = enumerate_homset(a, b, cls, **sizes)
        if not middle.morphisms:
            raise PreconditionError("hom(a, b) is empty; the direct arrow needs it")
        colored = enumerate_homset(a, c, cls, **sizes)
        senders = enumerate_homset(b, c, cls, **sizes)
    if len(colored.morphisms) > max_homset:
        raise GuardExceeded(
            f"colored hom-set has {len(colored.morphisms)} morphisms, over the "
            f"guard of {max_homset}; pass a larger guard to override"
        )
    index = {m: i for i, m in enumerate(colored.morphisms)}
    sets = []
    for w in senders.morphisms:
        composites = set()
        for g in middle.morphisms:
            comp = compose_vertex(g, w) if mode == "dual" else compose_vertex(w, g)
            try:
                composites.add(index[comp])
            except KeyError:
                raise ContractViolation(
                    "a composite fell outside the enumerated hom-set; closure broken"
                ) from None
        sets.append(tuple(sorted(composites)))
    return ArrowInstance(mode, colored, senders, tuple(sets))


def _search_counterexample(n: int, k: int, sets: tuple) -> tuple | None:
    """Least coloring (colors 1..k, indices in order) leaving every set
    non-monochromatic, or None. See the module docstring for why the
    restricted-growth pruning keeps "least" honest."""
    if any(len(s) <= 1 for s in sets):
        return None  # an empty or singleton composite set is always monochromatic
    unique = sorted(set(sets))
    occ: list[list[int]] = [[] for _ in range(n)]
    for si, s in enumerate(unique):
        for i in s:
            occ[i].append(si)
    size = [len(s) for s in unique]
    last = [max(s) for s in unique]
    assigned = [0] * len(unique)
    mono = [0] * len(unique)  # 0 = nothing yet, -1 = mixed, else the color
    banned = [[0] * (k + 1) for _ in range(n)]
    color = [0] * n

    def place(i: int, c: int, trail: list) -> bool:
        ok = True
        for si in occ[i]:
            trail.append((si, assigned[si], mono[si]))
            assigned[si] += 1
            m = mono[si]
            if m == 0:
                mono[si] = c
            elif m != -1 and m != c:
                mono[si] = -1
            if mono[si] != -1:
                if assigned[si] == size[si]:
                    ok = False
                elif assigned[si] == size[si] - 1:
                    banned[last[si]][mono[si]] += 1
        return ok

    def unplace(i: int, trail: list) -> None:
        for si, prev_assigned, prev_mono in reversed(trail):
            if mono[si] != -1 and assigned[si] == size[si] - 1:
                banned[last[si]][mono[si]] -= 1
            assigned[si] = prev_assigned
            mono[si] = prev_mono

    def dfs(i: int, used: int) -> bool:
        if i == n:
            return True
        for c in range(1, min(used + 1, k) + 1):
            if banned[i][c]:
                continue
            color[i] = c
            trail: list = []
            if place(i, c, trail) and dfs(i + 1, max(used, c)):
                return True
            unplace(i, trail)
        color[i] = 0
        return False

    if dfs(0, 0):
        return tuple(color)
    return None


def _verify_counterexample(assignment: tuple, sets: Iterable[tuple]) -> None:
    for s in sets:
        if len({assignment[i] for i in s}) <= 1:
            raise ContractViolation(
                "search returned a coloring that leaves a composite set monochromatic"
            )


def naive_counterexample(n: int, k: int, sets: tuple, *, max_homset: int = NAIVE_MAX_HOMSET) -> tuple | None:
    """Reference scan: first of all k**n colorings, in lexicographic order,
    that leaves every set non-monochromatic."""
    if n > max_homset:
        raise GuardExceeded(
            f"naive scan over {k}**{n} colorings refused (guard {max_homset})"
        )
    if any(not s for s in sets):
        return None
    for assignment in product(range(1, k + 1), repeat=n):
        if all(len({assignment[i] for i in s}) > 1 for s in sets):
            return assignment
    return None


def naive_counterexample_bitset(n: int, sets: tuple, *, max_homset: int = BITSET_MAX_HOMSET) -> tuple | None:
    """The same scan for two colors, bit-packed: coloring x assigns vertex i
    the color 1 + bit (n-1-i) of x, so increasing x is lexicographic order."""
    if n > max_homset:
        raise GuardExceeded(f"bitset scan over 2**{n} colorings refused (guard {max_homset})")
    if any(not s for s in sets):
        return None
    masks = [sum(1 << (n - 1 - i) for i in s) for s in set(sets)]
    arr = np.array(masks, dtype=np.uint64)
    total = 1 << n
    for start in range(0, total, _BITSET_CHUNK):
        stop = min(start + _BITSET_CHUNK, total)
        xs = np.arange(start, stop, dtype=np.uint64)
        bad = np.zeros(xs.shape, dtype=bool)
        for m in arr:
            sub = xs & m
            np.logical_or(bad, (sub == 0) | (sub == m), out=bad)
        good = np.flatnonzero(~bad)
        if good.size:
            x = int(xs[good[0]])
            return tuple(1 + ((x >> (n - 1 - i)) & 1) for i in range(n))
    return None


def _solve(instance: ArrowInstance, k: int) -> ArrowVerdict:
    n = len(instance.colored.morphisms)
    assignment = _search_counterexample(n, k, instance.composite_sets)
    if assignment is None:
        return ArrowVerdict(True)
    _verify_counterexample(assignment, instance.composite_sets)
    return ArrowVerdict(False, Coloring(k, assignment))


def _check_colors(k: int, max_colors: int) -> None:
    if k < 1:
        raise InvalidInput("need at least one color")
    if k > max_colors:
        raise GuardExceeded(
            f"{k} colors is over the guard of {max_colors}; pass a larger guard to override"
        )


def check_arrow_dual(
    c,
    b,
    a,
    k: int,
    cls: MorphismClass,
    *,
    max_homset: int = DEFAULT_MAX_HOMSET,
    max_colors: int = DEFAULT_MAX_COLORS,
    max_vertices: int = DEFAULT_MAX_VERTICES,
    max_chain: int = DEFAULT_MAX_CHAIN,
) -> ArrowVerdict:
    """Does every k-coloring of hom(c, a) have w in hom(c, b) with
    { g . w : g in hom(b, a) } monochromatic?"""
    _check_colors(k, max_colors)
    instance = build_arrow_instance(
        c, b, a, cls, mode="dual",
        max_homset=max_homset, max_vertices=max_vertices, max_chain=max_chain,
    )
    return _solve(instance, k)


def check_arrow_direct(
    c,
    b,
    a,
    k: int,
    cls: MorphismClass,
    *,
    max_homset: int = DEFAULT_MAX_HOMSET,
    max_colors: int = DEFAULT_MAX_COLORS,
    max_vertices: int = DEFAULT_MAX_VERTICES,
    max_chain: int = DEFAULT_MAX_CHAIN,
) -> ArrowVerdict:
    """Does every k-coloring of hom(a, c) have w in hom(b, c) with
    { w . g : g in hom(a, b) } monochromatic?"""
    _check_colors(k, max_colors)
    instance = build_arrow_instance(
        c, b, a, cls, mode="direct",
        max_homset=max_homset, max_vertices=max_vertices, max_chain=max_chain,
    )
    return _solve(instance, k)


def check_arrow_naive(
    c,
    b,
    a,
    k: int,
    cls: MorphismClass,
    *,
    mode: str = "dual",
    method: str = "loop",
    max_homset: int | None = None,
    max_vertices: int = DEFAULT_MAX_VERTICES,
    max_chain: int = DEFAULT_MAX_CHAIN,
) -> ArrowVerdict:
    """The same verdict by full enumeration of colorings; a cross-check gear.

    method "loop" is the pure scan; "bitset" is the numpy scan and needs
    k = 2. Instance assembly is shared with the production checker, only
    the search differs.
    """
    if method not in ("loop", "bitset"):
        raise InvalidInput(f"unknown naive method {method!r}")
    if method == "bitset" and k != 2:
        raise InvalidInput("the bitset scan handles exactly two colors")
    if max_homset is None:
        max_homset = NAIVE_MAX_HOMSET if method == "loop" else BITSET_MAX_HOMSET
    instance = build_arrow_instance(
        c, b, a, cls, mode=mode,
        max_homset=max_homset, max_vertices=max_vertices, max_chain=max_chain,
    )
    n = len(instance.colored.morphisms)
    if method == "loop":
        assignment = naive_counterexample(n, k, instance.composite_sets, max_homset=max_homset)
    else:
        assignment = naive_counterexample_bitset(n, instance.composite_sets, max_homset=max_homset)
    if assignment is None:
        return ArrowVerdict(True)
    _verify_counterexample(assignment, instance.composite_sets)
    return ArrowVerdict(False, Coloring(k, assignment))


# ---------------------------------------------------------------------------
# Minimal-witness search.


@dataclass(frozen=True)
class WitnessSearchReport:
    """Outcome of scanning candidates for the least one satisfying an arrow.

    guard_hit means a candidate was refused by a size guard before any
    witness appeared; largest_examined is the biggest candidate actually
    settled, so a partial scan reports itself as partial."""

    found: bool
    witness: Any = None
    size: int | None = None
    largest_examined: int = 0
    guard_hit: bool = False

    def to_json(self) -> dict:
        witness = self.witness.to_json() if hasattr(self.witness, "to_json") else jsonify(self.witness)
        return {
            "found": self.found,
            "witness": witness,
            "size": self.size,
            "largest_examined": self.largest_examined,
            "guard_hit": self.guard_hit,
        }


def standard_chain_candidates(bound: int) -> Iterator[Chain]:
    for n in range(1, bound + 1):
        yield Chain.standard(n)


def find_minimal_dual_witness(
    b,
    a,
    k: int,
    cls: MorphismClass,
    candidates: Iterable | None = None,
    *,
    bound: int = 7,
    max_homset: int = DEFAULT_MAX_HOMSET,
    max_colors: int = DEFAULT_MAX_COLORS,
    max_vertices: int = DEFAULT_MAX_VERTICES,
    max_chain: int = DEFAULT_MAX_CHAIN,
) -> WitnessSearchReport:
    """First candidate c (in the given order) with c ->(dual, k) b over a.

    The default candidate stream is the standard chains up to the bound, so
    for chain classes "first" means "minimal size". A guard refusal ends the
    scan with a partial report instead of an answer.
    """
    if candidates is None:
        candidates = standard_chain_candidates(bound)
    largest = 0
    for cand in candidates:
        size = len(cand) if isinstance(cand, Chain) else len(cand.chain)
        try:
            verdict = check_arrow_dual(
                cand, b, a, k, cls,
                max_homset=max_homset, max_colors=max_colors,
                max_vertices=max_vertices, max_chain=max_chain,
            )
        except GuardExceeded:
            return WitnessSearchReport(
                False, None, None, largest_examined=largest, guard_hit=True
            )
        largest = max(largest, size)
        if verdict.holds:
            return WitnessSearchReport(True, cand, size, largest_examined=largest)
    return WitnessSearchReport(False, None, None, largest_examined=largest)


# ---------------------------------------------------------------------------
# Partitions of a chain vs rigid surjections.


def partition_to_rigid_surjection(chain: Chain, blocks) -> VertexMorphism:
    """Send each label to the least label of its block.

    The target chain lists the block minima in source order, so the discrete
    partition gives the identity and the indiscrete one the constant map to
    the first label.
    """
    block_sets = [frozenset(b) for b in blocks]
    if not block_sets or any(not b for b in block_sets):
        raise InvalidInput("blocks must be nonempty")
    if sum(len(b) for b in block_sets) != len(chain) or set().union(
        *block_sets
    ) != chain.label_set():
        raise InvalidInput("blocks must partition the chain's labels")
    owner: dict = {}
    for b in block_sets:
        least = min(b, key=chain.position)
        for v in b:
            owner[v] = least
    minima = sorted({owner[v] for v in chain}, key=chain.position)
    return VertexMorphism(chain, Chain(tuple(minima)), tuple(owner[v] for v in chain))


def rigid_surjection_to_partition(f: VertexMorphism) -> frozenset:
    """The kernel partition of a rigid surjection, as a frozenset of blocks."""
    verdict = is_rigid_surjection(f)
    if not verdict:
        raise PreconditionError(f"not a rigid surjection (stage {verdict.stage})")
    blocks: dict = {}
    for v, w in zip(f.source.vertices, f.images):
        blocks.setdefault(w, []).append(v)
    return frozenset(frozenset(b) for b in blocks.values())


def check_fdrt_instance(
    k: int,
    a: int,
    m: int,
    n: int,
    *,
    max_homset: int = DEFAULT_MAX_HOMSET,
    max_colors: int = DEFAULT_MAX_COLORS,
    max_chain: int = DEFAULT_MAX_CHAIN,
) -> ArrowVerdict:
    """The finite dual Ramsey question for standard chains: does every
    k-coloring of the a-block partitions of the n-chain contain an m-block
    partition all of whose a-block coarsenings got one color? Checked via
    the dual arrow for rigid surjections."""
    if not 1 <= a <= m <= n:
        raise InvalidInput("parameters must satisfy 1 <= a <= m <= n")
    return check_arrow_dual(
        Chain.standard(n), Chain.standard(m), Chain.standard(a), k,
        MorphismClass.CH_RS,
        max_homset=max_homset, max_colors=max_colors, max_chain=max_chain,
    )
