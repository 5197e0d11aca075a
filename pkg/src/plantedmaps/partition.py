"""Classification of nontrivial one-face maps into disjoint leaf classes.

The root vertex (the ``sigma`` cycle through the root) determines two
distinguished half-edges: its second and third elements.  Their partners cut
the face interior into up to three branches, and the interleaving pattern,
branch lengths and branch closure under ``alpha`` drive a decision tree whose
leaves partition the set of all nontrivial one-face maps:

    B    second/third interleave the other way round (no branches)
    U1   root vertex of degree 2 (single wrap branch)
    U2   degree 3 (third branch empty); pendant flags record branches of
         length two
    II   degree >= 4, no branch closed
    G23  degree >= 4, first branch is a pendant pair
    G24  degree >= 4, first branch longer, second branch a pendant pair
    F5i  degree >= 4, longer branches, exactly branch i closed (i = 1,2,3)
    F54  degree >= 4, longer branches, all three branches closed

Exactly two closed branches cannot occur: the non-plant ids form a closed
set, so two closed branches force the third closed.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from plantedmaps.core import CellularMap, MapError, ValidationError

LEAVES = ("U1", "U2", "G23", "G24", "F51", "F52", "F53", "F54", "II", "B")


class TrivialMap(MapError):
    pass


class WrongScenario(MapError):
    pass


class BoundExceeded(MapError):
    pass


@dataclass(frozen=True)
class V1Profile:
    """Root vertex data: its degree and its second/third half-edges.

    ``third`` is ``None`` when the degree is 2.  Positions coincide with ids
    under the canonical labelling.
    """

    degree: int
    second: int
    third: int | None
    second_pos: int
    third_pos: int | None


@dataclass(frozen=True)
class Branches:
    """The up-to-three face segments delimited by the partners of the root
    vertex's second and third half-edges."""

    first: tuple[int, ...]
    second: tuple[int, ...]
    third: tuple[int, ...]


@dataclass(frozen=True)
class PartitionClass:
    """Leaf label plus the pendant-branch flags used by the finer classes.

    ``first_pendant``/``second_pendant`` record whether branch 1/2 consists
    of exactly one pair; they matter on leaves U2 and G23.
    """

    leaf: str
    first_pendant: bool = False
    second_pendant: bool = False


def _require_nontrivial_unicellular(u: CellularMap) -> None:
    if u.k != 1:
        raise ValidationError("classification applies to one-face maps only")
    if u.np_edge_count == 0:
        raise TrivialMap("the edgeless map has no root vertex profile")


def v1_profile(u: CellularMap) -> V1Profile:
    """Profile of the vertex containing the root."""
    _require_nontrivial_unicellular(u)
    sigma = u.sigma
    cycle = [0]
    h = sigma[0]
    while h != 0:
        cycle.append(h)
        h = sigma[h]
    m = len(cycle)
    second = cycle[1]
    third = cycle[2] if m >= 3 else None
    # Forced identities: gamma(root) pairs with the second half-edge, and for
    # degree >= 3 gamma(second) pairs with the third.
    assert u.alpha[second] == 1
    if third is not None:
        assert u.alpha[third] == u.gamma[second]
    return V1Profile(m, second, third, second, third)


def scenario(u: CellularMap) -> str:
    """Interleaving scenario: "A" when the third half-edge follows the
    second in face order (or the degree is 2), "B" otherwise."""
    prof = v1_profile(u)
    if prof.degree == 2 or prof.third_pos > prof.second_pos:
        return "A"
    return "B"


def branches(u: CellularMap) -> Branches:
    """Branch decomposition of the face interior (scenario A only).

    For degree 2 the single wrap branch is the whole interior; for degree 3
    the third branch is empty; for degree >= 4 all three are nonempty.
    """
    prof = v1_profile(u)
    last = 2 * u.np_edge_count
    if prof.degree == 2:
        return Branches(tuple(range(1, last + 1)), (), ())
    if prof.third_pos < prof.second_pos:
        raise WrongScenario("branches are defined on scenario A maps only")
    h2, h3 = prof.second, prof.third
    return Branches(
        tuple(range(1, h2 + 1)),
        tuple(range(h2 + 1, h3 + 1)),
        tuple(range(h3 + 1, last + 1)),
    )


def closed_branches(u: CellularMap) -> tuple[bool, bool, bool]:
    """Closure of each branch under ``alpha`` (empty branches are closed)."""
    br = branches(u)
    alpha = u.alpha

    def closed(seg: tuple[int, ...]) -> bool:
        if not seg:
            return True
        lo, hi = seg[0], seg[-1]
        return all(lo <= alpha[t] <= hi for t in seg)

    return closed(br.first), closed(br.second), closed(br.third)


def classify(u: CellularMap) -> PartitionClass:
    """Leaf classification of a nontrivial one-face map.

    Total on its domain; the leaves are pairwise disjoint by construction.
    """
    prof = v1_profile(u)
    m = prof.degree
    if m >= 3 and prof.third_pos < prof.second_pos:
        return PartitionClass("B")
    if m == 2:
        # The wrap pair joins the root vertex to a second vertex, so its
        # contraction is always legal.
        assert u.vertex_of[u.alpha[prof.second]] != u.vertex_of[prof.second]
        return PartitionClass("U1")
    h2, h3 = prof.second, prof.third
    len1, len2 = h2, h3 - h2
    if m == 3:
        # Same for the tail pair of a degree-3 root vertex.
        assert u.vertex_of[u.alpha[h3]] != u.vertex_of[h3]
        return PartitionClass("U2", first_pendant=len1 == 2, second_pendant=len2 == 2)
    # m >= 4
    c1, c2, c3 = closed_branches(u)
    n_closed = c1 + c2 + c3
    assert n_closed != 2, "two closed branches are impossible"
    if n_closed == 0:
        return PartitionClass("II")
    if len1 == 2:
        return PartitionClass("G23", first_pendant=True, second_pendant=len2 == 2)
    if len2 == 2:
        return PartitionClass("G24", second_pendant=True)
    if n_closed == 3:
        return PartitionClass("F54")
    return PartitionClass("F51" if c1 else ("F52" if c2 else "F53"))


def contraction_edges(u: CellularMap) -> tuple[tuple[int, int], ...]:
    """Edges the class bijections contract on this map, if any.

    These are the instances of the distinct-vertex property the surgeries
    rely on: the wrap pair on U1, the tail pair on U2, and the pendant pairs
    recorded by the flags on U2 and G23 or forced on G24.
    """
    pc = classify(u)
    last = 2 * u.np_edge_count
    edges: list[tuple[int, int]] = []
    if pc.leaf == "U1":
        edges.append((1, last))
    elif pc.leaf == "U2":
        h2 = v1_profile(u).second
        edges.append((h2 + 1, last))
        if pc.first_pendant:
            edges.append((1, 2))
        if pc.second_pendant:
            edges.append((h2 + 1, h2 + 2))
    elif pc.leaf == "G23":
        edges.append((1, 2))
        if pc.second_pendant:
            h2 = v1_profile(u).second
            edges.append((h2 + 1, h2 + 2))
    elif pc.leaf == "G24":
        h2 = v1_profile(u).second
        edges.append((h2 + 1, h2 + 2))
    return tuple(edges)


def contraction_vertices_distinct(u: CellularMap) -> bool:
    """Whether every contraction edge of the map joins two distinct
    vertices (vacuously true for classes without contractions)."""
    vo = u.vertex_of
    return all(vo[a] != vo[b] for a, b in contraction_edges(u))


@dataclass(frozen=True)
class PartitionHistogram:
    """Per-leaf cardinalities of one genus bucket, plus pendant-flag counts."""

    g: int
    n: int
    classes: dict[str, int]
    u2_first_pendant: int
    u2_second_pendant: int
    g23_second_pendant: int

    @property
    def total(self) -> int:
        return sum(self.classes.values())


@lru_cache(maxsize=16)
def _census_class_counts(total_np: int) -> dict:
    """One classification pass over every one-face map with ``total_np``
    non-plant edges, bucketed by genus."""
    from plantedmaps.census import unicellular_stream

    leaves: dict[tuple[int, str], int] = {}
    flags: dict[tuple[int, str], int] = {}
    for mp in unicellular_stream(total_np):
        g = mp.genus()
        pc = classify(mp)
        key = (g, pc.leaf)
        leaves[key] = leaves.get(key, 0) + 1
        if pc.leaf == "U2":
            if pc.first_pendant:
                flags[(g, "U2_first")] = flags.get((g, "U2_first"), 0) + 1
            if pc.second_pendant:
                flags[(g, "U2_second")] = flags.get((g, "U2_second"), 0) + 1
        elif pc.leaf == "G23" and pc.second_pendant:
            flags[(g, "G23_second")] = flags.get((g, "G23_second"), 0) + 1
    return {"leaves": leaves, "flags": flags}


def histogram(g: int, n: int) -> PartitionHistogram:
    """Classify every one-face map of genus ``g + 2`` with ``n + 2``
    non-plant edges and count each leaf.

    The indices follow the counting identity: the maps classified live two
    genera and two edges above ``(g, n)``.
    """
    from plantedmaps.census import N_MAX

    if g < 0 or n < 0:
        raise BoundExceeded("g and n must be non-negative")
    if n + 2 > N_MAX["unicellular"]:
        raise BoundExceeded(f"histogram bounded at n <= {N_MAX['unicellular'] - 2}")
    data = _census_class_counts(n + 2)
    genus = g + 2
    classes = {leaf: data["leaves"].get((genus, leaf), 0) for leaf in LEAVES}
    return PartitionHistogram(
        g=g,
        n=n,
        classes=classes,
        u2_first_pendant=data["flags"].get((genus, "U2_first"), 0),
        u2_second_pendant=data["flags"].get((genus, "U2_second"), 0),
        g23_second_pendant=data["flags"].get((genus, "G23_second"), 0),
    )
