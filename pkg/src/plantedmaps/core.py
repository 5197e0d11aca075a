"""Planted cellular maps encoded as permutation data.

A planted map with ``k`` faces is stored as the sizes of its face interiors
together with a fixed-point free involution ``alpha`` pairing half-edge ids.
Ids are assigned face by face in boundary order: face ``i`` occupies one
contiguous block whose first id (the root ``R_i``) is paired with its last id
(the plant ``S_i``); the ids in between are the interior of the face.  The
face successor ``gamma`` walks each block cyclically, the vertex permutation
is ``sigma = alpha o gamma``, and two maps are equal exactly when they have
the same interior sizes and the same pairing (labelled equality; no
automorphism quotient is taken).

Storing ``alpha`` as a partner array over a dense id range gives O(1) edge
lookups and keeps exhaustive enumeration cache friendly.
"""

from __future__ import annotations

import json
from bisect import bisect_right
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Sequence

SCHEMA_VERSION = 1


class MapError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(MapError):
    """The input does not describe a valid planted cellular map."""


class NotInvolution(ValidationError):
    pass


class HasFixedPoint(ValidationError):
    pass


class PlantNotPairedWithRoot(ValidationError):
    pass


class SizeMismatch(ValidationError):
    pass


class PlantNotFixed(ValidationError):
    pass


class ParseError(MapError):
    """Malformed serialized map text."""


class Disconnected(MapError):
    pass


class OddEulerDefect(MapError):
    pass


@dataclass(frozen=True)
class FaceStructure:
    """Face layout of a planted map.

    ``interior_sizes[i]`` is the number of non-plant half-edges in face ``i``;
    each face additionally carries its root/plant pair, so face ``i``
    occupies a block of ``interior_sizes[i] + 2`` consecutive ids.
    """

    interior_sizes: tuple[int, ...]

    def __post_init__(self):
        sizes = tuple(int(s) for s in self.interior_sizes)
        object.__setattr__(self, "interior_sizes", sizes)
        if not 1 <= len(sizes) <= 3:
            raise ValidationError(f"face count must be between 1 and 3, got {len(sizes)}")
        if any(s < 0 for s in sizes):
            raise ValidationError(f"interior sizes must be non-negative, got {sizes}")

    @property
    def k(self) -> int:
        return len(self.interior_sizes)

    @property
    def total_half_edges(self) -> int:
        return sum(self.interior_sizes) + 2 * self.k

    @cached_property
    def block_starts(self) -> tuple[int, ...]:
        starts = []
        p = 0
        for s in self.interior_sizes:
            starts.append(p)
            p += s + 2
        return tuple(starts)

    def root(self, i: int) -> int:
        return self.block_starts[i]

    def plant(self, i: int) -> int:
        return self.block_starts[i] + self.interior_sizes[i] + 1

    @cached_property
    def roots(self) -> tuple[int, ...]:
        return tuple(self.root(i) for i in range(self.k))

    @cached_property
    def plants(self) -> tuple[int, ...]:
        return tuple(self.plant(i) for i in range(self.k))

    def face_of(self, h: int) -> int:
        """Index of the face whose block contains id ``h``."""
        if not 0 <= h < self.total_half_edges:
            raise ValidationError(f"half-edge id {h} out of range")
        return bisect_right(self.block_starts, h) - 1

    @cached_property
    def np_ids(self) -> tuple[int, ...]:
        """Non-plant half-edge ids in face order."""
        out = []
        for i in range(self.k):
            out.extend(range(self.root(i) + 1, self.plant(i)))
        return tuple(out)

    @cached_property
    def gamma(self) -> tuple[int, ...]:
        """Face successor permutation; wraps each block from plant to root."""
        g = list(range(1, self.total_half_edges + 1))
        for i in range(self.k):
            g[self.plant(i)] = self.root(i)
        return tuple(g)


@dataclass(frozen=True)
class CellularMap:
    """A planted cellular map: face layout plus half-edge pairing.

    Instances are immutable; all derived structure (``sigma``, vertices,
    genus, connectivity) is computed on demand and cached.  Use
    :func:`validate` to construct a checked instance.
    """

    faces: FaceStructure
    alpha: tuple[int, ...]

    @property
    def k(self) -> int:
        return self.faces.k

    @property
    def total_half_edges(self) -> int:
        return self.faces.total_half_edges

    @property
    def n_edges(self) -> int:
        return self.faces.total_half_edges // 2

    @property
    def np_edge_count(self) -> int:
        return self.n_edges - self.k

    @property
    def plants(self) -> tuple[int, ...]:
        return self.faces.plants

    @property
    def np_ids(self) -> tuple[int, ...]:
        return self.faces.np_ids

    @cached_property
    def gamma(self) -> tuple[int, ...]:
        return self.faces.gamma

    @cached_property
    def sigma(self) -> tuple[int, ...]:
        """Vertex permutation ``alpha o gamma``; fixes every plant."""
        alpha = self.alpha
        return tuple(alpha[t] for t in self.faces.gamma)

    @cached_property
    def vertex_cycles(self) -> tuple[tuple[int, ...], ...]:
        """Cycles of ``sigma``, each rotated to start at its minimum id and
        listed in order of that minimum.  Plants appear as singletons."""
        sigma = self.sigma
        total = self.total_half_edges
        seen = bytearray(total)
        cycles = []
        for start in range(total):
            if seen[start]:
                continue
            cyc = []
            h = start
            while not seen[h]:
                seen[h] = 1
                cyc.append(h)
                h = sigma[h]
            cycles.append(tuple(cyc))
        return tuple(cycles)

    def vertices(self) -> tuple[tuple[int, ...], ...]:
        return self.vertex_cycles

    @cached_property
    def vertex_of(self) -> tuple[int, ...]:
        """For each half-edge, the index of its vertex cycle."""
        idx = [0] * self.total_half_edges
        for i, cyc in enumerate(self.vertex_cycles):
            for h in cyc:
                idx[h] = i
        return tuple(idx)

    @cached_property
    def is_connected(self) -> bool:
        """Whether the union closure of ``h ~ alpha(h)`` and ``h ~ sigma(h)``
        has a single class."""
        total = self.total_half_edges
        alpha, sigma = self.alpha, self.sigma
        seen = bytearray(total)
        seen[0] = 1
        stack = [0]
        reached = 1
        while stack:
            h = stack.pop()
            for t in (alpha[h], sigma[h]):
                if not seen[t]:
                    seen[t] = 1
                    reached += 1
                    stack.append(t)
        return reached == total

    def aggregate_genus(self) -> int:
        """Half the Euler defect ``2 - V + E - k``.

        Equals the genus for connected maps; for disconnected maps it is the
        genus-sum bookkeeping quantity (may be negative) used by the cutting
        and gluing surgeries.
        """
        defect = 2 - len(self.vertex_cycles) + self.n_edges - self.k
        if defect % 2:
            raise OddEulerDefect(f"odd Euler defect {defect}; invalid map")
        return defect // 2

    def genus(self) -> int:
        """Topological genus via ``2 - 2g = V - E + k`` (plants included)."""
        if not self.is_connected:
            raise Disconnected("genus requires a connected map")
        g = self.aggregate_genus()
        if g < 0:
            raise ValidationError(f"negative genus {g}; invalid map")
        return g

    def kind(self) -> str:
        """One of ``unicellular``/``bicellular``/``tricellular``; maps with
        two or three faces must be connected."""
        if self.k == 1:
            return "unicellular"
        if not self.is_connected:
            raise Disconnected(f"a {self.k}-face map must be connected")
        return "bicellular" if self.k == 2 else "tricellular"

    def is_closed(self, subset: Iterable[int]) -> bool:
        """Whether ``alpha`` maps ``subset`` onto itself (the empty set is
        closed)."""
        s = set(subset)
        total = self.total_half_edges
        for h in s:
            if not 0 <= h < total:
                raise ValidationError(f"half-edge id {h} out of range")
        return all(self.alpha[h] in s for h in s)

    def face_order(self) -> tuple[int, ...]:
        """Position of each id in the linear order that follows face 1 from
        root to plant, then face 2, and so on.  Under the canonical id scheme
        this is the identity."""
        pos = [0] * self.total_half_edges
        p = 0
        for i in range(self.k):
            for h in range(self.faces.root(i), self.faces.plant(i) + 1):
                pos[h] = p
                p += 1
        return tuple(pos)

    def encode(self) -> str:
        """Serialize to the one-line JSON interchange form."""
        pairs = sorted((h, p) for h, p in enumerate(self.alpha) if h < p)
        doc = {
            "schema_version": SCHEMA_VERSION,
            "k": self.k,
            "interiors": list(self.faces.interior_sizes),
            "alpha": [[a, b] for a, b in pairs],
        }
        return json.dumps(doc, separators=(",", ":"))

    def __repr__(self) -> str:
        pairs = ",".join(
            f"({h},{p})" for h, p in enumerate(self.alpha) if h < p and h not in self.faces.roots
        )
        return f"CellularMap(interiors={self.faces.interior_sizes}, pairs=[{pairs}])"


def validate(faces: FaceStructure | Sequence[int], alpha: Sequence[int]) -> CellularMap:
    """Check ``alpha`` against the face layout and return the map.

    Raises :class:`SizeMismatch`, :class:`NotInvolution`,
    :class:`HasFixedPoint` or :class:`PlantNotPairedWithRoot` when the data
    does not describe a planted map.
    """
    if not isinstance(faces, FaceStructure):
        faces = FaceStructure(tuple(faces))
    partner = tuple(int(a) for a in alpha)
    total = faces.total_half_edges
    if len(partner) != total:
        raise SizeMismatch(f"alpha has {len(partner)} entries, map has {total} half-edges")
    for h, p in enumerate(partner):
        if not 0 <= p < total:
            raise NotInvolution(f"alpha({h}) = {p} out of range")
        if p == h:
            raise HasFixedPoint(f"alpha fixes half-edge {h}")
        if partner[p] != h:
            raise NotInvolution(f"alpha(alpha({h})) = {partner[p]} != {h}")
    for i in range(faces.k):
        r, s = faces.root(i), faces.plant(i)
        if partner[r] != s:
            raise PlantNotPairedWithRoot(
                f"face {i}: alpha({r}) = {partner[r]}, expected the plant {s}"
            )
    return CellularMap(faces, partner)


def involution_from_pairs(pairs: Iterable[tuple[int, int]], total: int) -> tuple[int, ...]:
    """Partner array from a list of id pairs covering ``range(total)``."""
    partner = [-1] * total
    for a, b in pairs:
        a, b = int(a), int(b)
        for h in (a, b):
            if not 0 <= h < total:
                raise SizeMismatch(f"half-edge id {h} out of range 0..{total - 1}")
        if a == b:
            raise HasFixedPoint(f"pair ({a},{b}) fixes a half-edge")
        if partner[a] != -1 or partner[b] != -1:
            raise NotInvolution(f"half-edge in pair ({a},{b}) paired twice")
        partner[a] = b
        partner[b] = a
    if any(p == -1 for p in partner):
        missing = [h for h, p in enumerate(partner) if p == -1]
        raise SizeMismatch(f"unpaired half-edges: {missing}")
    return tuple(partner)


def from_np_pairs(
    interiors: Sequence[int], pairs: Iterable[tuple[int, int]]
) -> CellularMap:
    """Build a map from interior sizes and a matching on the non-plant
    half-edges, indexed 1..2n across faces in face order.  Plant pairs are
    supplied automatically."""
    faces = FaceStructure(tuple(interiors))
    np_ids = faces.np_ids
    all_pairs = [(faces.root(i), faces.plant(i)) for i in range(faces.k)]
    for s, t in pairs:
        if not (1 <= s <= len(np_ids) and 1 <= t <= len(np_ids)):
            raise SizeMismatch(f"np index out of range in pair ({s},{t})")
        all_pairs.append((np_ids[s - 1], np_ids[t - 1]))
    return validate(faces, involution_from_pairs(all_pairs, faces.total_half_edges))


def canonicalize(
    k: int,
    cycles: Sequence[Sequence[int]],
    alpha: Mapping[int, int],
) -> CellularMap:
    """Relabel face cycles onto the canonical id scheme.

    Each cycle is written from its root to its plant (the plant is the last
    element and must be paired with the first).  The relabeling is
    order-isomorphic: position in the concatenated cycles becomes the new id.
    Two inputs yield equal maps exactly when they are identical as labelled
    planted maps.
    """
    cycles = [tuple(c) for c in cycles]
    if len(cycles) != k:
        raise SizeMismatch(f"expected {k} cycles, got {len(cycles)}")
    for c in cycles:
        if len(c) < 2:
            raise ValidationError("each face needs at least a root and a plant")
    relabel: dict[int, int] = {}
    new = 0
    for c in cycles:
        for h in c:
            if h in relabel:
                raise ValidationError(f"half-edge {h} appears in two cycles")
            relabel[h] = new
            new += 1
    if set(alpha) != set(relabel):
        raise SizeMismatch("alpha domain differs from the union of the cycles")
    for c in cycles:
        if alpha[c[0]] != c[-1]:
            raise PlantNotFixed(
                f"cycle starting at {c[0]} ends at {c[-1]}, not at its root's partner"
            )
    faces = FaceStructure(tuple(len(c) - 2 for c in cycles))
    partner = [0] * faces.total_half_edges
    for h, p in alpha.items():
        partner[relabel[h]] = relabel[p]
    return validate(faces, partner)


def decode(text: str) -> CellularMap:
    """Parse the JSON interchange form and validate the map.

    ``schema_version`` may be omitted and defaults to 1.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise ParseError("expected a JSON object")
    version = doc.get("schema_version", SCHEMA_VERSION)
    if version != SCHEMA_VERSION:
        raise ParseError(f"unsupported schema_version {version!r}")
    try:
        k = doc["k"]
        interiors = doc["interiors"]
        alpha_pairs = doc["alpha"]
    except KeyError as exc:
        raise ParseError(f"missing field {exc}") from None
    if not isinstance(interiors, list) or not all(isinstance(s, int) for s in interiors):
        raise ParseError("interiors must be a list of integers")
    if not isinstance(k, int) or k != len(interiors):
        raise ParseError("k must equal the number of interior sizes")
    if not isinstance(alpha_pairs, list) or not all(
        isinstance(p, list) and len(p) == 2 and all(isinstance(x, int) for x in p)
        for p in alpha_pairs
    ):
        raise ParseError("alpha must be a list of id pairs")
    faces = FaceStructure(tuple(interiors))
    partner = involution_from_pairs([tuple(p) for p in alpha_pairs], faces.total_half_edges)
    return validate(faces, partner)
