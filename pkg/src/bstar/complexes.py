"""Finite simplicial complexes as immutable facet families.

A complex stores its facets only; membership of any face is "is a subset
of some facet".  Vertices are dense 0-based indices, each carrying an
optional hashable label that survives links/deletions/contrastars (labels
are what the CLI prints and what subcomplex embeddings are matched on).
Faces cross the public API as sorted tuples of vertex indices; internally
every face is a bitmask int over the vertex set.

The empty complex {∅} (no vertices, only the empty face) can arise from
deletions and contrastars but is deliberately not constructible from
facet input: parsers reject it.
"""

from __future__ import annotations

import itertools
import json
import os
from dataclasses import dataclass
from functools import cached_property
from typing import Hashable, Iterable

__all__ = [
    "Complex",
    "FaceCountError",
    "from_facets",
    "link",
    "deletion",
    "contrastar",
    "skeleton",
    "join",
    "cone",
    "predicates",
    "Predicates",
    "parse",
    "to_json",
    "to_text",
]

DEFAULT_MAX_FACES = 1 << 22
_max_faces = int(os.environ.get("BSTAR_MAX_FACES", DEFAULT_MAX_FACES))


class FaceCountError(RuntimeError):
    """Raised when enumerating a complex would exceed the face guard."""


def set_max_faces(n: int) -> None:
    global _max_faces
    _max_faces = int(n)


def get_max_faces() -> int:
    return _max_faces


def _mask_of(indices: Iterable[int]) -> int:
    m = 0
    for v in indices:
        m |= 1 << v
    return m


def _tuple_of(mask: int) -> tuple[int, ...]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def _maximal(masks: Iterable[int]) -> list[int]:
    uniq = sorted(set(masks), key=lambda m: -m.bit_count())
    kept: list[int] = []
    for m in uniq:
        if not any(m & k == m for k in kept):
            kept.append(m)
    return kept


def _label_key(label):
    return (label.__class__.__name__, repr(label))


def _sort_labels(labels):
    try:
        return sorted(labels)
    except TypeError:
        return sorted(labels, key=_label_key)


class Complex:
    """Immutable finite simplicial complex.

    Construct via :func:`from_facets` (or the operations below); the raw
    constructor expects already-dense facet bitmasks.
    """

    def __init__(self, facet_masks: Iterable[int], n_vertices: int,
                 labels: tuple[Hashable, ...] | None = None):
        masks = _maximal(facet_masks)
        if not masks:
            masks = [0]
        if labels is None:
            labels = tuple(range(n_vertices))
        if len(labels) != n_vertices:
            raise ValueError("label count does not match vertex count")
        union = 0
        for m in masks:
            union |= m
        if n_vertices and union != (1 << n_vertices) - 1:
            raise ValueError("vertex set must equal the union of the facets")
        self.n_vertices = n_vertices
        self.labels = labels
        self._facet_masks = tuple(sorted(masks, key=lambda m: (m.bit_count(), _tuple_of(m))))
        self._hash = hash((n_vertices, self._facet_masks))

    # -- basic views ---------------------------------------------------

    @property
    def dim(self) -> int:
        return self._facet_masks[-1].bit_count() - 1

    @cached_property
    def facets(self) -> tuple[tuple[int, ...], ...]:
        return tuple(_tuple_of(m) for m in self._facet_masks)

    @cached_property
    def _faces_by_dim(self) -> dict[int, list[int]]:
        limit = _max_faces
        seen: set[int] = set()
        for facet in self._facet_masks:
            sub = facet
            while True:
                if sub not in seen:
                    seen.add(sub)
                    if len(seen) > limit:
                        raise FaceCountError(
                            f"complex exceeds the face guard of {limit} faces"
                        )
                if sub == 0:
                    break
                sub = (sub - 1) & facet
        buckets: dict[int, list[int]] = {}
        for m in seen:
            buckets.setdefault(m.bit_count() - 1, []).append(m)
        for d in buckets:
            buckets[d].sort(key=_tuple_of)
        return buckets

    def faces(self, d: int) -> list[tuple[int, ...]]:
        """All faces of dimension exactly d (empty list if out of range)."""
        return [_tuple_of(m) for m in self._faces_by_dim.get(d, [])]

    def face_masks(self, d: int) -> list[int]:
        return list(self._faces_by_dim.get(d, []))

    def f_vector(self) -> tuple[int, ...]:
        """(f_-1, f_0, ..., f_{dim}); f_-1 is always 1."""
        return tuple([1] + [len(self._faces_by_dim.get(d, []))
                            for d in range(0, self.dim + 1)])

    def has_mask(self, mask: int) -> bool:
        return any(mask & f == mask for f in self._facet_masks)

    def is_face(self, face: Iterable[int]) -> bool:
        return self.has_mask(_mask_of(face))

    def mask(self, face: Iterable[int]) -> int:
        face = list(face)
        if any(not (0 <= v < self.n_vertices) for v in face):
            raise ValueError(f"vertex index out of range: {face}")
        return _mask_of(face)

    def face_labels(self, face: Iterable[int]) -> tuple:
        return tuple(self.labels[v] for v in sorted(face))

    def index_of_label(self, label) -> int:
        return self.labels.index(label)

    def describe_face(self, face: Iterable[int]) -> str:
        names = [str(x) for x in self.face_labels(face)]
        if len(names) == 1:
            return f"vertex {names[0]}"
        return "face {" + ",".join(names) + "}"

    # -- equality / hashing --------------------------------------------

    def __eq__(self, other):
        return (isinstance(other, Complex)
                and self.n_vertices == other.n_vertices
                and self._facet_masks == other._facet_masks
                and self.labels == other.labels)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return (f"Complex(n={self.n_vertices}, dim={self.dim}, "
                f"facets={len(self._facet_masks)})")


def from_facets(facet_list: Iterable[Iterable[Hashable]]) -> Complex:
    """Build a complex from facets given as collections of vertex labels.

    Dominated faces are dropped; labels are mapped to dense indices in
    sorted order so the construction is deterministic.  Inputs with no
    nonempty facet are rejected.
    """
    facet_sets = [frozenset(f) for f in facet_list]
    label_set = set().union(*facet_sets) if facet_sets else set()
    if not label_set:
        raise ValueError("no facets")
    labels = tuple(_sort_labels(label_set))
    index = {lab: i for i, lab in enumerate(labels)}
    masks = [_mask_of(index[lab] for lab in f) for f in facet_sets]
    return Complex(masks, len(labels), labels)


def _rebuild(masks: Iterable[int], parent: Complex) -> Complex:
    """Maximalise `masks`, reindex densely, and inherit parent labels."""
    masks = _maximal(masks)
    union = 0
    for m in masks:
        union |= m
    old = _tuple_of(union)
    remap = {v: i for i, v in enumerate(old)}
    new_masks = []
    for m in masks:
        new_masks.append(_mask_of(remap[v] for v in _tuple_of(m)))
    return Complex(new_masks, len(old), tuple(parent.labels[v] for v in old))


def link(c: Complex, face: Iterable[int]) -> Complex:
    """Link of `face`: all faces disjoint from it whose union with it is a face."""
    s = c.mask(face)
    if s == 0:
        return c
    if not c.has_mask(s):
        raise ValueError("not a face")
    masks = [f & ~s for f in c._facet_masks if f & s == s]
    return _rebuild(masks, c)


def deletion(c: Complex, vertices: Iterable[int]) -> Complex:
    """All faces avoiding every vertex in `vertices`."""
    t = c.mask(vertices)
    if t == 0:
        return c
    return _rebuild([f & ~t for f in c._facet_masks], c)


def contrastar(c: Complex, face: Iterable[int]) -> Complex:
    """All faces that do not contain `face` (which must be a nonempty face)."""
    s = c.mask(face)
    if s == 0:
        raise ValueError("contrastar of the empty face is not defined")
    if not c.has_mask(s):
        raise ValueError("not a face")
    masks = []
    for f in c._facet_masks:
        if f & s != s:
            masks.append(f)
        else:
            for v in _tuple_of(s):
                masks.append(f & ~(1 << v))
    return _rebuild(masks, c)


def skeleton(c: Complex, i: int) -> Complex:
    """All faces of dimension at most i."""
    if i < 0:
        raise ValueError("skeleton dimension must be nonnegative")
    if i >= c.dim:
        return c
    masks = []
    for f in c._facet_masks:
        verts = _tuple_of(f)
        if len(verts) <= i + 1:
            masks.append(f)
        else:
            for comb in itertools.combinations(verts, i + 1):
                masks.append(_mask_of(comb))
    return _rebuild(masks, c)


def join(g: Complex, d: Complex) -> Complex:
    """Simplicial join: faces are unions of one face from each side."""
    shift = g.n_vertices
    masks = [fg | (fd << shift) for fg in g._facet_masks for fd in d._facet_masks]
    labels = tuple((0, lab) for lab in g.labels) + tuple((1, lab) for lab in d.labels)
    return Complex(masks, g.n_vertices + d.n_vertices, labels)


def cone(c: Complex, apex_label: Hashable = "apex") -> Complex:
    """Join of `c` with a single new vertex."""
    apex = 1 << c.n_vertices
    masks = [f | apex for f in c._facet_masks]
    return Complex(masks, c.n_vertices + 1, c.labels + (apex_label,))


@dataclass(frozen=True)
class Predicates:
    is_pure: bool
    is_flag: bool
    components: tuple[Complex, ...]
    graph_edges: tuple[tuple[int, int], ...]


def _minimal_nonfaces(c: Complex) -> list[tuple[int, ...]]:
    """Sets that are not faces while all their proper subsets are.

    A minimal non-face has at most dim+2 vertices, so the search space is
    small at the scales this package accepts.
    """
    out = []
    for k in range(2, c.dim + 3):
        for comb in itertools.combinations(range(c.n_vertices), k):
            m = _mask_of(comb)
            if c.has_mask(m):
                continue
            if all(c.has_mask(m & ~(1 << v)) for v in comb):
                out.append(comb)
    return out


def predicates(c: Complex) -> Predicates:
    """Purity, flagness, connected components, and the edge graph."""
    sizes = {m.bit_count() for m in c._facet_masks}
    is_pure = len(sizes) == 1
    edges = tuple(_tuple_of(m) for m in c._faces_by_dim.get(1, []))

    parent = list(range(c.n_vertices))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    groups: dict[int, list[int]] = {}
    for v in range(c.n_vertices):
        groups.setdefault(find(v), []).append(v)
    comps = []
    for verts in sorted(groups.values()):
        vm = _mask_of(verts)
        comps.append(_rebuild([f for f in c._facet_masks if f & vm == f], c))

    is_flag = all(len(nf) == 2 for nf in _minimal_nonfaces(c))
    return Predicates(is_pure, is_flag, tuple(comps), edges)


# -- file format ------------------------------------------------------


def parse(text: str) -> Complex:
    """Parse the canonical JSON facet format, or plain text (one facet
    per line, whitespace-separated labels)."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        data = json.loads(text)
        if not isinstance(data, dict) or "facets" not in data:
            raise ValueError('expected an object with a "facets" key')
        return from_facets(data["facets"])
    facets = []
    for line in text.splitlines():
        parts = line.split()
        if parts:
            facets.append(parts)
    return from_facets(facets)


def to_json(c: Complex) -> str:
    """Canonical serialization: sorted facets of sorted string labels."""
    facets = sorted(sorted(str(lab) for lab in c.face_labels(f)) for f in c.facets)
    return json.dumps({"facets": facets}, sort_keys=True)


def to_text(c: Complex) -> str:
    facets = sorted(sorted(str(lab) for lab in c.face_labels(f)) for f in c.facets)
    return "\n".join(" ".join(f) for f in facets) + "\n"
