"""Combinatorial 2-dimensional CW-complexes.

A complex is given by vertices, oriented edges and 2-cells whose attaching
maps are closed edge words. The words carry all the degree information the
cellular boundary needs.
"""

from __future__ import annotations

import json
import re
from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

from .errors import ComplexError, DimensionError, DisconnectedError
from .linalg import IntMatrix

# JSON keys that would introduce cells of dimension >= 3
_HIGHER_CELL_KEYS = ("volumes", "cells3", "solids")

_COMPLEX_KEYS = {"name", "vertices", "edges", "faces", "basepoint"}


@dataclass(frozen=True)
class Edge:
    name: str
    src: str
    dst: str


@dataclass(frozen=True)
class Face:
    name: str
    word: tuple[tuple[str, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "word", tuple((str(e), int(s)) for e, s in self.word))


@dataclass(frozen=True)
class CwComplex2:
    name: str
    vertices: tuple[str, ...]
    edges: tuple[Edge, ...] = ()
    faces: tuple[Face, ...] = ()
    basepoint: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(
            self, "edges", tuple(e if isinstance(e, Edge) else Edge(*e) for e in self.edges)
        )
        object.__setattr__(
            self, "faces", tuple(f if isinstance(f, Face) else Face(*f) for f in self.faces)
        )

    @property
    def cell_counts(self) -> tuple[int, int, int]:
        return (len(self.vertices), len(self.edges), len(self.faces))

    @classmethod
    def from_dict(cls, data: dict) -> CwComplex2:
        """Load the JSON complex format; unknown fields are rejected."""
        if not isinstance(data, dict):
            raise ComplexError("schema", "complex must be a JSON object")
        for key in _HIGHER_CELL_KEYS:
            if data.get(key):
                raise DimensionError(
                    f"field {key!r} declares cells of dimension 3; only 2-complexes are supported"
                )
        unknown = set(data) - _COMPLEX_KEYS - set(_HIGHER_CELL_KEYS)
        if unknown:
            raise ComplexError("unknown-field", f"unknown fields {sorted(unknown)}")
        try:
            edges = tuple(Edge(str(e["name"]), str(e["src"]), str(e["dst"])) for e in data.get("edges", []))
            faces = []
            for f in data.get("faces", []):
                word = []
                for letter in f["word"]:
                    edge, sign = letter
                    if sign not in (1, -1) or isinstance(sign, bool):
                        raise ComplexError(
                            "bad-orientation", f"face {f['name']!r}: orientation must be +1 or -1, got {sign!r}"
                        )
                    word.append((str(edge), sign))
                faces.append(Face(str(f["name"]), tuple(word)))
            for e in data.get("edges", []):
                extra = set(e) - {"name", "src", "dst"}
                if extra:
                    raise ComplexError("unknown-field", f"edge has unknown fields {sorted(extra)}")
            for f in data.get("faces", []):
                extra = set(f) - {"name", "word"}
                if extra:
                    raise ComplexError("unknown-field", f"face has unknown fields {sorted(extra)}")
        except (KeyError, TypeError, ValueError) as exc:
            raise ComplexError("schema", f"malformed complex description: {exc!r}") from None
        return cls(
            name=str(data.get("name", "M")),
            vertices=tuple(str(v) for v in data.get("vertices", [])),
            edges=edges,
            faces=tuple(faces),
            basepoint=None if data.get("basepoint") is None else str(data["basepoint"]),
        )

    @classmethod
    def load(cls, path) -> CwComplex2:
        with open(path, encoding="utf-8") as fh:
            try:
                data = json.load(fh)
            except json.JSONDecodeError as exc:
                raise ComplexError("schema", f"{path}: invalid JSON ({exc})") from None
        return cls.from_dict(data)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "vertices": list(self.vertices),
            "edges": [{"name": e.name, "src": e.src, "dst": e.dst} for e in self.edges],
            "faces": [{"name": f.name, "word": [[e, s] for e, s in f.word]} for f in self.faces],
            "basepoint": self.basepoint,
        }


@dataclass(frozen=True)
class GroupPresentation:
    generators: tuple[str, ...]
    relators: tuple[tuple[tuple[str, int], ...], ...] = ()

    def __post_init__(self):
        gens = set(self.generators)
        for rel in self.relators:
            for g, _ in rel:
                if g not in gens:
                    raise ValueError(f"relator letter {g!r} is not a generator")

    def exponent_matrix(self) -> IntMatrix:
        """Generators x relators matrix of exponent sums (abelianised relations)."""
        index = {g: i for i, g in enumerate(self.generators)}
        data = [[0] * len(self.relators) for _ in self.generators]
        for j, rel in enumerate(self.relators):
            for g, s in rel:
                data[index[g]][j] += s
        return IntMatrix.from_rows(data, len(self.relators))

    def __str__(self) -> str:
        def word(rel):
            if not rel:
                return "1"
            return "".join(g if s == 1 else f"{g}^-1" for g, s in rel)

        rels = ", ".join(word(r) for r in self.relators)
        return f"<{', '.join(self.generators)} | {rels}>"


@dataclass
class ValidationReport:
    name: str
    cell_counts: tuple[int, int, int]
    euler_characteristic: int
    path_connected: bool
    errors: list[ComplexError] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.errors

    def raise_for_errors(self):
        if self.errors:
            raise self.errors[0]

    def to_json(self) -> dict:
        return {
            "complex": self.name,
            "valid": self.ok,
            "cells": list(self.cell_counts),
            "euler_characteristic": self.euler_characteristic,
            "path_connected": self.path_connected,
            "errors": [{"code": e.code, "message": e.message} for e in self.errors],
        }


def euler_characteristic(m: CwComplex2) -> int:
    v, e, f = m.cell_counts
    return v - e + f


def _duplicates(labels):
    seen, dup = set(), []
    for x in labels:
        if x in seen:
            dup.append(x)
        seen.add(x)
    return dup


def _is_connected(m: CwComplex2, start) -> bool:
    if not m.vertices:
        return True
    adj = {v: set() for v in m.vertices}
    for e in m.edges:
        if e.src in adj and e.dst in adj:
            adj[e.src].add(e.dst)
            adj[e.dst].add(e.src)
    start = start if start in adj else m.vertices[0]
    seen = {start}
    todo = [start]
    while todo:
        for w in adj[todo.pop()]:
            if w not in seen:
                seen.add(w)
                todo.append(w)
    return len(seen) == len(adj)


def validate(m: CwComplex2) -> ValidationReport:
    """Check every structural invariant and collect the failures."""
    errors: list[ComplexError] = []
    for kind, labels in (
        ("vertex", m.vertices),
        ("edge", [e.name for e in m.edges]),
        ("face", [f.name for f in m.faces]),
    ):
        for d in _duplicates(labels):
            errors.append(ComplexError("duplicate-label", f"{kind} label {d!r} used more than once"))

    vertices = set(m.vertices)
    if m.basepoint is None or m.basepoint not in vertices:
        errors.append(
            ComplexError("missing-basepoint", f"basepoint {m.basepoint!r} is not a vertex of {m.name!r}")
        )

    edges = {}
    for e in m.edges:
        for end in (e.src, e.dst):
            if end not in vertices:
                errors.append(
                    ComplexError("dangling-reference", f"edge {e.name!r} references unknown vertex {end!r}")
                )
        edges[e.name] = e

    for f in m.faces:
        letters_ok = True
        for name, sign in f.word:
            if name not in edges:
                errors.append(
                    ComplexError("dangling-reference", f"face {f.name!r} references unknown edge {name!r}")
                )
                letters_ok = False
            if sign not in (1, -1):
                errors.append(ComplexError("bad-orientation", f"face {f.name!r}: orientation {sign!r}"))
                letters_ok = False
        if letters_ok and f.word and not _word_closed(f.word, edges):
            errors.append(
                ComplexError("unclosed-word", f"attaching word of face {f.name!r} is not a closed edge loop")
            )

    connected = _is_connected(m, m.basepoint)
    if not connected:
        errors.append(DisconnectedError(f"the 1-skeleton of {m.name!r} is not path-connected"))
    if not m.vertices:
        errors.append(ComplexError("missing-basepoint", f"{m.name!r} has no vertices"))

    return ValidationReport(m.name, m.cell_counts, euler_characteristic(m), connected, errors)


def _word_closed(word, edges) -> bool:
    def ends(letter):
        e = edges[letter[0]]
        return (e.src, e.dst) if letter[1] == 1 else (e.dst, e.src)

    start, end = ends(word[0])
    for letter in word[1:]:
        s, t = ends(letter)
        if s != end:
            return False
        end = t
    return end == start


def require_valid(m: CwComplex2) -> CwComplex2:
    validate(m).raise_for_errors()
    return m


def boundary_matrices(m: CwComplex2) -> tuple[IntMatrix, IntMatrix]:
    """Cellular boundaries ``d1: C1 -> C0`` and ``d2: C2 -> C1``.

    Column ``e`` of ``d1`` is ``dst - src``; entry ``(e, f)`` of ``d2`` is the
    signed number of times ``e`` occurs in the word of ``f``.
    """
    require_valid(m)
    vidx = {v: i for i, v in enumerate(m.vertices)}
    eidx = {e.name: i for i, e in enumerate(m.edges)}
    d1 = [[0] * len(m.edges) for _ in m.vertices]
    for j, e in enumerate(m.edges):
        d1[vidx[e.dst]][j] += 1
        d1[vidx[e.src]][j] -= 1
    d2 = [[0] * len(m.faces) for _ in m.edges]
    for j, f in enumerate(m.faces):
        for name, sign in f.word:
            d2[eidx[name]][j] += sign
    return (
        IntMatrix.from_rows(d1, len(m.edges)),
        IntMatrix.from_rows(d2, len(m.faces)),
    )


def fundamental_group_presentation(m: CwComplex2) -> GroupPresentation:
    """Presentation of pi_1(M, basepoint) obtained by collapsing a spanning tree.

    The tree is grown breadth-first from the basepoint, scanning edges in
    input order, so the result is reproducible.
    """
    require_valid(m)
    incident = {v: [] for v in m.vertices}
    for e in m.edges:
        incident[e.src].append(e)
        if e.dst != e.src:
            incident[e.dst].append(e)
    tree = set()
    seen = {m.basepoint}
    queue = deque([m.basepoint])
    while queue:
        v = queue.popleft()
        for e in incident[v]:
            w = e.dst if e.src == v else e.src
            if w not in seen:
                seen.add(w)
                tree.add(e.name)
                queue.append(w)
    generators = tuple(e.name for e in m.edges if e.name not in tree)
    relators = tuple(tuple(l for l in f.word if l[0] not in tree) for f in m.faces)
    return GroupPresentation(generators, relators)


# --- standard spaces -------------------------------------------------------

@dataclass(frozen=True)
class StandardSpace:
    """One of the standard one-vertex models.

    ``kind`` is ``"orientable"`` (parameter = genus), ``"nonorientable"``
    (parameter = number of crosscaps), ``"sphere"`` or ``"wedge"`` (parameter =
    number of circles).
    """

    kind: str
    parameter: int = 0

    def __post_init__(self):
        if self.kind not in ("orientable", "nonorientable", "sphere", "wedge"):
            raise ValueError(f"unknown standard space kind {self.kind!r}")
        if self.parameter < 0:
            raise ValueError(f"{self.kind} parameter must be non-negative, got {self.parameter}")
        if self.kind == "nonorientable" and self.parameter < 1:
            raise ValueError("a non-orientable surface needs at least one crosscap")
        if self.kind == "orientable" and self.parameter == 0:
            object.__setattr__(self, "kind", "sphere")

    @classmethod
    def parse(cls, text: str) -> StandardSpace:
        """Accepts ``genus=g``, ``crosscaps=k``, ``sphere`` and ``wedge=n``."""
        text = text.strip()
        if text == "sphere":
            return cls("sphere")
        match = re.fullmatch(r"(genus|crosscaps|wedge)\s*=\s*(-?\d+)", text)
        if match is None:
            raise ValueError(f"cannot parse surface spec {text!r} (use genus=g, crosscaps=k or sphere)")
        key, value = match.group(1), int(match.group(2))
        kind = {"genus": "orientable", "crosscaps": "nonorientable", "wedge": "wedge"}[key]
        return cls(kind, value)

    @property
    def is_surface(self) -> bool:
        return self.kind != "wedge"

    @property
    def is_orientable(self) -> bool:
        return self.kind in ("orientable", "sphere")

    def label(self) -> str:
        return {
            "orientable": f"Sigma_{self.parameter}",
            "nonorientable": f"N_{self.parameter}",
            "sphere": "S2",
            "wedge": f"wedge_{self.parameter}",
        }[self.kind]


def build_standard(space: StandardSpace | str) -> CwComplex2:
    if isinstance(space, str):
        space = StandardSpace.parse(space)
    n = space.parameter
    name = space.label()
    if space.kind == "sphere":
        return CwComplex2(name, ("x0",), (), (Face("f", ()),), "x0")
    if space.kind == "wedge":
        edges = tuple(Edge(f"a{i}", "x0", "x0") for i in range(1, n + 1))
        return CwComplex2(name, ("x0",), edges, (), "x0")
    if space.kind == "orientable":
        edges, word = [], []
        for i in range(1, n + 1):
            a, b = f"a{i}", f"b{i}"
            edges += [Edge(a, "x0", "x0"), Edge(b, "x0", "x0")]
            word += [(a, 1), (b, 1), (a, -1), (b, -1)]
        return CwComplex2(name, ("x0",), tuple(edges), (Face("f", tuple(word)),), "x0")
    edges = tuple(Edge(f"a{i}", "x0", "x0") for i in range(1, n + 1))
    word = tuple(l for i in range(1, n + 1) for l in ((f"a{i}", 1), (f"a{i}", 1)))
    return CwComplex2(name, ("x0",), edges, (Face("f", word),), "x0")


def _shape(m: CwComplex2):
    eidx = {e.name: i for i, e in enumerate(m.edges)}
    return (
        len(m.vertices),
        len(m.edges),
        tuple(tuple((eidx.get(n), s) for n, s in f.word) for f in m.faces),
    )


def recognize_standard(m: CwComplex2) -> StandardSpace | None:
    """Identify ``m`` with a builder model up to relabelling of cells.

    Only an exact structural match counts; a subdivided surface is not
    recognised.
    """
    v, e, f = m.cell_counts
    if v != 1:
        return None
    if f == 0:
        candidates = [StandardSpace("wedge", e)]
    elif f == 1:
        candidates = [StandardSpace("nonorientable", e)] if e else [StandardSpace("sphere")]
        if e and e % 2 == 0:
            candidates.append(StandardSpace("orientable", e // 2))
    else:
        return None
    shape = _shape(m)
    for space in candidates:
        if _shape(build_standard(space)) == shape:
            return space
    return None


def reversed_input_order(m: CwComplex2) -> CwComplex2:
    """Same complex with vertex and edge lists reversed (changes the spanning tree)."""
    return CwComplex2(m.name, m.vertices[::-1], m.edges[::-1], m.faces, m.basepoint)


def subdivided_surface(space: StandardSpace | str) -> CwComplex2:
    """Two-vertex cell structure on a standard surface.

    The first edge of the one-vertex model is split by a second vertex ``y``.
    The sphere has no edge to split, so it becomes two disks glued along a
    loop at ``y``, joined to the basepoint by an arc.
    """
    base = build_standard(space)
    if not base.edges:
        # sphere: a disk glued along a single loop at a second vertex
        return CwComplex2(
            base.name + "_sub",
            ("x0", "y"),
            (Edge("c", "x0", "y"), Edge("l", "y", "y")),
            (Face("upper", (("l", 1),)), Face("lower", (("l", -1),))),
            "x0",
        )
    first = base.edges[0].name
    edges = [Edge(first + "_1", "x0", "y"), Edge(first + "_2", "y", "x0")] + list(base.edges[1:])
    faces = []
    for f in base.faces:
        word = []
        for name, s in f.word:
            if name != first:
                word.append((name, s))
            elif s == 1:
                word += [(first + "_1", 1), (first + "_2", 1)]
            else:
                word += [(first + "_2", -1), (first + "_1", -1)]
        faces.append(Face(f.name, tuple(word)))
    return CwComplex2(base.name + "_sub", ("x0", "y"), tuple(edges), tuple(faces), "x0")


def make_complex(
    name: str,
    vertices: Sequence[str],
    edges: Sequence[tuple[str, str, str]],
    faces: Sequence[tuple[str, Sequence[tuple[str, int]]]],
    basepoint: str,
) -> CwComplex2:
    """Convenience constructor from plain tuples."""
    return CwComplex2(
        name,
        tuple(vertices),
        tuple(Edge(*e) for e in edges),
        tuple(Face(n, tuple(w)) for n, w in faces),
        basepoint,
    )
