"""Labeled simplicial graphs presenting Coxeter and Artin groups.

A presentation is a finite ordered vertex set together with integer edge
labels m >= 2.  Vertices double as generator names; declaration order
fixes the generator indices and thereby the ShortLex order used for
canonical forms everywhere downstream.  Non-edges carry the label
INFINITY (no relation between the two generators) and the diagonal label
is 1 by convention, so ``coxeter_label`` is total.

Presentations are immutable after construction and every query is pure;
instances can be shared freely across concurrent tasks.

Two input formats are accepted::

    # text form: one vertices line, then zero or more edges
    vertices: a b c
    edge: a b 3
    edge: b c 4

    {"vertices": ["a", "b"], "edges": [{"u": "a", "v": "b", "m": 3}]}
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Iterable

from .errors import PresentationError, UnknownGeneratorError

INFINITY = math.inf

CoxeterWord = tuple[int, ...]


def alternating_word(x: int, y: int, m: int) -> CoxeterWord:
    """The alternating word x y x y ... of length m."""
    return tuple(x if i % 2 == 0 else y for i in range(m))


@dataclass(frozen=True)
class Presentation:
    """A labeled graph; generators are indexed 0..n-1 in `names` order."""

    names: tuple[str, ...]
    edges: tuple[tuple[int, int, int], ...]  # (i, j, m) with i < j, sorted

    def __post_init__(self):
        seen: set[str] = set()
        for name in self.names:
            if not name or any(c.isspace() for c in name):
                raise PresentationError(f"invalid generator name {name!r}")
            if name in seen:
                raise PresentationError(f"duplicate vertex name {name!r}")
            seen.add(name)
        n = len(self.names)
        labels: dict[tuple[int, int], int] = {}
        for i, j, m in self.edges:
            if not (0 <= i < n and 0 <= j < n):
                raise PresentationError(f"edge endpoint out of range: ({i}, {j})")
            if i == j:
                raise PresentationError(f"self-loop at {self.names[i]!r}")
            if i > j:
                raise PresentationError("edges must be stored with i < j")
            if not isinstance(m, int) or m < 2:
                raise PresentationError(f"label < 2 on edge ({self.names[i]}, {self.names[j]})")
            if (i, j) in labels:
                raise PresentationError(f"duplicate edge ({self.names[i]}, {self.names[j]})")
            labels[(i, j)] = m
        object.__setattr__(self, "_labels", labels)
        # scratch space for the word-problem kernel; not part of identity
        object.__setattr__(self, "_kernel_cache", {})

    @staticmethod
    def build(names: Iterable[str], edges: Iterable[tuple[int, int, int]]) -> "Presentation":
        """Normalize edge endpoint order and sort before construction."""
        normalized = tuple(sorted((min(i, j), max(i, j), m) for i, j, m in edges))
        return Presentation(tuple(names), normalized)

    # -- generator lookup ------------------------------------------------

    def index_of(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise UnknownGeneratorError(f"unknown generator {name!r}") from None

    def check_index(self, x: int) -> int:
        if not (isinstance(x, int) and 0 <= x < len(self.names)):
            raise UnknownGeneratorError(f"unknown generator index {x!r}")
        return x

    def subset(self, items: Iterable[int | str]) -> tuple[int, ...]:
        """Normalize a generator subset: resolve names, sort, deduplicate."""
        out = set()
        for item in items:
            out.add(self.index_of(item) if isinstance(item, str) else self.check_index(item))
        return tuple(sorted(out))

    # -- labeling --------------------------------------------------------

    def coxeter_label(self, x: int, y: int) -> int | float:
        """1 on the diagonal, the stored label on edges, INFINITY otherwise."""
        self.check_index(x)
        self.check_index(y)
        if x == y:
            return 1
        return self._labels.get((min(x, y), max(x, y)), INFINITY)

    def braid_relation_pair(self, x: int, y: int) -> tuple[CoxeterWord, CoxeterWord]:
        """The two sides of the braid relation carried by the edge {x, y}."""
        m = self.coxeter_label(x, y)
        if x == y or m == INFINITY:
            raise PresentationError(
                f"no edge between {self.names[x]!r} and {self.names[y]!r}"
            )
        return alternating_word(x, y, m), alternating_word(y, x, m)

    # -- subgraphs ---------------------------------------------------------

    def induced(self, members: Iterable[int | str]) -> "Presentation":
        """The full labeled subgraph spanned by `members`, order inherited."""
        sub = self.subset(members)
        position = {x: k for k, x in enumerate(sub)}
        edges = tuple(
            (position[i], position[j], m)
            for i, j, m in self.edges
            if i in position and j in position
        )
        return Presentation(tuple(self.names[x] for x in sub), edges)


def parse_presentation(text: str) -> Presentation:
    """Parse either the line-oriented text form or the JSON form."""
    if text.lstrip().startswith("{"):
        return _parse_json(text)
    return _parse_text(text)


def _parse_text(text: str) -> Presentation:
    names: list[str] | None = None
    edges: list[tuple[int, int, int]] = []
    seen_pairs: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("vertices:"):
            if names is not None:
                raise PresentationError("second vertices line", lineno)
            names = line[len("vertices:"):].split()
            dupes = {n for n in names if names.count(n) > 1}
            if dupes:
                raise PresentationError(
                    f"duplicate vertex name {sorted(dupes)[0]!r}", lineno
                )
        elif line.startswith("edge:"):
            if names is None:
                raise PresentationError("edge before vertices line", lineno)
            parts = line[len("edge:"):].split()
            if len(parts) != 3:
                raise PresentationError("edge lines need exactly 'edge: u v m'", lineno)
            u, v, mtext = parts
            try:
                i, j = names.index(u), names.index(v)
            except ValueError:
                missing = u if u not in names else v
                raise PresentationError(
                    f"edge endpoint {missing!r} not declared", lineno
                ) from None
            if i == j:
                raise PresentationError(f"self-loop at {u!r}", lineno)
            try:
                m = int(mtext)
            except ValueError:
                raise PresentationError(f"label {mtext!r} is not an integer", lineno) from None
            if m < 2:
                raise PresentationError(f"label < 2 on edge ({u}, {v})", lineno)
            pair = (min(i, j), max(i, j))
            if pair in seen_pairs:
                raise PresentationError(f"duplicate edge ({u}, {v})", lineno)
            seen_pairs.add(pair)
            edges.append((pair[0], pair[1], m))
        else:
            raise PresentationError(f"unrecognized line {line!r}", lineno)
    if names is None:
        raise PresentationError("missing vertices line")
    return Presentation.build(names, edges)


def _parse_json(text: str) -> Presentation:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise PresentationError(f"invalid JSON: {exc}") from None
    if not isinstance(data, dict) or "vertices" not in data:
        raise PresentationError("JSON form needs a 'vertices' list")
    names = data["vertices"]
    if not isinstance(names, list) or any(not isinstance(n, str) for n in names):
        raise PresentationError("'vertices' must be a list of strings")
    if len(set(names)) != len(names):
        raise PresentationError("duplicate vertex name in 'vertices'")
    edges: list[tuple[int, int, int]] = []
    seen_pairs: set[tuple[int, int]] = set()
    for k, entry in enumerate(data.get("edges", [])):
        if not isinstance(entry, dict) or not {"u", "v", "m"} <= set(entry):
            raise PresentationError(f"edge #{k} needs keys u, v, m")
        u, v, m = entry["u"], entry["v"], entry["m"]
        if u not in names or v not in names:
            missing = u if u not in names else v
            raise PresentationError(f"edge #{k} endpoint {missing!r} not declared")
        i, j = names.index(u), names.index(v)
        if i == j:
            raise PresentationError(f"edge #{k} is a self-loop at {u!r}")
        if not isinstance(m, int) or isinstance(m, bool):
            raise PresentationError(f"edge #{k} label must be an integer")
        if m < 2:
            raise PresentationError(f"label < 2 on edge ({u}, {v})")
        pair = (min(i, j), max(i, j))
        if pair in seen_pairs:
            raise PresentationError(f"duplicate edge ({u}, {v})")
        seen_pairs.add(pair)
        edges.append((pair[0], pair[1], m))
    return Presentation.build(names, edges)
