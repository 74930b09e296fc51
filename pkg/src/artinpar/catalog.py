"""Built-in presentations used by the verification suites and tests."""

from __future__ import annotations

import functools

from .presentation import Presentation, parse_presentation

_TEXTS = {
    "a2": "vertices: a b\nedge: a b 3\n",
    "b2": "vertices: a b\nedge: a b 4\n",
    "i2_5": "vertices: a b\nedge: a b 5\n",
    "a1xa1": "vertices: a b\nedge: a b 2\n",
    # absent edges carry no relation here, so the commuting pair of the
    # type-A3 diagram must be stored explicitly as a label-2 edge
    "a3": "vertices: a b c\nedge: a b 3\nedge: b c 3\nedge: a c 2\n",
    "free2": "vertices: a b\n",
    "free3": "vertices: a b c\n",
    "raag_square": (
        "vertices: a b c d\n"
        "edge: a b 2\nedge: b c 2\nedge: c d 2\nedge: a d 2\n"
    ),
    "triangle3": "vertices: a b c\nedge: a b 3\nedge: a c 3\nedge: b c 3\n",
}

BUILTIN_NAMES = tuple(sorted(_TEXTS))


@functools.lru_cache(maxsize=None)
def builtin(name: str) -> Presentation:
    return parse_presentation(_TEXTS[name])


@functools.lru_cache(maxsize=None)
def dihedral_presentation(m: int) -> Presentation:
    """Two generators joined by an edge labeled m."""
    return parse_presentation(f"vertices: a b\nedge: a b {m}\n")


def builtin_text(name: str) -> str:
    return _TEXTS[name]
