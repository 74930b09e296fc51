"""Minimal coset and double-coset decompositions along standard parabolics.

For X, Y subsets of the generators, every element u factors uniquely as
u = v w with v in W_X and w (X, {})-minimal (no left descent inside X),
and every double coset W_X u W_Y has a unique element of minimal length.
Both decompositions are computed by greedy descent stripping; each strip
moves one letter and keeps the total length constant, so length
additivity holds by construction and termination is immediate.

All functions are pure over immutable values.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import coxeter
from .coxeter import IDENTITY, CoxeterElement
from .presentation import Presentation


@dataclass(frozen=True)
class CosetDecomposition:
    """u = v * w with v in W_X and w (X, {})-minimal."""

    v: CoxeterElement
    w: CoxeterElement


@dataclass(frozen=True)
class DoubleCosetDecomposition:
    """u = u1 * w0 * u2 with u1 in W_X, u2 in W_Y, w0 (X, Y)-minimal."""

    u1: CoxeterElement
    w0: CoxeterElement
    u2: CoxeterElement


def decompose_left(
    P: Presentation,
    X: Sequence[int],
    u: CoxeterElement,
    cap: int | None = None,
) -> CosetDecomposition:
    """Strip left descents lying in X, least index first."""
    Xs = P.subset(X)
    v_word: list[int] = []
    w = u
    while True:
        descents = coxeter.left_descents(P, w, cap)
        x = next((x for x in Xs if x in descents), None)
        if x is None:
            break
        v_word.append(x)
        w = coxeter.reduce(P, (x,) + w.word, cap)
    return CosetDecomposition(coxeter.reduce(P, tuple(v_word), cap), w)


def _strip_right(
    P: Presentation,
    Y: Sequence[int],
    u: CoxeterElement,
    cap: int | None = None,
) -> tuple[CoxeterElement, CoxeterElement]:
    """u = w * v with v in W_Y and w free of right descents in Y."""
    Ys = P.subset(Y)
    v_word: list[int] = []
    w = u
    while True:
        descents = coxeter.right_descents(P, w, cap)
        y = next((y for y in Ys if y in descents), None)
        if y is None:
            break
        v_word.insert(0, y)
        w = coxeter.reduce(P, w.word + (y,), cap)
    return w, coxeter.reduce(P, tuple(v_word), cap)


def is_minimal(
    P: Presentation,
    X: Sequence[int],
    Y: Sequence[int],
    u: CoxeterElement,
    cap: int | None = None,
) -> bool:
    """Double-coset minimality via descent sets: no left descent in X and
    no right descent in Y."""
    Xs = set(P.subset(X))
    Ys = set(P.subset(Y))
    return not (Xs & set(coxeter.left_descents(P, u, cap))) and not (
        Ys & set(coxeter.right_descents(P, u, cap))
    )


def double_coset_decompose(
    P: Presentation,
    X: Sequence[int],
    Y: Sequence[int],
    u: CoxeterElement,
    cap: int | None = None,
) -> DoubleCosetDecomposition:
    """Alternate left-X and right-Y stripping until a fixed point."""
    u1 = IDENTITY
    u2 = IDENTITY
    w = u
    while True:
        left = decompose_left(P, X, w, cap)
        if left.v.length:
            u1 = coxeter.multiply(P, u1, left.v, cap)
            w = left.w
        w_new, right_v = _strip_right(P, Y, w, cap)
        if right_v.length:
            u2 = coxeter.multiply(P, right_v, u2, cap)
            w = w_new
        if not left.v.length and not right_v.length:
            return DoubleCosetDecomposition(u1, w, u2)


def member_parabolic(
    P: Presentation,
    X: Sequence[int],
    u: CoxeterElement,
    cap: int | None = None,
) -> bool:
    """u in W_X, decided by left stripping leaving nothing behind."""
    return decompose_left(P, X, u, cap).w.is_identity()


def enumerate_parabolic(
    P: Presentation,
    X: Sequence[int],
    cap: int,
    closure_cap: int | None = None,
) -> tuple[list[CoxeterElement], bool]:
    """BFS over W_X inside W, multiplying by generators of X only."""
    Xs = P.subset(X)
    found = {(): IDENTITY}
    queue = [IDENTITY]
    while queue:
        u = queue.pop(0)
        for x in Xs:
            v = coxeter.reduce(P, u.word + (x,), closure_cap)
            if v.word not in found:
                if len(found) >= cap:
                    return list(found.values()), False
                found[v.word] = v
                queue.append(v)
    return list(found.values()), True
