"""Garside normal form for two-generator Artin groups with finite label.

The Garside element D is the positive lift of the longest element of the
(finite, order 2m) dihedral Coxeter group, and the simple elements are
exactly the positive lifts of the 2m Coxeter elements: the identity, D,
and the 2m - 2 proper alternating prefixes.  Every group element has a
unique expression D^k p_1 ... p_l with each p_i a proper nonidentity
simple and each adjacent pair left-weighted (every left descent of
p_{i+1} is a right descent of p_i), so word equality reduces to normal
form identity.

A negative letter is rewritten as D^-1 times the simple lifting
(longest element) * s_z; the accumulated powers of D are then commuted to
the front through the conjugation tau(p) = w0 p w0, which permutes
simples, and the remaining simple factors are renormalized pairwise to a
fixed point.  The pairwise renormalization table, tau, and the per-letter
factors are tabulated once per presentation (hash-keyed, shared
read-only) via the Coxeter kernel, which is exact at this scale.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterable

from . import coxeter
from .coxeter import CoxeterElement
from .errors import OracleUnsupported
from .presentation import Presentation

# 2m simples, (2m)^2 renorm entries; beyond this the tabulation is refused
MAX_TABLE_LABEL = 64


@dataclass
class GarsideTable:
    elements: list[CoxeterElement]  # the simples, as Coxeter elements
    index: dict[tuple[int, ...], int]
    identity: int
    delta: int
    label: int
    pos_factor: list[int]  # generator z -> index of s_z
    neg_factor: list[int]  # generator z -> index of w0 * s_z
    tau: list[int]  # conjugation by the longest element
    renorm: dict[tuple[int, int], tuple[int, int]]
    artin: list[tuple[tuple[int, int], ...]]  # positive lift per simple


@functools.lru_cache(maxsize=None)
def garside_table(P: Presentation) -> GarsideTable:
    if len(P.names) != 2 or len(P.edges) != 1:
        raise OracleUnsupported("dihedral normal form needs exactly two joined generators")
    m = P.edges[0][2]
    if m > MAX_TABLE_LABEL:
        raise OracleUnsupported(f"label {m} too large to tabulate (max {MAX_TABLE_LABEL})")
    elements, closed = coxeter.enumerate_elements(P, 2 * m + 1)
    assert closed and len(elements) == 2 * m
    index = {e.word: i for i, e in enumerate(elements)}
    w0 = max(elements, key=lambda e: e.length)
    delta = index[w0.word]
    identity = index[()]
    pos_factor = [index[coxeter.reduce(P, (z,)).word] for z in range(2)]
    neg_factor = [
        index[coxeter.reduce(P, w0.word + (z,)).word] for z in range(2)
    ]
    tau = [
        index[coxeter.reduce(P, w0.word + e.word + w0.word).word] for e in elements
    ]
    renorm: dict[tuple[int, int], tuple[int, int]] = {}
    for i, p in enumerate(elements):
        for j, q in enumerate(elements):
            u, v = p, q
            while True:
                movable = [
                    s
                    for s in coxeter.left_descents(P, v)
                    if s not in coxeter.right_descents(P, u)
                ]
                if not movable:
                    break
                s = min(movable)
                u = coxeter.reduce(P, u.word + (s,))
                v = coxeter.reduce(P, (s,) + v.word)
            renorm[(i, j)] = (index[u.word], index[v.word])
    artin = [tuple((z, 1) for z in e.word) for e in elements]
    return GarsideTable(
        elements, index, identity, delta, m, pos_factor, neg_factor, tau, renorm, artin
    )


def dihedral_normal_form(
    P: Presentation,
    word: Iterable[tuple[int, int]],
    cap: int | None = None,
) -> tuple[int, tuple[tuple[tuple[int, int], ...], ...]]:
    """Left-greedy normal form (delta power, proper simple factors).

    Factors come back as positive Artin words; identical return values
    characterize equal group elements.
    """
    t = garside_table(P)
    factors: list[int] = []
    shifts: list[int] = []
    for z, s in word:
        if s == 1:
            factors.append(t.pos_factor[z])
            shifts.append(0)
        else:
            factors.append(t.neg_factor[z])
            shifts.append(-1)
    # commute the delta powers to the front; tau has order <= 2
    delta_power = 0
    for i in reversed(range(len(factors))):
        if delta_power % 2:
            factors[i] = t.tau[factors[i]]
        delta_power += shifts[i]
    # pairwise renormalization to a fixed point: deltas percolate to the
    # front and identities to the back
    while True:
        changed = False
        for i in range(len(factors) - 1):
            pair = t.renorm[(factors[i], factors[i + 1])]
            if pair != (factors[i], factors[i + 1]):
                factors[i], factors[i + 1] = pair
                changed = True
        if not changed:
            break
    while factors and factors[0] == t.delta:
        delta_power += 1
        factors.pop(0)
    while factors and factors[-1] == t.identity:
        factors.pop()
    return delta_power, tuple(t.artin[f] for f in factors)


def simple_elements(P: Presentation) -> list[CoxeterElement]:
    """The 2m divisors of the Garside element, as Coxeter elements."""
    return list(garside_table(P).elements)
