"""Independent cross-check for the word-problem kernel.

Elements are represented by exact matrices of the geometric (reflection)
representation, which is faithful for every Coxeter group: generator x
acts on basis vector e_j by e_j - 2 B(x, j) e_x with B(x, j) =
-cos(pi / m(x, j)) off the diagonal (-1 for label infinity) and B(x, x) = 1.
Entries live in sympy with `expand` as the normal form, which is canonical
for the single-radical cosines of labels 2, 3, 4, 5, 6; other finite
labels are rejected rather than risking unsound hashing.  Hash collisions
are impossible (structurally equal keys are equal numbers), so the BFS
can only over-count, never merge distinct elements: the oracle errs on
the safe side.

Nothing here touches the rewriting engine; enumeration, the multiplication
table, and word evaluation all go through matrix products only.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import sympy

from .errors import DomainError, OracleUnsupported
from .presentation import INFINITY, Presentation

_SAFE_LABELS = {2, 3, 4, 5, 6}

Matrix = sympy.ImmutableMatrix


def _cosine(m: int | float):
    if m == INFINITY:
        return sympy.Integer(-1)
    if m not in _SAFE_LABELS:
        raise OracleUnsupported(
            f"matrix oracle supports labels {sorted(_SAFE_LABELS)} and infinity, not {m}"
        )
    return -sympy.cos(sympy.pi / int(m))


def _normalized(mat) -> Matrix:
    return Matrix(mat).applyfunc(sympy.expand)


def reflection_matrices(P: Presentation) -> list[Matrix]:
    """One exact reflection matrix per generator."""
    n = len(P.names)
    mats = []
    for x in range(n):
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                entry = sympy.Integer(1) if i == j else sympy.Integer(0)
                if i == x:
                    bilinear = sympy.Integer(1) if j == x else _cosine(P.coxeter_label(x, j))
                    entry = entry - 2 * bilinear
                row.append(entry)
            rows.append(row)
        mats.append(_normalized(rows))
    return mats


def element_matrix(P: Presentation, word: Sequence[int], gens: list[Matrix] | None = None) -> Matrix:
    gens = reflection_matrices(P) if gens is None else gens
    acc = _normalized(sympy.eye(len(P.names)))
    for x in word:
        acc = _normalized(acc * gens[x])
    return acc


@dataclass
class ReflectionTable:
    """BFS-enumerated finite group with a matrix multiplication table."""

    matrices: list[Matrix]
    words: list[tuple[int, ...]]  # BFS witness word per element
    index: dict[Matrix, int]
    gens: list[Matrix]

    def __post_init__(self):
        self._products: dict[tuple[int, int], int] = {}

    @property
    def order(self) -> int:
        return len(self.matrices)

    def product(self, i: int, j: int) -> int:
        key = (i, j)
        hit = self._products.get(key)
        if hit is None:
            hit = self.index[_normalized(self.matrices[i] * self.matrices[j])]
            self._products[key] = hit
        return hit

    def index_of_word(self, word: Sequence[int]) -> int:
        """Index of the element a generator word evaluates to."""
        n = self.matrices[0].rows
        acc = _normalized(sympy.eye(n))
        for x in word:
            acc = _normalized(acc * self.gens[x])
        return self.index[acc]


def bfs_table(P: Presentation, cap: int) -> ReflectionTable:
    """Enumerate a finite Coxeter group by matrix BFS from the identity.

    Raises DomainError if the cap is hit, since the multiplication table
    of a truncated enumeration would be meaningless.
    """
    gens = reflection_matrices(P)
    n = len(P.names)
    identity = _normalized(sympy.eye(n))
    matrices = [identity]
    words: list[tuple[int, ...]] = [()]
    index = {identity: 0}
    frontier = [0]
    while frontier:
        new_frontier = []
        for i in frontier:
            for x in range(n):
                mat = _normalized(matrices[i] * gens[x])
                if mat not in index:
                    if len(matrices) >= cap:
                        raise DomainError(
                            f"matrix BFS exceeded cap {cap}: group not finite at this scale"
                        )
                    index[mat] = len(matrices)
                    matrices.append(mat)
                    words.append(words[i] + (x,))
                    new_frontier.append(index[mat])
        frontier = new_frontier
    return ReflectionTable(matrices, words, index, gens)
