"""Exact word problem and canonical forms for Coxeter groups.

The engine is Tits' rewriting solution: a word is reduced iff no member of
its braid-move closure contains two equal adjacent letters, and all
reduced expressions of one element form a single closure.  ``reduce``
repeatedly deletes such pairs and finally returns the ShortLex-least
reduced expression (ShortLex in the generator-index order), which makes
element equality and hashing plain tuple comparison.

Naively materializing closures dies on commuting generators: the
commutation class of a shuffle of two independent alternating words has
binomial size.  Internally the closure search therefore runs on
commutation classes, each represented by its lexicographically least
shuffle (a heap-of-pieces normal form), with label-2 moves absorbed into
the representative and only moves of label >= 3 generating new classes.
Deletable pairs and replaceable alternating factors are detected directly
on the representative by a dependence scan, which is sound and complete
for the whole class.  The public ``braid_closure`` still materializes the
full word set, as small-scale callers expect.

Closures are worst-case exponential regardless; searches are capped
(default 200 000 nodes) and exceeding the cap raises ClosureCapExceeded
naming the offending word.  Results are memoized per presentation; cache
access is a plain dict mutation, safe under CPython's GIL, and elements
themselves are immutable values.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ClosureCapExceeded, UnknownGeneratorError, WordSyntaxError
from .presentation import INFINITY, CoxeterWord, Presentation, alternating_word

DEFAULT_CLOSURE_CAP = 200_000


@dataclass(frozen=True)
class CoxeterElement:
    """A group element, identified with its canonical reduced word."""

    word: CoxeterWord

    @property
    def length(self) -> int:
        return len(self.word)

    def is_identity(self) -> bool:
        return not self.word


IDENTITY = CoxeterElement(())


# -- per-presentation scratch tables -------------------------------------

def _caches(P: Presentation) -> dict:
    return P._kernel_cache  # created in Presentation.__post_init__


def _comm_matrix(P: Presentation) -> list[list[bool]]:
    cache = _caches(P)
    if "comm" not in cache:
        n = len(P.names)
        cache["comm"] = [
            [P.coxeter_label(i, j) == 2 for j in range(n)] for i in range(n)
        ]
    return cache["comm"]


def _move_pairs(P: Presentation) -> list[tuple[int, int, int]]:
    cache = _caches(P)
    if "move_pairs" not in cache:
        cache["move_pairs"] = [(i, j, m) for i, j, m in P.edges if m >= 3]
    return cache["move_pairs"]


def _label_matrix(P: Presentation) -> list[list[int | float]]:
    cache = _caches(P)
    if "labels" not in cache:
        n = len(P.names)
        cache["labels"] = [
            [P.coxeter_label(i, j) for j in range(n)] for i in range(n)
        ]
    return cache["labels"]


# -- commutation-class machinery ------------------------------------------

def _comm_normal(P: Presentation, word: CoxeterWord) -> CoxeterWord:
    """Lexicographically least shuffle of `word` under label-2 moves.

    Greedy heap extraction: at every step take the smallest letter whose
    occurrence is not blocked by an earlier dependent letter.
    """
    comm = _comm_matrix(P)
    remaining = list(word)
    out: list[int] = []
    while remaining:
        seen: set[int] = set()
        best = -1
        best_letter = -1
        for idx, x in enumerate(remaining):
            if (best < 0 or x < best_letter) and all(comm[s][x] for s in seen):
                best, best_letter = idx, x
            seen.add(x)
        out.append(remaining.pop(best))
    return tuple(out)


def _first_cancellation(P: Presentation, word: CoxeterWord) -> CoxeterWord | None:
    """Delete one s·s pair reachable by commutations, if any exists.

    Two equal letters can be made adjacent iff every letter between them
    commutes with both; scanning right from each position, the first
    dependent letter decides.
    """
    comm = _comm_matrix(P)
    for i, x in enumerate(word):
        for j in range(i + 1, len(word)):
            y = word[j]
            if y == x:
                return word[:i] + word[i + 1:j] + word[j + 1:]
            if not comm[y][x]:
                break
    return None


def _class_moves(P: Presentation, word: CoxeterWord) -> list[CoxeterWord]:
    """Words got by one label->=3 braid move on any member of the class.

    The x/y letters of a pair keep a fixed relative order across the whole
    commutation class (they are pairwise dependent), so a replaceable
    factor must be m consecutive members of that subsequence, alternating,
    with no outside letter caught between the ends in the dependence
    order.
    """
    out: list[CoxeterWord] = []
    for x, y, m in _move_pairs(P):
        chain = [p for p, z in enumerate(word) if z == x or z == y]
        if len(chain) < m:
            continue
        for k in range(len(chain) - m + 1):
            window = chain[k:k + m]
            if any(word[window[t]] == word[window[t + 1]] for t in range(m - 1)):
                continue
            arranged = _contiguize_and_flip(P, word, window, x, y)
            if arranged is not None:
                out.append(arranged)
    return out


def _contiguize_and_flip(
    P: Presentation,
    word: CoxeterWord,
    window: list[int],
    x: int,
    y: int,
) -> CoxeterWord | None:
    """Shuffle the window consecutive and swap its x/y letters, or None.

    An outside position blocks iff it sits above the window start and
    below the window end in the heap (dependence-path) order; otherwise
    below-or-free letters move out left and above-only letters move out
    right, which is a valid linear extension of the class.
    """
    comm = _comm_matrix(P)
    lo, hi = window[0], window[-1]
    wset = set(window)
    above: set[int] = set()
    above_letters = {word[lo]}
    for q in range(lo + 1, hi):
        z = word[q]
        if q in wset:
            above_letters.add(z)
        elif any(not comm[z][s] for s in above_letters):
            above.add(q)
            above_letters.add(z)
    below: set[int] = set()
    below_letters = {word[hi]}
    for q in range(hi - 1, lo, -1):
        z = word[q]
        if q in wset:
            below_letters.add(z)
        elif any(not comm[z][s] for s in below_letters):
            below.add(q)
            below_letters.add(z)
    if above & below:
        return None
    flipped = tuple(y if word[p] == x else x for p in window)
    middle_left = tuple(
        word[q] for q in range(lo + 1, hi) if q not in wset and q not in above
    )
    middle_right = tuple(word[q] for q in range(lo + 1, hi) if q in above)
    return word[:lo] + middle_left + flipped + middle_right + word[hi + 1:]


def _closure_classes(
    P: Presentation, word: CoxeterWord, cap: int
) -> tuple[str, CoxeterWord | frozenset[CoxeterWord]]:
    """Braid closure of `word` as commutation-class representatives.

    Returns ('cancelled', shorter_word) as soon as any class contains a
    deletable pair, else ('closed', representatives).
    """
    start = _comm_normal(P, word)
    seen: set[CoxeterWord] = {start}
    queue: deque[CoxeterWord] = deque([start])
    while queue:
        rep = queue.popleft()
        shorter = _first_cancellation(P, rep)
        if shorter is not None:
            return "cancelled", shorter
        for moved in _class_moves(P, rep):
            nf = _comm_normal(P, moved)
            if nf not in seen:
                if len(seen) >= cap:
                    raise ClosureCapExceeded(word, cap)
                seen.add(nf)
                queue.append(nf)
    return "closed", frozenset(seen)


# -- public kernel operations ---------------------------------------------

def _check_word(P: Presentation, word: Sequence[int]) -> CoxeterWord:
    w = tuple(word)
    for x in w:
        P.check_index(x)
    return w


def braid_closure(
    P: Presentation, word: Sequence[int], cap: int | None = None
) -> frozenset[CoxeterWord]:
    """All words reachable from `word` by braid moves, fully materialized.

    Intended for reduced words at small scale; the commutation moves are
    expanded here, so the set can be huge even when the class search is
    cheap.
    """
    cap = DEFAULT_CLOSURE_CAP if cap is None else cap
    start = _check_word(P, word)
    labels = _label_matrix(P)
    seen: set[CoxeterWord] = {start}
    queue: deque[CoxeterWord] = deque([start])
    while queue:
        w = queue.popleft()
        for i in range(len(w) - 1):
            x, y = w[i], w[i + 1]
            if x == y:
                continue
            m = labels[x][y]
            if m == INFINITY or i + m > len(w):
                continue
            if w[i:i + m] == alternating_word(x, y, m):
                moved = w[:i] + alternating_word(y, x, m) + w[i + m:]
                if moved not in seen:
                    if len(seen) >= cap:
                        raise ClosureCapExceeded(start, cap)
                    seen.add(moved)
                    queue.append(moved)
    return frozenset(seen)


def reduce(
    P: Presentation, word: Sequence[int], cap: int | None = None
) -> CoxeterElement:
    """Canonical form of the element the word represents.

    Tits' loop: search the braid closure for a member with two equal
    adjacent letters, delete the pair and restart; once none exists the
    word is reduced and the ShortLex-least closure member is canonical.
    """
    cap = DEFAULT_CLOSURE_CAP if cap is None else cap
    w = _check_word(P, word)
    cache = _caches(P).setdefault("reduce", {})
    hit = cache.get(w)
    if hit is not None:
        return hit
    current = w
    while True:
        status, payload = _closure_classes(P, current, cap)
        if status == "cancelled":
            current = payload  # type: ignore[assignment]
        else:
            canonical = min(payload)  # equal lengths: lex == ShortLex
            break
    elem = CoxeterElement(canonical)
    cache[w] = elem
    cache[canonical] = elem
    return elem


def multiply(
    P: Presentation, u: CoxeterElement, v: CoxeterElement, cap: int | None = None
) -> CoxeterElement:
    return reduce(P, u.word + v.word, cap)


def invert(P: Presentation, u: CoxeterElement, cap: int | None = None) -> CoxeterElement:
    """Inverse; letters are involutions so reversing the word suffices."""
    return reduce(P, u.word[::-1], cap)


def left_descents(
    P: Presentation, u: CoxeterElement, cap: int | None = None
) -> tuple[int, ...]:
    """Generators x with l(s_x u) < l(u), one multiply-and-compare each."""
    cache = _caches(P).setdefault("left_desc", {})
    hit = cache.get(u.word)
    if hit is None:
        hit = tuple(
            x
            for x in range(len(P.names))
            if reduce(P, (x,) + u.word, cap).length < u.length
        )
        cache[u.word] = hit
    return hit


def right_descents(
    P: Presentation, u: CoxeterElement, cap: int | None = None
) -> tuple[int, ...]:
    cache = _caches(P).setdefault("right_desc", {})
    hit = cache.get(u.word)
    if hit is None:
        hit = tuple(
            x
            for x in range(len(P.names))
            if reduce(P, u.word + (x,), cap).length < u.length
        )
        cache[u.word] = hit
    return hit


def enumerate_elements(
    P: Presentation, cap: int, closure_cap: int | None = None
) -> tuple[list[CoxeterElement], bool]:
    """BFS from the identity by right multiplication, up to `cap` elements.

    The flag is True iff the BFS closed, i.e. the group is finite and was
    enumerated completely within the cap.
    """
    if cap < 1:
        raise ValueError("cap must be >= 1")
    found: dict[CoxeterWord, CoxeterElement] = {(): IDENTITY}
    queue: deque[CoxeterElement] = deque([IDENTITY])
    while queue:
        u = queue.popleft()
        for x in range(len(P.names)):
            v = reduce(P, u.word + (x,), closure_cap)
            if v.word not in found:
                if len(found) >= cap:
                    return list(found.values()), False
                found[v.word] = v
                queue.append(v)
    return list(found.values()), True


# -- word syntax -----------------------------------------------------------

def parse_coxeter_word(P: Presentation, text: str) -> CoxeterWord:
    """Whitespace-separated generator names, e.g. ``a b a``."""
    word = []
    for token in text.split():
        try:
            word.append(P.index_of(token))
        except UnknownGeneratorError:
            raise WordSyntaxError(f"unknown generator {token!r}") from None
    return tuple(word)


def format_coxeter_word(P: Presentation, word: Iterable[int]) -> str:
    return " ".join(P.names[x] for x in word)
