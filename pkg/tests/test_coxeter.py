import random
from collections import deque

import pytest
from hypothesis import given, settings

from artinpar import (
    ClosureCapExceeded,
    WordSyntaxError,
    braid_closure,
    enumerate_elements,
    format_coxeter_word,
    invert,
    left_descents,
    multiply,
    parse_coxeter_word,
    reduce,
    right_descents,
)
from artinpar import catalog
from artinpar.coxeter import _closure_classes, _comm_matrix
from conftest import presentation_and_two_words, presentation_and_word

A2 = catalog.builtin("a2")
B2 = catalog.builtin("b2")


def w(P, text):
    return reduce(P, parse_coxeter_word(P, text))


# -- braid closure -----------------------------------------------------------

def test_closure_of_braid_word():
    assert braid_closure(A2, (0, 1, 0)) == frozenset({(0, 1, 0), (1, 0, 1)})


def test_closure_of_single_letter():
    assert braid_closure(A2, (0,)) == frozenset({(0,)})


def test_closure_of_commuting_pair():
    P = catalog.builtin("a1xa1")
    assert braid_closure(P, (0, 1)) == frozenset({(0, 1), (1, 0)})


def test_closure_cap_fails_loudly():
    P = catalog.builtin("a3")
    long_word = reduce(P, (0, 1, 0, 2, 1, 0)).word
    with pytest.raises(ClosureCapExceeded, match="cap 2"):
        braid_closure(P, long_word, cap=2)


# -- reduce ------------------------------------------------------------------

def test_reduce_examples():
    assert w(A2, "a b a b").word == (1, 0)
    assert w(A2, "a a").word == ()
    free = catalog.builtin("free2")
    assert reduce(free, (0, 1, 0, 1, 0, 1)).word == (0, 1, 0, 1, 0, 1)


def test_reduce_is_idempotent_on_canonicals():
    u = w(B2, "a b a b a")
    assert reduce(B2, u.word) == u


# -- multiply / invert / length ----------------------------------------------

def test_multiply_examples():
    aba = w(A2, "a b a")
    assert multiply(A2, aba, reduce(A2, ())).word == aba.word
    assert multiply(A2, aba, aba).word == ()
    ab = w(A2, "a b")
    assert multiply(A2, ab, ab).word == (1, 0)


def test_invert_examples():
    assert invert(A2, reduce(A2, ())).word == ()
    assert invert(A2, w(A2, "a")).word == (0,)
    assert invert(A2, w(A2, "a b")).word == (1, 0)


def test_length_examples():
    assert reduce(A2, ()).length == 0
    assert w(A2, "a b a").length == 3
    assert w(B2, "a b a b").length == 4


# -- descents ----------------------------------------------------------------

def test_descent_examples():
    identity = reduce(A2, ())
    assert left_descents(A2, identity) == () and right_descents(A2, identity) == ()
    aba = w(A2, "a b a")
    assert left_descents(A2, aba) == (0, 1) and right_descents(A2, aba) == (0, 1)
    ba = w(A2, "b a")
    assert left_descents(A2, ba) == (1,)
    assert right_descents(A2, ba) == (0,)


def test_left_descents_match_closure_first_letters():
    for P in (A2, B2, catalog.builtin("a3")):
        elements, _ = enumerate_elements(P, 30)
        for u in elements:
            first = {word[0] for word in braid_closure(P, u.word) if word}
            assert set(left_descents(P, u)) == first


# -- enumeration -------------------------------------------------------------

@pytest.mark.parametrize(
    "name, order",
    [("a2", 6), ("b2", 8), ("i2_5", 10), ("a1xa1", 4), ("a3", 24)],
)
def test_enumerate_finite_types(name, order):
    elements, finite = enumerate_elements(catalog.builtin(name), 100)
    assert finite and len(elements) == order
    assert len({e.word for e in elements}) == order


def test_enumerate_truncates_infinite_groups():
    elements, finite = enumerate_elements(catalog.builtin("free2"), 10)
    assert not finite and len(elements) == 10


# -- word syntax -------------------------------------------------------------

def test_word_roundtrip():
    word = parse_coxeter_word(A2, "a b a")
    assert word == (0, 1, 0)
    assert format_coxeter_word(A2, word) == "a b a"
    assert parse_coxeter_word(A2, "") == ()


def test_unknown_generator_rejected():
    with pytest.raises(WordSyntaxError, match="unknown generator"):
        parse_coxeter_word(A2, "az")


# -- engine properties -------------------------------------------------------

def _commutation_class(P, word):
    comm = _comm_matrix(P)
    seen = {word}
    queue = deque([word])
    while queue:
        v = queue.popleft()
        for i in range(len(v) - 1):
            if v[i] != v[i + 1] and comm[v[i]][v[i + 1]]:
                swapped = v[:i] + (v[i + 1], v[i]) + v[i + 2:]
                if swapped not in seen:
                    seen.add(swapped)
                    queue.append(swapped)
    return seen


@settings(max_examples=120, deadline=None)
@given(presentation_and_word())
def test_class_search_reconstructs_naive_closure(pw):
    # the compressed engine and the naive word BFS must describe the same
    # closure once commutation classes are expanded
    P, word = pw
    u = reduce(P, word)
    naive = set(braid_closure(P, u.word, cap=500_000))
    assert min(naive) == u.word
    status, reps = _closure_classes(P, u.word, 500_000)
    assert status == "closed"
    rebuilt = set()
    for rep in reps:
        rebuilt |= _commutation_class(P, rep)
    assert rebuilt == naive


@settings(max_examples=150, deadline=None)
@given(presentation_and_two_words())
def test_reduce_is_multiplicative(pww):
    P, w1, w2 = pww
    assert reduce(P, w1 + w2) == multiply(P, reduce(P, w1), reduce(P, w2))


@settings(max_examples=100, deadline=None)
@given(presentation_and_two_words())
def test_product_length_parity_and_bound(pww):
    P, w1, w2 = pww
    u, v = reduce(P, w1), reduce(P, w2)
    uv = multiply(P, u, v)
    assert uv.length <= u.length + v.length
    assert (uv.length - u.length - v.length) % 2 == 0


@settings(max_examples=150, deadline=None)
@given(presentation_and_word())
def test_length_invariants(pw):
    P, word = pw
    u = reduce(P, word)
    assert reduce(P, u.word) == u
    assert invert(P, u).length == u.length
    assert multiply(P, u, invert(P, u)).word == ()
    for x in range(len(P.names)):
        v = reduce(P, (x,) + u.word)
        assert abs(v.length - u.length) == 1


def test_random_products_match_matrix_oracle():
    from artinpar import oracle

    P = catalog.builtin("b2")
    gens = oracle.reflection_matrices(P)
    rng = random.Random(3)
    for _ in range(40):
        word = tuple(rng.randrange(2) for _ in range(rng.randint(0, 9)))
        u = reduce(P, word)
        assert oracle.element_matrix(P, word, gens) == oracle.element_matrix(
            P, u.word, gens
        )
