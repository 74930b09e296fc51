import random

from artinpar import (
    catalog,
    decompose_left,
    double_coset_decompose,
    enumerate_elements,
    enumerate_parabolic,
    is_minimal,
    left_descents,
    member_parabolic,
    multiply,
    parse_coxeter_word,
    reduce,
)

A2 = catalog.builtin("a2")


def w(P, text):
    return reduce(P, parse_coxeter_word(P, text))


def _subsets(n):
    out = [()]
    for x in range(n):
        out += [s + (x,) for s in out]
    return out


def test_decompose_left_examples():
    aba = w(A2, "a b a")
    d = decompose_left(A2, (0,), aba)
    assert d.v.word == (0,) and d.w.word == (1, 0)
    d2 = decompose_left(A2, (0,), w(A2, "b a"))
    assert d2.v.word == () and d2.w.word == (1, 0)
    d3 = decompose_left(A2, (), aba)
    assert d3.v.word == () and d3.w == aba


def test_is_minimal_examples():
    assert is_minimal(A2, (0,), (1,), reduce(A2, ()))
    assert is_minimal(A2, (0,), (1,), w(A2, "b a"))
    assert not is_minimal(A2, (0,), (1,), w(A2, "a b a"))


def test_double_coset_examples():
    d = double_coset_decompose(A2, (0,), (1,), w(A2, "a b a"))
    assert (d.u1.word, d.w0.word, d.u2.word) == ((0,), (1, 0), ())
    minimal = w(A2, "b a")
    d2 = double_coset_decompose(A2, (0,), (1,), minimal)
    assert (d2.u1.word, d2.w0, d2.u2.word) == ((), minimal, ())
    any_u = w(A2, "a b")
    d3 = double_coset_decompose(A2, (), (), any_u)
    assert (d3.u1.word, d3.w0, d3.u2.word) == ((), any_u, ())


def test_member_parabolic_examples():
    for X in _subsets(2):
        assert member_parabolic(A2, X, reduce(A2, ()))
    assert not member_parabolic(A2, (0,), w(A2, "a b a"))
    for u in enumerate_elements(A2, 10)[0]:
        assert member_parabolic(A2, (0, 1), u)


def test_decomposition_contracts_exhaustively():
    # every element of two finite groups, every subset pair
    for name in ("a2", "b2"):
        P = catalog.builtin(name)
        elements, _ = enumerate_elements(P, 20)
        subsets = _subsets(2)
        for X in subsets:
            WX = set(enumerate_parabolic(P, X, 20)[0])
            for u in elements:
                d = decompose_left(P, X, u)
                assert d.v in WX
                assert not (set(X) & set(left_descents(P, d.w)))
                assert multiply(P, d.v, d.w) == u
                assert d.v.length + d.w.length == u.length
            for Y in subsets:
                WY = set(enumerate_parabolic(P, Y, 20)[0])
                for u in elements:
                    d = double_coset_decompose(P, X, Y, u)
                    coset = {
                        multiply(P, a, multiply(P, u, b)) for a in WX for b in WY
                    }
                    min_len = min(v.length for v in coset)
                    shortest = [v for v in coset if v.length == min_len]
                    assert shortest == [d.w0]
                    assert is_minimal(P, X, Y, u) == (u == d.w0)


def test_stripping_order_does_not_matter():
    # greedy least-index stripping and random-order stripping agree
    P = catalog.builtin("a3")
    rng = random.Random(11)
    elements, _ = enumerate_elements(P, 50)
    for u in elements:
        for X in _subsets(3):
            expected = decompose_left(P, X, u)
            for _ in range(3):
                v_word = []
                current = u
                while True:
                    eligible = [x for x in X if x in left_descents(P, current)]
                    if not eligible:
                        break
                    x = rng.choice(eligible)
                    v_word.append(x)
                    current = reduce(P, (x,) + current.word)
                assert current == expected.w
                assert reduce(P, tuple(v_word)) == expected.v


def test_enumerate_parabolic_orders():
    P = catalog.builtin("a3")
    sizes = {(): 1, (0,): 2, (1,): 2, (2,): 2, (0, 1): 6, (1, 2): 6, (0, 2): 4, (0, 1, 2): 24}
    for X, size in sizes.items():
        elements, finite = enumerate_parabolic(P, X, 50)
        assert finite and len(elements) == size
