import hypothesis.strategies as st

from artinpar import Presentation

NAMES = "abcdef"


@st.composite
def presentations(draw, max_vertices=4):
    n = draw(st.integers(min_value=1, max_value=max_vertices))
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            label = draw(st.sampled_from([0, 0, 2, 2, 3, 3, 4]))
            if label:
                edges.append((i, j, label))
    return Presentation.build(tuple(NAMES[:n]), edges)


@st.composite
def presentation_and_word(draw, max_len=8):
    P = draw(presentations())
    n = len(P.names)
    length = draw(st.integers(0, max_len))
    word = tuple(draw(st.integers(0, n - 1)) for _ in range(length))
    return P, word


@st.composite
def presentation_and_two_words(draw, max_len=6):
    P = draw(presentations())
    n = len(P.names)
    w1 = tuple(
        draw(st.integers(0, n - 1)) for _ in range(draw(st.integers(0, max_len)))
    )
    w2 = tuple(
        draw(st.integers(0, n - 1)) for _ in range(draw(st.integers(0, max_len)))
    )
    return P, w1, w2


@st.composite
def presentation_and_artin_word(draw, max_len=8):
    P = draw(presentations())
    n = len(P.names)
    length = draw(st.integers(0, max_len))
    word = tuple(
        (draw(st.integers(0, n - 1)), draw(st.sampled_from((1, -1))))
        for _ in range(length)
    )
    return P, word
