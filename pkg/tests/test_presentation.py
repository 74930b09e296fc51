import math

import pytest
from hypothesis import given, settings

from artinpar import (
    INFINITY,
    Presentation,
    PresentationError,
    UnknownGeneratorError,
    parse_presentation,
)
from conftest import presentations

A2_TEXT = "vertices: a b\nedge: a b 3\n"


def test_parse_basic_braid_presentation():
    P = parse_presentation(A2_TEXT)
    assert P.names == ("a", "b")
    assert P.edges == ((0, 1, 3),)
    assert P.coxeter_label(0, 1) == 3


def test_parse_free_presentation_has_no_edges():
    P = parse_presentation("vertices: a b\n")
    assert P.edges == ()
    assert P.coxeter_label(0, 1) == INFINITY


def test_parse_empty_vertex_list_is_legal():
    P = parse_presentation("vertices:\n")
    assert P.names == ()


def test_comments_and_blank_lines_ignored():
    P = parse_presentation("# a comment\n\nvertices: a b\n# more\nedge: a b 5\n")
    assert P.coxeter_label(0, 1) == 5


@pytest.mark.parametrize(
    "text, fragment, line",
    [
        ("vertices: a a\n", "duplicate vertex", 1),
        ("vertices: a b\nedge: a c 3\n", "not declared", 2),
        ("vertices: a b\nedge: a b 1\n", "label < 2", 2),
        ("vertices: a b\nedge: a a 3\n", "self-loop", 2),
        ("vertices: a b\nedge: a b x\n", "not an integer", 2),
        ("vertices: a b\nwhat: ever\n", "unrecognized", 2),
        ("edge: a b 3\n", "before vertices", 1),
        ("vertices: a b\nedge: a b 3\nedge: b a 4\n", "duplicate edge", 3),
        ("vertices: a b\nedge: a b\n", "exactly", 2),
    ],
)
def test_text_parse_errors_carry_line_numbers(text, fragment, line):
    with pytest.raises(PresentationError) as err:
        parse_presentation(text)
    assert fragment in str(err.value)
    assert f"line {line}" in str(err.value)


def test_missing_vertices_line():
    with pytest.raises(PresentationError, match="missing vertices"):
        parse_presentation("# nothing\n")


def test_json_form_equivalent_to_text():
    P1 = parse_presentation(A2_TEXT)
    P2 = parse_presentation('{"vertices": ["a", "b"], "edges": [{"u": "a", "v": "b", "m": 3}]}')
    assert P1 == P2


@pytest.mark.parametrize(
    "text, fragment",
    [
        ('{"vertices": ["a", "a"]}', "duplicate"),
        ('{"vertices": ["a"], "edges": [{"u": "a", "v": "b", "m": 3}]}', "not declared"),
        ('{"vertices": ["a", "b"], "edges": [{"u": "a", "v": "b", "m": 1}]}', "label < 2"),
        ('{"vertices": ["a", "b"], "edges": [{"u": "a", "v": "b"}]}', "keys"),
        ("{not json", "invalid JSON"),
    ],
)
def test_json_parse_errors(text, fragment):
    with pytest.raises(PresentationError, match=fragment):
        parse_presentation(text)


def test_coxeter_label_conventions():
    P = parse_presentation("vertices: a b c\nedge: a b 4\n")
    assert P.coxeter_label(0, 0) == 1
    assert P.coxeter_label(0, 1) == 4
    assert P.coxeter_label(1, 0) == 4
    assert P.coxeter_label(0, 2) == INFINITY
    assert P.coxeter_label(0, 2) == math.inf
    with pytest.raises(UnknownGeneratorError):
        P.coxeter_label(0, 7)


def test_induced_full_and_empty():
    P = parse_presentation(A2_TEXT)
    assert P.induced((0, 1)) == P
    empty = P.induced(())
    assert empty.names == () and empty.edges == ()


def test_induced_triangle_keeps_spanned_edge():
    P = parse_presentation(
        "vertices: a b c\nedge: a b 3\nedge: b c 4\nedge: a c 5\n"
    )
    sub = P.induced(("a", "c"))
    assert sub.names == ("a", "c")
    assert sub.edges == ((0, 1, 5),)


def test_induced_outside_member_rejected():
    P = parse_presentation(A2_TEXT)
    with pytest.raises(UnknownGeneratorError):
        P.induced((0, 5))


def test_braid_relation_pair():
    P = parse_presentation("vertices: x y\nedge: x y 2\n")
    assert P.braid_relation_pair(0, 1) == ((0, 1), (1, 0))
    P3 = parse_presentation("vertices: x y\nedge: x y 3\n")
    assert P3.braid_relation_pair(0, 1) == ((0, 1, 0), (1, 0, 1))
    P5 = parse_presentation("vertices: x y\nedge: x y 5\n")
    assert P5.braid_relation_pair(0, 1) == ((0, 1, 0, 1, 0), (1, 0, 1, 0, 1))


def test_braid_relation_pair_needs_edge():
    P = parse_presentation("vertices: a b\n")
    with pytest.raises(PresentationError, match="no edge"):
        P.braid_relation_pair(0, 1)


def test_subset_resolves_names_and_sorts():
    P = parse_presentation("vertices: a b c\n")
    assert P.subset(("c", "a", "a")) == (0, 2)


@settings(max_examples=60)
@given(presentations())
def test_label_symmetry_and_relation_swap(P):
    n = len(P.names)
    for i in range(n):
        for j in range(n):
            assert P.coxeter_label(i, j) == P.coxeter_label(j, i)
    for i, j, _m in P.edges:
        lhs, rhs = P.braid_relation_pair(i, j)
        assert P.braid_relation_pair(j, i) == (rhs, lhs)


def _subsets_of(items):
    out = [()]
    for x in items:
        out += [s + (x,) for s in out]
    return out


@settings(max_examples=40)
@given(presentations())
def test_induced_is_transitive(P):
    n = len(P.names)
    for Y in _subsets_of(range(n)):
        PY = P.induced(Y)
        for X in _subsets_of(Y):
            positions = tuple(Y.index(x) for x in X)
            assert PY.induced(positions) == P.induced(X)
