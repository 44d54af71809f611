import pytest

from gamma3_lab.canon import are_isomorphic, automorphisms
from gamma3_lab.catalog import (FI_EXTRA_EDGES, B, Gamma, N, P6sq, P6sqPlus, PatternSpec, Z,
                                bermond_meyer, claw, graph_R, graph_S, make_F0, make_Fi,
                                make_pattern, path, petersen, petersen_example_multigraph, wagner,
                                wagner_plus, wagner_plus_multigraph, wheel)
from gamma3_lab.detect import find_induced
from gamma3_lab.linegraph import line_graph


def degree_sequence(g):
    return sorted(g.degrees())


def test_gamma3_shape():
    g = Gamma(3)
    assert (g.n, g.number_of_edges()) == (8, 9)
    # two triangles with a three-edge path: six vertices of degree 2, the two path ends of degree 3
    assert degree_sequence(g) == [2] * 6 + [3] * 2


@pytest.mark.parametrize("i", range(0, 6))
def test_gamma_family_sizes(i):
    g = Gamma(i)
    assert g.n == 6 + max(i - 1, 0) if i else g.n == 5
    assert g.number_of_edges() == 6 + i


def test_small_families():
    assert claw().number_of_edges() == 3 and claw().degree(claw().v("x")) == 3
    assert path(10).n == 10 and path(10).number_of_edges() == 9
    assert Z(8).n == 11
    assert B(3, 5).n == 11 and N(1, 1, 1).n == 6
    assert wheel(4).number_of_edges() == 8 and wheel(5).number_of_edges() == 10


def test_bermond_meyer_isomorphisms():
    assert are_isomorphic(bermond_meyer(3), wheel(5))
    assert are_isomorphic(bermond_meyer(2), P6sq())
    assert are_isomorphic(bermond_meyer(4), P6sqPlus())
    for i in (5, 6, 7):
        assert find_induced(bermond_meyer(i), wheel(4)) is not None
    assert are_isomorphic(bermond_meyer(1), claw())


def test_wagner_family():
    w = wagner()
    assert w.n == 8 and set(w.degrees()) == {3}
    assert len(automorphisms(w)) == 16
    wp = wagner_plus()
    assert (wp.n, wp.number_of_edges()) == (16, 20)
    lg = line_graph(wagner_plus_multigraph())
    assert (lg.n, lg.number_of_edges()) == (20, 48)


def test_F0_and_published_lists():
    f0 = make_F0()
    assert (f0.n, f0.number_of_edges()) == (12, 20)
    assert sorted(FI_EXTRA_EDGES) == list(range(1, 11))
    for i in range(1, 11):
        fi = make_Fi(i)
        x = fi.v("x")
        nb = {fi.name(v) for v in fi.neighbors(x)}
        assert nb == {"t1", "p1", "w1", "w2", "w3", "w4"}
        assert fi.number_of_edges() == 20 + len(FI_EXTRA_EDGES[i])


def test_F0_has_the_gamma3_the_argument_excludes():
    f0 = make_F0()
    emb = find_induced(f0, Gamma(3))
    assert emb is not None
    vs = ["x", "w3", "p1", "p2", "p3", "p4", "t3", "t4"]
    sub = find_induced(f0, Gamma(3), allowed=sum(1 << f0.v(v) for v in vs))
    assert sub is not None and {f0.name(v) for v in sub.image()} == set(vs)


def test_other_named_graphs():
    assert petersen().n == 10 and len(automorphisms(petersen())) == 120
    assert graph_S().n == 6
    r = graph_R()
    assert r.n == 7
    h, idx = petersen_example_multigraph()
    assert (h.n, h.m) == (21, 28)
    assert set(idx) == {"x1'", "x1''", "x2'", "x2''"}


@pytest.mark.parametrize("text, spec", [
    ("claw", PatternSpec("claw")),
    ("K13", PatternSpec("claw")),
    ("gamma3", PatternSpec("Gamma", (3,))),
    ("b3_5", PatternSpec("B", (3, 5))),
    ("B35", PatternSpec("B", (3, 5))),
    ("n111", PatternSpec("N", (1, 1, 1))),
    ("g7", PatternSpec("G", (7,))),
    ("w5", PatternSpec("W", (5,))),
    ("p10", PatternSpec("P", (10,))),
    ("f7", PatternSpec("F", (7,))),
])
def test_pattern_spec_parse(text, spec):
    assert PatternSpec.parse(text) == spec


@pytest.mark.parametrize("bad, fragment", [
    ("w6", "4 or 5"), ("g8", "1..7"), ("f11", "1..10"), ("c2", ">= 3"), ("zzz", "cannot parse"),
])
def test_pattern_spec_errors(bad, fragment):
    with pytest.raises(ValueError, match=fragment):
        PatternSpec.parse(bad)


def test_fig9_alias_and_make_pattern():
    assert make_pattern("fig9_3").adj == make_pattern("f3").adj
    assert make_pattern(PatternSpec("Wagner")).adj == wagner().adj
