"""Tests for the sorting graph: vertices, moves, paths, and components.

Golden values pin the worked examples — the five-cell step/jump/affine
moves, the eight-entry spectral vector, the two-by-two component with
its three jumps, and the component dimensions 8, 60, and 30.  Property
suites check the spectral round-trip, the equivalence of the two
phrasings of the jump condition, and the shifted-Schur dimension count
against brute-force enumeration.
"""

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from vvmacd.errors import (
    IndexOutOfRange,
    InvalidFilling,
    NotASpectralVector,
    Unreachable,
)
from vvmacd.tableaux import RST, Filling, enumerate_rst, filling_of, partitions, rank
from vvmacd.ybgraph import (
    Edge,
    Graph,
    SpectralVector,
    Vertex,
    apply_psi,
    apply_si,
    compare,
    component,
    component_dimension,
    follow_path,
    graph_up_to,
    path_from_root,
    root_tableau,
    root_vertex,
    spectral_vector,
    vertex_from_spectral,
    vertex_of,
)

_SHAPES = [p for n in (2, 3, 4) for p in partitions(n)]

# the five-cell vertex of the worked examples
_T5 = RST([[5, 4, 2], [3, 1]])
_X5 = vertex_of((0, 0, 2, 1, 1), _T5)


def _small_vectors(n, max_entry=2, max_total=3):
    return [
        v
        for v in itertools.product(range(max_entry + 1), repeat=n)
        if sum(v) <= max_total
    ]


# ---------------------------------------------------------------------------
# roots and spectral vectors


class TestRoots:
    def test_root_tableau_fill_order(self):
        assert root_tableau((2, 1)) == RST([[3, 1], [2]])
        assert root_tableau((2, 2)) == RST([[4, 2], [3, 1]])
        assert root_tableau((3, 2)) == RST([[5, 3, 1], [4, 2]])
        assert root_tableau((4,)) == RST([[4, 3, 2, 1]])

    def test_root_spectral_values(self):
        assert root_vertex((2, 1)).zeta.entries == ((0, 1), (0, -1), (0, 0))
        assert root_vertex((4,)).zeta.entries == (
            (0, 3),
            (0, 2),
            (0, 1),
            (0, 0),
        )
        assert root_vertex((1, 1, 1)).zeta.entries == ((0, -2), (0, -1), (0, 0))

    @pytest.mark.parametrize("shape", _SHAPES)
    def test_root_is_degree_zero_identity(self, shape):
        x = root_vertex(shape)
        n = sum(shape)
        assert x.v == (0,) * n
        assert x.sigma == tuple(range(1, n + 1))
        ct = x.tableau.contents
        assert x.zeta.entries == tuple((0, ct[i]) for i in range(n))


class TestSpectralVectors:
    def test_eight_entry_value(self):
        t = RST([[8, 6, 5, 2], [7, 4, 1], [3]])
        z = spectral_vector((6, 2, 4, 2, 2, 3, 1, 4), t)
        assert z.entries == (
            (6, 1),
            (2, 2),
            (4, 3),
            (2, 1),
            (2, -1),
            (3, 0),
            (1, 0),
            (4, -2),
        )
        assert str(z) == (
            "[q^6s, q^2s^2, q^4s^3, q^2s, q^2s^-1, q^3, q, q^4s^-2]"
        )

    def test_five_entry_sorted_values(self):
        z = spectral_vector((1, 1, 1, 1, 0), RST([[5, 4, 3], [2, 1]]))
        assert z.entries == ((1, 0), (1, -1), (1, 2), (1, 1), (0, 0))
        z = spectral_vector((0, 1, 1, 1, 1), RST([[5, 3, 1], [4, 2]]))
        assert z.entries == ((0, 0), (1, 2), (1, 0), (1, 1), (1, -1))

    @pytest.mark.parametrize("shape", _SHAPES)
    def test_round_trip(self, shape):
        n = sum(shape)
        for t in enumerate_rst(shape):
            for v in _small_vectors(n, max_entry=2, max_total=2):
                x = vertex_of(v, t)
                back = vertex_from_spectral(x.zeta)
                assert back == x
                assert back.tableau == t and back.v == tuple(v)

    def test_rejections(self):
        with pytest.raises(NotASpectralVector):
            SpectralVector([(0, 0), (0, 0)])
        with pytest.raises(NotASpectralVector):
            vertex_from_spectral([(-1, 0), (0, 0)])
        # content pattern that no tableau realizes
        with pytest.raises(NotASpectralVector):
            vertex_from_spectral([(0, 5), (0, 0)])
        # realizable contents but inconsistent tie order
        with pytest.raises(NotASpectralVector):
            vertex_from_spectral([(0, 0), (0, 1), (1, -1)])

    def test_immutability(self):
        z = spectral_vector((0, 0), RST([[2], [1]]))
        with pytest.raises(AttributeError):
            z.entries = ()
        x = root_vertex((2,))
        with pytest.raises(AttributeError):
            x.v = (1, 0)

    def test_vertex_consistency_enforced(self):
        t = RST([[3, 1], [2]])
        good = vertex_of((0, 1, 0), t)
        with pytest.raises(ValueError):
            Vertex(t, good.zeta, (0, 1, 0), (1, 2, 3))
        with pytest.raises(ValueError):
            Vertex(t, spectral_vector((0, 0, 1), t), (0, 1, 0), rank((0, 1, 0)))
        with pytest.raises(ValueError):
            vertex_of((0, -1, 0), t)


class TestCompare:
    def test_examples(self):
        assert compare((1, 0), (0, 5)) == "succ"
        assert compare((0, 5), (1, 0)) == "prec"
        assert compare((1, -1), (1, 0)) == "nsim"
        assert compare((1, 0), (1, 2)) == "succ"
        assert compare((1, 2), (1, 0)) == "prec"
        assert compare((0, 3), (0, 3)) == "eq"

    def test_antisymmetry_on_grid(self):
        grid = [(n, m) for n in range(3) for m in range(-3, 4)]
        flip = {"succ": "prec", "prec": "succ", "nsim": "nsim", "eq": "eq"}
        for a in grid:
            for b in grid:
                assert compare(b, a) == flip[compare(a, b)]

    def test_sorted_vertex_only_succ_or_nsim(self):
        z = spectral_vector((1, 1, 1, 1, 0), RST([[5, 4, 3], [2, 1]]))
        results = {compare(z[i], z[i + 1]) for i in range(4)}
        assert results == {"succ", "nsim"}


# ---------------------------------------------------------------------------
# moves


class TestMoves:
    def test_step_example(self):
        y, kind = apply_si(_X5, 2)
        assert kind == "step"
        assert y.tableau == _T5
        assert y.v == (0, 2, 0, 1, 1) and y.sigma == (4, 1, 5, 2, 3)
        assert y.zeta.entries == ((0, 1), (2, 0), (0, 0), (1, 2), (1, -1))

    def test_jump_example(self):
        y, kind = apply_si(_X5, 4)
        assert kind == "correct_jump"
        assert y.tableau == RST([[5, 4, 3], [2, 1]])
        assert y.v == _X5.v and y.sigma == _X5.sigma
        assert y.zeta.entries == ((0, 1), (0, 0), (2, 0), (1, -1), (1, 2))

    def test_fall_example(self):
        # entries 4 and 5 share a column of the root tableau: immovable
        x = root_vertex((2, 2))
        y, kind = apply_si(x, 3)
        assert kind == "fall" and y == x

    def test_affine_example(self):
        y = apply_psi(_X5)
        assert y.tableau == _T5
        assert y.v == (0, 2, 1, 1, 1) and y.sigma == (5, 1, 2, 3, 4)
        assert y.zeta.entries == ((0, 0), (2, 0), (1, 2), (1, -1), (1, 1))
        assert y.degree == _X5.degree + 1

    def test_reverse_classes(self):
        y, kind = apply_si(_X5, 2)
        back, kind_back = apply_si(y, 2)
        assert kind_back == "reverse_step" and back == _X5
        jumped, _ = apply_si(_X5, 4)
        back, kind_back = apply_si(jumped, 4)
        assert kind_back == "reverse_jump" and back == _X5

    def test_index_errors(self):
        with pytest.raises(IndexOutOfRange):
            apply_si(_X5, 0)
        with pytest.raises(IndexOutOfRange):
            apply_si(_X5, 5)

    @pytest.mark.parametrize("shape", [(2, 1), (2, 2), (2, 1, 1)])
    def test_jump_condition_readings_agree(self, shape):
        # rule reading: the tableau exchange is a valid tableau and moves
        # the smaller entry from the south-east; remark reading: the
        # content gap of sigma[i], sigma[i]+1 is at least two.
        n = sum(shape)
        for t in enumerate_rst(shape):
            for v in _small_vectors(n, max_entry=1, max_total=2):
                for i in range(1, n):
                    if v[i - 1] != v[i]:
                        continue
                    x = vertex_of(v, t)
                    y, kind = apply_si(x, i)
                    k = x.sigma[i - 1]
                    assert x.sigma[i] == k + 1
                    valid = t.swapped(k) is not None
                    gap = t.contents[k - 1] - t.contents[k]
                    assert valid == (abs(gap) >= 2)
                    if kind == "fall":
                        assert not valid and y == x
                    elif kind == "correct_jump":
                        assert valid and gap >= 2
                        assert y.tableau == t.swapped(k)
                    else:
                        assert kind == "reverse_jump" and valid and gap <= -2

    @pytest.mark.parametrize("shape", [(2, 1), (3, 1), (2, 2)])
    def test_moves_preserve_consistency(self, shape):
        # Vertex.__init__ re-derives sigma and zeta, so surviving the
        # constructor after every move is the invariant check.
        n = sum(shape)
        x = root_vertex(shape)
        for labels in itertools.product(list(range(1, n)) + ["Psi"], repeat=3):
            y = x
            for l in labels:
                y = apply_psi(y) if l == "Psi" else apply_si(y, l)[0]
                assert y.sigma == rank(y.v)


# ---------------------------------------------------------------------------
# paths


class TestPaths:
    def test_empty_path(self):
        assert path_from_root((0, 0, 0), root_tableau((2, 1))) == []

    def test_jump_then_affine_example(self):
        path = path_from_root((0, 0, 1), RST([[3, 2], [1]]))
        assert path == ["s1", "Psi"]
        end = follow_path((2, 1), path)
        assert end.v == (0, 0, 1) and end.tableau == RST([[3, 2], [1]])

    @pytest.mark.parametrize("shape", _SHAPES)
    def test_reaches_every_pair(self, shape):
        n = sum(shape)
        for t in enumerate_rst(shape):
            for v in _small_vectors(n, max_entry=2, max_total=3):
                path = path_from_root(v, t)
                end = follow_path(shape, path)
                assert end == vertex_of(v, t), (v, t)

    @pytest.mark.parametrize("shape", [(2, 1), (2, 2), (3, 1)])
    def test_alternate_peel_same_length(self, shape):
        # unwinding the leftmost descent instead of the rightmost gives
        # another fall-free path; path lengths to a fixed vertex agree.
        n = sum(shape)
        for t in enumerate_rst(shape):
            for v in _small_vectors(n, max_entry=2, max_total=3):
                labels = []
                cur = list(v)
                while any(cur):
                    if cur[-1] > 0:
                        labels.append("Psi")
                        cur = [cur[-1] - 1] + cur[:-1]
                    else:
                        j = min(
                            i for i in range(n - 1) if cur[i] > cur[i + 1]
                        )
                        labels.append(f"s{j + 1}")
                        cur[j], cur[j + 1] = cur[j + 1], cur[j]
                labels.reverse()
                prefix = path_from_root((0,) * n, t)
                reference = path_from_root(v, t)
                assert follow_path(shape, prefix + labels) == vertex_of(v, t)
                assert len(prefix) + len(labels) == len(reference)

    def test_fall_labels_rejected(self):
        with pytest.raises(Unreachable):
            follow_path((2, 2), ["s3"])

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            path_from_root((0, 0), root_tableau((2, 1)))


# ---------------------------------------------------------------------------
# components


class TestComponents:
    def test_two_chain_component(self):
        g = component([[0, 0], [0, 1]])
        t_low = RST([[4, 2], [3, 1]])
        t_high = RST([[4, 3], [2, 1]])
        assert len(g.vertices) == 8
        assert {x.tableau for x in g.vertices} == {t_low, t_high}
        assert g.root == vertex_of((0, 0, 0, 1), t_low)
        assert g.sink == vertex_of((1, 0, 0, 0), t_high)
        steps = {
            (e.source.tableau, e.source.v, e.label, e.target.v)
            for e in g.edges
            if e.kind == "step"
        }
        expected_chain = [
            ((0, 0, 0, 1), "s3", (0, 0, 1, 0)),
            ((0, 0, 1, 0), "s2", (0, 1, 0, 0)),
            ((0, 1, 0, 0), "s1", (1, 0, 0, 0)),
        ]
        assert steps == {
            (t, src, lab, dst)
            for t in (t_low, t_high)
            for (src, lab, dst) in expected_chain
        }
        jumps = {
            (e.source.v, e.label, e.target.tableau)
            for e in g.edges
            if e.kind == "correct_jump"
        }
        assert jumps == {
            ((0, 0, 0, 1), "s1", t_high),
            ((0, 0, 1, 0), "s1", t_high),
            ((1, 0, 0, 0), "s2", t_high),
        }
        assert all(e.source.tableau == t_low for e in g.edges
                   if e.kind == "correct_jump")

    def test_single_tableau_component_has_no_jumps(self):
        g = component([[0, 1, 2], [0, 1]])
        assert len({x.tableau for x in g.vertices}) == 1
        assert all(e.kind == "step" for e in g.edges)
        assert len(g.vertices) == 30

    def test_twenty_five_vertex_component(self):
        g = component([[0, 1, 1], [1, 1]])
        assert len(g.vertices) == 25
        assert len({x.tableau for x in g.vertices}) == 5

    @pytest.mark.parametrize(
        "rows",
        [[[0, 0], [0, 1]], [[0, 0, 1], [1, 2]], [[0, 1, 1], [1, 1]],
         [[0, 0, 0], [1]], [[0, 1], [1]]],
    )
    def test_root_sink_extremality(self, rows):
        g = component(rows)
        targets = {e.target.zeta for e in g.edges}
        sources = {e.source.zeta for e in g.edges}
        assert g.root.zeta not in targets
        assert g.sink.zeta not in sources
        for x in g.vertices:
            if x != g.root:
                assert x.zeta in targets, x
            if x != g.sink:
                assert x.zeta in sources, x

    @pytest.mark.parametrize(
        "rows",
        [[[0, 0], [0, 1]], [[0, 0, 1], [1, 2]], [[0, 1, 1], [1, 1]],
         [[0, 1], [1]]],
    )
    def test_membership_filling(self, rows):
        g = component(rows)
        filling = Filling(rows)
        for x in g.vertices:
            assert filling_of(x.tableau, x.v) == filling

    def test_compatibility_at_root_and_sink(self):
        for rows in ([[0, 1], [1]], [[0, 0, 1], [1, 2]], [[0, 1], [2]],
                     [[0, 1, 2], [0, 1]], [[0, 0], [0, 1]]):
            filling = Filling(rows)
            g = component(rows)
            if filling.is_column_strict():
                z = g.root.zeta
                for i in range(len(z) - 1):
                    if compare(z[i], z[i + 1]) == "nsim":
                        assert z[i][1] == z[i + 1][1] + 1, (rows, i)
            if filling.is_row_strict():
                z = g.sink.zeta
                for i in range(len(z) - 1):
                    if compare(z[i], z[i + 1]) == "nsim":
                        assert z[i][1] == z[i + 1][1] - 1, (rows, i)

    def test_invalid_filling(self):
        with pytest.raises(InvalidFilling):
            component([[1, 0], [0, 0]])


class TestDimensions:
    def test_worked_examples(self):
        assert component_dimension([[0, 0], [0, 1]]) == (2, 8)
        assert component_dimension([[0, 0, 1], [1, 2]]) == (2, 60)
        assert component_dimension([[0, 1, 2], [0, 1]]) == (1, 30)

    def test_skipped_level(self):
        # value 1 absent: the repeated level shape must contribute 1
        nt, dim = component_dimension([[0, 0], [2]])
        g = component([[0, 0], [2]])
        assert dim == len(g.vertices)
        assert nt == len({x.tableau for x in g.vertices})

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_matches_enumeration(self, n):
        for shape in partitions(n):
            seen = set()
            for total in range(2 * n + 1):
                for mu in partitions(total, max_part=2):
                    if len(mu) > n:
                        continue
                    vplus = tuple(mu) + (0,) * (n - len(mu))
                    for t in enumerate_rst(shape):
                        seen.add(filling_of(t, vplus))
            for filling in seen:
                g = component(filling)
                nt, dim = component_dimension(filling)
                assert dim == len(g.vertices), filling
                assert nt == len({x.tableau for x in g.vertices}), filling


# ---------------------------------------------------------------------------
# bounded graphs and exports


class TestBoundedGraph:
    def test_vertex_census(self):
        g = graph_up_to((2, 1), 2)
        # two tableaux, all v in N^3 with |v| <= 2: 2 * (1 + 3 + 6)
        assert len(g.vertices) == 20
        assert all(x.degree <= 2 for x in g.vertices)
        assert g.sink is None
        assert g.root == root_vertex((2, 1))

    def test_every_vertex_reached_by_an_arrow(self):
        g = graph_up_to((2, 2), 2)
        targets = {e.target.zeta for e in g.edges if e.target is not None}
        for x in g.vertices:
            if x != g.root:
                assert x.zeta in targets

    def test_affine_edges_respect_bound(self):
        g = graph_up_to((2, 1), 1)
        for e in g.edges:
            if e.label == "Psi":
                assert e.source.degree < 1
                assert e.target.degree == e.source.degree + 1

    def test_fall_edges_have_no_target(self):
        g = graph_up_to((2, 2), 1)
        falls = [e for e in g.edges if e.kind == "fall"]
        assert falls and all(e.target is None for e in falls)

    def test_dot_output(self):
        g = graph_up_to((2, 1), 1)
        dot = g.to_dot()
        assert dot.startswith("digraph {")
        assert dot == graph_up_to((2, 1), 1).to_dot()
        assert "fall" not in dot
        assert 'style=dashed' in dot and '"Psi"' in dot
        assert '[label="[s, s^-1, 1]"]' in dot
        full = g.to_dot(include_pairs=True)
        assert "v=[0, 0, 0]" in full

    def test_json_output(self):
        g = component([[0, 0], [0, 1]])
        js = g.to_json()
        assert js["shape"] == [2, 2]
        assert len(js["vertices"]) == 8 and len(js["edges"]) == 9
        root = js["vertices"][js["root"]]
        assert root["v"] == [0, 0, 0, 1] and root["tableau"] == [[4, 2], [3, 1]]
        assert js["vertices"][js["sink"]]["v"] == [1, 0, 0, 0]
        for e in js["edges"]:
            assert e["kind"] in ("step", "correct_jump")
            assert isinstance(e["from"], int) and isinstance(e["to"], int)

    def test_graph_immutable(self):
        g = graph_up_to((2,), 1)
        with pytest.raises(AttributeError):
            g.vertices = ()

    def test_negative_bound(self):
        with pytest.raises(ValueError):
            graph_up_to((2, 1), -1)


# ---------------------------------------------------------------------------
# hypothesis properties


@st.composite
def vertex_data(draw):
    shape = draw(st.sampled_from(_SHAPES))
    n = sum(shape)
    tableaux = enumerate_rst(shape)
    t = tableaux[draw(st.integers(0, len(tableaux) - 1))]
    v = tuple(draw(st.lists(st.integers(0, 3), min_size=n, max_size=n)))
    return v, t


class TestHypothesis:
    @settings(max_examples=60, deadline=None)
    @given(vertex_data())
    def test_path_synthesis_random(self, data):
        v, t = data
        end = follow_path(t.shape, path_from_root(v, t))
        assert end == vertex_of(v, t)

    @settings(max_examples=60, deadline=None)
    @given(vertex_data())
    def test_spectral_round_trip_random(self, data):
        v, t = data
        x = vertex_of(v, t)
        assert vertex_from_spectral(x.zeta) == x

    @settings(max_examples=40, deadline=None)
    @given(vertex_data(), st.integers(1, 3))
    def test_moves_match_spectral_formula_random(self, data, i):
        v, t = data
        x = vertex_of(v, t)
        if i >= len(v):
            i = 1
        y, kind = apply_si(x, i)
        assert y.zeta == spectral_vector(y.v, y.tableau)
        z = apply_psi(x)
        assert z.zeta == spectral_vector(z.v, z.tableau)


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
