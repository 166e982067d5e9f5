import random

import pytest

from conftest import random_path, random_pseudo_free_pair
from kep import (
    Edge,
    EventuallyPeriodicPath,
    InputValidationError,
    IntMatrix,
    Path,
    build_graph,
    fixes_path,
    is_pseudo_free,
    kappa_edge,
    kappa_path,
    kappa_path_preimage,
    parse_edge,
    parse_path,
    phi_vertex_sum,
)

A1 = IntMatrix([[2]])
B1 = IntMatrix([[1]])
E0 = Edge(1, 1, 0)
E1 = Edge(1, 1, 1)


class TestGraph:
    def test_single_vertex_two_loops(self):
        g = build_graph(A1)
        assert g.edges() == [E0, E1]

    def test_two_by_two(self):
        g = build_graph(IntMatrix([[2, 1], [1, 2]]))
        assert g.edge_count() == 6
        assert len(g.out_edges(1)) == 3

    def test_cycle_graph(self):
        g = build_graph(IntMatrix([[0, 1], [1, 0]]))
        assert g.edges() == [Edge(1, 2, 0), Edge(2, 1, 0)]

    def test_rejects_zero_row(self):
        with pytest.raises(InputValidationError):
            build_graph(IntMatrix([[0, 0], [1, 1]]))

    def test_rejects_negative(self):
        with pytest.raises(InputValidationError):
            build_graph(IntMatrix([[1, -1], [1, 1]]))


class TestKappaEdge:
    def test_basic_division(self):
        # 1*1 + 0 = 0*2 + 1
        assert kappa_edge(A1, B1, 1, E0) == (E1, 0)

    def test_m_zero_is_identity(self):
        for e in (E0, E1):
            assert kappa_edge(A1, B1, 0, e) == (e, 0)

    def test_negative_m_floor_division(self):
        # -1 = (-1)*2 + 1: the residue must stay in [0, 2)
        assert kappa_edge(A1, B1, -1, E0) == (E1, -1)

    def test_rejects_missing_edge(self):
        with pytest.raises(InputValidationError):
            kappa_edge(A1, B1, 1, Edge(1, 1, 2))

    def test_label_bijection(self):
        rng = random.Random(31)
        for _ in range(100):
            a, b = random_pseudo_free_pair(rng, max_n=3, a_range=(1, 5))
            g = build_graph(a)
            m = rng.randint(-20, 20)
            for v in g.vertices():
                for w in g.vertices():
                    fiber = [Edge(v, w, t) for t in range(a[v - 1, w - 1])]
                    images = {kappa_edge(a, b, m, e)[0] for e in fiber}
                    assert images == set(fiber)


class TestKappaPath:
    def test_fold_example(self):
        path = Path.of([E1, E1])
        image, carry = kappa_path(A1, B1, 1, path)
        assert image == Path.of([E0, E0])
        assert carry == 1

    def test_m_zero(self):
        path = Path.of([E0, E1])
        assert kappa_path(A1, B1, 0, path) == (path, 0)

    def test_single_edge_carry(self):
        # 2*1 + 0 = 1*2 + 0
        image, carry = kappa_path(A1, B1, 2, Path.of([E0]))
        assert image == Path.of([E0])
        assert carry == 1

    def test_empty_path_returns_m(self):
        p = Path.empty(1)
        assert kappa_path(A1, B1, 7, p) == (p, 7)

    def test_preimage_inverts(self):
        rng = random.Random(32)
        for _ in range(200):
            a, b = random_pseudo_free_pair(rng, max_n=3)
            g = build_graph(a)
            p = random_path(g, rng, rng.randint(1, 6))
            m = rng.randint(-10, 10)
            image, _ = kappa_path(a, b, m, p)
            assert kappa_path_preimage(a, b, m, image) == p

    def test_grouping_independence(self):
        # Folding the whole path equals folding a prefix and feeding its
        # carry into the suffix, for every split point.
        rng = random.Random(33)
        for _ in range(150):
            a, b = random_pseudo_free_pair(rng, max_n=3)
            g = build_graph(a)
            p = random_path(g, rng, rng.randint(2, 6))
            m = rng.randint(-15, 15)
            image, carry = kappa_path(a, b, m, p)
            for cut in range(1, len(p)):
                left, right = Path(p.edges[:cut]), Path(p.edges[cut:])
                left_img, left_carry = kappa_path(a, b, m, left)
                right_img, right_carry = kappa_path(a, b, left_carry, right)
                assert left_img.concat(right_img) == image
                assert right_carry == carry


class TestCocycleLaws:
    def test_edge_laws_small_sweep(self):
        rng = random.Random(34)
        for _ in range(30):
            a, b = random_pseudo_free_pair(rng, max_n=3, a_range=(1, 4))
            g = build_graph(a)
            for e in g.edges():
                for m1 in range(-6, 7):
                    for m2 in range(-6, 7):
                        em2, p2 = kappa_edge(a, b, m2, e)
                        em12, p12 = kappa_edge(a, b, m1 + m2, e)
                        em1, p1 = kappa_edge(a, b, m1, em2)
                        assert em12 == em1
                        assert p12 == p1 + p2

    def test_path_laws_small_sweep(self):
        rng = random.Random(35)
        for _ in range(100):
            a, b = random_pseudo_free_pair(rng, max_n=3)
            g = build_graph(a)
            p = random_path(g, rng, rng.randint(1, 6))
            m1, m2 = rng.randint(-20, 20), rng.randint(-20, 20)
            pm2, c2 = kappa_path(a, b, m2, p)
            pm12, c12 = kappa_path(a, b, m1 + m2, p)
            pm1, c1 = kappa_path(a, b, m1, pm2)
            assert pm12 == pm1
            assert c12 == c1 + c2


class TestPseudoFree:
    def test_criterion_holds(self):
        result = is_pseudo_free(A1, B1)
        assert result.verdict is True
        assert result.witness is None

    def test_zero_b_refuted(self):
        result = is_pseudo_free(A1, IntMatrix([[0]]))
        assert result.verdict is False
        assert result.witness == (1, E0)
        image, carry = kappa_edge(A1, IntMatrix([[0]]), 1, E0)
        assert image == E0 and carry == 0

    def test_paper_style_2x2(self):
        a = IntMatrix([[2, 1], [1, 2]])
        b = IntMatrix([[1, 1], [1, 1]])
        assert is_pseudo_free(a, b).verdict is True

    def test_unknown_when_b_off_support(self):
        # B nonzero where A vanishes: the criterion fails but no edge can
        # witness a refutation, so the search stays inconclusive.
        a = IntMatrix([[1, 0], [1, 1]])
        b = IntMatrix([[1, 5], [1, 1]])
        result = is_pseudo_free(a, b, window=6)
        assert result.verdict is None


class TestFixesPath:
    def test_m_zero_always_fixes(self):
        x = EventuallyPeriodicPath(Path.empty(1), Path.of([E0]))
        assert fixes_path(A1, B1, 0, x)

    def test_halving_ratio_escapes(self):
        # ratio B/A = 1/2 per loop: 2*(1/2) is integral, 2*(1/4) is not
        x = EventuallyPeriodicPath(Path.empty(1), Path.of([E0]))
        assert not fixes_path(A1, B1, 2, x)

    def test_balanced_ratio_cycles(self):
        x = EventuallyPeriodicPath(Path.empty(1), Path.of([E0]))
        assert fixes_path(A1, IntMatrix([[2]]), 1, x)

    def test_prefix_failure(self):
        # prefix edge already breaks divisibility for odd m
        x = EventuallyPeriodicPath(Path.of([E0]), Path.of([Edge(1, 1, 0)]))
        assert not fixes_path(A1, B1, 1, x)


class TestPhiVertexSum:
    def test_example(self):
        assert phi_vertex_sum(A1, B1, 1, 1, 1) == 1

    def test_m_zero(self):
        assert phi_vertex_sum(A1, B1, 0, 1, 1) == 0

    def test_negative(self):
        assert phi_vertex_sum(A1, B1, -1, 1, 1) == -1

    def test_equals_m_times_b(self):
        rng = random.Random(36)
        for _ in range(60):
            a, b = random_pseudo_free_pair(rng, max_n=4)
            for m in range(-20, 21):
                for v in range(1, a.rows + 1):
                    for w in range(1, a.rows + 1):
                        expected = m * b[v - 1, w - 1] if a[v - 1, w - 1] else 0
                        assert phi_vertex_sum(a, b, m, v, w) == expected


class TestParsing:
    def test_edge_round_trip(self):
        assert parse_edge("e(1,2,3)") == Edge(1, 2, 3)
        assert str(Edge(1, 2, 3)) == "e(1,2,3)"

    def test_path_round_trip(self):
        p = parse_path("e(1,1,0).e(1,1,1)")
        assert p == Path.of([E0, E1])
        assert parse_path(str(p)) == p

    def test_empty_path(self):
        assert parse_path("v(2)") == Path.empty(2)

    def test_rejects_garbage(self):
        with pytest.raises(InputValidationError):
            parse_path("e(1,1)")

    def test_rejects_non_composable(self):
        with pytest.raises(InputValidationError):
            parse_path("e(1,2,0).e(1,2,0)")
