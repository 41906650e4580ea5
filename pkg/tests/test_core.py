import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ripsph.core import (Chain, Filtration, PersistencePair, Simplex,
                         SimplicialComplex, validate_complex)

vertex_sets = st.sets(st.integers(min_value=0, max_value=30), min_size=1,
                      max_size=6)


class TestSimplex:
    def test_canonical_form(self):
        assert Simplex((2, 0, 1)).vertices == (0, 1, 2)

    @given(vertex_sets, st.randoms())
    def test_canonicalization_idempotent(self, verts, rnd):
        ordered = list(verts)
        rnd.shuffle(ordered)
        assert Simplex(ordered) == Simplex(sorted(verts))

    def test_dimension(self):
        assert Simplex((5,)).dimension == 0
        assert Simplex((0, 1, 2, 3)).dimension == 3

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            Simplex(())

    def test_rejects_duplicates(self):
        with pytest.raises(ValueError):
            Simplex((1, 1, 2))

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            Simplex((-1, 0))

    def test_faces(self):
        assert set(Simplex((0, 1, 2)).faces()) == {
            Simplex((1, 2)), Simplex((0, 2)), Simplex((0, 1))}

    def test_subfaces_of_triangle(self):
        assert len(list(Simplex((0, 1, 2)).subfaces())) == 6


class TestValidateComplex:
    def test_smallest_closed_edge(self):
        c = SimplicialComplex([Simplex((0,)), Simplex((1,)), Simplex((0, 1))])
        assert validate_complex(c) == []

    def test_lone_triangle_names_missing_faces(self):
        c = SimplicialComplex([Simplex((0, 1, 2))])
        violations = validate_complex(c)
        for face in ["(0, 1)", "(0, 2)", "(1, 2)", "(0,)", "(1,)", "(2,)"]:
            assert any(face in v for v in violations)

    def test_paper_style_six_vertex_complex(self):
        # 6 vertices A..F -> 0..5, 11 edges, 2 triangles
        edges = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (1, 4),
                 (2, 3), (2, 4), (2, 5), (3, 5), (4, 5)]
        simplices = [Simplex((i,)) for i in range(6)]
        simplices += [Simplex(e) for e in edges]
        simplices += [Simplex((0, 1, 2)), Simplex((2, 4, 5))]
        c = SimplicialComplex(simplices)
        assert validate_complex(c) == []
        assert c.counts() == [6, 11, 2]

    def test_from_maximal_closes(self):
        c = SimplicialComplex.from_maximal([Simplex((0, 1, 2, 3))])
        assert validate_complex(c) == []
        assert c.counts() == [4, 6, 4, 1]


class TestChain:
    def test_requires_uniform_dimension(self):
        with pytest.raises(ValueError):
            Chain(1, [Simplex((0, 1)), Simplex((2,))])

    @given(st.sets(st.tuples(st.integers(0, 8), st.integers(0, 8)).map(
        lambda t: tuple(sorted(set(t)))).filter(lambda t: len(t) == 2),
        max_size=5))
    def test_addition_involution(self, edge_tuples):
        chain = Chain(1, [Simplex(e) for e in edge_tuples])
        extra = Simplex((20, 21))
        assert chain.add_simplex(extra).add_simplex(extra) == chain

    def test_shared_simplices_cancel(self):
        a = Chain(1, [Simplex((0, 1)), Simplex((1, 2))])
        b = Chain(1, [Simplex((1, 2)), Simplex((2, 3))])
        assert (a + b).simplices == frozenset({Simplex((0, 1)), Simplex((2, 3))})


class TestFiltration:
    def test_sorted_by_scale_then_dim_then_lex(self):
        f = Filtration([
            (Simplex((0, 1)), 1.0),
            (Simplex((1,)), 0.0),
            (Simplex((0,)), 0.0),
            (Simplex((0, 2)), 1.0),
            (Simplex((2,)), 0.0),
        ])
        assert [s.vertices for s, _ in f] == [(0,), (1,), (2,), (0, 1), (0, 2)]

    def test_prefix_is_valid_complex(self):
        entries = [(Simplex((i,)), 0.0) for i in range(3)]
        entries += [(Simplex((0, 1)), 1.0), (Simplex((0, 2)), 2.0),
                    (Simplex((1, 2)), 2.0), (Simplex((0, 1, 2)), 2.0)]
        f = Filtration(entries)
        assert f.validate() == []
        for k in range(1, len(f) + 1):
            prefix = SimplicialComplex(s for s, _ in f.entries[:k])
            assert validate_complex(prefix) == []

    def test_validate_flags_late_face(self):
        f = Filtration([(Simplex((0,)), 0.0), (Simplex((1,)), 0.0),
                        (Simplex((0, 1)), 0.5)])
        assert f.validate() == []
        bad = Filtration([(Simplex((0,)), 0.0), (Simplex((0, 1)), 0.5)])
        assert bad.validate() != []

    def test_text_dump_roundtrip_shape(self):
        f = Filtration([(Simplex((0,)), 0.0), (Simplex((1,)), 0.0),
                        (Simplex((0, 1)), 1.5)])
        lines = f.to_text().strip().splitlines()
        assert lines[-1] == "1.5 1 0 1"


class TestPersistencePair:
    def test_death_before_birth_rejected(self):
        with pytest.raises(ValueError):
            PersistencePair(0, 2.0, 1.0)

    def test_essential(self):
        p = PersistencePair(0, 0.0)
        assert p.is_essential and math.isinf(p.persistence)
