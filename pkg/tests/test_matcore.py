"""2x2 matrices, group elements, sequences, conjugation, serialization."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from matseq import (
    GF,
    GroupElement,
    Mat2,
    MatSeq,
    Q,
    Z,
    commutator,
    concat,
    conjugate,
    conjugate_mat,
    lift_seq,
    mat2,
    matseq_from_json,
    seq,
    subsequence,
)
from matseq.errors import BadIndex, ExactDivisionError, RingMismatch

from genseq import rand_group_element, rand_mat, rand_seq

import random


def mats(ring, lo=-6, hi=6):
    entry = st.integers(lo, hi).map(ring)
    return st.tuples(entry, entry, entry, entry).map(
        lambda t: Mat2(t[0], t[1], t[2], t[3]))


class TestMat2Arithmetic:
    def test_construction_and_entries(self):
        m = mat2(Q, [[1, 2], [3, 4]])
        assert (m.a, m.b, m.c, m.d) == (Q(1), Q(2), Q(3), Q(4))
        assert m.entries() == (Q(1), Q(2), Q(3), Q(4))

    def test_trace_det_disc(self):
        m = mat2(Z, [[1, 2], [3, 4]])
        assert m.trace() == Z(5)
        assert m.det() == Z(-2)
        # disc = (a - d)^2 + 4bc = trace^2 - 4 det
        assert m.disc() == Z(33)
        assert m.disc() == m.trace() ** 2 - 4 * m.det()

    def test_e_is_diagonal_gap(self):
        m = mat2(Z, [[7, 0], [0, 3]])
        assert m.e == Z(4)

    def test_adjugate_identity(self):
        m = mat2(Q, [[1, 2], [3, 4]])
        assert m * m.adjugate() == Mat2.identity(Q).scale(m.det())

    def test_shape_predicates(self):
        assert mat2(Z, [[1, 2], [0, 3]]).is_upper_triangular()
        assert not mat2(Z, [[1, 2], [1, 3]]).is_upper_triangular()
        assert mat2(Z, [[1, 0], [2, 3]]).is_lower_triangular()
        assert mat2(Z, [[5, 0], [0, 5]]).is_scalar()
        assert not mat2(Z, [[5, 0], [0, 4]]).is_scalar()
        assert mat2(Z, [[5, 0], [0, 4]]).is_diagonal()

    @given(st.sampled_from([Z, GF(5)]).flatmap(
        lambda r: st.tuples(mats(r), mats(r), mats(r))))
    @settings(max_examples=100)
    def test_matrix_ring_laws(self, data):
        x, y, z = data
        assert (x + y) + z == x + (y + z)
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        assert (x + y) * z == x * z + y * z
        one = Mat2.identity(x.ring)
        assert x * one == x and one * x == x

    @given(st.sampled_from([Z, Q, GF(7)]).flatmap(
        lambda r: st.tuples(mats(r), mats(r))))
    @settings(max_examples=100)
    def test_det_and_trace_laws(self, data):
        x, y = data
        assert (x * y).det() == x.det() * y.det()
        assert (x * y).trace() == (y * x).trace()
        assert (x + y).trace() == x.trace() + y.trace()

    def test_ring_mismatch_rejected(self):
        with pytest.raises(RingMismatch):
            mat2(Z, [[1, 0], [0, 1]]) + mat2(Q, [[1, 0], [0, 1]])


class TestCommutator:
    def test_example(self):
        a = mat2(Z, [[1, 1], [0, 1]])
        b = mat2(Z, [[1, 0], [1, 1]])
        assert commutator(a, b) == mat2(Z, [[1, 0], [0, -1]])

    @given(st.sampled_from([Z, GF(3)]).flatmap(
        lambda r: st.tuples(mats(r), mats(r))))
    @settings(max_examples=100)
    def test_traceless_and_antisymmetric(self, data):
        x, y = data
        c = commutator(x, y)
        assert c.trace() == x.ring.zero()
        assert c == -commutator(y, x)


class TestGroupElement:
    def test_requires_unit_determinant(self):
        GroupElement(mat2(Z, [[1, 1], [0, 1]]))  # det 1, fine
        with pytest.raises(ExactDivisionError):
            GroupElement(mat2(Z, [[2, 0], [0, 1]]))
        GroupElement(mat2(Q, [[2, 0], [0, 1]]))  # unit over a field

    def test_inverse(self):
        g = GroupElement(mat2(Q, [[1, 2], [3, 4]]))
        gi = g.inverse()
        assert g.m * gi.m == Mat2.identity(Q)
        assert (g * gi).m == Mat2.identity(Q)

    @given(st.integers(0, 10_000))
    @settings(max_examples=60)
    def test_random_inverse_round_trip(self, seed_value):
        rng = random.Random(seed_value)
        ring = rng.choice([Q, GF(5), Z])
        g = rand_group_element(rng, ring)
        assert g.m * g.inverse_matrix() == Mat2.identity(ring)


class TestConjugation:
    def test_conjugate_mat(self):
        g = GroupElement(mat2(Q, [[1, 1], [0, 1]]))
        a = mat2(Q, [[1, 0], [0, 2]])
        got = conjugate_mat(g, a)
        assert got == mat2(Q, [[1, 1], [0, 2]])
        assert got.trace() == a.trace()
        assert got.det() == a.det()

    @given(st.integers(0, 10_000))
    @settings(max_examples=60)
    def test_conjugation_is_group_action(self, seed_value):
        rng = random.Random(seed_value)
        ring = rng.choice([Q, GF(7)])
        s = rand_seq(rng, ring, 3)
        g = rand_group_element(rng, ring)
        h = rand_group_element(rng, ring)
        left = conjugate(g, conjugate(h, s))
        right = conjugate(g * h, s)
        assert left.terms == right.terms
        # conjugating back recovers the input
        back = conjugate(g.inverse(), conjugate(g, s))
        assert back.terms == s.terms


class TestMatSeq:
    def test_term_indexing_is_one_based(self):
        s = seq(Z, [[[1, 0], [0, 1]], [[0, 1], [1, 0]]])
        assert s.n == 2
        assert s.term(1) == mat2(Z, [[1, 0], [0, 1]])
        assert s.term(2) == mat2(Z, [[0, 1], [1, 0]])
        with pytest.raises(BadIndex):
            s.term(0)
        with pytest.raises(BadIndex):
            s.term(3)

    def test_entry_vectors(self):
        s = seq(Z, [[[1, 2], [3, 4]], [[5, 6], [7, 8]]])
        assert s.a == (Z(1), Z(5))
        assert s.b == (Z(2), Z(6))
        assert s.c == (Z(3), Z(7))
        assert s.d == (Z(4), Z(8))
        assert s.e == (Z(-3), Z(-3))

    def test_permuted(self):
        s = seq(Z, [[[1, 0], [0, 1]], [[2, 0], [0, 2]], [[3, 0], [0, 3]]])
        p = s.permuted((3, 1, 2))
        assert p.term(1) == s.term(3)
        assert p.term(2) == s.term(1)
        assert p.term(3) == s.term(2)
        with pytest.raises(BadIndex):
            s.permuted((1, 1, 2))

    def test_all_scalar(self):
        assert seq(Q, [[[2, 0], [0, 2]], [[0, 0], [0, 0]]]).all_scalar()
        assert not seq(Q, [[[2, 0], [0, 2]], [[1, 1], [0, 1]]]).all_scalar()

    def test_subsequence_and_concat(self):
        s = seq(Z, [[[1, 0], [0, 1]], [[2, 0], [0, 2]], [[3, 0], [0, 3]]])
        sub = subsequence(s, (1, 3))
        assert sub.n == 2 and sub.term(2) == s.term(3)
        joined = concat(sub, subsequence(s, (2,)))
        assert joined.n == 3 and joined.term(3) == s.term(2)

    def test_upper_triangular_predicate(self):
        assert seq(Z, [[[1, 2], [0, 1]], [[3, 0], [0, 3]]]).is_upper_triangular()
        assert not seq(Z, [[[1, 2], [0, 1]], [[3, 0], [1, 3]]]).is_upper_triangular()


class TestLiftAndJson:
    def test_lift_seq(self):
        s = seq(Z, [[[1, 2], [3, 4]]])
        lifted = lift_seq(s, Q)
        assert lifted.ring == Q
        assert lifted.term(1) == mat2(Q, [[1, 2], [3, 4]])

    def test_json_round_trip(self):
        s = seq(Q, [[[Fraction(1, 2), 0], [0, 1]], [[0, 1], [1, 0]]])
        doc = s.to_json()
        assert doc["ring"] == {"kind": "Q"}
        back = matseq_from_json(doc)
        assert back.ring == s.ring and back.terms == s.terms

    @given(st.integers(0, 10_000))
    @settings(max_examples=60)
    def test_random_json_round_trip(self, seed_value):
        rng = random.Random(seed_value)
        from genseq import RING_POOL
        ring = rng.choice(RING_POOL)
        s = rand_seq(rng, ring, rng.randint(1, 4))
        back = matseq_from_json(s.to_json())
        assert back.ring == s.ring and back.terms == s.terms

    def test_sort_key_total_order(self):
        xs = [mat2(Z, [[0, 1], [0, 0]]), mat2(Z, [[1, 0], [0, 0]]),
              mat2(Z, [[0, 0], [0, 0]])]
        ordered = sorted(xs, key=lambda m: m.sort_key())
        assert ordered[0] == mat2(Z, [[0, 0], [0, 0]])
