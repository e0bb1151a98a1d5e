"""Reduction, eigen helpers, and the triangularizability deciders."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from matseq import (
    GF,
    Mat2,
    Q,
    QT,
    Z,
    commutes,
    complete_unimodular,
    conjugate,
    eigenvalues_in_ring,
    eigenvector_for,
    is_commutative,
    is_eigenvector,
    is_triangularizable,
    is_triangularizable_fast,
    mat2,
    maximal_reduction,
    pair_triangularizable,
    seq,
    singlet_triangularizable,
    triangularize,
)
from matseq.errors import UnsupportedRing

from genseq import (
    rand_group_element,
    rand_mat,
    rand_reduced_seq,
    rand_seq,
    rand_triangularizable_seq,
    rand_upper_seq,
)

# All pair obstructions vanish but the triple obstruction does not.
OBSTRUCTED_TRIPLE = [[[1, 0], [0, 0]], [[1, 1], [0, 0]], [[0, 0], [1, 1]]]


class TestCommutation:
    def test_polynomial_in_a_term_commutes(self):
        a = mat2(Q, [[1, 2], [3, 4]])
        p = a.scale(Q(2)) + Mat2.identity(Q).scale(Q(5))
        assert commutes(a, p)
        assert is_commutative(seq(Q, [[[1, 2], [3, 4]]]))  # singleton

    def test_non_commuting_pair(self):
        s = seq(Q, [[[1, 0], [0, 0]], [[0, 1], [1, 0]]])
        assert not is_commutative(s)


class TestMaximalReduction:
    def test_duplicate_term_dropped(self):
        a = [[1, 0], [0, 0]]
        b = [[0, 1], [1, 0]]
        info = maximal_reduction(seq(Q, [a, a, b]))
        assert info.kept_indices == (1, 3)

    def test_pairwise_non_commuting_all_kept(self):
        s = seq(Q, [[[1, 0], [0, 0]], [[0, 1], [0, 0]], [[0, 0], [1, 0]]])
        info = maximal_reduction(s)
        assert info.kept_indices == (1, 2, 3)

    def test_commutative_reduces_to_one(self):
        a = mat2(Q, [[1, 2], [0, 3]])
        s = seq(Q, [[[1, 2], [0, 3]], [[2, 4], [0, 6]], [[5, 0], [0, 5]]])
        info = maximal_reduction(s)
        assert len(info.kept_indices) == 1

    def test_all_scalar_flagged(self):
        info = maximal_reduction(seq(Q, [[[2, 0], [0, 2]], [[0, 0], [0, 0]]]))
        assert info.all_scalar
        assert info.kept_indices == ()

    @given(st.integers(0, 10_000))
    @settings(max_examples=60)
    def test_kept_terms_pairwise_non_commuting(self, seed_value):
        rng = random.Random(seed_value)
        ring = rng.choice([Q, GF(3), GF(5)])
        s = rand_seq(rng, ring, rng.randint(2, 5))
        if s.all_scalar():
            return
        info = maximal_reduction(s)
        kept = [s.term(j) for j in info.kept_indices]
        for i in range(len(kept)):
            for j in range(i + 1, len(kept)):
                assert not commutes(kept[i], kept[j])
            assert not kept[i].is_scalar()


class TestEigenHelpers:
    def test_eigenvalues_canonical_order(self):
        assert eigenvalues_in_ring(mat2(Q, [[0, 2], [1, 1]])) == (Q(2), Q(-1))
        assert eigenvalues_in_ring(mat2(Q, [[0, 2], [1, 0]])) is None

    def test_integer_parity_rule(self):
        # disc = 5^2 but trace 1 and root 5 have matching parity... take one
        # where they differ: trace 1, disc 4 -> eigenvalues (1 +- 2)/2 not in Z.
        assert eigenvalues_in_ring(mat2(Z, [[1, 1], [1, 0]])) is None
        assert eigenvalues_in_ring(mat2(Z, [[0, 2], [1, 1]])) == (Z(2), Z(-1))

    def test_char2_direct_search(self):
        m = mat2(GF(2), [[0, 1], [1, 1]])  # x^2 + x + 1 irreducible over GF(2)
        assert eigenvalues_in_ring(m) is None
        j = mat2(GF(2), [[1, 1], [0, 1]])
        assert eigenvalues_in_ring(j) == (GF(2)(1), GF(2)(1))

    def test_eigenvector_and_completion(self):
        m = mat2(Z, [[0, 2], [1, 1]])
        v = eigenvector_for(m, Z(2))
        assert v is not None and is_eigenvector(m, v)
        g = complete_unimodular((Z(1), Z(1)))
        assert g.m.det() == Z(1)
        assert (g.m.a, g.m.c) == (Z(1), Z(1))

    @given(st.integers(0, 10_000))
    @settings(max_examples=80)
    def test_eigenvalues_satisfy_char_poly(self, seed_value):
        rng = random.Random(seed_value)
        ring = rng.choice([Z, Q, GF(3), GF(7)])
        m = rand_mat(rng, ring)
        got = eigenvalues_in_ring(m)
        if got is None:
            return
        l1, l2 = got
        assert l1 + l2 == m.trace()
        assert l1 * l2 == m.det()


class TestSinglet:
    def test_integer_witness(self):
        m = mat2(Z, [[0, 2], [1, 1]])
        w = singlet_triangularizable(m)
        assert w is not None
        assert w.triangular.term(1).is_upper_triangular()
        assert (w.triangular.term(1).a, w.triangular.term(1).d) == (Z(2), Z(-1))
        assert conjugate(w.g, seq(Z, [[[0, 2], [1, 1]]])).terms == w.triangular.terms
        # the first column of g^{-1} is the eigenvector (1, 1)
        gi = w.g.inverse_matrix()
        assert (gi.a, gi.c) == (Z(1), Z(1))

    def test_irrational_discriminant_absent(self):
        assert singlet_triangularizable(mat2(Q, [[0, 2], [1, 0]])) is None

    def test_upper_triangular_is_fixed(self):
        m = mat2(Q, [[1, 5], [0, 2]])
        w = singlet_triangularizable(m)
        assert w is not None and w.g.m == Mat2.identity(Q)

    @given(st.integers(0, 10_000))
    @settings(max_examples=60)
    def test_witness_is_always_valid(self, seed_value):
        rng = random.Random(seed_value)
        ring = rng.choice([Z, Q, GF(3), GF(5)])
        m = rand_mat(rng, ring)
        w = singlet_triangularizable(m)
        if w is None:
            return
        t = w.triangular.term(1)
        assert t.is_upper_triangular()
        assert t.trace() == m.trace() and t.det() == m.det()


class TestPairAndSequenceDeciders:
    def test_obstructed_pair(self):
        assert not pair_triangularizable(
            mat2(Q, [[1, 0], [0, 0]]), mat2(Q, [[0, 1], [1, 0]]))

    def test_upper_pair(self):
        assert pair_triangularizable(
            mat2(Q, [[1, 5], [0, 2]]), mat2(Q, [[3, 1], [0, 3]]))

    def test_obstructed_triple_rejected(self):
        s = seq(Q, OBSTRUCTED_TRIPLE)
        assert not is_triangularizable(s)
        assert not is_triangularizable_fast(s)

    def test_pairs_of_obstructed_triple_pass(self):
        s = seq(Q, OBSTRUCTED_TRIPLE)
        for j, k in ((1, 2), (1, 3), (2, 3)):
            assert pair_triangularizable(s.term(j), s.term(k))

    def test_reduced_length_four_fast_path(self):
        s = seq(Q, [[[j, 1], [0, 0]] for j in range(1, 5)])
        info = maximal_reduction(s)
        assert info.kept_indices == (1, 2, 3, 4)
        assert is_triangularizable_fast(s)
        assert is_triangularizable(s)

    def test_sigma_evaluation_budget(self):
        rng = random.Random(7)
        s = rand_reduced_seq(rng, Q, 100)
        stats = {}
        assert is_triangularizable_fast(s, stats)
        assert stats["sigma_evals"] <= 3 * s.n

    @given(st.integers(0, 10_000))
    @settings(max_examples=60, deadline=None)
    def test_engines_agree(self, seed_value):
        rng = random.Random(seed_value)
        ring = rng.choice([Q, GF(3), GF(5), Z])
        s = rand_seq(rng, ring, rng.randint(1, 5))
        assert is_triangularizable(s) == is_triangularizable_fast(s)

    @given(st.integers(0, 10_000))
    @settings(max_examples=60, deadline=None)
    def test_conjugated_upper_accepted(self, seed_value):
        rng = random.Random(seed_value)
        ring = rng.choice([Q, GF(5), GF(7)])
        s = rand_triangularizable_seq(rng, ring, rng.randint(1, 4))
        assert is_triangularizable(s)
        assert is_triangularizable_fast(s)

    def test_unsupported_ring_gate(self):
        # QSqrt is a field so it is supported; rings without division or
        # Bezout would not be.  The gate is exercised through the oracle
        # tests; here we just confirm the supported ones do not raise.
        assert is_triangularizable(seq(QT, [[[0, 1], [0, 0]]]))


class TestTriangularize:
    def test_upper_input_gets_identity(self):
        rng = random.Random(3)
        s = rand_upper_seq(rng, Q, 3)
        w = triangularize(s)
        assert w is not None and w.g.m == Mat2.identity(Q)
        assert w.triangular.terms == s.terms

    def test_integer_sequence_with_scalar_term(self):
        s = seq(Z, [[[0, 2], [1, 1]], [[3, 0], [0, 3]]])
        w = triangularize(s)
        assert w is not None
        assert w.triangular.is_upper_triangular()
        assert w.triangular.term(2) == mat2(Z, [[3, 0], [0, 3]])
        assert conjugate(w.g, s).terms == w.triangular.terms

    def test_obstructed_input_has_no_witness(self):
        assert triangularize(seq(Q, OBSTRUCTED_TRIPLE)) is None

    def test_thousand_random_gf5_witnesses(self):
        rng = random.Random(20260825)
        for _ in range(1000):
            s = rand_triangularizable_seq(rng, GF(5), 3)
            w = triangularize(s)
            assert w is not None
            assert all(c.is_zero() for c in w.triangular.c)
            assert conjugate(w.g, s).terms == w.triangular.terms
