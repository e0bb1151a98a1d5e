"""Simultaneous triangularization: decision procedures and witnesses.

Two non-scalar 2x2 matrices commute exactly when their entry vectors
(b, e, c) are proportional, which makes commuting an equivalence relation on
the non-scalar terms of a sequence.  ``maximal_reduction`` keeps the first
term of each class; triangularizability is insensitive to the dropped
terms.

The full criterion: a sequence is triangularizable over its ring iff every
term is (eigenvalues in the ring plus a unimodular eigenvector) and all pair
obstructions sigma and triple obstructions Delta vanish.  The fast engine
reduces first and, for reduced length >= 4, only tests sigma for pairs
whose smaller index is 1, 2 or 3.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InternalInconsistency, UnsupportedRing
from .invariants import big_delta, sigma
from .matcore import GroupElement, Mat2, MatSeq, conjugate, conjugate_mat
from .rings import Scalar, bezout, primitive_vector, sqrt_in_ring


@dataclass(frozen=True)
class ReductionInfo:
    """Indices (1-based) kept by a maximal reduction, plus the commuting classes.

    ``kept_indices`` is empty exactly when every term is scalar; downstream
    code treats that as the trivially triangularizable case rather than an
    error.
    """

    kept_indices: tuple[int, ...]
    classes: tuple[tuple[int, ...], ...]

    @property
    def reduced_length(self) -> int:
        return len(self.kept_indices)

    @property
    def all_scalar(self) -> bool:
        return not self.kept_indices


@dataclass(frozen=True)
class TriangularizationWitness:
    """A conjugator g with conjugate(g, s) upper triangular, plus that form."""

    g: GroupElement
    triangular: MatSeq


def _proportional3(u: tuple[Scalar, Scalar, Scalar], v: tuple[Scalar, Scalar, Scalar]) -> bool:
    """All 2x2 minors of the 2x3 matrix (u; v) vanish."""
    return ((u[0] * v[1] - u[1] * v[0]).is_zero()
            and (u[0] * v[2] - u[2] * v[0]).is_zero()
            and (u[1] * v[2] - u[2] * v[1]).is_zero())


def commutes(x: Mat2, y: Mat2) -> bool:
    """xy = yx, tested via the entry-vector minors (no matrix products)."""
    return _proportional3((x.b, x.e, x.c), (y.b, y.e, y.c))


def is_commutative(s: MatSeq) -> bool:
    """Every pair of terms commutes."""
    vecs = [(t.b, t.e, t.c) for t in s.terms if not t.is_scalar()]
    return all(_proportional3(vecs[0], v) for v in vecs[1:])


def maximal_reduction(s: MatSeq) -> ReductionInfo:
    """Partition non-scalar terms into commuting classes; keep the first of each."""
    reps: list[tuple[Scalar, Scalar, Scalar]] = []
    members: list[list[int]] = []
    for i, t in enumerate(s.terms, start=1):
        if t.is_scalar():
            continue
        v = (t.b, t.e, t.c)
        for k, w in enumerate(reps):
            if _proportional3(v, w):
                members[k].append(i)
                break
        else:
            reps.append(v)
            members.append([i])
    kept = tuple(m[0] for m in members)
    return ReductionInfo(kept, tuple(tuple(m) for m in members))


# ---------------------------------------------------------------------------
# single matrices


def eigenvalues_in_ring(m: Mat2) -> tuple[Scalar, Scalar] | None:
    """Roots of the characteristic polynomial inside the ring, or None.

    The first root is the canonical one: (tr + r)/2 with r the canonical
    square root of the discriminant.  Over Z the parity of tr and r must
    match; in characteristic 2 the quadratic is solved by direct search.
    """
    ring = m.ring
    t, det = m.trace(), m.det()
    if ring.characteristic() == 2:
        roots = [x for v in range(ring.p)
                 for x in [Scalar(ring, v)]
                 if (x * x - t * x + det).is_zero()]
        if not roots:
            return None
        if len(roots) == 1:
            return (roots[0], roots[0])
        roots.sort(key=lambda x: x.sort_key(), reverse=True)
        return (roots[0], roots[1])
    r = sqrt_in_ring(m.disc())
    if r is None:
        return None
    if ring.kind == "Z" and (t.value + r.value) % 2 != 0:
        return None
    two = ring.scalar_from_int(2)
    return ((t + r) / two, (t - r) / two)


def eigenvector_for(m: Mat2, lam: Scalar) -> tuple[Scalar, Scalar] | None:
    """A nonzero ring eigenvector for the eigenvalue lam; None for scalar m."""
    v = (lam - m.d, m.c)
    if not (v[0].is_zero() and v[1].is_zero()):
        return v
    v = (m.b, lam - m.a)
    if not (v[0].is_zero() and v[1].is_zero()):
        return v
    return None


def complete_unimodular(v: tuple[Scalar, Scalar]) -> GroupElement:
    """A determinant-one matrix whose first column is the primitive vector v."""
    x, y = v
    g, p, q = bezout(x, y)
    if not g.is_unit():
        raise InternalInconsistency("completion of a non-primitive vector")
    ginv = g.inverse()
    p, q = p * ginv, q * ginv
    return GroupElement(Mat2(x, -q, y, p))


def is_eigenvector(m: Mat2, v: tuple[Scalar, Scalar]) -> bool:
    wx = m.a * v[0] + m.b * v[1]
    wy = m.c * v[0] + m.d * v[1]
    return (wx * v[1] - wy * v[0]).is_zero()


def singlet_triangularizable(m: Mat2) -> TriangularizationWitness | None:
    """A conjugator making the single matrix upper triangular, if one exists.

    Works over all five rings: the matrix must have its eigenvalues in the
    ring, and an eigenvector that extends to an invertible matrix (automatic
    over fields and the Euclidean rings supported here).
    """
    ring = m.ring
    if not (ring.is_field or ring.is_euclidean):
        raise UnsupportedRing(f"no eigenvector completion over {ring!r}")
    if m.is_upper_triangular():
        return TriangularizationWitness(GroupElement.identity(ring), MatSeq([m]))
    ev = eigenvalues_in_ring(m)
    if ev is None:
        return None
    vec = eigenvector_for(m, ev[0])
    if vec is None:
        # scalar matrix, already upper triangular (handled above)
        raise InternalInconsistency("non-triangular scalar matrix")
    vec = primitive_vector(vec)
    g = complete_unimodular(vec).inverse()
    t = conjugate_mat(g, m)
    if not t.c.is_zero():
        raise InternalInconsistency("eigenvector did not triangularize")
    return TriangularizationWitness(g, MatSeq([t]))


def pair_triangularizable(x: Mat2, y: Mat2) -> bool:
    """Both singlets triangularizable and sigma(x, y) = 0."""
    if not sigma(x, y).is_zero():
        return False
    return (singlet_triangularizable(x) is not None
            and singlet_triangularizable(y) is not None)


# ---------------------------------------------------------------------------
# sequences


def is_triangularizable(s: MatSeq) -> bool:
    """Full criterion: all sigma and Delta obstructions vanish and every
    term is individually triangularizable over the ring."""
    n = s.n
    for j in range(n):
        for k in range(j + 1, n):
            if not sigma(s[j], s[k]).is_zero():
                return False
    for j in range(n):
        for k in range(j + 1, n):
            for l in range(k + 1, n):
                if not big_delta(s[j], s[k], s[l]).is_zero():
                    return False
    return all(singlet_triangularizable(t) is not None for t in s.terms)


def is_triangularizable_fast(s: MatSeq, stats: dict | None = None) -> bool:
    """Reduction-based engine, linear in the number of sigma tests.

    Reduced length 0 is trivially triangularizable; lengths up to 3 defer to
    the full criterion on the reduced subsequence; for length l >= 4 it
    suffices that the kept terms pass the singlet test and that
    sigma(kept_j, kept_k) = 0 for j in {1, 2, 3} and j < k <= l.
    """
    red = maximal_reduction(s)
    l = red.reduced_length
    if l == 0:
        return True
    kept = [s.term(i) for i in red.kept_indices]
    if l <= 3:
        return is_triangularizable(MatSeq(kept))
    for j in range(min(3, l)):
        for k in range(j + 1, l):
            if stats is not None:
                stats["sigma_evals"] = stats.get("sigma_evals", 0) + 1
            if not sigma(kept[j], kept[k]).is_zero():
                return False
    return all(singlet_triangularizable(t) is not None for t in kept)


def triangularize(s: MatSeq) -> TriangularizationWitness | None:
    """A conjugator g with conjugate(g, s) upper triangular, or None.

    The witness is found as a primitive common eigenvector of the terms,
    completed to an invertible matrix by the Bezout identity.
    """
    ring = s.ring
    if s.is_upper_triangular():
        return TriangularizationWitness(GroupElement.identity(ring), s)
    red = maximal_reduction(s)
    if red.all_scalar:
        return TriangularizationWitness(GroupElement.identity(ring), s)
    if not is_triangularizable_fast(s):
        return None
    anchor = s.term(red.kept_indices[0])
    ev = eigenvalues_in_ring(anchor)
    if ev is None:
        raise InternalInconsistency("criterion passed but anchor has no eigenvalues")
    candidates = [ev[0]] if ev[0] == ev[1] else [ev[0], ev[1]]
    nonscalar = [t for t in s.terms if not t.is_scalar()]
    for lam in candidates:
        vec = eigenvector_for(anchor, lam)
        if vec is None:
            continue
        vec = primitive_vector(vec)
        if all(is_eigenvector(t, vec) for t in nonscalar):
            g = complete_unimodular(vec).inverse()
            t = conjugate(g, s)
            if not t.is_upper_triangular():
                raise InternalInconsistency("common eigenvector did not triangularize")
            return TriangularizationWitness(g, t)
    raise InternalInconsistency("criterion passed but no common eigenvector found")
