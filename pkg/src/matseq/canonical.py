"""Canonical forms under simultaneous conjugation, duality, reconstruction.

Every sequence over a field falls into exactly one of eight cases: three
stable ones (an anchor pair with nonvanishing pair obstruction and at least
one diagonalizable member; such a pair with both members non-diagonalizable;
all pair obstructions zero but a triple obstruction nonzero), two
triangularizable non-commutative ones (all kept terms diagonalizable, or
exactly one not), and three commutative ones (simultaneously diagonal,
Jordan-like, all scalar).  ``canonicalize`` conjugates, after a deterministic
rearrangement, onto a designated representative of the orbit; uniqueness
comes from the residual stabilizer of the normalized leading pair being the
scalars.

``reconstruct_semisimple`` and ``reconstruct_triangular`` invert the
separating invariant maps; ``dual_sequence`` crosses between the two
sequences sharing a semisimple invariant vector; ``desingularize_for_
reconstruction`` re-bases the two stable cases whose leading pair is
degenerate into the reconstruction domain.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import (
    Char2Unsupported,
    DegenerateDiscriminant,
    InternalInconsistency,
    LengthMismatch,
    LengthTooShort,
    NotApplicable,
    NotCanonical1a,
    NotCommutative,
    RingMismatch,
    UnsupportedRing,
    ZeroC2,
)
from .invariants import big_delta, sigma
from .matcore import GroupElement, Mat2, MatSeq, conjugate, lift_mat, lift_seq
from .rings import (
    RingDescriptor,
    Scalar,
    embed,
    primitive_vector,
    ring_to_json,
    sqrt_with_extension,
)
from .similarity import PhiVector, PsiValue
from .triangular import (
    eigenvalues_in_ring,
    eigenvector_for,
    is_commutative,
    is_eigenvector,
    maximal_reduction,
)


class CanonicalTag(str, Enum):
    STABLE_1A = "Stable1a"
    STABLE_1B = "Stable1b"
    STABLE_1C = "Stable1c"
    TRI_2A = "Tri2a"
    TRI_2B = "Tri2b"
    COMM_DIAGONAL = "CommDiagonal"
    COMM_JORDAN_LIKE = "CommJordanLike"
    ALL_SCALAR = "AllScalar"


@dataclass(frozen=True)
class CanonicalResult:
    """tag + permutation + conjugator + canonical form.

    Invariant: conjugate(g, permuted input) == form, after lifting the
    permuted input to ``ring_extension`` when that is not None.
    """

    tag: CanonicalTag
    permutation: tuple[int, ...]
    form: MatSeq
    g: GroupElement
    ring_extension: RingDescriptor | None = None

    def to_json(self):
        out = {"tag": self.tag.value,
               "permutation": list(self.permutation),
               "g": self.g.to_json(),
               "form": self.form.to_json()}
        if self.ring_extension is not None:
            out["extension"] = ring_to_json(self.ring_extension)
        return out


# ---------------------------------------------------------------------------
# anchor scans (all 0-based internally, 1-based in permutations)


def _first_sigma_pair(s: MatSeq) -> tuple[int, int] | None:
    for j in range(s.n):
        for k in range(j + 1, s.n):
            if not sigma(s[j], s[k]).is_zero():
                return (j, k)
    return None


def _first_delta_triple(s: MatSeq) -> tuple[int, int, int] | None:
    for j in range(s.n):
        for k in range(j + 1, s.n):
            for l in range(k + 1, s.n):
                if not big_delta(s[j], s[k], s[l]).is_zero():
                    return (j, k, l)
    return None


def _first_nonscalar(s: MatSeq) -> int | None:
    for i, t in enumerate(s.terms):
        if not t.is_scalar():
            return i
    return None


def _identity_perm(n: int) -> tuple[int, ...]:
    return tuple(range(1, n + 1))


def _front_perm(front: list[int], n: int) -> tuple[int, ...]:
    rest = [i for i in range(n) if i not in set(front)]
    return tuple(i + 1 for i in front + rest)


# ---------------------------------------------------------------------------
# classification


def classify(s: MatSeq) -> CanonicalTag:
    """The canonical-form case of s (deterministic, conjugation-invariant)."""
    if not s.ring.is_field:
        raise UnsupportedRing("canonical forms are computed over fields")
    if is_commutative(s):
        k = _first_nonscalar(s)
        if k is None:
            return CanonicalTag.ALL_SCALAR
        if s[k].disc().is_zero():
            return CanonicalTag.COMM_JORDAN_LIKE
        return CanonicalTag.COMM_DIAGONAL
    if s.ring.characteristic() == 2:
        raise Char2Unsupported("non-commutative canonical forms need characteristic != 2")
    pair = _first_sigma_pair(s)
    if pair is not None:
        j, k = pair
        if s[j].disc().is_zero() and s[k].disc().is_zero():
            return CanonicalTag.STABLE_1B
        return CanonicalTag.STABLE_1A
    if _first_delta_triple(s) is not None:
        return CanonicalTag.STABLE_1C
    red = maximal_reduction(s)
    if any(s.term(i).disc().is_zero() for i in red.kept_indices):
        return CanonicalTag.TRI_2B
    return CanonicalTag.TRI_2A


# ---------------------------------------------------------------------------
# basic normalizers


def _eigen_with_extension(m: Mat2) -> tuple[Scalar, Scalar, RingDescriptor | None]:
    """Eigenvalues in canonical order, adjoining one quadratic extension if needed."""
    ev = eigenvalues_in_ring(m)
    if ev is not None:
        return ev[0], ev[1], None
    if m.ring.characteristic() == 2:
        raise UnsupportedRing("eigenvalues lie in an unrepresentable extension field")
    r, ext = sqrt_with_extension(m.disc())
    ring = ext if ext is not None else m.ring
    t = embed(m.trace(), ring) if ext is not None else m.trace()
    two = ring.scalar_from_int(2)
    return (t + r) / two, (t - r) / two, ext


def _basis_change(v: tuple[Scalar, Scalar], w: tuple[Scalar, Scalar]) -> GroupElement:
    """The conjugator sending the lines of v and w to the coordinate axes."""
    p = Mat2(v[0], w[0], v[1], w[1])
    return GroupElement(p).inverse()


def _diag_conjugator(a: Mat2, lam1: Scalar, lam2: Scalar) -> GroupElement:
    v1 = primitive_vector(eigenvector_for(a, lam1))
    v2 = primitive_vector(eigenvector_for(a, lam2))
    return _basis_change(v1, v2)


def _jordanizer(a: Mat2) -> tuple[GroupElement, Scalar]:
    """g with conjugate(g, a) = [[lam, 1], [0, lam]], for non-scalar a with
    zero discriminant."""
    ev = eigenvalues_in_ring(a)
    if ev is None:
        raise InternalInconsistency("zero discriminant but no eigenvalue in the field")
    lam = ev[0]
    ring = a.ring
    n = a - Mat2.identity(ring).scale(lam)
    w = (ring.one(), ring.zero())
    img = (n.a, n.c)
    if img[0].is_zero() and img[1].is_zero():
        w = (ring.zero(), ring.one())
        img = (n.b, n.d)
    g = _basis_change(img, w)
    return g, lam


def _unit_lower_scale(ring: RingDescriptor, b2: Scalar) -> GroupElement:
    """diag(1, b2): conjugation divides the upper-right entries by b2."""
    return GroupElement(Mat2(ring.one(), ring.zero(), ring.zero(), b2))


def _lift(s: MatSeq, ext: RingDescriptor | None) -> MatSeq:
    return lift_seq(s, ext) if ext is not None else s


# ---------------------------------------------------------------------------
# canonicalize, case by case


def _canon_comm_diagonal(s: MatSeq) -> CanonicalResult:
    k = _first_nonscalar(s)
    lam1, lam2, ext = _eigen_with_extension(s[k])
    sp = _lift(s, ext)
    g = _diag_conjugator(sp[k], lam1, lam2)
    form = conjugate(g, sp)
    if not all(t.is_diagonal() for t in form.terms):
        raise InternalInconsistency("commuting terms did not diagonalize together")
    return CanonicalResult(CanonicalTag.COMM_DIAGONAL, _identity_perm(s.n), form, g, ext)


def _canon_comm_jordan(s: MatSeq) -> CanonicalResult:
    k = _first_nonscalar(s)
    g, _ = _jordanizer(s[k])
    form = conjugate(g, s)
    if not all(t.is_upper_triangular() and t.e.is_zero() for t in form.terms):
        raise InternalInconsistency("commuting terms did not reach the Jordan-like form")
    return CanonicalResult(CanonicalTag.COMM_JORDAN_LIKE, _identity_perm(s.n), form, g, None)


def _canon_stable_1a(s: MatSeq) -> CanonicalResult:
    j, k = _first_sigma_pair(s)
    if s[j].disc().is_zero():
        j, k = k, j
    perm = _front_perm([j, k], s.n)
    sp = s.permuted(perm)
    lam1, lam2, ext = _eigen_with_extension(sp[0])
    sp = _lift(sp, ext)
    g1 = _diag_conjugator(sp[0], lam1, lam2)
    t = conjugate(g1, sp)
    b2 = t[1].b
    if b2.is_zero() or t[1].c.is_zero():
        raise InternalInconsistency("nonzero pair obstruction with a triangular second term")
    g2 = _unit_lower_scale(t.ring, b2)
    return CanonicalResult(CanonicalTag.STABLE_1A, perm, conjugate(g2, t), g2 * g1, ext)


def _canon_stable_1b(s: MatSeq) -> CanonicalResult:
    j, k = _first_sigma_pair(s)
    perm = _front_perm([j, k], s.n)
    sp = s.permuted(perm)
    g1, _ = _jordanizer(sp[0])
    t = conjugate(g1, sp)
    a2 = t[1]
    if a2.c.is_zero():
        raise InternalInconsistency("nonzero pair obstruction with zero lower-left term")
    ring = t.ring
    four = ring.scalar_from_int(4)
    discz = a2.e * a2.e + four * a2.c * (a2.b - ring.one())
    r, ext = sqrt_with_extension(discz)
    if ext is not None:
        t = lift_seq(t, ext)
        g1 = GroupElement(lift_mat(g1.m, ext))
        ring = ext
    a2 = t[1]
    two_c2 = a2.c + a2.c
    best = None
    for sgn in (1, -1):
        root = r if sgn == 1 else -r
        z = (-(a2.e) + root) / two_c2
        h = GroupElement(Mat2(ring.one(), z, ring.zero(), ring.one()))
        cand = (conjugate(h, t), h * g1)
        if best is None or cand[0].sort_key() < best[0].sort_key():
            best = cand
    form, g = best
    return CanonicalResult(CanonicalTag.STABLE_1B, perm, form, g, ext)


def _canon_stable_1c(s: MatSeq) -> CanonicalResult:
    j, k, l = _first_delta_triple(s)
    perm = _front_perm([j, k, l], s.n)
    sp = s.permuted(perm)
    lam1, lam2, ext = _eigen_with_extension(sp[0])
    sp = _lift(sp, ext)
    v1 = primitive_vector(eigenvector_for(sp[0], lam1))
    v2 = primitive_vector(eigenvector_for(sp[0], lam2))
    # the eigenline shared with the second term goes first (second term upper)
    if is_eigenvector(sp[1], v1):
        g1 = _basis_change(v1, v2)
    elif is_eigenvector(sp[1], v2):
        g1 = _basis_change(v2, v1)
    else:
        raise InternalInconsistency("vanishing pair obstruction without a shared eigenline")
    t = conjugate(g1, sp)
    if not t[1].c.is_zero() or t[1].b.is_zero():
        raise InternalInconsistency("second term did not become strictly upper")
    if not t[2].b.is_zero() or t[2].c.is_zero():
        raise InternalInconsistency("third term is not strictly lower")
    g2 = _unit_lower_scale(t.ring, t[1].b)
    return CanonicalResult(CanonicalTag.STABLE_1C, perm, conjugate(g2, t), g2 * g1, ext)


def _canon_triangular(s: MatSeq, tag: CanonicalTag) -> CanonicalResult:
    red = maximal_reduction(s)
    kept = [i - 1 for i in red.kept_indices]
    if tag is CanonicalTag.TRI_2B:
        kk = next(i for i in kept if s[i].disc().is_zero())
        jj = next(i for i in kept if not s[i].disc().is_zero())
    else:
        jj, kk = kept[0], kept[1]
    perm = _front_perm([jj, kk], s.n)
    sp = s.permuted(perm)
    lam1, lam2, ext = _eigen_with_extension(sp[0])
    sp = _lift(sp, ext)
    v1 = primitive_vector(eigenvector_for(sp[0], lam1))
    v2 = primitive_vector(eigenvector_for(sp[0], lam2))
    # the eigenline common to the whole sequence goes first
    if all(is_eigenvector(m, v1) for m in sp.terms):
        g1 = _basis_change(v1, v2)
    elif all(is_eigenvector(m, v2) for m in sp.terms):
        g1 = _basis_change(v2, v1)
    else:
        raise InternalInconsistency("triangularizable sequence without a common eigenline")
    t = conjugate(g1, sp)
    if not all(m.is_upper_triangular() for m in t.terms):
        raise InternalInconsistency("sequence did not become upper triangular")
    b2 = t[1].b
    if b2.is_zero():
        raise InternalInconsistency("second kept term commutes with the first")
    g2 = _unit_lower_scale(t.ring, b2)
    return CanonicalResult(tag, perm, conjugate(g2, t), g2 * g1, ext)


def canonicalize(s: MatSeq) -> CanonicalResult:
    """Conjugate s (after a deterministic rearrangement) onto the canonical
    representative of its orbit; at most one quadratic extension is adjoined."""
    tag = classify(s)
    if tag is CanonicalTag.ALL_SCALAR:
        return CanonicalResult(tag, _identity_perm(s.n), s,
                               GroupElement.identity(s.ring), None)
    if tag is CanonicalTag.COMM_DIAGONAL:
        return _canon_comm_diagonal(s)
    if tag is CanonicalTag.COMM_JORDAN_LIKE:
        return _canon_comm_jordan(s)
    if tag is CanonicalTag.STABLE_1A:
        return _canon_stable_1a(s)
    if tag is CanonicalTag.STABLE_1B:
        return _canon_stable_1b(s)
    if tag is CanonicalTag.STABLE_1C:
        return _canon_stable_1c(s)
    return _canon_triangular(s, tag)


# ---------------------------------------------------------------------------
# similarity of commutative canonical forms


def commutative_similar(s1: MatSeq, s2: MatSeq) -> bool:
    """Similarity test for sequences already in a commutative canonical form.

    Diagonal forms are similar exactly when equal up to the simultaneous swap
    of the two diagonal entries; Jordan-like forms exactly when the diagonals
    agree and the upper-right vectors differ by one nonzero scalar.
    """
    if not is_commutative(s1) or not is_commutative(s2):
        raise NotCommutative("commutative_similar needs commutative sequences")
    if s1.ring != s2.ring:
        raise RingMismatch(f"{s1.ring!r} vs {s2.ring!r}")
    if s1.n != s2.n:
        raise LengthMismatch(f"lengths {s1.n} and {s2.n}")

    def kind(s: MatSeq) -> str | None:
        if all(t.is_diagonal() for t in s.terms):
            return "diagonal"
        if all(t.is_upper_triangular() and t.e.is_zero() for t in s.terms):
            return "jordan"
        return None

    k1, k2 = kind(s1), kind(s2)
    if k1 is None or k2 is None:
        raise NotApplicable("inputs must be in a commutative canonical form")
    if k1 != k2:
        return False
    if k1 == "diagonal":
        if s1 == s2:
            return True
        swapped = MatSeq(Mat2(t.d, t.b, t.c, t.a) for t in s1.terms)
        return swapped == s2
    if any(x != y for x, y in zip(s1.a, s2.a)):
        return False
    lam = None
    for x, y in zip(s1.b, s2.b):
        if x.is_zero() and y.is_zero():
            continue
        if x.is_zero() or y.is_zero():
            return False
        ratio = x / y
        if lam is None:
            lam = ratio
        elif ratio != lam:
            return False
    return True


# ---------------------------------------------------------------------------
# the dual sequence


def _require_form_1a(s: MatSeq) -> None:
    if s.n < 2:
        raise NotCanonical1a("a canonical pair needs at least two terms")
    a1, a2 = s[0], s[1]
    if not (a1.is_diagonal() and not a1.is_scalar()):
        raise NotCanonical1a("first term must be diagonal and non-scalar")
    if a2.b != s.ring.one():
        raise NotCanonical1a("second term must have upper-right entry 1")
    if a2.c.is_zero():
        raise NotCanonical1a("second term must have a nonzero lower-left entry")


def dual_sequence(s: MatSeq) -> MatSeq:
    """The partner sequence with the same semisimple invariants.

    For s in the stable canonical form with diagonal first term and b2 = 1,
    conjugating by [[0, 1/x], [-x, 0]] with x = sqrt(-c2) swaps the diagonal
    of every term while keeping b2 = 1 and c2 fixed.  Applying it twice
    returns a conjugate of s.
    """
    _require_form_1a(s)
    c2 = s[1].c
    x, ext = sqrt_with_extension(-c2)
    sp = _lift(s, ext)
    ring = sp.ring
    g = GroupElement(Mat2(ring.zero(), x.inverse(), -x, ring.zero()))
    return conjugate(g, sp)


# ---------------------------------------------------------------------------
# reconstruction from invariant values


def _solve_linear(rows: list[list[Scalar]], rhs: list[Scalar], ring: RingDescriptor) -> list[Scalar]:
    """Solve a small square system over a field by Gaussian elimination."""
    n = len(rows)
    aug = [list(rows[i]) + [rhs[i]] for i in range(n)]
    for col in range(n):
        piv = next((i for i in range(col, n) if not aug[i][col].is_zero()), None)
        if piv is None:
            raise InternalInconsistency("singular reconstruction system")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = aug[col][col].inverse()
        aug[col] = [x * inv for x in aug[col]]
        for i in range(n):
            if i != col and not aug[i][col].is_zero():
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[col])]
    return [aug[i][n] for i in range(n)]


def _leading_roots(ring: RingDescriptor, t1: Scalar, t11: Scalar):
    """Roots of x^2 - t1 x + (t1^2 - t11)/2, with one extension if needed."""
    two = ring.scalar_from_int(2)
    disc = two * t11 - t1 * t1
    if disc.is_zero():
        raise DegenerateDiscriminant("equal eigenvalues for the leading term")
    r, ext = sqrt_with_extension(disc)
    if ext is not None:
        t1 = embed(t1, ext)
        ring = ext
        two = ring.scalar_from_int(2)
    a1 = (t1 + r) / two
    d1 = (t1 - r) / two
    return ring, ext, a1, d1


def reconstruct_semisimple(v: PhiVector) -> MatSeq:
    """The canonical-form sequence whose semisimple invariant vector is v."""
    ring = v.ring
    if not ring.is_field:
        raise UnsupportedRing("reconstruction needs a field; lift the vector first")
    if ring.characteristic() == 2:
        raise Char2Unsupported("reconstruction needs characteristic != 2")
    if v.n < 2:
        raise LengthTooShort("reconstruction needs n >= 2")
    if len(v.values) != 4 * v.n - 3:
        raise LengthMismatch(f"expected {4 * v.n - 3} values, got {len(v.values)}")
    t1, t11, t2, t22, t12 = v.values[:5]
    ring, ext, a1, d1 = _leading_roots(ring, t1, t11)
    if ext is not None:
        t2, t22, t12 = (embed(x, ring) for x in (t2, t22, t12))
    two = ring.scalar_from_int(2)
    e1 = a1 - d1
    a2 = (d1 * t2 - t12) / (d1 - a1)
    d2 = (t12 - a1 * t2) / (d1 - a1)
    c2 = (t22 - a2 * a2 - d2 * d2) / two
    if c2.is_zero():
        raise ZeroC2("the reconstructed pair would have vanishing pair obstruction")
    zero, one = ring.zero(), ring.one()
    terms = [Mat2(a1, zero, zero, d1), Mat2(a2, one, c2, d2)]
    for k in range(3, v.n + 1):
        tk, t1k, t2k, s12k = v.values[5 + 4 * (k - 3): 9 + 4 * (k - 3)]
        if ext is not None:
            tk, t1k, t2k, s12k = (embed(x, ring) for x in (tk, t1k, t2k, s12k))
        rows = [[one, zero, zero, one],
                [a1, zero, zero, d1],
                [a2, c2, one, d2],
                [zero, -e1 * c2, e1, zero]]
        ak, bk, ck, dk = _solve_linear(rows, [tk, t1k, t2k, s12k], ring)
        terms.append(Mat2(ak, bk, ck, dk))
    return MatSeq(terms)


def reconstruct_triangular(w: PsiValue) -> tuple[MatSeq, MatSeq]:
    """The two upper-triangular sequences (an e-flip pair) with invariant w."""
    ring = w.ring
    if not ring.is_field:
        raise UnsupportedRing("reconstruction needs a field; lift the value first")
    if ring.characteristic() == 2:
        raise Char2Unsupported("reconstruction needs characteristic != 2")
    if w.n < 2:
        raise LengthTooShort("reconstruction needs n >= 2")
    if len(w.traces) != 2 * w.n:
        raise LengthMismatch(f"expected {2 * w.n} trace values, got {len(w.traces)}")
    if w.plucker_full:
        raise NotApplicable("the full pairwise delta vector is outside the "
                            "reconstruction domain (first pair commutes)")
    if len(w.proj) != w.n - 1 or w.proj[0] != ring.one():
        raise NotApplicable("proj must have length n-1 and leading coordinate 1")
    t1, t11 = w.traces[0], w.traces[1]
    ring, ext, a1, d1 = _leading_roots(ring, t1, t11)
    zero = ring.zero()
    primary = [Mat2(a1, zero, zero, d1)]
    flipped = [Mat2(d1, zero, zero, a1)]
    for k in range(2, w.n + 1):
        tk, t1k = w.traces[2 * k - 2], w.traces[2 * k - 1]
        bk = w.proj[k - 2]
        if ext is not None:
            tk, t1k, bk = embed(tk, ring), embed(t1k, ring), embed(bk, ring)
        ak = (d1 * tk - t1k) / (d1 - a1)
        dk = (t1k - a1 * tk) / (d1 - a1)
        primary.append(Mat2(ak, bk, zero, dk))
        flipped.append(Mat2(dk, bk, zero, ak))
    return MatSeq(primary), MatSeq(flipped)


# ---------------------------------------------------------------------------
# desingularization for reconstruction


@dataclass(frozen=True)
class DesingularizeTransform:
    """Records the linear re-basing applied, enabling exact inversion.

    kind "pair": (A1, A2, ...) -> (A1 - A2, A1 + A2, ...)
    kind "triple": (A1, A2, A3, ...) -> (A1, A2 + A3, A2 - A3, ...)
    applied after the recorded 1-based permutation.
    """

    kind: str
    permutation: tuple[int, ...]

    def invert(self, t: MatSeq) -> MatSeq:
        ring = t.ring
        if ring.characteristic() == 2:
            raise Char2Unsupported("inverting the re-basing divides by 2")
        half = ring.scalar_from_int(2).inverse()
        terms = list(t.terms)
        if self.kind == "pair":
            b1, b2 = terms[0], terms[1]
            terms[0] = (b1 + b2).scale(half)
            terms[1] = (b2 - b1).scale(half)
        elif self.kind == "triple":
            b2, b3 = terms[1], terms[2]
            terms[1] = (b2 + b3).scale(half)
            terms[2] = (b2 - b3).scale(half)
        else:
            raise NotApplicable(f"unknown transform kind {self.kind!r}")
        inverse = [0] * len(self.permutation)
        for i, p in enumerate(self.permutation):
            inverse[p - 1] = i + 1
        return MatSeq(terms).permuted(tuple(inverse))


def desingularize_for_reconstruction(s: MatSeq) -> tuple[MatSeq, DesingularizeTransform]:
    """Re-base a stable sequence with degenerate leading pair into the
    semisimple reconstruction domain (first term diagonalizable over the
    closure, first pair non-commuting)."""
    tag = classify(s)
    if tag is CanonicalTag.STABLE_1B:
        j, k = _first_sigma_pair(s)
        perm = _front_perm([j, k], s.n)
        sp = s.permuted(perm)
        out = MatSeq([sp[0] - sp[1], sp[0] + sp[1], *sp.terms[2:]])
        return out, DesingularizeTransform("pair", perm)
    if tag is CanonicalTag.STABLE_1C:
        j, k, l = _first_delta_triple(s)
        perm = _front_perm([j, k, l], s.n)
        sp = s.permuted(perm)
        out = MatSeq([sp[0], sp[1] + sp[2], sp[1] - sp[2], *sp.terms[3:]])
        return out, DesingularizeTransform("triple", perm)
    raise NotApplicable(f"desingularization applies to Stable1b/Stable1c, not {tag.value}")
