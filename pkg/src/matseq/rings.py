"""Exact scalar arithmetic over the supported coefficient rings.

Five rings are available through a common descriptor interface:

* ``Z``        -- the integers, values are plain ``int``
* ``Q``        -- the rationals, values are ``fractions.Fraction``
* ``GF(p)``    -- the prime field with p elements, values are residues in
                  ``[0, p)``
* ``QSqrt(d)`` -- the quadratic extension Q(sqrt(d)) for a non-square
                  rational d, values are pairs ``(x, y)`` of ``Fraction``
                  meaning ``x + y*sqrt(d)``
* ``QT``       -- the univariate polynomial ring Q[t], values are tuples of
                  ``Fraction`` coefficients stored low-to-high with no
                  trailing zeros (the zero polynomial is the empty tuple)

Every value is kept canonical, so ``==`` and ``hash`` on :class:`Scalar` are
structural.  Canonical square roots: nonnegative over Q, the least residue in
``[0, (p-1)/2]`` over GF(p), and positive sqrt(d)-part (tie broken by
nonnegative rational part) over Q(sqrt(d)).  Canonical gcd associates are
nonnegative over Z and monic over Q[t].
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _int_gcd, isqrt
from typing import Sequence

from .errors import (
    ExactDivisionError,
    RingMismatch,
    TowerTooDeep,
    UnsupportedRing,
    ZeroVector,
)

# ---------------------------------------------------------------------------
# helpers on raw representations


def _sqrt_fraction(x: Fraction) -> Fraction | None:
    """Nonnegative rational square root of x, or None."""
    if x < 0:
        return None
    rn, rd = isqrt(x.numerator), isqrt(x.denominator)
    if rn * rn == x.numerator and rd * rd == x.denominator:
        return Fraction(rn, rd)
    return None


def _sqrt_mod(a: int, p: int) -> int | None:
    """A square root of a modulo the prime p, or None (Tonelli-Shanks)."""
    a %= p
    if a == 0:
        return 0
    if p == 2:
        return a
    if pow(a, (p - 1) // 2, p) != 1:
        return None
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r


def squarefree_part(x: Fraction) -> int:
    """The squarefree integer d with x = d * (rational square), for x != 0.

    Uses trial division; intended for the small numbers that arise from
    matrix entries, not for cryptographic sizes.
    """
    if x == 0:
        raise ValueError("squarefree_part of zero is undefined")
    n = x.numerator * x.denominator
    sign = -1 if n < 0 else 1
    n = abs(n)
    d = 1
    f = 2
    while f * f <= n:
        if n % f == 0:
            e = 0
            while n % f == 0:
                n //= f
                e += 1
            if e % 2:
                d *= f
        f += 1 if f == 2 else 2
    return sign * d * n


# polynomial helpers: tuples of Fraction, low-to-high, no trailing zeros

_PZERO: tuple[Fraction, ...] = ()


def _ptrim(cs: Sequence[Fraction]) -> tuple[Fraction, ...]:
    n = len(cs)
    while n and cs[n - 1] == 0:
        n -= 1
    return tuple(cs[:n])


def _padd(f: tuple, g: tuple) -> tuple:
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, c in enumerate(g):
        out[i] += c
    return _ptrim(out)


def _pneg(f: tuple) -> tuple:
    return tuple(-c for c in f)


def _psub(f: tuple, g: tuple) -> tuple:
    return _padd(f, _pneg(g))


def _pmul(f: tuple, g: tuple) -> tuple:
    if not f or not g:
        return _PZERO
    out = [Fraction(0)] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return _ptrim(out)


def _pscale(f: tuple, c: Fraction) -> tuple:
    if c == 0:
        return _PZERO
    return tuple(a * c for a in f)


def _pdivmod(f: tuple, g: tuple) -> tuple[tuple, tuple]:
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(f) - len(g) + 1, 0)
    r = list(f)
    dg, lg = len(g) - 1, g[-1]
    while len(r) >= len(g) and any(r):
        r = _ptrim(r)
        if len(r) < len(g):
            break
        k = len(r) - len(g)
        c = r[-1] / lg
        q[k] = c
        r = list(r)
        for i, b in enumerate(g):
            r[i + k] -= c * b
        r[-1] = Fraction(0)
    return _ptrim(q), _ptrim(r)


def _pgcd(f: tuple, g: tuple) -> tuple:
    """Monic gcd."""
    while g:
        f, g = g, _pdivmod(f, g)[1]
    if not f:
        return _PZERO
    return _pscale(f, 1 / f[-1])


def _pegcd(f: tuple, g: tuple) -> tuple[tuple, tuple, tuple]:
    """(gcd, u, v) with u*f + v*g = gcd, gcd monic (or zero)."""
    r0, r1 = f, g
    u0, u1 = (Fraction(1),), _PZERO
    v0, v1 = _PZERO, (Fraction(1),)
    while r1:
        q, r = _pdivmod(r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, _psub(u0, _pmul(q, u1))
        v0, v1 = v1, _psub(v0, _pmul(q, v1))
    if not r0:
        return _PZERO, _PZERO, _PZERO
    lc = r0[-1]
    return _pscale(r0, 1 / lc), _pscale(u0, 1 / lc), _pscale(v0, 1 / lc)


def _psqrt(f: tuple) -> tuple | None:
    """Square root in Q[t] with positive leading coefficient, or None."""
    if not f:
        return _PZERO
    d = len(f) - 1
    if d % 2:
        return None
    lc = _sqrt_fraction(f[-1])
    if lc is None:
        return None
    m = d // 2
    u = [Fraction(0)] * (m + 1)
    u[m] = lc
    for i in range(1, m + 1):
        # match the coefficient of t^(2m-i)
        acc = Fraction(0)
        for j in range(m - i + 1, m):
            k = 2 * m - i - j
            if m - i < k <= m:
                acc += u[j] * u[k]
        u[m - i] = (f[2 * m - i] - acc) / (2 * lc)
    r = _ptrim(u)
    if _pmul(r, r) == f:
        return r
    return None


def _parse_fraction(text) -> Fraction:
    if isinstance(text, str):
        return Fraction(text)
    if isinstance(text, int):
        return Fraction(text)
    raise ValueError(f"expected a rational string, got {text!r}")


def _sqrt_quadext(x: Fraction, y: Fraction, d: Fraction) -> tuple | None:
    """Canonical square root of x + y*sqrt(d) inside Q(sqrt(d)), or None."""
    if x == 0 and y == 0:
        return (Fraction(0), Fraction(0))
    if y == 0:
        r = _sqrt_fraction(x)
        if r is not None:
            return (r, Fraction(0))
        r = _sqrt_fraction(x / d)
        if r is not None:
            return (Fraction(0), r)
        return None
    n = _sqrt_fraction(x * x - d * y * y)
    if n is None:
        return None
    for s in (n, -n):
        u2 = (x + s) / 2
        u = _sqrt_fraction(u2)
        if u is not None and u != 0:
            v = y / (2 * u)
            if v < 0:
                u, v = -u, -v
            return (u, v)
    return None


# ---------------------------------------------------------------------------
# ring descriptors


class RingDescriptor:
    """Describes a coefficient ring and implements arithmetic on raw values.

    Subclasses are interned, so descriptor equality is both structural and,
    in practice, identity.  ``descriptor(value)`` coerces a convenient Python
    value into a :class:`Scalar`.
    """

    kind: str = "?"
    is_field: bool = False
    is_euclidean: bool = True

    def characteristic(self) -> int:
        return 0

    # construction ---------------------------------------------------------
    def __call__(self, value) -> "Scalar":
        return Scalar(self, self.coerce(value))

    def coerce(self, value):
        raise NotImplementedError

    def zero(self) -> "Scalar":
        return Scalar(self, self.raw_zero())

    def one(self) -> "Scalar":
        return Scalar(self, self.raw_one())

    def scalar_from_int(self, n: int) -> "Scalar":
        return Scalar(self, self.from_int(n))

    # raw arithmetic --------------------------------------------------------
    def raw_zero(self):
        raise NotImplementedError

    def raw_one(self):
        raise NotImplementedError

    def from_int(self, n: int):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def is_zero(self, a) -> bool:
        raise NotImplementedError

    def is_unit(self, a) -> bool:
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def div(self, a, b):
        """Exact division; raises ExactDivisionError when a/b leaves R."""
        raise NotImplementedError

    def try_sqrt_raw(self, a):
        """Canonical in-ring square root or None (all five rings)."""
        raise NotImplementedError

    def sort_key(self, a):
        """A total order on raw values, used for deterministic tie-breaks."""
        raise NotImplementedError

    # serialization ---------------------------------------------------------
    def value_to_json(self, a):
        raise NotImplementedError

    def value_from_json(self, obj):
        raise NotImplementedError

    def __repr__(self) -> str:
        return self.kind


class IntegerRing(RingDescriptor):
    kind = "Z"

    def coerce(self, value):
        if isinstance(value, bool) or not isinstance(value, int):
            raise ValueError(f"not an integer: {value!r}")
        return value

    def raw_zero(self):
        return 0

    def raw_one(self):
        return 1

    def from_int(self, n):
        return n

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def is_zero(self, a):
        return a == 0

    def is_unit(self, a):
        return a in (1, -1)

    def inv(self, a):
        if a in (1, -1):
            return a
        raise ExactDivisionError(f"{a} is not a unit in Z")

    def div(self, a, b):
        if b == 0:
            raise ExactDivisionError("division by zero")
        q, r = divmod(a, b)
        if r:
            raise ExactDivisionError(f"{a} is not divisible by {b} in Z")
        return q

    def try_sqrt_raw(self, a):
        if a < 0:
            return None
        r = isqrt(a)
        return r if r * r == a else None

    def sort_key(self, a):
        return a

    def value_to_json(self, a):
        return str(a)

    def value_from_json(self, obj):
        if isinstance(obj, str):
            return int(obj)
        if isinstance(obj, int) and not isinstance(obj, bool):
            return obj
        raise ValueError(f"bad integer value: {obj!r}")


class RationalRing(RingDescriptor):
    kind = "Q"
    is_field = True

    def coerce(self, value):
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int) and not isinstance(value, bool):
            return Fraction(value)
        if isinstance(value, str):
            return Fraction(value)
        raise ValueError(f"not a rational: {value!r}")

    def raw_zero(self):
        return Fraction(0)

    def raw_one(self):
        return Fraction(1)

    def from_int(self, n):
        return Fraction(n)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def is_zero(self, a):
        return a == 0

    def is_unit(self, a):
        return a != 0

    def inv(self, a):
        if a == 0:
            raise ExactDivisionError("division by zero")
        return 1 / a

    def div(self, a, b):
        if b == 0:
            raise ExactDivisionError("division by zero")
        return a / b

    def try_sqrt_raw(self, a):
        return _sqrt_fraction(a)

    def sort_key(self, a):
        return a

    def value_to_json(self, a):
        return str(a)

    def value_from_json(self, obj):
        return _parse_fraction(obj)


class PrimeFieldRing(RingDescriptor):
    kind = "GF"
    is_field = True

    def __init__(self, p: int):
        if p < 2 or any(p % q == 0 for q in range(2, isqrt(p) + 1)):
            raise UnsupportedRing(f"GF({p}): modulus must be prime")
        self.p = p

    def characteristic(self) -> int:
        return self.p

    def coerce(self, value):
        if isinstance(value, int) and not isinstance(value, bool):
            return value % self.p
        raise ValueError(f"not a residue: {value!r}")

    def raw_zero(self):
        return 0

    def raw_one(self):
        return 1 % self.p

    def from_int(self, n):
        return n % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def is_zero(self, a):
        return a == 0

    def is_unit(self, a):
        return a != 0

    def inv(self, a):
        if a == 0:
            raise ExactDivisionError("division by zero")
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def try_sqrt_raw(self, a):
        r = _sqrt_mod(a, self.p)
        if r is None:
            return None
        return min(r, (self.p - r) % self.p)

    def sort_key(self, a):
        return a

    def value_to_json(self, a):
        return a

    def value_from_json(self, obj):
        if isinstance(obj, int) and not isinstance(obj, bool):
            return obj % self.p
        if isinstance(obj, str):
            return int(obj) % self.p
        raise ValueError(f"bad residue: {obj!r}")

    def __repr__(self):
        return f"GF({self.p})"


class QuadExtRing(RingDescriptor):
    kind = "Qsqrt"
    is_field = True

    def __init__(self, d):
        d = _parse_fraction(d) if not isinstance(d, Fraction) else d
        if d == 0 or _sqrt_fraction(d) is not None:
            raise UnsupportedRing(f"Q(sqrt({d})): d must not be a rational square")
        self.d = d

    def coerce(self, value):
        if isinstance(value, tuple) and len(value) == 2:
            return (_parse_fraction(value[0]) if not isinstance(value[0], Fraction) else value[0],
                    _parse_fraction(value[1]) if not isinstance(value[1], Fraction) else value[1])
        if isinstance(value, (int, Fraction, str)) and not isinstance(value, bool):
            return (_parse_fraction(value) if not isinstance(value, Fraction) else value, Fraction(0))
        raise ValueError(f"not a quadratic-extension value: {value!r}")

    def raw_zero(self):
        return (Fraction(0), Fraction(0))

    def raw_one(self):
        return (Fraction(1), Fraction(0))

    def from_int(self, n):
        return (Fraction(n), Fraction(0))

    def add(self, a, b):
        return (a[0] + b[0], a[1] + b[1])

    def sub(self, a, b):
        return (a[0] - b[0], a[1] - b[1])

    def mul(self, a, b):
        x1, y1 = a
        x2, y2 = b
        return (x1 * x2 + self.d * y1 * y2, x1 * y2 + y1 * x2)

    def neg(self, a):
        return (-a[0], -a[1])

    def is_zero(self, a):
        return a[0] == 0 and a[1] == 0

    def is_unit(self, a):
        return not self.is_zero(a)

    def inv(self, a):
        x, y = a
        n = x * x - self.d * y * y
        if n == 0:
            raise ExactDivisionError("division by zero")
        return (x / n, -y / n)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def try_sqrt_raw(self, a):
        return _sqrt_quadext(a[0], a[1], self.d)

    def sort_key(self, a):
        return a

    def value_to_json(self, a):
        return {"a": str(a[0]), "b": str(a[1]), "d": str(self.d)}

    def value_from_json(self, obj):
        if not isinstance(obj, dict) or set(obj) != {"a", "b", "d"}:
            raise ValueError(f"bad quadratic-extension value: {obj!r}")
        if _parse_fraction(obj["d"]) != self.d:
            raise ValueError(f"value tagged with d={obj['d']}, ring has d={self.d}")
        return (_parse_fraction(obj["a"]), _parse_fraction(obj["b"]))

    def __repr__(self):
        return f"QSqrt({self.d})"


class PolynomialRing(RingDescriptor):
    kind = "Qt"
    is_field = False

    def coerce(self, value):
        if isinstance(value, tuple):
            return _ptrim([c if isinstance(c, Fraction) else _parse_fraction(c) for c in value])
        if isinstance(value, list):
            return _ptrim([c if isinstance(c, Fraction) else _parse_fraction(c) for c in value])
        if isinstance(value, (int, Fraction, str)) and not isinstance(value, bool):
            return _ptrim([_parse_fraction(value) if not isinstance(value, Fraction) else value])
        raise ValueError(f"not a polynomial value: {value!r}")

    def raw_zero(self):
        return _PZERO

    def raw_one(self):
        return (Fraction(1),)

    def from_int(self, n):
        return _ptrim([Fraction(n)])

    def add(self, a, b):
        return _padd(a, b)

    def sub(self, a, b):
        return _psub(a, b)

    def mul(self, a, b):
        return _pmul(a, b)

    def neg(self, a):
        return _pneg(a)

    def is_zero(self, a):
        return not a

    def is_unit(self, a):
        return len(a) == 1

    def inv(self, a):
        if len(a) != 1:
            raise ExactDivisionError(f"{a} is not a unit in Q[t]")
        return (1 / a[0],)

    def div(self, a, b):
        if not b:
            raise ExactDivisionError("division by zero")
        q, r = _pdivmod(a, b)
        if r:
            raise ExactDivisionError("inexact polynomial division")
        return q

    def try_sqrt_raw(self, a):
        return _psqrt(a)

    def sort_key(self, a):
        return (len(a), a)

    def value_to_json(self, a):
        return [str(c) for c in a]

    def value_from_json(self, obj):
        if not isinstance(obj, list):
            raise ValueError(f"bad polynomial value: {obj!r}")
        return _ptrim([_parse_fraction(c) for c in obj])


Z = IntegerRing()
Q = RationalRing()
QT = PolynomialRing()

_GF_CACHE: dict[int, PrimeFieldRing] = {}
_QSQRT_CACHE: dict[Fraction, QuadExtRing] = {}


def GF(p: int) -> PrimeFieldRing:
    ring = _GF_CACHE.get(p)
    if ring is None:
        ring = _GF_CACHE[p] = PrimeFieldRing(p)
    return ring


def QSqrt(d) -> QuadExtRing:
    d = _parse_fraction(d) if not isinstance(d, Fraction) else d
    ring = _QSQRT_CACHE.get(d)
    if ring is None:
        ring = _QSQRT_CACHE[d] = QuadExtRing(d)
    return ring


def ring_to_json(ring: RingDescriptor) -> dict:
    if ring.kind == "GF":
        return {"kind": "GF", "p": ring.p}
    if ring.kind == "Qsqrt":
        return {"kind": "Qsqrt", "d": str(ring.d)}
    return {"kind": ring.kind}


def ring_from_json(obj) -> RingDescriptor:
    if not isinstance(obj, dict) or "kind" not in obj:
        raise ValueError(f"bad ring descriptor: {obj!r}")
    kind = obj["kind"]
    if kind == "Z":
        return Z
    if kind == "Q":
        return Q
    if kind == "Qt":
        return QT
    if kind == "GF":
        return GF(int(obj["p"]))
    if kind == "Qsqrt":
        return QSqrt(obj["d"])
    raise ValueError(f"unknown ring kind: {kind!r}")


# ---------------------------------------------------------------------------
# scalars


class Scalar:
    """A ring element: a descriptor plus a canonical raw value.

    Arithmetic requires both operands to share a ring (plain ``int`` operands
    are coerced).  ``/`` is exact division and raises
    :class:`ExactDivisionError` when the quotient leaves the ring.
    """

    __slots__ = ("ring", "value")

    def __init__(self, ring: RingDescriptor, value):
        self.ring = ring
        self.value = value

    def _raw(self, other):
        if other.__class__ is Scalar:
            if other.ring is self.ring or other.ring == self.ring:
                return other.value
            raise RingMismatch(f"{self.ring!r} vs {other.ring!r}")
        if isinstance(other, int) and not isinstance(other, bool):
            return self.ring.from_int(other)
        return None

    def __add__(self, other):
        v = self._raw(other)
        if v is None:
            return NotImplemented
        return Scalar(self.ring, self.ring.add(self.value, v))

    __radd__ = __add__

    def __sub__(self, other):
        v = self._raw(other)
        if v is None:
            return NotImplemented
        return Scalar(self.ring, self.ring.sub(self.value, v))

    def __rsub__(self, other):
        v = self._raw(other)
        if v is None:
            return NotImplemented
        return Scalar(self.ring, self.ring.sub(v, self.value))

    def __mul__(self, other):
        v = self._raw(other)
        if v is None:
            return NotImplemented
        return Scalar(self.ring, self.ring.mul(self.value, v))

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._raw(other)
        if v is None:
            return NotImplemented
        return Scalar(self.ring, self.ring.div(self.value, v))

    def __rtruediv__(self, other):
        v = self._raw(other)
        if v is None:
            return NotImplemented
        return Scalar(self.ring, self.ring.div(v, self.value))

    def __neg__(self):
        return Scalar(self.ring, self.ring.neg(self.value))

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = self.ring.raw_one()
        for _ in range(n):
            out = self.ring.mul(out, self.value)
        return Scalar(self.ring, out)

    def __eq__(self, other):
        if other.__class__ is Scalar:
            return self.ring == other.ring and self.value == other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return self.value == self.ring.from_int(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.ring.kind, repr(self.ring), self.value))

    def __bool__(self):
        return not self.ring.is_zero(self.value)

    def is_zero(self) -> bool:
        return self.ring.is_zero(self.value)

    def is_unit(self) -> bool:
        return self.ring.is_unit(self.value)

    def inverse(self) -> "Scalar":
        return Scalar(self.ring, self.ring.inv(self.value))

    def sort_key(self):
        return self.ring.sort_key(self.value)

    def to_json(self):
        return self.ring.value_to_json(self.value)

    def __repr__(self):
        return f"{self.ring!r}:{self.value!r}"


def scalar_from_json(ring: RingDescriptor, obj) -> Scalar:
    return Scalar(ring, ring.value_from_json(obj))


# ---------------------------------------------------------------------------
# module-level operations


def characteristic(ring: RingDescriptor) -> int:
    """0 for Z, Q, Q(sqrt d) and Q[t]; p for GF(p)."""
    return ring.characteristic()


def try_sqrt(x: Scalar) -> Scalar | None:
    """Canonical square root of x inside its ring, for field kinds only.

    Raises UnsupportedRing over Z and Q[t]; callers that need in-ring roots
    there should use :func:`sqrt_in_ring`.
    """
    if not x.ring.is_field:
        raise UnsupportedRing(f"try_sqrt needs a field kind, got {x.ring!r}")
    r = x.ring.try_sqrt_raw(x.value)
    return None if r is None else Scalar(x.ring, r)


def sqrt_in_ring(x: Scalar) -> Scalar | None:
    """Canonical square root of x inside its ring, over all five rings."""
    r = x.ring.try_sqrt_raw(x.value)
    return None if r is None else Scalar(x.ring, r)


def bezout(x: Scalar, y: Scalar) -> tuple[Scalar, Scalar, Scalar]:
    """(g, p, q) with x*p + y*q = g and g a canonical gcd associate.

    Over fields the gcd of a nonzero pair is 1; (0, 0) gives (0, 0, 0).
    """
    ring = x.ring
    if ring != y.ring:
        raise RingMismatch(f"{ring!r} vs {y.ring!r}")
    if ring.is_field:
        zero = ring.zero()
        if x.is_zero() and y.is_zero():
            return zero, zero, zero
        if not x.is_zero():
            return ring.one(), x.inverse(), zero
        return ring.one(), zero, y.inverse()
    if ring.kind == "Z":
        a, b = x.value, y.value
        old_r, r = a, b
        old_s, s = 1, 0
        old_t, t = 0, 1
        while r:
            qq = old_r // r
            old_r, r = r, old_r - qq * r
            old_s, s = s, old_s - qq * s
            old_t, t = t, old_t - qq * t
        if old_r < 0:
            old_r, old_s, old_t = -old_r, -old_s, -old_t
        return Scalar(ring, old_r), Scalar(ring, old_s), Scalar(ring, old_t)
    if ring.kind == "Qt":
        g, u, v = _pegcd(x.value, y.value)
        return Scalar(ring, g), Scalar(ring, u), Scalar(ring, v)
    raise UnsupportedRing(f"bezout not implemented over {ring!r}")


def is_coprime_pair(x: Scalar, y: Scalar) -> bool:
    """True when x*R + y*R = R."""
    g, _, _ = bezout(x, y)
    return g.is_unit()


def primitive_vector(v: Sequence[Scalar]) -> tuple[Scalar, ...]:
    """A canonical unit-gcd multiple of the nonzero vector v.

    Over Q the vector is rescaled to coprime integers (fraction field of Z);
    over Z it is divided by the gcd with the first nonzero entry positive;
    over Q[t] it is divided by the polynomial gcd and normalized so the first
    nonzero entry is monic; over the remaining fields the first nonzero entry
    is scaled to 1.
    """
    v = tuple(v)
    if not v:
        raise ZeroVector("empty vector")
    ring = v[0].ring
    for s in v[1:]:
        if s.ring != ring:
            raise RingMismatch("mixed rings in vector")
    if all(s.is_zero() for s in v):
        raise ZeroVector("primitive_vector of the zero vector")

    if ring.kind == "Q":
        denlcm = 1
        for s in v:
            d = s.value.denominator
            denlcm = denlcm * d // _int_gcd(denlcm, d)
        ints = [s.value.numerator * (denlcm // s.value.denominator) for s in v]
        g = 0
        for n in ints:
            g = _int_gcd(g, n)
        ints = [n // g for n in ints]
        first = next(n for n in ints if n)
        if first < 0:
            ints = [-n for n in ints]
        return tuple(Scalar(ring, Fraction(n)) for n in ints)

    if ring.kind == "Z":
        g = 0
        for s in v:
            g = _int_gcd(g, s.value)
        ints = [s.value // g for s in v]
        first = next(n for n in ints if n)
        if first < 0:
            ints = [-n for n in ints]
        return tuple(Scalar(ring, n) for n in ints)

    if ring.kind == "Qt":
        g = _PZERO
        for s in v:
            g = _pgcd(g, s.value)
        vals = [ring.div(s.value, g) for s in v]
        first = next(p for p in vals if p)
        lc = first[-1]
        vals = [_pscale(p, 1 / lc) for p in vals]
        return tuple(Scalar(ring, p) for p in vals)

    # remaining field kinds: scale the first nonzero entry to 1
    first = next(s for s in v if not s.is_zero())
    inv = first.inverse()
    return tuple(s * inv for s in v)


def embed(x: Scalar, target: RingDescriptor) -> Scalar:
    """Embed x into a larger ring (Z -> Q/Qt/QSqrt, Q -> QSqrt/Qt)."""
    src = x.ring
    if src == target:
        return x
    if src.kind == "Z":
        if target.kind == "Q":
            return Scalar(target, Fraction(x.value))
        if target.kind == "Qsqrt":
            return Scalar(target, (Fraction(x.value), Fraction(0)))
        if target.kind == "Qt":
            return Scalar(target, target.coerce(Fraction(x.value)))
    if src.kind == "Q":
        if target.kind == "Qsqrt":
            return Scalar(target, (x.value, Fraction(0)))
        if target.kind == "Qt":
            return Scalar(target, target.coerce(x.value))
    raise UnsupportedRing(f"no embedding {src!r} -> {target!r}")


def sqrt_with_extension(x: Scalar) -> tuple[Scalar, RingDescriptor | None]:
    """A canonical square root of x, adjoining one quadratic extension if needed.

    Returns (root, extension) where extension is the new QSqrt descriptor or
    None when the root already lives in the ring of x.  A missing root over a
    quadratic extension raises TowerTooDeep; over GF(p) the required GF(p^2)
    is not representable and raises UnsupportedRing.
    """
    if not x.ring.is_field:
        raise UnsupportedRing(f"sqrt_with_extension needs a field, got {x.ring!r}")
    r = x.ring.try_sqrt_raw(x.value)
    if r is not None:
        return Scalar(x.ring, r), None
    if x.ring.kind == "Q":
        d = squarefree_part(x.value)
        ext = QSqrt(d)
        s = _sqrt_fraction(x.value / d)
        return Scalar(ext, (Fraction(0), s)), ext
    if x.ring.kind == "Qsqrt":
        raise TowerTooDeep(f"sqrt of {x!r} needs a second quadratic extension")
    raise UnsupportedRing(f"no representable quadratic extension of {x.ring!r}")
