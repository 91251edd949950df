"""Exact univariate polynomials over the rationals.

``RationalPolynomial`` is the public value type.  GCDs and Sturm chains are
run on primitive integer polynomials (lists of ints, index = degree) using
pseudo-remainders, which keeps coefficient growth in check for the high
degree, huge-denominator polynomials built from tournaments.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence, Union

from .errors import DomainError, ParseError

Number = Union[int, Fraction]

_TEXT_RE = re.compile(r"deg=(-?\d+);coeffs=(.*)")


def _frac(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError(f"exact rational expected, got {type(c).__name__}")


def _trim(cs: list) -> list:
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


class RationalPolynomial:
    """Dense polynomial with ``Fraction`` coefficients; ``coeffs[k]`` multiplies ``x**k``.

    The zero polynomial has an empty coefficient tuple and degree ``-1``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Number] = ()):
        object.__setattr__(self, "coeffs", tuple(_trim([_frac(c) for c in coeffs])))

    def __setattr__(self, name, value):
        raise AttributeError("RationalPolynomial is immutable")

    @classmethod
    def x(cls) -> "RationalPolynomial":
        return cls((0, 1))

    @classmethod
    def constant(cls, c: Number) -> "RationalPolynomial":
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: Number = 1) -> "RationalPolynomial":
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def coefficient(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RationalPolynomial.constant(other)
        if not isinstance(other, RationalPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"RationalPolynomial({self.to_text()!r})"

    def __bool__(self):
        return bool(self.coeffs)

    # arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return RationalPolynomial(self.coefficient(k) + other.coefficient(k) for k in range(n))

    __radd__ = __add__

    def __neg__(self):
        return RationalPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = _coerce(other)
        if not self.coeffs or not other.coeffs:
            return RationalPolynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return RationalPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise DomainError("negative powers are not polynomials")
        out = RationalPolynomial.constant(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def scale(self, c: Number) -> "RationalPolynomial":
        c = _frac(c)
        return RationalPolynomial(c * a for a in self.coeffs)

    def compose_affine(self, a: Number, b: Number) -> "RationalPolynomial":
        """``p(a*x + b)``."""
        lin = RationalPolynomial((b, a))
        out = RationalPolynomial()
        for c in reversed(self.coeffs):
            out = out * lin + c
        return out

    def derivative(self) -> "RationalPolynomial":
        return RationalPolynomial(k * c for k, c in enumerate(self.coeffs) if k)

    def __call__(self, x: Number) -> Fraction:
        return self.evaluate(x)

    def evaluate(self, x: Number) -> Fraction:
        x = _frac(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __divmod__(self, other):
        return poly_divmod(self, _coerce(other))

    def __floordiv__(self, other):
        return poly_divmod(self, _coerce(other))[0]

    def __mod__(self, other):
        return poly_divmod(self, _coerce(other))[1]

    def monic(self) -> "RationalPolynomial":
        if not self.coeffs:
            return self
        return self.scale(1 / self.leading)

    def is_even(self) -> bool:
        return all(c == 0 for c in self.coeffs[1::2])

    def lowest_power(self) -> int:
        """Largest ``k`` with ``x**k`` dividing ``self`` (``-1`` for zero)."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return -1

    def shift_down(self, k: int) -> "RationalPolynomial":
        """Divide by ``x**k``; the low coefficients must vanish."""
        if any(self.coeffs[:k]):
            raise DomainError(f"x^{k} does not divide the polynomial")
        return RationalPolynomial(self.coeffs[k:])

    # text format --------------------------------------------------------

    def to_text(self) -> str:
        body = ",".join(f"{c.numerator}/{c.denominator}" for c in self.coeffs)
        return f"deg={self.degree};coeffs={body}"

    @classmethod
    def from_text(cls, text: str) -> "RationalPolynomial":
        m = _TEXT_RE.fullmatch(text.strip())
        if m is None:
            raise ParseError(f"malformed polynomial text: {text!r}")
        d = int(m.group(1))
        body = m.group(2)
        parts = body.split(",") if body else []
        if len(parts) != d + 1:
            raise ParseError(f"polynomial text declares degree {d} but has {len(parts)} coefficients")
        cs = []
        for k, part in enumerate(parts):
            num, sep, den = part.partition("/")
            try:
                n_, d_ = int(num), int(den)
            except ValueError:
                raise ParseError(f"coefficient {k} is not num/den: {part!r}") from None
            if not sep or d_ <= 0 or math.gcd(n_, d_) != 1:
                raise ParseError(f"coefficient {k} is not a lowest-terms num/den: {part!r}")
            cs.append(Fraction(n_, d_))
        if cs and cs[-1] == 0:
            raise ParseError("leading coefficient is zero")
        return cls(cs)

    # integer view -------------------------------------------------------

    def primitive_part(self) -> tuple[Fraction, list[int]]:
        """``(content, ip)`` with ``self == content * ip``, ``ip`` primitive, positive leading."""
        if not self.coeffs:
            return Fraction(0), []
        den = reduce(_lcm, (c.denominator for c in self.coeffs), 1)
        ints = [int(c * den) for c in self.coeffs]
        ip, cont = _primitive(ints)
        return Fraction(cont, den), ip

    @classmethod
    def from_ints(cls, ints: Sequence[int], denominator: int = 1) -> "RationalPolynomial":
        return cls(Fraction(c, denominator) for c in ints)


def _coerce(p) -> RationalPolynomial:
    if isinstance(p, RationalPolynomial):
        return p
    if isinstance(p, (int, Fraction)):
        return RationalPolynomial.constant(p)
    raise TypeError(f"cannot use {type(p).__name__} as a polynomial")


def _lcm(a: int, b: int) -> int:
    return a // math.gcd(a, b) * b


def poly_divmod(p: RationalPolynomial, q: RationalPolynomial) -> tuple[RationalPolynomial, RationalPolynomial]:
    if q.is_zero():
        raise DomainError("division by the zero polynomial")
    r = list(p.coeffs)
    dq = q.degree
    lq = q.leading
    quot = [Fraction(0)] * max(len(r) - dq, 0)
    while len(r) - 1 >= dq and r:
        c = r[-1] / lq
        shift = len(r) - 1 - dq
        quot[shift] = c
        for i, b in enumerate(q.coeffs):
            r[i + shift] -= c * b
        r.pop()
        _trim(r)
    return RationalPolynomial(quot), RationalPolynomial(r)


def exact_divide(p: RationalPolynomial, q: RationalPolynomial) -> RationalPolynomial:
    quot, rem = poly_divmod(p, q)
    if not rem.is_zero():
        raise DomainError("division is not exact")
    return quot


# integer polynomial kernels --------------------------------------------------


def _primitive(ints: list[int]) -> tuple[list[int], int]:
    """Primitive part with positive leading coefficient, and the signed content."""
    ints = _trim(list(ints))
    if not ints:
        return [], 0
    g = math.gcd(*ints)
    if ints[-1] < 0:
        g = -g
    return [c // g for c in ints], g


def _prem(a: list[int], b: list[int]) -> list[int]:
    """``lc(b)**(deg a - deg b + 1) * a`` reduced modulo ``b``."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    e = len(a) - len(b) + 1
    while r and len(r) - 1 >= db:
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [c * lb for c in r]
        for i, c in enumerate(b):
            r[i + shift] -= lr * c
        r.pop()
        _trim(r)
        e -= 1
    if e > 0 and r:
        f = lb ** e
        r = [c * f for c in r]
    return r


def _int_derivative(a: list[int]) -> list[int]:
    return [k * c for k, c in enumerate(a)][1:]


def int_gcd(a: list[int], b: list[int]) -> list[int]:
    """Primitive GCD of two integer polynomials (primitive remainder sequence)."""
    a, _ = _primitive(a)
    b, _ = _primitive(b)
    if len(a) < len(b):
        a, b = b, a
    if not b:
        return a
    if not a:
        return b
    while b:
        r = _prem(a, b)
        a, b = b, _primitive(r)[0]
    return a


def _int_exact_quotient(a: list[int], b: list[int]) -> list[int]:
    """``a / b`` for integer polys where the quotient is known to be exact."""
    q = RationalPolynomial(a) // RationalPolynomial(b)
    _, ip = q.primitive_part()
    return ip


def _sign_at(a: list[int], num: int, den: int) -> int:
    """Sign of ``a(num/den)``, ``den > 0``."""
    if not a:
        return 0
    v = a[-1]
    p = 1
    for c in reversed(a[:-1]):
        p *= den
        v = v * num + c * p
    return (v > 0) - (v < 0)


# public operations -------------------------------------------------------------


def gcd(p: RationalPolynomial, q: RationalPolynomial) -> RationalPolynomial:
    """Monic greatest common divisor."""
    if p.is_zero() and q.is_zero():
        raise DomainError("gcd(0, 0) is undefined")
    g = int_gcd(p.primitive_part()[1], q.primitive_part()[1])
    return RationalPolynomial(g).monic()


def gcd_many(polys: Iterable[RationalPolynomial]) -> RationalPolynomial:
    """Monic GCD of a family; the zero polynomial if every member is zero."""
    acc: list[int] = []
    for p in polys:
        acc = int_gcd(acc, p.primitive_part()[1])
        if len(acc) == 1:
            break
    return RationalPolynomial(acc).monic()


def _square_free_int(a: list[int]) -> list[int]:
    g = int_gcd(a, _int_derivative(a))
    if len(g) <= 1:
        return _primitive(a)[0]
    return _int_exact_quotient(a, g)


def square_free(p: RationalPolynomial) -> RationalPolynomial:
    """``p / gcd(p, p')`` made monic."""
    if p.is_zero():
        raise DomainError("square-free part of the zero polynomial")
    return RationalPolynomial(_square_free_int(p.primitive_part()[1])).monic()


def sturm_chain(a: list[int]) -> list[list[int]]:
    """Sturm sequence of a square-free integer polynomial, each member primitive.

    Members are positive multiples of the classical chain
    ``P0 = a, P1 = a', P_{i+1} = -rem(P_{i-1}, P_i)``.
    """
    chain = [_primitive(a)[0]]
    d = _int_derivative(chain[0])
    if not d:
        return chain
    chain.append(_primitive(d)[0])
    while True:
        prev, cur = chain[-2], chain[-1]
        r = _prem(prev, cur)
        if not r:
            break
        e = len(prev) - len(cur) + 1
        if cur[-1] < 0 and e % 2:
            r = [-c for c in r]
        r = [-c for c in r]
        g = math.gcd(*r)
        chain.append([c // g for c in r])
    return chain


def _variations(chain: list[list[int]], x: Fraction) -> int:
    signs = [s for s in (_sign_at(c, x.numerator, x.denominator) for c in chain) if s]
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)


def _variations_at_infinity(chain: list[list[int]], positive: bool) -> int:
    signs = []
    for c in chain:
        s = 1 if c[-1] > 0 else -1
        if not positive and (len(c) - 1) % 2:
            s = -s
        signs.append(s)
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)


def count_roots_in(
    p: RationalPolynomial,
    a: Number,
    b: Number,
    include_a: bool = False,
    include_b: bool = False,
) -> int:
    """Number of distinct real roots of ``p`` in the interval from ``a`` to ``b``.

    The square-free part's Sturm chain gives ``V(a) - V(b)`` = roots in
    ``(a, b]``; the endpoints are then settled by exact evaluation.
    """
    if p.is_zero():
        raise DomainError("the zero polynomial has every point as a root")
    a, b = _frac(a), _frac(b)
    if not a < b:
        raise DomainError("count_roots_in needs a < b")
    sf = _square_free_int(p.primitive_part()[1])
    chain = sturm_chain(sf)
    at_b = _sign_at(sf, b.numerator, b.denominator) == 0
    at_a = _sign_at(sf, a.numerator, a.denominator) == 0
    n = _variations(chain, a) - _variations(chain, b) - int(at_b)
    return n + int(include_a and at_a) + int(include_b and at_b)


def cauchy_bound(p: RationalPolynomial) -> Fraction:
    """``1 + max |c_k / c_n|``; every real root lies strictly inside ``(-B, B)``."""
    if p.is_zero():
        raise DomainError("no root bound for the zero polynomial")
    lc = abs(p.leading)
    return 1 + max((abs(c) / lc for c in p.coeffs[:-1]), default=Fraction(0))


def count_real_roots(p: RationalPolynomial) -> int:
    """Total number of distinct real roots."""
    if p.is_zero():
        raise DomainError("the zero polynomial has every point as a root")
    if p.degree == 0:
        return 0
    chain = sturm_chain(_square_free_int(p.primitive_part()[1]))
    return _variations_at_infinity(chain, False) - _variations_at_infinity(chain, True)
