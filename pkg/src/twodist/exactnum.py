"""Exact scalars: arbitrary-precision rationals and quadratic-extension numbers.

Rationals are ``fractions.Fraction`` (canonical by construction).  On top of
them, :class:`QuadExt` models elements of a real multi-quadratic field
Q(sqrt(d1), sqrt(d2)): finite sums ``c * sqrt(d)`` with square-free integer
radicands generated by at most two base radicands.  All operations are exact;
sign determination never falls back to a tolerance.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Union

Rational = Fraction

ScalarLike = Union[int, Fraction, "QuadExt"]


class UnsupportedExtensionError(ValueError):
    """Raised when a value would need more than two independent radicands."""


def as_rational(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"not a rational value: {value!r}")


def rational_arith(a, b, op: str):
    """Exact rational arithmetic; ``op`` is add/sub/mul/div/cmp.

    ``cmp`` returns -1, 0 or +1 (a total order); ``div`` raises
    ``ZeroDivisionError`` on a zero divisor.
    """
    a = as_rational(a)
    b = as_rational(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if b == 0:
            raise ZeroDivisionError("rational division by zero")
        return a / b
    if op == "cmp":
        return (a > b) - (a < b)
    raise ValueError(f"unknown op {op!r}")


def quadext_arith(a: ScalarLike, b: ScalarLike, op: str) -> "QuadExt":
    """Exact field arithmetic on quadratic-extension values."""
    a = QuadExt(a)
    b = QuadExt(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown op {op!r}")


def squarefree_decompose(n: int) -> tuple[int, int]:
    """Write ``n = s*s*d`` with ``d`` square-free; returns ``(s, d)``.

    Requires ``n >= 0``.  Trial division; fine at the integer sizes this
    library meets (parameter tables, radii, region scans).
    """
    if n < 0:
        raise ValueError("squarefree_decompose needs n >= 0")
    if n == 0:
        return 0, 1
    s, d = 1, 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            s *= p ** (e // 2)
            if e % 2:
                d *= p
        p += 1 if p == 2 else 2
    return s, d * n


def _sf_product(a: int, b: int) -> tuple[int, int]:
    # sqrt(a)*sqrt(b) = g*sqrt(d) for square-free a, b
    g = math.gcd(a, b)
    return g, (a // g) * (b // g)


def _radicand_closure(radicands: Iterable[int]) -> set[int]:
    group = {1}
    for r in radicands:
        if r == 1:
            continue
        new = {_sf_product(r, g)[1] for g in group}
        group |= new
        # rank <= 2 means the group {1, u, v, uv} has at most 4 elements
        if len(group) > 4:
            raise UnsupportedExtensionError(
                "value leaves every extension generated by two radicands: "
                f"radicands {sorted(group - {1})}"
            )
    return group


class QuadExt:
    """An element of Q(sqrt(d1), sqrt(d2)), stored as a canonical term map.

    ``terms`` maps a square-free radicand (1 for the rational part) to a
    nonzero Fraction coefficient.  Canonical form makes equality structural,
    so a value is zero exactly when it has no terms.
    """

    __slots__ = ("_terms",)

    def __init__(self, value: Union[int, Fraction, Mapping[int, Fraction], "QuadExt"] = 0):
        if isinstance(value, QuadExt):
            self._terms = value._terms
            return
        if isinstance(value, (int, Fraction)):
            c = Fraction(value)
            self._terms = ((1, c),) if c else ()
            return
        terms: dict[int, Fraction] = {}
        for rad, coeff in value.items():
            coeff = Fraction(coeff)
            if coeff == 0:
                continue
            if rad < 1:
                raise ValueError(f"radicand must be >= 1, got {rad}")
            s, d = squarefree_decompose(rad)
            terms[d] = terms.get(d, Fraction(0)) + coeff * s
        terms = {r: c for r, c in terms.items() if c}
        _radicand_closure(terms)
        self._terms = tuple(sorted(terms.items()))

    @property
    def terms(self) -> tuple[tuple[int, Fraction], ...]:
        return self._terms

    # ----- predicates -------------------------------------------------

    def is_zero(self) -> bool:
        return not self._terms

    def is_rational(self) -> bool:
        return all(r == 1 for r, _ in self._terms)

    def rational_value(self) -> Fraction:
        if not self._terms:
            return Fraction(0)
        if self.is_rational():
            return self._terms[0][1]
        raise ValueError(f"{self} is irrational")

    def radicands(self) -> tuple[int, ...]:
        return tuple(r for r, _ in self._terms if r != 1)

    # ----- arithmetic -------------------------------------------------

    @staticmethod
    def _coerce(other) -> "QuadExt":
        if isinstance(other, QuadExt):
            return other
        if isinstance(other, (int, Fraction)):
            return QuadExt(other)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self._terms)
        for r, c in other._terms:
            terms[r] = terms.get(r, Fraction(0)) + c
        return QuadExt(terms)

    __radd__ = __add__

    def __neg__(self):
        out = QuadExt.__new__(QuadExt)
        out._terms = tuple((r, -c) for r, c in self._terms)
        return out

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms: dict[int, Fraction] = {}
        for r1, c1 in self._terms:
            for r2, c2 in other._terms:
                g, d = _sf_product(r1, r2)
                terms[d] = terms.get(d, Fraction(0)) + c1 * c2 * g
        return QuadExt(terms)

    __rmul__ = __mul__

    def inverse(self) -> "QuadExt":
        if not self._terms:
            raise ZeroDivisionError("QuadExt division by zero")
        if self.is_rational():
            return QuadExt(1 / self._terms[0][1])
        # Split self = u + v*sqrt(d) with u, v in the complementary subfield
        # Q(sqrt(h)); then 1/self = (u - v*sqrt(d)) / (u^2 - v^2 d).  The
        # denominator is nonzero because conjugation sqrt(d) -> -sqrt(d) is a
        # field automorphism, and it lives one radicand down, so the recursion
        # bottoms out at a rational.
        group = sorted(_radicand_closure(self.radicands()) - {1})
        d = group[0]
        h = group[1] if len(group) > 1 else None
        u_terms: dict[int, Fraction] = {}
        v_terms: dict[int, Fraction] = {}
        for r, c in self._terms:
            if r == 1 or r == h:
                u_terms[r] = c
            else:
                g, rd = _sf_product(r, d)
                v_terms[rd] = c * g * Fraction(1, d)
        u = QuadExt(u_terms)
        v = QuadExt(v_terms)
        denom = u * u - v * v * d
        inv_denom = denom.inverse()
        return (u - v * QuadExt({d: Fraction(1)})) * inv_denom

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        out = QuadExt(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # ----- comparisons ------------------------------------------------

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(self._terms)

    def sign(self) -> int:
        return quadext_sign(self)

    def _cmp(self, other) -> int:
        return (self - other).sign()

    def __lt__(self, other):
        return self._cmp(self._coerce(other)) < 0

    def __le__(self, other):
        return self._cmp(self._coerce(other)) <= 0

    def __gt__(self, other):
        return self._cmp(self._coerce(other)) > 0

    def __ge__(self, other):
        return self._cmp(self._coerce(other)) >= 0

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __float__(self):
        return sum(float(c) * math.sqrt(r) for r, c in self._terms)

    def __repr__(self):
        return f"QuadExt({format_scalar(self)!r})"

    def __str__(self):
        return format_scalar(self)

    def __bool__(self):
        return bool(self._terms)


# ----- exact square roots ---------------------------------------------


def sqrt_adjoin(r) -> QuadExt:
    """Exact square root of a nonnegative rational, as a QuadExt.

    ``sqrt(p/q) = sqrt(p*q)/q``; the integer radicand is reduced to its
    square-free part, so perfect squares come back rational.
    """
    r = as_rational(r)
    if r < 0:
        raise ValueError(f"square root of negative rational {r}")
    if r == 0:
        return QuadExt(0)
    n = r.numerator * r.denominator
    s, d = squarefree_decompose(n)
    return QuadExt({d: Fraction(s, r.denominator)})


def quadext_sqrt(a: ScalarLike) -> Optional[QuadExt]:
    """Exact square root of ``a`` inside a quadratic extension, if one exists.

    Handles rational inputs and inputs of the form ``p + q*sqrt(w)`` whose
    root decomposes as ``sqrt(x) +/- sqrt(y)`` with rational x, y.  Returns
    None when the root has degree > 4 over Q (no QuadExt representation).
    """
    a = QuadExt(a)
    sgn = a.sign()
    if sgn < 0:
        raise ValueError(f"square root of negative value {a}")
    if sgn == 0:
        return QuadExt(0)
    if a.is_rational():
        return sqrt_adjoin(a.rational_value())
    rads = a.radicands()
    if len(rads) != 1:
        return None
    w = rads[0]
    p = Fraction(0)
    q = Fraction(0)
    for r, c in a.terms:
        if r == 1:
            p = c
        else:
            q = c
    # (sqrt(x) + sqrt(y))^2 = (x + y) + 2 sqrt(x y): need x+y = p, 4xy = q^2 w
    disc = p * p - q * q * w
    if disc < 0:
        return None
    root = _rational_sqrt(disc)
    if root is None:
        return None
    x = (p + root) / 2
    y = (p - root) / 2
    if x < 0 or y < 0:
        return None
    sx = sqrt_adjoin(x)
    sy = sqrt_adjoin(y)
    return sx + sy if q > 0 else sx - sy


def _rational_sqrt(r: Fraction) -> Optional[Fraction]:
    if r < 0:
        return None
    a = math.isqrt(r.numerator)
    b = math.isqrt(r.denominator)
    if a * a == r.numerator and b * b == r.denominator:
        return Fraction(a, b)
    return None


# ----- exact sign determination ---------------------------------------


def quadext_sign(a: ScalarLike) -> int:
    """Exact sign in {-1, 0, +1}.

    Zero is structural (canonical forms of nonzero values are nonzero since
    the sqrt(d) over distinct square-free d are linearly independent over Q).
    One- and two-term values are decided by comparing squares; anything
    longer by interval refinement with rational endpoints, which terminates
    because the value is known to be nonzero.
    """
    a = QuadExt(a)
    terms = a.terms
    if not terms:
        return 0
    if len(terms) == 1:
        c = terms[0][1]
        return 1 if c > 0 else -1
    if len(terms) == 2:
        (r1, c1), (r2, c2) = terms
        s1 = 1 if c1 > 0 else -1
        s2 = 1 if c2 > 0 else -1
        if s1 == s2:
            return s1
        # opposite signs: compare c1^2 r1 vs c2^2 r2
        lhs = c1 * c1 * r1
        rhs = c2 * c2 * r2
        if lhs == rhs:
            return 0  # unreachable for canonical forms; kept for safety
        return s1 if lhs > rhs else s2
    prec = 16
    while True:
        lo = Fraction(0)
        hi = Fraction(0)
        scale = 1 << prec
        for r, c in terms:
            n = math.isqrt(r * scale * scale)
            root_lo = Fraction(n, scale)
            root_hi = Fraction(n + 1, scale)
            if c > 0:
                lo += c * root_lo
                hi += c * root_hi
            else:
                lo += c * root_hi
                hi += c * root_lo
        if lo > 0:
            return 1
        if hi < 0:
            return -1
        prec *= 2


# ----- textual grammar -------------------------------------------------
#
# rationals render as "p/q" (or "p"); QuadExt values as a signed sum of
# "c*sqrt(d)" terms in ascending radicand order, e.g. "4/9", "-1/18*sqrt(7)",
# "2/3 + 1/3*sqrt(14)".  parse_scalar accepts the same grammar.

_TOKEN = re.compile(
    r"\s*(?:(?P<sign>[+-])|(?P<coeff>\d+(?:/\d+)?)(?:\s*\*\s*sqrt\(\s*(?P<rad>\d+)\s*\))?"
    r"|(?P<lone>sqrt\(\s*(?P<lrad>\d+)\s*\)))"
)


def format_scalar(value: ScalarLike) -> str:
    if isinstance(value, (int, Fraction)):
        return str(Fraction(value))
    value = QuadExt(value)
    if not value.terms:
        return "0"
    parts: list[str] = []
    for r, c in value.terms:
        mag = str(abs(c)) if r == 1 else f"{abs(c)}*sqrt({r})"
        if not parts:
            parts.append(mag if c > 0 else f"-{mag}")
        else:
            parts.append(f"+ {mag}" if c > 0 else f"- {mag}")
    return " ".join(parts)


def parse_scalar(text: str) -> QuadExt:
    """Parse the textual scalar grammar back into a QuadExt."""
    terms: dict[int, Fraction] = {}
    pos = 0
    sign = 1
    expect_term = True
    text = text.strip()
    if not text:
        raise ValueError("empty scalar")
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"bad scalar syntax at {text[pos:]!r}")
        pos = m.end()
        if m.group("sign"):
            if m.group("sign") == "-":
                sign = -sign
            expect_term = True
            continue
        if not expect_term:
            raise ValueError(f"missing operator before {text[m.start():]!r}")
        if m.group("lone"):
            rad = int(m.group("lrad"))
            coeff = Fraction(1)
        else:
            coeff = Fraction(m.group("coeff"))
            rad = int(m.group("rad")) if m.group("rad") else 1
        terms[rad] = terms.get(rad, Fraction(0)) + sign * coeff
        sign = 1
        expect_term = False
    if expect_term:
        raise ValueError(f"dangling operator in {text!r}")
    return QuadExt(terms)
