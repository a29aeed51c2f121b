"""Exact scalars: the field Q(s) with q = s**2.

Every coefficient in the library is a :class:`RatFuncQ`.  Elements are kept in
a canonical form ``s**shift * num(s) / den(s)`` where ``num`` and ``den`` are
coprime polynomials over Q, neither divisible by ``s``, and ``den(0) == 1``.
Equality is therefore a comparison of the stored data.

Polynomial gcds are delegated to FLINT (``python-flint``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

import flint

__all__ = [
    "LaurentQ",
    "RatFuncQ",
    "PoleAtPoint",
    "ZERO",
    "ONE",
    "S",
    "Q",
    "qpow",
    "qbracket",
    "eval_at",
    "elementary_symmetric",
    "as_ratfunc",
    "parse_scalar",
]


class PoleAtPoint(ZeroDivisionError):
    """The evaluation point is a zero of the denominator."""


def _fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, flint.fmpq):
        return Fraction(int(c.p), int(c.q))
    if isinstance(c, flint.fmpz):
        return Fraction(int(c))
    return Fraction(c)


def _fmpq(c) -> flint.fmpq:
    c = _fraction(c)
    return flint.fmpq(c.numerator, c.denominator)


@dataclass(frozen=True)
class LaurentQ:
    """Laurent polynomial in ``s`` with rational coefficients.

    ``coeffs`` maps exponents to nonzero Fractions.
    """

    coeffs: Mapping[int, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {int(e): _fraction(c) for e, c in self.coeffs.items() if c != 0}
        object.__setattr__(self, "coeffs", dict(sorted(clean.items())))

    @classmethod
    def from_poly(cls, shift: int, poly: flint.fmpq_poly) -> "LaurentQ":
        return cls({shift + i: c for i, c in enumerate(poly.coeffs()) if c != 0})

    def to_poly(self) -> tuple[int, flint.fmpq_poly]:
        """Return ``(shift, p)`` with ``self == s**shift * p`` and ``p(0) != 0``."""
        if not self.coeffs:
            return 0, flint.fmpq_poly(0)
        lo = min(self.coeffs)
        hi = max(self.coeffs)
        dense = [_fmpq(self.coeffs.get(lo + i, 0)) for i in range(hi - lo + 1)]
        return lo, flint.fmpq_poly(dense)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, s0) -> Fraction:
        s0 = _fraction(s0)
        return sum((c * s0**e for e, c in self.coeffs.items()), Fraction(0))

    def __hash__(self):
        return hash(tuple(self.coeffs.items()))

    def __str__(self):
        return _format_laurent(self.coeffs)


def _strip_s(poly: flint.fmpq_poly) -> tuple[int, flint.fmpq_poly]:
    """Split ``poly = s**k * p`` with ``p(0) != 0``."""
    if poly.is_zero():
        return 0, poly
    k = 0
    coeffs = poly.coeffs()
    while coeffs[k] == 0:
        k += 1
    if k:
        poly = flint.fmpq_poly(coeffs[k:])
    return k, poly


class RatFuncQ:
    """Element of Q(s), immutable, canonical."""

    __slots__ = ("shift", "num", "den", "_hash")

    def __init__(self, num=0, den=None, shift: int = 0, *, _canonical: bool = False):
        if _canonical:
            self.shift = shift
            self.num = num
            self.den = den
            self._hash = None
            return
        if isinstance(num, RatFuncQ):
            self.shift, self.num, self.den, self._hash = num.shift, num.num, num.den, num._hash
            return
        if not isinstance(num, flint.fmpq_poly):
            num = flint.fmpq_poly([_fmpq(num)])
        if den is None:
            den = flint.fmpq_poly([1])
        elif not isinstance(den, flint.fmpq_poly):
            den = flint.fmpq_poly([_fmpq(den)])
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        self._hash = None
        if num.is_zero():
            self.shift, self.num, self.den = 0, flint.fmpq_poly(0), flint.fmpq_poly([1])
            return
        kn, num = _strip_s(num)
        kd, den = _strip_s(den)
        g = num.gcd(den)
        if not g.is_one():
            num = num // g
            den = den // g
        c0 = den.coeffs()[0]
        if c0 != 1:
            num = num / c0
            den = den / c0
        self.shift = shift + kn - kd
        self.num = num
        self.den = den

    # construction helpers

    @classmethod
    def from_laurent(cls, lp: LaurentQ | Mapping[int, object]) -> "RatFuncQ":
        if not isinstance(lp, LaurentQ):
            lp = LaurentQ(lp)
        shift, p = lp.to_poly()
        return cls(p, None, shift)

    # inspection

    def numerator(self) -> LaurentQ:
        return LaurentQ.from_poly(self.shift, self.num)

    def denominator(self) -> LaurentQ:
        return LaurentQ.from_poly(0, self.den)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_laurent(self) -> bool:
        return self.den.is_one()

    def is_constant(self) -> bool:
        return self.den.is_one() and (self.num.is_zero() or (self.shift == 0 and self.num.degree() == 0))

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not a rational constant")
        return _fraction(self.num.coeffs()[0]) if not self.num.is_zero() else Fraction(0)

    def key(self) -> tuple:
        return (self.shift, tuple(self.num.coeffs()), tuple(self.den.coeffs()))

    # arithmetic

    def _parts(self):
        return self.shift, self.num, self.den

    def __add__(self, other):
        other = as_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        a, b = self, other
        if a.shift > b.shift:
            a, b = b, a
        d = b.shift - a.shift
        bn = b.num if d == 0 else b.num * flint.fmpq_poly([0] * d + [1])
        if a.den == b.den:
            return RatFuncQ(a.num + bn, a.den, a.shift)
        return RatFuncQ(a.num * b.den + bn * a.den, a.den * b.den, a.shift)

    __radd__ = __add__

    def __neg__(self):
        return RatFuncQ(-self.num, self.den, self.shift, _canonical=True)

    def __sub__(self, other):
        other = as_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = as_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = as_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return ZERO
        if self.den.is_one() and other.den.is_one():
            return RatFuncQ(self.num * other.num, self.den, self.shift + other.shift, _canonical=True)
        return RatFuncQ(self.num * other.num, self.den * other.den, self.shift + other.shift)

    __rmul__ = __mul__

    def inverse(self) -> "RatFuncQ":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return RatFuncQ(self.den, self.num, -self.shift)

    def __truediv__(self, other):
        other = as_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = as_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        if self.den.is_one():
            return RatFuncQ(self.num**n, self.den, self.shift * n, _canonical=True)
        return RatFuncQ(self.num**n, self.den**n, self.shift * n, _canonical=True)

    def invert_s(self) -> "RatFuncQ":
        """Substitute ``s -> 1/s`` (equivalently ``q -> 1/q``)."""
        dn = self.num.degree()
        dd = self.den.degree()
        rn = flint.fmpq_poly(list(reversed(self.num.coeffs())))
        rd = flint.fmpq_poly(list(reversed(self.den.coeffs())))
        return RatFuncQ(rn, rd, -self.shift - dn + dd)

    # comparison

    def __eq__(self, other):
        other = as_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        return self.shift == other.shift and self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.key())
        return self._hash

    def __bool__(self):
        return not self.num.is_zero()

    # evaluation

    def __call__(self, s0) -> Fraction:
        return eval_at(self, s0)

    # printing

    def __repr__(self):
        return f"RatFuncQ({self})"

    def __str__(self):
        num = _format_laurent(self.numerator().coeffs)
        if self.den.is_one():
            return num
        den = _format_laurent(self.denominator().coeffs)
        return f"({num})/({den})"


def _format_laurent(coeffs: Mapping[int, Fraction]) -> str:
    """Format a Laurent polynomial in s, using q when every exponent is even."""
    if not coeffs:
        return "0"
    use_q = all(e % 2 == 0 for e in coeffs)
    var = "q" if use_q else "s"
    parts = []
    for e in sorted(coeffs, reverse=True):
        c = coeffs[e]
        p = e // 2 if use_q else e
        if p == 0:
            mono = ""
        elif p == 1:
            mono = var
        else:
            mono = f"{var}^{p}"
        mag = abs(c)
        if mono and mag == 1:
            body = mono
        elif mono:
            body = f"{mag}*{mono}"
        else:
            body = str(mag)
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def as_ratfunc(x) -> RatFuncQ:
    if isinstance(x, RatFuncQ):
        return x
    if isinstance(x, (int, Fraction, flint.fmpq, flint.fmpz)):
        if x == 0:
            return ZERO
        return RatFuncQ(flint.fmpq_poly([_fmpq(x)]), flint.fmpq_poly([1]), 0, _canonical=True)
    return NotImplemented


ZERO = RatFuncQ(flint.fmpq_poly(0), flint.fmpq_poly([1]), 0, _canonical=True)
ONE = RatFuncQ(flint.fmpq_poly([1]), flint.fmpq_poly([1]), 0, _canonical=True)
S = RatFuncQ(flint.fmpq_poly([1]), flint.fmpq_poly([1]), 1, _canonical=True)
Q = RatFuncQ(flint.fmpq_poly([1]), flint.fmpq_poly([1]), 2, _canonical=True)


def spow(n: int) -> RatFuncQ:
    """``s**n`` for any integer n."""
    return RatFuncQ(flint.fmpq_poly([1]), flint.fmpq_poly([1]), n, _canonical=True)


def qpow(n) -> RatFuncQ:
    """``q**n``; half-integer ``n`` is allowed since q = s**2."""
    two_n = Fraction(n) * 2
    if two_n.denominator != 1:
        raise ValueError(f"q-exponent {n} is not a half-integer")
    return spow(int(two_n))


def qbracket(x: int) -> RatFuncQ:
    """Balanced q-integer ``(q^x - q^-x)/(q - q^-1)`` as a Laurent polynomial."""
    x = int(x)
    if x == 0:
        return ZERO
    sign = 1 if x > 0 else -1
    n = abs(x)
    # q^{n-1} + q^{n-3} + ... + q^{1-n}
    coeffs = {2 * (n - 1 - 2 * i): Fraction(sign) for i in range(n)}
    return RatFuncQ.from_laurent(coeffs)


def eval_at(f: RatFuncQ, s0) -> Fraction:
    """Exact value of ``f`` at ``s = s0``; raises :class:`PoleAtPoint` at denominator zeros."""
    f = as_ratfunc(f)
    s0 = _fraction(s0)
    if f.is_zero():
        return Fraction(0)
    den = _fraction(f.den(_fmpq(s0)))
    if den == 0:
        raise PoleAtPoint(f"denominator of {f} vanishes at s = {s0}")
    if s0 == 0 and f.shift < 0:
        raise PoleAtPoint(f"{f} has a pole at s = 0")
    num = _fraction(f.num(_fmpq(s0)))
    return num / den * s0**f.shift


def elementary_symmetric(k: int, values: Iterable) -> RatFuncQ:
    """``e_k(values)``, with ``e_0 = 1``."""
    values = [as_ratfunc(v) for v in values]
    if not 0 <= k <= len(values):
        raise IndexError(f"e_{k} undefined for {len(values)} variables")
    # e_j of the first i values, updated in place
    e = [ONE] + [ZERO] * k
    for v in values:
        for j in range(k, 0, -1):
            e[j] = e[j] + e[j - 1] * v
    return e[k]


# -- scalar expression grammar -------------------------------------------------
#
#   expr   := term (('+'|'-') term)*
#   term   := unary (('*'|'/') unary)*
#   unary  := '-' unary | power
#   power  := atom ('^' signed_int)?
#   atom   := rational | 'q' | 's' | '(' expr ')'

def parse_scalar(text: str) -> RatFuncQ:
    """Parse strings like ``"q^2"``, ``"-q^-1"``, ``"3/2"``, ``"(q+q^-1)^2/4"``."""
    if isinstance(text, (int, Fraction)):
        return as_ratfunc(text)
    tokens = _tokenize(str(text))
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else None

    def take(expected=None):
        nonlocal pos
        tok = peek()
        if tok is None or (expected is not None and tok != expected):
            raise ValueError(f"bad scalar expression {text!r}: expected {expected!r}, got {tok!r}")
        pos += 1
        return tok

    def expr():
        val = term()
        while peek() in ("+", "-"):
            op = take()
            rhs = term()
            val = val + rhs if op == "+" else val - rhs
        return val

    def term():
        val = unary()
        while peek() in ("*", "/"):
            op = take()
            rhs = unary()
            val = val * rhs if op == "*" else val / rhs
        return val

    def unary():
        if peek() == "-":
            take()
            return -unary()
        if peek() == "+":
            take()
            return unary()
        return power()

    def power():
        base = atom()
        if peek() == "^":
            take()
            sign = 1
            if peek() in ("-", "+"):
                sign = -1 if take() == "-" else 1
            tok = take()
            if not tok.isdigit():
                raise ValueError(f"bad exponent {tok!r} in {text!r}")
            return base ** (sign * int(tok))
        return base

    def atom():
        tok = take()
        if tok == "(":
            val = expr()
            take(")")
            return val
        if tok == "q":
            return Q
        if tok == "s":
            return S
        if tok[0].isdigit():
            return as_ratfunc(Fraction(tok))
        raise ValueError(f"unexpected token {tok!r} in {text!r}")

    result = expr()
    if pos != len(tokens):
        raise ValueError(f"trailing input in scalar expression {text!r}")
    return result


def _tokenize(text: str) -> list[str]:
    out = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(text) and (text[j].isdigit()):
                j += 1
            # a bare integer; '/' is handled as division by the grammar
            out.append(text[i:j])
            i = j
        elif ch in "+-*/^()qs":
            out.append(ch)
            i += 1
        else:
            raise ValueError(f"unexpected character {ch!r} in scalar expression {text!r}")
    return out
