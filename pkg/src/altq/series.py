"""Truncated multivariate Laurent series and matrices of them.

Coefficients are any ring elements with ``+``, ``*``, unary ``-`` and
``is_zero()`` (RatFuncQ, NCPoly, RepMatrix).  Series are expanded in negative
powers: a truncated series knows, per variable, the exponent ``trust`` from
which all coefficients are exact.  Every product and sum propagates this
bound, so a coefficient is asserted only when no dropped term could reach it.
"""

from __future__ import annotations

from typing import Callable, Iterable

__all__ = ["Series", "SeriesMatrix", "TruncationTooSmall"]

NEG_INF = None


class TruncationTooSmall(ValueError):
    """Requested truncation order is below what the extraction needs."""


def _max_opt(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return max(a, b)


def _is_zero(c) -> bool:
    return c.is_zero()


class Series:
    """Finite map exponent-tuple -> coefficient, plus per-variable trust bounds."""

    __slots__ = ("nvars", "terms", "trust")

    def __init__(self, nvars: int, terms: dict | None = None, trust: tuple | None = None):
        self.nvars = nvars
        self.terms = {e: c for e, c in (terms or {}).items() if not _is_zero(c)}
        self.trust = trust if trust is not None else (NEG_INF,) * nvars

    @classmethod
    def monomial(cls, nvars: int, exps: tuple, coeff) -> "Series":
        return cls(nvars, {tuple(exps): coeff})

    @classmethod
    def const(cls, nvars: int, coeff) -> "Series":
        return cls(nvars, {(0,) * nvars: coeff})

    @classmethod
    def zero(cls, nvars: int) -> "Series":
        return cls(nvars)

    def is_exact(self) -> bool:
        return all(t is None for t in self.trust)

    def is_zero(self) -> bool:
        return not self.terms

    def top(self, i: int) -> int | None:
        """Highest exponent of variable ``i`` in the support."""
        if not self.terms:
            return None
        return max(e[i] for e in self.terms)

    def reach(self, i: int) -> int | None:
        """Highest exponent of variable ``i`` the full (untruncated) series may have."""
        top = self.top(i)
        if self.trust[i] is None:
            return top
        return self.trust[i] - 1 if top is None else max(top, self.trust[i] - 1)

    def __add__(self, other: "Series") -> "Series":
        out = dict(self.terms)
        for e, c in other.terms.items():
            if e in out:
                v = out[e] + c
                if _is_zero(v):
                    del out[e]
                else:
                    out[e] = v
            else:
                out[e] = c
        trust = tuple(_max_opt(a, b) for a, b in zip(self.trust, other.trust))
        s = Series(self.nvars, trust=trust)
        s.terms = out
        return s

    def __neg__(self):
        s = Series(self.nvars, trust=self.trust)
        s.terms = {e: -c for e, c in self.terms.items()}
        return s

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other: "Series") -> "Series":
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = c1 * c2
                if e in out:
                    v = out[e] + v
                out[e] = v
        trust = []
        for i in range(self.nvars):
            t = NEG_INF
            # a dropped term of one factor shifted by the top of the other
            ry, rx = other.reach(i), self.reach(i)
            if self.trust[i] is not None and ry is not None:
                t = _max_opt(t, self.trust[i] + ry)
            if other.trust[i] is not None and rx is not None:
                t = _max_opt(t, other.trust[i] + rx)
            trust.append(t)
        s = Series(self.nvars, trust=tuple(trust))
        s.terms = {e: c for e, c in out.items() if not _is_zero(c)}
        return s

    def scale(self, c) -> "Series":
        s = Series(self.nvars, trust=self.trust)
        s.terms = {e: v * c for e, v in self.terms.items()}
        s.terms = {e: v for e, v in s.terms.items() if not _is_zero(v)}
        return s

    def map(self, f: Callable) -> "Series":
        s = Series(self.nvars, trust=self.trust)
        s.terms = {e: f(c) for e, c in self.terms.items()}
        s.terms = {e: v for e, v in s.terms.items() if not _is_zero(v)}
        return s

    def trusted(self, exps: tuple) -> bool:
        return all(t is None or e >= t for e, t in zip(exps, self.trust))

    def trusted_terms(self) -> dict:
        return {e: c for e, c in self.terms.items() if self.trusted(e)}

    def coeff(self, exps: tuple, zero=None):
        return self.terms.get(tuple(exps), zero)


class SeriesMatrix:
    """Square matrix of :class:`Series` sharing the same variables."""

    def __init__(self, rows: list[list[Series]]):
        self.rows = rows
        self.dim = len(rows)
        self.nvars = rows[0][0].nvars

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    @classmethod
    def zeros(cls, dim: int, nvars: int) -> "SeriesMatrix":
        return cls([[Series.zero(nvars) for _ in range(dim)] for _ in range(dim)])

    @classmethod
    def from_scalars(cls, entries: list[list], nvars: int, zero_test=_is_zero) -> "SeriesMatrix":
        return cls([[Series.const(nvars, c) for c in row] for row in entries])

    def __mul__(self, other: "SeriesMatrix") -> "SeriesMatrix":
        n = self.dim
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = Series.zero(self.nvars)
                for k in range(n):
                    acc = acc + self.rows[i][k] * other.rows[k][j]
                row.append(acc)
            rows.append(row)
        return SeriesMatrix(rows)

    def __add__(self, other):
        return SeriesMatrix([[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)])

    def __sub__(self, other):
        return SeriesMatrix([[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)])

    def map(self, f: Callable) -> "SeriesMatrix":
        return SeriesMatrix([[e.map(f) for e in r] for r in self.rows])

    def scale(self, c) -> "SeriesMatrix":
        return SeriesMatrix([[e.scale(c) for e in r] for r in self.rows])

    def is_zero(self) -> bool:
        return all(e.is_zero() for r in self.rows for e in r)

    def kron(self, other: "SeriesMatrix") -> "SeriesMatrix":
        """Tensor product ``self (x) other`` with the left factor as the outer index."""
        n, m = self.dim, other.dim
        rows = [[None] * (n * m) for _ in range(n * m)]
        for i1 in range(n):
            for j1 in range(n):
                for i2 in range(m):
                    for j2 in range(m):
                        rows[i1 * m + i2][j1 * m + j2] = self.rows[i1][j1] * other.rows[i2][j2]
        return SeriesMatrix(rows)

    def entries(self) -> Iterable[tuple[int, int, Series]]:
        for i, r in enumerate(self.rows):
            for j, e in enumerate(r):
                yield i, j, e

