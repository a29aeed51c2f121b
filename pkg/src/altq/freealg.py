"""Noncommutative polynomials over Q(s) on the alternating and root-vector alphabets.

A term is keyed by ``(word, central)``: ``word`` is a tuple of :class:`GenSymbol`
and ``central`` a sorted tuple of indices ``n`` standing for commuting central
symbols ``Delta_n``.  Keeping the Deltas in the key rather than in the word
makes them central by construction.
"""

from __future__ import annotations

import enum
import re
from typing import Callable, Iterable, Iterator, Mapping, NamedTuple

from .scalars import ONE, ZERO, Q, RatFuncQ, as_ratfunc, qbracket

__all__ = [
    "Kind",
    "GenSymbol",
    "NCPoly",
    "RelationSet",
    "AlphabetMismatch",
    "Wm",
    "Wp",
    "W",
    "G",
    "Gt",
    "E0",
    "E1",
    "F0",
    "F1",
    "delta",
    "comm",
    "qcomm",
    "apply_sigma",
    "apply_S",
    "parse_symbol",
]


class AlphabetMismatch(ValueError):
    """An operation was applied to letters outside its alphabet."""


class Kind(enum.IntEnum):
    # order of the members fixes the letter order used for canonical sorting
    WM = 0
    G = 1
    GT = 2
    WP = 3
    E1 = 4
    E0 = 5
    F1 = 6
    F0 = 7


_ALTERNATING = (Kind.WM, Kind.G, Kind.GT, Kind.WP)
_INDEXED = _ALTERNATING


class GenSymbol(NamedTuple):
    """A letter.  ``Wm(k)`` is W_{-k}, ``Wp(k)`` is W_{k+1}, ``G(k)`` is G_{k+1}."""

    kind: Kind
    index: int = 0

    @property
    def deg(self) -> tuple[int, int]:
        k = self.index
        if self.kind is Kind.WM:
            return (k + 1, k)
        if self.kind is Kind.WP:
            return (k, k + 1)
        if self.kind in (Kind.G, Kind.GT):
            return (k + 1, k + 1)
        if self.kind in (Kind.E1, Kind.F1):
            return (1, 0)
        return (0, 1)

    @property
    def is_alternating(self) -> bool:
        return self.kind in _ALTERNATING

    def label(self) -> str:
        k = self.index
        if self.kind is Kind.WM:
            return f"W[{-k}]"
        if self.kind is Kind.WP:
            return f"W[{k + 1}]"
        if self.kind is Kind.G:
            return f"G[{k + 1}]"
        if self.kind is Kind.GT:
            return f"Gt[{k + 1}]"
        return self.kind.name

    def __str__(self):
        return self.label()

    def __repr__(self):
        return self.label()


def Wm(k: int) -> GenSymbol:
    return GenSymbol(Kind.WM, k)


def Wp(k: int) -> GenSymbol:
    return GenSymbol(Kind.WP, k)


def W(n: int) -> GenSymbol:
    """W_n in the usual integer labelling: n <= 0 gives W_{-k}, n >= 1 gives W_{k+1}."""
    return Wm(-n) if n <= 0 else Wp(n - 1)


def G(n: int) -> GenSymbol:
    """G_n for n >= 1."""
    if n < 1:
        raise ValueError("G_n needs n >= 1")
    return GenSymbol(Kind.G, n - 1)


def Gt(n: int) -> GenSymbol:
    if n < 1:
        raise ValueError("Gt_n needs n >= 1")
    return GenSymbol(Kind.GT, n - 1)


E0 = GenSymbol(Kind.E0)
E1 = GenSymbol(Kind.E1)
F0 = GenSymbol(Kind.F0)
F1 = GenSymbol(Kind.F1)

_SYMBOL_RE = re.compile(r"^\s*(W|G|Gt|E|F)\[?\s*(-?\d+)\s*\]?\s*$")


def parse_symbol(text: str) -> GenSymbol:
    """Parse ``W[-1]``, ``W2``, ``G[1]``, ``Gt[2]``, ``E0`` ..."""
    m = _SYMBOL_RE.match(text)
    if not m:
        raise ValueError(f"unknown generator {text!r}")
    head, num = m.group(1), int(m.group(2))
    if head == "W":
        return W(num)
    if head == "G":
        return G(num)
    if head == "Gt":
        return Gt(num)
    if num not in (0, 1):
        raise ValueError(f"unknown generator {text!r}")
    return {("E", 0): E0, ("E", 1): E1, ("F", 0): F0, ("F", 1): F1}[(head, num)]


Word = tuple  # tuple[GenSymbol, ...]
Central = tuple  # sorted tuple of Delta indices


def _word_key(key):
    word, central = key
    return (len(word), word, len(central), central)


class NCPoly:
    """Finite Q(s)-linear combination of words, optionally times central Deltas."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping | None = None):
        clean = {}
        if terms:
            for k, c in terms.items():
                c = as_ratfunc(c)
                if not c.is_zero():
                    clean[k] = c
        self.terms: dict = clean

    # constructors

    @classmethod
    def _raw(cls, terms: dict) -> "NCPoly":
        p = cls.__new__(cls)
        p.terms = terms
        return p

    @classmethod
    def const(cls, c) -> "NCPoly":
        c = as_ratfunc(c)
        return cls._raw({} if c.is_zero() else {((), ()): c})

    @classmethod
    def letter(cls, sym: GenSymbol, coeff=ONE) -> "NCPoly":
        return cls({((sym,), ()): coeff})

    @classmethod
    def word(cls, *syms: GenSymbol, coeff=ONE) -> "NCPoly":
        return cls({(tuple(syms), ()): coeff})

    @classmethod
    def central(cls, *indices: int, coeff=ONE) -> "NCPoly":
        return cls({((), tuple(sorted(indices))): coeff})

    # arithmetic

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for k, c in other.terms.items():
            v = out.get(k)
            if v is None:
                out[k] = c
            else:
                v = v + c
                if v.is_zero():
                    del out[k]
                else:
                    out[k] = v
        return NCPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return NCPoly._raw({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def scale(self, c) -> "NCPoly":
        c = as_ratfunc(c)
        if c.is_zero():
            return NCPoly._raw({})
        return NCPoly._raw({k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, NCPoly):
            c = as_ratfunc(other)
            if c is NotImplemented:
                return NotImplemented
            return self.scale(c)
        out: dict = {}
        for (w1, c1), a in self.terms.items():
            for (w2, c2), b in other.terms.items():
                key = (w1 + w2, tuple(sorted(c1 + c2)) if c1 and c2 else (c1 or c2))
                v = a * b
                old = out.get(key)
                if old is not None:
                    v = old + v
                    if v.is_zero():
                        del out[key]
                        continue
                out[key] = v
        return NCPoly._raw(out)

    def __rmul__(self, other):
        c = as_ratfunc(other)
        if c is NotImplemented:
            return NotImplemented
        return self.scale(c)

    def __truediv__(self, other):
        return self.scale(as_ratfunc(other).inverse())

    def __pow__(self, n: int):
        out = NCPoly.const(ONE)
        for _ in range(n):
            out = out * self
        return out

    # comparison

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    # structure

    def sorted_terms(self) -> list:
        return sorted(self.terms.items(), key=lambda kv: _word_key(kv[0]))

    def leading(self):
        """Greatest term under the deglex order, as ``(key, coeff)``."""
        return max(self.terms.items(), key=lambda kv: _word_key(kv[0]))

    def letters(self) -> set:
        return {s for (w, _), _c in self.terms.items() for s in w}

    def central_indices(self) -> set:
        return {n for (_w, c) in self.terms for n in c}

    @staticmethod
    def key_degree(key) -> tuple[int, int]:
        word, central = key
        i = j = 0
        for s in word:
            a, b = s.deg
            i += a
            j += b
        for n in central:
            i += n
            j += n
        return (i, j)

    def degrees(self) -> set:
        return {self.key_degree(k) for k in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def degree(self) -> tuple[int, int] | None:
        degs = self.degrees()
        if len(degs) > 1:
            raise ValueError("polynomial is not homogeneous")
        return next(iter(degs)) if degs else None

    def split_by_degree(self) -> dict:
        out: dict = {}
        for k, c in self.terms.items():
            out.setdefault(self.key_degree(k), {})[k] = c
        return {d: NCPoly._raw(t) for d, t in out.items()}

    # maps

    def map_coeffs(self, f: Callable[[RatFuncQ], RatFuncQ]) -> "NCPoly":
        return NCPoly({k: f(c) for k, c in self.terms.items()})

    def map_letters(self, f: Callable[[GenSymbol], GenSymbol], reverse: bool = False) -> "NCPoly":
        out: dict = {}
        for (w, cen), c in self.terms.items():
            nw = tuple(f(s) for s in (reversed(w) if reverse else w))
            key = (nw, cen)
            out[key] = out[key] + c if key in out else c
        return NCPoly(out)

    def substitute(self, images: Mapping | Callable, central: Mapping | Callable | None = None) -> "NCPoly":
        """Algebra map: each letter goes to an NCPoly; central Deltas optionally too.

        ``images`` may be a mapping or a callable.  Letters it does not know are
        kept.  ``central`` maps a Delta index to an NCPoly; by default Deltas stay.
        """
        get = images if callable(images) else (lambda s: images.get(s))
        getc = central if (central is None or callable(central)) else (lambda n: central.get(n))
        cache: dict = {}

        def img(s):
            if s not in cache:
                v = get(s)
                cache[s] = NCPoly.letter(s) if v is None else _coerce(v)
            return cache[s]

        total = NCPoly._raw({})
        for (w, cen), c in self.terms.items():
            term = NCPoly._raw({((), ()): c})
            for n in cen:
                v = getc(n) if getc is not None else None
                term = term * (NCPoly.central(n) if v is None else _coerce(v))
            for s in w:
                term = term * img(s)
                if term.is_zero():
                    break
            total = total + term
        return total

    def set_central(self, values: Mapping[int, object] | None = None, default=None) -> "NCPoly":
        """Replace each Delta_n by a scalar (``values[n]`` or ``default``)."""
        out: dict = {}
        for (w, cen), c in self.terms.items():
            keep = []
            for n in cen:
                v = values.get(n) if values else None
                if v is None:
                    v = default
                if v is None:
                    keep.append(n)
                else:
                    c = c * as_ratfunc(v)
            if c.is_zero():
                continue
            key = (w, tuple(keep))
            out[key] = out[key] + c if key in out else c
        return NCPoly(out)

    def evaluate(self, images: Mapping | Callable, one, central: Mapping | Callable | None = None):
        """Evaluate in any ring: letters -> ring elements supporting + and *.

        ``one`` is the ring identity; scalars act by ``elem * RatFuncQ``.
        """
        get = images if callable(images) else images.__getitem__
        getc = None if central is None else (central if callable(central) else central.__getitem__)
        total = None
        for (w, cen), c in self.terms.items():
            acc = None
            for s in w:
                m = get(s)
                acc = m if acc is None else acc * m
            for n in cen:
                if getc is None:
                    raise ValueError("polynomial has central symbols but no central images given")
                m = getc(n)
                acc = m if acc is None else acc * m
            acc = one * c if acc is None else acc * c
            total = acc if total is None else total + acc
        if total is None:
            total = one * ZERO
        return total

    # printing

    def __repr__(self):
        return f"NCPoly({self})"

    def __str__(self):
        return self.to_text()

    def to_text(self) -> str:
        """Deterministic text form: terms in deglex order joined by ``+``."""
        if not self.terms:
            return "0"
        parts = []
        for (w, cen), c in self.sorted_terms():
            mono = [f"Delta[{n}]" for n in cen] + [s.label() for s in w]
            coeff = str(c)
            if not mono:
                parts.append(f"({coeff})")
            elif c == ONE:
                parts.append(" ".join(mono))
            else:
                parts.append(f"({coeff}) " + " ".join(mono))
        return " + ".join(parts)


def _coerce(x):
    if isinstance(x, NCPoly):
        return x
    c = as_ratfunc(x)
    if c is NotImplemented:
        return NotImplemented
    return NCPoly.const(c)


def delta(n: int) -> NCPoly:
    """Central symbol Delta_n (n >= 1)."""
    return NCPoly.central(n)


def _as_poly(x) -> NCPoly:
    if isinstance(x, GenSymbol):
        return NCPoly.letter(x)
    return _coerce(x)


def comm(x, y) -> NCPoly:
    x, y = _as_poly(x), _as_poly(y)
    return x * y - y * x


def qcomm(x, y, qq: RatFuncQ = Q) -> NCPoly:
    """``[x, y]_q = q x y - q^{-1} y x``; ``qq`` overrides the deformation (e.g. q^{-1})."""
    x, y = _as_poly(x), _as_poly(y)
    return (x * y).scale(qq) - (y * x).scale(qq.inverse())


# -- automorphisms --------------------------------------------------------------

def _sigma_letter(s: GenSymbol) -> GenSymbol:
    if s.kind is Kind.WM:
        return GenSymbol(Kind.WP, s.index)
    if s.kind is Kind.WP:
        return GenSymbol(Kind.WM, s.index)
    if s.kind is Kind.G:
        return GenSymbol(Kind.GT, s.index)
    if s.kind is Kind.GT:
        return GenSymbol(Kind.G, s.index)
    raise AlphabetMismatch(f"sigma is not defined on {s}")


def _S_letter(s: GenSymbol) -> GenSymbol:
    if s.kind in (Kind.WM, Kind.WP):
        return s
    if s.kind is Kind.G:
        return GenSymbol(Kind.GT, s.index)
    if s.kind is Kind.GT:
        return GenSymbol(Kind.G, s.index)
    raise AlphabetMismatch(f"S is not defined on {s}")


def apply_sigma(p: NCPoly) -> NCPoly:
    """Automorphism W_{-k} <-> W_{k+1}, G <-> Gt.  Deltas are fixed."""
    return p.map_letters(_sigma_letter)


def apply_S(p: NCPoly) -> NCPoly:
    """Antiautomorphism: reverse words, fix the W's, swap G <-> Gt."""
    return p.map_letters(_S_letter, reverse=True)


# -- relation sets ----------------------------------------------------------------

class RelationSet:
    """Labelled list of relations ``lhs - rhs``."""

    def __init__(self, relations: Iterable[tuple[str, NCPoly]] = ()):
        self.relations: list[tuple[str, NCPoly]] = list(relations)

    def __iter__(self) -> Iterator[tuple[str, NCPoly]]:
        return iter(self.relations)

    def __len__(self):
        return len(self.relations)

    def __getitem__(self, i):
        return self.relations[i]

    def polys(self) -> list[NCPoly]:
        return [p for _, p in self.relations]

    def labels(self) -> list[str]:
        return [l for l, _ in self.relations]

    def get(self, label: str) -> NCPoly:
        for l, p in self.relations:
            if l == label:
                return p
        raise KeyError(label)

    def __add__(self, other: "RelationSet") -> "RelationSet":
        return RelationSet(self.relations + other.relations)

    def filter(self, pred: Callable[[str, NCPoly], bool]) -> "RelationSet":
        return RelationSet((l, p) for l, p in self.relations if pred(l, p))

    def letters(self) -> set:
        return set().union(*(p.letters() for p in self.polys())) if self.relations else set()

    def degrees(self) -> set:
        return set().union(*(p.degrees() for p in self.polys())) if self.relations else set()

    def map(self, f: Callable[[NCPoly], NCPoly]) -> "RelationSet":
        return RelationSet((l, f(p)) for l, p in self.relations)


def monic(p: NCPoly) -> NCPoly:
    """Scale so the deglex-leading coefficient is 1."""
    if p.is_zero():
        return p
    _, c = p.leading()
    return p.scale(c.inverse())


class RelationCollector:
    """Accumulates labelled relations, dropping zeros and scalar duplicates."""

    def __init__(self):
        self._seen: set = set()
        self.relations: list[tuple[str, NCPoly]] = []

    def add(self, label: str, poly: NCPoly) -> None:
        if poly.is_zero():
            return
        key = monic(poly)
        if key in self._seen:
            return
        self._seen.add(key)
        self.relations.append((label, poly))

    def result(self) -> RelationSet:
        return RelationSet(self.relations)
