"""Exact noncommutative polynomial arithmetic over magic unitary entries.

The free *-algebra is generated by symbols u[i,j] with integer indices
from 1.  A word is a tuple of generators; a polynomial maps words to
nonzero rational coefficients.  No relations are applied here; rewriting
belongs to the relations module.

Coefficients are ``int`` where possible and ``fractions.Fraction``
otherwise.  The two mix freely: equal values compare and hash equal.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import NamedTuple, Union

ROW = "row"
COL = "col"

Coeff = Union[int, Fraction]


class Gen(NamedTuple):
    """One generator u[row,col]."""

    row: int
    col: int


Word = tuple  # tuple[Gen, ...]

_GEN_CACHE: dict[tuple[int, int], Gen] = {}


def gen(row: int, col: int) -> Gen:
    """The generator u[row,col].  Indices start at 1."""
    g = _GEN_CACHE.get((row, col))
    if g is None:
        if not (isinstance(row, int) and isinstance(col, int) and row >= 1 and col >= 1):
            raise ValueError(f"generator indices must be integers >= 1, got ({row!r}, {col!r})")
        g = Gen(row, col)
        _GEN_CACHE[(row, col)] = g
    return g


def word(*pairs) -> Word:
    """Build a word from (row, col) pairs."""
    return tuple(gen(r, c) for r, c in pairs)


def _check_coeff(c) -> Coeff:
    if isinstance(c, bool) or not isinstance(c, (int, Fraction)):
        raise TypeError(f"coefficients must be int or Fraction, got {type(c).__name__}")
    return c


class Poly:
    """Polynomial as a word-to-coefficient map.  Zero coefficients are never stored."""

    __slots__ = ("terms",)

    def __init__(self, terms=()):
        data: dict[Word, Coeff] = {}
        items = terms.items() if hasattr(terms, "items") else terms
        for w, c in items:
            _check_coeff(c)
            w = word(*w)
            c = data.get(w, 0) + c
            if c:
                data[w] = c
            else:
                data.pop(w, None)
        self.terms = data

    @staticmethod
    def _from_dict(data: dict) -> "Poly":
        # Trusted constructor: data must already be normalized.
        p = object.__new__(Poly)
        p.terms = data
        return p

    @staticmethod
    def zero() -> "Poly":
        return Poly._from_dict({})

    @staticmethod
    def one() -> "Poly":
        return Poly._from_dict({(): 1})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None

    def __add__(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            return NotImplemented
        data = dict(self.terms)
        for w, c in other.terms.items():
            s = data.get(w, 0) + c
            if s:
                data[w] = s
            else:
                del data[w]
        return Poly._from_dict(data)

    def __sub__(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            return NotImplemented
        data = dict(self.terms)
        for w, c in other.terms.items():
            s = data.get(w, 0) - c
            if s:
                data[w] = s
            else:
                del data[w]
        return Poly._from_dict(data)

    def __neg__(self) -> "Poly":
        return Poly._from_dict({w: -c for w, c in self.terms.items()})

    def __mul__(self, other) -> "Poly":
        if isinstance(other, Poly):
            data: dict[Word, Coeff] = {}
            for w1, c1 in self.terms.items():
                for w2, c2 in other.terms.items():
                    w = w1 + w2
                    s = data.get(w, 0) + c1 * c2
                    if s:
                        data[w] = s
                    else:
                        del data[w]
            return Poly._from_dict(data)
        c = _check_coeff(other)
        if not c:
            return Poly.zero()
        return Poly._from_dict({w: c0 * c for w, c0 in self.terms.items()})

    def __rmul__(self, other) -> "Poly":
        c = _check_coeff(other)
        if not c:
            return Poly.zero()
        return Poly._from_dict({w: c * c0 for w, c0 in self.terms.items()})

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"Poly({format_poly(self)})"


def u(row: int, col: int) -> Poly:
    """The polynomial consisting of the single generator u[row,col]."""
    return Poly._from_dict({(gen(row, col),): 1})


def monomial(pairs, coeff: Coeff = 1) -> Poly:
    """coeff times the word built from (row, col) pairs."""
    _check_coeff(coeff)
    if not coeff:
        return Poly.zero()
    return Poly._from_dict({word(*pairs): coeff})


def add(p: Poly, q: Poly) -> Poly:
    return p + q


def scale(c: Coeff, p: Poly) -> Poly:
    return c * p


def multiply(p: Poly, q: Poly) -> Poly:
    return p * q


def star(p: Poly) -> Poly:
    """Antilinear involution: reverse each word.

    Generators are self-adjoint and coefficients rational, so only the
    word order changes.
    """
    return Poly._from_dict({w[::-1]: c for w, c in p.terms.items()})


def commutator(p: Poly, q: Poly) -> Poly:
    return p * q - q * p


def expand_unity(p: Poly, position: int, index: int, side: str, n: int) -> Poly:
    """Insert a row or column sum of generators into every word of p.

    With side "row" the inserted factor runs over u[index,a] for a in
    1..n; with side "col" over u[a,index].  Since each row and column of
    a magic unitary sums to one, the result equals p in the quotient.
    The insertion position must be valid for every word: 0 <= position
    <= len(word).
    """
    if side not in (ROW, COL):
        raise ValueError(f"side must be {ROW!r} or {COL!r}, got {side!r}")
    if not (isinstance(n, int) and n >= 1):
        raise ValueError(f"need a positive size, got {n!r}")
    if not 1 <= index <= n:
        raise ValueError(f"index {index} out of range 1..{n}")
    for w in p.terms:
        if not 0 <= position <= len(w):
            raise ValueError(
                f"position {position} invalid for a word of length {len(w)}"
            )
    if side == ROW:
        inserted = [(gen(index, a),) for a in range(1, n + 1)]
    else:
        inserted = [(gen(a, index),) for a in range(1, n + 1)]
    data: dict[Word, Coeff] = {}
    for w, c in p.terms.items():
        head, tail = w[:position], w[position:]
        for mid in inserted:
            nw = head + mid + tail
            s = data.get(nw, 0) + c
            if s:
                data[nw] = s
            else:
                del data[nw]
    return Poly._from_dict(data)


def evaluate_perm(g, sigma, p: Poly) -> Fraction:
    """Evaluate p at the permutation matrix of sigma on the vertices of g.

    The generator u[i,j] becomes 1 when sigma maps j to i and 0
    otherwise; the empty word evaluates to 1.  ``sigma`` is anything
    with an ``images`` tuple in one-line notation, or such a sequence
    itself.
    """
    images = tuple(getattr(sigma, "images", sigma))
    n = g.n
    if len(images) != n:
        raise ValueError(f"permutation has degree {len(images)}, graph has {n} vertices")
    if sorted(images) != list(range(1, n + 1)):
        raise ValueError(f"not a permutation of 1..{n}: {images}")
    total = Fraction(0)
    for w, c in p.terms.items():
        for f in w:
            if f.row > n or f.col > n:
                raise ValueError(
                    f"generator u[{f.row},{f.col}] out of range for n={n}"
                )
            if images[f.col - 1] != f.row:
                break
        else:
            total += c
    return total


def _term_str(w: Word, c: Coeff) -> tuple[bool, str]:
    """Sign and unsigned rendering of one term."""
    negative = c < 0
    a = -c if negative else c
    gens = "".join(f"u[{g.row},{g.col}]" for g in w)
    if not w:
        body = str(a)
    elif a == 1:
        body = gens
    else:
        body = f"{a}*{gens}"
    return negative, body


def format_poly(p: Poly) -> str:
    """Canonical text form: terms in degree-then-lexicographic order."""
    if not p.terms:
        return "0"
    parts = []
    for w in sorted(p.terms, key=lambda w: (len(w), w)):
        negative, body = _term_str(w, p.terms[w])
        if not parts:
            parts.append(f"-{body}" if negative else body)
        else:
            parts.append(f" - {body}" if negative else f" + {body}")
    return "".join(parts)


class PolyParseError(ValueError):
    """Raised on malformed polynomial text; ``position`` is the offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"at position {position}: {message}")
        self.position = position


_TOKEN = re.compile(
    r"""(?P<ws>\s+)
      | (?P<gen>u\[(?P<row>\d+),(?P<col>\d+)\])
      | (?P<num>\d+(?:/\d+)?)
      | (?P<plus>\+)
      | (?P<minus>-)
      | (?P<times>\*)
    """,
    re.VERBOSE,
)


def _tokenize(text: str) -> list[tuple[str, object, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise PolyParseError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        if kind == "gen":
            r, c = int(m.group("row")), int(m.group("col"))
            if r < 1 or c < 1:
                raise PolyParseError("generator indices start at 1", pos)
            tokens.append(("gen", gen(r, c), pos))
        elif kind == "num":
            text_num = m.group("num")
            if "/" in text_num:
                a, b = text_num.split("/")
                if int(b) == 0:
                    raise PolyParseError("zero denominator", pos)
                value: Coeff = Fraction(int(a), int(b))
                if value.denominator == 1:
                    value = int(value)
            else:
                value = int(text_num)
            tokens.append(("num", value, pos))
        elif kind in ("plus", "minus", "times"):
            tokens.append((kind, None, pos))
        pos = m.end()
    return tokens


def parse_poly(text: str) -> Poly:
    """Parse the syntax produced by :func:`format_poly`.

    Terms are signed products of numbers and generators, with
    generators joined by juxtaposition and an optional "*" between any
    two factors, e.g. ``"u[1,2]u[2,1] - 3/2*u[1,1]"``.  A bare number
    stands for a multiple of the empty word.  Repeated words
    accumulate.
    """
    tokens = _tokenize(text)
    if not tokens:
        raise PolyParseError("empty input", 0)
    data: dict[Word, Coeff] = {}
    i = 0

    def expect_factor():
        if i >= len(tokens):
            raise PolyParseError("unexpected end of input", len(text))
        if tokens[i][0] not in ("num", "gen"):
            raise PolyParseError(f"unexpected {tokens[i][0]!r} token", tokens[i][2])

    while i < len(tokens):
        sign = 1
        if tokens[i][0] in ("plus", "minus"):
            if tokens[i][0] == "minus":
                sign = -1
            i += 1
        coeff: Coeff = 1
        gens: list[Gen] = []
        expect_factor()
        while True:
            kind, value, _ = tokens[i]
            if kind == "num":
                coeff = coeff * value
            else:
                gens.append(value)
            i += 1
            if i < len(tokens) and tokens[i][0] == "times":
                i += 1
                expect_factor()
                continue
            if i < len(tokens) and tokens[i][0] == "gen":
                continue
            break
        w = tuple(gens)
        c = data.get(w, 0) + sign * coeff
        if c:
            data[w] = c
        else:
            data.pop(w, None)
        if i < len(tokens) and tokens[i][0] not in ("plus", "minus"):
            raise PolyParseError("expected '+' or '-'", tokens[i][2])
    return Poly._from_dict(data)
