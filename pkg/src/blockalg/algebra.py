"""The Block-type Lie algebra over the rationals with integer degree group.

Basis: generators L[alpha, i] for alpha, i in Z, plus one central element C.
The bracket on generators is

    [L[a,i], L[b,j]] = ((i+1)*b - (j+1)*a) * L[a+b, i+j]
                       + a * delta(a, -b) * delta(i+j, -2) * C,
    [C, anything] = 0.

The central summand fires only when the degrees cancel (a = -b) and the
indices sum to -2; both conditions are required for the Jacobi identity
(dropping the degree condition breaks it, see the self-check module's
corrupted fixture).

Elements are finite rational combinations of basis symbols, stored sparsely
as {symbol: coefficient} with zero coefficients pruned, so dict equality is
mathematical equality.  Symbols are plain tuples: ("L", alpha, i) or ("C",),
and sort with all generators in (alpha, i) lexicographic order followed by
the central symbol, which is also the canonical rendering order.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from .laurent import rational_str

Symbol = tuple

CENTRAL: Symbol = ("C",)


def gen(alpha: int, i: int) -> Symbol:
    """Basis symbol L[alpha, i]."""
    if isinstance(alpha, bool) or isinstance(i, bool):
        raise TypeError("generator indices must be integers")
    if not isinstance(alpha, int) or not isinstance(i, int):
        raise TypeError("generator indices must be integers")
    return ("L", alpha, i)


def is_central(sym: Symbol) -> bool:
    return sym == CENTRAL


def symbol_sort_key(sym: Symbol):
    if sym == CENTRAL:
        return (1,)
    return (0, sym[1], sym[2])


def symbol_str(sym: Symbol) -> str:
    if sym == CENTRAL:
        return "C"
    return f"L[{sym[1]},{sym[2]}]"


def bracket_basis(a: Symbol, b: Symbol) -> "LieElement":
    """Bracket of two basis symbols."""
    if a == CENTRAL or b == CENTRAL:
        return LieElement.zero()
    _, al, i = a
    _, be, j = b
    terms: dict[Symbol, Fraction] = {}
    coeff = (i + 1) * be - (j + 1) * al
    if coeff:
        terms[gen(al + be, i + j)] = Fraction(coeff)
    if al == -be and i + j == -2 and al:
        terms[CENTRAL] = Fraction(al)
    return LieElement(terms)


class LieElement:
    """Finite rational combination of basis symbols."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Symbol, Fraction] | None = None):
        data: dict[Symbol, Fraction] = {}
        if terms:
            for sym, c in terms.items():
                if not isinstance(c, Fraction):
                    c = Fraction(c)
                if c:
                    data[sym] = c
        self.terms = data

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "LieElement":
        return cls()

    @classmethod
    def gen(cls, alpha: int, i: int, coeff=1) -> "LieElement":
        return cls({gen(alpha, i): Fraction(coeff)})

    @classmethod
    def central(cls, coeff=1) -> "LieElement":
        return cls({CENTRAL: Fraction(coeff)})

    # -- vector space operations ---------------------------------------

    def __add__(self, other: "LieElement") -> "LieElement":
        out = dict(self.terms)
        for sym, c in other.terms.items():
            s = out.get(sym, Fraction(0)) + c
            if s:
                out[sym] = s
            else:
                out.pop(sym, None)
        return LieElement(out)

    def __sub__(self, other: "LieElement") -> "LieElement":
        return self + (-other)

    def __neg__(self) -> "LieElement":
        return LieElement({sym: -c for sym, c in self.terms.items()})

    def scale(self, scalar) -> "LieElement":
        scalar = Fraction(scalar)
        if not scalar:
            return LieElement()
        return LieElement({sym: scalar * c for sym, c in self.terms.items()})

    def __mul__(self, scalar):
        if isinstance(scalar, (int, Fraction)):
            return self.scale(scalar)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, LieElement) and self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __getitem__(self, sym: Symbol) -> Fraction:
        return self.terms.get(sym, Fraction(0))

    def coefficient(self, sym: Symbol) -> Fraction:
        return self.terms.get(sym, Fraction(0))

    # -- structure -----------------------------------------------------

    def bracket(self, other: "LieElement") -> "LieElement":
        """Bilinear extension of the basis bracket."""
        out = LieElement.zero()
        for sa, ca in self.terms.items():
            for sb, cb in other.terms.items():
                piece = bracket_basis(sa, sb)
                if piece:
                    out = out + piece.scale(ca * cb)
        return out

    def degree_decompose(self) -> dict[int, "LieElement"]:
        """Split into degree-homogeneous components.

        The component of degree alpha collects all L[alpha, *] terms; the
        central symbol lives in degree 0.  Recombining the components gives
        back the element exactly.
        """
        out: dict[int, dict[Symbol, Fraction]] = {}
        for sym, c in self.terms.items():
            deg = 0 if sym == CENTRAL else sym[1]
            out.setdefault(deg, {})[sym] = c
        return {deg: LieElement(terms) for deg, terms in sorted(out.items())}

    def degrees(self) -> set[int]:
        return {0 if sym == CENTRAL else sym[1] for sym in self.terms}

    def is_homogeneous(self, degree: int) -> bool:
        return all((0 if sym == CENTRAL else sym[1]) == degree for sym in self.terms)

    def support_bound(self) -> int:
        """Max of |alpha|, |i| over generator terms (0 if none)."""
        bound = 0
        for sym in self.terms:
            if sym != CENTRAL:
                bound = max(bound, abs(sym[1]), abs(sym[2]))
        return bound

    # -- rendering -----------------------------------------------------

    def render(self) -> str:
        """Canonical text form: terms in symbol order, coefficients explicit.

        Examples: '0', '1 C', '-2 L[0,0] + 1/3 C', '1 L[1,0] - 2 L[2,3]'.
        The output re-parses to an equal element under the expression grammar.
        """
        if not self.terms:
            return "0"
        pieces = []
        for sym in sorted(self.terms, key=symbol_sort_key):
            c = self.terms[sym]
            body = f"{rational_str(abs(c))} {symbol_str(sym)}"
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f" + {body}" if c > 0 else f" - {body}")
        return "".join(pieces)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"<LieElement {self.render()}>"


def bracket(x: LieElement, y: LieElement) -> LieElement:
    return x.bracket(y)


def lie_sum(elements: Iterable[LieElement]) -> LieElement:
    out = LieElement.zero()
    for e in elements:
        out = out + e
    return out
