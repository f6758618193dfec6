"""Sparse Laurent polynomials in one variable t with exact rational coefficients.

A Laurent polynomial is stored as a dict {exponent: coefficient} holding only
nonzero Fraction values, so structural equality of the dicts is mathematical
equality.  Exponents are arbitrary (possibly negative) Python ints.  All
operations are exact; there is no floating-point path.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterator, Mapping


def _coerce(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


class Laurent:
    """Immutable-by-convention Laurent polynomial over the rationals."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[int, Fraction] | None = None):
        data = {}
        if coeffs:
            for e, c in coeffs.items():
                c = _coerce(c)
                if c:
                    data[int(e)] = c
        self.coeffs = data

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "Laurent":
        return cls()

    @classmethod
    def one(cls) -> "Laurent":
        return cls({0: Fraction(1)})

    @classmethod
    def t(cls, exponent: int = 1) -> "Laurent":
        return cls({exponent: Fraction(1)})

    @classmethod
    def from_list(cls, ascending, offset: int = 0) -> "Laurent":
        """Polynomial from coefficients [a_0, a_1, ...] of t^offset, t^(offset+1), ..."""
        return cls({offset + k: _coerce(a) for k, a in enumerate(ascending)})

    # -- ring operations ----------------------------------------------

    def __add__(self, other: "Laurent") -> "Laurent":
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            s = out.get(e, Fraction(0)) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Laurent(out)

    def __sub__(self, other: "Laurent") -> "Laurent":
        return self + (-other)

    def __neg__(self) -> "Laurent":
        return Laurent({e: -c for e, c in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        out: dict[int, Fraction] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                s = out.get(e, Fraction(0)) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return Laurent(out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def scale(self, scalar) -> "Laurent":
        scalar = _coerce(scalar)
        if not scalar:
            return Laurent()
        return Laurent({e: scalar * c for e, c in self.coeffs.items()})

    def shift(self, k: int) -> "Laurent":
        """Multiply by t^k."""
        return Laurent({e + k: c for e, c in self.coeffs.items()})

    def derivative(self) -> "Laurent":
        """d/dt; the exponent -1 never receives a term from exponent 0."""
        return Laurent({e - 1: e * c for e, c in self.coeffs.items() if e})

    # -- queries ------------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, Laurent) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __getitem__(self, exponent: int) -> Fraction:
        return self.coeffs.get(exponent, Fraction(0))

    def residue(self) -> Fraction:
        """Coefficient of t^-1."""
        return self.coeffs.get(-1, Fraction(0))

    def support(self) -> tuple[int, int] | None:
        """(min exponent, max exponent), or None for the zero polynomial."""
        if not self.coeffs:
            return None
        return min(self.coeffs), max(self.coeffs)

    def degree(self) -> int:
        """Largest exponent; raises on zero."""
        if not self.coeffs:
            raise ValueError("the zero polynomial has no degree")
        return max(self.coeffs)

    def is_polynomial(self) -> bool:
        return all(e >= 0 for e in self.coeffs)

    def items(self) -> Iterator[tuple[int, Fraction]]:
        return iter(sorted(self.coeffs.items()))

    def monic(self) -> "Laurent":
        if not self.coeffs:
            return self
        return self.scale(1 / self.coeffs[max(self.coeffs)])

    # -- rendering ----------------------------------------------------

    def render(self) -> str:
        """Descending-exponent text form, e.g. 't^2 - 4t + 4' or 't^-1'."""
        if not self.coeffs:
            return "0"
        pieces = []
        for e in sorted(self.coeffs, reverse=True):
            c = self.coeffs[e]
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "t" if e == 1 else f"t^{e}"
                body = var if mag == 1 else f"{mag}{var}"
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f" + {body}" if c > 0 else f" - {body}")
        return "".join(pieces)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"Laurent({self.coeffs!r})"


def rational_str(q: Fraction) -> str:
    """Exact decimal-free rendering: '7', '-7', '2/3'."""
    q = _coerce(q)
    return str(q)


_RATIONAL_RE = re.compile(r"^[+-]?\d+(/[1-9]\d*)?$")


def parse_rational(text) -> Fraction:
    """Accept ints, or strings 'p' / 'p/q'; never floats or decimal points."""
    if isinstance(text, bool):
        raise ValueError("booleans are not rationals")
    if isinstance(text, int):
        return Fraction(text)
    if isinstance(text, Fraction):
        return text
    if isinstance(text, str):
        stripped = text.strip()
        if _RATIONAL_RE.match(stripped):
            return Fraction(stripped)
        raise ValueError(f"malformed rational {text!r} (expected 'p' or 'p/q')")
    raise ValueError(f"malformed rational {text!r} (floats are not accepted)")
