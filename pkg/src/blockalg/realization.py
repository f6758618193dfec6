"""Concrete realization of the algebra inside x-graded Laurent polynomials.

A generator L[a, i] corresponds to the monomial x^a t^(i+1); the central
element is kept as a separate one-dimensional summand.  The bracket of two
homogeneous pieces x^a f(t) and x^b g(t) is

    x^(a+b) * (b*f'(t)*g(t) - a*f(t)*g'(t))
    + a * delta(a, -b) * Res_t(t^-1 f g) * C,

where Res_t takes the coefficient of t^-1.  Transporting the basis bracket
through this dictionary reproduces the structure constants exactly, which the
self-check module exercises on random pairs; the two code paths share no
arithmetic beyond the Laurent helpers.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping

from .algebra import CENTRAL, LieElement, gen
from .laurent import Laurent, rational_str


class RealizedElement:
    """x-degree graded element: {x-degree: Laurent in t} plus a central coordinate."""

    __slots__ = ("parts", "central")

    def __init__(self, parts: Mapping[int, Laurent] | None = None, central=0):
        data: dict[int, Laurent] = {}
        if parts:
            for d, f in parts.items():
                if f:
                    data[int(d)] = f
        self.parts = data
        self.central = Fraction(central)

    @classmethod
    def zero(cls) -> "RealizedElement":
        return cls()

    @classmethod
    def monomial(cls, x_deg: int, t_exp: int, coeff=1) -> "RealizedElement":
        """coeff * x^x_deg * t^t_exp."""
        return cls({x_deg: Laurent({t_exp: Fraction(coeff)})})

    def __add__(self, other: "RealizedElement") -> "RealizedElement":
        out = dict(self.parts)
        for d, f in other.parts.items():
            s = out.get(d, Laurent.zero()) + f
            if s:
                out[d] = s
            else:
                out.pop(d, None)
        return RealizedElement(out, self.central + other.central)

    def __sub__(self, other: "RealizedElement") -> "RealizedElement":
        return self + other.scale(-1)

    def scale(self, scalar) -> "RealizedElement":
        scalar = Fraction(scalar)
        return RealizedElement(
            {d: f.scale(scalar) for d, f in self.parts.items()},
            scalar * self.central,
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RealizedElement)
            and self.parts == other.parts
            and self.central == other.central
        )

    def __bool__(self) -> bool:
        return bool(self.parts) or bool(self.central)

    def render(self) -> str:
        if not self:
            return "0"
        pieces = []
        for d in sorted(self.parts):
            pieces.append(f"x^{d}*({self.parts[d].render()})")
        if self.central:
            pieces.append(f"{rational_str(self.central)}*C")
        return " + ".join(pieces)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"<RealizedElement {self.render()}>"


def to_realization(x: LieElement) -> RealizedElement:
    """L[a, i] goes to x^a t^(i+1); C goes to the central coordinate."""
    parts: dict[int, Laurent] = {}
    central = Fraction(0)
    for sym, c in x.terms.items():
        if sym == CENTRAL:
            central += c
        else:
            _, a, i = sym
            parts[a] = parts.get(a, Laurent.zero()) + Laurent({i + 1: c})
    return RealizedElement(parts, central)


def from_realization(r: RealizedElement) -> LieElement:
    """Inverse dictionary: x^a t^e back to L[a, e-1]."""
    terms = {}
    for a, f in r.parts.items():
        for e, c in f.coeffs.items():
            terms[gen(a, e - 1)] = c
    out = LieElement(terms)
    if r.central:
        out = out + LieElement.central(r.central)
    return out


def bracket_realized(x: RealizedElement, y: RealizedElement) -> RealizedElement:
    """Bracket in the realization; central coordinates bracket to zero."""
    parts: dict[int, Laurent] = {}
    central = Fraction(0)
    for a, f in x.parts.items():
        df = f.derivative()
        for b, g in y.parts.items():
            piece = df * g * b - f * g.derivative() * a
            if piece:
                s = parts.get(a + b, Laurent.zero()) + piece
                if s:
                    parts[a + b] = s
                else:
                    parts.pop(a + b, None)
            if a == -b and a:
                # Res_t of t^-1 f g, i.e. the t^0 coefficient of f g
                central += a * (f * g).shift(-1).residue()
    return RealizedElement(parts, central)
