"""The dictionary L[a,i] <-> x^a t^(i+1) and bracket transport."""

import random
from fractions import Fraction

from blockalg.algebra import LieElement, gen
from blockalg.laurent import Laurent
from blockalg.realization import (
    RealizedElement,
    bracket_realized,
    from_realization,
    to_realization,
)


class TestDictionary:
    def test_generator_image(self):
        r = to_realization(LieElement.gen(2, -3))
        # x^2 t^-2
        assert r == RealizedElement.monomial(2, -2, 1)

    def test_central_coordinate(self):
        r = to_realization(LieElement.central(Fraction(1, 2)))
        assert r.central == Fraction(1, 2)
        assert not r.parts

    def test_roundtrip_basis(self):
        for a in range(-4, 5):
            for i in range(-4, 5):
                x = LieElement.gen(a, i)
                assert from_realization(to_realization(x)) == x

    def test_roundtrip_general(self):
        x = (
            LieElement.gen(1, 0, Fraction(2, 3))
            + LieElement.gen(-3, 2, -2)
            + LieElement.central(5)
        )
        assert from_realization(to_realization(x)) == x


class TestBracketTransport:
    def test_worked_example(self):
        # [x t^2, x^-1 t] = -3 t^2, i.e. [L[1,1], L[-1,0]] = -3 L[0,1]
        lhs = to_realization(LieElement.gen(1, 1).bracket(LieElement.gen(-1, 0)))
        rhs = bracket_realized(
            to_realization(LieElement.gen(1, 1)),
            to_realization(LieElement.gen(-1, 0)),
        )
        assert lhs == rhs
        assert from_realization(rhs) == LieElement.gen(0, 1, -3)

    def test_residue_hits_central(self):
        # [x t^0, x^-1 t^0]: Res_t(t^-1 * 1 * 1) = 1, so the bracket is C
        x = to_realization(LieElement.gen(1, -1))
        y = to_realization(LieElement.gen(-1, -1))
        out = bracket_realized(x, y)
        assert out.central == 1
        assert from_realization(out) == LieElement.central(1)

    def test_residue_needs_degree_pairing(self):
        # same t-exponents but degrees 2, -1: no central term
        out = bracket_realized(
            to_realization(LieElement.gen(2, -1)),
            to_realization(LieElement.gen(-1, -1)),
        )
        assert out.central == 0

    def test_central_brackets_to_zero(self):
        c = to_realization(LieElement.central(3))
        x = to_realization(LieElement.gen(1, 1))
        assert not bracket_realized(c, x)
        assert not bracket_realized(x, c)

    def test_seeded_transport(self):
        rng = random.Random(11)
        for trial in range(300):
            a = gen(rng.randint(-8, 8), rng.randint(-8, 8))
            if trial % 5 == 4:
                b = gen(-a[1], -2 - a[2])  # central wall
            else:
                b = gen(rng.randint(-8, 8), rng.randint(-8, 8))
            x = LieElement({a: Fraction(1)})
            y = LieElement({b: Fraction(1)})
            assert to_realization(x.bracket(y)) == bracket_realized(
                to_realization(x), to_realization(y)
            )


class TestRealizedArithmetic:
    def test_add_and_scale(self):
        x = RealizedElement.monomial(1, 2, 1)
        y = RealizedElement.monomial(1, 2, -1)
        assert not (x + y)
        assert x.scale(Fraction(3)).parts[1] == Laurent({2: Fraction(3)})

    def test_render(self):
        r = RealizedElement.monomial(2, -1, Fraction(1, 2)) + RealizedElement(
            {}, Fraction(3)
        )
        text = r.render()
        assert "x^2" in text and "C" in text
