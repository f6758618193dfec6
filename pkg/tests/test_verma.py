"""Module action by straightening, singular vectors, PBW combinatorics."""

import random
from fractions import Fraction

import pytest

from blockalg.algebra import CENTRAL, LieElement, gen
from blockalg.laurent import Laurent
from blockalg.verma import (
    ModuleVector,
    act,
    act_basis,
    act_word,
    act_word_rewriting,
    certified_k_range,
    enumerate_pbw_monomials,
    is_singular,
    laurent_from_lowering_vector,
    lowering_vector_from_laurent,
    singular_at_minus_one,
)
from blockalg.weights import Recurrence, Weight, geometric_weight

SPIKE = Weight(0, {1: Fraction(5)})
GEO2 = geometric_weight(2)
CHARGED = Weight(Fraction(3, 2), {1: Fraction(5)})


class TestHighestWeightAxioms:
    def test_raising_kills_vacuum(self):
        for k in range(-5, 6):
            assert not act_basis(gen(1, k), (), SPIKE)
            assert not act_basis(gen(3, k), (), SPIKE)

    def test_degree_zero_gives_label(self):
        # L[0,k] . v = Lambda_{k+1} v
        out = act_basis(gen(0, 0), (), SPIKE)
        assert out == ModuleVector.vacuum(Fraction(5))
        assert not act_basis(gen(0, 1), (), SPIKE)

    def test_central_multiplies_charge(self):
        mono = ((1, 0), (2, -1))
        mono = tuple(sorted(mono))
        out = act_basis(CENTRAL, mono, CHARGED)
        assert out == ModuleVector.monomial(mono, Fraction(3, 2))

    def test_lowering_prepends(self):
        out = act(LieElement.gen(-2, 5), ModuleVector.vacuum(), SPIKE)
        assert out == ModuleVector.monomial([(2, 5)], 1)


class TestWorkedActions:
    def test_single_factor_scalar(self):
        # act(L[1,k], L[-1,i] v) = -(k+i+2) Lambda_{k+i+1} v + delta(k+i,-2) c v
        v = ModuleVector.monomial([(1, 0)], 1)
        out = act(LieElement.gen(1, 0), v, SPIKE)
        assert out == ModuleVector.vacuum(Fraction(-10))

    def test_central_delta_in_single_factor(self):
        v = ModuleVector.monomial([(1, -1)], 1)
        out = act(LieElement.gen(1, -1), v, CHARGED)
        # k = i = -1: -(k+i+2) Lambda_0 = 0, delta fires: c v
        assert out == ModuleVector.vacuum(Fraction(3, 2))

    def test_act_word_example(self):
        out = act_word([LieElement.gen(1, 0), LieElement.gen(-1, 0)], SPIKE)
        assert out == ModuleVector.vacuum(Fraction(-10))
        assert out.render() == "-10 v"

    def test_act_word_requires_factors(self):
        with pytest.raises(ValueError):
            act_word([], SPIKE)

    def test_linearity(self):
        x = LieElement.gen(1, 0, 2) + LieElement.gen(0, 0, -1)
        v = ModuleVector.monomial([(1, 0)], 1) + ModuleVector.vacuum(3)
        lhs = act(x, v, SPIKE)
        rhs = (
            act(LieElement.gen(1, 0), v, SPIKE).scale(2)
            - act(LieElement.gen(0, 0), v, SPIKE)
        )
        assert lhs == rhs


class TestGrading:
    def test_action_shifts_degree(self):
        v = ModuleVector.monomial([(1, 0), (2, 1)], 1)  # degree -3
        assert v.degrees() == {-3}
        out = act(LieElement.gen(1, 4), v, GEO2)
        assert out.degrees() <= {-2}
        out2 = act(LieElement.gen(-2, 0), v, GEO2)
        assert out2.degrees() <= {-5}

    def test_overshoot_vanishes(self):
        v = ModuleVector.monomial([(1, 0)], 1)
        assert not act(LieElement.gen(2, 3), v, GEO2)
        assert not act(LieElement.gen(3, -4), v, CHARGED)


class TestRepresentationProperty:
    def test_seeded_commutators(self):
        rng = random.Random(23)
        for trial in range(120):
            w = (SPIKE, GEO2, CHARGED)[trial % 3]
            x = LieElement({gen(rng.randint(-5, 5), rng.randint(-5, 5)): Fraction(1)})
            y = LieElement({gen(rng.randint(-5, 5), rng.randint(-5, 5)): Fraction(1)})
            factors = sorted(
                (rng.randint(1, 4), rng.randint(-5, 5))
                for _ in range(rng.randint(0, 3))
            )
            v = ModuleVector.monomial(factors, Fraction(rng.randint(1, 5)))
            lhs = act(x, act(y, v, w), w) - act(y, act(x, v, w), w)
            rhs = act(x.bracket(y), v, w)
            assert lhs == rhs


class TestConfluence:
    def test_two_straightening_strategies_agree(self):
        rng = random.Random(5)
        for trial in range(60):
            w = (SPIKE, GEO2, CHARGED)[trial % 3]
            word = [
                LieElement.gen(rng.randint(-3, 3), rng.randint(-4, 4))
                for _ in range(rng.randint(1, 4))
            ]
            assert act_word(word, w) == act_word_rewriting(word, w)

    def test_rewriting_matches_on_worked_example(self):
        word = [LieElement.gen(1, 0), LieElement.gen(-1, 0)]
        assert act_word_rewriting(word, SPIKE) == ModuleVector.vacuum(Fraction(-10))


class TestNormalOrder:
    def test_monomial_validation(self):
        with pytest.raises(ValueError):
            ModuleVector.monomial([(2, 0), (1, 0)], 1)  # alpha descending
        with pytest.raises(ValueError):
            ModuleVector.monomial([(1, 3), (1, 0)], 1)  # same alpha, i descending
        with pytest.raises(ValueError):
            ModuleVector.monomial([(0, 1)], 1)  # alpha must be positive

    def test_action_output_is_normal_ordered(self):
        out = act(
            LieElement.gen(-1, 2),
            ModuleVector.monomial([(1, 0), (2, 1)], 1),
            GEO2,
        )
        for mono in out.terms:
            assert list(mono) == sorted(mono)


class TestRender:
    def test_vacuum(self):
        assert ModuleVector.vacuum(1).render() == "1 v"
        assert ModuleVector.vacuum(Fraction(-1, 2)).render() == "-1/2 v"
        assert ModuleVector.zero().render() == "0"

    def test_monomials(self):
        v = ModuleVector.monomial([(1, -1), (2, 3)], Fraction(2, 3))
        assert v.render() == "2/3 * L[-1,-1]L[-2,3] v"

    def test_sorted_by_length_then_factors(self):
        v = ModuleVector.monomial([(1, 1)], 1) + ModuleVector.monomial(
            [(1, -1), (1, 0)], -1
        )
        assert v.render() == "1 * L[-1,1] v - 1 * L[-1,-1]L[-1,0] v"


class TestSingularVectors:
    def test_geometric_basis_vector(self):
        basis = singular_at_minus_one(GEO2, (-1, 1))
        assert len(basis) == 1
        vec = basis[0]
        expected = (
            ModuleVector.monomial([(1, 1)], 1)
            + ModuleVector.monomial([(1, 0)], -4)
            + ModuleVector.monomial([(1, -1)], 4)
        )
        assert vec == expected
        assert laurent_from_lowering_vector(vec) == Laurent.from_list([4, -4, 1])

    def test_zero_weight_everything_singular(self):
        basis = singular_at_minus_one(Weight(0), (-2, 2))
        assert len(basis) == 5

    def test_spike_weight_empty(self):
        assert singular_at_minus_one(Weight(0, {1: 1}), (-10, 10)) == []

    def test_is_singular_true(self):
        f = Laurent.from_list([4, -4, 1])
        cert = is_singular(lowering_vector_from_laurent(f), GEO2)
        assert cert.is_singular
        assert cert.k_min <= -1 and cert.k_max >= 1

    def test_is_singular_false_with_certificate(self):
        w = Weight(0, {1: 1})
        cert = is_singular(ModuleVector.monomial([(1, 0)], 1), w)
        assert not cert
        assert cert.failure_k == 1
        # the failing generator is L[1,0]; the scalar is -2 Lambda_1 = -2
        assert cert.failure_scalar == -2

    def test_is_singular_rejects_wrong_degree(self):
        with pytest.raises(ValueError):
            is_singular(ModuleVector.monomial([(2, 0)], 1), GEO2)
        with pytest.raises(ValueError):
            is_singular(ModuleVector.monomial([(1, 0), (1, 1)], 1), GEO2)

    def test_lowering_vector_roundtrip(self):
        f = Laurent({-2: Fraction(1, 3), 4: Fraction(-7)})
        assert laurent_from_lowering_vector(lowering_vector_from_laurent(f)) == f


class TestCertifiedRange:
    def test_finite_support_hull(self):
        # support [1,1], t-window [0,2]: central block [-2,0], hull [0,2]
        w = Weight(1, {1: 1})
        k_lo, k_hi = certified_k_range(w, 0, 2)
        assert k_lo <= -2 and k_hi >= 2

    def test_recurrent_margin(self):
        plain = certified_k_range(Weight(0, {0: 1}), 0, 2)
        rec = certified_k_range(Weight(0, {0: 1}, Recurrence([-2, 1], {0: 1})), 0, 2)
        assert rec[0] <= plain[0] - 2
        assert rec[1] >= plain[1] + 2


class TestPbwEnumeration:
    def test_degree_one(self):
        monos = enumerate_pbw_monomials(1, (-1, 1))
        assert monos == [((1, -1),), ((1, 0),), ((1, 1),)]

    def test_degree_two_count(self):
        # partitions of 2: [2] with 3 choices; [1,1] with multiset pairs C(3+1,2)=6
        monos = enumerate_pbw_monomials(2, (-1, 1))
        assert len(monos) == 9
        for mono in monos:
            assert sum(a for a, _ in mono) == 2
            assert list(mono) == sorted(mono)

    def test_window_growth_strictly_increasing(self):
        counts = [
            len(enumerate_pbw_monomials(3, (-w, w))) for w in range(1, 5)
        ]
        assert all(b > a for a, b in zip(counts, counts[1:]))
