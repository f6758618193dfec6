"""Randomized cross-checks between independent computation paths.

Each scan draws seeded samples, evaluates a law through two routes that
share no arithmetic (basis bracket vs Laurent realization, module action vs
closed-form rows, witness search vs singular solve vs series recurrences),
and reports PASS or the first counterexample in canonical order.  Scans are
deterministic functions of their SampleConfig; zero trials pass vacuously.

The corrupted bracket fixture drops the degree-pairing condition from the
central term, keeping alpha * delta(i+j, -2) * C.  That is precisely the
corruption the scan is designed to catch: dropping the whole central term,
or only the index condition, still satisfies the Jacobi identity (either
way the remaining central part is a genuine 2-cocycle), while the fixture
breaks antisymmetry and Jacobi exactly on samples whose indices sum to -2.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .algebra import CENTRAL, LieElement, Symbol, bracket_basis, gen, symbol_str
from .criterion import (
    WitnessPolynomial,
    annihilates_window,
    common_recurrence,
    condition_row,
    reducibility_witness,
    sigma_series,
)
from .laurent import rational_str
from .realization import bracket_realized, from_realization, to_realization
from .verma import is_singular, lowering_vector_from_laurent, singular_at_minus_one
from .weights import Recurrence, Weight


@dataclass(frozen=True)
class SampleConfig:
    seed: int = 0
    trials: int = 200
    degree_bound: int = 10
    index_bound: int = 10
    window_bound: int = 10

    def to_json_dict(self) -> dict:
        return {
            "seed": self.seed,
            "trials": self.trials,
            "degree_bound": self.degree_bound,
            "index_bound": self.index_bound,
            "window_bound": self.window_bound,
        }


@dataclass
class ScanReport:
    name: str
    config: SampleConfig
    checked: int
    passed: bool
    counterexample: str | None = None
    note: str = ""
    witness: tuple | None = None  # the offending symbols, when one exists

    def render(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = f"{self.name}: {status} ({self.checked} checks, seed {self.config.seed})"
        if self.counterexample:
            line += f"\n  counterexample: {self.counterexample}"
        if self.note:
            line += f"\n  note: {self.note}"
        return line

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "config": self.config.to_json_dict(),
            "checked": self.checked,
            "passed": self.passed,
            "counterexample": self.counterexample,
            "note": self.note,
        }


def corrupted_bracket_basis(a: Symbol, b: Symbol) -> LieElement:
    """Test fixture: central term alpha * delta(i+j, -2) * C, degree pairing dropped."""
    if a == CENTRAL or b == CENTRAL:
        return LieElement.zero()
    _, al, i = a
    _, be, j = b
    terms = {}
    coeff = (i + 1) * be - (j + 1) * al
    if coeff:
        terms[gen(al + be, i + j)] = Fraction(coeff)
    if i + j == -2 and al:
        terms[CENTRAL] = Fraction(al)
    return LieElement(terms)


def _random_symbol(rng: random.Random, cfg: SampleConfig) -> Symbol:
    return gen(
        rng.randint(-cfg.degree_bound, cfg.degree_bound),
        rng.randint(-cfg.index_bound, cfg.index_bound),
    )


def _triple_str(syms: Sequence[Symbol]) -> str:
    return "(" + ", ".join(symbol_str(s) for s in syms) + ")"


def jacobi_scan(
    cfg: SampleConfig,
    bracket_fn: Callable[[Symbol, Symbol], LieElement] = bracket_basis,
) -> ScanReport:
    """Antisymmetry and Jacobi on seeded basis triples.

    Every fourth trial is steered onto the central wall (degrees summing to
    zero, indices summing to -2) so corruptions of the central term cannot
    hide between sparse random hits.  Counterexamples are collected over all
    trials and the smallest one in canonical order is reported.
    """
    rng = random.Random(cfg.seed)
    counterexamples = []
    checked = 0
    for trial in range(cfg.trials):
        a = _random_symbol(rng, cfg)
        b = _random_symbol(rng, cfg)
        if trial % 4 == 3:
            # aim at the central wall
            al = -(a[1] + b[1])
            k = -2 - (a[2] + b[2])
            if abs(al) > cfg.degree_bound or abs(k) > cfg.index_bound:
                c = _random_symbol(rng, cfg)
            else:
                c = gen(al, k)
        else:
            c = _random_symbol(rng, cfg)
        checked += 1
        anti = _bracket_elements(bracket_fn, LieElement({a: Fraction(1)}), LieElement({b: Fraction(1)})) + _bracket_elements(
            bracket_fn, LieElement({b: Fraction(1)}), LieElement({a: Fraction(1)})
        )
        if anti:
            counterexamples.append((sorted([a, b, c]), "antisymmetry", (a, b)))
            continue
        jac = LieElement.zero()
        for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
            inner = _bracket_elements(
                bracket_fn, LieElement({x: Fraction(1)}), LieElement({y: Fraction(1)})
            )
            jac = jac + _bracket_elements(bracket_fn, inner, LieElement({z: Fraction(1)}))
        if jac:
            counterexamples.append((sorted([a, b, c]), "jacobi", (a, b, c)))
    if counterexamples:
        counterexamples.sort(key=lambda t: (t[0], t[1]))
        key, law, witness = counterexamples[0]
        return ScanReport(
            "jacobi_scan",
            cfg,
            checked,
            False,
            counterexample=f"{law} fails at {_triple_str(witness)}",
            witness=tuple(witness),
        )
    return ScanReport("jacobi_scan", cfg, checked, True)


def _bracket_elements(bracket_fn, x: LieElement, y: LieElement) -> LieElement:
    out = LieElement.zero()
    for sa, ca in x.terms.items():
        for sb, cb in y.terms.items():
            piece = bracket_fn(sa, sb)
            if piece:
                out = out + piece.scale(ca * cb)
    return out


def realization_scan(cfg: SampleConfig) -> ScanReport:
    """Bracket transported through the Laurent dictionary matches exactly.

    Every twentieth trial pins the residue pair (degrees cancelling, indices
    summing to -2) so the central coordinate is exercised; each trial also
    round-trips a random element through the dictionary.
    """
    rng = random.Random(cfg.seed)
    checked = 0
    for trial in range(cfg.trials):
        a = _random_symbol(rng, cfg)
        if trial % 20 == 19:
            al = a[1] if a[1] else 1
            a = gen(al, a[2])
            b = gen(-al, -2 - a[2])
            if abs(b[2]) > cfg.index_bound:
                b = gen(-al, rng.randint(-cfg.index_bound, cfg.index_bound))
        else:
            b = _random_symbol(rng, cfg)
        checked += 1
        ea = LieElement({a: Fraction(1)})
        eb = LieElement({b: Fraction(1)})
        lhs = to_realization(ea.bracket(eb))
        rhs = bracket_realized(to_realization(ea), to_realization(eb))
        if lhs != rhs:
            return ScanReport(
                "realization_scan",
                cfg,
                checked,
                False,
                counterexample=(
                    f"bracket mismatch at ({symbol_str(a)}, {symbol_str(b)}): "
                    f"basis gives {lhs.render()}, realization gives {rhs.render()}"
                ),
            )
        x = LieElement(
            {
                _random_symbol(rng, cfg): Fraction(rng.randint(-6, 6), rng.randint(1, 4))
                for _ in range(rng.randint(0, 3))
            }
        ) + LieElement.central(Fraction(rng.randint(-3, 3)))
        if from_realization(to_realization(x)) != x:
            return ScanReport(
                "realization_scan",
                cfg,
                checked,
                False,
                counterexample=f"round trip breaks on {x.render()}",
            )
    return ScanReport("realization_scan", cfg, checked, True)


def row_oracle(weight: Weight, f, k_range: tuple[int, int]) -> ScanReport:
    """Closed-form rows against the module action, sign convention reconciled.

    For each k the scalar of x t^k = L[1, k-1] acting on x^-1 f(t) . v must
    equal -condition_row(weight, f, k), and the image must be a multiple of
    the highest-weight vector.
    """
    ff = f.as_laurent() if isinstance(f, WitnessPolynomial) else f
    candidate = lowering_vector_from_laurent(ff)
    cfg = SampleConfig(seed=0, trials=0)
    checked = 0
    for k in range(int(k_range[0]), int(k_range[1]) + 1):
        checked += 1
        result = _act_on_candidate(weight, k, candidate)
        expected = -condition_row(weight, ff, k)
        if set(result.terms) - {()}:
            return ScanReport(
                "row_oracle", cfg, checked, False,
                counterexample=f"k={k}: image is not scalar: {result.render()}",
            )
        got = result.vacuum_coefficient()
        if got != expected:
            return ScanReport(
                "row_oracle", cfg, checked, False,
                counterexample=(
                    f"k={k}: module action gives {rational_str(got)}, "
                    f"rows give {rational_str(expected)} (after sign reconciliation)"
                ),
            )
    return ScanReport("row_oracle", cfg, checked, True)


def _act_on_candidate(weight: Weight, k: int, candidate):
    from .verma import act

    return act(LieElement.gen(1, k - 1), candidate, weight)


def _random_pbw_vector(rng: random.Random, cfg: SampleConfig):
    from .verma import ModuleVector

    bound = min(cfg.index_bound, 6)
    out = ModuleVector.zero()
    for _ in range(rng.randint(1, 2)):
        length = rng.randint(0, 4)
        factors = sorted(
            (rng.randint(1, bound), rng.randint(-bound, bound)) for _ in range(length)
        )
        coeff = Fraction(rng.randint(-6, 6), rng.randint(1, 4))
        if coeff:
            out = out + ModuleVector.monomial(factors, coeff)
    return out


def representation_scan(cfg: SampleConfig, weights: Sequence[Weight] = ()) -> ScanReport:
    """act(x) act(y) - act(y) act(x) = act([x,y]) on seeded PBW vectors.

    The master test of the straightening engine: the left side resolves
    commutators through the module recursion, the right side through a single
    bracket, and the two must agree exactly, central charge included.
    """
    from .verma import act

    rng = random.Random(cfg.seed)
    pool = list(weights) or [
        Weight(Fraction(3, 2), {1: Fraction(5)}),
        Weight(0, {}, Recurrence([-Fraction(2), Fraction(1)], {0: Fraction(1)})),
        Weight(Fraction(-1), {-2: Fraction(1, 3), 0: Fraction(2)}),
    ]
    bound = min(cfg.index_bound, 6)
    checked = 0
    for trial in range(cfg.trials):
        w = pool[trial % len(pool)]
        x = gen(rng.randint(-bound, bound), rng.randint(-bound, bound))
        y = gen(rng.randint(-bound, bound), rng.randint(-bound, bound))
        v = _random_pbw_vector(rng, cfg)
        checked += 1
        ex = LieElement({x: Fraction(1)})
        ey = LieElement({y: Fraction(1)})
        lhs = act(ex, act(ey, v, w), w) - act(ey, act(ex, v, w), w)
        rhs = act(ex.bracket(ey), v, w)
        if lhs != rhs:
            return ScanReport(
                "representation_scan",
                cfg,
                checked,
                False,
                counterexample=(
                    f"commutator mismatch for x={symbol_str(x)}, y={symbol_str(y)} "
                    f"on {v.render()}"
                ),
                witness=(x, y),
            )
    return ScanReport("representation_scan", cfg, checked, True)


def equivalence_scan(cfg: SampleConfig) -> ScanReport:
    """Witness search, singular solve, and series recurrences must agree.

    Samples geometric weights (ratios 2, 3, 1/2, -1) and seeded finite-support
    weights.  For each: the witness exists iff the singular space over the
    window is nonempty iff the witness recurrence kills every sigma window
    (existence side) or no common annihilator exists at the searched orders
    (absence side).  The singular solve must also certify x^-1 f(t) . v
    singular whenever f is the witness.
    """
    rng = random.Random(cfg.seed)
    m_max = max(2, min(cfg.degree_bound, 8))
    n_terms = max(24, 2 * m_max + 8)
    j_set = range(-2, 3)
    window = (-cfg.window_bound, cfg.window_bound)
    weights = [_geometric(r) for r in (2, 3, Fraction(1, 2), -1)]
    weights.append(Weight(0))
    weights.append(Weight(1))
    while len(weights) < max(cfg.trials, len(weights)):
        weights.append(_random_finite_weight(rng))
    checked = 0
    for w in weights:
        checked += 1
        witness = reducibility_witness(w, m_max)
        singular = singular_at_minus_one(w, window)
        windows = [sigma_series(w, j, n_terms) for j in j_set]
        if witness is not None:
            if not singular:
                return _eq_fail(cfg, checked, w, "witness exists but singular space is empty")
            if not all(annihilates_window(witness, win) for win in windows):
                return _eq_fail(
                    cfg, checked, w, "witness recurrence misses a sigma window"
                )
            cert = is_singular(lowering_vector_from_laurent(witness.as_laurent()), w)
            if not cert.is_singular:
                return _eq_fail(
                    cfg, checked, w,
                    f"witness vector fails singularity at k={cert.failure_k}",
                )
        else:
            if singular:
                return _eq_fail(
                    cfg, checked, w, "no witness but the singular space is nonempty"
                )
            if common_recurrence(windows, m_max) is not None:
                return _eq_fail(
                    cfg, checked, w, "no witness but a common series annihilator exists"
                )
    return ScanReport("equivalence_scan", cfg, checked, True)


def _eq_fail(cfg, checked, weight, message) -> ScanReport:
    return ScanReport(
        "equivalence_scan",
        cfg,
        checked,
        False,
        counterexample=f"{message} (weight {weight!r})",
    )


def _geometric(ratio) -> Weight:
    r = Fraction(ratio)
    return Weight(0, {}, Recurrence([-r, Fraction(1)], {0: Fraction(1)}))


def _random_finite_weight(rng: random.Random) -> Weight:
    # Supports start at 0 so every nonzero label is visible to the series
    # windows (a label at index m enters window j at position m + j + 1) and
    # carries a nonzero multiplier m + 1; detector agreement is then a
    # provable guarantee, not a sampling accident.
    start = rng.randint(0, 4)
    width = rng.randint(1, 8)
    labels = {}
    for i in range(start, start + width):
        if rng.random() < 0.7:
            labels[i] = Fraction(rng.randint(-20, 20), rng.randint(1, 20))
    central = Fraction(rng.randint(-5, 5)) if rng.random() < 0.5 else Fraction(0)
    return Weight(central, labels)


def run_all_scans(cfg: SampleConfig) -> list[ScanReport]:
    """The selftest battery: all scans plus the corrupted fixture must fail."""
    reports = [
        jacobi_scan(cfg),
        realization_scan(cfg),
        representation_scan(
            SampleConfig(
                seed=cfg.seed,
                trials=min(cfg.trials, 60),
                degree_bound=cfg.degree_bound,
                index_bound=min(cfg.index_bound, 6),
                window_bound=cfg.window_bound,
            )
        ),
        equivalence_scan(
            SampleConfig(
                seed=cfg.seed,
                trials=min(cfg.trials, 40),
                degree_bound=min(cfg.degree_bound, 8),
                index_bound=cfg.index_bound,
                window_bound=cfg.window_bound,
            )
        ),
    ]
    corrupted = jacobi_scan(cfg, bracket_fn=corrupted_bracket_basis)
    reports.append(
        ScanReport(
            "corrupted_fixture_detected",
            cfg,
            corrupted.checked,
            not corrupted.passed,
            counterexample=None if not corrupted.passed else "corruption went unnoticed",
            note=corrupted.counterexample or "",
        )
    )
    return reports
