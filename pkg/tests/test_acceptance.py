"""Acceptance battery: nine exact-arithmetic criteria, one test (and one
verbose pass/fail line) per criterion.  Tolerances are exact equality
throughout; every frozen value was derived by an independent oracle before
being pinned here.
"""

import json
import random
import time
from fractions import Fraction
from pathlib import Path

from blockalg.cli import main as cli_main
from blockalg.criterion import (
    Report,
    WitnessPolynomial,
    annihilates_window,
    common_recurrence,
    p1_codimension,
    parabolic_chain,
    quasifinite_verdict,
    reducibility_witness,
    sigma_series,
)
from blockalg.gamma_order import (
    EmbeddingOrder,
    LexOrder,
    archimedean_witness,
    b_alpha_sample,
    bracket_rational_degree,
    classify,
    order_verdict,
    rescale_weight,
    surd,
)
from blockalg.oracle import (
    SampleConfig,
    corrupted_bracket_basis,
    jacobi_scan,
    realization_scan,
    representation_scan,
    row_oracle,
)
from blockalg.verma import certified_k_range, singular_at_minus_one
from blockalg.weights import Weight, geometric_weight

DATA = Path(__file__).parent / "data"
GOLDEN = DATA / "golden"

GEOMETRIC_RATIOS = (Fraction(2), Fraction(3), Fraction(1, 2), Fraction(-1))


def _finite_weight(rng: random.Random) -> Weight:
    # supports in [0, 11]: every label is visible to the j in [-2, 2] series
    # windows and carries a nonzero row multiplier, so the three detectors
    # of criterion 4 provably agree (no sampling luck involved)
    start = rng.randint(0, 4)
    width = rng.randint(1, 8)
    labels = {}
    for i in range(start, start + width):
        if rng.random() < 0.7:
            labels[i] = Fraction(rng.randint(-20, 20), rng.randint(1, 20))
    central = Fraction(rng.randint(-5, 5)) if rng.random() < 0.5 else Fraction(0)
    return Weight(central, labels)


def _criterion4_cases():
    cases = [geometric_weight(r) for r in GEOMETRIC_RATIOS]
    cases.append(Weight(0))
    cases.append(Weight(1))
    rng = random.Random(2024)
    while len(cases) < 106:
        cases.append(_finite_weight(rng))
    return cases


def test_criterion_1_algebra_axioms():
    started = time.monotonic()
    report = jacobi_scan(SampleConfig(seed=101, trials=1000, degree_bound=10, index_bound=10))
    assert report.passed, report.counterexample
    assert report.checked == 1000

    corrupted = jacobi_scan(
        SampleConfig(seed=101, trials=1000, degree_bound=10, index_bound=10),
        bracket_fn=corrupted_bracket_basis,
    )
    assert not corrupted.passed
    assert corrupted.witness is not None
    assert sum(sym[2] for sym in corrupted.witness) == -2
    assert time.monotonic() - started <= 10.0


def test_criterion_2_realization_isomorphism():
    started = time.monotonic()
    report = realization_scan(
        SampleConfig(seed=202, trials=1000, degree_bound=10, index_bound=10)
    )
    assert report.passed, report.counterexample
    # every 20th trial is steered onto the residue/central pair: 50 of 1000
    assert report.checked == 1000
    assert time.monotonic() - started <= 10.0


def test_criterion_3_representation_property():
    started = time.monotonic()
    report = representation_scan(SampleConfig(seed=303, trials=500, index_bound=6))
    assert report.passed, report.counterexample
    assert report.checked == 500
    assert time.monotonic() - started <= 30.0


def test_criterion_4_criterion_equivalence():
    for ratio in GEOMETRIC_RATIOS:
        witness = reducibility_witness(geometric_weight(ratio), 8)
        assert witness == WitnessPolynomial([ratio * ratio, -2 * ratio, 1])

    assert reducibility_witness(Weight(0), 8) == WitnessPolynomial([1])
    assert reducibility_witness(Weight(1), 8) is None

    for weight in _criterion4_cases():
        witness = reducibility_witness(weight, 8)
        singular = singular_at_minus_one(weight, (-10, 10))
        windows = [sigma_series(weight, j, 24) for j in range(-2, 3)]
        if witness is not None:
            assert singular, f"witness exists but singular space empty: {weight!r}"
            assert all(annihilates_window(witness, win) for win in windows)
        else:
            assert not singular, f"no witness but singular space nonempty: {weight!r}"
            assert common_recurrence(windows, 8) is None


def test_criterion_5_row_oracle():
    probe = WitnessPolynomial([1, 3, 1])  # fixed non-witness probe
    for weight in _criterion4_cases():
        witness = reducibility_witness(weight, 8)
        for f in filter(None, (witness, probe)):
            k_range = certified_k_range(weight, 0, f.degree)
            report = row_oracle(weight, f, k_range)
            assert report.passed, report.counterexample


def test_criterion_6_parabolic_structure():
    cases = {
        (1,): 0,
        (4, -4, 1): 2,
        (1, 0, 0, 1): 3,
    }
    for coeffs, degree in cases.items():
        f = WitnessPolynomial(coeffs)
        for half in range(degree + 1, degree + 5):
            assert p1_codimension(f, (-half, half)) == degree

    slices = parabolic_chain(WitnessPolynomial([4, -4, 1]).as_laurent(), 5)
    assert [sl.depth for sl in slices] == [1, 2, 3, 4, 5]
    for sl in slices:
        assert any(g for g in sl.generators), f"depth {sl.depth} collapsed"


def test_criterion_7_order_classification():
    rank1 = classify(LexOrder((0,), (1,)))
    assert rank1.kind == "discrete"
    assert rank1.minimal_positive == (1,)

    lex2 = LexOrder((0, 1), (1, 1))
    cls2 = classify(lex2)
    assert cls2.kind == "discrete"
    assert not cls2.archimedean
    # explicit failure witness: no n <= 100 with n*(0,1) > (1,0)
    assert archimedean_witness(lex2, (0, 1), (1, 0), 100) is None

    emb = EmbeddingOrder(2, (surd(1, 0, 2), surd(0, 1, 2)))
    cls_emb = classify(emb)
    assert cls_emb.kind == "dense"
    counts = [len(b_alpha_sample(emb, (1, 0), bound)) for bound in (5, 10, 20)]
    assert counts[0] < counts[1] < counts[2]

    assert order_verdict(lex2).verdict == "DELEGATED"
    assert order_verdict(emb, weight_is_zero=True).verdict == "REDUCIBLE"
    assert order_verdict(emb, weight_is_zero=False).verdict == "IRREDUCIBLE"


def test_criterion_8_rescaling_isomorphism():
    rng = random.Random(808)
    factors = (Fraction(2), Fraction(1, 3), Fraction(-1))
    for trial in range(500):
        a = factors[trial % 3]
        n, m = rng.randint(-10, 10), rng.randint(-10, 10)
        i, j = rng.randint(-10, 10), rng.randint(-10, 10)
        coeff, deg, idx, central = bracket_rational_degree(n * a, i, m * a, j)
        direct_coeff = Fraction((i + 1) * m - (j + 1) * n)
        direct_central = (
            Fraction(n) if (n + m == 0 and i + j == -2 and n) else Fraction(0)
        )
        assert coeff == a * direct_coeff
        assert central == a * direct_central
        assert deg == (n + m) * a and idx == i + j

    for ratio in GEOMETRIC_RATIOS:
        weight = geometric_weight(ratio)
        base = quasifinite_verdict(weight, 8, range(-2, 3), 24)
        for a in factors:
            rescaled = quasifinite_verdict(
                rescale_weight(weight, a), 8, range(-2, 3), 24
            )
            assert rescaled.verdict == base.verdict
            assert rescaled.witness == base.witness


def test_criterion_9_cli_contract(capsys, tmp_path):
    def run(*argv):
        code = cli_main(list(argv))
        out = capsys.readouterr()
        return code, out.out, out.err

    code, out, _ = run("analyze", str(DATA / "geometric2.json"))
    assert code == 0 and out == (GOLDEN / "analyze_geometric2.txt").read_text()

    code, out, _ = run("analyze", str(DATA / "geometric2.json"), "--format", "json")
    data = json.loads(out)
    assert data == json.loads((GOLDEN / "analyze_geometric2.json").read_text())
    assert Report.from_json_dict(data).to_json_dict() == data

    code, out, _ = run("act", str(DATA / "finite_spike.json"), "L[1,0].L[-1,0].v")
    assert code == 0 and out.strip() == "-10 v"

    code, out, _ = run("series", str(DATA / "central1.json"), "--j", "2", "--terms", "3")
    assert code == 0 and out.strip() == "[0, 0, -1, 0]"

    code, out, _ = run("order", str(DATA / "emb_sqrt2.json"))
    assert code == 0 and out == (GOLDEN / "order_emb_sqrt2.txt").read_text()

    assert run("analyze", str(tmp_path / "missing.json"))[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text('{"central_charge": "1.5"}')
    assert run("analyze", str(bad))[0] == 2
    assert run("analyze", str(DATA / "geometric2.json"), "--window", "3")[0] == 3
