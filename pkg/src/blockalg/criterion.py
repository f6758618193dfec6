"""Reducibility and quasifiniteness analysis for the highest-weight module.

Everything revolves around the condition rows of a degree -1 candidate
x^-1 f(t) . v with f = sum_j a_j t^j:

    s_k = sum_j a_j (k+j) Lambda_{k+j-1} - a_{-k} c,   k in Z.

The scalar by which x t^k acts on the candidate is exactly -s_k (checked
against the module action by the self-check module), so the module is
reducible precisely when some nonzero polynomial f kills every row.  Rows
are only examined over the certified window of the weight (see
verma.certified_k_range), which proves vanishing for all k.

The series side: the exponential generating windows

    delta_j:  b_i = Lambda_{i+j},
    sigma_j:  b_i = (i-j) Lambda_{i-j-1} - c * delta(i, j),

where the central correction appears only for j >= 0; for j < 0 the 1/j!
factor of the defining expansion is taken to be 0 and the term is dropped.
The closed sigma form is what a direct expansion of
z*delta_(-j) - j*delta_(-j-1) - (c/j!) z^j gives in the exponential basis;
the test suite re-derives it symbolically.  A witness f annihilates the
sigma windows through its coefficient recurrence sum_s a_s b_(i+s) = 0,
uniformly in j; recurrence detection searches for minimal-order annihilators
with nonzero trailing coefficient, the convention matching the witness
normalization (a shift-only annihilator like t^2 certifies nothing two-sided).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import WindowInsufficientError, WindowTooShortError
from .laurent import Laurent, parse_rational, rational_str
from .linalg import nullspace, rank
from .verma import certified_k_range
from .weights import Weight

NEGATIVE_J_CONVENTION = "power term dropped for j < 0 (1/j! taken as 0)"
ROW_SIGN_CONVENTION = "module scalar of x t^k on x^-1 f(t) . v equals minus the condition row s_k"


class WitnessPolynomial:
    """Polynomial witness f with a_m != 0, normalized monic on construction."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Sequence):
        coeffs = [parse_rational(c) for c in coefficients]
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        if not coeffs:
            raise ValueError("the zero polynomial is not a witness")
        lead = coeffs[-1]
        self.coefficients = tuple(c / lead for c in coeffs)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def coefficient(self, j: int) -> Fraction:
        if 0 <= j < len(self.coefficients):
            return self.coefficients[j]
        return Fraction(0)

    def as_laurent(self) -> Laurent:
        return Laurent.from_list(self.coefficients)

    def render(self) -> str:
        return self.as_laurent().render()

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, WitnessPolynomial)
            and self.coefficients == other.coefficients
        )

    def __hash__(self):
        return hash(self.coefficients)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"<WitnessPolynomial {self.render()}>"

    def to_json_dict(self) -> dict:
        return {
            "degree": self.degree,
            "coefficients": [rational_str(c) for c in self.coefficients],
            "text": self.render(),
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "WitnessPolynomial":
        return cls(data["coefficients"])


def _candidate_items(f) -> list[tuple[int, Fraction]]:
    if isinstance(f, WitnessPolynomial):
        return [(j, c) for j, c in enumerate(f.coefficients) if c]
    if isinstance(f, Laurent):
        return list(f.items())
    raise TypeError("expected WitnessPolynomial or Laurent")


def condition_row(weight: Weight, f, k: int) -> Fraction:
    """s_k = sum_j a_j (k+j) Lambda_{k+j-1} - a_{-k} c."""
    total = Fraction(0)
    a_minus_k = Fraction(0)
    for j, a in _candidate_items(f):
        total += a * (k + j) * weight.label(k + j - 1)
        if j == -k:
            a_minus_k = a
    return total - a_minus_k * weight.central_charge


def reducibility_witness(
    weight: Weight, m_max: int, max_rows: int | None = None
) -> WitnessPolynomial | None:
    """Minimal-degree monic polynomial killing every condition row, if any.

    Degrees are searched from 0 to m_max; rows run over the certified window
    for each degree, so a returned witness kills s_k for every integer k.
    Among solutions at the minimal degree, a vector with nonzero constant
    term is preferred (a trailing zero would shift down to a lower degree);
    the reduced-echelon parametrization makes the choice canonical.
    """
    if m_max < 0:
        raise ValueError("m_max must be >= 0")
    for m in range(m_max + 1):
        k_lo, k_hi = certified_k_range(weight, 0, m)
        if max_rows is not None and (k_hi - k_lo + 1) > max_rows:
            raise WindowInsufficientError(
                f"degree {m} needs rows [{k_lo}, {k_hi}] "
                f"({k_hi - k_lo + 1} rows), cap is {max_rows}"
            )
        rows = []
        for k in range(k_lo, k_hi + 1):
            row = []
            for j in range(m + 1):
                coeff = (k + j) * weight.label(k + j - 1)
                if j == -k:
                    coeff -= weight.central_charge
                row.append(coeff)
            rows.append(row)
        basis = nullspace(rows, m + 1)
        if basis:
            vec = next((b for b in basis if b[0]), None)
            if vec is None:
                # defensive: strip trailing zeros by a t-shift, still a witness
                vec = basis[0]
                shift = next(i for i, c in enumerate(vec) if c)
                vec = vec[shift:]
            return WitnessPolynomial(vec)
    return None


# -- series windows -------------------------------------------------------


@dataclass(frozen=True)
class SeriesWindow:
    """Exponential-basis coefficients b_0..b_n of a generating series."""

    j: int
    coefficients: tuple[Fraction, ...]

    def render(self) -> str:
        return "[" + ", ".join(rational_str(c) for c in self.coefficients) + "]"


def delta_series(weight: Weight, j: int, n: int) -> SeriesWindow:
    """b_i = Lambda_{i+j} for i = 0..n."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return SeriesWindow(j, tuple(weight.label(i + j) for i in range(n + 1)))


def sigma_series(weight: Weight, j: int, n: int) -> SeriesWindow:
    """b_i = (i-j) Lambda_{i-j-1} - c delta(i,j); central term only for j >= 0."""
    if n < 0:
        raise ValueError("n must be >= 0")
    coeffs = []
    for i in range(n + 1):
        b = (i - j) * weight.label(i - j - 1)
        if j >= 0 and i == j:
            b -= weight.central_charge
        coeffs.append(b)
    return SeriesWindow(j, tuple(coeffs))


# -- recurrence detection ---------------------------------------------------


@dataclass(frozen=True)
class RecurrenceCertificate:
    """Monic annihilator with nonzero trailing coefficient, plus the rows checked."""

    char_poly: tuple[Fraction, ...]
    verified_rows: tuple[int, int]

    @property
    def order(self) -> int:
        return len(self.char_poly) - 1

    def render(self) -> str:
        return Laurent.from_list(self.char_poly).render()

    def to_json_dict(self) -> dict:
        return {
            "order": self.order,
            "char_poly": [rational_str(c) for c in self.char_poly],
            "verified_rows": list(self.verified_rows),
            "text": self.render(),
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "RecurrenceCertificate":
        return cls(
            tuple(parse_rational(c) for c in data["char_poly"]),
            tuple(data["verified_rows"]),
        )


def _annihilator_rows(windows: Sequence[Sequence[Fraction]], order: int):
    rows = []
    for window in windows:
        for i in range(len(window) - order):
            rows.append([window[i + s] for s in range(order + 1)])
    return rows


def _pick_annihilator(basis) -> tuple[Fraction, ...] | None:
    vec = next((b for b in basis if b[0]), None)
    if vec is None:
        return None
    deg = max(i for i, c in enumerate(vec) if c)
    lead = vec[deg]
    return tuple(c / lead for c in vec[: deg + 1])


def detect_recurrence(
    window: Sequence[Fraction], max_order: int
) -> RecurrenceCertificate | None:
    """Minimal-order annihilator sum_s x_s b_(i+s) = 0 with x_0 != 0.

    Requires len(window) >= 2 * max_order so that even the largest order is
    checked against at least as many rows as unknowns.
    """
    if max_order < 0:
        raise ValueError("max_order must be >= 0")
    if len(window) < 2 * max_order:
        raise WindowTooShortError(
            f"window of {len(window)} terms cannot support order {max_order} "
            f"(needs at least {2 * max_order})"
        )
    coerced = tuple(parse_rational(b) for b in window)
    return _detect_common((coerced,), max_order, len(coerced))


def common_recurrence(
    windows: Sequence[SeriesWindow], max_order: int
) -> RecurrenceCertificate | None:
    """Minimal-order annihilator (x_0 != 0) valid for every window at once."""
    if not windows:
        return None
    shortest = min(len(w.coefficients) for w in windows)
    if shortest < 2 * max_order:
        raise WindowTooShortError(
            f"shortest window has {shortest} terms, order {max_order} needs {2 * max_order}"
        )
    return _detect_common(
        tuple(w.coefficients for w in windows), max_order, shortest
    )


def _detect_common(
    windows: tuple[tuple[Fraction, ...], ...], max_order: int, shortest: int
) -> RecurrenceCertificate | None:
    for order in range(max_order + 1):
        rows = _annihilator_rows(windows, order)
        basis = nullspace(rows, order + 1)
        poly = _pick_annihilator(basis) if basis else None
        if poly is not None:
            return RecurrenceCertificate(poly, (0, shortest - 1 - order))
    return None


def annihilates_window(f: WitnessPolynomial, window: SeriesWindow) -> bool:
    """Does f's coefficient recurrence kill the window: sum_s a_s b_(i+s) = 0."""
    b = window.coefficients
    m = f.degree
    if len(b) <= m:
        raise WindowTooShortError(
            f"window of {len(b)} terms is shorter than the witness degree {m}"
        )
    return all(
        sum(f.coefficients[s] * b[i + s] for s in range(m + 1)) == 0
        for i in range(len(b) - m)
    )


# -- the verdict ------------------------------------------------------------


@dataclass
class SeriesAnalysis:
    j: int
    coefficients: tuple[Fraction, ...]
    recurrence: RecurrenceCertificate | None
    witness_annihilates: bool | None

    def to_json_dict(self) -> dict:
        return {
            "j": self.j,
            "coefficients": [rational_str(c) for c in self.coefficients],
            "recurrence": self.recurrence.to_json_dict() if self.recurrence else None,
            "witness_annihilates": self.witness_annihilates,
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "SeriesAnalysis":
        return cls(
            j=int(data["j"]),
            coefficients=tuple(parse_rational(c) for c in data["coefficients"]),
            recurrence=(
                RecurrenceCertificate.from_json_dict(data["recurrence"])
                if data.get("recurrence")
                else None
            ),
            witness_annihilates=data.get("witness_annihilates"),
        )


@dataclass
class Report:
    """Full analysis record; text and JSON renderings carry identical values."""

    verdict: str
    max_degree: int
    witness: WitnessPolynomial | None
    certified_k_range: tuple[int, int]
    series: list[SeriesAnalysis]
    witness_annihilates_all: bool | None
    common_recurrence: RecurrenceCertificate | None
    conventions: dict = field(
        default_factory=lambda: {
            "negative_j": NEGATIVE_J_CONVENTION,
            "row_sign": ROW_SIGN_CONVENTION,
        }
    )

    def to_json_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "max_degree": self.max_degree,
            "witness": self.witness.to_json_dict() if self.witness else None,
            "certified_k_range": list(self.certified_k_range),
            "series": [s.to_json_dict() for s in self.series],
            "witness_annihilates_all": self.witness_annihilates_all,
            "common_recurrence": (
                self.common_recurrence.to_json_dict() if self.common_recurrence else None
            ),
            "conventions": dict(self.conventions),
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "Report":
        return cls(
            verdict=data["verdict"],
            max_degree=int(data["max_degree"]),
            witness=(
                WitnessPolynomial.from_json_dict(data["witness"])
                if data.get("witness")
                else None
            ),
            certified_k_range=tuple(data["certified_k_range"]),
            series=[SeriesAnalysis.from_json_dict(s) for s in data["series"]],
            witness_annihilates_all=data.get("witness_annihilates_all"),
            common_recurrence=(
                RecurrenceCertificate.from_json_dict(data["common_recurrence"])
                if data.get("common_recurrence")
                else None
            ),
            conventions=dict(data.get("conventions", {})),
        )

    def render_text(self) -> str:
        lines = [f"verdict: {self.verdict}"]
        lines.append(f"max degree searched: {self.max_degree}")
        if self.witness is not None:
            lines.append(f"witness: {self.witness.render()}")
            lines.append(
                "witness coefficients: ["
                + ", ".join(rational_str(c) for c in self.witness.coefficients)
                + "]"
            )
        else:
            lines.append("witness: none")
        lines.append(
            f"certified row range: [{self.certified_k_range[0]}, {self.certified_k_range[1]}]"
        )
        for s in self.series:
            lines.append(
                f"series j={s.j}: ["
                + ", ".join(rational_str(c) for c in s.coefficients)
                + "]"
            )
            if s.recurrence is not None:
                lines.append(
                    f"  recurrence: {s.recurrence.render()} (order {s.recurrence.order}, "
                    f"rows {s.recurrence.verified_rows[0]}..{s.recurrence.verified_rows[1]})"
                )
            else:
                lines.append("  recurrence: none")
            if s.witness_annihilates is not None:
                lines.append(
                    f"  witness annihilates: {'yes' if s.witness_annihilates else 'no'}"
                )
        if self.witness_annihilates_all is not None:
            lines.append(
                f"witness annihilates all series: "
                f"{'yes' if self.witness_annihilates_all else 'no'}"
            )
        if self.common_recurrence is not None:
            lines.append(
                f"common recurrence: {self.common_recurrence.render()} "
                f"(order {self.common_recurrence.order})"
            )
        else:
            lines.append("common recurrence: none")
        for key in sorted(self.conventions):
            lines.append(f"convention ({key}): {self.conventions[key]}")
        return "\n".join(lines)


def quasifinite_verdict(
    weight: Weight,
    m_max: int,
    j_set: Sequence[int],
    n_terms: int,
    max_rows: int | None = None,
) -> Report:
    """Assemble the full reducibility/quasifiniteness report.

    REDUCIBLE exactly when a witness exists, in which case the irreducible
    quotient has finite-dimensional graded pieces; otherwise the verdict is
    only valid up to the searched degree.
    """
    witness = reducibility_witness(weight, m_max, max_rows=max_rows)
    series: list[SeriesAnalysis] = []
    windows = []
    for j in sorted(set(int(x) for x in j_set)):
        win = sigma_series(weight, j, n_terms)
        windows.append(win)
        rec = detect_recurrence(win.coefficients, m_max)
        ann = annihilates_window(witness, win) if witness is not None else None
        series.append(SeriesAnalysis(j, win.coefficients, rec, ann))
    common = common_recurrence(windows, m_max) if windows else None
    ann_all = None
    if witness is not None:
        ann_all = all(s.witness_annihilates for s in series) if series else True
    verdict = "REDUCIBLE" if witness is not None else f"IRREDUCIBLE-UP-TO({m_max})"
    searched_degree = witness.degree if witness is not None else m_max
    return Report(
        verdict=verdict,
        max_degree=m_max,
        witness=witness,
        certified_k_range=certified_k_range(weight, 0, searched_degree),
        series=series,
        witness_annihilates_all=ann_all,
        common_recurrence=common,
    )


# -- parabolic diagnostics ---------------------------------------------------


@dataclass
class ParabolicSlice:
    """Generators g with x^-depth g(t) in the parabolic layer of that depth."""

    depth: int
    generators: list[Laurent]


def parabolic_step(f, i: int, g: Laurent, j: int) -> Laurent:
    """Bracket transport from depth i to depth i+1.

    [x^-1 t^j f, x^-i g] = x^-(i+1) (-i j t^(j-1) f g - i t^j f' g + t^j f g'),
    so the returned Laurent polynomial generates at depth i+1.
    """
    if i < 1:
        raise ValueError("depth i must be >= 1")
    ff = f.as_laurent() if isinstance(f, WitnessPolynomial) else f
    fg = ff * g
    return (
        fg.shift(j - 1).scale(-i * j)
        + (ff.derivative() * g).shift(j).scale(-i)
        + (ff * g.derivative()).shift(j)
    )


def parabolic_chain(f, depth: int, j: int = 1) -> list[ParabolicSlice]:
    """Iterate parabolic_step from f, one generator per depth, 1..depth.

    j = 0 with g = f collapses immediately (the step is zero); j = 1 keeps
    the chain alive for any nonzero f.
    """
    if depth < 1:
        raise ValueError("depth must be >= 1")
    ff = f.as_laurent() if isinstance(f, WitnessPolynomial) else f
    slices = [ParabolicSlice(1, [ff])]
    g = ff
    for i in range(1, depth):
        g = parabolic_step(ff, i, g, j)
        slices.append(ParabolicSlice(i + 1, [g]))
    return slices


def p1_codimension(f, t_window: tuple[int, int]) -> int:
    """Codimension of f * (Laurent span) inside the t-window span.

    The window carries the monomials t^e, e in [w_lo, w_hi]; the subspace is
    spanned by the shifts t^s f whose support stays inside the window.  For a
    window longer than twice deg f this equals deg f and stays there.
    """
    ff = f.as_laurent() if isinstance(f, WitnessPolynomial) else f
    if not ff:
        raise ValueError("f must be nonzero")
    w_lo, w_hi = int(t_window[0]), int(t_window[1])
    if w_lo > w_hi:
        raise ValueError("empty window")
    lo, hi = ff.support()
    width = w_hi - w_lo + 1
    if width <= 2 * (hi - lo):
        raise WindowTooShortError(
            f"window of width {width} is too short for degree {hi - lo} "
            f"(needs more than {2 * (hi - lo)})"
        )
    rows = []
    for s in range(w_lo - lo, w_hi - hi + 1):
        shifted = ff.shift(s)
        rows.append([shifted[e] for e in range(w_lo, w_hi + 1)])
    if not rows:
        return width
    return width - rank(rows)
