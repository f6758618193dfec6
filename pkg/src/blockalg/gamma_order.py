"""Total group orders on Z^r and what they say about the highest-weight module.

Two order families are supported:

* Lex(axes, signs): compare sign-adjusted coordinates along a significance
  permutation, most significant axis first.  For r >= 2 these orders are
  discrete (a smallest positive element exists: the unit vector on the least
  significant axis, suitably oriented) and non-archimedean (no multiple of
  that unit passes a more significant one).  Rank 1 is discrete and
  archimedean.

* Embedding(d, weights): map a lattice vector x to sum_s x_s * w_s with
  w_s = p_s + q_s*sqrt(d) in the real quadratic field, d squarefree > 0,
  and compare through the real embedding.  The weights must be Q-linearly
  independent so the map is injective on the lattice; that limits r to 2
  (the field is 2-dimensional over Q), and an independent rank-2 embedding
  is automatically dense and archimedean.  Signs of a + b*sqrt(d) are decided
  exactly by comparing a^2 with b^2 d.

The verdict: over a dense order the module is irreducible iff the weight is
nonzero, and for the zero weight the submodule spanned by the nonempty
lowering monomials is irreducible iff the order is archimedean.  Over a
discrete order everything reduces, after rescaling the weight by the minimal
positive element a, to the rank-one analysis on the subalgebra of degrees in
aZ; the rescaling L'[n, i] = (1/a) L[n*a, i], C' = C/a preserves brackets
exactly (checked symbolically by the test suite against rational-degree
structure constants).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .laurent import parse_rational, rational_str
from .weights import Recurrence, Weight


# -- exact quadratic-surd arithmetic -----------------------------------------


def is_squarefree(d: int) -> bool:
    if d < 1:
        return False
    f = 2
    while f * f <= d:
        if d % (f * f) == 0:
            return False
        f += 1
    return True


@dataclass(frozen=True)
class Surd:
    """a + b*sqrt(d) with exact rational a, b."""

    rational: Fraction
    coeff: Fraction
    d: int

    def sign(self) -> int:
        a, b = self.rational, self.coeff
        if not b:
            return (a > 0) - (a < 0)
        if not a:
            return (b > 0) - (b < 0)
        if a > 0 and b > 0:
            return 1
        if a < 0 and b < 0:
            return -1
        # opposite signs: compare |a| with |b|*sqrt(d) via squares
        lhs, rhs = a * a, b * b * self.d
        if lhs == rhs:
            return 0  # impossible for squarefree d > 1 and b != 0, possible for d = 1
        bigger_is_rational = lhs > rhs
        if bigger_is_rational:
            return 1 if a > 0 else -1
        return 1 if b > 0 else -1

    def is_zero(self) -> bool:
        return self.sign() == 0


def surd(rational, coeff, d: int) -> Surd:
    return Surd(parse_rational(rational), parse_rational(coeff), int(d))


# -- order specifications -----------------------------------------------------


@dataclass(frozen=True)
class LexOrder:
    """axes: significance order (0-based, most significant first); signs: +1/-1."""

    axes: tuple[int, ...]
    signs: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.axes)

    def validate(self) -> None:
        r = len(self.axes)
        if sorted(self.axes) != list(range(r)):
            raise ValueError(f"axes must be a permutation of 0..{r - 1}")
        if len(self.signs) != r or any(s not in (1, -1) for s in self.signs):
            raise ValueError("signs must be +1/-1, one per axis")


@dataclass(frozen=True)
class EmbeddingOrder:
    """weights[s] = value of the s-th unit vector in Q[sqrt(d)]."""

    d: int
    weights: tuple[Surd, ...]

    @property
    def rank(self) -> int:
        return len(self.weights)

    def validate(self) -> None:
        if not is_squarefree(self.d):
            raise ValueError(f"d = {self.d} must be a positive squarefree integer")
        r = len(self.weights)
        if r == 0:
            raise ValueError("embedding needs at least one weight")
        if any(w.d != self.d for w in self.weights):
            raise ValueError("all weights must live in the same quadratic field")
        if not self._independent():
            raise ValueError(
                "weights are Q-linearly dependent: the embedding is not injective "
                "on the lattice"
            )

    def _independent(self) -> bool:
        r = len(self.weights)
        if r == 1:
            return not self.weights[0].is_zero()
        if r == 2:
            w1, w2 = self.weights
            det = w1.rational * w2.coeff - w2.rational * w1.coeff
            return bool(det) and not w1.is_zero() and not w2.is_zero()
        return False  # a 2-dimensional Q-space cannot host 3 independent vectors


OrderSpec = LexOrder | EmbeddingOrder


def _check_vector(order: OrderSpec, x: Sequence[int]) -> tuple[int, ...]:
    vec = tuple(int(c) for c in x)
    if len(vec) != order.rank:
        raise ValueError(f"vector {vec} has rank {len(vec)}, order has rank {order.rank}")
    return vec


def sign_of(order: OrderSpec, x: Sequence[int]) -> int:
    """-1, 0, +1 for x negative, zero, positive in the order."""
    vec = _check_vector(order, x)
    if isinstance(order, LexOrder):
        for axis, sgn in zip(order.axes, order.signs):
            c = sgn * vec[axis]
            if c:
                return 1 if c > 0 else -1
        return 0
    a = Fraction(0)
    b = Fraction(0)
    for c, w in zip(vec, order.weights):
        a += c * w.rational
        b += c * w.coeff
    return Surd(a, b, order.d).sign()


def compare(order: OrderSpec, x: Sequence[int], y: Sequence[int]) -> int:
    """-1, 0, +1 for x < y, x = y, x > y."""
    vx = _check_vector(order, x)
    vy = _check_vector(order, y)
    return sign_of(order, tuple(a - b for a, b in zip(vx, vy)))


# -- classification ------------------------------------------------------------


@dataclass(frozen=True)
class OrderClassification:
    kind: str  # "dense" | "discrete"
    archimedean: bool
    minimal_positive: tuple[int, ...] | None

    def to_json_dict(self) -> dict:
        return {
            "kind": self.kind,
            "archimedean": self.archimedean,
            "minimal_positive": (
                list(self.minimal_positive) if self.minimal_positive else None
            ),
        }


def classify(order: OrderSpec) -> OrderClassification:
    """Dense/discrete and archimedean flags, with the minimal positive element.

    Dense means every positive element has infinitely many positives below
    it; discrete means some positive element has none.
    """
    if isinstance(order, LexOrder):
        order.validate()
        r = order.rank
        least_axis = order.axes[-1]
        least_sign = order.signs[-1]
        minimal = tuple(
            least_sign if axis == least_axis else 0 for axis in range(r)
        )
        return OrderClassification(
            kind="discrete", archimedean=(r == 1), minimal_positive=minimal
        )
    order.validate()
    if order.rank == 1:
        w = order.weights[0]
        s = w.sign()
        return OrderClassification(
            kind="discrete", archimedean=True, minimal_positive=(s,)
        )
    return OrderClassification(kind="dense", archimedean=True, minimal_positive=None)


def b_alpha_sample(
    order: OrderSpec, alpha: Sequence[int], coeff_bound: int
) -> list[tuple[int, ...]]:
    """All beta with 0 < beta < alpha and coordinates in [-bound, bound].

    For dense orders the count grows without bound as coeff_bound grows; for
    discrete orders it stalls once the box covers the gap.
    """
    vec = _check_vector(order, alpha)
    if sign_of(order, vec) <= 0:
        raise ValueError("alpha must be positive in the order")
    if coeff_bound < 0:
        raise ValueError("coeff_bound must be >= 0")
    r = order.rank
    out = []

    def walk(prefix: list[int]) -> None:
        if len(prefix) == r:
            beta = tuple(prefix)
            if sign_of(order, beta) > 0 and compare(order, beta, vec) < 0:
                out.append(beta)
            return
        for c in range(-coeff_bound, coeff_bound + 1):
            prefix.append(c)
            walk(prefix)
            prefix.pop()

    walk([])
    return sorted(out)


def archimedean_witness(
    order: OrderSpec, x: Sequence[int], y: Sequence[int], n_max: int
) -> int | None:
    """Least n <= n_max with n*x > y, or None if no such multiple exists.

    A None for positive x, y exhibits the archimedean failure (x is
    infinitesimal next to y).
    """
    vx = _check_vector(order, x)
    vy = _check_vector(order, y)
    if sign_of(order, vx) <= 0 or sign_of(order, vy) <= 0:
        raise ValueError("x and y must be positive in the order")
    for n in range(1, n_max + 1):
        if compare(order, tuple(n * c for c in vx), vy) > 0:
            return n
    return None


# -- the module-level verdict ----------------------------------------------------


@dataclass
class OrderVerdict:
    """What the order classification implies for the highest-weight module."""

    verdict: str  # "IRREDUCIBLE" | "REDUCIBLE" | "DELEGATED"
    classification: OrderClassification
    weight_is_zero: bool | None
    monomial_submodule_irreducible: bool | None
    delegate_minimal_positive: tuple[int, ...] | None
    detail: str

    def to_json_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "classification": self.classification.to_json_dict(),
            "weight_is_zero": self.weight_is_zero,
            "monomial_submodule_irreducible": self.monomial_submodule_irreducible,
            "delegate_minimal_positive": (
                list(self.delegate_minimal_positive)
                if self.delegate_minimal_positive
                else None
            ),
            "detail": self.detail,
        }


def order_verdict(order: OrderSpec, weight_is_zero: bool | None = None) -> OrderVerdict:
    """Resolve the order into one of three verdict shapes.

    Dense, nonzero weight: the module is irreducible outright.  Dense, zero
    weight: reducible, and the submodule spanned by the nonempty lowering
    monomials is irreducible exactly when the order is archimedean.
    Discrete: delegate to the rank-one subalgebra on multiples of the minimal
    positive element, with the weight rescaled by it.
    """
    cls_ = classify(order)
    if cls_.kind == "discrete":
        return OrderVerdict(
            verdict="DELEGATED",
            classification=cls_,
            weight_is_zero=weight_is_zero,
            monomial_submodule_irreducible=None,
            delegate_minimal_positive=cls_.minimal_positive,
            detail=(
                "discrete order: restrict to the subalgebra of degrees in the "
                f"multiples of {list(cls_.minimal_positive)}, rescale the weight "
                "by that element, and run the rank-one criterion"
            ),
        )
    if weight_is_zero is None:
        return OrderVerdict(
            verdict="IRREDUCIBLE-IFF-NONZERO-WEIGHT",
            classification=cls_,
            weight_is_zero=None,
            monomial_submodule_irreducible=cls_.archimedean,
            delegate_minimal_positive=None,
            detail=(
                "dense order: the module is irreducible for every nonzero weight; "
                "for the zero weight it is reducible and its lowering-monomial "
                "submodule is irreducible iff the order is archimedean "
                f"({'holds' if cls_.archimedean else 'fails'} here)"
            ),
        )
    if weight_is_zero:
        return OrderVerdict(
            verdict="REDUCIBLE",
            classification=cls_,
            weight_is_zero=True,
            monomial_submodule_irreducible=cls_.archimedean,
            delegate_minimal_positive=None,
            detail=(
                "dense order, zero weight: reducible; the lowering-monomial "
                "submodule is "
                + ("irreducible (archimedean order)" if cls_.archimedean
                   else "reducible (non-archimedean order)")
            ),
        )
    return OrderVerdict(
        verdict="IRREDUCIBLE",
        classification=cls_,
        weight_is_zero=False,
        monomial_submodule_irreducible=None,
        delegate_minimal_positive=None,
        detail="dense order, nonzero weight: the module is irreducible",
    )


# -- weight rescaling -------------------------------------------------------------


def rescale_weight(weight: Weight, a) -> Weight:
    """Transport the weight through L'[n, i] = (1/a) L[n*a, i], C' = C/a.

    Every label and the central charge divide by a; the recurrent part keeps
    its characteristic polynomial (scaling a sequence preserves its
    recurrences) with a scaled initial window.
    """
    a = parse_rational(a)
    if not a:
        raise ValueError("rescaling factor must be nonzero")
    rec = weight.recurrence
    new_rec = None
    if rec is not None:
        new_rec = Recurrence(
            rec.char_poly,
            {rec.start + k: v / a for k, v in enumerate(rec.initial)},
        )
    return Weight(
        weight.central_charge / a,
        {i: v / a for i, v in weight.finite_labels.items()},
        new_rec,
    )


def bracket_rational_degree(
    alpha: Fraction, i: int, beta: Fraction, j: int
) -> tuple[Fraction, Fraction, int, Fraction]:
    """Structure constants with rational degrees, for rescaling checks.

    Returns (coefficient, merged degree, merged index, central coefficient):
    the bracket of the degree-alpha index-i and degree-beta index-j
    generators is coefficient * L[alpha+beta, i+j] + central * C.  This is
    the same defining formula as the integer-degree bracket but evaluated in
    the rationals, which is what the subalgebra on degrees in aZ needs.
    """
    alpha = parse_rational(alpha)
    beta = parse_rational(beta)
    coeff = (i + 1) * beta - (j + 1) * alpha
    central = Fraction(0)
    if alpha == -beta and i + j == -2 and alpha:
        central = alpha
    return coeff, alpha + beta, i + j, central


# -- order spec serialization -------------------------------------------------------


def order_from_json_dict(data: dict) -> OrderSpec:
    if not isinstance(data, dict):
        raise ValueError("order spec must be a JSON object")
    if "rank" not in data or "order" not in data:
        raise ValueError("order spec needs 'rank' and 'order'")
    try:
        r = int(data["rank"])
    except (TypeError, ValueError) as exc:
        raise ValueError("rank must be an integer") from exc
    if r < 1:
        raise ValueError("rank must be >= 1")
    body = data["order"]
    if not isinstance(body, dict) or "kind" not in body:
        raise ValueError("order body must be an object with a 'kind'")
    kind = body["kind"]
    if kind == "lex":
        axes_raw = body.get("axes", list(range(1, r + 1)))
        signs_raw = body.get("signs", [1] * r)
        try:
            axes = tuple(int(a) - 1 for a in axes_raw)  # JSON axes are 1-based
            signs = tuple(int(s) for s in signs_raw)
        except (TypeError, ValueError) as exc:
            raise ValueError("axes and signs must be integers") from exc
        spec = LexOrder(axes, signs)
        if spec.rank != r:
            raise ValueError(f"axes list has {spec.rank} entries, rank is {r}")
        spec.validate()
        return spec
    if kind == "embedding":
        if "d" not in body or "weights" not in body:
            raise ValueError("embedding order needs 'd' and 'weights'")
        try:
            d = int(body["d"])
        except (TypeError, ValueError) as exc:
            raise ValueError("d must be an integer") from exc
        weights_raw = body["weights"]
        if not isinstance(weights_raw, list) or len(weights_raw) != r:
            raise ValueError(f"weights must be a list of {r} pairs")
        weights = []
        for pair in weights_raw:
            if not isinstance(pair, (list, tuple)) or len(pair) != 2:
                raise ValueError("each weight is a [rational, sqrt-coefficient] pair")
            weights.append(surd(parse_rational(pair[0]), parse_rational(pair[1]), d))
        spec = EmbeddingOrder(d, tuple(weights))
        spec.validate()
        return spec
    raise ValueError(f"unknown order kind {kind!r}")


def order_to_json_dict(order: OrderSpec) -> dict:
    if isinstance(order, LexOrder):
        return {
            "rank": order.rank,
            "order": {
                "kind": "lex",
                "axes": [a + 1 for a in order.axes],
                "signs": list(order.signs),
            },
        }
    return {
        "rank": order.rank,
        "order": {
            "kind": "embedding",
            "d": order.d,
            "weights": [
                [rational_str(w.rational), rational_str(w.coeff)] for w in order.weights
            ],
        },
    }
