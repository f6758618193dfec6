"""Weights: the data a highest-weight vector carries.

A weight assigns a central charge c to the central element and a two-sided
label sequence (Lambda_i) for i in Z to the degree-zero generators, with the
normalization Lambda_i = value on L[0, i-1]; under the Laurent dictionary
this reads value(t^i) = Lambda_i.

Supported label data, contributions adding:

* a finite-support part {i: value}, and
* an optional two-sided linear-recurrent part given by a characteristic
  polynomial rho (ascending coefficients, nonzero constant and leading
  terms) together with an initial window of deg(rho) consecutive values.
  Nonzero endpoints make the recurrence run in both directions, so every
  integer label is determined.

Weights are immutable after construction; label lookups memoize into a
private cache whose entries are pure functions of the construction data, so
repeated or concurrent evaluation is value-identical.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping

from .laurent import parse_rational, rational_str


class Recurrence:
    """Two-sided constant-coefficient recurrence with an anchored window."""

    __slots__ = ("char_poly", "start", "initial")

    def __init__(self, char_poly, initial: Mapping[int, Fraction]):
        poly = tuple(parse_rational(c) for c in char_poly)
        if not poly:
            raise ValueError("recurrence needs a nonempty characteristic polynomial")
        if not poly[0]:
            raise ValueError("characteristic polynomial must have a nonzero constant term")
        if not poly[-1]:
            raise ValueError("characteristic polynomial must have a nonzero leading coefficient")
        order = len(poly) - 1
        keys = sorted(int(k) for k in initial)
        if len(keys) != order:
            raise ValueError(
                f"initial window must have exactly {order} entries, got {len(keys)}"
            )
        if keys and keys != list(range(keys[0], keys[0] + order)):
            raise ValueError("initial window indices must be consecutive")
        self.char_poly = poly
        self.start = keys[0] if keys else 0
        self.initial = tuple(parse_rational(initial[k]) for k in keys)

    @property
    def order(self) -> int:
        return len(self.char_poly) - 1

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Recurrence)
            and self.char_poly == other.char_poly
            and self.start == other.start
            and self.initial == other.initial
        )

    def __hash__(self):
        return hash((self.char_poly, self.start, self.initial))

    def to_json_dict(self) -> dict:
        return {
            "char_poly": [rational_str(c) for c in self.char_poly],
            "initial": {
                str(self.start + k): rational_str(v) for k, v in enumerate(self.initial)
            },
        }


class Weight:
    """Central charge plus two-sided labels (finite part + recurrent part)."""

    __slots__ = ("central_charge", "finite_labels", "recurrence", "_cache")

    def __init__(self, central_charge=0, finite_labels=None, recurrence: Recurrence | None = None):
        self.central_charge = parse_rational(central_charge)
        finite = {}
        if finite_labels:
            for i, v in finite_labels.items():
                v = parse_rational(v)
                if v:
                    finite[int(i)] = v
        self.finite_labels = finite
        self.recurrence = recurrence
        cache: dict[int, Fraction] = {}
        if recurrence is not None and recurrence.order:
            for k, v in enumerate(recurrence.initial):
                cache[recurrence.start + k] = v
        self._cache = cache

    # -- labels ---------------------------------------------------------

    def label(self, i: int) -> Fraction:
        """Lambda_i, the value on L[0, i-1]."""
        return self.finite_labels.get(i, Fraction(0)) + self._recurrent_label(int(i))

    def _recurrent_label(self, i: int) -> Fraction:
        rec = self.recurrence
        if rec is None or rec.order == 0:
            return Fraction(0)
        cache = self._cache
        if i in cache:
            return cache[i]
        poly, d = rec.char_poly, rec.order
        lo, hi = min(cache), max(cache)
        while hi < i:  # forward: rho_d * x_{k+d} = -(rho_0 x_k + ... + rho_{d-1} x_{k+d-1})
            k = hi + 1 - d
            total = sum(poly[s] * cache[k + s] for s in range(d))
            cache[hi + 1] = -total / poly[d]
            hi += 1
        while lo > i:  # backward: rho_0 * x_k = -(rho_1 x_{k+1} + ... + rho_d x_{k+d})
            k = lo - 1
            total = sum(poly[s] * cache[k + s] for s in range(1, d + 1))
            cache[k] = -total / poly[0]
            lo -= 1
        return cache[i]

    def labels(self, lo: int, hi: int) -> list[Fraction]:
        return [self.label(i) for i in range(lo, hi + 1)]

    # -- structure -------------------------------------------------------

    def is_zero(self) -> bool:
        """True when the central charge and every label vanish."""
        if self.central_charge or any(self.finite_labels.values()):
            return False
        rec = self.recurrence
        if rec is not None and any(rec.initial):
            return False
        return True

    def finite_support(self) -> tuple[int, int] | None:
        if not self.finite_labels:
            return None
        return min(self.finite_labels), max(self.finite_labels)

    @property
    def recurrence_order(self) -> int:
        return self.recurrence.order if self.recurrence is not None else 0

    def _key(self):
        return (
            self.central_charge,
            tuple(sorted(self.finite_labels.items())),
            self.recurrence,
        )

    def __eq__(self, other) -> bool:
        return isinstance(other, Weight) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        parts = [f"c={rational_str(self.central_charge)}"]
        if self.finite_labels:
            parts.append(f"finite={self.finite_labels}")
        if self.recurrence is not None:
            parts.append(f"recurrence_order={self.recurrence_order}")
        return f"<Weight {' '.join(parts)}>"

    # -- serialization -----------------------------------------------------

    @classmethod
    def from_json_dict(cls, data: dict) -> "Weight":
        if not isinstance(data, dict):
            raise ValueError("weight spec must be a JSON object")
        allowed = {"central_charge", "finite_labels", "recurrent"}
        unknown = set(data) - allowed
        if unknown:
            raise ValueError(f"unknown weight spec keys: {sorted(unknown)}")
        central = data.get("central_charge", 0)
        finite_raw = data.get("finite_labels", {})
        if not isinstance(finite_raw, dict):
            raise ValueError("finite_labels must be an object of index: rational")
        finite = {}
        for k, v in finite_raw.items():
            try:
                idx = int(k)
            except (TypeError, ValueError) as exc:
                raise ValueError(f"finite_labels key {k!r} is not an integer") from exc
            finite[idx] = parse_rational(v)
        rec = None
        if "recurrent" in data and data["recurrent"] is not None:
            rdata = data["recurrent"]
            if not isinstance(rdata, dict):
                raise ValueError("recurrent part must be an object")
            runknown = set(rdata) - {"char_poly", "initial"}
            if runknown:
                raise ValueError(f"unknown recurrent keys: {sorted(runknown)}")
            if "char_poly" not in rdata:
                raise ValueError("recurrent part needs char_poly")
            initial_raw = rdata.get("initial", {})
            if not isinstance(initial_raw, dict):
                raise ValueError("recurrent initial window must be an object")
            initial = {}
            for k, v in initial_raw.items():
                try:
                    idx = int(k)
                except (TypeError, ValueError) as exc:
                    raise ValueError(f"initial window key {k!r} is not an integer") from exc
                initial[idx] = parse_rational(v)
            rec = Recurrence(rdata["char_poly"], initial)
        return cls(parse_rational(central), finite, rec)

    def to_json_dict(self) -> dict:
        out: dict = {"central_charge": rational_str(self.central_charge)}
        if self.finite_labels:
            out["finite_labels"] = {
                str(i): rational_str(v) for i, v in sorted(self.finite_labels.items())
            }
        if self.recurrence is not None:
            out["recurrent"] = self.recurrence.to_json_dict()
        return out


def weight_label(weight: Weight, i: int) -> Fraction:
    """Functional form of Weight.label."""
    return weight.label(i)


def geometric_weight(ratio, central_charge=0) -> Weight:
    """Labels Lambda_i = ratio^i via the one-term recurrence rho = t - ratio."""
    r = parse_rational(ratio)
    if not r:
        raise ValueError("geometric ratio must be nonzero")
    return Weight(
        central_charge,
        {},
        Recurrence([-r, Fraction(1)], {0: Fraction(1)}),
    )
