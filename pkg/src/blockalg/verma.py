"""Highest-weight module with PBW basis and the straightening action.

For a weight (central charge c, labels Lambda_i) the module has basis

    L[-a_1, i_1] ... L[-a_k, i_k] . v,    k >= 0,

with a_s > 0, pairs ascending: (a_s, i_s) <= (a_{s+1}, i_{s+1}) in tuple
order (equal degrees force nondecreasing indices).  A monomial is stored as
that tuple of (a_s, i_s) pairs; the empty tuple is the highest-weight vector.

The generator action is computed by straightening: a symbol standing left of
a monomial either extends it in normal order or is commuted past the first
factor, the bracket term recursing on a shorter monomial.  The recursion
resolves the leftmost inversion first.  A second, structurally different
evaluator (`act_word_rewriting`) reduces whole words by rewriting at the
rightmost reducible position; the two must agree everywhere, which the test
suite checks, so normal forms do not depend on the straightening route.

Row certificates: for a candidate x^-1 f(t) . v with t-support in
[t_lo, t_hi], the scalar of x t^k acting on it vanishes automatically for k
outside a finite window determined by the weight data (finite-support labels
contribute only where the shifted support overlaps; the central term only
for -k in the t-support; an order-d recurrent part makes the row sequence
itself satisfy a recurrence of order at most 2d, since index-multiplied
sequences are annihilated by the squared characteristic polynomial, so 2d
extra vanishing rows on each flank propagate to all of Z).
`certified_k_range` returns that window; checking it proves vanishing for
every integer k.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .algebra import CENTRAL, LieElement, Symbol, bracket_basis, gen
from .errors import WindowInsufficientError
from .laurent import Laurent, rational_str
from .linalg import nullspace
from .weights import Weight

Monomial = tuple  # tuple of (a, i) pairs, a > 0, ascending


def is_normal_ordered(mono: Monomial) -> bool:
    return all(mono[s] <= mono[s + 1] for s in range(len(mono) - 1)) and all(
        a > 0 for a, _ in mono
    )


def monomial_degree(mono: Monomial) -> int:
    """Degree of the monomial as a module element: -(a_1 + ... + a_k)."""
    return -sum(a for a, _ in mono)


def monomial_sort_key(mono: Monomial):
    return (len(mono), mono)


class ModuleVector:
    """Finite rational combination of PBW monomials."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, Fraction] | None = None):
        data: dict[Monomial, Fraction] = {}
        if terms:
            for mono, c in terms.items():
                if not isinstance(c, Fraction):
                    c = Fraction(c)
                if c:
                    data[mono] = c
        self.terms = data

    @classmethod
    def zero(cls) -> "ModuleVector":
        return cls()

    @classmethod
    def vacuum(cls, coeff=1) -> "ModuleVector":
        return cls({(): Fraction(coeff)})

    @classmethod
    def monomial(cls, pairs: Iterable[tuple[int, int]], coeff=1) -> "ModuleVector":
        mono = tuple((int(a), int(i)) for a, i in pairs)
        if not is_normal_ordered(mono):
            raise ValueError(f"not a normal-ordered monomial: {mono}")
        return cls({mono: Fraction(coeff)})

    def __add__(self, other: "ModuleVector") -> "ModuleVector":
        out = dict(self.terms)
        for mono, c in other.terms.items():
            s = out.get(mono, Fraction(0)) + c
            if s:
                out[mono] = s
            else:
                out.pop(mono, None)
        return ModuleVector(out)

    def __sub__(self, other: "ModuleVector") -> "ModuleVector":
        return self + other.scale(-1)

    def __neg__(self) -> "ModuleVector":
        return self.scale(-1)

    def scale(self, scalar) -> "ModuleVector":
        scalar = Fraction(scalar)
        if not scalar:
            return ModuleVector()
        return ModuleVector({mono: scalar * c for mono, c in self.terms.items()})

    def __mul__(self, scalar):
        if isinstance(scalar, (int, Fraction)):
            return self.scale(scalar)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, ModuleVector) and self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __getitem__(self, mono) -> Fraction:
        return self.terms.get(tuple(mono), Fraction(0))

    def vacuum_coefficient(self) -> Fraction:
        return self.terms.get((), Fraction(0))

    def degrees(self) -> set[int]:
        return {monomial_degree(m) for m in self.terms}

    def is_homogeneous(self, degree: int) -> bool:
        return all(monomial_degree(m) == degree for m in self.terms)

    def render(self) -> str:
        """Canonical text: '0', 'c v' for the vacuum line, 'c * L[-a,i]... v' else.

        Terms are ordered by (length, factor tuple); signs are folded into
        the separators as in LieElement rendering.
        """
        if not self.terms:
            return "0"
        pieces = []
        for mono in sorted(self.terms, key=monomial_sort_key):
            c = self.terms[mono]
            if mono:
                body = "".join(f"L[{-a},{i}]" for a, i in mono)
                text = f"{rational_str(abs(c))} * {body} v"
            else:
                text = f"{rational_str(abs(c))} v"
            if not pieces:
                pieces.append(text if c > 0 else f"-{text}")
            else:
                pieces.append(f" + {text}" if c > 0 else f" - {text}")
        return "".join(pieces)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"<ModuleVector {self.render()}>"

    def to_json_dict(self) -> dict:
        return {
            "terms": [
                {
                    "coefficient": rational_str(self.terms[mono]),
                    "factors": [[-a, i] for a, i in mono],
                }
                for mono in sorted(self.terms, key=monomial_sort_key)
            ]
        }


# -- the action --------------------------------------------------------


def act_basis(sym: Symbol, mono: Monomial, weight: Weight, memo: dict | None = None) -> ModuleVector:
    """Action of one basis symbol on one PBW monomial.

    The memo dict is per-evaluation; entries are pure functions of
    (sym, mono, weight), so sharing one across a larger computation is safe.
    """
    if memo is None:
        memo = {}
    key = (sym, mono)
    hit = memo.get(key)
    if hit is not None:
        return hit
    if sym == CENTRAL:
        out = ModuleVector({mono: weight.central_charge})
    else:
        _, g, k = sym
        if not mono:
            if g > 0:
                out = ModuleVector.zero()
            elif g == 0:
                out = ModuleVector({(): weight.label(k + 1)})
            else:
                out = ModuleVector({((-g, k),): Fraction(1)})
        elif g < 0 and (-g, k) <= mono[0]:
            out = ModuleVector({((-g, k),) + mono: Fraction(1)})
        else:
            # commute past the first factor:  sym.F = F.sym + [sym, F]
            a1, i1 = mono[0]
            rest = mono[1:]
            first = gen(-a1, i1)
            out = ModuleVector.zero()
            for m2, c2 in act_basis(sym, rest, weight, memo).terms.items():
                out = out + act_basis(first, m2, weight, memo).scale(c2)
            for s2, c2 in bracket_basis(sym, first).terms.items():
                out = out + act_basis(s2, rest, weight, memo).scale(c2)
    memo[key] = out
    return out


def act(x: LieElement, v: ModuleVector, weight: Weight, memo: dict | None = None) -> ModuleVector:
    """Action of an algebra element, extended bilinearly."""
    if memo is None:
        memo = {}
    out = ModuleVector.zero()
    for sym, cs in x.terms.items():
        for mono, cm in v.terms.items():
            out = out + act_basis(sym, mono, weight, memo).scale(cs * cm)
    return out


def act_word(factors: Sequence[LieElement], weight: Weight) -> ModuleVector:
    """Apply a nonempty word of elements to the highest-weight vector.

    The word [e_1, ..., e_k] means e_1 . e_2 ... e_k . v, so the last factor
    acts first.
    """
    if not factors:
        raise ValueError("a word needs at least one factor")
    memo: dict = {}
    v = ModuleVector.vacuum()
    for f in reversed(list(factors)):
        v = act(f, v, weight, memo)
    return v


# -- independent word-rewriting evaluator -------------------------------


def _symbol_class(sym: Symbol) -> int:
    # lowering first, then degree zero, then raising; C handled separately
    d = sym[1]
    return 0 if d < 0 else (1 if d == 0 else 2)


def _out_of_order(a: Symbol, b: Symbol) -> bool:
    ca, cb = _symbol_class(a), _symbol_class(b)
    if ca != cb:
        return ca > cb
    if ca == 0:
        return (-a[1], a[2]) > (-b[1], b[2])
    return False


def act_word_rewriting(factors: Sequence[LieElement], weight: Weight) -> ModuleVector:
    """Same contract as act_word, via rightmost-position word rewriting.

    Words of basis symbols are reduced one rewrite at a time, always at the
    rightmost position where a rule applies: the central symbol converts to
    the charge, a trailing raising symbol kills the word, a trailing
    degree-zero symbol converts to a label, and an out-of-order adjacent pair
    is replaced by its swap plus its bracket.  Used as the confluence check
    against the recursive straightening; shares no traversal logic with it.
    """
    if not factors:
        raise ValueError("a word needs at least one factor")
    words: dict[tuple, Fraction] = {(): Fraction(1)}
    for f in factors:
        nxt: dict[tuple, Fraction] = {}
        for w, cw in words.items():
            for sym, cs in f.terms.items():
                key = w + (sym,)
                s = nxt.get(key, Fraction(0)) + cw * cs
                if s:
                    nxt[key] = s
                else:
                    nxt.pop(key, None)
        words = nxt
    result: dict[Monomial, Fraction] = {}
    pending = dict(words)
    while pending:
        w, cw = pending.popitem()
        if not cw:
            continue
        pos, rule = _rightmost_rule(w)
        if rule == "normal":
            mono = tuple((-sym[1], sym[2]) for sym in w)
            s = result.get(mono, Fraction(0)) + cw
            if s:
                result[mono] = s
            else:
                result.pop(mono, None)
            continue
        if rule == "central":
            _merge(pending, w[:pos] + w[pos + 1 :], cw * weight.central_charge)
        elif rule == "kill":
            pass
        elif rule == "label":
            _merge(pending, w[:pos], cw * weight.label(w[pos][2] + 1))
        else:  # swap an out-of-order adjacent pair
            a, b = w[pos], w[pos + 1]
            _merge(pending, w[:pos] + (b, a) + w[pos + 2 :], cw)
            for s2, c2 in bracket_basis(a, b).terms.items():
                _merge(pending, w[:pos] + (s2,) + w[pos + 2 :], cw * c2)
    return ModuleVector(result)


def _merge(pending: dict, word: tuple, coeff: Fraction) -> None:
    if not coeff:
        return
    s = pending.get(word, Fraction(0)) + coeff
    if s:
        pending[word] = s
    else:
        pending.pop(word, None)


def _rightmost_rule(w: tuple) -> tuple[int, str]:
    n = len(w)
    for pos in range(n - 1, -1, -1):
        sym = w[pos]
        if sym == CENTRAL:
            return pos, "central"
        if pos == n - 1:
            if sym[1] > 0:
                return pos, "kill"
            if sym[1] == 0:
                return pos, "label"
        elif _out_of_order(sym, w[pos + 1]):
            return pos, "swap"
    return -1, "normal"


# -- degree -1 candidates and row certificates ---------------------------


def lowering_vector_from_laurent(f: Laurent) -> ModuleVector:
    """x^-1 f(t) . v: the exponent-j term of f contributes to L[-1, j-1]."""
    return ModuleVector({((1, j - 1),): c for j, c in f.coeffs.items()})


def laurent_from_lowering_vector(v: ModuleVector) -> Laurent:
    """Inverse of lowering_vector_from_laurent; requires degree -1 shape."""
    coeffs = {}
    for mono, c in v.terms.items():
        if len(mono) != 1 or mono[0][0] != 1:
            raise ValueError("vector is not a combination of L[-1, i] . v")
        coeffs[mono[0][1] + 1] = c
    return Laurent(coeffs)


def certified_k_range(weight: Weight, t_lo: int, t_hi: int) -> tuple[int, int]:
    """Row window whose vanishing certifies vanishing for every integer row.

    Rows are indexed by k with the k-th row the scalar of x t^k acting on a
    degree -1 candidate with t-support inside [t_lo, t_hi].
    """
    if t_lo > t_hi:
        raise ValueError("empty t-support window")
    k_lo, k_hi = -t_hi, -t_lo  # the central term needs -k in the t-support
    supp = weight.finite_support()
    if supp is not None:
        k_lo = min(k_lo, supp[0] - t_hi + 1)
        k_hi = max(k_hi, supp[1] - t_lo + 1)
    margin = 2 * weight.recurrence_order
    return (k_lo - margin, k_hi + margin)


def _row_coefficient(weight: Weight, k: int, t_exp: int) -> Fraction:
    # coefficient of the t^j candidate coordinate in row s_k:
    #   (k+j) Lambda_{k+j-1} - delta_{j,-k} c
    j = t_exp
    val = (k + j) * weight.label(k + j - 1)
    if j == -k:
        val -= weight.central_charge
    return val


def singular_rows(weight: Weight, t_exponents: Sequence[int], k_range: tuple[int, int]):
    """Matrix of condition rows over the given candidate t-exponents."""
    k_lo, k_hi = k_range
    return [
        [_row_coefficient(weight, k, j) for j in t_exponents]
        for k in range(k_lo, k_hi + 1)
    ]


def singular_at_minus_one(
    weight: Weight,
    i_window: tuple[int, int],
    k_floor: tuple[int, int] | None = None,
    max_rows: int | None = None,
) -> list[ModuleVector]:
    """All singular vectors sum c_i L[-1, i] . v with i in the closed window.

    Returns a canonical basis of the solution space: unknowns are ordered by
    descending i, the nullspace is parametrized by free coordinates, and each
    basis vector is rescaled so its highest nonzero index carries 1.  The row
    window is the certified range extended to cover k_floor if given; if
    max_rows caps the row count below what certification needs, raises
    WindowInsufficientError.
    """
    i_lo, i_hi = int(i_window[0]), int(i_window[1])
    if i_lo > i_hi:
        raise ValueError("empty index window")
    t_lo, t_hi = i_lo + 1, i_hi + 1
    k_lo, k_hi = certified_k_range(weight, t_lo, t_hi)
    if k_floor is not None:
        k_lo = min(k_lo, int(k_floor[0]))
        k_hi = max(k_hi, int(k_floor[1]))
    if max_rows is not None and (k_hi - k_lo + 1) > max_rows:
        raise WindowInsufficientError(
            f"certified row range [{k_lo}, {k_hi}] needs {k_hi - k_lo + 1} rows, "
            f"cap is {max_rows}"
        )
    t_exponents = list(range(t_hi, t_lo - 1, -1))  # descending
    rows = singular_rows(weight, t_exponents, (k_lo, k_hi))
    basis = nullspace(rows, len(t_exponents))
    out = []
    for vec in basis:
        lead = next(c for c in vec if c)
        vec = [c / lead for c in vec]
        terms = {
            ((1, j - 1),): c for j, c in zip(t_exponents, vec) if c
        }
        out.append(ModuleVector(terms))
    return out


@dataclass
class SingularityCertificate:
    """Outcome of a singularity check with the row range that proves it."""

    is_singular: bool
    k_min: int
    k_max: int
    failure_k: int | None = None
    failure_scalar: Fraction | None = None

    def __bool__(self) -> bool:
        return self.is_singular


def is_singular(
    v: ModuleVector,
    weight: Weight,
    k_floor: tuple[int, int] | None = None,
    max_rows: int | None = None,
) -> SingularityCertificate:
    """Check that every raising generator kills v (degree -1 candidates only).

    Degree -1 vectors are combinations of L[-1, i] . v; generators of degree
    >= 2 send them into positive degrees, which vanish identically, so the
    only conditions are the x t^k rows over the certified range.
    """
    for mono in v.terms:
        if len(mono) != 1 or mono[0][0] != 1:
            raise ValueError("is_singular expects a homogeneous degree -1 vector")
    if not v.terms:
        return SingularityCertificate(True, 0, -1)
    indices = [mono[0][1] for mono in v.terms]
    t_lo, t_hi = min(indices) + 1, max(indices) + 1
    k_lo, k_hi = certified_k_range(weight, t_lo, t_hi)
    if k_floor is not None:
        k_lo = min(k_lo, int(k_floor[0]))
        k_hi = max(k_hi, int(k_floor[1]))
    if max_rows is not None and (k_hi - k_lo + 1) > max_rows:
        raise WindowInsufficientError(
            f"certified row range [{k_lo}, {k_hi}] needs {k_hi - k_lo + 1} rows, "
            f"cap is {max_rows}"
        )
    memo: dict = {}
    for k in range(k_lo, k_hi + 1):
        image = act(LieElement.gen(1, k - 1), v, weight, memo)
        if image:
            return SingularityCertificate(
                False, k_lo, k_hi, failure_k=k, failure_scalar=image.vacuum_coefficient()
            )
    return SingularityCertificate(True, k_lo, k_hi)


# -- PBW combinatorics ---------------------------------------------------


def enumerate_pbw_monomials(total: int, i_window: tuple[int, int]) -> list[Monomial]:
    """All normal-ordered monomials of degree -total with indices in the window."""
    if total < 0:
        raise ValueError("total must be >= 0")
    i_lo, i_hi = i_window
    out: list[Monomial] = []

    def extend(prefix: list, remaining: int, min_pair):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for a in range(1, remaining + 1):
            for i in range(i_lo, i_hi + 1):
                pair = (a, i)
                if pair < min_pair:
                    continue
                prefix.append(pair)
                extend(prefix, remaining - a, pair)
                prefix.pop()

    extend([], total, (1, i_lo))
    return out
