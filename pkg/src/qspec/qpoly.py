r"""Integer Laurent polynomials in one variable q, and symmetric q-integers.

A polynomial is a finite map exponent -> coefficient with arbitrary
precision integer coefficients; the zero polynomial has no terms.
Instances behave as immutable values: arithmetic returns new objects and
equality/hashing are structural.

The symmetric q-integer is

    [x] = (q^-x - q^x) / (q^-1 - q) = q^-(x-1) + q^-(x-3) + ... + q^(x-1)

with [0] = 0.  It is invariant under q -> q^-1 (bar involution).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, NonExactDivisionError

__all__ = [
    "LaurentPoly",
    "QPoint",
    "qnum",
    "exact_div",
    "bar_involution",
]


class LaurentPoly:
    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        data = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for exp, coeff in items:
                if not isinstance(exp, int) or isinstance(exp, bool):
                    raise DomainError(f"exponent must be an integer: {exp!r}")
                coeff = int(coeff)
                if coeff:
                    data[exp] = data.get(exp, 0) + coeff
                    if data[exp] == 0:
                        del data[exp]
        object.__setattr__(self, "_terms", data)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "LaurentPoly":
        return cls({exp: coeff})

    # -- inspection ---------------------------------------------------

    def terms(self) -> tuple:
        """Sorted (exponent, coefficient) pairs, ascending exponents."""
        return tuple(sorted(self._terms.items()))

    def coefficient(self, exp: int) -> int:
        return self._terms.get(exp, 0)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def leading_exponent(self) -> int:
        if not self._terms:
            raise DomainError("zero polynomial has no leading exponent")
        return max(self._terms)

    def trailing_exponent(self) -> int:
        if not self._terms:
            raise DomainError("zero polynomial has no trailing exponent")
        return min(self._terms)

    def is_palindromic(self) -> bool:
        """True when invariant under q -> q^-1."""
        return all(self._terms.get(-e) == c for e, c in self._terms.items())

    def coefficient_sum(self) -> int:
        """Value at q = 1, the classical specialisation."""
        return sum(self._terms.values())

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        data = dict(self._terms)
        for e, c in other._terms.items():
            s = data.get(e, 0) + c
            if s:
                data[e] = s
            else:
                data.pop(e, None)
        return _raw(data)

    def __sub__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return _raw({e: -c for e, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            if other == 0:
                return LaurentPoly()
            return _raw({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        data = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                s = data.get(e, 0) + c1 * c2
                if s:
                    data[e] = s
                else:
                    del data[e]
        return _raw(data)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(self.terms())

    # -- involution and evaluation ------------------------------------

    def bar(self) -> "LaurentPoly":
        """Bar involution q -> q^-1: negate every exponent."""
        return _raw({-e: c for e, c in self._terms.items()})

    def evaluate(self, q) -> float:
        """Numeric value at 0 < q < 1.

        Terms are summed in descending magnitude order for stability.
        Exponents far below zero at small q can exceed the float range;
        such evaluations return +/-inf rather than raising.
        """
        qv = q.q if isinstance(q, QPoint) else float(q)
        if not (0.0 < qv < 1.0):
            raise DomainError(f"evaluation point must satisfy 0 < q < 1, got {qv}")
        vals = []
        for e, c in self._terms.items():
            try:
                vals.append(c * qv ** e)
            except OverflowError:
                return math.inf if c > 0 else -math.inf
        vals.sort(key=abs, reverse=True)
        return math.fsum(vals)

    # -- serialization -------------------------------------------------

    def to_json_dict(self) -> dict:
        """Wire form: {"terms": [[exp, "coeff"], ...]}, ascending exponents.

        Coefficients are decimal strings so arbitrary precision survives
        any JSON reader.
        """
        return {"terms": [[e, str(c)] for e, c in self.terms()]}

    @classmethod
    def from_json_dict(cls, d: dict) -> "LaurentPoly":
        try:
            pairs = [(int(e), int(c)) for e, c in d["terms"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise DomainError(f"malformed Laurent polynomial payload: {d!r}") from exc
        return cls(pairs)

    def __repr__(self):
        if not self._terms:
            return "LaurentPoly(0)"
        bits = []
        for e, c in self.terms():
            if e == 0:
                bits.append(f"{c}")
            elif c == 1:
                bits.append(f"q^{e}")
            else:
                bits.append(f"{c}*q^{e}")
        return "LaurentPoly(" + " + ".join(bits) + ")"


def _raw(data: dict) -> LaurentPoly:
    # internal: data already canonical (no zero coefficients)
    p = LaurentPoly()
    object.__setattr__(p, "_terms", data)
    return p


def qnum(x: int) -> LaurentPoly:
    """Symmetric q-integer [x] for x >= 0; [0] is the zero polynomial."""
    if not isinstance(x, int) or isinstance(x, bool) or x < 0:
        raise DomainError(f"q-integer argument must be a nonnegative integer: {x!r}")
    return _raw({x - 1 - 2 * t: 1 for t in range(x)})


def exact_div(num: LaurentPoly, den: LaurentPoly) -> LaurentPoly:
    """Quotient num / den when the division is exact.

    Long division from the trailing (lowest) exponent upward.  Raises
    ZeroDivisionError for a zero divisor and NonExactDivisionError when
    any remainder survives.
    """
    if not den:
        raise ZeroDivisionError("division of Laurent polynomial by zero")
    if not num:
        return LaurentPoly()
    rem = dict(num._terms)
    dt = den.trailing_exponent()
    dc = den._terms[dt]
    max_exp = num.leading_exponent() - den.leading_exponent()
    out = {}
    while rem:
        rt = min(rem)
        e = rt - dt
        if e > max_exp:
            raise NonExactDivisionError(f"{num!r} is not divisible by {den!r}")
        c, r = divmod(rem[rt], dc)
        if r:
            raise NonExactDivisionError(f"{num!r} is not divisible by {den!r}")
        out[e] = c
        for de, dcf in den._terms.items():
            k = de + e
            s = rem.get(k, 0) - dcf * c
            if s:
                rem[k] = s
            else:
                rem.pop(k, None)
    return _raw(out)


def bar_involution(p: LaurentPoly) -> LaurentPoly:
    return p.bar()


@dataclass(frozen=True)
class QPoint:
    """A deformation parameter strictly between 0 and 1."""

    q: float

    def __post_init__(self):
        q = self.q
        if not isinstance(q, float) or not math.isfinite(q) or not (0.0 < q < 1.0):
            raise DomainError(f"q must be a float with 0 < q < 1, got {q!r}")
