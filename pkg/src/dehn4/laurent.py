"""Integer Laurent polynomials with exact arithmetic.

Used for Alexander polynomials: values are carried as sparse
exponent -> coefficient maps, multiplication and substitution are exact,
and normalization centers a palindromic polynomial at degree zero with
value +1 at t = 1.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping


class LaurentPoly:
    """Immutable Laurent polynomial with integer coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: dict[int, int] = {}
        for exp, c in items:
            c = int(c)
            if c:
                acc[int(exp)] = acc.get(int(exp), 0) + c
        self._coeffs = tuple(sorted((e, c) for e, c in acc.items() if c))

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def term(cls, coeff: int, exp: int = 0) -> "LaurentPoly":
        return cls({exp: coeff})

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._coeffs)

    def coeff(self, exp: int) -> int:
        for e, c in self._coeffs:
            if e == exp:
                return c
        return 0

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_one(self) -> bool:
        return self._coeffs == ((0, 1),)

    @property
    def min_exp(self) -> int:
        if not self._coeffs:
            raise ValueError("zero polynomial has no exponents")
        return self._coeffs[0][0]

    @property
    def max_exp(self) -> int:
        if not self._coeffs:
            raise ValueError("zero polynomial has no exponents")
        return self._coeffs[-1][0]

    @property
    def span(self) -> int:
        """max_exp - min_exp; 0 for monomials and for the zero polynomial."""
        return 0 if not self._coeffs else self.max_exp - self.min_exp

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        acc = dict(self._coeffs)
        for e, c in other._coeffs:
            acc[e] = acc.get(e, 0) + c
        return LaurentPoly(acc)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self._coeffs})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        acc: dict[int, int] = {}
        for e1, c1 in self._coeffs:
            for e2, c2 in other._coeffs:
                e = e1 + e2
                acc[e] = acc.get(e, 0) + c1 * c2
        return LaurentPoly(acc)

    def shifted(self, k: int) -> "LaurentPoly":
        """Multiply by t**k."""
        return LaurentPoly({e + k: c for e, c in self._coeffs})

    def substituted(self, n: int) -> "LaurentPoly":
        """The polynomial with t replaced by t**n (n may be negative)."""
        if n == 0:
            raise ValueError("substitution t -> t**0 is not defined")
        return LaurentPoly({e * n: c for e, c in self._coeffs})

    def reciprocal(self) -> "LaurentPoly":
        """The polynomial with t replaced by 1/t."""
        return self.substituted(-1)

    def evaluate(self, t) -> Fraction:
        total = Fraction(0)
        for e, c in self._coeffs:
            total += c * Fraction(t) ** e
        return total

    def is_palindromic(self) -> bool:
        """True if coefficients read the same from both ends (up to t-shift)."""
        if not self._coeffs:
            return True
        center = self.min_exp + self.max_exp
        return all(self.coeff(e) == self.coeff(center - e) for e, _ in self._coeffs)

    def normalized(self) -> "LaurentPoly":
        """Unit-normalize: center the exponents and make the value at 1 positive.

        Requires a palindromic polynomial with even span and value +-1 at
        t = 1 (every Alexander polynomial of a knot satisfies this).
        """
        if self.is_zero():
            raise ValueError("cannot normalize the zero polynomial")
        if not self.is_palindromic():
            raise ValueError("polynomial is not palindromic up to units")
        total = self.min_exp + self.max_exp
        if total % 2 != 0:
            raise ValueError("polynomial has odd span; cannot center")
        centered = self.shifted(-total // 2)
        at_one = centered.evaluate(1)
        if abs(at_one) != 1:
            raise ValueError(f"value at t=1 is {at_one}, expected +-1")
        return -centered if at_one < 0 else centered

    def unit_equal(self, other: "LaurentPoly") -> bool:
        """Equality up to multiplication by +-t**k."""
        if self.is_zero() or other.is_zero():
            return self.is_zero() and other.is_zero()
        a = self.shifted(-self.min_exp)
        b = other.shifted(-other.min_exp)
        return a == b or a == -b

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for e, c in sorted(self._coeffs, reverse=True):
            if e == 0:
                term = str(abs(c))
            else:
                var = "t" if e == 1 else f"t^{e}"
                term = var if abs(c) == 1 else f"{abs(c)}*{var}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly({dict(self._coeffs)!r})"


def poly_det(entries: list[list[LaurentPoly]]) -> LaurentPoly:
    """Determinant of a matrix of Laurent polynomials.

    Fraction-free Bareiss elimination; exact divisions stay in Z[t, 1/t].
    Suitable for the Alexander determinants in this package (sizes up to
    a few dozen).
    """
    n = len(entries)
    if n == 0:
        return LaurentPoly.one()
    a = [row[:] for row in entries]
    sign = 1
    prev = LaurentPoly.one()
    for k in range(n - 1):
        if a[k][k].is_zero():
            pivot_row = next((i for i in range(k + 1, n) if not a[i][k].is_zero()), None)
            if pivot_row is None:
                return LaurentPoly.zero()
            a[k], a[pivot_row] = a[pivot_row], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[i][j] * a[k][k] - a[i][k] * a[k][j]
                a[i][j] = _exact_div(num, prev)
            a[i][k] = LaurentPoly.zero()
        prev = a[k][k]
    result = a[-1][-1]
    return -result if sign < 0 else result


def _exact_div(num: LaurentPoly, den: LaurentPoly) -> LaurentPoly:
    """Exact division in Z[t, 1/t]; raises if the division is not exact."""
    if den.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if num.is_zero():
        return LaurentPoly.zero()
    # Shift both to ordinary polynomials and divide.
    nshift, dshift = num.min_exp, den.min_exp
    ncoef = _dense(num.shifted(-nshift))
    dcoef = _dense(den.shifted(-dshift))
    qlen = len(ncoef) - len(dcoef) + 1
    if qlen < 0:
        raise ArithmeticError("non-exact polynomial division")
    quot = [0] * qlen
    rem = ncoef[:]
    lead = dcoef[-1]
    for i in range(qlen - 1, -1, -1):
        head = rem[i + len(dcoef) - 1]
        if head % lead != 0:
            raise ArithmeticError("non-exact polynomial division")
        q = head // lead
        quot[i] = q
        if q:
            for j, d in enumerate(dcoef):
                rem[i + j] -= q * d
    if any(rem):
        raise ArithmeticError("non-exact polynomial division")
    return LaurentPoly({i + nshift - dshift: c for i, c in enumerate(quot)})


def _dense(p: LaurentPoly) -> list[int]:
    out = [0] * (p.max_exp + 1)
    for e, c in p.coeffs.items():
        out[e] = c
    return out
