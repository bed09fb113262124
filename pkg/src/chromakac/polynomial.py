"""Dense univariate polynomials in ``q`` with exact coefficients.

Coefficients are ``int`` or :class:`fractions.Fraction`; a Fraction with
denominator 1 is stored as ``int`` so integral polynomials compare, hash and
serialize as plain integers.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c.numerator)
    return c


class Polynomial:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_norm(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def monomial(cls, degree, coeff=1):
        return cls([0] * degree + [coeff])

    @classmethod
    def q(cls):
        return cls([0, 1])

    @classmethod
    def constant(cls, c):
        return cls([c])

    # -- inspection ----------------------------------------------------------

    @property
    def degree(self):
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def coeff(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def is_zero(self):
        return not self.coeffs

    def is_integral(self):
        return all(isinstance(c, int) for c in self.coeffs)

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def alternates_in_sign(self):
        """True when nonzero coefficients from the top down are +, -, +, ...

        Zero coefficients are allowed only below the lowest nonzero one.
        """
        if not self.coeffs:
            return True
        d = self.degree
        low = next(i for i, c in enumerate(self.coeffs) if c != 0)
        for k in range(low, d + 1):
            c = self.coeffs[k]
            if c == 0:
                return False
            if (c > 0) != ((d - k) % 2 == 0):
                return False
        return True

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return _norm(acc) if isinstance(acc, Fraction) else acc

    # -- arithmetic ----------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Polynomial([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def _lift(self, other):
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial([other])
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return Polynomial(
            (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)
        )

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Polynomial(c * other for c in self.coeffs)
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        out = Polynomial([1])
        for _ in range(k):
            out = out * self
        return out

    def shift(self, k):
        """Multiply by q**k."""
        if not self.coeffs:
            return self
        return Polynomial([0] * k + list(self.coeffs))

    def substitute_neg(self):
        """p(-q)."""
        return Polynomial(c if k % 2 == 0 else -c for k, c in enumerate(self.coeffs))

    # -- rendering -----------------------------------------------------------

    def __repr__(self):
        return f"Polynomial({list(self.coeffs)!r})"

    def __str__(self):
        return render(self)

    def to_json(self):
        """``{"coeffs": [...]}`` ascending in degree, exact decimal strings."""
        if not self.is_integral():
            raise ValueError("only integral polynomials have a JSON form")
        return {"coeffs": [str(c) for c in self.coeffs] or ["0"]}

    @classmethod
    def from_json(cls, obj):
        return cls(int(c) for c in obj["coeffs"])


def render(p: Polynomial, var="q") -> str:
    """Human form, highest degree first: ``q^3 - 3q^2 + 2q``."""
    terms = []
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            if mag == 1:
                body = mono
            elif isinstance(mag, Fraction):
                body = f"({mag}){mono}"
            else:
                body = f"{mag}{mono}"
        terms.append((sign, body))
    if not terms:
        return "0"
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def falling_factorial(k) -> Polynomial:
    """q (q-1) ... (q-k+1)."""
    out = Polynomial([1])
    for i in range(k):
        out = out * Polynomial([-i, 1])
    return out


def binomial_q(k) -> Polynomial:
    """C(q, k) as a polynomial in q."""
    return falling_factorial(k) * Fraction(1, factorial(k))


def lagrange_interpolate(points) -> Polynomial:
    """The unique polynomial of degree < len(points) through ``points``.

    Exact over the rationals; x-values must be distinct.
    """
    points = [(Fraction(x), Fraction(y)) for x, y in points]
    xs = [x for x, _ in points]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation nodes must be distinct")
    total = Polynomial()
    for i, (xi, yi) in enumerate(points):
        if yi == 0:
            continue
        basis = Polynomial([1])
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j != i:
                basis = basis * Polynomial([-xj, 1])
                denom *= xi - xj
        total = total + basis * (yi / denom)
    return total


def binomial_expand(coeffs_by_k) -> Polynomial:
    """sum_k c_k * C(q, k) for a mapping ``k -> c_k``."""
    total = Polynomial()
    for k, c in coeffs_by_k.items():
        if c:
            total = total + binomial_q(k) * c
    return total


__all__ = [
    "Polynomial",
    "render",
    "falling_factorial",
    "binomial_q",
    "binomial_expand",
    "lagrange_interpolate",
]
