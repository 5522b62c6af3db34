"""
Sparse polynomials in q with arbitrary-precision integer coefficients.
"""

import numbers
import re


_TERM = re.compile(r"^([+-]?\d*)(\*?q(\^(\d+))?)?$")


class QPolynomial(object):
    """
    Immutable polynomial sum_k c_k q^k stored as {k: c_k} with no zero
    coefficients and nonnegative exponents.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=None):
        clean = {}
        for exp, c in (coeffs or {}).items():
            exp, c = int(exp), int(c)
            if exp < 0:
                raise ValueError("negative exponent %d" % exp)
            if c:
                clean[exp] = c
        self._coeffs = clean

    @classmethod
    def monomial(cls, exp, coeff=1):
        return cls({exp: coeff})

    @classmethod
    def constant(cls, c):
        return cls({0: c})

    @classmethod
    def from_text(cls, text):
        """ Inverse of to_text; also accepts bare ``q`` and ``q^k`` terms. """
        body = text.replace(" ", "")
        if not body:
            raise ValueError("empty polynomial text")
        body = body[0] + body[1:].replace("-", "+-")
        coeffs = {}
        for term in body.split("+"):
            if not term:
                continue
            m = _TERM.match(term)
            if m is None or (m.group(1) in ("", "+", "-") and m.group(2) is None):
                raise ValueError("bad polynomial term %r" % term)
            sign_digits, var, _, power = m.groups()
            if sign_digits in ("", "+"):
                c = 1
            elif sign_digits == "-":
                c = -1
            else:
                c = int(sign_digits)
            exp = 0 if var is None else int(power or 1)
            coeffs[exp] = coeffs.get(exp, 0) + c
        return cls(coeffs)

    @property
    def coeffs(self):
        return dict(self._coeffs)

    def coeff(self, exp):
        return self._coeffs.get(exp, 0)

    def is_zero(self):
        return not self._coeffs

    def __bool__(self):
        return bool(self._coeffs)

    def degree(self):
        """ Largest exponent; -1 for the zero polynomial. """
        return max(self._coeffs) if self._coeffs else -1

    def min_degree(self):
        return min(self._coeffs) if self._coeffs else -1

    def _coerce(self, other):
        if isinstance(other, QPolynomial):
            return other
        if isinstance(other, numbers.Integral):
            return QPolynomial.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        coeffs = dict(self._coeffs)
        for exp, c in other._coeffs.items():
            coeffs[exp] = coeffs.get(exp, 0) + c
        return QPolynomial(coeffs)

    __radd__ = __add__

    def __neg__(self):
        return QPolynomial({exp: -c for exp, c in self._coeffs.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        coeffs = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                coeffs[e1 + e2] = coeffs.get(e1 + e2, 0) + c1 * c2
        return QPolynomial(coeffs)

    __rmul__ = __mul__

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    def shift(self, k):
        """ q^k * self """
        return QPolynomial({exp + k: c for exp, c in self._coeffs.items()})

    def reciprocal(self, total):
        """ q^total * self(1/q); requires total >= degree. """
        if self._coeffs and total < self.degree():
            raise ValueError("reciprocal shift %d is below degree %d" % (total, self.degree()))
        return QPolynomial({total - exp: c for exp, c in self._coeffs.items()})

    def at_one(self):
        return sum(self._coeffs.values())

    def is_nonnegative(self):
        return all(c > 0 for c in self._coeffs.values())

    def dominates(self, other):
        """ Coefficient-wise self >= other. """
        return (self - other).is_nonnegative()

    def to_text(self):
        if not self._coeffs:
            return "0"
        terms = []
        for exp in sorted(self._coeffs):
            c = self._coeffs[exp]
            if exp == 0:
                body = "%d" % abs(c)
            elif exp == 1:
                body = "%d*q" % abs(c)
            else:
                body = "%d*q^%d" % (abs(c), exp)
            if not terms:
                terms.append(body if c > 0 else "-" + body)
            else:
                terms.append(("+ " if c > 0 else "- ") + body)
        return " ".join(terms)

    __str__ = to_text

    def __repr__(self):
        return "QPolynomial(%s)" % self.to_text()

    def __getstate__(self):
        return (self._coeffs,)

    def __setstate__(self, state):
        self._coeffs = state[0]


ZERO = QPolynomial()
ONE = QPolynomial.constant(1)
