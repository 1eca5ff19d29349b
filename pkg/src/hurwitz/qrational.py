"""Dense univariate polynomials in q over Q, and their fraction field.

QPoly stores coefficients ascending in the power of q with trailing zeros
stripped; the zero polynomial has degree -1 (the distinguished sentinel).
QRat is a reduced fraction of QPolys: the gcd (monic Euclidean gcd over Q)
is divided out and the denominator is normalized monic, with its leading
coefficient folded into the numerator.  Equality of normalized values is
plain componentwise equality.

This is the exact value ring in which the quantum-weight tables are
verified as identities; nothing here is ever evaluated in floating point.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .algebra import RationalLike


class QPoly:
    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Sequence[RationalLike] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs = tuple(cs)

    @staticmethod
    def const(c: RationalLike) -> QPoly:
        return QPoly([Fraction(c)])

    @staticmethod
    def q_power(k: int, coef: RationalLike = 1) -> QPoly:
        return QPoly([0] * k + [coef])

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    def is_zero(self) -> bool:
        return not self._coeffs

    def leading(self) -> Fraction:
        if not self._coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self._coeffs[-1]

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, QPoly):
            return self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)):
            return self._coeffs == QPoly.const(other)._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __add__(self, other: QPoly) -> QPoly:
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPoly(out)

    def __neg__(self) -> QPoly:
        return QPoly([-c for c in self._coeffs])

    def __sub__(self, other: QPoly) -> QPoly:
        return self + (-other)

    def __mul__(self, other: QPoly | RationalLike) -> QPoly:
        if not isinstance(other, QPoly):
            return self.scale(other)
        if not self or not other:
            return QPoly()
        out = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if not a:
                continue
            for j, b in enumerate(other._coeffs):
                out[i + j] += a * b
        return QPoly(out)

    def __rmul__(self, other: RationalLike) -> QPoly:
        return self.scale(other)

    def scale(self, s: RationalLike) -> QPoly:
        s = Fraction(s)
        return QPoly([c * s for c in self._coeffs])

    def monic(self) -> QPoly:
        if not self:
            return self
        return self.scale(1 / self.leading())

    def divmod(self, other: QPoly) -> tuple[QPoly, QPoly]:
        """Exact Euclidean division over Q: self = q*other + r, deg r < deg other."""
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self._coeffs)
        dn, lo = other.degree(), other.leading()
        qd = len(rem) - 1 - dn
        if qd < 0:
            return QPoly(), self
        quo = [Fraction(0)] * (qd + 1)
        for k in range(qd, -1, -1):
            c = rem[k + dn] / lo
            quo[k] = c
            if c:
                for i, oc in enumerate(other._coeffs):
                    rem[k + i] -= c * oc
        return QPoly(quo), QPoly(rem)

    def __mod__(self, other: QPoly) -> QPoly:
        return self.divmod(other)[1]

    def evaluate(self, q: RationalLike) -> Fraction:
        q = Fraction(q)
        out = Fraction(0)
        for c in reversed(self._coeffs):
            out = out * q + c
        return out

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self._coeffs):
            if not c:
                continue
            if k == 0:
                parts.append(str(c))
            else:
                body = "q" if k == 1 else f"q^{k}"
                if c == 1:
                    parts.append(body)
                elif c == -1:
                    parts.append(f"-{body}")
                else:
                    parts.append(f"{c}*{body}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"QPoly({self})"


def qpoly_gcd(a: QPoly, b: QPoly) -> QPoly:
    """Monic Euclidean gcd; gcd(0, 0) = 0."""
    while b:
        a, b = b, a % b
    return a.monic()


class QRat:
    """Reduced fraction of QPolys with monic denominator."""

    __slots__ = ("_num", "_den")

    def __init__(self, num: QPoly, den: QPoly | None = None):
        if den is None:
            den = QPoly.const(1)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            self._num, self._den = QPoly(), QPoly.const(1)
            return
        g = qpoly_gcd(num, den)
        if g.degree() > 0:
            num = num.divmod(g)[0]
            den = den.divmod(g)[0]
        lead = den.leading()
        self._num = num.scale(1 / lead)
        self._den = den.scale(1 / lead)

    @staticmethod
    def const(c: RationalLike) -> QRat:
        return QRat(QPoly.const(c))

    @staticmethod
    def from_poly(p: QPoly) -> QRat:
        return QRat(p)

    @property
    def num(self) -> QPoly:
        return self._num

    @property
    def den(self) -> QPoly:
        return self._den

    def is_zero(self) -> bool:
        return self._num.is_zero()

    def is_polynomial(self) -> bool:
        return self._den.degree() == 0

    def __bool__(self) -> bool:
        return bool(self._num)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, QRat):
            return self._num == other._num and self._den == other._den
        if isinstance(other, (int, Fraction, QPoly)):
            return self == QRat(other if isinstance(other, QPoly) else QPoly.const(other))
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._num, self._den))

    def __add__(self, other: QRat) -> QRat:
        return QRat(self._num * other._den + other._num * self._den, self._den * other._den)

    def __neg__(self) -> QRat:
        return QRat(-self._num, self._den)

    def __sub__(self, other: QRat) -> QRat:
        return self + (-other)

    def __mul__(self, other: QRat | RationalLike) -> QRat:
        if not isinstance(other, QRat):
            return QRat(self._num.scale(other), self._den)
        return QRat(self._num * other._num, self._den * other._den)

    def __rmul__(self, other: RationalLike) -> QRat:
        return QRat(self._num.scale(other), self._den)

    def inverse(self) -> QRat:
        if not self._num:
            raise ZeroDivisionError("inverse of zero")
        return QRat(self._den, self._num)

    def __truediv__(self, other: QRat) -> QRat:
        return self * other.inverse()

    def evaluate(self, q: RationalLike) -> Fraction:
        d = self._den.evaluate(q)
        if d == 0:
            raise ZeroDivisionError(f"denominator vanishes at q={q}")
        return self._num.evaluate(q) / d

    def __str__(self) -> str:
        if self._den.degree() == 0:
            return str(self._num)
        return f"({self._num}) / ({self._den})"

    def __repr__(self) -> str:
        return f"QRat({self})"

    def to_json(self) -> dict:
        def enc(p: QPoly) -> list[str]:
            return [str(c) for c in p.coeffs]
        return {"num": enc(self._num), "den": enc(self._den)}

    @staticmethod
    def from_json(data: dict) -> QRat:
        num = QPoly([Fraction(s) for s in data["num"]])
        den = QPoly([Fraction(s) for s in data["den"]])
        return QRat(num, den)
