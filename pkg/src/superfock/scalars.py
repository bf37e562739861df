"""Exact scalar domains: Gaussian rationals and their pi-graded extension.

All symbolic computation in this package runs over ``QQi`` (numbers of the
form (a + b*i)/d with integer a, b, d).  Integral values that carry
half-integer powers of pi (sphere areas, Gamma values at half-integers)
live in ``PiScalar``, a Laurent ring in pi^(1/2) with QQi coefficients.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def _normalize(a: int, b: int, d: int) -> tuple[int, int, int]:
    if d == 0:
        raise ZeroDivisionError("zero denominator")
    if d < 0:
        a, b, d = -a, -b, -d
    g = gcd(gcd(abs(a), abs(b)), d)
    if g > 1:
        a //= g
        b //= g
        d //= g
    return a, b, d


class QQi:
    """Gaussian rational (a + b*i)/d, always stored in lowest terms with d > 0."""

    __slots__ = ("a", "b", "d")

    def __init__(self, a=0, b=0, d=1):
        if isinstance(a, Fraction) or isinstance(b, Fraction) or isinstance(d, Fraction):
            fa, fb, fd = Fraction(a), Fraction(b), Fraction(d)
            den = fa.denominator * fb.denominator * fd.denominator
            a = int(fa * den)
            b = int(fb * den)
            d = int(fd * den)
        self.a, self.b, self.d = _normalize(a, b, d)

    # -- construction helpers ------------------------------------------------

    @classmethod
    def from_fraction(cls, x: Fraction) -> "QQi":
        return cls(x.numerator, 0, x.denominator)

    @staticmethod
    def coerce(x) -> "QQi":
        if isinstance(x, QQi):
            return x
        if isinstance(x, int):
            return QQi(x)
        if isinstance(x, Fraction):
            return QQi(x.numerator, 0, x.denominator)
        raise TypeError(f"cannot coerce {type(x).__name__} to QQi")

    # -- structure -----------------------------------------------------------

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def is_rational(self) -> bool:
        return self.b == 0

    @property
    def re(self) -> Fraction:
        return Fraction(self.a, self.d)

    @property
    def im(self) -> Fraction:
        return Fraction(self.b, self.d)

    def conjugate(self) -> "QQi":
        return QQi(self.a, -self.b, self.d)

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other) -> "QQi":
        o = QQi.coerce(other)
        return QQi(self.a * o.d + o.a * self.d, self.b * o.d + o.b * self.d, self.d * o.d)

    __radd__ = __add__

    def __neg__(self) -> "QQi":
        q = QQi.__new__(QQi)
        q.a, q.b, q.d = -self.a, -self.b, self.d
        return q

    def __sub__(self, other) -> "QQi":
        o = QQi.coerce(other)
        return QQi(self.a * o.d - o.a * self.d, self.b * o.d - o.b * self.d, self.d * o.d)

    def __rsub__(self, other) -> "QQi":
        return QQi.coerce(other) - self

    def __mul__(self, other) -> "QQi":
        o = QQi.coerce(other)
        return QQi(self.a * o.a - self.b * o.b, self.a * o.b + self.b * o.a, self.d * o.d)

    __rmul__ = __mul__

    def inverse(self) -> "QQi":
        n = self.a * self.a + self.b * self.b
        if n == 0:
            raise ZeroDivisionError("inverse of zero")
        return QQi(self.d * self.a, -self.d * self.b, n)

    def __truediv__(self, other) -> "QQi":
        return self * QQi.coerce(other).inverse()

    def __rtruediv__(self, other) -> "QQi":
        return QQi.coerce(other) * self.inverse()

    def __pow__(self, k: int) -> "QQi":
        if k < 0:
            return self.inverse() ** (-k)
        out = QQi(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- comparison / hashing ------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = QQi.coerce(other)
        if not isinstance(other, QQi):
            return NotImplemented
        return self.a == other.a and self.b == other.b and self.d == other.d

    def __hash__(self):
        return hash((self.a, self.b, self.d))

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- rendering -----------------------------------------------------------

    def __str__(self) -> str:
        def rat(num: int) -> str:
            return str(num) if self.d == 1 else f"{num}/{self.d}"

        if self.b == 0:
            return rat(self.a)
        if self.a == 0:
            return rat(self.b) + "*i"
        sb = rat(abs(self.b)) + "*i"
        return f"{rat(self.a)}{'+' if self.b > 0 else '-'}{sb}"

    def __repr__(self) -> str:
        return f"QQi({self})"


ZERO = QQi(0)
ONE = QQi(1)
I = QQi(0, 1)
HALF = QQi(1, 0, 2)


def poch(a: Fraction, k: int) -> Fraction:
    """Rising factorial a*(a+1)*...*(a+k-1); empty product for k = 0."""
    out = Fraction(1)
    for j in range(k):
        out *= a + j
    return out


def factorial_fraction(n: int) -> Fraction:
    out = Fraction(1)
    for j in range(2, n + 1):
        out *= j
    return out


class PiScalar:
    """Finite QQi-combination of half-integer powers of pi.

    Keys of the internal dict are twice the pi-exponent, so pi^(3/2) is
    stored under key 3.  A PiScalar supported on key 0 alone is an exact
    scalar and can be extracted with :meth:`as_qqi`.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms: dict[int, QQi] = {}
        if terms:
            for k, c in terms.items():
                c = QQi.coerce(c)
                if not c.is_zero():
                    self.terms[k] = self.terms.get(k, ZERO) + c
            self.terms = {k: c for k, c in self.terms.items() if not c.is_zero()}

    @classmethod
    def of(cls, coeff, half_exponent: int = 0) -> "PiScalar":
        return cls({half_exponent: QQi.coerce(coeff)})

    @staticmethod
    def coerce(x) -> "PiScalar":
        if isinstance(x, PiScalar):
            return x
        return PiScalar.of(QQi.coerce(x))

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other) -> "PiScalar":
        o = PiScalar.coerce(other)
        out = dict(self.terms)
        for k, c in o.terms.items():
            s = out.get(k, ZERO) + c
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s
        p = PiScalar.__new__(PiScalar)
        p.terms = out
        return p

    __radd__ = __add__

    def __neg__(self) -> "PiScalar":
        p = PiScalar.__new__(PiScalar)
        p.terms = {k: -c for k, c in self.terms.items()}
        return p

    def __sub__(self, other) -> "PiScalar":
        return self + (-PiScalar.coerce(other))

    def __mul__(self, other) -> "PiScalar":
        o = PiScalar.coerce(other)
        out: dict[int, QQi] = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in o.terms.items():
                k = k1 + k2
                s = out.get(k, ZERO) + c1 * c2
                if s.is_zero():
                    out.pop(k, None)
                else:
                    out[k] = s
        p = PiScalar.__new__(PiScalar)
        p.terms = out
        return p

    __rmul__ = __mul__

    def __truediv__(self, other) -> "PiScalar":
        o = PiScalar.coerce(other)
        if len(o.terms) != 1:
            raise ZeroDivisionError("PiScalar division needs a single-power divisor")
        (k, c), = o.terms.items()
        cinv = c.inverse()
        p = PiScalar.__new__(PiScalar)
        p.terms = {kk - k: cc * cinv for kk, cc in self.terms.items()}
        return p

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, QQi)):
            other = PiScalar.coerce(other)
        if not isinstance(other, PiScalar):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def as_qqi(self) -> QQi:
        """Extract the scalar value; raises if any pi power survives."""
        if not self.terms:
            return ZERO
        if set(self.terms) != {0}:
            raise ValueError(f"pi powers did not cancel: {self}")
        return self.terms[0]

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for k in sorted(self.terms):
            c = self.terms[k]
            if k == 0:
                parts.append(str(c))
            elif k == 2:
                parts.append(f"({c})*pi")
            elif k % 2 == 0:
                parts.append(f"({c})*pi^{k // 2}")
            else:
                parts.append(f"({c})*pi^({k}/2)")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"PiScalar({self})"


def gamma_half(k: int) -> PiScalar:
    """Gamma(k/2) for positive integer k, exact in the pi-graded ring."""
    if k <= 0:
        raise ValueError("Gamma pole or nonpositive argument")
    if k % 2 == 0:
        return PiScalar.of(QQi.from_fraction(factorial_fraction(k // 2 - 1)))
    j = (k - 1) // 2  # Gamma(j + 1/2) = (2j)!/(4^j j!) sqrt(pi)
    val = factorial_fraction(2 * j) / (Fraction(4) ** j * factorial_fraction(j))
    return PiScalar.of(QQi.from_fraction(val), 1)
