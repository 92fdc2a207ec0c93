"""Exact Laurent polynomials, rational functions and classes in Q(t)/Z[t^+-1].

Polynomials are backed by sympy ``Poly`` objects over ``QQ``. Every value is
kept in a canonical form (a polynomial with nonzero constant term times a
power of t) so that equality is structural.
"""

import enum
import math
from fractions import Fraction
from typing import Dict, Mapping, Optional, Tuple, Union

import sympy
from sympy import QQ, Poly, Rational, Symbol

from ..exceptions import DegeneratePresentationError

T = Symbol("t")

Scalar = Union[int, Fraction]


def _rational(value) -> Rational:
    if isinstance(value, Fraction):
        return Rational(value.numerator, value.denominator)
    if isinstance(value, str):
        value = Fraction(value.strip())
        return Rational(value.numerator, value.denominator)
    return Rational(value)


def _fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)):
        return Fraction(value)
    value = Rational(value)
    return Fraction(int(value.p), int(value.q))


def _monomial_poly(exponent: int) -> Poly:
    return Poly.from_dict({(exponent,): 1}, T, domain=QQ)


_ZERO_POLY = Poly(0, T, domain=QQ)


class RingTag(enum.Enum):
    """Smallest coefficient ring containing a polynomial."""

    INTEGER = "ZZ"
    RATIONAL = "QQ"


class LaurentPolynomial:
    """Element of Q[t^+-1]; lies in Z[t^+-1] when every coefficient is integral.

    Stored as ``t**shift * poly`` where ``poly`` has a nonzero constant term
    (or is zero, in which case ``shift`` is 0).
    """

    __slots__ = ("_poly", "_shift")

    def __init__(self, coeffs: Optional[Mapping[int, object]] = None):
        terms = {}
        for exponent, coefficient in (coeffs or {}).items():
            value = _fraction(coefficient)
            if value:
                terms[int(exponent)] = value
        if not terms:
            self._poly = _ZERO_POLY
            self._shift = 0
            return
        low = min(terms)
        self._poly = Poly.from_dict(
            {(e - low,): _rational(c) for e, c in terms.items()}, T, domain=QQ
        )
        self._shift = low

    @classmethod
    def _from_parts(cls, poly: Poly, shift: int = 0) -> "LaurentPolynomial":
        obj = object.__new__(cls)
        if poly.is_zero:
            obj._poly = _ZERO_POLY
            obj._shift = 0
            return obj
        (valuation,), reduced = poly.terms_gcd()
        obj._poly = reduced
        obj._shift = shift + valuation
        return obj

    @classmethod
    def constant(cls, value) -> "LaurentPolynomial":
        """Constant polynomial."""
        return cls({0: value})

    @classmethod
    def monomial(cls, exponent: int, coefficient=1) -> "LaurentPolynomial":
        """coefficient * t^exponent."""
        return cls({exponent: coefficient})

    @classmethod
    def from_expr(cls, expr) -> "LaurentPolynomial":
        """Convert a sympy expression in ``t`` (negative powers allowed)."""
        numerator, denominator = sympy.fraction(sympy.cancel(sympy.together(expr)))
        num = cls._from_parts(Poly(numerator, T, domain=QQ))
        den = cls._from_parts(Poly(denominator, T, domain=QQ))
        if den.width != 0:
            raise ValueError(f"{expr} is not a Laurent polynomial")
        inverse = Fraction(1) / _fraction(den.poly.LC())
        return (num * inverse).shifted(-den.shift)

    @classmethod
    def from_json(cls, data: Mapping[str, str]) -> "LaurentPolynomial":
        """Inverse of ``to_json``: exponent strings to rational strings."""
        return cls({int(e): Fraction(c) for e, c in data.items()})

    @property
    def poly(self) -> Poly:
        """The factor with nonzero constant term (zero for the zero polynomial)."""
        return self._poly

    @property
    def shift(self) -> int:
        return self._shift

    @property
    def is_zero(self) -> bool:
        return self._poly.is_zero

    @property
    def width(self) -> int:
        """max exponent - min exponent; the Euclidean size over Q[t^+-1]."""
        return 0 if self.is_zero else self._poly.degree()

    @property
    def min_exponent(self) -> int:
        return self._shift

    @property
    def max_exponent(self) -> int:
        return self._shift + self.width

    @property
    def coeffs(self) -> Dict[int, Fraction]:
        return {
            monom[0] + self._shift: _fraction(c) for monom, c in self._poly.terms()
        } if not self.is_zero else {}

    @property
    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs.values())

    @property
    def ring_tag(self) -> RingTag:
        return RingTag.INTEGER if self.is_integral else RingTag.RATIONAL

    def coefficient(self, exponent: int) -> Fraction:
        """Coefficient of t^exponent, zero when absent."""
        return self.coeffs.get(exponent, Fraction(0))

    def shifted(self, n: int) -> "LaurentPolynomial":
        """Multiply by t**n."""
        if self.is_zero:
            return self
        return LaurentPolynomial._from_parts(self._poly, self._shift + n)

    def involute(self) -> "LaurentPolynomial":
        """Apply t -> t^-1."""
        if self.is_zero:
            return self
        degree = self._poly.degree()
        reversed_poly = Poly.from_list(
            list(reversed(self._poly.all_coeffs())), T, domain=QQ
        )
        return LaurentPolynomial._from_parts(reversed_poly, -self._shift - degree)

    def evaluate(self, value) -> Fraction:
        """Exact value at a nonzero rational point."""
        if self.is_zero:
            return Fraction(0)
        point = _fraction(value)
        return _fraction(self._poly.eval(_rational(point))) * point ** self._shift

    def to_expr(self):
        return self._poly.as_expr() * T ** self._shift

    def to_json(self) -> Dict[str, str]:
        return {str(e): str(c) for e, c in sorted(self.coeffs.items())}

    @staticmethod
    def _coerce(other) -> Optional["LaurentPolynomial"]:
        if isinstance(other, LaurentPolynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPolynomial.constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        low = min(self._shift, other._shift)
        total = self._poly * _monomial_poly(self._shift - low) + other._poly * (
            _monomial_poly(other._shift - low)
        )
        return LaurentPolynomial._from_parts(total, low)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPolynomial":
        return LaurentPolynomial._from_parts(-self._poly, self._shift)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, RationalFunction):
            return NotImplemented
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.is_zero or other.is_zero:
            return LaurentPolynomial()
        return LaurentPolynomial._from_parts(
            self._poly * other._poly, self._shift + other._shift
        )

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPolynomial":
        if n >= 0:
            return LaurentPolynomial._from_parts(self._poly ** n, self._shift * n)
        if self.width != 0:
            raise ValueError(f"{self} is not a unit of Z[t^+-1]")
        inverse = Fraction(1) / _fraction(self._poly.LC())
        return LaurentPolynomial.monomial(-self._shift, inverse) ** (-n)

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._shift == other._shift and self._poly == other._poly

    def __hash__(self) -> int:
        return hash((self._shift, tuple(self._poly.all_coeffs())))

    def __bool__(self) -> bool:
        return not self.is_zero

    def __repr__(self) -> str:
        return f"LaurentPolynomial({self.to_json()})"

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        pieces = []
        for exponent, coefficient in sorted(self.coeffs.items()):
            sign = "-" if coefficient < 0 else "+"
            magnitude = abs(coefficient)
            if exponent == 0:
                body = str(magnitude)
            else:
                power = "t" if exponent == 1 else f"t^{exponent}"
                if magnitude == 1:
                    body = power
                elif magnitude.denominator == 1:
                    body = f"{magnitude}{power}"
                else:
                    body = f"({magnitude}){power}"
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text


ZERO = LaurentPolynomial()
ONE = LaurentPolynomial.constant(1)
T_POLY = LaurentPolynomial.monomial(1)

LaurentLike = Union[LaurentPolynomial, int, Fraction]


def as_laurent(value: LaurentLike) -> LaurentPolynomial:
    """Coerce an int, Fraction or LaurentPolynomial to a LaurentPolynomial."""
    if isinstance(value, LaurentPolynomial):
        return value
    return LaurentPolynomial.constant(value)


def involute(p: LaurentPolynomial) -> LaurentPolynomial:
    """t -> t^-1, a ring automorphism of Q[t^+-1]."""
    return p.involute()


def unit_normal(p: LaurentPolynomial) -> LaurentPolynomial:
    """Monic associate in Q[t] with nonzero constant term."""
    if p.is_zero:
        return p
    return LaurentPolynomial._from_parts(p.poly.monic(), 0)


def associated(p: LaurentPolynomial, q: LaurentPolynomial) -> bool:
    """Equality up to the units c*t^n of Q[t^+-1]."""
    return unit_normal(p) == unit_normal(q)


def laurent_gcdex(
    a: LaurentPolynomial, b: LaurentPolynomial
) -> Tuple[LaurentPolynomial, LaurentPolynomial, LaurentPolynomial]:
    """Return (s, u, g) with s*a + u*b = g = gcd(a, b), g normalized."""
    if a.is_zero and b.is_zero:
        return ZERO, ZERO, ZERO
    if a.is_zero:
        inverse = Fraction(1) / _fraction(b.poly.LC())
        return ZERO, LaurentPolynomial.monomial(-b.shift, inverse), unit_normal(b)
    if b.is_zero:
        inverse = Fraction(1) / _fraction(a.poly.LC())
        return LaurentPolynomial.monomial(-a.shift, inverse), ZERO, unit_normal(a)
    s, u, g = a.poly.gcdex(b.poly)
    return (
        LaurentPolynomial._from_parts(s, -a.shift),
        LaurentPolynomial._from_parts(u, -b.shift),
        LaurentPolynomial._from_parts(g, 0),
    )


def divides(b: LaurentPolynomial, a: LaurentPolynomial) -> bool:
    """True iff b | a in Q[t^+-1]."""
    if b.is_zero:
        return a.is_zero
    if a.is_zero:
        return True
    return a.poly.rem(b.poly).is_zero


def exact_quotient(a: LaurentPolynomial, b: LaurentPolynomial) -> LaurentPolynomial:
    """a / b in Q[t^+-1]; raises ArithmeticError when b does not divide a."""
    if b.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    if a.is_zero:
        return ZERO
    quotient, remainder = a.poly.div(b.poly)
    if not remainder.is_zero:
        raise ArithmeticError(f"{b} does not divide {a}")
    return LaurentPolynomial._from_parts(quotient, a.shift - b.shift)


def residue(f: LaurentPolynomial, p: LaurentPolynomial) -> LaurentPolynomial:
    """Canonical remainder of f modulo p: an element of Q[t] with deg < width(p)."""
    modulus = p.poly
    if modulus.is_zero:
        raise ZeroDivisionError("residue modulo zero")
    if f.is_zero or modulus.degree() == 0:
        return ZERO
    if f.shift >= 0:
        lifted = f.poly * _monomial_poly(f.shift)
    else:
        # t is invertible modulo a polynomial with nonzero constant term
        t_inverse = _monomial_poly(1).invert(modulus)
        lifted = f.poly * (t_inverse ** (-f.shift)).rem(modulus)
    return LaurentPolynomial._from_parts(lifted.rem(modulus), 0)


def laurent_divmod(
    f: LaurentPolynomial, p: LaurentPolynomial
) -> Tuple[LaurentPolynomial, LaurentPolynomial]:
    """Return (q, r) with f = q*p + r and r = residue(f, p)."""
    r = residue(f, p)
    return exact_quotient(f - r, p), r


def normalize_alexander(p: LaurentPolynomial) -> LaurentPolynomial:
    """Multiply by the unit +-t^n giving a polynomial with positive constant term."""
    if p.is_zero:
        raise DegeneratePresentationError(
            "zero determinant: the presentation does not define a torsion module"
        )
    normal = LaurentPolynomial._from_parts(p.poly, 0)
    if _fraction(normal.poly.TC()) < 0:
        normal = -normal
    return normal


class RationalFunction:
    """Element of Q(t) as numerator / denominator.

    The denominator is a monic polynomial with nonzero constant term, coprime
    to the numerator; units of Q[t^+-1] live in the numerator.
    """

    __slots__ = ("_numerator", "_denominator")

    def __init__(self, numerator: LaurentLike, denominator: LaurentLike = 1):
        num = as_laurent(numerator)
        den = as_laurent(denominator)
        if den.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero:
            self._numerator = ZERO
            self._denominator = ONE
            return
        scale = Fraction(1) / _fraction(den.poly.LC())
        num = (num * scale).shifted(-den.shift)
        monic = den.poly.monic()
        common = num.poly.gcd(monic)
        if common.degree() > 0:
            num = LaurentPolynomial._from_parts(num.poly.exquo(common), num.shift)
            monic = monic.exquo(common)
        self._numerator = num
        self._denominator = LaurentPolynomial._from_parts(monic, 0)

    @classmethod
    def from_expr(cls, expr) -> "RationalFunction":
        """Build from a sympy expression in t."""
        numerator, denominator = sympy.fraction(sympy.cancel(sympy.together(expr)))
        return cls(
            LaurentPolynomial._from_parts(Poly(numerator, T, domain=QQ)),
            LaurentPolynomial._from_parts(Poly(denominator, T, domain=QQ)),
        )

    @property
    def numerator(self) -> LaurentPolynomial:
        return self._numerator

    @property
    def denominator(self) -> LaurentPolynomial:
        return self._denominator

    @property
    def is_zero(self) -> bool:
        return self._numerator.is_zero

    @property
    def is_laurent(self) -> bool:
        return self._denominator == ONE

    def involute(self) -> "RationalFunction":
        """Apply t -> t^-1 to numerator and denominator."""
        return RationalFunction(self._numerator.involute(), self._denominator.involute())

    @staticmethod
    def _coerce(other) -> Optional["RationalFunction"]:
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, (LaurentPolynomial, int, Fraction)):
            return RationalFunction(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self._denominator == other._denominator:
            return RationalFunction(self._numerator + other._numerator, self._denominator)
        return RationalFunction(
            self._numerator * other._denominator + other._numerator * self._denominator,
            self._denominator * other._denominator,
        )

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self._numerator, self._denominator)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RationalFunction(
            self._numerator * other._numerator, self._denominator * other._denominator
        )

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return (
            self._numerator == other._numerator
            and self._denominator == other._denominator
        )

    def __hash__(self) -> int:
        return hash((self._numerator, self._denominator))

    def to_json(self) -> Dict[str, Dict[str, str]]:
        return {
            "numerator": self._numerator.to_json(),
            "denominator": self._denominator.to_json(),
        }

    def __repr__(self) -> str:
        return f"RationalFunction({self._numerator!r}, {self._denominator!r})"

    def __str__(self) -> str:
        if self.is_laurent:
            return str(self._numerator)
        return f"({self._numerator})/({self._denominator})"


def _fractional_part(p: LaurentPolynomial) -> LaurentPolynomial:
    return LaurentPolynomial({e: c - math.floor(c) for e, c in p.coeffs.items()})


def lambda_membership(f: Union[RationalFunction, LaurentPolynomial]) -> bool:
    """True iff f lies in Z[t^+-1]."""
    if isinstance(f, LaurentPolynomial):
        return f.is_integral
    return f.is_laurent and f.numerator.is_integral


class TorsionClass:
    """Canonical representative of a class in Q(t)/Z[t^+-1].

    The representative is frac(q) + r/s where f = q + r/s, s is the monic
    denominator, deg r < deg s, r has no negative powers of t and frac reduces
    every coefficient of the Laurent part q into [0, 1).
    """

    __slots__ = ("_representative",)

    def __init__(self, representative: RationalFunction):
        self._representative = representative

    @classmethod
    def zero(cls) -> "TorsionClass":
        return cls(RationalFunction(0))

    @property
    def representative(self) -> RationalFunction:
        """Canonical proper fraction representing the class."""
        return self._representative

    @property
    def is_zero(self) -> bool:
        return self._representative.is_zero

    def conjugate(self) -> "TorsionClass":
        """Class of the involuted representative."""
        return torsion_reduce(self._representative.involute())

    def scaled(self, p: LaurentLike) -> "TorsionClass":
        """Class of p times this class."""
        return torsion_reduce(self._representative * as_laurent(p))

    def __add__(self, other: "TorsionClass") -> "TorsionClass":
        return torsion_reduce(self._representative + other._representative)

    def __neg__(self) -> "TorsionClass":
        return torsion_reduce(-self._representative)

    def __sub__(self, other: "TorsionClass") -> "TorsionClass":
        return torsion_reduce(self._representative - other._representative)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TorsionClass):
            return NotImplemented
        return self._representative == other._representative

    def __hash__(self) -> int:
        return hash(self._representative)

    def to_json(self) -> Dict[str, Dict[str, str]]:
        return self._representative.to_json()

    def __repr__(self) -> str:
        return f"TorsionClass({self._representative})"

    def __str__(self) -> str:
        return f"[{self._representative}]"


def torsion_reduce(f: Union[RationalFunction, LaurentPolynomial]) -> TorsionClass:
    """Canonical class of f in Q(t)/Z[t^+-1]."""
    if not isinstance(f, RationalFunction):
        f = RationalFunction(f)
    denominator = f.denominator
    if denominator == ONE:
        quotient, remainder = f.numerator, ZERO
    else:
        quotient, remainder = laurent_divmod(f.numerator, denominator)
    fractional = _fractional_part(quotient)
    return TorsionClass(RationalFunction(fractional * denominator + remainder, denominator))
