"""
Exact coefficient rings of the engine.

Three variants are provided, all with value semantics:

* ``Scalar``       complex number with rational real and imaginary part
* ``Jet``          truncated Taylor expansion at the origin in z and zbar
* ``FourierPoly``  finite Fourier series on the real torus

Every variant supports ``d(j)``, ``dbar(j)``, ``conj()``, ring arithmetic
and ``scalar_terms()``. Mixing a Jet with a FourierPoly raises
``VariantMismatch``; a Scalar acts on both as a constant.

Complex variables relate to the real torus coordinates by
z^j = x^(2j) + i x^(2j+1), so d_j = (d/dx^(2j) - i d/dx^(2j+1)) / 2.
"""
import itertools
import re
from fractions import Fraction
from types import MappingProxyType
from typing import Union

import sympy

from cloudmesh.hypercomplex.error import DimensionMismatch
from cloudmesh.hypercomplex.error import NotDifferentiable
from cloudmesh.hypercomplex.error import NotInvertible
from cloudmesh.hypercomplex.error import VariantMismatch

_RATIONAL_TYPES = (int, Fraction)


class Scalar(object):
    """
    exact complex rational
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        if isinstance(re, Scalar):
            re, im = re.re, re.im + Fraction(im)
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, key, value):
        raise AttributeError("Scalar is immutable")

    @staticmethod
    def parse(text):
        """
        parses a scalar written as "3/4", "-2i", "1/2-3/4i" or "i"

        :param text: the string
        :return: Scalar
        """
        s = str(text).strip().replace(" ", "")
        if s == "":
            raise ValueError("empty scalar")
        if not s.endswith("i"):
            return Scalar(Fraction(s))
        body = s[:-1]
        split = max(body.rfind("+"), body.rfind("-"))
        if split <= 0:
            real, imag = "0", body
        else:
            real, imag = body[:split], body[split:]
        if imag in ("", "+"):
            imag = "1"
        elif imag == "-":
            imag = "-1"
        return Scalar(Fraction(real), Fraction(imag))

    @staticmethod
    def coerce(value):
        if isinstance(value, Scalar):
            return value
        if isinstance(value, _RATIONAL_TYPES):
            return Scalar(value)
        if isinstance(value, str):
            return Scalar.parse(value)
        if isinstance(value, complex):
            return Scalar(Fraction(value.real), Fraction(value.imag))
        raise TypeError(f"can not convert {value!r} to Scalar")

    def __add__(self, other):
        if isinstance(other, Scalar):
            return Scalar(self.re + other.re, self.im + other.im)
        if isinstance(other, _RATIONAL_TYPES):
            return Scalar(self.re + other, self.im)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return Scalar(-self.re, -self.im)

    def __sub__(self, other):
        if isinstance(other, (Scalar,) + _RATIONAL_TYPES):
            return self + (-Scalar.coerce(other))
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, _RATIONAL_TYPES):
            return Scalar(other) - self
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, Scalar):
            return Scalar(self.re * other.re - self.im * other.im,
                          self.re * other.im + self.im * other.re)
        if isinstance(other, _RATIONAL_TYPES):
            return Scalar(self.re * other, self.im * other)
        return NotImplemented

    __rmul__ = __mul__

    def inverse(self):
        norm = self.abs2()
        if norm == 0:
            raise NotInvertible("division by the zero scalar")
        return Scalar(self.re / norm, -self.im / norm)

    def __truediv__(self, other):
        if isinstance(other, (Scalar,) + _RATIONAL_TYPES):
            return self * Scalar.coerce(other).inverse()
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, _RATIONAL_TYPES):
            return Scalar(other) * self.inverse()
        return NotImplemented

    def __pow__(self, k):
        result = ONE
        base = self if k >= 0 else self.inverse()
        for _ in range(abs(k)):
            result = result * base
        return result

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.re == other.re and self.im == other.im
        if isinstance(other, _RATIONAL_TYPES):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im))

    def __lt__(self, other):
        # only defined on real scalars
        a, b = self, Scalar.coerce(other)
        if a.im != 0 or b.im != 0:
            raise TypeError("ordering is only defined for real scalars")
        return a.re < b.re

    def __le__(self, other):
        return self == other or self < other

    def __gt__(self, other):
        return not self <= other

    def __ge__(self, other):
        return not self < other

    def __bool__(self):
        return not self.is_zero()

    def conj(self):
        return Scalar(self.re, -self.im)

    def abs2(self):
        return self.re * self.re + self.im * self.im

    def is_zero(self):
        return self.re == 0 and self.im == 0

    def is_real(self):
        return self.im == 0

    # coefficient protocol

    order = None

    def d(self, j):
        return ZERO

    def dbar(self, j):
        return ZERO

    def eval_at_origin(self):
        return self

    def scalar_terms(self):
        return [((), self)] if not self.is_zero() else []

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def to_sympy(self):
        return sympy.Rational(self.re.numerator, self.re.denominator) + \
            sympy.I * sympy.Rational(self.im.numerator, self.im.denominator)

    @staticmethod
    def from_sympy(expr):
        re_part, im_part = sympy.nsimplify(expr).as_real_imag()
        if not (re_part.is_Rational and im_part.is_Rational):
            raise ValueError(f"{expr} is not a Gaussian rational")
        return Scalar(Fraction(int(re_part.p), int(re_part.q)),
                      Fraction(int(im_part.p), int(im_part.q)))

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            imag = "" if self.im == 1 else "-" if self.im == -1 else str(self.im)
            return f"{imag}i"
        imag = "" if abs(self.im) == 1 else str(abs(self.im))
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{imag}i"

    def __repr__(self):
        return f"Scalar({self})"


ZERO = Scalar(0)
ONE = Scalar(1)
I = Scalar(0, 1)
HALF = Scalar(Fraction(1, 2))


def random_scalar(rng, bound=2, real=False):
    """
    a random Gaussian integer with entries in [-bound, bound]

    :param rng: a random.Random instance
    :param bound: the bound
    :param real: if True the imaginary part is zero
    :return: Scalar
    """
    im = 0 if real else rng.randint(-bound, bound)
    return Scalar(rng.randint(-bound, bound), im)


def _degree(exponent):
    return sum(exponent)


class Jet(object):
    """
    Truncated power series in z^1..z^N and their conjugates.

    ``terms`` maps an exponent tuple of length 2N (z exponents first) to a
    Scalar. The jet is known modulo terms of total degree above ``order``;
    sums and products are known to the smaller order of the operands and
    derivatives lower the order by one.
    """

    __slots__ = ("nvars", "order", "terms")

    def __init__(self, nvars, order, terms=None):
        collected = {}
        for exponent, value in (terms or {}).items():
            value = Scalar.coerce(value)
            if len(exponent) != 2 * nvars:
                raise DimensionMismatch(
                    f"exponent {exponent} does not have length {2 * nvars}")
            if not value.is_zero() and _degree(exponent) <= order:
                collected[tuple(exponent)] = value
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "terms", MappingProxyType(collected))

    def __setattr__(self, key, value):
        raise AttributeError("Jet is immutable")

    @classmethod
    def constant(cls, nvars, order, value=1):
        return cls(nvars, order, {(0,) * (2 * nvars): Scalar.coerce(value)})

    @classmethod
    def variable(cls, nvars, order, j, bar=False, coefficient=1):
        exponent = [0] * (2 * nvars)
        exponent[j + (nvars if bar else 0)] = 1
        return cls(nvars, order, {tuple(exponent): Scalar.coerce(coefficient)})

    @classmethod
    def monomial(cls, nvars, order, exponent, coefficient=1):
        return cls(nvars, order, {tuple(exponent): Scalar.coerce(coefficient)})

    @classmethod
    def random(cls, nvars, order, rng, bound=2, density=0.5):
        terms = {}
        for exponent in monomial_exponents(nvars, order):
            if rng.random() < density:
                terms[exponent] = random_scalar(rng, bound)
        return cls(nvars, order, terms)

    def _coerce(self, other):
        if isinstance(other, Jet):
            if other.nvars != self.nvars:
                raise DimensionMismatch(
                    f"jets in {self.nvars} and {other.nvars} variables")
            return other
        if isinstance(other, (Scalar,) + _RATIONAL_TYPES):
            return Jet.constant(self.nvars, self.order, other)
        if isinstance(other, FourierPoly):
            raise VariantMismatch("can not combine a Jet with a FourierPoly")
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for exponent, value in other.terms.items():
            terms[exponent] = terms.get(exponent, ZERO) + value
        return Jet(self.nvars, min(self.order, other.order), terms)

    __radd__ = __add__

    def __neg__(self):
        return Jet(self.nvars, self.order,
                   {e: -v for e, v in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        if isinstance(other, (Scalar,) + _RATIONAL_TYPES):
            c = Scalar.coerce(other)
            return Jet(self.nvars, self.order,
                       {e: v * c for e, v in self.terms.items()})
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        order = min(self.order, other.order)
        terms = {}
        for ea, va in self.terms.items():
            da = _degree(ea)
            for eb, vb in other.terms.items():
                if da + _degree(eb) > order:
                    continue
                e = tuple(x + y for x, y in zip(ea, eb))
                terms[e] = terms.get(e, ZERO) + va * vb
        return Jet(self.nvars, order, terms)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (Scalar,) + _RATIONAL_TYPES):
            return self * Scalar.coerce(other).inverse()
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * jet_invert(other)

    def __pow__(self, k):
        result = Jet.constant(self.nvars, self.order)
        for _ in range(k):
            result = result * self
        return result

    def truncate(self, order):
        return Jet(self.nvars, min(order, self.order), self.terms)

    def conj(self):
        n = self.nvars
        return Jet(n, self.order,
                   {e[n:] + e[:n]: v.conj() for e, v in self.terms.items()})

    def _derive(self, index):
        if self.order <= 0:
            raise NotDifferentiable(
                "the derivative of an order 0 jet is not determined")
        terms = {}
        for e, v in self.terms.items():
            if e[index] == 0:
                continue
            lowered = list(e)
            lowered[index] -= 1
            terms[tuple(lowered)] = v * e[index]
        return Jet(self.nvars, self.order - 1, terms)

    def d(self, j):
        return self._derive(j)

    def dbar(self, j):
        return self._derive(self.nvars + j)

    def eval_at_origin(self):
        return self.terms.get((0,) * (2 * self.nvars), ZERO)

    def is_zero(self):
        return not self.terms

    def is_real(self):
        return self == self.conj()

    def scalar_terms(self):
        return sorted(self.terms.items())

    def substitute(self, images):
        """
        composes the jet with a change of variables

        :param images: 2N jets, the images of z^1..z^N, zbar^1..zbar^N
        :return: Jet of the same order
        """
        result = Jet(self.nvars, self.order)
        powers = {}
        for exponent, value in self.terms.items():
            term = Jet.constant(self.nvars, self.order, value)
            for index, power in enumerate(exponent):
                if power == 0:
                    continue
                key = (index, power)
                if key not in powers:
                    powers[key] = images[index].truncate(self.order) ** power
                term = term * powers[key]
            result = result + term
        return result

    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except (DimensionMismatch, VariantMismatch):
            return False
        if other is None:
            return NotImplemented
        order = min(self.order, other.order)
        return self.truncate(order).terms == other.truncate(order).terms

    __hash__ = None

    def __str__(self):
        if not self.terms:
            return f"0 + O({self.order + 1})"
        parts = []
        n = self.nvars
        for e, v in self.scalar_terms():
            factors = [f"z{j + 1}^{e[j]}" for j in range(n) if e[j]] + \
                      [f"zb{j + 1}^{e[n + j]}" for j in range(n) if e[n + j]]
            parts.append(f"({v})" + "".join("*" + f for f in factors))
        return " + ".join(parts) + f" + O({self.order + 1})"

    __repr__ = __str__


def monomial_exponents(nvars, order):
    """
    all exponents over z and zbar of total degree at most order, in a
    canonical order

    :param nvars: the number of complex variables
    :param order: the maximal degree
    :return: list of tuples
    """
    result = []
    for degree in range(order + 1):
        for combo in itertools.combinations_with_replacement(
                range(2 * nvars), degree):
            exponent = [0] * (2 * nvars)
            for index in combo:
                exponent[index] += 1
            result.append(tuple(exponent))
    return result


def jet_invert(h):
    """
    inverse of a jet with nonzero constant term by the truncated geometric
    series

    :param h: Jet
    :return: Jet with h * jet_invert(h) = 1 at the order of h
    """
    c = h.eval_at_origin()
    if c.is_zero():
        raise NotInvertible("the constant term of the jet is zero")
    u = h * c.inverse() - 1
    result = Jet.constant(h.nvars, h.order)
    power = Jet.constant(h.nvars, h.order)
    for _ in range(h.order):
        power = power * (-u)
        result = result + power
    return result * c.inverse()


class FourierPoly(object):
    """
    Finite Fourier series sum c_m exp(i m.x) on the real torus of dimension
    2N, with x^(2j) + i x^(2j+1) = z^j. Integration uses the normalized
    measure, so ``integrate`` returns the zero mode.
    """

    __slots__ = ("nvars", "terms")

    order = None

    def __init__(self, nvars, terms=None):
        collected = {}
        for mode, value in (terms or {}).items():
            value = Scalar.coerce(value)
            if len(mode) != 2 * nvars:
                raise DimensionMismatch(
                    f"mode {mode} does not have length {2 * nvars}")
            if not value.is_zero():
                collected[tuple(mode)] = value
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", MappingProxyType(collected))

    def __setattr__(self, key, value):
        raise AttributeError("FourierPoly is immutable")

    @classmethod
    def constant(cls, nvars, value=1):
        return cls(nvars, {(0,) * (2 * nvars): Scalar.coerce(value)})

    @classmethod
    def mode(cls, nvars, mode, coefficient=1):
        return cls(nvars, {tuple(mode): Scalar.coerce(coefficient)})

    @classmethod
    def cosine(cls, nvars, mode, amplitude=1):
        """amplitude * cos(m.x), a real function"""
        half = Scalar.coerce(amplitude) * HALF
        negative = tuple(-m for m in mode)
        return cls(nvars, {tuple(mode): half}) + cls(nvars, {negative: half})

    @classmethod
    def random(cls, nvars, degree, rng, count=3, bound=2):
        terms = {}
        for _ in range(count):
            mode = tuple(rng.randint(-degree, degree) for _ in range(2 * nvars))
            terms[mode] = terms.get(mode, ZERO) + random_scalar(rng, bound)
        return cls(nvars, terms)

    @classmethod
    def random_real(cls, nvars, degree, rng, count=2, bound=2):
        f = cls.random(nvars, degree, rng, count=count, bound=bound)
        return f + f.conj()

    def _coerce(self, other):
        if isinstance(other, FourierPoly):
            if other.nvars != self.nvars:
                raise DimensionMismatch(
                    f"Fourier series in {self.nvars} and {other.nvars} variables")
            return other
        if isinstance(other, (Scalar,) + _RATIONAL_TYPES):
            return FourierPoly.constant(self.nvars, other)
        if isinstance(other, Jet):
            raise VariantMismatch("can not combine a FourierPoly with a Jet")
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for mode, value in other.terms.items():
            terms[mode] = terms.get(mode, ZERO) + value
        return FourierPoly(self.nvars, terms)

    __radd__ = __add__

    def __neg__(self):
        return FourierPoly(self.nvars, {m: -v for m, v in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        if isinstance(other, (Scalar,) + _RATIONAL_TYPES):
            c = Scalar.coerce(other)
            return FourierPoly(self.nvars,
                               {m: v * c for m, v in self.terms.items()})
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = {}
        for ma, va in self.terms.items():
            for mb, vb in other.terms.items():
                m = tuple(x + y for x, y in zip(ma, mb))
                terms[m] = terms.get(m, ZERO) + va * vb
        return FourierPoly(self.nvars, terms)

    __rmul__ = __mul__

    def conj(self):
        return FourierPoly(self.nvars,
                           {tuple(-x for x in m): v.conj()
                            for m, v in self.terms.items()})

    def d(self, j):
        # (i m_2j + m_2j+1) / 2
        return FourierPoly(self.nvars, {
            m: v * Scalar(Fraction(m[2 * j + 1], 2), Fraction(m[2 * j], 2))
            for m, v in self.terms.items()})

    def dbar(self, j):
        # (i m_2j - m_2j+1) / 2
        return FourierPoly(self.nvars, {
            m: v * Scalar(Fraction(-m[2 * j + 1], 2), Fraction(m[2 * j], 2))
            for m, v in self.terms.items()})

    def integrate(self):
        return self.terms.get((0,) * (2 * self.nvars), ZERO)

    def eval_at_origin(self):
        total = ZERO
        for value in self.terms.values():
            total = total + value
        return total

    def is_zero(self):
        return not self.terms

    def is_real(self):
        return self == self.conj()

    def scalar_terms(self):
        return sorted(self.terms.items())

    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except (DimensionMismatch, VariantMismatch):
            return False
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({v})*e{list(m)}" for m, v in self.scalar_terms())

    __repr__ = __str__


CoeffFn = Union[Scalar, Jet, FourierPoly]


def variant(value):
    """
    name of the coefficient variant

    :param value: a coefficient
    :return: "scalar", "jet" or "fourier"
    """
    if isinstance(value, Jet):
        return "jet"
    if isinstance(value, FourierPoly):
        return "fourier"
    if isinstance(value, (Scalar,) + _RATIONAL_TYPES):
        return "scalar"
    raise VariantMismatch(f"{type(value).__name__} is not a coefficient")


def is_zero(value):
    return value.is_zero() if hasattr(value, "is_zero") else value == 0


def zero_like(value):
    if isinstance(value, Jet):
        return Jet(value.nvars, value.order)
    if isinstance(value, FourierPoly):
        return FourierPoly(value.nvars)
    return ZERO


def scalar_matrix_inverse(matrix):
    """
    exact inverse of a square matrix of Scalars

    :param matrix: list of rows
    :return: list of rows
    """
    m = sympy.Matrix([[Scalar.coerce(x).to_sympy() for x in row]
                      for row in matrix])
    if m.det() == 0:
        raise NotInvertible("singular constant matrix")
    inverse = m.inv()
    return [[Scalar.from_sympy(inverse[i, j]) for j in range(m.cols)]
            for i in range(m.rows)]
