"""
Pointwise exterior algebra on the flat model C^2n.

A form is a sparse map from a monomial bitmask to a coefficient. Bit k
(0 <= k < 2n) stands for theta^k and bit 2n + k for thetabar^k; a stored
coefficient belongs to the canonical monomial theta^A ^ thetabar^B with
increasing indices. Indices are 0-based in code and 1-based in reports.

The inner product makes the monomials orthogonal with
<theta^A thetabar^B, theta^A thetabar^B> = 2^(|A|+|B|). With this
normalization the contraction i_k is the exact adjoint of e_k and
e_k i_k + i_k e_k = 2.

Operators are small expression trees (``Operator``). They act on ``Form``
values and componentwise on bundle valued forms (anything with a ``map``
method), support ``+``, ``-``, scalar ``*`` and composition ``*``, and
know their adjoint.
"""
from fractions import Fraction

from cloudmesh.hypercomplex.error import DimensionMismatch
from cloudmesh.hypercomplex.scalars import HALF
from cloudmesh.hypercomplex.scalars import I
from cloudmesh.hypercomplex.scalars import ONE
from cloudmesh.hypercomplex.scalars import Scalar
from cloudmesh.hypercomplex.scalars import ZERO
from cloudmesh.hypercomplex.scalars import is_zero
from cloudmesh.hypercomplex.scalars import random_scalar

STRUCTURES = ("I", "J", "K")


def popcount(mask):
    return bin(mask).count("1")


def bits(mask):
    """the set bits of mask in increasing order"""
    result = []
    index = 0
    while mask:
        if mask & 1:
            result.append(index)
        mask >>= 1
        index += 1
    return result


def monomial_sign(a, b):
    """
    sign of theta^a ^ theta^b relative to the canonical monomial a | b

    :param a: bitmask
    :param b: bitmask
    :return: 1, -1 or 0 if the monomials overlap
    """
    if a & b:
        return 0
    inversions = 0
    for y in bits(b):
        inversions += popcount(a >> (y + 1))
    return -1 if inversions % 2 else 1


def split(n, mask):
    """splits a monomial into its holomorphic and antiholomorphic index sets"""
    low = (1 << (2 * n)) - 1
    return mask & low, mask >> (2 * n)


def join(n, holomorphic, antiholomorphic):
    return holomorphic | (antiholomorphic << (2 * n))


def bidegree(n, mask):
    a, b = split(n, mask)
    return popcount(a), popcount(b)


def index_mask(indices):
    mask = 0
    for index in indices:
        mask |= 1 << index
    return mask


def basis(n, p=None, q=None):
    """
    canonical monomials of the algebra, optionally restricted to a bidegree

    :param n: quaternionic dimension
    :param p: holomorphic degree or None
    :param q: antiholomorphic degree or None
    :return: list of bitmasks in increasing order
    """
    masks = []
    for mask in range(1 << (4 * n)):
        pa, qa = bidegree(n, mask)
        if (p is None or pa == p) and (q is None or qa == q):
            masks.append(mask)
    return masks


def _accumulate(terms, mask, value):
    if mask in terms:
        terms[mask] = terms[mask] + value
    else:
        terms[mask] = value


class Form(object):
    """
    sparse differential form with coefficients in one of the exact rings
    """

    __slots__ = ("n", "coeffs")

    def __init__(self, n, coeffs=None):
        self.n = n
        self.coeffs = {}
        for mask, value in (coeffs or {}).items():
            if isinstance(value, (int, Fraction, str)):
                value = Scalar.coerce(value)
            if not is_zero(value):
                self.coeffs[mask] = value

    @classmethod
    def zero(cls, n):
        return cls(n)

    @classmethod
    def constant(cls, n, value=1):
        return cls(n, {0: value})

    @classmethod
    def monomial(cls, n, mask, value=1):
        return cls(n, {mask: value})

    @classmethod
    def from_indices(cls, n, holomorphic=(), antiholomorphic=(), value=1):
        """
        the form value * theta^a1 ^ ... ^ thetabar^b1 ^ ... with the
        indices in the given order

        :param n: quaternionic dimension
        :param holomorphic: 0-based indices of the theta factors
        :param antiholomorphic: 0-based indices of the thetabar factors
        :param value: the coefficient
        :return: Form
        """
        generators = list(holomorphic) + [2 * n + k for k in antiholomorphic]
        mask = 0
        sign = 1
        for g in generators:
            sign *= monomial_sign(mask, 1 << g)
            if sign == 0:
                return cls(n)
            mask |= 1 << g
        return cls(n, {mask: Scalar.coerce(value) * sign
                       if isinstance(value, (int, Fraction, str, Scalar))
                       else value * sign})

    @classmethod
    def random(cls, n, rng, coefficient=None, p=None, q=None, density=0.3):
        """
        a random form

        :param n: quaternionic dimension
        :param rng: random.Random
        :param coefficient: callable rng -> coefficient, Gaussian integers by
                            default
        :param p: restricts to holomorphic degree p
        :param q: restricts to antiholomorphic degree q
        :param density: probability that a monomial is present
        :return: Form
        """
        coefficient = coefficient or random_scalar
        coeffs = {}
        masks = basis(n, p, q)
        for mask in masks:
            if rng.random() < density:
                coeffs[mask] = coefficient(rng)
        if not coeffs:
            coeffs[rng.choice(masks)] = coefficient(rng)
        return cls(n, coeffs)

    def _check(self, other):
        if other.n != self.n:
            raise DimensionMismatch(f"forms on C^{2 * self.n} and C^{2 * other.n}")

    def __add__(self, other):
        if not isinstance(other, Form):
            return NotImplemented
        self._check(other)
        terms = dict(self.coeffs)
        for mask, value in other.coeffs.items():
            _accumulate(terms, mask, value)
        return Form(self.n, terms)

    def __neg__(self):
        return Form(self.n, {m: -v for m, v in self.coeffs.items()})

    def __sub__(self, other):
        if not isinstance(other, Form):
            return NotImplemented
        return self + (-other)

    def scale(self, c):
        """multiplies every coefficient by c (a scalar or a coefficient function)"""
        return Form(self.n, {m: v * c for m, v in self.coeffs.items()})

    def __mul__(self, c):
        if isinstance(c, Form):
            return NotImplemented
        return self.scale(c)

    __rmul__ = __mul__

    def wedge(self, other):
        return wedge(self, other)

    def conj(self):
        n = self.n
        terms = {}
        for mask, value in self.coeffs.items():
            a, b = split(n, mask)
            sign = -1 if (popcount(a) * popcount(b)) % 2 else 1
            terms[join(n, b, a)] = value.conj() * sign
        return Form(n, terms)

    def map_coefficients(self, fn):
        return Form(self.n, {m: fn(v) for m, v in self.coeffs.items()})

    def component(self, p, q):
        return Form(self.n, {m: v for m, v in self.coeffs.items()
                             if bidegree(self.n, m) == (p, q)})

    def bidegrees(self):
        return sorted({bidegree(self.n, m) for m in self.coeffs})

    def degree(self):
        """the total degree, for homogeneous forms"""
        degrees = {popcount(m) for m in self.coeffs}
        if len(degrees) > 1:
            raise ValueError("the form is not homogeneous")
        return degrees.pop() if degrees else 0

    def is_zero(self):
        return not self.coeffs

    def items(self):
        return sorted(self.coeffs.items())

    def coefficients(self):
        return [v for _, v in self.items()]

    def __eq__(self, other):
        if not isinstance(other, Form):
            return NotImplemented
        return self.n == other.n and self.coeffs == other.coeffs

    __hash__ = None

    def __str__(self):
        if not self.coeffs:
            return "0"
        return " + ".join(f"({v}){monomial_name(self.n, m)}"
                          for m, v in self.items())

    __repr__ = __str__


def monomial_name(n, mask):
    a, b = split(n, mask)
    names = [f"t{k + 1}" for k in bits(a)] + [f"tb{k + 1}" for k in bits(b)]
    return "*" + "^".join(names) if names else ""


def theta(n, k, value=1):
    return Form(n, {1 << k: Scalar.coerce(value)})


def theta_bar(n, k, value=1):
    return Form(n, {1 << (2 * n + k): Scalar.coerce(value)})


def wedge(alpha, beta):
    """
    exterior product of two forms

    :param alpha: Form
    :param beta: Form
    :return: Form
    """
    alpha._check(beta)
    terms = {}
    for ma, va in alpha.coeffs.items():
        for mb, vb in beta.coeffs.items():
            sign = monomial_sign(ma, mb)
            if sign:
                _accumulate(terms, ma | mb, va * vb * sign)
    return Form(alpha.n, terms)


def contract(k, bar, xi):
    """
    the contraction i_k (or ibar_k), the adjoint of e_k (or ebar_k)

    :param k: 0-based coframe index
    :param bar: True for the conjugate coframe
    :param xi: Form
    :return: Form
    """
    if not 0 <= k < 2 * xi.n:
        raise DimensionMismatch(f"index {k + 1} outside 1..{2 * xi.n}")
    return Contract(k + (2 * xi.n if bar else 0)).apply(xi)


def _generator_image(n, kind, g):
    """image of a single coframe generator under J or K"""
    holomorphic = g < 2 * n
    k = g % (2 * n)
    low = k < n
    partner = k + n if low else k - n
    if holomorphic:
        target = 2 * n + partner
    else:
        target = partner
    if kind == "J":
        value = ONE if low else -ONE
    else:
        # K = I J
        if holomorphic:
            value = -I if low else I
        else:
            value = I if low else -I
    return target, value


def _structure_monomial(n, kind, mask, inverse):
    if kind == "I":
        p, q = bidegree(n, mask)
        exponent = (q - p) if inverse else (p - q)
        return mask, I ** exponent
    value = ONE
    image = 0
    for g in bits(mask):
        target, c = _generator_image(n, kind, g)
        value = value * c * monomial_sign(image, 1 << target)
        image |= 1 << target
    if inverse and popcount(mask) % 2:
        value = -value
    return image, value


def apply_complex_structure(kind, xi, inverse=False):
    """
    applies I, J or K (or its inverse) extended multiplicatively to forms

    :param kind: "I", "J" or "K"
    :param xi: Form
    :param inverse: apply the inverse action
    :return: Form
    """
    return Structure(xi.n, kind, inverse).apply(xi)


def hodge_star(xi):
    """
    the conjugate linear Hodge star with <xi, eta> vol = xi ^ *eta

    :param xi: Form
    :return: Form
    """
    n = xi.n
    full = (1 << (2 * n)) - 1
    terms = {}
    for mask, value in xi.coeffs.items():
        a, b = split(n, mask)
        p, q = popcount(a), popcount(b)
        sign = monomial_sign(a, full ^ a) * monomial_sign(b, full ^ b)
        if ((2 * n - p) * q) % 2:
            sign = -sign
        factor = Fraction(2) ** (p + q - 2 * n) * sign
        _accumulate(terms, join(n, full ^ a, full ^ b), value.conj() * factor)
    return Form(n, terms)


def volume_form(n):
    return Form(n, {(1 << (4 * n)) - 1: Scalar(Fraction(1, 2 ** (2 * n)))})


def pointwise_inner(xi, eta):
    """
    the pointwise Hermitian inner product, linear in the first argument

    :param xi: Form
    :param eta: Form
    :return: a coefficient
    """
    xi._check(eta)
    total = ZERO
    for mask, value in xi.coeffs.items():
        if mask in eta.coeffs:
            total = value * eta.coeffs[mask].conj() * (2 ** popcount(mask)) + total
    return total


def omega(n, which):
    """
    the distinguished 2-forms omega_I, omega_J, omega_K and phi

    :param n: quaternionic dimension
    :param which: "I", "J", "K" or "phi"
    :return: Form
    """
    result = Form.zero(n)
    if which == "I":
        for j in range(2 * n):
            result = result + Form.from_indices(n, [j], [j], I * HALF)
        return result
    for k in range(n):
        hol = Form.from_indices(n, [k, k + n])
        anti = Form.from_indices(n, [], [k, k + n])
        if which == "J":
            result = result + (hol + anti).scale(HALF)
        elif which == "K":
            result = result + (anti - hol).scale(I * HALF)
        elif which == "phi":
            result = result + hol
        else:
            raise ValueError(f"Lefschetz form '{which}' not yet supported")
    return result


# ----------------------------------------------------------------------
# operators
# ----------------------------------------------------------------------


def zero_of(value):
    if isinstance(value, Form):
        return Form.zero(value.n)
    return value.map(lambda f: Form.zero(f.n))


def _is_scalar(c):
    return isinstance(c, (Scalar, int, Fraction))


class Operator(object):
    """
    Base of the operator expression trees. Subclasses implement ``apply``
    and ``adjoint``; everything else is derived.
    """

    def apply(self, value):
        """
        applies the operator

        :param value: a Form or a bundle valued form
        :return: the image, of the same type
        """
        raise NotImplementedError

    def adjoint(self, weight=None):
        """
        the formal adjoint for the pointwise inner product integrated against
        exp(-weight)

        :param weight: a real coefficient function or None for the flat pairing
        :return: Operator
        """
        raise NotImplementedError

    def __call__(self, value):
        return self.apply(value)

    def __add__(self, other):
        if not isinstance(other, Operator):
            return NotImplemented
        return Sum([self, other])

    def __sub__(self, other):
        if not isinstance(other, Operator):
            return NotImplemented
        return Sum([self, Scaled(-1, other)])

    def __neg__(self):
        return Scaled(-1, self)

    def __mul__(self, other):
        if isinstance(other, Operator):
            return Compose([self, other])
        if _is_scalar(other):
            return Scaled(other, self)
        return NotImplemented

    def __rmul__(self, other):
        if _is_scalar(other):
            return Scaled(other, self)
        return NotImplemented

    def conjugated(self):
        return Conjugated(self)

    def transform(self, fn):
        """
        rebuilds the tree with fn applied to every leaf

        :param fn: callable Operator -> Operator
        :return: Operator
        """
        return fn(self)


class FormOperator(Operator):
    """an operator defined on single forms, applied componentwise to bundle forms"""

    def apply(self, value):
        if isinstance(value, Form):
            return self.apply_form(value)
        return value.map(self.apply_form)

    def apply_form(self, xi):
        raise NotImplementedError


class MonomialOperator(FormOperator):
    """a constant coefficient operator given by its action on monomials"""

    def monomial(self, n, mask):
        """
        :return: list of (mask, Scalar) pairs
        """
        raise NotImplementedError

    def apply_form(self, xi):
        terms = {}
        for mask, value in xi.coeffs.items():
            for image, c in self.monomial(xi.n, mask):
                _accumulate(terms, image, value * c)
        return Form(xi.n, terms)


class Wedge(MonomialOperator):
    """e_g, left exterior multiplication by a coframe generator"""

    def __init__(self, g):
        self.g = g

    def monomial(self, n, mask):
        bit = 1 << self.g
        if mask & bit:
            return []
        sign = -1 if popcount(mask & (bit - 1)) % 2 else 1
        return [(mask | bit, Scalar(sign))]

    def adjoint(self, weight=None):
        return Contract(self.g)

    def __str__(self):
        return f"e[{self.g}]"


class Contract(MonomialOperator):
    """i_g, the adjoint of e_g"""

    def __init__(self, g):
        self.g = g

    def monomial(self, n, mask):
        bit = 1 << self.g
        if not mask & bit:
            return []
        sign = -2 if popcount(mask & (bit - 1)) % 2 else 2
        return [(mask ^ bit, Scalar(sign))]

    def adjoint(self, weight=None):
        return Wedge(self.g)

    def __str__(self):
        return f"i[{self.g}]"


def e_op(n, k, bar=False):
    """e_k or ebar_k for the 0-based coframe index k"""
    return Wedge(k + (2 * n if bar else 0))


def i_op(n, k, bar=False):
    """i_k or ibar_k for the 0-based coframe index k"""
    return Contract(k + (2 * n if bar else 0))


class Structure(MonomialOperator):

    def __init__(self, n, kind, inverse=False):
        if kind not in STRUCTURES:
            raise ValueError(f"complex structure '{kind}' not yet supported")
        self.n = n
        self.kind = kind
        self.inverse = inverse

    def monomial(self, n, mask):
        return [_structure_monomial(n, self.kind, mask, self.inverse)]

    def adjoint(self, weight=None):
        # I, J and K are unitary
        return Structure(self.n, self.kind, not self.inverse)

    def __str__(self):
        return self.kind + ("^-1" if self.inverse else "")


class WedgeBy(FormOperator):
    """e(alpha), left exterior multiplication by a fixed form"""

    def __init__(self, form):
        self.form = form

    def apply_form(self, xi):
        return wedge(self.form, xi)

    def adjoint(self, weight=None):
        terms = []
        for mask, value in self.form.items():
            contractions = [Contract(g) for g in reversed(bits(mask))]
            chain = Compose(contractions) if contractions else Identity()
            if _is_scalar(value):
                terms.append(Scaled(value.conj(), chain))
            else:
                terms.append(Compose([Multiply(value.conj()), chain]))
        return Sum(terms)

    def __str__(self):
        return f"e({self.form})"


class Multiply(FormOperator):
    """multiplication of every coefficient by a coefficient function"""

    def __init__(self, function):
        self.function = function

    def apply_form(self, xi):
        return xi.scale(self.function)

    def adjoint(self, weight=None):
        return Multiply(self.function.conj())

    def __str__(self):
        return f"({self.function})"


class Identity(Operator):

    def apply(self, value):
        return value

    def adjoint(self, weight=None):
        return self

    def __str__(self):
        return "1"


class Zero(Operator):

    def apply(self, value):
        return zero_of(value)

    def adjoint(self, weight=None):
        return self

    def __str__(self):
        return "0"


class Sum(Operator):

    def __init__(self, terms):
        self.terms = []
        for term in terms:
            if isinstance(term, Sum):
                self.terms.extend(term.terms)
            else:
                self.terms.append(term)

    def apply(self, value):
        if not self.terms:
            return zero_of(value)
        total = self.terms[0].apply(value)
        for term in self.terms[1:]:
            total = total + term.apply(value)
        return total

    def adjoint(self, weight=None):
        return Sum([term.adjoint(weight) for term in self.terms])

    def transform(self, fn):
        return Sum([term.transform(fn) for term in self.terms])

    def __str__(self):
        return "(" + " + ".join(str(t) for t in self.terms) + ")"


class Compose(Operator):
    """Compose([A, B, C]) is A o B o C, so C is applied first"""

    def __init__(self, factors):
        self.factors = []
        for factor in factors:
            if isinstance(factor, Compose):
                self.factors.extend(factor.factors)
            else:
                self.factors.append(factor)

    def apply(self, value):
        for factor in reversed(self.factors):
            value = factor.apply(value)
        return value

    def adjoint(self, weight=None):
        return Compose([f.adjoint(weight) for f in reversed(self.factors)])

    def transform(self, fn):
        return Compose([f.transform(fn) for f in self.factors])

    def __str__(self):
        return " ".join(str(f) for f in self.factors)


class Scaled(Operator):

    def __init__(self, c, operator):
        self.c = Scalar.coerce(c)
        self.operator = operator

    def apply(self, value):
        return self.operator.apply(value).scale(self.c)

    def adjoint(self, weight=None):
        return Scaled(self.c.conj(), self.operator.adjoint(weight))

    def transform(self, fn):
        return Scaled(self.c, self.operator.transform(fn))

    def __str__(self):
        return f"({self.c}) {self.operator}"


class Conjugated(Operator):
    """the operator xi -> conj(A(conj(xi)))"""

    def __init__(self, operator):
        self.operator = operator

    def apply(self, value):
        return self.operator.apply(value.conj()).conj()

    def adjoint(self, weight=None):
        return Conjugated(self.operator.adjoint(weight))

    def transform(self, fn):
        return Conjugated(self.operator.transform(fn))

    def __str__(self):
        return f"conj[{self.operator}]"


def commutator(a, b):
    """[a, b] = a b - b a"""
    return a * b - b * a


def anticommutator(a, b):
    return a * b + b * a


def lefschetz(n, which):
    """
    the Lefschetz operator of omega_I, omega_J, omega_K or phi together with
    its pointwise adjoint

    :param n: quaternionic dimension
    :param which: "I", "J", "K" or "phi"
    :return: (L, Lambda)
    """
    operator = WedgeBy(omega(n, which))
    return operator, operator.adjoint()


def _pair_contractions(n, bar):
    return Sum([Compose([i_op(n, k, bar), i_op(n, k + n, bar)])
                for k in range(n)])


def contraction(n, which):
    """
    The Lambda operator entering the commutator identities.

    Lambda_I and Lambda_K are the pointwise adjoints of L_I and L_K.
    Lambda_J is the summation formula 1/2 sum (i_k i_{k+n} + ibar_k
    ibar_{k+n}), which is minus the adjoint of L_J. Lambda_phi is
    1/2 (Lambda_J - i Lambda_K) = 1/2 sum ibar_k ibar_{k+n}.

    :param n: quaternionic dimension
    :param which: "I", "J", "K" or "phi"
    :return: Operator
    """
    if which in ("I", "K"):
        return lefschetz(n, which)[1]
    elif which == "J":
        return Scaled(HALF, _pair_contractions(n, False) +
                      _pair_contractions(n, True))
    elif which == "phi":
        return Scaled(HALF, _pair_contractions(n, True))
    raise ValueError(f"contraction '{which}' not yet supported")


def formula_operators(n):
    """
    The explicit summation formulas for the Lefschetz family as they are
    usually written down. They are kept next to the true adjoints so each
    identity can be evaluated with either.

    :param n: quaternionic dimension
    :return: dict name -> Operator
    """
    s = _pair_contractions(n, False)
    s_bar = _pair_contractions(n, True)
    l_i = Sum([Compose([e_op(n, k), e_op(n, k)]) +
               Compose([e_op(n, k + n, True), e_op(n, k + n, True)])
               for k in range(n)])
    l_j = Sum([Compose([e_op(n, k), e_op(n, k + n)]) +
               Compose([e_op(n, k, True), e_op(n, k + n, True)])
               for k in range(n)])
    lambda_i = Sum([Compose([i_op(n, j), i_op(n, j, True)])
                    for j in range(2 * n)])
    return {
        "L_I": Scaled(I * HALF, l_i),
        "L_J": Scaled(HALF, l_j),
        "Lambda_I": Scaled(I * HALF, lambda_i),
        "Lambda_J": Scaled(HALF, s + s_bar),
        "Lambda_K": Scaled(I * HALF, s - s_bar),
        "Lambda_phi": s_bar,
    }


def operator_matrix(operator, n, masks):
    """
    matrix of a constant coefficient operator on the span of the given
    monomials; entry [i][j] is the coefficient of masks[i] in the image of
    masks[j]

    :param operator: Operator
    :param n: quaternionic dimension
    :param masks: list of monomials
    :return: list of rows of Scalars
    """
    index = {mask: i for i, mask in enumerate(masks)}
    matrix = [[ZERO] * len(masks) for _ in masks]
    for j, mask in enumerate(masks):
        image = operator.apply(Form.monomial(n, mask))
        for target, value in image.coeffs.items():
            if target not in index:
                raise DimensionMismatch("the operator leaves the given span")
            matrix[index[target]][j] = value
    return matrix
