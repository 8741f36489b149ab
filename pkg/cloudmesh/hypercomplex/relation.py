"""
Proportionality bookkeeping for identity checks.

An identity LHS = RHS is checked by evaluating both sides on a list of
test values and finding the exact scalar c with LHS = c * RHS on all of
them. The outcome is a ``Relation``: either a factor or
"not-proportional". A check passes when the observed relation equals the
expected one.
"""
from fractions import Fraction

from cloudmesh.common.debug import VERBOSE

from cloudmesh.hypercomplex.exterior import Form
from cloudmesh.hypercomplex.scalars import Jet
from cloudmesh.hypercomplex.scalars import ONE
from cloudmesh.hypercomplex.scalars import Scalar
from cloudmesh.hypercomplex.scalars import ZERO

NOT_PROPORTIONAL = "not-proportional"


class Relation(object):

    def __init__(self, factor=None, witness=None):
        """
        :param factor: the Scalar c, None if the sides are not proportional
        :param witness: a short description of the entry that decided it
        """
        self.factor = None if factor is None else Scalar.coerce(factor)
        self.witness = witness

    @classmethod
    def parse(cls, value):
        if isinstance(value, Relation):
            return value
        if value is None or str(value).strip() == NOT_PROPORTIONAL:
            return cls(None)
        return cls(Scalar.coerce(value))

    @property
    def proportional(self):
        return self.factor is not None

    def __eq__(self, other):
        if not isinstance(other, Relation):
            other = Relation.parse(other)
        return self.factor == other.factor

    __hash__ = None

    def __str__(self):
        return NOT_PROPORTIONAL if self.factor is None else f"c = {self.factor}"

    __repr__ = __str__


def _jet_orders(value, orders):
    if isinstance(value, Jet):
        orders.append(value.order)
    elif isinstance(value, Form):
        for coefficient in value.coeffs.values():
            _jet_orders(coefficient, orders)
    elif hasattr(value, "components"):
        for component in value.components:
            _jet_orders(component, orders)


def _terms(coefficient, order):
    if isinstance(coefficient, (int, Fraction)):
        coefficient = Scalar(coefficient)
    if isinstance(coefficient, Jet) and order is not None:
        coefficient = coefficient.truncate(order)
    result = {}
    for key, value in coefficient.scalar_terms():
        if not any(key):
            key = ()
        result[key] = value
    return result


def flatten(value, order=None):
    """
    the Scalar entries of a form, bundle form or coefficient

    :param value: the value
    :param order: truncation order applied to jet coefficients
    :return: dict key -> Scalar
    """
    if isinstance(value, Form):
        result = {}
        for mask, coefficient in value.coeffs.items():
            for key, entry in _terms(coefficient, order).items():
                result[(mask, key)] = entry
        return result
    if hasattr(value, "components"):
        result = {}
        for alpha, component in enumerate(value.components):
            for key, entry in flatten(component, order).items():
                result[(alpha,) + key] = entry
        return result
    return _terms(value, order)


def _describe(sample, key):
    return f"sample {sample}, entry {key}:"


def find_relation(pairs):
    """
    finds c with lhs = c * rhs over all pairs

    :param pairs: list of (lhs, rhs) values
    :return: Relation
    """
    orders = []
    for lhs, rhs in pairs:
        _jet_orders(lhs, orders)
        _jet_orders(rhs, orders)
    order = min(orders) if orders else None

    entries = []
    for sample, (lhs, rhs) in enumerate(pairs):
        left = flatten(lhs, order)
        right = flatten(rhs, order)
        for key in sorted(set(left) | set(right), key=repr):
            entries.append((sample, key, left.get(key, ZERO), right.get(key, ZERO)))

    factor = None
    for sample, key, left, right in entries:
        if not right.is_zero():
            factor = left / right
            break

    if factor is None:
        for sample, key, left, right in entries:
            if not left.is_zero():
                return Relation(None, _describe(sample, key) + f" lhs {left}, rhs 0")
        return Relation(ONE)

    for sample, key, left, right in entries:
        if left != factor * right:
            return Relation(None, _describe(sample, key) +
                            f" lhs {left}, rhs {right}, factor {factor}")
    VERBOSE(f"relation found: c = {factor}")
    return Relation(factor)


def relate_operators(lhs, rhs, values):
    """
    the relation between two operators on a list of test values

    :param lhs: Operator
    :param rhs: Operator
    :param values: forms or bundle forms
    :return: Relation
    """
    return find_relation([(lhs(value), rhs(value)) for value in values])
