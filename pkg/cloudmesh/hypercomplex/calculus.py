"""
First order differential operators on forms of the flat model, their
formal adjoints and the identity tables relating them to the Lefschetz
family.

Differential operators are ordinary ``Operator`` trees whose leaves
include ``Partial``. Commutators are evaluated by applying both orders to
test forms, never by rewriting.
"""
import random
from fractions import Fraction

from cloudmesh.common.debug import VERBOSE

from cloudmesh.hypercomplex.error import ConfigError
from cloudmesh.hypercomplex.error import InvalidWeight
from cloudmesh.hypercomplex.exterior import Compose
from cloudmesh.hypercomplex.exterior import Conjugated
from cloudmesh.hypercomplex.exterior import Form
from cloudmesh.hypercomplex.exterior import FormOperator
from cloudmesh.hypercomplex.exterior import Multiply
from cloudmesh.hypercomplex.exterior import Scaled
from cloudmesh.hypercomplex.exterior import Structure
from cloudmesh.hypercomplex.exterior import Sum
from cloudmesh.hypercomplex.exterior import anticommutator
from cloudmesh.hypercomplex.exterior import basis
from cloudmesh.hypercomplex.exterior import commutator
from cloudmesh.hypercomplex.exterior import contraction
from cloudmesh.hypercomplex.exterior import e_op
from cloudmesh.hypercomplex.exterior import i_op
from cloudmesh.hypercomplex.exterior import pointwise_inner
from cloudmesh.hypercomplex.exterior import wedge
from cloudmesh.hypercomplex.relation import Relation
from cloudmesh.hypercomplex.relation import find_relation
from cloudmesh.hypercomplex.relation import relate_operators
from cloudmesh.hypercomplex.report import Report
from cloudmesh.hypercomplex.report import Row
from cloudmesh.hypercomplex.scalars import FourierPoly
from cloudmesh.hypercomplex.scalars import I
from cloudmesh.hypercomplex.scalars import Jet
from cloudmesh.hypercomplex.scalars import ONE
from cloudmesh.hypercomplex.scalars import Scalar
from cloudmesh.hypercomplex.scalars import ZERO
from cloudmesh.hypercomplex.scalars import is_zero
from cloudmesh.hypercomplex.scalars import monomial_exponents

DOLBEAULT = ("del", "delbar", "d", "dc",
             "del_J", "delbar_J", "del_K", "delbar_K", "d_J", "d_K")

DISPLAY = {
    "del": "∂",
    "delbar": "∂̄",
    "d": "d",
    "dc": "dᶜ",
    "del_J": "∂_J",
    "delbar_J": "∂̄_J",
    "del_K": "∂_K",
    "delbar_K": "∂̄_K",
    "d_J": "d_J",
    "d_K": "d_K",
}

CONJUGATE = {
    "del": "delbar",
    "delbar": "del",
    "del_J": "delbar_J",
    "delbar_J": "del_J",
    "del_K": "delbar_K",
    "delbar_K": "del_K",
}


def display(name, adjoint=False):
    """
    :param name: an operator name such as "delbar_J"
    :param adjoint: append the adjoint star
    :return: the name as usually written, e.g. ∂̄*_J
    """
    text = DISPLAY.get(name, name)
    if not adjoint:
        return text
    if "_" in text:
        base, index = text.split("_", 1)
        return f"{base}*_{index}"
    return text + "*"


class Partial(FormOperator):
    """the coefficientwise derivative d/dz^k or d/dzbar^k"""

    def __init__(self, k, bar=False):
        self.k = k
        self.bar = bar

    def apply_form(self, xi):
        if self.bar:
            return xi.map_coefficients(lambda f: f.dbar(self.k))
        return xi.map_coefficients(lambda f: f.d(self.k))

    def adjoint(self, weight=None):
        minus = Scaled(-1, Partial(self.k, not self.bar))
        if weight is None or is_zero(weight):
            return minus
        derivative = weight.d(self.k) if self.bar else weight.dbar(self.k)
        return Sum([minus, Multiply(derivative)])

    def __str__(self):
        return f"d{'bar' if self.bar else ''}[{self.k}]"


def _check_weight(phi):
    if phi is None:
        return None
    if isinstance(phi, (int, Fraction)):
        phi = Scalar(phi)
    if not phi.is_real():
        raise InvalidWeight("the weight must be a real function")
    return phi


def conjugate_by_weight(operator, phi):
    """
    the operator exp(phi) o D o exp(-phi), obtained by replacing every
    derivative d_k by d_k - (d_k phi)

    :param operator: Operator
    :param phi: a real coefficient function
    :return: Operator
    """
    phi = _check_weight(phi)
    if phi is None or is_zero(phi):
        return operator

    def rewrite(leaf):
        if isinstance(leaf, Partial):
            derivative = phi.dbar(leaf.k) if leaf.bar else phi.d(leaf.k)
            return Sum([leaf, Multiply(-derivative)])
        return leaf

    return operator.transform(rewrite)


def formal_adjoint(operator, phi=None):
    """
    the formal adjoint for the pairing of forms integrated against
    exp(-phi)

    :param operator: Operator
    :param phi: a real coefficient function or None
    :return: Operator
    """
    phi = _check_weight(phi)
    return operator.adjoint(weight=phi)


def dolbeault(n, which):
    """
    the Dolbeault type operators of the flat model

    :param n: quaternionic dimension
    :param which: one of DOLBEAULT
    :return: Operator
    """
    if which == "del":
        return Sum([e_op(n, l) * Partial(l) for l in range(2 * n)])
    elif which == "delbar":
        return Sum([e_op(n, l, True) * Partial(l, True) for l in range(2 * n)])
    elif which == "d":
        return dolbeault(n, "del") + dolbeault(n, "delbar")
    elif which == "dc":
        return Scaled(-I, dolbeault(n, "del") - dolbeault(n, "delbar"))
    elif which == "del_J":
        return Sum([e_op(n, k + n, True) * Partial(k) -
                    e_op(n, k, True) * Partial(k + n)
                    for k in range(n)])
    elif which == "delbar_J":
        return Sum([e_op(n, k + n) * Partial(k, True) -
                    e_op(n, k) * Partial(k + n, True)
                    for k in range(n)])
    elif which == "del_K":
        return Scaled(I, dolbeault(n, "del_J"))
    elif which == "delbar_K":
        return Scaled(-I, dolbeault(n, "delbar_J"))
    elif which == "d_J":
        return dolbeault(n, "del_J") + dolbeault(n, "delbar_J")
    elif which == "d_K":
        return dolbeault(n, "del_K") + dolbeault(n, "delbar_K")
    raise ValueError(f"Dolbeault operator '{which}' not yet supported")


def twisted(n, kind, operator, inverse_first=True):
    """
    S^-1 o D o S (inverse_first) or S o D o S^-1 for a complex structure S

    :param n: quaternionic dimension
    :param kind: "I", "J" or "K"
    :param operator: Operator
    :param inverse_first: which conjugation order
    :return: Operator
    """
    s = Structure(n, kind)
    s_inverse = Structure(n, kind, inverse=True)
    if inverse_first:
        return Compose([s_inverse, operator, s])
    return Compose([s, operator, s_inverse])


def printed_adjoint(n):
    """the adjoint of d written out as -sum dbar_k i_k"""
    return Scaled(-1, Sum([Partial(l, True) * i_op(n, l) for l in range(2 * n)]))


def twisted_adjoint_formula(n):
    """sum_k (-d_k i_(k+n) + d_(k+n) i_k), the intermediate form of delbar*_J"""
    return Sum([Scaled(-1, Partial(k) * i_op(n, k + n)) + Partial(k + n) * i_op(n, k)
                for k in range(n)])


# ----------------------------------------------------------------------
# test values
# ----------------------------------------------------------------------


def coefficient_monomials(n, arena, order=3, degree=1):
    """
    coefficient functions spanning polynomials of the given degree

    :param n: quaternionic dimension
    :param arena: "scalar", "jet" or "fourier"
    :param order: jet order
    :param degree: maximal degree (jets) or maximal frequency (fourier)
    :return: list of coefficients
    """
    nvars = 2 * n
    if arena == "scalar":
        return [ONE]
    elif arena == "jet":
        return [Jet.monomial(nvars, order, e)
                for e in monomial_exponents(nvars, degree)]
    elif arena == "fourier":
        modes = [(0,) * (2 * nvars)]
        for index in range(2 * nvars):
            for frequency in range(1, degree + 1):
                for sign in (1, -1):
                    mode = [0] * (2 * nvars)
                    mode[index] = sign * frequency
                    modes.append(tuple(mode))
        return [FourierPoly.mode(nvars, m) for m in modes]
    raise ValueError(f"arena '{arena}' not yet supported")


def random_coefficient(n, arena, rng, order=3, degree=1):
    nvars = 2 * n
    if arena == "jet":
        return Jet.random(nvars, order, rng)
    elif arena == "fourier":
        return FourierPoly.random(nvars, degree, rng)
    return Scalar(rng.randint(-2, 2), rng.randint(-2, 2))


def spanning_forms(n, arena, order=3, degree=1, masks=None):
    """
    all products of a monomial form with a coefficient monomial; for first
    order operators with constant coefficients this set is complete

    :return: list of Forms
    """
    masks = basis(n) if masks is None else masks
    coefficients = coefficient_monomials(n, arena, order, degree)
    return [Form.monomial(n, mask, c) for mask in masks for c in coefficients]


def random_forms(n, arena, trials, seed, order=3, degree=1, p=None, q=None):
    rng = random.Random(seed)
    return [Form.random(n, rng,
                        coefficient=lambda r: random_coefficient(
                            n, arena, r, order, degree),
                        p=p, q=q)
            for _ in range(trials)]


def arena_name(n, arena, order=3, degree=1):
    if arena == "jet":
        return f"jet n={n} order={order}"
    elif arena == "fourier":
        return f"fourier n={n} degree={degree}"
    return f"scalar n={n}"


# ----------------------------------------------------------------------
# weighted pairing
# ----------------------------------------------------------------------


class WeightedForm(object):
    """the form exp(exponent * phi) * form"""

    def __init__(self, exponent, form):
        self.exponent = Fraction(exponent)
        self.form = form

    def apply(self, operator, phi):
        """
        applies an operator, keeping the exponential factor symbolic

        :param operator: Operator
        :param phi: the weight
        :return: WeightedForm
        """
        if phi is None or self.exponent == 0:
            return WeightedForm(self.exponent, operator(self.form))
        inner = conjugate_by_weight(operator, phi * (-self.exponent))
        return WeightedForm(self.exponent, inner(self.form))


def integral(xi, eta):
    """
    the integral over the torus of the pointwise inner product

    :param xi: Form or bundle form with Fourier coefficients
    :param eta: same kind as xi
    :return: Scalar
    """
    if isinstance(xi, Form):
        value = pointwise_inner(xi, eta)
        return value.integrate() if isinstance(value, FourierPoly) else value
    total = ZERO
    for a, b in zip(xi.components, eta.components):
        total = total + integral(a, b)
    return total


def weighted_pairing(u, v, phi=None):
    """
    the pairing of two weighted forms against exp(-phi); it is computed
    exactly when the exponents add up to one

    :param u: WeightedForm
    :param v: WeightedForm
    :param phi: the weight
    :return: Scalar
    """
    if phi is not None and not is_zero(phi) and u.exponent + v.exponent != 1:
        raise InvalidWeight("exact pairing needs exponents adding up to 1")
    return integral(u.form, v.form)


def adjoint_relation(operator, phi, forms_u, forms_v):
    """
    relation between (D u, v) and (u, D* v) for the weighted pairing

    :return: Relation
    """
    adjoint = formal_adjoint(operator, phi)
    pairs = []
    for f in forms_u:
        u = WeightedForm(1 if phi is not None else 0, f)
        du = u.apply(operator, phi)
        for g in forms_v:
            v = WeightedForm(0, g)
            pairs.append((weighted_pairing(du, v, phi),
                          weighted_pairing(u, v.apply(adjoint, phi), phi)))
    return find_relation(pairs)


# ----------------------------------------------------------------------
# identity tables
# ----------------------------------------------------------------------

# Lefschetz operator, operator, printed coefficient, adjoint, coefficient
# that holds with the Lambda operators of exterior.contraction
TWISTED_TABLE = [
    ("J", "del", ONE, "delbar_J", ONE),
    ("K", "del", -ONE, "delbar_K", -ONE),
    ("I", "del_J", I, "delbar_J", -I),
    ("J", "del_J", -ONE, "delbar", -ONE),
    ("K", "del_J", I, "delbar", -I),
    ("I", "del_K", I, "delbar_K", -I),
    ("K", "del_K", ONE, "delbar", ONE),
    ("J", "del_K", -I, "delbar", -I),
]

HODGE_TABLE = [
    ("I", "del", I, "delbar", I),
]


def _coefficient_text(c):
    if c == ONE:
        return ""
    if c == -ONE:
        return "−"
    if c == I:
        return "i"
    if c == -I:
        return "−i"
    return f"({c})"


def conjugate_rows(table):
    """the conjugate column: swap del and delbar, conjugate the coefficients"""
    return [(lam, CONJUGATE[op], printed.conj(), CONJUGATE[adj], holds.conj())
            for lam, op, printed, adj, holds in table]


def identity_text(lam, op, c, adj):
    return f"[Λ_{lam}, {display(op)}] = {_coefficient_text(c)}{display(adj, True)}"


def table_rows(table, relate, arena, text=identity_text):
    """
    one row per entry stating the identity with the coefficient that holds,
    and a row marked "as printed" where the printed coefficient differs;
    that row expects the ratio of the two coefficients

    :param table: entries (lam, op, printed, adj, holds)
    :param relate: function (lam, op, c, adj) -> Relation of
                   [Lambda_lam, op] against c adj
    :param arena: the arena name
    :param text: function (lam, op, c, adj) -> str
    :return: list of Rows
    """
    rows = []
    for lam, op, printed, adj, holds in table:
        statement = text(lam, op, holds, adj)
        VERBOSE(statement)
        rows.append(Row(row=statement,
                        identity=statement,
                        arena=arena,
                        expected=Relation(1),
                        observed=relate(lam, op, holds, adj)))
        if printed != holds:
            statement = text(lam, op, printed, adj)
            rows.append(Row(row=f"as printed: {statement}",
                            identity=statement,
                            arena=arena,
                            expected=Relation(holds * printed.inverse()),
                            observed=relate(lam, op, printed, adj)))
    return rows


def _table_rows(suite, n, table, values, arena):
    report = Report(suite)
    lambdas = {kind: contraction(n, kind) for kind in ("I", "J", "K")}

    def relate(lam, op, c, adj):
        return relate_operators(commutator(lambdas[lam], dolbeault(n, op)),
                                Scaled(c, formal_adjoint(dolbeault(n, adj))),
                                values)

    for row in table_rows(table, relate, arena):
        report.add(row)
    return report


def _test_values(n, trials, seed, order, degree):
    return (spanning_forms(n, "jet", order, degree) +
            random_forms(n, "jet", trials, seed, order))


def verify_hodge_identities(n, trials=4, seed=0, order=3, degree=1):
    """
    [Λ, ∂] = i∂̄* and [Λ, ∂̄] = −i∂* on the monomial spanning set and random
    jet forms, with a negative control that drops the factor 1/2 of Λ

    :return: Report
    """
    values = _test_values(n, trials, seed, order, degree)
    arena = arena_name(n, "jet", order)
    report = _table_rows("hodge", n, HODGE_TABLE + conjugate_rows(HODGE_TABLE),
                         values, arena)
    lam = contraction(n, "I")
    wrong = commutator(Scaled(2, lam), dolbeault(n, "del"))
    rhs = Scaled(I, formal_adjoint(dolbeault(n, "delbar")))
    report.add(Row(row="[Λ_I, ∂] = i∂̄* with Λ_I doubled",
                   identity="[Λ_I, ∂] = i∂̄*",
                   arena=arena,
                   expected=Relation(1),
                   observed=relate_operators(wrong, rhs, values),
                   negated=True))
    return report


def verify_twisted_table(n, trials=4, seed=0, order=3, degree=1):
    """
    the sixteen commutators of the Lefschetz family with the twisted
    Dolbeault operators, the intermediate formula of ∂̄*_J and the
    conjugation symmetry between the two columns

    :return: Report
    """
    values = _test_values(n, trials, seed, order, degree)
    arena = arena_name(n, "jet", order)
    table = TWISTED_TABLE + conjugate_rows(TWISTED_TABLE)
    report = _table_rows("twisted", n, table, values, arena)

    lam_j = contraction(n, "J")
    report.add(Row(row="[Λ_J, ∂] = Σ(−∂_k i_{k+n} + ∂_{k+n} i_k)",
                   identity="[Λ_J, ∂] = Σ(−∂_k i_{k+n} + ∂_{k+n} i_k)",
                   arena=arena,
                   expected=Relation(1),
                   observed=relate_operators(commutator(lam_j, dolbeault(n, "del")),
                                             twisted_adjoint_formula(n),
                                             values)))
    report.add(Row(row="Σ(−∂_k i_{k+n} + ∂_{k+n} i_k) = ∂̄*_J",
                   identity="Σ(−∂_k i_{k+n} + ∂_{k+n} i_k) = ∂̄*_J",
                   arena=arena,
                   expected=Relation(1),
                   observed=relate_operators(twisted_adjoint_formula(n),
                                             formal_adjoint(dolbeault(n, "delbar_J")),
                                             values)))

    lambdas = {kind: contraction(n, kind) for kind in ("I", "J", "K")}
    for lam, op, _, _, _ in TWISTED_TABLE:
        left = Conjugated(commutator(lambdas[lam], dolbeault(n, op)))
        right = commutator(lambdas[lam], dolbeault(n, CONJUGATE[op]))
        text = f"conj [Λ_{lam}, {display(op)}] conj = [Λ_{lam}, {display(CONJUGATE[op])}]"
        report.add(Row(row=text,
                       identity=text,
                       arena=arena,
                       expected=Relation(1),
                       observed=relate_operators(left, right, values)))
    return report


def verify_dolbeault_invariants(n, trials=4, seed=0, order=3, degree=1):
    """
    nilpotency, anticommutation, decomposition, conjugation and Leibniz
    relations of the Dolbeault type operators on jet forms

    :return: Report
    """
    report = Report("dolbeault")
    values = _test_values(n, trials, seed, order, degree)
    arena = arena_name(n, "jet", order)
    op = {name: dolbeault(n, name) for name in DOLBEAULT}
    zero = Sum([])

    checks = [
        ("∂² = 0", op["del"] * op["del"], zero, 1),
        ("∂̄² = 0", op["delbar"] * op["delbar"], zero, 1),
        ("∂∂̄ + ∂̄∂ = 0", anticommutator(op["del"], op["delbar"]), zero, 1),
        ("∂̄∂_J + ∂_J∂̄ = 0", anticommutator(op["delbar"], op["del_J"]), zero, 1),
        ("d = ∂ + ∂̄", op["d"], op["del"] + op["delbar"], 1),
        ("dᶜ = −i(∂ − ∂̄)", op["dc"], Scaled(-I, op["del"] - op["delbar"]), 1),
        ("d_J = ∂_J + ∂̄_J", op["d_J"], op["del_J"] + op["delbar_J"], 1),
        ("∂̄_J = conj ∂_J conj", op["delbar_J"], Conjugated(op["del_J"]), 1),
        ("∂̄_K = conj ∂_K conj", op["delbar_K"], Conjugated(op["del_K"]), 1),
        ("J d J⁻¹ = ∂_J + ∂̄_J", twisted(n, "J", op["d"], inverse_first=False),
         op["d_J"], 1),
        ("as printed: J⁻¹ d J = ∂_J + ∂̄_J", twisted(n, "J", op["d"]), op["d_J"], -1),
        ("K⁻¹ d K = ∂_K + ∂̄_K", twisted(n, "K", op["d"]), op["d_K"], 1),
    ]
    for text, lhs, rhs, factor in checks:
        report.add(Row(row=text,
                       identity=text,
                       arena=arena,
                       expected=Relation(factor),
                       observed=relate_operators(lhs, rhs, values)))

    rng = random.Random(seed)
    pairs = []
    d_j = op["d_J"]
    for _ in range(max(trials, 1)):
        p, q = rng.randint(0, 2 * n), rng.randint(0, 2 * n)
        xi = random_forms(n, "jet", 1, rng.randint(0, 10 ** 9), order, p=p, q=q)[0]
        eta = random_forms(n, "jet", 1, rng.randint(0, 10 ** 9), order)[0]
        sign = -1 if (p + q) % 2 else 1
        pairs.append((d_j(wedge(xi, eta)),
                      wedge(d_j(xi), eta) + wedge(xi, d_j(eta)).scale(sign)))
    text = "d_J(ξ∧η) = d_Jξ∧η + (−1)^|ξ| ξ∧d_Jη"
    report.add(Row(row=text, identity=text, arena=arena,
                   expected=Relation(1), observed=find_relation(pairs)))
    return report


def weight_polynomial(n, terms):
    """
    the real weight phi = sum amplitude * cos(m.x)

    :param n: quaternionic dimension
    :param terms: list of (mode, amplitude), a mode has 4n entries
    :return: FourierPoly in 2n variables
    """
    nvars = 2 * n
    phi = FourierPoly(nvars)
    for mode, amplitude in terms:
        if len(mode) != 2 * nvars:
            raise ConfigError(f"the phi mode {' '.join(map(str, mode))} needs "
                              f"{2 * nvars} entries for n = {n}")
        phi = phi + FourierPoly.cosine(nvars, mode, amplitude)
    return phi


def weight_name(terms):
    if not terms:
        return "φ = 0"
    parts = []
    for mode, amplitude in terms:
        a = "" if amplitude == 1 else f"{amplitude} "
        parts.append(a + "cos(" + " ".join(map(str, mode)) + ")")
    return "φ = " + " + ".join(parts)


def default_weights(n):
    """three weights: zero, one cosine mode and two cosine modes"""
    size = 4 * n
    first = (1,) + (0,) * (size - 1)
    second = (0, 0, 1) + (0,) * (size - 3)
    return [[], [(first, 1)], [(first, 1), (second, Fraction(1, 2))]]


def weight_family(n):
    """:return: list of (name, FourierPoly or None) for the default weights"""
    return [(weight_name(terms), weight_polynomial(n, terms) if terms else None)
            for terms in default_weights(n)]


def verify_adjoints(n=1, trials=3, seed=0, degree=1, weights=None):
    """
    (D u, v) = (u, D* v) by exact torus integration, flat and weighted

    :param weights: list of (name, real FourierPoly or None), by default
                    zero, one cosine mode and two cosine modes
    :return: Report
    """
    report = Report("adjoint")
    nvars = 2 * n
    weights = weights or weight_family(n)
    rng = random.Random(seed)
    forms_u = random_forms(n, "fourier", trials, rng.randint(0, 10 ** 9), degree=degree)
    forms_v = random_forms(n, "fourier", trials, rng.randint(0, 10 ** 9), degree=degree)
    arena = arena_name(n, "fourier", degree=degree)
    for label, phi in weights:
        for name in ("del", "delbar", "del_J", "delbar_J", "del_K", "delbar_K"):
            text = f"({display(name)}u, v) = (u, {display(name, True)}v), {label}"
            report.add(Row(row=text,
                           identity=text,
                           arena=arena,
                           expected=Relation(1),
                           observed=adjoint_relation(dolbeault(n, name), phi,
                                                     forms_u, forms_v)))

    values = spanning_forms(n, "jet", 3, 1)
    text = "∂* = −Σ ∂̄_k i_k"
    report.add(Row(row=text, identity=text, arena=arena_name(n, "jet"),
                   expected=Relation(1),
                   observed=relate_operators(formal_adjoint(dolbeault(n, "del")),
                                             printed_adjoint(n), values)))

    # exp(phi) d_1 exp(-phi) with phi = z1 zbar1
    exponent = [0] * (2 * nvars)
    exponent[0] = exponent[nvars] = 1
    phi = Jet.monomial(nvars, 3, exponent)
    zbar = Jet.variable(nvars, 3, 0, bar=True)
    text = "e^φ ∂_1 e^−φ = ∂_1 − z̄¹, φ = z¹z̄¹"
    report.add(Row(row=text, identity=text, arena=arena_name(n, "jet"),
                   expected=Relation(1),
                   observed=relate_operators(conjugate_by_weight(Partial(0), phi),
                                             Partial(0) - Multiply(zbar),
                                             values)))
    return report
