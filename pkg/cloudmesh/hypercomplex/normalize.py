"""
Holomorphic normal coordinates for the jet of a Kähler metric.

Given g_(j kbar) = eps_j delta_jk + sum_l a_(jkl) z_l + conjugate terms +
O(|z|^2) of a closed real (1,1)-form, the change of coordinates

    z_k = w_k + 1/2 sum_(l,m) b_(klm) w_l w_m,   b_(klm) = -eps_k a_(lkm)

removes all terms of degree one from the metric.
"""
import random

import sympy
from cloudmesh.common.debug import VERBOSE

from cloudmesh.hypercomplex.error import ConfigError
from cloudmesh.hypercomplex.error import NotKahlerJet
from cloudmesh.hypercomplex.report import Report
from cloudmesh.hypercomplex.report import Row
from cloudmesh.hypercomplex.scalars import HALF
from cloudmesh.hypercomplex.scalars import Jet
from cloudmesh.hypercomplex.scalars import Scalar
from cloudmesh.hypercomplex.scalars import ZERO
from cloudmesh.hypercomplex.scalars import monomial_exponents
from cloudmesh.hypercomplex.scalars import random_scalar


def _unit(nvars, index):
    exponent = [0] * (2 * nvars)
    exponent[index] = 1
    return tuple(exponent)


def linear_coefficients(g):
    """a[j][k][l] is the coefficient of z_l in g[j][k]"""
    size = len(g)
    return [[[g[j][k].terms.get(_unit(size, l), ZERO) for l in range(size)]
              for k in range(size)] for j in range(size)]


def check_kahler_jet(g):
    """
    :param g: square matrix of Jets
    :return: the signs eps_k of the constant term
    :raises NotKahlerJet: if g is not the jet of a closed real (1,1)-form
                          with constant term diag(+-1)
    """
    size = len(g)
    for j in range(size):
        if len(g[j]) != size:
            raise NotKahlerJet("the metric jet is not square")
        for k in range(size):
            jet = g[j][k]
            if not isinstance(jet, Jet) or jet.nvars != size:
                raise NotKahlerJet(f"entry ({j + 1},{k + 1}) is not a jet in "
                                   f"{size} variables")
            if jet.order < 2:
                raise NotKahlerJet("the metric jet needs order 2 or more")
    for j in range(size):
        for k in range(size):
            if g[j][k] != g[k][j].conj():
                raise NotKahlerJet(f"reality fails: g({j + 1},{k + 1}) is not the "
                                   f"conjugate of g({k + 1},{j + 1})")
    signs = []
    for j in range(size):
        for k in range(size):
            constant = g[j][k].eval_at_origin()
            if j != k and not constant.is_zero():
                raise NotKahlerJet("the constant term is not diagonal")
        constant = g[j][j].eval_at_origin()
        if constant not in (1, -1):
            raise NotKahlerJet("the constant term is not diag(+-1)")
        signs.append(constant.re)
    a = linear_coefficients(g)
    for j in range(size):
        for k in range(size):
            for l in range(j + 1, size):
                if a[j][k][l] != a[l][k][j]:
                    raise NotKahlerJet(
                        f"closedness fails: the z{l + 1} coefficient of "
                        f"g({j + 1},{k + 1}) differs from the z{j + 1} "
                        f"coefficient of g({l + 1},{k + 1})")
    return signs


class Normalization(object):

    def __init__(self, signs, b, images, metric):
        """
        :param signs: eps_k
        :param b: b[k][l][m]
        :param images: the jets z_k(w) followed by their conjugates
        :param metric: the metric jet in the coordinates w
        """
        self.signs = signs
        self.b = b
        self.images = images
        self.metric = metric

    def degree_one_terms(self):
        result = []
        for j, row in enumerate(self.metric):
            for k, jet in enumerate(row):
                for exponent, value in jet.scalar_terms():
                    if sum(exponent) == 1:
                        result.append((j, k, exponent, value))
        return result

    @property
    def normal(self):
        return not self.degree_one_terms()

    def record(self):
        size = len(self.signs)
        coefficients = []
        for k in range(size):
            for l in range(size):
                for m in range(size):
                    if not self.b[k][l][m].is_zero():
                        coefficients.append(
                            {"b": f"{k + 1}{l + 1}{m + 1}", "value": str(self.b[k][l][m])})
        return {
            "record": "normalize",
            "signs": [str(s) for s in self.signs],
            "b": coefficients,
            "coordinates": [f"z{k + 1} = {self.images[k]}" for k in range(size)],
            "metric": [[str(jet) for jet in row] for row in self.metric],
            "normal": self.normal,
        }


def normalize_metric_jet(g):
    """
    moves a Kähler metric jet to coordinates in which it osculates to
    order 2

    :param g: square matrix of Jets, g[j][k] = g_(j kbar)
    :return: Normalization
    """
    signs = check_kahler_jet(g)
    size = len(g)
    order = min(jet.order for row in g for jet in row)
    a = linear_coefficients(g)
    b = [[[-signs[k] * a[l][k][m] for m in range(size)] for l in range(size)]
         for k in range(size)]

    images = []
    for k in range(size):
        image = Jet.variable(size, order, k)
        for l in range(size):
            for m in range(size):
                if b[k][l][m].is_zero():
                    continue
                exponent = [0] * (2 * size)
                exponent[l] += 1
                exponent[m] += 1
                image = image + Jet.monomial(size, order, exponent, HALF * b[k][l][m])
        images.append(image)
    images = images + [image.conj() for image in images]

    jacobian = [[images[a_].d(j) for j in range(size)] for a_ in range(size)]
    pulled = [[g[a_][c].substitute(images) for c in range(size)] for a_ in range(size)]
    metric = []
    for j in range(size):
        row = []
        for k in range(size):
            total = Jet(size, order - 1)
            for a_ in range(size):
                for c in range(size):
                    total = total + jacobian[a_][j] * pulled[a_][c] * jacobian[c][k].conj()
            row.append(total)
        metric.append(row)
    result = Normalization(signs, b, images, metric)
    VERBOSE(f"normalized metric jet, degree one terms left: "
            f"{len(result.degree_one_terms())}")
    return result


def potential_metric(potential, size):
    """g_(j kbar) = del_j delbar_k of a real potential"""
    return [[potential.d(j).dbar(k) for k in range(size)] for j in range(size)]


def random_kahler_jet(size, rng, order=2, bound=2, signs=None):
    """
    the metric of the potential sum eps_j |z_j|^2 + c + conj(c) with c a
    random polynomial of degree 3 to order + 2

    :return: square matrix of Jets of the given order
    """
    signs = signs or [1] * size
    top = order + 2
    terms = {}
    for j in range(size):
        exponent = [0] * (2 * size)
        exponent[j] = 1
        exponent[size + j] = 1
        terms[tuple(exponent)] = Scalar(signs[j])
    potential = Jet(size, top, terms)
    extra = {}
    for exponent in monomial_exponents(size, top):
        if sum(exponent) >= 3 and rng.random() < 0.3:
            extra[exponent] = random_scalar(rng, bound)
    extra = Jet(size, top, extra)
    return potential_metric(potential + extra + extra.conj(), size)


def jet_from_text(text, size, order):
    """
    parses a polynomial in z1..zN and zb1..zbN (the conjugates) with
    Gaussian rational coefficients, I is the imaginary unit

    :return: Jet
    """
    holomorphic = sympy.symbols(f"z1:{size + 1}")
    conjugate = sympy.symbols(f"zb1:{size + 1}")
    names = {str(s): s for s in holomorphic + conjugate}
    names["I"] = sympy.I
    try:
        expr = sympy.sympify(text, locals=names)
        polynomial = sympy.Poly(sympy.expand(expr), *(holomorphic + conjugate))
        terms = {exponent: Scalar.from_sympy(value)
                 for exponent, value in polynomial.terms()}
    except (sympy.SympifyError, sympy.PolynomialError, ValueError, TypeError) as e:
        raise ConfigError(f"can not read the jet '{text}': {e}")
    return Jet(size, order, terms)


def metric_from_values(values):
    """
    a metric jet from the flat scenario values::

        variables = 2
        order = 2
        g[1,1] = 1 + z1 + zb1
        g[1,2] = ...

    a missing entry below the diagonal is the conjugate of its mirror,
    other missing entries are zero

    :param values: dict key -> list of strings
    :return: square matrix of Jets
    """
    try:
        size = int(values["variables"][-1])
        order = int(values.get("order", ["2"])[-1])
    except (KeyError, ValueError):
        raise ConfigError("a metric jet needs 'variables' and an integer 'order'")
    g = [[None] * size for _ in range(size)]
    for key, texts in values.items():
        if not key.startswith("g["):
            continue
        try:
            j, k = [int(x) - 1 for x in key[2:-1].split(",")]
        except ValueError:
            raise ConfigError(f"malformed entry name '{key}'")
        if not (0 <= j < size and 0 <= k < size):
            raise ConfigError(f"entry '{key}' outside the {size} variables")
        g[j][k] = jet_from_text(texts[-1], size, order)
    for j in range(size):
        for k in range(size):
            if g[j][k] is None:
                if g[k][j] is not None and j > k:
                    g[j][k] = g[k][j].conj()
                else:
                    g[j][k] = Jet(size, order)
    return g


def verify_normalize(trials=10, seed=0, size=2, order=2):
    """
    normal coordinates for random closed real metric jets and rejection of
    jets failing reality or closedness

    :return: Report
    """
    report = Report("normalize")
    arena = f"jet N={size} order={order}"

    constant = [[Jet.constant(1, order)]]
    result = normalize_metric_jet(constant)
    text = "g = δ gives b = 0"
    report.add(Row(row=text, identity=text, arena="jet N=1",
                   expected=True,
                   observed=all(x.is_zero() for x in result.b[0][0]) and result.normal))

    g = [[Jet(1, order, {(0, 0): 1, (1, 0): 1, (0, 1): 1})]]
    result = normalize_metric_jet(g)
    text = "g = 1 + z1 + zb1 gives b111 = −1"
    report.add(Row(row=text, identity=text, arena="jet N=1",
                   expected="-1 True", observed=f"{result.b[0][0][0]} {result.normal}"))

    rng = random.Random(seed)
    normal = 0
    for trial in range(trials):
        signs = [rng.choice((1, -1)) for _ in range(size)]
        if normalize_metric_jet(random_kahler_jet(size, rng, order, signs=signs)).normal:
            normal += 1
    text = "z = w + ½Σ b w w removes the degree one terms"
    report.add(Row(row=text, identity=text, arena=arena,
                   expected=trials, observed=normal))

    one = Jet.constant(size, order)
    z2 = Jet.variable(size, order, 1)
    broken = [[one + z2 + z2.conj(), Jet(size, order)],
              [Jet(size, order), one]]
    unreal = [[one + Jet.variable(size, order, 0), Jet(size, order)],
              [Jet(size, order), one]]
    for text, g in (("closedness violation is rejected", broken),
                    ("reality violation is rejected", unreal)):
        try:
            normalize_metric_jet(g)
            observed = "accepted"
        except NotKahlerJet:
            observed = "rejected"
        report.add(Row(row=text, identity=text, arena=arena,
                       expected="rejected", observed=observed))
    return report
