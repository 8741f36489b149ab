"""
Pointwise curvature algebra.

Everything here works over exact scalars at a single point: the
commutators of quadratic wedge and contraction monomials, the expansion
of <e_x i_y xi, xi> in the coefficients of xi, and the two curvature
commutators <[e(i Theta), Lambda_I] xi, xi> and
<[e(Theta_J), Lambda_J] xi, xi> written as sums over curvature
components.

The coefficient sums carry the weights 2^|M| of the pointwise inner
product, so they are comparable with the operator side without any
hidden normalization. For generators x, y

    pair_sum(u, v, y, x) = sum over M without x, y of
                           2^(|M|+1) u_(M,y) conj(v_(M,x))

where u_(M,g) is the coefficient of theta_g ^ theta^M. Then
<e_x i_y u, v> = 2 pair_sum(u, v, y, x).
"""
import itertools
import random

import sympy
from cloudmesh.common.debug import VERBOSE

from cloudmesh.hypercomplex.bundle import BundleForm
from cloudmesh.hypercomplex.bundle import CurvatureTensor
from cloudmesh.hypercomplex.bundle import EndOperator
from cloudmesh.hypercomplex.bundle import end_wedge
from cloudmesh.hypercomplex.bundle import twisted_curvature_form
from cloudmesh.hypercomplex.exterior import Compose
from cloudmesh.hypercomplex.exterior import Form
from cloudmesh.hypercomplex.exterior import Identity
from cloudmesh.hypercomplex.exterior import Scaled
from cloudmesh.hypercomplex.exterior import Sum
from cloudmesh.hypercomplex.exterior import Zero
from cloudmesh.hypercomplex.exterior import basis
from cloudmesh.hypercomplex.exterior import commutator
from cloudmesh.hypercomplex.exterior import contraction
from cloudmesh.hypercomplex.exterior import e_op
from cloudmesh.hypercomplex.exterior import i_op
from cloudmesh.hypercomplex.exterior import lefschetz
from cloudmesh.hypercomplex.exterior import monomial_sign
from cloudmesh.hypercomplex.exterior import pointwise_inner
from cloudmesh.hypercomplex.exterior import popcount
from cloudmesh.hypercomplex.relation import Relation
from cloudmesh.hypercomplex.relation import find_relation
from cloudmesh.hypercomplex.report import Report
from cloudmesh.hypercomplex.report import Row
from cloudmesh.hypercomplex.scalars import I
from cloudmesh.hypercomplex.scalars import ONE
from cloudmesh.hypercomplex.scalars import Scalar
from cloudmesh.hypercomplex.scalars import ZERO

FLAVORS = ("ee-ii", "e-ebar-i-ibar", "ebar-ebar-ibar-ibar")


# ----------------------------------------------------------------------
# commutator case table
# ----------------------------------------------------------------------


def _ei(n, a, b, bar=True, c=1):
    """c e_a i_b, antiholomorphic by default"""
    return Scaled(c, Compose([e_op(n, a, bar), i_op(n, b, bar)]))


def _diagonal_term(n, first, second, sign):
    """sign * (4 - 2 e_first i_first - 2 e_second i_second)"""
    return Scaled(sign, Sum([Scaled(4, Identity()),
                             _ei(n, *first, c=-2),
                             _ei(n, *second, c=-2)]))


def commutator_case(n, p, q, k, flavor):
    """
    the closed form of a quadratic commutator

    ee-ii:               [ebar_p ebar_q, i_k i_(k+n)], k < n
    e-ebar-i-ibar:       [e_p ebar_q, i_k ibar_k], k < 2n
    ebar-ebar-ibar-ibar: [ebar_p ebar_q, ibar_k ibar_(k+n)], k < n

    :param n: quaternionic dimension
    :param p: 0-based index
    :param q: 0-based index
    :param k: 0-based index
    :param flavor: one of FLAVORS
    :return: Operator
    """
    if flavor == "ee-ii":
        return Zero()
    elif flavor == "e-ebar-i-ibar":
        if p != k and q != k:
            return Zero()
        if p == k and q != k:
            return _ei(n, q, k, c=-2)
        if q == k and p != k:
            return _ei(n, p, k, bar=False, c=-2)
        return _diagonal_term(n, (k, k, False), (k, k, True), 1)
    elif flavor == "ebar-ebar-ibar-ibar":
        m = k + n
        pair = (k, m)
        if p == q or (p not in pair and q not in pair):
            return Zero()
        if (p, q) == (k, m):
            return _diagonal_term(n, (k, k), (m, m), 1)
        if (p, q) == (m, k):
            return _diagonal_term(n, (k, k), (m, m), -1)
        if p == k:
            return _ei(n, q, m, c=-2)
        if q == k:
            return _ei(n, p, m, c=2)
        if p == m:
            return _ei(n, q, k, c=2)
        return _ei(n, p, k, c=-2)
    raise ValueError(f"commutator flavor '{flavor}' not yet supported")


def commutator_operator(n, p, q, k, flavor):
    """the commutator itself, computed from the wedge and contraction operators"""
    if flavor == "ee-ii":
        left = Compose([e_op(n, p, True), e_op(n, q, True)])
        right = Compose([i_op(n, k), i_op(n, k + n)])
    elif flavor == "e-ebar-i-ibar":
        left = Compose([e_op(n, p), e_op(n, q, True)])
        right = Compose([i_op(n, k), i_op(n, k, True)])
    elif flavor == "ebar-ebar-ibar-ibar":
        left = Compose([e_op(n, p, True), e_op(n, q, True)])
        right = Compose([i_op(n, k, True), i_op(n, k + n, True)])
    else:
        raise ValueError(f"commutator flavor '{flavor}' not yet supported")
    return commutator(left, right)


def four_index_formula(n, a, b, c, d):
    """
    [ebar_a ebar_b, ibar_c ibar_d] = 2 d_bc ebar_a ibar_d - 2 d_ac ebar_b ibar_d
        - 2 d_bd ebar_a ibar_c + 2 d_ad ebar_b ibar_c + 4 (d_bd d_ac - d_ad d_bc)
    """
    terms = []
    if b == c:
        terms.append(_ei(n, a, d, c=2))
    if a == c:
        terms.append(_ei(n, b, d, c=-2))
    if b == d:
        terms.append(_ei(n, a, c, c=-2))
    if a == d:
        terms.append(_ei(n, b, c, c=2))
    constant = 4 * ((b == d and a == c) - (a == d and b == c))
    if constant:
        terms.append(Scaled(constant, Identity()))
    return Sum(terms)


def _families(n):
    """(row id, flavor, triples) for every case of the table"""
    low = range(n)
    full = range(2 * n)

    def triples(indices_k, test):
        return [(p, q, k) for k in indices_k for p in full for q in full if test(p, q, k)]

    def outside(x, k):
        return x not in (k, k + n)

    return [
        ("[ē_pē_q, i_ki_{k+n}] = 0", "ee-ii",
         triples(low, lambda p, q, k: True)),
        ("[e_pē_q, i_kī_k] = 0, p,q ≠ k", "e-ebar-i-ibar",
         triples(full, lambda p, q, k: p != k and q != k)),
        ("[e_pē_q, i_kī_k] = −2ē_qī_k, p = k ≠ q", "e-ebar-i-ibar",
         triples(full, lambda p, q, k: p == k != q)),
        ("[e_pē_q, i_kī_k] = −2e_pi_k, q = k ≠ p", "e-ebar-i-ibar",
         triples(full, lambda p, q, k: q == k != p)),
        ("[e_kē_k, i_kī_k] = 4 − 2e_ki_k − 2ē_kī_k", "e-ebar-i-ibar",
         triples(full, lambda p, q, k: p == q == k)),
        ("[ē_pē_q, ī_kī_{k+n}] = 0, p,q ∉ {k,k+n}", "ebar-ebar-ibar-ibar",
         triples(low, lambda p, q, k: outside(p, k) and outside(q, k))),
        ("[ē_pē_q, ī_kī_{k+n}] = −2ē_qī_{k+n}, p = k", "ebar-ebar-ibar-ibar",
         triples(low, lambda p, q, k: p == k and outside(q, k))),
        ("[ē_pē_q, ī_kī_{k+n}] = 2ē_pī_{k+n}, q = k", "ebar-ebar-ibar-ibar",
         triples(low, lambda p, q, k: q == k and outside(p, k))),
        ("[ē_pē_q, ī_kī_{k+n}] = 2ē_qī_k, p = k+n", "ebar-ebar-ibar-ibar",
         triples(low, lambda p, q, k: p == k + n and outside(q, k))),
        ("[ē_pē_q, ī_kī_{k+n}] = −2ē_pī_k, q = k+n", "ebar-ebar-ibar-ibar",
         triples(low, lambda p, q, k: q == k + n and outside(p, k))),
        ("[ē_kē_{k+n}, ī_kī_{k+n}] = 4 − 2ē_kī_k − 2ē_{k+n}ī_{k+n}",
         "ebar-ebar-ibar-ibar",
         triples(low, lambda p, q, k: (p, q) == (k, k + n))),
        ("[ē_{k+n}ē_k, ī_kī_{k+n}] = −4 + 2ē_kī_k + 2ē_{k+n}ī_{k+n}",
         "ebar-ebar-ibar-ibar",
         triples(low, lambda p, q, k: (p, q) == (k + n, k))),
        ("[ē_pē_p, ī_kī_{k+n}] = 0", "ebar-ebar-ibar-ibar",
         triples(low, lambda p, q, k: p == q)),
    ]


def _case_pairs(n, flavor, triples, closed_form, masks):
    pairs = []
    for p, q, k in triples:
        lhs = commutator_operator(n, p, q, k, flavor)
        rhs = closed_form(n, p, q, k, flavor)
        for mask in masks:
            xi = Form.monomial(n, mask)
            pairs.append((lhs(xi), rhs(xi)))
    return pairs


def _mutated_case(n, p, q, k, flavor):
    if flavor == "ebar-ebar-ibar-ibar" and p == k and q not in (k, k + n):
        return _ei(n, q, k + n, c=2)
    return commutator_case(n, p, q, k, flavor)


def verify_commutator_cases(n):
    """
    every case of the quadratic commutator table as a matrix identity on
    the complete monomial basis

    :param n: quaternionic dimension
    :return: Report
    """
    report = Report("commutator")
    masks = basis(n)
    arena = f"scalar n={n} basis={len(masks)}"
    for text, flavor, triples in _families(n):
        VERBOSE(f"{text}: {len(triples)} index triples")
        report.add(Row(row=text, identity=text, arena=arena, expected=Relation(1),
                       observed=find_relation(_case_pairs(n, flavor, triples,
                                                          commutator_case, masks))))

    pairs = []
    for a, b, c, d in itertools.product(range(2 * n), repeat=4):
        lhs = commutator(Compose([e_op(n, a, True), e_op(n, b, True)]),
                         Compose([i_op(n, c, True), i_op(n, d, True)]))
        rhs = four_index_formula(n, a, b, c, d)
        for mask in masks:
            xi = Form.monomial(n, mask)
            pairs.append((lhs(xi), rhs(xi)))
    text = "[ē_aē_b, ī_cī_d] = 2δ_bcē_aī_d − 2δ_acē_bī_d − 2δ_bdē_aī_c + 2δ_adē_bī_c + 4(δ_bdδ_ac − δ_adδ_bc)"
    report.add(Row(row="[ē_aē_b, ī_cī_d] four index formula", identity=text,
                   arena=arena, expected=Relation(1), observed=find_relation(pairs)))

    text, flavor, triples = _families(n)[6]
    report.add(Row(row="[ē_pē_q, ī_kī_{k+n}] = +2ē_qī_{k+n}, p = k (sign flipped)",
                   identity=text, arena=arena, expected=Relation(1),
                   observed=find_relation(_case_pairs(n, flavor, triples,
                                                      _mutated_case, masks)),
                   negated=True))
    return report


# ----------------------------------------------------------------------
# inner product expansions
# ----------------------------------------------------------------------


def components(xi):
    if isinstance(xi, Form):
        return [xi]
    return list(xi.components)


def bundle_inner(xi, eta):
    """sum over the frame of the pointwise inner products"""
    total = ZERO
    for a, b in zip(components(xi), components(eta)):
        total = total + pointwise_inner(a, b)
    return total


def pair_sum(u, v, y, x):
    """
    sum over M without x, y of 2^(|M|+1) u_(M,y) conj(v_(M,x))

    :param u: Form with Scalar coefficients
    :param v: Form with Scalar coefficients
    :param y: generator index of the contracted factor of u
    :param x: generator index of the contracted factor of v
    :return: Scalar
    """
    total = ZERO
    ybit, xbit = 1 << y, 1 << x
    for mask, value in u.coeffs.items():
        if not mask & ybit:
            continue
        rest = mask ^ ybit
        if rest & xbit:
            continue
        other = v.coeffs.get(rest | xbit)
        if other is None:
            continue
        sign = monomial_sign(ybit, rest) * monomial_sign(xbit, rest)
        total = total + value * other.conj() * (sign * 2 ** (popcount(rest) + 1))
    return total


def inner_expansion(q, k, xi, bar=False):
    """
    both sides of <e_q i_k xi, xi> = 2 sum xi_(S,k) conj(xi_(S,q))

    :param q: 0-based coframe index of the wedge
    :param k: 0-based coframe index of the contraction
    :param xi: Form or BundleForm with Scalar coefficients
    :param bar: use the conjugate coframe
    :return: (operator value, coefficient sum)
    """
    n = components(xi)[0].n
    operator = Compose([e_op(n, q, bar), i_op(n, k, bar)])
    shift = 2 * n if bar else 0
    lhs = ZERO
    rhs = ZERO
    for component in components(xi):
        lhs = lhs + pointwise_inner(operator(component), component)
        rhs = rhs + pair_sum(component, component, k + shift, q + shift) * 2
    return lhs, rhs


class PointwiseState(object):
    """
    a curvature tensor with Scalar entries and a bundle valued form with
    Scalar coefficients at one point

    b(y, x)[b][a] and bbar(y, x)[b][a] are pair_sum(xi^b, xi^a, y, x) for
    the holomorphic and the conjugate coframe, norm[b][a] = <xi^b, xi^a>
    """

    def __init__(self, tensor, xi):
        if isinstance(xi, Form):
            xi = BundleForm([xi])
        if xi.rank != tensor.rank:
            raise ValueError("the form and the curvature have different rank")
        self.tensor = tensor
        self.xi = xi
        self.n = tensor.n
        self.rank = tensor.rank
        self._cache = {}

    def r(self, a, b, j, k):
        return self.tensor.entries[a][b][j][k]

    def b(self, y, x, beta, alpha):
        return self._pair(y, x, beta, alpha, 0)

    def bbar(self, y, x, beta, alpha):
        return self._pair(y, x, beta, alpha, 2 * self.n)

    def _pair(self, y, x, beta, alpha, shift):
        key = (y, x, beta, alpha, shift)
        if key not in self._cache:
            self._cache[key] = pair_sum(self.xi.components[beta],
                                        self.xi.components[alpha],
                                        y + shift, x + shift)
        return self._cache[key]

    def norm(self, beta, alpha):
        return pointwise_inner(self.xi.components[beta], self.xi.components[alpha])

    def frame(self):
        return itertools.product(range(self.rank), repeat=2)


def curvature_commutator_value(operator, xi):
    """(1/2) <A xi, xi> for an endomorphism valued operator A"""
    return bundle_inner(operator(xi), xi) * Scalar(1, 2)


def e_i_theta(tensor):
    """e(i Theta) = i sum R^a_(b p qbar) e_p ebar_q"""
    return end_wedge([[f.scale(I) for f in row] for row in tensor.form()])


def e_theta_j(tensor):
    """e(Theta_J) with Theta_J assembled from the components of R"""
    return end_wedge(twisted_curvature_form(tensor))


def kahler_commutator_sides(state):
    """
    (1/2) <[e(i Theta), Lambda_I] xi, xi> and its expansion
    sum R_(k qbar) bbar(k, q) + sum R_(p kbar) b(k, p) - sum R_(k kbar) norm

    :param state: PointwiseState
    :return: (operator value, formula value)
    """
    n = state.n
    lam = lefschetz(n, "I")[1]
    lhs = curvature_commutator_value(commutator(e_i_theta(state.tensor), lam), state.xi)
    rhs = ZERO
    for alpha, beta in state.frame():
        for k in range(2 * n):
            for q in range(2 * n):
                rhs = rhs + state.r(alpha, beta, k, q) * state.bbar(k, q, beta, alpha)
                rhs = rhs + state.r(alpha, beta, q, k) * state.b(k, q, beta, alpha)
            rhs = rhs - state.r(alpha, beta, k, k) * state.norm(beta, alpha)
    return lhs, rhs


def _tau(n, j):
    return j + n if j < n else j - n


def _sigma(n, j):
    return -1 if j < n else 1


def twisted_commutator_sides(state):
    """
    (1/2) <[e(Theta_J), Lambda_J] xi, xi> against its coefficient forms

    "expansion" is sum R_(j kbar) bbar(j, k)
    + sum s_j s_k R_(j kbar) bbar(t k, t j) - sum R_(k kbar) norm with
    t j = j +- n and s_j = -1 for j < n, +1 otherwise.
    "blocks" splits the expansion into six sums over index blocks and
    "regrouped" is (1/2) <S xi, xi> for the regrouped operator S.
    "printed blocks" are the eight sums of the usual printed form and
    "printed regrouped" its operator; both count the mixed terms
    R_(p q+nbar) and R_(p+n qbar) twice and the first and fourth sums
    are transposed, so they agree only when R is block diagonal.

    :param state: PointwiseState
    :return: dict
    """
    n = state.n
    lam = contraction(n, "J")
    operator = curvature_commutator_value(commutator(e_theta_j(state.tensor), lam),
                                          state.xi)
    expansion = ZERO
    for alpha, beta in state.frame():
        for j in range(2 * n):
            for k in range(2 * n):
                r = state.r(alpha, beta, j, k)
                if r.is_zero():
                    continue
                expansion = expansion + r * state.bbar(j, k, beta, alpha)
                expansion = expansion + r * state.bbar(_tau(n, k), _tau(n, j), beta, alpha) \
                    * (_sigma(n, j) * _sigma(n, k))
            expansion = expansion - state.r(alpha, beta, j, j) * state.norm(beta, alpha)

    blocks = [ZERO] * 6
    printed_blocks = [ZERO] * 8
    for alpha, beta in state.frame():
        def r(j, k):
            return state.r(alpha, beta, j, k)

        def bb(y, x):
            return state.bbar(y, x, beta, alpha)

        norm = state.norm(beta, alpha)
        for p in range(2 * n):
            for q in range(2 * n):
                blocks[0] = blocks[0] + r(p, q) * bb(p, q)
                printed_blocks[0] = printed_blocks[0] + r(p, q) * bb(q, p)
            blocks[1] = blocks[1] - r(p, p) * norm
            printed_blocks[1] = printed_blocks[1] - r(p, p) * norm
        for p in range(n):
            for q in range(n):
                blocks[2] = blocks[2] + r(p + n, q + n) * bb(q, p)
                blocks[3] = blocks[3] + r(p, q) * bb(q + n, p + n)
                blocks[4] = blocks[4] - r(p, q + n) * bb(q, p + n)
                blocks[5] = blocks[5] - r(p + n, q) * bb(q + n, p)
                printed_blocks[2] = printed_blocks[2] + r(p + n, q + n) * bb(q, p)
                printed_blocks[3] = printed_blocks[3] + r(p, q) * bb(p + n, q + n)
                printed_blocks[4] = printed_blocks[4] + r(p, q + n) * bb(p, q + n)
                printed_blocks[5] = printed_blocks[5] + r(p + n, q) * bb(p + n, q)
                printed_blocks[6] = printed_blocks[6] - r(p, q + n) * bb(q, p + n)
                printed_blocks[7] = printed_blocks[7] - r(p + n, q) * bb(q + n, p)

    def total(values):
        result = ZERO
        for value in values:
            result = result + value
        return result

    xi = state.xi
    return {"operator": operator,
            "expansion": expansion,
            "blocks": blocks,
            "block sum": total(blocks),
            "regrouped": curvature_commutator_value(regrouped_operator(state.tensor), xi),
            "printed blocks": printed_blocks,
            "printed": total(printed_blocks),
            "printed regrouped": curvature_commutator_value(
                regrouped_operator(state.tensor, printed=True), xi)}


def regrouped_operator(tensor, printed=False):
    """
    the operator
    sum_(p,q<2n) R_(p qbar) ebar_q ibar_p - 2 sum R_(k kbar)
    + sum_(p,q<n) (R_(p qbar) ebar_(p+n) ibar_(q+n) + R_(p+n q+nbar) ebar_p ibar_q)
    - sum_(p,q<n) (R_(p q+nbar) ebar_(p+n) ibar_q + R_(p+n qbar) ebar_p ibar_(q+n))
    as an endomorphism valued operator

    :param tensor: CurvatureTensor
    :param printed: also add R_(p q+nbar) ebar_(q+n) ibar_p and
                    R_(p+n qbar) ebar_q ibar_(p+n) once more, as in the
                    usual printed form
    :return: EndOperator
    """
    n = tensor.n
    rank = tensor.rank
    entries = []
    for alpha in range(rank):
        row = []
        for beta in range(rank):
            block = tensor.entries[alpha][beta]
            terms = []

            def add(c, a, b):
                if not c.is_zero():
                    terms.append(_ei(n, a, b, c=c))

            for p in range(2 * n):
                for q in range(2 * n):
                    add(block[p][q], q, p)
                if not block[p][p].is_zero():
                    terms.append(Scaled(block[p][p] * -2, Identity()))
            for p in range(n):
                for q in range(n):
                    add(block[p][q], p + n, q + n)
                    add(block[p + n][q + n], p, q)
                    add(-block[p][q + n], p + n, q)
                    add(-block[p + n][q], p, q + n)
                    if printed:
                        add(block[p][q + n], q + n, p)
                        add(block[p + n][q], q, p + n)
            row.append(Sum(terms) if terms else None)
        entries.append(row)
    return EndOperator(entries)


# ----------------------------------------------------------------------
# suites
# ----------------------------------------------------------------------


def random_states(n, rank, trials, seed, density=0.5):
    rng = random.Random(seed)
    return [PointwiseState(CurvatureTensor.random_hermitian(n, rank, rng),
                           BundleForm.random(n, rank, rng, density=density))
            for _ in range(trials)]


def diagonal_tensor(n, values):
    size = 2 * n
    return CurvatureTensor.from_line([[values[j] if j == k else 0 for k in range(size)]
                                      for j in range(size)])


def _unit_monomials(n, rank, p=None, q=None):
    return [BundleForm.from_form(Form.monomial(n, mask), alpha, rank)
            for mask in basis(n, p, q) for alpha in range(rank)]


def verify_inner_expansion(n, rank=1, trials=4, seed=0):
    """
    <e_q i_k xi, xi> against its coefficient sum, on both coframes

    :return: Report
    """
    report = Report("inner")
    arena = f"scalar n={n} r={rank}"
    rng = random.Random(seed)
    values = [BundleForm.random(n, rank, rng, density=0.5) for _ in range(trials)]
    values += _unit_monomials(n, rank)[:32]
    for bar in (False, True):
        pairs = [inner_expansion(q, k, xi, bar)
                 for xi in values for q in range(2 * n) for k in range(2 * n)]
        text = "⟨ē_qī_kξ, ξ⟩ = 2Σ ξ_(S,k) conj ξ_(S,q)" if bar \
            else "⟨e_qi_kξ, ξ⟩ = 2Σ ξ_(S,k) conj ξ_(S,q)"
        report.add(Row(row=text, identity=text, arena=arena, expected=Relation(1),
                       observed=find_relation(pairs)))

    theta_1 = Form.monomial(n, 1)
    lhs, rhs = inner_expansion(0, 0, theta_1)
    report.add(Row(row="⟨e_1i_1θ¹, θ¹⟩ = 4", identity="⟨e_1i_1θ¹, θ¹⟩ = 2·2", arena=arena,
                   expected=Relation(1),
                   observed=find_relation([(lhs, Scalar(4)), (rhs, Scalar(4))])))
    theta_2 = Form.monomial(n, 2)
    lhs, rhs = inner_expansion(0, 0, theta_2)
    report.add(Row(row="⟨e_1i_1θ², θ²⟩ = 0", identity="⟨e_1i_1θ², θ²⟩ = 0", arena=arena,
                   expected=Relation(1), observed=find_relation([(lhs, rhs)])))
    return report


def verify_kahler_commutator(n, rank=1, trials=4, seed=0):
    """
    (1/2) <[e(i Theta), Lambda_I] xi, xi> against its curvature expansion

    :return: Report
    """
    report = Report("kahler-curvature")
    arena = f"scalar n={n} r={rank}"
    text = "½⟨[e(iΘ), Λ]ξ, ξ⟩ = ΣR_{kq̄}B̄(k,q) + ΣR_{pk̄}B(k,p) − ΣR_{kk̄}|ξ|²"
    pairs = [kahler_commutator_sides(state)
             for state in random_states(n, rank, trials, seed)]
    report.add(Row(row=text, identity=text, arena=arena, expected=Relation(1),
                   observed=find_relation(pairs)))

    zero = CurvatureTensor(n, rank, [[[[ZERO] * (2 * n) for _ in range(2 * n)]
                                      for _ in range(rank)] for _ in range(rank)])
    pairs = [kahler_commutator_sides(PointwiseState(zero, state.xi))
             for state in random_states(n, rank, 2, seed + 1)]
    report.add(Row(row="½⟨[e(iΘ), Λ]ξ, ξ⟩ = 0 for Θ = 0", identity=text, arena=arena,
                   expected=Relation(1), observed=find_relation(pairs)))

    identity = CurvatureTensor.identity(n, 1)
    pairs = []
    for q in range(2 * n + 1):
        for mask in basis(n, 0, q):
            xi = Form.monomial(n, mask)
            lhs, _ = kahler_commutator_sides(PointwiseState(identity, xi))
            pairs.append((lhs, pointwise_inner(xi, xi) * (q - 2 * n)))
    row = "½⟨[e(iΘ), Λ]ξ, ξ⟩ = (q − 2n)|ξ|², R = 1, ξ ∈ Λ^{0,q}"
    report.add(Row(row=row, identity=text, arena=f"scalar n={n} r=1",
                   expected=Relation(1), observed=find_relation(pairs)))
    return report


def _blocks_text(blocks):
    return "blocks " + ", ".join(str(b) for b in blocks)


def verify_twisted_commutator(n, rank=1, trials=4, seed=0):
    """
    (1/2) <[e(Theta_J), Lambda_J] xi, xi> against the exact expansion, its
    block sum and the regrouped operator for dense Hermitian R, with the
    usual printed eight block sum and regrouped operator as separate rows

    :return: Report
    """
    report = Report("twisted-curvature")
    arena = f"scalar n={n} r={rank}"
    states = random_states(n, rank, trials, seed, density=0.6)
    sides = [twisted_commutator_sides(state) for state in states]
    operator = "½⟨[e(Θ_J), Λ_J]ξ, ξ⟩"

    rows = [
        (f"{operator} = ΣR_{{jk̄}}B̄(j,k) + Σs_js_kR_{{jk̄}}B̄(τk,τj) − ΣR_{{kk̄}}|ξ|²",
         "operator", "expansion"),
        (f"{operator} = six block sum", "operator", "block sum"),
        (f"{operator} = ½⟨Sξ, ξ⟩ regrouped", "operator", "regrouped"),
        ("six block sum = ½⟨Sξ, ξ⟩ regrouped", "block sum", "regrouped"),
    ]
    for text, left, right in rows:
        report.add(Row(row=text, identity=text, arena=arena, expected=Relation(1),
                       observed=find_relation([(s[left], s[right]) for s in sides])))

    # the printed forms count the mixed blocks twice
    for text, key in [(f"{operator} = eight block sum", "printed"),
                      (f"{operator} = ½⟨Sξ, ξ⟩ regrouped", "printed regrouped")]:
        row = report.add(Row(row=f"as printed, dense R: {text}", identity=text,
                             arena=arena, expected=Relation(None),
                             observed=find_relation([(s["operator"], s[key])
                                                     for s in sides])))
        if key == "printed" and sides:
            row.witness = _blocks_text(sides[0]["printed blocks"])

    zero = CurvatureTensor(n, rank, [[[[ZERO] * (2 * n) for _ in range(2 * n)]
                                      for _ in range(rank)] for _ in range(rank)])
    zero_sides = [twisted_commutator_sides(PointwiseState(zero, s.xi)) for s in states[:2]]
    report.add(Row(row=f"{operator} = 0 for Θ = 0", identity=operator, arena=arena,
                   expected=Relation(1),
                   observed=find_relation([(s["operator"], ZERO) for s in zero_sides] +
                                          [(s["printed"], ZERO) for s in zero_sides])))

    rng = random.Random(seed + 2)
    diagonal = [diagonal_tensor(n, [Scalar(rng.randint(1, 4)) for _ in range(2 * n)])
                for _ in range(2)]
    xis = [Form.random(n, rng, density=0.6) for _ in range(trials)]
    diagonal_sides = [twisted_commutator_sides(PointwiseState(t, xi))
                      for t in diagonal for xi in xis]
    arena_line = f"scalar n={n} r=1 diagonal"
    for text, key in [
        (f"{operator} = eight block sum, diagonal R", "printed"),
        (f"{operator} = ½⟨Sξ, ξ⟩ regrouped, diagonal R", "printed regrouped"),
    ]:
        report.add(Row(row=f"as printed: {text}", identity=text, arena=arena_line,
                       expected=Relation(1),
                       observed=find_relation([(s["operator"], s[key])
                                               for s in diagonal_sides])))

    full = []
    top = ((1 << (2 * n)) - 1) << (2 * n)
    for state in states:
        xi = BundleForm([_restrict_full_q(c) for c in state.xi.components])
        if xi.is_zero():
            xi = BundleForm.from_form(Form.monomial(n, top), 0, rank)
        full.append((state.tensor, xi))
    pairs_cancel = []
    pairs_value = []
    for tensor, xi in full:
        s = twisted_commutator_sides(PointwiseState(tensor, xi))
        b = s["blocks"]
        pairs_cancel.append((b[0] + b[1] + b[4] + b[5], ZERO))
        trace = ZERO
        state = PointwiseState(tensor, xi)
        for alpha, beta in state.frame():
            for k in range(2 * n):
                trace = trace + state.r(alpha, beta, k, k) * state.norm(beta, alpha)
        pairs_value.append((s["operator"], trace))
    arena_full = f"scalar n={n} r={rank} q=2n"
    text = "blocks 1, 2, 5 and 6 cancel on (p,2n)-forms"
    report.add(Row(row=text, identity=text, arena=arena_full, expected=Relation(1),
                   observed=find_relation(pairs_cancel)))
    text = f"{operator} = ΣR_{{kk̄}}|ξ|² on (p,2n)-forms"
    report.add(Row(row=text, identity=text, arena=arena_full, expected=Relation(1),
                   observed=find_relation(pairs_value)))
    return report


def _restrict_full_q(form):
    n = form.n
    full = ((1 << (2 * n)) - 1) << (2 * n)
    return Form(n, {mask: value for mask, value in form.coeffs.items()
                    if mask & full == full})


# ----------------------------------------------------------------------
# symbolic check
# ----------------------------------------------------------------------


def hermitian_basis(size):
    """a real basis of the Hermitian size x size matrices"""
    result = []
    for j in range(size):
        for k in range(j, size):
            if j == k:
                m = [[ZERO] * size for _ in range(size)]
                m[j][j] = ONE
                result.append(m)
                continue
            m = [[ZERO] * size for _ in range(size)]
            m[j][k] = m[k][j] = ONE
            result.append(m)
            m = [[ZERO] * size for _ in range(size)]
            m[j][k] = I
            m[k][j] = -I
            result.append(m)
    return result


def symbolic_relation(pairs):
    """
    the relation between pairs of sympy expressions

    :param pairs: list of (lhs, rhs) sympy expressions
    :return: Relation
    """
    factor = None
    for index, (lhs, rhs) in enumerate(pairs):
        lhs, rhs = sympy.expand(lhs), sympy.expand(rhs)
        if rhs == 0:
            if lhs != 0:
                return Relation(None, f"sample {index}: lhs {lhs}, rhs 0")
            continue
        ratio = sympy.cancel(lhs / rhs)
        if ratio.free_symbols:
            return Relation(None, f"sample {index}: ratio {ratio}")
        if factor is None:
            factor = ratio
        elif sympy.cancel(ratio - factor) != 0:
            return Relation(None, f"sample {index}: ratio {ratio}, factor {factor}")
    if factor is None:
        return Relation(ONE)
    return Relation(Scalar.from_sympy(factor))


def verify_symbolic(n=1, trials=3, seed=0):
    """
    the two curvature expansions with indeterminate Hermitian R for a line
    bundle; both sides are real linear in R, so they are assembled from
    their values on a basis of Hermitian matrices

    :return: Report
    """
    report = Report("symbolic")
    arena = f"symbolic n={n} r=1"
    size = 2 * n
    hermitian = hermitian_basis(size)
    symbols = sympy.symbols(f"x0:{len(hermitian)}", real=True)
    rng = random.Random(seed)
    xis = [Form.random(n, rng, density=0.6) for _ in range(trials)]

    def assemble(values):
        return sum((symbol * value.to_sympy() for symbol, value in zip(symbols, values)),
                   sympy.Integer(0))

    kahler = []
    twisted = {"expansion": [], "block sum": [], "regrouped": [], "printed": []}
    for xi in xis:
        parts = [kahler_commutator_sides(PointwiseState(CurvatureTensor.from_line(m), xi))
                 for m in hermitian]
        kahler.append((assemble([p[0] for p in parts]), assemble([p[1] for p in parts])))
        parts = [twisted_commutator_sides(PointwiseState(CurvatureTensor.from_line(m), xi))
                 for m in hermitian]
        for key in twisted:
            twisted[key].append((assemble([p["operator"] for p in parts]),
                                 assemble([p[key] for p in parts])))

    for text, pairs, expected in [
        ("½⟨[e(iΘ), Λ]ξ, ξ⟩ = curvature expansion, R symbolic", kahler, Relation(1)),
        ("½⟨[e(Θ_J), Λ_J]ξ, ξ⟩ = exact expansion, R symbolic", twisted["expansion"],
         Relation(1)),
        ("½⟨[e(Θ_J), Λ_J]ξ, ξ⟩ = six block sum, R symbolic", twisted["block sum"],
         Relation(1)),
        ("½⟨[e(Θ_J), Λ_J]ξ, ξ⟩ = ½⟨Sξ, ξ⟩ regrouped, R symbolic", twisted["regrouped"],
         Relation(1)),
        ("as printed: ½⟨[e(Θ_J), Λ_J]ξ, ξ⟩ = eight block sum, R symbolic",
         twisted["printed"], Relation(None)),
    ]:
        observed = symbolic_relation(pairs)
        VERBOSE(f"{text}: {observed}")
        report.add(Row(row=text, identity=text, arena=arena, expected=expected,
                       observed=observed))
    return report

