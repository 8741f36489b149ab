"""
Pointwise identities of the exterior algebra, checked as exact operator
equalities on every basis monomial.
"""
import math
from fractions import Fraction

from cloudmesh.common.debug import VERBOSE

from cloudmesh.hypercomplex.SuiteABC import SuiteABC
from cloudmesh.hypercomplex.exterior import Compose
from cloudmesh.hypercomplex.exterior import Form
from cloudmesh.hypercomplex.exterior import Identity
from cloudmesh.hypercomplex.exterior import Scaled
from cloudmesh.hypercomplex.exterior import Structure
from cloudmesh.hypercomplex.exterior import Sum
from cloudmesh.hypercomplex.exterior import anticommutator
from cloudmesh.hypercomplex.exterior import basis
from cloudmesh.hypercomplex.exterior import contraction
from cloudmesh.hypercomplex.exterior import e_op
from cloudmesh.hypercomplex.exterior import formula_operators
from cloudmesh.hypercomplex.exterior import hodge_star
from cloudmesh.hypercomplex.exterior import i_op
from cloudmesh.hypercomplex.exterior import lefschetz
from cloudmesh.hypercomplex.exterior import omega
from cloudmesh.hypercomplex.exterior import pointwise_inner
from cloudmesh.hypercomplex.exterior import popcount
from cloudmesh.hypercomplex.exterior import volume_form
from cloudmesh.hypercomplex.exterior import wedge
from cloudmesh.hypercomplex.relation import Relation
from cloudmesh.hypercomplex.relation import find_relation
from cloudmesh.hypercomplex.report import Report
from cloudmesh.hypercomplex.report import Row
from cloudmesh.hypercomplex.scalars import HALF
from cloudmesh.hypercomplex.scalars import I

# the contraction relations as they are usually printed
CONTRACTION_RELATIONS = {
    "I": "i_kI = −iIi_k, ī_kI = iIī_k",
    "J": "i_kJ = Jī_{k+n}, i_{k+n}J = −Jī_k",
    "K": "i_kK = iKī_{k+n}, i_{k+n}K = −iKī_k",
}


def monomials(n):
    return [Form.monomial(n, mask) for mask in basis(n)]


def contraction_pairs(n, kind, inverse=False):
    """
    the operator pairs of the contraction relations for the action of I,
    J or K, or of its inverse

    :return: list of (lhs, rhs) Operators
    """
    s = Structure(n, kind, inverse)
    if kind == "I":
        return [pair for k in range(2 * n) for pair in (
            (Compose([i_op(n, k), s]), Scaled(-I, Compose([s, i_op(n, k)]))),
            (Compose([i_op(n, k, True), s]), Scaled(I, Compose([s, i_op(n, k, True)]))))]
    c = 1 if kind == "J" else I
    return [pair for k in range(n) for pair in (
        (Compose([i_op(n, k), s]), Scaled(c, Compose([s, i_op(n, k + n, True)]))),
        (Compose([i_op(n, k + n), s]), Scaled(-c, Compose([s, i_op(n, k, True)]))))]


def relate_pairs(pairs, values):
    """the common relation of several operator identities"""
    return find_relation([(lhs(v), rhs(v)) for lhs, rhs in pairs for v in values])


def verify_algebra(n, mutate="none"):
    """
    the anticommutators of the wedge and contraction operators and the
    contractions against I, J and K

    :param n: quaternionic dimension
    :param mutate: "e-i-sign" flips the sign of e_k in the e_ki_k row
    :return: Report
    """
    report = Report("algebra")
    values = monomials(n)
    zero = Sum([])
    arena = f"scalar n={n} full algebra"

    pairs = [(anticommutator(e_op(n, k, bar), i_op(n, l, not bar)), zero)
             for k in range(2 * n) for l in range(2 * n) for bar in (False, True)]
    text = "e_kī_l + ī_le_k = 0"
    report.add(Row(row=text, identity=text, arena=arena,
                   expected=Relation(1), observed=relate_pairs(pairs, values)))

    pairs = [(anticommutator(e_op(n, k, bar), i_op(n, l, bar)), zero)
             for k in range(2 * n) for l in range(2 * n) if k != l
             for bar in (False, True)]
    text = "e_ki_l + i_le_k = 0, k ≠ l"
    report.add(Row(row=text, identity=text, arena=arena,
                   expected=Relation(1), observed=relate_pairs(pairs, values)))

    sign = -1 if mutate == "e-i-sign" else 1
    pairs = [(anticommutator(Scaled(sign, e_op(n, k, bar)), i_op(n, k, bar)),
              Scaled(2, Identity()))
             for k in range(2 * n) for bar in (False, True)]
    text = "e_ki_k + i_ke_k = 2"
    if sign < 0:
        VERBOSE("negative control: e_k enters with the wrong sign")
    report.add(Row(row=text, identity=text, arena=arena,
                   expected=Relation(1), observed=relate_pairs(pairs, values)))

    for kind in ("I", "J", "K"):
        text = CONTRACTION_RELATIONS[kind]
        report.add(Row(row=text, identity=text, arena=arena,
                       expected=Relation(-1),
                       observed=relate_pairs(contraction_pairs(n, kind), values)))
    return report


def _power(form, exponent):
    result = Form.constant(form.n)
    for _ in range(exponent):
        result = wedge(result, form)
    return result


def verify_structure(n):
    """
    the Hodge star, the complex structures and the Lefschetz family

    :param n: quaternionic dimension
    :return: Report
    """
    report = Report("structure")
    values = monomials(n)
    arena = f"scalar n={n} full algebra"

    def add(text, expected, observed, identity=None):
        report.add(Row(row=text, identity=identity or text, arena=arena,
                       expected=expected, observed=observed))

    pairs = [(hodge_star(hodge_star(v)), v.scale((-1) ** popcount(mask)))
             for mask, v in zip(basis(n), values)]
    add("∗∗ξ = (−1)^{p+q}ξ", Relation(1), find_relation(pairs))

    vol = volume_form(n)
    pairs = []
    for p in range(2 * n + 1):
        for q in range(2 * n + 1):
            masks = basis(n, p, q)
            for a in masks:
                for b in masks:
                    xi, eta = Form.monomial(n, a), Form.monomial(n, b, 1 + I)
                    pairs.append((wedge(xi, hodge_star(eta)),
                                  vol.scale(pointwise_inner(xi, eta))))
    add("⟨ξ,η⟩vol = ξ∧∗η", Relation(1), find_relation(pairs))

    omega_i = omega(n, "I")
    top = _power(omega_i, 2 * n).scale(Fraction(1, math.factorial(2 * n)))
    add("vol = ω_I^{2n}/(2n)!", Relation(1), find_relation([(vol, top)]))

    add("⟨ω_I, ω_I⟩ = 2n", 2 * n, pointwise_inner(omega_i, omega_i))

    coframes = [Form.monomial(n, 1 << g) for g in range(4 * n)]
    squares = [(Structure(n, kind)(Structure(n, kind)(v)), -v)
               for kind in ("I", "J", "K") for v in coframes]
    add("I² = J² = K² = −1 on θ, θ̄", Relation(1), find_relation(squares))

    s = {kind: Structure(n, kind) for kind in ("I", "J", "K")}
    add("IJ = K", Relation(1),
        find_relation([(s["I"](s["J"](v)), s["K"](v)) for v in values]))
    add("JI = −K on θ, θ̄", Relation(1),
        find_relation([(s["J"](s["I"](v)), -s["K"](v)) for v in coframes]))
    odd = [v for mask, v in zip(basis(n), values) if popcount(mask) % 2]
    add("IJ = −JI in odd degree", Relation(-1),
        find_relation([(s["I"](s["J"](v)), s["J"](s["I"](v))) for v in odd]))

    phi = omega(n, "J") + omega(n, "K").scale(I)
    explicit = Form.zero(n)
    for k in range(n):
        explicit = explicit + Form.from_indices(n, [k, k + n])
    add("φ = ω_J + iω_K = Σθ^k∧θ^{k+n}", Relation(1),
        find_relation([(phi, explicit), (omega(n, "phi"), explicit)]))

    lam_i = lefschetz(n, "I")[1]
    add("Λ_I ω_I = 2n", Relation(1),
        find_relation([(lam_i(omega_i), Form.constant(n, 2 * n))]))
    printed = formula_operators(n)
    add("L_J 1 = ω_J", Relation(1),
        find_relation([(printed["L_J"](Form.constant(n)), omega(n, "J"))]))

    true_lambda_phi = Scaled(-1, Sum([Compose([i_op(n, k), i_op(n, k + n)])
                                      for k in range(n)]))
    add("Λ_φ = −Σi_ki_{k+n}", Relation(1),
        find_relation([(lefschetz(n, "phi")[1](v), true_lambda_phi(v)) for v in values]))

    # printed summation formula against the adjoint of the wedge by the form
    formulas = [
        ("L_I", "I", 0, False),
        ("L_J", "J", 1, False),
        ("Lambda_I", "I", 1, True),
        ("Lambda_J", "J", -1, True),
        ("Lambda_K", "K", -1, True),
        ("Lambda_phi", "phi", None, True),
    ]
    for key, which, factor, adjoint in formulas:
        true = lefschetz(n, which)[1 if adjoint else 0]
        name = key.replace("Lambda", "Λ")
        text = f"summation {name} = {name}"
        add(text if factor == 1 else f"as printed: {text}", Relation(factor),
            find_relation([(printed[key](v), true(v)) for v in values]), identity=text)

    lam = {which: contraction(n, which) for which in ("I", "J", "K", "phi")}
    add("Λ_J = −L_J*", Relation(1),
        find_relation([(lam["J"](v), -lefschetz(n, "J")[1](v)) for v in values]))
    add("Λ_φ = ½(Λ_J − iΛ_K) = ½Σī_kī_{k+n}", Relation(1),
        find_relation([(lam["phi"](v), (lam["J"](v) - lam["K"](v).scale(I)).scale(HALF))
                       for v in values]))

    for kind in ("I", "J", "K"):
        text = CONTRACTION_RELATIONS[kind].replace(kind, f"{kind}⁻¹")
        add(text, Relation(1),
            relate_pairs(contraction_pairs(n, kind, inverse=True), values))
    return report


class Suite(SuiteABC):

    def run(self, job):
        if self.name == "algebra":
            return verify_algebra(job.n, job.get("mutate") or "none")
        elif self.name == "structure":
            return verify_structure(job.n)
        else:
            raise ValueError(f"Suite '{self.name}' not yet supported")
