"""
Positivity of curvature and vanishing certificates.

Decisions are exact: a Hermitian matrix over the Gaussian rationals is
reduced by symmetric elimination with the largest positive diagonal entry
as pivot. The reduction either ends with a zero block (semidefinite, the
kernel dimension is the size of the block) or exhibits a vector x with
x* A x < 0. Eigenvalues from numpy are reported next to the exact verdict
as a diagnostic only.

The curvature operator of a fiber is F = 1/2 [e(Theta_J), Lambda_J] with
the summation formula Lambda_J of exterior.contraction; its quadratic form
on a monomial equals the coefficient expansion computed in
curvature_algebra. F only acts on the conjugate factors of a form. A fiber
(p, q) holds the forms of antiholomorphic degree p and holomorphic degree q
with values in the bundle, the H^p(M, Omega^q (x) E) convention, so p is the
degree that decides positivity.

Certificates work in joint eigencoordinates of omega and i Theta. A dense
line bundle curvature is diagonalized exactly when its eigenvalues are
rational and bounded by rational isolating intervals otherwise.
"""
import itertools
import math
import random
from fractions import Fraction

import numpy as np
import sympy
from cloudmesh.common.debug import VERBOSE

from cloudmesh.hypercomplex.bundle import BundleForm
from cloudmesh.hypercomplex.bundle import CurvatureTensor
from cloudmesh.hypercomplex.curvature_algebra import PointwiseState
from cloudmesh.hypercomplex.curvature_algebra import e_theta_j
from cloudmesh.hypercomplex.curvature_algebra import twisted_commutator_sides
from cloudmesh.hypercomplex.error import ConfigError
from cloudmesh.hypercomplex.error import DimensionOverflow
from cloudmesh.hypercomplex.error import InvalidQuery
from cloudmesh.hypercomplex.error import NotHermitian
from cloudmesh.hypercomplex.error import PositivityPreconditionFailed
from cloudmesh.hypercomplex.exterior import Form
from cloudmesh.hypercomplex.exterior import Scaled
from cloudmesh.hypercomplex.exterior import basis
from cloudmesh.hypercomplex.exterior import commutator
from cloudmesh.hypercomplex.exterior import contraction
from cloudmesh.hypercomplex.relation import Relation
from cloudmesh.hypercomplex.relation import find_relation
from cloudmesh.hypercomplex.report import Report
from cloudmesh.hypercomplex.report import Row
from cloudmesh.hypercomplex.scalars import HALF
from cloudmesh.hypercomplex.scalars import ONE
from cloudmesh.hypercomplex.scalars import Scalar
from cloudmesh.hypercomplex.scalars import ZERO
from cloudmesh.hypercomplex.scalars import random_scalar

KAPPA_SCHEDULE = [Fraction(1, 2 ** e) for e in range(21)]
DEFAULT_CAP = 4096
TOLERANCE = 1e-9
MODES = ("exact-line", "nakano-exact", "griffiths-sampled")
ORIENTATIONS = ("tangent-tuples", "bundle-tuples")


# ----------------------------------------------------------------------
# exact Hermitian decomposition
# ----------------------------------------------------------------------


class Decomposition(object):

    def __init__(self, size, pivots, diagonal, witness=None, witness_value=None,
                 indefinite=False):
        """
        :param size: matrix size
        :param pivots: eliminated indices in order
        :param diagonal: the pivots' values, all positive
        :param witness: a vector with witness* A witness = witness_value
        :param witness_value: negative if indefinite, zero for a kernel vector
        :param indefinite: True if a negative direction was found
        """
        self.size = size
        self.pivots = pivots
        self.diagonal = diagonal
        self.witness = witness
        self.witness_value = witness_value
        self.indefinite = indefinite

    @property
    def rank(self):
        return None if self.indefinite else len(self.pivots)

    @property
    def kernel_dimension(self):
        return None if self.indefinite else self.size - len(self.pivots)

    @property
    def positive_semidefinite(self):
        return not self.indefinite

    @property
    def positive_definite(self):
        return not self.indefinite and len(self.pivots) == self.size

    @property
    def verdict(self):
        if self.indefinite:
            return "indefinite"
        if self.positive_definite:
            return "positive-definite"
        return "positive-semidefinite"

    def witness_text(self):
        if self.witness is None:
            return None
        entries = ", ".join(str(x) for x in self.witness)
        return f"x = ({entries}), x*Ax = {self.witness_value}"


def check_hermitian(matrix):
    size = len(matrix)
    for a in range(size):
        if len(matrix[a]) != size:
            raise NotHermitian("matrix is not square")
        for b in range(a, size):
            if Scalar.coerce(matrix[a][b]) != Scalar.coerce(matrix[b][a]).conj():
                raise NotHermitian(f"entry ({a + 1}, {b + 1}) is not the conjugate "
                                   f"of ({b + 1}, {a + 1})")


def quadratic_value(matrix, x):
    """x* A x"""
    total = ZERO
    for a, xa in enumerate(x):
        if xa.is_zero():
            continue
        for b, xb in enumerate(x):
            if not xb.is_zero():
                total = total + xa.conj() * Scalar.coerce(matrix[a][b]) * xb
    return total


def _solve(a, b):
    """exact solution of a x = b for an invertible matrix by Gaussian elimination"""
    size = len(a)
    m = [list(row) + [value] for row, value in zip(a, b)]
    for column in range(size):
        pivot = next(r for r in range(column, size) if not m[r][column].is_zero())
        m[column], m[pivot] = m[pivot], m[column]
        inverse = m[column][column].inverse()
        m[column] = [x * inverse for x in m[column]]
        for r in range(size):
            if r != column and not m[r][column].is_zero():
                factor = m[r][column]
                m[r] = [x - factor * y for x, y in zip(m[r], m[column])]
    return [row[-1] for row in m]


def _lift(matrix, pivots, vector):
    """
    extends a vector on the remaining indices by x_P = -A_PP^-1 A_PR v so
    that x* A x equals the value of the Schur complement on v
    """
    size = len(matrix)
    x = [vector.get(i, ZERO) for i in range(size)]
    if pivots:
        a_pp = [[matrix[i][j] for j in pivots] for i in pivots]
        rhs = []
        for i in pivots:
            total = ZERO
            for r, value in vector.items():
                total = total - matrix[i][r] * value
            rhs.append(total)
        for i, value in zip(pivots, _solve(a_pp, rhs)):
            x[i] = value
    return x


def hermitian_decomposition(matrix):
    """
    symmetric elimination with diagonal pivoting

    :param matrix: Hermitian matrix, list of rows of Scalars
    :return: Decomposition
    """
    matrix = [[Scalar.coerce(x) for x in row] for row in matrix]
    check_hermitian(matrix)
    size = len(matrix)
    s = [list(row) for row in matrix]
    remaining = list(range(size))
    pivots = []
    diagonal = []

    def finish(vector, indefinite):
        x = _lift(matrix, pivots, vector)
        return Decomposition(size, pivots, diagonal, x, quadratic_value(matrix, x),
                             indefinite)

    while remaining:
        candidates = [i for i in remaining if not s[i][i].is_zero()]
        if not candidates:
            break
        i = max(candidates, key=lambda c: s[c][c].re)
        d = s[i][i]
        if d < ZERO:
            return finish({i: ONE}, True)
        remaining.remove(i)
        for a in remaining:
            if s[a][i].is_zero():
                continue
            factor = s[a][i] / d
            for b in remaining:
                if not s[i][b].is_zero():
                    s[a][b] = s[a][b] - factor * s[i][b]
        pivots.append(i)
        diagonal.append(d)

    for a in remaining:
        for b in remaining:
            if not s[b][a].is_zero():
                # v = e_b + t e_a with t s_ba = -1 gives v* S v = -2
                return finish({b: ONE, a: -s[b][a].inverse()}, True)
    if remaining:
        return finish({remaining[0]: ONE}, False)
    return Decomposition(size, pivots, diagonal)


def min_eigenvalue(matrix):
    """the smallest eigenvalue in floating point, a diagnostic"""
    if not matrix:
        return 0.0
    a = np.array([[complex(Scalar.coerce(x)) for x in row] for row in matrix],
                 dtype=complex)
    return float(np.linalg.eigvalsh(a)[0])


# ----------------------------------------------------------------------
# (k,s)-positivity
# ----------------------------------------------------------------------


class Verdict(object):

    def __init__(self, positive, certified, kernel_dimension=None, witness=None,
                 samples=None, eigenvalue=None):
        self.positive = positive
        self.certified = certified
        self.kernel_dimension = kernel_dimension
        self.witness = witness
        self.samples = samples
        self.eigenvalue = eigenvalue

    def __str__(self):
        if self.certified:
            return "certified" if self.positive else "not-positive"
        if self.positive:
            return f"no-counterexample-found({self.samples})"
        return "counterexample"

    def __eq__(self, other):
        return str(self) == str(other)

    __hash__ = None


def _real_matrix_check(tensor):
    matrix = tensor.nakano_matrix()
    check_hermitian(matrix)
    return matrix


def check_k_positive_line(tensor, k):
    """
    a line bundle is k-positive if its curvature matrix R_(j kbar) is
    semipositive with a kernel of dimension at most k

    :param tensor: CurvatureTensor of rank 1 with Scalar entries
    :param k: kernel budget
    :return: Verdict
    """
    if tensor.rank != 1:
        raise InvalidQuery("k-positivity of a line bundle needs rank 1")
    matrix = _real_matrix_check(tensor)
    decomposition = hermitian_decomposition(matrix)
    positive = decomposition.positive_semidefinite and decomposition.kernel_dimension <= k
    VERBOSE(f"line curvature {decomposition.verdict}, "
            f"kernel {decomposition.kernel_dimension}, k = {k}")
    return Verdict(positive, True, decomposition.kernel_dimension,
                   decomposition.witness_text(), eigenvalue=min_eigenvalue(matrix))


class PositivityQuery(object):

    def __init__(self, tensor, k, s=1, mode="nakano-exact", orientation="tangent-tuples"):
        """
        (k,s)-positivity: the curvature form restricted to the tensors
        sum_(a<=s) v^a (x) w_a is semipositive with kernel at most k

        :param tensor: CurvatureTensor with Scalar entries
        :param k: kernel budget
        :param s: tuple size
        :param mode: one of MODES
        :param orientation: "tangent-tuples" fixes s tangent vectors and
                            varies the bundle vectors, "bundle-tuples" the
                            other way around
        """
        if mode not in MODES:
            raise InvalidQuery(f"positivity mode '{mode}' not yet supported")
        if orientation not in ORIENTATIONS:
            raise InvalidQuery(f"orientation '{orientation}' not yet supported")
        if k < 0:
            raise InvalidQuery("the kernel budget k must be nonnegative")
        fixed = 2 * tensor.n if orientation == "tangent-tuples" else tensor.rank
        if not 1 <= s <= fixed:
            raise InvalidQuery(f"tuple size s = {s} outside 1..{fixed}")
        if mode == "exact-line" and tensor.rank != 1:
            raise InvalidQuery("exact-line needs a line bundle")
        if mode == "nakano-exact" and s < min(2 * tensor.n, tensor.rank):
            raise InvalidQuery("nakano-exact needs s >= min(2n, r)")
        self.tensor = tensor
        self.k = k
        self.s = s
        self.mode = mode
        self.orientation = orientation


def tuple_form(tensor, vectors, orientation="tangent-tuples"):
    """
    the Hermitian form on W^s for fixed vectors v^1..v^s of V

    :return: matrix indexed by (a, w)
    """
    nakano = tensor.nakano_matrix()
    rank = tensor.rank
    tangent = 2 * tensor.n
    if orientation == "tangent-tuples":
        free = rank

        def index(fixed, free_index):
            return fixed * rank + free_index
    else:
        free = tangent

        def index(fixed, free_index):
            return free_index * rank + fixed

    size = len(vectors) * free
    matrix = [[ZERO] * size for _ in range(size)]
    for a, va in enumerate(vectors):
        for b, vb in enumerate(vectors):
            for x in range(free):
                for y in range(free):
                    total = ZERO
                    for j, vj in enumerate(va):
                        if vj.is_zero():
                            continue
                        for k, vk in enumerate(vb):
                            if not vk.is_zero():
                                total = total + vj * vk.conj() * \
                                    nakano[index(j, x)][index(k, y)]
                    matrix[a * free + x][b * free + y] = total
    return matrix


def _independent_vectors(rng, count, length):
    # a dependent tuple adds kernel that the curvature does not have
    while True:
        vectors = [[random_scalar(rng) for _ in range(length)] for _ in range(count)]
        gram = [[sum((x * y.conj() for x, y in zip(u, v)), ZERO) for v in vectors]
                for u in vectors]
        if hermitian_decomposition(gram).positive_definite:
            return vectors


def check_ks_positive(query, samples=16, seed=0):
    """
    decides or samples (k,s)-positivity

    :param query: PositivityQuery
    :param samples: number of random tuples in griffiths-sampled mode
    :param seed: seed of the tuple sampler
    :return: Verdict
    """
    if query.mode == "exact-line":
        return check_k_positive_line(query.tensor, query.k)
    if query.mode == "nakano-exact":
        matrix = _real_matrix_check(query.tensor)
        decomposition = hermitian_decomposition(matrix)
        positive = decomposition.positive_semidefinite and \
            decomposition.kernel_dimension <= query.k
        return Verdict(positive, True, decomposition.kernel_dimension,
                       decomposition.witness_text(), eigenvalue=min_eigenvalue(matrix))

    _real_matrix_check(query.tensor)
    rng = random.Random(seed)
    length = 2 * query.tensor.n if query.orientation == "tangent-tuples" \
        else query.tensor.rank
    for sample in range(samples):
        vectors = _independent_vectors(rng, query.s, length)
        decomposition = hermitian_decomposition(
            tuple_form(query.tensor, vectors, query.orientation))
        if not decomposition.positive_semidefinite or \
                decomposition.kernel_dimension > query.k:
            witness = f"sample {sample}: {decomposition.verdict}, " \
                      f"kernel {decomposition.kernel_dimension}"
            return Verdict(False, False, decomposition.kernel_dimension, witness,
                           samples=sample + 1)
    return Verdict(True, False, samples=samples)


def griffiths_witness():
    """
    a rank 2 curvature on a surface that is Griffiths positive but not
    Nakano semipositive
    """
    q, t = Fraction(1, 4), Fraction(3, 4)
    return CurvatureTensor.from_nakano(1, 2, [[1, 0, 0, 0],
                                              [0, q, t, 0],
                                              [0, t, q, 0],
                                              [0, 0, 0, 1]])


# ----------------------------------------------------------------------
# rescaling
# ----------------------------------------------------------------------


def rescale_eigenvalues(nu, mu, kappa):
    """
    r_j = nu_j / (kappa mu_j + nu_j), the eigenvalues of i Theta relative
    to kappa omega + i Theta

    :param nu: eigenvalues of i Theta, nonnegative
    :param mu: eigenvalues of omega, positive
    :param kappa: positive rational
    :return: list of Fractions
    """
    kappa = Fraction(kappa)
    if kappa <= 0:
        raise ConfigError("kappa must be positive")
    if len(nu) != len(mu):
        raise ConfigError("nu and mu have different length")
    result = []
    for n_j, m_j in zip(nu, mu):
        n_j, m_j = Fraction(n_j), Fraction(m_j)
        if m_j <= 0:
            raise ConfigError("metric eigenvalues must be positive")
        if n_j < 0:
            raise ConfigError("curvature eigenvalues must be nonnegative")
        result.append(n_j / (kappa * m_j + n_j))
    return result


def rescaled_bound(r, p):
    """2 (r_1 + ... + r_p) - sum r_j for r sorted increasingly"""
    r = sorted(r)
    return 2 * sum(r[:p], Fraction(0)) - sum(r, Fraction(0))


def limit_bound(n, p, s):
    """the small kappa limit of rescaled_bound with s zero eigenvalues"""
    return 2 * (p - s) - (2 * n - s)


def vanishing_chain(n, k, p):
    """
    the chain 2(p - s) - (2n - s) >= 2(p - (n + k/2)) >= 2(1 + [k/2] - k/2) >= 1
    for s = k

    :return: list of Fractions, each at least the next
    """
    k_half = Fraction(k, 2)
    return [Fraction(limit_bound(n, p, k)),
            2 * (p - (n + k_half)),
            2 * (1 + k // 2 - k_half),
            Fraction(1)]


# ----------------------------------------------------------------------
# fiber matrices
# ----------------------------------------------------------------------


def fiber_basis(n, rank, p, q):
    return [(mask, alpha) for mask in basis(n, q, p) for alpha in range(rank)]


def fiber_operator(tensor):
    """F = 1/2 [e(Theta_J), Lambda_J]"""
    lam = contraction(tensor.n, "J")
    return Scaled(HALF, commutator(e_theta_j(tensor), lam))


def _guard(n, rank, p, q, cap):
    size = math.comb(2 * n, p) * math.comb(2 * n, q) * rank
    if size > cap:
        raise DimensionOverflow(f"fiber ({p},{q}) of rank {rank} has dimension "
                                f"{size} > {cap}")
    return size


def fiber_matrix(tensor, p, q, cap=DEFAULT_CAP):
    """
    the matrix of F on the monomials of holomorphic degree q and
    antiholomorphic degree p tensored with the frame

    :return: list of rows of Scalars
    """
    n, rank = tensor.n, tensor.rank
    _guard(n, rank, p, q, cap)
    operator = fiber_operator(tensor)
    fiber = fiber_basis(n, rank, p, q)
    position = {key: index for index, key in enumerate(fiber)}
    size = len(fiber)
    matrix = [[ZERO] * size for _ in range(size)]
    for column, (mask, alpha) in enumerate(fiber):
        image = operator(BundleForm.from_form(Form.monomial(n, mask), alpha, rank))
        for beta, component in enumerate(image.components):
            for image_mask, value in component.coeffs.items():
                matrix[position[(image_mask, beta)]][column] = value
    return matrix


def is_diagonal(tensor):
    for a, b in itertools.product(range(tensor.rank), repeat=2):
        for j, k in itertools.product(range(2 * tensor.n), repeat=2):
            if (a != b or j != k) and not tensor.entries[a][b][j][k].is_zero():
                return False
    return True


def diagonal_values(tensor):
    """nu[a][j] = R^a_(a j jbar) of a tensor in eigencoordinates"""
    if not is_diagonal(tensor):
        raise PositivityPreconditionFailed("the curvature is not in eigencoordinates")
    values = [[tensor.entries[a][a][j][j] for j in range(2 * tensor.n)]
              for a in range(tensor.rank)]
    if not all(v.is_real() for row in values for v in row):
        raise NotHermitian("diagonal curvature entries must be real")
    return [[v.re for v in row] for row in values]


def diagonal_from_values(n, values):
    rank = len(values)
    entries = [[[[ZERO] * (2 * n) for _ in range(2 * n)] for _ in range(rank)]
               for _ in range(rank)]
    for a in range(rank):
        for j in range(2 * n):
            entries[a][a][j][j] = Scalar(values[a][j])
    return CurvatureTensor(n, rank, entries)


def rescaled_tensor(tensor, kappa, mu=None):
    """the tensor with eigenvalues r_j relative to kappa omega + i Theta"""
    frame = eigenframe(tensor, mu)
    if not frame.exact:
        raise PositivityPreconditionFailed(
            "the rescaled fiber matrix needs rational eigenvalues, use a certificate")
    return diagonal_from_values(tensor.n, frame.rescaled(kappa))


def bkn_fiber_matrix(tensor, p, q, mu=None, kappa=None, cap=DEFAULT_CAP):
    """
    the curvature operator on the (p,q) fiber, optionally for the metric
    kappa omega + i Theta in joint eigencoordinates

    :param tensor: CurvatureTensor with Scalar entries
    :param p: antiholomorphic degree
    :param q: holomorphic degree
    :param mu: eigenvalues of omega, ones by default
    :param kappa: rescaling parameter or None
    :param cap: largest allowed dimension
    :return: (matrix, Decomposition, numeric minimal eigenvalue)
    """
    _guard(tensor.n, tensor.rank, p, q, cap)
    if kappa is not None:
        tensor = rescaled_tensor(tensor, kappa, mu)
    matrix = fiber_matrix(tensor, p, q, cap)
    decomposition = hermitian_decomposition(matrix)
    return matrix, decomposition, min_eigenvalue(matrix)


class _FiberParts(object):
    """
    F is linear in R, so a fiber in eigencoordinates is a combination of
    unit parts; each part is diagonal on the monomials
    """

    def __init__(self, n, rank, cap):
        self.n = n
        self.rank = rank
        self.cap = cap
        self.parts = {}

    def units(self, p, q):
        key = (p, q)
        if key not in self.parts:
            units = []
            for a in range(self.rank):
                for j in range(2 * self.n):
                    unit = [[0] * (2 * self.n) for _ in range(self.rank)]
                    unit[a][j] = 1
                    units.append(((a, j), fiber_matrix(
                        diagonal_from_values(self.n, unit), p, q, self.cap)))
            self.parts[key] = units
        return self.parts[key]

    def matrix(self, p, q, values):
        size = _guard(self.n, self.rank, p, q, self.cap)
        result = [[ZERO] * size for _ in range(size)]
        for (a, j), part in self.units(p, q):
            c = values[a][j]
            if c == 0:
                continue
            for row in range(size):
                for column in range(size):
                    if not part[row][column].is_zero():
                        result[row][column] = result[row][column] + part[row][column] * c
        return result

    def diagonal_bounds(self, p, q, lower, upper):
        """
        lower and upper bounds of the diagonal entries for values in the
        boxes [lower, upper]

        :return: (lower bounds, upper bounds), lists of Fractions
        """
        size = _guard(self.n, self.rank, p, q, self.cap)
        low = [Fraction(0)] * size
        high = [Fraction(0)] * size
        for (a, j), part in self.units(p, q):
            for row in range(size):
                for column in range(size):
                    if row != column and not part[row][column].is_zero():
                        raise PositivityPreconditionFailed(
                            "the fiber operator is not diagonal in eigencoordinates")
                c = part[row][row].re
                if c > 0:
                    low[row] += c * lower[a][j]
                    high[row] += c * upper[a][j]
                elif c < 0:
                    low[row] += c * upper[a][j]
                    high[row] += c * lower[a][j]
        return low, high


class Certificate(object):

    def __init__(self, n, rank, k, kappas, points=1):
        self.n = n
        self.rank = rank
        self.k = k
        self.kappas = kappas
        self.points = points
        self.frames = []
        self.fibers = []
        self.claims = []
        self.notes = ["the conclusions hold at every evaluated point",
                      "vanishing theorems for the cohomology are not computed"]

    def fiber(self, p, q):
        for entry in self.fibers:
            if (entry["p"], entry["q"]) == (p, q):
                return entry
        return None

    def positive_degrees(self):
        return sorted({entry["p"] for entry in self.fibers
                       if entry["verdict"] == "positive-definite"})

    @property
    def passed(self):
        return all(holds for _, holds in self.claims)

    def record(self):
        return {
            "n": self.n,
            "rank": self.rank,
            "k": self.k,
            "points": self.points,
            "kappa_schedule": [str(kappa) for kappa in self.kappas],
            "eigenframes": [frame.record() for frame in self.frames],
            "fibers": self.fibers,
            "claims": [{"claim": text, "holds": holds} for text, holds in self.claims],
            "notes": self.notes,
            "passed": self.passed,
        }


def _sample_points(tensor):
    if isinstance(tensor, CurvatureTensor):
        return [tensor]
    points = list(tensor)
    if not points:
        raise PositivityPreconditionFailed("the curvature field has no sample points")
    return points


def _fiber_at(parts, frame, p, q, kappa):
    """
    the verdict of one fiber at one point

    :return: (verdict, min eigenvalue, witness text)
    """
    if frame.exact:
        matrix = parts.matrix(p, q, frame.rescaled(kappa))
        decomposition = hermitian_decomposition(matrix)
        return (decomposition.verdict, round(min_eigenvalue(matrix), 9),
                decomposition.witness_text())
    low, high = parts.diagonal_bounds(p, q, frame.rescaled(kappa),
                                      frame.rescaled(kappa, upper=True))
    bound = float(min(low, default=Fraction(0)))
    if all(x > 0 for x in low):
        return "positive-definite", round(bound, 9), None
    if any(x < 0 for x in high):
        return "indefinite", round(bound, 9), None
    return "undecided", round(bound, 9), None


def vanishing_certificate(tensor, k, kappas=None, mu=None, degrees=None,
                          cap=DEFAULT_CAP, radius=Fraction(1, 2 ** 40)):
    """
    fiberwise positive definiteness of the curvature operator for the
    rescaled metrics kappa omega + i Theta, in the joint eigencoordinates
    of omega and i Theta at every sample point

    :param tensor: a CurvatureTensor, or a list of them sampling a field
    :param k: the kernel budget the curvature is claimed to satisfy
    :param kappas: decreasing schedule, KAPPA_SCHEDULE by default
    :param mu: eigenvalues of omega, ones by default
    :param degrees: list of (p, q), all bidegrees by default
    :param cap: largest fiber dimension
    :param radius: certification radius for irrational eigenvalues
    :return: Certificate
    """
    points = _sample_points(tensor)
    n, rank = points[0].n, points[0].rank
    kappas = kappas or KAPPA_SCHEDULE
    if k > 2 * n - 1:
        raise PositivityPreconditionFailed(f"k = {k} exceeds 2n - 1 = {2 * n - 1}")
    for index, point in enumerate(points):
        if (point.n, point.rank) != (n, rank):
            raise PositivityPreconditionFailed(f"sample {index} has another shape")
        nakano = hermitian_decomposition(point.nakano_matrix())
        if not nakano.positive_semidefinite or nakano.kernel_dimension > k:
            raise PositivityPreconditionFailed(
                f"the curvature is not {k}-positive at sample {index}")
    if degrees is None:
        degrees = [(p, q) for p in range(2 * n + 1) for q in range(2 * n + 1)]

    certificate = Certificate(n, rank, k, kappas, points=len(points))
    certificate.frames = [eigenframe(point, mu, radius) for point in points]
    parts = _FiberParts(n, rank, cap)
    for p, q in degrees:
        found = None
        outcome = None
        for kappa in kappas:
            outcomes = [_fiber_at(parts, frame, p, q, kappa)
                        for frame in certificate.frames]
            outcome = next((o for o in outcomes if o[0] != "positive-definite"),
                           min(outcomes, key=lambda o: o[1]))
            if outcome[0] == "positive-definite":
                found = kappa
                break
        VERBOSE(f"fiber ({p},{q}): {outcome[0]}, kappa {found}")
        certificate.fibers.append({
            "p": p,
            "q": q,
            "dimension": _guard(n, rank, p, q, cap),
            "verdict": outcome[0],
            "kappa": None if found is None else str(found),
            "min_eigenvalue": outcome[1],
            "witness": outcome[2],
        })

    for index, frame in enumerate(certificate.frames):
        if frame.path == "exact":
            certificate.claims.append(
                (f"sample {index}: V* ω V and V* iΘ V are diagonal", frame.verified))
        elif frame.path == "interval":
            certificate.notes.append(
                f"sample {index}: irrational eigenvalues certified by intervals "
                f"of radius at most {frame.radius}")

    threshold = n + k // 2
    for p, q in degrees:
        entry = certificate.fiber(p, q)
        if p > threshold:
            certificate.claims.append(
                (f"({p},{q}) positive definite, p > n + [k/2] = {threshold}",
                 entry["verdict"] == "positive-definite"))
        if p == 2 * n:
            certificate.claims.append(
                (f"({p},{q}) positive definite, full antiholomorphic degree",
                 entry["verdict"] == "positive-definite"))
    chain = 2 * (1 + k // 2 - Fraction(k, 2))
    certificate.claims.append((f"2(1 + [k/2] - k/2) = {chain} >= 1", chain >= 1))
    return certificate


# ----------------------------------------------------------------------
# joint eigencoordinates
# ----------------------------------------------------------------------


def _fraction(value):
    value = sympy.Rational(value)
    return Fraction(int(value.p), int(value.q))


def _sympy_rational(value):
    value = Fraction(value)
    return sympy.Rational(value.numerator, value.denominator)


class Eigenframe(object):
    """
    the eigenvalues of i Theta relative to omega at one point

    ``lower`` and ``upper`` bound each eigenvalue; they coincide on the
    exact paths. ``mu`` are the omega eigenvalues the values are measured
    against, ones once omega is normalized away.
    """

    def __init__(self, path, lower, upper=None, mu=None, basis=None, verified=None):
        """
        :param path: "diagonal", "exact" or "interval"
        :param lower: lower bounds of the eigenvalues
        :param upper: upper bounds, the lower bounds if None
        :param mu: omega eigenvalues paired with the values
        :param basis: the joint eigenvectors as columns on the exact path
        :param verified: True if V* omega V and V* i Theta V were checked diagonal
        """
        self.path = path
        self.lower = lower
        self.upper = upper if upper is not None else lower
        self.mu = mu
        self.basis = basis
        self.verified = verified

    @property
    def exact(self):
        return self.path != "interval"

    @property
    def radius(self):
        widths = [(hi - lo) / 2 for row_lo, row_hi in zip(self.lower, self.upper)
                  for lo, hi in zip(row_lo, row_hi)]
        return max(widths, default=Fraction(0))

    def rescaled(self, kappa, upper=False):
        """the rescaled eigenvalues r_j, from the lower or the upper bounds"""
        bounds = self.upper if upper else self.lower
        return [rescale_eigenvalues([max(v, Fraction(0)) for v in row], self.mu, kappa)
                for row in bounds]

    def record(self):
        if self.exact:
            values = [[str(v) for v in row] for row in self.lower]
        else:
            values = [[f"[{lo}, {hi}]" for lo, hi in zip(row_lo, row_hi)]
                      for row_lo, row_hi in zip(self.lower, self.upper)]
        result = {"path": self.path, "eigenvalues": values}
        if self.path == "interval":
            result["radius"] = str(self.radius)
        if self.verified is not None:
            result["verified"] = self.verified
        return result


def _m_inner(metric, u, v):
    return sympy.expand((u.H * metric * v)[0])


def _joint_basis(a, metric, roots):
    """
    eigenvectors of a = omega^-1 R, orthogonal for omega, one block per
    distinct root; eigenspaces of different roots are omega orthogonal

    :return: list of (root, column)
    """
    size = a.shape[0]
    columns = []
    for root in sorted(set(roots)):
        space = []
        for v in (a - _sympy_rational(root) * sympy.eye(size)).nullspace():
            for w in space:
                v = v - (_m_inner(metric, w, v) / _m_inner(metric, w, w)) * w
            space.append(v.applyfunc(sympy.expand))
        columns.extend((root, v) for v in space)
    return columns


def _is_diagonal_matrix(m):
    return all(sympy.expand(m[i, j]) == 0
               for i in range(m.shape[0]) for j in range(m.shape[1]) if i != j)


def joint_eigenframe(tensor, mu=None, radius=Fraction(1, 2 ** 40)):
    """
    diagonalizes omega = diag(mu) and i Theta together for a line bundle

    The characteristic polynomial of omega^-1 R has rational coefficients.
    Its linear factors give exact eigenvalues, the eigenvectors are then
    computed and V* omega V, V* R V are checked to be diagonal. Other
    factors are isolated by rational intervals of width at most 2 radius.

    :param tensor: CurvatureTensor of rank 1 with Scalar entries
    :param mu: eigenvalues of omega, ones by default
    :param radius: the certification radius of the interval path
    :return: Eigenframe
    """
    if tensor.rank != 1:
        raise PositivityPreconditionFailed(
            "joint eigencoordinates need a line bundle or a diagonal curvature")
    size = 2 * tensor.n
    matrix = tensor.line_matrix()
    check_hermitian(matrix)
    mu = [Fraction(m) for m in (mu or [1] * size)]
    if any(m <= 0 for m in mu):
        raise PositivityPreconditionFailed("metric eigenvalues must be positive")
    metric = sympy.diag(*[_sympy_rational(m) for m in mu])
    r = sympy.Matrix([[Scalar.coerce(x).to_sympy() for x in row] for row in matrix])
    a = metric.inv() * r

    x = sympy.Symbol("x")
    poly = sympy.Poly(sympy.expand(a.charpoly(x).as_expr()), x)
    if not (poly.domain.is_ZZ or poly.domain.is_QQ):
        raise NotHermitian(f"characteristic polynomial over {poly.domain}")
    lower, upper = [], []
    exact = True
    for factor, multiplicity in poly.factor_list()[1]:
        if factor.degree() == 1:
            c1, c0 = factor.all_coeffs()
            root = _fraction(-c0 / c1)
            lower += [root] * multiplicity
            upper += [root] * multiplicity
            continue
        exact = False
        intervals = factor.intervals(eps=_sympy_rational(2 * radius))
        if sum(k for _, k in intervals) != factor.degree():
            raise NotHermitian("the curvature has non real eigenvalues")
        for (lo, hi), k in intervals:
            lower += [_fraction(lo)] * (k * multiplicity)
            upper += [_fraction(hi)] * (k * multiplicity)
    VERBOSE(f"joint eigenvalues {lower} .. {upper}")
    ones = [Fraction(1)] * size
    if not exact:
        return Eigenframe("interval", [lower], [upper], mu=ones)

    columns = _joint_basis(a, metric, lower)
    if len(columns) != size:
        raise NotHermitian("the eigenvectors do not span the fiber")
    v = sympy.Matrix.hstack(*[column for _, column in columns])
    omega_v = v.H * metric * v
    theta_v = v.H * r * v
    order = [root for root, _ in columns]
    verified = (_is_diagonal_matrix(omega_v) and
                _is_diagonal_matrix(theta_v) and
                all(sympy.expand(theta_v[j, j] - _sympy_rational(root) * omega_v[j, j]) == 0
                    for j, root in enumerate(order)))
    basis = [[str(sympy.expand(v[i, j])) for j in range(size)] for i in range(size)]
    return Eigenframe("exact", [order], mu=ones, basis=basis, verified=verified)


def eigenframe(tensor, mu=None, radius=Fraction(1, 2 ** 40)):
    """
    the eigenframe of a curvature at a point: read off the diagonal when R
    is already in eigencoordinates, the joint eigenframe otherwise

    :return: Eigenframe
    """
    if is_diagonal(tensor):
        mu = [Fraction(m) for m in (mu or [1] * (2 * tensor.n))]
        return Eigenframe("diagonal", diagonal_values(tensor), mu=mu)
    return joint_eigenframe(tensor, mu, radius)


# ----------------------------------------------------------------------
# suites
# ----------------------------------------------------------------------


def _line(n, diagonal):
    size = 2 * n
    return CurvatureTensor.from_line([[diagonal[j] if j == k else 0 for k in range(size)]
                                      for j in range(size)])


def dense_rational_tensor(n):
    """R = 1 + v v* with v = (1, i, 0, ..., 0), eigenvalues 3, 1, ..., 1"""
    size = 2 * n
    v = [ONE, Scalar(0, 1)] + [ZERO] * (size - 2)
    return CurvatureTensor.from_line([[(ONE if j == k else ZERO) + v[j] * v[k].conj()
                                       for k in range(size)] for j in range(size)])


def dense_irrational_tensor(n):
    """a leading block (2 1; 1 1) with eigenvalues (3 +- sqrt 5)/2, ones after it"""
    size = 2 * n
    matrix = [[1 if j == k else 0 for k in range(size)] for j in range(size)]
    matrix[0][0] = 2
    matrix[0][1] = matrix[1][0] = 1
    return CurvatureTensor.from_line(matrix)


def verify_positivity(n, samples=16, seed=0):
    """
    k-positivity of line bundles and (k,s)-positivity of vector bundles

    :return: Report
    """
    report = Report("positivity")
    arena = f"scalar n={n}"
    size = 2 * n
    identity = _line(n, [1] * size)
    degenerate = _line(n, [0] + [1] * (size - 1))
    negative = _line(n, [-1] + [1] * (size - 1))

    rows = [
        ("R = 1 is 0-positive", check_k_positive_line(identity, 0), "certified"),
        ("R = diag(0,1,…,1) is 1-positive", check_k_positive_line(degenerate, 1),
         "certified"),
        ("R = diag(0,1,…,1) is not 0-positive", check_k_positive_line(degenerate, 0),
         "not-positive"),
        ("R = diag(−1,1,…,1) is not 2n-positive",
         check_k_positive_line(negative, size), "not-positive"),
    ]
    for s in range(1, size + 1):
        rows.append((f"line bundle (0,{s})-positivity matches 0-positivity",
                     check_ks_positive(PositivityQuery(identity, 0, s, "nakano-exact")),
                     "certified"))
    nakano_identity = CurvatureTensor.identity(n, 2)
    for s in (1, 2):
        rows.append((f"R = δ_jkδ_αβ is (0,{s})-positive, bundle tuples",
                     check_ks_positive(PositivityQuery(nakano_identity, 0, s,
                                                       "griffiths-sampled",
                                                       "bundle-tuples"),
                                       samples, seed),
                     f"no-counterexample-found({samples})"))
    witness = griffiths_witness()
    rows.append(("Griffiths witness is (0,1)-positive, sampled",
                 check_ks_positive(PositivityQuery(witness, 0, 1, "griffiths-sampled"),
                                   samples, seed),
                 f"no-counterexample-found({samples})"))
    rows.append(("Griffiths witness is not Nakano semipositive",
                 check_ks_positive(PositivityQuery(witness, 0, 2, "nakano-exact")),
                 "not-positive"))
    for text, verdict, expected in rows:
        report.add(Row(row=text, identity=text, arena=arena, expected=expected,
                       observed=str(verdict), witness=verdict.witness))
    return report


def verify_rescale(max_n=6):
    """
    exact arithmetic of the rescaled eigenvalues and of the degree bounds

    :return: Report
    """
    report = Report("rescale")
    arena = "rational"

    def add(text, observed, expected):
        report.add(Row(row=text, identity=text, arena=arena,
                       expected=expected, observed=observed))

    half = rescale_eigenvalues([1, 1, 1], [1, 1, 1], 1)
    add("r = ν/(κμ + ν), ν = μ = 1, κ = 1", " ".join(map(str, half)), "1/2 1/2 1/2")
    r = rescale_eigenvalues([0, 1], [1, 1], Fraction(1, 9))
    add("r = ν/(κμ + ν), ν = (0,1), μ = (1,1), κ = 1/9", " ".join(map(str, r)), "0 9/10")

    sequence = [rescale_eigenvalues([1], [1], kappa)[0] for kappa in KAPPA_SCHEDULE]
    add("r_j increases to 1 as κ decreases",
        all(a < b < 1 for a, b in zip(sequence, sequence[1:])), True)
    ratios = [Fraction(j, 3) for j in range(7)]
    r = rescale_eigenvalues(ratios, [1] * 7, Fraction(1, 2))
    add("r_j strictly increasing in ν_j/μ_j, 0 ≤ r_j < 1",
        all(a < b for a, b in zip(r, r[1:])) and all(0 <= x < 1 for x in r), True)

    exact = True
    for n in range(1, max_n + 1):
        for s in range(0, 2 * n + 1):
            nu = [0] * s + [1] * (2 * n - s)
            for p in range(2 * n + 1):
                for kappa in KAPPA_SCHEDULE[::5]:
                    bound = rescaled_bound(rescale_eigenvalues(nu, [1] * (2 * n), kappa), p)
                    target = Fraction(limit_bound(n, p, s)) if p >= s else None
                    if target is not None and bound != target / (1 + kappa):
                        exact = False
    add("2Σ_{j≤p} r_j − Σ r_j = (2(p−s) − (2n−s))/(1+κ)", exact, True)

    holds = True
    for n in range(1, max_n + 1):
        for k in range(0, 2 * n + 1):
            for p in range(n + k // 2 + 1, 2 * n + 1):
                for s in range(0, k + 1):
                    if limit_bound(n, p, s) < 1:
                        holds = False
                chain = vanishing_chain(n, k, p)
                if not all(a >= b for a, b in zip(chain, chain[1:])):
                    holds = False
    add("2(p−s) − (2n−s) ≥ 2(p − n − k/2) ≥ 2(1 + [k/2] − k/2) ≥ 1, p > n + [k/2]",
        holds, True)
    return report


def verify_certificates(n, cap=DEFAULT_CAP):
    """
    fiber matrices and certificates for the identity curvature and for a
    curvature with zero eigenvalues

    :return: Report
    """
    report = Report("certificate")
    size = 2 * n
    arena = f"scalar n={n} r=1"
    identity = _line(n, [1] * size)

    certificate = vanishing_certificate(identity, 0, cap=cap)
    report.certificate(certificate)
    text = f"positive definite exactly for p > n = {n}"
    report.add(Row(row=text, identity=text, arena=arena,
                   expected=" ".join(str(q) for q in range(n + 1, size + 1)),
                   observed=" ".join(str(q) for q in certificate.positive_degrees())))
    witnesses = all(entry["witness"] is not None for entry in certificate.fibers
                    if entry["p"] <= n)
    text = "non positive fibers carry a witness vector"
    report.add(Row(row=text, identity=text, arena=arena, expected=True,
                   observed=witnesses))
    text = "certificate claims, R = 1"
    report.add(Row(row=text, identity=text, arena=arena, expected=True,
                   observed=certificate.passed))

    for k in range(1, size):
        deficient = _line(n, [0] * k + [1] * (size - k))
        certificate = vanishing_certificate(deficient, k, cap=cap)
        report.certificate(certificate)
        text = f"certificate claims, {k} zero eigenvalues"
        report.add(Row(row=text, identity=text, arena=arena, expected=True,
                       observed=certificate.passed))

    dense = dense_rational_tensor(n)
    certificate = vanishing_certificate(dense, 0, cap=cap)
    report.certificate(certificate)
    frame = certificate.frames[0]
    text = "dense R = 1 + vv*: joint eigenframe exact and verified"
    report.add(Row(row=text, identity=text, arena=arena, expected="exact True",
                   observed=f"{frame.path} {frame.verified}"))
    text = f"dense R = 1 + vv*: positive definite exactly for p > n = {n}"
    report.add(Row(row=text, identity=text, arena=arena,
                   expected=" ".join(str(q) for q in range(n + 1, size + 1)),
                   observed=" ".join(str(q) for q in certificate.positive_degrees())))
    text = "certificate claims, dense R = 1 + vv*"
    report.add(Row(row=text, identity=text, arena=arena, expected=True,
                   observed=certificate.passed))

    irrational = dense_irrational_tensor(n)
    certificate = vanishing_certificate(irrational, 0, cap=cap)
    report.certificate(certificate)
    text = "dense R with irrational eigenvalues: interval certificate claims"
    report.add(Row(row=text, identity=text, arena=arena, expected="interval True",
                   observed=f"{certificate.frames[0].path} {certificate.passed}"))

    field = [identity, dense, irrational]
    certificate = vanishing_certificate(field, 0, cap=cap)
    report.certificate(certificate)
    text = "R field of three samples: certificate claims at every point"
    report.add(Row(row=text, identity=text, arena=arena, expected=True,
                   observed=certificate.passed and certificate.points == 3))

    vacuous = _line(n, [0] * size)
    try:
        vanishing_certificate(vacuous, size, cap=cap)
        observed = "issued"
    except PositivityPreconditionFailed:
        observed = "declined"
    text = f"k = 2n = {size} is declined"
    report.add(Row(row=text, identity=text, arena=arena, expected="declined",
                   observed=observed))

    rng = random.Random(n)
    values = [Scalar(rng.randint(0, 3)) for _ in range(size)]
    tensor = _line(n, values)
    pairs = []
    for p in range(size + 1):
        matrix = fiber_matrix(tensor, p, 0, cap)
        for index, (mask, _) in enumerate(fiber_basis(n, 1, p, 0)):
            xi = Form.monomial(n, mask)
            sides = twisted_commutator_sides(PointwiseState(tensor, xi))
            pairs.append((matrix[index][index] * 2 ** p, sides["expansion"]))
    text = "fiber diagonal = coefficient expansion on monomials"
    report.add(Row(row=text, identity=text, arena=arena, expected=Relation(1),
                   observed=find_relation(pairs)))

    monotone = True
    for p in range(size):
        now = bkn_fiber_matrix(tensor, p, 0, cap=cap)[1].positive_definite
        later = bkn_fiber_matrix(tensor, p + 1, 0, cap=cap)[1].positive_definite
        if now and not later:
            monotone = False
    text = "positive definite at p implies positive definite at p + 1"
    report.add(Row(row=text, identity=text, arena=arena, expected=True,
                   observed=monotone))

    agree = True
    for p in range(size + 1):
        _, decomposition, eigenvalue = bkn_fiber_matrix(identity, p, 0, cap=cap)
        if decomposition.positive_definite != (eigenvalue > TOLERANCE):
            agree = False
    text = "numeric minimal eigenvalue agrees with the exact verdict"
    report.add(Row(row=text, identity=text, arena=arena, expected=True, observed=agree))
    return report
