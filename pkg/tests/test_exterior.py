###############################################################
# pytest -v --capture=no tests/test_exterior.py
# pytest -v  tests/test_exterior.py
# pytest -v --capture=no tests/test_exterior.py::Test_exterior::<METHODNAME>
###############################################################
import random

import pytest
from cloudmesh.common.util import HEADING
from hypothesis import given
from hypothesis import settings
from hypothesis import strategies as st

from cloudmesh.hypercomplex.error import DimensionMismatch
from cloudmesh.hypercomplex.exterior import Compose
from cloudmesh.hypercomplex.exterior import Form
from cloudmesh.hypercomplex.exterior import apply_complex_structure
from cloudmesh.hypercomplex.exterior import basis
from cloudmesh.hypercomplex.exterior import bidegree
from cloudmesh.hypercomplex.exterior import contract
from cloudmesh.hypercomplex.exterior import contraction
from cloudmesh.hypercomplex.exterior import e_op
from cloudmesh.hypercomplex.exterior import hodge_star
from cloudmesh.hypercomplex.exterior import i_op
from cloudmesh.hypercomplex.exterior import lefschetz
from cloudmesh.hypercomplex.exterior import omega
from cloudmesh.hypercomplex.exterior import pointwise_inner
from cloudmesh.hypercomplex.exterior import theta
from cloudmesh.hypercomplex.exterior import theta_bar
from cloudmesh.hypercomplex.exterior import volume_form
from cloudmesh.hypercomplex.exterior import wedge
from cloudmesh.hypercomplex.scalars import HALF
from cloudmesh.hypercomplex.scalars import I


def random_form(seed, p=None, q=None, n=1):
    return Form.random(n, random.Random(seed), p=p, q=q)


@pytest.mark.incremental
class Test_exterior:

    def setup_class(self):
        self.n = 1

    def test_01_basis(self):
        HEADING()
        assert len(basis(1)) == 16
        assert len(basis(2, 1, 2)) == 4 * 6
        assert bidegree(1, Form.from_indices(1, [0], [0, 1]).items()[0][0]) == (1, 2)

    def test_02_wedge(self):
        HEADING()
        n = self.n
        assert wedge(theta(n, 0), theta(n, 0)).is_zero()
        assert wedge(theta(n, 1), theta(n, 0)) == Form.from_indices(n, [0, 1], value=-1)
        assert wedge(Form.from_indices(n, [0], [1]), theta(n, 1)) == \
            Form.from_indices(n, [0, 1], [1], value=-1)
        with pytest.raises(DimensionMismatch):
            wedge(theta(1, 0), theta(2, 0))

    def test_03_contract(self):
        HEADING()
        n = self.n
        assert contract(0, False, theta(n, 0)) == Form.constant(n, 2)
        assert contract(1, False, Form.from_indices(n, [0, 1])) == theta(n, 0, -2)
        assert contract(0, True, theta(n, 0)).is_zero()
        with pytest.raises(DimensionMismatch):
            contract(2, False, theta(n, 0))

    def test_04_e_i(self):
        HEADING()
        n = self.n
        for xi in [Form.constant(n), theta(n, 1), theta_bar(n, 0),
                   Form.from_indices(n, [0], [1])]:
            ei = Compose([e_op(n, 0), i_op(n, 0)])
            ie = Compose([i_op(n, 0), e_op(n, 0)])
            assert ei(xi) + ie(xi) == xi.scale(2)

    def test_05_structures(self):
        HEADING()
        n = self.n
        xi = Form.from_indices(n, [0], [1])
        assert apply_complex_structure("I", xi) == xi
        assert apply_complex_structure("J", theta(n, 0)) == theta_bar(n, 1)
        assert apply_complex_structure("K", Form.from_indices(n, [0, 1])) == \
            Form.from_indices(n, [], [0, 1], value=-1)
        for kind in ("I", "J", "K"):
            eta = random_form(7, n=n)
            assert apply_complex_structure(
                kind, apply_complex_structure(kind, eta), inverse=True) == eta

    def test_06_hodge_star(self):
        HEADING()
        n = self.n
        assert hodge_star(Form.constant(n)) == volume_form(n)
        assert hodge_star(Form.monomial(n, 0b1111)) == Form.constant(n, 4)
        for mask in basis(n):
            xi = Form.monomial(n, mask)
            sign = -1 if xi.degree() % 2 else 1
            assert hodge_star(hodge_star(xi)) == xi.scale(sign)

    def test_07_inner_product(self):
        HEADING()
        n = self.n
        assert pointwise_inner(theta(n, 0), theta(n, 0)) == 2
        assert pointwise_inner(theta(n, 0), theta(n, 1)) == 0
        assert pointwise_inner(omega(2, "I"), omega(2, "I")) == 4
        eta = random_form(3, n=n)
        assert pointwise_inner(eta, eta).is_real()

    def test_08_lefschetz(self):
        HEADING()
        L, Lambda = lefschetz(2, "I")
        assert Lambda(omega(2, "I")) == Form.constant(2, 4)
        assert lefschetz(1, "J")[0](Form.constant(1)) == omega(1, "J")
        assert omega(1, "J") == \
            Form.from_indices(1, [0, 1], value=HALF) + Form.from_indices(1, [], [0, 1], value=HALF)
        assert omega(1, "phi") == Form.from_indices(1, [0, 1])

    @settings(max_examples=30, deadline=None)
    @given(st.integers(0, 10 ** 6), st.integers(0, 10 ** 6), st.integers(0, 10 ** 6))
    def test_09_associative(self, a, b, c):
        alpha, beta, gamma = random_form(a), random_form(b), random_form(c)
        assert wedge(wedge(alpha, beta), gamma) == wedge(alpha, wedge(beta, gamma))

    @settings(max_examples=30, deadline=None)
    @given(st.integers(0, 10 ** 6), st.integers(0, 2), st.integers(0, 2),
           st.integers(0, 10 ** 6), st.integers(0, 2), st.integers(0, 2))
    def test_10_graded_commutative(self, a, p, q, b, r, s):
        alpha = random_form(a, p, q)
        beta = random_form(b, r, s)
        sign = -1 if ((p + q) * (r + s)) % 2 else 1
        assert wedge(alpha, beta) == wedge(beta, alpha).scale(sign)

    @settings(max_examples=20, deadline=None)
    @given(st.integers(0, 10 ** 6))
    def test_11_contraction(self, a):
        alpha = random_form(a)
        n = alpha.n
        assert contraction(n, "J")(alpha) == -lefschetz(n, "J")[1](alpha)
        assert contraction(n, "I")(alpha) == lefschetz(n, "I")[1](alpha)
        assert contraction(n, "phi")(alpha) == \
            (contraction(n, "J")(alpha) - contraction(n, "K")(alpha).scale(I)).scale(HALF)

    def test_12_contraction_unknown(self):
        HEADING()
        with pytest.raises(ValueError):
            contraction(1, "L")
