###############################################################
# pytest -v --capture=no tests/test_relation.py
# pytest -v  tests/test_relation.py
###############################################################
import pytest
from cloudmesh.common.util import HEADING

from cloudmesh.hypercomplex.exterior import Form
from cloudmesh.hypercomplex.exterior import e_op
from cloudmesh.hypercomplex.exterior import basis
from cloudmesh.hypercomplex.exterior import theta
from cloudmesh.hypercomplex.exterior import theta_bar
from cloudmesh.hypercomplex.relation import Relation
from cloudmesh.hypercomplex.relation import find_relation
from cloudmesh.hypercomplex.relation import relate_operators
from cloudmesh.hypercomplex.scalars import I
from cloudmesh.hypercomplex.scalars import Jet


@pytest.mark.incremental
class Test_relation:

    def test_01_factor(self):
        HEADING()
        relation = find_relation([(Form.constant(1, 2), Form.constant(1, 1))])
        assert relation == Relation(2)
        assert str(relation) == "c = 2"
        xi = theta(1, 0) + theta_bar(1, 1)
        assert find_relation([(xi.scale(I), xi)]) == "i"

    def test_02_zero_sides(self):
        HEADING()
        assert find_relation([(Form.zero(1), Form.zero(1))]) == Relation(1)
        assert find_relation([(Form.zero(1), theta(1, 0))]) == Relation(0)
        relation = find_relation([(theta(1, 0), Form.zero(1))])
        assert not relation.proportional
        assert relation.witness is not None

    def test_03_not_proportional(self):
        HEADING()
        relation = find_relation([(theta(1, 0).scale(2) + theta(1, 1),
                                   theta(1, 0) + theta(1, 1))])
        assert str(relation) == "not-proportional"
        assert relation == Relation.parse("not-proportional")
        assert relation != Relation(2)

    def test_04_across_samples(self):
        HEADING()
        pairs = [(theta(1, 0).scale(3), theta(1, 0)),
                 (theta(1, 1).scale(3), theta(1, 1))]
        assert find_relation(pairs) == 3
        pairs.append((theta(1, 1).scale(2), theta(1, 1)))
        assert not find_relation(pairs).proportional

    def test_05_jets(self):
        HEADING()
        z = Jet.variable(1, 2, 0)
        lhs = Form.constant(1, z * z * z + z * 2)
        rhs = Form.constant(1, z)
        # the cubic term is beyond the order of the jets
        assert find_relation([(lhs, rhs)]) == 2

    def test_06_operators(self):
        HEADING()
        values = [Form.monomial(1, mask) for mask in basis(1)]
        assert relate_operators(e_op(1, 0), e_op(1, 0), values) == 1
        assert relate_operators(e_op(1, 0) * 2, e_op(1, 0), values) == 2
        assert not relate_operators(e_op(1, 0), e_op(1, 1), values).proportional
