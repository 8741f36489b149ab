###############################################################
# pytest -v --capture=no tests/test_algebra.py
# pytest -v  tests/test_algebra.py
###############################################################
import pytest
from cloudmesh.common.dotdict import dotdict
from cloudmesh.common.util import HEADING

from cloudmesh.hypercomplex.Suite import Suite
from cloudmesh.hypercomplex.exterior import formula_operators
from cloudmesh.hypercomplex.exterior import lefschetz
from cloudmesh.hypercomplex.relation import find_relation
from cloudmesh.hypercomplex.suite.algebra.Suite import contraction_pairs
from cloudmesh.hypercomplex.suite.algebra.Suite import monomials
from cloudmesh.hypercomplex.suite.algebra.Suite import relate_pairs
from cloudmesh.hypercomplex.suite.algebra.Suite import verify_algebra
from cloudmesh.hypercomplex.suite.algebra.Suite import verify_structure


def failed(report):
    return [row.record() for row in report.failed()]


@pytest.mark.incremental
class Test_algebra:

    def setup_class(self):
        self.n = 1
        self.values = monomials(self.n)

    def test_01_algebra(self):
        HEADING()
        for n in (1, 2):
            report = verify_algebra(n)
            assert len(report.rows) == 6
            assert report.passed, failed(report)

    def test_02_mutation(self):
        HEADING()
        report = verify_algebra(self.n, "e-i-sign")
        assert not report.passed
        assert [row.row for row in report.failed()] == ["e_ki_k + i_ke_k = 2"]

    def test_03_contractions(self):
        HEADING()
        for kind in ("I", "J", "K"):
            assert relate_pairs(contraction_pairs(self.n, kind), self.values) == -1
            assert relate_pairs(contraction_pairs(self.n, kind, inverse=True),
                                self.values) == 1

    def test_04_printed_lefschetz(self):
        HEADING()
        printed = formula_operators(self.n)
        expected = {("L_I", "I", 0): 0, ("L_J", "J", 0): 1,
                    ("Lambda_I", "I", 1): 1, ("Lambda_J", "J", 1): -1,
                    ("Lambda_K", "K", 1): -1}
        for (key, which, adjoint), factor in expected.items():
            true = lefschetz(self.n, which)[adjoint]
            relation = find_relation([(printed[key](v), true(v)) for v in self.values])
            assert relation == factor, key
        true = lefschetz(self.n, "phi")[1]
        relation = find_relation([(printed["Lambda_phi"](v), true(v)) for v in self.values])
        assert not relation.proportional

    def test_05_structure(self):
        HEADING()
        report = verify_structure(self.n)
        assert report.passed, failed(report)
        rows = [row.row for row in report.rows]
        assert "Λ_J = −L_J*" in rows
        assert "as printed: summation Λ_K = Λ_K" in rows

    def test_06_dispatch(self):
        HEADING()
        suite = Suite(name="structure")
        assert suite.kind == "algebra"
        job = dotdict({"n": 1, "rank": 1, "seed": 0, "mutate": "none"})
        suite.check(job)
        report = suite.run(job)
        assert report.suite == "structure"
        assert all(row.suite == "structure" for row in report.rows)
