###############################################################
# pytest -v --capture=no tests/test_curvature_algebra.py
# pytest -v  tests/test_curvature_algebra.py
###############################################################
import random

import pytest
from cloudmesh.common.util import HEADING

from cloudmesh.hypercomplex.bundle import BundleForm
from cloudmesh.hypercomplex.curvature_algebra import PointwiseState
from cloudmesh.hypercomplex.curvature_algebra import twisted_commutator_sides
from cloudmesh.hypercomplex.curvature_algebra import verify_commutator_cases
from cloudmesh.hypercomplex.curvature_algebra import verify_inner_expansion
from cloudmesh.hypercomplex.curvature_algebra import verify_kahler_commutator
from cloudmesh.hypercomplex.curvature_algebra import verify_symbolic
from cloudmesh.hypercomplex.curvature_algebra import verify_twisted_commutator
from cloudmesh.hypercomplex.positivity import dense_rational_tensor
from cloudmesh.hypercomplex.relation import Relation


def failed(report):
    return [row.record() for row in report.failed()]


@pytest.mark.incremental
class Test_curvature_algebra:

    def setup_class(self):
        self.n = 1

    def test_01_cases(self):
        HEADING()
        for n in (1, 2):
            report = verify_commutator_cases(n)
            assert report.passed, failed(report)

    def test_02_inner_expansion(self):
        HEADING()
        for rank in (1, 2):
            report = verify_inner_expansion(self.n, rank, trials=2, seed=1)
            assert report.passed, failed(report)

    def test_03_kahler(self):
        HEADING()
        report = verify_kahler_commutator(self.n, 1, trials=2, seed=2)
        assert report.passed, failed(report)

    def test_04_twisted(self):
        HEADING()
        for rank in (1, 2):
            report = verify_twisted_commutator(self.n, rank, trials=2, seed=3)
            assert report.passed, failed(report)
            dense = [row for row in report.rows if row.row.startswith("as printed, dense R")]
            assert len(dense) == 2
            assert all(row.expected == Relation(None) for row in dense)
            for row in report.rows:
                if not row.row.startswith("as printed"):
                    assert row.expected == Relation(1), row.row

    def test_05_symbolic(self):
        HEADING()
        report = verify_symbolic(self.n, trials=1, seed=4)
        assert report.passed, failed(report)

    def test_06_dense_sides(self):
        HEADING()
        rng = random.Random(7)
        tensor = dense_rational_tensor(self.n)
        for _ in range(3):
            xi = BundleForm.random(self.n, 1, rng, density=0.6)
            sides = twisted_commutator_sides(PointwiseState(tensor, xi))
            assert len(sides["blocks"]) == 6
            assert len(sides["printed blocks"]) == 8
            assert sides["operator"] == sides["expansion"]
            assert sides["operator"] == sides["block sum"]
            assert sides["operator"] == sides["regrouped"]
