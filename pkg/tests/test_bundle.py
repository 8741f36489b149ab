###############################################################
# pytest -v --capture=no tests/test_bundle.py
# pytest -v  tests/test_bundle.py
###############################################################
import random

import pytest
from cloudmesh.common.util import HEADING

from cloudmesh.hypercomplex.bundle import CurvatureTensor
from cloudmesh.hypercomplex.bundle import ExpWeight
from cloudmesh.hypercomplex.bundle import JetMetric
from cloudmesh.hypercomplex.bundle import verify_bundle_tables
from cloudmesh.hypercomplex.bundle import verify_connection
from cloudmesh.hypercomplex.bundle import verify_curvature
from cloudmesh.hypercomplex.error import AdjointUnavailable
from cloudmesh.hypercomplex.error import InvalidWeight
from cloudmesh.hypercomplex.error import NotHermitian
from cloudmesh.hypercomplex.relation import Relation
from cloudmesh.hypercomplex.scalars import HALF
from cloudmesh.hypercomplex.scalars import FourierPoly
from cloudmesh.hypercomplex.scalars import Jet


def failed(report):
    return [row.record() for row in report.failed()]


def observed(report, text):
    found = [row.observed for row in report.rows if row.row == text]
    assert len(found) == 1, text
    return found[0]


LAPLACIAN_ROWS = [
    "△'' − △'_J = [e(Θ_J), Λ_J]",
    "△'' − △'_K = −[e(Θ_K), Λ_K]",
    "△'' − △'_K = [e(Θ_J), Λ_J]",
    "△'' − △'_φ̄ = [e(Θ_φ̄), Λ_φ]",
    "△'' − △'_φ̄ = [e(Θ_J), Λ_J]",
    "[e(Θ_φ̄), Λ_φ] = [e(Θ_J), Λ_J]",
    "[e(Θ_φ̄), Σī_kī_{k+n}] = 2[e(Θ_J), Λ_J]",
]

PHI_ROWS = [
    "D''_φ̄ = 0",
    "[Λ_φ, D'] = δ''_φ̄",
    "[Λ_φ, D'_φ̄] = −δ''",
    "[Λ_φ, D''] = δ'_φ̄",
    "[Λ_φ, D''_φ̄] = 0",
]

COMMUTATOR_ROWS = [
    "[Λ_I, D'] = iδ''",
    "[Λ_J, D'] = δ''_J",
    "[Λ_K, D'] = −δ''_K",
    "[Λ_J, D'_J] = −δ''",
    "[Λ_I, D'_J] = −iδ''_J",
]


@pytest.mark.incremental
class Test_bundle:

    def setup_class(self):
        self.n = 1
        self.phi = FourierPoly.cosine(2, (1, 0, 0, 0)) + \
            FourierPoly.cosine(2, (0, 0, 1, 0), "1/2")

    def test_01_metrics(self):
        HEADING()
        one = Jet.constant(2, 2)
        z = Jet.variable(2, 2, 0)
        with pytest.raises(NotHermitian):
            JetMetric(1, [[one, z], [Jet(2, 2), one]])
        with pytest.raises(NotHermitian):
            JetMetric(1, [[Jet.constant(2, 2, -1)]])
        with pytest.raises(InvalidWeight):
            ExpWeight(1, FourierPoly.mode(2, (1, 0, 0, 0)))
        assert ExpWeight(1, FourierPoly.constant(2, 3)).is_flat()
        assert not ExpWeight(1, self.phi).is_flat()
        assert CurvatureTensor.identity(1, 2).is_hermitian()

    def test_02_connection_jet(self):
        HEADING()
        h = JetMetric.random(self.n, 2, random.Random(1), order=3)
        report = verify_connection(h)
        assert report.passed, failed(report)

    def test_03_connection_weight(self):
        HEADING()
        report = verify_connection(ExpWeight(self.n, self.phi))
        assert report.passed, failed(report)

    def test_04_curvature_jet(self):
        HEADING()
        h = JetMetric.random(self.n, 1, random.Random(2), order=3)
        report = verify_curvature(h, trials=1, seed=2)
        assert report.passed, failed(report)

    def test_05_curvature_weight(self):
        HEADING()
        report = verify_curvature(ExpWeight(self.n, self.phi), trials=1, seed=3)
        assert report.passed, failed(report)
        assert observed(report, "∂̄(Jϑ) = Θ_J") == Relation(1)
        assert observed(report, "as printed: ∂̄(J⁻¹ϑ) = Θ_J") == Relation(-1)
        assert observed(report, "Θ(det E) = tr Θ = −∂∂̄ log det h") == Relation(1)

    def test_06_tables_curved(self):
        HEADING()
        report = verify_bundle_tables(ExpWeight(self.n, self.phi), trials=1, seed=4)
        assert report.passed, failed(report)
        assert "curved" in report.rows[0].arena
        for text in LAPLACIAN_ROWS + PHI_ROWS + COMMUTATOR_ROWS:
            assert observed(report, text) == Relation(1), text
        assert observed(report, "as printed: [e(Θ_φ̄), Λ_φ] = 2[e(Θ_J), Λ_J]") == \
            Relation(HALF)
        assert observed(report, "as printed: [Λ_φ, D''_φ̄] = −δ'") == Relation(0)
        assert observed(report, "as printed: [Λ_I, D'_J] = iδ''_J") == Relation(-1)
        for row in report.rows:
            if not row.row.startswith("as printed"):
                assert row.expected == Relation(1), row.row

    def test_07_tables_flat(self):
        HEADING()
        report = verify_bundle_tables(ExpWeight(self.n, FourierPoly.constant(2, 0)),
                                      trials=1, seed=5)
        assert report.passed, failed(report)
        assert "flat" in report.rows[0].arena
        for text in LAPLACIAN_ROWS + PHI_ROWS + COMMUTATOR_ROWS:
            assert observed(report, text) == Relation(1), text
        assert not [row for row in report.rows if row.negated]

    def test_08_tables_need_weight(self):
        HEADING()
        with pytest.raises(AdjointUnavailable):
            verify_bundle_tables(JetMetric.identity(self.n))
