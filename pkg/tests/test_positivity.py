###############################################################
# pytest -v --capture=no tests/test_positivity.py
# pytest -v  tests/test_positivity.py
###############################################################
from fractions import Fraction

import pytest
from cloudmesh.common.util import HEADING

from cloudmesh.hypercomplex.bundle import CurvatureTensor
from cloudmesh.hypercomplex.error import ConfigError
from cloudmesh.hypercomplex.error import DimensionOverflow
from cloudmesh.hypercomplex.error import InvalidQuery
from cloudmesh.hypercomplex.error import NotHermitian
from cloudmesh.hypercomplex.error import PositivityPreconditionFailed
from cloudmesh.hypercomplex.positivity import PositivityQuery
from cloudmesh.hypercomplex.positivity import check_ks_positive
from cloudmesh.hypercomplex.positivity import dense_irrational_tensor
from cloudmesh.hypercomplex.positivity import dense_rational_tensor
from cloudmesh.hypercomplex.positivity import diagonal_from_values
from cloudmesh.hypercomplex.positivity import fiber_matrix
from cloudmesh.hypercomplex.positivity import griffiths_witness
from cloudmesh.hypercomplex.positivity import eigenframe
from cloudmesh.hypercomplex.positivity import hermitian_decomposition
from cloudmesh.hypercomplex.positivity import joint_eigenframe
from cloudmesh.hypercomplex.positivity import limit_bound
from cloudmesh.hypercomplex.positivity import rescale_eigenvalues
from cloudmesh.hypercomplex.positivity import rescaled_bound
from cloudmesh.hypercomplex.positivity import vanishing_certificate
from cloudmesh.hypercomplex.positivity import vanishing_chain
from cloudmesh.hypercomplex.positivity import verify_certificates
from cloudmesh.hypercomplex.positivity import verify_positivity
from cloudmesh.hypercomplex.positivity import verify_rescale
from cloudmesh.hypercomplex.scalars import I
from cloudmesh.hypercomplex.scalars import ZERO


def failed(report):
    return [row.record() for row in report.failed()]


@pytest.mark.incremental
class Test_positivity:

    def test_01_decomposition(self):
        HEADING()
        d = hermitian_decomposition([[2, 0], [0, 3]])
        assert d.positive_definite
        assert d.verdict == "positive-definite"
        assert d.witness is None

        d = hermitian_decomposition([[2, I], [-I, 2]])
        assert d.positive_definite

        d = hermitian_decomposition([[1, 1], [1, 1]])
        assert d.verdict == "positive-semidefinite"
        assert d.kernel_dimension == 1
        assert d.witness_value == ZERO

    def test_02_witness(self):
        HEADING()
        for matrix in ([[1, 0], [0, -1]], [[0, 1], [1, 0]], [[1, 2], [2, 1]]):
            d = hermitian_decomposition(matrix)
            assert d.indefinite
            assert d.witness_value < 0
            assert d.kernel_dimension is None
        with pytest.raises(NotHermitian):
            hermitian_decomposition([[1, I], [I, 1]])

    def test_03_line(self):
        HEADING()
        degenerate = CurvatureTensor.from_line([[1, 0], [0, 0]])
        query = PositivityQuery(degenerate, 1, 1, "exact-line")
        assert str(check_ks_positive(query)) == "certified"
        query = PositivityQuery(degenerate, 0, 1, "exact-line")
        assert str(check_ks_positive(query)) == "not-positive"

    def test_04_griffiths_witness(self):
        HEADING()
        witness = griffiths_witness()
        verdict = check_ks_positive(PositivityQuery(witness, 0, 2, "nakano-exact"))
        assert str(verdict) == "not-positive"
        assert verdict.witness is not None
        verdict = check_ks_positive(PositivityQuery(witness, 0, 1, "griffiths-sampled"),
                                    samples=6, seed=1)
        assert str(verdict) == "no-counterexample-found(6)"
        assert not verdict.certified

    def test_05_invalid_queries(self):
        HEADING()
        identity = CurvatureTensor.identity(1)
        with pytest.raises(InvalidQuery):
            PositivityQuery(identity, 0, 1, "bogus")
        with pytest.raises(InvalidQuery):
            PositivityQuery(identity, 0, 3)
        with pytest.raises(InvalidQuery):
            PositivityQuery(identity, -1, 1)
        with pytest.raises(InvalidQuery):
            PositivityQuery(CurvatureTensor.identity(1, 2), 0, 1, "exact-line")

    def test_06_rescale(self):
        HEADING()
        assert rescale_eigenvalues([1, 0], [1, 1], Fraction(1, 2)) == [Fraction(2, 3), 0]
        with pytest.raises(ConfigError):
            rescale_eigenvalues([1], [1], 0)
        assert rescaled_bound([Fraction(1, 2), 1, 0], 2) == Fraction(-1, 2)
        assert limit_bound(2, 3, 1) == 1
        chain = vanishing_chain(2, 1, 3)
        assert chain == [1, 1, 1, 1]

    def test_07_fiber_guard(self):
        HEADING()
        with pytest.raises(DimensionOverflow):
            fiber_matrix(CurvatureTensor.identity(1), 1, 1, cap=3)

    def test_08_identity_certificate(self):
        HEADING()
        for n, expected in ((1, [2]), (2, [3, 4])):
            tensor = diagonal_from_values(n, [[1] * (2 * n)])
            degrees = [(p, 0) for p in range(2 * n + 1)]
            certificate = vanishing_certificate(tensor, 0, degrees=degrees)
            assert certificate.positive_degrees() == expected
            assert certificate.passed
            record = certificate.record()
            assert record["passed"] is True
            assert len(record["fibers"]) == 2 * n + 1

    def test_09_deficient_certificate(self):
        HEADING()
        tensor = diagonal_from_values(1, [[0, 1]])
        with pytest.raises(PositivityPreconditionFailed):
            vanishing_certificate(tensor, 0)
        certificate = vanishing_certificate(tensor, 1, degrees=[(p, 0) for p in range(3)])
        assert certificate.positive_degrees() == [2]
        assert certificate.passed
        with pytest.raises(PositivityPreconditionFailed):
            vanishing_certificate(diagonal_from_values(1, [[0, 0]]), 2)

    def test_10_reports(self):
        HEADING()
        for report in (verify_positivity(1, samples=4, seed=2),
                       verify_rescale(3),
                       verify_certificates(1)):
            assert report.passed, failed(report)

    def test_11_dense_exact_certificate(self):
        HEADING()
        degrees = [(p, 0) for p in range(3)]
        certificate = vanishing_certificate(dense_rational_tensor(1), 0, degrees=degrees)
        frame = certificate.frames[0]
        assert frame.path == "exact"
        assert frame.verified is True
        assert sorted(frame.lower[0]) == [1, 3]
        assert certificate.positive_degrees() == [2]
        assert certificate.passed
        record = certificate.record()
        assert record["points"] == 1
        assert record["eigenframes"][0]["path"] == "exact"

    def test_12_interval_certificate(self):
        HEADING()
        frame = eigenframe(dense_irrational_tensor(1))
        assert frame.path == "interval"
        assert not frame.exact
        assert frame.radius <= Fraction(1, 2 ** 40)
        assert all(lo < hi for lo, hi in zip(frame.lower[0], frame.upper[0]))
        assert Fraction(381, 1000) < frame.lower[0][0] < frame.upper[0][0] < Fraction(382, 1000)
        assert Fraction(2618, 1000) < frame.lower[0][1] < frame.upper[0][1] < Fraction(2619, 1000)
        certificate = vanishing_certificate(dense_irrational_tensor(1), 0,
                                            degrees=[(p, 0) for p in range(3)])
        assert certificate.fiber(2, 0)["verdict"] == "positive-definite"
        assert certificate.passed
        assert "radius" in certificate.record()["eigenframes"][0]

    def test_13_curvature_field(self):
        HEADING()
        field = [diagonal_from_values(1, [[1, 1]]), dense_rational_tensor(1),
                 dense_irrational_tensor(1)]
        certificate = vanishing_certificate(field, 0, degrees=[(p, 0) for p in range(3)])
        assert certificate.points == 3
        assert [frame.path for frame in certificate.frames] == \
            ["diagonal", "exact", "interval"]
        assert certificate.fiber(2, 0)["verdict"] == "positive-definite"
        assert certificate.passed
        with pytest.raises(PositivityPreconditionFailed):
            vanishing_certificate([], 0)
        with pytest.raises(PositivityPreconditionFailed):
            vanishing_certificate([dense_rational_tensor(1), dense_rational_tensor(2)], 0)

    def test_14_joint_eigenframe_rank(self):
        HEADING()
        with pytest.raises(PositivityPreconditionFailed):
            joint_eigenframe(CurvatureTensor.identity(1, 2))
