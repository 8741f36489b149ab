###############################################################
# pytest -v --capture=no tests/test_calculus.py
# pytest -v  tests/test_calculus.py
###############################################################
import pytest
from cloudmesh.common.util import HEADING

from cloudmesh.hypercomplex.calculus import TWISTED_TABLE
from cloudmesh.hypercomplex.calculus import table_rows
from cloudmesh.hypercomplex.calculus import verify_adjoints
from cloudmesh.hypercomplex.calculus import verify_dolbeault_invariants
from cloudmesh.hypercomplex.calculus import verify_hodge_identities
from cloudmesh.hypercomplex.calculus import verify_twisted_table
from cloudmesh.hypercomplex.calculus import weight_family
from cloudmesh.hypercomplex.relation import Relation
from cloudmesh.hypercomplex.scalars import FourierPoly


def failed(report):
    return [row.record() for row in report.failed()]


def stated(report):
    return [row for row in report.rows
            if not row.negated and not row.row.startswith("as printed")]


@pytest.mark.incremental
class Test_calculus:

    def setup_class(self):
        self.n = 1
        self.trials = 2

    def test_01_hodge(self):
        HEADING()
        report = verify_hodge_identities(self.n, trials=self.trials, seed=1)
        assert report.rows
        assert report.passed, failed(report)
        assert all(row.expected == Relation(1) for row in stated(report))

    def test_02_twisted(self):
        HEADING()
        report = verify_twisted_table(self.n, trials=self.trials, seed=2)
        assert report.passed, failed(report)
        assert all(row.expected == Relation(1) for row in stated(report))
        printed = [row for row in report.rows if row.row.startswith("as printed")]
        assert len(printed) == 6
        assert all(row.expected == Relation(-1) for row in printed)

    def test_03_dolbeault(self):
        HEADING()
        report = verify_dolbeault_invariants(self.n, trials=self.trials, seed=3)
        assert report.passed, failed(report)

    def test_04_adjoints_flat(self):
        HEADING()
        report = verify_adjoints(self.n, trials=self.trials, seed=4)
        assert report.passed, failed(report)

    def test_05_adjoints_weighted(self):
        HEADING()
        phi = FourierPoly.cosine(2 * self.n, (1, 0, 0, 0))
        report = verify_adjoints(self.n, trials=self.trials, seed=5,
                                 weights=[("cos x1", phi)])
        assert report.passed, failed(report)

    def test_06_deterministic(self):
        HEADING()
        first = verify_hodge_identities(self.n, trials=1, seed=9).records()
        second = verify_hodge_identities(self.n, trials=1, seed=9).records()
        assert first == second

    def test_07_default_weights(self):
        HEADING()
        family = weight_family(self.n)
        names = [name for name, _ in family]
        assert names == ["φ = 0",
                         "φ = cos(1 0 0 0)",
                         "φ = cos(1 0 0 0) + 1/2 cos(0 0 1 0)"]
        assert family[0][1] is None
        report = verify_adjoints(self.n, trials=1, seed=6)
        assert report.passed, failed(report)
        for name in names:
            assert len([row for row in report.rows if row.row.endswith(name)]) == 6

    def test_08_table_rows(self):
        HEADING()
        rows = table_rows(TWISTED_TABLE, lambda lam, op, c, adj: Relation(1), "test")
        main = [row for row in rows if not row.row.startswith("as printed")]
        printed = [row for row in rows if row.row.startswith("as printed")]
        assert len(main) == len(TWISTED_TABLE)
        assert all(row.expected == Relation(1) for row in main)
        assert len(printed) == 3
        assert all(row.expected == Relation(-1) for row in printed)
