from cloudmesh.common.debug import VERBOSE

from cloudmesh.hypercomplex.SuiteABC import SuiteABC
from cloudmesh.hypercomplex.suite.algebra.Suite import Suite as AlgebraSuite
from cloudmesh.hypercomplex.suite.bundle.Suite import Suite as BundleSuite
from cloudmesh.hypercomplex.suite.calculus.Suite import Suite as CalculusSuite
from cloudmesh.hypercomplex.suite.coordinates.Suite import Suite as CoordinatesSuite
from cloudmesh.hypercomplex.suite.curvature.Suite import Suite as CurvatureSuite
from cloudmesh.hypercomplex.suite.positivity.Suite import Suite as PositivitySuite


class Suite(SuiteABC):

    def __init__(self, name=None):

        super(Suite, self).__init__(name=name)

        if self.kind == "algebra":
            self.suite = AlgebraSuite(name=name)
        elif self.kind == "calculus":
            self.suite = CalculusSuite(name=name)
        elif self.kind == "bundle":
            self.suite = BundleSuite(name=name)
        elif self.kind == "curvature":
            self.suite = CurvatureSuite(name=name)
        elif self.kind == "positivity":
            self.suite = PositivitySuite(name=name)
        elif self.kind == "coordinates":
            self.suite = CoordinatesSuite(name=name)
        else:
            raise ValueError(f"Suite group '{self.kind}' not yet supported")

    def check(self, job):
        self.suite.check(job)

    def run(self, job):
        VERBOSE(f"run {self.name} n={job.n} rank={job.rank} seed={job.seed}")
        report = self.suite.run(job)
        report.suite = self.name
        for row in report.rows:
            row.suite = self.name
        return report
