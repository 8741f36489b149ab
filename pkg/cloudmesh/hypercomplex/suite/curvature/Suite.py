from cloudmesh.hypercomplex.SuiteABC import SuiteABC
from cloudmesh.hypercomplex.curvature_algebra import verify_commutator_cases
from cloudmesh.hypercomplex.curvature_algebra import verify_inner_expansion
from cloudmesh.hypercomplex.curvature_algebra import verify_kahler_commutator
from cloudmesh.hypercomplex.curvature_algebra import verify_symbolic
from cloudmesh.hypercomplex.curvature_algebra import verify_twisted_commutator


class Suite(SuiteABC):

    def run(self, job):
        if self.name == "commutator":
            return verify_commutator_cases(job.n)
        elif self.name == "inner":
            return verify_inner_expansion(job.n, job.rank, job.trials, job.seed)
        elif self.name == "kahler-curvature":
            return verify_kahler_commutator(job.n, job.rank, job.trials, job.seed)
        elif self.name == "twisted-curvature":
            return verify_twisted_commutator(job.n, job.rank, job.trials, job.seed)
        elif self.name == "symbolic":
            return verify_symbolic(job.n, job.trials, job.seed)
        else:
            raise ValueError(f"Suite '{self.name}' not yet supported")
