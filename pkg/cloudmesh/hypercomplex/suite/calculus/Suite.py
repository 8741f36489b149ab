from cloudmesh.hypercomplex.SuiteABC import SuiteABC
from cloudmesh.hypercomplex.calculus import verify_adjoints
from cloudmesh.hypercomplex.calculus import verify_dolbeault_invariants
from cloudmesh.hypercomplex.calculus import verify_hodge_identities
from cloudmesh.hypercomplex.calculus import verify_twisted_table
from cloudmesh.hypercomplex.calculus import weight_name
from cloudmesh.hypercomplex.calculus import weight_polynomial


class Suite(SuiteABC):

    def check(self, job):
        super(Suite, self).check(job)
        if self.name == "adjoint" and job.get("weights"):
            weight_polynomial(job.n, job.weights)

    def run(self, job):
        arguments = (job.n, job.trials, job.seed)
        if self.name == "hodge":
            return verify_hodge_identities(*arguments, order=job.order, degree=job.degree)
        elif self.name == "twisted":
            return verify_twisted_table(*arguments, order=job.order, degree=job.degree)
        elif self.name == "dolbeault":
            return verify_dolbeault_invariants(*arguments, order=job.order,
                                               degree=job.degree)
        elif self.name == "adjoint":
            weights = None
            if job.get("weights"):
                weights = [("φ = 0", None),
                           (weight_name(job.weights), weight_polynomial(job.n, job.weights))]
            return verify_adjoints(*arguments, degree=job.degree, weights=weights)
        else:
            raise ValueError(f"Suite '{self.name}' not yet supported")
