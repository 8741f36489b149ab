from cloudmesh.hypercomplex.SuiteABC import SuiteABC
from cloudmesh.hypercomplex.error import ConfigError
from cloudmesh.hypercomplex.positivity import diagonal_from_values
from cloudmesh.hypercomplex.positivity import vanishing_certificate
from cloudmesh.hypercomplex.positivity import verify_certificates
from cloudmesh.hypercomplex.positivity import verify_positivity
from cloudmesh.hypercomplex.positivity import verify_rescale
from cloudmesh.hypercomplex.report import Report
from cloudmesh.hypercomplex.report import Row


def degrees(job):
    """the (p, q) fibers of a job, every bidegree unless p or q are given"""
    top = 2 * job.n
    ps = job.get("p") or list(range(top + 1))
    qs = job.get("q") or list(range(top + 1))
    for value in ps + qs:
        if not 0 <= value <= top:
            raise ConfigError(f"degree {value} outside 0..{top}")
    return [(p, q) for p in ps for q in qs]


def curvature_tensor(job):
    """
    the diagonal curvature of the curvature lines, one line of 2n
    eigenvalues per frame vector, the identity when none are given
    """
    rows = job.get("curvature") or [[1] * (2 * job.n)]
    for row in rows:
        if len(row) != 2 * job.n:
            raise ConfigError(f"a curvature line needs {2 * job.n} eigenvalues, "
                              f"got {len(row)}")
    return diagonal_from_values(job.n, rows)


def certificate(job):
    """
    the vanishing certificate for the curvature given in the job

    :return: Certificate
    """
    return vanishing_certificate(curvature_tensor(job), job.k, kappas=job.kappas,
                                 degrees=degrees(job), cap=job.cap)


class Suite(SuiteABC):

    def check(self, job):
        super(Suite, self).check(job)
        if self.name == "certificate" and job.get("curvature"):
            curvature_tensor(job)
            degrees(job)

    def run(self, job):
        if self.name == "positivity":
            return verify_positivity(job.n, job.samples, job.seed)
        elif self.name == "rescale":
            return verify_rescale(job.max_n)
        elif self.name == "certificate":
            if not job.get("curvature"):
                return verify_certificates(job.n, job.cap)
            report = Report(self.name)
            result = certificate(job)
            report.certificate(result)
            text = f"certificate claims, k = {job.k}"
            report.add(Row(row=text, identity=text,
                           arena=f"scalar n={job.n} r={result.rank}",
                           expected=True, observed=result.passed))
            return report
        else:
            raise ValueError(f"Suite '{self.name}' not yet supported")
