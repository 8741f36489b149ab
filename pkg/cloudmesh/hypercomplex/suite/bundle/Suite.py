import random

from cloudmesh.common.debug import VERBOSE

from cloudmesh.hypercomplex.SuiteABC import SuiteABC
from cloudmesh.hypercomplex.bundle import ExpWeight
from cloudmesh.hypercomplex.bundle import JetMetric
from cloudmesh.hypercomplex.bundle import verify_bundle_tables
from cloudmesh.hypercomplex.bundle import verify_connection
from cloudmesh.hypercomplex.bundle import verify_curvature
from cloudmesh.hypercomplex.calculus import default_weights
from cloudmesh.hypercomplex.calculus import weight_name
from cloudmesh.hypercomplex.calculus import weight_polynomial
from cloudmesh.hypercomplex.error import ConfigError
from cloudmesh.hypercomplex.error import HypercomplexError
from cloudmesh.hypercomplex.normalize import jet_from_text
from cloudmesh.hypercomplex.report import Report


def weights(job):
    """:return: list of (name, FourierPoly) for the job"""
    groups = [job.weights] if job.get("weights") else default_weights(job.n)
    return [(weight_name(terms), weight_polynomial(job.n, terms)) for terms in groups]


def jet_matrix(job):
    """
    the Hermitian matrix of the h[a,b] entries, a missing entry below the
    diagonal is the conjugate of its mirror, other missing entries are zero
    """
    nvars = 2 * job.n
    matrix = [[None] * job.rank for _ in range(job.rank)]
    for key, text in job.entries.items():
        try:
            a, b = [int(x) - 1 for x in key[2:-1].split(",")]
        except ValueError:
            raise ConfigError(f"malformed entry name '{key}'")
        if not (0 <= a < job.rank and 0 <= b < job.rank):
            raise ConfigError(f"entry '{key}' outside rank {job.rank}")
        matrix[a][b] = jet_from_text(text, nvars, job.order)
    for a in range(job.rank):
        for b in range(job.rank):
            if matrix[a][b] is None:
                if b < a and matrix[b][a] is not None:
                    matrix[a][b] = matrix[b][a].conj()
                else:
                    matrix[a][b] = jet_from_text("0", nvars, job.order)
    return JetMetric(job.n, matrix)


def metrics(job):
    """
    the metrics a connection or curvature job runs on

    :return: list of HermitianMetric
    """
    metric = job.get("metric") or "default"
    if metric == "default":
        metric = "exp-weight" if job.get("arena") == "fourier" else "jet-random"
    if metric == "identity":
        return [JetMetric.identity(job.n, job.rank, job.order)]
    elif metric == "jet-random":
        rng = random.Random(job.seed)
        return [JetMetric.random(job.n, job.rank, rng, job.order)
                for _ in range(job.trials)]
    elif metric == "jet-matrix":
        return [jet_matrix(job)]
    elif metric == "exp-weight":
        if job.rank != 1:
            raise ConfigError("an exp-weight metric is a line bundle metric, rank 1")
        return [ExpWeight(job.n, phi) for _, phi in weights(job)]
    else:
        raise ValueError(f"metric '{metric}' not yet supported")


class Suite(SuiteABC):

    def check(self, job):
        super(Suite, self).check(job)
        try:
            if self.name == "bundle":
                if job.rank != 1:
                    raise ConfigError("the bundle tables need a line bundle, rank 1")
                weights(job)
            else:
                metrics(job)
        except ConfigError:
            raise
        except HypercomplexError as e:
            raise ConfigError(f"suite '{self.name}': {e}")

    def run(self, job):
        report = Report(self.name)
        if self.name == "bundle":
            for name, phi in weights(job):
                VERBOSE(f"bundle tables for {name}")
                part = verify_bundle_tables(ExpWeight(job.n, phi), job.trials, job.seed,
                                            job.degree)
                for row in part.rows:
                    row.arena = f"{row.arena} {name}"
                report.extend(part)
            return report
        for index, h in enumerate(metrics(job)):
            if self.name == "connection":
                part = verify_connection(h)
            elif self.name == "curvature":
                part = verify_curvature(h, job.trials, job.seed + index)
            else:
                raise ValueError(f"Suite '{self.name}' not yet supported")
            for row in part.rows:
                row.arena = f"{row.arena} metric {index + 1}"
            report.extend(part)
        return report
