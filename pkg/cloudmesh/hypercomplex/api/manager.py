"""
Runs the jobs of a scenario on a worker pool and assembles the report.

Job i of a scenario with seed s runs with the seed s * 1000003 + i, and
the reports are merged in job order, so the structured report does not
depend on the number of threads. Timings only enter the human summary.
"""
from concurrent.futures import ThreadPoolExecutor

from cloudmesh.common.StopWatch import StopWatch
from cloudmesh.common.console import Console
from cloudmesh.common.debug import VERBOSE
from cloudmesh.common.dotdict import dotdict
from cloudmesh.common.util import banner
from cloudmesh.common.util import path_expand
from cloudmesh.common.util import writefile

from cloudmesh.hypercomplex.Suite import Suite
from cloudmesh.hypercomplex.config import read_flat
from cloudmesh.hypercomplex.normalize import metric_from_values
from cloudmesh.hypercomplex.normalize import normalize_metric_jet
from cloudmesh.hypercomplex.report import header_record
from cloudmesh.hypercomplex.report import records_text
from cloudmesh.hypercomplex.report import rows_table
from cloudmesh.hypercomplex.report import summary_table
from cloudmesh.hypercomplex.suite.positivity.Suite import certificate

SEED_STRIDE = 1000003

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_CONFIG = 2


def derive_seed(seed, index):
    return seed * SEED_STRIDE + index


class Manager(object):

    def __init__(self, scenario):
        """
        :param scenario: Scenario
        :raises ConfigError: if a job does not fit its suite
        """
        self.scenario = scenario
        self.jobs = self.prepare()
        self.reports = []
        self.timings = {}

    def prepare(self):
        """
        builds and checks every job before anything runs

        :return: list of (Suite, job)
        """
        jobs = []
        for index, (name, settings) in enumerate(self.scenario.entries()):
            suite = Suite(name=name)
            job = dotdict(settings)
            job["suite"] = name
            job["index"] = index
            job["seed"] = derive_seed(self.scenario.seed, index)
            suite.check(job)
            jobs.append((suite, job))
        VERBOSE(f"prepared {len(jobs)} jobs")
        return jobs

    @staticmethod
    def label(job):
        return f"{job.index + 1:02d} {job.suite} n={job.n} r={job.rank}"

    def _run(self, suite, job):
        label = self.label(job)
        StopWatch.start(label)
        report = suite.run(job)
        StopWatch.stop(label)
        report.label = label
        return report, StopWatch.get(label)

    def run(self, threads=None):
        """
        runs all jobs

        :param threads: number of workers, the scenario value if None
        :return: list of Reports in job order
        """
        threads = threads or self.scenario.threads
        with ThreadPoolExecutor(max_workers=threads) as executor:
            futures = [executor.submit(self._run, suite, job) for suite, job in self.jobs]
            results = [future.result() for future in futures]
        self.reports = [report for report, _ in results]
        self.timings = {report.label: seconds for report, seconds in results}
        return self.reports

    @property
    def passed(self):
        return all(report.passed for report in self.reports)

    @property
    def status(self):
        return EXIT_OK if self.passed else EXIT_FAILED

    def records(self):
        """the structured report, byte identical for equal scenarios"""
        return records_text(header_record(self.scenario.record()), self.reports)

    def summary(self):
        """the human readable summary with the failing rows"""
        lines = [str(summary_table(self.reports, self.timings))]
        for report in self.reports:
            if not report.passed:
                lines.append(f"failing rows of {report.label}")
                lines.append(str(rows_table(report)))
        return "\n".join(lines)

    def write(self, output=None, kind="text"):
        """
        writes the records to output if given and prints the summary, or
        prints the records when kind is "records" and there is no output

        :param output: file name or None
        :param kind: "text" or "records"
        """
        if output:
            writefile(path_expand(output), self.records())
            Console.ok(f"records written to {output}")
        if kind == "records" and not output:
            print(self.records(), end="")
        else:
            banner("cloudmesh hypercomplex")
            print(self.summary())
        if self.passed:
            Console.ok(f"all {len(self.reports)} suites passed")
        else:
            failed = [report.label for report in self.reports if not report.passed]
            Console.error(f"failing suites: {', '.join(failed)}")


def certify(scenario):
    """
    the vanishing certificate for the curvature of a scenario

    :param scenario: Scenario with n, k and curvature lines
    :return: Certificate
    """
    return certificate(dotdict(scenario.settings))


def normalize(filename):
    """
    normal coordinates for the metric jet in a flat file

    :param filename: the file with variables, order and g[j,k] entries
    :return: Normalization
    """
    return normalize_metric_jet(metric_from_values(read_flat(filename)))
