from abc import ABCMeta

from cloudmesh.common.debug import VERBOSE

from cloudmesh.hypercomplex.catalog import JET_METRICS
from cloudmesh.hypercomplex.catalog import entry
from cloudmesh.hypercomplex.error import ConfigError


# noinspection PyUnusedLocal
class SuiteABC(metaclass=ABCMeta):

    def __init__(self, name=None):
        self.spec = entry(name)
        self.name = name
        self.kind = self.spec["group"]

    def check(self, job):
        """
        validates the settings of a job before anything runs

        :param job: the job settings, a dotdict with the scenario keys
        :raises ConfigError: if the arena or the metric does not fit the suite
        """
        arena = job.get("arena")
        if arena and arena not in self.spec["arenas"]:
            raise ConfigError(f"suite '{self.name}' runs in the arena "
                              f"{' or '.join(self.spec['arenas'])}, not '{arena}'")
        metric = job.get("metric") or "default"
        metrics = self.spec["metrics"]
        if metrics and metric != "default":
            if metric not in metrics:
                raise ConfigError(f"suite '{self.name}' needs the metric "
                                  f"{' or '.join(metrics)}, not '{metric}'")
            if arena == "fourier" and metric in JET_METRICS:
                raise ConfigError(f"the metric '{metric}' is a jet metric, "
                                  f"the arena is fourier")
            if arena == "jet" and metric == "exp-weight":
                raise ConfigError("the metric 'exp-weight' needs the fourier arena")
        VERBOSE(f"checked {self.name} n={job.get('n')} metric={metric}")

    def run(self, job):
        """
        runs the suite for one job

        :param job: the job settings
        :return: Report
        """
        raise NotImplementedError
