from cloudmesh.hypercomplex.SuiteABC import SuiteABC
from cloudmesh.hypercomplex.normalize import verify_normalize


class Suite(SuiteABC):

    def run(self, job):
        if self.name == "normalize":
            # at least ten random jets
            return verify_normalize(max(job.trials, 10), job.seed)
        else:
            raise ValueError(f"Suite '{self.name}' not yet supported")
