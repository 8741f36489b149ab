###############################################################
# pytest -v --capture=no tests/test_hyper.py
# pytest -v  tests/test_hyper.py
###############################################################
import json
import os

import pytest
from cloudmesh.common.util import HEADING
from cloudmesh.common.util import readfile
from cloudmesh.common.util import writefile

from cloudmesh.hypercomplex.api.manager import EXIT_CONFIG
from cloudmesh.hypercomplex.api.manager import EXIT_FAILED
from cloudmesh.hypercomplex.api.manager import EXIT_OK
from cloudmesh.hypercomplex.command.hyper import main
from cloudmesh.hypercomplex.command.hyper import report_status


@pytest.mark.incremental
class Test_hyper:

    def setup_class(self):
        self.directory = os.path.join(os.path.dirname(__file__), "tmp-hyper")
        os.makedirs(self.directory, exist_ok=True)

    def path(self, name):
        return os.path.join(self.directory, name)

    def test_01_list_suites(self):
        HEADING()
        output = self.path("suites.jsonl")
        assert main(["list-suites", "--format=records", f"--output={output}"]) == 0
        suites = [json.loads(line) for line in readfile(output).splitlines()]
        assert len(suites) >= 14
        assert suites[0]["name"] == "algebra"

    def test_02_run(self):
        HEADING()
        output = self.path("algebra.jsonl")
        assert main(["run", "algebra", "--seed=1", f"--output={output}"]) == 0
        lines = readfile(output).splitlines()
        assert len(lines) == 7
        assert all(json.loads(line)["passed"] for line in lines[1:])

    def test_03_failing_scenario(self):
        HEADING()
        config = self.path("mutated.txt")
        writefile(config, "suite = algebra\nmutate = e-i-sign\n")
        assert main(["run", f"--config={config}"]) == 1

    def test_04_bad_scenario(self):
        HEADING()
        config = self.path("broken.txt")
        writefile(config, "suite = algebra\nthis line has no equals sign\n")
        assert main(["run", f"--config={config}"]) == 2
        assert main(["run", "tensor"]) == 2
        assert main(["run", f"--config={self.path('missing.txt')}"]) == 2
        assert main(["frobnicate"]) == 2

    def test_05_certify(self):
        HEADING()
        config = self.path("line.txt")
        writefile(config, "n = 1\nk = 1\ncurvature = 0 1\np = 2\n")
        output = self.path("certificate.json")
        assert main(["certify", f"--config={config}", "--format=records",
                     f"--output={output}"]) == 0
        record = json.loads(readfile(output))
        assert record["record"] == "certificate"
        assert record["passed"] is True

    def test_06_normalize(self):
        HEADING()
        metric = self.path("metric.txt")
        writefile(metric, "variables = 1\norder = 2\ng[1,1] = 1 + z1 + zb1\n")
        output = self.path("normal.json")
        assert main(["normalize", metric, "--format=records", f"--output={output}"]) == 0
        record = json.loads(readfile(output))
        assert record["normal"] is True
        assert record["b"] == [{"b": "111", "value": "-1"}]

    def test_07_report_status(self):
        HEADING()
        for status in (EXIT_OK, EXIT_FAILED, EXIT_CONFIG):
            assert report_status(status) == status
