###############################################################
# pytest -v --capture=no tests/test_manager.py
# pytest -v  tests/test_manager.py
###############################################################
import json

import pytest
from cloudmesh.common.util import HEADING

from cloudmesh.hypercomplex.api.manager import EXIT_FAILED
from cloudmesh.hypercomplex.api.manager import EXIT_OK
from cloudmesh.hypercomplex.api.manager import Manager
from cloudmesh.hypercomplex.api.manager import certify
from cloudmesh.hypercomplex.api.manager import derive_seed
from cloudmesh.hypercomplex.config import Scenario
from cloudmesh.hypercomplex.config import load_defaults
from cloudmesh.hypercomplex.config import parse_flat
from cloudmesh.hypercomplex.error import ConfigError


@pytest.mark.incremental
class Test_manager:

    def setup_class(self):
        self.defaults = load_defaults(user=None)

    def manager(self, text, **kwargs):
        return Manager(Scenario(parse_flat(text), defaults=self.defaults, **kwargs))

    def test_01_seed(self):
        HEADING()
        assert derive_seed(0, 3) == 3
        assert derive_seed(2, 1) == 2 * 1000003 + 1

    def test_02_algebra(self):
        HEADING()
        manager = self.manager("suite = algebra\nn = 1\n")
        reports = manager.run()
        assert len(reports) == 1
        assert len(reports[0].rows) == 6
        assert reports[0].suite == "algebra"
        assert manager.status == EXIT_OK

    def test_03_mutation(self):
        HEADING()
        manager = self.manager("suite = algebra\nmutate = e-i-sign\n")
        manager.run()
        assert manager.status == EXIT_FAILED
        failed = manager.reports[0].failed()
        assert [row.row for row in failed] == ["e_ki_k + i_ke_k = 2"]
        assert str(failed[0].observed) == "c = -1"

    def test_04_records(self):
        HEADING()
        text = "suite = algebra\nsuite = commutator\nsuite = rescale\nmax_n = 2\nseed = 5\n"
        one = self.manager(text)
        one.run(threads=1)
        four = self.manager(text)
        four.run(threads=4)
        assert one.records() == four.records()
        lines = one.records().splitlines()
        header = json.loads(lines[0])
        assert header["record"] == "header"
        assert header["config"]["seed"] == "5"
        assert list(json.loads(lines[1])) == ["suite", "row", "identity", "arena",
                                              "expected", "observed", "passed",
                                              "witness"]
        assert [json.loads(line)["suite"] for line in lines[1:7]] == ["algebra"] * 6

    def test_05_summary(self):
        HEADING()
        manager = self.manager("suite = algebra\nmutate = e-i-sign\n")
        manager.run()
        summary = manager.summary()
        assert "FAILED" in summary
        assert "e_ki_k + i_ke_k = 2" in summary

    def test_06_incompatible(self):
        HEADING()
        for text in ("suite = bundle\nmetric = identity\n",
                     "suite = connection\narena = fourier\nmetric = jet-random\n",
                     "suite = algebra\narena = jet\n",
                     "suite = tensor\n"):
            with pytest.raises(ConfigError):
                self.manager(text)

    def test_07_certify(self):
        HEADING()
        scenario = Scenario(parse_flat("n = 1\nk = 1\ncurvature = 0 1\np = 2\n"),
                            defaults=self.defaults, suites=False)
        result = certify(scenario)
        assert result.passed
        assert [(entry["p"], entry["q"]) for entry in result.fibers] == \
            [(2, q) for q in range(3)]
        assert result.positive_degrees() == [2]
        with pytest.raises(ConfigError):
            certify(Scenario(parse_flat("n = 1\ncurvature = 1 1 1\n"),
                             defaults=self.defaults, suites=False))
